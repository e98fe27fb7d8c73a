#include "pointed/finite_lab.hpp"
#include "pointed/error.hpp"
#include "pointed/scalar.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <deque>
#include <regex>
#include <set>

namespace pointed::lab {

namespace {

std::vector<std::size_t> digits(std::size_t x, std::size_t p, std::size_t len)
{
	std::vector<std::size_t> out(len);
	for (auto &d : out) {
		d = x % p;
		x /= p;
	}
	return out;
}

std::size_t from_digits(const std::vector<std::size_t> &d, std::size_t p)
{
	std::size_t x = 0;
	for (auto it = d.rbegin(); it != d.rend(); ++it)
		x = x * p + *it;
	return x;
}

std::size_t power(std::size_t base, std::size_t exp)
{
	std::size_t out = 1;
	for (std::size_t i = 0; i < exp; ++i) {
		out *= base;
		if (out > max_ring_size)
			throw InvalidArgument(fmt::format("ring would exceed {} elements", max_ring_size));
	}
	return out;
}

void require_prime(std::size_t p)
{
	if (!is_prime(p))
		throw InvalidArgument(fmt::format("{} is not prime", p));
}

std::string poly_label(const std::vector<std::size_t> &c, char var)
{
	std::string out;
	for (std::size_t i = 0; i < c.size(); ++i) {
		if (c[i] == 0)
			continue;
		if (!out.empty())
			out += '+';
		std::string mono = i == 0 ? "" : i == 1 ? std::string(1, var) : fmt::format("{}^{}", var, i);
		if (mono.empty())
			out += std::to_string(c[i]);
		else if (c[i] == 1)
			out += mono;
		else
			out += fmt::format("{}{}", c[i], mono);
	}
	return out.empty() ? "0" : out;
}

std::string matrix_label(const std::vector<std::vector<std::size_t>> &m)
{
	std::vector<std::string> rows;
	for (const auto &row : m)
		rows.push_back(fmt::format("[{}]", fmt::join(row, ",")));
	return fmt::format("[{}]", fmt::join(rows, ","));
}

using Mat = std::vector<std::vector<std::size_t>>;

Mat mat_mul(const Mat &a, const Mat &b, std::size_t p)
{
	std::size_t k = a.size();
	Mat c(k, std::vector<std::size_t>(k, 0));
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t l = 0; l < k; ++l)
			for (std::size_t j = 0; j < k; ++j)
				c[i][j] = (c[i][j] + a[i][l] * b[l][j]) % p;
	return c;
}

// Ring of k x k matrices whose entries outside `shape` are zero.
RingHandle matrix_family(std::string name, std::size_t p, std::size_t k,
                         const std::vector<std::pair<std::size_t, std::size_t>> &shape)
{
	require_prime(p);
	if (k == 0)
		throw InvalidArgument("matrix size must be positive");
	std::size_t n = power(p, shape.size());
	auto decode = [&](Elem x) {
		Mat m(k, std::vector<std::size_t>(k, 0));
		auto d = digits(x, p, shape.size());
		for (std::size_t s = 0; s < shape.size(); ++s)
			m[shape[s].first][shape[s].second] = d[s];
		return m;
	};
	auto encode = [&](const Mat &m) {
		std::vector<std::size_t> d;
		for (auto [i, j] : shape)
			d.push_back(m[i][j]);
		return Elem(from_digits(d, p));
	};
	std::vector<std::string> labels;
	for (std::size_t x = 0; x < n; ++x)
		labels.push_back(matrix_label(decode(Elem(x))));
	Mat id(k, std::vector<std::size_t>(k, 0));
	for (std::size_t i = 0; i < k; ++i)
		id[i][i] = 1 % p;
	return tabulate(
	    std::move(name), std::move(labels),
	    [&](Elem a, Elem b) {
		    Mat x = decode(a), y = decode(b);
		    for (std::size_t i = 0; i < k; ++i)
			    for (std::size_t j = 0; j < k; ++j)
				    x[i][j] = (x[i][j] + y[i][j]) % p;
		    return encode(x);
	    },
	    [&](Elem a, Elem b) { return encode(mat_mul(decode(a), decode(b), p)); }, 0, encode(id));
}

// Bit-mask scan of every subset, for rings with at most 16 elements.
std::size_t enumerate_maximal_one_sided(const FiniteRing &r, Side side)
{
	const std::size_t n = r.size();
	std::vector<std::uint32_t> orbit(n, 0);
	for (Elem a = 0; a < n; ++a)
		for (Elem x = 0; x < n; ++x)
			orbit[a] |= 1u << (side == Side::Left ? r.mul(x, a) : r.mul(a, x));

	std::vector<std::uint32_t> proper;
	const std::uint32_t zero_bit = 1u << r.zero(), one_bit = 1u << r.one();
	for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
		if (!(mask & zero_bit) || (mask & one_bit))
			continue;
		bool ok = true;
		for (Elem a = 0; a < n && ok; ++a) {
			if (!(mask >> a & 1u))
				continue;
			if ((orbit[a] & mask) != orbit[a])
				ok = false;
			for (Elem b = 0; b < n && ok; ++b)
				if ((mask >> b & 1u) && !(mask >> r.add(a, b) & 1u))
					ok = false;
		}
		if (ok)
			proper.push_back(mask);
	}
	std::size_t maximal = 0;
	for (auto m : proper) {
		bool dominated = std::any_of(proper.begin(), proper.end(), [&](std::uint32_t o) {
			return o != m && (o & m) == m;
		});
		maximal += dominated ? 0 : 1;
	}
	return maximal;
}

} // namespace

FiniteRing::FiniteRing(std::string name, std::vector<std::string> labels, std::vector<Elem> add,
                       std::vector<Elem> mul, Elem zero, Elem one)
    : name_(std::move(name)), labels_(std::move(labels)), add_(std::move(add)),
      mul_(std::move(mul)), neg_(labels_.size()), zero_(zero), one_(one)
{
	const std::size_t n = labels_.size();
	if (n == 0 || n > max_ring_size)
		throw InvalidArgument(fmt::format("ring size must be in [1, {}]", max_ring_size));
	if (add_.size() != n * n || mul_.size() != n * n)
		throw InvalidArgument("table size does not match element count");
	if (zero_ >= n || one_ >= n)
		throw InvalidArgument("zero or one out of range");
	if (zero_ == one_)
		throw InvalidArgument("the zero ring is excluded");
	for (Elem v : add_)
		if (v >= n)
			throw InvalidArgument("addition table entry out of range");
	for (Elem v : mul_)
		if (v >= n)
			throw InvalidArgument("multiplication table entry out of range");

	auto fail = [&](const char *axiom) {
		throw InvalidArgument(fmt::format("{}: {} fails", name_, axiom));
	};
	for (Elem a = 0; a < n; ++a) {
		if (this->add(a, zero_) != a || this->add(zero_, a) != a)
			fail("additive identity");
		if (this->mul(a, one_) != a || this->mul(one_, a) != a)
			fail("multiplicative identity");
		bool found = false;
		for (Elem b = 0; b < n; ++b)
			if (this->add(a, b) == zero_) {
				neg_[a] = b;
				found = true;
				break;
			}
		if (!found)
			fail("additive inverse");
		for (Elem b = 0; b < n; ++b) {
			if (this->add(a, b) != this->add(b, a))
				fail("commutativity of addition");
			for (Elem c = 0; c < n; ++c) {
				if (this->add(this->add(a, b), c) != this->add(a, this->add(b, c)))
					fail("associativity of addition");
				if (this->mul(this->mul(a, b), c) != this->mul(a, this->mul(b, c)))
					fail("associativity of multiplication");
				if (this->mul(a, this->add(b, c)) != this->add(this->mul(a, b), this->mul(a, c)))
					fail("left distributivity");
				if (this->mul(this->add(a, b), c) != this->add(this->mul(a, c), this->mul(b, c)))
					fail("right distributivity");
			}
		}
	}
}

std::optional<Elem> FiniteRing::find(std::string_view label) const
{
	auto it = std::find(labels_.begin(), labels_.end(), label);
	if (it == labels_.end())
		return std::nullopt;
	return Elem(it - labels_.begin());
}

std::vector<std::string> FiniteRing::labels_of(const Subset &s) const
{
	std::vector<std::string> out;
	for (std::size_t x = 0; x < s.size(); ++x)
		if (s[x])
			out.push_back(labels_[x]);
	return out;
}

RingHandle tabulate(std::string name, std::vector<std::string> labels,
                    const std::function<Elem(Elem, Elem)> &add,
                    const std::function<Elem(Elem, Elem)> &mul, Elem zero, Elem one)
{
	const std::size_t n = labels.size();
	if (n > max_ring_size)
		throw InvalidArgument(fmt::format("ring would exceed {} elements", max_ring_size));
	std::vector<Elem> at(n * n), mt(n * n);
	for (Elem a = 0; a < n; ++a)
		for (Elem b = 0; b < n; ++b) {
			at[a * n + b] = add(a, b);
			mt[a * n + b] = mul(a, b);
		}
	return std::make_shared<const FiniteRing>(std::move(name), std::move(labels), std::move(at),
	                                          std::move(mt), zero, one);
}

RingHandle integers_mod(std::size_t n)
{
	if (n < 2 || n > max_ring_size)
		throw InvalidArgument(fmt::format("modulus must be in [2, {}]", max_ring_size));
	std::vector<std::string> labels;
	for (std::size_t x = 0; x < n; ++x)
		labels.push_back(std::to_string(x));
	return tabulate(
	    fmt::format("Z/{}", n), std::move(labels), [n](Elem a, Elem b) { return Elem((a + b) % n); },
	    [n](Elem a, Elem b) { return Elem((std::size_t(a) * b) % n); }, 0, 1);
}

RingHandle prime_field(std::size_t p)
{
	require_prime(p);
	if (p > max_ring_size)
		throw InvalidArgument(fmt::format("ring would exceed {} elements", max_ring_size));
	auto r = integers_mod(p);
	std::vector<std::string> labels;
	std::vector<Elem> add, mul;
	for (Elem a = 0; a < p; ++a) {
		labels.push_back(r->label(a));
		for (Elem b = 0; b < p; ++b) {
			add.push_back(r->add(a, b));
			mul.push_back(r->mul(a, b));
		}
	}
	return std::make_shared<const FiniteRing>(fmt::format("F{}", p), std::move(labels),
	                                          std::move(add), std::move(mul), 0, 1);
}

RingHandle matrix_ring(std::size_t p, std::size_t k)
{
	std::vector<std::pair<std::size_t, std::size_t>> shape;
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = 0; j < k; ++j)
			shape.emplace_back(i, j);
	return matrix_family(fmt::format("M{}(F{})", k, p), p, k, shape);
}

RingHandle upper_triangular(std::size_t p, std::size_t k)
{
	std::vector<std::pair<std::size_t, std::size_t>> shape;
	for (std::size_t i = 0; i < k; ++i)
		for (std::size_t j = i; j < k; ++j)
			shape.emplace_back(i, j);
	return matrix_family(fmt::format("UT{}(F{})", k, p), p, k, shape);
}

RingHandle poly_quotient(std::size_t p, std::vector<std::size_t> modulus, std::string name)
{
	require_prime(p);
	if (modulus.size() < 2 || modulus.back() != 1)
		throw InvalidArgument("modulus must be monic of degree at least 1");
	const std::size_t d = modulus.size() - 1;
	const std::size_t n = power(p, d);
	const char var = name.find('w') != std::string::npos ? 'w' : 'x';
	std::vector<std::string> labels;
	for (std::size_t x = 0; x < n; ++x)
		labels.push_back(poly_label(digits(x, p, d), var));
	auto mul = [&](Elem a, Elem b) {
		auto x = digits(a, p, d), y = digits(b, p, d);
		std::vector<std::size_t> c(2 * d, 0);
		for (std::size_t i = 0; i < d; ++i)
			for (std::size_t j = 0; j < d; ++j)
				c[i + j] = (c[i + j] + x[i] * y[j]) % p;
		for (std::size_t top = 2 * d - 1; top >= d; --top) {
			std::size_t lead = c[top];
			if (lead == 0)
				continue;
			for (std::size_t i = 0; i <= d; ++i)
				c[top - d + i] = (c[top - d + i] + (p - lead) * modulus[i]) % p;
		}
		c.resize(d);
		return Elem(from_digits(c, p));
	};
	auto add = [&](Elem a, Elem b) {
		auto x = digits(a, p, d), y = digits(b, p, d);
		for (std::size_t i = 0; i < d; ++i)
			x[i] = (x[i] + y[i]) % p;
		return Elem(from_digits(x, p));
	};
	return tabulate(std::move(name), std::move(labels), add, mul, 0, 1);
}

RingHandle truncated_poly(std::size_t p, std::size_t k)
{
	std::vector<std::size_t> modulus(k + 1, 0);
	modulus[k] = 1;
	return poly_quotient(p, std::move(modulus), fmt::format("F{}[x]/(x^{})", p, k));
}

RingHandle gf4() { return poly_quotient(2, {1, 1, 1}, "F4"); }

RingHandle product(const RingHandle &a, const RingHandle &b)
{
	const std::size_t na = a->size(), nb = b->size();
	if (na * nb > max_ring_size)
		throw InvalidArgument(fmt::format("ring would exceed {} elements", max_ring_size));
	std::vector<std::string> labels;
	for (std::size_t y = 0; y < nb; ++y)
		for (std::size_t x = 0; x < na; ++x)
			labels.push_back(fmt::format("({},{})", a->label(Elem(x)), b->label(Elem(y))));
	auto pair = [na](Elem x, Elem y) { return Elem(x + na * y); };
	return tabulate(
	    fmt::format("{}*{}", a->name(), b->name()), std::move(labels),
	    [&](Elem u, Elem v) {
		    return pair(a->add(u % na, v % na), b->add(Elem(u / na), Elem(v / na)));
	    },
	    [&](Elem u, Elem v) {
		    return pair(a->mul(u % na, v % na), b->mul(Elem(u / na), Elem(v / na)));
	    },
	    pair(a->zero(), b->zero()), pair(a->one(), b->one()));
}

RingHandle ring_from_name(std::string_view name)
{
	if (auto star = name.find('*'); star != std::string_view::npos)
		return product(ring_from_name(name.substr(0, star)), ring_from_name(name.substr(star + 1)));

	const std::string s(name);
	auto num = [](const std::string &t) {
		std::size_t v = 0;
		auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
		if (ec != std::errc{} || ptr != t.data() + t.size())
			throw InvalidArgument(fmt::format("bad number '{}'", t));
		return v;
	};
	std::smatch m;
	if (s == "F4")
		return gf4();
	if (std::regex_match(s, m, std::regex(R"(F(\d+))")))
		return prime_field(num(m[1]));
	if (std::regex_match(s, m, std::regex(R"(Z/(\d+))")))
		return integers_mod(num(m[1]));
	if (std::regex_match(s, m, std::regex(R"(M(\d+)\(F(\d+)\))")))
		return matrix_ring(num(m[2]), num(m[1]));
	if (std::regex_match(s, m, std::regex(R"(UT(\d+)\(F(\d+)\))")))
		return upper_triangular(num(m[2]), num(m[1]));
	if (std::regex_match(s, m, std::regex(R"(F(\d+)\[x\]/\(x\^(\d+)\))")))
		return truncated_poly(num(m[1]), num(m[2]));
	throw InvalidArgument(fmt::format("unknown ring '{}'", s));
}

std::vector<RingHandle> standard_suite()
{
	std::vector<RingHandle> out;
	for (const char *name : {"F2", "F3", "F4", "F5", "F2[x]/(x^2)", "F3[x]/(x^2)", "F2[x]/(x^3)",
	                         "Z/4", "Z/6", "Z/8", "Z/9", "UT2(F2)", "UT2(F3)", "M2(F2)", "M2(F3)",
	                         "F2*F2", "F2*F3", "F2[x]/(x^2)*F2", "Z/4*F3", "F4*F2[x]/(x^2)",
	                         "UT2(F2)*F2", "M2(F2)*F2", "M2(F2)*F3"})
		out.push_back(ring_from_name(name));
	return out;
}

Subset units_of(const FiniteRing &r)
{
	Subset out(r.size(), false);
	for (Elem x = 0; x < r.size(); ++x)
		for (Elem u = 0; u < r.size(); ++u)
			if (r.mul(x, u) == r.one() && r.mul(u, x) == r.one()) {
				out[x] = true;
				break;
			}
	return out;
}

std::size_t count(const Subset &s) { return std::size_t(std::count(s.begin(), s.end(), true)); }

Subset ideal_closure(const FiniteRing &r, const Subset &seed, Side side)
{
	const std::size_t n = r.size();
	Subset in(n, false);
	std::vector<Elem> members;
	std::deque<Elem> queue{r.zero()};
	for (Elem x = 0; x < n; ++x)
		if (seed.at(x))
			queue.push_back(x);
	auto push = [&](Elem x) {
		if (!in[x])
			queue.push_back(x);
	};
	while (!queue.empty()) {
		Elem a = queue.front();
		queue.pop_front();
		if (in[a])
			continue;
		in[a] = true;
		members.push_back(a);
		push(r.neg(a));
		for (Elem b : members)
			push(r.add(a, b));
		for (Elem x = 0; x < n; ++x) {
			if (side != Side::Right)
				push(r.mul(x, a));
			if (side != Side::Left)
				push(r.mul(a, x));
		}
	}
	return in;
}

Subset two_sided_ideal(const FiniteRing &r, Elem x)
{
	Subset seed(r.size(), false);
	seed.at(x) = true;
	return ideal_closure(r, seed, Side::Both);
}

bool LocalReport::consistent() const
{
	if (unique_maximal_left != unique_maximal_right || unique_maximal_left != x_or_complement_unit)
		return false;
	if (maximal_left_enumerated && (*maximal_left_enumerated == 1) != unique_maximal_left)
		return false;
	if (maximal_right_enumerated && (*maximal_right_enumerated == 1) != unique_maximal_right)
		return false;
	return true;
}

LocalReport check_local_equivalences(const FiniteRing &r)
{
	const std::size_t n = r.size();
	LocalReport out;
	Subset units = units_of(r);
	out.non_units = Subset(n, false);
	for (Elem x = 0; x < n; ++x)
		out.non_units[x] = !units[x];

	// In a finite ring one-sided inverses are two-sided, so every proper
	// one-sided ideal consists of non-units; the non-units are then the unique
	// maximal one exactly when they form such an ideal.
	auto non_units_form = [&](Side side) {
		for (Elem a = 0; a < n; ++a) {
			if (units[a])
				continue;
			for (Elem b = 0; b < n; ++b) {
				if (!units[b] && units[r.add(a, b)])
					return false;
				Elem prod = side == Side::Left ? r.mul(b, a) : r.mul(a, b);
				if (units[prod])
					return false;
			}
		}
		return true;
	};
	out.unique_maximal_left = non_units_form(Side::Left);
	out.unique_maximal_right = non_units_form(Side::Right);

	out.x_or_complement_unit = true;
	for (Elem x = 0; x < n; ++x)
		if (!units[x] && !units[r.sub(r.one(), x)]) {
			out.x_or_complement_unit = false;
			out.witness = x;
			break;
		}

	if (n <= 16) {
		out.maximal_left_enumerated = enumerate_maximal_one_sided(r, Side::Left);
		out.maximal_right_enumerated = enumerate_maximal_one_sided(r, Side::Right);
	}
	return out;
}

MaximalIdealReport unique_maximal_two_sided(const FiniteRing &r)
{
	const std::size_t n = r.size();
	std::set<Subset> found;
	std::vector<Subset> work;
	for (Elem x = 0; x < n; ++x) {
		Subset ideal = two_sided_ideal(r, x);
		if (found.insert(ideal).second)
			work.push_back(std::move(ideal));
	}
	// Sums of two ideals until no new ideal appears.
	for (std::size_t i = 0; i < work.size(); ++i)
		for (std::size_t j = 0; j < i; ++j) {
			Subset u(n, false);
			for (std::size_t x = 0; x < n; ++x)
				u[x] = work[i][x] || work[j][x];
			Subset sum = ideal_closure(r, u, Side::Both);
			if (found.insert(sum).second)
				work.push_back(std::move(sum));
		}

	MaximalIdealReport out;
	out.ideals.assign(found.begin(), found.end());
	auto contains = [](const Subset &big, const Subset &small) {
		for (std::size_t x = 0; x < big.size(); ++x)
			if (small[x] && !big[x])
				return false;
		return true;
	};
	for (const auto &ideal : out.ideals) {
		if (ideal[r.one()])
			continue;
		bool dominated = std::any_of(out.ideals.begin(), out.ideals.end(), [&](const Subset &o) {
			return !o[r.one()] && o != ideal && contains(o, ideal);
		});
		if (!dominated)
			out.maximal.push_back(ideal);
	}
	return out;
}

// ---------------------------------------------------------------------------

FiniteModule::FiniteModule(RingHandle ring, std::vector<std::string> labels,
                           std::vector<Elem> add_table, std::vector<Elem> act_table, Elem zero)
    : ring_(std::move(ring)), labels_(std::move(labels)), add_(std::move(add_table)),
      act_(std::move(act_table)), zero_(zero)
{
	const std::size_t m = labels_.size(), n = ring_->size();
	if (m == 0 || zero_ >= m)
		throw InvalidArgument("module needs a zero element");
	if (add_.size() != m * m || act_.size() != m * n)
		throw InvalidArgument("module table size does not match");
	for (Elem v : add_)
		if (v >= m)
			throw InvalidArgument("module addition entry out of range");
	for (Elem v : act_)
		if (v >= m)
			throw InvalidArgument("module action entry out of range");

	auto fail = [](const char *axiom) {
		throw InvalidArgument(fmt::format("module axiom fails: {}", axiom));
	};
	const FiniteRing &r = *ring_;
	for (Elem a = 0; a < m; ++a) {
		if (add(a, zero_) != a)
			fail("additive identity");
		if (act(a, r.one()) != a)
			fail("m.1 = m");
		bool has_neg = false;
		for (Elem b = 0; b < m; ++b) {
			has_neg = has_neg || add(a, b) == zero_;
			if (add(a, b) != add(b, a))
				fail("commutativity of addition");
			for (Elem c = 0; c < m; ++c)
				if (add(add(a, b), c) != add(a, add(b, c)))
					fail("associativity of addition");
			for (Elem x = 0; x < n; ++x)
				if (act(add(a, b), x) != add(act(a, x), act(b, x)))
					fail("(m + m')r = mr + m'r");
		}
		if (!has_neg)
			fail("additive inverse");
		for (Elem x = 0; x < n; ++x)
			for (Elem y = 0; y < n; ++y) {
				if (act(a, r.add(x, y)) != add(act(a, x), act(a, y)))
					fail("m(r + s) = mr + ms");
				if (act(a, r.mul(x, y)) != act(act(a, x), y))
					fail("m(rs) = (mr)s");
			}
	}
}

FiniteModule zero_module(const RingHandle &r)
{
	return FiniteModule(r, {"0"}, {0}, std::vector<Elem>(r->size(), 0), 0);
}

FiniteModule regular_module(const RingHandle &r)
{
	const std::size_t n = r->size();
	std::vector<std::string> labels;
	std::vector<Elem> add(n * n), act(n * n);
	for (Elem a = 0; a < n; ++a) {
		labels.push_back(r->label(a));
		for (Elem b = 0; b < n; ++b) {
			add[a * n + b] = r->add(a, b);
			act[a * n + b] = r->mul(a, b);
		}
	}
	return FiniteModule(r, std::move(labels), std::move(add), std::move(act), r->zero());
}

FiniteModule row_vectors(std::size_t p, std::size_t k)
{
	RingHandle r = matrix_ring(p, k);
	const std::size_t m = power(p, k), n = r->size();
	std::vector<std::string> labels;
	std::vector<Elem> add(m * m), act(m * n);
	for (std::size_t v = 0; v < m; ++v) {
		auto dv = digits(v, p, k);
		labels.push_back(fmt::format("({})", fmt::join(dv, ",")));
		for (std::size_t w = 0; w < m; ++w) {
			auto dw = digits(w, p, k);
			for (std::size_t i = 0; i < k; ++i)
				dw[i] = (dw[i] + dv[i]) % p;
			add[v * m + w] = Elem(from_digits(dw, p));
		}
		for (std::size_t x = 0; x < n; ++x) {
			auto entries = digits(x, p, k * k);
			std::vector<std::size_t> out(k, 0);
			for (std::size_t j = 0; j < k; ++j)
				for (std::size_t i = 0; i < k; ++i)
					out[j] = (out[j] + dv[i] * entries[i * k + j]) % p;
			act[v * n + x] = Elem(from_digits(out, p));
		}
	}
	return FiniteModule(r, std::move(labels), std::move(add), std::move(act), 0);
}

RingMap::RingMap(RingHandle src, RingHandle dst, std::vector<Elem> tbl)
    : source(std::move(src)), target(std::move(dst)), table(std::move(tbl))
{
	const FiniteRing &a = *source, &b = *target;
	if (table.size() != a.size())
		throw PreconditionFailure("map table size does not match the source ring");
	for (Elem v : table)
		if (v >= b.size())
			throw PreconditionFailure("map value out of range");
	if (table[a.one()] != b.one())
		throw PreconditionFailure("not a homomorphism: f(1) != 1");
	for (Elem x = 0; x < a.size(); ++x)
		for (Elem y = 0; y < a.size(); ++y) {
			if (table[a.add(x, y)] != b.add(table[x], table[y]))
				throw PreconditionFailure(fmt::format("not a homomorphism: f({} + {})",
				                                      a.label(x), a.label(y)));
			if (table[a.mul(x, y)] != b.mul(table[x], table[y]))
				throw PreconditionFailure(fmt::format("not a homomorphism: f({} * {})",
				                                      a.label(x), a.label(y)));
		}
}

RingMap identity_map(const RingHandle &r)
{
	std::vector<Elem> t(r->size());
	for (Elem x = 0; x < r->size(); ++x)
		t[x] = x;
	return RingMap(r, r, std::move(t));
}

RingMap unit_map(std::size_t p, const RingHandle &r)
{
	RingHandle f = prime_field(p);
	std::vector<Elem> t(p);
	Elem acc = r->zero();
	for (std::size_t k = 0; k < p; ++k) {
		t[k] = acc;
		acc = r->add(acc, r->one());
	}
	return RingMap(f, r, std::move(t));
}

RingMap augmentation_map(std::size_t p, std::size_t k)
{
	RingHandle src = truncated_poly(p, k);
	std::vector<Elem> t(src->size());
	for (std::size_t x = 0; x < src->size(); ++x)
		t[x] = Elem(x % p);
	return RingMap(src, prime_field(p), std::move(t));
}

RingMap diagonal_map(std::size_t p)
{
	RingHandle src = upper_triangular(p, 2);
	RingHandle fp = prime_field(p);
	RingHandle dst = product(fp, fp);
	std::vector<Elem> t(src->size());
	// UT digits in order (0,0), (0,1), (1,1).
	for (std::size_t x = 0; x < src->size(); ++x) {
		auto d = digits(x, p, 3);
		t[x] = Elem(d[0] + p * d[2]);
	}
	return RingMap(src, dst, std::move(t));
}

FiniteModule pullback(const FiniteModule &m, const RingMap &f)
{
	if (!(*m.ring() == *f.target))
		throw PreconditionFailure("module is not over the target of the map");
	const std::size_t n = f.source->size();
	std::vector<Elem> act(m.size() * n);
	for (Elem v = 0; v < m.size(); ++v)
		for (Elem a = 0; a < n; ++a)
			act[v * n + a] = m.act(v, f(a));
	return FiniteModule(f.source, m.labels(), m.add_table(), std::move(act), m.zero());
}

bool is_simple(const FiniteModule &m)
{
	if (m.size() <= 1)
		return false;
	const std::size_t n = m.ring()->size();
	for (Elem v = 0; v < m.size(); ++v) {
		if (v == m.zero())
			continue;
		// Submodule generated by v: additive closure of v.R (which contains v).
		Subset in(m.size(), false);
		std::vector<Elem> members, queue;
		for (Elem x = 0; x < n; ++x)
			queue.push_back(m.act(v, x));
		while (!queue.empty()) {
			Elem a = queue.back();
			queue.pop_back();
			if (in[a])
				continue;
			in[a] = true;
			members.push_back(a);
			for (Elem b : members)
				queue.push_back(m.add(a, b));
		}
		if (members.size() != m.size())
			return false;
	}
	return true;
}

PullbackReport simple_pullback_check(const RingMap &f, const FiniteModule &m)
{
	PullbackReport out;
	out.target_simple = is_simple(m);
	out.source_simple = is_simple(pullback(m, f));
	return out;
}

} // namespace pointed::lab
