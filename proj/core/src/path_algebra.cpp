#include "pointed/path_algebra.hpp"
#include "pointed/error.hpp"
#include "pointed/linalg.hpp"

#include <fmt/format.h>

#include <algorithm>

namespace pointed {

Quiver::Quiver(std::size_t vertices, std::vector<Arrow> arrows)
    : vertices_(vertices), arrows_(std::move(arrows)), outgoing_(vertices)
{
	if (vertices == 0)
		throw InvalidArgument("a quiver needs at least one vertex");
	std::sort(arrows_.begin(), arrows_.end());
	for (std::size_t i = 0; i < arrows_.size(); ++i) {
		const Arrow &a = arrows_[i];
		if (a.source < 1 || a.source > vertices || a.target < 1 || a.target > vertices)
			throw InvalidArgument(fmt::format("arrow t({},{},{}) has a vertex outside [1, {}]",
			                                  a.source, a.target, a.label, vertices));
		if (a.label < 1)
			throw InvalidArgument("arrow labels start at 1");
		if (i > 0 && arrows_[i - 1] == a)
			throw InvalidArgument(
			    fmt::format("duplicate arrow t({},{},{})", a.source, a.target, a.label));
		outgoing_[a.source - 1].push_back(i);
	}
}

Quiver Quiver::from_counts(const std::vector<std::vector<std::size_t>> &counts)
{
	std::vector<Arrow> arrows;
	for (std::size_t i = 0; i < counts.size(); ++i) {
		if (counts[i].size() != counts.size())
			throw InvalidArgument("arrow count matrix must be square");
		for (std::size_t j = 0; j < counts.size(); ++j)
			for (std::size_t l = 1; l <= counts[i][j]; ++l)
				arrows.push_back({std::uint32_t(i + 1), std::uint32_t(j + 1), std::uint32_t(l)});
	}
	return Quiver(counts.size(), std::move(arrows));
}

std::optional<std::size_t> Quiver::find(const Arrow &a) const
{
	auto it = std::lower_bound(arrows_.begin(), arrows_.end(), a);
	if (it == arrows_.end() || *it != a)
		return std::nullopt;
	return static_cast<std::size_t>(it - arrows_.begin());
}

std::size_t Quiver::count(std::size_t source, std::size_t target) const
{
	return std::count_if(arrows_.begin(), arrows_.end(), [&](const Arrow &a) {
		return a.source == source && a.target == target;
	});
}

Path Path::arrow(const Quiver &quiver, std::size_t index)
{
	const Arrow &a = quiver.arrow(index);
	return Path(a.source, a.target, {std::uint32_t(index)});
}

Path Path::from_arrows(const Quiver &quiver, std::vector<std::uint32_t> arrows)
{
	if (arrows.empty())
		throw InvalidArgument("use Path::trivial for length-0 paths");
	for (std::size_t k = 0; k < arrows.size(); ++k) {
		if (arrows[k] >= quiver.arrows().size())
			throw InvalidArgument("arrow index out of range");
		if (k > 0 && quiver.arrow(arrows[k - 1]).target != quiver.arrow(arrows[k]).source)
			throw InvalidArgument("arrows are not composable");
	}
	std::uint32_t s = quiver.arrow(arrows.front()).source;
	std::uint32_t t = quiver.arrow(arrows.back()).target;
	return Path(s, t, std::move(arrows));
}

std::optional<Path> Path::concat(const Path &other) const
{
	if (target_ != other.source_)
		return std::nullopt;
	std::vector<std::uint32_t> joined;
	joined.reserve(arrows_.size() + other.arrows_.size());
	joined.insert(joined.end(), arrows_.begin(), arrows_.end());
	joined.insert(joined.end(), other.arrows_.begin(), other.arrows_.end());
	return Path(source_, other.target_, std::move(joined));
}

std::string Path::to_string(const Quiver &quiver) const
{
	if (arrows_.empty())
		return fmt::format("e({})", source_);
	std::string out;
	for (auto index : arrows_) {
		const Arrow &a = quiver.arrow(index);
		if (!out.empty())
			out += '*';
		out += fmt::format("t({},{},{})", a.source, a.target, a.label);
	}
	return out;
}

// ---------------------------------------------------------------------------
// Element

namespace {

void validate_path(const Quiver &quiver, const Path &p)
{
	if (p.source() < 1 || p.source() > quiver.vertices() || p.target() < 1 ||
	    p.target() > quiver.vertices())
		throw InvalidArgument("path vertex outside the quiver");
	for (std::size_t k = 0; k < p.length(); ++k) {
		auto index = p.arrows()[k];
		if (index >= quiver.arrows().size() ||
		    (k > 0 && quiver.arrow(p.arrows()[k - 1]).target != quiver.arrow(index).source))
			throw InvalidArgument("path is not valid in the quiver");
	}
}

} // namespace

Element::Element(AlgebraHandle algebra) : algebra_(std::move(algebra))
{
	if (!algebra_)
		throw InvalidArgument("element without an algebra");
}

Element::Element(AlgebraHandle algebra, Terms terms) : Element(std::move(algebra))
{
	for (auto it = terms.begin(); it != terms.end();) {
		const Path &p = it->first;
		validate_path(algebra_->quiver(), p);
		if (it->second.field() != algebra_->field())
			throw FieldMismatch("coefficient field differs from the algebra's field");
		if (it->second.is_zero() || p.length() > algebra_->order())
			it = terms.erase(it);
		else
			++it;
	}
	algebra_->normalize(terms);
	terms_ = std::move(terms);
}

void Element::check_same(const Element &other) const
{
	if (algebra_ != other.algebra_ && !algebra_->same_as(*other.algebra_))
		throw AlgebraMismatch("elements belong to different algebras");
}

Scalar Element::coefficient(const Path &path) const
{
	auto it = terms_.find(path);
	return it == terms_.end() ? Scalar::zero(algebra_->field()) : it->second;
}

std::optional<std::size_t> Element::valuation() const
{
	if (terms_.empty())
		return std::nullopt;
	return terms_.begin()->first.length();
}

Element Element::operator-() const
{
	Terms out = terms_;
	for (auto &[p, c] : out)
		c = -c;
	return Element(algebra_, std::move(out), Raw{});
}

Element &Element::operator+=(const Element &other)
{
	check_same(other);
	axpy(terms_, Scalar::one(algebra_->field()), other.terms_);
	return *this;
}

Element &Element::operator-=(const Element &other)
{
	check_same(other);
	axpy(terms_, -Scalar::one(algebra_->field()), other.terms_);
	return *this;
}

Element operator*(const Element &a, const Element &b)
{
	a.check_same(b);
	const std::size_t order = a.algebra_->order();
	Terms out;
	for (const auto &[p, x] : a.terms_) {
		for (const auto &[q, y] : b.terms_) {
			if (p.target() != q.source() || p.length() + q.length() > order)
				continue;
			auto [it, inserted] = out.try_emplace(*p.concat(q), x * y);
			if (!inserted)
				it->second += x * y;
		}
	}
	std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
	a.algebra_->normalize(out);
	return Element(a.algebra_, std::move(out), Element::Raw{});
}

Element operator*(const Scalar &c, const Element &x)
{
	if (c.field() != x.algebra_->field())
		throw FieldMismatch("scalar field differs from the algebra's field");
	if (c.is_zero())
		return Element(x.algebra_);
	Terms out = x.terms_;
	for (auto &[p, v] : out)
		v *= c;
	return Element(x.algebra_, std::move(out), Element::Raw{});
}

bool operator==(const Element &a, const Element &b)
{
	a.check_same(b);
	return a.terms_ == b.terms_;
}

std::string Element::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	for (const auto &[p, c] : terms_) {
		bool negative = c.field().is_rational() && sgn(c.rational()) < 0;
		Scalar magnitude = negative ? -c : c;
		std::string mono = p.to_string(algebra_->quiver());
		std::string body = magnitude.is_one() ? mono : magnitude.to_string() + "*" + mono;
		if (out.empty())
			out = (negative ? "-" : "") + body;
		else
			out += (negative ? " - " : " + ") + body;
	}
	return out;
}

// ---------------------------------------------------------------------------
// TruncatedAlgebra

TruncatedAlgebra::TruncatedAlgebra(Quiver quiver, FieldSpec field, std::size_t order,
                                   RelationSet relations)
    : quiver_(std::move(quiver)), field_(field), order_(order), relations_(std::move(relations))
{}

AlgebraHandle TruncatedAlgebra::build(Quiver quiver, FieldSpec field, std::size_t order,
                                      RelationSet relations)
{
	for (auto &rel : relations) {
		std::erase_if(rel, [](const auto &kv) { return kv.second.is_zero(); });
		if (rel.empty())
			throw InvalidArgument("relations must be nonzero");
		for (const auto &[p, c] : rel) {
			if (p.length() < 2)
				throw InvalidArgument(fmt::format(
				    "relation has a nonzero component in degree {} < 2", p.length()));
			if (c.field() != field)
				throw FieldMismatch("relation coefficient over the wrong field");
			validate_path(quiver, p);
		}
	}
	auto algebra = std::shared_ptr<TruncatedAlgebra>(
	    new TruncatedAlgebra(std::move(quiver), field, order, std::move(relations)));
	algebra->build_reduction();
	return algebra;
}

std::vector<Path> TruncatedAlgebra::paths_of_length(std::size_t d) const
{
	std::vector<Path> current;
	for (std::uint32_t v = 1; v <= quiver_.vertices(); ++v)
		current.push_back(Path::trivial(v));
	for (std::size_t step = 0; step < d; ++step) {
		std::vector<Path> next;
		for (const Path &p : current)
			for (auto index : quiver_.outgoing(p.target()))
				next.push_back(*p.concat(Path::arrow(quiver_, index)));
		current = std::move(next);
	}
	return current;
}

void TruncatedAlgebra::build_reduction()
{
	if (relations_.empty())
		return;
	std::vector<std::vector<Path>> by_length(order_ + 1);
	for (std::size_t d = 0; d <= order_; ++d)
		by_length[d] = paths_of_length(d);

	SparseEchelon<Path, PivotOrder> ideal;
	for (auto &rel : relations_) {
		std::erase_if(rel, [&](const auto &kv) { return kv.first.length() > order_; });
		if (rel.empty())
			continue;
		const std::size_t low = rel.begin()->first.length();
		for (std::size_t a = 0; a + low <= order_; ++a) {
			for (const Path &u : by_length[a]) {
				for (std::size_t b = 0; a + b + low <= order_; ++b) {
					for (const Path &v : by_length[b]) {
						SparseVector<Path, PivotOrder> product;
						for (const auto &[p, c] : rel) {
							if (u.target() != p.source() || p.target() != v.source() ||
							    a + b + p.length() > order_)
								continue;
							product.emplace(*u.concat(p)->concat(v), c);
						}
						if (!product.empty())
							ideal.insert(std::move(product));
					}
				}
			}
		}
	}
	for (const auto &[pivot, row] : ideal.rows()) {
		std::vector<std::pair<Path, Scalar>> replacement;
		for (const auto &[p, c] : row.vector)
			if (p != pivot)
				replacement.emplace_back(p, -c);
		rewrite_.emplace(pivot, std::move(replacement));
	}
}

void TruncatedAlgebra::normalize(Terms &terms) const
{
	if (rewrite_.empty())
		return;
	bool touched = false;
	for (const auto &[p, c] : terms)
		if (rewrite_.contains(p)) {
			touched = true;
			break;
		}
	if (!touched)
		return;
	Terms out;
	auto accumulate = [&](const Path &p, const Scalar &c) {
		auto [it, inserted] = out.try_emplace(p, c);
		if (!inserted)
			it->second += c;
	};
	for (const auto &[p, c] : terms) {
		auto it = rewrite_.find(p);
		if (it == rewrite_.end()) {
			accumulate(p, c);
			continue;
		}
		for (const auto &[q, a] : it->second)
			accumulate(q, c * a);
	}
	std::erase_if(out, [](const auto &kv) { return kv.second.is_zero(); });
	terms = std::move(out);
}

std::vector<Path> TruncatedAlgebra::monomial_basis(std::size_t d) const
{
	if (d > order_)
		throw InvalidArgument(fmt::format("degree {} exceeds the truncation order {}", d, order_));
	auto paths = paths_of_length(d);
	std::erase_if(paths, [&](const Path &p) { return !is_normal(p); });
	return paths;
}

std::vector<Path> TruncatedAlgebra::monomial_basis(std::size_t source, std::size_t target) const
{
	std::vector<Path> out;
	for (std::size_t d = 0; d <= order_; ++d)
		for (Path &p : monomial_basis(d))
			if (p.source() == source && p.target() == target)
				out.push_back(std::move(p));
	return out;
}

std::size_t TruncatedAlgebra::ideal_rank(std::size_t d) const
{
	return std::count_if(rewrite_.begin(), rewrite_.end(),
	                     [&](const auto &kv) { return kv.first.length() == d; });
}

std::size_t TruncatedAlgebra::dimension(std::size_t d) const
{
	if (d > order_)
		throw InvalidArgument(fmt::format("degree {} exceeds the truncation order {}", d, order_));
	return paths_of_length(d).size() - ideal_rank(d);
}

std::size_t TruncatedAlgebra::dimension() const
{
	std::size_t total = 0;
	for (std::size_t d = 0; d <= order_; ++d)
		total += dimension(d);
	return total;
}

Element TruncatedAlgebra::zero() const { return Element(shared_from_this()); }

Element TruncatedAlgebra::one() const
{
	Terms terms;
	for (std::uint32_t v = 1; v <= quiver_.vertices(); ++v)
		terms.emplace(Path::trivial(v), Scalar::one(field_));
	return Element(shared_from_this(), std::move(terms), Element::Raw{});
}

Element TruncatedAlgebra::idempotent(std::size_t vertex) const
{
	if (vertex < 1 || vertex > quiver_.vertices())
		throw InvalidArgument(fmt::format("vertex {} outside [1, {}]", vertex, quiver_.vertices()));
	return monomial(Path::trivial(std::uint32_t(vertex)), Scalar::one(field_));
}

Element TruncatedAlgebra::arrow(std::size_t source, std::size_t target, std::size_t label) const
{
	auto index =
	    quiver_.find({std::uint32_t(source), std::uint32_t(target), std::uint32_t(label)});
	if (!index)
		throw InvalidArgument(fmt::format("no arrow t({},{},{})", source, target, label));
	return monomial(Path::arrow(quiver_, *index), Scalar::one(field_));
}

Element TruncatedAlgebra::monomial(const Path &path, const Scalar &coefficient) const
{
	return Element(shared_from_this(), Terms{{path, coefficient}});
}

Element TruncatedAlgebra::scalar(const Scalar &c) const { return c * one(); }

bool TruncatedAlgebra::same_as(const TruncatedAlgebra &other) const
{
	return this == &other || (quiver_ == other.quiver_ && field_ == other.field_ &&
	                          order_ == other.order_ && relations_ == other.relations_);
}

AlgebraHandle build_algebra(const Quiver &quiver, const FieldSpec &field, std::size_t order,
                            const RelationSet &relations)
{
	return TruncatedAlgebra::build(quiver, field, order, relations);
}

Element multiply(const Element &x, const Element &y) { return x * y; }
Element add(const Element &x, const Element &y) { return x + y; }
Element scale(const Scalar &c, const Element &x) { return c * x; }

Element truncate(const Element &x, std::size_t d)
{
	if (d > x.algebra()->order())
		throw InvalidArgument(
		    fmt::format("degree {} exceeds the truncation order {}", d, x.algebra()->order()));
	Terms out = x.terms();
	std::erase_if(out, [&](const auto &kv) { return kv.first.length() > d; });
	return Element(x.algebra(), std::move(out));
}

std::vector<Path> monomial_basis(const TruncatedAlgebra &algebra, std::size_t d)
{
	return algebra.monomial_basis(d);
}

// ---------------------------------------------------------------------------
// AlgebraMorphism

AlgebraMorphism::AlgebraMorphism(AlgebraHandle source, AlgebraHandle target,
                                 std::vector<Element> arrow_images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(arrow_images))
{
	if (source_->vertices() != target_->vertices())
		throw InvalidArgument("morphism between algebras with different vertex counts");
	if (source_->field() != target_->field())
		throw FieldMismatch("morphism between algebras over different fields");
	if (target_->order() > source_->order())
		throw InvalidArgument("target truncation order exceeds the source order");
	const Quiver &quiver = source_->quiver();
	if (images_.size() != quiver.arrows().size())
		throw InvalidArgument("one image per source arrow is required");
	for (std::size_t i = 0; i < images_.size(); ++i) {
		const Arrow &a = quiver.arrow(i);
		if (!images_[i].algebra()->same_as(*target_))
			throw AlgebraMismatch("arrow image outside the target algebra");
		for (const auto &[p, c] : images_[i].terms())
			if (p.length() == 0 || p.source() != a.source || p.target() != a.target)
				throw InvalidArgument(fmt::format(
				    "image of t({},{},{}) violates the vertex grading or has a degree-0 part",
				    a.source, a.target, a.label));
	}
	for (const auto &rel : source_->relations())
		if (!apply_terms(rel).is_zero())
			throw InvalidArgument("a source relation does not map to zero");
}

AlgebraMorphism AlgebraMorphism::identity(const AlgebraHandle &algebra)
{
	std::vector<Element> images;
	for (std::size_t i = 0; i < algebra->quiver().arrows().size(); ++i)
		images.push_back(
		    algebra->monomial(Path::arrow(algebra->quiver(), i), Scalar::one(algebra->field())));
	return AlgebraMorphism(algebra, algebra, std::move(images));
}

Element AlgebraMorphism::apply_terms(const Terms &terms) const
{
	Element out = target_->zero();
	for (const auto &[p, c] : terms) {
		Element image = target_->idempotent(p.source());
		for (auto index : p.arrows()) {
			image = image * images_[index];
			if (image.is_zero())
				break;
		}
		out += c * image;
	}
	return out;
}

Element AlgebraMorphism::operator()(const Element &x) const
{
	if (!x.algebra()->same_as(*source_))
		throw AlgebraMismatch("element outside the morphism's source");
	return apply_terms(x.terms());
}

} // namespace pointed
