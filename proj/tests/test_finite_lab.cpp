#include "pointed/error.hpp"
#include "pointed/finite_lab.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

using namespace pointed;
using namespace pointed::lab;

namespace {

std::string matrix(int a, int b, int c, int d)
{
	return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
	       std::to_string(d) + "]]";
}

Elem at(const FiniteRing &r, const std::string &label)
{
	auto x = r.find(label);
	if (!x)
		throw std::runtime_error("no element " + label + " in " + r.name());
	return *x;
}

Subset subset(const FiniteRing &r, const std::vector<std::string> &labels)
{
	Subset s(r.size(), false);
	for (const auto &l : labels)
		s[at(r, l)] = true;
	return s;
}

/// Ring maps and target modules covering every construction in the lab.
std::vector<std::pair<RingMap, FiniteModule>> map_module_pairs()
{
	std::vector<std::pair<RingMap, FiniteModule>> out;
	for (const auto &r : standard_suite()) {
		out.emplace_back(identity_map(r), regular_module(r));
		out.emplace_back(identity_map(r), zero_module(r));
	}
	for (std::size_t p : {2, 3}) {
		auto m = matrix_ring(p, 2);
		out.emplace_back(unit_map(p, m), row_vectors(p, 2));
		out.emplace_back(identity_map(m), row_vectors(p, 2));
		out.emplace_back(unit_map(p, m), regular_module(m));
		auto aug = augmentation_map(p, 2);
		out.emplace_back(aug, regular_module(prime_field(p)));
		auto residue = pullback(regular_module(prime_field(p)), aug);
		out.emplace_back(unit_map(p, truncated_poly(p, 2)), residue);
		out.emplace_back(unit_map(p, truncated_poly(p, 2)), regular_module(truncated_poly(p, 2)));
		auto diag = diagonal_map(p);
		out.emplace_back(diag, regular_module(diag.target));
		out.emplace_back(unit_map(p, diag.target), regular_module(diag.target));
	}
	return out;
}

} // namespace

TEST(FiniteRing, RejectsBadTables)
{
	// Zero ring.
	EXPECT_THROW(FiniteRing("0", {"0"}, {0}, {0}, 0, 0), InvalidArgument);
	// Non-associative multiplication on Z/2 addition.
	EXPECT_THROW(FiniteRing("bad", {"0", "1"}, {0, 1, 1, 0}, {0, 0, 0, 0}, 0, 1), InvalidArgument);
	EXPECT_THROW(ring_from_name("M2(F4)"), InvalidArgument);
	EXPECT_THROW(ring_from_name("nonsense"), InvalidArgument);
}

TEST(FiniteRing, NamedConstructions)
{
	EXPECT_EQ(ring_from_name("F5")->size(), 5u);
	EXPECT_EQ(ring_from_name("F4")->size(), 4u);
	EXPECT_EQ(ring_from_name("M2(F3)")->size(), 81u);
	EXPECT_EQ(ring_from_name("UT2(F2)")->size(), 8u);
	EXPECT_EQ(ring_from_name("F2[x]/(x^3)")->size(), 8u);
	EXPECT_EQ(ring_from_name("Z/6*F2")->size(), 12u);
	EXPECT_EQ(*ring_from_name("M2(F2)"), *matrix_ring(2, 2));
	EXPECT_THROW(ring_from_name("M9(F3)"), InvalidArgument);
}

TEST(FiniteRing, MatrixProductByHand)
{
	auto m = matrix_ring(3, 2);
	const int a[4] = {1, 2, 0, 1}, b[4] = {2, 0, 1, 1};
	int c[4];
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			c[2 * i + j] = (a[2 * i] * b[j] + a[2 * i + 1] * b[2 + j]) % 3;
	EXPECT_EQ(m->label(m->mul(at(*m, matrix(a[0], a[1], a[2], a[3])),
	                          at(*m, matrix(b[0], b[1], b[2], b[3])))),
	          matrix(c[0], c[1], c[2], c[3]));
}

TEST(Units, PrimeField) { EXPECT_EQ(count(units_of(*prime_field(5))), 4u); }

TEST(Units, GeneralLinearGroup)
{
	auto m = matrix_ring(2, 2);
	Subset expected(m->size(), false);
	for (int a = 0; a < 2; ++a)
		for (int b = 0; b < 2; ++b)
			for (int c = 0; c < 2; ++c)
				for (int d = 0; d < 2; ++d)
					if ((a * d - b * c) % 2 != 0)
						expected[at(*m, matrix(a, b, c, d))] = true;
	EXPECT_EQ(count(expected), 6u);
	EXPECT_EQ(units_of(*m), expected);
}

TEST(Units, DualNumbers)
{
	auto r = truncated_poly(2, 2);
	EXPECT_EQ(units_of(*r), subset(*r, {"1", "1+x"}));
}

TEST(LocalEquivalences, DualNumbersLocal)
{
	auto r = truncated_poly(2, 2);
	auto report = check_local_equivalences(*r);
	EXPECT_TRUE(report.local());
	EXPECT_TRUE(report.consistent());
	EXPECT_EQ(report.non_units, subset(*r, {"0", "x"}));
	EXPECT_EQ(report.maximal_left_enumerated, std::optional<std::size_t>(1));
}

TEST(LocalEquivalences, MatrixRingNotLocal)
{
	auto m = matrix_ring(2, 2);
	auto report = check_local_equivalences(*m);
	EXPECT_FALSE(report.local());
	EXPECT_TRUE(report.consistent());
	ASSERT_TRUE(report.witness.has_value());
	const Elem w = *report.witness;
	const Subset units = units_of(*m);
	EXPECT_FALSE(units[w]);
	EXPECT_FALSE(units[m->sub(m->one(), w)]);
	EXPECT_EQ(m->label(w), matrix(1, 0, 0, 0));
	// Both e11 and e22 lie in proper one-sided ideals, which cannot share a
	// unique maximal one.
	EXPECT_GT(*report.maximal_left_enumerated, 1u);
}

TEST(LocalEquivalences, FieldIsLocal)
{
	auto f = prime_field(3);
	auto report = check_local_equivalences(*f);
	EXPECT_TRUE(report.local());
	EXPECT_EQ(report.non_units, subset(*f, {"0"}));
}

TEST(TwoSidedIdeal, Examples)
{
	auto m = matrix_ring(2, 2);
	auto ideal = two_sided_ideal(*m, at(*m, matrix(0, 1, 0, 0)));
	EXPECT_EQ(ideal, m->full());
	EXPECT_TRUE(ideal[m->one()]);
	EXPECT_EQ(count(two_sided_ideal(*m, m->zero())), 1u);
}

TEST(TwoSidedIdeal, EveryNonzeroMatrixGeneratesMatrixRing)
{
	auto m = matrix_ring(3, 2);
	std::size_t checked = 0;
	for (Elem x = 0; x < m->size(); ++x) {
		if (x == m->zero())
			continue;
		ASSERT_EQ(two_sided_ideal(*m, x), m->full()) << m->label(x);
		++checked;
	}
	EXPECT_EQ(checked, 80u);
}

TEST(TwoSidedIdeal, OneSidedClosuresAreSmaller)
{
	auto m = matrix_ring(2, 2);
	const Elem e11 = at(*m, matrix(1, 0, 0, 0));
	Subset seed(m->size(), false);
	seed[e11] = true;
	// R e11: matrices with zero second column.
	EXPECT_EQ(ideal_closure(*m, seed, Side::Left),
	          subset(*m, {matrix(0, 0, 0, 0), matrix(1, 0, 0, 0), matrix(0, 0, 1, 0), matrix(1, 0, 1, 0)}));
	EXPECT_EQ(count(ideal_closure(*m, seed, Side::Right)), 4u);
}

TEST(UniqueMaximal, MatrixRingHasZeroIdeal)
{
	auto m = matrix_ring(2, 2);
	auto report = unique_maximal_two_sided(*m);
	ASSERT_TRUE(report.unique());
	EXPECT_EQ(report.maximal[0], subset(*m, {matrix(0, 0, 0, 0)}));
	EXPECT_FALSE(check_local_equivalences(*m).local());
}

TEST(UniqueMaximal, DualNumbers)
{
	auto r = truncated_poly(2, 2);
	auto report = unique_maximal_two_sided(*r);
	ASSERT_TRUE(report.unique());
	EXPECT_EQ(report.maximal[0], subset(*r, {"0", "x"}));
}

TEST(UniqueMaximal, UpperTriangularHasTwo)
{
	auto r = upper_triangular(2, 2);
	auto report = unique_maximal_two_sided(*r);
	EXPECT_FALSE(report.unique());
	EXPECT_EQ(report.maximal.size(), 2u);
}

TEST(Simple, Examples)
{
	EXPECT_TRUE(is_simple(row_vectors(2, 2)));
	EXPECT_FALSE(is_simple(regular_module(truncated_poly(2, 2))));
	EXPECT_FALSE(is_simple(zero_module(prime_field(2))));
	EXPECT_TRUE(is_simple(regular_module(prime_field(7))));
	EXPECT_FALSE(is_simple(regular_module(matrix_ring(2, 2))));
}

TEST(Simple, RejectsBadModules)
{
	auto f2 = prime_field(2);
	// Action by 1 must be the identity.
	EXPECT_THROW(FiniteModule(f2, {"0", "1"}, {0, 1, 1, 0}, {0, 0, 0, 0}, 0), InvalidArgument);
}

TEST(Pullback, Examples)
{
	auto scalars = simple_pullback_check(unit_map(2, matrix_ring(2, 2)), row_vectors(2, 2));
	EXPECT_FALSE(scalars.source_simple);
	EXPECT_TRUE(scalars.target_simple);
	EXPECT_TRUE(scalars.holds());

	auto identity = simple_pullback_check(identity_map(matrix_ring(3, 2)), row_vectors(3, 2));
	EXPECT_TRUE(identity.source_simple);
	EXPECT_TRUE(identity.holds());

	auto residue = pullback(regular_module(prime_field(2)), augmentation_map(2, 2));
	EXPECT_EQ(residue.size(), 2u);
	auto inclusion = simple_pullback_check(unit_map(2, truncated_poly(2, 2)), residue);
	EXPECT_TRUE(inclusion.source_simple);
	EXPECT_TRUE(inclusion.target_simple);
}

TEST(Pullback, RejectsNonHomomorphisms)
{
	auto f2 = prime_field(2);
	auto r = truncated_poly(2, 2);
	EXPECT_THROW(RingMap(f2, r, {at(*r, "0"), at(*r, "x")}), PreconditionFailure);
	EXPECT_THROW(RingMap(f2, r, {at(*r, "0")}), PreconditionFailure);
	EXPECT_THROW(pullback(row_vectors(2, 2), identity_map(r)), PreconditionFailure);
}

TEST(LabProperties, LocalEquivalencesAgree)
{
	for (const auto &r : standard_suite()) {
		auto report = check_local_equivalences(*r);
		EXPECT_TRUE(report.consistent()) << r->name();
		if (r->size() <= 16) {
			EXPECT_TRUE(report.maximal_left_enumerated.has_value()) << r->name();
		}
	}
}

TEST(LabProperties, LocalImpliesUniqueMaximal)
{
	std::size_t converse_failures = 0;
	for (const auto &r : standard_suite()) {
		const bool local = check_local_equivalences(*r).local();
		const bool unique = unique_maximal_two_sided(*r).unique();
		EXPECT_TRUE(!local || unique) << r->name();
		converse_failures += unique && !local ? 1 : 0;
	}
	EXPECT_GE(converse_failures, 2u);
}

TEST(LabProperties, ForwardSimplicity)
{
	for (const auto &[f, m] : map_module_pairs()) {
		auto report = simple_pullback_check(f, m);
		EXPECT_TRUE(report.holds()) << f.source->name() << " -> " << f.target->name();
	}
}

TEST(LabProperties, UnitsClosedUnderProductAndInverse)
{
	for (const auto &r : standard_suite()) {
		const Subset u = units_of(*r);
		for (Elem a = 0; a < r->size(); ++a)
			for (Elem b = 0; b < r->size(); ++b)
				if (u[a] && u[b]) {
					ASSERT_TRUE(u[r->mul(a, b)]) << r->name();
				}
		ASSERT_TRUE(u[r->one()]);
		ASSERT_FALSE(u[r->zero()]);
	}
}
