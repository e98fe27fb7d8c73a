#include "support/fixtures.hpp"

#include "pointed/error.hpp"
#include "pointed/pointed.hpp"

#include <gtest/gtest.h>

using namespace pointed;
using namespace fixtures;

namespace {

AlgebraHandle r2() { return free_algebra({{1, 1}, {1, 1}}, 3); }

std::vector<Scalar> ints(std::initializer_list<long> v, const FieldSpec &f = Q())
{
	std::vector<Scalar> out;
	for (long x : v)
		out.push_back(Scalar::from_int(x, f));
	return out;
}

} // namespace

TEST(Augment, ReadsDegreeZero)
{
	auto h = r2();
	EXPECT_EQ(augment(el(h, "3*e(1) + e(2) + t(1,2,1)")), ints({3, 1}));
	EXPECT_EQ(augment(el(one_loop(2), "t(1,1,1)")), ints({0}));
	EXPECT_EQ(augment(h->one()), ints({1, 1}));
}

TEST(Augment, Lift)
{
	auto h = r2();
	EXPECT_EQ(lift(*h, ints({2, -1})), el(h, "2*e(1) - e(2)"));
	EXPECT_THROW(lift(*h, ints({1})), InvalidArgument);
}

TEST(MaximalIdeals, Membership)
{
	auto h = r2();
	EXPECT_TRUE(in_maximal_ideal(el(h, "t(1,1,1)"), 1));
	EXPECT_TRUE(in_maximal_ideal(el(h, "t(1,1,1)"), 2));
	EXPECT_TRUE(in_maximal_ideal(el(h, "e(1)"), 2));
	EXPECT_FALSE(in_maximal_ideal(el(h, "e(1)"), 1));
	EXPECT_THROW(in_maximal_ideal(h->one(), 0), InvalidArgument);
	EXPECT_THROW(in_maximal_ideal(h->one(), 3), InvalidArgument);
}

TEST(Classify, Examples)
{
	auto h = r2();
	auto x = el(h, "3*e(1) + e(2) + t(1,2,1)");
	EXPECT_TRUE(classify(x).is_unit());
	auto u = invert(x);
	EXPECT_EQ(x * u, h->one());
	EXPECT_EQ(u * x, h->one());
	EXPECT_EQ(classify(el(h, "t(1,1,1)")).vanishing, (std::vector<std::size_t>{1, 2}));
	EXPECT_EQ(classify(el(h, "e(1)")).vanishing, (std::vector<std::size_t>{2}));
}

TEST(Invert, GeometricSeries)
{
	auto h = one_loop(3);
	EXPECT_EQ(invert(el(h, "1 - t(1,1,1)")), el(h, "1 + t(1,1,1) + t(1,1,1)^2 + t(1,1,1)^3"));
}

TEST(Invert, Scalar)
{
	auto h = one_loop(3);
	EXPECT_EQ(invert(el(h, "2")), el(h, "1/2"));
	auto f = one_loop(3, F(5));
	EXPECT_EQ(invert(el(f, "2")), el(f, "3"));
}

TEST(Invert, NonComposableSquare)
{
	auto h = free_algebra({{0, 1}, {0, 0}}, 3);
	auto x = el(h, "e(1) + e(2) - t(1,2,1)");
	auto u = invert(x);
	EXPECT_EQ(u, el(h, "e(1) + e(2) + t(1,2,1)"));
	EXPECT_EQ(x * u, h->one());
	EXPECT_EQ(u * x, h->one());
}

TEST(Invert, NonUnitReportsVanishingSet)
{
	auto h = r2();
	try {
		invert(el(h, "e(2) + t(1,2,1)"));
		FAIL() << "expected NonUnitError";
	} catch (const NonUnitError &e) {
		EXPECT_EQ(e.vanishing_set(), (std::vector<std::size_t>{1}));
	}
}

TEST(Invert, OneSidedSeriesAgree)
{
	auto h = r2();
	auto x = el(h, "2*e(1) - e(2) + t(1,2,1) + 3*t(1,1,1)*t(1,2,1) - t(2,1,1)");
	EXPECT_EQ(right_inverse(x), left_inverse(x));
	EXPECT_EQ(x * right_inverse(x), h->one());
	EXPECT_EQ(left_inverse(x) * x, h->one());
}

TEST(Tangent, Dimensions)
{
	auto t = tangent_algebra({{1, 1}, {1, 1}});
	EXPECT_EQ(t->dimension(), 6u);
	EXPECT_EQ(t->order(), 1u);
	EXPECT_EQ(tangent_algebra({{1}})->dimension(), 2u);
	auto k = tangent_algebra({{0}});
	EXPECT_EQ(k->dimension(), 1u);
	EXPECT_EQ(k->one(), el(k, "e(1)"));
	// T has (ker pi)^2 = 0.
	EXPECT_TRUE((el(t, "t(1,2,1)") * el(t, "t(2,1,1)")).is_zero());
}

TEST(PointedProperties, Trichotomy)
{
	Rng rng(21);
	for (const auto &h : property_suite())
		for (int i = 0; i < 1000 / 8; ++i) {
			auto x = random_element(h, rng, 5);
			auto c = classify(x);
			if (c.is_unit()) {
				auto u = invert(x);
				ASSERT_EQ(x * u, h->one());
				ASSERT_EQ(u * x, h->one());
			} else {
				for (auto v : c.vanishing)
					ASSERT_TRUE(augment(x)[v - 1].is_zero());
				for (std::size_t v = 1; v <= h->vertices(); ++v)
					ASSERT_EQ(in_maximal_ideal(x, v),
					          std::find(c.vanishing.begin(), c.vanishing.end(), v) !=
					              c.vanishing.end());
			}
		}
}

TEST(PointedProperties, OneSidedInversesCoincide)
{
	Rng rng(22);
	for (const auto &h : property_suite())
		for (int i = 0; i < 60; ++i) {
			auto x = random_unit(h, rng, 5);
			ASSERT_EQ(right_inverse(x), left_inverse(x));
		}
}

TEST(PointedProperties, SingleVertexIsLocal)
{
	Rng rng(23);
	for (const auto &h : property_suite()) {
		if (h->vertices() != 1)
			continue;
		for (int i = 0; i < 250; ++i) {
			auto x = random_element(h, rng, 5);
			ASSERT_TRUE(classify(x).is_unit() || classify(h->one() - x).is_unit());
		}
	}
}

TEST(PointedProperties, InverseIsInvolution)
{
	Rng rng(24);
	for (const auto &h : property_suite())
		for (int i = 0; i < 25; ++i) {
			auto x = random_unit(h, rng, 5);
			ASSERT_EQ(invert(invert(x)), x);
		}
}

TEST(PointedProperties, AugmentationIsMultiplicative)
{
	Rng rng(25);
	for (const auto &h : property_suite()) {
		for (int i = 0; i < 200; ++i) {
			auto x = random_element(h, rng, 5), y = random_element(h, rng, 5);
			auto ax = augment(x), ay = augment(y), axy = augment(x * y);
			for (std::size_t v = 0; v < h->vertices(); ++v)
				ASSERT_EQ(axy[v], ax[v] * ay[v]);
			// m_i is a two-sided ideal.
			for (std::size_t v = 1; v <= h->vertices(); ++v)
				if (in_maximal_ideal(x, v)) {
					ASSERT_TRUE(in_maximal_ideal(x * y, v));
					ASSERT_TRUE(in_maximal_ideal(y * x, v));
				}
		}
		for (const auto &a : augment(h->one()))
			ASSERT_TRUE(a.is_one());
	}
}
