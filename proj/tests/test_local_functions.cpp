#include "support/fixtures.hpp"

#include "pointed/comm_oracle.hpp"
#include "pointed/error.hpp"
#include "pointed/local_functions.hpp"

#include <gtest/gtest.h>

using namespace pointed;
using namespace fixtures;

namespace {

std::vector<Scalar> flatten(const EndElement &x)
{
	std::vector<Scalar> out;
	auto coords = x.algebra()->coordinates(x);
	for (const auto &slot : x.algebra()->slot_basis()) {
		auto it = coords.find(slot);
		out.push_back(it == coords.end() ? Scalar::zero(x.algebra()->field()) : it->second);
	}
	return out;
}

std::size_t rank_of(const std::vector<std::vector<Scalar>> &rows, const FieldSpec &field)
{
	if (rows.empty())
		return 0;
	Matrix m(rows.size(), rows[0].size(), field);
	for (std::size_t r = 0; r < rows.size(); ++r)
		for (std::size_t c = 0; c < rows[r].size(); ++c)
			m(r, c) = rows[r][c];
	return m.rank();
}

/// Span of all words of length 1..max_len in the seeds: the non-unital
/// algebra they generate when products of more than max_len factors vanish.
std::size_t word_span_rank(const std::vector<EndElement> &seeds, std::size_t max_len)
{
	std::vector<EndElement> layer = seeds, all = seeds;
	for (std::size_t len = 2; len <= max_len; ++len) {
		std::vector<EndElement> next;
		for (const auto &w : layer)
			for (const auto &s : seeds)
				next.push_back(w * s);
		all.insert(all.end(), next.begin(), next.end());
		layer = std::move(next);
	}
	std::vector<std::vector<Scalar>> rows;
	for (const auto &w : all)
		rows.push_back(flatten(w));
	return rank_of(rows, seeds.at(0).algebra()->field());
}

std::vector<Seed> seeds_of(const std::vector<EndElement> &xs)
{
	std::vector<Seed> out;
	for (std::size_t i = 0; i < xs.size(); ++i)
		out.push_back({xs[i], expr::name("s" + std::to_string(i + 1))});
	return out;
}

} // namespace

TEST(GeneratedSubalgebra, EmptySeedsGiveBase)
{
	auto e = EndAlgebra::build(free_algebra({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}, 2), {1, 1, 1});
	EXPECT_EQ(generated_subalgebra(e, {}).dimension(), 3u);
}

TEST(GeneratedSubalgebra, SingleArrow)
{
	auto h = free_algebra({{0, 1}, {1, 0}}, 2);
	auto e = EndAlgebra::build(h, {1, 1});
	auto basis = generated_subalgebra(e, seeds_of({e->embed(h->arrow(1, 2, 1))}));
	EXPECT_EQ(basis.dimension(), 3u);
	EXPECT_TRUE(basis.contains(e->embed(h->arrow(1, 2, 1))));
	EXPECT_FALSE(basis.contains(e->embed(h->arrow(2, 1, 1))));
}

TEST(GeneratedSubalgebra, LoopPowersExhaust)
{
	auto h = one_loop(3);
	auto e = EndAlgebra::build(h, {1});
	auto basis = generated_subalgebra(e, seeds_of({e->embed(h->arrow(1, 1, 1))}));
	EXPECT_EQ(basis.dimension(), 4u);
	EXPECT_EQ(basis.dimension_by_degree(), (std::vector<std::size_t>{1, 1, 1, 1}));
}

TEST(GeneratedSubalgebra, MixedAmbientsRejected)
{
	auto e1 = EndAlgebra::build(one_loop(3), {1});
	auto e2 = EndAlgebra::build(one_loop(2), {1});
	EXPECT_THROW(generated_subalgebra(e1, seeds_of({e2->identity()})), AlgebraMismatch);
}

TEST(GeneratedSubalgebra, ExpressionsReplay)
{
	auto h = free_algebra({{1, 1}, {1, 0}}, 3);
	auto e = EndAlgebra::build(h, {1, 1});
	auto basis = generated_subalgebra(
	    e, seeds_of({e->embed(el(h, "t(1,1,1) + t(1,2,1)")), e->embed(el(h, "t(2,1,1)"))}));
	EndBindings names{{"s1", e->embed(el(h, "t(1,1,1) + t(1,2,1)"))},
	                  {"s2", e->embed(el(h, "t(2,1,1)"))}};
	for (std::size_t i = 0; i < basis.dimension(); ++i)
		EXPECT_EQ(eval_end(basis.expression(i), e, names), basis.elements()[i]);
}

TEST(LocalFunctionRing, OnePointWithHint)
{
	auto model = oracle::build_commutative_model(1, {{0}}, 3);
	auto pres = model.presentation({parse("1 - x1")});
	auto basis = local_function_ring(pres);
	EXPECT_EQ(basis.dimension(), 4u);
	auto series = model.ambient->embed(el(model.algebra, "1 + t(1,1,1) + t(1,1,1)^2 + t(1,1,1)^3"));
	EXPECT_TRUE(basis.contains(series));
	EXPECT_EQ(end_invert(pres.image(parse("1 - x1"))), series);
}

TEST(LocalFunctionRing, NilpotentGeneratorsMatchWordSpan)
{
	auto h = free_algebra({{1, 1}, {1, 1}}, 3);
	auto e = EndAlgebra::build(h, {1, 1});
	AlgebraPresentation pres;
	pres.ambient = e;
	pres.generators = {"a", "b"};
	pres.rho = {e->embed(el(h, "t(1,2,1)")), e->embed(el(h, "t(2,1,1) + t(2,2,1)*t(2,1,1)"))};
	auto basis = local_function_ring(pres);
	// Nilpotent seeds: words of length > N vanish.
	EXPECT_EQ(basis.dimension(), 2 + word_span_rank(pres.rho, 4));
}

TEST(LocalFunctionRing, UnitGeneratorsAreInverted)
{
	auto h = one_loop(3);
	auto e = EndAlgebra::build(h, {2});
	AlgebraPresentation pres;
	pres.ambient = e;
	pres.generators = {"g"};
	pres.rho = {e->identity() + end_el(e, {"0", "t(1,1,1)", "t(1,1,1)^2", "0"})};
	auto basis = local_function_ring(pres);
	EXPECT_TRUE(basis.contains(end_invert(pres.rho[0])));
	bool inverse_seeded = false;
	for (std::size_t i = 0; i < basis.dimension(); ++i)
		inverse_seeded = inverse_seeded || describe(basis.expression(i)) == "inv(g)";
	EXPECT_TRUE(inverse_seeded || basis.contains(end_invert(pres.rho[0])));
}

TEST(LocalFunctionRing, Validation)
{
	auto model = oracle::build_commutative_model(1, {{0}, {1}}, 2);
	EXPECT_THROW(local_function_ring(model.presentation({parse("x1")})), NonUnitError);
	auto pres = model.presentation();
	pres.relators.push_back(parse("x1^2"));
	EXPECT_THROW(validate(pres), PreconditionFailure);
	pres = model.presentation();
	pres.rho.pop_back();
	EXPECT_THROW(validate(pres), PreconditionFailure);
	pres = model.presentation({parse("y + 1")});
	EXPECT_THROW(validate(pres), UnboundName);
}

TEST(IdempotenceCheck, Examples)
{
	auto h = one_loop(3);
	auto e = EndAlgebra::build(h, {1});
	auto t = e->embed(h->arrow(1, 1, 1));
	EXPECT_TRUE(idempotence_check(generated_subalgebra(e, seeds_of({t}))));
	EXPECT_TRUE(idempotence_check(generated_subalgebra(e, {})));
	// span{1, t} is not closed: t^2 is missing.
	auto partial = SubalgebraBasis::span_of(e, seeds_of({e->identity(), t}));
	EXPECT_FALSE(idempotence_check(partial));
}

TEST(IdempotenceCheck, PresentationMustShareAmbient)
{
	auto model = oracle::build_commutative_model(1, {{0}}, 3);
	auto basis = local_function_ring(model.presentation());
	EXPECT_TRUE(idempotence_check(basis, model.presentation()));
	auto other = oracle::build_commutative_model(1, {{0}}, 2);
	EXPECT_THROW(idempotence_check(basis, other.presentation()), AlgebraMismatch);
}

TEST(InducedMorphism, Identity)
{
	auto model = oracle::build_commutative_model(2, {{0, 0}, {1, 2}}, 2);
	auto pres = model.presentation({parse("x1 - 3")});
	auto phi = induced_morphism({{"x1", parse("x1")}, {"x2", parse("x2")}}, pres, pres);
	EXPECT_TRUE(phi.contained);
	for (std::size_t i = 0; i < phi.images.size(); ++i) {
		ASSERT_TRUE(phi.coordinates[i].has_value());
		for (std::size_t j = 0; j < phi.coordinates[i]->size(); ++j)
			EXPECT_EQ((*phi.coordinates[i])[j], i == j ? Scalar::one(Q()) : Scalar::zero(Q()));
	}
}

TEST(InducedMorphism, PolynomialInclusion)
{
	std::vector<oracle::Point> pa{{0}, {1}}, pb{{0, 5}, {1, -1}};
	auto a = oracle::build_commutative_model(1, pa, 2);
	auto b = oracle::build_commutative_model(2, pb, 2);
	std::vector<Element> images;
	for (const auto &arrow : a.algebra->quiver().arrows())
		images.push_back(b.algebra->arrow(arrow.source, arrow.target, 1));
	AlgebraMorphism psi(a.algebra, b.algebra, images);
	auto phi = induced_morphism({{"x1", parse("x1")}}, a.presentation({parse("x1 - 2")}),
	                            b.presentation(), psi);
	EXPECT_TRUE(phi.contained);
	// Inversion of x1 - 2 on the B side agrees with the Taylor oracle.
	std::size_t inverses = 0;
	for (std::size_t i = 0; i < phi.source_basis.dimension(); ++i)
		if (describe(phi.source_basis.expression(i)) == "inv(sub(x1, 2))") {
			++inverses;
			for (std::size_t v = 0; v < 2; ++v)
				EXPECT_EQ(b.component(phi.images[i], v).to_string(),
				          oracle::taylor_invert(oracle::Polynomial::parse("x1 - 2", 2), pb[v], 2)
				              .to_string());
		}
	EXPECT_EQ(inverses, 1u);
	// Augmentation is preserved.
	for (std::size_t i = 0; i < phi.images.size(); ++i) {
		auto before = block_augment(phi.source_basis.elements()[i]);
		auto after = block_augment(phi.images[i]);
		EXPECT_EQ(before, after);
	}
}

TEST(InducedMorphism, InverseOfNonUnitRejected)
{
	auto a = oracle::build_commutative_model(1, {{0}}, 2);
	auto pres = a.presentation({parse("1 - x1")});
	// x1 -> 1 makes 1 - x1 vanish.
	AlgebraPresentation target = pres;
	target.rho = {a.ambient->identity()};
	target.invert_hints.clear();
	try {
		induced_morphism({{"x1", parse("x1")}}, pres, target);
		FAIL();
	} catch (const PreconditionFailure &e) {
		EXPECT_NE(std::string(e.what()).find("non-unit"), std::string::npos) << e.what();
	}
}

TEST(InducedMorphism, IncompatibleRho)
{
	auto b = oracle::build_commutative_model(2, {{0, 0}}, 2);
	auto pres = b.presentation();
	try {
		induced_morphism({{"x1", parse("x2")}, {"x2", parse("x1")}}, pres, pres);
		FAIL();
	} catch (const PreconditionFailure &e) {
		EXPECT_NE(std::string(e.what()).find("incompatible"), std::string::npos) << e.what();
	}
	EXPECT_THROW(induced_morphism({{"x1", parse("x1")}}, pres, pres), PreconditionFailure);
}

TEST(SelfCompletion, Examples)
{
	Rng rng(51);
	EXPECT_TRUE(self_completion_check(tangent_algebra({{1, 1}, {1, 1}}), rng));
	EXPECT_TRUE(self_completion_check(free_algebra({{0}}, 2), rng));
	EXPECT_TRUE(self_completion_check(one_loop(3), rng));
	EXPECT_TRUE(self_completion_check(commuting_loops(3, F(5)), rng, 50));
}

TEST(LocalFunctionProperties, ClosureSoundnessAndIdempotence)
{
	Rng rng(52);
	for (int i = 0; i < 30; ++i) {
		auto pres = random_presentation(rng);
		auto basis = local_function_ring(pres);
		for (const auto &x : basis.elements())
			for (const auto &y : basis.elements())
				ASSERT_TRUE(basis.contains(x * y));
		for (const auto &g : pres.rho)
			ASSERT_TRUE(basis.contains(g));
		for (std::size_t v = 1; v <= pres.ambient->vertices(); ++v)
			ASSERT_TRUE(basis.contains(pres.ambient->idempotent(v)));
		ASSERT_TRUE(idempotence_check(basis, pres));
	}
}

TEST(LocalFunctionProperties, Monotonicity)
{
	Rng rng(53);
	for (int i = 0; i < 30; ++i) {
		auto pres = random_presentation(rng);
		std::vector<Seed> seeds;
		std::size_t last = generated_subalgebra(pres.ambient, seeds).dimension();
		for (std::size_t k = 0; k < 3; ++k) {
			seeds.push_back({random_end_element(pres.ambient, rng, 3), expr::name("s")});
			std::size_t now = generated_subalgebra(pres.ambient, seeds).dimension();
			ASSERT_GE(now, last);
			last = now;
		}
	}
}

TEST(LocalFunctionProperties, Augmentedness)
{
	Rng rng(54);
	for (int i = 0; i < 30; ++i) {
		auto pres = random_presentation(rng);
		auto basis = local_function_ring(pres);
		const FieldSpec field = pres.ambient->field();
		auto flat_blocks = [&](const EndElement &x) {
			std::vector<Scalar> out;
			for (const auto &b : block_augment(x))
				for (std::size_t r = 0; r < b.rows(); ++r)
					for (std::size_t c = 0; c < b.cols(); ++c)
						out.push_back(b(r, c));
			return out;
		};
		std::vector<std::vector<Scalar>> image;
		for (const auto &x : basis.elements())
			image.push_back(flat_blocks(x));

		// Matrix algebra generated by the augmented seeds and the block
		// idempotents, closed by dense products until the rank settles.
		std::vector<EndElement> gens;
		for (std::size_t v = 1; v <= pres.ambient->vertices(); ++v)
			gens.push_back(pres.ambient->idempotent(v));
		for (const auto &g : pres.rho)
			gens.push_back(pres.ambient->lift(block_augment(g)));
		for (const auto &h : pres.invert_hints)
			gens.push_back(pres.ambient->lift(block_augment(end_invert(pres.image(h)))));
		for (const auto &g : pres.rho)
			if (end_classify(g).is_unit())
				gens.push_back(pres.ambient->lift(block_augment(end_invert(g))));
		std::vector<std::vector<Scalar>> rows;
		for (const auto &g : gens)
			rows.push_back(flat_blocks(g));
		std::size_t rank = rank_of(rows, field);
		while (true) {
			std::vector<EndElement> more = gens;
			for (const auto &a : gens)
				for (const auto &b : gens)
					more.push_back(a * b);
			rows.clear();
			for (const auto &g : more)
				rows.push_back(flat_blocks(g));
			std::size_t next = rank_of(rows, field);
			gens = std::move(more);
			if (next == rank)
				break;
			rank = next;
		}
		ASSERT_EQ(rank_of(image, field), rank);
	}
}
