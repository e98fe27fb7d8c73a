#include "support/fixtures.hpp"

#include "pointed/error.hpp"
#include "pointed_io.hpp"

#include <gtest/gtest.h>

using namespace pointed;
using namespace fixtures;
using io::json;

namespace {

const std::string data = std::string(POINTED_DATA) + "/cli";

} // namespace

TEST(LoadAlgebra, CountsAndArrowsAgree)
{
	auto a = io::load_algebra(json::parse(R"j({"arrow_counts": [[0, 1], [1, 0]], "order": 2})j"));
	auto b = io::load_algebra(io::read_json(data + "/two_cycle.json"));
	EXPECT_EQ(a->quiver(), b->quiver());
	EXPECT_EQ(a->dimension(), 6u);
}

TEST(LoadAlgebra, Overrides)
{
	auto h = io::load_algebra(io::read_json(data + "/loop.json"), F(7), 5);
	EXPECT_EQ(h->field(), F(7));
	EXPECT_EQ(h->order(), 5u);
	EXPECT_EQ(io::load_algebra(io::read_json(data + "/commuting.json"))->dimension(), 10u);
}

TEST(LoadAlgebra, Errors)
{
	EXPECT_THROW(io::load_algebra(io::read_json(data + "/broken.json")), InvalidArgument);
	EXPECT_THROW(io::read_json(data + "/missing.json"), InvalidArgument);
	EXPECT_THROW(io::load_algebra(json::parse(R"j({"vertices": 1, "arrows": [[1, 1]], "order": 2})j")),
	             InvalidArgument);
	EXPECT_THROW(io::load_algebra(json::parse(R"j({"vertices": 1, "arrows": [[1, 2, 1]], "order": 2})j")),
	             InvalidArgument);
	EXPECT_THROW(io::load_algebra(json::parse(R"j({"arrow_counts": [[1]], "order": -1})j")), InvalidArgument);
	EXPECT_THROW(io::load_algebra(json::parse(R"j({"arrow_counts": [[1]], "order": 2, "relations": ["t(1,1,1)"]})j")),
	             InvalidArgument);
	EXPECT_THROW(io::load_algebra(json::parse(R"j({"field": "fp:6", "arrow_counts": [[1]], "order": 2})j")),
	             InvalidArgument);
}

TEST(LoadEndElement, Shapes)
{
	auto e = EndAlgebra::build(one_loop(2), {2});
	auto x = io::load_end_element(json::parse(R"j([["1", "t(1,1,1)"], [0, 1]])j"), e);
	EXPECT_EQ(x, end_el(e, {"1", "t(1,1,1)", "0", "1"}));
	EXPECT_EQ(io::to_json(x), json::parse(R"j([["e(1)", "t(1,1,1)"], ["0", "e(1)"]])j"));
	EXPECT_THROW(io::load_end_element(json::parse(R"j([["1"]])j"), e), InvalidArgument);
	EXPECT_THROW(io::load_end_element(json::parse(R"j([["1", "0"], ["0"]])j"), e), InvalidArgument);
	EXPECT_THROW(io::load_end_element(json::parse(R"j([["1", true], ["0", "1"]])j"), e), InvalidArgument);
}

TEST(LoadPresentation, RelativeAlgebraFile)
{
	auto p = io::load_presentation(io::read_json(data + "/one_point.json"), data);
	EXPECT_EQ(p.generators, (std::vector<std::string>{"x"}));
	EXPECT_EQ(p.invert_hints.size(), 1u);
	EXPECT_EQ(local_function_ring(p).dimension(), 4u);
	auto blocks = io::load_presentation(io::read_json(data + "/blocks.json"), data);
	EXPECT_EQ(blocks.ambient->dims(), (std::vector<std::size_t>{2}));
}

TEST(LoadPresentation, Errors)
{
	auto spec = io::read_json(data + "/one_point.json");
	auto missing = spec;
	missing["rho"] = json::object();
	EXPECT_THROW(io::load_presentation(missing, data), InvalidArgument);
	auto extra = spec;
	extra["rho"]["y"] = "0";
	EXPECT_THROW(io::load_presentation(extra, data), InvalidArgument);
	EXPECT_THROW(io::load_presentation(spec, data + "/nowhere"), InvalidArgument);
}

TEST(LoadModel, Points)
{
	auto m = io::load_model(json::parse(R"j({"variables": 2, "points": [["1/2", 0], [1, "-3"]], "order": 2})j"));
	EXPECT_EQ(m.points[0][0], mpq_class(1, 2));
	EXPECT_EQ(m.points[1][1], mpq_class(-3));
	EXPECT_THROW(io::load_model(json::parse(R"j({"variables": 1, "points": [["0"], ["0"]], "order": 2})j")),
	             InvalidArgument);
	EXPECT_THROW(io::load_model(json::parse(R"j({"variables": 1, "points": [["x"]], "order": 2})j")), Error);
}

TEST(ResultJson, Errors)
{
	auto parse_error = io::error(ParseError("bad", 2, 5));
	EXPECT_EQ(parse_error["error"]["kind"], "parse_error");
	EXPECT_EQ(parse_error["error"]["line"], 2);
	EXPECT_EQ(parse_error["error"]["column"], 5);
	auto non_unit = io::error(NonUnitError({1, 3}));
	EXPECT_EQ(non_unit["vanishing_set"], json::parse("[1, 3]"));
	EXPECT_EQ(non_unit["status"], "error");
	EXPECT_EQ(io::error(std::runtime_error("x"))["error"]["kind"], "usage");
	EXPECT_EQ(io::ok(3), json::parse(R"j({"status": "ok", "value": 3})j"));
}

TEST(ArgumentLists, Parse)
{
	EXPECT_EQ(io::parse_list("1,2,3"), (std::vector<std::size_t>{1, 2, 3}));
	EXPECT_EQ(io::parse_counts("0,1;1,0"), (std::vector<std::vector<std::size_t>>{{0, 1}, {1, 0}}));
	EXPECT_THROW(io::parse_list("1,x"), InvalidArgument);
	EXPECT_THROW(io::parse_list("-1"), InvalidArgument);
	EXPECT_THROW(io::parse_list(""), InvalidArgument);
	EXPECT_THROW(io::parse_counts(""), InvalidArgument);
}
