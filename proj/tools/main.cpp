// pointed: command-line front end. Every command builds a JSON result; with
// --json it is printed verbatim, otherwise rendered for reading. Failures
// always print a JSON error object and exit nonzero.

#include "pointed_io.hpp"

#include "pointed/error.hpp"
#include "pointed/expression.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>

using namespace pointed;
using io::json;

namespace {

struct Session
{
	bool json_output = false;
	std::string field;
	std::optional<std::size_t> order;
	std::string algebra_file;
	std::string counts;
	std::string dims;
};

std::optional<FieldSpec> field_of(const Session &s)
{
	if (s.field.empty())
		return std::nullopt;
	return FieldSpec::parse(s.field);
}

AlgebraHandle session_algebra(const Session &s)
{
	if (!s.algebra_file.empty())
		return io::load_algebra(io::read_json(s.algebra_file), field_of(s), s.order);
	if (!s.counts.empty()) {
		if (!s.order)
			throw InvalidArgument("--counts needs --order");
		return TruncatedAlgebra::build(Quiver::from_counts(io::parse_counts(s.counts)),
		                               field_of(s).value_or(FieldSpec::rationals()), *s.order);
	}
	throw InvalidArgument("no algebra: give --algebra <file> or --counts <l_11,..;..> with --order");
}

EndHandle session_ambient(const Session &s)
{
	auto algebra = session_algebra(s);
	std::vector<std::size_t> dims =
	    s.dims.empty() ? std::vector<std::size_t>(algebra->vertices(), 1) : io::parse_list(s.dims);
	return EndAlgebra::build(algebra, std::move(dims));
}

/// JSON text, or @path to a file holding it.
json json_argument(const std::string &text)
{
	if (!text.empty() && text[0] == '@')
		return io::read_json(text.substr(1));
	try {
		return json::parse(text);
	} catch (const json::parse_error &e) {
		throw InvalidArgument(std::string("argument is not JSON: ") + e.what());
	}
}

json algebra_summary(const AlgebraHandle &h)
{
	json by_degree = json::array();
	for (std::size_t d = 0; d <= h->order(); ++d)
		by_degree.push_back(h->dimension(d));
	json arrows = json::array();
	for (const auto &a : h->quiver().arrows())
		arrows.push_back({a.source, a.target, a.label});
	json basis = json::array();
	for (std::size_t d = 0; d <= h->order(); ++d)
		for (const auto &p : h->monomial_basis(d))
			basis.push_back(p.to_string(h->quiver()));
	return json{{"field", h->field().to_string()},
	            {"vertices", h->vertices()},
	            {"order", h->order()},
	            {"arrows", arrows},
	            {"relations", h->relations().size()},
	            {"dimension_by_degree", by_degree},
	            {"basis", basis}};
}

json with_dimension(json result, std::size_t dimension)
{
	result["dimension"] = dimension;
	return result;
}

json classification(const Classification &c)
{
	json out = io::ok(c.is_unit() ? "unit" : "non_unit");
	if (!c.is_unit())
		out["vanishing_set"] = c.vanishing;
	return out;
}

std::string local_name(std::size_t a, std::size_t n)
{
	static const char *short_names[] = {"u", "v", "w"};
	return n <= 3 ? short_names[a] : "u" + std::to_string(a + 1);
}

// Human-readable rendering.

void render(std::ostream &out, const json &value, const std::string &indent);

void render_element(std::ostream &out, const std::string &text, const std::string &indent)
{
	// One term per line, signs aligned in a column.
	std::vector<std::string> terms;
	std::string current;
	int depth = 0;
	for (std::size_t i = 0; i < text.size(); ++i) {
		char c = text[i];
		depth += c == '(' ? 1 : c == ')' ? -1 : 0;
		if (depth == 0 && i > 0 && (c == '+' || c == '-') && text[i - 1] == ' ') {
			terms.push_back(current.substr(0, current.size() - 1));
			current = c;
			continue;
		}
		current += c;
	}
	terms.push_back(current);
	if (terms.size() == 1) {
		out << indent << text << '\n';
		return;
	}
	for (std::size_t i = 0; i < terms.size(); ++i) {
		std::string t = terms[i];
		if (i == 0)
			t = (t[0] == '-' ? "- " + t.substr(1) : "+ " + t);
		out << indent << t << '\n';
	}
}

void render(std::ostream &out, const json &value, const std::string &indent)
{
	if (value.is_object()) {
		for (const auto &[k, v] : value.items()) {
			if (v.is_primitive() || (v.is_array() && std::all_of(v.begin(), v.end(),
			                                                     [](const json &x) { return x.is_primitive(); }))) {
				out << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
			} else {
				out << indent << k << ":\n";
				render(out, v, indent + "  ");
			}
		}
	} else if (value.is_array()) {
		// Matrices of strings are printed as aligned rows.
		std::size_t width = 0;
		bool table = !value.empty();
		for (const auto &row : value) {
			table = table && row.is_array() &&
			        std::all_of(row.begin(), row.end(), [](const json &x) { return x.is_primitive(); });
			if (row.is_array())
				for (const auto &e : row)
					width = std::max(width, e.is_string() ? e.get<std::string>().size() : e.dump().size());
		}
		for (const auto &row : value) {
			if (table) {
				out << indent;
				for (const auto &e : row)
					out << std::left << std::setw(int(width + 2)) << (e.is_string() ? e.get<std::string>() : e.dump());
				out << '\n';
			} else {
				render(out, row, indent);
				if (row.is_array())
					out << '\n';
			}
		}
	} else if (value.is_string()) {
		render_element(out, value.get<std::string>(), indent);
	} else {
		out << indent << value.dump() << '\n';
	}
}

void emit(const Session &s, const json &result)
{
	if (s.json_output) {
		std::cout << result.dump() << '\n';
		return;
	}
	for (const auto &[k, v] : result.items()) {
		if (k == "status" || k == "value")
			continue;
		std::cout << k << ": " << v.dump() << '\n';
	}
	render(std::cout, result.at("value"), "");
}

} // namespace

int main(int argc, char **argv)
{
	Session s;
	CLI::App app{"Exact computations in truncated path algebras and their completions"};
	app.require_subcommand(1);
	app.add_flag("--json", s.json_output, "Print the canonical JSON result");
	app.add_option("--field", s.field, "Ground field: q or fp:<p>");
	app.add_option("--order", s.order, "Truncation order N");
	app.add_option("--algebra", s.algebra_file, "Algebra description file");
	app.add_option("--counts", s.counts, "Arrow counts, rows separated by ';' (e.g. \"1,1;0,1\")");

	std::function<json()> run;
	std::string expr, file, ring_name, poly;
	std::string first, second;

	auto *algebra = app.add_subcommand("algebra", "Algebra descriptions");
	algebra->require_subcommand(1);
	auto *check = algebra->add_subcommand("check", "Validate a description and report its basis");
	check->add_option("file", file)->required();
	check->callback([&] {
		run = [&] {
			auto h = io::load_algebra(io::read_json(file), field_of(s), s.order);
			return with_dimension(io::ok(algebra_summary(h)), h->dimension());
		};
	});

	auto element_command = [&](const char *name, const char *help, std::function<json(const Element &)> f) {
		auto *cmd = app.add_subcommand(name, help);
		cmd->add_option("expression", expr)->required();
		cmd->callback([&, f] {
			run = [&, f] { return f(eval(expr, session_algebra(s))); };
		});
	};
	element_command("eval", "Evaluate an expression", [](const Element &x) { return io::ok(io::to_json(x)); });
	element_command("classify", "Unit, or the maximal ideals containing the element",
	                [](const Element &x) { return classification(classify(x)); });
	element_command("invert", "Two-sided inverse", [](const Element &x) { return io::ok(io::to_json(invert(x))); });
	element_command("augment", "Degree-0 part (pi_1(x), ..., pi_r(x))",
	                [](const Element &x) { return io::ok(io::to_json(augment(x))); });

	auto *tangent = app.add_subcommand("tangent", "Tangent algebra F(V)/(ker pi)^2 for --counts");
	tangent->callback([&] {
		run = [&] {
			if (s.counts.empty())
				throw InvalidArgument("tangent needs --counts");
			auto h = tangent_algebra(io::parse_counts(s.counts), field_of(s).value_or(FieldSpec::rationals()));
			return with_dimension(io::ok(algebra_summary(h)), h->dimension());
		};
	});

	auto *end = app.add_subcommand("end", "Block-matrix elements of End(H (x) M)");
	end->add_option("--dims", s.dims, "Block sizes d_1,...,d_r (default all 1)");
	end->require_subcommand(1);
	auto end_command = [&](const char *name, const char *help, std::size_t arity,
	                       std::function<json(const std::vector<EndElement> &)> f) {
		auto *cmd = end->add_subcommand(name, help);
		cmd->add_option("element", first, "Row-major JSON array of expressions, or @file")->required();
		if (arity == 2)
			cmd->add_option("other", second, "Second element")->required();
		cmd->callback([&, f, arity] {
			run = [&, f, arity] {
				auto ambient = session_ambient(s);
				std::vector<EndElement> xs{io::load_end_element(json_argument(first), ambient)};
				if (arity == 2)
					xs.push_back(io::load_end_element(json_argument(second), ambient));
				return f(xs);
			};
		});
	};
	end_command("augment", "Diagonal blocks of the augmentation", 1, [](const std::vector<EndElement> &x) {
		json blocks = json::array();
		for (const auto &b : block_augment(x[0]))
			blocks.push_back(io::to_json(b));
		return io::ok(blocks);
	});
	end_command("classify", "Unit, or the singular blocks", 1,
	            [](const std::vector<EndElement> &x) { return classification(end_classify(x[0])); });
	end_command("invert", "Block inverse", 1,
	            [](const std::vector<EndElement> &x) { return io::ok(io::to_json(end_invert(x[0]))); });
	end_command("multiply", "Product of two elements", 2,
	            [](const std::vector<EndElement> &x) { return io::ok(io::to_json(x[0] * x[1])); });

	auto *localize = app.add_subcommand("localize", "Ring of locally defined functions of a presentation");
	localize->add_option("file", file)->required();
	localize->callback([&] {
		run = [&] {
			auto pres = io::load_presentation(io::read_json(file), std::filesystem::path(file).parent_path());
			auto basis = local_function_ring(pres);
			json exprs = json::array();
			for (std::size_t i = 0; i < basis.dimension(); ++i)
				exprs.push_back(to_source(basis.expression(i)));
			json value{{"ambient_dimension", pres.ambient->dimension()},
			           {"dimension_by_degree", basis.dimension_by_degree()},
			           {"basis", exprs},
			           {"idempotent", idempotence_check(basis, pres)}};
			return with_dimension(io::ok(value), basis.dimension());
		};
	});

	auto *lab_cmd = app.add_subcommand("lab", "Local-ring checks on a finite ring");
	lab_cmd->add_option("--ring", ring_name, "F<p>, F4, Z/<n>, M<k>(F<p>), UT<k>(F<p>), F<p>[x]/(x^<k>), A*B")
	    ->required();
	lab_cmd->callback([&] {
		run = [&] {
			auto r = lab::ring_from_name(ring_name);
			json value = io::to_json(lab::check_local_equivalences(*r), *r);
			auto ideals = lab::unique_maximal_two_sided(*r);
			json maximal = json::array();
			for (const auto &m : ideals.maximal)
				maximal.push_back(r->labels_of(m));
			value["two_sided_ideals"] = ideals.ideals.size();
			value["maximal_two_sided"] = maximal;
			value["unique_maximal_two_sided"] = ideals.unique();
			return io::ok(value);
		};
	});

	auto *oracle_cmd = app.add_subcommand("oracle", "Compare rho(f) with Taylor expansions at the model points");
	oracle_cmd->add_option("model", file)->required();
	oracle_cmd->add_option("polynomial", poly)->required();
	oracle_cmd->callback([&] {
		run = [&] {
			auto model = io::load_model(io::read_json(file));
			auto f = oracle::Polynomial::parse(poly, model.variables);
			std::vector<std::string> names;
			for (std::size_t a = 0; a < model.variables; ++a)
				names.push_back(local_name(a, model.variables));
			auto x = model.image(f);
			json components = json::array();
			for (std::size_t i = 0; i < model.points.size(); ++i)
				components.push_back(model.component(x, i).to_string(names));
			auto verdict = oracle::compare_with_taylor(model, f);
			json value{{"components", components},
			           {"unit", verdict.unit_classified},
			           {"agrees", verdict.pass()}};
			json out;
			if (verdict.unit_classified) {
				json inverse = json::array();
				auto y = end_invert(x);
				for (std::size_t i = 0; i < model.points.size(); ++i)
					inverse.push_back(model.component(y, i).to_string(names));
				value["inverse"] = inverse;
				out = io::ok(value);
			} else {
				out = io::ok(value);
				out["vanishing_set"] = verdict.vanishing_reported;
			}
			return out;
		};
	});

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		std::cout << json{{"status", "error"}, {"error", {{"kind", "usage"}, {"message", e.what()}}}}.dump()
		          << '\n';
		return 2;
	} catch (const std::exception &e) {
		std::cout << io::error(e).dump() << '\n';
		return 2;
	}

	try {
		emit(s, run());
		return 0;
	} catch (const Error &e) {
		std::cout << io::error(e).dump() << '\n';
		return 1;
	} catch (const std::exception &e) {
		std::cout << io::error(e).dump() << '\n';
		return 2;
	}
}
