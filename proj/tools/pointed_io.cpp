#include "pointed_io.hpp"

#include "pointed/error.hpp"
#include "pointed/expression.hpp"

#include <fstream>
#include <sstream>

namespace pointed::io {

namespace {

template <typename T>
T field_or(const json &spec, const char *key, T fallback)
{
	return spec.contains(key) ? spec.at(key).get<T>() : fallback;
}

json require(const json &spec, const char *key)
{
	if (!spec.is_object() || !spec.contains(key))
		throw InvalidArgument(std::string("description is missing \"") + key + "\"");
	return spec.at(key);
}

std::size_t to_index(const json &j)
{
	if (!j.is_number_unsigned())
		throw InvalidArgument("expected a non-negative integer, got " + j.dump());
	return j.get<std::size_t>();
}

} // namespace

json read_json(const std::filesystem::path &path)
{
	std::ifstream in(path);
	if (!in)
		throw InvalidArgument("cannot open " + path.string());
	try {
		return json::parse(in);
	} catch (const json::parse_error &e) {
		throw InvalidArgument(path.string() + ": " + e.what());
	}
}

json resolve(const json &spec, const std::filesystem::path &base)
{
	if (spec.is_string())
		return read_json(base / spec.get<std::string>());
	return spec;
}

AlgebraHandle load_algebra(const json &spec, std::optional<FieldSpec> field,
                           std::optional<std::size_t> order)
{
	try {
		if (!spec.is_object())
			throw InvalidArgument("algebra description must be an object");
		FieldSpec k = field ? *field : FieldSpec::parse(field_or<std::string>(spec, "field", "q"));
		std::size_t n = order ? *order : to_index(require(spec, "order"));

		std::optional<Quiver> quiver;
		if (spec.contains("arrow_counts")) {
			std::vector<std::vector<std::size_t>> counts;
			for (const auto &row : spec.at("arrow_counts")) {
				counts.emplace_back();
				for (const auto &c : row)
					counts.back().push_back(to_index(c));
			}
			quiver = Quiver::from_counts(counts);
		} else {
			std::vector<Arrow> arrows;
			for (const auto &a : field_or<json>(spec, "arrows", json::array())) {
				if (!a.is_array() || a.size() != 3)
					throw InvalidArgument("arrow must be [source, target, label]: " + a.dump());
				arrows.push_back(Arrow{std::uint32_t(to_index(a[0])), std::uint32_t(to_index(a[1])),
				                       std::uint32_t(to_index(a[2]))});
			}
			quiver = Quiver(to_index(require(spec, "vertices")), std::move(arrows));
		}

		RelationSet relations;
		const auto sources = field_or<std::vector<std::string>>(spec, "relations", {});
		if (!sources.empty()) {
			auto free = TruncatedAlgebra::build(*quiver, k, n);
			for (const auto &r : sources)
				relations.push_back(eval(r, free).terms());
		}
		return TruncatedAlgebra::build(std::move(*quiver), k, n, std::move(relations));
	} catch (const json::exception &e) {
		throw InvalidArgument(std::string("algebra description: ") + e.what());
	}
}

EndElement load_end_element(const json &spec, const EndHandle &ambient)
{
	const std::size_t n = ambient->size();
	if (!spec.is_array() || spec.size() != n)
		throw InvalidArgument("end element must be an array of " + std::to_string(n) + " rows");
	std::vector<Element> entries;
	for (const auto &row : spec) {
		if (!row.is_array() || row.size() != n)
			throw InvalidArgument("end element row must have " + std::to_string(n) + " entries");
		for (const auto &e : row) {
			if (e.is_number_integer())
				entries.push_back(eval(std::to_string(e.get<long>()), ambient->base()));
			else if (e.is_string())
				entries.push_back(eval(e.get<std::string>(), ambient->base()));
			else
				throw InvalidArgument("end element entry must be a string: " + e.dump());
		}
	}
	return EndElement(ambient, std::move(entries));
}

AlgebraPresentation load_presentation(const json &spec, const std::filesystem::path &base)
{
	try {
		auto algebra = load_algebra(resolve(require(spec, "algebra"), base));
		std::vector<std::size_t> dims =
		    field_or<std::vector<std::size_t>>(spec, "dims", std::vector<std::size_t>(algebra->vertices(), 1));
		AlgebraPresentation p;
		p.ambient = EndAlgebra::build(algebra, std::move(dims));
		p.generators = field_or<std::vector<std::string>>(spec, "generators", {});
		for (const auto &r : field_or<std::vector<std::string>>(spec, "relators", {}))
			p.relators.push_back(parse(r));
		const json rho = field_or<json>(spec, "rho", json::object());
		for (const auto &g : p.generators) {
			if (!rho.contains(g))
				throw InvalidArgument("rho has no image for generator '" + g + "'");
			const json &image = rho.at(g);
			p.rho.push_back(image.is_string() ? eval_end(parse(image.get<std::string>()), p.ambient)
			                                  : load_end_element(image, p.ambient));
		}
		if (rho.size() != p.generators.size())
			throw InvalidArgument("rho names a symbol that is not a generator");
		for (const auto &h : field_or<std::vector<std::string>>(spec, "hints", {}))
			p.invert_hints.push_back(parse(h));
		return p;
	} catch (const json::exception &e) {
		throw InvalidArgument(std::string("presentation description: ") + e.what());
	}
}

oracle::CommutativeModel load_model(const json &spec)
{
	try {
		const std::size_t n = to_index(require(spec, "variables"));
		std::vector<oracle::Point> points;
		for (const auto &p : require(spec, "points")) {
			oracle::Point point;
			for (const auto &c : p) {
				const std::string text = c.is_string() ? c.get<std::string>() : c.dump();
				point.push_back(Scalar::parse(text, FieldSpec::rationals()).rational());
			}
			points.push_back(std::move(point));
		}
		return oracle::build_commutative_model(n, std::move(points), to_index(require(spec, "order")));
	} catch (const json::exception &e) {
		throw InvalidArgument(std::string("model description: ") + e.what());
	}
}

json to_json(const Element &x) { return x.to_string(); }

json to_json(const EndElement &x)
{
	const std::size_t n = x.algebra()->size();
	json rows = json::array();
	for (std::size_t i = 0; i < n; ++i) {
		json row = json::array();
		for (std::size_t j = 0; j < n; ++j)
			row.push_back(x.entry(i, j).to_string());
		rows.push_back(std::move(row));
	}
	return rows;
}

json to_json(const Matrix &m)
{
	json rows = json::array();
	for (std::size_t i = 0; i < m.rows(); ++i) {
		json row = json::array();
		for (std::size_t j = 0; j < m.cols(); ++j)
			row.push_back(m(i, j).to_string());
		rows.push_back(std::move(row));
	}
	return rows;
}

json to_json(const std::vector<Scalar> &v)
{
	json out = json::array();
	for (const auto &s : v)
		out.push_back(s.to_string());
	return out;
}

json to_json(const lab::LocalReport &report, const lab::FiniteRing &ring)
{
	json out{{"ring", ring.name()},
	         {"size", ring.size()},
	         {"units", lab::count(lab::units_of(ring))},
	         {"local", report.local()},
	         {"consistent", report.consistent()},
	         {"unique_maximal_left", report.unique_maximal_left},
	         {"unique_maximal_right", report.unique_maximal_right},
	         {"x_or_complement_unit", report.x_or_complement_unit},
	         {"non_units", ring.labels_of(report.non_units)}};
	out["witness"] = report.witness ? json(ring.label(*report.witness)) : json(nullptr);
	if (report.maximal_left_enumerated)
		out["maximal_left_enumerated"] = *report.maximal_left_enumerated;
	if (report.maximal_right_enumerated)
		out["maximal_right_enumerated"] = *report.maximal_right_enumerated;
	return out;
}

json ok(json value) { return json{{"status", "ok"}, {"value", std::move(value)}}; }

json error(const std::exception &e)
{
	json err{{"message", e.what()}};
	json out{{"status", "error"}};
	if (const auto *pe = dynamic_cast<const Error *>(&e)) {
		err["kind"] = pe->kind();
		if (const auto *parse = dynamic_cast<const ParseError *>(&e)) {
			err["line"] = parse->line();
			err["column"] = parse->column();
		}
		if (const auto *nu = dynamic_cast<const NonUnitError *>(&e))
			out["vanishing_set"] = nu->vanishing_set();
	} else {
		err["kind"] = "usage";
	}
	out["error"] = std::move(err);
	return out;
}

std::vector<std::size_t> parse_list(const std::string &text)
{
	std::vector<std::size_t> out;
	std::stringstream in(text);
	std::string item;
	while (std::getline(in, item, ',')) {
		std::size_t used = 0;
		unsigned long v = 0;
		try {
			v = std::stoul(item, &used);
		} catch (const std::exception &) {
			used = 0;
		}
		if (used == 0 || used != item.size() || item.find('-') != std::string::npos)
			throw InvalidArgument("expected a comma separated list of integers, got '" + text + "'");
		out.push_back(v);
	}
	if (out.empty())
		throw InvalidArgument("empty integer list");
	return out;
}

std::vector<std::vector<std::size_t>> parse_counts(const std::string &text)
{
	std::vector<std::vector<std::size_t>> out;
	std::stringstream in(text);
	std::string row;
	while (std::getline(in, row, ';'))
		out.push_back(parse_list(row));
	if (out.empty())
		throw InvalidArgument("empty arrow count matrix");
	return out;
}

} // namespace pointed::io
