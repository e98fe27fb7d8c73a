#pragma once

// Description files (JSON) and result objects shared by the command-line tool
// and the tests.

#include "pointed/comm_oracle.hpp"
#include "pointed/end_algebra.hpp"
#include "pointed/finite_lab.hpp"
#include "pointed/local_functions.hpp"
#include "pointed/pointed.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace pointed::io {

using json = nlohmann::json;

/// Reads and parses a JSON file; InvalidArgument when missing or malformed.
json read_json(const std::filesystem::path &path);

/// Either an inline object or a path (resolved against `base`) to a file
/// holding one.
json resolve(const json &spec, const std::filesystem::path &base);

/**
 * Algebra description:
 *   {"field": "q" | "fp:<p>", "order": N,
 *    "vertices": r, "arrows": [[s, t, l], ...]   or   "arrow_counts": [[l_11, ...], ...],
 *    "relations": ["<expression>", ...]}
 * `field` defaults to the override when one is given.
 */
AlgebraHandle load_algebra(const json &spec, std::optional<FieldSpec> field = std::nullopt,
                           std::optional<std::size_t> order = std::nullopt);

/// Row-major n x n array of expression strings, n = sum of the dims.
EndElement load_end_element(const json &spec, const EndHandle &ambient);

/**
 * Presentation description:
 *   {"algebra": {...} | "<file>", "dims": [d_1, ...], "generators": ["g", ...],
 *    "relators": ["<expression>", ...], "rho": {"g": <end element> | "<expression>"},
 *    "hints": ["<expression>", ...]}
 * A string image of rho is evaluated in the ambient (t(i,j,l) needs dims 1).
 */
AlgebraPresentation load_presentation(const json &spec, const std::filesystem::path &base = {});

/// {"variables": n, "points": [["0", "1/2"], ...], "order": N}
oracle::CommutativeModel load_model(const json &spec);

json to_json(const Element &x);
json to_json(const EndElement &x);
json to_json(const Matrix &m);
json to_json(const std::vector<Scalar> &v);
json to_json(const lab::LocalReport &report, const lab::FiniteRing &ring);

/// {"status": "ok", "value": value} plus the optional schema fields.
json ok(json value);
/// {"status": "error", "error": {"kind", "message", ...}} with
/// "vanishing_set" for non-units and line/column for parse errors.
json error(const std::exception &e);

/// Comma separated unsigned integers, e.g. "1,2,1".
std::vector<std::size_t> parse_list(const std::string &text);
/// Rows separated by ';', entries by ',', e.g. "0,1;1,0".
std::vector<std::vector<std::size_t>> parse_counts(const std::string &text);

} // namespace pointed::io
