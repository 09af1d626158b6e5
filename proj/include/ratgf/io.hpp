#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ratgf/genfun.hpp"
#include "ratgf/problem.hpp"
#include "ratgf/rational_fn.hpp"
#include "ratgf/series.hpp"
#include "ratgf/solver.hpp"

namespace ratgf::io {

using nlohmann::json;

/// Contents of a problem file. Parsing does not validate the equation or the
/// data; call validate() for that.
struct Problem {
  DifferenceEquation equation;
  CauchyData data;
  Expectations expected;
};

/// Throws Error(ParseError) with a JSON-pointer position on malformed input.
Problem parse_problem(const json& doc);
Problem parse_problem_text(const std::string& text);
json to_json(const Problem& problem);

/// Equation and data diagnostics together.
std::vector<Diagnostic> validate(const Problem& problem);

RationalFn parse_gf(const json& doc);
json gf_to_json(const RationalFn& f, bool short_names = false);

json poly_to_json(const LaurentPoly& p);
LaurentPoly parse_poly(const json& terms, std::size_t dim, const std::string& where);

json table_to_json(const SolutionTable& table);
json expansion_to_json(const CoeffTable& table);
json report_to_json(const VerifyReport& report);

/// "3,2" -> (3,2). Throws Error(ParseError).
MultiIndex parse_index_list(const std::string& text);

json read_json_file(const std::string& path);
void write_text(const std::string& path, const std::string& text);

}  // namespace ratgf::io
