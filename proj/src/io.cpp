#include "ratgf/io.hpp"

#include <fstream>
#include <sstream>

namespace ratgf::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::ParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::int64_t parse_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

MultiIndex parse_index(const json& j, std::size_t dim, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an integer list");
  if (j.size() != dim) fail(where, "expected " + std::to_string(dim) + " integers, got " + std::to_string(j.size()));
  MultiIndex x(dim);
  for (std::size_t i = 0; i < dim; ++i) x[i] = parse_int(j[i], where + "/" + std::to_string(i));
  return x;
}

Rational parse_rational(const json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a rational string such as \"-3/4\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
}

std::vector<Rational> parse_rational_list(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected a list of rational strings");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(parse_rational(j[i], where + "/" + std::to_string(i)));
  return out;
}

json index_json(const MultiIndex& x) { return json(x.values()); }

CoeffMap parse_point_values(const json& list, std::size_t dim, const std::string& where) {
  if (!list.is_array()) fail(where, "expected a list");
  CoeffMap out;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const MultiIndex x = parse_index(field(list[i], "x", at), dim, at + "/x");
    const Rational v = parse_rational(field(list[i], "value", at), at + "/value");
    if (!out.emplace(x, v).second) fail(at, "duplicate point " + x.str());
  }
  return out;
}

json point_values_json(const CoeffMap& values) {
  json out = json::array();
  for (const auto& [x, v] : values) out.push_back({{"x", index_json(x)}, {"value", v.str()}});
  return out;
}

}  // namespace

LaurentPoly parse_poly(const json& terms, std::size_t dim, const std::string& where) {
  if (!terms.is_array()) fail(where, "expected a term list");
  LaurentPoly p(dim);
  std::map<MultiIndex, bool, GradedLexLess> seen;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string at = where + "/" + std::to_string(i);
    const MultiIndex e = parse_index(field(terms[i], "alpha", at), dim, at + "/alpha");
    if (!seen.emplace(e, true).second) fail(at, "duplicate exponent " + e.str());
    p.add_term(e, parse_rational(field(terms[i], "c", at), at + "/c"));
  }
  return p;
}

json poly_to_json(const LaurentPoly& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"alpha", index_json(e)}, {"c", c.str()}});
  return out;
}

Problem parse_problem(const json& doc) {
  if (!doc.is_object()) fail("", "problem file must be a JSON object");
  const std::int64_t dim = parse_int(field(doc, "dim", ""), "/dim");
  if (dim <= 0) fail("/dim", "dimension must be positive");
  const auto n = static_cast<std::size_t>(dim);
  const MultiIndex m = parse_index(field(doc, "m", ""), n, "/m");

  const json& coeffs = field(doc, "coeffs", "");
  if (!coeffs.is_array()) fail("/coeffs", "expected a list");
  CoeffMap cmap;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const std::string at = "/coeffs/" + std::to_string(i);
    const MultiIndex alpha = parse_index(field(coeffs[i], "alpha", at), n, at + "/alpha");
    const Rational c = parse_rational(field(coeffs[i], "c", at), at + "/c");
    if (!cmap.emplace(alpha, c).second) fail(at, "duplicate exponent " + alpha.str());
  }

  Problem problem;
  problem.equation = DifferenceEquation(m, std::move(cmap));

  if (auto it = doc.find("data"); it != doc.end()) {
    const json& data = *it;
    if (!data.is_object()) fail("/data", "expected an object");
    if (auto e = data.find("entries"); e != data.end()) problem.data.entries = parse_point_values(*e, n, "/data/entries");
    if (auto r = data.find("rays"); r != data.end()) {
      if (!r->is_array()) fail("/data/rays", "expected a list");
      for (std::size_t i = 0; i < r->size(); ++i) {
        const std::string at = "/data/rays/" + std::to_string(i);
        const json& jr = (*r)[i];
        RaySpec ray;
        ray.anchor = parse_index(field(jr, "anchor", at), n, at + "/anchor");
        const std::int64_t dir = parse_int(field(jr, "direction", at), at + "/direction");
        if (dir < 0 || dir >= dim) fail(at + "/direction", "axis must be in 0.." + std::to_string(dim - 1));
        ray.direction = static_cast<std::size_t>(dir);
        ray.rec_coeffs = parse_rational_list(field(jr, "rec_coeffs", at), at + "/rec_coeffs");
        ray.initial = parse_rational_list(field(jr, "initial", at), at + "/initial");
        problem.data.rays.push_back(std::move(ray));
      }
    }
  }

  if (auto it = doc.find("expected"); it != doc.end()) {
    const json& ex = *it;
    if (!ex.is_object()) fail("/expected", "expected an object");
    if (auto g = ex.find("gf"); g != ex.end()) {
      problem.expected.gf = parse_gf(*g);
      if (problem.expected.gf->dim() != n) fail("/expected/gf", "dimension does not match the problem");
    }
    if (auto v = ex.find("values"); v != ex.end()) problem.expected.values = parse_point_values(*v, n, "/expected/values");
  }
  return problem;
}

Problem parse_problem_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return parse_problem(doc);
}

json to_json(const Problem& problem) {
  const DifferenceEquation& eq = problem.equation;
  json coeffs = json::array();
  for (const auto& [alpha, c] : eq.coeffs()) coeffs.push_back({{"alpha", index_json(alpha)}, {"c", c.str()}});
  json rays = json::array();
  for (const RaySpec& ray : problem.data.rays) {
    json rec = json::array();
    for (const auto& c : ray.rec_coeffs) rec.push_back(c.str());
    json init = json::array();
    for (const auto& c : ray.initial) init.push_back(c.str());
    rays.push_back({{"anchor", index_json(ray.anchor)},
                    {"direction", ray.direction},
                    {"rec_coeffs", rec},
                    {"initial", init}});
  }
  json doc = {{"dim", eq.dim()},
              {"m", index_json(eq.corner())},
              {"coeffs", coeffs},
              {"data", {{"entries", point_values_json(problem.data.entries)}, {"rays", rays}}}};
  if (problem.expected.gf || !problem.expected.values.empty()) {
    json ex = json::object();
    if (problem.expected.gf) ex["gf"] = gf_to_json(*problem.expected.gf);
    if (!problem.expected.values.empty()) ex["values"] = point_values_json(problem.expected.values);
    doc["expected"] = ex;
  }
  return doc;
}

std::vector<Diagnostic> validate(const Problem& problem) {
  auto out = validate_equation(problem.equation);
  if (has_errors(out)) return out;
  auto data = validate_data(problem.data, problem.equation.corner());
  out.insert(out.end(), data.begin(), data.end());
  return out;
}

RationalFn parse_gf(const json& doc) {
  const json& vars = field(doc, "variables", "");
  if (!vars.is_array() || vars.empty()) fail("/variables", "expected a non-empty list of names");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (!vars[i].is_string()) fail("/variables/" + std::to_string(i), "expected a string");
  }
  const std::size_t n = vars.size();
  LaurentPoly num = parse_poly(field(doc, "numerator", ""), n, "/numerator");
  LaurentPoly den = parse_poly(field(doc, "denominator", ""), n, "/denominator");
  if (den.is_zero()) fail("/denominator", "denominator is the zero polynomial");
  return RationalFn(num, den);
}

json gf_to_json(const RationalFn& f, bool short_names) {
  return {{"variables", variable_names(f.dim(), short_names)},
          {"numerator", poly_to_json(f.numerator())},
          {"denominator", poly_to_json(f.denominator())}};
}

json table_to_json(const SolutionTable& table) {
  json values = json::array();
  for (const MultiIndex& x : box_points_graded(MultiIndex(table.dim()), table.bound())) {
    values.push_back({{"x", index_json(x)}, {"value", table.at(x).str()}});
  }
  return {{"dim", table.dim()}, {"box", index_json(table.bound())}, {"values", values}};
}

json expansion_to_json(const CoeffTable& table) {
  json terms = json::array();
  for (const auto& [e, c] : table.terms()) terms.push_back({{"alpha", index_json(e)}, {"c", c.str()}});
  json values = json::array();
  const std::size_t n = table.dim();
  for (const MultiIndex& x : box_points_graded(MultiIndex(n), MultiIndex(n, table.order()))) {
    if (table.in_window(solution_exponent(x))) {
      values.push_back({{"x", index_json(x)}, {"value", table.value_at(x).str()}});
    }
  }
  return {{"dim", n},
          {"order", table.order()},
          {"exponent_lo", index_json(table.exponent_lo())},
          {"exponent_hi", index_json(table.exponent_hi())},
          {"terms", terms},
          {"values", values}};
}

json report_to_json(const VerifyReport& report) {
  json checks = json::array();
  for (const CheckResult& c : report.checks) {
    checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  return {{"passed", report.all_passed()}, {"checks", checks}};
}

MultiIndex parse_index_list(const std::string& text) {
  std::vector<std::int64_t> vals;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(item, &used);
      if (item.find_first_not_of(' ', used) != std::string::npos) throw std::invalid_argument(item);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw Error(ErrorKind::ParseError, "malformed integer list \"" + text + "\"");
    }
  }
  if (vals.empty()) throw Error(ErrorKind::ParseError, "empty integer list");
  if (text.back() == ',') throw Error(ErrorKind::ParseError, "malformed integer list \"" + text + "\"");
  return MultiIndex(std::move(vals));
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, path + ": " + e.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + path);
  out << text;
}

}  // namespace ratgf::io
