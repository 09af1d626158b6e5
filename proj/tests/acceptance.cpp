// Acceptance gate. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails. All comparisons are exact; the only tolerances are
// the wall-clock limits below.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "ratgf/error.hpp"
#include "ratgf/io.hpp"
#include "ratgf/solver.hpp"
#include "test_support.hpp"

namespace {

using namespace ratgf;
using testing::Generator;
using testing::poly;
namespace fs = std::filesystem;

constexpr double kClosedFormSeconds = 1.0;
constexpr double kTablesSeconds = 1.0;
constexpr double kCorpusSeconds = 60.0;
constexpr std::size_t kCorpusSize = 60;
constexpr std::int64_t kCorpusBox = 8;
constexpr std::int64_t kFormulaOrder = 10;
constexpr std::size_t kMoivreProblems = 25;
constexpr std::size_t kFaceCorners = 200;
constexpr std::uint64_t kSeed = 20261014;

const std::string kData = RATGF_TEST_DATA;
const MultiIndex kIsolatedCorner{2, 1};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Failure detail collected while checking one criterion.
struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Problem {
  DifferenceEquation eq;
  CauchyData data;
};

std::vector<Problem> random_corpus() {
  Generator gen(kSeed);
  std::vector<Problem> out;
  for (std::size_t i = 0; i < kCorpusSize; ++i) {
    const std::size_t n = 1 + i % 3;
    const MultiIndex m = gen.corner(n, 3);
    out.push_back({gen.equation(m), gen.finite_data(m)});
  }
  return out;
}

#ifdef RATGF_CLI
int run_cli(const std::string& args, std::string* output = nullptr) {
  const fs::path out = fs::temp_directory_path() / ("ratgf_acceptance_" + std::to_string(::getpid()) + ".txt");
  const std::string cmd = std::string("\"") + RATGF_CLI + "\" " + args + " >\"" + out.string() + "\" 2>&1";
  const int status = std::system(cmd.c_str());
  if (output) {
    std::ifstream in(out);
    std::stringstream ss;
    ss << in.rdbuf();
    *output = ss.str();
  }
  fs::remove(out);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}
#endif

Outcome criterion1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  RationalFn f;
#ifdef RATGF_CLI
  std::string out;
  const int code = run_cli("genfunc -q --zw \"" + kData + "/isolated.json\"", &out);
  if (code != 0) {
    o.fail("genfunc exited " + std::to_string(code) + ": " + out);
    return o;
  }
  f = io::parse_gf(io::json::parse(out));
#else
  const io::Problem p = io::parse_problem(io::read_json_file(kData + "/isolated.json"));
  f = assemble_gf(p.equation, p.data);
#endif
  const double secs = seconds_since(t0);
  if (!equivalent(f, testing::isolated_closed_form())) o.fail("closed form " + f.str({"z", "w"}));
  if (secs >= kClosedFormSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "F = " + f.str({"z", "w"});
  return o;
}

Outcome criterion2() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const DifferenceEquation eq = testing::isolated_equation();
  const CauchyData d = testing::isolated_data();
  const RationalFn one_over = RationalFn(LaurentPoly::constant(2, 1));
  auto inv = [&](const LaurentPoly& q) { return one_over / RationalFn(q); };
  const LaurentPoly zw = poly(2, {{{1, 1}, 1}});
  struct Row {
    MultiIndex tau, flags;
    RationalFn phi;
    LaurentPoly p;
  };
  const std::vector<Row> rows = {
      {{0, 0}, {0, 0}, inv(zw), poly(2, {{{2, 1}, 1}, {{1, 1}, -1}, {{1, 0}, -1}, {{0, 1}, -1}})},
      {{1, 0}, {0, 0}, RationalFn(2), poly(2, {{{2, 1}, 1}, {{1, 1}, -1}, {{0, 1}, -1}})},
      {{0, 1}, {0, 1}, RationalFn(2), poly(2, {{{2, 1}, 1}, {{1, 1}, -1}, {{1, 0}, -1}})},
      {{1, 1}, {0, 1}, inv(poly(2, {{{2, 2}, 1}})), poly(2, {{{2, 1}, 1}})},
      {{2, 0}, {1, 0}, inv(zw * poly(2, {{{2, 0}, 1}, {{1, 0}, -1}, {{0, 0}, -1}})),
       poly(2, {{{2, 1}, 1}, {{1, 1}, -1}, {{0, 1}, -1}})},
  };
  for (const Row& r : rows) {
    const RationalFn phi = face_series(d, r.tau, r.flags, kIsolatedCorner).gf;
    if (!equivalent(phi, r.phi)) o.fail("Phi_" + r.tau.str() + " = " + phi.str({"z", "w"}));
    const LaurentPoly p = boundary_poly(eq, r.tau);
    if (p != r.p) o.fail("P_" + r.tau.str() + " = " + p.str({"z", "w"}));
  }
  const double secs = seconds_since(t0);
  if (secs >= kTablesSeconds) o.fail("took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "5 face series and 5 boundary polynomials";
  return o;
}

void check_oracle(const DifferenceEquation& eq, const CauchyData& data, const MultiIndex& box, Outcome& o,
                  const std::string& label) {
  std::int64_t order = 0;
  for (auto v : box) order = std::max(order, v);
  const SolutionTable t = solve_box(eq, data, box);
  const CoeffTable s = expand_at_infinity(assemble_gf(eq, data), order);
  for (const MultiIndex& x : box_points_graded(MultiIndex(box.dim()), box)) {
    if (s.value_at(x) != t.at(x)) {
      o.fail(label + ": mismatch at " + x.str() + ": " + s.value_at(x).str() + " vs " + t.at(x).str());
      return;
    }
  }
}

Outcome criterion3(const std::vector<Problem>& corpus) {
  Outcome o;
  check_oracle(testing::isolated_equation(), testing::isolated_data(), MultiIndex{12, 8}, o, "worked example");
  const auto t0 = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const std::size_t n = corpus[i].eq.dim();
    check_oracle(corpus[i].eq, corpus[i].data, MultiIndex(n, kCorpusBox), o, "corpus #" + std::to_string(i));
  }
  const double secs = seconds_since(t0);
  if (secs >= kCorpusSeconds) o.fail("corpus took " + std::to_string(secs) + " s");
  if (o.ok) o.detail = "worked example on (12,8), " + std::to_string(corpus.size()) + " random problems on [0,8]^n in " +
                       std::to_string(secs) + " s";
  return o;
}

void check_formulas(const DifferenceEquation& eq, const CauchyData& data, Outcome& o, const std::string& label) {
  const CoeffTable t1 = theorem1_series(eq, data, Formula::ShiftedData, kFormulaOrder);
  for (Formula f : {Formula::GroupedByExponent, Formula::DataMinusLower, Formula::BoundaryWeighted}) {
    if (!(theorem1_series(eq, data, f, kFormulaOrder) == t1)) {
      o.fail(label + ": formula " + std::to_string(static_cast<int>(f)) + " differs from formula 1");
    }
  }
}

Outcome criterion4(const std::vector<Problem>& corpus) {
  Outcome o;
  check_formulas(testing::isolated_equation(), testing::isolated_data(), o, "worked example");
  const CoeffTable f2 =
      theorem1_series(testing::isolated_equation(), testing::isolated_data(), Formula::GroupedByExponent, kFormulaOrder);
  const LaurentPoly zm1 = poly(2, {{{1, 0}, 1}, {{0, 0}, -1}});
  for (const MultiIndex& e : box_points(f2.exponent_lo(), f2.exponent_hi())) {
    if (f2.at_exponent(e) != zm1.coeff(e)) o.fail("formula 2 on the worked example differs from z-1 at " + e.str());
  }
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    check_formulas(corpus[i].eq, corpus[i].data, o, "corpus #" + std::to_string(i));
  }
  if (o.ok) o.detail = "order " + std::to_string(kFormulaOrder) + ", worked example + " + std::to_string(corpus.size()) +
                       " problems; formula 2 gives z-1";
  return o;
}

Outcome criterion5() {
  Outcome o;
  Generator gen(kSeed + 5);
  for (std::size_t i = 0; i < kMoivreProblems; ++i) {
    const MultiIndex m = gen.corner(1, 4);
    const DifferenceEquation eq = gen.equation(m);
    const CauchyData d = gen.finite_data(m);
    const RationalFn f = assemble_gf(eq, d);
    const RationalFn pf = RationalFn(char_poly(eq)) * f;
    if (!pf.is_polynomial()) o.fail("P*F not polynomial for problem " + std::to_string(i));
    const auto q = exact_divide(char_poly(eq), f.denominator());
    if (!q || !q->is_polynomial()) o.fail("denominator does not divide P for problem " + std::to_string(i));
    if (q && !equivalent(RationalFn(f.numerator() * *q), pf)) o.fail("quotient check failed for problem " + std::to_string(i));
  }
  const RationalFn fib = assemble_gf(testing::fibonacci_equation(), testing::one_dim_data({0, 1}));
  if (!equivalent(fib, RationalFn(LaurentPoly::constant(1, 1), poly(1, {{{2}, 1}, {{1}, -1}, {{0}, -1}})))) {
    o.fail("Fibonacci F = " + fib.str());
  }
  const CoeffTable t = expand_at_infinity(fib, 6);
  const auto oracle = testing::iterate_1d({-1, -1, 1}, {0, 1}, 7);
  for (std::int64_t x = 0; x <= 6; ++x) {
    if (t.value_at(MultiIndex{x}) != oracle[static_cast<std::size_t>(x)]) o.fail("Fibonacci expansion at " + std::to_string(x));
  }
  if (o.ok) o.detail = std::to_string(kMoivreProblems) + " random 1-D problems; Fibonacci 0,1,1,2,3,5,8";
  return o;
}

void check_green(const DifferenceEquation& eq, Outcome& o, std::size_t& count) {
  const std::size_t n = eq.dim();
  const MultiIndex& m = eq.corner();
  const MultiIndex top(n, 4);
  for (const MultiIndex& tau : box_points(MultiIndex(n), top)) {
    if (!in_x0(tau, m)) continue;
    ++count;
    const RationalFn g = green_gf(eq, tau);
    if (!equivalent(g, assemble_gf(eq, delta_data(tau, m)))) o.fail("green_gf differs from delta data at " + tau.str());
    const CoeffTable t = expand_at_infinity(g, 4);
    for (const MultiIndex& x : box_points(MultiIndex(n), top)) {
      if (in_x0(x, m) && t.value_at(x) != Rational(x == tau ? 1 : 0)) {
        o.fail("expansion of green_gf" + tau.str() + " at " + x.str() + " = " + t.value_at(x).str());
      }
    }
  }
}

Outcome criterion6() {
  Outcome o;
  std::size_t count = 0;
  check_green(testing::isolated_equation(), o, count);
  check_green(testing::one_dim_equation({-1, 1}), o, count);
  if (o.ok) o.detail = std::to_string(count) + " source points";
  return o;
}

Outcome criterion7() {
  Outcome o;
  Generator gen(kSeed + 7);
  std::size_t rays = 0;
  for (std::size_t i = 0; i < kFaceCorners; ++i) {
    const std::size_t n = static_cast<std::size_t>(gen.uniform(1, 4));
    const MultiIndex m = gen.index(n, 0, 3);
    const auto fs = faces(m);
    if (fs.size() != (std::size_t{1} << n)) o.fail("face count for m = " + m.str());
    std::set<std::vector<std::int64_t>> seen;
    std::size_t total = 0;
    for (const Face& f : fs) {
      for (const MultiIndex& x : f.points) {
        if (!leq(MultiIndex(n), x) || !leq(x, m)) o.fail("point outside box for m = " + m.str());
        if (!seen.insert(x.values()).second) o.fail("faces overlap for m = " + m.str());
        ++total;
      }
    }
    std::size_t volume = 1;
    for (std::size_t k = 0; k < n; ++k) volume *= static_cast<std::size_t>(m[k] + 1);
    if (total != volume || seen.size() != volume) o.fail("faces do not cover the box for m = " + m.str());

    if (m.total_degree() == 0) continue;
    const DifferenceEquation eq = gen.equation(m);
    for (const Face& f : fs) {
      if (f.points.empty()) continue;
      const MultiIndex& tau = f.points[static_cast<std::size_t>(gen.uniform(0, static_cast<std::int64_t>(f.points.size()) - 1))];
      MultiIndex y(n);
      for (std::size_t k = 0; k < n; ++k) y[k] = f.flags[k] ? gen.uniform(0, 6) : 0;
      ++rays;
      if (boundary_poly(eq, tau + y) != boundary_poly(eq, tau)) o.fail("P_{tau+Jy} != P_tau at " + tau.str());
    }
  }
  if (o.ok) o.detail = std::to_string(kFaceCorners) + " corners, " + std::to_string(rays) + " sampled rays";
  return o;
}

// Each mutation maps the worked-example problem document to a corrupted copy.
std::vector<std::pair<std::string, std::function<void(io::json&)>>> mutations(const io::json& doc) {
  std::vector<std::pair<std::string, std::function<void(io::json&)>>> out;
  auto bump = [](io::json& v) { v = (Rational::parse(v.get<std::string>()) + Rational(1)).str(); };
  for (std::size_t i = 0; i < doc["coeffs"].size(); ++i) {
    out.emplace_back("coeffs/" + std::to_string(i), [=](io::json& d) { bump(d["coeffs"][i]["c"]); });
  }
  for (std::size_t i = 0; i < doc["data"]["entries"].size(); ++i) {
    out.emplace_back("entries/" + std::to_string(i), [=](io::json& d) { bump(d["data"]["entries"][i]["value"]); });
  }
  for (std::size_t r = 0; r < doc["data"]["rays"].size(); ++r) {
    for (const char* field : {"initial", "rec_coeffs"}) {
      for (std::size_t i = 0; i < doc["data"]["rays"][r][field].size(); ++i) {
        out.emplace_back("rays/" + std::to_string(r) + "/" + field + "/" + std::to_string(i),
                         [=](io::json& d) { bump(d["data"]["rays"][r][field][i]); });
      }
    }
  }
  return out;
}

Outcome criterion8() {
  Outcome o;
  const io::json base = io::read_json_file(kData + "/isolated.json");
  const auto muts = mutations(base);
  for (const auto& [name, apply] : muts) {
    io::json doc = base;
    apply(doc);
#ifdef RATGF_CLI
    const fs::path path = fs::temp_directory_path() / ("ratgf_mutant_" + std::to_string(::getpid()) + ".json");
    std::ofstream(path) << doc.dump();
    const int code = run_cli("verify -q \"" + path.string() + "\" --box 10,6");
    fs::remove(path);
    if (code == 0) o.fail("mutation " + name + " not detected");
#else
    bool detected = false;
    try {
      const io::Problem p = io::parse_problem(doc);
      require_valid(io::validate(p));
      detected = !verify(p.equation, p.data, MultiIndex{10, 6}, p.expected).all_passed();
    } catch (const Error&) {
      detected = true;
    }
    if (!detected) o.fail("mutation " + name + " not detected");
#endif
  }
  if (o.ok) o.detail = std::to_string(muts.size()) + " single-value mutations detected";
  return o;
}

}  // namespace

int main() {
  const std::vector<Problem> corpus = random_corpus();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 closed form of the worked example", criterion1},
      {"2 face series and boundary polynomial tables", criterion2},
      {"3 oracle equivalence", [&] { return criterion3(corpus); }},
      {"4 four-formula agreement", [&] { return criterion4(corpus); }},
      {"5 one-dimensional Moivre", criterion5},
      {"6 Green's functions", criterion6},
      {"7 face geometry", criterion7},
      {"8 mutation detection", criterion8},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << name << ": " << o.detail << std::endl;
    if (!o.ok) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
