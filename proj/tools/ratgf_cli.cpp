// Batch front end: genfunc, solve, green, expand, verify.
//
// Exit codes: 0 success, 1 input error, 2 unsupported construction,
// 3 verification failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "ratgf/genfun.hpp"
#include "ratgf/io.hpp"
#include "ratgf/solver.hpp"

namespace {

using namespace ratgf;

constexpr int kOk = 0;
constexpr int kInputError = 1;
constexpr int kUnsupported = 2;
constexpr int kVerifyFailed = 3;

void emit(const io::json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    io::write_text(out_path, text);
  }
}

io::Problem load_problem(const std::string& path, bool quiet) {
  io::Problem problem = io::parse_problem(io::read_json_file(path));
  const auto diagnostics = io::validate(problem);
  if (!quiet) {
    for (const Diagnostic& d : diagnostics) {
      if (d.severity == Severity::Notice) std::cerr << "notice: " << d.message << '\n';
    }
  }
  require_valid(diagnostics);
  return problem;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solutions and rational generating functions of multidimensional difference equations"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string problem_path;
  std::string gf_path;
  std::string out_path;
  std::string box_text;
  std::string tau_text;
  std::int64_t order = 0;
  bool short_names = false;
  bool quiet = false;
  app.add_flag("-q,--quiet", quiet, "Suppress validation notices");

  auto* genfunc = app.add_subcommand("genfunc", "Closed-form generating function of the solution");
  genfunc->add_option("problem", problem_path, "Problem file")->required()->check(CLI::ExistingFile);
  genfunc->add_option("--out", out_path, "Output GF file (default: stdout)");
  genfunc->add_flag("--zw", short_names, "Name the variables z,w in two dimensions");

  auto* solve = app.add_subcommand("solve", "Solve the Cauchy problem on a box by dynamic programming");
  solve->add_option("problem", problem_path, "Problem file")->required()->check(CLI::ExistingFile);
  solve->add_option("--box", box_text, "Box corner N, comma separated")->required();
  solve->add_option("--out", out_path, "Output table file (default: stdout)");

  auto* green = app.add_subcommand("green", "Generating function of the discrete Green's function");
  green->add_option("problem", problem_path, "Problem file (its data is ignored)")->required()->check(CLI::ExistingFile);
  green->add_option("--tau", tau_text, "Source point tau0 in X_0, comma separated")->required();
  green->add_option("--out", out_path, "Output GF file (default: stdout)");
  green->add_flag("--zw", short_names, "Name the variables z,w in two dimensions");

  auto* expand = app.add_subcommand("expand", "Laurent expansion at infinity of a GF file");
  expand->add_option("gf", gf_path, "GF file")->required()->check(CLI::ExistingFile);
  expand->add_option("--order", order, "Truncation order d")->required()->check(CLI::NonNegativeNumber);
  expand->add_option("--out", out_path, "Output table file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the closed form against the DP oracle");
  verify_cmd->add_option("problem", problem_path, "Problem file")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--box", box_text, "Box corner N, comma separated")->required();
  verify_cmd->add_option("--out", out_path, "Also write the report as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    if (genfunc->parsed()) {
      const io::Problem p = load_problem(problem_path, quiet);
      emit(io::gf_to_json(assemble_gf(p.equation, p.data), short_names), out_path);
    } else if (solve->parsed()) {
      const io::Problem p = load_problem(problem_path, quiet);
      emit(io::table_to_json(solve_box(p.equation, p.data, io::parse_index_list(box_text))), out_path);
    } else if (green->parsed()) {
      const io::Problem p = io::parse_problem(io::read_json_file(problem_path));
      require_valid(validate_equation(p.equation));
      emit(io::gf_to_json(green_gf(p.equation, io::parse_index_list(tau_text)), short_names), out_path);
    } else if (expand->parsed()) {
      const RationalFn f = io::parse_gf(io::read_json_file(gf_path));
      emit(io::expansion_to_json(expand_at_infinity(f, order)), out_path);
    } else if (verify_cmd->parsed()) {
      const io::Problem p = load_problem(problem_path, quiet);
      const VerifyReport report = verify(p.equation, p.data, io::parse_index_list(box_text), p.expected);
      std::cout << report.str();
      if (!out_path.empty()) io::write_text(out_path, io::report_to_json(report).dump(2) + "\n");
      if (report.all_passed()) return kOk;
      return report.checks.front().name == "input" ? kInputError : kVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return is_unsupported(e.kind()) ? kUnsupported : kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kOk;
}
