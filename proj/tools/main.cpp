#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "chshkit/commands.hpp"
#include "chshkit/io.hpp"

namespace {

int emit(const chsh::CommandResult& result, const std::string& out_path) {
  if (result.code != chsh::kExitOk) {
    std::cerr << "error: " << result.error << "\n";
    return result.code;
  }
  if (out_path.empty()) {
    std::cout << result.output;
  } else {
    try {
      chsh::io::write_text_file(out_path, result.output);
    } catch (const chsh::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return chsh::kExitParseError;
    }
  }
  return chsh::kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "chshkit - decide whether CHSH correlation data admits a Hilbert-space model\n"
      "via PSD completion of the full correlation matrix, and generate model data"};
  app.require_subcommand(1);

  std::string mode_name = "real";
  double tol = 1e-9;
  std::string out_path;
  app.add_option("--mode", mode_name, "completion mode")
      ->check(CLI::IsMember({"real", "hermitian"}))
      ->capture_default_str();
  app.add_option("--tol", tol, "PSD tolerance on the minimum eigenvalue")
      ->capture_default_str();
  app.add_option("--out", out_path, "output path (default: stdout)");

  std::string analyze_input;
  CLI::App* analyze = app.add_subcommand("analyze", "classify a correlation block file");
  analyze->add_option("input", analyze_input, "block JSON file")->required();

  std::string generate_kind;
  std::string generate_spec;
  CLI::App* generate =
      app.add_subcommand("generate", "correlations from a model specification");
  generate->add_option("--kind", generate_kind, "model kind")
      ->check(CLI::IsMember({"lhv", "qubit", "vectors", "prbox"}))
      ->required();
  generate->add_option("spec", generate_spec, "model spec JSON file")->required();

  std::string scan_family = "prbox_mix";
  int scan_steps = 101;
  CLI::App* scan = app.add_subcommand("scan", "sweep a one-parameter block family (CSV)");
  scan->add_option("--family", scan_family, "family name")
      ->check(CLI::IsMember({"prbox_mix"}))
      ->capture_default_str();
  scan->add_option("--steps", scan_steps, "number of rows")
      ->check(CLI::Range(2, 1000000))
      ->capture_default_str();

  std::string realize_input;
  CLI::App* realize =
      app.add_subcommand("realize", "Gram vectors of a feasible block, or a certificate");
  realize->add_option("input", realize_input, "block JSON file")->required();

  std::uint64_t exercise_samples = 10000;
  std::uint64_t exercise_seed = 1;
  CLI::App* exercise = app.add_subcommand(
      "exercise", "search for real-feasible blocks beyond the classical CHSH bound");
  exercise->add_option("--samples", exercise_samples, "random candidates to score")
      ->capture_default_str();
  exercise->add_option("--seed", exercise_seed, "sampling seed")->capture_default_str();

  CLI11_PARSE(app, argc, argv);
  const chsh::Mode mode =
      mode_name == "hermitian" ? chsh::Mode::Hermitian : chsh::Mode::Real;

  if (analyze->parsed()) return emit(chsh::cmd_analyze(analyze_input, mode, tol), out_path);
  if (generate->parsed()) {
    return emit(chsh::cmd_generate(generate_kind, generate_spec), out_path);
  }
  if (scan->parsed()) return emit(chsh::cmd_scan(scan_family, scan_steps, tol), out_path);
  if (realize->parsed()) return emit(chsh::cmd_realize(realize_input, mode, tol), out_path);
  if (exercise->parsed()) {
    return emit(chsh::cmd_exercise(exercise_samples, exercise_seed), out_path);
  }
  return chsh::kExitOk;
}
