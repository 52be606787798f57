#include "chshkit/commands.hpp"

#include "chshkit/analysis.hpp"
#include "chshkit/io.hpp"

namespace chsh {

namespace {

template <typename Fn>
CommandResult run_guarded(Fn&& fn) {
  try {
    return CommandResult{kExitOk, fn(), ""};
  } catch (const ParseError& e) {
    return CommandResult{kExitParseError, "", e.what()};
  } catch (const InvariantError& e) {
    return CommandResult{kExitInvariantError, "", e.what()};
  } catch (const ConvergenceError& e) {
    return CommandResult{kExitNumericalError, "", e.what()};
  }
}

}  // namespace

CommandResult cmd_analyze(const std::string& input_path, Mode mode, double tol) {
  return run_guarded([&] {
    const CorrelationBlock block = io::parse_block(io::read_text_file(input_path));
    return io::analysis_json(analyze_block(block, mode, tol));
  });
}

CommandResult cmd_generate(const std::string& kind, const std::string& spec_path) {
  return run_guarded([&] {
    const std::string text = io::read_text_file(spec_path);
    GeneratedCorrelations g = [&] {
      if (kind == "lhv") return correlations_from_lhv(io::parse_lhv(text));
      if (kind == "qubit") return correlations_from_qubit(io::parse_qubit(text));
      if (kind == "vectors") return correlations_from_vectors(io::parse_vectors(text));
      if (kind == "prbox") {
        const CorrelationBlock block = pr_box(io::parse_prbox_sign(text));
        // No PSD completion exists for a PR box; the full matrix is reported
        // at the neutral point x = y = 0.
        return GeneratedCorrelations{block, assemble_full(block, 0.0, 0.0)};
      }
      throw ParseError("unknown model kind: " + kind);
    }();
    return io::generated_json(g, kind);
  });
}

CommandResult cmd_scan(const std::string& family, int steps, double tol) {
  return run_guarded([&] {
    if (family != "prbox_mix") throw ParseError("unknown scan family: " + family);
    return io::scan_csv(scan_prbox_mix(steps, tol));
  });
}

CommandResult cmd_realize(const std::string& input_path, Mode mode, double tol) {
  return run_guarded([&] {
    const CorrelationBlock block = io::parse_block(io::read_text_file(input_path));
    return io::realize_json(decide_hilbert_model(block, mode, tol));
  });
}

CommandResult cmd_exercise(std::uint64_t samples, std::uint64_t seed) {
  return run_guarded([&] { return io::exercise_json(exercise_search(samples, seed)); });
}

}  // namespace chsh
