#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chshkit/analysis.hpp"
#include "chshkit/completion.hpp"
#include "chshkit/generators.hpp"

namespace chsh {

// Unreadable file or malformed/mistyped JSON. Domain-invariant violations
// inside well-formed input surface as InvariantError instead.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace io {

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

// Input formats. Blocks: {"c": [[c11,c12],[c21,c22]]}; extra keys are
// ignored, so generated files feed straight back into `analyze`.
CorrelationBlock parse_block(const std::string& text);
LhvModel parse_lhv(const std::string& text);          // {"weights": [16 numbers]}
QubitModel parse_qubit(const std::string& text);      // {"state": [[re,im] x4], "a_dirs": ..., "b_dirs": ...}
VectorModel parse_vectors(const std::string& text);   // {"u1": [...], ..., "v2": [...]}
int parse_prbox_sign(const std::string& text);        // {"sign": "+"} or {"sign": "-"}

// Output formats; all JSON emitters produce 2-space indented, newline
// terminated UTF-8 so identical inputs give byte-identical files.
std::string analysis_json(const AnalysisReport& report);
std::string generated_json(const GeneratedCorrelations& g, const std::string& kind);
std::string realize_json(const CompletionResult& result);
std::string exercise_json(const ExerciseResult& result, double disprove_margin = 1e-6);
std::string scan_csv(const std::vector<ScanRow>& rows);

}  // namespace io
}  // namespace chsh
