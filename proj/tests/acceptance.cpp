// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <cmath>
#include <cstdio>
#include <string>

#include "chshkit/analysis.hpp"
#include "chshkit/completion.hpp"
#include "chshkit/generators.hpp"

using namespace chsh;

namespace {

const double kSqrt2 = std::sqrt(2.0);
int failures = 0;

void report(int number, const char* title, bool pass, const std::string& detail = "") {
  std::printf("[%s] criterion %d: %s%s%s\n", pass ? "PASS" : "FAIL", number, title,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!pass) ++failures;
}

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b);
  return buf;
}

// 1. PR-box analysis: exact CHSH value 4, supra-quantum verdict, analytic
//    trace certificate 4 - 4 sqrt(2).
void criterion1() {
  const AnalysisReport r = analyze_block(pr_box(1));
  const bool b_exact = r.chsh.b_canonical == 4.0;
  const bool classified = r.classification == Classification::SupraQuantum;
  const bool cert =
      r.completion.analytic_certificate.has_value() &&
      std::abs(r.completion.analytic_certificate->value - (4.0 - 4.0 * kSqrt2)) <= 1e-12;
  report(1, "PR box: B = 4, supra_quantum, certificate 4 - 4*sqrt(2)",
         b_exact && classified && cert,
         fmt("B = %.17g, cert = %.17g", r.chsh.b_canonical,
             r.completion.analytic_certificate ? r.completion.analytic_certificate->value
                                               : 0.0));
}

// 2. Singlet with the standard angles saturates the Tsirelson bound and
//    admits a real completion.
void criterion2() {
  const double s = 1.0 / kSqrt2;
  const QubitModel model({0.0, s, -s, 0.0}, {{{0, 0, 1}, {1, 0, 0}}},
                         {{{-s, 0, -s}, {s, 0, -s}}});
  const auto g = correlations_from_qubit(model);
  const double b = std::abs(chsh_value(g.block));
  const CompletionResult c = decide_hilbert_model(g.block, Mode::Real);
  const bool saturates = std::abs(b - 2.0 * kSqrt2) <= 1e-9;
  const bool feasible = c.feasible() && c.lambda_star >= -1e-9;
  report(2, "singlet saturation: B = 2*sqrt(2), feasible real completion",
         saturates && feasible, fmt("B = %.17g, lambda* = %.3g", b, c.lambda_star));
}

// 3. 10^4 Gram-of-unit-vector blocks never exceed 2 sqrt(2).
void criterion3() {
  int violations = 0;
  double worst = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : violations) reduction(max : worst)
#endif
  for (int k = 0; k < 10000; ++k) {
    const auto m = random_vector_model(30000 + k, 2 + k % 3);
    const double bmax = chsh_all_variants(correlations_from_vectors(m).block).max;
    worst = std::max(worst, bmax);
    if (bmax > 2.0 * kSqrt2 + 1e-6) ++violations;
  }
  report(3, "Tsirelson necessity on 10^4 vector models", violations == 0,
         fmt("violations = %.0f, max B = %.12g", violations, worst));
}

// 4. Trace-identity route equals the direct CHSH combination to 1e-12.
void criterion4() {
  int bad = 0;
  double worst = 0.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : bad) reduction(max : worst)
#endif
  for (int k = 0; k < 10000; ++k) {
    const CorrelationBlock b = random_block(40000 + k, BlockSampling::Cube);
    const double diff = std::abs(chsh_via_hadamard(b) - std::abs(chsh_value(b)));
    worst = std::max(worst, diff);
    if (diff > 1e-12) ++bad;
  }
  report(4, "Hadamard trace identity on 10^4 blocks", bad == 0,
         fmt("max deviation = %.3g", worst));
}

// 5. Solver vs exhaustive grid (step 0.01) with the 4*step Lipschitz slack:
//    a feasible verdict needs a grid point within the widened tolerance, an
//    infeasible verdict forbids any grid point within the plain tolerance.
void criterion5() {
  constexpr double kTol = 1e-9;
  constexpr double kStep = 0.01;
  int disagreements = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(+ : disagreements)
#endif
  for (int k = 0; k < 1000; ++k) {
    const CorrelationBlock b = random_block(50000 + k, BlockSampling::Cube);
    const bool feasible = decide_hilbert_model(b, Mode::Real, kTol).feasible();
    const double grid = grid_max_min_eigenvalue(b, kStep);
    const bool ok = feasible ? (grid >= -(kTol + 4.0 * kStep)) : (grid < -kTol);
    if (!ok) ++disagreements;
  }
  report(5, "solver agrees with the 0.01 grid oracle on 1000 blocks", disagreements == 0,
         fmt("disagreements = %.0f", static_cast<double>(disagreements)));
}

// 6. CHSH-variant locality test vs the LP decomposition on 1000 random
//    blocks, plus classical boundedness of 1000 LHV mixtures.
void criterion6() {
  int lp_disagree = 0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : lp_disagree)
#endif
  for (int k = 0; k < 1000; ++k) {
    const CorrelationBlock b = random_block(60000 + k, BlockSampling::Cube);
    if (is_local(b) != local_decomposition(b).feasible) ++lp_disagree;
  }
  int lhv_bad = 0;
  double worst = 0.0;
  for (int k = 0; k < 1000; ++k) {
    const auto g = correlations_from_lhv(random_lhv_model(61000 + k));
    const double bmax = chsh_all_variants(g.block).max;
    worst = std::max(worst, bmax);
    if (!is_local(g.block) || bmax > 2.0 + 1e-12) ++lhv_bad;
  }
  report(6, "local polytope: LP oracle agreement and LHV boundedness",
         lp_disagree == 0 && lhv_bad == 0,
         fmt("disagreements = %.0f, max LHV B = %.15g", lp_disagree, worst));
}

// 7. Exercise search disproves the conjectured classical bound with a
//    real-feasible witness at the Tsirelson value.
void criterion7() {
  const ExerciseResult r = exercise_search(10000, 2026);
  const bool disproved = r.b_value > 2.0 + 1e-6;
  const bool at_bound = r.b_value >= 2.0 * kSqrt2 - 1e-6;
  const bool witness_psd =
      r.completion.feasible() &&
      is_psd(assemble_full(r.block, r.completion.x_star.real(), r.completion.y_star.real())
                 .real_matrix(),
             1e-9);
  report(7, "exercise: disproved with a real-feasible witness", disproved && at_bound && witness_psd,
         fmt("B = %.17g", r.b_value));
}

// 8. prbox_mix sweep: the feasibility flip brackets 1/sqrt(2) within one
//    grid step.
void criterion8() {
  const auto rows = scan_prbox_mix(101);
  const double step = 1.0 / 100.0;
  double last_feasible = -1.0;
  double first_infeasible = -1.0;
  int flips = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].feasible != rows[i - 1].feasible) ++flips;
  }
  for (const auto& row : rows) {
    if (row.feasible) last_feasible = row.t;
    if (!row.feasible && first_infeasible < 0.0) first_infeasible = row.t;
  }
  const double threshold = 1.0 / kSqrt2;
  const bool ok = flips == 1 && last_feasible >= 0.0 && first_infeasible >= 0.0 &&
                  std::abs(last_feasible - threshold) <= step &&
                  std::abs(first_infeasible - threshold) <= step &&
                  last_feasible < first_infeasible;
  report(8, "scan crossing at t = 1/sqrt(2) within one step", ok,
         fmt("feasible up to %.4g, infeasible from %.4g", last_feasible, first_infeasible));
}

// 9. Generated full matrices (1000 LHV, 1000 qubit) are PSD.
void criterion9() {
  int bad = 0;
  double worst = 1.0;
#ifdef _OPENMP
#pragma omp parallel for schedule(static) reduction(+ : bad) reduction(min : worst)
#endif
  for (int k = 0; k < 1000; ++k) {
    const auto lhv = correlations_from_lhv(random_lhv_model(90000 + k));
    const double l1 = min_eigenvalue(lhv.full.real_matrix());
    const auto qubit = correlations_from_qubit(random_qubit_model(91000 + k));
    const double l2 = herm_min_eigenvalue(qubit.full.herm_matrix());
    worst = std::min(worst, std::min(l1, l2));
    if (l1 < -1e-9 || l2 < -1e-9) ++bad;
  }
  report(9, "all generated full matrices are PSD", bad == 0,
         fmt("min eigenvalue seen = %.3g", worst));
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  if (failures == 0) {
    std::printf("acceptance: all 9 criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
