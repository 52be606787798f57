#include "chshkit/completion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace chsh {

namespace {

constexpr double kStepTol = 1e-10;       // ascent stops when moves drop below this
constexpr double kObjectiveTol = 1e-12;  // ... or the objective stops improving
constexpr double kCoarseBracket = 1e-3;
constexpr int kRandomRestarts = 5;
constexpr int kMaxCycles = 100;

SymMatrix real_full(const CorrelationBlock& b, double x, double y) {
  SymMatrix m = SymMatrix::identity(4);
  m.set(0, 1, x);
  m.set(2, 3, y);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m.set(i, 2 + j, b(i, j));
  }
  return m;
}

HermMatrix herm_full(const CorrelationBlock& b, std::complex<double> x,
                     std::complex<double> y) {
  HermMatrix m(4);
  for (int i = 0; i < 4; ++i) m.set(i, i, 1.0);
  m.set(0, 1, x);
  m.set(2, 3, y);
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) m.set(i, 2 + j, b(i, j));
  }
  return m;
}

// Golden-section maximization of a concave slice on [lo, hi]; returns the
// argmax, stops when the bracket is narrower than `bracket`.
template <typename F>
double golden_max(F&& f, double lo, double hi, double bracket, double& value_out) {
  if (hi - lo <= bracket) {
    const double mid = 0.5 * (lo + hi);
    value_out = f(mid);
    return mid;
  }
  const double invphi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo;
  double b = hi;
  double u = b - invphi * (b - a);
  double v = a + invphi * (b - a);
  double fu = f(u);
  double fv = f(v);
  while (b - a > bracket) {
    if (fu > fv) {
      b = v;
      v = u;
      fv = fu;
      u = b - invphi * (b - a);
      fu = f(u);
    } else {
      a = u;
      u = v;
      fu = fv;
      v = a + invphi * (b - a);
      fv = f(v);
    }
  }
  if (fu > fv) {
    value_out = fu;
    return u;
  }
  value_out = fv;
  return v;
}

std::uint64_t block_seed(const CorrelationBlock& block, std::uint64_t tag) {
  std::uint64_t s = tag;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      s = splitmix64_once(s ^ std::bit_cast<std::uint64_t>(block(i, j)));
    }
  }
  return s;
}

struct Phase {
  double bracket;
  double step_tol;
  double objective_tol;
};

// Coordinate + diagonal golden-section ascent over a box-constrained
// parameter vector. `bounds(i)` yields the current [lo, hi] interval of
// coordinate i (it may depend on the other coordinates, as with the
// hermitian |x| <= 1 disks); `dirs` adds joint directions that guard the
// ascent against stalling on non-smooth eigenvalue crossings. Stops when the
// cycle's total movement falls under the step tolerance or the objective
// stops improving. The coarse setting locates the optimum cheaply per
// restart; the winner gets the full-resolution pass.
template <typename Eval, typename Bounds>
double ascend(std::vector<double>& p, Eval&& eval, Bounds&& bounds,
              const std::vector<std::vector<double>>& dirs, bool coarse) {
  const std::size_t n = p.size();
  double f = eval(p);

  // Line search along `d` from p, constrained so every coordinate stays in
  // its interval; accepts only improvements.
  const auto search_direction = [&](const std::vector<double>& d, double bracket,
                                    double& moved) {
    double t_lo = -2.0;
    double t_hi = 2.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i] == 0.0) continue;
      const auto [lo, hi] = bounds(p, i);
      const double r1 = (lo - p[i]) / d[i];
      const double r2 = (hi - p[i]) / d[i];
      t_lo = std::max(t_lo, std::min(r1, r2));
      t_hi = std::min(t_hi, std::max(r1, r2));
    }
    if (t_hi <= t_lo) return;
    double fd = 0.0;
    std::vector<double> q = p;
    const double t = golden_max(
        [&](double s) {
          for (std::size_t i = 0; i < n; ++i) q[i] = p[i] + s * d[i];
          return eval(q);
        },
        t_lo, t_hi, bracket, fd);
    if (fd > f) {
      for (std::size_t i = 0; i < n; ++i) p[i] += t * d[i];
      moved += std::abs(t);
      f = fd;
    }
  };

  const Phase phase = coarse ? Phase{kCoarseBracket, kCoarseBracket, 1e-7}
                             : Phase{kStepTol, kStepTol, kObjectiveTol};
  for (int cycle = 0; cycle < kMaxCycles; ++cycle) {
    const double f_before = f;
    const std::vector<double> p_start = p;
    double moved = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto [lo, hi] = bounds(p, i);
      double fi = 0.0;
      std::vector<double> q = p;
      const double xi = golden_max(
          [&](double t) {
            q[i] = t;
            return eval(q);
          },
          lo, hi, phase.bracket, fi);
      if (fi > f) {
        moved += std::abs(xi - p[i]);
        p[i] = xi;
        f = fi;
      }
    }
    for (const auto& d : dirs) search_direction(d, phase.bracket, moved);

    // Pattern move along the cycle's net displacement; this is what stops
    // coordinate zigzag on eigenvalue ridges.
    std::vector<double> net(n);
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      net[i] = p[i] - p_start[i];
      norm += net[i] * net[i];
    }
    if (norm > phase.bracket * phase.bracket) {
      norm = std::sqrt(norm);
      for (double& c : net) c /= norm;
      search_direction(net, phase.bracket, moved);
    }

    if (moved < phase.step_tol || f - f_before < phase.objective_tol) break;
  }
  return f;
}

SearchOptimum solve_real(const CorrelationBlock& block) {
  const auto eval = [&block](const std::vector<double>& p) {
    return min_eigenvalue(real_full(block, p[0], p[1]));
  };
  const auto bounds = [](const std::vector<double>&, std::size_t) {
    return std::pair<double, double>(-1.0, 1.0);
  };
  const std::vector<std::vector<double>> dirs = {{1.0, 1.0}, {1.0, -1.0}};

  SplitMix64 rng(block_seed(block, 0x72656161736366ULL));
  std::vector<std::vector<double>> starts = {{0.0, 0.0}};
  for (int r = 0; r < kRandomRestarts; ++r) {
    starts.push_back({rng.next_symmetric(), rng.next_symmetric()});
  }

  std::vector<double> best_p = starts.front();
  double best_f = -8.0;
  for (auto p : starts) {
    const double f = ascend(p, eval, bounds, dirs, /*coarse=*/true);
    if (f > best_f) {
      best_f = f;
      best_p = p;
    }
  }
  best_f = ascend(best_p, eval, bounds, dirs, /*coarse=*/false);
  return {best_p[0], best_p[1], best_f};
}

SearchOptimum solve_hermitian(const CorrelationBlock& block) {
  // p = (Re x, Im x, Re y, Im y); each pair is constrained to the unit disk.
  const auto eval = [&block](const std::vector<double>& p) {
    return herm_min_eigenvalue(
        herm_full(block, {p[0], p[1]}, {p[2], p[3]}));
  };
  const auto bounds = [](const std::vector<double>& p, std::size_t i) {
    const std::size_t partner = i ^ 1U;
    const double r = std::sqrt(std::max(0.0, 1.0 - p[partner] * p[partner]));
    return std::pair<double, double>(-r, r);
  };
  const std::vector<std::vector<double>> dirs = {
      {1.0, 0.0, 1.0, 0.0},
      {1.0, 0.0, -1.0, 0.0},
  };

  SplitMix64 rng(block_seed(block, 0x6865726d61617363ULL));
  std::vector<std::vector<double>> starts = {{0.0, 0.0, 0.0, 0.0}};
  for (int r = 0; r < kRandomRestarts; ++r) {
    std::vector<double> p(4);
    for (int pair = 0; pair < 2; ++pair) {
      double a = 0.0;
      double b = 0.0;
      do {
        a = rng.next_symmetric();
        b = rng.next_symmetric();
      } while (a * a + b * b > 1.0);
      p[2 * pair] = a;
      p[2 * pair + 1] = b;
    }
    starts.push_back(std::move(p));
  }

  std::vector<double> best_p = starts.front();
  double best_f = -8.0;
  for (auto p : starts) {
    const double f = ascend(p, eval, bounds, dirs, /*coarse=*/true);
    if (f > best_f) {
      best_f = f;
      best_p = p;
    }
  }
  best_f = ascend(best_p, eval, bounds, dirs, /*coarse=*/false);
  return {{best_p[0], best_p[1]}, {best_p[2], best_p[3]}, best_f};
}

}  // namespace

double lambda_min_at(const CorrelationBlock& block, double x, double y) {
  return min_eigenvalue(real_full(block, x, y));
}

double lambda_min_at(const CorrelationBlock& block, std::complex<double> x,
                     std::complex<double> y) {
  return herm_min_eigenvalue(herm_full(block, x, y));
}

SearchOptimum max_min_eigenvalue(const CorrelationBlock& block, Mode mode) {
  return mode == Mode::Real ? solve_real(block) : solve_hermitian(block);
}

CompletionResult decide_hilbert_model(const CorrelationBlock& block, Mode mode, double tol) {
  const SearchOptimum opt = max_min_eigenvalue(block, mode);
  CompletionResult r{};
  r.mode = mode;
  r.x_star = opt.x;
  r.y_star = opt.y;
  r.lambda_star = opt.lambda;
  if (opt.lambda >= -tol) {
    r.status = CompletionStatus::Feasible;
    if (mode == Mode::Real) {
      r.gram_vectors =
          realize_gram(assemble_full(block, opt.x.real(), opt.y.real()), tol + 1e-12);
    }
  } else {
    r.status = CompletionStatus::Infeasible;
    const double s_abs = std::abs(chsh_value(block));
    if (s_abs > kTsirelson) {
      r.analytic_certificate = AnalyticCertificate{
          chsh_value(block) > 0.0 ? '-' : '+',
          4.0 - std::sqrt(2.0) * s_abs,
      };
    }
  }
  return r;
}

std::vector<std::vector<double>> realize_gram(const FullCorrelationMatrix& full, double tol) {
  if (full.mode != Mode::Real) {
    throw InvariantError("realize_gram: hermitian matrices have no real Gram realization");
  }
  return gram_vectors(full.real_matrix(), tol);
}

double grid_max_min_eigenvalue(const CorrelationBlock& block, double step) {
  if (!(step > 0.0 && step <= 0.1)) {
    throw InvariantError("grid step must be in (0, 0.1]");
  }
  const long long n = std::llround(2.0 / step);
  double best = -8.0;
#ifdef _OPENMP
#pragma omp parallel for collapse(2) schedule(static) reduction(max : best)
#endif
  for (long long i = 0; i <= n; ++i) {
    for (long long j = 0; j <= n; ++j) {
      const double x = std::min(1.0, -1.0 + static_cast<double>(i) * step);
      const double y = std::min(1.0, -1.0 + static_cast<double>(j) * step);
      best = std::max(best, lambda_min_at(block, x, y));
    }
  }
  return best;
}

bool feasibility_oracle_grid(const CorrelationBlock& block, double step, double tol) {
  return grid_max_min_eigenvalue(block, step) >= -tol;
}

CorrelationBlock exercise_candidate_block(std::uint64_t seed, std::uint64_t index) {
  if (index == 0) {
    return correlations_from_vectors(VectorModel::tsirelson_saturating()).block;
  }
  const int dim = 2 + static_cast<int>(index % 3);
  return correlations_from_vectors(random_vector_model(substream_seed(seed, index), dim))
      .block;
}

ExerciseResult exercise_search(std::uint64_t samples, std::uint64_t seed) {
  if (samples < 1) throw InvariantError("exercise search needs samples >= 1");
  const long long n = static_cast<long long>(samples);

  double best_b = -1.0;
  long long best_idx = 0;
#ifdef _OPENMP
#pragma omp parallel
  {
    double loc_b = -1.0;
    long long loc_idx = 0;
#pragma omp for schedule(static) nowait
    for (long long k = 0; k <= n; ++k) {
      const double b = std::abs(chsh_value(exercise_candidate_block(seed, k)));
      if (b > loc_b || (b == loc_b && k < loc_idx)) {
        loc_b = b;
        loc_idx = k;
      }
    }
#pragma omp critical
    {
      if (loc_b > best_b || (loc_b == best_b && loc_idx < best_idx)) {
        best_b = loc_b;
        best_idx = loc_idx;
      }
    }
  }
#else
  for (long long k = 0; k <= n; ++k) {
    const double b = std::abs(chsh_value(exercise_candidate_block(seed, k)));
    if (b > best_b || (b == best_b && k < best_idx)) {
      best_b = b;
      best_idx = k;
    }
  }
#endif

  const CorrelationBlock block = exercise_candidate_block(seed, best_idx);
  return ExerciseResult{
      block,
      std::abs(chsh_value(block)),
      static_cast<std::uint64_t>(best_idx),
      samples,
      seed,
      decide_hilbert_model(block, Mode::Real),
  };
}

}  // namespace chsh
