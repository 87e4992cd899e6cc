#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubemax/beta.hpp"
#include "cubemax/matrix.hpp"

namespace cubemax {

enum class Objective { Maximize, Minimize };
enum class EvaluatorKind { Exact, MonteCarloFixedSample };
enum class Termination { EpsilonFloor, Budget };

std::string_view to_string(Objective o);
std::string_view to_string(EvaluatorKind e);
std::string_view to_string(Termination t);

struct SearchConfig {
  std::size_t n = 2;
  std::size_t n_orthogonal_seeds = 100;
  double epsilon_init = 0.05;
  double epsilon_decay = 0.5;
  std::size_t stall_threshold = 200;
  double epsilon_min = 1e-5;
  std::uint64_t eval_budget = 100000;
  EvaluatorKind evaluator = EvaluatorKind::Exact;
  std::size_t mc_samples = 4096;  // used by MonteCarloFixedSample only
  Objective objective = Objective::Maximize;
  std::uint64_t seed = 0;
  unsigned eval_threads = 1;

  /// Throws InvalidArgument when an invariant is violated.
  void validate() const;
};

struct TracePoint {
  std::uint64_t evaluation;
  double beta;
};

struct SearchResult {
  TestMatrix best_matrix;
  BetaEstimate best_beta;
  std::vector<TracePoint> trace;
  Termination terminated_by = Termination::Budget;
  std::uint64_t evaluations = 0;
  double final_epsilon = 0.0;
};

/// Scores candidate matrices for one search run. In Monte Carlo mode every
/// candidate is scored on the same vertex sample, drawn once from the run's
/// seed (stream 0), so strict comparisons are not decided by sampling noise.
class Evaluator {
 public:
  explicit Evaluator(const SearchConfig& config);

  BetaEstimate operator()(const TestMatrix& m) const;
  /// Estimate reported for the final matrix: exact value in Exact mode, a
  /// fresh independent sample (stream 2 of the seed) in Monte Carlo mode.
  BetaEstimate final_estimate(const TestMatrix& m) const;

 private:
  SearchConfig config_;
  std::optional<SignSample> sample_;
};

/// Strictly better in the direction of the objective.
bool improves(Objective objective, double candidate, double incumbent);

/// Samples n_orthogonal_seeds matrices random_orthogonal(n, seed + i) and
/// returns the best under the configured evaluator (first index wins ties).
TestMatrix seed_from_orthogonal(const SearchConfig& config);

/// normalize_rows(m + epsilon * G), G iid standard normal drawn row-major
/// from Rng(step_seed). Propagates ZeroRow.
TestMatrix perturb(const TestMatrix& m, double epsilon, std::uint64_t step_seed);

/// Perturb/evaluate/accept loop with strict acceptance.
///
/// Proposal t (t = 0, 1, ...) uses step seed derive_seed(config.seed, 1000 + t);
/// a proposal that hits ZeroRow is skipped without consuming budget. After
/// stall_threshold consecutive rejections epsilon is multiplied by
/// epsilon_decay; the run stops once epsilon < epsilon_min or eval_budget
/// evaluations (the initial one included) have been made. The trace starts
/// with the initial matrix at evaluation 0.
SearchResult hill_climb(const TestMatrix& m0, const SearchConfig& config);

struct RestartOutcome {
  std::size_t index;
  std::uint64_t seed;
  std::optional<SearchResult> result;  // empty if the restart failed
  std::string error;
};

struct MultiRestartResult {
  std::vector<RestartOutcome> restarts;
  std::optional<std::size_t> best_index;  // into restarts
};

/// Independent restarts i = 0..restarts-1, each seed_from_orthogonal followed
/// by hill_climb, run on up to `threads` workers. Restart i runs with seed
/// config.seed + i * n_orthogonal_seeds, so the orthogonal pools of different
/// restarts are disjoint.
/// The best restart is chosen by the objective, ties by lowest index.
MultiRestartResult run_restarts(const SearchConfig& config, std::size_t restarts,
                                unsigned threads = 1);

}  // namespace cubemax
