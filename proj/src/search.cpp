#include "cubemax/search.hpp"

#include <atomic>
#include <string>
#include <thread>

#include "cubemax/constructions.hpp"
#include "cubemax/error.hpp"
#include "cubemax/rng.hpp"

namespace cubemax {

std::string_view to_string(Objective o) {
  return o == Objective::Maximize ? "Maximize" : "Minimize";
}

std::string_view to_string(EvaluatorKind e) {
  return e == EvaluatorKind::Exact ? "Exact" : "MonteCarloFixedSample";
}

std::string_view to_string(Termination t) {
  return t == Termination::EpsilonFloor ? "EpsilonFloor" : "Budget";
}

void SearchConfig::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorKind::InvalidArgument, what); };
  if (n == 0) fail("n must be positive");
  if (n_orthogonal_seeds == 0) fail("n_orthogonal_seeds must be positive");
  if (!(epsilon_min > 0.0 && epsilon_min < epsilon_init)) fail("need 0 < epsilon_min < epsilon_init");
  if (!(epsilon_decay > 0.0 && epsilon_decay < 1.0)) fail("epsilon_decay must lie in (0, 1)");
  if (eval_budget < 1) fail("eval_budget must be at least 1");
  if (stall_threshold == 0) fail("stall_threshold must be positive");
  if (evaluator == EvaluatorKind::MonteCarloFixedSample && mc_samples < 2) {
    fail("Monte Carlo evaluation needs at least 2 samples");
  }
}

Evaluator::Evaluator(const SearchConfig& config) : config_(config) {
  if (config_.evaluator == EvaluatorKind::MonteCarloFixedSample) {
    sample_.emplace(config_.n, config_.mc_samples, derive_seed(config_.seed, 0));
  }
}

BetaEstimate Evaluator::operator()(const TestMatrix& m) const {
  if (sample_) return beta_on_sample(m, *sample_, config_.eval_threads);
  ExactOptions opts;
  opts.threads = config_.eval_threads;
  return beta_exact(m, opts);
}

BetaEstimate Evaluator::final_estimate(const TestMatrix& m) const {
  if (sample_) {
    return beta_monte_carlo(m, config_.mc_samples, derive_seed(config_.seed, 2), config_.eval_threads);
  }
  return (*this)(m);
}

bool improves(Objective objective, double candidate, double incumbent) {
  return objective == Objective::Maximize ? candidate > incumbent : candidate < incumbent;
}

TestMatrix seed_from_orthogonal(const SearchConfig& config) {
  config.validate();
  const Evaluator eval(config);
  std::optional<TestMatrix> best;
  double best_beta = 0.0;
  for (std::size_t i = 0; i < config.n_orthogonal_seeds; ++i) {
    TestMatrix q = random_orthogonal(config.n, config.seed + i);
    const double b = eval(q).value;
    if (!best || improves(config.objective, b, best_beta)) {
      best = std::move(q);
      best_beta = b;
    }
  }
  return *best;
}

TestMatrix perturb(const TestMatrix& m, double epsilon, std::uint64_t step_seed) {
  if (!(epsilon > 0.0)) throw Error(ErrorKind::InvalidArgument, "epsilon must be positive");
  Rng rng(step_seed);
  std::vector<double> entries(m.entries().begin(), m.entries().end());
  for (auto& v : entries) v += epsilon * rng.gaussian();
  return normalize_rows(TestMatrix(m.dim(), std::move(entries)));
}

SearchResult hill_climb(const TestMatrix& m0, const SearchConfig& config) {
  config.validate();
  if (m0.dim() != config.n) {
    throw Error(ErrorKind::DimensionMismatch, "start matrix dimension does not match config.n");
  }
  const Evaluator eval(config);

  TestMatrix current = m0;
  BetaEstimate current_beta = eval(current);
  std::uint64_t evaluations = 1;
  SearchResult result{current, current_beta, {{0, current_beta.value}}, Termination::Budget, 0, 0.0};

  double epsilon = config.epsilon_init;
  std::size_t stall = 0;
  std::uint64_t proposal = 0;
  Termination reason = Termination::Budget;
  while (evaluations < config.eval_budget) {
    std::optional<TestMatrix> candidate;
    try {
      candidate = perturb(current, epsilon, derive_seed(config.seed, 1000 + proposal++));
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::ZeroRow) continue;
      throw;
    }
    const BetaEstimate cand_beta = eval(*candidate);
    ++evaluations;
    if (improves(config.objective, cand_beta.value, current_beta.value)) {
      current = std::move(*candidate);
      current_beta = cand_beta;
      result.trace.push_back({evaluations - 1, cand_beta.value});
      stall = 0;
      continue;
    }
    if (++stall >= config.stall_threshold) {
      epsilon *= config.epsilon_decay;
      stall = 0;
      if (epsilon < config.epsilon_min) {
        reason = Termination::EpsilonFloor;
        break;
      }
    }
  }

  result.best_beta = config.evaluator == EvaluatorKind::Exact ? current_beta : eval.final_estimate(current);
  result.best_matrix = std::move(current);
  result.terminated_by = reason;
  result.evaluations = evaluations;
  result.final_epsilon = epsilon;
  return result;
}

MultiRestartResult run_restarts(const SearchConfig& config, std::size_t restarts, unsigned threads) {
  config.validate();
  MultiRestartResult out;
  out.restarts.resize(restarts);
  auto run_one = [&](std::size_t i) {
    RestartOutcome& slot = out.restarts[i];
    slot.index = i;
    SearchConfig local = config;
    local.seed = config.seed + i * config.n_orthogonal_seeds;
    slot.seed = local.seed;
    try {
      slot.result = hill_climb(seed_from_orthogonal(local), local);
    } catch (const Error& e) {
      slot.error = e.what();
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(restarts, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < restarts; ++i) run_one(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next++; i < restarts; i = next++) run_one(i);
      });
    }
  }

  for (std::size_t i = 0; i < restarts; ++i) {
    const auto& r = out.restarts[i].result;
    if (!r) continue;
    if (!out.best_index ||
        improves(config.objective, r->best_beta.value,
                 out.restarts[*out.best_index].result->best_beta.value)) {
      out.best_index = i;
    }
  }
  return out;
}

}  // namespace cubemax
