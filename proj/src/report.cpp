#include "cubemax/report.hpp"

#include <cstdio>

namespace cubemax {

Json to_json(const BetaEstimate& b) {
  Json j;
  j["value"] = b.value;
  j["method"] = std::string(to_string(b.method));
  j["n_samples"] = b.n_samples;
  j["std_error"] = b.std_error;
  return j;
}

Json to_json(const SearchConfig& c) {
  Json j;
  j["n"] = c.n;
  j["n_orthogonal_seeds"] = c.n_orthogonal_seeds;
  j["epsilon_init"] = c.epsilon_init;
  j["epsilon_decay"] = c.epsilon_decay;
  j["stall_threshold"] = c.stall_threshold;
  j["epsilon_min"] = c.epsilon_min;
  j["eval_budget"] = c.eval_budget;
  j["evaluator"] = std::string(to_string(c.evaluator));
  if (c.evaluator == EvaluatorKind::MonteCarloFixedSample) j["mc_samples"] = c.mc_samples;
  j["objective"] = std::string(to_string(c.objective));
  j["seed"] = c.seed;
  return j;
}

Json to_json(const SurdForm& s) {
  Json j;
  j["a"] = s.a;
  j["p"] = s.p;
  j["b"] = s.b;
  j["q"] = s.q;
  j["c"] = s.c;
  j["text"] = s.to_string();
  return j;
}

Json matrix_json(const TestMatrix& m, const SurdOptions& surd_options) {
  Json rows = Json::array();
  Json surds = Json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    Json srow = Json::array();
    for (std::size_t j = 0; j < m.dim(); ++j) {
      row.push_back(m(i, j));
      const auto s = recognize_surd(m(i, j), surd_options);
      srow.push_back(s ? Json(s->to_string()) : Json(nullptr));
    }
    rows.push_back(std::move(row));
    surds.push_back(std::move(srow));
  }
  Json j;
  j["n"] = m.dim();
  j["rows"] = std::move(rows);
  j["closed_forms"] = std::move(surds);
  return j;
}

Json beta_report(const BetaEstimate& b, const SurdOptions& surd_options) {
  Json j = to_json(b);
  const auto s = recognize_surd(b.value, surd_options);
  j["closed_form"] = s ? Json(s->to_string()) : Json(nullptr);
  return j;
}

Json search_report(const SearchConfig& config, const MultiRestartResult& result, double wall_seconds) {
  Json j;
  j["config"] = to_json(config);
  Json restarts = Json::array();
  for (const auto& r : result.restarts) {
    Json e;
    e["index"] = r.index;
    e["seed"] = r.seed;
    if (r.result) {
      e["beta"] = r.result->best_beta.value;
      e["evaluations"] = r.result->evaluations;
      e["accepted_moves"] = r.result->trace.size() - 1;
      e["terminated_by"] = std::string(to_string(r.result->terminated_by));
    } else {
      e["error"] = r.error;
    }
    restarts.push_back(std::move(e));
  }
  j["restarts"] = std::move(restarts);
  if (result.best_index) {
    const auto& best = result.restarts[*result.best_index];
    j["best_restart"] = best.index;
    j["best_matrix"] = matrix_json(best.result->best_matrix);
    j["beta"] = beta_report(best.result->best_beta);
    Json trace = Json::array();
    for (const auto& p : best.result->trace) trace.push_back(Json::array({p.evaluation, p.beta}));
    j["trace"] = std::move(trace);
    j["terminated_by"] = std::string(to_string(best.result->terminated_by));
  }
  j["wall_seconds"] = wall_seconds;
  return j;
}

std::string trace_csv(const std::vector<TracePoint>& trace) {
  std::string out = "evaluation,beta\n";
  char buf[64];
  for (const auto& p : trace) {
    std::snprintf(buf, sizeof buf, "%llu,%.17g\n", static_cast<unsigned long long>(p.evaluation), p.beta);
    out += buf;
  }
  return out;
}

Json to_json(const RunManifest& m) {
  Json j;
  j["command"] = m.command;
  j["config"] = m.config;
  j["seeds"] = m.seeds;
  j["version"] = CUBEMAX_VERSION;
  j["wall_seconds"] = m.wall_seconds;
  j["outputs"] = m.outputs;
  return j;
}

}  // namespace cubemax
