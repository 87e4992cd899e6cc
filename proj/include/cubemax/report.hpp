#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cubemax/beta.hpp"
#include "cubemax/catalog.hpp"
#include "cubemax/search.hpp"
#include "cubemax/surd.hpp"

namespace cubemax {

using Json = nlohmann::ordered_json;

Json to_json(const BetaEstimate& b);
Json to_json(const SearchConfig& c);
Json to_json(const SurdForm& s);

/// Rows of decimals plus a parallel array of closed-form strings (null where
/// recognition fails).
Json matrix_json(const TestMatrix& m, const SurdOptions& surd_options = {});

/// {"value", "method", "n_samples", "std_error", "closed_form"?}.
Json beta_report(const BetaEstimate& b, const SurdOptions& surd_options = {});

/// Config echo, per-restart summaries (distinct local maxima are visible
/// there), the best matrix with annotations, its beta and trace.
Json search_report(const SearchConfig& config, const MultiRestartResult& result, double wall_seconds);

/// "evaluation,beta" CSV of an accepted-move trace.
std::string trace_csv(const std::vector<TracePoint>& trace);

/// Reproducibility record for a CLI invocation.
struct RunManifest {
  std::string command;
  Json config;
  std::vector<std::uint64_t> seeds;
  double wall_seconds = 0.0;
  std::vector<std::string> outputs;
};

Json to_json(const RunManifest& m);

}  // namespace cubemax
