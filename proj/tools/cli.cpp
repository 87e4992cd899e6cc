#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "cubemax/beta.hpp"
#include "cubemax/bounds.hpp"
#include "cubemax/catalog.hpp"
#include "cubemax/error.hpp"
#include "cubemax/matrix_io.hpp"
#include "cubemax/report.hpp"
#include "cubemax/rng.hpp"
#include "cubemax/search.hpp"
#include "cubemax/surd.hpp"

namespace cubemax::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

unsigned default_threads() {
  if (const char* env = std::getenv("CUBEMAX_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError: return kBadInput;
    case ErrorKind::DimensionTooLarge: return kTooLarge;
    case ErrorKind::UnknownEntry: return kUnknownEntry;
    case ErrorKind::InvalidArgument:
    case ErrorKind::DomainError: return kBadInput;
    default: return kFailure;
  }
}

// Published lower bounds per dimension, truncated to two decimals.
struct PublishedBound {
  std::size_t n;
  const char* text;
  double value;
};
constexpr PublishedBound kPublished[] = {{2, "1.41", 1.41}, {3, "1.57", 1.57}, {4, "1.73", 1.73},
                                         {5, "1.79", 1.79}, {6, "1.86", 1.86}, {7, "1.93", 1.93},
                                         {8, "2", 2.0}};

struct EvalArgs {
  std::string path;
  bool exact = false;
  std::size_t mc = 0;
  std::string strategy = "gray";
  std::uint64_t seed = 0;
  unsigned threads = 0;
  bool halving = false;
  bool force = false;
  bool json = false;
};

int cmd_eval(const EvalArgs& a, std::ostream& out) {
  const MatrixDocument doc = read_matrix_file(a.path);
  const TestMatrix& m = doc.matrix;
  BetaEstimate est;
  if (a.mc > 0) {
    est = beta_monte_carlo(m, a.mc, a.seed, a.threads);
  } else {
    ExactOptions opts;
    opts.strategy = a.strategy == "naive" ? Strategy::Naive : Strategy::GrayCode;
    opts.antipodal_halving = a.halving;
    opts.threads = a.threads;
    if (a.force) opts.exhaustive_limit = 62;
    est = beta_exact(m, opts);
  }
  const auto norms = m.row_norms();
  const double min_norm = *std::min_element(norms.begin(), norms.end());
  const double max_norm = *std::max_element(norms.begin(), norms.end());

  if (a.json) {
    Json j;
    j["command"] = "eval";
    j["path"] = a.path;
    j["n"] = m.dim();
    if (doc.name) j["name"] = *doc.name;
    j["beta"] = beta_report(est);
    if (a.mc > 0) j["seed"] = a.seed;
    j["row_norm_min"] = min_norm;
    j["row_norm_max"] = max_norm;
    j["admissible"] = m.is_admissible();
    j["unit_rows"] = m.has_unit_rows();
    out << j.dump() << "\n";
    return kOk;
  }
  out << "n            " << m.dim() << "\n";
  if (doc.name) out << "name         " << *doc.name << "\n";
  out << "beta         " << fmt("%.17g", est.value) << "\n";
  out << "method       " << to_string(est.method) << "\n";
  out << "n_samples    " << est.n_samples << "\n";
  out << "std_error    " << fmt("%.17g", est.std_error) << "\n";
  if (est.method != BetaMethod::MonteCarlo) {
    if (const auto s = recognize_surd(est.value)) out << "closed_form  " << s->to_string() << "\n";
  }
  out << "row_norm_min " << fmt("%.17g", min_norm) << "\n";
  out << "row_norm_max " << fmt("%.17g", max_norm) << "\n";
  out << "admissible   " << (m.is_admissible() ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_table(unsigned threads, bool json, std::ostream& out) {
  const auto start = Clock::now();
  Json rows = Json::array();
  bool all_ok = true;
  std::ostringstream text;
  text << "n  entry      beta        closed form                 pub.   status\n";
  for (const auto& pub : kPublished) {
    const CatalogEntry e = catalog(best_catalog_name(pub.n));
    ExactOptions opts;
    opts.threads = threads;
    const double beta = beta_exact(e.matrix, opts).value;
    const bool closed_ok = std::abs(beta - e.beta_value) <= 1e-9;
    // The published figures are truncated to two decimals.
    const bool published_ok = beta >= pub.value - 1e-12 && beta < pub.value + 0.01;
    const bool ok = closed_ok && published_ok;
    all_ok = all_ok && ok;
    char line[160];
    std::snprintf(line, sizeof line, "%-2zu %-10s %.8f  %-26s  %-5s  %s\n", pub.n, e.name.c_str(), beta,
                  e.beta_closed_form.c_str(), pub.text, ok ? "ok" : "MISMATCH");
    text << line;
    Json r;
    r["n"] = pub.n;
    r["entry"] = e.name;
    r["beta"] = beta;
    r["closed_form"] = e.beta_closed_form;
    r["closed_form_value"] = e.beta_value;
    r["published"] = pub.text;
    r["ok"] = ok;
    rows.push_back(std::move(r));
  }
  const double elapsed = seconds_since(start);
  if (json) {
    Json j;
    j["command"] = "table";
    j["rows"] = std::move(rows);
    j["all_ok"] = all_ok;
    j["elapsed_seconds"] = elapsed;
    out << j.dump() << "\n";
  } else {
    out << text.str();
    out << "elapsed " << fmt("%.6f", elapsed) << " s\n";
  }
  return kOk;
}

struct SearchArgs {
  SearchConfig config;
  std::size_t restarts = 20;
  std::size_t mc = 0;
  bool minimize = false;
  std::string out_dir = "search_out";
  unsigned threads = 0;
  bool json = false;
};

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + p.string());
  f << content;
}

int cmd_search(SearchArgs a, const std::string& command_line, std::ostream& out, std::ostream& err) {
  if (a.config.n < 2) throw Error(ErrorKind::InvalidArgument, "--n must be at least 2");
  if (a.mc > 0) {
    a.config.evaluator = EvaluatorKind::MonteCarloFixedSample;
    a.config.mc_samples = a.mc;
  }
  if (a.minimize) a.config.objective = Objective::Minimize;
  a.config.validate();

  const auto start = Clock::now();
  const MultiRestartResult result = run_restarts(a.config, a.restarts, a.threads);
  const double wall = seconds_since(start);
  if (!result.best_index) {
    for (const auto& r : result.restarts) err << "restart " << r.index << ": " << r.error << "\n";
    err << "all restarts failed\n";
    return kSearchFailed;
  }
  const SearchResult& best = *result.restarts[*result.best_index].result;

  namespace fs = std::filesystem;
  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  const std::vector<std::string> files = {"best_matrix.txt", "best_matrix.json", "report.json", "trace.csv",
                                          "manifest.json"};
  write_file(dir / files[0], format_matrix_text(best.best_matrix));
  Json annotated = matrix_json(best.best_matrix);
  annotated["beta"] = beta_report(best.best_beta);
  write_file(dir / files[1], annotated.dump(2) + "\n");
  const Json report = search_report(a.config, result, wall);
  write_file(dir / files[2], report.dump(2) + "\n");
  write_file(dir / files[3], trace_csv(best.trace));

  RunManifest manifest;
  manifest.command = command_line;
  manifest.config = to_json(a.config);
  manifest.config["restarts"] = a.restarts;
  for (const auto& r : result.restarts) manifest.seeds.push_back(r.seed);
  manifest.wall_seconds = wall;
  for (const auto& f : files) manifest.outputs.push_back((dir / f).string());
  write_file(dir / files[4], to_json(manifest).dump(2) + "\n");

  if (a.json) {
    out << report.dump() << "\n";
    return kOk;
  }
  std::size_t ok = 0;
  for (const auto& r : result.restarts) ok += r.result.has_value();
  out << "restarts     " << ok << "/" << a.restarts << " completed\n";
  out << "best_restart " << *result.best_index << "\n";
  out << "beta         " << fmt("%.17g", best.best_beta.value) << "\n";
  if (const auto s = recognize_surd(best.best_beta.value)) out << "closed_form  " << s->to_string() << "\n";
  out << "terminated   " << to_string(best.terminated_by) << "\n";
  out << "output       " << dir.string() << "\n";
  out << "wall_seconds " << fmt("%.3f", wall) << "\n";
  return kOk;
}

int cmd_bounds(const std::string& grid, const std::vector<std::size_t>& ns, const std::vector<double>& eps,
               const std::string& out_path, std::ostream& out) {
  std::string csv;
  if (grid == "default") {
    csv = bounds_csv(default_tail_grid(), "t");
  } else {
    csv = bounds_csv(anticoncentration_grid(ns, eps), "epsilon");
  }
  if (out_path.empty()) {
    out << csv;
  } else {
    write_file(out_path, csv);
  }
  return kOk;
}

int cmd_catalog(bool list, const std::vector<std::string>& export_args, const std::string& format, bool json,
                std::ostream& out) {
  if (!export_args.empty()) {
    const CatalogEntry e = catalog(export_args[0]);
    MatrixDocument doc{e.matrix, e.name, e.beta_closed_form};
    write_matrix_file(export_args[1], doc, format == "json" ? MatrixFormat::Json : MatrixFormat::Text);
    out << "wrote " << export_args[1] << "\n";
    return kOk;
  }
  if (!list) throw Error(ErrorKind::InvalidArgument, "catalog needs --list or --export NAME PATH");
  const auto entries = catalog_entries();
  if (json) {
    Json arr = Json::array();
    for (const auto& e : entries) {
      Json j;
      j["name"] = e.name;
      j["n"] = e.matrix.dim();
      j["beta_closed_form"] = e.beta_closed_form;
      j["beta_value"] = e.beta_value;
      j["citation"] = e.citation;
      arr.push_back(std::move(j));
    }
    Json j;
    j["command"] = "catalog";
    j["entries"] = std::move(arr);
    out << j.dump() << "\n";
    return kOk;
  }
  for (const auto& e : entries) {
    char line[200];
    std::snprintf(line, sizeof line, "%-14s n=%zu  beta=%-26s %.12f  %s\n", e.name.c_str(), e.matrix.dim(),
                  e.beta_closed_form.c_str(), e.beta_value, e.citation.c_str());
    out << line;
  }
  return kOk;
}

int cmd_bench(std::size_t n, std::vector<unsigned> thread_counts, std::uint64_t seed, bool json,
              std::ostream& out) {
  if (thread_counts.empty()) thread_counts.push_back(1);
  const TestMatrix m = normalize_rows(TestMatrix(n, [&] {
    Rng rng(seed);
    std::vector<double> v(n * n);
    for (auto& x : v) x = rng.gaussian();
    return v;
  }()));
  const double vertices = std::ldexp(1.0, static_cast<int>(n));
  Json rows = Json::array();
  std::ostringstream text;
  text << "n   threads  strategy  seconds     vertices/s      beta\n";
  for (unsigned t : thread_counts) {
    double rate[2] = {0, 0};
    for (int s = 0; s < 2; ++s) {
      ExactOptions opts;
      opts.strategy = s == 0 ? Strategy::Naive : Strategy::GrayCode;
      opts.threads = t;
      opts.exhaustive_limit = 62;
      const auto start = Clock::now();
      const BetaEstimate b = beta_exact(m, opts);
      const double secs = seconds_since(start);
      rate[s] = vertices / secs;
      char line[160];
      std::snprintf(line, sizeof line, "%-3zu %-8u %-9s %-11.4f %-15.4g %.12f\n", n, t, s == 0 ? "naive" : "gray",
                    secs, rate[s], b.value);
      text << line;
      Json r;
      r["n"] = n;
      r["threads"] = t;
      r["strategy"] = s == 0 ? "naive" : "gray";
      r["seconds"] = secs;
      r["vertices_per_second"] = rate[s];
      r["beta"] = b.value;
      rows.push_back(std::move(r));
    }
    text << "    gray/naive speedup " << fmt("%.2f", rate[1] / rate[0]) << "\n";
  }
  if (json) {
    Json j;
    j["command"] = "bench";
    j["rows"] = std::move(rows);
    out << j.dump() << "\n";
  } else {
    out << text.str();
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mean l-infinity images of the discrete cube: evaluate, construct, search, bound"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CUBEMAX_VERSION);

  const unsigned env_threads = default_threads();

  EvalArgs eval_args;
  eval_args.threads = env_threads;
  auto* eval = app.add_subcommand("eval", "Compute beta for a matrix file");
  eval->add_option("matrix", eval_args.path, "Matrix file (text rows or JSON envelope)")->required();
  auto* exact_flag = eval->add_flag("--exact", eval_args.exact, "Exhaustive evaluation (default)");
  eval->add_option("--mc", eval_args.mc, "Monte Carlo with N samples")->excludes(exact_flag)->check(
      CLI::Range(std::size_t{2}, std::numeric_limits<std::size_t>::max()));
  eval->add_option("--strategy", eval_args.strategy, "Enumeration strategy")
      ->check(CLI::IsMember({"naive", "gray"}));
  eval->add_option("--seed", eval_args.seed, "Monte Carlo seed");
  eval->add_option("--threads", eval_args.threads, "Worker threads")->check(CLI::PositiveNumber);
  eval->add_flag("--halving", eval_args.halving, "Enumerate only x_n = +1 (antipodal symmetry)");
  eval->add_flag("--force", eval_args.force, "Allow exhaustive evaluation beyond n = 24");
  eval->add_flag("--json", eval_args.json, "Emit one JSON object");

  unsigned table_threads = 1;
  bool table_json = false;
  auto* table = app.add_subcommand("table", "Recompute the best-known beta for n = 2..8");
  table->add_option("--threads", table_threads, "Worker threads")->check(CLI::PositiveNumber);
  table->add_flag("--json", table_json, "Emit one JSON object");

  SearchArgs search_args;
  search_args.threads = env_threads;
  auto* search = app.add_subcommand("search", "Stochastic hill climbing with restarts");
  search->add_option("--n", search_args.config.n, "Dimension")->required();
  search->add_option("--restarts", search_args.restarts, "Independent restarts");
  search->add_option("--seed", search_args.config.seed, "Base seed");
  search->add_option("--out", search_args.out_dir, "Output directory");
  search->add_option("--threads", search_args.threads, "Concurrent restarts")->check(CLI::PositiveNumber);
  search->add_option("--orthogonal-seeds", search_args.config.n_orthogonal_seeds, "Orthogonal starts sampled");
  search->add_option("--epsilon-init", search_args.config.epsilon_init, "Initial step size");
  search->add_option("--epsilon-decay", search_args.config.epsilon_decay, "Step decay factor");
  search->add_option("--epsilon-min", search_args.config.epsilon_min, "Step size floor");
  search->add_option("--stall", search_args.config.stall_threshold, "Rejections before decay");
  search->add_option("--budget", search_args.config.eval_budget, "Evaluation budget per restart");
  search->add_option("--mc", search_args.mc, "Score candidates on a fixed sample of N vertices");
  search->add_flag("--minimize", search_args.minimize, "Minimize beta instead");
  search->add_flag("--json", search_args.json, "Print the report as one JSON object");

  std::string bounds_grid = "default";
  std::vector<std::size_t> bounds_ns = {64, 256, 1024};
  std::vector<double> bounds_eps = {0.5, 1.0};
  std::string bounds_out;
  auto* bounds = app.add_subcommand("bounds", "Exact binomial, Hoeffding and Gaussian tails as CSV");
  bounds->add_option("--grid", bounds_grid, "default (n, t) grid or anticoncentration (n, epsilon)")
      ->check(CLI::IsMember({"default", "anticoncentration"}));
  bounds->add_option("--n", bounds_ns, "n values for the anticoncentration grid");
  bounds->add_option("--epsilon", bounds_eps, "epsilon values for the anticoncentration grid");
  bounds->add_option("--out", bounds_out, "Write CSV to a file instead of stdout");

  bool catalog_list = false;
  bool catalog_json = false;
  std::vector<std::string> catalog_export;
  std::string catalog_format = "text";
  auto* cat = app.add_subcommand("catalog", "List or export the known candidate matrices");
  cat->add_flag("--list", catalog_list, "List entries");
  cat->add_option("--export", catalog_export, "NAME PATH")->expected(2);
  cat->add_option("--format", catalog_format, "Export format")->check(CLI::IsMember({"text", "json"}));
  cat->add_flag("--json", catalog_json, "Emit the listing as one JSON object");

  std::size_t bench_n = 20;
  std::vector<unsigned> bench_threads;
  std::uint64_t bench_seed = 1;
  bool bench_json = false;
  auto* bench = app.add_subcommand("bench", "Throughput of naive vs Gray-code enumeration");
  bench->add_option("--n", bench_n, "Dimension")->check(CLI::Range(1, 30));
  bench->add_option("--threads", bench_threads, "Thread counts to time");
  bench->add_option("--seed", bench_seed, "Seed of the random test matrix");
  bench->add_flag("--json", bench_json, "Emit one JSON object");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("cubemax");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << CUBEMAX_VERSION << "\n";
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kBadInput;
  }

  std::string command_line;
  for (const auto& a : args) command_line += (command_line.empty() ? "" : " ") + a;

  try {
    if (*eval) return cmd_eval(eval_args, out);
    if (*table) return cmd_table(table_threads, table_json, out);
    if (*search) return cmd_search(search_args, command_line, out, err);
    if (*bounds) return cmd_bounds(bounds_grid, bounds_ns, bounds_eps, bounds_out, out);
    if (*cat) return cmd_catalog(catalog_list, catalog_export, catalog_format, catalog_json, out);
    if (*bench) return cmd_bench(bench_n, bench_threads, bench_seed, bench_json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
  return kBadInput;
}

}  // namespace cubemax::cli
