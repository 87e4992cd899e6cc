#include "cubemax/beta.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <string>
#include <thread>

#include "cubemax/error.hpp"
#include "cubemax/rng.hpp"

namespace cubemax {

std::string_view to_string(BetaMethod method) {
  switch (method) {
    case BetaMethod::ExactNaive: return "ExactNaive";
    case BetaMethod::ExactGray: return "ExactGray";
    case BetaMethod::MonteCarlo: return "MonteCarlo";
  }
  return "Unknown";
}

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  std::vector<double> level(values.begin(), values.end());
  std::size_t len = level.size();
  while (len > 1) {
    const std::size_t half = len / 2;
    for (std::size_t i = 0; i < half; ++i) level[i] = level[2 * i] + level[2 * i + 1];
    if (len % 2 == 1) {
      level[half] = level[len - 1];
      len = half + 1;
    } else {
      len = half;
    }
  }
  return level[0];
}

namespace {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Runs body(index) for index in [0, count) on `threads` workers. Each worker
// owns a private state created by make_state().
template <typename MakeState, typename Body>
void parallel_for(std::size_t count, unsigned threads, MakeState make_state, Body body) {
  threads = static_cast<unsigned>(std::min<std::size_t>(resolve_threads(threads), count));
  if (threads <= 1) {
    auto state = make_state();
    for (std::size_t i = 0; i < count; ++i) body(state, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> workers;
  workers.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    workers.emplace_back([&] {
      auto state = make_state();
      for (std::size_t i = next++; i < count; i = next++) body(state, i);
    });
  }
}

struct BlockState {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> values;
};

double max_abs(std::span<const double> y) {
  double best = 0.0;
  for (double v : y) best = std::max(best, std::abs(v));
  return best;
}

// y = A x, each row accumulated left to right.
void multiply(const TestMatrix& m, std::span<const double> x, std::span<double> y) {
  const std::size_t n = m.dim();
  for (std::size_t i = 0; i < n; ++i) {
    const auto r = m.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += r[j] * x[j];
    y[i] = acc;
  }
}

// Vertex with half-local Gray index t, in the half with top sign s.
void set_vertex(std::span<double> x, std::uint64_t t, double s) {
  const std::size_t n = x.size();
  const std::uint64_t g = t ^ (t >> 1);
  for (std::size_t j = 0; j + 1 < n; ++j) x[j] = ((g >> j) & 1u) ? -s : s;
  x[n - 1] = s;
}

}  // namespace

BetaEstimate beta_exact(const TestMatrix& m, const ExactOptions& options) {
  const std::size_t n = m.dim();
  const unsigned limit = std::min(options.exhaustive_limit, 62u);
  if (n > limit) {
    throw Error(ErrorKind::DimensionTooLarge,
                "exhaustive evaluation refused for n = " + std::to_string(n) + " (limit " +
                    std::to_string(limit) + ")");
  }

  const std::uint64_t half_count = std::uint64_t{1} << (n - 1);
  const std::uint64_t block = std::min<std::uint64_t>(std::uint64_t{1} << kBlockBits, half_count);
  const std::uint64_t blocks_per_half = half_count / block;
  const std::uint64_t halves = options.antipodal_halving ? 1 : 2;
  const std::uint64_t total_blocks = blocks_per_half * halves;
  const bool gray = options.strategy == Strategy::GrayCode;

  // Column-major copy for the rank-one Gray updates.
  std::vector<double> cols(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j * n + i] = m(i, j);

  std::vector<double> block_sums(total_blocks);
  auto make_state = [&] {
    return BlockState{std::vector<double>(n), std::vector<double>(n),
                      std::vector<double>(block)};
  };
  auto run_block = [&](BlockState& st, std::size_t b) {
    const double s = (b / blocks_per_half == 0) ? 1.0 : -1.0;
    const std::uint64_t start = (b % blocks_per_half) * block;
    set_vertex(st.x, start, s);
    multiply(m, st.x, st.y);
    st.values[0] = max_abs(st.y);
    for (std::uint64_t k = 1; k < block; ++k) {
      const std::uint64_t t = start + k;
      if (gray) {
        const auto j = static_cast<std::size_t>(std::countr_zero(t));
        const double c = -2.0 * st.x[j];
        st.x[j] = -st.x[j];
        const double* col = cols.data() + j * n;
        for (std::size_t i = 0; i < n; ++i) st.y[i] += c * col[i];
      } else {
        set_vertex(st.x, t, s);
        multiply(m, st.x, st.y);
      }
      st.values[k] = max_abs(st.y);
    }
    block_sums[b] = pairwise_sum(st.values);
  };
  parallel_for(total_blocks, options.threads, make_state, run_block);

  const double visited = static_cast<double>(half_count * halves);
  BetaEstimate est;
  est.value = pairwise_sum(block_sums) / visited;
  est.method = gray ? BetaMethod::ExactGray : BetaMethod::ExactNaive;
  est.n_samples = half_count * 2;
  est.std_error = 0.0;
  return est;
}

SignSample::SignSample(std::size_t n, std::size_t count, std::uint64_t seed)
    : n_(n), count_(count), words_per_vertex_((n + 63) / 64) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "sign sample dimension must be positive");
  Rng rng(seed);
  words_.resize(count_ * words_per_vertex_);
  for (auto& w : words_) w = rng.next_u64();
  // Bits past n in the last word are never read.
}

SignVector SignSample::vertex(std::size_t sample) const {
  SignVector x(n_);
  for (std::size_t j = 0; j < n_; ++j) x[j] = negative(sample, j) ? -1 : 1;
  return x;
}

BetaEstimate beta_on_sample(const TestMatrix& m, const SignSample& sample, unsigned threads) {
  const std::size_t n = m.dim();
  if (sample.dim() != n) {
    throw Error(ErrorKind::DimensionMismatch, "sign sample dimension does not match matrix");
  }
  const std::size_t count = sample.count();
  if (count < 2) throw Error(ErrorKind::InvalidArgument, "Monte Carlo needs at least 2 samples");

  std::vector<double> cols(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) cols[j * n + i] = m(i, j);

  constexpr std::size_t kChunk = 1024;
  const std::size_t chunks = (count + kChunk - 1) / kChunk;
  std::vector<double> values(count);
  auto make_state = [&] { return std::vector<double>(n); };
  auto run_chunk = [&](std::vector<double>& y, std::size_t c) {
    const std::size_t end = std::min(count, (c + 1) * kChunk);
    for (std::size_t s = c * kChunk; s < end; ++s) {
      std::fill(y.begin(), y.end(), 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        const double* col = cols.data() + j * n;
        if (sample.negative(s, j)) {
          for (std::size_t i = 0; i < n; ++i) y[i] -= col[i];
        } else {
          for (std::size_t i = 0; i < n; ++i) y[i] += col[i];
        }
      }
      values[s] = max_abs(y);
    }
  };
  parallel_for(chunks, threads, make_state, run_chunk);

  const double mean = pairwise_sum(values) / static_cast<double>(count);
  std::vector<double> sq(count);
  for (std::size_t s = 0; s < count; ++s) sq[s] = (values[s] - mean) * (values[s] - mean);
  const double variance = pairwise_sum(sq) / static_cast<double>(count - 1);

  BetaEstimate est;
  est.value = mean;
  est.method = BetaMethod::MonteCarlo;
  est.n_samples = count;
  est.std_error = std::sqrt(variance / static_cast<double>(count));
  return est;
}

BetaEstimate beta_monte_carlo(const TestMatrix& m, std::size_t n_samples, std::uint64_t seed,
                              unsigned threads) {
  if (n_samples < 2) throw Error(ErrorKind::InvalidArgument, "Monte Carlo needs at least 2 samples");
  return beta_on_sample(m, SignSample(m.dim(), n_samples, seed), threads);
}

}  // namespace cubemax
