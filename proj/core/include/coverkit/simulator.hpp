#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "coverkit/model_spec.hpp"

namespace coverkit {

struct SimOptions {
  std::size_t threads = 0;  // 0 = default_worker_count()
  double ci_multiplier = 2.576;
};

struct SimResult {
  std::uint64_t trials = 0;
  double mean = 0;
  double variance = 0;  // unbiased sample variance; 0 for a single trial
  double ci99_halfwidth = 0;
  std::uint64_t seed = 0;
};

/// Aggregate plus the per-trial coverage times in trial order.
struct SimRun {
  SimResult result;
  std::vector<std::uint64_t> times;
};

/// Paired run on shared randomness. `first` is the coupled process that must
/// finish no later than `second` on every trial.
struct CoupledRun {
  SimResult first;
  SimResult second;
  std::vector<std::uint64_t> first_times;
  std::vector<std::uint64_t> second_times;
  std::uint64_t violations = 0;
};

SimResult summarize(const std::vector<std::uint64_t>& times, std::uint64_t seed, double ci_multiplier = 2.576);

SimResult simulate(const ModelSpec& spec, std::uint64_t trials, std::uint64_t seed, const SimOptions& options = {});
SimRun simulate_trials(const ModelSpec& spec, std::uint64_t trials, std::uint64_t seed,
                       const SimOptions& options = {});

SimResult simulate_demand(const spec::Demand& spec, std::uint64_t trials, std::uint64_t seed,
                          const SimOptions& options = {});
SimResult simulate_torus(const spec::Torus& spec, std::uint64_t trials, std::uint64_t seed,
                         const SimOptions& options = {});

/// first = cyclic windows with starts D = ceil(n C) mod n, second = arcs of
/// length l/n starting at C, both driven by the same C draws.
CoupledRun simulate_coupled_arc_window(std::int64_t n, std::int64_t ell, std::uint64_t trials, std::uint64_t seed,
                                       const SimOptions& options = {});

/// first = delta-d windows at d*floor(X/d), second = cyclic windows at X.
CoupledRun simulate_coupled_delta(std::int64_t n, std::int64_t ell, std::int64_t d, std::uint64_t trials,
                                  std::uint64_t seed, const SimOptions& options = {});

/// Torus version of the delta coupling, one d per dimension.
CoupledRun simulate_coupled_torus_delta(const spec::Torus& torus, const std::vector<std::int64_t>& d,
                                        std::uint64_t trials, std::uint64_t seed, const SimOptions& options = {});

/// Per-trial CSV: trial,seed_stream,time[,time_b]
void write_trial_csv(std::ostream& out, std::uint64_t seed, const std::vector<std::uint64_t>& times,
                     const std::vector<std::uint64_t>* times_b = nullptr);

}  // namespace coverkit
