#include "coverkit/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <utility>

#include "coverkit/batch.hpp"
#include "coverkit/continuous.hpp"
#include "coverkit/cyclic.hpp"
#include "coverkit/error.hpp"
#include "coverkit/parallel.hpp"
#include "coverkit/rng.hpp"
#include "coverkit/windows.hpp"

namespace coverkit {

namespace {

using u128 = uint128;
constexpr std::uint64_t kGrid = std::uint64_t{1} << 53;
constexpr std::size_t kChunk = 1024;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

// Runs `trials` independent trials; trial t always uses stream t, so the
// output does not depend on the worker count.
template <class Result, class MakeKernel>
std::vector<Result> run_trials(std::uint64_t trials, std::uint64_t seed, const SimOptions& options,
                               MakeKernel make_kernel) {
  if (trials < 1) throw InputError("trials must be at least 1");
  std::vector<Result> out(trials);
  const std::size_t chunks = static_cast<std::size_t>((trials + kChunk - 1) / kChunk);
  const std::size_t workers = options.threads ? options.threads : default_worker_count();
  parallel_for(chunks, workers, [&](std::size_t c) {
    auto kernel = make_kernel();
    const std::uint64_t begin = c * kChunk;
    const std::uint64_t end = std::min<std::uint64_t>(trials, begin + kChunk);
    for (std::uint64_t t = begin; t < end; ++t) {
      Xoshiro256 rng(stream_seed(seed, t));
      out[t] = kernel.run(rng);
    }
  });
  return out;
}

class Tracker {
 public:
  void reset(std::size_t n) {
    seen_.assign(n, 0);
    missing_ = n;
  }
  void mark(std::size_t i) {
    if (!seen_[i]) {
      seen_[i] = 1;
      --missing_;
    }
  }
  bool done() const { return missing_ == 0; }

 private:
  std::vector<std::uint8_t> seen_;
  std::size_t missing_ = 0;
};

// Circle covered by arcs of length p/q iff no gap between cyclically
// consecutive starts exceeds p/q. Starts are grid points k / 2^53.
class ArcTracker {
 public:
  explicit ArcTracker(const Rational& a)
      : p_(static_cast<u128>(a.numerator().get_ui())), q_(static_cast<u128>(a.denominator().get_ui())) {
    if (!a.numerator().fits_ulong_p() || !a.denominator().fits_ulong_p()) {
      throw InputError("arc length numerator and denominator must fit in 64 bits");
    }
  }
  void reset() {
    pts_.clear();
    bad_ = 0;
  }
  void insert(std::uint64_t x) {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), x);
    if (it != pts_.end() && *it == x) return;
    if (pts_.empty()) {
      pts_.push_back(x);
      bad_ = gap_bad(x, x);
      return;
    }
    const std::uint64_t succ = it == pts_.end() ? pts_.front() : *it;
    const std::uint64_t pred = it == pts_.begin() ? pts_.back() : *(it - 1);
    bad_ -= gap_bad(pred, succ);
    bad_ += gap_bad(pred, x) + gap_bad(x, succ);
    pts_.insert(it, x);
  }
  bool covered() const { return !pts_.empty() && bad_ == 0; }

 private:
  std::uint64_t gap_bad(std::uint64_t from, std::uint64_t to) const {
    const std::uint64_t gap = to > from ? to - from : to + kGrid - from;
    return static_cast<u128>(gap) * q_ > p_ * kGrid ? 1 : 0;
  }

  u128 p_;
  u128 q_;
  std::vector<std::uint64_t> pts_;
  std::uint64_t bad_ = 0;
};

struct WindowsKernel {
  std::int64_t n, ell;
  Tracker tr;
  std::uint64_t run(Xoshiro256& rng) {
    tr.reset(static_cast<std::size_t>(n));
    const auto starts = static_cast<std::uint64_t>(n - ell + 1);
    std::uint64_t t = 0;
    while (!tr.done()) {
      const auto s = static_cast<std::size_t>(rng.below(starts));
      for (std::int64_t j = 0; j < ell; ++j) tr.mark(s + static_cast<std::size_t>(j));
      ++t;
    }
    return t;
  }
};

void mark_cyclic(Tracker& tr, std::int64_t n, std::int64_t ell, std::int64_t start) {
  for (std::int64_t j = 0, pos = start; j < ell; ++j) {
    tr.mark(static_cast<std::size_t>(pos));
    if (++pos == n) pos = 0;
  }
}

// Cyclic windows whose starts are multiples of `stride` (stride 1 = plain cyclic).
struct CyclicKernel {
  std::int64_t n, ell, stride;
  Tracker tr;
  std::uint64_t run(Xoshiro256& rng) {
    tr.reset(static_cast<std::size_t>(n));
    const auto starts = static_cast<std::uint64_t>(n / stride);
    std::uint64_t t = 0;
    while (!tr.done()) {
      mark_cyclic(tr, n, ell, static_cast<std::int64_t>(rng.below(starts)) * stride);
      ++t;
    }
    return t;
  }
};

// Uniform ell-subset by a partial Fisher-Yates shuffle; the permutation is
// reset every trial so a trial depends only on its own stream.
void draw_subset(Xoshiro256& rng, std::vector<std::size_t>& perm, std::int64_t ell) {
  const std::size_t n = perm.size();
  for (std::size_t i = 0; i < static_cast<std::size_t>(ell); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(n - i));
    std::swap(perm[i], perm[j]);
  }
}

struct BatchKernel {
  std::int64_t n, ell;
  Tracker tr;
  std::vector<std::size_t> perm;
  std::uint64_t run(Xoshiro256& rng) {
    tr.reset(static_cast<std::size_t>(n));
    perm.resize(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::uint64_t t = 0;
    while (!tr.done()) {
      draw_subset(rng, perm, ell);
      for (std::int64_t i = 0; i < ell; ++i) tr.mark(perm[static_cast<std::size_t>(i)]);
      ++t;
    }
    return t;
  }
};

struct DemandKernel {
  const spec::Demand* spec;
  std::vector<std::int64_t> count;
  std::vector<std::size_t> perm;
  std::uint64_t run(Xoshiro256& rng) {
    const auto n = static_cast<std::size_t>(spec->n);
    count.assign(n, 0);
    perm.resize(n);
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::size_t remaining = 0;
    for (auto v : spec->v) remaining += v > 0 ? 1 : 0;
    std::uint64_t t = 0;
    while (remaining > 0) {
      draw_subset(rng, perm, spec->ell);
      for (std::int64_t i = 0; i < spec->ell; ++i) {
        const std::size_t item = perm[static_cast<std::size_t>(i)];
        if (count[item] < spec->v[item] && ++count[item] == spec->v[item]) --remaining;
      }
      ++t;
    }
    return t;
  }
};

struct ArcKernel {
  ArcTracker arcs;
  std::uint64_t run(Xoshiro256& rng) {
    arcs.reset();
    std::uint64_t t = 0;
    while (!arcs.covered()) {
      arcs.insert(rng.grid53());
      ++t;
    }
    return t;
  }
};

struct EdgeKernel {
  const CoverageModel* model;
  std::uint64_t run(Xoshiro256& rng) {
    BitSet covered(model->n_vertices());
    std::uint64_t t = 0;
    while (!covered.all()) {
      covered |= model->edge(static_cast<std::size_t>(rng.below(model->n_edges())));
      ++t;
    }
    return t;
  }
};

// Row-major torus geometry with helpers for marking a patch.
struct TorusGeometry {
  std::vector<std::int64_t> dims, window;
  std::vector<std::size_t> stride;
  std::size_t cells = 1;

  explicit TorusGeometry(const spec::Torus& s) : dims(s.dims), window(s.window), stride(s.dims.size()) {
    for (std::size_t i = dims.size(); i-- > 0;) {
      stride[i] = cells;
      cells *= static_cast<std::size_t>(dims[i]);
    }
  }

  void mark_patch(Tracker& tr, const std::vector<std::int64_t>& start, std::vector<std::int64_t>& offset) const {
    const std::size_t k = dims.size();
    offset.assign(k, 0);
    for (;;) {
      std::size_t cell = 0;
      for (std::size_t i = 0; i < k; ++i) {
        cell += static_cast<std::size_t>((start[i] + offset[i]) % dims[i]) * stride[i];
      }
      tr.mark(cell);
      std::size_t i = k;
      while (i > 0) {
        --i;
        if (++offset[i] < window[i]) break;
        offset[i] = 0;
        if (i == 0) return;
      }
    }
  }
};

struct TorusKernel {
  const TorusGeometry* geo;
  Tracker tr;
  std::vector<std::int64_t> start, offset;
  std::uint64_t run(Xoshiro256& rng) {
    tr.reset(geo->cells);
    start.resize(geo->dims.size());
    std::uint64_t t = 0;
    while (!tr.done()) {
      for (std::size_t i = 0; i < start.size(); ++i) {
        start[i] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(geo->dims[i])));
      }
      geo->mark_patch(tr, start, offset);
      ++t;
    }
    return t;
  }
};

using Pair = std::pair<std::uint64_t, std::uint64_t>;

// Discrete windows start at ceil(n C) mod n. The half-open arc [C, C + l/n)
// contains exactly the points j/n with j in that window, and half-open arcs
// cover the circle at the same draw as closed ones.
struct ArcWindowKernel {
  std::int64_t n, ell;
  ArcTracker arcs;
  Tracker tr;
  Pair run(Xoshiro256& rng) {
    arcs.reset();
    tr.reset(static_cast<std::size_t>(n));
    std::uint64_t t = 0, t_disc = 0, t_cont = 0;
    while (t_disc == 0 || t_cont == 0) {
      ++t;
      const std::uint64_t k = rng.grid53();
      if (t_cont == 0) {
        arcs.insert(k);
        if (arcs.covered()) t_cont = t;
      }
      if (t_disc == 0) {
        auto start = static_cast<std::int64_t>((static_cast<u128>(n) * k + (kGrid - 1)) >> 53);
        if (start == n) start = 0;
        mark_cyclic(tr, n, ell, start);
        if (tr.done()) t_disc = t;
      }
    }
    return {t_disc, t_cont};
  }
};

struct DeltaKernel {
  std::int64_t n, ell, d;
  Tracker coarse, full;
  Pair run(Xoshiro256& rng) {
    coarse.reset(static_cast<std::size_t>(n));
    full.reset(static_cast<std::size_t>(n));
    std::uint64_t t = 0, t_coarse = 0, t_full = 0;
    while (t_coarse == 0 || t_full == 0) {
      ++t;
      const auto x = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(n)));
      if (t_coarse == 0) {
        mark_cyclic(coarse, n, ell, d * (x / d));
        if (coarse.done()) t_coarse = t;
      }
      if (t_full == 0) {
        mark_cyclic(full, n, ell, x);
        if (full.done()) t_full = t;
      }
    }
    return {t_coarse, t_full};
  }
};

struct TorusDeltaKernel {
  const TorusGeometry* geo;
  const std::vector<std::int64_t>* d;
  Tracker coarse, full;
  std::vector<std::int64_t> x, phi, offset;
  Pair run(Xoshiro256& rng) {
    coarse.reset(geo->cells);
    full.reset(geo->cells);
    const std::size_t k = geo->dims.size();
    x.resize(k);
    phi.resize(k);
    std::uint64_t t = 0, t_coarse = 0, t_full = 0;
    while (t_coarse == 0 || t_full == 0) {
      ++t;
      for (std::size_t i = 0; i < k; ++i) {
        x[i] = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(geo->dims[i])));
        phi[i] = (*d)[i] * (x[i] / (*d)[i]);
      }
      if (t_coarse == 0) {
        geo->mark_patch(coarse, phi, offset);
        if (coarse.done()) t_coarse = t;
      }
      if (t_full == 0) {
        geo->mark_patch(full, x, offset);
        if (full.done()) t_full = t;
      }
    }
    return {t_coarse, t_full};
  }
};

CoupledRun finish_coupled(const std::vector<Pair>& pairs, std::uint64_t seed, const SimOptions& options,
                          const char* what) {
  CoupledRun run;
  run.first_times.reserve(pairs.size());
  run.second_times.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    run.first_times.push_back(a);
    run.second_times.push_back(b);
    if (a > b) ++run.violations;
  }
  if (run.violations > 0) {
    throw ConsistencyError(std::string(what) + " coupling violated on " + std::to_string(run.violations) +
                           " trial(s)");
  }
  run.first = summarize(run.first_times, seed, options.ci_multiplier);
  run.second = summarize(run.second_times, seed, options.ci_multiplier);
  return run;
}

}  // namespace

SimResult summarize(const std::vector<std::uint64_t>& times, std::uint64_t seed, double ci_multiplier) {
  if (times.empty()) throw InputError("cannot summarize zero trials");
  u128 sum = 0, sumsq = 0;
  for (auto t : times) {
    sum += t;
    sumsq += static_cast<u128>(t) * t;
  }
  const auto n = static_cast<u128>(times.size());
  SimResult r;
  r.trials = times.size();
  r.seed = seed;
  r.mean = static_cast<double>(static_cast<long double>(sum) / static_cast<long double>(n));
  if (times.size() > 1) {
    u128 scaled = 0;
    long double numerator = 0;
    if (__builtin_mul_overflow(n, sumsq, &scaled)) {
      const long double mean = static_cast<long double>(sum) / static_cast<long double>(n);
      numerator = (static_cast<long double>(sumsq) - static_cast<long double>(sum) * mean) * static_cast<long double>(n);
    } else {
      numerator = static_cast<long double>(scaled - sum * sum);
    }
    r.variance = static_cast<double>(numerator / (static_cast<long double>(n) * static_cast<long double>(n - 1)));
  }
  r.ci99_halfwidth = ci_multiplier * std::sqrt(r.variance / static_cast<double>(r.trials));
  return r;
}

SimRun simulate_trials(const ModelSpec& spec, std::uint64_t trials, std::uint64_t seed, const SimOptions& options) {
  validate(spec);
  std::vector<std::uint64_t> times = std::visit(
      Overloaded{
          [&](const spec::Windows& s) {
            return run_trials<std::uint64_t>(trials, seed, options, [&] { return WindowsKernel{s.n, s.ell, {}}; });
          },
          [&](const spec::CyclicWindows& s) {
            return run_trials<std::uint64_t>(trials, seed, options, [&] { return CyclicKernel{s.n, s.ell, 1, {}}; });
          },
          [&](const spec::DeltaD& s) {
            return run_trials<std::uint64_t>(trials, seed, options, [&] { return CyclicKernel{s.n, s.ell, s.d, {}}; });
          },
          [&](const spec::Batch& s) {
            return run_trials<std::uint64_t>(trials, seed, options, [&] { return BatchKernel{s.n, s.ell, {}, {}}; });
          },
          [&](const spec::Demand& s) {
            return run_trials<std::uint64_t>(trials, seed, options, [&] { return DemandKernel{&s, {}, {}}; });
          },
          [&](const spec::Arcs& s) {
            return run_trials<std::uint64_t>(trials, seed, options, [&] { return ArcKernel{ArcTracker(s.a)}; });
          },
          [&](const spec::Torus& s) {
            const TorusGeometry geo(s);
            return run_trials<std::uint64_t>(trials, seed, options, [&] { return TorusKernel{&geo, {}, {}, {}}; });
          },
          [&](const spec::HammingBalls& s) {
            const CoverageModel model = build_hamming_model(s.d, s.t);
            return run_trials<std::uint64_t>(trials, seed, options, [&] { return EdgeKernel{&model}; });
          },
          [&](const spec::Explicit& s) {
            return run_trials<std::uint64_t>(trials, seed, options, [&] { return EdgeKernel{&s.model}; });
          },
      },
      spec);
  SimRun run;
  run.result = summarize(times, seed, options.ci_multiplier);
  run.times = std::move(times);
  return run;
}

SimResult simulate(const ModelSpec& spec, std::uint64_t trials, std::uint64_t seed, const SimOptions& options) {
  return simulate_trials(spec, trials, seed, options).result;
}

SimResult simulate_demand(const spec::Demand& spec, std::uint64_t trials, std::uint64_t seed,
                          const SimOptions& options) {
  return simulate(ModelSpec{spec}, trials, seed, options);
}

SimResult simulate_torus(const spec::Torus& spec, std::uint64_t trials, std::uint64_t seed,
                         const SimOptions& options) {
  return simulate(ModelSpec{spec}, trials, seed, options);
}

CoupledRun simulate_coupled_arc_window(std::int64_t n, std::int64_t ell, std::uint64_t trials, std::uint64_t seed,
                                       const SimOptions& options) {
  const CyclicParams p(n, ell);
  if (ell == n) throw DomainError("arc coupling needs l < n (arc length l/n must be below 1)");
  const Rational a(ell, n);
  auto pairs = run_trials<Pair>(trials, seed, options,
                                [&] { return ArcWindowKernel{p.n(), p.ell(), ArcTracker(a), {}}; });
  return finish_coupled(pairs, seed, options, "arc-window");
}

CoupledRun simulate_coupled_delta(std::int64_t n, std::int64_t ell, std::int64_t d, std::uint64_t trials,
                                  std::uint64_t seed, const SimOptions& options) {
  const DeltaDParams p(n, ell, d);
  auto pairs = run_trials<Pair>(trials, seed, options, [&] { return DeltaKernel{p.n(), p.ell(), p.d(), {}, {}}; });
  return finish_coupled(pairs, seed, options, "delta-d");
}

CoupledRun simulate_coupled_torus_delta(const spec::Torus& torus, const std::vector<std::int64_t>& d,
                                        std::uint64_t trials, std::uint64_t seed, const SimOptions& options) {
  validate(ModelSpec{torus});
  if (d.size() != torus.dims.size()) throw InputError("torus delta needs one d per dimension");
  for (std::size_t i = 0; i < d.size(); ++i) DeltaDParams(torus.dims[i], torus.window[i], d[i]);
  const TorusGeometry geo(torus);
  auto pairs =
      run_trials<Pair>(trials, seed, options, [&] { return TorusDeltaKernel{&geo, &d, {}, {}, {}, {}, {}}; });
  return finish_coupled(pairs, seed, options, "torus delta-d");
}

void write_trial_csv(std::ostream& out, std::uint64_t seed, const std::vector<std::uint64_t>& times,
                     const std::vector<std::uint64_t>* times_b) {
  if (times_b && times_b->size() != times.size()) throw InputError("paired trial columns differ in length");
  out << (times_b ? "trial,seed_stream,time,time_b\n" : "trial,seed_stream,time\n");
  for (std::size_t t = 0; t < times.size(); ++t) {
    out << t << ',' << stream_seed(seed, t) << ',' << times[t];
    if (times_b) out << ',' << (*times_b)[t];
    out << '\n';
  }
}

}  // namespace coverkit
