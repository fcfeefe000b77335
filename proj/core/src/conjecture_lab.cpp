#include "coverkit/conjecture_lab.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <set>

#include "coverkit/batch.hpp"
#include "coverkit/combinatorics.hpp"
#include "coverkit/error.hpp"
#include "coverkit/model_spec.hpp"

namespace coverkit {

namespace {

constexpr std::size_t kMaxCardinalityExamples = 16;

struct Search {
  const std::vector<BitSet>& candidates;
  std::size_t n;
  std::vector<std::int64_t> degree;
  std::vector<std::uint64_t> found;

  void run(std::size_t i, std::uint64_t mask) {
    if (i == candidates.size()) {
      if (mask == 0) return;
      const auto d = degree[0];
      if (d > 0 && std::all_of(degree.begin(), degree.end(), [d](std::int64_t x) { return x == d; })) {
        found.push_back(mask);
      }
      return;
    }
    run(i + 1, mask);
    for (auto v : candidates[i].elements()) ++degree[v];
    run(i + 1, mask | (std::uint64_t{1} << i));
    for (auto v : candidates[i].elements()) --degree[v];
  }
};

std::vector<BitSet> lab_candidates(std::int64_t n, std::int64_t ell) {
  if (n < 1 || ell < 1 || ell > n) throw InputError("lab needs 1 <= l <= n");
  if (binomial(n, ell) > static_cast<unsigned long>(kLabMaxCandidates)) {
    throw CapacityError("C(" + std::to_string(n) + "," + std::to_string(ell) + ") exceeds the enumeration cap of " +
                        std::to_string(kLabMaxCandidates) + " candidate edges");
  }
  return all_subsets_of_size(n, ell);
}

CoverageModel model_from_mask(std::size_t n, const std::vector<BitSet>& candidates, std::uint64_t mask) {
  std::vector<BitSet> edges;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    if (mask >> i & 1U) edges.push_back(candidates[i]);
  }
  return CoverageModel(n, std::move(edges));
}

}  // namespace

std::vector<UniformRegularModel> enumerate_uniform_regular(std::int64_t n, std::int64_t ell) {
  const auto candidates = lab_candidates(n, ell);
  const auto size = static_cast<std::size_t>(n);
  Search search{candidates, size, std::vector<std::int64_t>(size, 0), {}};
  search.run(0, 0);
  std::sort(search.found.begin(), search.found.end());
  std::vector<UniformRegularModel> out;
  out.reserve(search.found.size());
  for (auto mask : search.found) {
    const auto edges = static_cast<std::int64_t>(std::popcount(mask));
    out.push_back({model_from_mask(size, candidates, mask), edges * ell / n, ell, mask});
  }
  return out;
}

std::vector<LabEntry> evaluate_uniform_regular(std::int64_t n, std::int64_t ell) {
  EnumerationCaps caps;
  caps.max_edges = kLabMaxCandidates;
  caps.max_vertices = kLabMaxCandidates;
  const double upper = universal_upper(n, ell);
  std::vector<LabEntry> out;
  for (auto& m : enumerate_uniform_regular(n, ell)) {
    Rational e = exact_expectation(spec::Explicit{m.model}, caps).value;
    if (e.to_double() > upper) {
      throw ConsistencyError("model " + std::to_string(m.edges_mask) + " has E = " + e.to_string() +
                             " above the universal upper bound " + format_decimal(upper));
    }
    out.push_back({m.edges_mask, m.degree, m.model.n_edges(), std::move(e)});
  }
  return out;
}

MonotonicityReport test_conjecture_monotonicity(const std::vector<LabEntry>& entries) {
  MonotonicityReport r;
  for (const auto& a : entries) {
    for (const auto& b : entries) {
      if (a.n_edges >= b.n_edges) continue;
      ++r.cardinality_pairs;
      const bool nested = (a.edges_mask & b.edges_mask) == a.edges_mask;
      if (nested) ++r.nested_pairs;
      if (a.expectation > b.expectation) {
        PairViolation v{a.edges_mask, b.edges_mask, a.expectation, b.expectation};
        ++r.cardinality_violations;
        if (r.cardinality_examples.size() < kMaxCardinalityExamples) r.cardinality_examples.push_back(v);
        if (nested) r.nested_violations.push_back(std::move(v));
      }
    }
  }
  return r;
}

BatchMaxReport test_conjecture_batch_max(std::int64_t n, std::int64_t ell, const std::vector<LabEntry>& entries) {
  BatchMaxReport r;
  r.batch_expectation = polya_expected(BatchParams(n, ell));
  bool first = true;
  for (const auto& e : entries) {
    if (first || e.expectation > r.max_expectation) {
      r.max_expectation = e.expectation;
      r.argmax_mask = e.edges_mask;
      first = false;
    }
    if (e.expectation > r.batch_expectation) r.exceeding.push_back(e.edges_mask);
  }
  return r;
}

LowerReport test_conjecture_lower(std::int64_t n, std::int64_t ell, const std::vector<LabEntry>& entries) {
  LowerReport r;
  const std::int64_t q = n / ell;
  r.bound = Rational(q) * harmonic(q);
  bool first = true;
  for (const auto& e : entries) {
    if (first || e.expectation < r.min_expectation) {
      r.min_expectation = e.expectation;
      r.argmin_mask = e.edges_mask;
      first = false;
    }
    if (e.expectation < r.bound) r.below.push_back(e.edges_mask);
  }
  if (n % ell == 0) {
    bool attains = true;
    for (const auto& e : entries) {
      if (e.degree == 1 && e.expectation != r.bound) attains = false;
    }
    r.partition_attains = attains;
  }
  return r;
}

MonotonicityReport test_conjecture_monotonicity(std::int64_t n, std::int64_t ell) {
  return test_conjecture_monotonicity(evaluate_uniform_regular(n, ell));
}

BatchMaxReport test_conjecture_batch_max(std::int64_t n, std::int64_t ell) {
  return test_conjecture_batch_max(n, ell, evaluate_uniform_regular(n, ell));
}

LowerReport test_conjecture_lower(std::int64_t n, std::int64_t ell) {
  return test_conjecture_lower(n, ell, evaluate_uniform_regular(n, ell));
}

LabReport run_lab(std::int64_t n, std::int64_t ell) {
  LabReport r{n, ell, universal_upper(n, ell), evaluate_uniform_regular(n, ell), {}, {}, {}};
  r.monotonicity = test_conjecture_monotonicity(r.entries);
  r.batch_max = test_conjecture_batch_max(n, ell, r.entries);
  r.lower = test_conjecture_lower(n, ell, r.entries);
  return r;
}

void write_verdicts(std::ostream& out, const LabReport& report) {
  std::set<std::uint64_t> non_monotone;
  for (const auto& v : report.monotonicity.nested_violations) {
    non_monotone.insert(v.smaller_mask);
    non_monotone.insert(v.larger_mask);
  }
  const std::set<std::uint64_t> exceeding(report.batch_max.exceeding.begin(), report.batch_max.exceeding.end());
  const std::set<std::uint64_t> below(report.lower.below.begin(), report.lower.below.end());
  for (const auto& e : report.entries) {
    out << e.edges_mask << ',' << e.degree << ',' << e.expectation.numerator().get_str() << '/'
        << e.expectation.denominator().get_str() << ",upper:ok|monotone:"
        << (non_monotone.count(e.edges_mask) ? "violated" : "ok")
        << "|batch-max:" << (exceeding.count(e.edges_mask) ? "exceeds" : "ok")
        << "|lower:" << (below.count(e.edges_mask) ? "below" : "ok") << '\n';
  }
}

}  // namespace coverkit
