#include "coverkit/batch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "coverkit/combinatorics.hpp"
#include "coverkit/error.hpp"

namespace coverkit {

BatchParams::BatchParams(std::int64_t n, std::int64_t ell) : n_(n), ell_(ell) {
  if (n < 1 || ell < 1 || ell > n) {
    throw InputError("batch parameters need 1 <= l <= n, got n=" + std::to_string(n) +
                     " l=" + std::to_string(ell));
  }
}

PartialTarget::PartialTarget(std::int64_t m, std::int64_t k) : m_(m), k_(k) {
  if (k < 1 || k > m) {
    throw InputError("partial target needs 1 <= k <= m, got m=" + std::to_string(m) +
                     " k=" + std::to_string(k));
  }
}

DemandVector::DemandVector(std::vector<std::int64_t> demand) : demand_(std::move(demand)) {
  if (std::any_of(demand_.begin(), demand_.end(), [](std::int64_t v) { return v < 0; })) {
    throw InputError("demand entries must be non-negative");
  }
  if (std::none_of(demand_.begin(), demand_.end(), [](std::int64_t v) { return v > 0; })) {
    throw InputError("demand vector needs at least one positive entry");
  }
}

DemandVector DemandVector::uniform(std::int64_t n, std::int64_t m) {
  if (n < 1) throw InputError("demand vector needs at least one item");
  return DemandVector(std::vector<std::int64_t>(static_cast<std::size_t>(n), m));
}

Rational polya_expected(const BatchParams& p) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (ell == n) return Rational(1);
  const BigInt total_batches = binomial(n, ell);
  Rational sum;
  for (std::int64_t i = 0; i <= n - 1; ++i) {
    BigInt num = binomial(n, i);
    if ((n - i + 1) % 2 != 0) num = -num;
    sum += Rational(num, total_batches - binomial(i, ell));
  }
  return Rational(total_batches) * sum;
}

Rational stadje_expected(const BatchParams& p, const PartialTarget& target) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  const std::int64_t m = target.m();
  const std::int64_t k = target.k();
  if (m > n) throw InputError("partial target m=" + std::to_string(m) + " exceeds n=" + std::to_string(n));
  const BigInt total_batches = binomial(n, ell);
  Rational sum;
  for (std::int64_t i = 0; i <= k - 1; ++i) {
    BigInt num = binomial(m, i) * binomial(m - i - 1, m - k);
    if (num == 0) continue;
    if ((k - i + 1) % 2 != 0) num = -num;
    BigInt den = total_batches - binomial(i + n - m, ell);
    if (den <= 0) throw ConsistencyError("stadje_expected: vanishing denominator");
    sum += Rational(num, den);
  }
  return Rational(total_batches) * sum;
}

RationalBounds sandwich_bounds(const BatchParams& p, const PartialTarget& target) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (ell >= n) throw DomainError("sandwich_bounds requires l < n");
  if (target.m() > n) throw InputError("partial target m exceeds n");
  const Rational single = harmonic(target.m()) - harmonic(target.m() - target.k());
  const Rational per_batch = harmonic(n) - harmonic(n - ell);
  return {single / per_batch, (single - Rational(1, n)) / per_batch + Rational(1)};
}

RationalBounds normalization_bounds(const Rational& e_single, std::int64_t n, std::int64_t ell) {
  if (n < 1 || ell < 1 || ell >= n) throw DomainError("normalization_bounds requires 1 <= l < n");
  if (e_single < Rational(1)) throw DomainError("normalization_bounds requires e_single >= 1");
  const Rational scale = Rational(n) * (harmonic(n) - harmonic(n - ell));
  return {e_single / scale, (e_single - Rational(1, n)) / scale + Rational(1)};
}

double dixie_asymptotic(std::int64_t n, std::int64_t m) {
  if (n < 3) throw DomainError("dixie_asymptotic requires n >= 3");
  if (m < 1) throw InputError("dixie_asymptotic requires m >= 1");
  const double ln = std::log(static_cast<double>(n));
  return static_cast<double>(n) * (ln + static_cast<double>(m - 1) * std::log(ln) + kEulerGamma);
}

double universal_upper(std::int64_t n, std::int64_t ell) {
  if (n < 1 || ell < 1 || ell > n) throw InputError("universal_upper requires 1 <= l <= n");
  return static_cast<double>(n) / static_cast<double>(ell) * (std::log(static_cast<double>(n)) + 1.0);
}

std::vector<BitSet> all_subsets_of_size(std::int64_t n, std::int64_t ell) {
  if (n < 1 || ell < 1 || ell > n) throw InputError("subset size must lie in [1, n]");
  std::vector<BitSet> out;
  std::vector<std::int64_t> pick(static_cast<std::size_t>(ell));
  std::iota(pick.begin(), pick.end(), 0);
  for (;;) {
    BitSet s(static_cast<std::size_t>(n));
    for (auto v : pick) s.set(static_cast<std::size_t>(v));
    out.push_back(std::move(s));
    // Advance to the next combination in lexicographic order.
    std::int64_t i = ell - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - ell + i) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (auto j = i + 1; j < ell; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

CoverageModel build_batch_model(const BatchParams& p, const EnumerationCaps& caps) {
  if (binomial(p.n(), p.ell()) > static_cast<unsigned long>(caps.max_model_edges)) {
    throw CapacityError("batch model C(" + std::to_string(p.n()) + "," + std::to_string(p.ell()) +
                        ") exceeds the model edge cap of " + std::to_string(caps.max_model_edges));
  }
  return CoverageModel(static_cast<std::size_t>(p.n()), all_subsets_of_size(p.n(), p.ell()));
}

}  // namespace coverkit
