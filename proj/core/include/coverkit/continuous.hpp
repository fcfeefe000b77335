#pragma once

#include <cstdint>

#include "coverkit/rational.hpp"

namespace coverkit {

/// Arc length as an exact fraction of the unit circumference, 0 < a < 1.
class ArcParams {
 public:
  explicit ArcParams(Rational a);
  const Rational& a() const { return a_; }

 private:
  Rational a_;
};

/// E[arc coverage time] = 1 + sum_{k=1}^{floor(1/a)} (-1)^{k-1} (1-ka)^{k-1} / (ka)^{k+1},
/// evaluated exactly.
Rational stevens_exact(const ArcParams& p);

/// Same series in binary floating point (MPFR), with working precision sized
/// to the largest term. Independent check on the exact evaluation.
double stevens_float(const ArcParams& p);

/// (1/a)(log(1/a) + log log(1/a) + gamma), natural logs. Requires a < 1/e.
double flatto_asymptotic(const ArcParams& p);

/// 1 + c^2, the union-bound ceiling for arcs of length a >= 1/c. Requires c >= 1.
Rational arc_upper_bound(const Rational& c);

/// stevens_exact(l/n) - expected_cyclic(n, l). Never negative (the arc model
/// dominates the discrete cyclic one); a negative value throws
/// ConsistencyError. Requires 1 <= l < n.
Rational dominance_gap(std::int64_t n, std::int64_t ell);

}  // namespace coverkit
