#include "coverkit/continuous.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "coverkit/combinatorics.hpp"
#include "coverkit/cyclic.hpp"
#include "coverkit/error.hpp"

namespace coverkit {

namespace {

// floor(1/a) for 0 < a < 1.
std::int64_t term_count(const Rational& a) {
  BigInt q = a.denominator() / a.numerator();
  return q.get_si();
}

}  // namespace

ArcParams::ArcParams(Rational a) : a_(std::move(a)) {
  if (a_ <= Rational(0) || a_ >= Rational(1)) {
    throw InputError("arc length must lie in (0, 1), got " + a_.to_string());
  }
}

Rational stevens_exact(const ArcParams& p) {
  // With a = P/Q each term is (Q - kP)^{k-1} Q^2 / (kP)^{k+1}.
  const BigInt P = p.a().numerator();
  const BigInt Q = p.a().denominator();
  const BigInt Q2 = Q * Q;
  const std::int64_t K = term_count(p.a());
  Rational total(1);
  for (std::int64_t k = 1; k <= K; ++k) {
    BigInt base = Q - P * static_cast<long>(k);
    BigInt num;
    mpz_pow_ui(num.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(k - 1));
    num *= Q2;
    if (num == 0) continue;
    BigInt kp = P * static_cast<long>(k);
    BigInt den;
    mpz_pow_ui(den.get_mpz_t(), kp.get_mpz_t(), static_cast<unsigned long>(k + 1));
    if (k % 2 == 0) num = -num;
    total += Rational(num, den);
  }
  return total;
}

double stevens_float(const ArcParams& p) {
  const double a = p.a().to_double();
  const std::int64_t K = term_count(p.a());
  // Working precision covers the largest term so the alternating sum cancels
  // without loss.
  double max_log2 = 0.0;
  for (std::int64_t k = 1; k <= K; ++k) {
    const double ka = static_cast<double>(k) * a;
    const double gap = 1.0 - ka;
    double lg = -static_cast<double>(k + 1) * std::log2(ka);
    if (gap > 0) lg += static_cast<double>(k - 1) * std::log2(gap);
    max_log2 = std::max(max_log2, lg);
  }
  const auto prec = static_cast<mpfr_prec_t>(96 + std::ceil(max_log2) + std::log2(static_cast<double>(K) + 1));

  const BigInt P = p.a().numerator();
  const BigInt Q = p.a().denominator();
  mpfr_t sum, term, base, tmp;
  mpfr_inits2(prec, sum, term, base, tmp, static_cast<mpfr_ptr>(nullptr));
  mpfr_set_ui(sum, 1, MPFR_RNDN);
  for (std::int64_t k = 1; k <= K; ++k) {
    const BigInt gap_num = Q - P * static_cast<long>(k);
    if (gap_num == 0 && k > 1) continue;
    // (1 - k a)^{k-1}
    mpfr_set_z(base, gap_num.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(base, base, Q.get_mpz_t(), MPFR_RNDN);
    mpfr_pow_ui(term, base, static_cast<unsigned long>(k - 1), MPFR_RNDN);
    // (k a)^{k+1}
    const BigInt kp = P * static_cast<long>(k);
    mpfr_set_z(base, kp.get_mpz_t(), MPFR_RNDN);
    mpfr_div_z(base, base, Q.get_mpz_t(), MPFR_RNDN);
    mpfr_pow_ui(tmp, base, static_cast<unsigned long>(k + 1), MPFR_RNDN);
    mpfr_div(term, term, tmp, MPFR_RNDN);
    if (k % 2 == 0) {
      mpfr_sub(sum, sum, term, MPFR_RNDN);
    } else {
      mpfr_add(sum, sum, term, MPFR_RNDN);
    }
  }
  const double out = mpfr_get_d(sum, MPFR_RNDN);
  mpfr_clears(sum, term, base, tmp, static_cast<mpfr_ptr>(nullptr));
  return out;
}

double flatto_asymptotic(const ArcParams& p) {
  const double a = p.a().to_double();
  if (a * std::numbers::e >= 1.0) {
    throw DomainError("flatto_asymptotic requires a < 1/e, got " + p.a().to_string());
  }
  const double inv = 1.0 / a;
  return inv * (std::log(inv) + std::log(std::log(inv)) + kEulerGamma);
}

Rational arc_upper_bound(const Rational& c) {
  if (c < Rational(1)) throw DomainError("arc_upper_bound requires c >= 1, got " + c.to_string());
  return Rational(1) + c * c;
}

Rational dominance_gap(std::int64_t n, std::int64_t ell) {
  if (n < 2 || ell < 1 || ell >= n) {
    throw DomainError("dominance_gap requires 1 <= l < n, got n=" + std::to_string(n) +
                      " l=" + std::to_string(ell));
  }
  Rational gap = stevens_exact(ArcParams(Rational(ell, n))) - expected_cyclic(CyclicParams(n, ell));
  if (gap.sign() < 0) {
    throw ConsistencyError("arc model fails to dominate cyclic windows at n=" + std::to_string(n) +
                           " l=" + std::to_string(ell) + ": gap " + gap.to_string());
  }
  return gap;
}

}  // namespace coverkit
