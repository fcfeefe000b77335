#include "coverkit/cyclic.hpp"

#include <string>

#include "coverkit/combinatorics.hpp"
#include "coverkit/error.hpp"

namespace coverkit {

namespace {

std::string describe(std::int64_t n, std::int64_t ell) {
  return "(n=" + std::to_string(n) + ", l=" + std::to_string(ell) + ")";
}

BigInt signed_term(std::int64_t j, BigInt value) { return (j % 2 == 0) ? value : BigInt(-value); }

}  // namespace

CyclicParams::CyclicParams(std::int64_t n, std::int64_t ell) : n_(n), ell_(ell) {
  if (n < 1 || ell < 1 || ell > n) {
    throw InputError("cyclic parameters need 1 <= l <= n, got n=" + std::to_string(n) +
                     " l=" + std::to_string(ell));
  }
}

DeltaDParams::DeltaDParams(std::int64_t n, std::int64_t ell, std::int64_t d) : n_(n), ell_(ell), d_(d) {
  if (n < 1 || ell < 1 || d < 1 || ell > n) {
    throw InputError("Delta-d parameters need positive d and 1 <= l <= n");
  }
  if (ell % d != 0 || n % ell != 0) {
    throw DomainError("Delta-d requires d | l | n, got n=" + std::to_string(n) +
                      " l=" + std::to_string(ell) + " d=" + std::to_string(d));
  }
}

BigInt beta_cyclic(const CyclicParams& p, std::int64_t s) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (s < 1 || s > n) throw InputError("beta_cyclic: s=" + std::to_string(s) + " outside [1, n]");
  BigInt total = 0;
  for (std::int64_t j = 0; j <= (n - s) / ell; ++j) {
    total += signed_term(j, binomial(s, j) * binomial(n - ell * j - 1, s - 1));
  }
  return total;
}

BigInt alpha_cyclic(const CyclicParams& p, std::int64_t s) {
  BigInt pairs = beta_cyclic(p, s) * static_cast<long>(p.n());
  BigInt quotient;
  BigInt remainder;
  mpz_fdiv_qr_ui(quotient.get_mpz_t(), remainder.get_mpz_t(), pairs.get_mpz_t(),
                 static_cast<unsigned long>(s));
  if (remainder != 0) {
    throw ConsistencyError("cyclic double count n*beta(s) not divisible by s at " +
                           describe(p.n(), p.ell()) + " s=" + std::to_string(s));
  }
  return quotient;
}

Rational expected_cyclic(const CyclicParams& p) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (ell == n) return Rational(1);
  Rational total = Rational(n) * (harmonic(n) - harmonic(ell - 1));
  for (std::int64_t s = (n + ell - 1) / ell; s <= n - ell; ++s) {
    BigInt a = alpha_cyclic(p, s);
    if (a != 0) total -= Rational(a, binomial(n - 1, s));
  }
  return total;
}

Rational expected_cyclic_l2(std::int64_t n) {
  if (n < 2) throw DomainError("expected_cyclic_l2 requires n >= 2");
  Rational total = Rational(n) * (harmonic(n) - Rational(1));
  for (std::int64_t s = (n + 1) / 2; s <= n - 2; ++s) {
    BigInt a = binomial(s - 1, n - s - 1) + binomial(s, n - s);
    if (a != 0) total -= Rational(a, binomial(n - 1, s));
  }
  return total;
}

Rational expected_delta_d(const DeltaDParams& p) {
  return expected_cyclic(CyclicParams(p.n() / p.d(), p.ell() / p.d()));
}

std::vector<std::pair<std::int64_t, Rational>> check_delta_monotonicity(std::int64_t n,
                                                                        std::int64_t ell) {
  const CyclicParams full(n, ell);
  if (n % ell != 0) throw DomainError("check_delta_monotonicity requires l | n, got " + describe(n, ell));
  const Rational reference = expected_cyclic(full);
  std::vector<std::pair<std::int64_t, Rational>> out;
  for (std::int64_t d = 1; d <= ell; ++d) {
    if (ell % d != 0) continue;
    Rational value = expected_delta_d(DeltaDParams(n, ell, d));
    if (value > reference) {
      throw ConsistencyError("Delta-d monotonicity counterexample at " + describe(n, ell) +
                             " d=" + std::to_string(d) + ": " + value.to_string() + " > " +
                             reference.to_string());
    }
    out.emplace_back(d, std::move(value));
  }
  return out;
}

Rational cyclic_lower_bound(const CyclicParams& p) {
  const std::int64_t m = p.n() / p.ell();
  return Rational(m) * harmonic(m);
}

namespace {

// Cyclic windows of length ell starting at 0, stride, 2*stride, ... on Z_n.
CoverageModel strided_windows(std::int64_t n, std::int64_t ell, std::int64_t stride) {
  const auto size = static_cast<std::size_t>(n);
  std::vector<BitSet> edges;
  for (std::int64_t start = 0; start < n; start += stride) {
    BitSet w(size);
    for (std::int64_t j = 0; j < ell; ++j) w.set(static_cast<std::size_t>((start + j) % n));
    edges.push_back(std::move(w));
    if (ell == n) break;  // every window is the full circle
  }
  return CoverageModel(size, std::move(edges));
}

}  // namespace

CoverageModel cyclic_model(const CyclicParams& p) { return strided_windows(p.n(), p.ell(), 1); }

CoverageModel delta_d_model(const DeltaDParams& p) { return strided_windows(p.n(), p.ell(), p.d()); }

}  // namespace coverkit
