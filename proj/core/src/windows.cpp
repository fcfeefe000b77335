#include "coverkit/windows.hpp"

#include <algorithm>
#include <string>

#include "coverkit/combinatorics.hpp"
#include "coverkit/continuous.hpp"
#include "coverkit/error.hpp"

namespace coverkit {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::string describe(const WindowsParams& p) {
  return "(n=" + std::to_string(p.n()) + ", l=" + std::to_string(p.ell()) + ")";
}

// (-1)^i C(s-1, i) C(n-ell-i*ell-1, s-2), the shared summand of both closed forms.
BigInt gap_term(std::int64_t n, std::int64_t ell, std::int64_t s, std::int64_t i) {
  BigInt term = binomial(s - 1, i) * binomial(n - ell - i * ell - 1, s - 2);
  return (i % 2 == 0) ? term : BigInt(-term);
}

}  // namespace

WindowsParams::WindowsParams(std::int64_t n, std::int64_t ell) : n_(n), ell_(ell) {
  if (n < 1 || ell < 1 || ell > n) {
    throw InputError("windows parameters need 1 <= l <= n, got n=" + std::to_string(n) +
                     " l=" + std::to_string(ell));
  }
}

BigInt alpha_windows(const WindowsParams& p, std::int64_t s) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (s < 0 || s > n - ell) {
    throw InputError("alpha_windows: s=" + std::to_string(s) + " outside [0, " +
                     std::to_string(n - ell) + "]");
  }
  if (n == ell) return 0;  // the single window model: only s = 0 is in range
  const std::int64_t upper = std::min(s - 1, (n - ell - s + 1) / ell);
  BigInt total = 0;
  for (std::int64_t i = 0; i <= upper; ++i) total += gap_term(n, ell, s, i);
  return total;
}

Rational expected_windows(const WindowsParams& p) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (ell == n) return Rational(1);
  const std::int64_t W = p.window_count();
  Rational total = Rational(W) * harmonic(W);
  for (std::int64_t s = ceil_div(n, ell); s <= n - ell; ++s) {
    BigInt a = alpha_windows(p, s);
    if (a != 0) total -= Rational(a, binomial(n - ell, s));
  }
  return total;
}

Rational expected_windows_altform(const WindowsParams& p) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (ell >= n) throw DomainError("expected_windows_altform requires n > l, got " + describe(p));
  const std::int64_t W = p.window_count();
  const std::int64_t c = ceil_div(n, ell);
  Rational total = Rational(3 * W, 2);
  for (std::int64_t i = 1; i <= c - 2; ++i) {
    for (std::int64_t s = i + 1; s <= n - ell - i * ell + 1; ++s) {
      BigInt term = -gap_term(n, ell, s, i);  // (-1)^{i+1}
      if (term != 0) total += Rational(term, binomial(n - ell, s));
    }
  }
  return total;
}

Rational expected_windows_large(const WindowsParams& p) {
  if (2 * p.ell() < p.n() || p.ell() >= p.n()) {
    throw DomainError("expected_windows_large requires n/2 <= l < n, got " + describe(p));
  }
  return Rational(3 * p.window_count(), 2);
}

Rational expected_windows_third(const WindowsParams& p) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (3 * ell < n || 2 * ell >= n) {
    throw DomainError("expected_windows_third requires n/3 <= l < n/2, got " + describe(p));
  }
  const std::int64_t W = p.window_count();
  Rational correction(BigInt(static_cast<long>(W * (6 * n - 10 * ell))),
                      BigInt(static_cast<long>(ell)) * (ell + 1) * (ell + 2) * (ell + 3));
  return Rational(3 * W, 2) + correction;
}

Rational markov_middle_expectation(const WindowsParams& p, std::int64_t uncovered_middle,
                                   int extremes_seen) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (3 * ell < n || 2 * ell >= n) {
    throw DomainError("markov_middle_expectation requires n/3 <= l < n/2, got " + describe(p));
  }
  const std::int64_t i = uncovered_middle;
  if (i < 0 || i > n - 2 * ell || extremes_seen < 0 || extremes_seen > 2) {
    throw InputError("markov_middle_expectation: state (i=" + std::to_string(i) +
                     ", k=" + std::to_string(extremes_seen) + ") out of range");
  }
  const Rational W(p.window_count());
  const Rational L(ell);
  const Rational l1 = L * Rational(ell + 1);
  const Rational l2 = l1 * Rational(ell + 2);
  const Rational l3 = l2 * Rational(ell + 3);

  if (i == 0) {
    // Only the missing extreme windows remain, each hit with probability 1/W.
    switch (extremes_seen) {
      case 2: return Rational(0);
      case 1: return W;
      default: return Rational(3, 2) * W;
    }
  }
  const Rational steps(i - 1);
  switch (extremes_seen) {
    case 2: return W / L + W / l1 * steps;
    case 1: return W + W / l1 + Rational(2) * W / l2 * steps;
    default: return Rational(3, 2) * W + Rational(2) * W / l2 + Rational(6) * W / l3 * steps;
  }
}

WindowsBounds windows_bounds(const WindowsParams& p) {
  const std::int64_t n = p.n();
  const std::int64_t ell = p.ell();
  if (ell >= n) throw DomainError("windows_bounds requires l < n, got " + describe(p));
  const std::int64_t W = p.window_count();
  const Rational linear(3 * W, 2);
  const std::int64_t m = W / ell;
  const Rational collector = Rational(m) * harmonic(m);
  WindowsBounds out{std::max(linear, collector), linear.to_double()};
  if (ell < W) out.upper += stevens_exact(ArcParams(Rational(ell, W))).to_double();
  return out;
}

Rational large_ell_residual(const WindowsParams& p, const Rational& c) {
  if (c <= Rational(1)) throw DomainError("large_ell_residual needs a constant c > 1");
  if (Rational(p.ell()) * c < Rational(p.n())) {
    throw DomainError("large_ell_residual requires l >= n/c, got " + describe(p) + " c=" + c.to_string());
  }
  return expected_windows(p) - Rational(3 * p.window_count(), 2);
}

CoverageModel windows_model(const WindowsParams& p) {
  std::vector<BitSet> edges;
  for (std::int64_t start = 0; start < p.window_count(); ++start) {
    BitSet w(static_cast<std::size_t>(p.n()));
    for (std::int64_t j = start; j < start + p.ell(); ++j) w.set(static_cast<std::size_t>(j));
    edges.push_back(std::move(w));
  }
  return CoverageModel(static_cast<std::size_t>(p.n()), std::move(edges));
}

}  // namespace coverkit
