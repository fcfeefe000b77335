#include "coverkit/combinatorics.hpp"

#include <mutex>
#include <vector>

#include "coverkit/error.hpp"

namespace coverkit {

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Rational harmonic(std::int64_t n) {
  if (n < 0) throw InputError("harmonic number of negative index");
  static std::mutex mutex;
  static std::vector<Rational> table{Rational(0)};
  std::lock_guard lock(mutex);
  while (static_cast<std::int64_t>(table.size()) <= n) {
    auto k = static_cast<std::int64_t>(table.size());
    table.push_back(table.back() + Rational(1, k));
  }
  return table[static_cast<std::size_t>(n)];
}

}  // namespace coverkit
