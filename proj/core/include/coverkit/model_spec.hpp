#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "coverkit/hypergraph.hpp"
#include "coverkit/rational.hpp"

namespace coverkit {

namespace spec {
struct Windows {
  std::int64_t n;
  std::int64_t ell;
};
struct CyclicWindows {
  std::int64_t n;
  std::int64_t ell;
};
struct Batch {
  std::int64_t n;
  std::int64_t ell;
};
struct Arcs {
  Rational a;
};
struct DeltaD {
  std::int64_t n;
  std::int64_t ell;
  std::int64_t d;
};
struct Torus {
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> window;
};
struct HammingBalls {
  unsigned d;
  unsigned t;
};
/// Batch draws of size ell until item i has been seen v[i] times.
struct Demand {
  std::int64_t n;
  std::int64_t ell;
  std::vector<std::int64_t> v;
};
struct Explicit {
  CoverageModel model;
};
}  // namespace spec

using ModelSpec = std::variant<spec::Windows, spec::CyclicWindows, spec::Batch, spec::Arcs, spec::DeltaD,
                               spec::Torus, spec::HammingBalls, spec::Demand, spec::Explicit>;

/// Largest torus (product of dims) the simulator accepts.
inline constexpr std::int64_t kMaxTorusCells = std::int64_t{1} << 26;

/// Throws InputError/DomainError if the parameters violate the model's
/// constraints.
void validate(const ModelSpec& spec);

/// Short kind name: windows, cyclic, batch, arcs, delta-d, torus, hamming,
/// demand, explicit.
std::string kind_name(const ModelSpec& spec);

/// Label with parameters and no commas, e.g. "cyclic n=4 l=2".
std::string label(const ModelSpec& spec);

struct ExactResult {
  Rational value;
  std::string engine;
};

/// Exact expectation via the cheapest applicable engine. Throws InputError
/// for models without one (torus, demand with multiplicities above 1).
ExactResult exact_expectation(const ModelSpec& spec, const EnumerationCaps& caps = {});

}  // namespace coverkit
