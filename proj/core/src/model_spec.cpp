#include "coverkit/model_spec.hpp"

#include <algorithm>
#include <sstream>

#include "coverkit/batch.hpp"
#include "coverkit/continuous.hpp"
#include "coverkit/cyclic.hpp"
#include "coverkit/error.hpp"
#include "coverkit/windows.hpp"

namespace coverkit {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

std::string join(const std::vector<std::int64_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "x" : "") << v[i];
  return out.str();
}

ExactResult exact_explicit(const CoverageModel& model, const EnumerationCaps& caps) {
  const bool ie_fits = model.n_vertices() <= caps.max_vertices;
  const bool profile_fits = model.n_edges() <= caps.max_edges;
  if (ie_fits && (!profile_fits || model.n_vertices() <= model.n_edges())) {
    return {expected_coverage_ie(model, caps), "inclusion-exclusion"};
  }
  if (profile_fits) return {expected_coverage_exact(recovery_profile(model, caps)), "recovery-profile"};
  throw CapacityError("model has " + std::to_string(model.n_vertices()) + " vertices and " +
                      std::to_string(model.n_edges()) + " edges; both exceed the exact-engine caps (" +
                      std::to_string(caps.max_vertices) + " vertices, " + std::to_string(caps.max_edges) +
                      " edges)");
}

}  // namespace

void validate(const ModelSpec& spec) {
  std::visit(Overloaded{
                 [](const spec::Windows& s) { WindowsParams(s.n, s.ell); },
                 [](const spec::CyclicWindows& s) { CyclicParams(s.n, s.ell); },
                 [](const spec::Batch& s) { BatchParams(s.n, s.ell); },
                 [](const spec::Arcs& s) { ArcParams{s.a}; },
                 [](const spec::DeltaD& s) { DeltaDParams(s.n, s.ell, s.d); },
                 [](const spec::Torus& s) {
                   if (s.dims.empty()) throw InputError("torus needs at least one dimension");
                   if (s.dims.size() != s.window.size()) {
                     throw InputError("torus dims and window must have the same length");
                   }
                   std::int64_t cells = 1;
                   for (std::size_t i = 0; i < s.dims.size(); ++i) {
                     if (s.dims[i] < 1 || s.window[i] < 1 || s.window[i] > s.dims[i]) {
                       throw InputError("torus needs 1 <= window[i] <= dims[i]");
                     }
                     if (cells > kMaxTorusCells / s.dims[i]) {
                       throw CapacityError("torus exceeds " + std::to_string(kMaxTorusCells) + " cells");
                     }
                     cells *= s.dims[i];
                   }
                 },
                 [](const spec::HammingBalls& s) {
                   if (s.d < 1) throw InputError("hamming model needs d >= 1");
                   if (s.t > s.d) throw InputError("hamming radius t must not exceed d");
                 },
                 [](const spec::Demand& s) {
                   BatchParams(s.n, s.ell);
                   if (s.v.size() != static_cast<std::size_t>(s.n)) {
                     throw InputError("demand vector length " + std::to_string(s.v.size()) +
                                      " does not match n=" + std::to_string(s.n));
                   }
                   DemandVector{s.v};
                 },
                 [](const spec::Explicit&) {},
             },
             spec);
}

std::string kind_name(const ModelSpec& spec) {
  return std::visit(Overloaded{
                        [](const spec::Windows&) { return std::string("windows"); },
                        [](const spec::CyclicWindows&) { return std::string("cyclic"); },
                        [](const spec::Batch&) { return std::string("batch"); },
                        [](const spec::Arcs&) { return std::string("arcs"); },
                        [](const spec::DeltaD&) { return std::string("delta-d"); },
                        [](const spec::Torus&) { return std::string("torus"); },
                        [](const spec::HammingBalls&) { return std::string("hamming"); },
                        [](const spec::Demand&) { return std::string("demand"); },
                        [](const spec::Explicit&) { return std::string("explicit"); },
                    },
                    spec);
}

std::string label(const ModelSpec& spec) {
  std::ostringstream out;
  out << kind_name(spec);
  std::visit(Overloaded{
                 [&](const spec::Windows& s) { out << " n=" << s.n << " l=" << s.ell; },
                 [&](const spec::CyclicWindows& s) { out << " n=" << s.n << " l=" << s.ell; },
                 [&](const spec::Batch& s) { out << " n=" << s.n << " l=" << s.ell; },
                 [&](const spec::Arcs& s) { out << " a=" << s.a; },
                 [&](const spec::DeltaD& s) { out << " n=" << s.n << " l=" << s.ell << " d=" << s.d; },
                 [&](const spec::Torus& s) { out << " dims=" << join(s.dims) << " window=" << join(s.window); },
                 [&](const spec::HammingBalls& s) { out << " d=" << s.d << " t=" << s.t; },
                 [&](const spec::Demand& s) {
                   out << " n=" << s.n << " l=" << s.ell << " v=";
                   for (std::size_t i = 0; i < s.v.size(); ++i) out << (i ? ":" : "") << s.v[i];
                 },
                 [&](const spec::Explicit& s) {
                   out << " vertices=" << s.model.n_vertices() << " edges=" << s.model.n_edges();
                 },
             },
             spec);
  return out.str();
}

ExactResult exact_expectation(const ModelSpec& spec, const EnumerationCaps& caps) {
  validate(spec);
  return std::visit(
      Overloaded{
          [](const spec::Windows& s) -> ExactResult {
            return {expected_windows(WindowsParams(s.n, s.ell)), "windows-formula"};
          },
          [](const spec::CyclicWindows& s) -> ExactResult {
            return {expected_cyclic(CyclicParams(s.n, s.ell)), "cyclic-formula"};
          },
          [](const spec::Batch& s) -> ExactResult { return {polya_expected(BatchParams(s.n, s.ell)), "polya"}; },
          [](const spec::Arcs& s) -> ExactResult { return {stevens_exact(ArcParams(s.a)), "stevens"}; },
          [](const spec::DeltaD& s) -> ExactResult {
            return {expected_delta_d(DeltaDParams(s.n, s.ell, s.d)), "delta-d-reduction"};
          },
          [](const spec::Torus&) -> ExactResult {
            throw InputError("no exact engine exists for torus models; use the simulate command");
          },
          [&](const spec::HammingBalls& s) -> ExactResult {
            return exact_explicit(build_hamming_model(s.d, s.t, caps), caps);
          },
          [](const spec::Demand& s) -> ExactResult {
            if (std::any_of(s.v.begin(), s.v.end(), [](std::int64_t x) { return x > 1; })) {
              throw InputError("no exact engine for demands above 1; use the simulate command");
            }
            const auto m = std::count(s.v.begin(), s.v.end(), std::int64_t{1});
            return {stadje_expected(BatchParams(s.n, s.ell), PartialTarget(m, m)), "stadje"};
          },
          [&](const spec::Explicit& s) -> ExactResult { return exact_explicit(s.model, caps); },
      },
      spec);
}

}  // namespace coverkit
