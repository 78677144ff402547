#pragma once

// Seeded generators for property checks. Every sample draws from its own
// stream, keyed by (seed, identity name, sample index), so a counterexample
// can be replayed in isolation.

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "nearpoint/diff_op.hpp"
#include "nearpoint/smooth_fn.hpp"

namespace nearpoint {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Seed of sample `index` of identity `name` under the run seed.
inline std::uint64_t sample_seed(std::uint64_t seed, std::string_view name, std::uint64_t index) {
  return splitmix64(splitmix64(seed ^ fnv1a(name)) + index);
}

struct GeneratorLimits {
  unsigned max_degree = 3;
  unsigned max_terms = 4;
  int coefficient_bound = 9;
};

/// Bounded draws are taken by reduction modulo the range so that streams are
/// identical across standard-library implementations.
class SampleRng {
 public:
  explicit SampleRng(std::uint64_t seed, GeneratorLimits limits = {}) : engine_(seed), limits_(limits) {}

  const GeneratorLimits& limits() const noexcept { return limits_; }

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi].
  int integer(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }

  bool coin() { return (next() & 1U) != 0; }

  /// p/q with |p| <= bound, 1 <= q <= bound.
  Rational rational() {
    const int b = limits_.coefficient_bound;
    Rational r(integer(-b, b), integer(1, b));
    r.canonicalize();
    return r;
  }

  Rational nonzero_rational() {
    Rational r = rational();
    while (is_zero(r)) r = rational();
    return r;
  }

  Monomial monomial(std::size_t n) {
    const unsigned degree = static_cast<unsigned>(integer(0, static_cast<int>(limits_.max_degree)));
    std::vector<unsigned> exps(n, 0);
    for (unsigned k = 0; k < degree; ++k) ++exps[static_cast<std::size_t>(integer(0, static_cast<int>(n) - 1))];
    return Monomial(std::move(exps));
  }

 private:
  std::mt19937_64 engine_;
  GeneratorLimits limits_;
};

inline Poly random_poly(SampleRng& rng, std::size_t n) {
  Poly out = zero_poly(n);
  const int terms = rng.integer(1, static_cast<int>(rng.limits().max_terms));
  for (int t = 0; t < terms; ++t) out.add_term(rng.monomial(n), rng.rational());
  return out;
}

/// Random element of A; each basis coordinate is present with probability 1/2.
inline AElement random_element(SampleRng& rng, const AlgebraPtr& alg) {
  Coords c(alg->dim(), Rational(0));
  for (auto& x : c) {
    if (rng.coin()) x = rng.rational();
  }
  return AElement(alg, std::move(c));
}

inline AElement random_unit(SampleRng& rng, const AlgebraPtr& alg) {
  AElement a = random_element(rng, alg);
  return a + AElement::scalar(alg, rng.nonzero_rational() - augmentation(a));
}

inline APoly random_apoly(SampleRng& rng, const AlgebraPtr& alg, std::size_t n) {
  APoly out = zero_apoly(alg, n);
  const int terms = rng.integer(1, static_cast<int>(rng.limits().max_terms));
  for (int t = 0; t < terms; ++t) out.add_term(rng.monomial(n), random_element(rng, alg));
  return out;
}

inline NearPoint random_near_point(SampleRng& rng, const AlgebraPtr& alg, std::size_t n) {
  std::vector<AElement> coords;
  for (std::size_t j = 0; j < n; ++j) coords.push_back(random_element(rng, alg));
  return NearPoint(alg, std::move(coords));
}

/// Random order-<=1 operator; the multiplier is zero on about half the draws.
inline DiffOp random_diff_op(SampleRng& rng, const AlgebraPtr& alg, std::size_t n) {
  DiffOp x = zero_diff_op(alg, n);
  for (auto& z : x.components) z = random_apoly(rng, alg, n);
  if (rng.coin()) x.multiplier = random_apoly(rng, alg, n);
  return x;
}

}  // namespace nearpoint
