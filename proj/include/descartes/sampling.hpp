#pragma once

#include "descartes/rational.hpp"

#include <cstdint>
#include <random>
#include <string_view>

namespace descartes {

/// SplitMix64 finalizer; used to derive independent stream seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// FNV-1a of a name, for seeding per-check or per-couple streams.
std::uint64_t name_hash(std::string_view name);

/// Deterministic source of exact rationals. Only raw engine output is used
/// (no std distributions), so sequences are identical on every platform.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi);
  /// k / den with k uniform so that the value lies in [lo, hi].
  Rational uniform(const Rational& lo, const Rational& hi, std::int64_t den = 64);
  /// Strictly positive value in (0, hi].
  Rational positive(const Rational& hi, std::int64_t den = 64);
  /// Magnitude 2^e * (1 + j/16) with e uniform in [-max_exp, max_exp).
  Rational log_uniform(int max_exp);
  bool coin() { return (engine_() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace descartes
