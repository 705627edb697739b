#include "descartes/sampling.hpp"

#include <stdexcept>

namespace descartes {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ull * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

std::uint64_t name_hash(std::string_view name) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : name) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

std::int64_t RationalSampler::integer(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw std::invalid_argument("RationalSampler::integer: empty range");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t r = engine_();
  while (limit != 0 && r >= limit) r = engine_();
  return lo + static_cast<std::int64_t>(span == 0 ? r : r % span);
}

Rational RationalSampler::uniform(const Rational& lo, const Rational& hi, std::int64_t den) {
  Rational scaled_lo = lo * den;
  Rational scaled_hi = hi * den;
  Integer klo;
  Integer khi;
  mpz_cdiv_q(klo.get_mpz_t(), scaled_lo.get_num_mpz_t(), scaled_lo.get_den_mpz_t());
  mpz_fdiv_q(khi.get_mpz_t(), scaled_hi.get_num_mpz_t(), scaled_hi.get_den_mpz_t());
  if (khi < klo) throw std::invalid_argument("RationalSampler::uniform: empty range");
  const std::int64_t k = integer(klo.get_si(), khi.get_si());
  return make_rational(k, den);
}

Rational RationalSampler::positive(const Rational& hi, std::int64_t den) {
  Rational scaled = hi * den;
  Integer khi;
  mpz_fdiv_q(khi.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
  if (khi < 1) throw std::invalid_argument("RationalSampler::positive: range too small");
  return make_rational(integer(1, khi.get_si()), den);
}

Rational RationalSampler::log_uniform(int max_exp) {
  const auto e = static_cast<int>(integer(-max_exp, max_exp - 1));
  const auto j = integer(0, 15);
  return pow2(e) * make_rational(16 + j, 16);
}

}  // namespace descartes
