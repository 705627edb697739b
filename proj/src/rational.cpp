#include "descartes/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace descartes {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rational q(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
  q.canonicalize();
  return q;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  Integer z(std::string(s), 10);
  return negative ? Integer(-z) : z;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty rational");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    bool den_negative = false;
    if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) {
      den_negative = den_text.front() == '-';
      den_text.remove_prefix(1);
    }
    if (!all_digits(den_text)) throw std::invalid_argument("bad denominator in '" + std::string(text) + "'");
    Integer den(std::string(den_text), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    Rational q(den_negative ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
  }

  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    bool negative = !whole.empty() && whole.front() == '-';
    if (!whole.empty() && (whole.front() == '-' || whole.front() == '+')) whole.remove_prefix(1);
    if (whole.empty()) whole = "0";
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac)))
      throw std::invalid_argument("bad decimal '" + std::string(text) + "'");
    Integer scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    Integer num = Integer(std::string(whole), 10) * scale;
    if (!frac.empty()) num += Integer(std::string(frac), 10);
    Rational q(negative ? Integer(-num) : num, scale);
    q.canonicalize();
    return q;
  }

  return Rational(parse_integer(text));
}

std::string to_text(const Rational& q) { return q.get_str(10); }

Rational abs_value(const Rational& q) { return sgn(q) < 0 ? Rational(-q) : q; }

Rational pow2(int k) {
  Integer p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(k < 0 ? -k : k));
  if (k >= 0) return Rational(p);
  Rational q(Integer(1), p);
  q.canonicalize();
  return q;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational result = 1;
  Rational b = base;
  while (exponent) {
    if (exponent & 1u) result *= b;
    exponent >>= 1u;
    if (exponent) b *= b;
  }
  return result;
}

std::string to_decimal(const Rational& q, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer scaled = q.get_num() * scale;
  Integer truncated;
  mpz_tdiv_q(truncated.get_mpz_t(), scaled.get_mpz_t(), q.get_den().get_mpz_t());
  bool negative = sgn(q) < 0;
  Integer mag = abs(truncated);
  std::string body = mag.get_str(10);
  if (digits > 0) {
    if (static_cast<int>(body.size()) <= digits) body.insert(0, static_cast<std::size_t>(digits + 1 - body.size()), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (negative ? "-" : "") + body;
}

}  // namespace descartes
