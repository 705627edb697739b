#include "descartes/signs.hpp"

#include <algorithm>
#include <sstream>

namespace descartes {

SignPattern::SignPattern(std::vector<int> signs) : signs_(std::move(signs)) {
  if (signs_.size() < 2) throw std::invalid_argument("sign pattern needs at least two signs");
  for (int s : signs_)
    if (s != 1 && s != -1) throw std::invalid_argument("sign pattern entries must be +1 or -1");
  if (signs_.front() != 1) throw std::invalid_argument("sign pattern must start with '+'");
}

SignPattern SignPattern::parse(std::string_view text) {
  std::vector<int> s;
  s.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      s.push_back(1);
    } else if (c == '-') {
      s.push_back(-1);
    } else {
      throw std::invalid_argument("bad character '" + std::string(1, c) + "' in sign pattern \"" +
                                  std::string(text) + "\"");
    }
  }
  return SignPattern(std::move(s));
}

std::string SignPattern::text() const {
  std::string out;
  out.reserve(signs_.size());
  for (int s : signs_) out.push_back(s > 0 ? '+' : '-');
  return out;
}

SignPattern SignPattern::prefix(std::size_t length) const {
  return SignPattern(std::vector<int>(signs_.begin(), signs_.begin() + static_cast<std::ptrdiff_t>(length)));
}

DescartesPair descartes_pair(const SignPattern& sigma) {
  DescartesPair dp;
  for (std::size_t i = 1; i < sigma.size(); ++i) (sigma.at(i) == sigma.at(i - 1) ? dp.p : dp.c)++;
  return dp;
}

bool is_admissible(const SignPattern& sigma, const AdmissiblePair& pair) {
  const auto [c, p] = descartes_pair(sigma);
  return pair.pos >= 0 && pair.neg >= 0 && pair.pos <= c && (c - pair.pos) % 2 == 0 && pair.neg <= p &&
         (p - pair.neg) % 2 == 0;
}

std::vector<AdmissiblePair> admissible_pairs(const SignPattern& sigma) {
  const auto [c, p] = descartes_pair(sigma);
  std::vector<AdmissiblePair> out;
  for (int pos = c % 2; pos <= c; pos += 2)
    for (int neg = p % 2; neg <= p; neg += 2) out.push_back({pos, neg});
  return out;
}

Couple::Couple(SignPattern pattern, AdmissiblePair pair) : pattern_(std::move(pattern)), pair_(pair) {
  if (!is_admissible(pattern_, pair_)) {
    const auto dp = descartes_pair(pattern_);
    std::ostringstream os;
    os << "pair (" << pair_.pos << ", " << pair_.neg << ") is not admissible for " << pattern_.text()
       << " with Descartes pair (" << dp.c << ", " << dp.p << ")";
    throw NotAdmissible(os.str());
  }
}

std::string Couple::text() const {
  std::ostringstream os;
  os << "(" << pattern_.text() << ", (" << pair_.pos << ", " << pair_.neg << "))";
  return os.str();
}

std::uint64_t Couple::stable_hash() const {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : text()) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  return h;
}

SignPattern revert(const SignPattern& sigma) {
  std::vector<int> s(sigma.signs().rbegin(), sigma.signs().rend());
  const int first = s.front();
  for (int& v : s) v *= first;
  return SignPattern(std::move(s));
}

SignPattern mirror(const SignPattern& sigma) {
  const int d = sigma.degree();
  const int flip_parity = d % 2 == 0 ? 1 : 0;
  std::vector<int> s = sigma.signs();
  for (int k = 0; k <= d; ++k)
    if (k % 2 == flip_parity) s[static_cast<std::size_t>(d - k)] = -s[static_cast<std::size_t>(d - k)];
  return SignPattern(std::move(s));
}

std::string to_string(Generator g) {
  switch (g) {
    case Generator::Identity: return "identity";
    case Generator::Revert: return "revert";
    case Generator::Mirror: return "mirror";
    case Generator::RevertMirror: return "revert+mirror";
  }
  return "?";
}

Couple apply(Generator g, const Couple& cp) {
  const AdmissiblePair swapped{cp.neg(), cp.pos()};
  switch (g) {
    case Generator::Identity: return cp;
    case Generator::Revert: return Couple(revert(cp.pattern()), cp.pair());
    case Generator::Mirror: return Couple(mirror(cp.pattern()), swapped);
    case Generator::RevertMirror: return Couple(mirror(revert(cp.pattern())), swapped);
  }
  return cp;
}

std::vector<OrbitMember> orbit(const Couple& cp) {
  std::vector<OrbitMember> out;
  for (Generator g : {Generator::Identity, Generator::Revert, Generator::Mirror, Generator::RevertMirror}) {
    Couple image = apply(g, cp);
    bool seen = std::any_of(out.begin(), out.end(), [&](const OrbitMember& m) { return m.couple == image; });
    if (!seen) out.push_back({std::move(image), g});
  }
  return out;
}

namespace {

bool text_order(const Couple& a, const Couple& b) {
  const std::string ta = a.pattern().text();
  const std::string tb = b.pattern().text();
  if (ta != tb) return ta < tb;
  return a.pair() < b.pair();
}

}  // namespace

Couple canonical(const Couple& cp) {
  auto members = orbit(cp);
  Couple best = members.front().couple;
  for (const auto& m : members)
    if (text_order(m.couple, best)) best = m.couple;
  return best;
}

ZeroCoefficient::ZeroCoefficient(int power)
    : std::domain_error("coefficient of x^" + std::to_string(power) + " is zero"), power_(power) {}

SignPattern sign_pattern_of(const Poly& p) {
  if (p.degree() < 1) throw std::invalid_argument("sign pattern needs degree >= 1");
  if (sgn(p.leading()) < 0) throw NegativeLeading();
  std::vector<int> s;
  for (int k = p.degree(); k >= 0; --k) {
    const int v = sign(p.coeff(k));
    if (v == 0) throw ZeroCoefficient(k);
    s.push_back(v);
  }
  return SignPattern(std::move(s));
}

Verdict realizes(const Poly& p, const Couple& cp) {
  if (p.degree() != cp.degree()) return {false, "degree " + std::to_string(p.degree()) + " does not match"};
  std::vector<int> signs;
  try {
    signs = sign_pattern_of(p).signs();
  } catch (const ZeroCoefficient& e) {
    return {false, e.what()};
  } catch (const NegativeLeading& e) {
    return {false, e.what()};
  }
  if (signs != cp.pattern().signs()) return {false, "sign pattern differs"};
  const RootReport report = root_report(p);
  if (report.zero_mult != 0) return {false, "root at 0"};
  if (!report.all_nonzero_real_roots_simple()) return {false, "multiple real root"};
  if (report.pos_mult != cp.pos() || report.neg_mult != cp.neg()) {
    std::ostringstream os;
    os << "root counts (" << report.pos_mult << ", " << report.neg_mult << ") differ";
    return {false, os.str()};
  }
  return {true, "ok"};
}

Poly mirror_poly(const Poly& p) {
  Poly q = reflect(p);
  return p.degree() % 2 == 0 ? q : -q;
}

Poly revert_poly(const Poly& p) {
  if (sgn(p.coeff(0)) == 0) throw std::domain_error("revert_poly: p(0) = 0");
  return reciprocal(p) * Rational(1 / p.coeff(0));
}

Poly apply(Generator g, const Poly& p) {
  switch (g) {
    case Generator::Identity: return p;
    case Generator::Revert: return revert_poly(p);
    case Generator::Mirror: return mirror_poly(p);
    case Generator::RevertMirror: return mirror_poly(revert_poly(p));
  }
  return p;
}

int sign_changes(const Poly& p) {
  int v = 0;
  int last = 0;
  for (int k = p.degree(); k >= 0; --k) {
    const int s = sign(p.coeff(k));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

}  // namespace descartes
