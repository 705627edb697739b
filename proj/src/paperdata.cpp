#include "descartes/paperchecks.hpp"
#include "descartes/sampling.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <thread>

namespace descartes {

const BiPoly& h_star() {
  static const BiPoly h = BiPoly::from_terms(
      {{6, 2, 1}, {-2, 2, 0}, {3, 1, 2}, {-5, 1, 1}, {3, 1, 0}, {6, 0, 1}, {-2, 0, 2}});
  return h;
}

const BiPoly& a5_star() {
  static const BiPoly a = BiPoly::from_terms({{-8, 5, 0},   {8, 4, 1},     {6, 3, 2},    {-4, 2, 3},  {-2, 1, 4},
                                              {-24, 4, 0},  {-66, 3, 1},   {-63, 2, 2},  {-12, 1, 3}, {3, 0, 4},
                                              {84, 3, 0},   {153, 2, 1},   {90, 1, 2},   {-3, 0, 3},  {-144, 2, 0},
                                              {-144, 1, 1}, {-36, 0, 2},   {108, 1, 0},  {54, 0, 1}});
  return a;
}

const BiPoly& a4_star() {
  static const BiPoly a = BiPoly::from_terms({{-20, 4, 0}, {-22, 3, 1}, {-30, 2, 2},  {-10, 1, 3}, {1, 0, 4},
                                              {66, 3, 0},  {45, 2, 1},  {36, 1, 2},   {15, 0, 3},  {-135, 2, 0},
                                              {-54, 1, 1}, {-54, 0, 2}, {108, 1, 0},  {54, 0, 1},  {-81, 0, 0}});
  return a;
}

namespace {

Poly lead(std::initializer_list<Rational> c) { return Poly::from_leading(c); }

std::vector<DigitClaim> build_claims() {
  std::vector<DigitClaim> c;
  c.push_back({"a30", lead({-2, 20, -50, 40}), {"6.7245"}, "case (5,1), a3 constant term"});
  c.push_back({"a42", lead({1, -10, 10}), {"1.127", "8.872"}, "case (5,1), a4 leading term"});
  c.push_back({"a40", lead({-10, 55, -100, 45}), {"0.662"}, "case (5,1), a4 constant term"});
  c.push_back({"a6*", lead({10, -20, 5}), {"0.293", "1.707"}, "case (5,1), a6 leading part"});
  c.push_back({"a6dagger", lead({-5}) * lead({1, -1}) * lead({4, -9, 1}), {"0.117", "1", "2.133"},
               "case (5,1), a6 remainder"});
  c.push_back({"C", lead({6, -40, 85, -54, 32, -8}), {"0.368"}, "case (4,2), a5 at T0"});
  c.push_back({"a50", lead({make_rational(3, 2), -9, 16, -12}), {"3.703"}, "case (4,2), a5 at T=0"});
  c.push_back({"da5 numerator", lead({7, -14, 21, -8}), {"0.510"}, "case (4,2), da5/dT at T0"});
  c.push_back({"D", lead({8, -32, 54, -85, 40, -6}), {"2.719"}, "case (4,2), a4 at T0"});
  c.push_back({"Rw1", lead({32, 16, -80, 184, -142, -63}), {"-2.56", "-0.30", "1.18"}, "w-discriminant of a5*"});
  c.push_back({"Rw2", lead({10, -80, 365, -928, 1564, -1788, 1345, -668, 208, -40, 4}), {"0.34", "1.16"},
               "w-discriminant of a5*"});
  c.push_back({"a5*|w=0", a5_star().at_secondary(0), {"-5.55", "0", "1.18"}, "slice of a5*"});
  c.push_back({"Rsharp", lead({5, -16, 40, -23, 61, -16, -2}), {"-0.09", "0.37"}, "Res(H*, a5*, t)"});
  c.push_back({"Rt1",
               lead({5, 50, 100, -2513, 10781, -25932, 46604, -70411, 86678, -82706, 65264, -43104, 16896}),
               {},
               "t-discriminant of a5*, no real roots"});
  c.push_back({"Rt2", lead({8, 154, -68, -239, -352}), {"-19.61", "1.81"}, "t-discriminant of a5*"});
  c.push_back({"a5* constant factor", lead({1, 2, -6}), {"-3.64", "1.64"}, "constant term of a5* in t"});
  c.push_back({"Dsharp", lead({3, 14, -63, 51, -82}), {"-7.72", "2.56"}, "t-discriminant of a4*"});
  c.push_back({"a4*|w=0", a4_star().at_secondary(0), {}, "slice of a4*, no real roots"});
  c.push_back({"a4*|t=0", a4_star().at_main(0), {"-18.1", "2.5"}, "slice of a4*"});
  c.push_back({"RDelta", lead({2, 16, -61, 23, -40, 16, -5}), {"-10.90", "2.68"}, "Res(a4*, H*, t)"});
  c.push_back({"a5*|w=4", a5_star().at_secondary(4), {"-3.3", "-0.8", "0.3"}, "t1 < t2 < t3"});
  c.push_back({"H*|w=4 (t-, t+)", h_star().at_secondary(4), {"-1.6", "0.2"}, "roots of H* at w = 4"});
  c.push_back({"H*|w=4 (h-, h+)", h_star().at_secondary(4), {"-1.63", "0.22"}, "roots of H* at w = 4"});
  c.push_back({"a4*|w=4", a4_star().at_secondary(4), {"-1.26", "0.85"}, "roots of a4* at w = 4"});
  c.push_back({"Delta_t", lead({1, 5, 1}) * lead({1, -3, 1}), {"-4.79", "-0.20", "0.38", "2.61"},
               "t-discriminant of H*, signs as computed"});
  c.push_back({"H*|t=2/3", h_star().at_main(make_rational(2, 3)), {"-5/24"}, "H* linear in w"});
  return c;
}

}  // namespace

const std::vector<DigitClaim>& digit_claims() {
  static const std::vector<DigitClaim> claims = build_claims();
  return claims;
}

Rational digit_tolerance(const std::string& printed) {
  const auto dot = printed.find('.');
  if (dot == std::string::npos) return 0;
  const int k = static_cast<int>(printed.size() - dot - 1);
  Rational tol = 5;
  for (int i = 0; i < k; ++i) tol /= 10;
  return tol;
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"check_identity_lemma10", "check_jacobians",   "check_case_formulas",
                                              "check_resultants",       "check_root_digits", "check_sign_chains",
                                              "check_lemma11",          "check_ranks"};
  return names;
}

CheckResult run_check(const std::string& name, const PaperConfig& cfg) {
  auto count = [&](int fallback) { return cfg.points.value_or(fallback); };
  if (cfg.points && *cfg.points < 1) throw std::invalid_argument("points must be at least 1");
  if (name == "check_identity_lemma10") return check_identity_lemma10(count(200), cfg.seed);
  if (name == "check_jacobians") return check_jacobians(count(100), cfg.seed);
  if (name == "check_case_formulas") return check_case_formulas(count(200), cfg.seed);
  if (name == "check_resultants") return check_resultants();
  if (name == "check_root_digits") return check_root_digits();
  if (name == "check_sign_chains") return check_sign_chains(count(500), cfg.seed);
  if (name == "check_lemma11") return check_lemma11();
  if (name == "check_ranks") return check_ranks(count(200), cfg.seed);
  throw std::invalid_argument("unknown check '" + name + "'");
}

std::vector<CheckResult> run_checks(const std::vector<std::string>& names, const PaperConfig& cfg, unsigned jobs) {
  const std::vector<std::string> selected = names.empty() ? check_names() : names;
  for (const auto& n : selected)
    if (std::find(check_names().begin(), check_names().end(), n) == check_names().end())
      throw std::invalid_argument("unknown check '" + n + "'");

  std::vector<CheckResult> results(selected.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < selected.size(); i = next++) {
      try {
        results[i] = run_check(selected[i], cfg);
      } catch (const std::exception& e) {
        results[i] = CheckResult{selected[i], false, 1, {{"check raised", "no exception", e.what(), "exact"}}, {}};
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(selected.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string manifest_json(const std::vector<CheckResult>& results) {
  nlohmann::ordered_json doc;
  bool all = true;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& r : results) {
    all = all && r.pass;
    nlohmann::ordered_json j;
    j["name"] = r.name;
    j["status"] = r.pass ? "pass" : "fail";
    j["assertions"] = r.assertions;
    j["failures"] = nlohmann::ordered_json::array();
    for (const auto& f : r.failures)
      j["failures"].push_back(
          {{"label", f.label}, {"expected", f.expected}, {"computed", f.computed}, {"tolerance", f.tolerance}});
    j["notes"] = r.notes;
    doc["checks"].push_back(std::move(j));
  }
  doc["status"] = all ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

void emit_figure_data(const FigureRegion& region, std::ostream& out) {
  if (region.t_steps < 2 || region.w_steps < 2) throw std::invalid_argument("figure grid needs at least 2x2 points");
  if (region.t_min >= region.t_max || region.w_min >= region.w_max)
    throw std::invalid_argument("figure region must have positive extent");
  out << "t,w,sgnH,sgnA5,sgnA4\n";
  for (int i = 0; i < region.t_steps; ++i) {
    const Rational t = region.t_min + (region.t_max - region.t_min) * i / (region.t_steps - 1);
    for (int j = 0; j < region.w_steps; ++j) {
      const Rational w = region.w_min + (region.w_max - region.w_min) * j / (region.w_steps - 1);
      out << to_text(t) << ',' << to_text(w) << ',' << sgn(h_star()(t, w)) << ',' << sgn(a5_star()(t, w)) << ','
          << sgn(a4_star()(t, w)) << '\n';
    }
  }
}

}  // namespace descartes
