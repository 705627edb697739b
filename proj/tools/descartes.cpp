#include "descartes/paperchecks.hpp"
#include "descartes/realize.hpp"
#include "descartes/signs.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace descartes;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  std::int64_t budget = 100000;
  std::string radius = "1024";
  std::optional<int> points;
  unsigned jobs = 1;
  std::string out;
  std::string format;  // empty: the command's default
  bool deterministic = false;

  std::string pattern;
  int pos = 0;
  int neg = 0;
  std::string coeffs;
  std::string coeff_file;
  int degree = 0;
  std::vector<std::string> checks;
  int steps = 41;
};

SearchConfig search_config(const Options& o) {
  SearchConfig cfg;
  cfg.seed = o.seed;
  cfg.budget = o.budget;
  try {
    cfg.radius = parse_rational(o.radius);
  } catch (const std::exception& e) {
    throw UsageError("--radius: " + std::string(e.what()));
  }
  try {
    validate(cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return cfg;
}

// The first allowed format is the default.
void require_format(Options& o, std::initializer_list<const char*> allowed) {
  if (o.format.empty()) o.format = *allowed.begin();
  for (const char* f : allowed)
    if (o.format == f) return;
  std::string list;
  for (const char* f : allowed) list += (list.empty() ? "" : ", ") + std::string(f);
  throw UsageError("--format " + o.format + " not supported here (use " + list + ")");
}

SignPattern pattern_arg(const Options& o) {
  try {
    return SignPattern::parse(o.pattern);
  } catch (const std::invalid_argument& e) {
    throw UsageError("pattern: " + std::string(e.what()));
  }
}

Couple couple_arg(const Options& o) {
  auto sigma = pattern_arg(o);
  try {
    return Couple(sigma, {o.pos, o.neg});
  } catch (const NotAdmissible& e) {
    throw UsageError(e.what());
  }
}

std::string generated_at() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Adds the timestamp unless --deterministic.
std::string stamp(const std::string& json_text, const Options& o) {
  if (o.deterministic) return json_text;
  auto doc = json::parse(json_text);
  doc["generated_at"] = generated_at();
  return doc.dump(2) + "\n";
}

json pair_json(const AdmissiblePair& p) { return json::array({p.pos, p.neg}); }

json roots_json(const RootReport& r) {
  json j;
  j["positive"] = r.distinct_positive();
  j["negative"] = r.distinct_negative();
  j["zero_multiplicity"] = r.zero_mult;
  j["complex_pairs"] = r.complex_pairs;
  j["intervals"] = json::array();
  for (const auto& root : r.roots)
    j["intervals"].push_back({{"lo", to_text(root.interval.lo)},
                              {"hi", to_text(root.interval.hi)},
                              {"multiplicity", root.multiplicity},
                              {"sign", root.sign}});
  return j;
}

void print_roots(std::ostream& out, const RootReport& r) {
  out << "roots: " << r.distinct_positive() << " positive, " << r.distinct_negative() << " negative, "
      << r.complex_pairs << " complex pair(s)";
  if (r.zero_mult) out << ", zero of multiplicity " << r.zero_mult;
  out << '\n';
  for (const auto& root : r.roots)
    out << "  (" << to_text(root.interval.lo) << ", " << to_text(root.interval.hi) << ")  multiplicity "
        << root.multiplicity << '\n';
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : sep) + p;
  return s;
}

int cmd_pairs(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto sigma = pattern_arg(o);
  const auto dp = descartes_pair(sigma);
  const auto pairs = admissible_pairs(sigma);
  if (o.format == "json") {
    json j{{"pattern", sigma.text()}, {"c", dp.c}, {"p", dp.p}, {"pairs", json::array()}};
    for (const auto& p : pairs) j["pairs"].push_back(pair_json(p));
    out << j.dump(2) << '\n';
  } else {
    out << "pattern " << sigma.text() << "\nDescartes pair (" << dp.c << ", " << dp.p << ")\n"
        << pairs.size() << " admissible pair(s):";
    for (const auto& p : pairs) out << " (" << p.pos << ", " << p.neg << ")";
    out << '\n';
  }
  return kOk;
}

int cmd_orbit(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto members = orbit(couple_arg(o));
  if (o.format == "json") {
    json j = json::array();
    for (const auto& m : members)
      j.push_back({{"pattern", m.couple.pattern().text()},
                   {"pos", m.couple.pos()},
                   {"neg", m.couple.neg()},
                   {"generator", to_string(m.generator)}});
    out << j.dump(2) << '\n';
  } else {
    out << members.size() << " member(s)\n";
    for (const auto& m : members) out << "  " << m.couple.text() << "  via " << to_string(m.generator) << '\n';
  }
  return kOk;
}

int cmd_realize(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  const auto cp = couple_arg(o);
  const auto cfg = search_config(o);
  const auto outcome = realize(cp, cfg);
  const auto citation = known_nonrealizable(cp);

  if (const auto* w = std::get_if<Witness>(&outcome)) {
    if (o.format == "json") {
      json j{{"couple", cp.text()},
             {"status", "realized"},
             {"witness", to_texts(w->poly)},
             {"roots", roots_json(w->report)},
             {"construction", describe(*w->construction)}};
      out << j.dump(2) << '\n';
    } else {
      out << "couple " << cp.text() << "\nwitness " << to_string(w->poly) << "\ncoefficients "
          << join(to_texts(w->poly), " ") << '\n';
      print_roots(out, w->report);
      out << "construction:\n" << describe(*w->construction);
    }
    return kOk;
  }
  const auto spent = std::get<Unknown>(outcome).spent;
  if (o.format == "json") {
    json j{{"couple", cp.text()}, {"status", "unknown"}, {"budget_spent", spent}};
    if (citation) j["citation"] = *citation;
    out << j.dump(2) << '\n';
  } else {
    out << "couple " << cp.text() << "\nunknown after " << spent << " evaluations (seed " << cfg.seed << ")\n";
    if (citation) out << "known nonrealizable: " << *citation << '\n';
  }
  return kUnknown;
}

std::vector<std::string> split_coeffs(const std::string& text) {
  std::vector<std::string> parts;
  std::string cur;
  for (char ch : text) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
      if (!cur.empty()) parts.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  if (!cur.empty()) parts.push_back(std::move(cur));
  return parts;
}

int cmd_verify(Options& o, std::ostream& out) {
  require_format(o, {"text", "json"});
  std::string text = o.coeffs;
  if (!o.coeff_file.empty()) {
    std::ifstream in(o.coeff_file);
    if (!in) throw UsageError("cannot read " + o.coeff_file);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  if (text.empty()) throw UsageError("verify needs --coeffs or --file");
  const auto cp = couple_arg(o);
  Poly p;
  try {
    const auto parts = split_coeffs(text);
    p = from_texts(parts);
  } catch (const std::invalid_argument& e) {
    throw UsageError("coefficients: " + std::string(e.what()));
  }

  try {
    sign_pattern_of(p);
  } catch (const ZeroCoefficient& e) {
    std::cerr << "error: zero coefficient of x^" << e.power() << '\n';
    return kFail;
  } catch (const NegativeLeading& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  const Verdict v = realizes(p, cp);
  const auto report = root_report(p);
  if (o.format == "json") {
    json j{{"couple", cp.text()}, {"polynomial", to_texts(p)}, {"pass", v.ok}, {"roots", roots_json(report)}};
    if (!v.ok) j["reason"] = v.reason;
    out << j.dump(2) << '\n';
  } else {
    out << (v.ok ? "PASS " : "FAIL ") << to_string(p) << " vs " << cp.text() << '\n';
    if (!v.ok) out << "reason: " << v.reason << '\n';
    print_roots(out, report);
  }
  return v.ok ? kOk : kFail;
}

int cmd_catalog(Options& o, std::ostream& out) {
  require_format(o, {"json"});
  if (o.degree < 1 || o.degree > 9) throw UsageError("degree must be between 1 and 9");
  const auto cfg = search_config(o);
  const auto entries = build_catalog(o.degree, cfg, o.jobs);
  out << stamp(catalog_to_json(o.degree, cfg.seed, entries), o);

  std::map<std::string, int> counts;
  for (const auto& e : entries) ++counts[to_string(e.status)];
  std::cerr << "degree " << o.degree << ": " << entries.size() << " couples";
  for (const auto& [status, n] : counts) std::cerr << ", " << n << ' ' << status;
  std::cerr << '\n';
  return kOk;
}

int cmd_paper_verify(Options& o, std::ostream& out) {
  require_format(o, {"json"});
  std::vector<std::string> names;
  for (const auto& c : o.checks)
    if (c != "all") names.push_back(c);
  if (o.points && *o.points < 1) throw UsageError("--points must be at least 1");
  PaperConfig cfg{o.seed, o.points};
  std::vector<CheckResult> results;
  try {
    results = run_checks(names, cfg, o.jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  out << stamp(manifest_json(results), o);
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    std::cerr << (r.pass ? "pass " : "FAIL ") << r.name << " (" << r.assertions << " assertions)\n";
  }
  return all ? kOk : kFail;
}

int cmd_figure_data(Options& o, std::ostream& out) {
  require_format(o, {"csv"});
  FigureRegion region;
  region.t_steps = region.w_steps = o.steps;
  try {
    emit_figure_data(region, out);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact realization of sign patterns with prescribed root counts"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--seed", o.seed, "Seed for every randomized step");
  app.add_option("--budget", o.budget, "Search budget in score evaluations");
  app.add_option("--radius", o.radius, "Root placement radius (rational)");
  app.add_option("--points", o.points, "Override seeded point counts in paper-verify");
  app.add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Write output to this file");
  app.add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_flag("--deterministic", o.deterministic, "Omit the generated_at timestamp");

  auto* pairs = app.add_subcommand("pairs", "Descartes pair and admissible pairs of a pattern");
  pairs->add_option("pattern", o.pattern)->required();

  auto couple_args = [&](CLI::App* sub) {
    sub->add_option("pattern", o.pattern)->required();
    sub->add_option("pos", o.pos)->required();
    sub->add_option("neg", o.neg)->required();
  };
  auto* orb = app.add_subcommand("orbit", "Orbit of a couple under reversion and mirroring");
  couple_args(orb);
  auto* real = app.add_subcommand("realize", "Construct a verified witness");
  couple_args(real);
  auto* ver = app.add_subcommand("verify", "Check a polynomial against a couple");
  couple_args(ver);
  ver->add_option("--coeffs", o.coeffs, "Leading-first rationals, comma separated");
  ver->add_option("--file", o.coeff_file, "File holding the coefficients");
  auto* cat = app.add_subcommand("catalog", "Status of every couple of one degree (JSON)");
  cat->add_option("degree", o.degree)->required();
  auto* pv = app.add_subcommand("paper-verify", "Run the computational checks (JSON manifest)");
  pv->add_option("checks", o.checks, "Check names or 'all' (default all)");
  auto* fig = app.add_subcommand("figure-data", "Sign grid of H*, a5*, a4* (CSV)");
  fig->add_option("--steps", o.steps, "Grid points per axis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      std::cerr << "error: cannot write " << o.out << '\n';
      return kUsage;
    }
  }
  std::ostream& out = o.out.empty() ? std::cout : file;

  try {
    if (*pairs) return cmd_pairs(o, out);
    if (*orb) return cmd_orbit(o, out);
    if (*real) return cmd_realize(o, out);
    if (*ver) return cmd_verify(o, out);
    if (*cat) return cmd_catalog(o, out);
    if (*pv) return cmd_paper_verify(o, out);
    if (*fig) return cmd_figure_data(o, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
