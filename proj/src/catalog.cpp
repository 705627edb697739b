#include "descartes/realize.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

namespace descartes {

std::string to_string(CatalogStatus s) {
  switch (s) {
    case CatalogStatus::Realized:
      return "realized";
    case CatalogStatus::NonrealizableProved:
      return "nonrealizable_proved";
    case CatalogStatus::NonrealizableCited:
      return "nonrealizable_cited";
    case CatalogStatus::Unknown:
      return "unknown";
  }
  return "unknown";
}

CatalogStatus parse_catalog_status(const std::string& text) {
  for (auto s : {CatalogStatus::Realized, CatalogStatus::NonrealizableProved, CatalogStatus::NonrealizableCited,
                 CatalogStatus::Unknown})
    if (to_string(s) == text) return s;
  throw std::invalid_argument("unknown catalog status '" + text + "'");
}

namespace {

std::vector<SignPattern> all_patterns(int degree) {
  std::vector<SignPattern> out;
  for (std::uint32_t mask = 0; mask < (1u << degree); ++mask) {
    std::vector<int> s{1};
    for (int i = degree - 1; i >= 0; --i) s.push_back((mask >> i) & 1u ? -1 : 1);
    out.emplace_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const SignPattern& a, const SignPattern& b) { return a.text() < b.text(); });
  return out;
}

struct OrbitResult {
  std::optional<Witness> witness;
  std::int64_t spent = 0;
};

OrbitResult solve_orbit(const Couple& cp, const SearchConfig& cfg) {
  auto outcome = realize(cp, cfg);
  if (auto* w = std::get_if<Witness>(&outcome)) return {*w, 0};
  return {std::nullopt, std::get<Unknown>(outcome).spent};
}

}  // namespace

std::vector<CatalogEntry> build_catalog(int degree, const SearchConfig& cfg, unsigned jobs) {
  if (degree < 1 || degree > 9) throw std::invalid_argument("catalog degree must be in 1..9");
  validate(cfg);

  std::vector<Couple> couples;
  for (const auto& sigma : all_patterns(degree))
    for (const auto& pair : admissible_pairs(sigma)) couples.emplace_back(sigma, pair);

  std::vector<Couple> representatives;
  for (const auto& c : couples)
    if (canonical(c) == c) representatives.push_back(c);

  std::vector<OrbitResult> results(representatives.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < representatives.size(); i = next++) results[i] = solve_orbit(representatives[i], cfg);
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(representatives.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::map<Couple, CatalogEntry> by_couple;
  for (std::size_t i = 0; i < representatives.size(); ++i) {
    const auto& rep = representatives[i];
    const auto& res = results[i];
    const auto citation = known_nonrealizable(rep);
    for (const auto& member : orbit(rep)) {
      CatalogEntry e{member.couple, CatalogStatus::Unknown, std::nullopt, "", res.spent};
      if (res.witness) {
        e.status = CatalogStatus::Realized;
        e.witness = act(member.generator, *res.witness);
      } else if (citation) {
        e.status = CatalogStatus::NonrealizableProved;
        e.citation = *citation;
      }
      by_couple.emplace(member.couple, std::move(e));
    }
  }

  std::vector<CatalogEntry> out;
  for (const auto& c : couples) out.push_back(by_couple.at(c));
  return out;
}

std::string catalog_to_json(int degree, std::uint64_t seed, const std::vector<CatalogEntry>& entries) {
  nlohmann::ordered_json doc;
  doc["degree"] = degree;
  doc["seed"] = seed;
  doc["entries"] = nlohmann::ordered_json::array();
  for (const auto& e : entries) {
    nlohmann::ordered_json j;
    j["pattern"] = e.couple.pattern().text();
    j["pos"] = e.couple.pos();
    j["neg"] = e.couple.neg();
    j["status"] = to_string(e.status);
    if (e.witness) j["witness"] = to_texts(e.witness->poly);
    if (!e.citation.empty()) j["citation"] = e.citation;
    if (e.status != CatalogStatus::Realized) j["budget"] = e.budget_spent;
    doc["entries"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

std::vector<CatalogEntry> load_catalog(const std::string& json_text) {
  const auto doc = nlohmann::json::parse(json_text);
  std::vector<CatalogEntry> out;
  for (const auto& j : doc.at("entries")) {
    Couple cp(SignPattern::parse(j.at("pattern").get<std::string>()), {j.at("pos").get<int>(), j.at("neg").get<int>()});
    CatalogEntry e{cp, parse_catalog_status(j.at("status").get<std::string>()), std::nullopt, "", 0};
    if (j.contains("citation")) e.citation = j["citation"].get<std::string>();
    if (j.contains("budget")) e.budget_spent = j["budget"].get<std::int64_t>();
    if (e.status == CatalogStatus::Realized) {
      if (!j.contains("witness")) throw InvalidWitness("realized entry without witness: " + cp.text());
      const auto texts = j["witness"].get<std::vector<std::string>>();
      Poly p = from_texts(texts);
      e.witness = make_witness(p, cp, Construction::make_literal(p, "catalog"));
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace descartes
