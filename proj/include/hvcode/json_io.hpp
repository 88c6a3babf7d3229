#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "hvcode/codec.hpp"
#include "hvcode/marked_word.hpp"
#include "hvcode/oracle.hpp"
#include "hvcode/permutation.hpp"
#include "hvcode/permutomino.hpp"
#include "hvcode/sampler.hpp"
#include "hvcode/series.hpp"

namespace hvcode {

using Json = nlohmann::ordered_json;

// MarkedWord: {"letters": ["XY", "UR", ..., "XY"], "mark": m}
inline Json to_json(const MarkedWord& w) {
  Json letters = Json::array();
  for (const Letter l : w.letters()) letters.push_back(to_string(l));
  return {{"letters", letters}, {"mark", w.mark()}};
}

inline MarkedWord marked_word_from_json(const Json& j) {
  try {
    std::vector<Letter> letters;
    for (const auto& t : j.at("letters")) letters.push_back(parse_letter(t.get<std::string>()));
    return MarkedWord(std::move(letters), j.at("mark").get<int>());
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
}

// ColoredPermutation: {"perm": [..], "colored": [..]}
inline Json to_json(const ColoredPermutation& cp) {
  return {{"perm", cp.perm().values()}, {"colored", cp.colored()}};
}

inline ColoredPermutation colored_permutation_from_json(const Json& j) {
  try {
    return ColoredPermutation(Permutation(j.at("perm").get<std::vector<int>>()),
                              j.value("colored", std::vector<int>{}));
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
}

inline Json points_json(std::span<const Point> pts) {
  Json a = Json::array();
  for (const Point p : pts) a.push_back({p.x, p.y});
  return a;
}

inline std::vector<Point> points_from_json(const Json& j) {
  std::vector<Point> pts;
  try {
    for (const auto& p : j) pts.push_back({p.at(0).get<int>(), p.at(1).get<int>()});
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
  return pts;
}

// Permutomino: {"turnpoints": [[x, y], ...], "size": n}
inline Json to_json(const Permutomino& pm) {
  return {{"turnpoints", points_json(pm.turnpoints())}, {"size", pm.size()}};
}

inline Permutomino permutomino_from_json(const Json& j) { return Permutomino(points_from_json(j.at("turnpoints"))); }

inline Json to_json(const DecodeFailure& f) {
  return {{"status", "failure"},     {"kind", to_string(f.kind)},   {"stop_index", f.stop_index},
          {"prefix", format(f.prefix)}, {"pair", to_string(f.pair)}, {"suffix_u", f.suffix_u},
          {"suffix_v", f.suffix_v}};
}

inline Json to_json(const DecodeOutcome& o) {
  if (const auto* cp = std::get_if<ColoredPermutation>(&o)) {
    Json j = to_json(*cp);
    j["status"] = "success";
    return j;
  }
  if (const auto* f = std::get_if<DecodeFailure>(&o)) return to_json(*f);
  const auto& ic = std::get<InternalContradiction>(o);
  return {{"status", "internal-contradiction"}, {"step", ic.step}, {"diagnostic", ic.diagnostic}};
}

// Series: {"order": k, "coefficients": {"n": {"dx": {"dy": "c"}}}}, zero
// coefficients omitted and big integers written as decimal strings.
inline Json to_json(const BivariateSeries& s) {
  Json coeffs = Json::object();
  for (int n = 0; n <= s.order(); ++n) {
    if (s[n].is_zero()) continue;
    Json byx = Json::object();
    for (const auto& [e, c] : s[n].terms()) byx[std::to_string(e.first)][std::to_string(e.second)] = to_string(c);
    coeffs[std::to_string(n)] = byx;
  }
  return {{"order", s.order()}, {"coefficients", coeffs}};
}

inline BivariateSeries series_from_json(const Json& j) {
  try {
    BivariateSeries s(j.at("order").get<int>());
    for (const auto& [n, byx] : j.at("coefficients").items())
      for (const auto& [dx, byy] : byx.items())
        for (const auto& [dy, c] : byy.items())
          s[std::stoi(n)].add_term(std::stoi(dx), std::stoi(dy), BigInt(c.get<std::string>()));
    return s;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::SyntaxError, e.what());
  }
}

inline const char* to_string(SampleFamily f) {
  switch (f) {
    case SampleFamily::Square: return "square";
    case SampleFamily::FullyIndec: return "fully-indec";
    case SampleFamily::ConvexPermutomino: return "convex-permutomino";
  }
  return "?";
}

inline Json to_json(const SampledObject& o) {
  return std::visit([](const auto& v) { return to_json(v); }, o);
}

// Batch: {"family": "...", "n": n, "seed": s, "items": [...]}
inline Json batch_json(SampleFamily f, int n, std::uint64_t seed, const std::vector<SampledObject>& items) {
  Json a = Json::array();
  for (const auto& it : items) a.push_back(to_json(it));
  return {{"family", to_string(f)}, {"n", n}, {"seed", seed}, {"items", a}};
}

inline std::vector<SampledObject> batch_items_from_json(const Json& j) {
  std::vector<SampledObject> out;
  const bool poly = j.at("family").get<std::string>() == "convex-permutomino";
  for (const auto& it : j.at("items")) {
    if (poly)
      out.emplace_back(permutomino_from_json(it));
    else
      out.emplace_back(colored_permutation_from_json(it));
  }
  return out;
}

inline Json to_json(const GridConfig& g) {
  return {{"cols", g.cols}, {"rows", g.rows}, {"points", points_json(g.points)}};
}

inline Json to_json(const GridPolygon& g) {
  return {{"cols", g.cols}, {"rows", g.rows}, {"turnpoints", points_json(g.turnpoints)}};
}

inline Json to_json(const oracle::AuditReport& r) {
  Json failures = Json::array();
  for (const auto& [key, c] : r.failures)
    failures.push_back(
        {{"kind", std::get<0>(key)}, {"stop_index", std::get<1>(key)}, {"pair", std::get<2>(key)}, {"count", c}});
  Json census = Json::array();
  for (const auto& [key, c] : r.census)
    census.push_back({{"kind", key.first}, {"prefix_length", key.second}, {"count", c}});
  return {{"n", r.n},
          {"mode", to_string(r.mode)},
          {"words", r.words},
          {"success_count", r.success_count},
          {"expected_success", r.expected_success},
          {"failures", failures},
          {"census", census},
          {"internal_contradictions", r.internal_contradictions},
          {"roundtrip_failures", r.roundtrip_failures},
          {"class_violations", r.class_violations},
          {"violations", r.violations}};
}

}  // namespace hvcode
