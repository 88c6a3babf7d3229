#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hvcode/codec.hpp"
#include "hvcode/json_io.hpp"
#include "hvcode/oracle.hpp"
#include "hvcode/render.hpp"
#include "hvcode/sampler.hpp"
#include "hvcode/series.hpp"

namespace hvcode::cli {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2 };

namespace detail {

inline const std::map<std::string, CountFamily> kFamilies = {
    {"square", CountFamily::Square},
    {"triangular", CountFamily::Triangular},
    {"parallel", CountFamily::Parallel},
    {"fully-indec", CountFamily::FullyIndec},
    {"marked-words", CountFamily::MarkedWords},
    {"convex-permutomino", CountFamily::ConvexPermutomino},
    {"directed-permutomino", CountFamily::DirectedPermutomino},
    {"parallelogram-permutomino", CountFamily::ParallelogramPermutomino},
};

inline const std::map<std::string, SampleFamily> kSampleFamilies = {
    {"square", SampleFamily::Square},
    {"fully-indec", SampleFamily::FullyIndec},
    {"convex-permutomino", SampleFamily::ConvexPermutomino},
};

inline const std::map<std::string, DecodeMode> kModes = {
    {"square", DecodeMode::Square},
    {"fully-indec", DecodeMode::FullyIndec},
    {"permutomino", DecodeMode::Permutomino},
};

inline BivariateSeries named_series(const std::string& which, int order) {
  if (which == "w") return base_series(BaseSeries::W, order);
  if (which == "m") return base_series(BaseSeries::M, order);
  if (which == "sq") return sq_refined_series(order);
  if (which == "sq-plus") return sq_refined_series(order, NwDenominator::Plus);
  if (which == "t-nw") return aux_series(AuxSeries::TNorthWest, order);
  if (which == "t-sw") return aux_series(AuxSeries::TSouthWestTilde, order);
  if (which == "narayana") return narayana_series(order);
  if (which == "cp") return oracle::refined_series_oracle(CountFamily::ConvexPermutomino, order);
  return oracle::refined_series_oracle(CountFamily::FullyIndec, order);
}

inline std::string failure_text(const DecodeFailure& f) {
  return std::string("failure ") + to_string(f.kind) + " at " + std::to_string(f.stop_index) + ": prefix " +
         (f.prefix.empty() ? "-" : format(f.prefix)) + ", pair " + to_string(f.pair) + ", suffix_u " +
         (f.suffix_u.empty() ? "-" : f.suffix_u) + ", suffix_v " + (f.suffix_v.empty() ? "-" : f.suffix_v);
}

inline std::string report_text(const SubclassReport& r) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::string s;
  s += std::string("square: ") + yn(r.square) + "\n";
  s += std::string("triangular: NE ") + yn(r.is_triangular(Corner::NE)) + ", SE " + yn(r.is_triangular(Corner::SE)) +
       ", SW " + yn(r.is_triangular(Corner::SW)) + ", NW " + yn(r.is_triangular(Corner::NW)) + "\n";
  s += std::string("parallel: rising ") + yn(r.is_parallel(Diagonal::Rising)) + ", falling " +
       yn(r.is_parallel(Diagonal::Falling)) + "\n";
  s += std::string("decomposable: ") + yn(r.decomposable) + "\n";
  s += std::string("co-decomposable: ") + yn(r.co_decomposable) + "\n";
  s += "upper points: " + std::to_string(r.upper_count) + "\n";
  s += "left points: " + std::to_string(r.left_count) + "\n";
  return s;
}

inline Json report_json(const SubclassReport& r) {
  return {{"square", r.square},
          {"triangular",
           {{"NE", r.is_triangular(Corner::NE)},
            {"SE", r.is_triangular(Corner::SE)},
            {"SW", r.is_triangular(Corner::SW)},
            {"NW", r.is_triangular(Corner::NW)}}},
          {"parallel", {{"rising", r.is_parallel(Diagonal::Rising)}, {"falling", r.is_parallel(Diagonal::Falling)}}},
          {"decomposable", r.decomposable},
          {"co_decomposable", r.co_decomposable},
          {"upper_count", r.upper_count},
          {"left_count", r.left_count}};
}

struct VerifyResult {
  Json report = Json::array();
  int violations = 0;
};

inline VerifyResult verify(int max_n) {
  VerifyResult v;
  auto check = [&](std::string what, bool ok, Json detail = nullptr) {
    Json item = {{"check", std::move(what)}, {"ok", ok}};
    if (!detail.is_null()) item["detail"] = std::move(detail);
    v.report.push_back(std::move(item));
    if (!ok) ++v.violations;
  };
  for (const auto f : kAllFamilies) {
    const bool cells = f == CountFamily::ConvexPermutomino || f == CountFamily::DirectedPermutomino ||
                       f == CountFamily::ParallelogramPermutomino;
    const int top = std::min(max_n, cells ? oracle::kMaxCellN : oracle::kMaxPermutationN);
    for (int n = min_size(f); n <= top; ++n) {
      const BigInt brute = oracle::brute_enumerate(f, n).count;
      const BigInt formula = count(f, n);
      check(std::string("count ") + to_string(f) + " n=" + std::to_string(n), brute == formula,
            {{"brute", to_string(brute)}, {"formula", to_string(formula)}});
    }
  }
  for (int n = 2; n <= std::min(max_n, oracle::kMaxPermutationN); ++n) {
    check("colored route convex-permutomino n=" + std::to_string(n),
          BigInt(oracle::colored_co_indecomposable(n).size()) == count(CountFamily::ConvexPermutomino, n));
  }
  const int order = std::min(max_n, 8);
  if (order >= 1) {
    const auto sq = sq_refined_series(order);
    for (int n = 1; n <= order; ++n)
      check("refined square n=" + std::to_string(n),
            sq[n] == oracle::brute_refined_histogram(CountFamily::Square, n));
  }
  for (const auto& [name, mode] : kModes) {
    const int top = std::min(max_n, mode == DecodeMode::Permutomino ? 7 : 8);
    for (int n = 2; n <= top; ++n) {
      const auto rep = oracle::bijection_audit(mode, n);
      check("audit " + name + " n=" + std::to_string(n), rep.ok(), to_json(rep));
    }
  }
  return v;
}

}  // namespace detail

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Marked-word codes of square permutations and convex permutominoes", "hvcode"};
  app.require_subcommand(1);

  bool json = false;
  std::string family, which = "sq", perm_text, word_text, mode_name = "square", format_name = "ascii", out_file,
                      pm_text;
  int n = 0, order = 8, cols = 0, rows = 0, points = 0, max_n = 8;
  std::size_t howmany = 1;
  unsigned threads = 1;
  std::uint64_t seed = 1;
  bool polygon = false;

  std::vector<std::string> family_names, sample_names, mode_names;
  for (const auto& [k, v] : detail::kFamilies) family_names.push_back(k);
  for (const auto& [k, v] : detail::kSampleFamilies) sample_names.push_back(k);
  for (const auto& [k, v] : detail::kModes) mode_names.push_back(k);

  auto* c_count = app.add_subcommand("count", "Exact count of a family at size n");
  c_count->add_option("--family", family)->required()->check(CLI::IsMember(family_names));
  c_count->add_option("--n", n)->required()->check(CLI::Range(1, 1000000));
  c_count->add_flag("--json", json);

  auto* c_series = app.add_subcommand("series", "Coefficients of a generating function");
  c_series->add_option("--which", which)
      ->check(CLI::IsMember({"w", "m", "sq", "sq-plus", "t-nw", "t-sw", "narayana", "cp", "fi"}));
  c_series->add_option("--order", order)->check(CLI::Range(1, 200));
  c_series->add_flag("--json", json);

  auto* c_encode = app.add_subcommand("encode", "Marked word of a (colored) square permutation");
  c_encode->add_option("--perm", perm_text)->required();
  c_encode->add_flag("--json", json);

  auto* c_decode = app.add_subcommand("decode", "Decode a marked word");
  c_decode->add_option("--word", word_text)->required();
  c_decode->add_option("--mode", mode_name)->check(CLI::IsMember(mode_names));
  c_decode->add_flag("--json", json);

  auto* c_classify = app.add_subcommand("classify", "Record structure and subclasses of a permutation");
  c_classify->add_option("--perm", perm_text)->required();
  c_classify->add_flag("--json", json);

  auto* c_sample = app.add_subcommand("sample", "Uniform random objects");
  c_sample->add_option("--family", family)->required()->check(CLI::IsMember(sample_names));
  c_sample->add_option("--n", n)->required()->check(CLI::Range(1, 10000000));
  c_sample->add_option("--count", howmany)->check(CLI::Range(std::size_t{0}, std::size_t{10000000}));
  c_sample->add_option("--seed", seed);
  c_sample->add_option("--threads", threads)->check(CLI::Range(1u, 256u));
  c_sample->add_flag("--json", json);

  auto* c_grid = app.add_subcommand("sample-grid", "Uniform generic configuration or convex polygon on a grid");
  c_grid->add_option("--cols", cols)->required()->check(CLI::PositiveNumber);
  c_grid->add_option("--rows", rows)->required()->check(CLI::PositiveNumber);
  c_grid->add_option("--points", points)->required()->check(CLI::PositiveNumber);
  c_grid->add_flag("--polygon", polygon);
  c_grid->add_option("--seed", seed);
  c_grid->add_flag("--json", json);

  auto* c_render = app.add_subcommand("render", "Draw a permutation or permutomino to a file");
  auto* o_perm = c_render->add_option("--perm", perm_text);
  auto* o_pm = c_render->add_option("--permutomino", pm_text);
  o_perm->excludes(o_pm);
  c_render->add_option("--format", format_name)->check(CLI::IsMember({"ascii", "svg"}));
  c_render->add_option("--out", out_file)->required();

  auto* c_verify = app.add_subcommand("verify", "Run the oracle suite");
  c_verify->add_option("--max-n", max_n)->check(CLI::Range(2, 9));
  c_verify->add_flag("--json", json);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (c_count->parsed()) {
      const BigInt c = count(detail::kFamilies.at(family), n);
      if (json)
        out << Json{{"family", family}, {"n", n}, {"count", to_string(c)}}.dump() << "\n";
      else
        out << c << "\n";
      return kOk;
    }
    if (c_series->parsed()) {
      const auto s = detail::named_series(which, order);
      out << (json ? to_json(s).dump(2) + "\n" : format(s));
      return kOk;
    }
    if (c_encode->parsed()) {
      const auto w = encode(parse_colored_permutation(perm_text));
      out << (json ? to_json(w).dump() : format(w)) << "\n";
      return kOk;
    }
    if (c_decode->parsed()) {
      const auto o = decode(parse_marked_word(word_text), detail::kModes.at(mode_name));
      if (json) {
        out << to_json(o).dump() << "\n";
      } else if (const auto* cp = std::get_if<ColoredPermutation>(&o)) {
        out << format(*cp) << "\n";
      } else if (const auto* f = std::get_if<DecodeFailure>(&o)) {
        out << detail::failure_text(*f) << "\n";
      } else {
        err << "internal contradiction: " << std::get<InternalContradiction>(o).diagnostic << "\n";
      }
      return is_success(o) ? kOk : kNegative;
    }
    if (c_classify->parsed()) {
      const auto cp = parse_colored_permutation(perm_text);
      const auto r = subclass_report(cp);
      out << (json ? detail::report_json(r).dump() + "\n" : detail::report_text(r));
      return kOk;
    }
    if (c_sample->parsed()) {
      const auto f = detail::kSampleFamilies.at(family);
      const auto items = sample_batch(f, n, howmany, seed, threads);
      if (json) {
        out << batch_json(f, n, seed, items).dump() << "\n";
      } else {
        for (const auto& it : items)
          std::visit([&](const auto& v) { out << format(v) << "\n"; }, it);
      }
      return kOk;
    }
    if (c_grid->parsed()) {
      RngStream rng(seed);
      if (polygon) {
        const auto g = sample_convex_polygon(cols, rows, points, rng);
        out << (json ? to_json(g).dump() : format(std::span<const Point>(g.turnpoints))) << "\n";
      } else {
        const auto g = sample_exterior_config(cols, rows, points, rng);
        out << (json ? to_json(g).dump() : format(std::span<const Point>(g.points))) << "\n";
      }
      return kOk;
    }
    if (c_render->parsed()) {
      if (perm_text.empty() == pm_text.empty()) {
        err << "render needs exactly one of --perm and --permutomino\n";
        return kUsage;
      }
      std::string text;
      if (!perm_text.empty()) {
        const auto cp = parse_colored_permutation(perm_text);
        text = format_name == "svg" ? render_svg(cp) : render_ascii(cp);
      } else {
        const auto pm = parse_permutomino(pm_text);
        text = format_name == "svg" ? render_svg(pm) : render_ascii(pm);
      }
      std::ofstream file(out_file, std::ios::binary);
      if (!file) {
        err << "cannot write " << out_file << "\n";
        return kUsage;
      }
      file << text;
      return kOk;
    }
    if (c_verify->parsed()) {
      const auto v = detail::verify(max_n);
      if (json) {
        out << Json{{"max_n", max_n}, {"violations", v.violations}, {"checks", v.report}}.dump(2) << "\n";
      } else {
        for (const auto& item : v.report)
          out << (item["ok"].get<bool>() ? "ok   " : "FAIL ") << item["check"].get<std::string>() << "\n";
        out << v.violations << " violation(s)\n";
      }
      return v.violations == 0 ? kOk : kNegative;
    }
  } catch (const Error& e) {
    err << to_string(e.kind()) << ": " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::NotSquare:
      case ErrorKind::NotCoIndecomposable:
        return kNegative;
      default:
        return kUsage;
    }
  }
  return kUsage;
}

}  // namespace hvcode::cli
