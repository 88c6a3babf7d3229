// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hvcode/json_io.hpp"
#include "hvcode/oracle.hpp"
#include "hvcode/permutomino.hpp"
#include "hvcode/sampler.hpp"
#include "hvcode/series.hpp"

using namespace hvcode;

namespace {

constexpr std::uint64_t kSeedChiSquare = 20260501;
constexpr std::uint64_t kSeedWords = 20260502;
constexpr std::uint64_t kSeedRate = 20260503;
constexpr std::uint64_t kSeedBatch = 20260504;
constexpr std::uint64_t kSeedGrid = 20260505;
constexpr std::uint64_t kSeedTiming = 20260506;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

class Criterion {
 public:
  explicit Criterion(int id) : id_(id), t0_(Clock::now()) {}

  void check(bool ok, const std::string& what) {
    if (!ok) failed_.push_back(what);
  }

  bool report(double budget_s = 0) {
    const double t = seconds_since(t0_);
    if (budget_s > 0 && t >= budget_s) failed_.push_back("runtime " + std::to_string(t) + " s");
    std::cout << (failed_.empty() ? "PASS" : "FAIL") << " criterion " << id_ << " (" << t << " s)";
    for (const auto& f : failed_) std::cout << " | " << f;
    std::cout << std::endl;
    return failed_.empty();
  }

 private:
  int id_;
  Clock::time_point t0_;
  std::vector<std::string> failed_;
};

double chi_square(const std::map<std::string, long>& hits, std::size_t cells, long draws) {
  const double e = static_cast<double>(draws) / static_cast<double>(cells);
  double chi = static_cast<double>(cells - hits.size()) * e;
  for (const auto& [k, h] : hits) chi += (h - e) * (h - e) / e;
  return chi;
}

bool counts() {
  Criterion c(1);
  for (int n = 1; n <= 9; ++n)
    c.check(oracle::brute_enumerate(CountFamily::Square, n).count == count(CountFamily::Square, n),
            "square n=" + std::to_string(n));
  c.check(count(CountFamily::Square, 5) == 104 && count(CountFamily::Square, 6) == 464, "square 104/464");
  const int cp[] = {1, 4, 18, 84};
  for (int n = 2; n <= 5; ++n) {
    const BigInt brute = oracle::brute_enumerate(CountFamily::ConvexPermutomino, n).count;
    c.check(brute == cp[n - 2] && count(CountFamily::ConvexPermutomino, n) == cp[n - 2],
            "permutomino n=" + std::to_string(n));
  }
  for (int n = 2; n <= 9; ++n)
    c.check(oracle::brute_enumerate(CountFamily::FullyIndec, n).count == count(CountFamily::FullyIndec, n),
            "fully-indec n=" + std::to_string(n));
  c.check(count(CountFamily::FullyIndec, 2) == 0 && count(CountFamily::FullyIndec, 3) == 0 &&
              count(CountFamily::FullyIndec, 4) == 2,
          "fully-indec 0,0,2");
  const auto m = base_series(BaseSeries::M, 12);
  for (int n = 2; n <= 12; ++n) {
    const BigInt closed = BigInt(n + 2) * pow2(2 * n - 3) / 4;
    c.check(count(CountFamily::MarkedWords, n) == closed && m[n].at_one() == closed,
            "marked words n=" + std::to_string(n));
  }
  return c.report(10);
}

bool audits() {
  Criterion c(2);
  for (int n = 2; n <= 8; ++n)
    for (auto mode : {DecodeMode::Square, DecodeMode::FullyIndec, DecodeMode::Permutomino}) {
      if (mode == DecodeMode::Permutomino && n > 7) continue;
      const auto a = oracle::bijection_audit(mode, n);
      const std::string tag = std::string(to_string(mode)) + " n=" + std::to_string(n);
      c.check(a.ok(), tag + ": " + (a.violations.empty() ? std::string("?") : a.violations.front()));
      c.check(a.success_count == a.expected_success, tag + " success count");
      c.check(a.internal_contradictions == 0 && a.roundtrip_failures == 0 && a.class_violations == 0,
              tag + " contradictions/round-trips/classes");
      if (mode != DecodeMode::Square) continue;
      for (const auto& [key, got] : a.census)
        c.check(got == oracle::expected_census(n, key.second), tag + " census");
    }
  const auto a3 = oracle::bijection_audit(DecodeMode::Square, 3);
  c.check(a3.success_count == 6 && a3.failure_count("SW") == 2 && a3.failure_count("NW") == 2, "n=3 census");
  const auto a4 = oracle::bijection_audit(DecodeMode::Square, 4);
  c.check(a4.success_count == 24 && a4.failure_count("SW") == 12 && a4.failure_count("NW") == 12, "n=4 census");
  return c.report(30);
}

bool refined_series() {
  Criterion c(3);
  const auto sq = sq_refined_series(8);
  for (int n = 1; n <= 8; ++n)
    c.check(sq[n] == oracle::brute_refined_histogram(CountFamily::Square, n),
            "sq vs brute n=" + std::to_string(n));
  Polynomial stated;
  stated.add_term(3, 3, 2);
  stated.add_term(3, 2, 1);
  stated.add_term(2, 3, 1);
  stated.add_term(2, 2, 1);
  if (sq[3] != stated) c.check(false, "[t^3] is " + format(sq[3]) + ", stated " + format(stated));
  const auto nw = aux_series(AuxSeries::TNorthWest, 12);
  for (int n = 1; n <= 12; ++n)
    c.check(nw[n].at_one() == binomial(2 * n - 2, n - 1), "T_NW(1,1) n=" + std::to_string(n));
  const auto plus = aux_series(AuxSeries::TNorthWest, 3, NwDenominator::Plus);
  c.check(plus[3].at_one() != binomial(4, 2), "plus variant not rejected at n=3");
  c.check(narayana_reciprocity_check(10), "narayana reciprocity");
  return c.report();
}

bool permutomino_layer() {
  Criterion c(4);
  const int directed[] = {1, 3, 10};
  const int parallelogram[] = {1, 2, 5};
  for (int n = 2; n <= 5; ++n) {
    std::set<ColoredPermutation> image;
    int d = 0, q = 0;
    for (const auto& cell : oracle::cell_permutominoes(n)) {
      const Permutomino pm(cell.turnpoints);
      const auto cp = phi(pm);
      c.check(phi_inverse(cp) == pm, "phi_inverse(phi) n=" + std::to_string(n));
      c.check(pm.directed() == cell.directed && pm.parallelogram() == cell.parallelogram,
              "flags n=" + std::to_string(n));
      image.insert(cp);
      d += pm.directed();
      q += pm.parallelogram();
    }
    for (const auto& cp : oracle::colored_co_indecomposable(n))
      c.check(phi(phi_inverse(cp)) == cp, "phi(phi_inverse) n=" + std::to_string(n));
    c.check(BigInt(image.size()) == count(CountFamily::ConvexPermutomino, n), "image size n=" + std::to_string(n));
    if (n <= 4) {
      c.check(d == directed[n - 2], "directed n=" + std::to_string(n));
      c.check(q == parallelogram[n - 2], "parallelogram n=" + std::to_string(n));
    }
  }
  return c.report();
}

bool sampling() {
  Criterion c(5);
  {
    RngStream rng(kSeedChiSquare);
    std::map<std::string, long> hits;
    const long draws = 1040000;
    for (long i = 0; i < draws; ++i) ++hits[format(sample_code(SampleFamily::Square, 5, rng))];
    const double chi = chi_square(hits, 104, draws);
    c.check(hits.size() == 104 && chi < 170, "square n=5 chi2=" + std::to_string(chi));
  }
  {
    RngStream rng(kSeedWords);
    std::map<std::string, long> hits;
    const long draws = 100000;
    for (long i = 0; i < draws; ++i) ++hits[format(sample_marked_word(3, rng))];
    const double chi = chi_square(hits, 10, draws);
    c.check(hits.size() == 10 && chi < 30, "words n=3 chi2=" + std::to_string(chi));
  }
  {
    RngStream rng(kSeedRate);
    SampleStats st;
    const int samples = 20000;
    for (int i = 0; i < samples; ++i) sample_code(SampleFamily::Square, 20, rng, &st);
    const double p = static_cast<double>(count(CountFamily::Square, 20)) /
                     static_cast<double>(count(CountFamily::MarkedWords, 20));
    // Successes among st.attempts Bernoulli(p) trials.
    const double trials = static_cast<double>(st.attempts);
    const double sd = std::sqrt(trials * p * (1 - p));
    c.check(std::abs(samples - trials * p) <= 3 * sd,
            "acceptance " + std::to_string(samples / trials) + " vs " + std::to_string(p));
  }
  {
    const auto a = batch_json(SampleFamily::Square, 50, kSeedBatch, sample_batch(SampleFamily::Square, 50, 200, kSeedBatch, 1));
    const auto b = batch_json(SampleFamily::Square, 50, kSeedBatch, sample_batch(SampleFamily::Square, 50, 200, kSeedBatch, 4));
    c.check(a.dump() == b.dump(), "byte-identical JSON");
  }
  return c.report();
}

bool grids() {
  Criterion c(6);
  c.check(exact_generic_count(5, 5, 3) == 600, "exact (5,5,3)");
  c.check(oracle::brute_generic_grid_count(5, 5, 3, false) == 600, "brute (5,5,3)");
  c.check(exact_generic_polygon_count(4, 4, 2) == 36, "exact polygon (4,4,2)");
  c.check(oracle::brute_generic_grid_count(4, 4, 2, true) == 36, "brute polygon (4,4,2)");
  RngStream rng(kSeedGrid);
  for (int i = 0; i < 200; ++i) {
    const int k = 2 + i % 15;
    c.check(is_valid_config(sample_exterior_config(60, 50, k, rng)), "config validates");
    c.check(is_valid_polygon(sample_convex_polygon(60, 50, k, rng), k), "polygon validates");
  }
  return c.report();
}

bool performance() {
  Criterion c(7);
  RngStream rng(kSeedTiming);
  for (const auto& [n, budget] : {std::pair{100000, 1.0}, std::pair{1000000, 15.0}}) {
    const auto t0 = Clock::now();
    const auto cp = sample_code(SampleFamily::Square, n, rng);
    const double t = seconds_since(t0);
    c.check(cp.size() == n && t < budget, "n=" + std::to_string(n) + " took " + std::to_string(t) + " s");
  }
  std::vector<double> xs, ys;
  for (int n : {1000, 10000, 100000}) {
    double total = 0;
    const int reps = 20;
    for (int r = 0; r < reps; ++r) {
      DecodeStats st;
      decode(sample_marked_word(n, rng), DecodeMode::Square, &st);
      total += static_cast<double>(st.pointer_advances + st.steps);
    }
    xs.push_back(std::log(n));
    ys.push_back(std::log(total / reps));
  }
  const double mx = (xs[0] + xs[1] + xs[2]) / 3, my = (ys[0] + ys[1] + ys[2]) / 3;
  double sxy = 0, sxx = 0;
  for (int i = 0; i < 3; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  const double slope = sxy / sxx;
  c.check(slope <= 1.1, "fitted exponent " + std::to_string(slope));
  return c.report();
}

}  // namespace

int main() {
  const std::vector<std::function<bool()>> criteria{counts, audits, refined_series, permutomino_layer,
                                                    sampling, grids, performance};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      failed += !criteria[i]();
    } catch (const std::exception& e) {
      std::cout << "FAIL criterion " << i + 1 << " | exception: " << e.what() << std::endl;
      ++failed;
    }
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
