// Copyright 2026 The Interfero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "interfero/errors.hpp"
#include "interfero/stats.hpp"
#include "support.hpp"

using namespace interfero;
using interfero::testing::Rng;

namespace {

// Series whose theory is zero, so deviations are minus the experimental values.
MetricSeries from_deviations(const std::vector<double>& dc, const std::vector<double>& dp) {
  MetricSeries s;
  for (std::size_t i = 0; i < dc.size(); ++i) {
    s.angles.push_back(static_cast<double>(i));
    s.theory_c.push_back(0.5);
    s.theory_p.push_back(0.5);
    s.experimental_c.push_back(0.5 - dc[i]);
    s.experimental_p.push_back(0.5 - dp[i]);
  }
  return s;
}

MetricSeries random_series(Rng& rng, std::size_t n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  MetricSeries s;
  for (std::size_t i = 0; i < n; ++i) {
    s.angles.push_back(u(rng));
    s.experimental_c.push_back(u(rng));
    s.experimental_p.push_back(u(rng));
    s.theory_c.push_back(u(rng));
    s.theory_p.push_back(u(rng));
  }
  return s;
}

// Literal transcription of the three sums, as the oracle.
struct Direct {
  double sum = 0, c = 0, p = 0, corr = 0;
};
Direct direct(const MetricSeries& s) {
  Direct d;
  const double n = static_cast<double>(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double dc = s.theory_c[i] - s.experimental_c[i];
    const double dp = s.theory_p[i] - s.experimental_p[i];
    d.sum += (dc + dp) * (dc + dp) / n;
    d.c += dc * dc / n;
    d.p += dp * dp / n;
    d.corr += 2.0 * dc * dp / n;
  }
  return d;
}

}  // namespace

TEST_CASE("mse examples") {
  const std::vector<double> zero(5, 0.0);
  CHECK(mse(zero, zero) == 0.0);

  const std::vector<double> a{0.1}, b{0.1};
  CHECK(mse(a, b) == Catch::Approx(0.04).margin(1e-15));

  // Pairs (dC, dP) = (0.1, -0.1) and (0, 0).
  const auto d = decompose(from_deviations({0.1, 0.0}, {-0.1, 0.0}));
  CHECK(d.mse_sum == Catch::Approx(0.0).margin(1e-15));
  CHECK(d.mse_c == Catch::Approx(0.005).margin(1e-15));
  CHECK(d.mse_p == Catch::Approx(0.005).margin(1e-15));
  CHECK(d.corr == Catch::Approx(-0.01).margin(1e-15));
}

TEST_CASE("mse rejects empty or mismatched input") {
  const std::vector<double> none;
  CHECK_THROWS_AS(mse(none, none), ValidationError);
  const std::vector<double> one{0.1}, two{0.1, 0.2};
  CHECK_THROWS_AS(mse(one, two), ValidationError);
  CHECK_THROWS_AS(decompose(MetricSeries{}), ValidationError);
  auto bad = from_deviations({0.1, 0.2}, {0.0, 0.0});
  bad.theory_p.pop_back();
  CHECK_THROWS_AS(bad.validate(), ValidationError);
}

TEST_CASE("corr_term examples") {
  CHECK(corr_term(from_deviations({0, 0, 0}, {0, 0, 0})) == 0.0);
  CHECK(corr_term(from_deviations({0.1, 0.1}, {-0.1, -0.1})) ==
        Catch::Approx(-0.02).margin(1e-15));
  CHECK(corr_term(from_deviations({1, 0}, {0, 1})) == 0.0);
  // Zero when either side has no deviation.
  CHECK(corr_term(from_deviations({0.3, -0.2}, {0, 0})) == 0.0);
}

TEST_CASE("decompose examples") {
  const auto z = decompose(from_deviations({0, 0}, {0, 0}));
  CHECK(z.mse_sum == 0.0);
  CHECK(z.mse_c == 0.0);
  CHECK(z.mse_p == 0.0);
  CHECK(z.corr == 0.0);

  // C deviations (0.1, -0.1), P deviations mirror them.
  const auto d = decompose(from_deviations({0.1, -0.1}, {-0.1, 0.1}));
  CHECK(d.mse_sum == Catch::Approx(0.0).margin(1e-15));
  CHECK(d.mse_c == Catch::Approx(0.01).margin(1e-15));
  CHECK(d.mse_p == Catch::Approx(0.01).margin(1e-15));
  CHECK(d.corr == Catch::Approx(-0.02).margin(1e-15));
}

TEST_CASE("decomposition identity and direct sums on random series") {
  Rng rng(51);
  for (int t = 0; t < 1000; ++t) {
    const auto s = random_series(rng, 1 + rng() % 64);
    const auto d = decompose(s);
    const auto o = direct(s);
    CHECK(std::abs(d.residual()) <= 1e-12);
    CHECK(std::abs(d.mse_sum - o.sum) <= 1e-12);
    CHECK(std::abs(d.mse_c - o.c) <= 1e-12);
    CHECK(std::abs(d.mse_p - o.p) <= 1e-12);
    CHECK(std::abs(d.corr - o.corr) <= 1e-12);
    CHECK(d.mse_sum >= 0.0);
    CHECK(std::abs(d.corr) <= 2.0 * std::sqrt(d.mse_c * d.mse_p) + 1e-12);
  }
}

TEST_CASE("mse is invariant under concatenating a series with itself") {
  Rng rng(52);
  for (int t = 0; t < 100; ++t) {
    const auto s = random_series(rng, 1 + rng() % 20);
    const std::size_t k = 2 + rng() % 4;
    MetricSeries rep;
    for (std::size_t j = 0; j < k; ++j) {
      auto append = [](std::vector<double>& a, const std::vector<double>& b) {
        a.insert(a.end(), b.begin(), b.end());
      };
      append(rep.angles, s.angles);
      append(rep.experimental_c, s.experimental_c);
      append(rep.experimental_p, s.experimental_p);
      append(rep.theory_c, s.theory_c);
      append(rep.theory_p, s.theory_p);
    }
    CHECK(std::abs(decompose(rep).mse_sum - decompose(s).mse_sum) <= 1e-12);
  }
}

TEST_CASE("summarize examples") {
  const std::vector<double> one{0.2};
  auto d = summarize(one);
  CHECK(d.mean == Catch::Approx(0.2).margin(1e-15));
  CHECK(d.std == 0.0);
  CHECK(d.min == 0.2);
  CHECK(d.max == 0.2);
  CHECK(d.count == 1);

  const std::vector<double> same(7, 0.35);
  CHECK(summarize(same).std == Catch::Approx(0.0).margin(1e-15));

  const std::vector<double> two{0.1, 0.3};
  d = summarize(two);
  CHECK(d.mean == Catch::Approx(0.2).margin(1e-15));
  CHECK(d.std == Catch::Approx(0.1).margin(1e-15));
  CHECK(d.histogram[6] == 1);
  CHECK(d.histogram[18] == 1);
  CHECK(std::accumulate(d.histogram.begin(), d.histogram.end(), std::uint64_t{0}) == 2);
}

TEST_CASE("histogram edges and overflow") {
  CHECK(histogram_bin(0.0) == 0);
  CHECK(histogram_bin(1.0 / 60.0 - 1e-12) == 0);
  CHECK(histogram_bin(0.5) == 30);
  CHECK(histogram_bin(1.0) == 59);
  CHECK(histogram_bin(7.0) == 59);

  const std::vector<double> v{0.0, 1.0, 1.5, 2.0};
  const auto d = summarize(v);
  CHECK(d.histogram[59] == 3);
  CHECK(d.overflow == 2);
  CHECK(d.max == 2.0);
  CHECK_THROWS_AS(summarize(std::vector<double>{}), ValidationError);
}

TEST_CASE("summaries are ordered and count every value") {
  Rng rng(53);
  std::uniform_real_distribution<double> u(0.0, 1.2);
  for (int t = 0; t < 200; ++t) {
    std::vector<double> v(1 + rng() % 200);
    for (auto& x : v) x = u(rng);
    const auto d = summarize(v);
    CHECK(d.min <= d.mean);
    CHECK(d.mean <= d.max);
    CHECK(std::accumulate(d.histogram.begin(), d.histogram.end(), std::uint64_t{0}) == v.size());
    // Population std, computed two-pass as the oracle.
    double mean = 0.0;
    for (double x : v) mean += x / static_cast<double>(v.size());
    double var = 0.0;
    for (double x : v) var += (x - mean) * (x - mean) / static_cast<double>(v.size());
    CHECK(std::abs(d.std - std::sqrt(var)) <= 1e-12);
  }
}

TEST_CASE("build_report aggregates experiments") {
  std::vector<MetricSeries> runs{from_deviations({0.1, -0.1}, {-0.1, 0.1}),
                                 from_deviations({0.2, 0.0}, {0.2, 0.0})};
  const auto r = build_report(runs);
  REQUIRE(r.per_experiment.size() == 2);
  // Second run: mse_sum = (0.4^2)/2 = 0.08.
  CHECK(r.per_experiment[1].mse_sum == Catch::Approx(0.08).margin(1e-15));
  CHECK(r.mean.mse_sum == Catch::Approx(0.04).margin(1e-15));
  CHECK(r.mean.corr == Catch::Approx((-0.02 + 0.04) / 2).margin(1e-15));
  CHECK(std::abs(r.mean.residual()) <= 1e-12);
  CHECK(r.distribution.count == 2);
  CHECK(r.distribution.min == Catch::Approx(0.0).margin(1e-15));
  CHECK(r.distribution.max == Catch::Approx(0.08).margin(1e-15));
  CHECK(r.distribution.histogram[0] == 1);
  CHECK(r.distribution.histogram[4] == 1);
  CHECK_THROWS_AS(build_report(std::vector<MetricSeries>{}), ValidationError);
}
