// Copyright 2026 The qrstates Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "qrs/randkit.hpp"
#include "qrs/stats.hpp"

using qrs::Errc;
using qrs::Error;
using qrs::entropy::EntropySource;
using namespace qrs::randkit;

namespace {

struct Moments {
  double mean = 0, var = 0, skew = 0;
};

Moments moments_of(const std::vector<double>& xs) {
  Moments m;
  const double n = static_cast<double>(xs.size());
  for (double x : xs) m.mean += x;
  m.mean /= n;
  double m2 = 0, m3 = 0;
  for (double x : xs) {
    const double d = x - m.mean;
    m2 += d * d;
    m3 += d * d * d;
  }
  m.var = m2 / (n - 1);
  m.skew = (m3 / n) / std::pow(m2 / n, 1.5);
  return m;
}

}  // namespace

TEST_CASE("normal_real golden values, seed 2024") {
  auto src = EntropySource::prng(2024);
  const double expected[] = {0.7971867263066114, 1.1585873232620847, -0.5765632844976851,
                             -1.640315541829844};
  for (double e : expected) CHECK(normal_real(src, 0.0, 1.0) == doctest::Approx(e).epsilon(1e-14));
}

TEST_CASE("normal_real moments") {
  auto src = EntropySource::prng(101);
  const int n = 100000;
  std::vector<double> xs(n);
  for (auto& x : xs) x = normal_real(src, 0.0, 1.0);
  const auto m = moments_of(xs);
  CHECK(std::abs(m.mean) < 5 / std::sqrt(n));
  // Var of the sample variance for a normal is 2/(n-1).
  CHECK(std::abs(m.var - 1.0) < 5 * std::sqrt(2.0 / (n - 1)));
}

TEST_CASE("normal_real location and scale are stream-for-stream") {
  auto a = EntropySource::prng(6);
  auto b = EntropySource::prng(6);
  for (int i = 0; i < 200; ++i) CHECK(normal_real(a, 3.0, 1.0) == 3.0 + normal_real(b, 0.0, 1.0));
  auto c = EntropySource::prng(6);
  auto d = EntropySource::prng(6);
  for (int i = 0; i < 200; ++i) CHECK(normal_real(c, 0.0, 2.0) == 2.0 * normal_real(d, 0.0, 1.0));
}

TEST_CASE("normal_real rejects bad stddev") {
  auto src = EntropySource::prng(1);
  for (double s : {0.0, -1.0, static_cast<double>(NAN)}) {
    try {
      normal_real(src, 0.0, s);
      FAIL("expected InvalidParameter");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::InvalidParameter);
    }
  }
}

TEST_CASE("normal_array shape and ordering") {
  auto a = EntropySource::prng(17);
  auto b = EntropySource::prng(17);
  const std::vector<std::size_t> one{1};
  const auto single = normal_array(a, 0.0, 1.0, one);
  REQUIRE(single.values.size() == 1);
  CHECK(single.values[0] == normal_real(b, 0.0, 1.0));

  const std::vector<std::size_t> dims{2, 3};
  const auto arr = normal_array(a, 1.5, 0.5, dims);
  CHECK(arr.shape == dims);
  REQUIRE(arr.values.size() == 6);
  for (double v : arr.values) CHECK(v == normal_real(b, 1.5, 0.5));

  const std::vector<std::size_t> bad{2, 0};
  CHECK_THROWS_AS(normal_array(a, 0.0, 1.0, bad), Error);
}

TEST_CASE("normal_array 10x10 skewness") {
  auto src = EntropySource::prng(23);
  const std::vector<std::size_t> dims{10, 10};
  const auto arr = normal_array(src, 0.0, 1.0, dims);
  REQUIRE(arr.values.size() == 100);
  // sd of sample skewness for normal data is about sqrt(6/n).
  CHECK(std::abs(moments_of(arr.values).skew) < 5 * std::sqrt(6.0 / 100));
}

TEST_CASE("random_simplex") {
  auto src = EntropySource::prng(31);
  CHECK(random_simplex(src, 1).weights() == std::vector<double>{1.0});
  CHECK_THROWS_AS(random_simplex(src, 0), Error);

  const int n = 100000;
  std::vector<double> sums(4, 0.0);
  for (int i = 0; i < n; ++i) {
    const auto p = random_simplex(src, 4);
    double total = 0;
    for (std::size_t j = 0; j < 4; ++j) {
      REQUIRE(p[j] >= 0.0);
      sums[j] += p[j];
      total += p[j];
    }
    REQUIRE(std::abs(total - 1.0) <= 1e-12);
  }
  // Dirichlet(1,1,1,1) marginal is Beta(1,3): variance 3/80.
  const double sd = std::sqrt(3.0 / 80 / n);
  for (double s : sums) CHECK(std::abs(s / n - 0.25) < 5 * sd);
}

TEST_CASE("random_simplex n=2 marginal is uniform (KS)") {
  auto src = EntropySource::prng(37);
  std::vector<double> ws;
  for (int i = 0; i < 20000; ++i) {
    const auto p = random_simplex(src, 2);
    CHECK(p[0] + p[1] == doctest::Approx(1.0).epsilon(1e-15));
    ws.push_back(p[0]);
  }
  const auto ks = qrs::stats::ks_test(ws, [](double x) { return std::clamp(x, 0.0, 1.0); });
  CHECK(ks.p_value > 1e-3);
}

TEST_CASE("SimplexPoint invariants") {
  CHECK_NOTHROW(SimplexPoint({0.25, 0.75}));
  CHECK_THROWS_AS(SimplexPoint({0.5, 0.6}), Error);
  CHECK_THROWS_AS(SimplexPoint({-0.1, 1.1}), Error);
  CHECK_THROWS_AS(SimplexPoint({}), Error);
}

TEST_CASE("random_choice") {
  auto src = EntropySource::prng(41);
  const std::vector<std::string> one{"a"};
  CHECK(random_choice<std::string>(src, one) == "a");
  const std::vector<std::string> none;
  try {
    random_choice<std::string>(src, none);
    FAIL("expected EmptyList");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::EmptyList);
  }

  const int n = 100000;
  const std::vector<std::string> xy{"x", "y"};
  int xs = 0;
  for (int i = 0; i < n; ++i) xs += random_choice<std::string>(src, xy) == "x";
  CHECK(std::abs(xs - n / 2.0) < 5 * std::sqrt(n * 0.25));

  const std::vector<int> six{10, 20, 30, 40, 50, 60};
  std::vector<std::uint64_t> counts(6, 0);
  for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(random_choice<int>(src, six) / 10 - 1)];
  CHECK(qrs::stats::chi_square_uniform(counts).p_value > 1e-3);
}

TEST_CASE("edge_from_index enumerates pairs lexicographically") {
  for (std::int64_t v : {2, 3, 4, 7, 12}) {
    std::int64_t idx = 0;
    for (std::int64_t i = 1; i <= v; ++i) {
      for (std::int64_t j = i + 1; j <= v; ++j) {
        CHECK(edge_from_index(v, idx) == Edge{i, j});
        ++idx;
      }
    }
    CHECK_THROWS_AS(edge_from_index(v, idx), Error);
  }
}

TEST_CASE("random_graph fixed cases") {
  auto src = EntropySource::prng(43);
  CHECK(random_graph(src, 3, 3) == std::vector<Edge>{{1, 2}, {1, 3}, {2, 3}});
  CHECK(random_graph(src, 5, 0).empty());
  CHECK(random_graph(src, 1, 0).empty());
  try {
    random_graph(src, 4, 7);
    FAIL("expected TooManyEdges");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooManyEdges);
  }
}

TEST_CASE("random_graph structure") {
  auto src = EntropySource::prng(47);
  for (int trial = 0; trial < 300; ++trial) {
    const auto v = src.read_int_in(1, 15);
    const auto e = src.read_int_in(0, v * (v - 1) / 2);
    const auto g = random_graph(src, v, e);
    REQUIRE(static_cast<std::int64_t>(g.size()) == e);
    CHECK(std::is_sorted(g.begin(), g.end()));
    CHECK(std::adjacent_find(g.begin(), g.end()) == g.end());
    for (const auto& ed : g) {
      CHECK(ed.first >= 1);
      CHECK(ed.first < ed.second);
      CHECK(ed.second <= v);
    }
  }
}

TEST_CASE("random_graph (4,2) is uniform over the 15 edge sets") {
  // Brute-force list of all 2-subsets of the 6 edges of K4.
  std::vector<Edge> all;
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) all.push_back({i, j});
  std::map<std::vector<Edge>, std::uint64_t> counts;
  for (std::size_t a = 0; a < all.size(); ++a)
    for (std::size_t b = a + 1; b < all.size(); ++b) counts[{all[a], all[b]}] = 0;
  REQUIRE(counts.size() == 15);

  auto src = EntropySource::prng(53);
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const auto g = random_graph(src, 4, 2);
    auto it = counts.find(g);
    REQUIRE(it != counts.end());
    ++it->second;
  }
  const double p = 1.0 / 15;
  const double sigma = std::sqrt(n * p * (1 - p));
  std::vector<std::uint64_t> obs;
  for (const auto& [edges, c] : counts) {
    CHECK(std::abs(static_cast<double>(c) - n * p) < 5 * sigma);
    obs.push_back(c);
  }
  CHECK(qrs::stats::chi_square_uniform(obs).p_value > 1e-3);
}

TEST_CASE("ginibre_matrix shape and stream use") {
  auto a = EntropySource::prng(59);
  auto b = EntropySource::prng(59);
  const auto g = ginibre_matrix(a, 1, 1);
  const double re = normal_real(b, 0.0, 1.0);
  const double im = normal_real(b, 0.0, 1.0);
  CHECK(g(0, 0) == std::complex<double>(re, im));
  CHECK(a.byte_counter() == b.byte_counter());

  const auto m = ginibre_matrix(a, 2, 3);
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  const auto t = ginibre_matrix(a, 3, 2);
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);

  // Row-major fill, real part first.
  auto c = EntropySource::prng(61);
  auto d = EntropySource::prng(61);
  const auto h = ginibre_matrix(c, 2, 3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) {
      const double r = normal_real(d, 0.0, 1.0);
      const double s = normal_real(d, 0.0, 1.0);
      CHECK(h(i, j) == std::complex<double>(r, s));
    }
  CHECK_THROWS_AS(ginibre_matrix(a, 0, 2), Error);
}

TEST_CASE("ginibre_matrix moments") {
  auto src = EntropySource::prng(67);
  const int samples = 10000;
  std::complex<double> sum = 0;
  double abs2 = 0;
  for (int s = 0; s < samples; ++s) {
    const auto g = ginibre_matrix(src, 4, 4);
    for (int k = 0; k < 16; ++k) {
      const auto z = g.data()[k];
      REQUIRE(std::isfinite(z.real()));
      REQUIRE(std::isfinite(z.imag()));
      sum += z;
      abs2 += std::norm(z);
    }
  }
  const double n = samples * 16.0;
  // Re, Im each N(0,1); |z|^2 ~ chi^2_2 with mean 2, variance 4.
  CHECK(std::abs(sum.real() / n) < 5 / std::sqrt(n));
  CHECK(std::abs(sum.imag() / n) < 5 / std::sqrt(n));
  CHECK(std::abs(abs2 / n - 2.0) < 5 * 2.0 / std::sqrt(n));
}

TEST_CASE("ginibre_matrix is bit-identical under a seed") {
  auto a = EntropySource::prng(71);
  auto b = EntropySource::prng(71);
  CHECK(ginibre_matrix(a, 5, 3) == ginibre_matrix(b, 5, 3));
}
