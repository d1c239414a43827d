#include <doctest.h>

#include <random>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "qsc/code.hpp"
#include "qsc/design.hpp"
#include "qsc/error.hpp"

using namespace qsc::code;

namespace {

const oracle::Matrix hamming = {{1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}};

PrimeFieldCode binary(const oracle::Matrix& rows, int n) { return PrimeFieldCode::span(rows, 2, n); }

std::vector<std::uint64_t> dist_of(const CodeReport& r) {
  std::vector<std::uint64_t> out(r.n + 1, 0);
  for (const auto& [w, c] : r.weight_distribution) out[w] = c;
  return out;
}

bool all_weights_mod4(const std::vector<std::uint64_t>& d) {
  for (std::size_t w = 0; w < d.size(); ++w)
    if (d[w] && w % 4) return false;
  return true;
}

}  // namespace

TEST_SUITE("code") {
  TEST_CASE("hamming code and its dual") {
    const auto c = binary(hamming, 7);
    CHECK(c.k() == 4);
    CHECK(weight_distribution(c) == std::vector<std::uint64_t>{1, 0, 0, 7, 7, 0, 0, 1});
    const auto d = dual(c);
    CHECK(d.k() == 3);
    CHECK(weight_distribution(d) == std::vector<std::uint64_t>{1, 0, 0, 0, 7, 0, 0, 0});
    CHECK(dual(d) == c);
    CHECK(is_self_orthogonal(d));
    CHECK_FALSE(is_self_orthogonal(c));
    CHECK(small_dual_distance(d) == 3);
    CHECK(small_dual_distance(c) == std::nullopt);
  }

  TEST_CASE("generator is canonical") {
    auto rows = hamming;
    std::swap(rows[0], rows[3]);
    for (int j = 0; j < 7; ++j) rows[1][j] ^= rows[2][j];
    CHECK(binary(rows, 7) == binary(hamming, 7));
    rows.push_back(rows[0]);
    CHECK(binary(rows, 7).k() == 4);
  }

  TEST_CASE("distribution matches direct encoding") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 12);
      const int n = k + static_cast<int>(rng() % 30);
      const auto rows = oracle::random_binary(rng, k, n);
      const auto c = binary(rows, n);
      const auto expect = oracle::weight_distribution(rows, 2, n);
      // Duplicate messages scale every count by 2^(k - rank).
      std::vector<std::uint64_t> got = weight_distribution(c, 1 + trial % 4);
      for (auto& x : got) x <<= (k - c.k());
      CHECK(got == expect);
      CHECK(weight_distribution(c, 1) == weight_distribution(c, 3));
    }
  }

  TEST_CASE("minimum distance equals the pairwise minimum") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 12; ++trial) {
      const int k = 2 + static_cast<int>(rng() % 9);
      const int n = k + 4 + static_cast<int>(rng() % 12);
      const auto c = binary(oracle::random_binary(rng, k, n), n);
      const auto rep = analyze(c);
      oracle::Matrix basis;
      for (const auto& r : c.generator()) basis.emplace_back(r.begin(), r.end());
      CHECK(rep.min_distance == oracle::pairwise_min_distance(basis, n));
    }
  }

  TEST_CASE("huffman criterion on random self-orthogonal codes") {
    std::mt19937_64 rng(2024);
    int doubly = 0, singly = 0;
    for (int trial = 0; trial < 200; ++trial) {
      const int n = 8 + static_cast<int>(rng() % 25);
      const bool want_doubly = trial % 2 == 0;
      const auto rows = oracle::random_self_orthogonal(rng, n, want_doubly);
      if (rows.empty()) continue;
      const auto c = binary(rows, n);
      REQUIRE(c.k() <= 10);
      REQUIRE(is_self_orthogonal(c));
      const auto dist = weight_distribution(c);
      const bool mod4 = all_weights_mod4(dist);
      CHECK(doubly_even_from_basis(c) == mod4);
      if (mod4) CHECK(is_self_orthogonal(c));
      (mod4 ? doubly : singly)++;
    }
    CHECK(doubly > 50);
    CHECK(singly > 20);
  }

  TEST_CASE("doubly even distributions imply self-orthogonality") {
    std::mt19937_64 rng(5);
    int seen = 0;
    for (int trial = 0; trial < 3000 && seen < 25; ++trial) {
      const int k = 1 + static_cast<int>(rng() % 3);
      const int n = 4 + static_cast<int>(rng() % 9);
      const auto c = binary(oracle::random_binary(rng, k, n), n);
      if (!all_weights_mod4(weight_distribution(c))) continue;
      ++seen;
      CHECK(is_self_orthogonal(c));
    }
    CHECK(seen >= 25);
  }

  TEST_CASE("parity flags") {
    const auto ext = binary({{1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1},
                             {0, 1, 0, 1, 0, 1, 0, 1}},
                            8);
    auto rep = analyze(ext);
    CHECK(rep.doubly_even == true);
    CHECK(rep.singly_even == false);
    CHECK(rep.self_orthogonal);
    const auto rep2 = binary({{1, 1, 0, 0}, {0, 0, 1, 1}}, 4);
    CHECK(analyze(rep2).singly_even == true);
    CHECK(analyze(rep2).doubly_even == false);
    CHECK(all_weights_even(rep2) == true);
    CHECK(all_weights_even(binary(hamming, 7)) == false);
  }

  TEST_CASE("ternary tetracode") {
    const auto c = PrimeFieldCode::span({{1, 0, 1, 1}, {0, 1, 1, 2}}, 3, 4);
    CHECK(weight_distribution(c) == std::vector<std::uint64_t>{1, 0, 0, 8, 0});
    CHECK(oracle::weight_distribution({{1, 0, 1, 1}, {0, 1, 1, 2}}, 3, 4) == weight_distribution(c, 2));
    CHECK(is_self_orthogonal(c));
    CHECK(dual(c) == c);
    const auto rep = analyze(c);
    CHECK_FALSE(rep.doubly_even.has_value());
    CHECK(rep.min_distance == 3);
    CHECK(doubly_even_from_basis(c) == std::nullopt);
  }

  TEST_CASE("odd prime distributions are thread independent") {
    std::mt19937_64 rng(3);
    for (int p : {3, 5, 7}) {
      oracle::Matrix rows(3, std::vector<int>(9));
      for (auto& r : rows)
        for (auto& x : r) x = static_cast<int>(rng() % p);
      const auto c = PrimeFieldCode::span(rows, p, 9);
      CHECK(weight_distribution(c, 1) == weight_distribution(c, 4));
      auto expect = oracle::weight_distribution(rows, p, 9);
      auto got = weight_distribution(c);
      std::uint64_t scale = 1;
      for (int i = c.k(); i < 3; ++i) scale *= p;
      for (auto& x : got) x *= scale;
      CHECK(got == expect);
    }
  }

  TEST_CASE("dual distance detects zero and repeated columns") {
    CHECK(small_dual_distance(binary({{1, 0, 1}, {0, 1, 1}}, 3)) == 3);
    CHECK(small_dual_distance(binary({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3)) == std::nullopt);
    CHECK(small_dual_distance(binary({{1, 1, 0}}, 3)) == 1);
    CHECK(small_dual_distance(binary({{1, 1, 1}}, 3)) == 2);
  }

  TEST_CASE("rains bound") {
    CHECK(rains_bound(64) == 12);
    CHECK(rains_bound(22) == 6);
    CHECK(rains_bound(24) == 8);
    CHECK(rains_bound(8) == 4);
  }

  TEST_CASE("optimality table") {
    CHECK(optimality_check(32, 5, 16) == Optimality::optimal);
    CHECK(optimality_check(28, 5, 12) == Optimality::not_optimal);
    CHECK(optimality_check(64, 13, 24) == Optimality::optimal_equal_best_known);
    CHECK(optimality_check(64, 12, 24) == Optimality::unknown);
  }

  TEST_CASE("enumeration guard") {
    std::mt19937_64 rng(1);
    const auto big = binary(oracle::random_binary(rng, 12, 40), 40);
    CHECK_THROWS_AS(analyze(big, big.k() - 1), qsc::Error);
    const auto rep = analyze_structure(big);
    CHECK_FALSE(rep.enumerated);
    CHECK_FALSE(rep.min_distance.has_value());
    const auto j = nlohmann::json::parse(report_to_json(rep));
    CHECK(j["min_distance"].is_null());
    CHECK(j["weight_distribution"].is_null());
  }

  TEST_CASE("json report keys and values") {
    const auto bh = qsc::design::blokhuis_haemers(4);
    const auto rep = analyze(code_from_incidence(bh, false), kDefaultMaxEnumDim, 2);
    const auto j = nlohmann::ordered_json::parse(report_to_json(rep));
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"length", "dimension", "min_distance", "weight_distribution",
                                           "self_orthogonal", "doubly_even", "singly_even", "projective",
                                           "two_weight", "weights", "optimality"});
    CHECK(j["min_distance"] == 24);
    CHECK(j["doubly_even"] == true);
    CHECK(j["weight_distribution"].front() == nlohmann::ordered_json::array({0, 1}));
  }

  TEST_CASE("BH(4) incidence and transpose codes") {
    const auto bh = qsc::design::blokhuis_haemers(4);
    const auto c = code_from_incidence(bh, false);
    const auto rep = analyze(c, kDefaultMaxEnumDim, 4);
    CHECK(rep.k == 12);
    CHECK(dist_of(rep)[24] == 496);
    CHECK(rep.doubly_even == true);
    const auto t = analyze(code_from_incidence(bh, true), kDefaultMaxEnumDim, 4);
    CHECK(t.self_orthogonal);
    CHECK(t.singly_even == true);
    CHECK(t.doubly_even == false);
  }

  TEST_CASE("gen text round trip and errors") {
    const auto c = PrimeFieldCode::span({{1, 2, 0}, {0, 1, 1}}, 3, 3);
    std::istringstream in(gen_to_string(c));
    CHECK(read_gen(in) == c);
    for (const char* bad : {"", "GEN 2\n", "GEN 1\np=4 n=2 k=1\n11\n", "GEN 1\np=2 n=3 k=1\n11\n",
                            "GEN 1\np=2 n=2 k=2\n11\n", "GEN 1\np=3 n=2 k=1\n13\n", "GEN 1\np=2 n=2 k=1\n11\n10\n"}) {
      CAPTURE(bad);
      std::istringstream s(bad);
      try {
        read_gen(s);
        FAIL("accepted malformed input");
      } catch (const qsc::Error& e) {
        CHECK(e.kind() == qsc::ErrorKind::parse);
      }
    }
  }
}
