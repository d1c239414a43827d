#include "oracles.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>

namespace oracle {

int gf_mul(int a, int b, int modulus, int m) {
  int acc = 0;
  for (int i = 0; i < m; ++i)
    if ((b >> i) & 1) acc ^= a << i;
  for (int bit = 2 * m - 2; bit >= m; --bit)
    if ((acc >> bit) & 1) acc ^= modulus << (bit - m);
  return acc;
}

std::map<std::pair<int, int>, int> pair_counts(int v, const Matrix& blocks) {
  std::map<std::pair<int, int>, int> out;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) out[{a, b}] = 0;
  for (const auto& blk : blocks)
    for (std::size_t i = 0; i < blk.size(); ++i)
      for (std::size_t j = i + 1; j < blk.size(); ++j) ++out[{std::min(blk[i], blk[j]), std::max(blk[i], blk[j])}];
  return out;
}

std::set<int> lambda_values(int v, const Matrix& blocks) {
  std::set<int> out;
  for (const auto& [pair, n] : pair_counts(v, blocks)) out.insert(n);
  return out;
}

std::set<int> intersection_numbers(const Matrix& blocks) {
  std::set<int> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<int> common;
      std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                            std::back_inserter(common));
      out.insert(static_cast<int>(common.size()));
    }
  return out;
}

std::vector<std::uint64_t> weight_distribution(const Matrix& rows, int p, int n) {
  const int k = static_cast<int>(rows.size());
  std::vector<std::uint64_t> counts(n + 1, 0);
  std::vector<int> msg(k, 0);
  while (true) {
    int w = 0;
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int i = 0; i < k; ++i) s += msg[i] * rows[i][j];
      if (s % p) ++w;
    }
    ++counts[w];
    int i = 0;
    while (i < k && ++msg[i] == p) msg[i++] = 0;
    if (i == k) break;
  }
  return counts;
}

int pairwise_min_distance(const Matrix& rows, int n) {
  const int k = static_cast<int>(rows.size());
  std::vector<std::vector<int>> words;
  for (long m = 0; m < (1L << k); ++m) {
    std::vector<int> w(n, 0);
    for (int i = 0; i < k; ++i)
      if ((m >> i) & 1)
        for (int j = 0; j < n; ++j) w[j] ^= rows[i][j] & 1;
    words.push_back(std::move(w));
  }
  int best = n + 1;
  for (std::size_t a = 0; a < words.size(); ++a)
    for (std::size_t b = a + 1; b < words.size(); ++b) {
      int d = 0;
      for (int j = 0; j < n; ++j) d += words[a][j] != words[b][j];
      if (d > 0) best = std::min(best, d);
    }
  return best;
}

bool is_maximal_arc(int q, int modulus, int m, const std::vector<int>& points, int degree) {
  std::set<int> arc(points.begin(), points.end());
  for (int a = 0; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      if (a == 0 && b == 0) continue;
      for (int c = 0; c < q; ++c) {
        int meet = 0;
        for (int x = 0; x < q; ++x)
          for (int y = 0; y < q; ++y)
            if ((gf_mul(a, x, modulus, m) ^ gf_mul(b, y, modulus, m)) == c && arc.count(x * q + y)) ++meet;
        if (meet != 0 && meet != degree) return false;
      }
    }
  return true;
}

Matrix quadric_generator() {
  Matrix rows(6);
  for (int x = 0; x < 64; ++x) {
    int bit[6];
    for (int i = 0; i < 6; ++i) bit[i] = (x >> (5 - i)) & 1;
    if (((bit[0] & bit[1]) ^ (bit[2] & bit[3]) ^ (bit[4] & bit[5])) == 0) continue;
    for (int i = 0; i < 6; ++i) rows[i].push_back(bit[i]);
  }
  return rows;
}

namespace {

// Generators of small self-orthogonal codes; every codeword weight is 0 mod 4
// in the first list.
const std::vector<Matrix>& doubly_even_blocks() {
  static const std::vector<Matrix> blocks = {
      {{1, 1, 1, 1}},
      {{1, 1, 1, 1, 1, 1, 1, 1}},
      {{1, 1, 1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 1, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 1, 1}, {0, 1, 0, 1, 0, 1, 0, 1}},
  };
  return blocks;
}

const std::vector<Matrix>& even_blocks() {
  static const std::vector<Matrix> blocks = {
      {{1, 1}},
      {{1, 1, 1, 1, 1, 1}},
      {{1, 1, 0, 0, 0, 0}, {0, 0, 1, 1, 0, 0}},
      {{1, 1, 1, 1}},
  };
  return blocks;
}

}  // namespace

Matrix random_self_orthogonal(std::mt19937_64& rng, int n, bool doubly_even) {
  const auto& pool = doubly_even ? doubly_even_blocks() : even_blocks();
  Matrix rows;
  int used = 0;
  while (true) {
    const Matrix& blk = pool[rng() % pool.size()];
    const int width = static_cast<int>(blk[0].size());
    if (used + width > n || rows.size() + blk.size() > 10) break;
    for (const auto& r : blk) {
      std::vector<int> row(n, 0);
      std::copy(r.begin(), r.end(), row.begin() + used);
      rows.push_back(std::move(row));
    }
    used += width;
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (auto& r : rows) {
    std::vector<int> out(n);
    for (int j = 0; j < n; ++j) out[perm[j]] = r[j];
    r = std::move(out);
  }
  // Random unimodular row operations keep the span.
  for (int step = 0; step < 40 && rows.size() > 1; ++step) {
    const std::size_t a = rng() % rows.size(), b = rng() % rows.size();
    if (a == b) continue;
    for (int j = 0; j < n; ++j) rows[a][j] ^= rows[b][j];
  }
  return rows;
}

Matrix random_binary(std::mt19937_64& rng, int k, int n) {
  Matrix rows(k, std::vector<int>(n));
  for (auto& r : rows)
    for (auto& x : r) x = static_cast<int>(rng() & 1);
  return rows;
}

}  // namespace oracle
