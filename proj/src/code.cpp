#include "qsc/code.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qsc/design.hpp"
#include "qsc/error.hpp"
#include "qsc/parallel.hpp"

namespace qsc::code {

namespace {

void check_prime(int p) {
  require(p == 2 || p == 3 || p == 5 || p == 7, ErrorKind::invalid_argument,
          "unsupported characteristic p=" + std::to_string(p) + " (supported: 2, 3, 5, 7)");
}

int inverse_mod(int a, int p) {
  for (int x = 1; x < p; ++x)
    if (a * x % p == 1) return x;
  fail(ErrorKind::invalid_argument, "no inverse mod p");
}

// In-place reduced row echelon form over GF(p); drops zero rows.
std::vector<std::vector<std::uint8_t>> rref(std::vector<std::vector<std::uint8_t>> m, int p, int n) {
  std::size_t rank = 0;
  for (int col = 0; col < n && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    auto& prow = m[rank];
    const int inv = inverse_mod(prow[col], p);
    if (inv != 1)
      for (auto& e : prow) e = static_cast<std::uint8_t>(e * inv % p);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const int factor = p - m[r][col];
      for (int c = 0; c < n; ++c)
        if (prow[c]) m[r][c] = static_cast<std::uint8_t>((m[r][c] + factor * prow[c]) % p);
    }
    ++rank;
  }
  m.resize(rank);
  return m;
}

// Binary elimination on packed rows; returns reduced rows ordered by pivot.
BitMatrix rref_binary(const BitMatrix& in) {
  std::vector<std::vector<Word>> rows;
  rows.reserve(in.rows());
  for (std::size_t r = 0; r < in.rows(); ++r) rows.emplace_back(in.row(r).begin(), in.row(r).end());
  std::size_t rank = 0;
  for (std::size_t col = 0; col < in.cols() && rank < rows.size(); ++col) {
    const std::size_t w = col >> 6;
    const Word mask = Word{1} << (col & 63);
    std::size_t piv = rank;
    while (piv < rows.size() && !(rows[piv][w] & mask)) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r][w] & mask)) xor_into(rows[r], rows[rank]);
    ++rank;
  }
  BitMatrix out(0, in.cols());
  for (std::size_t r = 0; r < rank; ++r) out.append_row(rows[r]);
  return out;
}

}  // namespace

PrimeFieldCode PrimeFieldCode::from_reduced(int p, int n, std::vector<std::vector<std::uint8_t>> rows) {
  PrimeFieldCode c;
  c.p_ = p;
  c.n_ = n;
  c.rows_ = std::move(rows);
  for (const auto& r : c.rows_) {
    const auto it = std::find_if(r.begin(), r.end(), [](auto e) { return e != 0; });
    c.pivots_.push_back(static_cast<int>(it - r.begin()));
  }
  if (p == 2) {
    c.bits_ = BitMatrix(c.rows_.size(), n);
    for (std::size_t i = 0; i < c.rows_.size(); ++i)
      for (int j = 0; j < n; ++j)
        if (c.rows_[i][j]) c.bits_.set(i, j);
  }
  return c;
}

PrimeFieldCode PrimeFieldCode::span(const std::vector<std::vector<int>>& rows, int p, int n) {
  check_prime(p);
  require(n >= 0, ErrorKind::invalid_argument, "negative code length");
  if (p == 2) {
    BitMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      require(static_cast<int>(rows[i].size()) == n, ErrorKind::invalid_argument, "row length differs from n");
      for (int j = 0; j < n; ++j)
        if (((rows[i][j] % 2) + 2) % 2) m.set(i, j);
    }
    return span_binary(m);
  }
  std::vector<std::vector<std::uint8_t>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    require(static_cast<int>(row.size()) == n, ErrorKind::invalid_argument, "row length differs from n");
    std::vector<std::uint8_t> r(n);
    for (int j = 0; j < n; ++j) r[j] = static_cast<std::uint8_t>(((row[j] % p) + p) % p);
    m.push_back(std::move(r));
  }
  return from_reduced(p, n, rref(std::move(m), p, n));
}

PrimeFieldCode PrimeFieldCode::span_binary(const BitMatrix& rows) {
  const BitMatrix reduced = rref_binary(rows);
  std::vector<std::vector<std::uint8_t>> out(reduced.rows(), std::vector<std::uint8_t>(rows.cols(), 0));
  for (std::size_t i = 0; i < reduced.rows(); ++i)
    for (std::size_t j = 0; j < rows.cols(); ++j) out[i][j] = reduced.get(i, j);
  return from_reduced(2, static_cast<int>(rows.cols()), std::move(out));
}

PrimeFieldCode PrimeFieldCode::zero(int p, int n) {
  check_prime(p);
  return from_reduced(p, n, {});
}

std::vector<std::uint8_t> PrimeFieldCode::encode(const std::vector<std::uint8_t>& message) const {
  require(static_cast<int>(message.size()) == k(), ErrorKind::invalid_argument, "message length differs from k");
  std::vector<std::uint8_t> word(n_, 0);
  for (int i = 0; i < k(); ++i) {
    if (message[i] == 0) continue;
    for (int j = 0; j < n_; ++j)
      word[j] = static_cast<std::uint8_t>((word[j] + message[i] * rows_[i][j]) % p_);
  }
  return word;
}

PrimeFieldCode dual(const PrimeFieldCode& c) {
  const int n = c.n();
  const int p = c.p();
  std::vector<bool> is_pivot(n, false);
  for (int piv : c.pivots()) is_pivot[piv] = true;
  std::vector<std::vector<int>> basis;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    std::vector<int> x(n, 0);
    x[j] = 1;
    for (int i = 0; i < c.k(); ++i) x[c.pivots()[i]] = (p - c.generator()[i][j]) % p;
    basis.push_back(std::move(x));
  }
  if (basis.empty()) return PrimeFieldCode::zero(p, n);
  return PrimeFieldCode::span(basis, p, n);
}

bool is_self_orthogonal(const PrimeFieldCode& c) {
  if (c.p() == 2) {
    const BitMatrix& g = c.binary_generator();
    for (int i = 0; i < c.k(); ++i)
      for (int j = i; j < c.k(); ++j)
        if (and_popcount(g.row(i), g.row(j)) % 2) return false;
    return true;
  }
  const auto& g = c.generator();
  for (int i = 0; i < c.k(); ++i)
    for (int j = i; j < c.k(); ++j) {
      int dot = 0;
      for (int t = 0; t < c.n(); ++t) dot = (dot + g[i][t] * g[j][t]) % c.p();
      if (dot) return false;
    }
  return true;
}

std::optional<bool> doubly_even_from_basis(const PrimeFieldCode& c) {
  if (c.p() != 2) return std::nullopt;
  if (!is_self_orthogonal(c)) return false;
  for (int i = 0; i < c.k(); ++i)
    if (c.binary_generator().row_weight(i) % 4) return false;
  return true;
}

std::optional<bool> all_weights_even(const PrimeFieldCode& c) {
  if (c.p() != 2) return std::nullopt;
  for (int i = 0; i < c.k(); ++i)
    if (c.binary_generator().row_weight(i) % 2) return false;
  return true;
}

namespace {

std::vector<std::uint64_t> binary_distribution(const PrimeFieldCode& c, int threads) {
  const int k = c.k();
  const int n = c.n();
  const BitMatrix& g = c.binary_generator();
  const int split = threads > 1 ? std::min(k, static_cast<int>(std::bit_width(static_cast<unsigned>(threads))) + 2) : 0;
  const int low = k - split;
  const std::size_t chunks = std::size_t{1} << split;
  const std::size_t workers = chunk_count(chunks, threads);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));

  parallel_chunks(chunks, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    auto& counts = partial[w];
    std::vector<Word> word(g.words_per_row());
    for (std::size_t h = begin; h < end; ++h) {
      std::fill(word.begin(), word.end(), 0);
      for (int bit = 0; bit < split; ++bit)
        if ((h >> bit) & 1) xor_into(word, g.row(low + bit));
      ++counts[popcount(word)];
      const std::uint64_t steps = std::uint64_t{1} << low;
      for (std::uint64_t s = 1; s < steps; ++s) {
        xor_into(word, g.row(std::countr_zero(s)));
        ++counts[popcount(word)];
      }
    }
  });

  std::vector<std::uint64_t> total(n + 1, 0);
  for (const auto& part : partial)
    for (int w = 0; w <= n; ++w) total[w] += part[w];
  return total;
}

std::vector<std::uint64_t> prime_distribution(const PrimeFieldCode& c, int threads) {
  const int k = c.k();
  const int n = c.n();
  const int p = c.p();
  const auto& g = c.generator();
  std::vector<std::uint64_t> total(n + 1, 0);
  if (k == 0) {
    total[0] = 1;
    return total;
  }
  // One chunk per value of the last message digit; the rest is a base-p counter
  // in which each digit change adds its generator row once.
  const std::size_t chunks = p;
  const std::size_t workers = chunk_count(chunks, threads);
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(n + 1, 0));
  parallel_chunks(chunks, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    auto& counts = partial[w];
    for (std::size_t top = begin; top < end; ++top) {
      std::vector<int> word(n, 0);
      for (int j = 0; j < n; ++j) word[j] = static_cast<int>(top) * g[k - 1][j] % p;
      std::vector<int> digits(k - 1, 0);
      while (true) {
        ++counts[std::count_if(word.begin(), word.end(), [](int e) { return e != 0; })];
        int d = 0;
        while (d < k - 1) {
          for (int j = 0; j < n; ++j) word[j] = (word[j] + g[d][j]) % p;
          if (++digits[d] < p) break;
          digits[d] = 0;
          ++d;
        }
        if (d == k - 1) break;
      }
    }
  });
  for (const auto& part : partial)
    for (int w = 0; w <= n; ++w) total[w] += part[w];
  return total;
}

}  // namespace

std::vector<std::uint64_t> weight_distribution(const PrimeFieldCode& c, int threads) {
  require(c.k() < 63, ErrorKind::guard, "dimension too large to enumerate");
  if (c.p() == 2) return binary_distribution(c, threads);
  return prime_distribution(c, threads);
}

std::optional<int> small_dual_distance(const PrimeFieldCode& c, int limit) {
  const int p = c.p();
  const int n = c.n();
  std::vector<std::vector<std::uint8_t>> cols;
  for (int j = 0; j < n; ++j) {
    std::vector<std::uint8_t> col(c.k());
    for (int i = 0; i < c.k(); ++i) col[i] = c.generator()[i][j];
    cols.push_back(std::move(col));
  }
  auto normalize = [p](std::vector<std::uint8_t> v) {
    const auto it = std::find_if(v.begin(), v.end(), [](auto e) { return e != 0; });
    if (it == v.end()) return v;
    const int inv = inverse_mod(*it, p);
    for (auto& e : v) e = static_cast<std::uint8_t>(e * inv % p);
    return v;
  };
  if (limit < 1 || n == 0) return std::nullopt;
  for (const auto& col : cols)
    if (std::all_of(col.begin(), col.end(), [](auto e) { return e == 0; })) return 1;
  if (limit < 2) return std::nullopt;
  std::set<std::vector<std::uint8_t>> classes;
  std::vector<std::vector<std::uint8_t>> normalized;
  for (const auto& col : cols) {
    auto nc = normalize(col);
    if (!classes.insert(nc).second) return 2;
    normalized.push_back(std::move(nc));
  }
  if (limit < 3) return std::nullopt;
  for (std::size_t i = 0; i < normalized.size(); ++i)
    for (std::size_t j = i + 1; j < normalized.size(); ++j)
      for (int a = 1; a < p; ++a) {
        std::vector<std::uint8_t> combo(c.k());
        for (int t = 0; t < c.k(); ++t)
          combo[t] = static_cast<std::uint8_t>((a * normalized[i][t] + normalized[j][t]) % p);
        if (classes.count(normalize(combo))) return 3;
      }
  return std::nullopt;
}

Optimality optimality_check(int n, int k, int d) {
  struct Entry {
    int n, k, d;
    Optimality o;
  };
  static constexpr Entry table[] = {
      {32, 5, 16, Optimality::optimal},     {32, 4, 16, Optimality::optimal},
      {28, 6, 12, Optimality::optimal},     {28, 5, 12, Optimality::not_optimal},
      {24, 4, 12, Optimality::optimal},     {24, 3, 12, Optimality::not_optimal},
      {64, 13, 24, Optimality::optimal_equal_best_known},
  };
  for (const auto& e : table)
    if (e.n == n && e.k == k && e.d == d) return e.o;
  return Optimality::unknown;
}

const char* optimality_name(Optimality o) {
  switch (o) {
    case Optimality::optimal: return "optimal";
    case Optimality::not_optimal: return "not_optimal";
    case Optimality::optimal_equal_best_known: return "optimal-equal-best-known";
    case Optimality::unknown: return "unknown";
  }
  return "unknown";
}

int rains_bound(int n) {
  require(n >= 1, ErrorKind::invalid_argument, "length must be positive");
  return 4 * (n / 24) + (n % 24 == 22 ? 6 : 4);
}

CodeReport analyze_structure(const PrimeFieldCode& c) {
  CodeReport r;
  r.p = c.p();
  r.n = c.n();
  r.k = c.k();
  r.self_orthogonal = is_self_orthogonal(c);
  r.doubly_even = doubly_even_from_basis(c);
  if (const auto even = all_weights_even(c)) r.singly_even = *even && !*r.doubly_even;
  r.dual_distance = small_dual_distance(c, 3);
  r.projective = !r.dual_distance || *r.dual_distance >= 3;
  return r;
}

CodeReport analyze(const PrimeFieldCode& c, int max_enum_dim, int threads) {
  require(c.k() <= max_enum_dim, ErrorKind::guard,
          "code dimension " + std::to_string(c.k()) + " exceeds the enumeration guard " +
              std::to_string(max_enum_dim));
  CodeReport r = analyze_structure(c);
  r.enumerated = true;
  const auto counts = weight_distribution(c, threads);
  std::vector<int> nonzero;
  for (int w = 0; w <= c.n(); ++w)
    if (counts[w]) {
      r.weight_distribution.emplace_back(w, counts[w]);
      if (w > 0) nonzero.push_back(w);
    }
  if (!nonzero.empty()) r.min_distance = nonzero.front();
  r.two_weight = nonzero.size() == 2;
  if (*r.two_weight) r.weights = nonzero;
  if (c.p() == 2) {
    // Distribution-based flags agree with the basis route by the Huffman
    // criterion; a disagreement is an internal error.
    const bool de = std::all_of(nonzero.begin(), nonzero.end(), [](int w) { return w % 4 == 0; });
    const bool ev = std::all_of(nonzero.begin(), nonzero.end(), [](int w) { return w % 2 == 0; });
    require(de == *r.doubly_even && (ev && !de) == *r.singly_even, ErrorKind::verification,
            "parity flags from the basis disagree with the weight distribution");
  }
  if (r.min_distance) r.optimality = optimality_check(r.n, r.k, *r.min_distance);
  return r;
}

std::string report_to_json(const CodeReport& r, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["length"] = r.n;
  j["dimension"] = r.k;
  j["min_distance"] = r.min_distance ? ordered_json(*r.min_distance) : ordered_json(nullptr);
  if (r.enumerated) {
    ordered_json dist = ordered_json::array();
    for (const auto& [w, count] : r.weight_distribution) dist.push_back({w, count});
    j["weight_distribution"] = dist;
  } else {
    j["weight_distribution"] = nullptr;
  }
  j["self_orthogonal"] = r.self_orthogonal;
  j["doubly_even"] = r.doubly_even ? ordered_json(*r.doubly_even) : ordered_json(nullptr);
  j["singly_even"] = r.singly_even ? ordered_json(*r.singly_even) : ordered_json(nullptr);
  j["projective"] = r.projective;
  j["two_weight"] = r.two_weight ? ordered_json(*r.two_weight) : ordered_json(nullptr);
  j["weights"] = (r.two_weight && *r.two_weight) ? ordered_json(r.weights) : ordered_json(nullptr);
  j["optimality"] = optimality_name(r.optimality);
  return j.dump(indent);
}

PrimeFieldCode code_from_incidence(const design::IncidenceStructure& inc, bool transpose) {
  return PrimeFieldCode::span_binary(transpose ? inc.point_by_block() : inc.incidence());
}

PrimeFieldCode read_gen(std::istream& in) {
  std::string line;
  int lineno = 0;
  auto next = [&](bool allow_comment) {
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (allow_comment && !line.empty() && line[0] == '#') continue;
      return true;
    }
    return false;
  };
  auto error = [&](const std::string& what) { fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": " + what); };

  if (!next(false)) fail(ErrorKind::parse, "empty input, expected 'GEN 1' header");
  if (line != "GEN 1") error("expected 'GEN 1' header");
  if (!next(true)) error("missing 'p=<int> n=<int> k=<int>' line");
  int p = 0, n = -1, k = -1;
  char tail = 0;
  if (std::sscanf(line.c_str(), "p=%d n=%d k=%d%c", &p, &n, &k, &tail) != 3 || n < 0 || k < 0)
    error("malformed size line '" + line + "'");
  if (!(p == 2 || p == 3 || p == 5 || p == 7)) error("unsupported characteristic p=" + std::to_string(p));
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < k; ++i) {
    if (!next(true)) error("expected " + std::to_string(k) + " generator rows");
    if (static_cast<int>(line.size()) != n) error("row has " + std::to_string(line.size()) + " symbols, expected " + std::to_string(n));
    std::vector<int> row(n);
    for (int j = 0; j < n; ++j) {
      const int d = line[j] - '0';
      if (d < 0 || d >= p) error(std::string("symbol '") + line[j] + "' outside 0..p-1");
      row[j] = d;
    }
    rows.push_back(std::move(row));
  }
  while (next(true))
    if (line.find_first_not_of(" \t") != std::string::npos) error("trailing data after generator rows");
  return PrimeFieldCode::span(rows, p, n);
}

PrimeFieldCode read_gen_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open " + path);
  return read_gen(in);
}

void write_gen(std::ostream& out, const PrimeFieldCode& c) {
  out << "GEN 1\n" << "p=" << c.p() << " n=" << c.n() << " k=" << c.k() << "\n";
  for (const auto& row : c.generator()) {
    std::string s(row.size(), '0');
    for (std::size_t j = 0; j < row.size(); ++j) s[j] = static_cast<char>('0' + row[j]);
    out << s << "\n";
  }
}

std::string gen_to_string(const PrimeFieldCode& c) {
  std::ostringstream ss;
  write_gen(ss, c);
  return ss.str();
}

}  // namespace qsc::code
