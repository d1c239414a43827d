#include "qsc/srg.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <vector>

#include "qsc/code.hpp"
#include "qsc/design.hpp"
#include "qsc/error.hpp"

namespace qsc::srg {

void Graph::connect(int i, int j) {
  require(i != j, ErrorKind::invalid_argument, "loops are not allowed");
  adj_.set(i, j);
  adj_.set(j, i);
}

bool Graph::connected() const {
  if (n() == 0) return true;
  std::vector<bool> seen(n(), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < n(); ++w)
      if (!seen[w] && adjacent(u, w)) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n();
}

std::optional<SrgParams> strongly_regular_params(const Graph& g) {
  const int n = g.n();
  if (n < 2) return std::nullopt;
  const int K = g.degree(0);
  for (int i = 1; i < n; ++i)
    if (g.degree(i) != K) return std::nullopt;
  std::optional<int> lambda, mu;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int c = g.common_neighbours(i, j);
      auto& slot = g.adjacent(i, j) ? lambda : mu;
      if (!slot) slot = c;
      else if (*slot != c) return std::nullopt;
    }
  if (!lambda || !mu) return std::nullopt;
  return SrgParams{n, K, *lambda, *mu};
}

SrgParams tw_srg_params(long long n, long long k, long long q, long long w1, long long w2) {
  require(w1 < w2, ErrorKind::invalid_argument, "two-weight parameters need w1 < w2");
  require(n > 0 && k > 0 && q >= 2 && w1 > 0, ErrorKind::invalid_argument, "invalid two-weight code parameters");
  require(k < 40, ErrorKind::invalid_argument, "dimension too large for exact evaluation");
  long long qk = 1;
  for (long long i = 0; i < k; ++i) qk *= q;
  const long long K = n * (q - 1);
  const long long s = w1 + w2;
  const long long lambda = K * K + 3 * K - q * s - K * q * s + q * q * w1 * w2;
  const long long mu = K * K + K - K * q * s + q * q * w1 * w2;
  // mu = w1 w2 q^(2-k), compared without division.
  require(w1 * w2 * q * q == mu * qk, ErrorKind::verification,
          "the two expressions for mu disagree: inadmissible two-weight parameters");
  return SrgParams{qk, K, lambda, mu};
}

CodeGraph srg_from_code(const code::PrimeFieldCode& c) {
  const int p = c.p();
  long long vertices = 1;
  for (int i = 0; i < c.k(); ++i) {
    vertices *= p;
    require(vertices <= kMaxCodeGraphVertices, ErrorKind::guard, "code has too many codewords for the graph guard");
  }
  const code::CodeReport rep = code::analyze(c, c.k());
  require(rep.two_weight.value_or(false), ErrorKind::invalid_argument, "code is not a two-weight code");
  require(rep.projective, ErrorKind::invalid_argument, "code is not projective (dual distance < 3)");
  const int w1 = rep.weights[0];
  const int w2 = rep.weights[1];
  const SrgParams formula = tw_srg_params(c.n(), c.k(), p, w1, w2);

  // Message index m = sum digit_i * p^(k-1-i): row 0 is the most significant digit.
  const int k = c.k();
  std::vector<int> weight(vertices);
  std::vector<std::uint8_t> msg(k);
  for (long long m = 0; m < vertices; ++m) {
    long long rest = m;
    for (int i = k - 1; i >= 0; --i) {
      msg[i] = static_cast<std::uint8_t>(rest % p);
      rest /= p;
    }
    const auto word = c.encode(msg);
    weight[m] = static_cast<int>(std::count_if(word.begin(), word.end(), [](auto e) { return e != 0; }));
  }
  auto difference = [&](long long a, long long b) {
    long long out = 0, scale = 1;
    for (int i = 0; i < k; ++i) {
      out += ((a % p) - (b % p) + p) % p * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  };

  CodeGraph out{Graph(static_cast<int>(vertices)), formula};
  for (long long i = 0; i < vertices; ++i)
    for (long long j = i + 1; j < vertices; ++j) {
      const long long diff = p == 2 ? (i ^ j) : difference(i, j);
      if (weight[diff] == w1) out.graph.connect(static_cast<int>(i), static_cast<int>(j));
    }

  const auto empirical = strongly_regular_params(out.graph);
  require(empirical.has_value(), ErrorKind::verification, "codeword graph is not strongly regular");
  require(*empirical == formula, ErrorKind::verification,
          "empirical SRG parameters differ from the two-weight formulas");
  return out;
}

design::IncidenceStructure graph_to_symmetric_design(const Graph& g, const SrgParams& params) {
  require(params.lambda == params.mu, ErrorKind::invalid_argument,
          "adjacency matrix is an incidence matrix of a symmetric design only when lambda == mu");
  require(params.v == g.n(), ErrorKind::invalid_argument, "parameter v differs from the vertex count");
  std::vector<std::vector<int>> blocks(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = 0; j < g.n(); ++j)
      if (g.adjacent(i, j)) blocks[i].push_back(j);
  design::IncidenceStructure inc(g.n(), std::move(blocks));
  const design::DesignParams dp = design::verify_design(inc, 2);
  require(dp.b == dp.v && dp.k == params.K && dp.lambda == params.lambda, ErrorKind::verification,
          "adjacency matrix is not a symmetric 2-(v, K, lambda) design");
  return inc;
}

void write_graph(std::ostream& out, const Graph& g) {
  out << "GRAPH 1\n" << "n=" << g.n() << "\n";
  for (int i = 0; i < g.n(); ++i) {
    out << i << ":";
    for (int j = 0; j < g.n(); ++j)
      if (g.adjacent(i, j)) out << " " << j;
    out << "\n";
  }
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream ss;
  write_graph(ss, g);
  return ss.str();
}

}  // namespace qsc::srg
