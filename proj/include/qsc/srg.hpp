#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "qsc/bitmatrix.hpp"

namespace qsc::design {
class IncidenceStructure;
}
namespace qsc::code {
class PrimeFieldCode;
}

namespace qsc::srg {

struct SrgParams {
  long long v = 0;
  long long K = 0;
  long long lambda = 0;
  long long mu = 0;

  /// K(K - lambda - 1) == (v - K - 1) mu
  bool feasible() const { return K * (K - lambda - 1) == (v - K - 1) * mu; }

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

/// Simple undirected graph as a symmetric packed adjacency matrix.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : adj_(n, n) {}

  int n() const { return static_cast<int>(adj_.rows()); }
  bool adjacent(int i, int j) const { return adj_.get(i, j); }
  void connect(int i, int j);
  int degree(int i) const { return adj_.row_weight(i); }
  int common_neighbours(int i, int j) const { return and_popcount(adj_.row(i), adj_.row(j)); }
  const BitMatrix& adjacency() const { return adj_; }

  bool connected() const;

 private:
  BitMatrix adj_;
};

/// Exhaustive check over all vertex pairs; parameters when strongly regular.
/// Complete and empty graphs are rejected (one of lambda/mu is undefined).
std::optional<SrgParams> strongly_regular_params(const Graph& g);

/// SRG parameters of a projective two-weight [n,k]_q code with weights w1 < w2.
SrgParams tw_srg_params(long long n, long long k, long long q, long long w1, long long w2);

struct CodeGraph {
  Graph graph;
  SrgParams params;
};

inline constexpr long long kMaxCodeGraphVertices = 1LL << 20;

/// Codeword graph of a projective two-weight code: vertices are codewords in
/// lexicographic message order, adjacent at distance w1. The empirical SRG
/// parameters must match the formula.
CodeGraph srg_from_code(const code::PrimeFieldCode& c);

/// Reads the adjacency matrix of an SRG(v,K,lambda,lambda) as a block-by-point
/// incidence matrix and verifies the symmetric 2-(v,K,lambda) design.
design::IncidenceStructure graph_to_symmetric_design(const Graph& g, const SrgParams& params);

void write_graph(std::ostream& out, const Graph& g);
std::string graph_to_string(const Graph& g);

}  // namespace qsc::srg
