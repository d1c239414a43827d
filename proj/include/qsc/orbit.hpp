#pragma once

// Automorphisms of incidence structures and their orbit matrices.
//
// Orbits are sorted with fixed orbits (length 1) first, then by ascending
// minimum element; rows of an OrbitMatrix follow the point orbits and
// columns the block orbits in that order.

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qsc/code.hpp"
#include "qsc/design.hpp"
#include "qsc/srg.hpp"

namespace qsc::orbit {

using Permutation = std::vector<int>;

bool is_permutation(const Permutation& p, int n);
Permutation compose(const Permutation& outer, const Permutation& inner);  // outer ∘ inner
bool is_identity(const Permutation& p);

struct DesignAction {
  Permutation point_perm;
  Permutation block_perm;
};

/// Lookup from sorted point set to block index.
class BlockIndex {
 public:
  explicit BlockIndex(const design::IncidenceStructure& inc);
  /// -1 when `pts` (sorted) is not a block.
  int find(const std::vector<int>& pts) const;

 private:
  std::vector<std::pair<std::vector<int>, int>> sorted_;
};

/// Block permutation induced by `point_perm`; throws ErrorKind::verification
/// naming the first block whose image is not a block.
DesignAction induced_action(const design::IncidenceStructure& inc, const Permutation& point_perm);
DesignAction induced_action(const design::IncidenceStructure& inc, const BlockIndex& index,
                            const Permutation& point_perm);

struct FixedStructure {
  int f = 0;  // fixed points
  int h = 0;  // fixed blocks

  friend auto operator<=>(const FixedStructure&, const FixedStructure&) = default;
};

FixedStructure fixed_structure(const DesignAction& a);

struct OrbitMatrix {
  std::vector<int> omega;  // point orbit lengths
  std::vector<int> Omega;  // block orbit lengths
  std::vector<std::vector<int>> gamma;  // m x n
  std::vector<std::vector<int>> point_orbits;  // empty when read from an .om file
  std::vector<std::vector<int>> block_orbits;

  int m() const { return static_cast<int>(omega.size()); }
  int n() const { return static_cast<int>(Omega.size()); }
  std::vector<int> fixed_rows() const;
  std::vector<int> fixed_cols() const;

  friend bool operator==(const OrbitMatrix& a, const OrbitMatrix& b) {
    return a.omega == b.omega && a.Omega == b.Omega && a.gamma == b.gamma;
  }
};

/// Orbits of the group generated by the given permutations of [0, n).
std::vector<std::vector<int>> orbits(int n, std::span<const Permutation> generators);

/// Orbit matrix of the group generated by `generators`. gamma is counted
/// from the least point of each orbit and recounted from a second member;
/// a mismatch throws ErrorKind::verification.
OrbitMatrix orbit_matrix(const design::IncidenceStructure& inc, std::span<const DesignAction> generators);

/// Recounts every gamma row from every member of its point orbit.
bool representative_independent(const design::IncidenceStructure& inc, const OrbitMatrix& om);

inline constexpr std::array<const char*, 4> kDesignEquations = {"entry_bounds", "row_sums", "column_sums",
                                                              "pair_counts"};
inline constexpr std::array<const char*, 4> kQuotientEquations = {"quotient_bounds", "quotient_sums",
                                                                "quotient_squares", "coupling"};
inline constexpr std::array<const char*, 8> kEquations = {"entry_bounds",    "row_sums",      "column_sums",
                                                         "pair_counts",     "quotient_bounds", "quotient_sums",
                                                         "quotient_squares", "coupling"};

struct Violation {
  std::string equation;  // one of kEquations
  int i = 0;
  int j = 0;
  long long lhs = 0;
  long long rhs = 0;
};

struct VerificationReport {
  long long checks = 0;
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  long long count(const std::string& equation) const;
  void merge(const VerificationReport& other);
};

/// Point orbit matrix of a 2-(v,k,lambda) design: 0 <= gamma_ij <= Omega_j,
/// row sums r, omega-weighted column sums k*Omega_j, and the pair counts
/// sum_j omega_t gamma_sj gamma_tj / Omega_j = lambda omega_t + delta_st (r - lambda).
VerificationReport verify_om(const OrbitMatrix& om, const design::DesignParams& params);

struct BlockGraph {
  srg::Graph graph;
  bool connected = false;
  std::optional<srg::SrgParams> srg;  // (b, a, c, d) when strongly regular
};

/// Blocks adjacent iff they meet in exactly y points. Throws if `inc` is not
/// quasi-symmetric with larger intersection number y.
BlockGraph block_graph(const design::IncidenceStructure& inc, int y);

struct QuotientMatrix {
  std::vector<std::vector<int>> R;  // R[i][j]: B_j-neighbours of a B_i representative
  VerificationReport report;        // quotient_bounds, quotient_sums, quotient_squares
};

QuotientMatrix quotient_matrix(const srg::Graph& g, const std::vector<std::vector<int>>& block_orbits,
                               const srg::SrgParams& params);

/// Coupling of gamma with the block-graph quotient, for every pair
/// of block orbits. Parallel over rows of block orbits; output is ordered.
VerificationReport verify_coupling(const OrbitMatrix& om, const std::vector<std::vector<int>>& R, int x, int y, int k,
                              int threads = 1);

enum class Axis { columns, rows };

/// Design data needed to check the hypotheses of the orbit-matrix code theorems.
struct TheoremContext {
  design::DesignParams params;
  std::optional<std::pair<int, int>> qs_pair;
};

struct OrbitCode {
  code::PrimeFieldCode code;  // on the effective coordinates
  int ambient_length = 0;
  int effective_length = 0;
  std::vector<int> kept_coordinates;  // indices into the ambient coordinates
  bool self_orthogonal_guaranteed = false;
  bool doubly_even_guaranteed = false;
  std::vector<std::string> warnings;
};

/// Code spanned by the columns (vectors indexed by non-fixed point orbits) or
/// rows (indexed by non-fixed block orbits) of the non-fixed part, mod p.
/// With `drop_zero_coords`, coordinates where every spanning vector is 0 mod p
/// are deleted. Failed theorem hypotheses become warnings.
OrbitCode nonfixed_code(const OrbitMatrix& om, Axis axis, int p, bool drop_zero_coords, const TheoremContext& ctx);

/// Column span of the whole orbit matrix mod p when every point and block
/// orbit has the same length and p divides k, x and y.
code::PrimeFieldCode equal_orbit_code(const OrbitMatrix& om, int p, const TheoremContext& ctx);

/// x -> A x^sigma + t on GF(q)^3, sigma the identity or x -> x^2.
struct SemilinearMap {
  int q = 4;
  std::array<std::uint8_t, 9> A{};  // row-major
  bool frobenius = false;
  std::array<std::uint8_t, 3> t{};

  galois::AffinePoint apply(const galois::AffinePoint& x) const;
  /// The point permutation on lexicographically indexed AG(3,q).
  Permutation point_permutation() const;
  bool is_involution() const;
};

struct Involution {
  SemilinearMap map;
  DesignAction action;
  FixedStructure fixed;
};

/// All non-identity involutions x -> A x^sigma + t of AΓL(3,q) preserving the
/// block set of `inc`, in enumeration order (sigma, A lexicographic, t).
std::vector<Involution> find_involutions(int q, const design::IncidenceStructure& inc, int threads = 1);

/// First involution of each (f, h) signature, sorted by signature.
std::vector<Involution> dedupe_by_signature(const std::vector<Involution>& all);

// .perm and .om text formats
Permutation read_perm(std::istream& in);
Permutation read_perm_file(const std::string& path);
void write_perm(std::ostream& out, const Permutation& p);
std::string perm_to_string(const Permutation& p);

OrbitMatrix read_om(std::istream& in);
OrbitMatrix read_om_file(const std::string& path);
void write_om(std::ostream& out, const OrbitMatrix& om);
std::string om_to_string(const OrbitMatrix& om);

}  // namespace qsc::orbit
