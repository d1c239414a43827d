#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsc/bitmatrix.hpp"

namespace qsc::design {
class IncidenceStructure;
}

namespace qsc::code {

inline constexpr int kDefaultMaxEnumDim = 28;

/// Linear code over GF(p), p in {2, 3, 5, 7}, held as its canonical reduced
/// row-echelon generator matrix (pivot columns ascending, each pivot 1 and
/// the only nonzero entry of its column). Two codes are equal iff their
/// generators are equal.
class PrimeFieldCode {
 public:
  PrimeFieldCode() = default;

  /// Row span of `rows` (entries reduced mod p). Every row must have length n.
  static PrimeFieldCode span(const std::vector<std::vector<int>>& rows, int p, int n);
  static PrimeFieldCode span_binary(const BitMatrix& rows);
  static PrimeFieldCode zero(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  int k() const { return static_cast<int>(rows_.size()); }

  const std::vector<std::vector<std::uint8_t>>& generator() const { return rows_; }
  /// Packed generator; only meaningful when p == 2.
  const BitMatrix& binary_generator() const { return bits_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// message[i] in [0, p) weights generator row i.
  std::vector<std::uint8_t> encode(const std::vector<std::uint8_t>& message) const;

  friend bool operator==(const PrimeFieldCode& a, const PrimeFieldCode& b) {
    return a.p_ == b.p_ && a.n_ == b.n_ && a.rows_ == b.rows_;
  }

 private:
  static PrimeFieldCode from_reduced(int p, int n, std::vector<std::vector<std::uint8_t>> rows);

  int p_ = 2;
  int n_ = 0;
  std::vector<std::vector<std::uint8_t>> rows_;
  std::vector<int> pivots_;
  BitMatrix bits_;
};

PrimeFieldCode dual(const PrimeFieldCode& c);

bool is_self_orthogonal(const PrimeFieldCode& c);

/// Binary only: doubly even iff self-orthogonal with every basis row of
/// weight 0 mod 4 (both directions of the Huffman criterion). nullopt for p != 2.
std::optional<bool> doubly_even_from_basis(const PrimeFieldCode& c);

/// Binary only: every codeword has even weight.
std::optional<bool> all_weights_even(const PrimeFieldCode& c);

/// counts[w] = number of codewords of weight w, w in [0, n]. Full p^k
/// enumeration (Gray-code stepping for p = 2), deterministic in `threads`.
std::vector<std::uint64_t> weight_distribution(const PrimeFieldCode& c, int threads = 1);

/// Minimum distance of the dual code if it is at most `limit` (limit <= 3),
/// found as the smallest linearly dependent set of generator columns.
std::optional<int> small_dual_distance(const PrimeFieldCode& c, int limit = 3);

enum class Optimality { optimal, not_optimal, optimal_equal_best_known, unknown };

Optimality optimality_check(int n, int k, int d);
const char* optimality_name(Optimality o);

int rains_bound(int n);

struct CodeReport {
  int p = 2;
  int n = 0;
  int k = 0;
  /// False when the dimension exceeded the enumeration guard; distribution
  /// dependent fields are then empty.
  bool enumerated = false;
  std::optional<int> min_distance;
  std::vector<std::pair<int, std::uint64_t>> weight_distribution;  // w ascending, count > 0
  bool self_orthogonal = false;
  std::optional<bool> doubly_even;
  std::optional<bool> singly_even;
  bool projective = false;
  std::optional<int> dual_distance;  // set when <= 3
  std::optional<bool> two_weight;
  std::vector<int> weights;  // nonzero weights, filled when two_weight
  Optimality optimality = Optimality::unknown;
};

/// Full report by codeword enumeration. Throws ErrorKind::guard if
/// k > max_enum_dim.
CodeReport analyze(const PrimeFieldCode& c, int max_enum_dim = kDefaultMaxEnumDim, int threads = 1);

/// Report without enumeration: parity flags via the basis, everything that
/// needs the weight distribution left empty.
CodeReport analyze_structure(const PrimeFieldCode& c);

/// JSON object with keys in fixed order: length, dimension, min_distance,
/// weight_distribution, self_orthogonal, doubly_even, singly_even,
/// projective, two_weight, weights, optimality.
std::string report_to_json(const CodeReport& r, int indent = 2);

PrimeFieldCode code_from_incidence(const design::IncidenceStructure& inc, bool transpose);

// .gen text format
PrimeFieldCode read_gen(std::istream& in);
PrimeFieldCode read_gen_file(const std::string& path);
void write_gen(std::ostream& out, const PrimeFieldCode& c);
std::string gen_to_string(const PrimeFieldCode& c);

}  // namespace qsc::code
