#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qsc/bitmatrix.hpp"
#include "qsc/galois.hpp"

namespace qsc::design {

/// Points 0..v-1 and a list of blocks. The block-by-point incidence matrix
/// (row = block) is built once at construction.
class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Each block must be sorted, duplicate-free, and inside [0, v).
  IncidenceStructure(int v, std::vector<std::vector<int>> blocks);

  int v() const { return v_; }
  int b() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_[i]; }

  /// b x v, row = block.
  const BitMatrix& incidence() const { return incidence_; }
  /// v x b, row = point.
  BitMatrix point_by_block() const { return incidence_.transposed(); }

  /// Pairs (i, j), i < j, of blocks with identical point sets.
  std::vector<std::pair<int, int>> repeated_blocks() const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.v_ == b.v_ && a.blocks_ == b.blocks_;
  }

 private:
  int v_ = 0;
  std::vector<std::vector<int>> blocks_;
  BitMatrix incidence_;
};

struct DesignParams {
  int t = 0;
  int v = 0;
  int k = 0;
  int lambda = 0;
  int b = 0;
  int r = 0;

  friend bool operator==(const DesignParams&, const DesignParams&) = default;
};

struct IntersectionProfile {
  std::vector<int> numbers;                 // ascending
  std::optional<std::pair<int, int>> qs_pair;  // (x, y), x < y

  bool quasi_symmetric() const { return qs_pair.has_value(); }
};

/// Verifies that `inc` is a t-(v,k,lambda) design, t in {1, 2}. For t = 1
/// lambda equals r.
DesignParams verify_design(const IncidenceStructure& inc, int t);

/// Sorted set of |B ∩ B'| over distinct block pairs. Computed in parallel
/// chunks; the result does not depend on `threads`.
IntersectionProfile intersection_profile(const IncidenceStructure& inc, int threads = 1);

IncidenceStructure complement(const IncidenceStructure& inc);

/// Composes a 2-design D1 with a resolvable design whose parallel classes
/// are relabelled by points of D1: every (class, D1 block) pair yields the
/// union of the lines whose labels lie in that block. The result is verified
/// as a 2-design with lambda = r1*lambda2 + lambda1*(r2 - lambda2).
IncidenceStructure sr_compose(const IncidenceStructure& d1, const DesignParams& d1_params,
                              const galois::LineSystem& lines,
                              std::span<const galois::QuotientLabeling> labelings);

/// The symmetric 2-(q^2, q(q-1)/2, q(q-2)/4) design formed by the q^2
/// translates of the Denniston arc in AG(2,q), in translate-index order.
IncidenceStructure arc_translate_design(int q);

/// Quasi-symmetric 2-(q^3, q^2(q-1)/2, q(q^3-q^2-2)/4) design on AG(3,q),
/// q in {4, 8}. Blocks are ordered class-major (direction order), then by
/// D1 block. Quasi-symmetry with x = q^2(q-2)/4, y = q^2(q-1)/4 is verified.
IncidenceStructure blokhuis_haemers(int q, int threads = 1);

/// Tonchev-type conditions on a 2-design: v = 0 mod 8, k = 0 mod 4 and all
/// block intersection numbers even.
struct SelfDualContainment {
  bool v_mod8 = false;
  bool k_mod4 = false;
  bool intersections_even = false;
  bool holds() const { return v_mod8 && k_mod4 && intersections_even; }
};
SelfDualContainment self_dual_containment_conditions(const DesignParams& p, const IntersectionProfile& prof);

// .inc text format
IncidenceStructure read_incidence(std::istream& in);
IncidenceStructure read_incidence_file(const std::string& path);
void write_incidence(std::ostream& out, const IncidenceStructure& inc);
std::string incidence_to_string(const IncidenceStructure& inc);

}  // namespace qsc::design
