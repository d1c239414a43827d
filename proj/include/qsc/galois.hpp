#pragma once

// Arithmetic in GF(2^m), m <= 3, and the affine geometries AG(2,q) and AG(3,q).
//
// Field elements are bit patterns of polynomials over GF(2) reduced modulo
// x^2+x+1 (q = 4) or x^3+x+1 (q = 8). Points of AG(n,q) are indexed
// lexicographically on their coordinate bit patterns, first coordinate most
// significant: index(c0, c1, c2) = (c0 * q + c1) * q + c2.

#include <array>
#include <compare>
#include <cstdint>
#include <vector>

namespace qsc::galois {

/// Lookup tables for GF(q), q in {2, 4, 8}.
class Field {
 public:
  explicit Field(int q);

  int q() const { return q_; }
  int m() const { return m_; }
  int modulus() const { return modulus_; }

  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return a ^ b; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a][b]; }
  std::uint8_t inv(std::uint8_t a) const;
  std::uint8_t square(std::uint8_t a) const { return mul_[a][a]; }

 private:
  int q_;
  int m_;
  int modulus_;
  std::array<std::array<std::uint8_t, 8>, 8> mul_{};
  std::array<std::uint8_t, 8> inv_{};
};

/// Shared immutable instance for q in {2, 4, 8}.
const Field& field(int q);

struct FieldElem {
  std::uint8_t value = 0;
  std::uint8_t m = 1;

  friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

enum class FieldOp { add, mul, inv };

/// Checked arithmetic on tagged elements. `b` is ignored for `inv`.
FieldElem field_arith(FieldElem a, FieldElem b, FieldOp op);

struct AffinePoint {
  int dim = 3;
  std::array<std::uint8_t, 3> coords{};

  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

/// AG(n,q) as an indexed point set.
class AffineSpace {
 public:
  AffineSpace(int n, int q);

  int dim() const { return n_; }
  int q() const { return field_->q(); }
  const Field& base_field() const { return *field_; }
  int size() const { return size_; }

  int index(const AffinePoint& p) const;
  AffinePoint point(int index) const;

  AffinePoint add(const AffinePoint& a, const AffinePoint& b) const;
  AffinePoint scale(std::uint8_t s, const AffinePoint& p) const;

 private:
  int n_;
  int size_;
  const Field* field_;
};

std::vector<AffinePoint> ag_points(int n, int q);

/// Nonzero vectors of GF(q)^n normalized so the first nonzero coordinate is 1,
/// in lexicographic order. These are the directions of lines.
std::vector<AffinePoint> normalized_directions(int n, int q);

struct ParallelClass {
  AffinePoint direction;
  /// lines[l] holds the sorted point indices of the line labelled l by the
  /// natural quotient labelling of this direction.
  std::vector<std::vector<int>> lines;
};

struct LineSystem {
  int q = 0;
  std::vector<ParallelClass> classes;

  int line_count() const;
};

LineSystem ag3_lines(int q);

struct QuotientLabeling {
  AffinePoint direction;  // normalized
  /// label[p] is the AG(2,q) index of the line through AG(3,q) point p.
  std::vector<int> label;
};

/// Projects AG(3,q) onto AG(2,q) along `direction` by dropping the pivot
/// coordinate (first nonzero coordinate) of the normalized direction.
QuotientLabeling quotient_labeling(int q, const AffinePoint& direction);

/// Q(x, y) = x^2 + b*x*y + c*y^2.
struct BinaryQuadraticForm {
  std::uint8_t b = 0;
  std::uint8_t c = 0;

  std::uint8_t eval(const Field& f, std::uint8_t x, std::uint8_t y) const;
};

/// Lexicographically first (b, c) with Q anisotropic over GF(q).
BinaryQuadraticForm first_anisotropic_form(int q);

/// Additive subgroup of GF(q) of order q/2 spanned by the smallest elements
/// 1, 2, 4, ... (all bit patterns with the top bit clear).
std::vector<std::uint8_t> index_two_subgroup(int q);

/// Denniston maximal arc of degree q/2 in AG(2,q): sorted AG(2,q) indices of
/// {(x, y) : Q(x, y) in A}. The maximal-arc property is verified before
/// returning.
std::vector<int> denniston_arc(int q);

}  // namespace qsc::galois
