#include "qsc/galois.hpp"

#include <algorithm>
#include <string>

#include "qsc/error.hpp"

namespace qsc::galois {

namespace {

int degree_for(int q) {
  switch (q) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: fail(ErrorKind::invalid_argument, "unsupported field size q=" + std::to_string(q));
  }
}

int modulus_for(int m) {
  switch (m) {
    case 1: return 0b10;     // x
    case 2: return 0b111;    // x^2 + x + 1
    default: return 0b1011;  // x^3 + x + 1
  }
}

std::uint8_t slow_mul(int a, int b, int m, int modulus) {
  int acc = 0;
  for (int i = 0; i < m; ++i)
    if ((b >> i) & 1) acc ^= a << i;
  for (int bit = 2 * m - 2; bit >= m; --bit)
    if ((acc >> bit) & 1) acc ^= modulus << (bit - m);
  return static_cast<std::uint8_t>(acc);
}

}  // namespace

Field::Field(int q) : q_(q), m_(degree_for(q)), modulus_(modulus_for(m_)) {
  for (int a = 0; a < q_; ++a)
    for (int b = 0; b < q_; ++b) mul_[a][b] = slow_mul(a, b, m_, modulus_);
  for (int a = 1; a < q_; ++a)
    for (int b = 1; b < q_; ++b)
      if (mul_[a][b] == 1) inv_[a] = static_cast<std::uint8_t>(b);
}

std::uint8_t Field::inv(std::uint8_t a) const {
  require(a != 0, ErrorKind::invalid_argument, "inversion of zero in GF(" + std::to_string(q_) + ")");
  return inv_[a];
}

const Field& field(int q) {
  static const Field f2(2), f4(4), f8(8);
  switch (q) {
    case 2: return f2;
    case 4: return f4;
    case 8: return f8;
    default: fail(ErrorKind::invalid_argument, "unsupported field size q=" + std::to_string(q));
  }
}

FieldElem field_arith(FieldElem a, FieldElem b, FieldOp op) {
  require(a.m >= 1 && a.m <= 3, ErrorKind::invalid_argument, "unsupported extension degree");
  const int q = 1 << a.m;
  require(a.value < q, ErrorKind::invalid_argument, "field element out of range");
  if (op != FieldOp::inv) {
    require(a.m == b.m, ErrorKind::invalid_argument, "mismatched extension degrees");
    require(b.value < q, ErrorKind::invalid_argument, "field element out of range");
  }
  const Field& f = field(q);
  switch (op) {
    case FieldOp::add: return {f.add(a.value, b.value), a.m};
    case FieldOp::mul: return {f.mul(a.value, b.value), a.m};
    case FieldOp::inv: return {f.inv(a.value), a.m};
  }
  return {};
}

AffineSpace::AffineSpace(int n, int q) : n_(n), size_(1), field_(&field(q)) {
  require(n == 2 || n == 3, ErrorKind::invalid_argument, "unsupported affine dimension n=" + std::to_string(n));
  for (int i = 0; i < n; ++i) size_ *= q;
}

int AffineSpace::index(const AffinePoint& p) const {
  int idx = 0;
  for (int i = 0; i < n_; ++i) idx = idx * q() + p.coords[i];
  return idx;
}

AffinePoint AffineSpace::point(int index) const {
  AffinePoint p;
  p.dim = n_;
  for (int i = n_ - 1; i >= 0; --i) {
    p.coords[i] = static_cast<std::uint8_t>(index % q());
    index /= q();
  }
  return p;
}

AffinePoint AffineSpace::add(const AffinePoint& a, const AffinePoint& b) const {
  AffinePoint r;
  r.dim = n_;
  for (int i = 0; i < n_; ++i) r.coords[i] = a.coords[i] ^ b.coords[i];
  return r;
}

AffinePoint AffineSpace::scale(std::uint8_t s, const AffinePoint& p) const {
  AffinePoint r;
  r.dim = n_;
  for (int i = 0; i < n_; ++i) r.coords[i] = field_->mul(s, p.coords[i]);
  return r;
}

std::vector<AffinePoint> ag_points(int n, int q) {
  const AffineSpace space(n, q);
  std::vector<AffinePoint> pts;
  pts.reserve(space.size());
  for (int i = 0; i < space.size(); ++i) pts.push_back(space.point(i));
  return pts;
}

std::vector<AffinePoint> normalized_directions(int n, int q) {
  const AffineSpace space(n, q);
  std::vector<AffinePoint> dirs;
  for (int i = 1; i < space.size(); ++i) {
    const AffinePoint p = space.point(i);
    const auto first = std::find_if(p.coords.begin(), p.coords.begin() + n, [](auto c) { return c != 0; });
    if (*first == 1) dirs.push_back(p);
  }
  return dirs;
}

int LineSystem::line_count() const {
  int total = 0;
  for (const auto& c : classes) total += static_cast<int>(c.lines.size());
  return total;
}

QuotientLabeling quotient_labeling(int q, const AffinePoint& direction) {
  const AffineSpace space(3, q);
  const Field& f = space.base_field();
  require(direction.dim == 3, ErrorKind::invalid_argument, "direction must lie in GF(q)^3");
  int pivot = 0;
  while (pivot < 3 && direction.coords[pivot] == 0) ++pivot;
  require(pivot < 3, ErrorKind::invalid_argument, "zero direction");
  for (auto c : direction.coords) require(c < q, ErrorKind::invalid_argument, "direction coordinate out of range");

  QuotientLabeling out;
  out.direction = space.scale(f.inv(direction.coords[pivot]), direction);
  out.label.resize(space.size());
  for (int i = 0; i < space.size(); ++i) {
    const AffinePoint p = space.point(i);
    const AffinePoint base = space.add(p, space.scale(p.coords[pivot], out.direction));
    int label = 0;
    for (int c = 0; c < 3; ++c)
      if (c != pivot) label = label * q + base.coords[c];
    out.label[i] = label;
  }
  return out;
}

LineSystem ag3_lines(int q) {
  const AffineSpace space(3, q);
  LineSystem sys;
  sys.q = q;
  for (const AffinePoint& d : normalized_directions(3, q)) {
    const QuotientLabeling lab = quotient_labeling(q, d);
    ParallelClass cls;
    cls.direction = d;
    cls.lines.assign(static_cast<std::size_t>(q) * q, {});
    for (int p = 0; p < space.size(); ++p) cls.lines[lab.label[p]].push_back(p);
    for (const auto& line : cls.lines)
      require(static_cast<int>(line.size()) == q, ErrorKind::verification, "quotient fibre is not a line");
    sys.classes.push_back(std::move(cls));
  }
  return sys;
}

std::uint8_t BinaryQuadraticForm::eval(const Field& f, std::uint8_t x, std::uint8_t y) const {
  return f.square(x) ^ f.mul(b, f.mul(x, y)) ^ f.mul(c, f.square(y));
}

BinaryQuadraticForm first_anisotropic_form(int q) {
  const Field& f = field(q);
  for (int b = 0; b < q; ++b) {
    for (int c = 0; c < q; ++c) {
      const BinaryQuadraticForm form{static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(c)};
      bool anisotropic = true;
      for (int x = 0; x < q && anisotropic; ++x)
        for (int y = 0; y < q && anisotropic; ++y)
          if ((x | y) != 0 && form.eval(f, x, y) == 0) anisotropic = false;
      if (anisotropic) return form;
    }
  }
  fail(ErrorKind::verification, "no anisotropic binary quadratic form over GF(" + std::to_string(q) + ")");
}

std::vector<std::uint8_t> index_two_subgroup(int q) {
  require(q >= 2, ErrorKind::invalid_argument, "field too small");
  std::vector<std::uint8_t> sub;
  for (int a = 0; a < q / 2; ++a) sub.push_back(static_cast<std::uint8_t>(a));
  return sub;
}

namespace {

// Lines of AG(2,q) as sorted index lists: cosets of every normalized direction.
std::vector<std::vector<int>> ag2_lines(int q) {
  const AffineSpace plane(2, q);
  std::vector<std::vector<int>> lines;
  for (const AffinePoint& d : normalized_directions(2, q)) {
    std::vector<bool> seen(plane.size(), false);
    for (int s = 0; s < plane.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> line;
      for (int t = 0; t < q; ++t) {
        const int idx = plane.index(plane.add(plane.point(s), plane.scale(static_cast<std::uint8_t>(t), d)));
        seen[idx] = true;
        line.push_back(idx);
      }
      std::sort(line.begin(), line.end());
      lines.push_back(std::move(line));
    }
  }
  return lines;
}

}  // namespace

std::vector<int> denniston_arc(int q) {
  require(q == 4 || q == 8, ErrorKind::invalid_argument, "denniston_arc requires q in {4, 8}");
  const Field& f = field(q);
  const AffineSpace plane(2, q);
  const BinaryQuadraticForm form = first_anisotropic_form(q);
  const std::vector<std::uint8_t> sub = index_two_subgroup(q);
  std::vector<bool> in_sub(q, false);
  for (auto a : sub) in_sub[a] = true;

  std::vector<int> arc;
  for (int i = 0; i < plane.size(); ++i) {
    const AffinePoint p = plane.point(i);
    if (in_sub[form.eval(f, p.coords[0], p.coords[1])]) arc.push_back(i);
  }

  require(static_cast<int>(arc.size()) == q * (q - 1) / 2, ErrorKind::verification,
          "Denniston arc has wrong size " + std::to_string(arc.size()));
  std::vector<bool> member(plane.size(), false);
  for (int i : arc) member[i] = true;
  for (const auto& line : ag2_lines(q)) {
    const auto hits = std::count_if(line.begin(), line.end(), [&](int p) { return member[p]; });
    require(hits == 0 || hits == q / 2, ErrorKind::verification,
            "maximal-arc property fails: a line meets the arc in " + std::to_string(hits) + " points");
  }
  return arc;
}

}  // namespace qsc::galois
