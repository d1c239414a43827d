#include "qsc/orbit.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <variant>

#include "qsc/error.hpp"
#include "qsc/parallel.hpp"

namespace qsc::orbit {

bool is_permutation(const Permutation& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : p) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out(inner.size());
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
  return out;
}

bool is_identity(const Permutation& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

BlockIndex::BlockIndex(const design::IncidenceStructure& inc) {
  sorted_.reserve(inc.b());
  for (int i = 0; i < inc.b(); ++i) sorted_.emplace_back(inc.block(i), i);
  std::sort(sorted_.begin(), sorted_.end());
}

int BlockIndex::find(const std::vector<int>& pts) const {
  const auto it = std::lower_bound(sorted_.begin(), sorted_.end(), pts,
                                   [](const auto& entry, const std::vector<int>& key) { return entry.first < key; });
  if (it == sorted_.end() || it->first != pts) return -1;
  return it->second;
}

namespace {

// Block permutation, or the index of the first block whose image is not a block.
std::variant<Permutation, int> try_block_perm(const design::IncidenceStructure& inc, const BlockIndex& index,
                                               const Permutation& point_perm) {
  Permutation block_perm(inc.b());
  std::vector<int> image;
  for (int i = 0; i < inc.b(); ++i) {
    image.clear();
    for (int p : inc.block(i)) image.push_back(point_perm[p]);
    std::sort(image.begin(), image.end());
    const int j = index.find(image);
    if (j < 0) return i;
    block_perm[i] = j;
  }
  return block_perm;
}

}  // namespace

DesignAction induced_action(const design::IncidenceStructure& inc, const BlockIndex& index,
                            const Permutation& point_perm) {
  require(is_permutation(point_perm, inc.v()), ErrorKind::invalid_argument,
          "point map is not a permutation of [0," + std::to_string(inc.v()) + ")");
  auto result = try_block_perm(inc, index, point_perm);
  if (const int* bad = std::get_if<int>(&result))
    fail(ErrorKind::verification,
         "not an automorphism: the image of block " + std::to_string(*bad) + " is not a block");
  DesignAction a{point_perm, std::get<Permutation>(std::move(result))};
  require(is_permutation(a.block_perm, inc.b()), ErrorKind::verification,
          "induced block map is not a bijection (repeated blocks?)");
  return a;
}

DesignAction induced_action(const design::IncidenceStructure& inc, const Permutation& point_perm) {
  return induced_action(inc, BlockIndex(inc), point_perm);
}

FixedStructure fixed_structure(const DesignAction& a) {
  FixedStructure fs;
  for (std::size_t i = 0; i < a.point_perm.size(); ++i) fs.f += a.point_perm[i] == static_cast<int>(i);
  for (std::size_t i = 0; i < a.block_perm.size(); ++i) fs.h += a.block_perm[i] == static_cast<int>(i);
  return fs;
}

std::vector<int> OrbitMatrix::fixed_rows() const {
  std::vector<int> out;
  for (int i = 0; i < m(); ++i)
    if (omega[i] == 1) out.push_back(i);
  return out;
}

std::vector<int> OrbitMatrix::fixed_cols() const {
  std::vector<int> out;
  for (int j = 0; j < n(); ++j)
    if (Omega[j] == 1) out.push_back(j);
  return out;
}

std::vector<std::vector<int>> orbits(int n, std::span<const Permutation> generators) {
  for (const auto& g : generators)
    require(is_permutation(g, n), ErrorKind::invalid_argument, "generator is not a permutation");
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < n; ++start) {
    if (orbit_of[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<int> members{start};
    orbit_of[start] = id;
    for (std::size_t head = 0; head < members.size(); ++head)
      for (const auto& g : generators) {
        const int img = g[members[head]];
        if (orbit_of[img] < 0) {
          orbit_of[img] = id;
          members.push_back(img);
        }
      }
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const bool fa = a.size() == 1, fb = b.size() == 1;
    if (fa != fb) return fa;
    return a.front() < b.front();
  });
  return out;
}

namespace {

std::vector<int> gamma_row(const design::IncidenceStructure& inc, const std::vector<int>& block_orbit_of, int n,
                           int point) {
  std::vector<int> row(n, 0);
  for (int b = 0; b < inc.b(); ++b)
    if (inc.incidence().get(b, point)) ++row[block_orbit_of[b]];
  return row;
}

std::vector<int> orbit_index(int size, const std::vector<std::vector<int>>& orbs) {
  std::vector<int> of(size, -1);
  for (std::size_t j = 0; j < orbs.size(); ++j)
    for (int x : orbs[j]) of[x] = static_cast<int>(j);
  return of;
}

}  // namespace

OrbitMatrix orbit_matrix(const design::IncidenceStructure& inc, std::span<const DesignAction> generators) {
  std::vector<Permutation> pgens, bgens;
  for (const auto& a : generators) {
    require(is_permutation(a.point_perm, inc.v()) && is_permutation(a.block_perm, inc.b()),
            ErrorKind::invalid_argument, "action is not a pair of permutations");
    pgens.push_back(a.point_perm);
    bgens.push_back(a.block_perm);
  }
  OrbitMatrix om;
  om.point_orbits = orbits(inc.v(), pgens);
  om.block_orbits = orbits(inc.b(), bgens);
  for (const auto& o : om.point_orbits) om.omega.push_back(static_cast<int>(o.size()));
  for (const auto& o : om.block_orbits) om.Omega.push_back(static_cast<int>(o.size()));
  const std::vector<int> block_orbit_of = orbit_index(inc.b(), om.block_orbits);
  for (std::size_t i = 0; i < om.point_orbits.size(); ++i) {
    const auto& orb = om.point_orbits[i];
    auto row = gamma_row(inc, block_orbit_of, om.n(), orb.front());
    if (orb.size() > 1)
      require(gamma_row(inc, block_orbit_of, om.n(), orb[1]) == row, ErrorKind::verification,
              "orbit matrix row " + std::to_string(i) + " depends on the representative: not an automorphism group");
    om.gamma.push_back(std::move(row));
  }
  return om;
}

bool representative_independent(const design::IncidenceStructure& inc, const OrbitMatrix& om) {
  const std::vector<int> block_orbit_of = orbit_index(inc.b(), om.block_orbits);
  for (std::size_t i = 0; i < om.point_orbits.size(); ++i)
    for (int p : om.point_orbits[i])
      if (gamma_row(inc, block_orbit_of, om.n(), p) != om.gamma[i]) return false;
  return true;
}

long long VerificationReport::count(const std::string& equation) const {
  return std::count_if(violations.begin(), violations.end(), [&](const Violation& v) { return v.equation == equation; });
}

void VerificationReport::merge(const VerificationReport& other) {
  checks += other.checks;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
}

VerificationReport verify_om(const OrbitMatrix& om, const design::DesignParams& params) {
  VerificationReport rep;
  const int m = om.m(), n = om.n();
  auto check = [&](bool ok, const char* eq, int i, int j, long long lhs, long long rhs) {
    ++rep.checks;
    if (!ok) rep.violations.push_back({eq, i, j, lhs, rhs});
  };
  long long L = 1;
  for (int w : om.Omega) L = std::lcm(L, static_cast<long long>(w));

  for (int i = 0; i < m; ++i) {
    long long row_sum = 0;
    for (int j = 0; j < n; ++j) {
      const int g = om.gamma[i][j];
      check(g >= 0 && g <= om.Omega[j], "entry_bounds", i, j, g, om.Omega[j]);
      row_sum += g;
    }
    check(row_sum == params.r, "row_sums", i, -1, row_sum, params.r);
  }
  for (int j = 0; j < n; ++j) {
    long long weighted = 0;
    for (int i = 0; i < m; ++i) weighted += static_cast<long long>(om.omega[i]) * om.gamma[i][j];
    check(weighted == static_cast<long long>(params.k) * om.Omega[j], "column_sums", -1, j, weighted,
          static_cast<long long>(params.k) * om.Omega[j]);
  }
  // Pair counts scaled by L = lcm(Omega) to stay in integers.
  for (int s = 0; s < m; ++s)
    for (int t = 0; t < m; ++t) {
      long long lhs = 0;
      for (int j = 0; j < n; ++j)
        lhs += static_cast<long long>(om.omega[t]) * om.gamma[s][j] * om.gamma[t][j] * (L / om.Omega[j]);
      const long long rhs =
          L * (static_cast<long long>(params.lambda) * om.omega[t] + (s == t ? params.r - params.lambda : 0));
      check(lhs == rhs, "pair_counts", s, t, lhs, rhs);
    }
  return rep;
}

BlockGraph block_graph(const design::IncidenceStructure& inc, int y) {
  const design::IntersectionProfile prof = design::intersection_profile(inc);
  require(prof.quasi_symmetric(), ErrorKind::invalid_argument, "block graph needs a quasi-symmetric design");
  require(prof.qs_pair->second == y, ErrorKind::invalid_argument,
          "y must be the larger block intersection number (" + std::to_string(prof.qs_pair->second) + ")");
  BlockGraph out{srg::Graph(inc.b()), false, std::nullopt};
  const BitMatrix& m = inc.incidence();
  for (int i = 0; i < inc.b(); ++i)
    for (int j = i + 1; j < inc.b(); ++j)
      if (and_popcount(m.row(i), m.row(j)) == y) out.graph.connect(i, j);
  out.connected = out.graph.connected();
  out.srg = srg::strongly_regular_params(out.graph);
  return out;
}

QuotientMatrix quotient_matrix(const srg::Graph& g, const std::vector<std::vector<int>>& block_orbits,
                               const srg::SrgParams& params) {
  const int n = static_cast<int>(block_orbits.size());
  std::vector<int> orbit_of(g.n(), -1);
  for (int j = 0; j < n; ++j)
    for (int x : block_orbits[j]) orbit_of[x] = j;
  for (int x : orbit_of) require(x >= 0, ErrorKind::invalid_argument, "block orbits do not cover every vertex");

  auto row_for = [&](int vertex) {
    std::vector<int> row(n, 0);
    for (int w = 0; w < g.n(); ++w)
      if (g.adjacent(vertex, w)) ++row[orbit_of[w]];
    return row;
  };
  QuotientMatrix out;
  for (int i = 0; i < n; ++i) {
    auto row = row_for(block_orbits[i].front());
    if (block_orbits[i].size() > 1)
      require(row_for(block_orbits[i][1]) == row, ErrorKind::verification,
              "quotient row " + std::to_string(i) + " depends on the representative: partition is not equitable");
    out.R.push_back(std::move(row));
  }

  std::vector<long long> Om(n);
  for (int j = 0; j < n; ++j) Om[j] = static_cast<long long>(block_orbits[j].size());
  const long long a = params.K, c = params.lambda, d = params.mu;
  auto& rep = out.report;
  auto check = [&](bool ok, const char* eq, int i, int j, long long lhs, long long rhs) {
    ++rep.checks;
    if (!ok) rep.violations.push_back({eq, i, j, lhs, rhs});
  };
  const auto& R = out.R;
  for (int i = 0; i < n; ++i) {
    long long row_sum = 0;
    for (int j = 0; j < n; ++j) {
      const long long bound = Om[j] - (i == j ? 1 : 0);
      check(R[i][j] >= 0 && R[i][j] <= bound, "quotient_bounds", i, j, R[i][j], bound);
      row_sum += R[i][j];
    }
    check(row_sum == a, "quotient_sums", i, -1, row_sum, a);
  }
  for (int j = 0; j < n; ++j) {
    long long weighted = 0;
    for (int i = 0; i < n; ++i) weighted += Om[i] * R[i][j];
    check(weighted == a * Om[j], "quotient_sums", -1, j, weighted, a * Om[j]);
  }
  // Quotient squares multiplied through by Omega_j.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long lhs = 0;
      for (int s = 0; s < n; ++s) lhs += Om[s] * R[s][i] * R[s][j];
      const long long rhs = Om[j] * ((i == j ? a - d : 0) + d * Om[i] + (c - d) * R[j][i]);
      check(lhs == rhs, "quotient_squares", i, j, lhs, rhs);
    }
  return out;
}

VerificationReport verify_coupling(const OrbitMatrix& om, const std::vector<std::vector<int>>& R, int x, int y, int k,
                              int threads) {
  const int n = om.n(), m = om.m();
  require(static_cast<int>(R.size()) == n, ErrorKind::invalid_argument, "quotient matrix size differs from block orbit count");
  const std::size_t workers = chunk_count(n, threads);
  std::vector<VerificationReport> parts(workers);
  parallel_chunks(n, threads, [&](std::size_t w, std::size_t begin, std::size_t end) {
    auto& rep = parts[w];
    for (std::size_t j = begin; j < end; ++j)
      for (int jp = 0; jp < n; ++jp) {
        long long lhs = 0;
        for (int i = 0; i < m; ++i) lhs += static_cast<long long>(om.omega[i]) * om.gamma[i][j] * om.gamma[i][jp];
        const long long rhs = static_cast<long long>(om.Omega[j]) *
                              (static_cast<long long>(R[j][jp]) * (y - x) + static_cast<long long>(om.Omega[jp]) * x +
                               (static_cast<int>(j) == jp ? k - x : 0));
        ++rep.checks;
        if (lhs != rhs) rep.violations.push_back({"coupling", static_cast<int>(j), jp, lhs, rhs});
      }
  });
  VerificationReport out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

namespace {

// Common length of all orbits of length > 1 among `lengths`, or nullopt if mixed.
std::optional<int> nonfixed_length(const std::vector<int>& a, const std::vector<int>& b) {
  std::optional<int> w;
  for (const auto* list : {&a, &b})
    for (int len : *list) {
      if (len == 1) continue;
      if (!w) w = len;
      else if (*w != len) return std::nullopt;
    }
  return w;
}

}  // namespace

OrbitCode nonfixed_code(const OrbitMatrix& om, Axis axis, int p, bool drop_zero_coords, const TheoremContext& ctx) {
  std::vector<int> rows, cols;
  for (int i = 0; i < om.m(); ++i)
    if (om.omega[i] > 1) rows.push_back(i);
  for (int j = 0; j < om.n(); ++j)
    if (om.Omega[j] > 1) cols.push_back(j);
  require(!rows.empty() && !cols.empty(), ErrorKind::invalid_argument, "the non-fixed part of the orbit matrix is empty");

  const bool by_columns = axis == Axis::columns;
  const auto& coords = by_columns ? rows : cols;
  const auto& vecs = by_columns ? cols : rows;
  auto entry = [&](int vec, int coord) {
    const int g = by_columns ? om.gamma[coord][vec] : om.gamma[vec][coord];
    return ((g % p) + p) % p;
  };

  OrbitCode out;
  out.ambient_length = static_cast<int>(coords.size());
  for (std::size_t c = 0; c < coords.size(); ++c) {
    const bool any = std::any_of(vecs.begin(), vecs.end(), [&](int v) { return entry(v, coords[c]) != 0; });
    if (any || !drop_zero_coords) out.kept_coordinates.push_back(static_cast<int>(c));
  }
  out.effective_length = static_cast<int>(out.kept_coordinates.size());
  std::vector<std::vector<int>> span_rows;
  for (int v : vecs) {
    std::vector<int> row;
    row.reserve(out.kept_coordinates.size());
    for (int c : out.kept_coordinates) row.push_back(entry(v, coords[c]));
    span_rows.push_back(std::move(row));
  }
  out.code = code::PrimeFieldCode::span(span_rows, p, out.effective_length);

  // Theorem hypotheses; failures only withdraw the guarantee.
  bool so = true;
  auto warn = [&](const std::string& w) {
    out.warnings.push_back(w);
    so = false;
  };
  const auto w = nonfixed_length(om.omega, om.Omega);
  const auto& dp = ctx.params;
  if (!w) warn("non-fixed point and block orbits do not share one length");
  else if (*w % p) warn("p does not divide the non-fixed orbit length " + std::to_string(*w));
  if (by_columns) {
    if (!ctx.qs_pair) {
      warn("design is not quasi-symmetric");
    } else {
      const auto [x, y] = *ctx.qs_pair;
      if ((y - x) % p) warn("p does not divide y - x = " + std::to_string(y - x));
      if ((dp.k - x) % p) warn("p does not divide k - x = " + std::to_string(dp.k - x));
    }
  } else if ((dp.r - dp.lambda) % p) {
    warn("p does not divide r - lambda = " + std::to_string(dp.r - dp.lambda));
  }
  out.self_orthogonal_guaranteed = so;
  if (so && p == 2 && w == 2) {
    if (by_columns) {
      const auto [x, y] = *ctx.qs_pair;
      out.doubly_even_guaranteed = dp.k % 4 == 0 && x % 4 == 0 && y % 4 == 0;
    } else {
      out.doubly_even_guaranteed = dp.lambda % 2 == 0 && (dp.r - dp.lambda) % 4 == 0;
    }
  }
  if (drop_zero_coords && out.effective_length != out.ambient_length)
    out.warnings.push_back("deleted " + std::to_string(out.ambient_length - out.effective_length) +
                           " all-zero coordinates");
  return out;
}

code::PrimeFieldCode equal_orbit_code(const OrbitMatrix& om, int p, const TheoremContext& ctx) {
  require(om.m() > 0 && om.n() > 0, ErrorKind::invalid_argument, "empty orbit matrix");
  const int w = om.omega.front();
  for (int len : om.omega) require(len == w, ErrorKind::invalid_argument, "point orbits have unequal lengths");
  for (int len : om.Omega) require(len == w, ErrorKind::invalid_argument, "block orbits differ in length from point orbits");
  require(ctx.qs_pair.has_value(), ErrorKind::invalid_argument, "design is not quasi-symmetric");
  const auto [x, y] = *ctx.qs_pair;
  require(ctx.params.k % p == 0 && x % p == 0 && y % p == 0, ErrorKind::invalid_argument,
          "p must divide k, x and y");
  std::vector<std::vector<int>> cols;
  for (int j = 0; j < om.n(); ++j) {
    std::vector<int> col(om.m());
    for (int i = 0; i < om.m(); ++i) col[i] = om.gamma[i][j];
    cols.push_back(std::move(col));
  }
  code::PrimeFieldCode c = code::PrimeFieldCode::span(cols, p, om.m());
  require(code::is_self_orthogonal(c), ErrorKind::verification, "equal-orbit code is not self-orthogonal");
  return c;
}

galois::AffinePoint SemilinearMap::apply(const galois::AffinePoint& x) const {
  const galois::Field& f = galois::field(q);
  std::array<std::uint8_t, 3> s{};
  for (int i = 0; i < 3; ++i) s[i] = frobenius ? f.square(x.coords[i]) : x.coords[i];
  galois::AffinePoint out;
  out.dim = 3;
  for (int i = 0; i < 3; ++i) {
    std::uint8_t acc = t[i];
    for (int j = 0; j < 3; ++j) acc ^= f.mul(A[3 * i + j], s[j]);
    out.coords[i] = acc;
  }
  return out;
}

Permutation SemilinearMap::point_permutation() const {
  const galois::AffineSpace space(3, q);
  Permutation perm(space.size());
  for (int i = 0; i < space.size(); ++i) perm[i] = space.index(apply(space.point(i)));
  return perm;
}

bool SemilinearMap::is_involution() const {
  const Permutation p = point_permutation();
  return is_permutation(p, static_cast<int>(p.size())) && is_identity(compose(p, p)) && !is_identity(p);
}

namespace {

using Mat3 = std::array<std::uint8_t, 9>;

bool involutive_linear_part(const galois::Field& f, const Mat3& a, bool frob) {
  // A * A^sigma == I; A^sigma squares each entry.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      std::uint8_t acc = 0;
      for (int l = 0; l < 3; ++l) acc ^= f.mul(a[3 * i + l], frob ? f.square(a[3 * l + j]) : a[3 * l + j]);
      if (acc != (i == j ? 1 : 0)) return false;
    }
  return true;
}

}  // namespace

std::vector<Involution> find_involutions(int q, const design::IncidenceStructure& inc, int threads) {
  require(q == 4 || q == 8, ErrorKind::invalid_argument, "find_involutions requires q in {4, 8}");
  require(inc.v() == q * q * q, ErrorKind::invalid_argument, "design is not on the points of AG(3,q)");
  const galois::Field& f = galois::field(q);
  const BlockIndex index(inc);
  std::size_t matrices = 1;
  for (int i = 0; i < 9; ++i) matrices *= q;

  // Frobenius x -> x^2 has order 2 only for q = 4.
  std::vector<bool> sigmas{false};
  if (q == 4) sigmas.push_back(true);

  std::vector<Involution> out;
  for (bool frob : sigmas) {
    // Chunks over leading matrix entries; merged in chunk order.
    const std::size_t chunks = static_cast<std::size_t>(q) * q;
    const std::size_t per_chunk = matrices / chunks;
    std::vector<std::vector<Involution>> found(chunks);
    parallel_chunks(chunks, threads, [&](std::size_t, std::size_t begin, std::size_t end) {
      for (std::size_t ch = begin; ch < end; ++ch) {
        for (std::size_t code = ch * per_chunk; code < (ch + 1) * per_chunk; ++code) {
          Mat3 a{};
          std::size_t rest = code;
          for (int e = 8; e >= 0; --e) {
            a[e] = static_cast<std::uint8_t>(rest % q);
            rest /= q;
          }
          if (!involutive_linear_part(f, a, frob)) continue;
          for (int tcode = 0; tcode < q * q * q; ++tcode) {
            SemilinearMap map{q, a, frob, {static_cast<std::uint8_t>(tcode / (q * q)),
                                           static_cast<std::uint8_t>(tcode / q % q), static_cast<std::uint8_t>(tcode % q)}};
            // A t^sigma + t == 0
            bool ok = true;
            for (int i = 0; i < 3 && ok; ++i) {
              std::uint8_t acc = map.t[i];
              for (int j = 0; j < 3; ++j) acc ^= f.mul(a[3 * i + j], frob ? f.square(map.t[j]) : map.t[j]);
              ok = acc == 0;
            }
            if (!ok) continue;
            const Permutation pp = map.point_permutation();
            if (is_identity(pp)) continue;
            auto blocks = try_block_perm(inc, index, pp);
            if (!std::holds_alternative<Permutation>(blocks)) continue;
            Involution inv{map, DesignAction{pp, std::get<Permutation>(std::move(blocks))}, {}};
            inv.fixed = fixed_structure(inv.action);
            found[ch].push_back(std::move(inv));
          }
        }
      }
    });
    for (auto& part : found) std::move(part.begin(), part.end(), std::back_inserter(out));
  }
  return out;
}

std::vector<Involution> dedupe_by_signature(const std::vector<Involution>& all) {
  std::vector<Involution> out;
  for (const auto& inv : all) {
    const bool seen = std::any_of(out.begin(), out.end(), [&](const Involution& o) { return o.fixed == inv.fixed; });
    if (!seen) out.push_back(inv);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.fixed < b.fixed; });
  return out;
}

namespace {

bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line[0] == '#') continue;
    return true;
  }
  return false;
}

[[noreturn]] void parse_error(int lineno, const std::string& what) {
  fail(ErrorKind::parse, "line " + std::to_string(lineno) + ": " + what);
}

std::vector<int> parse_ints(const std::string& text, int lineno) {
  std::istringstream ss(text);
  std::vector<int> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(tok, &used);
    } catch (const std::exception&) {
      parse_error(lineno, "bad integer '" + tok + "'");
    }
    if (used != tok.size()) parse_error(lineno, "bad integer '" + tok + "'");
    out.push_back(value);
  }
  return out;
}

void expect_end(std::istream& in, std::string& line, int& lineno) {
  while (next_line(in, line, lineno))
    if (line.find_first_not_of(" \t") != std::string::npos) parse_error(lineno, "trailing data");
}

}  // namespace

Permutation read_perm(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) fail(ErrorKind::parse, "empty input, expected 'PERM 1' header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "PERM 1") parse_error(lineno, "expected 'PERM 1' header");
  if (!next_line(in, line, lineno)) parse_error(lineno, "missing 'n=<int>' line");
  int n = -1;
  char tail = 0;
  if (std::sscanf(line.c_str(), "n=%d%c", &n, &tail) != 1 || n < 0) parse_error(lineno, "malformed size line");
  Permutation p;
  if (n > 0) {
    if (!next_line(in, line, lineno)) parse_error(lineno, "missing image line");
    p = parse_ints(line, lineno);
  }
  if (!is_permutation(p, n)) parse_error(lineno, "images do not form a permutation of [0," + std::to_string(n) + ")");
  expect_end(in, line, lineno);
  return p;
}

Permutation read_perm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open " + path);
  return read_perm(in);
}

void write_perm(std::ostream& out, const Permutation& p) {
  out << "PERM 1\n" << "n=" << p.size() << "\n";
  for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << p[i];
  out << "\n";
}

std::string perm_to_string(const Permutation& p) {
  std::ostringstream ss;
  write_perm(ss, p);
  return ss.str();
}

OrbitMatrix read_om(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!std::getline(in, line)) fail(ErrorKind::parse, "empty input, expected 'OM 1' header");
  ++lineno;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "OM 1") parse_error(lineno, "expected 'OM 1' header");
  if (!next_line(in, line, lineno)) parse_error(lineno, "missing 'm=<int> n=<int>' line");
  int m = -1, n = -1;
  char tail = 0;
  if (std::sscanf(line.c_str(), "m=%d n=%d%c", &m, &n, &tail) != 2 || m < 0 || n < 0)
    parse_error(lineno, "malformed size line");
  OrbitMatrix om;
  auto labelled = [&](const std::string& label, int count) {
    if (!next_line(in, line, lineno)) parse_error(lineno, "missing '" + label + "' line");
    if (line.rfind(label, 0) != 0) parse_error(lineno, "expected '" + label + "'");
    auto vals = parse_ints(line.substr(label.size()), lineno);
    if (static_cast<int>(vals.size()) != count) parse_error(lineno, "expected " + std::to_string(count) + " values");
    for (int v : vals)
      if (v < 1) parse_error(lineno, "orbit lengths must be positive");
    return vals;
  };
  om.omega = labelled("omega:", m);
  om.Omega = labelled("Omega:", n);
  for (int i = 0; i < m; ++i) {
    if (!next_line(in, line, lineno)) parse_error(lineno, "expected " + std::to_string(m) + " matrix rows");
    auto row = parse_ints(line, lineno);
    if (static_cast<int>(row.size()) != n) parse_error(lineno, "expected " + std::to_string(n) + " entries");
    om.gamma.push_back(std::move(row));
  }
  expect_end(in, line, lineno);
  return om;
}

OrbitMatrix read_om_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::io, "cannot open " + path);
  return read_om(in);
}

void write_om(std::ostream& out, const OrbitMatrix& om) {
  out << "OM 1\n" << "m=" << om.m() << " n=" << om.n() << "\n";
  out << "omega:";
  for (int w : om.omega) out << " " << w;
  out << "\nOmega:";
  for (int w : om.Omega) out << " " << w;
  out << "\n";
  for (const auto& row : om.gamma) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? " " : "") << row[j];
    out << "\n";
  }
}

std::string om_to_string(const OrbitMatrix& om) {
  std::ostringstream ss;
  write_om(ss, om);
  return ss.str();
}

}  // namespace qsc::orbit
