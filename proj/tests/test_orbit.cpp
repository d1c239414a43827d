#include <doctest.h>

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "qsc/design.hpp"
#include "qsc/error.hpp"
#include "qsc/galois.hpp"
#include "qsc/orbit.hpp"

using namespace qsc::orbit;
using qsc::design::IncidenceStructure;

namespace {

IncidenceStructure fano() {
  return IncidenceStructure(7, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {1, 3, 5}, {1, 4, 6}, {2, 3, 6}, {2, 4, 5}});
}

const IncidenceStructure& bh4() {
  static const IncidenceStructure d = qsc::design::blokhuis_haemers(4);
  return d;
}

const std::vector<Involution>& involutions4() {
  static const std::vector<Involution> all = find_involutions(4, bh4(), 4);
  return all;
}

Permutation identity(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

OrbitMatrix om_of(const IncidenceStructure& inc, const DesignAction& a) {
  return orbit_matrix(inc, std::span<const DesignAction>(&a, 1));
}

const Involution& translation() {
  for (const auto& inv : involutions4())
    if (!inv.map.frobenius && inv.map.A == std::array<std::uint8_t, 9>{1, 0, 0, 0, 1, 0, 0, 0, 1}) return inv;
  throw std::runtime_error("no translation found");
}

}  // namespace

TEST_SUITE("orbit") {
  TEST_CASE("orbits list fixed points first") {
    const std::vector<Permutation> gens{{1, 0, 2, 4, 3}};
    CHECK(orbits(5, gens) == std::vector<std::vector<int>>{{2}, {0, 1}, {3, 4}});
    const std::vector<Permutation> two{{1, 0, 2, 3, 4}, {0, 2, 1, 3, 4}};
    CHECK(orbits(5, two) == std::vector<std::vector<int>>{{3}, {4}, {0, 1, 2}});
  }

  TEST_CASE("permutation helpers") {
    CHECK(is_permutation({2, 0, 1}, 3));
    CHECK_FALSE(is_permutation({0, 0, 1}, 3));
    CHECK(compose({1, 2, 0}, {1, 2, 0}) == Permutation{2, 0, 1});
    CHECK(is_identity(compose({1, 2, 0}, {2, 0, 1})));
  }

  TEST_CASE("identity group gives the incidence matrix") {
    const auto f = fano();
    const auto act = induced_action(f, identity(7));
    const auto om = om_of(f, act);
    REQUIRE(om.m() == 7);
    REQUIRE(om.n() == 7);
    for (int p = 0; p < 7; ++p)
      for (int b = 0; b < 7; ++b) CHECK(om.gamma[p][b] == (f.incidence().get(b, p) ? 1 : 0));
    CHECK(verify_om(om, qsc::design::verify_design(f, 2)).ok());
  }

  TEST_CASE("perturbed orbit matrix reports row sum and pair count violations") {
    const auto& inv = translation();
    auto om = om_of(bh4(), inv.action);
    const auto params = qsc::design::verify_design(bh4(), 2);
    REQUIRE(verify_om(om, params).ok());
    om.gamma[0][0] += 1;
    const auto rep = verify_om(om, params);
    CHECK(rep.count("row_sums") > 0);
    CHECK(rep.count("pair_counts") > 0);
  }

  TEST_CASE("equation 8 under the identity reduces to block intersections") {
    const auto inc = qsc::design::read_incidence_file(QSC_FIXTURES "/design_6_3_2.inc");
    REQUIRE(qsc::design::verify_design(inc, 2) == qsc::design::DesignParams{2, 6, 3, 2, 10, 5});
    const auto numbers = oracle::intersection_numbers(inc.blocks());
    REQUIRE(numbers == std::set<int>{1, 2});
    const auto om = om_of(inc, induced_action(inc, identity(6)));
    const auto bg = block_graph(inc, 2);
    std::vector<std::vector<int>> R(10, std::vector<int>(10, 0));
    for (int i = 0; i < 10; ++i)
      for (int j = 0; j < 10; ++j) R[i][j] = bg.graph.adjacent(i, j) ? 1 : 0;
    CHECK(verify_coupling(om, R, 1, 2, 3).ok());
    // The left-hand side is |B_j ∩ B_j'|.
    for (int j = 0; j < 10; ++j)
      for (int jp = 0; jp < 10; ++jp) {
        int lhs = 0;
        for (int i = 0; i < 6; ++i) lhs += om.gamma[i][j] * om.gamma[i][jp];
        std::vector<int> common;
        std::set_intersection(inc.block(j).begin(), inc.block(j).end(), inc.block(jp).begin(), inc.block(jp).end(),
                              std::back_inserter(common));
        CHECK(lhs == static_cast<int>(common.size()));
      }
    R[0][1] ^= 1;
    R[1][0] ^= 1;
    const auto bad = verify_coupling(om, R, 1, 2, 3);
    CHECK(bad.count("coupling") == 2);
  }

  TEST_CASE("involutions are involutions with the stated fixed structure") {
    const auto& all = involutions4();
    REQUIRE_FALSE(all.empty());
    const qsc::galois::AffineSpace space(3, 4);
    for (const auto& inv : all) {
      int fixed = 0;
      for (int i = 0; i < 64; ++i) {
        const auto p = space.point(i);
        CHECK(inv.map.apply(inv.map.apply(p)) == p);
        if (inv.map.apply(p) == p) ++fixed;
      }
      CHECK(fixed == inv.fixed.f);
      CHECK((fixed == 0 || std::has_single_bit(static_cast<unsigned>(fixed))));
      CHECK(is_identity(compose(inv.action.block_perm, inv.action.block_perm)));
      CHECK(inv.map.is_involution());
    }
  }

  TEST_CASE("translations") {
    int count = 0;
    for (const auto& inv : involutions4())
      if (!inv.map.frobenius && inv.map.A == std::array<std::uint8_t, 9>{1, 0, 0, 0, 1, 0, 0, 0, 1}) {
        ++count;
        CHECK(inv.fixed == FixedStructure{0, 16});
      }
    CHECK(count == 63);
  }

  TEST_CASE("search is thread independent") {
    const auto serial = find_involutions(4, bh4(), 1);
    REQUIRE(serial.size() == involutions4().size());
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].action.point_perm == involutions4()[i].action.point_perm);
    const auto reps = dedupe_by_signature(serial);
    CHECK(std::is_sorted(reps.begin(), reps.end(), [](const auto& a, const auto& b) { return a.fixed < b.fixed; }));
  }

  TEST_CASE("a random transposition is not an automorphism") {
    auto p = identity(64);
    std::swap(p[5], p[41]);
    try {
      induced_action(bh4(), p);
      FAIL("accepted a non-automorphism");
    } catch (const qsc::Error& e) {
      CHECK(e.kind() == qsc::ErrorKind::verification);
      CHECK(std::string(e.what()).find("block") != std::string::npos);
    }
    CHECK_THROWS_AS(induced_action(bh4(), Permutation{0, 1}), qsc::Error);
  }

  TEST_CASE("translation orbit matrix") {
    const auto om = om_of(bh4(), translation().action);
    CHECK(om.m() == 32);
    CHECK(om.n() == 176);
    CHECK(om.fixed_cols().size() == 16);
    CHECK(om.fixed_rows().empty());
    CHECK(representative_independent(bh4(), om));
    const auto params = qsc::design::verify_design(bh4(), 2);
    const auto bg = block_graph(bh4(), 12);
    REQUIRE(bg.srg.has_value());
    CHECK(bg.connected);
    const auto qm = quotient_matrix(bg.graph, om.block_orbits, *bg.srg);
    CHECK(qm.report.ok());
    CHECK(verify_coupling(om, qm.R, 8, 12, 24, 3).ok());
    CHECK(verify_coupling(om, qm.R, 8, 12, 24, 1).checks == 176 * 176);
  }

  TEST_CASE("codes of the non-fixed part") {
    const auto params = qsc::design::verify_design(bh4(), 2);
    const TheoremContext ctx{params, std::pair{8, 12}};
    for (const auto& inv : involutions4()) {
      const auto om = om_of(bh4(), inv.action);
      for (Axis axis : {Axis::columns, Axis::rows}) {
        const auto oc = nonfixed_code(om, axis, 2, true, ctx);
        CHECK(oc.self_orthogonal_guaranteed);
        CHECK(oc.doubly_even_guaranteed);
        CHECK(qsc::code::is_self_orthogonal(oc.code));
        CHECK(qsc::code::doubly_even_from_basis(oc.code) == true);
      }
    }
    const auto om = om_of(bh4(), translation().action);
    const auto ternary = nonfixed_code(om, Axis::columns, 3, false, ctx);
    CHECK_FALSE(ternary.self_orthogonal_guaranteed);
    CHECK_FALSE(ternary.warnings.empty());
    const auto id = om_of(bh4(), induced_action(bh4(), identity(64)));
    CHECK_THROWS_AS(nonfixed_code(id, Axis::columns, 2, true, ctx), qsc::Error);
  }

  TEST_CASE("equal orbit code") {
    const TheoremContext ctx{qsc::design::verify_design(bh4(), 2), std::pair{8, 12}};
    const auto id = om_of(bh4(), induced_action(bh4(), identity(64)));
    const auto c = equal_orbit_code(id, 2, ctx);
    CHECK(c == qsc::code::code_from_incidence(bh4(), false));
    CHECK(qsc::code::is_self_orthogonal(c));
    const auto mixed = om_of(bh4(), translation().action);
    CHECK_THROWS_AS(equal_orbit_code(mixed, 2, ctx), qsc::Error);
  }

  TEST_CASE("block graph needs quasi-symmetry") {
    CHECK_THROWS_AS(block_graph(fano(), 1), qsc::Error);
    CHECK_THROWS_AS(block_graph(bh4(), 8), qsc::Error);
  }

  TEST_CASE("perm and om text formats") {
    const Permutation p{2, 0, 1};
    std::istringstream in(perm_to_string(p));
    CHECK(read_perm(in) == p);
    CHECK(perm_to_string(p) == "PERM 1\nn=3\n2 0 1\n");
    for (const char* bad : {"", "PERM 1\nn=3\n0 1\n", "PERM 1\nn=3\n0 0 1\n", "PERM 1\nn=2\n0 1\n0 1\n"}) {
      std::istringstream s(bad);
      CHECK_THROWS_AS(read_perm(s), qsc::Error);
    }
    const auto om = om_of(bh4(), translation().action);
    std::istringstream oin(om_to_string(om));
    const auto back = read_om(oin);
    CHECK(back == om);
    CHECK(back.point_orbits.empty());
    for (const char* bad : {"OM 1\nm=1 n=1\nomega: 1\nOmega: 1\n", "OM 1\nm=1 n=1\nomega: 1\nOmega: 1\n1 2\n",
                            "OM 1\nm=1 n=1\nomega: 1 1\nOmega: 1\n1\n"}) {
      std::istringstream s(bad);
      CHECK_THROWS_AS(read_om(s), qsc::Error);
    }
  }
}
