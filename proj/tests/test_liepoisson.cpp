#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyps/algebroid.hpp"
#include "polyps/conventions.hpp"
#include "polyps/polyform.hpp"

using namespace polyps;

namespace {

/// Jet of the affine algebroid over R: anchor (1, t) at base point t,
/// brackets [e_0, e_1] = e_0. Satisfies both structure equations at every t.
AlgebroidPointData affine_jet(const Q& t) {
  AlgebroidPointData d;
  d.m = 1;
  d.n = 2;
  d.rho = Mat<Q>(1, 2);
  d.rho(0, 0) = Q(1);
  d.rho(0, 1) = t;
  d.drho = {Mat<Q>(1, 2)};
  d.drho[0](0, 1) = Q(1);
  d.c.assign(8, Q(0));
  d.c[(0 * 2 + 0) * 2 + 1] = Q(1);
  d.c[(0 * 2 + 1) * 2 + 0] = Q(-1);
  d.dc = {std::vector<Q>(8, Q(0))};
  return d;
}

std::vector<Q> qv(std::initializer_list<long> xs) {
  std::vector<Q> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("structure equations hold on the stock jets") {
  CHECK(structure_equations_check(AlgebroidPointData::trivial_tangent(2)).ok());
  CHECK(structure_equations_check(AlgebroidPointData::from_lie_algebra(so3())).ok());
  CHECK(structure_equations_check(AlgebroidPointData::from_lie_algebra(sl2())).ok());
  CHECK(structure_equations_check(AlgebroidPointData::atiyah_trivialized(so3(), 2)).ok());
  CHECK(structure_equations_check(affine_jet(Q(1, 2))).ok());
}

TEST_CASE("structure equations fail with a witness") {
  AlgebroidPointData bad = affine_jet(Q(1, 2));
  bad.drho[0](0, 1) = Q(2);
  const StructureEquationsVerdict v = structure_equations_check(bad);
  CHECK_FALSE(v.ok());
  CHECK_FALSE(v.anchor_ok);
  CHECK(v.alpha == 0);
  CHECK(v.beta == 1);
  CHECK(v.index == 0);
  CHECK(v.lhs == Q(2));
  CHECK(v.rhs == Q(1));

  const StructureEquationsVerdict w =
      structure_equations_check(AlgebroidPointData::from_lie_algebra(broken_so3()));
  CHECK(w.anchor_ok);
  CHECK_FALSE(w.jacobi_ok);
}

TEST_CASE("malformed jet data is rejected") {
  AlgebroidPointData bad = affine_jet(Q(0));
  bad.c[(0 * 2 + 0) * 2 + 0] = Q(1);
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
  AlgebroidPointData shape = affine_jet(Q(0));
  shape.drho.clear();
  CHECK_THROWS_AS(validate(shape), std::invalid_argument);
}

TEST_CASE("structure matrix of so(3) at the third dual basis vector") {
  const Mat<Q> n = structure_matrix(AlgebroidPointData::from_lie_algebra(so3()), qv({0, 0, 1}));
  Mat<Q> expect(3, 3);
  expect(0, 1) = Q(-1);
  expect(1, 0) = Q(1);
  CHECK(n == expect);
}

TEST_CASE("fibrewise linear sharp values") {
  SUBCASE("heisenberg dual") {
    const auto d = AlgebroidPointData::from_lie_algebra(heisenberg3());
    const Mat<Q> sharp = linear_poisson_sharp(d, qv({5, 7, 11}));
    CHECK(sharp(0, 1) == Q(11));
    CHECK(sharp(1, 0) == Q(-11));
    CHECK(sharp(0, 2) == Q(0));
    CHECK(sharp(2, 2) == Q(0));
  }
  SUBCASE("tangent algebroid is the canonical pairing") {
    const Mat<Q> sharp = linear_poisson_sharp(AlgebroidPointData::trivial_tangent(2), qv({3, 4}));
    Mat<Q> expect(4, 4);
    expect(0, 2) = Q(-1);
    expect(1, 3) = Q(-1);
    expect(2, 0) = Q(1);
    expect(3, 1) = Q(1);
    CHECK(sharp == expect);
  }
  SUBCASE("affine jet mixes base and fibre") {
    const Mat<Q> sharp = linear_poisson_sharp(affine_jet(Q(1, 2)), qv({7, 11}));
    CHECK(sharp(0, 1) == Q(-1));
    CHECK(sharp(0, 2) == Q(-1, 2));
    CHECK(sharp(1, 0) == Q(1));
    CHECK(sharp(2, 0) == Q(1, 2));
    CHECK(sharp(1, 2) == Q(7));
    CHECK(sharp(2, 1) == Q(-7));
    CHECK(sharp(0, 0) == Q(0));
  }
}

TEST_CASE("projectability of covectors at different fibre points") {
  const AlgebroidPointData d = affine_jet(Q(1, 2));
  SUBCASE("equal pulled-back fibre parts project together") {
    const ProjectabilityVerdict v =
        projectability_test(d, qv({1, 2}), qv({1, 2, 2}), qv({4, 5}), qv({-7, 3, 0}));
    CHECK(v.base_parts_equal);
    CHECK(v.composites_equal);
    CHECK(v.equivalent);
  }
  SUBCASE("unequal composites detect the mismatch on both sides") {
    const ProjectabilityVerdict v =
        projectability_test(d, qv({1, 2}), qv({1, 2, 2}), qv({4, 5}), qv({0, 1, 0}));
    CHECK_FALSE(v.base_parts_equal);
    CHECK_FALSE(v.composites_equal);
    CHECK(v.equivalent);
  }
}

TEST_CASE("whitney sum over the tangent algebroid matches the covelocity model") {
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t k = 1; k <= 3; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      std::vector<Q> p(k * m);
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = Q(long(i) - 2, 3);
      const WhitneyPoint wp = whitney_point(AlgebroidPointData::trivial_tangent(m), k, p);
      CHECK(wp.pp.S.dim() == m * k + m);
      CHECK(wp.horizontal_pairs.ok);
      CHECK(wp.mixed_pairs.ok);
      CHECK(wp.vertical_pairs.ok);
      const PolyPoissonPoint<Q> cc = from_polysymplectic(canonical_covelocity<Q>(m, k), 0.0);
      CHECK(wp.pp.S == cc.S);
      CHECK(sign_ratio(wp.pp.sharp, cc.sharp) == recorded_sigma());
    }
}

TEST_CASE("whitney commutator identities on a nonconstant-anchor jet") {
  const WhitneyPoint wp = whitney_point(affine_jet(Q(1, 2)), 2, qv({1, 2, 3, 5}));
  CHECK(wp.horizontal_pairs.ok);
  CHECK(wp.mixed_pairs.ok);
  CHECK(wp.vertical_pairs.ok);
  CHECK(check_axioms(wp.pp, 0.0).ok());
}

TEST_CASE("whitney commutators detect non-algebroid jets") {
  SUBCASE("broken anchor derivative fails a mixed pair") {
    AlgebroidPointData bad = affine_jet(Q(1, 2));
    bad.drho[0](0, 1) = Q(2);
    const WhitneyPoint wp = whitney_point(bad, 1, qv({1, 2}));
    CHECK_FALSE(wp.mixed_pairs.ok);
    CHECK(wp.mixed_pairs.i == 0);
    CHECK(wp.mixed_pairs.a == 0);
    CHECK(wp.mixed_pairs.component == 2);
  }
  SUBCASE("non-Jacobi table fails a vertical pair") {
    const auto d = AlgebroidPointData::from_lie_algebra(broken_so3());
    const WhitneyPoint wp = whitney_point(d, 1, qv({1, 2, 5}));
    CHECK_FALSE(wp.vertical_pairs.ok);
  }
}

TEST_CASE("dual copies structure at a point") {
  const LieAlgebra g = so3();
  const PolyPoissonPoint<Q> pp = gstar_k(g, 2, {qv({0, 0, 1}), qv({1, 0, 0})});
  CHECK(pp.m == 6);
  CHECK(pp.S.dim() == 3);
  CHECK(check_axioms(pp, 0.0).ok());
  std::vector<Q> col0 = pp.sharp.col(0);
  CHECK(col0 == qv({0, 1, 0, 0, 0, 0}));

  const PolyPoissonPoint<Q> plus = gstar_k(g, 1, {qv({0, 0, 1})});
  const PolyPoissonPoint<Q> minus = gstar_k(g, 1, {qv({0, 0, -1})});
  CHECK(plus.S == minus.S);
  CHECK(sign_ratio(plus.sharp, minus.sharp) == -1);
}

TEST_CASE("section bracket closure on the dual copies") {
  const std::vector<LieAlgebra> fixtures = {so3(), heisenberg3(), abelian(3), sl2()};
  for (const auto& g : fixtures)
    for (std::size_t k = 1; k <= 3; ++k) {
      CAPTURE(g.dim());
      CAPTURE(k);
      CHECK(gstar_k_integrability(g, k).ok);
    }
  const IntegrabilityVerdict bad = gstar_k_integrability(broken_so3(), 1);
  CHECK_FALSE(bad.ok);
  CHECK_FALSE(bad.detail.empty());
  CHECK(bad.alpha < 3);
  CHECK(bad.beta < 3);
}

TEST_CASE("dual leaf carries the orbit data") {
  CHECK(coadjoint_leaf_match(so3(), 1, {qv({0, 0, 1})}).ok());
  CHECK(coadjoint_leaf_match(so3(), 2, {qv({0, 0, 1}), qv({1, 0, 0})}).ok());
  CHECK(coadjoint_leaf_match(so3(), 2, {qv({0, 0, 1}), qv({0, 0, 1})}).ok());
  CHECK(coadjoint_leaf_match(heisenberg3(), 2, {qv({0, 0, 1}), qv({0, 0, 1})}).ok());
  CHECK(coadjoint_leaf_match(sl2(), 1, {qv({1, 0, 0})}).ok());
  CHECK(coadjoint_leaf_match(abelian(2), 1, {qv({3, 4})}).ok());
}

TEST_CASE("whitney sum over a point reduces to the dual copies up to the recorded sign") {
  const std::vector<LieAlgebra> fixtures = {so3(), heisenberg3(), sl2()};
  for (const auto& g : fixtures)
    for (std::size_t k = 1; k <= 2; ++k) {
      CAPTURE(k);
      std::vector<std::vector<Q>> mu;
      std::vector<Q> p;
      for (std::size_t a = 0; a < k; ++a) {
        std::vector<Q> row(g.dim());
        for (std::size_t i = 0; i < g.dim(); ++i) row[i] = Q(long(2 * a + i + 1), 2);
        mu.push_back(row);
        p.insert(p.end(), row.begin(), row.end());
      }
      const WhitneyPoint wp = whitney_point(AlgebroidPointData::from_lie_algebra(g), k, p);
      const PolyPoissonPoint<Q> gs = gstar_k(g, k, mu);
      CHECK(wp.pp.S == gs.S);
      CHECK(sign_ratio(wp.pp.sharp, gs.sharp) == recorded_sigma());
    }
}

TEST_CASE("frame condition on fibre values") {
  CHECK(is_frame(2, qv({1, 0, 0, 1})));
  CHECK(is_frame(2, qv({1, 2, 3, 4})));
  CHECK_FALSE(is_frame(2, qv({1, 2, 2, 4})));
}

TEST_CASE("convention ledger") {
  CHECK(recorded_sigma() == -1);
  CHECK(conventions().sigma == -1);
  CHECK_FALSE(conventions().flat.empty());
  CHECK_FALSE(conventions().coadjoint.empty());
}
