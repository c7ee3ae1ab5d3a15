#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyps/coadjoint.hpp"
#include "polyps/lie_algebra.hpp"
#include "polyps/polyform.hpp"

using namespace polyps;

namespace {

std::vector<Q> qvec(std::initializer_list<int> xs) {
  std::vector<Q> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("canonical covelocity flat values for m = 1, k = 2") {
  PolyForm<Q> pf = canonical_covelocity<Q>(1, 2);
  REQUIRE(pf.m == 3);
  CHECK(is_polysymplectic(pf, 0.0).ok);

  // flat(d/dq) = (dp^1, dp^2), flat(d/dp^1) = (-dq, 0)
  CHECK(flat_apply(pf, qvec({1, 0, 0})) == qvec({0, 1, 0, 0, 0, 1}));
  CHECK(flat_apply(pf, qvec({0, 1, 0})) == qvec({-1, 0, 0, 0, 0, 0}));
  CHECK(flat_apply(pf, qvec({0, 0, 1})) == qvec({0, 0, 0, -1, 0, 0}));
}

TEST_CASE("joint nondegeneracy with individually degenerate components") {
  // w^1 = dx ^ dy, w^2 = dx ^ dz on R^3
  PolyForm<Q> pf;
  pf.m = 3;
  pf.k = 2;
  pf.forms.assign(2, Mat<Q>(3, 3));
  pf.forms[0](0, 1) = 1;
  pf.forms[0](1, 0) = -1;
  pf.forms[1](0, 2) = 1;
  pf.forms[1](2, 0) = -1;
  CHECK(is_polysymplectic(pf, 0.0).ok);

  PolyForm<Q> single;
  single.m = 3;
  single.k = 1;
  single.forms.assign(1, pf.forms[0]);
  PolysymplecticVerdict<Q> v = is_polysymplectic(single, 0.0);
  CHECK_FALSE(v.ok);
  REQUIRE(v.witness.size() == 3);
  CHECK(v.witness == qvec({0, 0, 1}));
}

TEST_CASE("skew validation names the offending entry") {
  PolyForm<Q> pf;
  pf.m = 2;
  pf.k = 1;
  pf.forms.assign(1, Mat<Q>(2, 2));
  pf.forms[0](0, 1) = 1;
  pf.forms[0](1, 0) = 1;
  CHECK_THROWS_WITH_AS(validate_skew(pf, 0.0), doctest::Contains("not skew"),
                       std::invalid_argument);
}

TEST_CASE("product of symplectic factors") {
  Mat<Q> w(2, 2);
  w(0, 1) = 1;
  w(1, 0) = -1;
  Mat<Q> w2(2, 2);
  w2(0, 1) = 2;
  w2(1, 0) = -2;
  PolyForm<Q> pf = product_of_symplectic<Q>({w, w2}, 0.0);
  CHECK(pf.m == 4);
  CHECK(pf.k == 2);
  CHECK(is_polysymplectic(pf, 0.0).ok);
  CHECK(pf.forms[0](0, 1) == Q(1));
  CHECK(pf.forms[1](2, 3) == Q(2));
  CHECK(pf.forms[0](2, 3) == Q(0));

  Mat<Q> degenerate(2, 2);
  CHECK_THROWS_AS(product_of_symplectic<Q>({w, degenerate}, 0.0), std::invalid_argument);
}

TEST_CASE("pullback family acceptance mirrors joint nondegeneracy") {
  Mat<Q> sympl(2, 2);
  sympl(0, 1) = 1;
  sympl(1, 0) = -1;
  Mat<Q> pr_xy(2, 3);
  pr_xy(0, 0) = 1;
  pr_xy(1, 1) = 1;
  Mat<Q> pr_xz(2, 3);
  pr_xz(0, 0) = 1;
  pr_xz(1, 2) = 1;

  PullbackResult<Q> good = pullback_family<Q>({pr_xy, pr_xz}, {sympl, sympl}, 0.0);
  CHECK(good.accepted);
  CHECK(good.form.forms[0](0, 1) == Q(1));
  CHECK(good.form.forms[1](0, 2) == Q(1));

  PullbackResult<Q> bad = pullback_family<Q>({pr_xy, pr_xy}, {sympl, sympl}, 0.0);
  CHECK_FALSE(bad.accepted);
  CHECK(bad.witness == qvec({0, 0, 1}));
}

TEST_CASE("coadjoint matrix convention on so(3)") {
  LieAlgebra g = so3();
  Mat<Q> n = coadjoint_matrix(g, qvec({0, 0, 1}));
  Mat<Q> expected(3, 3);
  expected(0, 1) = -1;
  expected(1, 0) = 1;
  CHECK(n == expected);
  // ad*_{e1} eps3 = eps2 and ad*_{e2} eps3 = -eps1
  CHECK(n.apply(qvec({1, 0, 0})) == qvec({0, 1, 0}));
  CHECK(n.apply(qvec({0, 1, 0})) == qvec({-1, 0, 0}));
}

TEST_CASE("orbit form value on so(3) at eps3") {
  LieAlgebra g = so3();
  OrbitForm of = coadjoint_orbit_form(g, qvec({0, 0, 1}));
  CHECK(of.tangent.dim() == 2);
  CHECK(of.tangent.contains(qvec({1, 0, 0}), 0.0));
  CHECK(of.tangent.contains(qvec({0, 1, 0}), 0.0));
  CHECK_FALSE(of.tangent.contains(qvec({0, 0, 1}), 0.0));

  // On generators u = ad*_{e1} nu = eps2 and v = ad*_{e2} nu = -eps1 the
  // value is -nu([e1, e2]) = -1; on the canonical basis (eps1, eps2) this is
  // the matrix [[0, -1], [1, 0]].
  Mat<Q> expected(2, 2);
  expected(0, 1) = -1;
  expected(1, 0) = 1;
  CHECK(of.form == expected);
}

TEST_CASE("heisenberg orbits") {
  LieAlgebra g = heisenberg3();
  OrbitForm trivial = coadjoint_orbit_form(g, qvec({1, 0, 0}));
  CHECK(trivial.tangent.dim() == 0);
  OrbitForm center = coadjoint_orbit_form(g, qvec({0, 0, 1}));
  CHECK(center.tangent.dim() == 2);
  Mat<Q> expected(2, 2);
  expected(0, 1) = -1;
  expected(1, 0) = 1;
  CHECK(center.form == expected);
}

TEST_CASE("orbit form rejects a non-Jacobi table") {
  CHECK_THROWS_WITH_AS(coadjoint_orbit_form(broken_so3(), qvec({0, 0, 1})),
                       doctest::Contains("Jacobi"), std::invalid_argument);
}

TEST_CASE("k-coadjoint orbit dimensions on so(3)") {
  LieAlgebra g = so3();
  KCoadjointOrbit mixed = k_coadjoint_polyform(g, 2, {qvec({0, 0, 1}), qvec({1, 0, 0})});
  CHECK(mixed.tangent.dim() == 3);
  CHECK(mixed.nondegenerate.ok);
  CHECK(is_polysymplectic(mixed.form, 0.0).ok);

  KCoadjointOrbit repeated = k_coadjoint_polyform(g, 2, {qvec({0, 0, 1}), qvec({0, 0, 1})});
  CHECK(repeated.tangent.dim() == 2);
  CHECK(repeated.nondegenerate.ok);
}

TEST_CASE("sl2 jacobi and orbit sanity") {
  CHECK(jacobi_check(sl2()).ok);
  CHECK_FALSE(jacobi_check(broken_so3()).ok);
  OrbitForm of = coadjoint_orbit_form(sl2(), qvec({1, 0, 0}));
  CHECK(of.tangent.dim() == 2);
}
