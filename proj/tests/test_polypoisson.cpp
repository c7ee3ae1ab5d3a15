#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polyps/polypoisson.hpp"

using namespace polyps;

namespace {

std::vector<Q> qvec(std::initializer_list<int> xs) {
  std::vector<Q> v;
  for (int x : xs) v.emplace_back(x);
  return v;
}

Mat<Q> random_invertible(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> entry(-4, 4);
  for (;;) {
    Mat<Q> p(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = Q(entry(rng));
    if (rank(p, 0.0) == n) return p;
  }
}

/// Conjugates the canonical model by a random linear isomorphism; the result
/// stays jointly nondegenerate.
PolyForm<Q> random_polysymplectic(std::mt19937_64& rng, std::size_t m0, std::size_t k) {
  PolyForm<Q> pf = canonical_covelocity<Q>(m0, k);
  Mat<Q> p = random_invertible(rng, pf.m);
  for (Mat<Q>& w : pf.forms) w = p.transpose() * w * p;
  return pf;
}

/// k-fold product of the annihilator of d, embedded blockwise in covector
/// tuples.
Subspace<Q> annihilator_tuples(const Subspace<Q>& d, std::size_t k) {
  const Subspace<Q> d0 = annihilator(d, 0.0);
  return Subspace<Q>::span(block_diag(d0.basis(), k), 0.0);
}

}  // namespace

TEST_CASE("inverse structure of the canonical model, m = 1, k = 2") {
  PolyForm<Q> pf = canonical_covelocity<Q>(1, 2);
  PolyPoissonPoint<Q> pp = from_polysymplectic(pf, 0.0);
  CHECK(pp.S.dim() == 3);
  CHECK(pp.integrability == IntegrabilityStatus::Structural);

  // S holds exactly the pairs (a1 dq + b dp1, a2 dq + b dp2).
  CHECK(pp.S.contains(qvec({0, 1, 0, 0, 0, 1}), 0.0));
  CHECK(pp.S.contains(qvec({1, 0, 0, 0, 0, 0}), 0.0));
  CHECK(pp.S.contains(qvec({0, 0, 0, 1, 0, 0}), 0.0));
  CHECK_FALSE(pp.S.contains(qvec({0, 1, 0, 0, 0, 0}), 0.0));

  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Q> e(3, Q(0));
    e[i] = 1;
    CHECK(sharp_of(pp, flat_apply(pf, e), 0.0) == e);
  }
  CHECK(check_axioms(pp, 0.0).ok());
  CHECK(characteristic_distribution(pp, 0.0) == Subspace<Q>::full(3));
}

TEST_CASE("leaf form of an inverse structure returns the family") {
  PolyForm<Q> pf = canonical_covelocity<Q>(2, 2);
  PolyPoissonPoint<Q> pp = from_polysymplectic(pf, 0.0);
  LeafForm<Q> lf = leaf_form(pp, 0.0);
  CHECK(lf.leaf == Subspace<Q>::full(pf.m));
  for (std::size_t a = 0; a < pf.k; ++a) CHECK(lf.form.forms[a] == pf.forms[a]);
}

TEST_CASE("sign flip keeps S and negates sharp") {
  std::mt19937_64 rng(5);
  PolyForm<Q> pf = random_polysymplectic(rng, 2, 2);
  PolyForm<Q> neg = pf;
  for (Mat<Q>& w : neg.forms) w = -w;
  PolyPoissonPoint<Q> pp = from_polysymplectic(pf, 0.0);
  PolyPoissonPoint<Q> pn = from_polysymplectic(neg, 0.0);
  CHECK(pp.S == pn.S);
  CHECK(pn.sharp == -pp.sharp);
}

TEST_CASE("randomized inverse structures satisfy the axioms") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<std::size_t> mpick(1, 3), kpick(1, 3);
  for (int trial = 0; trial < 25; ++trial) {
    PolyForm<Q> pf = random_polysymplectic(rng, mpick(rng), kpick(rng));
    PolyPoissonPoint<Q> pp = from_polysymplectic(pf, 0.0);
    CHECK(pp.S.dim() == pf.m);
    CHECK(check_axioms(pp, 0.0).ok());
    const std::vector<Mat<Q>> pair = pairing_matrices(pp);
    for (const Mat<Q>& pa : pair) CHECK(is_zero_matrix(pa + pa.transpose(), 0.0));
    // A full-rank sharp has kernel zero, matching the annihilator identity.
    CHECK(sharp_kernel(pp, 0.0).dim() == 0);
  }
}

TEST_CASE("dirac-type structure on the plane pair") {
  PolyForm<Q> pf = canonical_covelocity<Q>(2, 1);
  Mat<Q> rows(2, 4);
  rows.set_row(0, qvec({1, 0, 0, 0}));
  rows.set_row(1, qvec({0, 0, 1, 0}));
  Subspace<Q> d = Subspace<Q>::span(rows, 0.0);
  DiracResult<Q> res = dirac_type(pf, d, 0.0);
  REQUIRE(res.accepted);
  CHECK(res.pp.S.dim() == 4);
  CHECK(res.pp.S == Subspace<Q>::full(4));
  CHECK(characteristic_distribution(res.pp, 0.0) == d);

  // sharp(dp1) = d/dq1 and sharp(dq2) = 0
  CHECK(sharp_of(res.pp, qvec({0, 0, 1, 0}), 0.0) == qvec({1, 0, 0, 0}));
  CHECK(sharp_of(res.pp, qvec({0, 1, 0, 0}), 0.0) == qvec({0, 0, 0, 0}));

  // kernel identity: Ker sharp = (D-ann tuples) cap S
  CHECK(sharp_kernel(res.pp, 0.0) == intersect(annihilator_tuples(d, 1), res.pp.S, 0.0));
}

TEST_CASE("dirac-type rejects a degenerate pullback with a witness") {
  PolyForm<Q> pf = canonical_covelocity<Q>(2, 1);
  Mat<Q> rows(1, 4);
  rows.set_row(0, qvec({1, 0, 0, 0}));
  DiracResult<Q> res = dirac_type(pf, Subspace<Q>::span(rows, 0.0), 0.0);
  CHECK_FALSE(res.accepted);
  REQUIRE(res.witness.size() == 4);
  CHECK(res.witness == qvec({1, 0, 0, 0}));
}

TEST_CASE("randomized dirac-type structures") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> mpick(1, 2), kpick(1, 3);
  std::uniform_int_distribution<int> entry(-3, 3);
  int accepted = 0;
  for (int trial = 0; trial < 60 && accepted < 20; ++trial) {
    PolyForm<Q> pf = random_polysymplectic(rng, mpick(rng), kpick(rng));
    std::uniform_int_distribution<std::size_t> rpick(0, pf.m);
    Mat<Q> rows(rpick(rng), pf.m);
    for (std::size_t i = 0; i < rows.rows(); ++i)
      for (std::size_t j = 0; j < rows.cols(); ++j) rows(i, j) = Q(entry(rng));
    Subspace<Q> d = Subspace<Q>::span(rows, 0.0);
    DiracResult<Q> res = dirac_type(pf, d, 0.0);
    if (!res.accepted) {
      CHECK_FALSE(res.witness.empty());
      CHECK(d.contains(res.witness, 0.0));
      CHECK(poly_orthogonal(pf, d, 0.0).contains(res.witness, 0.0));
      continue;
    }
    ++accepted;
    CHECK(res.pp.S.dim() == d.dim() + (pf.m - d.dim()) * pf.k);
    CHECK(characteristic_distribution(res.pp, 0.0) == d);
    CHECK(check_axioms(res.pp, 0.0).ok());
    CHECK(sharp_kernel(res.pp, 0.0) == intersect(annihilator_tuples(d, pf.k), res.pp.S, 0.0));
  }
  CHECK(accepted >= 10);
}

TEST_CASE("foliated construction recovers an ordinary Poisson sharp at k = 1") {
  Mat<Q> lambda(3, 3);
  lambda(0, 1) = -1;
  lambda(1, 0) = 1;
  FoliatedResult<Q> res = foliated_construction<Q>({Mat<Q>::identity(3)}, {lambda},
                                                   Subspace<Q>::span(lambda.transpose(), 0.0),
                                                   0.0);
  REQUIRE(res.accepted);
  CHECK(res.pp.S == Subspace<Q>::full(3));
  CHECK(res.pp.sharp == lambda);
}

TEST_CASE("foliated construction on a product of two factors") {
  Mat<Q> lambda(3, 3);
  lambda(0, 1) = -1;
  lambda(1, 0) = 1;
  Mat<Q> pr1(3, 6), pr2(3, 6);
  for (std::size_t i = 0; i < 3; ++i) {
    pr1(i, i) = 1;
    pr2(i, i + 3) = 1;
  }
  Subspace<Q> im = Subspace<Q>::span(lambda.transpose(), 0.0);
  Mat<Q> f_rows(4, 6);
  for (std::size_t i = 0; i < 2; ++i) {
    f_rows.set_row(i, qvec({0, 0, 0, 0, 0, 0}));
    f_rows(i, i) = 1;
    f_rows.set_row(i + 2, qvec({0, 0, 0, 0, 0, 0}));
    f_rows(i + 2, i + 3) = 1;
  }
  Subspace<Q> f = Subspace<Q>::span(f_rows, 0.0);
  FoliatedResult<Q> res = foliated_construction<Q>({pr1, pr2}, {lambda, lambda}, f, 0.0);
  REQUIRE(res.accepted);
  CHECK(res.pp.S.dim() == 6);
  CHECK(characteristic_distribution(res.pp, 0.0) == f);
  CHECK(check_axioms(res.pp, 0.0).ok());
  LeafForm<Q> lf = leaf_form(res.pp, 0.0);
  CHECK(lf.leaf == f);

  // Both compatibility failures report which condition broke and a witness.
  FoliatedResult<Q> bad1 =
      foliated_construction<Q>({pr1, pr2}, {lambda, lambda}, Subspace<Q>::full(6), 0.0);
  CHECK_FALSE(bad1.accepted);
  CHECK(bad1.failed_condition == 1);
  CHECK_FALSE(bad1.witness.empty());

  Mat<Q> f2_rows(3, 6);
  f2_rows(0, 0) = 1;
  f2_rows(1, 1) = 1;
  f2_rows(2, 3) = 1;
  FoliatedResult<Q> bad2 = foliated_construction<Q>(
      {pr1, pr1}, {lambda, lambda}, Subspace<Q>::span(f2_rows, 0.0), 0.0);
  CHECK_FALSE(bad2.accepted);
  CHECK(bad2.failed_condition == 2);
  REQUIRE(bad2.witness.size() == 6);
  CHECK(bad2.witness == qvec({0, 0, 0, 1, 0, 0}));
}

TEST_CASE("leaf form values use the first argument's preimage") {
  // Dirac-type structure with a proper leaf: the leaf form must agree with
  // the ambient family restricted to the leaf.
  PolyForm<Q> pf = canonical_covelocity<Q>(2, 1);
  Mat<Q> rows(2, 4);
  rows.set_row(0, qvec({1, 0, 0, 0}));
  rows.set_row(1, qvec({0, 0, 1, 0}));
  Subspace<Q> d = Subspace<Q>::span(rows, 0.0);
  DiracResult<Q> res = dirac_type(pf, d, 0.0);
  REQUIRE(res.accepted);
  LeafForm<Q> lf = leaf_form(res.pp, 0.0);
  CHECK(lf.leaf == d);
  REQUIRE(lf.form.m == 2);
  // On the basis (d/dq1, d/dp1) the restriction of dq1 ^ dp1 is [[0,1],[-1,0]].
  Mat<Q> expected(2, 2);
  expected(0, 1) = 1;
  expected(1, 0) = -1;
  CHECK(lf.form.forms[0] == expected);
}
