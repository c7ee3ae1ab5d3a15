#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "polyps/conventions.hpp"
#include "polyps/reduction.hpp"

using namespace polyps;

namespace {

std::vector<Q> qv(std::initializer_list<long> xs) {
  std::vector<Q> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

const std::vector<Q> eps1 = {Q(1), Q(0), Q(0)};
const std::vector<Q> eps3 = {Q(0), Q(0), Q(1)};

}  // namespace

TEST_CASE("reduction by the zero subspace returns the structure itself") {
  ReductionProblem<Q> rp;
  rp.omega = canonical_covelocity<Q>(2, 2);
  rp.w = Subspace<Q>(6);
  const HypothesesVerdict<Q> hv = check_hypotheses(rp, 0.0);
  CHECK(hv.ok());
  CHECK(hv.dim_at_point == 6);

  const ReducedStructure<Q> red = reduce_point(rp, 0.0);
  CHECK(red.quot.dim == 6);
  const PolyPoissonPoint<Q> direct = from_polysymplectic(rp.omega, 0.0);
  CHECK(red.pp.S == direct.S);
  CHECK(red.pp.sharp == direct.sharp);

  const LeafForm<Q> lf = leaf_form(red.pp, 0.0);
  CHECK(lf.leaf == Subspace<Q>::full(6));
  for (std::size_t a = 0; a < 2; ++a) CHECK(lf.form.forms[a] == rp.omega.forms[a]);
}

TEST_CASE("degenerate family is rejected") {
  ReductionProblem<Q> rp;
  rp.omega.m = 2;
  rp.omega.k = 1;
  rp.omega.forms = {Mat<Q>(2, 2)};
  rp.w = Subspace<Q>(2);
  CHECK_FALSE(check_hypotheses(rp, 0.0).omega_ok);
  CHECK_THROWS_WITH_AS(reduce_point(rp, 0.0), doctest::Contains("degenerate"),
                       std::invalid_argument);
}

TEST_CASE("dimension jump across samples is caught with the sample index") {
  ReductionProblem<Q> rp;
  rp.omega.m = 2;
  rp.omega.k = 1;
  Mat<Q> w(2, 2);
  w(0, 1) = Q(1);
  w(1, 0) = Q(-1);
  rp.omega.forms = {w};
  rp.w = Subspace<Q>(2);
  PolyForm<Q> flat_sample;
  flat_sample.m = 2;
  flat_sample.k = 1;
  flat_sample.forms = {Mat<Q>(2, 2)};
  rp.samples.emplace_back(rp.omega, rp.w);
  rp.samples.emplace_back(flat_sample, rp.w);

  const HypothesesVerdict<Q> hv = check_hypotheses(rp, 0.0);
  CHECK(hv.omega_ok);
  CHECK_FALSE(hv.dims_ok);
  CHECK(hv.offending_sample == 1);
  CHECK(hv.offending_dim == 0);
  CHECK(hv.dim_at_point == 2);
  CHECK_THROWS_WITH_AS(reduce_point(rp, 0.0), doctest::Contains("sample 1"),
                       std::invalid_argument);
}

TEST_CASE("inclusion hypothesis fails with a witness outside the vertical") {
  // Two forms on R^3 whose joint kernel vanishes but whose poly-orthogonal of
  // span(e2) meets its own double orthogonal outside the vertical.
  ReductionProblem<Q> rp;
  rp.omega.m = 3;
  rp.omega.k = 2;
  Mat<Q> w1(3, 3), w2(3, 3);
  w1(0, 1) = Q(1);
  w1(1, 0) = Q(-1);
  w2(0, 2) = Q(1);
  w2(2, 0) = Q(-1);
  rp.omega.forms = {w1, w2};
  Mat<Q> wb(1, 3);
  wb(0, 2) = Q(1);
  rp.w = Subspace<Q>::span(wb, 0.0);

  const HypothesesVerdict<Q> hv = check_hypotheses(rp, 0.0);
  CHECK(hv.omega_ok);
  CHECK(hv.dims_ok);
  CHECK_FALSE(hv.inclusion_ok);
  REQUIRE(hv.witness.size() == 3);
  CHECK(hv.witness == qv({0, 1, 0}));
  CHECK_FALSE(rp.w.contains(hv.witness, 0.0));
  CHECK_THROWS_WITH_AS(reduce_point(rp, 0.0), doctest::Contains("vertical"),
                       std::invalid_argument);
}

TEST_CASE("sample shape mismatch is an input error") {
  ReductionProblem<Q> rp;
  rp.omega = canonical_covelocity<Q>(1, 1);
  rp.w = Subspace<Q>(2);
  rp.samples.emplace_back(canonical_covelocity<Q>(1, 2), rp.w);
  CHECK_THROWS_WITH_AS(check_hypotheses(rp, 0.0), doctest::Contains("sample 0"),
                       std::invalid_argument);
}

TEST_CASE("group model at the rotation algebra, one copy") {
  const CotangentGroupResult r = cotangent_group(so3(), 1, {eps3}, 3, 7);
  CHECK(r.hyps.ok());
  CHECK(r.flat_formula_ok);
  CHECK(r.diag_cap_ok);
  CHECK(r.isotropy_ok);
  CHECK(r.red.quot.dim == 3);
  CHECK(r.red.pp.S.dim() == 3);
  CHECK(characteristic_distribution(r.red.pp, 0.0).dim() == 2);
  CHECK(r.red.pp.sharp.col(0) == qv({0, 1, 0}));

  const GstarComparison c = compare_with_gstar(r, so3(), 1, {eps3});
  CHECK(c.s_equal);
  CHECK(c.ratio == 1);
}

TEST_CASE("group model at the rotation algebra, two copies") {
  const std::vector<std::vector<Q>> mu = {eps3, eps1};
  const CotangentGroupResult r = cotangent_group(so3(), 2, mu, 3, 17);
  CHECK(r.hyps.ok());
  CHECK(r.flat_formula_ok);
  CHECK(r.diag_cap_ok);
  CHECK(r.isotropy_ok);
  CHECK(r.red.quot.dim == 6);
  CHECK(r.red.pp.S.dim() == 3);
  CHECK(r.red.s_triple.dim() == 0);
  CHECK(r.red.pp.sharp.col(0) == qv({0, 1, 0, 0, 0, 0}));

  const GstarComparison c = compare_with_gstar(r, so3(), 2, mu);
  CHECK(c.s_equal);
  CHECK(c.ratio == 1);
}

TEST_CASE("group model with a repeated covector keeps a joint isotropy line") {
  const std::vector<std::vector<Q>> mu = {eps3, eps3};
  const CotangentGroupResult r = cotangent_group(so3(), 2, mu, 3, 23);
  CHECK(r.hyps.ok());
  CHECK(r.diag_cap_ok);
  CHECK(r.isotropy_ok);
  CHECK(r.red.s_triple.dim() == 1);
  const GstarComparison c = compare_with_gstar(r, so3(), 2, mu);
  CHECK(c.s_equal);
  CHECK(c.ratio == 1);
}

TEST_CASE("group model over an abelian algebra reduces to the zero sharp") {
  const std::vector<std::vector<Q>> mu = {qv({3, 4}), qv({-1, 2})};
  const CotangentGroupResult r = cotangent_group(abelian(2), 2, mu, 2, 5);
  CHECK(r.hyps.ok());
  CHECK(is_zero_matrix(r.red.pp.sharp, 0.0));
  const GstarComparison c = compare_with_gstar(r, abelian(2), 2, mu);
  CHECK(c.s_equal);
  CHECK(c.zero_sharp);
}

TEST_CASE("group model reduction agrees with the fibrewise formula up to the recorded sign") {
  const CotangentGroupResult r = cotangent_group(heisenberg3(), 1, {eps3}, 2, 5);
  const Mat<Q> lp =
      linear_poisson_sharp(AlgebroidPointData::from_lie_algebra(heisenberg3()), eps3);
  CHECK(sign_ratio(r.red.pp.sharp, lp) == recorded_sigma());
}

TEST_CASE("reduced image equals the projected poly-orthogonal") {
  const std::vector<std::vector<Q>> mu = {eps3, qv({2, -1, 3})};
  const CotangentGroupResult r = cotangent_group(sl2(), 2, mu, 3, 29);
  const Subspace<Q> im = characteristic_distribution(r.red.pp, 0.0);
  const Subspace<Q> projected = image(r.red.quot.projection, r.red.w_perp, 0.0);
  CHECK(im == projected);
}

TEST_CASE("principal bundle model over a line with rotation fibre") {
  const std::vector<std::vector<Q>> mu = {eps3, eps1};
  const PrincipalLocalResult r =
      covelocity_principal_local(so3(), 1, 2, {Q(1, 2), Q(-1, 3)}, mu, 2, 11);
  CHECK(r.red.quot.dim == 9);
  CHECK(r.s_match);
  CHECK(r.measured_ratio == recorded_sigma());
  CHECK(r.matches_recorded_sigma);
  CHECK_FALSE(r.frame_point);
  CHECK(r.whitney.horizontal_pairs.ok);
  CHECK(r.whitney.mixed_pairs.ok);
  CHECK(r.whitney.vertical_pairs.ok);
}

TEST_CASE("principal bundle model over a plane with heisenberg fibre") {
  const std::vector<std::vector<Q>> mu = {eps3, qv({0, 1, 2})};
  const std::vector<Q> pvals = {Q(1), Q(2), Q(-1, 2), Q(3)};
  const PrincipalLocalResult r = covelocity_principal_local(heisenberg3(), 2, 2, pvals, mu, 2, 13);
  CHECK(r.s_match);
  CHECK(r.matches_recorded_sigma);
}

TEST_CASE("principal bundle model with a point base degenerates to the group model") {
  const std::vector<std::vector<Q>> mu = {eps3, eps1};
  const PrincipalLocalResult r = covelocity_principal_local(so3(), 0, 2, {}, mu, 2, 19);
  CHECK(r.s_match);
  CHECK(r.matches_recorded_sigma);
  const PolyPoissonPoint<Q> gs = gstar_k(so3(), 2, mu);
  CHECK(r.red.pp.S == gs.S);
}

TEST_CASE("frame point of the four-fold model over a line") {
  const std::vector<std::vector<Q>> mu = {qv({0, 0, 0}), eps1, qv({0, 1, 0}), eps3};
  const std::vector<Q> pvals = {Q(1), Q(0), Q(0), Q(0)};
  const PrincipalLocalResult r = covelocity_principal_local(so3(), 1, 4, pvals, mu, 1, 31);
  CHECK(r.s_match);
  CHECK(r.matches_recorded_sigma);
  CHECK(r.frame_point);
}

TEST_CASE("covector shape validation") {
  CHECK_THROWS_AS(cotangent_group(so3(), 2, {eps3}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(cotangent_group(broken_so3(), 1, {eps3}, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(covelocity_principal_local(so3(), 2, 1, {Q(1)}, {eps3}, 0, 1),
                  std::invalid_argument);
}
