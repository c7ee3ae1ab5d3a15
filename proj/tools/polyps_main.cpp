#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "polyps/coadjoint.hpp"
#include "polyps/conventions.hpp"
#include "polyps/json_io.hpp"
#include "polyps/reduction.hpp"
#include "polyps/report.hpp"

using namespace polyps;

namespace {

const char* kSampleNote =
    "subbundle hypothesis checked as constant intersection dimension across the supplied "
    "sample points";
const char* kAtiyahNote =
    "reduction target identified with the trivialized gauge-algebroid model: anchor is the "
    "base projection, structure functions are the constants of the fibre algebra";

struct Flags {
  std::string input;
  std::string algebra;
  std::string mu;
  std::string nu;
  std::string p;
  std::string pvals;
  std::string crosscheck;
  std::string target;
  std::string scalar;
  std::string format = "text";
  std::string output;
  std::size_t k = 1;
  std::size_t m = 1;
  std::size_t m_base = 0;
  std::size_t samples = 3;
  unsigned long seed = 0;
  double epsilon = 1e-9;
  bool has_epsilon = false;
};

std::string basename_of(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  return slash == std::string::npos ? path : path.substr(slash + 1);
}

nlohmann::json parse_flag_json(const std::string& text, const std::string& flag) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error&) {
    throw SchemaError(flag, "expected a JSON value");
  }
}

/// Scalar resolution: command-line flag, then the document block, then the
/// subcommand default. Exact-only subcommands reject float mode.
struct ScalarChoice {
  bool exact = true;
  double epsilon = 1e-9;
};

ScalarChoice resolve_scalar(const Flags& f, const InputDocument* doc, bool default_exact,
                            bool exact_only) {
  ScalarChoice s;
  s.exact = default_exact;
  if (doc && doc->scalar_given) {
    s.exact = doc->scalar_mode == "exact";
    s.epsilon = doc->epsilon;
  }
  if (!f.scalar.empty()) s.exact = f.scalar == "exact";
  if (f.has_epsilon) s.epsilon = f.epsilon;
  if (exact_only && !s.exact)
    throw SchemaError("--scalar", "this subcommand computes exactly; use --scalar exact");
  return s;
}

json scalar_block(const ScalarChoice& s) {
  json j;
  j["mode"] = s.exact ? "exact" : "float";
  j["epsilon"] = s.exact ? json() : json(s.epsilon);
  return j;
}

LieAlgebra resolve_algebra(const std::string& ref) {
  if (ref.empty()) throw SchemaError("--algebra", "an algebra name or file is required");
  {
    std::ifstream probe(ref);
    if (probe.good()) {
      const InputDocument doc = load_document(ref);
      if (doc.kind != InputDocument::Kind::LieAlgebraDoc)
        throw SchemaError(ref, "expected a lie_algebra document");
      return doc.algebra;
    }
  }
  if (auto g = builtin_algebra(ref)) return *g;
  throw SchemaError("--algebra", "unknown algebra '" + ref + "'");
}

InputDocument require_document(const Flags& f, InputDocument::Kind kind, const char* what) {
  if (f.input.empty()) throw SchemaError("--input", "an input document is required");
  InputDocument doc;
  if (f.input == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    doc = parse_document(buf.str());
  } else {
    doc = load_document(f.input);
  }
  if (doc.kind != kind) throw SchemaError(f.input, std::string("expected a ") + what + " document");
  return doc;
}

bool add_jacobi(Report& r, const LieAlgebra& g) {
  const JacobiVerdict v = jacobi_check(g);
  json w;
  if (!v.ok) {
    w["triple"] = {v.a, v.b, v.c};
    w["defect"] = to_json(v.defect);
  }
  r.add("jacobi", v.ok, w);
  return v.ok;
}

template <class T>
void add_axioms(Report& r, const PolyPoissonPoint<T>& pp, double eps) {
  const AxiomVerdict<T> v = check_axioms(pp, eps);
  json w;
  if (!v.ok()) {
    w["diagonal_ok"] = v.diagonal_ok;
    w["antisymmetry_ok"] = v.antisymmetry_ok;
    w["kernel_ok"] = v.kernel_ok;
    w["component"] = v.component;
    w["i"] = v.i;
    w["j"] = v.j;
    if (!v.kernel_witness.empty()) w["kernel_witness"] = to_json(v.kernel_witness);
  }
  r.add("axioms", v.ok(), w);
}

int emit(const Report& r, const Flags& f) {
  const std::string text = f.format == "json" ? render_json(r) : render_text(r);
  if (f.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(f.output, std::ios::binary);
    if (!out) throw SchemaError(f.output, "cannot open output file");
    out << text;
  }
  return r.exit_code();
}

// ============================================================
// Subcommand bodies
// ============================================================

template <class T>
void run_check_polysymplectic(const PolyForm<T>& pf, double eps, Report& r) {
  const PolysymplecticVerdict<T> v = is_polysymplectic(pf, eps);
  r.add("joint-nondegeneracy", v.ok, v.ok ? json() : to_json(v.witness));
  r.data["m"] = pf.m;
  r.data["k"] = pf.k;
  r.data["flat_rank"] = rank(flat_matrix(pf), eps);
}

template <class T>
void run_from_polysymplectic(const PolyForm<T>& pf, double eps, Report& r) {
  const PolysymplecticVerdict<T> v = is_polysymplectic(pf, eps);
  r.add("joint-nondegeneracy", v.ok, v.ok ? json() : to_json(v.witness));
  if (!v.ok) return;
  const PolyPoissonPoint<T> pp = from_polysymplectic(pf, eps);
  add_axioms(r, pp, eps);
  r.data["S"] = to_json(pp.S);
  r.data["sharp"] = to_json(pp.sharp);
  r.data["characteristic_dim"] = characteristic_distribution(pp, eps).dim();
}

template <class T>
void run_dirac(const PolyForm<T>& pf, const Mat<T>& w_basis, double eps, Report& r) {
  const PolysymplecticVerdict<T> v = is_polysymplectic(pf, eps);
  r.add("joint-nondegeneracy", v.ok, v.ok ? json() : to_json(v.witness));
  if (!v.ok) return;
  const Subspace<T> d = Subspace<T>::span(w_basis, eps);
  const DiracResult<T> res = dirac_type(pf, d, eps);
  r.add("admissible", res.accepted, res.accepted ? json() : to_json(res.witness));
  if (!res.accepted) return;
  add_axioms(r, res.pp, eps);
  const Subspace<T> im = characteristic_distribution(res.pp, eps);
  r.add("characteristic-matches-D", im == d || im.equals(d, eps));
  const std::size_t rr = d.dim();
  r.data["S"] = to_json(res.pp.S);
  r.data["sharp"] = to_json(res.pp.sharp);
  r.data["dim_S"] = res.pp.S.dim();
  r.data["dim_formula"] = rr + (pf.m - rr) * pf.k;
}

template <class T>
void run_reduce(const ReductionProblem<T>& rp, double eps, Report& r) {
  const HypothesesVerdict<T> hv = check_hypotheses(rp, eps);
  r.add("joint-nondegeneracy", hv.omega_ok);
  json wd;
  if (!hv.dims_ok) {
    wd["sample"] = *hv.offending_sample;
    wd["dim"] = hv.offending_dim;
    wd["expected"] = hv.dim_at_point;
  }
  r.add("subbundle-dimension", hv.dims_ok, wd);
  r.add("vertical-inclusion", hv.inclusion_ok,
        hv.witness.empty() ? json() : to_json(hv.witness));
  if (!hv.ok()) return;
  const ReducedStructure<T> red = reduce_point(rp, eps);
  add_axioms(r, red.pp, eps);
  const Subspace<T> im = characteristic_distribution(red.pp, eps);
  const Subspace<T> projected = image(red.quot.projection, red.w_perp, eps);
  r.add("image-identity", im == projected || im.equals(projected, eps));
  r.data["quotient_dim"] = red.quot.dim;
  r.data["projection"] = to_json(red.quot.projection);
  r.data["S"] = to_json(red.pp.S);
  r.data["sharp"] = to_json(red.pp.sharp);
  r.data["cap_dim"] = red.s_cap.dim();
  r.data["triple_dim"] = red.s_triple.dim();
  r.data["w_perp"] = to_json(red.w_perp);
}

void add_hypotheses(Report& r, const HypothesesVerdict<Q>& hv) {
  r.add("hypothesis-nondegeneracy", hv.omega_ok);
  json wd;
  if (!hv.dims_ok) {
    wd["sample"] = *hv.offending_sample;
    wd["dim"] = hv.offending_dim;
    wd["expected"] = hv.dim_at_point;
  }
  r.add("hypothesis-dimension", hv.dims_ok, wd);
  r.add("hypothesis-inclusion", hv.inclusion_ok,
        hv.witness.empty() ? json() : to_json(hv.witness));
}

void run_cotangent_group(Report& r, const LieAlgebra& g, std::size_t k,
                         const std::vector<std::vector<Q>>& mu, std::size_t samples,
                         unsigned long seed, bool crosscheck) {
  if (!add_jacobi(r, g)) return;
  const CotangentGroupResult res = cotangent_group(g, k, mu, samples, seed);
  add_hypotheses(r, res.hyps);
  r.add("flat-formula", res.flat_formula_ok);
  r.add("diagonal-intersection", res.diag_cap_ok);
  r.add("joint-isotropy", res.isotropy_ok);
  const Subspace<Q> im = characteristic_distribution(res.red.pp, 0.0);
  r.add("image-identity", im == image(res.red.quot.projection, res.red.w_perp, 0.0));
  r.data["quotient_dim"] = res.red.quot.dim;
  r.data["S"] = to_json(res.red.pp.S);
  r.data["sharp"] = to_json(res.red.pp.sharp);
  r.data["cap_dim"] = res.red.s_cap.dim();
  r.data["triple_dim"] = res.red.s_triple.dim();
  if (crosscheck) {
    const GstarComparison cmp = compare_with_gstar(res, g, k, mu);
    r.add("oracle-subspace", cmp.s_equal);
    json w;
    w["ratio"] = cmp.zero_sharp ? json("any") : json(cmp.ratio);
    r.add("oracle-sign", cmp.zero_sharp || cmp.ratio != 0, w);
    r.data["sigma_constant"] = cmp.zero_sharp ? json("any") : json(cmp.ratio);
  }
}

void run_principal_local(Report& r, const LieAlgebra& g, std::size_t m_base, std::size_t k,
                         const std::vector<Q>& pvals, const std::vector<std::vector<Q>>& mu,
                         std::size_t samples, unsigned long seed, bool crosscheck) {
  if (!add_jacobi(r, g)) return;
  const PrincipalLocalResult res =
      covelocity_principal_local(g, m_base, k, pvals, mu, samples, seed);
  r.data["quotient_dim"] = res.red.quot.dim;
  r.data["S"] = to_json(res.red.pp.S);
  r.data["sharp"] = to_json(res.red.pp.sharp);
  r.data["frame_point"] = res.frame_point;
  r.add("whitney-horizontal", res.whitney.horizontal_pairs.ok);
  r.add("whitney-mixed", res.whitney.mixed_pairs.ok);
  r.add("whitney-vertical", res.whitney.vertical_pairs.ok);
  if (crosscheck) {
    r.add("oracle-subspace", res.s_match);
    json w;
    w["ratio"] = res.zero_sharp ? json("any") : json(res.measured_ratio);
    r.add("oracle-sign", res.matches_recorded_sigma, w);
    r.data["sigma_constant"] = res.zero_sharp ? json("any") : json(res.measured_ratio);
  }
}

void run_canonical_crosscheck(Report& r, std::size_t m, std::size_t k) {
  const WhitneyPoint wp =
      whitney_point(AlgebroidPointData::trivial_tangent(m), k, std::vector<Q>(k * m, Q(0)));
  const PolyPoissonPoint<Q> cc = from_polysymplectic(canonical_covelocity<Q>(m, k), 0.0);
  const bool s_eq = wp.pp.S == cc.S;
  r.add("oracle-subspace", s_eq);
  int ratio = 0;
  if (s_eq) {
    try {
      ratio = sign_ratio(wp.pp.sharp, cc.sharp);
    } catch (const std::runtime_error&) {
      ratio = 0;
    }
  }
  json w;
  w["ratio"] = ratio;
  r.add("oracle-sign", ratio == recorded_sigma(), w);
  r.add("dimension", wp.pp.S.dim() == m * k + m);
  r.data["dim_S"] = wp.pp.S.dim();
  r.data["sigma_constant"] = ratio;
}

// ============================================================
// Dispatch
// ============================================================

int dispatch(const std::string& name, const Flags& f) {
  Report r;
  r.command = name;
  r.conventions = convention_block();

  if (name == "check-polysymplectic" || name == "from-polysymplectic") {
    InputDocument doc = require_document(f, InputDocument::Kind::PolyformDoc, "polyform");
    const ScalarChoice s = resolve_scalar(f, &doc, false, false);
    r.arguments["input"] = basename_of(f.input);
    r.scalar = scalar_block(s);
    if (name == "check-polysymplectic") {
      if (s.exact)
        run_check_polysymplectic(doc.form, 0.0, r);
      else
        run_check_polysymplectic(to_double(doc.form), s.epsilon, r);
    } else {
      if (s.exact)
        run_from_polysymplectic(doc.form, 0.0, r);
      else
        run_from_polysymplectic(to_double(doc.form), s.epsilon, r);
    }
    return emit(r, f);
  }

  if (name == "dirac") {
    InputDocument doc = require_document(f, InputDocument::Kind::ReductionDoc_, "reduction");
    const ScalarChoice s = resolve_scalar(f, &doc, false, false);
    r.arguments["input"] = basename_of(f.input);
    r.scalar = scalar_block(s);
    if (s.exact)
      run_dirac(doc.reduction.form, doc.reduction.w, 0.0, r);
    else
      run_dirac(to_double(doc.reduction.form), to_double(doc.reduction.w), s.epsilon, r);
    return emit(r, f);
  }

  if (name == "reduce") {
    InputDocument doc = require_document(f, InputDocument::Kind::ReductionDoc_, "reduction");
    const ScalarChoice s = resolve_scalar(f, &doc, false, false);
    r.arguments["input"] = basename_of(f.input);
    r.scalar = scalar_block(s);
    r.conventions = convention_block({kSampleNote});
    if (s.exact) {
      ReductionProblem<Q> rp;
      rp.omega = doc.reduction.form;
      rp.w = Subspace<Q>::span(doc.reduction.w, 0.0);
      for (const auto& [pf, w] : doc.reduction.samples)
        rp.samples.emplace_back(pf, Subspace<Q>::span(w, 0.0));
      run_reduce(rp, 0.0, r);
    } else {
      ReductionProblem<double> rp;
      rp.omega = to_double(doc.reduction.form);
      rp.w = Subspace<double>::span(to_double(doc.reduction.w), s.epsilon);
      for (const auto& [pf, w] : doc.reduction.samples)
        rp.samples.emplace_back(to_double(pf), Subspace<double>::span(to_double(w), s.epsilon));
      run_reduce(rp, s.epsilon, r);
    }
    return emit(r, f);
  }

  if (name == "whitney") {
    InputDocument doc = require_document(f, InputDocument::Kind::AlgebroidPointDoc,
                                         "algebroid_point");
    const ScalarChoice s = resolve_scalar(f, &doc, true, true);
    r.arguments["input"] = basename_of(f.input);
    r.arguments["k"] = f.k;
    r.scalar = scalar_block(s);
    if (f.p.empty()) throw SchemaError("--p", "fibre values are required");
    const std::vector<Q> p = rational_vector(parse_flag_json(f.p, "--p"), "--p");
    r.arguments["p"] = to_json(p);
    const StructureEquationsVerdict sv = structure_equations_check(doc.jet);
    json sw;
    if (!sv.ok()) {
      sw["anchor_ok"] = sv.anchor_ok;
      sw["jacobi_ok"] = sv.jacobi_ok;
      sw["alpha"] = sv.alpha;
      sw["beta"] = sv.beta;
      sw["gamma"] = sv.gamma;
      sw["index"] = sv.index;
      sw["lhs"] = to_json(sv.lhs);
      sw["rhs"] = to_json(sv.rhs);
    }
    r.add("structure-equations", sv.ok(), sw);
    const WhitneyPoint wp = whitney_point(doc.jet, f.k, p);
    const auto commutator_witness = [](const CommutatorVerdict& v) {
      if (v.ok) return json();
      json w;
      w["i"] = v.i;
      w["a"] = v.a;
      w["j"] = v.j;
      w["b"] = v.b;
      w["component"] = v.component;
      return w;
    };
    r.add("commutator-horizontal", wp.horizontal_pairs.ok,
          commutator_witness(wp.horizontal_pairs));
    r.add("commutator-mixed", wp.mixed_pairs.ok, commutator_witness(wp.mixed_pairs));
    r.add("commutator-vertical", wp.vertical_pairs.ok, commutator_witness(wp.vertical_pairs));
    add_axioms(r, wp.pp, 0.0);
    r.data["S"] = to_json(wp.pp.S);
    r.data["sharp"] = to_json(wp.pp.sharp);
    if (f.k == doc.jet.n) r.data["frame_point"] = is_frame(doc.jet.n, p);
    return emit(r, f);
  }

  if (name == "gstar") {
    LieAlgebra g;
    std::size_t k = f.k;
    std::vector<std::vector<Q>> mu;
    if (!f.input.empty()) {
      InputDocument doc = require_document(f, InputDocument::Kind::GstarDoc_, "gstar");
      const ScalarChoice s = resolve_scalar(f, &doc, true, true);
      r.scalar = scalar_block(s);
      r.arguments["input"] = basename_of(f.input);
      g = doc.gstar.has_inline_algebra ? doc.gstar.algebra : resolve_algebra(doc.gstar.algebra_ref);
      k = doc.gstar.k;
      mu = doc.gstar.mu;
    } else {
      const ScalarChoice s = resolve_scalar(f, nullptr, true, true);
      r.scalar = scalar_block(s);
      g = resolve_algebra(f.algebra);
      if (f.mu.empty()) throw SchemaError("--mu", "covectors are required");
      mu = rational_rows(parse_flag_json(f.mu, "--mu"), "--mu");
      r.arguments["algebra"] = basename_of(f.algebra);
    }
    r.arguments["k"] = k;
    if (!add_jacobi(r, g)) return emit(r, f);
    const PolyPoissonPoint<Q> pp = gstar_k(g, k, mu);
    add_axioms(r, pp, 0.0);
    r.data["S"] = to_json(pp.S);
    r.data["sharp"] = to_json(pp.sharp);
    if (!f.crosscheck.empty()) {
      if (f.crosscheck != "orbit")
        throw SchemaError("--crosscheck", "gstar supports crosscheck target 'orbit'");
      const LeafMatchVerdict lm = coadjoint_leaf_match(g, k, mu);
      r.add("leaf-subspace", lm.leaf_ok);
      json w;
      if (!lm.form_ok) {
        w["component"] = lm.component;
        w["i"] = lm.i;
        w["j"] = lm.j;
      }
      r.add("leaf-form", lm.form_ok, w);
    }
    return emit(r, f);
  }

  if (name == "integrability") {
    const ScalarChoice s = resolve_scalar(f, nullptr, true, true);
    r.scalar = scalar_block(s);
    const LieAlgebra g = resolve_algebra(f.algebra);
    r.arguments["algebra"] = basename_of(f.algebra);
    r.arguments["k"] = f.k;
    const IntegrabilityVerdict v = gstar_k_integrability(g, f.k);
    json w;
    if (!v.ok) {
      w["alpha"] = v.alpha;
      w["beta"] = v.beta;
      w["detail"] = v.detail;
    }
    r.add("section-closure", v.ok, w);
    return emit(r, f);
  }

  if (name == "orbit-form") {
    const ScalarChoice s = resolve_scalar(f, nullptr, true, true);
    r.scalar = scalar_block(s);
    const LieAlgebra g = resolve_algebra(f.algebra);
    r.arguments["algebra"] = basename_of(f.algebra);
    r.arguments["k"] = f.k;
    if (f.nu.empty()) throw SchemaError("--nu", "covectors are required");
    const auto nu = rational_rows(parse_flag_json(f.nu, "--nu"), "--nu");
    r.arguments["nu"] = nlohmann::json::array();
    for (const auto& row : nu) r.arguments["nu"].push_back(to_json(row));
    if (!add_jacobi(r, g)) return emit(r, f);
    const KCoadjointOrbit orbit = k_coadjoint_polyform(g, f.k, nu);
    r.add("joint-nondegeneracy", orbit.nondegenerate.ok,
          orbit.nondegenerate.ok ? json() : to_json(orbit.nondegenerate.witness));
    r.data["tangent"] = to_json(orbit.tangent);
    r.data["generator"] = to_json(orbit.generator);
    r.data["form"] = nlohmann::json::array();
    for (const auto& m : orbit.form.forms) r.data["form"].push_back(to_json(m));
    return emit(r, f);
  }

  if (name == "cotangent-group") {
    const ScalarChoice s = resolve_scalar(f, nullptr, true, true);
    r.scalar = scalar_block(s);
    r.conventions = convention_block({kSampleNote});
    const LieAlgebra g = resolve_algebra(f.algebra);
    r.arguments["algebra"] = basename_of(f.algebra);
    r.arguments["k"] = f.k;
    r.arguments["samples"] = f.samples;
    r.arguments["seed"] = f.seed;
    if (f.mu.empty()) throw SchemaError("--mu", "covectors are required");
    const auto mu = rational_rows(parse_flag_json(f.mu, "--mu"), "--mu");
    if (!f.crosscheck.empty() && f.crosscheck != "gstar")
      throw SchemaError("--crosscheck", "cotangent-group supports crosscheck target 'gstar'");
    run_cotangent_group(r, g, f.k, mu, f.samples, f.seed, !f.crosscheck.empty());
    return emit(r, f);
  }

  if (name == "principal-local") {
    const ScalarChoice s = resolve_scalar(f, nullptr, true, true);
    r.scalar = scalar_block(s);
    r.conventions = convention_block({kSampleNote, kAtiyahNote});
    const LieAlgebra g = resolve_algebra(f.algebra);
    r.arguments["algebra"] = basename_of(f.algebra);
    r.arguments["m_base"] = f.m_base;
    r.arguments["k"] = f.k;
    r.arguments["samples"] = f.samples;
    r.arguments["seed"] = f.seed;
    if (f.mu.empty()) throw SchemaError("--mu", "covectors are required");
    const auto mu = rational_rows(parse_flag_json(f.mu, "--mu"), "--mu");
    std::vector<Q> pvals;
    if (!f.pvals.empty())
      pvals = rational_vector(parse_flag_json(f.pvals, "--pvals"), "--pvals");
    if (!f.crosscheck.empty() && f.crosscheck != "whitney")
      throw SchemaError("--crosscheck", "principal-local supports crosscheck target 'whitney'");
    run_principal_local(r, g, f.m_base, f.k, pvals, mu, f.samples, f.seed,
                        !f.crosscheck.empty());
    return emit(r, f);
  }

  if (name == "crosscheck") {
    const ScalarChoice s = resolve_scalar(f, nullptr, true, true);
    r.scalar = scalar_block(s);
    r.arguments["target"] = f.target;
    if (f.target == "gstar") {
      r.conventions = convention_block({kSampleNote});
      const LieAlgebra g = resolve_algebra(f.algebra);
      r.arguments["algebra"] = basename_of(f.algebra);
      r.arguments["k"] = f.k;
      if (f.mu.empty()) throw SchemaError("--mu", "covectors are required");
      const auto mu = rational_rows(parse_flag_json(f.mu, "--mu"), "--mu");
      run_cotangent_group(r, g, f.k, mu, f.samples, f.seed, true);
    } else if (f.target == "canonical") {
      r.arguments["m"] = f.m;
      r.arguments["k"] = f.k;
      run_canonical_crosscheck(r, f.m, f.k);
    } else if (f.target == "whitney") {
      r.conventions = convention_block({kSampleNote, kAtiyahNote});
      const LieAlgebra g = resolve_algebra(f.algebra);
      r.arguments["algebra"] = basename_of(f.algebra);
      r.arguments["m_base"] = f.m_base;
      r.arguments["k"] = f.k;
      if (f.mu.empty()) throw SchemaError("--mu", "covectors are required");
      const auto mu = rational_rows(parse_flag_json(f.mu, "--mu"), "--mu");
      std::vector<Q> pvals;
      if (!f.pvals.empty())
        pvals = rational_vector(parse_flag_json(f.pvals, "--pvals"), "--pvals");
      run_principal_local(r, g, f.m_base, f.k, pvals, mu, f.samples, f.seed, true);
    } else {
      throw SchemaError("--target", "expected one of 'gstar', 'canonical', 'whitney'");
    }
    return emit(r, f);
  }

  throw SchemaError("subcommand", "unknown subcommand '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pointwise polysymplectic and poly-Poisson structure checks"};
  app.require_subcommand(1);
  Flags f;

  const auto add_common = [&f](CLI::App* sub) {
    sub->add_option("--scalar", f.scalar, "exact or float")
        ->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--epsilon", f.epsilon, "float-mode tolerance");
    sub->add_option("--format", f.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", f.output, "write the report to a file");
  };

  const auto add_input = [&f](CLI::App* sub) { sub->add_option("--input", f.input); };
  const auto add_algebra = [&f](CLI::App* sub) { sub->add_option("--algebra", f.algebra); };
  const auto add_k = [&f](CLI::App* sub) { sub->add_option("--k", f.k); };
  const auto add_sampling = [&f](CLI::App* sub) {
    sub->add_option("--samples", f.samples);
    sub->add_option("--seed", f.seed);
  };

  for (const char* name : {"check-polysymplectic", "from-polysymplectic", "dirac", "reduce"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub);
    add_input(sub);
  }
  {
    CLI::App* sub = app.add_subcommand("whitney");
    add_common(sub);
    add_input(sub);
    add_k(sub);
    sub->add_option("--p", f.p, "fibre values, JSON array of k*n rationals");
  }
  {
    CLI::App* sub = app.add_subcommand("gstar");
    add_common(sub);
    add_input(sub);
    add_algebra(sub);
    add_k(sub);
    sub->add_option("--mu", f.mu, "covectors, JSON array of k rows");
    sub->add_option("--crosscheck", f.crosscheck);
  }
  {
    CLI::App* sub = app.add_subcommand("integrability");
    add_common(sub);
    add_algebra(sub);
    add_k(sub);
  }
  {
    CLI::App* sub = app.add_subcommand("orbit-form");
    add_common(sub);
    add_algebra(sub);
    add_k(sub);
    sub->add_option("--nu", f.nu, "covectors, JSON array of k rows");
  }
  {
    CLI::App* sub = app.add_subcommand("cotangent-group");
    add_common(sub);
    add_algebra(sub);
    add_k(sub);
    sub->add_option("--mu", f.mu, "covectors, JSON array of k rows");
    sub->add_option("--crosscheck", f.crosscheck);
    add_sampling(sub);
  }
  {
    CLI::App* sub = app.add_subcommand("principal-local");
    add_common(sub);
    add_algebra(sub);
    add_k(sub);
    sub->add_option("--m-base", f.m_base);
    sub->add_option("--mu", f.mu, "covectors, JSON array of k rows");
    sub->add_option("--pvals", f.pvals, "base covelocity values, JSON array of k*m_base");
    sub->add_option("--crosscheck", f.crosscheck);
    add_sampling(sub);
  }
  {
    CLI::App* sub = app.add_subcommand("crosscheck");
    add_common(sub);
    add_algebra(sub);
    add_k(sub);
    sub->add_option("--target", f.target, "gstar, canonical, or whitney")->required();
    sub->add_option("--m", f.m);
    sub->add_option("--m-base", f.m_base);
    sub->add_option("--mu", f.mu);
    sub->add_option("--pvals", f.pvals);
    add_sampling(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }

  CLI::App* sub = app.get_subcommands().at(0);
  f.has_epsilon = sub->count("--epsilon") > 0;

  try {
    return dispatch(sub->get_name(), f);
  } catch (const SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  }
}
