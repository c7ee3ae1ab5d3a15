#include "polyps/json_io.hpp"

#include <fstream>
#include <sstream>

namespace polyps {

using nlohmann::json;

namespace {

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const json& member(const json& j, const std::string& path, const char* key) {
  if (!j.is_object()) throw SchemaError(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(path, std::string("missing field '") + key + "'");
  return *it;
}

std::size_t unsigned_field(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw SchemaError(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

std::string string_field(const json& j, const std::string& path) {
  if (!j.is_string()) throw SchemaError(path, "expected a string");
  return j.get<std::string>();
}

Mat<Q> matrix_field(const json& j, const std::string& path, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows)
    throw SchemaError(path, "expected " + std::to_string(rows) + " rows");
  Mat<Q> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const json& r = j[i];
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!r.is_array() || r.size() != cols)
      throw SchemaError(rp, "expected " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c)
      m(i, c) = rational_field(r[c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

Mat<Q> basis_field(const json& j, const std::string& path, std::size_t ambient) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of rows");
  Mat<Q> m(j.size(), ambient);
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& r = j[i];
    const std::string rp = path + "[" + std::to_string(i) + "]";
    if (!r.is_array() || r.size() != ambient)
      throw SchemaError(rp, "expected " + std::to_string(ambient) + " entries");
    for (std::size_t c = 0; c < ambient; ++c)
      m(i, c) = rational_field(r[c], rp + "[" + std::to_string(c) + "]");
  }
  return m;
}

std::vector<BracketTriple> triples_field(const json& j, const std::string& path, std::size_t n) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of [alpha, beta, gamma, value]");
  std::vector<BracketTriple> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const json& t = j[i];
    const std::string tp = path + "[" + std::to_string(i) + "]";
    if (!t.is_array() || t.size() != 4)
      throw SchemaError(tp, "expected [alpha, beta, gamma, value]");
    BracketTriple b;
    b.alpha = unsigned_field(t[0], tp + "[0]");
    b.beta = unsigned_field(t[1], tp + "[1]");
    b.gamma = unsigned_field(t[2], tp + "[2]");
    if (b.alpha >= n || b.beta >= n || b.gamma >= n)
      throw SchemaError(tp, "basis index out of range");
    b.value = rational_field(t[3], tp + "[3]");
    out.push_back(b);
  }
  return out;
}

LieAlgebra algebra_payload(const json& j, const std::string& path) {
  const std::size_t n = unsigned_field(member(j, path, "n"), path + ".n");
  const auto triples = triples_field(member(j, path, "brackets"), path + ".brackets", n);
  try {
    return make_lie_algebra(n, triples);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + ".brackets", e.what());
  }
}

/// Sparse structure-function table: triples fill C^gamma_{alpha beta} with the
/// antisymmetric mirror; conflicting duplicates are rejected.
std::vector<Q> constants_payload(const json& j, const std::string& path, std::size_t n) {
  const auto triples = triples_field(j, path, n);
  std::vector<Q> c(n * n * n, Q(0));
  std::vector<bool> set(n * n * n, false);
  const auto put = [&](std::size_t g, std::size_t a, std::size_t b, const Q& v,
                       const std::string& tp) {
    const std::size_t idx = (g * n + a) * n + b;
    if (set[idx] && c[idx] != v) throw SchemaError(tp, "conflicting duplicate entry");
    set[idx] = true;
    c[idx] = v;
  };
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& t = triples[i];
    const std::string tp = path + "[" + std::to_string(i) + "]";
    if (t.alpha == t.beta && sgn(t.value) != 0)
      throw SchemaError(tp, "nonzero entry on equal lower indices");
    put(t.gamma, t.alpha, t.beta, t.value, tp);
    put(t.gamma, t.beta, t.alpha, -t.value, tp);
  }
  return c;
}

PolyForm<Q> polyform_payload(const json& j, const std::string& path) {
  PolyForm<Q> pf;
  pf.m = unsigned_field(member(j, path, "m"), path + ".m");
  pf.k = unsigned_field(member(j, path, "k"), path + ".k");
  if (pf.k == 0) throw SchemaError(path + ".k", "expected a positive integer");
  const json& mats = member(j, path, "matrices");
  if (!mats.is_array() || mats.size() != pf.k)
    throw SchemaError(path + ".matrices", "expected " + std::to_string(pf.k) + " matrices");
  for (std::size_t a = 0; a < pf.k; ++a)
    pf.forms.push_back(
        matrix_field(mats[a], path + ".matrices[" + std::to_string(a) + "]", pf.m, pf.m));
  try {
    validate_skew(pf, 0.0);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path + ".matrices", e.what());
  }
  return pf;
}

std::pair<PolyForm<Q>, Mat<Q>> form_and_subspace(const json& j, const std::string& path) {
  PolyForm<Q> pf = polyform_payload(member(j, path, "polyform"), path + ".polyform");
  const json& w = member(j, path, "W");
  const std::size_t ambient = unsigned_field(member(w, path + ".W", "ambient"), path + ".W.ambient");
  if (ambient != pf.m) throw SchemaError(path + ".W.ambient", "does not match polyform m");
  Mat<Q> basis = basis_field(member(w, path + ".W", "basis"), path + ".W.basis", ambient);
  return {std::move(pf), std::move(basis)};
}

AlgebroidPointData algebroid_payload(const json& j, const std::string& path) {
  AlgebroidPointData d;
  d.m = unsigned_field(member(j, path, "m"), path + ".m");
  d.n = unsigned_field(member(j, path, "n"), path + ".n");
  d.rho = matrix_field(member(j, path, "rho"), path + ".rho", d.m, d.n);
  const json& drho = member(j, path, "drho");
  if (!drho.is_array() || drho.size() != d.m)
    throw SchemaError(path + ".drho", "expected one matrix per base coordinate");
  for (std::size_t i = 0; i < d.m; ++i)
    d.drho.push_back(matrix_field(drho[i], path + ".drho[" + std::to_string(i) + "]", d.m, d.n));
  d.c = constants_payload(member(j, path, "C"), path + ".C", d.n);
  const json& dc = member(j, path, "dC");
  if (!dc.is_array() || dc.size() != d.m)
    throw SchemaError(path + ".dC", "expected one table per base coordinate");
  for (std::size_t i = 0; i < d.m; ++i)
    d.dc.push_back(constants_payload(dc[i], path + ".dC[" + std::to_string(i) + "]", d.n));
  try {
    validate(d);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(path, e.what());
  }
  return d;
}

GstarDoc gstar_payload(const json& j, const std::string& path) {
  GstarDoc g;
  const bool has_ref = j.is_object() && j.contains("algebra_ref");
  const bool has_inline = j.is_object() && j.contains("algebra");
  if (has_ref == has_inline)
    throw SchemaError(path, "expected exactly one of 'algebra_ref' and 'algebra'");
  if (has_ref) {
    g.algebra_ref = string_field(j["algebra_ref"], path + ".algebra_ref");
  } else {
    g.has_inline_algebra = true;
    g.algebra = algebra_payload(j["algebra"], path + ".algebra");
  }
  g.k = unsigned_field(member(j, path, "k"), path + ".k");
  if (g.k == 0) throw SchemaError(path + ".k", "expected a positive integer");
  const json& mu = member(j, path, "mu");
  if (!mu.is_array() || mu.size() != g.k)
    throw SchemaError(path + ".mu", "expected " + std::to_string(g.k) + " covectors");
  for (std::size_t a = 0; a < g.k; ++a)
    g.mu.push_back(rational_vector(mu[a], path + ".mu[" + std::to_string(a) + "]"));
  return g;
}

}  // namespace

Q rational_field(const json& j, const std::string& path) {
  if (j.is_number_integer()) return Q(static_cast<long>(j.get<long long>()));
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(path, e.what());
    }
  }
  throw SchemaError(path, "expected an integer or a 'p/q' string");
}

std::vector<Q> rational_vector(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array");
  std::vector<Q> v;
  for (std::size_t i = 0; i < j.size(); ++i)
    v.push_back(rational_field(j[i], path + "[" + std::to_string(i) + "]"));
  return v;
}

std::vector<std::vector<Q>> rational_rows(const json& j, const std::string& path) {
  if (!j.is_array()) throw SchemaError(path, "expected an array of arrays");
  std::vector<std::vector<Q>> rows;
  for (std::size_t i = 0; i < j.size(); ++i)
    rows.push_back(rational_vector(j[i], path + "[" + std::to_string(i) + "]"));
  return rows;
}

InputDocument parse_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(line_column(text, e.byte > 0 ? e.byte - 1 : 0), "malformed JSON");
  }
  InputDocument doc;
  doc.version = string_field(member(j, "$", "version"), "$.version");
  if (j.contains("scalar")) {
    const json& s = j["scalar"];
    doc.scalar_given = true;
    doc.scalar_mode = string_field(member(s, "$.scalar", "mode"), "$.scalar.mode");
    if (doc.scalar_mode != "exact" && doc.scalar_mode != "float")
      throw SchemaError("$.scalar.mode", "expected 'exact' or 'float'");
    if (s.contains("epsilon")) {
      if (!s["epsilon"].is_number()) throw SchemaError("$.scalar.epsilon", "expected a number");
      doc.epsilon = s["epsilon"].get<double>();
    }
  }
  const json& payload = member(j, "$", "payload");
  const std::string type = string_field(member(payload, "$.payload", "type"), "$.payload.type");
  const std::string path = "$.payload";
  if (type == "lie_algebra") {
    doc.kind = InputDocument::Kind::LieAlgebraDoc;
    doc.algebra = algebra_payload(payload, path);
  } else if (type == "algebroid_point") {
    doc.kind = InputDocument::Kind::AlgebroidPointDoc;
    doc.jet = algebroid_payload(payload, path);
  } else if (type == "polyform") {
    doc.kind = InputDocument::Kind::PolyformDoc;
    doc.form = polyform_payload(payload, path);
  } else if (type == "subspace") {
    doc.kind = InputDocument::Kind::SubspaceDoc;
    doc.subspace_ambient = unsigned_field(member(payload, path, "ambient"), path + ".ambient");
    doc.subspace_basis =
        basis_field(member(payload, path, "basis"), path + ".basis", doc.subspace_ambient);
  } else if (type == "reduction") {
    doc.kind = InputDocument::Kind::ReductionDoc_;
    auto [pf, w] = form_and_subspace(payload, path);
    doc.reduction.form = std::move(pf);
    doc.reduction.w = std::move(w);
    if (payload.contains("samples")) {
      const json& samples = payload["samples"];
      if (!samples.is_array()) throw SchemaError(path + ".samples", "expected an array");
      for (std::size_t i = 0; i < samples.size(); ++i)
        doc.reduction.samples.push_back(
            form_and_subspace(samples[i], path + ".samples[" + std::to_string(i) + "]"));
    }
  } else if (type == "gstar") {
    doc.kind = InputDocument::Kind::GstarDoc_;
    doc.gstar = gstar_payload(payload, path);
  } else {
    throw SchemaError(path + ".type", "unknown payload type '" + type + "'");
  }
  return doc;
}

InputDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError(path, "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

std::optional<LieAlgebra> builtin_algebra(const std::string& name) {
  if (name == "so3") return so3();
  if (name == "heisenberg3") return heisenberg3();
  if (name == "sl2") return sl2();
  if (name == "broken_so3") return broken_so3();
  if (name.rfind("abelian", 0) == 0) {
    const std::string tail = name.substr(7);
    if (!tail.empty() && tail.find_first_not_of("0123456789") == std::string::npos)
      return abelian(static_cast<std::size_t>(std::stoul(tail)));
  }
  return std::nullopt;
}

double to_double(const Q& x) { return x.get_d(); }

std::vector<double> to_double(const std::vector<Q>& v) {
  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_d();
  return out;
}

Mat<double> to_double(const Mat<Q>& m) {
  Mat<double> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_d();
  return out;
}

PolyForm<double> to_double(const PolyForm<Q>& pf) {
  PolyForm<double> out;
  out.m = pf.m;
  out.k = pf.k;
  out.closedness = pf.closedness == PolyForm<Q>::Closedness::ConstantAuto
                       ? PolyForm<double>::Closedness::ConstantAuto
                       : PolyForm<double>::Closedness::Deferred;
  for (const auto& w : pf.forms) out.forms.push_back(to_double(w));
  return out;
}

}  // namespace polyps
