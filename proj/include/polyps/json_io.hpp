#ifndef POLYPS_JSON_IO_HPP
#define POLYPS_JSON_IO_HPP

#include <json.hpp>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polyps/algebroid.hpp"
#include "polyps/lie_algebra.hpp"
#include "polyps/polyform.hpp"
#include "polyps/reduction.hpp"

namespace polyps {

/// Input rejection carrying the document location: a line/column pair for
/// malformed JSON, a field path for schema violations.
struct SchemaError : std::runtime_error {
  SchemaError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), where(std::move(location)) {}
  std::string where;
};

struct GstarDoc {
  std::string algebra_ref;  // builtin name or file path; empty when inline
  bool has_inline_algebra = false;
  LieAlgebra algebra;
  std::size_t k = 0;
  std::vector<std::vector<Q>> mu;
};

struct ReductionDoc {
  PolyForm<Q> form;
  Mat<Q> w;  // basis rows, possibly empty
  std::vector<std::pair<PolyForm<Q>, Mat<Q>>> samples;
};

struct InputDocument {
  enum class Kind { LieAlgebraDoc, AlgebroidPointDoc, PolyformDoc, SubspaceDoc, ReductionDoc_, GstarDoc_ };

  std::string version;
  bool scalar_given = false;
  std::string scalar_mode = "exact";
  double epsilon = 1e-9;

  Kind kind = Kind::PolyformDoc;
  LieAlgebra algebra;
  AlgebroidPointData jet;
  PolyForm<Q> form;
  std::size_t subspace_ambient = 0;
  Mat<Q> subspace_basis;
  ReductionDoc reduction;
  GstarDoc gstar;
};

/// Parses a whole document; throws SchemaError with line/column on JSON
/// syntax errors and with the field path on schema violations.
InputDocument parse_document(const std::string& text);
InputDocument load_document(const std::string& path);

/// Bundled structure-constant tables by name: so3, heisenberg3, sl2,
/// broken_so3, abelian<n>.
std::optional<LieAlgebra> builtin_algebra(const std::string& name);

/// Rational entry of an input document: an integer or a "p/q" string.
Q rational_field(const nlohmann::json& j, const std::string& path);
std::vector<Q> rational_vector(const nlohmann::json& j, const std::string& path);
std::vector<std::vector<Q>> rational_rows(const nlohmann::json& j, const std::string& path);

double to_double(const Q& x);
std::vector<double> to_double(const std::vector<Q>& v);
Mat<double> to_double(const Mat<Q>& m);
PolyForm<double> to_double(const PolyForm<Q>& pf);

}  // namespace polyps

#endif
