#ifndef POLYPS_REPORT_HPP
#define POLYPS_REPORT_HPP

#include <json.hpp>
#include <string>
#include <vector>

#include "polyps/matrix.hpp"
#include "polyps/scalar.hpp"
#include "polyps/subspace.hpp"

namespace polyps {

using nlohmann::json;

/// One named check with its outcome and an optional witness payload.
struct Verdict {
  std::string check;
  bool ok = false;
  json witness;  // null when there is nothing to show
};

/// Deterministic result document: the command echo, the conventions in
/// force, the individual verdicts, and the canonical output data. The JSON
/// and text renderings carry the same verdicts and the same status.
struct Report {
  std::string command;
  json arguments = json::object();
  json scalar = json::object();
  json conventions = json::object();
  std::vector<Verdict> verdicts;
  json data = json::object();

  void add(const std::string& check, bool ok, json witness = json());
  bool pass() const;
  int exit_code() const { return pass() ? 0 : 1; }
};

/// Fills the convention block shared by every report; notes are appended
/// verbatim under "notes".
json convention_block(const std::vector<std::string>& notes = {});

std::string render_json(const Report& r);
std::string render_text(const Report& r);

json to_json(const Q& x);
json to_json(const std::vector<Q>& v);
json to_json(const Mat<Q>& m);
json to_json(const Subspace<Q>& s);
json to_json(const std::vector<double>& v);
json to_json(const Mat<double>& m);
json to_json(const Subspace<double>& s);

}  // namespace polyps

#endif
