#include "polyps/report.hpp"

#include <sstream>

#include "polyps/conventions.hpp"

namespace polyps {

void Report::add(const std::string& check, bool ok, json witness) {
  verdicts.push_back(Verdict{check, ok, std::move(witness)});
}

bool Report::pass() const {
  for (const auto& v : verdicts)
    if (!v.ok) return false;
  return true;
}

json convention_block(const std::vector<std::string>& notes) {
  const ConventionLedger& l = conventions();
  json c;
  c["flat"] = l.flat;
  c["coadjoint"] = l.coadjoint;
  c["sigma"] = l.sigma;
  c["notes"] = json::array();
  for (const auto& n : notes) c["notes"].push_back(n);
  return c;
}

std::string render_json(const Report& r) {
  json j;
  j["command"] = r.command;
  j["arguments"] = r.arguments;
  j["scalar"] = r.scalar;
  j["conventions"] = r.conventions;
  j["verdicts"] = json::array();
  for (const auto& v : r.verdicts) {
    json e;
    e["check"] = v.check;
    e["ok"] = v.ok;
    e["witness"] = v.witness;
    j["verdicts"].push_back(e);
  }
  j["data"] = r.data;
  j["status"] = r.pass() ? "pass" : "fail";
  j["exit_code"] = r.exit_code();
  return j.dump(2) + "\n";
}

namespace {

void render_value(std::ostringstream& out, const json& j) {
  out << j.dump();
}

}  // namespace

std::string render_text(const Report& r) {
  std::ostringstream out;
  out << "command: " << r.command << "\n";
  for (auto it = r.arguments.begin(); it != r.arguments.end(); ++it) {
    out << "argument " << it.key() << ": ";
    render_value(out, it.value());
    out << "\n";
  }
  for (auto it = r.scalar.begin(); it != r.scalar.end(); ++it) {
    out << "scalar " << it.key() << ": ";
    render_value(out, it.value());
    out << "\n";
  }
  for (auto it = r.conventions.begin(); it != r.conventions.end(); ++it) {
    out << "convention " << it.key() << ": ";
    render_value(out, it.value());
    out << "\n";
  }
  for (const auto& v : r.verdicts) {
    out << "check " << v.check << ": " << (v.ok ? "pass" : "FAIL");
    if (!v.witness.is_null()) {
      out << " witness=";
      render_value(out, v.witness);
    }
    out << "\n";
  }
  for (auto it = r.data.begin(); it != r.data.end(); ++it) {
    out << "data " << it.key() << ": ";
    render_value(out, it.value());
    out << "\n";
  }
  out << "status: " << (r.pass() ? "pass" : "fail") << "\n";
  return out.str();
}

json to_json(const Q& x) { return to_string(x); }

json to_json(const std::vector<Q>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

json to_json(const Mat<Q>& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const Subspace<Q>& s) {
  json j;
  j["ambient"] = s.ambient();
  j["dim"] = s.dim();
  j["basis"] = to_json(s.basis());
  return j;
}

json to_json(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

json to_json(const Mat<double>& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

json to_json(const Subspace<double>& s) {
  json j;
  j["ambient"] = s.ambient();
  j["dim"] = s.dim();
  j["basis"] = to_json(s.basis());
  return j;
}

}  // namespace polyps
