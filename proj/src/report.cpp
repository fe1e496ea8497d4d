#include "ekr/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ekr::report {

std::string real_text(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

Json real(double x) { return Json(std::strtod(real_text(x).c_str(), nullptr)); }

namespace {

Json optional_size(const std::optional<std::size_t> &v) {
  return v ? Json(*v) : Json(nullptr);
}

} // namespace

StirlingRecord stirling_record(std::size_t n, std::size_t k, bool with_ratio) {
  StirlingRecord r{n, k, stirling_recurrence(n, k), std::nullopt};
  if (with_ratio)
    r.ratio = stirling_ratio(n, k);
  return r;
}

Json to_json(const StirlingRecord &r) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["value"] = r.value.str();
  if (r.ratio)
    j["ratio"] = real(*r.ratio);
  return j;
}

Json to_json(const ConstantsEstimate &e) {
  Json j;
  j["k"] = e.k;
  j["n_min"] = e.n_min;
  j["n_max"] = e.n_max;
  j["alpha_hat"] = real(e.alpha_hat);
  j["alpha_at"] = e.alpha_at;
  j["beta_hat"] = real(e.beta_hat);
  j["beta_at"] = e.beta_at;
  return j;
}

Json to_json(const InequalityReport &r) {
  Json j;
  j["n_start"] = r.n_start;
  j["n_max"] = r.n_max;
  Json checks = Json::array();
  for (const InequalityCheck &c : r.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["threshold"] = optional_size(c.threshold);
    cj["failures"] = c.failures;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json to_json(const CoverBoundReport &r) {
  Json j;
  j["size"] = r.size;
  j["bound_rhs"] = r.bound_rhs.str();
  j["l"] = r.l;
  j["holds"] = r.holds;
  return j;
}

Json to_json(const Family &f) {
  Json j = Json::array();
  for (const CyclePermutation &p : f.members())
    j.push_back(p.to_string());
  return j;
}

Json to_json(const TheoremReport &r, bool include_timing) {
  Json j;
  j["n"] = r.n;
  j["k"] = r.k;
  j["t"] = r.t;
  j["vertex_count"] = r.vertex_count;
  j["bound_stirling"] = r.bound.str();
  j["max_size"] = r.max_size;
  j["optimal"] = r.optimal;
  j["relation"] = to_string(r.relation);
  j["is_stabilizer"] = r.is_stabilizer();
  j["stabilizer_points"] =
      r.stabilizer_points ? Json(*r.stabilizer_points) : Json(nullptr);
  j["uniqueness"] = to_string(r.uniqueness);
  j["maxima_enumerated"] = r.maxima_enumerated;
  j["all_maxima_stabilizers"] = r.all_maxima_stabilizers
                                    ? Json(*r.all_maxima_stabilizers)
                                    : Json(nullptr);
  j["witness_cycles"] = r.witness_cycles;
  if (include_timing)
    j["elapsed_ms"] = r.elapsed.count();
  return j;
}

Json to_json(const ThresholdReport &r, bool include_timing) {
  Json j;
  j["k"] = r.k;
  j["t"] = r.t;
  j["n_max"] = r.n_max;
  j["bound_from"] = optional_size(r.bound_from);
  j["stabilizer_from"] = optional_size(r.stabilizer_from);
  Json rows = Json::array();
  for (const TheoremReport &row : r.rows)
    rows.push_back(to_json(row, include_timing));
  j["rows"] = std::move(rows);
  return j;
}

Family family_from_json(const Json &j, std::size_t n_hint, std::size_t k_hint) {
  if (!j.is_array())
    throw std::invalid_argument("family must be a JSON array");
  std::vector<CyclePermutation> members;
  for (const Json &item : j)
    members.push_back(CyclePermutation::parse(item.get<std::string>()));
  if (members.empty())
    return Family(iota_ground(n_hint), k_hint);
  std::vector<Element> ground = members.front().ground();
  const std::size_t k = members.front().cycle_count();
  return Family(std::move(ground), k, std::move(members));
}

void write_stirling_csv(std::ostream &out,
                        const std::vector<StirlingRecord> &rows) {
  out << "n,k,value,ratio\n";
  for (const StirlingRecord &r : rows) {
    out << r.n << ',' << r.k << ',' << r.value.str() << ',';
    if (r.ratio)
      out << real_text(*r.ratio);
    out << '\n';
  }
}

std::string theorem_csv_header(bool include_timing) {
  std::string h = "n,k,t,vertex_count,bound_stirling,max_size,optimal,"
                  "relation,is_stabilizer,uniqueness,maxima_enumerated,"
                  "all_maxima_stabilizers";
  if (include_timing)
    h += ",elapsed_ms";
  return h;
}

std::string theorem_csv_row(const TheoremReport &r, bool include_timing) {
  std::ostringstream out;
  out << r.n << ',' << r.k << ',' << r.t << ',' << r.vertex_count << ','
      << r.bound.str() << ',' << r.max_size << ','
      << (r.optimal ? "true" : "false") << ',' << to_string(r.relation) << ','
      << (r.is_stabilizer() ? "true" : "false") << ','
      << to_string(r.uniqueness) << ',' << r.maxima_enumerated << ',';
  if (r.all_maxima_stabilizers)
    out << (*r.all_maxima_stabilizers ? "true" : "false");
  if (include_timing)
    out << ',' << r.elapsed.count();
  return out.str();
}

} // namespace ekr::report
