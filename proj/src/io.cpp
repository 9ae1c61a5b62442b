#include "wigner/io.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace wigner {

namespace {

using nlohmann::json;

std::string header_comments(const HeaderFields& header) {
  std::ostringstream out;
  for (const auto& [key, value] : header) out << "# " << key << "=" << value << "\n";
  return out.str();
}

json header_object(const HeaderFields& header) {
  json obj = json::object();
  for (const auto& [key, value] : header) obj[key] = value;
  return obj;
}

}  // namespace

std::string format_full(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string profile_to_csv(const ProbabilityProfile& profile, const HeaderFields& header) {
  std::ostringstream out;
  out << header_comments(header) << "x,p\n";
  for (const auto& [x, p] : profile.entries) out << x << "," << format_full(p) << "\n";
  return out.str();
}

std::string profile_to_json(const ProbabilityProfile& profile, const HeaderFields& header) {
  json obj = header_object(header);
  json rows = json::array();
  for (const auto& [x, p] : profile.entries) rows.push_back({{"x", x}, {"p", p}});
  obj["rows"] = std::move(rows);
  return obj.dump(2) + "\n";
}

std::string density_to_csv(const std::vector<std::pair<double, double>>& samples,
                           const HeaderFields& header) {
  std::ostringstream out;
  out << header_comments(header) << "v,nu\n";
  for (const auto& [v, nu] : samples) out << format_full(v) << "," << format_full(nu) << "\n";
  return out.str();
}

std::string density_to_json(const std::vector<std::pair<double, double>>& samples,
                            const HeaderFields& header) {
  json obj = header_object(header);
  json rows = json::array();
  for (const auto& [v, nu] : samples) rows.push_back({{"v", v}, {"nu", nu}});
  obj["rows"] = std::move(rows);
  return obj.dump(2) + "\n";
}

std::string trapping_to_csv(const std::vector<std::pair<int, double>>& samples,
                            const HeaderFields& header) {
  std::ostringstream out;
  out << header_comments(header) << "x,p_inf\n";
  for (const auto& [x, p] : samples) out << x << "," << format_full(p) << "\n";
  return out.str();
}

std::string trapping_to_json(const std::vector<std::pair<int, double>>& samples,
                             const HeaderFields& header) {
  json obj = header_object(header);
  json rows = json::array();
  for (const auto& [x, p] : samples) rows.push_back({{"x", x}, {"p_inf", p}});
  obj["rows"] = std::move(rows);
  return obj.dump(2) + "\n";
}

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  json arr = json::array();
  for (const VerificationReport& report : reports) {
    json obj;
    obj["scenario"] = report.scenario;
    obj["passed"] = report.passed();
    obj["metrics"] = json::object();
    for (const auto& [name, value] : report.metrics) obj["metrics"][name] = value;
    obj["passes"] = json::object();
    for (const auto& [name, ok] : report.passes) obj["passes"][name] = ok;
    arr.push_back(std::move(obj));
  }
  json root;
  root["reports"] = std::move(arr);
  bool all = true;
  for (const VerificationReport& report : reports) all = all && report.passed();
  root["all_passed"] = all;
  return root.dump(2) + "\n";
}

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "scenario,metric,value,passed\n";
  for (const VerificationReport& report : reports) {
    for (const auto& [name, value] : report.metrics) {
      out << report.scenario << "," << name << "," << format_full(value) << ",";
      const auto it = report.passes.find(name);
      out << (it == report.passes.end() ? "" : (it->second ? "true" : "false")) << "\n";
    }
  }
  return out.str();
}

}  // namespace wigner
