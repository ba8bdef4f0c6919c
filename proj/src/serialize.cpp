#include "cdws/serialize.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cdws {

using nlohmann::json;

json to_json(const ChordDiagram& d) {
  return json{{"code", std::vector<int>(d.code().begin(), d.code().end())}, {"degree", d.degree()}};
}

ChordDiagram diagram_from_json(const json& j) {
  if (!j.is_object() || !j.contains("code") || !j["code"].is_array()) {
    throw std::invalid_argument("diagram JSON needs a \"code\" array");
  }
  ChordDiagram d(j["code"].get<std::vector<int>>());
  if (j.contains("degree") && j["degree"].get<int>() != d.degree()) {
    throw std::invalid_argument("diagram JSON degree does not match its code");
  }
  return d;
}

json to_json(const Polynomial& p, const std::string& var) {
  json coeffs = json::array();
  for (const auto& c : p.coefficients()) {
    coeffs.push_back(to_string(c));
  }
  if (coeffs.empty()) {
    coeffs.push_back("0");
  }
  return json{{"var", var}, {"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) {
    throw std::invalid_argument("polynomial JSON needs a \"coeffs\" array");
  }
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    coeffs.push_back(parse_rational(c.get<std::string>()));
  }
  return Polynomial(std::move(coeffs));
}

json to_json(const PartitionCombination& p) {
  json terms = json::array();
  for (const auto& term : p.terms) {
    json blocks = json::array();
    for (ChordSet block : term.partition) {
      blocks.push_back(block.labels());
    }
    terms.push_back(json{{"blocks", blocks}, {"coeff", to_string(term.coefficient)}});
  }
  return json{{"diagram", to_json(p.base)}, {"terms", terms}};
}

json to_json(const ChainReport& r) {
  return json{
      {"diagram", r.diagram.to_string()},
      {"code", std::vector<int>(r.diagram.code().begin(), r.diagram.code().end())},
      {"m", r.m},
      {"R_m", to_string(r.r_m)},
      {"descent_sum", r.descent_sum.str()},
      {"signed_circuit_sum", r.signed_circuit_sum.str()},
      {"logWC", to_string(r.log_wc)},
      {"WC_on_pi", to_string(r.wc_on_pi)},
      {"WJJ_on_pi", to_string(r.wjj_on_pi)},
      {"sl2_on_pi", to_json(r.sl2_on_pi, "c")},
      {"deframed_sl2_on_pi", to_json(r.deframed_on_pi, "c")},
      {"sl2_2_on_pi", to_json(r.sl2_2_on_pi, "c_2")},
      {"lhs", to_string(r.lhs)},
      {"rhs", to_string(r.rhs)},
      {"links",
       {{"a_descent", r.descent_link},
        {"b_log", r.log_link},
        {"c_projection", r.projection_link},
        {"d_jj", r.jj_link},
        {"e_sl2", r.sl2_link},
        {"f_rescaled", r.rescaled_link}}},
      {"r1_half_integer_convention", r.r1_half_integer_convention},
      {"pass", r.pass},
  };
}

json to_json(const ConjectureSummary& s, bool include_reports) {
  json out{{"m", s.m},
           {"processed", s.processed},
           {"passed", s.passed},
           {"failed", s.failed},
           {"all_passed", s.all_passed()}};
  out["first_failure"] = s.first_failure ? to_json(*s.first_failure) : json(nullptr);
  if (include_reports) {
    json reports = json::array();
    for (const auto& r : s.reports) {
      reports.push_back(to_json(r));
    }
    out["reports"] = std::move(reports);
  }
  return out;
}

namespace {

std::string coeff_list(const Polynomial& p) {
  std::string out;
  for (const auto& c : p.coefficients()) {
    out += (out.empty() ? "" : ";") + to_string(c);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string csv_header() {
  return "diagram,m,R_m,descent_sum,signed_circuit_sum,logWC,WC_on_pi,WJJ_on_pi,sl2_on_pi,"
         "sl2_2_on_pi,lhs,rhs,r1_half_integer_convention,pass";
}

std::string to_csv_row(const ChainReport& r) {
  std::ostringstream row;
  row << r.diagram.to_string() << ',' << r.m << ',' << to_string(r.r_m) << ',' << r.descent_sum
      << ',' << r.signed_circuit_sum << ',' << to_string(r.log_wc) << ',' << to_string(r.wc_on_pi)
      << ',' << to_string(r.wjj_on_pi) << ',' << coeff_list(r.sl2_on_pi) << ','
      << coeff_list(r.sl2_2_on_pi) << ',' << to_string(r.lhs) << ',' << to_string(r.rhs) << ','
      << (r.r1_half_integer_convention ? "true" : "false") << ',' << (r.pass ? "true" : "false");
  return row.str();
}

void write_table(std::ostream& out, const ConjectureSummary& s) {
  out << std::left << std::setw(20) << "diagram" << std::setw(8) << "R_m" << std::setw(8)
      << "logWC" << std::setw(10) << "WJJ(pi)" << std::setw(28) << "sl2_2(pi)" << "pass\n";
  for (const auto& r : s.reports) {
    out << std::setw(20) << r.diagram.to_string() << std::setw(8) << to_string(r.r_m)
        << std::setw(8) << to_string(r.log_wc) << std::setw(10) << to_string(r.wjj_on_pi)
        << std::setw(28) << r.sl2_2_on_pi.to_string("c_2") << (r.pass ? "yes" : "NO") << '\n';
  }
  out << "m=" << s.m << " processed=" << s.processed << " passed=" << s.passed
      << " failed=" << s.failed << '\n';
  if (s.m == 1) {
    out << "note: R_1 uses the half-integer convention (one traversal per 2-cycle)\n";
  }
}

}  // namespace cdws
