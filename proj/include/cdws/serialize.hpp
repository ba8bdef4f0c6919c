#pragma once

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "cdws/diagram.hpp"
#include "cdws/hopf.hpp"
#include "cdws/polynomial.hpp"
#include "cdws/verifier.hpp"

namespace cdws {

// JSON wire formats. Rationals are strings "p/q" (or "p" when integral);
// polynomials are {"var": name, "coeffs": [...]} with index = power.

nlohmann::json to_json(const ChordDiagram& d);
ChordDiagram diagram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Polynomial& p, const std::string& var = "c");
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PartitionCombination& p);
nlohmann::json to_json(const ChainReport& r);
nlohmann::json to_json(const ConjectureSummary& s, bool include_reports = true);

std::string csv_header();
std::string to_csv_row(const ChainReport& r);

/// Fixed-width text table, one row per report, followed by the summary.
void write_table(std::ostream& out, const ConjectureSummary& s);

}  // namespace cdws
