// cdws: command-line front end for the chord-diagram weight-system library.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cdws/diagram.hpp"
#include "cdws/hopf.hpp"
#include "cdws/intersection_graph.hpp"
#include "cdws/serialize.hpp"
#include "cdws/verifier.hpp"
#include "cdws/weight_systems.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFailures = 1;
constexpr int kExitBadInput = 2;

int run_verify(int m, bool distinct, const std::string& algorithm, const std::string& format,
               const std::string& out_path, int threads) {
  cdws::VerifyOptions options;
  options.distinct_rotations = distinct;
  options.threads = threads;
  if (algorithm == "fast") {
    const auto gate = cdws::transfer_oracle_gate();
    if (!gate.passed) {
      std::cerr << "fast evaluator disagrees with the trace oracle on "
                << gate.first_mismatch->to_string() << "; refusing to use it\n";
      return kExitFailures;
    }
    options.algorithm = cdws::Sl2Algorithm::kTransfer;
  }
  const auto summary = cdws::verify_conjecture(m, options);

  std::ostringstream body;
  if (format == "json") {
    body << cdws::to_json(summary).dump(2) << '\n';
  } else if (format == "csv") {
    body << cdws::csv_header() << '\n';
    for (const auto& r : summary.reports) {
      body << cdws::to_csv_row(r) << '\n';
    }
  } else {
    cdws::write_table(body, summary);
  }

  if (out_path.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream file(out_path);
    if (!file) {
      std::cerr << "cannot open " << out_path << " for writing\n";
      return kExitBadInput;
    }
    file << body.str();
    std::cout << cdws::to_json(summary, false).dump(2) << '\n';
  }
  return summary.all_passed() ? 0 : kExitFailures;
}

json eval_weight(const std::string& ws, const cdws::ChordDiagram& d, const std::string& lambda_text) {
  json out{{"ws", ws}, {"diagram", cdws::to_json(d)}};
  if (ws == "sl2") {
    out["value"] = cdws::to_json(cdws::sl2_weight(d), "c");
  } else if (ws == "sl2-lambda") {
    const cdws::Rational lambda = cdws::parse_rational(lambda_text);
    out["lambda"] = cdws::to_string(lambda);
    out["value"] = cdws::to_json(cdws::sl2_lambda_weight(d, lambda), "c_" + cdws::to_string(lambda));
  } else if (ws == "conway") {
    out["value"] = cdws::to_string(cdws::conway_weight(d));
  } else if (ws == "deframed-sl2") {
    out["value"] = cdws::to_json(cdws::deframe_sl2(d), "c");
  } else if (ws == "jj") {
    out["value"] = cdws::to_string(cdws::jj_weight(d));
    out["b"] = cdws::to_json(cdws::jj_k_polynomial(d), "k");
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chord-diagram weight systems and primitive projections"};
  app.require_subcommand(1);

  int m = 1;
  bool distinct = false;
  std::string algorithm = "trace";
  std::string format = "json";
  std::string out_path;
  int threads = 1;
  auto* verify = app.add_subcommand("verify", "Check the R_m / Conway / sl2 chain on all diagrams of degree 2m");
  verify->add_option("--m", m, "Half the diagram degree")->required()->check(CLI::Range(1, 8));
  verify->add_flag("--distinct-rotations", distinct, "One diagram per rotation class");
  verify->add_option("--algorithm", algorithm, "sl2 evaluator")->check(CLI::IsMember({"trace", "fast"}));
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv", "table"}));
  verify->add_option("--out", out_path, "Write the report here; stdout gets the summary");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1, 256));

  int degree = 0;
  bool enum_distinct = false;
  auto* enumerate = app.add_subcommand("enumerate", "List all chord diagrams of a degree");
  enumerate->add_option("--degree", degree, "Number of chords")->required()->check(CLI::Range(0, 8));
  enumerate->add_flag("--distinct-rotations", enum_distinct, "One diagram per rotation class");

  std::string ws;
  std::string code;
  std::string lambda_text = "1";
  auto* eval = app.add_subcommand("eval", "Evaluate a weight system on a diagram");
  eval->add_option("--ws", ws, "Weight system")
      ->required()
      ->check(CLI::IsMember({"sl2", "sl2-lambda", "conway", "deframed-sl2", "jj"}));
  eval->add_option("--diagram", code, "Gauss code, e.g. 1212")->required();
  eval->add_option("--lambda", lambda_text, "Form scale for sl2-lambda, as P/Q");

  auto* project = app.add_subcommand("project", "Primitive projection as a partition combination");
  project->add_option("--diagram", code, "Gauss code")->required();

  int k = 1;
  auto* rk = app.add_subcommand("rk", "Signed circuit count R_k");
  rk->add_option("--diagram", code, "Gauss code")->required();
  rk->add_option("--k", k, "Half the circuit length")->required()->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) {
      return run_verify(m, distinct, algorithm, format, out_path, threads);
    }
    if (*enumerate) {
      json diagrams = json::array();
      for (const auto& d : cdws::enumerate_matchings(degree, enum_distinct)) {
        diagrams.push_back(cdws::to_json(d));
      }
      std::cout << json{{"degree", degree}, {"count", diagrams.size()}, {"diagrams", diagrams}}.dump()
                << '\n';
      return 0;
    }
    const auto d = cdws::parse_gauss_code(code);
    if (*eval) {
      std::cout << eval_weight(ws, d, lambda_text).dump() << '\n';
    } else if (*project) {
      std::cout << cdws::to_json(cdws::primitive_projection(d)).dump() << '\n';
    } else if (*rk) {
      std::cout << json{{"R_k", cdws::to_string(cdws::r_k(d, k))}}.dump() << '\n';
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return 0;
}
