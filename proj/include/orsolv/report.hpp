#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "orsolv/classifier.hpp"
#include "orsolv/presentation.hpp"

namespace orsolv {

struct CertificateEntry {
  std::string kind;
  nlohmann::json witness;
  std::string paper_ref;
};

struct MagnusSection {
  std::string eliminated;
  std::string r0;
  long long mu = 0;
  long long nu = 0;
  long long span = 0;
  bool applicable = false;
};

struct OracleSection {
  std::string word;
  bool separated = false;
  std::string group;        // separating group name, empty when not separated
  std::vector<int> images;  // generator images, empty when not separated
  std::string abelianization;
};

struct CounterexampleSection {
  std::string family;
  std::string a;
  std::string b;
};

/* Everything the tool reports about one presentation. The text and JSON
 * renderings carry the same fields. */
struct AnalysisReport {
  std::string schema = "orsolv/1";
  std::vector<std::string> generators;
  std::string relator;
  std::string status;
  std::vector<CertificateEntry> certificates;
  std::optional<CounterexampleSection> counterexample;
  std::optional<MagnusSection> magnus;
  std::optional<OracleSection> oracle;
  double timing_ms = 0.0;
};

std::string status_string(Status s);  // lowercase wire form

nlohmann::json witness_to_json(const OneRelatorPresentation& p, const Certificate& c);

/* Assembles the report: verdict, certificates with JSON witnesses, and a
 * rewriting section whenever some generator is eliminable (the first
 * applicable verdict if any, otherwise the first verdict). */
AnalysisReport build_report(const OneRelatorPresentation& p, const Verdict& v,
                            double timing_ms);

nlohmann::json to_json(const AnalysisReport& r);
AnalysisReport report_from_json(const nlohmann::json& j);
std::string render_text(const AnalysisReport& r);

}  // namespace orsolv
