#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hyper3/classifier.hpp"
#include "hyper3/hypergraph.hpp"
#include "hyper3/measures.hpp"
#include "hyper3/state.hpp"

// Command-line front end. Subcommands: classify, measures, enumerate,
// audit, entangled-graph. Exit codes: 0 success, 1 numeric or audit
// failure, 2 usage or parse error. All output is deterministic: fixed
// JSON key order, doubles printed with 12 significant digits.

namespace hyper3 {

// Everything the CLI reports about one hypergraph.
struct ReportRecord {
  std::string hypergraph;  // canonical text form
  LUClass lu_class = LUClass::G0;
  SLOCCClass slocc_class = SLOCCClass::A_B_C;
  Fingerprint measures;
  EntangledGraph entangled_graph;
  int schmidt_measure = 0;
  StateVector state;
};

ReportRecord make_report(Hypergraph g);

// Single-line JSON object, fixed key order, trailing newline.
void write_report_json(std::ostream& os, const ReportRecord& r);

// Undirected DOT graph with nodes A, B, C and one edge per
// entangled-graph edge.
void write_entangled_graph_dot(std::ostream& os, const ReportRecord& r);

void write_audit_json(std::ostream& os, const AuditReport& report);
void write_audit_summary(std::ostream& os, const AuditReport& report);

// Dispatches argv (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace hyper3
