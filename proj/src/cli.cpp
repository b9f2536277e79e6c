#include "hyper3/cli.hpp"

#include <cstdio>
#include <ostream>
#include <string_view>

#include "CLI11.hpp"

namespace hyper3 {

namespace {

// "%.12g" with -0 canonicalized, so output is byte-stable.
std::string fmt_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::string(buf);
}

std::string json_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out.push_back('\\');
      out.push_back(c);
    } else if (static_cast<unsigned char>(c) < 0x20) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "\\u%04x", c);
      out += buf;
    } else {
      out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

const char* json_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

ReportRecord make_report(Hypergraph g) {
  ReportRecord r;
  r.hypergraph = format_hypergraph(g);
  r.lu_class = lu_class_of(g);
  r.slocc_class = slocc_class_structural(g);
  r.state = build_state_gates(g);
  r.measures = fingerprint(r.state);
  r.entangled_graph = entangled_graph_of(g);
  r.schmidt_measure = schmidt_measure(g);
  return r;
}

void write_report_json(std::ostream& os, const ReportRecord& r) {
  std::string j = "{\"hypergraph\":" + json_quote(r.hypergraph);
  j += ",\"lu_class\":" + json_quote(to_string(r.lu_class));
  j += ",\"slocc_class\":" + json_quote(to_string(r.slocc_class));
  j += ",\"measures\":{\"e2_a\":" + fmt_double(r.measures.e2_a);
  j += ",\"e2_b\":" + fmt_double(r.measures.e2_b);
  j += ",\"e2_c\":" + fmt_double(r.measures.e2_c);
  j += ",\"tau\":" + fmt_double(r.measures.tau);
  j += ",\"c_ab\":" + fmt_double(r.measures.c_ab);
  j += ",\"c_ac\":" + fmt_double(r.measures.c_ac);
  j += ",\"c_bc\":" + fmt_double(r.measures.c_bc);
  j += "},\"entangled_graph\":[";
  bool first = true;
  for (const std::string& label : r.entangled_graph.edge_labels()) {
    if (!first) j += ",";
    j += json_quote(label);
    first = false;
  }
  j += "],\"schmidt_measure\":" + std::to_string(r.schmidt_measure);
  j += ",\"state\":[";
  for (unsigned i = 0; i < state_dim; ++i) {
    if (i) j += ",";
    j += fmt_double(r.state[i]);
  }
  j += "]}";
  os << j << '\n';
}

void write_entangled_graph_dot(std::ostream& os, const ReportRecord& r) {
  os << "graph entangled {\n";
  for (Vertex v : all_vertices) os << "  " << vertex_label(v) << ";\n";
  for (int i = 0; i < 3; ++i)
    if (r.entangled_graph.has_pair(i))
      os << "  " << vertex_label(vertex_pairs[i].first) << " -- "
         << vertex_label(vertex_pairs[i].second) << ";\n";
  os << "}\n";
}

void write_audit_json(std::ostream& os, const AuditReport& report) {
  std::string j = "{\"partition_ok\":";
  j += json_bool(report.partition_ok);
  j += ",\"class_sizes\":{";
  for (LUClass c : all_lu_classes) {
    if (c != LUClass::G0) j += ",";
    j += json_quote(to_string(c)) + ":" +
         std::to_string(report.class_sizes[static_cast<int>(c)]);
  }
  j += "},\"fingerprint_mismatches\":[";
  bool first = true;
  for (const FingerprintMismatch& m : report.fingerprint_mismatches) {
    if (!first) j += ",";
    j += "{\"hypergraph\":" + json_quote(format_hypergraph(m.g));
    j += ",\"field\":" + json_quote(m.field);
    j += ",\"expected\":" + fmt_double(m.expected);
    j += ",\"got\":" + fmt_double(m.got) + "}";
    first = false;
  }
  j += "],\"w_type_count\":" + std::to_string(report.w_type_count);
  j += ",\"monogamy_max_error\":" + fmt_double(report.monogamy_max_error);
  j += ",\"schmidt_ok\":";
  j += json_bool(report.schmidt_ok);
  j += ",\"slocc_agreement_ok\":";
  j += json_bool(report.slocc_agreement_ok);
  j += ",\"entangled_graph_ok\":";
  j += json_bool(report.entangled_graph_ok);
  j += ",\"passed\":";
  j += json_bool(report.passed());
  j += "}";
  os << j << '\n';
}

void write_audit_summary(std::ostream& os, const AuditReport& report) {
  std::array<int, 6> mismatch_counts{};
  for (const FingerprintMismatch& m : report.fingerprint_mismatches)
    mismatch_counts[static_cast<int>(lu_class_of(m.g))]++;

  os << "class  size  expected  e2_a   e2_b   e2_c   tau    c_ab   c_ac   "
        "c_bc   status\n";
  for (LUClass c : all_lu_classes) {
    const int i = static_cast<int>(c);
    const Fingerprint& row = expected_fingerprint(c);
    const bool ok = report.class_sizes[i] == expected_class_sizes[i] &&
                    mismatch_counts[i] == 0;
    char line[160];
    std::snprintf(line, sizeof line,
                  "%-5s  %4d  %8d  %-5g  %-5g  %-5g  %-5g  %-5g  %-5g  %-5g"
                  "  %s\n",
                  to_string(c), report.class_sizes[i], expected_class_sizes[i],
                  row.e2_a, row.e2_b, row.e2_c, row.tau, row.c_ab, row.c_ac,
                  row.c_bc, ok ? "ok" : "FAIL");
    os << line;
  }
  os << "partition: " << (report.partition_ok ? "ok" : "FAIL") << '\n';
  os << "fingerprint mismatches: " << report.fingerprint_mismatches.size()
     << '\n';
  os << "W-type classifications: " << report.w_type_count << '\n';
  os << "max monogamy error: " << fmt_double(report.monogamy_max_error)
     << '\n';
  os << "schmidt consistency: " << (report.schmidt_ok ? "ok" : "FAIL") << '\n';
  os << "slocc agreement: " << (report.slocc_agreement_ok ? "ok" : "FAIL")
     << '\n';
  os << "entangled-graph pattern: "
     << (report.entangled_graph_ok ? "ok" : "FAIL") << '\n';
  os << "audit: " << (report.passed() ? "PASS" : "FAIL") << '\n';
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Three-qubit hypergraph-state entanglement classifier",
               "hyper3"};
  app.require_subcommand(1);

  const char* text_help =
      "Hypergraph text: semicolon-separated edges of letters A,B,C; "
      "\"{}\" is the empty edge; \"\" is the edgeless hypergraph";

  std::string classify_text;
  bool classify_dot = false;
  CLI::App* classify = app.add_subcommand(
      "classify", "Print the full classification record of one hypergraph");
  classify->add_option("hypergraph", classify_text, text_help)->required();
  classify->add_flag("--dot", classify_dot,
                     "Emit the entangled graph as DOT instead of JSON");

  std::string measures_text;
  CLI::App* measures_cmd = app.add_subcommand(
      "measures", "Like classify, without the DOT graph output option");
  measures_cmd->add_option("hypergraph", measures_text, text_help)->required();

  std::string graph_text;
  CLI::App* graph_cmd = app.add_subcommand(
      "entangled-graph", "Print the entangled graph of one hypergraph as DOT");
  graph_cmd->add_option("hypergraph", graph_text, text_help)->required();

  std::string class_filter;
  CLI::App* enumerate_cmd = app.add_subcommand(
      "enumerate", "Print one record per hypergraph, all 256, as JSON lines");
  enumerate_cmd
      ->add_option("--class", class_filter, "Restrict to one class, e.g. G4")
      ->check(CLI::IsMember({"G0", "G1", "G2", "G3", "G4", "G5"}));

  bool audit_json = false;
  CLI::App* audit_cmd = app.add_subcommand(
      "audit", "Recompute and verify the classification of all 256 "
               "hypergraphs; exit 0 only if every check passes");
  audit_cmd->add_flag("--json", audit_json, "Emit the full report as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (classify->parsed()) {
      const ReportRecord r = make_report(parse_hypergraph(classify_text));
      if (classify_dot)
        write_entangled_graph_dot(out, r);
      else
        write_report_json(out, r);
      return 0;
    }
    if (measures_cmd->parsed()) {
      write_report_json(out, make_report(parse_hypergraph(measures_text)));
      return 0;
    }
    if (graph_cmd->parsed()) {
      write_entangled_graph_dot(out,
                                make_report(parse_hypergraph(graph_text)));
      return 0;
    }
    if (enumerate_cmd->parsed()) {
      for (Hypergraph g : enumerate_all()) {
        if (!class_filter.empty() &&
            class_filter != to_string(lu_class_of(g)))
          continue;
        write_report_json(out, make_report(g));
      }
      return 0;
    }
    // require_subcommand(1) leaves audit as the only remaining case.
    const AuditReport report = audit_all();
    if (audit_json)
      write_audit_json(out, report);
    else
      write_audit_summary(out, report);
    return report.passed() ? 0 : 1;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, out, err);
}

}  // namespace hyper3
