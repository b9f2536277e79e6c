#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyper3/hypergraph.hpp"
#include "hyper3/measures.hpp"

// SLOCC classification, entangled graphs, and the exhaustive audit over
// all 256 hypergraphs.

namespace hyper3 {

enum class SLOCCClass : std::uint8_t { A_B_C = 0, A_BC, B_AC, C_AB, GHZ, W };

constexpr const char* to_string(SLOCCClass c) {
  constexpr const char* names[] = {"A-B-C", "A-BC", "B-AC",
                                   "C-AB",  "GHZ",  "W"};
  return names[static_cast<int>(c)];
}

// SLOCC class from the structural LU class: G0 -> A-B-C, G1 -> A-BC,
// G2 -> B-AC, G3 -> C-AB, G4 and G5 -> GHZ. Never returns W.
SLOCCClass slocc_class_structural(Hypergraph g);

// SLOCC class from measured values alone, with vanishing threshold
// zero_measure_threshold: all E2 zero -> A-B-C; exactly one zero -> the
// matching bipartite class; none zero -> GHZ if tau > 0 else W. Exactly
// two vanishing E2 values are impossible for a pure three-qubit state
// and raise std::invalid_argument.
SLOCCClass slocc_class_from_measures(const Fingerprint& f);

// Graph on {A,B,C} with an edge wherever the pairwise concurrence is
// above zero_measure_threshold. Edge bit i matches vertex_pairs[i].
struct EntangledGraph {
  std::uint8_t pair_mask = 0;

  bool has_pair(int pair_index) const { return (pair_mask >> pair_index) & 1u; }
  int edge_count() const {
    return ((pair_mask >> 2) & 1) + ((pair_mask >> 1) & 1) + (pair_mask & 1);
  }
  // Labels in canonical order, e.g. {"AB", "AC", "BC"}.
  std::vector<std::string> edge_labels() const;

  friend bool operator==(EntangledGraph, EntangledGraph) = default;
};

EntangledGraph entangled_graph_of(Hypergraph g);

// One fingerprint field that disagrees with its class's expected value.
struct FingerprintMismatch {
  Hypergraph g;
  std::string field;
  double expected = 0.0;
  double got = 0.0;
};

struct AuditReport {
  std::array<int, 6> class_sizes{};  // indexed by LUClass
  std::vector<FingerprintMismatch> fingerprint_mismatches;
  int w_type_count = 0;
  bool partition_ok = false;
  double monogamy_max_error = 0.0;
  bool schmidt_ok = false;
  bool slocc_agreement_ok = false;
  bool entangled_graph_ok = false;

  bool passed() const;
};

inline constexpr std::array<int, 6> expected_class_sizes{16, 16, 16,
                                                         16, 64, 128};

// Expected fingerprint shared by every member of an LU class.
const Fingerprint& expected_fingerprint(LUClass c);

// Expected entangled graph shared by every member of an LU class.
EntangledGraph expected_entangled_graph(LUClass c);

using FingerprintFn = std::function<Fingerprint(Hypergraph)>;

// Enumerates all 256 hypergraphs and checks: the class partition and its
// sizes; every fingerprint against its class's expected row; the W count
// from the measure-based classifier; the monogamy identity at all three
// pivots; Schmidt-measure consistency with G0; agreement of structural
// and measure-based SLOCC classes; and the per-class entangled-graph
// pattern. Failures are recorded in the report, never thrown. The
// fingerprint function is injectable so tests can corrupt it.
AuditReport audit_all(const FingerprintFn& fingerprint_of);
AuditReport audit_all();

}  // namespace hyper3
