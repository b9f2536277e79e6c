#include "hyper3/classifier.hpp"

#include <cmath>
#include <stdexcept>

#include "hyper3/tolerances.hpp"

namespace hyper3 {

SLOCCClass slocc_class_structural(Hypergraph g) {
  switch (lu_class_of(g)) {
    case LUClass::G0: return SLOCCClass::A_B_C;
    case LUClass::G1: return SLOCCClass::A_BC;
    case LUClass::G2: return SLOCCClass::B_AC;
    case LUClass::G3: return SLOCCClass::C_AB;
    default: return SLOCCClass::GHZ;  // G4 and G5
  }
}

SLOCCClass slocc_class_from_measures(const Fingerprint& f) {
  const bool za = f.e2_a < zero_measure_threshold;
  const bool zb = f.e2_b < zero_measure_threshold;
  const bool zc = f.e2_c < zero_measure_threshold;
  const int zeros = int(za) + int(zb) + int(zc);
  switch (zeros) {
    case 3:
      return SLOCCClass::A_B_C;
    case 2:
      throw std::invalid_argument(
          "slocc_class_from_measures: exactly two vanishing entropic "
          "measures cannot occur for a pure three-qubit state");
    case 1:
      return za ? SLOCCClass::A_BC : (zb ? SLOCCClass::B_AC
                                         : SLOCCClass::C_AB);
    default:
      return f.tau > zero_measure_threshold ? SLOCCClass::GHZ : SLOCCClass::W;
  }
}

std::vector<std::string> EntangledGraph::edge_labels() const {
  std::vector<std::string> out;
  for (int i = 0; i < 3; ++i)
    if (has_pair(i)) out.push_back(pair_label(vertex_pairs[i]));
  return out;
}

EntangledGraph entangled_graph_of(Hypergraph g) {
  const StateVector s = build_state_gates(g);
  EntangledGraph eg;
  for (int i = 0; i < 3; ++i)
    if (concurrence_pair(s, vertex_pairs[i]) > zero_measure_threshold)
      eg.pair_mask |= static_cast<std::uint8_t>(1u << i);
  return eg;
}

bool AuditReport::passed() const {
  return partition_ok && fingerprint_mismatches.empty() && w_type_count == 0 &&
         monogamy_max_error < measure_tol && schmidt_ok &&
         slocc_agreement_ok && entangled_graph_ok;
}

const Fingerprint& expected_fingerprint(LUClass c) {
  static const std::array<Fingerprint, 6> rows{{
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.5, 0.5, 0.0, 0.0, 0.0, 1.0},
      {0.5, 0.0, 0.5, 0.0, 0.0, 1.0, 0.0},
      {0.5, 0.5, 0.0, 0.0, 1.0, 0.0, 0.0},
      {0.5, 0.5, 0.5, 1.0, 0.0, 0.0, 0.0},
      {0.25, 0.25, 0.25, 0.25, 0.5, 0.5, 0.5},
  }};
  return rows[static_cast<int>(c)];
}

EntangledGraph expected_entangled_graph(LUClass c) {
  switch (c) {
    case LUClass::G1: return EntangledGraph{0b100};  // BC
    case LUClass::G2: return EntangledGraph{0b010};  // AC
    case LUClass::G3: return EntangledGraph{0b001};  // AB
    case LUClass::G5: return EntangledGraph{0b111};
    default: return EntangledGraph{0};  // G0, G4
  }
}

namespace {

constexpr const char* field_names[7] = {"e2_a", "e2_b", "e2_c", "tau",
                                        "c_ab", "c_ac", "c_bc"};

std::array<double, 7> as_array(const Fingerprint& f) {
  return {f.e2_a, f.e2_b, f.e2_c, f.tau, f.c_ab, f.c_ac, f.c_bc};
}

// |tau - (C_{X(YZ)}^2 - C_XY^2 - C_XZ^2)| at pivot X, with the
// one-vs-rest concurrence derived from the pivot's entropic measure.
double monogamy_error(const Fingerprint& f, Vertex pivot) {
  const double e2 = f.entropic(pivot);
  const double c_rest_sq = 4.0 * e2 * (1.0 - e2);
  double pair_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const VertexPair p = vertex_pairs[i];
    if (p.first == pivot || p.second == pivot) {
      const double c = f.concurrence(i);
      pair_sq += c * c;
    }
  }
  return std::abs(f.tau - (c_rest_sq - pair_sq));
}

}  // namespace

AuditReport audit_all(const FingerprintFn& fingerprint_of) {
  AuditReport report;
  report.schmidt_ok = true;
  report.slocc_agreement_ok = true;
  report.entangled_graph_ok = true;

  for (Hypergraph g : enumerate_all()) {
    const LUClass lu = lu_class_of(g);
    report.class_sizes[static_cast<int>(lu)]++;

    const Fingerprint f = fingerprint_of(g);
    const auto got = as_array(f);
    const auto want = as_array(expected_fingerprint(lu));
    for (int i = 0; i < 7; ++i)
      if (std::abs(got[i] - want[i]) > measure_tol)
        report.fingerprint_mismatches.push_back(
            {g, field_names[i], want[i], got[i]});

    for (Vertex pivot : all_vertices)
      report.monogamy_max_error =
          std::max(report.monogamy_max_error, monogamy_error(f, pivot));

    const int es = schmidt_measure(g);
    const bool product_class = lu == LUClass::G0;
    const bool all_e2_zero = f.e2_a < zero_measure_threshold &&
                             f.e2_b < zero_measure_threshold &&
                             f.e2_c < zero_measure_threshold;
    if (es != (product_class ? 0 : 1) || all_e2_zero != product_class)
      report.schmidt_ok = false;

    try {
      const SLOCCClass measured = slocc_class_from_measures(f);
      if (measured == SLOCCClass::W) report.w_type_count++;
      if (measured != slocc_class_structural(g))
        report.slocc_agreement_ok = false;
    } catch (const std::invalid_argument&) {
      // Two vanishing entropic measures: corrupt input, never thrown out
      // of the audit.
      report.slocc_agreement_ok = false;
    }

    if (entangled_graph_of(g) != expected_entangled_graph(lu))
      report.entangled_graph_ok = false;
  }

  report.partition_ok = report.class_sizes == expected_class_sizes;
  return report;
}

AuditReport audit_all() {
  return audit_all([](Hypergraph g) { return fingerprint(g); });
}

}  // namespace hyper3
