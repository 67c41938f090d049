#pragma once

#include <string>
#include <vector>

#include "wdc/graph.hpp"
#include "wdc/rational.hpp"

namespace wdc {

enum class ChargePhase { Initial, AfterPhase1, Final };

std::string_view to_string(ChargePhase phase);

struct ChargeLedger {
  ChargePhase phase = ChargePhase::Initial;
  std::vector<Rational> vertex_charges;
  std::vector<Rational> face_charges;  // indexed by face id of trace_faces

  Rational total() const;
};

// Constants of the two discharging arguments.
struct DischargeRules {
  int c = 2;
  int t = 4;             // length of the tight faces
  int pivot_degree = 4;  // vertices of this degree only forward charge
  int low_degree = 3;    // vertices up to this degree start with charge 1
  int face_scale = 1;    // a face starts with face_scale * |f| - 2 * c
  Rational send;         // first round
  Rational forward;      // second round
  Rational epsilon;
  Rational beta_ratio;   // beta >= |V| * beta_ratio
  int low_per_beta = 5;  // low-degree vertices <= low_per_beta * beta
  int total_per_beta = 15;  // final vertex total < total_per_beta * beta
  // Charge also goes to the vertex opposite over each tight face.
  bool across_faces = true;

  static DischargeRules for_c(int c);
};

struct DischargeReport {
  int c = 2;
  int num_vertices = 0;
  int num_edges = 0;
  int num_faces = 0;
  long long beta = 0;     // sum of (|f| - t) over faces
  int low_degree_count = 0;
  std::vector<ChargeLedger> ledgers;  // initial, after phase 1, final
  std::vector<Rational> received;     // phase-1 receipts per vertex

  Rational min_vertex_charge;
  Rational min_face_charge;

  bool conserved = false;
  bool faces_nonnegative = false;
  bool vertices_above_threshold = false;
  bool vertex_total_bound = false;
  bool sparse = false;
  bool beta_bound = false;
  bool low_degree_bound = false;

  // One line per failed verdict.
  std::vector<std::string> alarms;

  bool pass() const { return alarms.empty(); }
  // Structured text: a header, the verdicts, then one record per vertex and face.
  std::string dump() const;
};

// Throws PreconditionViolated naming the first failing condition: connected,
// minimum degree >= c, girth >= t, no separating t-cycles, no appearance of a
// c-sparsifier, more than t + 1 vertices.
void check_discharge_preconditions(const EmbeddedGraph& g, int c);

// Runs both rounds with exact arithmetic and records the verdicts.
DischargeReport audit_discharge(const EmbeddedGraph& g, int c);

// Ledger only, without the precondition checks.
DischargeReport run_discharge(const EmbeddedGraph& g, int c);

}  // namespace wdc
