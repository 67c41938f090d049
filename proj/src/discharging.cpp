#include "wdc/discharging.hpp"

#include <algorithm>
#include <sstream>

#include "wdc/error.hpp"
#include "wdc/faces.hpp"
#include "wdc/metrics.hpp"
#include "wdc/pipeline.hpp"
#include "wdc/sparsifiers.hpp"

namespace wdc {

std::string_view to_string(ChargePhase phase) {
  switch (phase) {
    case ChargePhase::Initial:
      return "initial";
    case ChargePhase::AfterPhase1:
      return "after_phase1";
    case ChargePhase::Final:
      return "final";
  }
  return "?";
}

Rational ChargeLedger::total() const {
  Rational sum = 0;
  for (const Rational& r : vertex_charges) sum += r;
  for (const Rational& r : face_charges) sum += r;
  return sum;
}

DischargeRules DischargeRules::for_c(int c) {
  DischargeRules r;
  r.c = c;
  if (c == 2) {
    r.t = 4;
    r.pivot_degree = 4;
    r.low_degree = 3;
    r.face_scale = 1;
    r.send = Rational(1, 11);
    r.forward = Rational(1, 99);
    r.epsilon = Rational(1, 3000);
    r.beta_ratio = Rational(1, 1500);
    r.low_per_beta = 5;
    r.total_per_beta = 15;
    r.across_faces = true;
  } else if (c == 3) {
    r.t = 3;
    r.pivot_degree = 6;
    r.low_degree = 5;
    r.face_scale = 2;
    r.send = Rational(1, 8);
    r.forward = Rational(1, 56);
    r.epsilon = Rational(1, 1000);
    r.beta_ratio = Rational(1, 1000);
    r.low_per_beta = 4;
    r.total_per_beta = 16;
    r.across_faces = false;
  } else {
    throw Error(ErrorCode::InvalidInput, "c must be 2 or 3");
  }
  return r;
}

namespace {

// (giver, receiver) pairs of one vertex round, in a fixed order.
std::vector<std::pair<Vertex, Vertex>> vertex_targets(const EmbeddedGraph& g, const FaceStructure& fs,
                                                      const DischargeRules& rules, Vertex v) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex w : g.rotation(v)) out.emplace_back(v, w);
  if (!rules.across_faces) return out;
  for (int f : fs.faces_at(g, v)) {
    const Face& face = fs.face(f);
    if (face.length != rules.t || !face.is_cycle) continue;
    for (int i = 0; i < face.length; ++i) {
      if (face.walk[i].from == v) out.emplace_back(v, face.walk[(i + 2) % face.length].from);
    }
  }
  return out;
}

}  // namespace

DischargeReport run_discharge(const EmbeddedGraph& g, int c) {
  const DischargeRules rules = DischargeRules::for_c(c);
  const FaceStructure fs = trace_faces(g);
  const int n = g.num_vertices();
  const int nf = fs.num_faces();

  DischargeReport rep;
  rep.c = c;
  rep.num_vertices = n;
  rep.num_edges = g.num_edges();
  rep.num_faces = nf;
  for (const Face& f : fs.faces()) rep.beta += f.length - rules.t;
  for (Vertex v = 0; v < n; ++v) rep.low_degree_count += g.degree(v) <= rules.low_degree;

  ChargeLedger ledger;
  ledger.phase = ChargePhase::Initial;
  ledger.vertex_charges.resize(n);
  ledger.face_charges.resize(nf);
  for (Vertex v = 0; v < n; ++v) {
    const int d = g.degree(v);
    ledger.vertex_charges[v] = d <= rules.low_degree ? Rational(1) : Rational(d - rules.pivot_degree);
  }
  for (int f = 0; f < nf; ++f) ledger.face_charges[f] = Rational(rules.face_scale * fs.face(f).length - 2 * c);
  rep.ledgers.push_back(ledger);

  rep.received.assign(n, Rational(0));
  ledger.phase = ChargePhase::AfterPhase1;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == rules.pivot_degree) continue;
    for (const auto& [from, to] : vertex_targets(g, fs, rules, v)) {
      ledger.vertex_charges[from] -= rules.send;
      ledger.vertex_charges[to] += rules.send;
      rep.received[to] += rules.send;
    }
  }
  for (int f = 0; f < nf; ++f) {
    const Face& face = fs.face(f);
    if (face.length <= rules.t) continue;
    for (const Dart& d : face.walk) {
      ledger.face_charges[f] -= rules.send;
      ledger.vertex_charges[d.from] += rules.send;
      rep.received[d.from] += rules.send;
    }
  }
  rep.ledgers.push_back(ledger);

  ledger.phase = ChargePhase::Final;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) != rules.pivot_degree || rep.received[v] <= 0) continue;
    for (const auto& [from, to] : vertex_targets(g, fs, rules, v)) {
      ledger.vertex_charges[from] -= rules.forward;
      ledger.vertex_charges[to] += rules.forward;
    }
  }
  rep.ledgers.push_back(ledger);

  const ChargeLedger& fin = rep.ledgers.back();
  const Rational total0 = rep.ledgers[0].total();
  rep.conserved = rep.ledgers[1].total() == total0 && fin.total() == total0;
  if (!rep.conserved) rep.alarms.push_back("charge not conserved");

  rep.faces_nonnegative = true;
  rep.min_face_charge = nf ? fin.face_charges[0] : Rational(0);
  for (int f = 0; f < nf; ++f) {
    rep.min_face_charge = std::min(rep.min_face_charge, fin.face_charges[f]);
    if (fin.face_charges[f] < 0 && rep.faces_nonnegative) {
      rep.faces_nonnegative = false;
      rep.alarms.push_back("face " + std::to_string(f) + " ends with " + to_string(fin.face_charges[f]));
    }
  }
  rep.vertices_above_threshold = true;
  rep.min_vertex_charge = n ? fin.vertex_charges[0] : Rational(0);
  Rational vertex_total = 0;
  for (Vertex v = 0; v < n; ++v) {
    vertex_total += fin.vertex_charges[v];
    rep.min_vertex_charge = std::min(rep.min_vertex_charge, fin.vertex_charges[v]);
    if (fin.vertex_charges[v] < rules.forward && rep.vertices_above_threshold) {
      rep.vertices_above_threshold = false;
      rep.alarms.push_back("vertex " + std::to_string(v) + " ends with " + to_string(fin.vertex_charges[v]) +
                           " < " + to_string(rules.forward));
    }
  }
  rep.vertex_total_bound = vertex_total < Rational(rules.total_per_beta) * Rational(rep.beta);
  if (!rep.vertex_total_bound) {
    rep.alarms.push_back("vertex total " + to_string(vertex_total) + " not below " +
                         std::to_string(rules.total_per_beta) + " beta");
  }
  rep.sparse = sparsity_check(g, Rational(c) - rules.epsilon, Rational(30));
  if (!rep.sparse) rep.alarms.push_back("|E| exceeds (c - epsilon)|V| + 30");
  rep.beta_bound = Rational(rep.beta) >= Rational(n) * rules.beta_ratio;
  if (!rep.beta_bound) rep.alarms.push_back("beta below |V| * " + to_string(rules.beta_ratio));
  rep.low_degree_bound = rep.low_degree_count <= static_cast<long long>(rules.low_per_beta) * rep.beta;
  if (!rep.low_degree_bound) rep.alarms.push_back("too many low-degree vertices for beta");
  return rep;
}

void check_discharge_preconditions(const EmbeddedGraph& g, int c) {
  const DischargeRules rules = DischargeRules::for_c(c);
  auto fail = [](const std::string& what) { throw Error(ErrorCode::PreconditionViolated, what); };
  const int n = g.num_vertices();
  if (n <= rules.t + 1) fail("at most " + std::to_string(rules.t + 1) + " vertices");
  int components = 0;
  component_ids(g, &components);
  if (components != 1) fail("graph is not connected");
  FaceStructure fs;
  try {
    fs = trace_faces(g);
  } catch (const Error& e) {
    fail(std::string("not a plane embedding: ") + e.what());
  }
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) < c) fail("vertex " + std::to_string(v) + " has degree below " + std::to_string(c));
  }
  const auto gir = girth(g);
  if (gir && *gir < rules.t) fail("girth " + std::to_string(*gir) + " below " + std::to_string(rules.t));
  const auto seps = find_separating_t_cycles(g, fs, rules.t);
  if (!seps.empty()) fail("separating " + std::to_string(rules.t) + "-cycle through vertex " +
                          std::to_string(seps.front().cycle.front()));
  const auto apps = find_appearances(g, fs, c);
  if (!apps.empty()) {
    fail(std::string("sparsifier ") + std::string(to_string(apps.front().id)) + " appears at vertex " +
         std::to_string(apps.front().image.front()));
  }
}

DischargeReport audit_discharge(const EmbeddedGraph& g, int c) {
  check_discharge_preconditions(g, c);
  return run_discharge(g, c);
}

std::string DischargeReport::dump() const {
  std::ostringstream os;
  os << "discharge c " << c << "\n";
  os << "vertices " << num_vertices << " edges " << num_edges << " faces " << num_faces << "\n";
  os << "beta " << beta << " low_degree " << low_degree_count << "\n";
  for (const ChargeLedger& l : ledgers) os << "total " << to_string(l.phase) << " " << to_string(l.total()) << "\n";
  os << "min_vertex " << to_string(min_vertex_charge) << " min_face " << to_string(min_face_charge) << "\n";
  auto verdict = [&](const char* name, bool ok) { os << "verdict " << name << " " << (ok ? "pass" : "FAIL") << "\n"; };
  verdict("conserved", conserved);
  verdict("faces_nonnegative", faces_nonnegative);
  verdict("vertices_above_threshold", vertices_above_threshold);
  verdict("vertex_total_bound", vertex_total_bound);
  verdict("sparse", sparse);
  verdict("beta_bound", beta_bound);
  verdict("low_degree_bound", low_degree_bound);
  for (const std::string& a : alarms) os << "alarm " << a << "\n";
  if (ledgers.size() == 3) {
    for (std::size_t v = 0; v < ledgers[0].vertex_charges.size(); ++v) {
      os << "vertex " << v << " received " << to_string(received[v]);
      for (const ChargeLedger& l : ledgers) os << " " << to_string(l.phase) << " " << to_string(l.vertex_charges[v]);
      os << "\n";
    }
    for (std::size_t f = 0; f < ledgers[0].face_charges.size(); ++f) {
      os << "face " << f;
      for (const ChargeLedger& l : ledgers) os << " " << to_string(l.phase) << " " << to_string(l.face_charges[f]);
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace wdc
