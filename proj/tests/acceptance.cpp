// Acceptance runner: one PASS/FAIL line per criterion.  Exit status 0 iff
// every selected criterion passes.
//
//   wdc_acceptance [--only 1,2,...] [--report FILE]

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "instances.hpp"
#include "wdc/cli.hpp"
#include "wdc/discharging.hpp"
#include "wdc/error.hpp"
#include "wdc/generators.hpp"
#include "wdc/io.hpp"
#include "wdc/metrics.hpp"
#include "wdc/oracle.hpp"
#include "wdc/pipeline.hpp"
#include "wdc/random.hpp"
#include "wdc/sparsifiers.hpp"
#include "wdc/stacks.hpp"

using namespace wdc;

namespace {

// Pinned thresholds.  All checks are exact; nothing is sampled with slack.
constexpr int kMaxUniverse = 5;
constexpr int kStackTrials = 500;
constexpr int kStackMaxDepth = 4;
constexpr int kStack3Universe = 5;
constexpr int kStack4Universe = 4;
constexpr int kStack3Diameter = 2;
constexpr int kStack4Diameter = 4;
constexpr int kHexMax = 4;
constexpr int kAuditPerClass = 100;
constexpr int kAuditVertices = 150;
constexpr int kPipelinePerClass = 200;
constexpr int kPipelineMaxVertices = 500;
constexpr int kStructuralInstancesPerClass = 10;
constexpr int kStructuralSamplesPerInstance = 50;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::string report;  // everything the criterion computed, for the determinism rerun
};

void append(std::ostringstream& os, const Coloring& phi) {
  for (Vertex v = 0; v < phi.size(); ++v) {
    os << (v ? "," : "");
    if (phi.has(v)) {
      os << phi[v];
    } else {
      os << '-';
    }
  }
  os << "\n";
}

Outcome sparsifier_suite() {
  Outcome out;
  std::ostringstream rep;
  long long total = 0;
  int runs = 0;
  for (SparsifierId id : {SparsifierId::S1_c2, SparsifierId::S2_c2, SparsifierId::S1_c3, SparsifierId::S2_c3}) {
    for (int u = 1; u <= kMaxUniverse; ++u) {
      ++runs;
      try {
        const OracleReport r = exhaustive_sparsifier_check(id, u);
        rep << to_string(id) << " universe " << u << " " << r.to_text() << "\n";
        total += r.instances_checked;
        out.pass = out.pass && r.pass;
      } catch (const Error& e) {
        rep << to_string(id) << " universe " << u << " " << e.what() << "\n";
        out.pass = false;
      }
    }
  }
  out.summary = "sparsifier exhaustive suite: 4 sparsifiers x universes 1-" + std::to_string(kMaxUniverse) + ", " +
                std::to_string(runs) + " runs, " + std::to_string(total) + " list/multiset inputs";
  out.report = rep.str();
  return out;
}

Outcome stack_suites() {
  Outcome out;
  std::ostringstream rep;
  int fail3 = 0, fail4 = 0, max_depth = 0, max_vertices = 0;
  for (int trial = 0; trial < kStackTrials; ++trial) {
    const std::uint64_t seed = 100000 + trial;
    const EmbeddedGraph g = gen_random_stack(3, 1 + trial % kStackMaxDepth, seed);
    const auto cyc = outer_cycle(g, trace_faces(g));
    max_depth = std::max(max_depth, recognize_stack(g, cyc, 3).depth());
    max_vertices = std::max(max_vertices, g.num_vertices());
    Rng rng(seed);
    const ListAssignment lists = instances::random_lists(rng, g.num_vertices(), 3, kStack3Universe);
    Coloring psi(g.num_vertices());
    for (Vertex x : cyc) psi.set(x, rng.pick(lists[x]));
    const Vertex u = rng.pick(cyc);
    bool ok = true;
    try {
      const Coloring phi = color_3stack(g, cyc, u, lists, psi);
      std::set<Color> used;
      for (Vertex x : cyc) {
        ok = ok && phi.get(x) == psi.get(x);
        used.insert(phi[x]);
      }
      ok = ok && verify_coloring(g, phi, &lists, VerifyMode::weak(kStack3Diameter)).pass;
      const ComplianceReport cr = compliance_checks(g, cyc, phi, std::nullopt);
      for (int i = 0; i < 3; ++i) {
        if (cyc[i] != u || used.size() <= 2) ok = ok && cr.singleton[i];
      }
      ok = ok && component_in_closed_neighbourhoods(g, cyc, phi, u);
      rep << "3-stack " << trial << " u " << u << " ";
      append(rep, phi);
    } catch (const Error& e) {
      rep << "3-stack " << trial << " " << e.what() << "\n";
      ok = false;
    }
    fail3 += !ok;
  }
  for (int trial = 0; trial < kStackTrials; ++trial) {
    const std::uint64_t seed = 200000 + trial;
    const EmbeddedGraph g = gen_random_stack(4, 1 + trial % kStackMaxDepth, seed);
    const auto cyc = outer_cycle(g, trace_faces(g));
    max_depth = std::max(max_depth, recognize_stack(g, cyc, 4).depth());
    max_vertices = std::max(max_vertices, g.num_vertices());
    Rng rng(seed);
    const ListAssignment lists = instances::random_lists(rng, g.num_vertices(), 2, kStack4Universe);
    Coloring psi(g.num_vertices());
    for (Vertex x : cyc) psi.set(x, rng.pick(lists[x]));
    std::vector<Vertex> active;
    for (Vertex x : cyc) {
      if (is_active(g, cyc, x)) active.push_back(x);
    }
    bool ok = !active.empty();
    if (ok) {
      const Vertex v = rng.pick(active);
      try {
        const Coloring phi = color_4stack(g, cyc, v, lists, psi);
        for (Vertex x : cyc) ok = ok && phi.get(x) == psi.get(x);
        ok = ok && verify_coloring(g, phi, &lists, VerifyMode::weak(kStack4Diameter)).pass;
        const ComplianceReport cr = compliance_checks(g, cyc, phi, v);
        ok = ok && cr.psi_opaque && cr.v_compliant;
        rep << "4-stack " << trial << " v " << v << " ";
        append(rep, phi);
      } catch (const Error& e) {
        rep << "4-stack " << trial << " " << e.what() << "\n";
        ok = false;
      }
    }
    fail4 += !ok;
  }
  out.pass = fail3 == 0 && fail4 == 0;
  out.summary = "stack suites: " + std::to_string(kStackTrials - fail3) + "/" + std::to_string(kStackTrials) +
                " 3-stacks, " + std::to_string(kStackTrials - fail4) + "/" + std::to_string(kStackTrials) +
                " 4-stacks (depth <= " + std::to_string(max_depth) + ", up to " + std::to_string(max_vertices) +
                " vertices)";
  out.report = rep.str();
  return out;
}

Outcome lower_bounds() {
  Outcome out;
  std::ostringstream rep;
  long long checked = 0;
  for (int i = 0; i <= 2; ++i) {
    const OracleReport r = verify_lemma_nomo(i, 3);
    rep << "nomo " << i << " 3 " << r.to_text() << "\n";
    out.pass = out.pass && r.pass;
    checked += r.instances_checked;
  }
  for (int k = 1; k <= 4; ++k) {
    const OracleReport r = verify_hprime(1, k);
    rep << "hprime 1 " << k << " " << r.to_text() << "\n";
    out.pass = out.pass && r.pass && r.worst_value >= std::min(k - 1, 1);
    checked += r.instances_checked;
  }
  out.summary = "counterexample lower bounds: H(i,3) for i = 0..2 and H'(1,k) for k = 1..4, " +
                std::to_string(checked) + " colorings";
  out.report = rep.str();
  return out;
}

Outcome hex_suite() {
  Outcome out;
  std::ostringstream rep;
  long long checked = 0;
  for (int n = 2; n <= kHexMax; ++n) {
    const OracleReport r = verify_hex(n);
    rep << "hex " << n << " " << r.to_text() << "\n";
    out.pass = out.pass && r.pass && r.instances_checked == (1LL << (n * n));
    checked += r.instances_checked;
  }
  out.summary = "HEX crossings: n = 2.." + std::to_string(kHexMax) + ", " + std::to_string(checked) + " 2-colorings";
  out.report = rep.str();
  return out;
}

Outcome discharging_audit() {
  Outcome out;
  std::ostringstream rep;
  int counts[2] = {0, 0}, failures = 0;
  for (int c : {2, 3}) {
    std::vector<EmbeddedGraph> graphs;
    const double densities[3] = {0.0, 0.5, 0.9};
    for (int d = 0; d < 3; ++d) {
      const int want = kAuditPerClass / 3 + (d < kAuditPerClass % 3);
      auto batch = instances::audit_instances(want, kAuditVertices, c, 1 + 10000ull * d, densities[d]);
      graphs.insert(graphs.end(), batch.begin(), batch.end());
    }
    for (const EmbeddedGraph& g : graphs) {
      try {
        const DischargeReport r = audit_discharge(g, c);
        rep << r.dump();
        failures += !r.pass();
        ++counts[c - 2];
      } catch (const Error& e) {
        rep << "error " << e.what() << "\n";
        ++failures;
      }
    }
  }
  out.pass = failures == 0 && counts[0] >= kAuditPerClass && counts[1] >= kAuditPerClass;
  out.summary = "discharging audit: " + std::to_string(counts[0]) + " instances at c = 2, " +
                std::to_string(counts[1]) + " at c = 3, " + std::to_string(failures) + " failing";
  out.report = rep.str();
  return out;
}

Outcome pipeline_suite() {
  Outcome out;
  std::ostringstream rep;
  const BoundTracker tracker;
  int passed[2] = {0, 0}, runs[2] = {0, 0}, largest = 0;
  int worst[2] = {0, 0};
  PipelineStats totals;
  for (int c : {2, 3}) {
    for (int s = 1; s <= kPipelinePerClass; ++s) {
      const std::uint64_t seed = 1000ull * c + s;
      Rng rng(seed);
      const int base = 40 + static_cast<int>(rng.below(kPipelineMaxVertices - 39));
      EmbeddedGraph g = gen_random_planar(base, c, seed);
      if (s % 4 == 1 || s % 4 == 3) {
        EmbeddedGraph planted = instances::plant_stacks(g, c, 0.3, 2, rng);
        if (planted.num_vertices() <= kPipelineMaxVertices) g = std::move(planted);
      }
      if (s % 4 == 2 || s % 4 == 3) g = instances::densify(g, c, 0.8, 2, rng);
      ++runs[c - 2];
      largest = std::max(largest, g.num_vertices());
      const ListAssignment lists =
          c == 2 ? uniform_lists(g.num_vertices(), 2) : instances::random_lists(rng, g.num_vertices(), 3, 5);
      rep << "c " << c << " seed " << seed << " vertices " << g.num_vertices() << " ";
      try {
        const MainResult res = color_main(g, lists, c, tracker);
        const ColoringReport check = verify_coloring(g, res.coloring, &lists, VerifyMode::weak(tracker.ell()));
        bool ok = g.num_vertices() <= kPipelineMaxVertices && res.bound == tracker.ell() && res.report.pass &&
                  check.pass && res.coloring.complete();
        for (Vertex v = 0; ok && v < g.num_vertices(); ++v) ok = list_contains(lists[v], res.coloring[v]);
        passed[c - 2] += ok;
        if (check.max_metric) worst[c - 2] = std::max(worst[c - 2], *check.max_metric);
        totals.solitary_splits += res.stats.solitary_splits;
        totals.stacks += res.stats.stacks;
        totals.appearances += res.stats.appearances;
        totals.largest_island = std::max(totals.largest_island, res.stats.largest_island);
        rep << "max " << check.max_metric.value_or(-1) << " ";
        append(rep, res.coloring);
      } catch (const Error& e) {
        rep << e.what() << "\n";
      }
    }
  }
  out.pass = passed[0] == runs[0] && passed[1] == runs[1] && runs[0] >= kPipelinePerClass &&
             runs[1] >= kPipelinePerClass;
  out.summary = "end-to-end pipeline: " + std::to_string(passed[0]) + "/" + std::to_string(runs[0]) +
                " triangle-free with 2-lists, " + std::to_string(passed[1]) + "/" + std::to_string(runs[1]) +
                " planar with 3-lists, n <= " + std::to_string(largest) + ", bound " + std::to_string(tracker.ell()) +
                ", max weak diameter " + std::to_string(worst[0]) + " (c=2) / " + std::to_string(worst[1]) +
                " (c=3); splits " + std::to_string(totals.solitary_splits) + ", stacks " +
                std::to_string(totals.stacks) + ", appearances " + std::to_string(totals.appearances) +
                ", largest island " + std::to_string(totals.largest_island);
  out.report = rep.str();
  return out;
}

// Induced subgraphs are sampled connected and with more than t vertices: a
// component that is a bare t-cycle has only t-faces and always carries S1.
Outcome structural_checks() {
  Outcome out;
  std::ostringstream rep;
  int instances = 0, samples = 0, hits = 0, images = 0;
  for (int c : {2, 3}) {
    const int t = c == 2 ? 4 : 3;
    int got = 0;
    for (std::uint64_t seed = 1; got < kStructuralInstancesPerClass && seed < 1000; ++seed) {
      const auto g = instances::unseparated_instance(150, c, seed, seed % 2 ? 0.0 : 0.7);
      if (!g) continue;
      ++got;
      ++instances;
      const auto system = greedy_maximal_system(*g, c);
      images += static_cast<int>(system.size());
      std::vector<bool> residual(g->num_vertices(), true);
      for (const Appearance& a : system) {
        for (Vertex x : a.image) residual[x] = false;
      }
      std::vector<Vertex> starts;
      for (Vertex v = 0; v < g->num_vertices(); ++v) {
        if (residual[v]) starts.push_back(v);
      }
      rep << "c " << c << " seed " << seed << " vertices " << g->num_vertices() << " system " << system.size()
          << "\n";
      Rng rng(seed);
      int taken = 0;
      for (int attempt = 0; taken < kStructuralSamplesPerInstance && attempt < 20 * kStructuralSamplesPerInstance;
           ++attempt) {
        const Vertex start = rng.pick(starts);
        const int size = rng.uniform_int(t + 1, static_cast<int>(starts.size()));
        const auto set = instances::grow_connected(*g, residual, start, size, rng);
        if (static_cast<int>(set.size()) <= t) continue;
        ++taken;
        const auto apps = find_appearances(induced_subgraph(*g, set).graph, c);
        hits += !apps.empty();
        rep << " sample " << set.size() << " appearances " << apps.size() << "\n";
      }
      samples += taken;
      out.pass = out.pass && taken == kStructuralSamplesPerInstance;
    }
    out.pass = out.pass && got == kStructuralInstancesPerClass;
  }
  out.pass = out.pass && hits == 0 && images > 0;
  out.summary = "structural checks: " + std::to_string(instances) + " instances, " + std::to_string(images) +
                " appearances removed, " + std::to_string(samples) + " connected induced subgraphs of residuals, " +
                std::to_string(hits) + " with an appearance";
  out.report = rep.str();
  return out;
}

// The command-line front end run twice on the same arguments.
std::string cli_outputs() {
  const auto dir = std::filesystem::temp_directory_path() / "wdc-acceptance-cli";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const std::string graph = (dir / "g.wdc").string(), colored = (dir / "c.wdc").string();
  std::ostringstream all;
  auto call = [&](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    all << run(args, out, err) << "\n" << out.str() << err.str();
  };
  call({"generate", "--family", "random", "--n", "300", "--c", "2", "--seed", "7", "--out", graph});
  call({"color", graph, "--c", "2", "--out", colored});
  all << read_text(colored);
  call({"generate", "--family", "stack", "--t", "3", "--depth", "4", "--seed", "7", "--out", graph});
  call({"color", graph, "--c", "3", "--lists", "uniform:3", "--out", colored});
  all << read_text(colored);
  call({"oracle", "--check", "nomo", "--i", "2", "--k", "3"});
  std::filesystem::remove_all(dir);
  return all.str();
}

struct Criterion {
  int id;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> only;
  std::string report_path, report_dir;
  app.add_option("--only", only, "Criteria to run (default: all)")->delimiter(',')->check(CLI::Range(1, 8));
  app.add_option("--report", report_path, "Write the full report here");
  app.add_option("--report-dir", report_dir,
                 "Keep one report per criterion here; criterion 8 compares against them when present");
  CLI11_PARSE(app, argc, argv);
  auto selected = [&](int id) { return only.empty() || std::find(only.begin(), only.end(), id) != only.end(); };
  auto report_file = [&](int id) {
    return (std::filesystem::path(report_dir) / ("criterion-" + std::to_string(id) + ".txt")).string();
  };
  if (!report_dir.empty()) std::filesystem::create_directories(report_dir);

  const std::vector<Criterion> criteria{{1, sparsifier_suite}, {2, stack_suites},     {3, lower_bounds},
                                        {4, hex_suite},        {5, discharging_audit}, {6, pipeline_suite},
                                        {7, structural_checks}};
  bool all_pass = true;
  std::ostringstream full;
  std::map<int, std::string> first_reports;
  auto line = [&](int id, bool pass, const std::string& summary, double seconds) {
    std::ostringstream os;
    os << "criterion " << id << " " << (pass ? "PASS" : "FAIL") << "  " << summary << "  [" << std::fixed
       << std::setprecision(1) << seconds << " s]\n";
    std::cout << os.str() << std::flush;
    if (!report_dir.empty()) write_text(report_file(id) + ".line", os.str());
    all_pass = all_pass && pass;
  };
  using Clock = std::chrono::steady_clock;
  for (const Criterion& c : criteria) {
    if (!selected(c.id)) continue;
    const auto t0 = Clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
    first_reports[c.id] = o.report;
    if (!report_dir.empty()) write_text(report_file(c.id), o.report);
    full << "== criterion " << c.id << "\n" << o.summary << "\n" << o.report;
    line(c.id, o.pass, o.summary, secs);
  }
  if (selected(8)) {
    // First runs come from this process, from earlier processes' report
    // files, or are made here.
    const auto t0 = Clock::now();
    int identical = 0, from_files = 0;
    std::vector<int> differing;
    for (const Criterion& c : criteria) {
      if (!first_reports.count(c.id)) {
        if (!report_dir.empty() && std::filesystem::exists(report_file(c.id))) {
          first_reports[c.id] = read_text(report_file(c.id));
          ++from_files;
        } else {
          first_reports[c.id] = c.run().report;
        }
      }
      if (c.run().report == first_reports[c.id]) {
        ++identical;
      } else {
        differing.push_back(c.id);
      }
    }
    const bool cli_same = cli_outputs() == cli_outputs();
    std::string summary = "determinism: " + std::to_string(identical) + "/" + std::to_string(criteria.size()) +
                          " criterion reports byte-identical on rerun (" + std::to_string(from_files) +
                          " first runs from separate processes), command-line outputs " +
                          (cli_same ? "identical" : "DIFFER");
    for (int id : differing) summary += ", criterion " + std::to_string(id) + " differs";
    line(8, differing.empty() && cli_same, summary, std::chrono::duration<double>(Clock::now() - t0).count());
  }
  if (!report_path.empty()) write_text(report_path, full.str());
  return all_pass ? 0 : 1;
}
