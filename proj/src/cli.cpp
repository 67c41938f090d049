#include "wdc/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "wdc/discharging.hpp"
#include "wdc/error.hpp"
#include "wdc/faces.hpp"
#include "wdc/generators.hpp"
#include "wdc/io.hpp"
#include "wdc/metrics.hpp"
#include "wdc/oracle.hpp"
#include "wdc/pipeline.hpp"

namespace wdc {

namespace {

constexpr double kMaxGeneratedVertices = 2e6;

// Whatever a failing command had in hand, for the reproduction bundle.
struct Context {
  std::vector<std::string> args;
  std::optional<GraphFile> input;
  std::string report;
};

struct Failure {
  std::string reason;
};

bool is_usage_error(ErrorCode code) {
  switch (code) {
    case ErrorCode::CounterexampleFound:
    case ErrorCode::IslandSearchFailed:
    case ErrorCode::StackExpected:
    case ErrorCode::NoWitness:
    case ErrorCode::NotActive:
      return false;
    default:
      return true;
  }
}

void write_bundle(const std::string& dir, const Context& ctx, const std::string& reason, std::ostream& err) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) {
    err << "cannot create bundle directory " << dir << ": " << ec.message() << "\n";
    return;
  }
  std::ostringstream cmd;
  cmd << "wdc";
  for (const std::string& a : ctx.args) cmd << ' ' << a;
  cmd << "\n";
  write_text((fs::path(dir) / "command.txt").string(), cmd.str());
  write_text((fs::path(dir) / "report.txt").string(), ctx.report + "failure " + reason + "\n");
  if (ctx.input) write_graph_file((fs::path(dir) / "input.wdc").string(), *ctx.input);
  err << "failure: " << reason << "\nreproduction bundle written to " << dir << "\n";
}

double estimated_size(const std::string& family, int i, int k, int ell) {
  auto rec = [](int depth, double branch, double children) {
    double f = 2;
    for (int level = 1; level <= depth && f < 1e18; ++level) f = 2 + branch + children * (f - 2);
    return f;
  };
  if (family == "H") return rec(i, k, k);
  if (family == "Hprime") return rec(i, k, 2.0 * k);
  if (family == "G") return (ell + 1.0) * (ell + 1.0) + 1.0 * ell * ell * (rec(ell + 1, 2.0 * ell, 2.0 * ell) - 2);
  if (family == "Gprime") return ell + 1.0 + ell * (rec(ell + 1, 2.0 * ell, 4.0 * ell) - 2);
  return 0;
}

ListAssignment pick_lists(const std::string& spec, const GraphFile& file, int c) {
  const int n = file.graph.num_vertices();
  if (spec.empty()) return file.lists ? *file.lists : uniform_lists(n, c);
  if (spec.rfind("uniform:", 0) == 0) {
    int k = 0;
    try {
      std::size_t used = 0;
      k = std::stoi(spec.substr(8), &used);
      if (used != spec.size() - 8) k = 0;
    } catch (const std::exception&) {
      k = 0;
    }
    if (k < 1) throw Error(ErrorCode::InvalidInput, "bad list spec '" + spec + "'");
    return uniform_lists(n, k);
  }
  return parse_lists_file(read_text(spec), n);
}

std::string stats_text(const EmbeddedGraph& g) {
  const FaceStructure fs = trace_faces(g);
  int components = 0;
  component_ids(g, &components);
  int min_degree = g.num_vertices() ? g.degree(0) : 0, max_degree = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    min_degree = std::min(min_degree, g.degree(v));
    max_degree = std::max(max_degree, g.degree(v));
  }
  const auto gir = girth(g);
  long long beta3 = 0, beta4 = 0;
  for (const Face& f : fs.faces()) {
    beta3 += f.length - 3;
    beta4 += f.length - 4;
  }
  std::ostringstream os;
  os << "vertices " << g.num_vertices() << "\n";
  os << "edges " << g.num_edges() << "\n";
  os << "components " << components << "\n";
  os << "faces " << fs.num_faces() << "\n";
  os << "min_degree " << min_degree << "\n";
  os << "max_degree " << max_degree << "\n";
  os << "girth ";
  if (gir) {
    os << *gir << "\n";
  } else {
    os << "none\n";
  }
  // Excess face length over t, summed over faces.
  os << "beta_c3 " << beta3 << "\n";
  os << "beta_c2 ";
  if (!gir || *gir >= 4) {
    os << beta4 << "\n";
  } else {
    os << "n/a\n";
  }
  return os.str();
}

std::optional<SparsifierId> sparsifier_by_name(const std::string& name) {
  for (SparsifierId id : {SparsifierId::S1_c2, SparsifierId::S2_c2, SparsifierId::S1_c3, SparsifierId::S2_c3}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Weak-diameter list coloring of plane graphs", "wdc"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string bundle = "wdc-repro";
  app.add_option("--bundle", bundle, "Directory for reproduction bundles")->capture_default_str();

  int i = 1, k = 3, ell = 1, n = 4, t = 3, depth = 2, c = 2, universe = 3, colors = 2, bound = 0;
  std::uint64_t seed = 1;
  long long budget = kDefaultBudget;
  std::string family, path, out_path, lists_spec, mode = "weak", check, sparsifier_name, metric = "weak";
  bool ledger = false;

  auto* gen = app.add_subcommand("generate", "Write a graph of a generator family");
  gen->add_option("--family", family, "H | G | Hprime | Gprime | grid | stack | random")
      ->required()
      ->check(CLI::IsMember({"H", "G", "Hprime", "Gprime", "grid", "stack", "random"}));
  gen->add_option("--i", i, "Recursion depth (H, Hprime)")->check(CLI::NonNegativeNumber);
  gen->add_option("--k", k, "Path length (H, Hprime)")->check(CLI::PositiveNumber);
  gen->add_option("--ell", ell, "Parameter of G and Gprime")->check(CLI::PositiveNumber);
  gen->add_option("--n", n, "Grid side or vertex count")->check(CLI::PositiveNumber);
  gen->add_option("--t", t, "Stack cycle length")->check(CLI::IsMember({3, 4}));
  gen->add_option("--depth", depth, "Stack depth")->check(CLI::NonNegativeNumber);
  gen->add_option("--c", c, "Girth class of random graphs")->check(CLI::IsMember({2, 3}));
  gen->add_option("--seed", seed, "Seed (stack, random)");
  gen->add_option("--out", out_path, "Output file (default: standard output)");

  auto* stats = app.add_subcommand("stats", "Print graph metrics");
  stats->add_option("file", path)->required();

  auto* color = app.add_subcommand("color", "Color a plane graph and verify the result");
  color->add_option("file", path)->required();
  color->add_option("--c", c, "2 (triangle-free, 2-lists) or 3 (3-lists)")->required()->check(CLI::IsMember({2, 3}));
  color->add_option("--lists", lists_spec, "uniform:k or a lists file (default: lists in the input)");
  color->add_option("--out", out_path, "Write graph, lists and coloring here");

  auto* verify = app.add_subcommand("verify", "Check the coloring stored in a graph file");
  verify->add_option("file", path)->required();
  verify->add_option("--mode", mode, "weak | internal | clustering")
      ->check(CLI::IsMember({"weak", "internal", "clustering"}))
      ->capture_default_str();
  verify->add_option("--bound", bound, "Diameter or cluster-size bound")->required()->check(CLI::NonNegativeNumber);

  auto* oracle = app.add_subcommand("oracle", "Run a brute-force check");
  oracle->add_option("--check", check, "nomo | hprime | hex | sparsifier | minmax")
      ->required()
      ->check(CLI::IsMember({"nomo", "hprime", "hex", "sparsifier", "minmax"}));
  oracle->add_option("--i", i)->check(CLI::NonNegativeNumber);
  oracle->add_option("--k", k)->check(CLI::PositiveNumber);
  oracle->add_option("--n", n, "Grid side (hex)")->check(CLI::PositiveNumber);
  oracle->add_option("--sparsifier", sparsifier_name, "S1_c2 | S2_c2 | S1_c3 | S2_c3");
  oracle->add_option("--universe", universe, "Color universe size (sparsifier)")->check(CLI::PositiveNumber);
  oracle->add_option("--graph", path, "Graph file (minmax)");
  oracle->add_option("--colors", colors, "Number of colors (minmax)")->check(CLI::PositiveNumber);
  oracle->add_option("--metric", metric, "weak | internal (minmax)")->check(CLI::IsMember({"weak", "internal"}));
  oracle->add_option("--budget", budget, "Enumeration budget")->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("audit", "Discharging audit with exact charges");
  audit->add_option("file", path)->required();
  audit->add_option("--c", c)->required()->check(CLI::IsMember({2, 3}));
  audit->add_flag("--ledger", ledger, "Also print every vertex and face charge");

  std::vector<const char*> argv{"wdc"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  Context ctx;
  ctx.args = args;
  std::ostringstream report;
  try {
    if (*gen) {
      const double size = estimated_size(family, i, k, ell);
      if (size > kMaxGeneratedVertices) {
        throw Error(ErrorCode::InvalidInput, "family " + family + " at these parameters has about " +
                                                 std::to_string(static_cast<long long>(size)) + " vertices");
      }
      EmbeddedGraph g;
      if (family == "H") g = gen_H(i, k).graph;
      if (family == "Hprime") g = gen_Hprime(i, k).graph;
      if (family == "G") g = gen_G(ell);
      if (family == "Gprime") g = gen_Gprime(ell);
      if (family == "grid") g = gen_triangulated_grid(n);
      if (family == "stack") g = gen_random_stack(t, depth, seed);
      if (family == "random") g = gen_random_planar(n, c, seed);
      const std::string text = format_graph_file(GraphFile{g, std::nullopt, std::nullopt});
      if (out_path.empty()) {
        out << text;
      } else {
        write_text(out_path, text);
      }
      return kExitPass;
    }

    if (*stats) {
      const GraphFile file = read_graph_file(path);
      out << stats_text(file.graph);
      return kExitPass;
    }

    if (*color) {
      GraphFile file = read_graph_file(path);
      const ListAssignment lists = pick_lists(lists_spec, file, c);
      ctx.input = GraphFile{file.graph, lists, std::nullopt};
      const MainResult res = color_main(file.graph, lists, c);
      ctx.input->coloring = res.coloring;
      report << "color c " << c << "\n";
      report << "vertices " << file.graph.num_vertices() << "\n";
      report << "bound " << res.bound << "\n";
      report << "max_weak_diameter ";
      if (res.max_weak_diameter) {
        report << *res.max_weak_diameter << "\n";
      } else {
        report << "unbounded\n";
      }
      report << "monochromatic_components " << res.report.components.size() << "\n";
      report << "solitary_splits " << res.stats.solitary_splits << "\n";
      report << "stacks " << res.stats.stacks << "\n";
      report << "appearances " << res.stats.appearances << "\n";
      report << "largest_island " << res.stats.largest_island << "\n";
      report << "verify " << res.report.summary() << "\n";
      out << report.str();
      ctx.report = report.str();
      if (!out_path.empty()) write_graph_file(out_path, *ctx.input);
      if (!res.report.pass) throw Failure{"coloring fails verification at bound " + std::to_string(res.bound)};
      return kExitPass;
    }

    if (*verify) {
      const GraphFile file = read_graph_file(path);
      ctx.input = file;
      if (!file.coloring) throw Error(ErrorCode::InvalidInput, path + " has no coloring section");
      const VerifyMode vm = mode == "weak"       ? VerifyMode::weak(bound)
                            : mode == "internal" ? VerifyMode::internal(bound)
                                                 : VerifyMode::clustering(bound);
      const ColoringReport r = verify_coloring(file.graph, *file.coloring, file.lists ? &*file.lists : nullptr, vm);
      report << "verify mode " << mode << " bound " << bound << "\n";
      report << "lists " << (file.lists ? "present" : "absent") << "\n";
      report << "result " << r.summary() << "\n";
      out << report.str();
      ctx.report = report.str();
      if (!r.pass) throw Failure{"coloring violates the " + mode + " bound " + std::to_string(bound)};
      return kExitPass;
    }

    if (*oracle) {
      OracleReport r;
      report << "oracle " << check;
      if (check == "nomo") {
        report << " i " << i << " k " << k << "\n";
        ctx.input = GraphFile{gen_H(i, k).graph, std::nullopt, std::nullopt};
        r = verify_lemma_nomo(i, k, budget);
      } else if (check == "hprime") {
        report << " i " << i << " k " << k << "\n";
        ctx.input = GraphFile{gen_Hprime(i, k).graph, std::nullopt, std::nullopt};
        r = verify_hprime(i, k, budget);
      } else if (check == "hex") {
        report << " n " << n << "\n";
        ctx.input = GraphFile{gen_triangulated_grid(n), std::nullopt, std::nullopt};
        r = verify_hex(n, budget);
      } else if (check == "sparsifier") {
        const auto id = sparsifier_by_name(sparsifier_name);
        if (!id) throw Error(ErrorCode::InvalidInput, "unknown sparsifier '" + sparsifier_name + "'");
        report << " " << sparsifier_name << " universe " << universe << "\n";
        ctx.report = report.str();
        r = exhaustive_sparsifier_check(*id, universe);
      } else {
        if (path.empty()) throw Error(ErrorCode::InvalidInput, "minmax needs --graph");
        const GraphFile file = read_graph_file(path);
        ctx.input = file;
        report << " colors " << colors << " metric " << metric << "\n";
        const Coloring fixed = file.coloring ? *file.coloring : Coloring(file.graph.num_vertices());
        const MinMaxResult m =
            min_max_mono_diameter(file.graph, colors, metric == "weak" ? Metric::Weak : Metric::Internal, fixed, budget);
        r.instances_checked = m.colorings;
        r.worst_value = m.value;
        r.worst_case = m.witness;
      }
      if (ctx.input && r.worst_case && r.worst_case->size() == ctx.input->graph.num_vertices()) {
        ctx.input->coloring = r.worst_case;
      }
      report << r.to_text() << "\n";
      out << report.str();
      ctx.report = report.str();
      if (!r.pass) throw Failure{"oracle check " + check + " failed"};
      return kExitPass;
    }

    if (*audit) {
      const GraphFile file = read_graph_file(path);
      ctx.input = file;
      const DischargeReport r = audit_discharge(file.graph, c);
      std::istringstream dump(r.dump());
      for (std::string line; std::getline(dump, line);) {
        if (!ledger && (line.rfind("vertex ", 0) == 0 || line.rfind("face ", 0) == 0)) continue;
        report << line << "\n";
      }
      out << report.str();
      ctx.report = report.str();
      if (!r.pass()) throw Failure{"discharging verdicts fail"};
      return kExitPass;
    }
  } catch (const Failure& f) {
    write_bundle(bundle, ctx, f.reason, err);
    return kExitFailure;
  } catch (const Error& e) {
    if (is_usage_error(e.code())) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
    ctx.report = report.str();
    write_bundle(bundle, ctx, e.what(), err);
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int a = 1; a < argc; ++a) args.emplace_back(argv[a]);
  return run(args, out, err);
}

}  // namespace wdc
