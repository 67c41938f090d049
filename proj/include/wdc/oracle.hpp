#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wdc/graph.hpp"
#include "wdc/sparsifiers.hpp"

namespace wdc {

inline constexpr long long kDefaultBudget = 1LL << 24;

enum class Metric { Weak, Internal };

struct OracleReport {
  long long instances_checked = 0;
  std::optional<Coloring> worst_case;
  int worst_value = 0;
  bool pass = true;
  std::string detail;

  std::string to_text() const;
};

struct MinMaxResult {
  int value = 0;
  Coloring witness;  // a coloring attaining the minimum
  long long colorings = 0;
};

// Minimum over all colorings with tokens 1..num_colors that extend `fixed`
// of the largest monochromatic component metric.  Throws BudgetExceeded
// when the number of colorings exceeds the budget.
MinMaxResult min_max_mono_diameter(const EmbeddedGraph& g, int num_colors, Metric metric, const Coloring& fixed,
                                   long long budget = kDefaultBudget);

// Every 2-coloring of H(i, k) with both interfaces colored 1 has a color-2
// component of diameter >= k - 1, or joins the interfaces, or has
// r(u) + r(v) >= i.  Distances are measured inside components.
OracleReport verify_lemma_nomo(int i, int k, long long budget = kDefaultBudget);

// Interfaces of H'(i, k) colored 1 and 2; every 3-coloring of the rest must
// contain a component of internal diameter >= min(k - 1, i).
OracleReport verify_hprime(int i, int k, long long budget = kDefaultBudget);

struct HexWitness {
  Color color;                // 1: left-right, 2: bottom-top
  std::vector<Vertex> path;
};

// phi colors gen_triangulated_grid(n) with 1 and 2.  Throws NoWitness.
HexWitness hex_crossing(int n, const Coloring& phi);

// Runs hex_crossing on every 2-coloring of the n x n grid.
OracleReport verify_hex(int n, long long budget = kDefaultBudget);

// All list assignments of size c over colors 1..universe (one per relabeling
// class) and all admissible multiassignments, up to changes that the rule
// cannot observe.  Throws CounterexampleFound with the failing input.
OracleReport exhaustive_sparsifier_check(SparsifierId id, int universe);

}  // namespace wdc
