#pragma once

#include <string>
#include <vector>

#include "ringgenus/errors.hpp"
#include "ringgenus/finring.hpp"

namespace ringgenus::cgraph {

// Embedding searches above this many rotation systems need an explicit
// opt-in budget (K5-scale fits, K6 does not).
inline constexpr long long kDefaultOracleBudget = 10'000'000;

// Undirected simple graph on vertices 0..n-1.
struct SimpleGraph {
    int n = 0;
    std::vector<std::vector<bool>> adj;

    SimpleGraph() = default;
    explicit SimpleGraph(int n_) : n(n_), adj(n_, std::vector<bool>(n_, false)) {}

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return adj[u][v]; }
    int degree(int v) const;
    long long edge_count() const;
};

SimpleGraph complete_graph(int n);

// Commuting graph of a ring: one vertex per non-central element (ascending
// element index), an edge wherever two distinct elements commute.
struct CommutingGraph {
    std::vector<finring::Element> vertices;  // ring element of each graph vertex
    SimpleGraph graph;
};

struct CliqueDecomposition {
    std::vector<long long> sizes;  // component sizes, ascending
    bool all_cliques = false;

    // (size, multiplicity) pairs, ascending by size
    std::vector<std::pair<long long, long long>> size_counts() const;
    long long vertex_count() const;
};

CliqueDecomposition decomposition_from_counts(
    const std::vector<std::pair<long long, long long>>& size_counts);

enum class Classification { planar, toroidal, genus_g };
enum class GenusMethod { clique_formula, oracle, lower_bound };

std::string classification_name(Classification c);
std::string method_name(GenusMethod m);

struct GenusResult {
    long long value = 0;
    GenusMethod method = GenusMethod::clique_formula;
    Classification classification = Classification::planar;
};

// Throws CommutativeRing when the ring has no non-central elements.
CommutingGraph commuting_graph(const finring::RingTable& ring);

// Connected components, ordered by smallest contained vertex.
std::vector<std::vector<int>> components(const SimpleGraph& g);

CliqueDecomposition clique_decomposition(const SimpleGraph& g);
CliqueDecomposition clique_decomposition(const CommutingGraph& g);

// Genus of the complete graph on n vertices: 0 for n <= 2,
// ceil((n-3)(n-4)/12) otherwise.
long long genus_complete(long long n);

// Genus of a disjoint union of cliques, summed per component.
// Throws NotCliqueUnion unless d.all_cliques.
GenusResult genus_clique_union(const CliqueDecomposition& d);

// Number of rotation systems of g: product of (deg(v)-1)! over all vertices
// of degree >= 1, saturating at int64 max.
long long rotation_system_count(const SimpleGraph& g);

// Exact genus by exhaustive rotation-system search with face tracing,
// independent of the clique formula. Throws BudgetExceeded when the
// rotation-system count is over budget.
GenusResult genus_oracle(const SimpleGraph& g, long long budget = kDefaultOracleBudget);
GenusResult genus_oracle(const CommutingGraph& g, long long budget = kDefaultOracleBudget);

// Sum over components with >= 3 vertices of max(0, ceil((m - 3n + 6)/6)).
long long euler_lower_bound(const SimpleGraph& g);

Classification classify(long long genus);

// Clique formula when the graph is a clique union, otherwise the oracle,
// otherwise (over budget) the Euler bound with method = lower_bound.
GenusResult genus_auto(const SimpleGraph& g, long long oracle_budget = kDefaultOracleBudget);

}  // namespace ringgenus::cgraph
