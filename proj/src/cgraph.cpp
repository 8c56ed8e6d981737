#include "ringgenus/cgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "ringgenus/util.hpp"

namespace ringgenus::cgraph {

void SimpleGraph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("self loops are not allowed");
    adj[u][v] = true;
    adj[v][u] = true;
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n; ++u) d += adj[v][u];
    return d;
}

long long SimpleGraph::edge_count() const {
    long long e = 0;
    for (int v = 0; v < n; ++v) e += degree(v);
    return e / 2;
}

SimpleGraph complete_graph(int n) {
    SimpleGraph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

std::vector<std::pair<long long, long long>> CliqueDecomposition::size_counts() const {
    std::map<long long, long long> counts;
    for (long long s : sizes) ++counts[s];
    return {counts.begin(), counts.end()};
}

long long CliqueDecomposition::vertex_count() const {
    long long total = 0;
    for (long long s : sizes) total += s;
    return total;
}

CliqueDecomposition decomposition_from_counts(
    const std::vector<std::pair<long long, long long>>& size_counts) {
    CliqueDecomposition d;
    d.all_cliques = true;
    for (const auto& [size, count] : size_counts) {
        if (size < 1 || count < 1) throw std::invalid_argument("sizes and counts must be positive");
        for (long long i = 0; i < count; ++i) d.sizes.push_back(size);
    }
    std::sort(d.sizes.begin(), d.sizes.end());
    return d;
}

std::string classification_name(Classification c) {
    switch (c) {
        case Classification::planar: return "planar";
        case Classification::toroidal: return "toroidal";
        case Classification::genus_g: return "genus_g";
    }
    return "?";
}

std::string method_name(GenusMethod m) {
    switch (m) {
        case GenusMethod::clique_formula: return "clique_formula";
        case GenusMethod::oracle: return "oracle";
        case GenusMethod::lower_bound: return "lower_bound";
    }
    return "?";
}

CommutingGraph commuting_graph(const finring::RingTable& ring) {
    if (ring.is_commutative()) {
        throw CommutativeRing("commuting graph undefined: ring " + ring.name() +
                              " is commutative");
    }
    CommutingGraph g;
    for (finring::Element x = 0; x < ring.order(); ++x) {
        if (!ring.is_central(x)) g.vertices.push_back(x);
    }
    const int n = static_cast<int>(g.vertices.size());
    g.graph = SimpleGraph(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (ring.commutes(g.vertices[i], g.vertices[j])) g.graph.add_edge(i, j);
        }
    }
    return g;
}

std::vector<std::vector<int>> components(const SimpleGraph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(g.n, false);
    for (int start = 0; start < g.n; ++start) {
        if (seen[start]) continue;
        std::vector<int> comp;
        std::queue<int> queue;
        queue.push(start);
        seen[start] = true;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            comp.push_back(v);
            for (int u = 0; u < g.n; ++u) {
                if (g.adj[v][u] && !seen[u]) {
                    seen[u] = true;
                    queue.push(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

CliqueDecomposition clique_decomposition(const SimpleGraph& g) {
    CliqueDecomposition d;
    d.all_cliques = true;
    for (const auto& comp : components(g)) {
        const long long s = static_cast<long long>(comp.size());
        d.sizes.push_back(s);
        long long internal = 0;
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j) internal += g.adj[comp[i]][comp[j]];
        if (internal != s * (s - 1) / 2) d.all_cliques = false;
    }
    std::sort(d.sizes.begin(), d.sizes.end());
    return d;
}

CliqueDecomposition clique_decomposition(const CommutingGraph& g) {
    return clique_decomposition(g.graph);
}

long long genus_complete(long long n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least one vertex");
    if (n <= 2) return 0;
    return util::ceil_div((n - 3) * (n - 4), 12);
}

GenusResult genus_clique_union(const CliqueDecomposition& d) {
    if (!d.all_cliques) {
        throw NotCliqueUnion("graph is not a disjoint union of cliques");
    }
    long long total = 0;
    for (long long s : d.sizes) total += genus_complete(s);
    return {total, GenusMethod::clique_formula, classify(total)};
}

long long rotation_system_count(const SimpleGraph& g) {
    long long count = 1;
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d >= 1) count = util::mul_sat(count, util::rotations_of_degree(d));
    }
    return count;
}

long long euler_lower_bound(const SimpleGraph& g) {
    long long total = 0;
    for (const auto& comp : components(g)) {
        const long long n = static_cast<long long>(comp.size());
        if (n < 3) continue;
        long long m = 0;
        for (size_t i = 0; i < comp.size(); ++i)
            for (size_t j = i + 1; j < comp.size(); ++j) m += g.adj[comp[i]][comp[j]];
        const long long t = m - 3 * n + 6;
        if (t > 0) total += util::ceil_div(t, 6);
    }
    return total;
}

Classification classify(long long genus) {
    if (genus < 0) throw std::invalid_argument("genus cannot be negative");
    if (genus == 0) return Classification::planar;
    if (genus == 1) return Classification::toroidal;
    return Classification::genus_g;
}

GenusResult genus_auto(const SimpleGraph& g, long long oracle_budget) {
    CliqueDecomposition d = clique_decomposition(g);
    if (d.all_cliques) return genus_clique_union(d);
    try {
        return genus_oracle(g, oracle_budget);
    } catch (const BudgetExceeded&) {
        const long long bound = euler_lower_bound(g);
        return {bound, GenusMethod::lower_bound, Classification::genus_g};
    }
}

}  // namespace ringgenus::cgraph
