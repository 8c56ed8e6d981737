#include <algorithm>
#include <vector>

#include "ringgenus/cgraph.hpp"
#include "ringgenus/util.hpp"

namespace ringgenus::cgraph {

namespace {

// Exact minimum genus of one connected component, by exhaustive search over
// rotation systems. A rotation system assigns each vertex a cyclic order of
// its neighbors; tracing the induced faces gives the genus of the embedding
// through Euler's formula V - E + F = 2 - 2g. The minimum over all systems
// is the graph genus.
//
// Each vertex of degree d contributes (d-1)! distinct cyclic orders
// (first neighbor pinned, rest permuted). When the component is a complete
// graph the rotation of one vertex can additionally be frozen outright:
// relabeling by an automorphism that fixes that vertex realizes any cyclic
// order of its neighborhood, so every genus value reachable at all is
// reachable with the frozen rotation. For non-complete components no such
// relabeling exists in general and all rotations are enumerated.
long long component_min_genus(const std::vector<std::vector<int>>& neighbors) {
    const int n = static_cast<int>(neighbors.size());
    long long edge_total = 0;
    for (const auto& nb : neighbors) edge_total += static_cast<long long>(nb.size());
    const long long edges = edge_total / 2;
    if (edges == 0) return 0;

    long long lower = 0;
    if (n >= 3) {
        const long long t = edges - 3 * n + 6;
        if (t > 0) lower = util::ceil_div(t, 6);
    }

    const bool complete = edges == static_cast<long long>(n) * (n - 1) / 2;
    const int frozen = (complete && n >= 3) ? 0 : -1;

    std::vector<std::vector<int>> rot = neighbors;  // already sorted ascending
    std::vector<std::vector<int>> pos(n, std::vector<int>(n, -1));
    std::vector<std::vector<bool>> visited(n, std::vector<bool>(n, false));

    long long best = -1;
    while (true) {
        for (int v = 0; v < n; ++v) {
            for (size_t i = 0; i < rot[v].size(); ++i) pos[v][rot[v][i]] = static_cast<int>(i);
        }
        for (int v = 0; v < n; ++v) std::fill(visited[v].begin(), visited[v].end(), false);

        long long faces = 0;
        for (int u = 0; u < n; ++u) {
            for (int v0 : rot[u]) {
                if (visited[u][v0]) continue;
                ++faces;
                int a = u, b = v0;
                while (!visited[a][b]) {
                    visited[a][b] = true;
                    const auto& r = rot[b];
                    int w = r[(pos[b][a] + 1) % r.size()];
                    a = b;
                    b = w;
                }
            }
        }
        const long long genus = (edges - n - faces + 2) / 2;
        if (best < 0 || genus < best) best = genus;
        if (best == lower) return best;

        // advance to the next rotation system (odometer, last vertex fastest)
        int v = n - 1;
        for (; v >= 0; --v) {
            if (v == frozen || rot[v].size() <= 2) continue;
            if (std::next_permutation(rot[v].begin() + 1, rot[v].end())) break;
        }
        if (v < 0) return best;
    }
}

}  // namespace

GenusResult genus_oracle(const SimpleGraph& g, long long budget) {
    const long long systems = rotation_system_count(g);
    if (systems > budget) {
        throw BudgetExceeded("embedding search needs " + std::to_string(systems) +
                                 " rotation systems, over budget " + std::to_string(budget),
                             systems);
    }
    long long total = 0;
    for (const auto& comp : components(g)) {
        std::vector<int> local(g.n, -1);
        for (size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
        std::vector<std::vector<int>> neighbors(comp.size());
        for (size_t i = 0; i < comp.size(); ++i) {
            for (size_t j = 0; j < comp.size(); ++j) {
                if (g.adj[comp[i]][comp[j]]) neighbors[i].push_back(static_cast<int>(j));
            }
        }
        total += component_min_genus(neighbors);
    }
    return {total, GenusMethod::oracle, classify(total)};
}

GenusResult genus_oracle(const CommutingGraph& g, long long budget) {
    return genus_oracle(g.graph, budget);
}

}  // namespace ringgenus::cgraph
