#include "ringgenus/catalog.hpp"

#include <algorithm>
#include <sstream>

#include "ringgenus/util.hpp"

namespace ringgenus::catalog {

namespace th = ringgenus::theorems;
namespace fr = ringgenus::finring;
namespace cg = ringgenus::cgraph;

namespace {

fr::RingTable cyclic_ring(int n) {
    // Z_n with ordinary multiplication: constants [[1]] over the group [n]
    fr::RingSpec spec{"Z" + std::to_string(n), fr::AdditiveGroup({n}), {{}}, std::nullopt};
    spec.mult_constants = {{{1 % n}}};
    return fr::build_from_spec(spec);
}

Expected expect(long long z, std::vector<std::pair<long long, long long>> decomposition,
                long long genus) {
    Expected e;
    e.z_order = z;
    e.decomposition = std::move(decomposition);
    e.genus = genus;
    e.classification = cg::classify(genus);
    return e;
}

std::vector<CatalogEntry> make_entries() {
    std::vector<CatalogEntry> entries;

    entries.push_back({"M2(F2)", "2x2 matrices over F2; order 16, |Z| = 2",
                       [] { return fr::matrix_ring(2); },
                       th::make_case(th::CaseId::T21a, 2),
                       expect(2, {{2, 7}}, 0)});

    entries.push_back({"M2(F3)", "2x2 matrices over F3; order 81, |Z| = 3",
                       [] { return fr::matrix_ring(3); },
                       th::make_case(th::CaseId::T21a, 3),
                       expect(3, {{6, 13}}, 13)});

    entries.push_back({"T2(F2)xZ2", "upper-triangular 2x2 over F2 times Z2; order 16, |Z| = 4",
                       [] { return fr::direct_product(fr::upper_triangular_ring(2), cyclic_ring(2)); },
                       th::make_case(th::CaseId::T21b, 2),
                       expect(4, {{4, 3}}, 0)});

    entries.push_back({"M2(F2)xZ2", "2x2 matrices over F2 times Z2; order 32, |Z| = 4",
                       [] { return fr::direct_product(fr::matrix_ring(2), cyclic_ring(2)); },
                       th::make_case(th::CaseId::T22a, 2),
                       expect(4, {{4, 7}}, 0)});

    entries.push_back({"T2(F2)xZ4", "upper-triangular 2x2 over F2 times Z4; order 32, |Z| = 8",
                       [] { return fr::direct_product(fr::upper_triangular_ring(2), cyclic_ring(4)); },
                       th::make_case(th::CaseId::T22b, 2),
                       expect(8, {{8, 3}}, 6)});

    entries.push_back({"T2(F2)xZ3", "upper-triangular 2x2 over F2 times Z3; order 24, |Z| = 6",
                       [] { return fr::direct_product(fr::upper_triangular_ring(2), cyclic_ring(3)); },
                       th::make_case(th::CaseId::T24, 2, 3),
                       expect(6, {{6, 3}}, 3)});

    entries.push_back({"T2(F3)xZ2", "upper-triangular 2x2 over F3 times Z2; order 54, |Z| = 6",
                       [] { return fr::direct_product(fr::upper_triangular_ring(3), cyclic_ring(2)); },
                       th::make_case(th::CaseId::T24, 3, 2),
                       expect(6, {{12, 4}}, 24)});

    entries.push_back({"Row(F2)", "pairs over F2 with (a,b)(c,d) = (ac,ad); trivial center",
                       [] { return fr::row_ring(2); },
                       std::nullopt,
                       expect(1, {{1, 3}}, 0)});

    entries.push_back({"Row(F3)", "pairs over F3 with (a,b)(c,d) = (ac,ad); trivial center",
                       [] { return fr::row_ring(3); },
                       std::nullopt,
                       expect(1, {{2, 4}}, 0)});

    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& builtin_entries() {
    static const std::vector<CatalogEntry> entries = make_entries();
    return entries;
}

const CatalogEntry& entry_by_name(const std::string& name) {
    for (const auto& e : builtin_entries()) {
        if (e.name == name) return e;
    }
    throw std::invalid_argument("no catalog entry named " + name);
}

bool EntryReport::passed() const {
    return constructed && hypothesis_ok && expected_ok && matched && lower_bound_ok;
}

bool center_is_field(const finring::RingTable& ring) {
    const auto& z = ring.center();
    if (z.size() < 2) return false;
    // multiplicative identity within the center
    bool has_unity = false;
    for (fr::Element e : z) {
        if (e == ring.zero()) continue;
        bool ok = true;
        for (fr::Element x : z) {
            if (ring.mul(e, x) != x) { ok = false; break; }
        }
        if (ok) { has_unity = true; break; }
    }
    if (!has_unity) return false;
    // a finite commutative ring with unity and no zero divisors is a field
    for (fr::Element a : z) {
        if (a == ring.zero()) continue;
        for (fr::Element b : z) {
            if (b == ring.zero()) continue;
            if (ring.mul(a, b) == ring.zero()) return false;
        }
    }
    return true;
}

std::vector<theorems::TheoremCase> infer_cases(long long order, long long center_size) {
    std::vector<th::TheoremCase> cases;
    auto try_add = [&](th::CaseId id, long long p, std::optional<long long> q) {
        try {
            cases.push_back(th::make_case(id, p, q));
        } catch (const HypothesisViolated&) {
        }
    };
    for (long long p = 2; p * p * p * p <= order; ++p) {
        if (!util::is_prime(p)) continue;
        if (p * p * p * p == order) {
            if (center_size == p) try_add(th::CaseId::T21a, p, std::nullopt);
            if (center_size == p * p) try_add(th::CaseId::T21b, p, std::nullopt);
        }
        if (p * p * p * p * p == order) {
            if (center_size == p * p) try_add(th::CaseId::T22a, p, std::nullopt);
            if (center_size == p * p * p) try_add(th::CaseId::T22b, p, std::nullopt);
        }
    }
    for (long long p = 2; p * p <= order; ++p) {
        if (!util::is_prime(p)) continue;
        if (order % (p * p) == 0) {
            const long long q = order / (p * p);
            if (util::is_prime(q) && center_size == 1) {
                try_add(th::CaseId::T23a, p, q);
                try_add(th::CaseId::T23b, p, q);
            }
        }
        if (order % (p * p * p) == 0) {
            const long long q = order / (p * p * p);
            if (util::is_prime(q)) {
                if (center_size == p * q) try_add(th::CaseId::T24, p, q);
                if (center_size == p * p) {
                    try_add(th::CaseId::T25a, p, q);
                    try_add(th::CaseId::T25b, p, q);
                    try_add(th::CaseId::T25c, p, q);
                }
            }
        }
    }
    return cases;
}

namespace {

// center size as the hypothesis sees it: TheoremCase encodes Z = {0} as 0,
// the ring itself always counts the zero element.
long long hypothesis_center_size(const th::TheoremCase& c) {
    return c.z_order == 0 ? 1 : c.z_order;
}

std::string check_hypothesis(const fr::RingTable& ring, const th::TheoremCase& c) {
    if (ring.order() != th::ring_order_of(c.id, c.p, c.q)) {
        return "order " + std::to_string(ring.order()) + " != required " +
               std::to_string(th::ring_order_of(c.id, c.p, c.q));
    }
    if (ring.center_size() != hypothesis_center_size(c)) {
        return "|Z| = " + std::to_string(ring.center_size()) + " != required " +
               std::to_string(hypothesis_center_size(c));
    }
    if (ring.is_commutative()) return "ring is commutative";
    if (th::requires_unity(c.id) && !ring.unity()) return "ring has no unity";
    if (th::requires_center_not_field(c.id) && center_is_field(ring)) {
        return "center is a field";
    }
    return "";
}

// Finds the predicted outcome equal to the computed decomposition, or none.
std::optional<std::string> match_outcome(const th::Prediction& pred,
                                         const std::vector<std::pair<long long, long long>>& dec,
                                         long long genus) {
    for (const auto& o : pred.outcomes) {
        if (o.decomposition == dec && o.genus == genus) return o.label;
    }
    return std::nullopt;
}

}  // namespace

EntryReport verify_entry(const CatalogEntry& entry) {
    EntryReport rep;
    rep.name = entry.name;

    fr::RingTable ring;
    try {
        ring = entry.build();
    } catch (const std::exception& e) {
        rep.note = std::string("construction failed: ") + e.what();
        return rep;
    }
    rep.constructed = true;
    rep.order = ring.order();
    rep.center_size = ring.center_size();

    rep.hypothesis_ok = rep.center_size == entry.expected.z_order;
    if (entry.theorem_case) {
        const std::string why = check_hypothesis(ring, *entry.theorem_case);
        if (!why.empty()) {
            rep.hypothesis_ok = false;
            rep.note = "hypothesis: " + why;
        }
    }

    cg::CommutingGraph graph;
    try {
        graph = cg::commuting_graph(ring);
    } catch (const std::exception& e) {
        rep.note = std::string("graph: ") + e.what();
        return rep;
    }
    rep.vertex_count = static_cast<long long>(graph.vertices.size());

    const cg::CliqueDecomposition dec = cg::clique_decomposition(graph);
    rep.decomposition = dec.size_counts();
    rep.all_cliques = dec.all_cliques;

    const cg::GenusResult genus = cg::genus_auto(graph.graph);
    rep.genus = genus.value;
    rep.method = genus.method;
    rep.classification = genus.classification;

    rep.expected_ok = rep.decomposition == entry.expected.decomposition &&
                      rep.genus == entry.expected.genus &&
                      rep.classification == entry.expected.classification;

    if (entry.theorem_case) {
        if (genus.method == cg::GenusMethod::lower_bound) {
            rep.matched = false;
            rep.note += (rep.note.empty() ? "" : "; ");
            rep.note += "genus is only a lower bound, cannot match an outcome";
        } else {
            rep.matched_outcome =
                match_outcome(th::predict(*entry.theorem_case), rep.decomposition, rep.genus);
            rep.matched = rep.matched_outcome.has_value();
            if (!rep.matched) {
                rep.note += (rep.note.empty() ? "" : "; ");
                rep.note += "computed decomposition is outside the predicted outcome set";
            }
        }
    } else {
        rep.matched = true;  // nothing to match against
    }

    rep.lower_bound_ok = rep.genus >= cg::euler_lower_bound(graph.graph);
    return rep;
}

std::vector<EntryReport> verify_all() {
    std::vector<EntryReport> reports;
    for (const auto& entry : builtin_entries()) reports.push_back(verify_entry(entry));
    return reports;
}

SearchReport search_witnesses(long long order, long long center_size, long long budget) {
    if (order < 2 || order > (1LL << 20)) throw std::invalid_argument("order out of range");
    SearchReport rep;
    rep.order = order;
    rep.center_size = center_size;

    const auto cases = infer_cases(order, center_size);
    {
        std::ostringstream os;
        os << "structure cases in scope:";
        if (cases.empty()) os << " none";
        for (const auto& c : cases) os << " " << th::case_name(c.id);
        rep.notes.push_back(os.str());
    }

    for (const auto& invariants : fr::abelian_groups(static_cast<int>(order))) {
        fr::AdditiveGroup group(invariants);
        if (group.is_cyclic()) continue;  // rings on cyclic groups are commutative

        const long long candidates = fr::enumeration_candidates(group);
        std::ostringstream gname;
        gname << "Z";
        for (size_t i = 0; i < invariants.size(); ++i) {
            if (i) gname << "xZ";
            gname << invariants[i];
        }
        if (candidates > budget) {
            rep.notes.push_back("group " + gname.str() + " skipped: " +
                                std::to_string(candidates) + " candidates exceed budget " +
                                std::to_string(budget));
            continue;
        }

        fr::RingFilters filters;
        filters.noncommutative = true;
        filters.center_size = center_size;
        fr::enumerate_rings(group, filters, budget, [&](const fr::RingTable& ring) {
            ++rep.rings_found;
            WitnessRow row;
            row.ring_name = ring.name();
            row.invariants = invariants;
            row.center_size = ring.center_size();

            const cg::CommutingGraph graph = cg::commuting_graph(ring);
            const cg::CliqueDecomposition dec = cg::clique_decomposition(graph);
            row.decomposition = dec.size_counts();
            const cg::GenusResult genus = cg::genus_auto(graph.graph);
            row.genus = genus.value;

            for (const auto& c : cases) {
                if (auto label = match_outcome(th::predict(c), row.decomposition, row.genus)) {
                    row.matched = true;
                    row.matched_case = th::case_name(c.id) + " " + *label;
                    break;
                }
            }
            if (!row.matched && !cases.empty()) rep.all_matched = false;
            if (cases.empty()) row.matched_case = "no case in scope";
            rep.witnesses.push_back(std::move(row));
            return true;
        });
    }

    if (rep.witnesses.empty()) {
        rep.no_witness_within_budget = true;
        rep.notes.push_back("no witness within budget");
    }
    return rep;
}

}  // namespace ringgenus::catalog
