#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringgenus/cgraph.hpp"
#include "ringgenus/finring.hpp"
#include "ringgenus/theorems.hpp"

namespace ringgenus::catalog {

struct Expected {
    long long z_order = 0;
    std::vector<std::pair<long long, long long>> decomposition;  // (size, count)
    long long genus = 0;
    cgraph::Classification classification = cgraph::Classification::planar;
};

// A named concrete ring witnessing one structure case (or, for the trivial-
// center fixtures, exercising the center machinery without a case).
struct CatalogEntry {
    std::string name;
    std::string description;
    std::function<finring::RingTable()> build;
    std::optional<theorems::TheoremCase> theorem_case;
    Expected expected;
};

const std::vector<CatalogEntry>& builtin_entries();
const CatalogEntry& entry_by_name(const std::string& name);

struct EntryReport {
    std::string name;
    bool constructed = false;
    bool hypothesis_ok = false;
    long long order = 0;
    long long center_size = 0;
    long long vertex_count = 0;
    std::vector<std::pair<long long, long long>> decomposition;
    bool all_cliques = false;
    long long genus = 0;
    cgraph::GenusMethod method = cgraph::GenusMethod::clique_formula;
    cgraph::Classification classification = cgraph::Classification::planar;
    bool expected_ok = false;    // computed matches the entry's expected block
    bool matched = false;        // computed lies in the predicted outcome set
    std::optional<std::string> matched_outcome;
    bool lower_bound_ok = false;  // genus >= Euler bound of the actual graph
    std::string note;

    bool passed() const;
};

// Builds the entry's ring from scratch, checks the hypothesis (order, |Z|,
// unity, center-not-a-field where required), computes graph, decomposition
// and genus, and compares against both the expected block and the predicted
// outcome set.
EntryReport verify_entry(const CatalogEntry& entry);
std::vector<EntryReport> verify_all();

// True when the built center is a field (finite commutative ring with a
// multiplicative identity and no zero divisors).
bool center_is_field(const finring::RingTable& ring);

// Structure cases whose hypothesis shape matches the given ring order and
// center size (t/l left free).
std::vector<theorems::TheoremCase> infer_cases(long long order, long long center_size);

struct WitnessRow {
    std::string ring_name;
    std::vector<int> invariants;
    long long center_size = 0;
    std::vector<std::pair<long long, long long>> decomposition;
    long long genus = 0;
    bool matched = false;
    std::string matched_case;  // "T23b [l=(1,1,1,1)]" style
};

struct SearchReport {
    long long order = 0;
    long long center_size = 0;
    long long rings_found = 0;
    std::vector<WitnessRow> witnesses;
    std::vector<std::string> notes;
    bool no_witness_within_budget = false;
    bool all_matched = true;  // vacuously true when nothing was found
};

// Enumerates rings over every non-cyclic abelian group of the given order,
// keeps those whose center has the requested size, and verifies each hit
// against the matching structure cases. Groups whose candidate count is over
// budget are skipped with a note.
SearchReport search_witnesses(long long order, long long center_size, long long budget);

}  // namespace ringgenus::catalog
