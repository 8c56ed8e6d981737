#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringgenus/cgraph.hpp"
#include "ringgenus/errors.hpp"

namespace ringgenus::theorems {

// Structure cases for non-commutative rings of order p^4, p^5, p^2*q and
// p^3*q, keyed by |R| and |Z(R)|:
//   T21a: |R| = p^4,  |Z| = p        T21b: |R| = p^4,  |Z| = p^2
//   T22a: |R| = p^5,  |Z| = p^2      T22b: |R| = p^5,  |Z| = p^3
//   T23a: |R| = p^2q, Z = {0}, divisor parameter t
//   T23b: |R| = p^2q, Z = {0}, four-part decomposition
//   T24:  |R| = p^3q, |Z| = pq
//   T25a: |R| = p^3q, |Z| = p^2, (q-1) | (pq-1)
//   T25b: |R| = p^3q, |Z| = p^2, (p-1) | (pq-1)
//   T25c: |R| = p^3q, |Z| = p^2, two-part decomposition
enum class CaseId { T21a, T21b, T22a, T22b, T23a, T23b, T24, T25a, T25b, T25c };

const std::vector<CaseId>& all_cases();
std::string case_name(CaseId id);
CaseId case_from_name(const std::string& name);

struct TheoremCase {
    CaseId id = CaseId::T21a;
    long long p = 0;
    std::optional<long long> q;
    long long z_order = 0;  // |Z(R)|; 0 encodes Z(R) = {0}
    std::optional<long long> t;
    std::optional<std::vector<long long>> l;
};

// Ring order / center order required by a case's hypothesis.
long long ring_order_of(CaseId id, long long p, std::optional<long long> q);
long long z_order_of(CaseId id, long long p, std::optional<long long> q);
bool requires_unity(CaseId id);
bool requires_center_not_field(CaseId id);

TheoremCase make_case(CaseId id, long long p, std::optional<long long> q = {},
                      std::optional<long long> t = {},
                      std::optional<std::vector<long long>> l = {});

// Throws HypothesisViolated when the parameters break the case hypothesis
// (non-prime p or q, wrong z_order, inadmissible t, infeasible l, or a
// divisibility condition that cannot hold, e.g. T25a with p=2 and q odd).
void validate_case(const TheoremCase& c);

struct Outcome {
    // (component size, multiplicity), ascending by size
    std::vector<std::pair<long long, long long>> decomposition;
    long long genus = 0;
    cgraph::Classification classification = cgraph::Classification::planar;
    std::string label;
    std::optional<long long> t;
    std::optional<std::vector<long long>> l;
};

struct Prediction {
    TheoremCase theorem_case;
    std::vector<Outcome> outcomes;  // never empty
};

// All decomposition/genus outcomes the case permits. Free parameters
// (t, or the l-vector) are enumerated when not pinned by the caller.
// Throws NoSolutions when a required l-constraint has no positive solution
// (the case is vacuous for these parameters).
Prediction predict(const TheoremCase& c);

// All positive-integer solutions of the case's linear constraint, in
// lexicographic order:
//   T21a, T22a: l1 + l2(p+1) = p^2+p+1
//   T23b: l1(p-1) + l2(q-1) + l3(p^2-1) + l4(pq-1) = p^2q - 1
//   T25c: l1(p-1) + l2(q-1) = pq - 1
// An empty result means the constraint has no solution.
std::vector<std::vector<long long>> enumerate_l(CaseId id, long long p,
                                                std::optional<long long> q = {});

// The t in {p, q, p^2, pq} with (t-1) | (p^2q - 1), ascending.
std::vector<long long> t_candidates(long long p, long long q);

// True iff the fully parameterized case predicts genus exactly 1.
bool toroidality_condition(const TheoremCase& c);

// Genus as printed in the case's statement for one outcome (the closed-form
// expression, or 0 where the statement asserts planarity). Empty when the
// statement pins only a set of genera rather than a formula.
std::optional<long long> statement_genus(const TheoremCase& c, const Outcome& o);

// The exact set of genera a case statement permits when it does not print a
// per-outcome formula ({0, 1, 2} for T21a/T22a at p = 2); empty otherwise.
std::optional<std::vector<long long>> statement_genus_set(CaseId id, long long p,
                                                          std::optional<long long> q = {});

}  // namespace ringgenus::theorems
