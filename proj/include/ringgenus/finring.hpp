#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ringgenus/errors.hpp"

namespace ringgenus::finring {

// Elements of a finite ring are dense indices in [0, order).
using Element = int;

// Exhaustive axiom checks are O(N^3); rings above this order are refused
// unless the caller raises the limit explicitly.
inline constexpr int kDefaultSizeLimit = 256;

// Default cap on the number of structure-constant candidates enumerate_rings
// will walk (order^(k^2) for k generators).
inline constexpr long long kDefaultEnumBudget = 10'000'000;

// Finite abelian group in invariant-factor form n1 | n2 | ... | nk.
// Elements are mixed-radix indices over the invariant factors with
// coordinate 0 most significant; generator i is the unit vector in
// coordinate i.
class AdditiveGroup {
public:
    explicit AdditiveGroup(std::vector<int> invariants);

    const std::vector<int>& invariants() const { return invariants_; }
    int rank() const { return static_cast<int>(invariants_.size()); }
    int order() const { return order_; }
    bool is_cyclic() const { return rank() == 1; }

    std::vector<int> coords_of(Element x) const;
    Element index_of(const std::vector<int>& coords) const;
    Element generator(int i) const;

    Element add(Element a, Element b) const;
    // m-fold sum of x (m may be any integer; reduced per coordinate).
    Element scalar_mul(long long m, Element x) const;

private:
    std::vector<int> invariants_;
    std::vector<int> weights_;  // place value of each coordinate
    int order_;
};

// A ring presented either by generator products (structure constants) or by
// full addition/multiplication tables.
struct RingSpec {
    std::string name;
    AdditiveGroup additive;
    // constants[i][j] = coefficient vector of (generator i) * (generator j)
    // in the generator basis; entries reduced modulo the invariant factors.
    std::optional<std::vector<std::vector<std::vector<int>>>> mult_constants;
    struct Tables {
        std::vector<std::vector<int>> add;
        std::vector<std::vector<int>> mul;
    };
    std::optional<Tables> full_tables;
};

// Per-axiom result of checking raw tables. Failures are entries here, not
// exceptions, so broken tables can still be reported in full.
struct ValidationReport {
    bool abelian_group = false;
    bool associative = false;
    bool left_distributive = false;
    bool right_distributive = false;
    std::optional<Element> unity;
    long long center_size = 0;
    bool commutative = false;
    bool ok() const {
        return abelian_group && associative && left_distributive && right_distributive;
    }
};

// A validated finite ring: explicit operation tables plus cached zero,
// unity (if any) and center. Immutable after construction.
class RingTable {
public:
    int order() const { return n_; }
    const std::string& name() const { return name_; }

    Element add(Element a, Element b) const { return add_[static_cast<size_t>(a) * n_ + b]; }
    Element mul(Element a, Element b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
    Element zero() const { return zero_; }
    std::optional<Element> unity() const { return unity_; }

    const std::vector<Element>& center() const { return center_; }
    long long center_size() const { return static_cast<long long>(center_.size()); }
    bool is_central(Element x) const;
    bool is_commutative() const { return center_.size() == static_cast<size_t>(n_); }
    bool commutes(Element a, Element b) const { return mul(a, b) == mul(b, a); }

    std::vector<std::vector<int>> add_rows() const;
    std::vector<std::vector<int>> mul_rows() const;

private:
    RingTable() = default;
    friend RingTable build_from_tables(std::string, std::vector<int>, std::vector<int>, int, bool);

    std::string name_;
    int n_ = 0;
    std::vector<Element> add_;  // flat n*n, row major
    std::vector<Element> mul_;
    Element zero_ = 0;
    std::optional<Element> unity_;
    std::vector<Element> center_;  // ascending
};

// Checks every axiom on raw square tables (no exceptions; see report).
ValidationReport validate_tables(const std::vector<std::vector<int>>& add,
                                 const std::vector<std::vector<int>>& mul);

// Re-checks a built ring; always passes for tables produced by the builders.
ValidationReport validate(const RingTable& ring);

// Builds and validates a ring from a spec. Structure constants are extended
// bilinearly after the well-definedness check n_i*(g_i g_j) = n_j*(g_i g_j) = 0.
// Throws NotWellDefined / NotAbelianGroup / NotAssociative / NotDistributive /
// SizeLimitExceeded.
RingTable build_from_spec(const RingSpec& spec, int size_limit = kDefaultSizeLimit);

// Full 2x2 matrix ring over the p-element field; order p^4, |Z| = p.
RingTable matrix_ring(long long p, int size_limit = kDefaultSizeLimit);

// 2x2 upper-triangular matrices over the p-element field; order p^3, |Z| = p.
RingTable upper_triangular_ring(long long p, int size_limit = kDefaultSizeLimit);

// Pairs (a, b) over the p-element field with (a,b)(c,d) = (ac, ad);
// order p^2, trivial center, no unity.
RingTable row_ring(long long p, int size_limit = kDefaultSizeLimit);

// Componentwise product; order |R|*|S|, Z = Z(R) x Z(S).
RingTable direct_product(const RingTable& r, const RingTable& s,
                         int size_limit = kDefaultSizeLimit);

std::vector<Element> center(const RingTable& ring);
std::vector<Element> centralizer(const RingTable& ring, Element x);

struct RingFilters {
    std::optional<bool> noncommutative;
    std::optional<long long> center_size;
    std::optional<bool> has_unity;
};

// Number of structure-constant candidates for a group: order^(rank^2),
// saturating at int64 max.
long long enumeration_candidates(const AdditiveGroup& group);

// Emits every ring arising as a bilinear extension of generator products on
// `group` that is well defined, associative and passes the filters, in
// lexicographic structure-constant order. `sink` returns false to stop early.
// Throws BudgetExceeded when the candidate count is over budget.
void enumerate_rings(const AdditiveGroup& group, const RingFilters& filters,
                     long long budget,
                     const std::function<bool(const RingTable&)>& sink);
std::vector<RingTable> enumerate_rings(const AdditiveGroup& group,
                                       const RingFilters& filters,
                                       long long budget = kDefaultEnumBudget);

// All abelian groups of the given order, as invariant-factor lists in
// ascending divisibility order; deterministic (sorted) output.
std::vector<std::vector<int>> abelian_groups(int order);

}  // namespace ringgenus::finring
