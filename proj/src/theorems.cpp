#include "ringgenus/theorems.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ringgenus/util.hpp"

namespace ringgenus::theorems {

namespace {

// ceil(x / 12) of the non-negative products appearing in the closed forms
long long c12(long long x) {
    return x <= 0 ? 0 : util::ceil_div(x, 12);
}

void require(bool cond, const std::string& msg) {
    if (!cond) throw HypothesisViolated(msg);
}

bool divides(long long d, long long n) {
    return d != 0 && n % d == 0;
}

bool has_l_parameter(CaseId id) {
    return id == CaseId::T21a || id == CaseId::T22a || id == CaseId::T23b || id == CaseId::T25c;
}

// coefficients and target of the case's positive-integer constraint
std::pair<std::vector<long long>, long long> l_constraint(CaseId id, long long p,
                                                          std::optional<long long> q) {
    switch (id) {
        case CaseId::T21a:
        case CaseId::T22a:
            return {{1, p + 1}, p * p + p + 1};
        case CaseId::T23b:
            return {{p - 1, *q - 1, p * p - 1, p * *q - 1}, p * p * *q - 1};
        case CaseId::T25c:
            return {{p - 1, *q - 1}, p * *q - 1};
        default:
            throw HypothesisViolated("case " + case_name(id) + " has no l-parameterization");
    }
}

void positive_solutions(const std::vector<long long>& coeff, size_t i, long long rem,
                        std::vector<long long>& cur,
                        std::vector<std::vector<long long>>& out) {
    if (i + 1 == coeff.size()) {
        if (rem >= coeff[i] && rem % coeff[i] == 0) {
            cur.push_back(rem / coeff[i]);
            out.push_back(cur);
            cur.pop_back();
        }
        return;
    }
    long long tail_min = 0;
    for (size_t j = i + 1; j < coeff.size(); ++j) tail_min += coeff[j];
    for (long long v = 1; coeff[i] * v + tail_min <= rem; ++v) {
        cur.push_back(v);
        positive_solutions(coeff, i + 1, rem - coeff[i] * v, cur, out);
        cur.pop_back();
    }
}

std::string format_counts(const std::vector<std::pair<long long, long long>>& counts) {
    std::ostringstream os;
    for (size_t i = 0; i < counts.size(); ++i) {
        if (i) os << " + ";
        os << counts[i].second << "K" << counts[i].first;
    }
    return os.str();
}

std::string format_l(const std::vector<long long>& l) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < l.size(); ++i) {
        if (i) os << ",";
        os << l[i];
    }
    os << ")";
    return os.str();
}

Outcome make_outcome(std::vector<std::pair<long long, long long>> raw_counts,
                     std::optional<long long> t, std::optional<std::vector<long long>> l) {
    std::map<long long, long long> merged;
    for (const auto& [size, count] : raw_counts) {
        if (count > 0) merged[size] += count;
    }
    Outcome o;
    o.decomposition.assign(merged.begin(), merged.end());
    for (const auto& [size, count] : o.decomposition) {
        o.genus += count * cgraph::genus_complete(size);
    }
    o.classification = cgraph::classify(o.genus);
    o.label = format_counts(o.decomposition);
    if (t) o.label += " [t=" + std::to_string(*t) + "]";
    if (l) o.label += " [l=" + format_l(*l) + "]";
    o.t = t;
    o.l = std::move(l);
    return o;
}

}  // namespace

const std::vector<CaseId>& all_cases() {
    static const std::vector<CaseId> cases = {
        CaseId::T21a, CaseId::T21b, CaseId::T22a, CaseId::T22b, CaseId::T23a,
        CaseId::T23b, CaseId::T24,  CaseId::T25a, CaseId::T25b, CaseId::T25c};
    return cases;
}

std::string case_name(CaseId id) {
    switch (id) {
        case CaseId::T21a: return "T21a";
        case CaseId::T21b: return "T21b";
        case CaseId::T22a: return "T22a";
        case CaseId::T22b: return "T22b";
        case CaseId::T23a: return "T23a";
        case CaseId::T23b: return "T23b";
        case CaseId::T24: return "T24";
        case CaseId::T25a: return "T25a";
        case CaseId::T25b: return "T25b";
        case CaseId::T25c: return "T25c";
    }
    return "?";
}

CaseId case_from_name(const std::string& name) {
    for (CaseId id : all_cases()) {
        if (case_name(id) == name) return id;
    }
    throw std::invalid_argument("unknown case id: " + name);
}

long long ring_order_of(CaseId id, long long p, std::optional<long long> q) {
    switch (id) {
        case CaseId::T21a:
        case CaseId::T21b: return p * p * p * p;
        case CaseId::T22a:
        case CaseId::T22b: return p * p * p * p * p;
        case CaseId::T23a:
        case CaseId::T23b: return p * p * q.value_or(0);
        case CaseId::T24:
        case CaseId::T25a:
        case CaseId::T25b:
        case CaseId::T25c: return p * p * p * q.value_or(0);
    }
    return 0;
}

long long z_order_of(CaseId id, long long p, std::optional<long long> q) {
    switch (id) {
        case CaseId::T21a: return p;
        case CaseId::T21b: return p * p;
        case CaseId::T22a: return p * p;
        case CaseId::T22b: return p * p * p;
        case CaseId::T23a:
        case CaseId::T23b: return 0;
        case CaseId::T24: return p * q.value_or(0);
        case CaseId::T25a:
        case CaseId::T25b:
        case CaseId::T25c: return p * p;
    }
    return 0;
}

bool requires_unity(CaseId id) {
    switch (id) {
        case CaseId::T21a:
        case CaseId::T21b:
        case CaseId::T22a:
        case CaseId::T22b:
        case CaseId::T24: return true;
        default: return false;
    }
}

bool requires_center_not_field(CaseId id) {
    return id == CaseId::T22a || id == CaseId::T22b;
}

TheoremCase make_case(CaseId id, long long p, std::optional<long long> q,
                      std::optional<long long> t, std::optional<std::vector<long long>> l) {
    TheoremCase c;
    c.id = id;
    c.p = p;
    c.q = q;
    c.z_order = z_order_of(id, p, q);
    c.t = t;
    c.l = std::move(l);
    validate_case(c);
    return c;
}

void validate_case(const TheoremCase& c) {
    const std::string name = case_name(c.id);
    require(util::is_prime(c.p), name + ": p = " + std::to_string(c.p) + " is not prime");

    const bool uses_q = c.id != CaseId::T21a && c.id != CaseId::T21b &&
                        c.id != CaseId::T22a && c.id != CaseId::T22b;
    if (uses_q) {
        require(c.q.has_value(), name + ": q is required");
        require(util::is_prime(*c.q), name + ": q = " + std::to_string(*c.q) + " is not prime");
    } else {
        require(!c.q.has_value(), name + ": q is not a parameter of this case");
    }
    require(c.z_order == z_order_of(c.id, c.p, c.q),
            name + ": |Z(R)| = " + std::to_string(c.z_order) + " contradicts the hypothesis");

    if (c.t) {
        require(c.id == CaseId::T23a, name + ": t is not a parameter of this case");
        const long long p = c.p, q = *c.q, t = *c.t;
        require(t == p || t == q || t == p * p || t == p * q,
                name + ": t must be one of p, q, p^2, pq");
        require(divides(t - 1, p * p * q - 1),
                name + ": (t-1) must divide (p^2*q - 1)");
    }
    if (c.l) {
        require(has_l_parameter(c.id), name + ": l is not a parameter of this case");
        const auto [coeff, target] = l_constraint(c.id, c.p, c.q);
        require(c.l->size() == coeff.size(),
                name + ": l must have " + std::to_string(coeff.size()) + " entries");
        long long sum = 0;
        for (size_t i = 0; i < coeff.size(); ++i) {
            require((*c.l)[i] >= 1, name + ": l entries must be positive");
            sum += coeff[i] * (*c.l)[i];
        }
        require(sum == target, name + ": l does not satisfy its linear constraint");
    }
    if (c.id == CaseId::T25a) {
        require(divides(*c.q - 1, c.p * *c.q - 1),
                name + ": hypothesis cannot hold, (q-1) does not divide (pq-1) for p=" +
                    std::to_string(c.p) + ", q=" + std::to_string(*c.q));
    }
    if (c.id == CaseId::T25b) {
        require(divides(c.p - 1, c.p * *c.q - 1),
                name + ": hypothesis cannot hold, (p-1) does not divide (pq-1) for p=" +
                    std::to_string(c.p) + ", q=" + std::to_string(*c.q));
    }
}

std::vector<std::vector<long long>> enumerate_l(CaseId id, long long p,
                                                std::optional<long long> q) {
    const auto [coeff, target] = l_constraint(id, p, q);
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    positive_solutions(coeff, 0, target, cur, out);
    return out;  // already lexicographic
}

std::vector<long long> t_candidates(long long p, long long q) {
    std::vector<long long> pool = {p, q, p * p, p * q};
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    std::vector<long long> out;
    for (long long t : pool) {
        if (divides(t - 1, p * p * q - 1)) out.push_back(t);
    }
    return out;
}

Prediction predict(const TheoremCase& c) {
    validate_case(c);
    const long long p = c.p;
    const long long q = c.q.value_or(0);
    Prediction pred;
    pred.theorem_case = c;

    auto add_l_outcomes = [&](long long size1, long long size2) {
        // one outcome per feasible l-vector: l1 components of size1, l2 of size2
        std::vector<std::vector<long long>> ls;
        if (c.l) {
            ls.push_back(*c.l);
        } else {
            ls = enumerate_l(c.id, p, c.q);
            if (ls.empty()) {
                throw NoSolutions(case_name(c.id) +
                                  ": the l-constraint has no positive solution; the case is "
                                  "vacuous for these parameters");
            }
        }
        for (const auto& l : ls) {
            pred.outcomes.push_back(
                make_outcome({{size1, l[0]}, {size2, l[1]}}, std::nullopt, l));
        }
    };

    switch (c.id) {
        case CaseId::T21a: {
            if (!c.l) {
                pred.outcomes.push_back(
                    make_outcome({{p * p - p, p * p + p + 1}}, std::nullopt, std::nullopt));
            }
            add_l_outcomes(p * p - p, p * p * p - p);
            break;
        }
        case CaseId::T21b:
            pred.outcomes.push_back(
                make_outcome({{p * p * p - p * p, p + 1}}, std::nullopt, std::nullopt));
            break;
        case CaseId::T22a: {
            if (!c.l) {
                pred.outcomes.push_back(make_outcome({{p * p * p - p * p, p * p + p + 1}},
                                                     std::nullopt, std::nullopt));
            }
            add_l_outcomes(p * p * p - p * p, p * p * p - p);
            break;
        }
        case CaseId::T22b:
            pred.outcomes.push_back(make_outcome({{p * p * p * p - p * p * p, p + 1}},
                                                 std::nullopt, std::nullopt));
            break;
        case CaseId::T23a: {
            std::vector<long long> ts;
            if (c.t) {
                ts.push_back(*c.t);
            } else {
                ts = t_candidates(p, q);
                require(!ts.empty(),
                        "T23a: no admissible t, the hypothesis cannot hold for p=" +
                            std::to_string(p) + ", q=" + std::to_string(q));
            }
            for (long long t : ts) {
                pred.outcomes.push_back(
                    make_outcome({{t - 1, (p * p * q - 1) / (t - 1)}}, t, std::nullopt));
            }
            break;
        }
        case CaseId::T23b: {
            std::vector<std::vector<long long>> ls;
            if (c.l) {
                ls.push_back(*c.l);
            } else {
                ls = enumerate_l(c.id, p, c.q);
                if (ls.empty()) {
                    throw NoSolutions(
                        "T23b: the l-constraint has no positive solution; the case is vacuous "
                        "for these parameters");
                }
            }
            for (const auto& l : ls) {
                pred.outcomes.push_back(make_outcome({{p - 1, l[0]},
                                                      {q - 1, l[1]},
                                                      {p * p - 1, l[2]},
                                                      {p * q - 1, l[3]}},
                                                     std::nullopt, l));
            }
            break;
        }
        case CaseId::T24:
            pred.outcomes.push_back(make_outcome({{p * p * q - p * q, p + 1}}, std::nullopt,
                                                 std::nullopt));
            break;
        case CaseId::T25a:
            pred.outcomes.push_back(make_outcome(
                {{p * p * q - p * p, (p * q - 1) / (q - 1)}}, std::nullopt, std::nullopt));
            break;
        case CaseId::T25b:
            pred.outcomes.push_back(make_outcome(
                {{p * p * p - p * p, (p * q - 1) / (p - 1)}}, std::nullopt, std::nullopt));
            break;
        case CaseId::T25c:
            add_l_outcomes(p * p * p - p * p, p * p * q - p * p);
            break;
    }
    return pred;
}

bool toroidality_condition(const TheoremCase& c) {
    Prediction pred = predict(c);
    if (pred.outcomes.size() != 1) {
        throw std::invalid_argument(
            "toroidality_condition needs a fully parameterized case (got " +
            std::to_string(pred.outcomes.size()) + " outcomes)");
    }
    return pred.outcomes.front().genus == 1;
}

std::optional<long long> statement_genus(const TheoremCase& c, const Outcome& o) {
    const long long p = c.p;
    const long long q = c.q.value_or(0);
    const auto& l = o.l;

    switch (c.id) {
        case CaseId::T21a: {
            if (p == 2) return std::nullopt;  // statement pins the set {0, 1, 2}
            if (!l) return (p * p + p + 1) * c12((p * p - p - 3) * (p * p - p - 4));
            return (*l)[0] * c12((p * p - p - 3) * (p * p - p - 4)) +
                   (*l)[1] * c12((p * p * p - p - 3) * (p * p * p - p - 4));
        }
        case CaseId::T21b: {
            if (p == 2) return 0;
            return (p + 1) * c12((p * p * p - p * p - 3) * (p * p * p - p * p - 4));
        }
        case CaseId::T22a: {
            if (p == 2) return std::nullopt;
            if (!l) return (p * p + p + 1) * c12((p * p * p - p * p - 3) * (p * p * p - p * p - 4));
            return (*l)[0] * c12((p * p * p - p * p - 3) * (p * p * p - p * p - 4)) +
                   (*l)[1] * c12((p * p * p - p - 3) * (p * p * p - p - 4));
        }
        case CaseId::T22b:
            return (p + 1) * c12((p * p * p * p - p * p * p - 3) * (p * p * p * p - p * p * p - 4));
        case CaseId::T23a: {
            const long long t = *o.t;
            if (t - 1 <= 4) return 0;           // components of at most 4 vertices
            if (t - 1 == 5) return std::nullopt;  // no such t satisfies the divisibility
            return ((p * p * q - 1) / (t - 1)) * c12((t - 4) * (t - 5));
        }
        case CaseId::T23b: {
            const long long l1 = (*l)[0], l2 = (*l)[1], l3 = (*l)[2], l4 = (*l)[3];
            if (p == 2 && q == 2) return 0;
            if (p == 2 && q == 3) return l4;
            if (p == 2) return l2 * c12((q - 4) * (q - 5)) + l4 * c12((2 * q - 4) * (2 * q - 5));
            if (q == 2 && p == 3) return 2 * l3 + l4;
            if (q == 2)
                return l1 * c12((p - 4) * (p - 5)) + l3 * c12((p * p - 4) * (p * p - 5)) +
                       l4 * c12((2 * p - 4) * (2 * p - 5));
            if (p == 3 && q == 3) return 2 * (l3 + l4);
            if (p == 3)
                return l2 * c12((q - 4) * (q - 5)) + 2 * l3 +
                       l4 * c12((3 * q - 4) * (3 * q - 5));
            if (q == 3)
                return l1 * c12((p - 4) * (p - 5)) + l3 * c12((p * p - 4) * (p * p - 5)) +
                       l4 * c12((3 * p - 4) * (3 * p - 5));
            return l1 * c12((p - 4) * (p - 5)) + l2 * c12((q - 4) * (q - 5)) +
                   l3 * c12((p * p - 4) * (p * p - 5)) + l4 * c12((p * q - 4) * (p * q - 5));
        }
        case CaseId::T24: {
            if (p == 2 && q == 2) return 0;
            if (p == 2) return 3 * c12((2 * q - 3) * (2 * q - 4));
            if (q == 2)
                return (p + 1) * c12((2 * p * p - 2 * p - 3) * (2 * p * p - 2 * p - 4));
            return (p + 1) * c12((p * p * q - p * q - 3) * (p * p * q - p * q - 4));
        }
        case CaseId::T25a: {
            if (p == 2 && q == 2) return 0;
            if (q == 2) return (2 * p - 1) * c12((p * p - 3) * (p * p - 4));
            return ((p * q - 1) / (q - 1)) *
                   c12((p * p * q - p * p - 3) * (p * p * q - p * p - 4));
        }
        case CaseId::T25b: {
            if (p == 2) return 0;
            return ((p * q - 1) / (p - 1)) *
                   c12((p * p * p - p * p - 3) * (p * p * p - p * p - 4));
        }
        case CaseId::T25c: {
            const long long l1 = (*l)[0], l2 = (*l)[1];
            if (p == 2 && q == 2) return 0;
            if (p == 2) return l2 * c12((4 * q - 7) * (4 * q - 8));
            if (q == 2)
                return l1 * c12((p * p * p - p * p - 3) * (p * p * p - p * p - 4)) +
                       l2 * c12((p * p - 3) * (p * p - 4));
            return l1 * c12((p * p * p - p * p - 3) * (p * p * p - p * p - 4)) +
                   l2 * c12((p * p * q - p * p - 3) * (p * p * q - p * p - 4));
        }
    }
    return std::nullopt;
}

std::optional<std::vector<long long>> statement_genus_set(CaseId id, long long p,
                                                          std::optional<long long>) {
    if ((id == CaseId::T21a || id == CaseId::T22a) && p == 2) {
        return std::vector<long long>{0, 1, 2};
    }
    return std::nullopt;
}

}  // namespace ringgenus::theorems
