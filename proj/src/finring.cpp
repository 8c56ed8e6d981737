#include "ringgenus/finring.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "ringgenus/util.hpp"

namespace ringgenus::finring {

namespace {

std::string join_ints(const std::vector<int>& v, const char* sep) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << sep;
        os << v[i];
    }
    return os.str();
}

}  // namespace

AdditiveGroup::AdditiveGroup(std::vector<int> invariants)
    : invariants_(std::move(invariants)) {
    if (invariants_.empty()) {
        throw std::invalid_argument("additive group needs at least one invariant factor");
    }
    for (size_t i = 0; i < invariants_.size(); ++i) {
        if (invariants_[i] < 2) {
            throw std::invalid_argument("invariant factors must be >= 2");
        }
        if (i + 1 < invariants_.size() && invariants_[i + 1] % invariants_[i] != 0) {
            throw std::invalid_argument("each invariant factor must divide the next");
        }
    }
    long long order = 1;
    for (int n : invariants_) {
        order *= n;
        if (order > (1LL << 30)) {
            throw SizeLimitExceeded("additive group order too large");
        }
    }
    order_ = static_cast<int>(order);
    weights_.assign(invariants_.size(), 1);
    for (int i = static_cast<int>(invariants_.size()) - 2; i >= 0; --i) {
        weights_[i] = weights_[i + 1] * invariants_[i + 1];
    }
}

std::vector<int> AdditiveGroup::coords_of(Element x) const {
    std::vector<int> c(invariants_.size());
    for (size_t i = 0; i < invariants_.size(); ++i) {
        c[i] = (x / weights_[i]) % invariants_[i];
    }
    return c;
}

Element AdditiveGroup::index_of(const std::vector<int>& coords) const {
    if (coords.size() != invariants_.size()) {
        throw std::invalid_argument("coordinate vector has wrong length");
    }
    long long x = 0;
    for (size_t i = 0; i < coords.size(); ++i) {
        if (coords[i] < 0 || coords[i] >= invariants_[i]) {
            throw std::invalid_argument("coordinate out of range");
        }
        x += static_cast<long long>(coords[i]) * weights_[i];
    }
    return static_cast<Element>(x);
}

Element AdditiveGroup::generator(int i) const {
    if (i < 0 || i >= rank()) throw std::invalid_argument("generator index out of range");
    return weights_[i];
}

Element AdditiveGroup::add(Element a, Element b) const {
    long long r = 0;
    for (size_t i = 0; i < invariants_.size(); ++i) {
        int ca = (a / weights_[i]) % invariants_[i];
        int cb = (b / weights_[i]) % invariants_[i];
        r += static_cast<long long>((ca + cb) % invariants_[i]) * weights_[i];
    }
    return static_cast<Element>(r);
}

Element AdditiveGroup::scalar_mul(long long m, Element x) const {
    long long r = 0;
    for (size_t i = 0; i < invariants_.size(); ++i) {
        int c = (x / weights_[i]) % invariants_[i];
        long long cm = (static_cast<long long>(c) * m) % invariants_[i];
        if (cm < 0) cm += invariants_[i];
        r += cm * weights_[i];
    }
    return static_cast<Element>(r);
}

bool RingTable::is_central(Element x) const {
    return std::binary_search(center_.begin(), center_.end(), x);
}

std::vector<std::vector<int>> RingTable::add_rows() const {
    std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rows[i][j] = add(i, j);
    return rows;
}

std::vector<std::vector<int>> RingTable::mul_rows() const {
    std::vector<std::vector<int>> rows(n_, std::vector<int>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) rows[i][j] = mul(i, j);
    return rows;
}

namespace {

// Identity of a raw addition table, or -1.
int find_zero(const std::vector<int>& add, int n) {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            ok = add[static_cast<size_t>(e) * n + x] == x;
        }
        if (ok) return e;
    }
    return -1;
}

bool is_abelian_group(const std::vector<int>& add, int n, int* zero_out) {
    int zero = find_zero(add, n);
    if (zero_out) *zero_out = zero;
    if (zero < 0) return false;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            if (add[static_cast<size_t>(i) * n + j] != add[static_cast<size_t>(j) * n + i]) return false;
        }
    }
    for (int i = 0; i < n; ++i) {
        bool has_inverse = false;
        for (int j = 0; j < n; ++j) {
            if (add[static_cast<size_t>(i) * n + j] == zero) { has_inverse = true; break; }
        }
        if (!has_inverse) return false;
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int ab = add[static_cast<size_t>(a) * n + b];
            for (int c = 0; c < n; ++c) {
                if (add[static_cast<size_t>(ab) * n + c] !=
                    add[static_cast<size_t>(a) * n + add[static_cast<size_t>(b) * n + c]]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_associative(const std::vector<int>& mul, int n) {
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int ab = mul[static_cast<size_t>(a) * n + b];
            for (int c = 0; c < n; ++c) {
                if (mul[static_cast<size_t>(ab) * n + c] !=
                    mul[static_cast<size_t>(a) * n + mul[static_cast<size_t>(b) * n + c]]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_left_distributive(const std::vector<int>& add, const std::vector<int>& mul, int n) {
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int bc_base = b;
            for (int c = 0; c < n; ++c) {
                int bc = add[static_cast<size_t>(bc_base) * n + c];
                int lhs = mul[static_cast<size_t>(a) * n + bc];
                int rhs = add[static_cast<size_t>(mul[static_cast<size_t>(a) * n + b]) * n +
                              mul[static_cast<size_t>(a) * n + c]];
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

bool is_right_distributive(const std::vector<int>& add, const std::vector<int>& mul, int n) {
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            int ab = add[static_cast<size_t>(a) * n + b];
            for (int c = 0; c < n; ++c) {
                int lhs = mul[static_cast<size_t>(ab) * n + c];
                int rhs = add[static_cast<size_t>(mul[static_cast<size_t>(a) * n + c]) * n +
                              mul[static_cast<size_t>(b) * n + c]];
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

std::optional<int> find_unity(const std::vector<int>& mul, int n) {
    for (int e = 0; e < n; ++e) {
        bool ok = true;
        for (int x = 0; x < n && ok; ++x) {
            ok = mul[static_cast<size_t>(e) * n + x] == x && mul[static_cast<size_t>(x) * n + e] == x;
        }
        if (ok) return e;
    }
    return std::nullopt;
}

std::vector<int> center_of_tables(const std::vector<int>& mul, int n) {
    std::vector<int> z;
    for (int x = 0; x < n; ++x) {
        bool central = true;
        for (int r = 0; r < n && central; ++r) {
            central = mul[static_cast<size_t>(x) * n + r] == mul[static_cast<size_t>(r) * n + x];
        }
        if (central) z.push_back(x);
    }
    return z;
}

void check_table_shape(const std::vector<std::vector<int>>& t, size_t n, const char* what) {
    if (t.size() != n) throw std::invalid_argument(std::string(what) + " table has wrong row count");
    for (const auto& row : t) {
        if (row.size() != n) throw std::invalid_argument(std::string(what) + " table is not square");
        for (int v : row) {
            if (v < 0 || static_cast<size_t>(v) >= n) {
                throw std::invalid_argument(std::string(what) + " table entry out of range");
            }
        }
    }
}

std::vector<int> flatten(const std::vector<std::vector<int>>& t) {
    std::vector<int> flat;
    flat.reserve(t.size() * t.size());
    for (const auto& row : t) flat.insert(flat.end(), row.begin(), row.end());
    return flat;
}

}  // namespace

// Internal builder shared by every constructor. When `assume_bilinear` is
// set the tables came from a bilinear extension over a genuine group, so the
// additive and distributivity axioms hold by construction and only
// associativity is re-checked.
RingTable build_from_tables(std::string name, std::vector<int> add, std::vector<int> mul,
                            int size_limit, bool assume_bilinear) {
    int n = 0;
    while (static_cast<size_t>(n + 1) * (n + 1) <= add.size()) ++n;
    if (static_cast<size_t>(n) * n != add.size() || add.size() != mul.size()) {
        throw std::invalid_argument("operation tables must be square and equally sized");
    }
    if (n > size_limit) {
        throw SizeLimitExceeded("ring order " + std::to_string(n) + " exceeds size limit " +
                                std::to_string(size_limit));
    }
    int zero = 0;
    if (!assume_bilinear) {
        if (!is_abelian_group(add, n, &zero)) {
            throw NotAbelianGroup("addition table is not an abelian group: " + name);
        }
        if (!is_associative(mul, n)) {
            throw NotAssociative("multiplication is not associative: " + name);
        }
        if (!is_left_distributive(add, mul, n) || !is_right_distributive(add, mul, n)) {
            throw NotDistributive("multiplication does not distribute over addition: " + name);
        }
    } else {
        if (!is_associative(mul, n)) {
            throw NotAssociative("multiplication is not associative: " + name);
        }
    }

    RingTable r;
    r.name_ = std::move(name);
    r.n_ = n;
    r.add_ = std::move(add);
    r.mul_ = std::move(mul);
    r.zero_ = zero;
    r.unity_ = find_unity(r.mul_, n);
    r.center_ = center_of_tables(r.mul_, n);
    return r;
}

ValidationReport validate_tables(const std::vector<std::vector<int>>& add,
                                 const std::vector<std::vector<int>>& mul) {
    if (add.empty()) throw std::invalid_argument("empty addition table");
    const size_t n = add.size();
    check_table_shape(add, n, "addition");
    check_table_shape(mul, n, "multiplication");
    const std::vector<int> a = flatten(add);
    const std::vector<int> m = flatten(mul);
    const int ni = static_cast<int>(n);

    ValidationReport rep;
    rep.abelian_group = is_abelian_group(a, ni, nullptr);
    rep.associative = is_associative(m, ni);
    rep.left_distributive = is_left_distributive(a, m, ni);
    rep.right_distributive = is_right_distributive(a, m, ni);
    rep.unity = find_unity(m, ni);
    auto z = center_of_tables(m, ni);
    rep.center_size = static_cast<long long>(z.size());
    rep.commutative = z.size() == n;
    return rep;
}

ValidationReport validate(const RingTable& ring) {
    return validate_tables(ring.add_rows(), ring.mul_rows());
}

namespace {

// Bilinear extension of generator products. Assumes the well-definedness
// check already passed.
std::vector<int> extend_bilinear(const AdditiveGroup& g,
                                 const std::vector<std::vector<Element>>& gen_products) {
    const int n = g.order();
    const int k = g.rank();
    std::vector<std::vector<int>> coords(n);
    for (int x = 0; x < n; ++x) coords[x] = g.coords_of(x);

    std::vector<int> mul(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            Element acc = 0;
            for (int i = 0; i < k; ++i) {
                if (coords[x][i] == 0) continue;
                for (int j = 0; j < k; ++j) {
                    if (coords[y][j] == 0) continue;
                    long long coeff = static_cast<long long>(coords[x][i]) * coords[y][j];
                    acc = g.add(acc, g.scalar_mul(coeff, gen_products[i][j]));
                }
            }
            mul[static_cast<size_t>(x) * n + y] = acc;
        }
    }
    return mul;
}

std::vector<int> group_add_table(const AdditiveGroup& g) {
    const int n = g.order();
    std::vector<int> add(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) add[static_cast<size_t>(x) * n + y] = g.add(x, y);
    return add;
}

void check_well_defined(const AdditiveGroup& g,
                        const std::vector<std::vector<Element>>& gen_products) {
    const auto& inv = g.invariants();
    const int k = g.rank();
    for (int i = 0; i < k; ++i) {
        for (int j = 0; j < k; ++j) {
            Element c = gen_products[i][j];
            if (g.scalar_mul(inv[i], c) != 0 || g.scalar_mul(inv[j], c) != 0) {
                throw NotWellDefined(
                    "product of generators " + std::to_string(i) + "," + std::to_string(j) +
                    " is not annihilated by the generator orders");
            }
        }
    }
}

}  // namespace

RingTable build_from_spec(const RingSpec& spec, int size_limit) {
    if (spec.mult_constants.has_value() == spec.full_tables.has_value()) {
        throw std::invalid_argument("spec must carry exactly one of constants or tables");
    }
    const AdditiveGroup& g = spec.additive;
    if (g.order() > size_limit) {
        throw SizeLimitExceeded("ring order " + std::to_string(g.order()) +
                                " exceeds size limit " + std::to_string(size_limit));
    }

    if (spec.full_tables) {
        check_table_shape(spec.full_tables->add, g.order(), "addition");
        check_table_shape(spec.full_tables->mul, g.order(), "multiplication");
        return build_from_tables(spec.name, flatten(spec.full_tables->add),
                                 flatten(spec.full_tables->mul), size_limit,
                                 /*assume_bilinear=*/false);
    }

    const int k = g.rank();
    const auto& cs = *spec.mult_constants;
    if (static_cast<int>(cs.size()) != k) {
        throw std::invalid_argument("constants must form a k x k array");
    }
    std::vector<std::vector<Element>> gen_products(k, std::vector<Element>(k));
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(cs[i].size()) != k) {
            throw std::invalid_argument("constants must form a k x k array");
        }
        for (int j = 0; j < k; ++j) {
            // index_of rejects coefficients not reduced mod the invariants
            gen_products[i][j] = g.index_of(cs[i][j]);
        }
    }
    check_well_defined(g, gen_products);
    return build_from_tables(spec.name, group_add_table(g), extend_bilinear(g, gen_products),
                             size_limit, /*assume_bilinear=*/true);
}

namespace {

// Shared builder for the 2x2 matrix-shaped rings. `entries` maps an element
// index to matrix entries and back via the callbacks.
RingTable build_matrix_like(const std::string& name, long long p, int n, int size_limit,
                            const std::function<std::array<long long, 4>(int)>& unpack,
                            const std::function<int(const std::array<long long, 4>&)>& pack) {
    if (!util::is_prime(p)) throw std::invalid_argument(name + ": p must be prime");
    if (n > size_limit) {
        throw SizeLimitExceeded(name + ": order " + std::to_string(n) + " exceeds size limit " +
                                std::to_string(size_limit));
    }
    std::vector<int> add(static_cast<size_t>(n) * n), mul(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        const auto a = unpack(x);
        for (int y = 0; y < n; ++y) {
            const auto b = unpack(y);
            std::array<long long, 4> s{}, m{};
            for (int i = 0; i < 4; ++i) s[i] = (a[i] + b[i]) % p;
            m[0] = (a[0] * b[0] + a[1] * b[2]) % p;
            m[1] = (a[0] * b[1] + a[1] * b[3]) % p;
            m[2] = (a[2] * b[0] + a[3] * b[2]) % p;
            m[3] = (a[2] * b[1] + a[3] * b[3]) % p;
            add[static_cast<size_t>(x) * n + y] = pack(s);
            mul[static_cast<size_t>(x) * n + y] = pack(m);
        }
    }
    return build_from_tables(name, std::move(add), std::move(mul), size_limit,
                             /*assume_bilinear=*/false);
}

}  // namespace

RingTable matrix_ring(long long p, int size_limit) {
    const long long order = p * p * p * p;
    if (order > (1LL << 30)) throw SizeLimitExceeded("matrix_ring: order too large");
    const int n = static_cast<int>(order);
    auto unpack = [p](int x) {
        std::array<long long, 4> e{};
        e[3] = x % p; x /= static_cast<int>(p);
        e[2] = x % p; x /= static_cast<int>(p);
        e[1] = x % p; x /= static_cast<int>(p);
        e[0] = x % p;
        return e;
    };
    auto pack = [p](const std::array<long long, 4>& e) {
        return static_cast<int>(((e[0] * p + e[1]) * p + e[2]) * p + e[3]);
    };
    return build_matrix_like("M2(F" + std::to_string(p) + ")", p, n, size_limit, unpack, pack);
}

RingTable upper_triangular_ring(long long p, int size_limit) {
    const long long order = p * p * p;
    if (order > (1LL << 30)) throw SizeLimitExceeded("upper_triangular_ring: order too large");
    const int n = static_cast<int>(order);
    // element (a, b; 0, d) has index (a*p + b)*p + d
    auto unpack = [p](int x) {
        std::array<long long, 4> e{};
        e[3] = x % p; x /= static_cast<int>(p);
        e[1] = x % p; x /= static_cast<int>(p);
        e[0] = x % p;
        e[2] = 0;
        return e;
    };
    auto pack = [p](const std::array<long long, 4>& e) {
        return static_cast<int>((e[0] * p + e[1]) * p + e[3]);
    };
    return build_matrix_like("T2(F" + std::to_string(p) + ")", p, n, size_limit, unpack, pack);
}

RingTable row_ring(long long p, int size_limit) {
    if (!util::is_prime(p)) throw std::invalid_argument("row_ring: p must be prime");
    const long long order = p * p;
    if (order > (1LL << 30)) throw SizeLimitExceeded("row_ring: order too large");
    const int n = static_cast<int>(order);
    std::vector<int> add(static_cast<size_t>(n) * n), mul(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        const long long a = x / p, b = x % p;
        for (int y = 0; y < n; ++y) {
            const long long c = y / p, d = y % p;
            add[static_cast<size_t>(x) * n + y] =
                static_cast<int>(((a + c) % p) * p + (b + d) % p);
            mul[static_cast<size_t>(x) * n + y] =
                static_cast<int>(((a * c) % p) * p + (a * d) % p);
        }
    }
    return build_from_tables("Row(F" + std::to_string(p) + ")", std::move(add), std::move(mul),
                             size_limit, /*assume_bilinear=*/false);
}

RingTable direct_product(const RingTable& r, const RingTable& s, int size_limit) {
    const long long order = static_cast<long long>(r.order()) * s.order();
    if (order > size_limit) {
        throw SizeLimitExceeded("direct_product: order " + std::to_string(order) +
                                " exceeds size limit " + std::to_string(size_limit));
    }
    const int n = static_cast<int>(order);
    const int ns = s.order();
    std::vector<int> add(static_cast<size_t>(n) * n), mul(static_cast<size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        const int xr = x / ns, xs = x % ns;
        for (int y = 0; y < n; ++y) {
            const int yr = y / ns, ys = y % ns;
            add[static_cast<size_t>(x) * n + y] = r.add(xr, yr) * ns + s.add(xs, ys);
            mul[static_cast<size_t>(x) * n + y] = r.mul(xr, yr) * ns + s.mul(xs, ys);
        }
    }
    return build_from_tables(r.name() + "x" + s.name(), std::move(add), std::move(mul),
                             size_limit, /*assume_bilinear=*/false);
}

std::vector<Element> center(const RingTable& ring) {
    return ring.center();
}

std::vector<Element> centralizer(const RingTable& ring, Element x) {
    if (x < 0 || x >= ring.order()) {
        throw InvalidElement("element index " + std::to_string(x) + " outside ring of order " +
                             std::to_string(ring.order()));
    }
    std::vector<Element> c;
    for (Element y = 0; y < ring.order(); ++y) {
        if (ring.commutes(x, y)) c.push_back(y);
    }
    return c;
}

long long enumeration_candidates(const AdditiveGroup& group) {
    const long long k = group.rank();
    return util::ipow(group.order(), k * k);
}

void enumerate_rings(const AdditiveGroup& group, const RingFilters& filters, long long budget,
                     const std::function<bool(const RingTable&)>& sink) {
    const long long candidates = enumeration_candidates(group);
    if (candidates > budget) {
        throw BudgetExceeded("enumeration space of " + std::to_string(candidates) +
                                 " structure-constant tables exceeds budget " +
                                 std::to_string(budget),
                             candidates);
    }

    const int n = group.order();
    const int k = group.rank();
    const int kk = k * k;
    const auto& inv = group.invariants();
    const int exponent = inv.back();

    std::vector<std::vector<int>> coords(n);
    for (int x = 0; x < n; ++x) coords[x] = group.coords_of(x);
    const std::vector<int> add = group_add_table(group);

    // scalar multiples m*x for m in [0, exponent)
    std::vector<std::vector<Element>> smul(exponent, std::vector<Element>(n));
    for (int m = 0; m < exponent; ++m)
        for (int x = 0; x < n; ++x) smul[m][x] = group.scalar_mul(m, x);

    std::vector<Element> c(kk, 0);  // c[i*k+j] = product of generators i and j
    std::vector<int> mul(static_cast<size_t>(n) * n);
    long long candidate_index = 0;

    auto well_defined = [&]() {
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) {
                Element x = c[i * k + j];
                if (smul[inv[i] % exponent][x] != 0 || smul[inv[j] % exponent][x] != 0) return false;
            }
        return true;
    };

    while (true) {
        if (well_defined()) {
            for (int x = 0; x < n; ++x) {
                for (int y = 0; y < n; ++y) {
                    Element acc = 0;
                    for (int i = 0; i < k; ++i) {
                        if (coords[x][i] == 0) continue;
                        for (int j = 0; j < k; ++j) {
                            if (coords[y][j] == 0) continue;
                            int coeff = (coords[x][i] * coords[y][j]) % exponent;
                            acc = add[static_cast<size_t>(acc) * n + smul[coeff][c[i * k + j]]];
                        }
                    }
                    mul[static_cast<size_t>(x) * n + y] = acc;
                }
            }
            bool keep = is_associative(mul, n);
            if (keep && filters.noncommutative.has_value()) {
                bool comm = true;
                for (int x = 0; x < n && comm; ++x)
                    for (int y = 0; y < x; ++y)
                        if (mul[static_cast<size_t>(x) * n + y] !=
                            mul[static_cast<size_t>(y) * n + x]) { comm = false; break; }
                keep = (!comm == *filters.noncommutative);
            }
            if (keep && filters.center_size.has_value()) {
                keep = static_cast<long long>(center_of_tables(mul, n).size()) ==
                       *filters.center_size;
            }
            if (keep && filters.has_unity.has_value()) {
                keep = find_unity(mul, n).has_value() == *filters.has_unity;
            }
            if (keep) {
                std::string name = "Z" + join_ints(inv, "xZ") + "#" + std::to_string(candidate_index);
                RingTable ring = build_from_tables(name, add, mul, n, /*assume_bilinear=*/true);
                if (!sink(ring)) return;
            }
        }
        // advance the structure-constant odometer, last coordinate fastest
        ++candidate_index;
        int pos = kk - 1;
        while (pos >= 0) {
            if (++c[pos] < n) break;
            c[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
    }
}

std::vector<RingTable> enumerate_rings(const AdditiveGroup& group, const RingFilters& filters,
                                       long long budget) {
    std::vector<RingTable> out;
    enumerate_rings(group, filters, budget, [&](const RingTable& r) {
        out.push_back(r);
        return true;
    });
    return out;
}

std::vector<std::vector<int>> abelian_groups(int order) {
    if (order < 2) throw std::invalid_argument("order must be >= 2");
    std::vector<std::vector<int>> out;
    // build invariant chains from the largest factor down
    std::vector<int> suffix;
    std::function<void(int, int)> rec = [&](int m, int cap) {
        if (m == 1) {
            out.emplace_back(suffix.rbegin(), suffix.rend());
            return;
        }
        for (int d = 2; d <= std::min(m, cap); ++d) {
            if (m % d == 0 && cap % d == 0) {
                suffix.push_back(d);
                rec(m / d, d);
                suffix.pop_back();
            }
        }
    };
    rec(order, order);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ringgenus::finring
