#pragma once

#include <aegyptus/core.hpp>

#include <functional>
#include <optional>
#include <set>

namespace aegyptus::census {

using smallint::u64;

// Restriction on admissible denominators. `next` drives the search directly,
// so sparse predicates (progressions, explicit sets) never cost a linear scan.
struct Predicate {
    enum class Kind { none, odd, interval, progression, explicit_set };

    Kind kind = Kind::none;
    Int lo, hi;            // interval [lo, hi]
    Int a, q;              // x ≡ a (mod q)
    std::vector<Int> set;  // sorted

    static Predicate none() { return {}; }

    static Predicate odd() {
        Predicate p;
        p.kind = Kind::odd;
        return p;
    }

    static Predicate interval(Int lo, Int hi) {
        if (lo >= hi) throw std::domain_error("Predicate: interval needs lo < hi");
        Predicate p;
        p.kind = Kind::interval;
        p.lo = std::move(lo);
        p.hi = std::move(hi);
        return p;
    }

    static Predicate progression(Int a, Int q) {
        if (q < 1 || a < 0 || a >= q) throw std::domain_error("Predicate: need 0 <= a < q");
        Predicate p;
        p.kind = Kind::progression;
        p.a = std::move(a);
        p.q = std::move(q);
        return p;
    }

    static Predicate explicit_set(std::vector<Int> xs) {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        Predicate p;
        p.kind = Kind::explicit_set;
        p.set = std::move(xs);
        return p;
    }

    // Smallest admissible value >= from, if any.
    std::optional<Int> next(const Int& from) const {
        switch (kind) {
            case Kind::none:
                return from;
            case Kind::odd:
                return from % 2 == 1 ? from : from + 1;
            case Kind::interval: {
                Int c = std::max(from, lo);
                if (c > hi) return std::nullopt;
                return c;
            }
            case Kind::progression: {
                Int r;
                mpz_mod(r.get_mpz_t(), Int(a - from).get_mpz_t(), q.get_mpz_t());
                return from + r;
            }
            case Kind::explicit_set: {
                auto it = std::lower_bound(set.begin(), set.end(), from);
                if (it == set.end()) return std::nullopt;
                return *it;
            }
        }
        return std::nullopt;
    }
};

struct Query {
    unsigned k = 1;
    Rat target = Rat(1);
    bool distinct = true;
    Int min_denominator = 2;
    Predicate predicate{};
    std::optional<Int> max_denominator{};
};

using Visitor = std::function<bool(const std::vector<Int>&)>;  // false stops the stream

namespace detail {

inline bool dfs(const Query& qy, std::vector<Int>& path, const Rat& r, unsigned left,
                const Visitor& visit) {
    Int prev = path.empty() ? Int(qy.min_denominator - 1) : path.back();

    if (left == 1) {
        if (r.get_num() != 1) return true;
        const Int& x = r.get_den();
        if (qy.distinct ? x <= prev : x < prev) return true;
        if (x < qy.min_denominator) return true;
        if (qy.max_denominator && x > *qy.max_denominator) return true;
        auto c = qy.predicate.next(x);
        if (!c || *c != x) return true;
        path.push_back(x);
        bool keep = visit(path);
        path.pop_back();
        return keep;
    }

    Int lo = qy.distinct ? prev + 1 : prev;
    if (lo < qy.min_denominator) lo = qy.min_denominator;
    Int forced = ceil_div(r.get_den(), r.get_num());  // least x with 1/x <= r
    if (lo < forced) lo = forced;
    Int hi = floor_div(Int(left) * r.get_den(), r.get_num());
    if (qy.max_denominator && hi > *qy.max_denominator) hi = *qy.max_denominator;

    for (std::optional<Int> cx = qy.predicate.next(lo); cx && *cx <= hi;
         cx = qy.predicate.next(*cx + 1)) {
        Rat rest = r - unit_fraction(*cx);
        if (rest == 0) continue;  // still need left-1 positive terms
        path.push_back(*cx);
        bool keep = dfs(qy, path, rest, left - 1, visit);
        path.pop_back();
        if (!keep) return false;
    }
    return true;
}

}  // namespace detail

// Depth-first, ascending-denominator enumeration of the solutions of
// Σ 1/x_i = target under the query's constraints. Solutions arrive exactly
// once, in lexicographic order. With no predicate a k beyond 7 is rejected;
// the solution count is doubly exponential in k.
inline void enumerate(const Query& qy, const Visitor& visit) {
    if (qy.k < 1) throw std::domain_error("census: k must be >= 1");
    if (qy.predicate.kind == Predicate::Kind::none && qy.k > 7)
        throw BudgetExceeded("census: k > 7 needs a restricting predicate");
    if (qy.k > 32) throw BudgetExceeded("census: k too large");
    if (qy.target <= 0) throw std::domain_error("census: target must be positive");
    if (qy.min_denominator < 1) throw std::domain_error("census: min denominator must be >= 1");
    std::vector<Int> path;
    detail::dfs(qy, path, qy.target, qy.k, visit);
}

inline std::vector<UnitFractionSum> enumerate_all(const Query& qy) {
    std::vector<UnitFractionSum> out;
    enumerate(qy, [&](const std::vector<Int>& xs) {
        out.emplace_back(xs);
        return true;
    });
    return out;
}

struct CountReport {
    unsigned k;
    bool distinct;
    Int count;
    Int bound_box;  // ∏_{i<=k} k·u_i, the exact pruning-volume bound
};

inline CountReport count(const Query& qy) {
    CountReport rep{qy.k, qy.distinct, 0, 1};
    SylvesterTable t;
    for (std::size_t i = 1; i <= qy.k; ++i) rep.bound_box *= Int(qy.k) * t.at(i);
    enumerate(qy, [&](const std::vector<Int>&) {
        ++rep.count;
        return true;
    });
    return rep;
}

// Candidates for the first denominator; used to partition work determinically
// across threads.
inline std::vector<Int> first_denominator_candidates(const Query& qy) {
    std::vector<Int> out;
    if (qy.k < 1 || qy.target <= 0) return out;
    Int lo = qy.min_denominator;
    Int forced = ceil_div(qy.target.get_den(), qy.target.get_num());
    if (lo < forced) lo = forced;
    Int hi = floor_div(Int(qy.k) * qy.target.get_den(), qy.target.get_num());
    if (qy.max_denominator && hi > *qy.max_denominator) hi = *qy.max_denominator;
    for (std::optional<Int> cx = qy.predicate.next(lo); cx && *cx <= hi;
         cx = qy.predicate.next(*cx + 1))
        out.push_back(*cx);
    return out;
}

// Enumerate only the solutions whose first denominator is x1.
inline void enumerate_with_first(const Query& qy, const Int& x1, const Visitor& visit) {
    Query sub = qy;
    sub.min_denominator = x1;
    enumerate(sub, [&](const std::vector<Int>& xs) {
        if (xs.front() != x1) return false;  // past the partition in lex order
        return visit(xs);
    });
}

// ---- subset search ------------------------------------------------------------

struct SubsetResult {
    std::optional<UnitFractionSum> solution;
    bool trivial_obstruction = false;  // Σ 1/a over the whole set is < 1
    u64 nodes = 0;
};

// Find S ⊆ A with Σ_{a∈S} 1/a = 1 by include-first depth-first search with a
// remaining-reciprocal-sum cut. The include-first order makes the reported
// witness deterministic. Exact rationals throughout; the node budget reports
// instead of running away.
inline SubsetResult subset_solution(std::vector<Int> A, u64 node_budget = 50'000'000) {
    for (const Int& a : A)
        if (a < 2) throw std::domain_error("subset_solution: members must be >= 2");
    std::sort(A.begin(), A.end());
    A.erase(std::unique(A.begin(), A.end()), A.end());

    std::vector<Rat> suffix(A.size() + 1, Rat(0));
    for (std::size_t i = A.size(); i-- > 0;) suffix[i] = suffix[i + 1] + unit_fraction(A[i]);

    SubsetResult res;
    if (suffix.empty() || suffix[0] < 1) {
        res.trivial_obstruction = true;
        return res;
    }

    std::vector<Int> chosen;
    auto rec = [&](auto&& self, std::size_t i, const Rat& r) -> bool {
        if (++res.nodes > node_budget)
            throw BudgetExceeded("subset_solution: node budget exhausted");
        if (r == 0) return true;
        if (i == A.size() || suffix[i] < r) return false;
        Rat u = unit_fraction(A[i]);
        if (u <= r) {
            chosen.push_back(A[i]);
            if (self(self, i + 1, r - u)) return true;
            chosen.pop_back();
        }
        return self(self, i + 1, r);
    };
    if (rec(rec, 0, Rat(1))) res.solution = UnitFractionSum(chosen);
    return res;
}

// Search (N, C·N] for a sub-collection of reciprocals summing to 1.
inline SubsetResult interval_search(const Int& N, const Rat& C, u64 node_budget = 50'000'000) {
    if (N < 1) throw std::domain_error("interval_search: need N >= 1");
    Int hi = floor_div(C.get_num() * N, C.get_den());
    if (hi - N > 5000) throw BudgetExceeded("interval_search: interval too wide for exact search");
    std::vector<Int> A;
    for (Int x = N + 1; x <= hi; ++x) A.push_back(x);
    if (A.empty()) return SubsetResult{std::nullopt, true, 0};
    return subset_solution(std::move(A), node_budget);
}

// Largest possible smallest denominator over all distinct k-term solutions,
// with a witness attaining it.
inline std::pair<Int, UnitFractionSum> max_min_denominator(unsigned k) {
    if (k < 1 || k > 6) throw std::domain_error("max_min_denominator: need 1 <= k <= 6");
    Query qy;
    qy.k = k;
    qy.distinct = true;
    qy.min_denominator = 1;
    Int best = 0;
    UnitFractionSum witness;
    enumerate(qy, [&](const std::vector<Int>& xs) {
        if (xs.front() > best) {
            best = xs.front();
            witness = UnitFractionSum(xs);
        }
        return true;
    });
    if (best == 0) throw std::logic_error("max_min_denominator: no solution found");
    return {best, witness};
}

// ---- Konyagin's construction ----------------------------------------------------

enum class KonyaginMove { double_exponent, increment_exponent };

struct KonyaginSolution {
    unsigned n;
    std::vector<KonyaginMove> chain;
    UnitFractionSum base;          // distinct solution of 1 containing 2^n - 1
    std::optional<Int> split_divisor;
    UnitFractionSum denominators;  // final solution after the split
};

namespace detail {

// Replace 1/(2^e - 1) inside the working set by the four fractions of one of
// the two exponent identities. Collisions abort: the construction promises
// distinct denominators.
inline void apply_exponent_identity(std::set<Int>& sol, unsigned e, bool doubling) {
    Int q = pow_ui(2, e) - 1;
    auto it = sol.find(q);
    if (it == sol.end()) throw std::logic_error("konyagin: 2^e - 1 missing from solution");
    sol.erase(it);
    std::vector<Int> add;
    if (doubling) {
        Int Q = pow_ui(2, 2 * e);  // 2^{2e}
        add = {Q - 1, Q, Q * (Q - 1), pow_ui(2, e) + 1};
    } else {
        Int M = pow_ui(2, e + 1);  // 2^{e+1}
        add = {M - 1, q * (M - 1), M, M * (M - 1)};
    }
    for (Int& v : add) {
        if (!sol.insert(std::move(v)).second)
            throw std::runtime_error("konyagin: identity collision");
    }
}

}  // namespace detail

// A distinct unit-fraction partition of 1 containing 1/(2^n - 1), built by
// walking the binary digits of n (double per digit, increment per set digit).
// The degenerate exponent-1 step is skipped by seeding exponent 2 with
// {2, 3, 6} directly.
inline UnitFractionSum konyagin_base(unsigned n, std::vector<KonyaginMove>* chain_out = nullptr) {
    if (n < 1 || n > 30) throw std::domain_error("konyagin_base: need 1 <= n <= 30");

    std::vector<KonyaginMove> chain;
    for (int bit = 30; bit >= 0; --bit) {
        if (!(n >> bit & 1u)) continue;
        for (int b = bit - 1; b >= 0; --b) {
            chain.push_back(KonyaginMove::double_exponent);
            if (n >> b & 1u) chain.push_back(KonyaginMove::increment_exponent);
        }
        break;
    }
    if (chain_out) *chain_out = chain;

    std::set<Int> sol{Int(1)};
    unsigned e = 1;
    for (KonyaginMove mv : chain) {
        unsigned target = mv == KonyaginMove::double_exponent ? 2 * e : e + 1;
        if (e == 1) {
            sol = {Int(2), Int(3), Int(6)};  // both identities degenerate at e = 1
        } else {
            detail::apply_exponent_identity(sol, e,
                                            mv == KonyaginMove::double_exponent);
        }
        e = target;
    }

    UnitFractionSum base{std::vector<Int>(sol.begin(), sol.end())};
    if (base.value() != 1) throw std::logic_error("konyagin_base: sum drifted");
    return base;
}

// One solution per divisor m of q = 2^n - 1: replace 1/q by
// 1/(q+m) + 1/(q + q^2/m). Splits whose denominators collide with the rest of
// the base are skipped, as is m = q (it would repeat a denominator).
inline std::vector<KonyaginSolution> konyagin_generate(unsigned n,
                                                       std::size_t budget = SIZE_MAX) {
    std::vector<KonyaginMove> chain;
    UnitFractionSum base = konyagin_base(n, &chain);
    Int q = pow_ui(2, n) - 1;

    std::set<Int> rest(base.denominators().begin(), base.denominators().end());
    rest.erase(q);

    std::vector<KonyaginSolution> out;
    for (const Int& m : divisors(q)) {
        if (out.size() >= budget) break;
        if (m == q) continue;
        Int d1 = q + m;
        Int d2 = q + q * (q / m);
        if (rest.count(d1) || rest.count(d2)) continue;
        std::vector<Int> xs(rest.begin(), rest.end());
        xs.push_back(d1);
        xs.push_back(d2);
        UnitFractionSum final_sum{std::move(xs)};
        if (final_sum.value() != 1 || !final_sum.distinct())
            throw std::logic_error("konyagin_generate: invalid split");
        out.push_back(KonyaginSolution{n, chain, base, m, std::move(final_sum)});
    }
    return out;
}

// ---- Landau's class-equation bound -----------------------------------------------

struct ClassEquation {
    Int order;
    std::vector<Int> sizes;  // ascending, sums to order
};

struct LandauReport {
    std::vector<ClassEquation> equations;
    Int max_order;
    Int box_bound;  // k·u_k, the exact denominator cap used by the census
};

// Candidate class equations with k classes: multiset solutions of
// 1 = Σ 1/y_i where the largest y equals the order (identity class) and every
// y_i divides it. The stronger filter m_i | order mirrors orbit sizes dividing
// the group order and can be toggled.
inline LandauReport landau_enumerate(unsigned k, bool require_size_divides_order = true) {
    if (k < 1 || k > 6) throw std::domain_error("landau_enumerate: need 1 <= k <= 6");
    Query qy;
    qy.k = k;
    qy.distinct = false;
    qy.min_denominator = 1;

    LandauReport rep;
    rep.max_order = 0;
    rep.box_bound = vardi_bound(k, k);
    enumerate(qy, [&](const std::vector<Int>& ys) {
        const Int& order = ys.back();
        std::vector<Int> sizes;
        for (const Int& y : ys) {
            if (order % y != 0) return true;
            Int m = order / y;
            if (require_size_divides_order && order % m != 0) return true;
            sizes.push_back(m);
        }
        std::sort(sizes.begin(), sizes.end());
        rep.equations.push_back(ClassEquation{order, std::move(sizes)});
        if (order > rep.max_order) rep.max_order = order;
        return true;
    });
    return rep;
}

}  // namespace aegyptus::census
