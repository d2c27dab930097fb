#pragma once

#include <aegyptus/core.hpp>

#include <cassert>
#include <optional>
#include <set>
#include <utility>

namespace aegyptus {

enum class Method { greedy, takenouchi, divisor_scheme, stewart, minimal };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::greedy: return "greedy";
        case Method::takenouchi: return "takenouchi";
        case Method::divisor_scheme: return "divisor_scheme";
        case Method::stewart: return "stewart";
        case Method::minimal: return "minimal";
    }
    return "?";
}

// A decomposition re-verifies its own exactness and distinctness on
// construction; nothing unchecked leaves this module.
struct Decomposition {
    Rat input;
    UnitFractionSum denominators;
    Method method;

    Decomposition(Rat in, UnitFractionSum d, Method m)
        : input(std::move(in)), denominators(std::move(d)), method(m) {
        if (denominators.value() != input)
            throw std::logic_error("Decomposition: denominators do not sum to input");
        if (!denominators.distinct())
            throw std::logic_error("Decomposition: denominators must be distinct");
    }
};

// ---- greedy ----------------------------------------------------------------

// At each step take the least x with 1/x <= remainder. The numerator of the
// remainder strictly decreases, so this needs at most num(q) steps, and the
// denominators come out strictly increasing.
inline Decomposition greedy(const Rat& q) {
    if (q <= 0 || q > 1) throw std::domain_error("greedy: need 0 < q <= 1");
    std::vector<Int> xs;
    Rat r = q;
    while (r > 0) {
        Int x = smallest_unit_denominator(r);
        Rat next = r - unit_fraction(x);
        assert(next.get_num() < r.get_num());
        xs.push_back(std::move(x));
        r = next;
    }
    return Decomposition(q, UnitFractionSum(std::move(xs)), Method::greedy);
}

// ---- Takenouchi rewrite -----------------------------------------------------

// Replace two copies of a repeated denominator by two larger ones of the same
// total value:
//   1/2t + 1/2t     = 1/(t+1) + 1/t(t+1)
//   1/(2t+1) + 1/(2t+1) = 1/(t+1) + 1/(t+1)(2t+1)
// The smallest repeated denominator is rewritten first, which makes the output
// deterministic. Denominator sums strictly increase, and a k-term sum of a
// fixed value has finitely many realisations, so the loop terminates. The two
// fixed points ({1,1} and {2,2}, where the rewrite reproduces its input) have
// no distinct realisation at all; they are reported as failure, as is the
// safety cap.
inline std::optional<UnitFractionSum> takenouchi_distinct(const UnitFractionSum& s,
                                                          std::size_t max_rewrites = 1u << 20) {
    if (s.empty()) throw std::domain_error("takenouchi_distinct: empty sum");
    std::multiset<Int> pool(s.denominators().begin(), s.denominators().end());
    for (std::size_t step = 0; step < max_rewrites; ++step) {
        auto rep = pool.end();
        for (auto it = pool.begin(); it != pool.end();) {
            auto nxt = std::next(it);
            if (nxt != pool.end() && *nxt == *it) {
                rep = it;
                break;
            }
            it = nxt;
        }
        if (rep == pool.end())
            return UnitFractionSum(std::vector<Int>(pool.begin(), pool.end()));

        Int x = *rep;
        Int a, b;
        if (x % 2 == 0) {
            Int t = x / 2;
            a = t + 1;
            b = t * (t + 1);
        } else {
            Int t = (x - 1) / 2;
            a = t + 1;
            b = a * x;
        }
        if (a == x && b == x) return std::nullopt;  // {1,1} or {2,2}
        pool.erase(rep);
        pool.erase(pool.find(x));
        pool.insert(std::move(a));
        pool.insert(std::move(b));
    }
    return std::nullopt;
}

// ---- two-term representations ----------------------------------------------

// Solutions x <= y of 1/x + 1/y = q (q reduced) correspond one-to-one to
// coprime divisor pairs d1 >= d2 of den(q) with num(q) | d1 + d2, via
// s = (d1+d2)/num, x = s*den/d1, y = s*den/d2.
inline std::vector<std::pair<Int, Int>> two_term_all(const Rat& q, const Int& min_x,
                                                     bool distinct,
                                                     const FactorBudget& budget = {}) {
    if (q <= 0) throw std::domain_error("two_term_all: need q > 0");
    const Int& num = q.get_num();
    const Int& den = q.get_den();
    std::vector<Int> ds = divisors(den, budget);
    std::vector<std::pair<Int, Int>> out;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            const Int& d1 = ds[i];
            const Int& d2 = ds[j];
            if (distinct && d1 == d2) continue;
            if (gcd(d1, d2) != 1) continue;
            Int top = d1 + d2;
            if (top % num != 0) continue;
            Int s = top / num;
            Int x = s * (den / d1);
            if (x < min_x) continue;
            out.emplace_back(std::move(x), s * (den / d2));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Stewart's criterion: reduced m/n is a sum of two distinct unit fractions
// iff n has coprime divisors n1 != n2 with m | n1 + n2. Returns the witness
// with the smallest x, or nothing.
inline std::optional<std::pair<Int, Int>> stewart_two_term(const Int& m, const Int& n,
                                                           const FactorBudget& budget = {}) {
    if (m < 1 || n < 1) throw std::domain_error("stewart_two_term: need m, n >= 1");
    if (gcd(m, n) != 1) throw std::domain_error("stewart_two_term: m/n must be reduced");
    auto all = two_term_all(make_rat(m, n), 1, /*distinct=*/true, budget);
    if (all.empty()) return std::nullopt;
    return all.front();
}

// ---- divisor-dense scheme ---------------------------------------------------

enum class DivisorBase { binary, primorial };

namespace detail {

// Write v as a sum of distinct divisors (taken from ds, sorted ascending).
// Depth-first from the largest divisor down with a remaining-sum cut; for the
// bases used here (powers of two, primorials) this always succeeds for any
// 0 <= v <= sigma(N).
inline bool pick_distinct_divisors(const Int& v, const std::vector<Int>& ds,
                                   std::vector<Int>& chosen) {
    std::vector<Int> suffix(ds.size() + 1, 0);
    for (std::size_t i = ds.size(); i-- > 0;) suffix[i] = suffix[i + 1] + ds[i];

    std::vector<Int> acc;
    auto rec = [&](auto&& self, const Int& rem, std::size_t idx) -> bool {
        if (rem == 0) return true;
        if (idx == 0 || suffix[0] - suffix[idx] < rem) return false;
        for (std::size_t i = idx; i-- > 0;) {
            if (ds[i] > rem) continue;
            if (suffix[0] - suffix[i + 1] < rem) return false;  // even taking all of them is short
            acc.push_back(ds[i]);
            if (self(self, rem - ds[i], i)) return true;
            acc.pop_back();
        }
        return false;
    };
    if (!rec(rec, v, ds.size())) return false;
    chosen = acc;
    return true;
}

}  // namespace detail

// Decompose q in (0,1) through a divisor-dense modulus N with
// den(q) <= N: split q into l/N plus a remainder over nN and write both
// numerators as sums of distinct divisors of N. Collisions between the two
// halves are cleaned up by the Takenouchi rewrite.
inline Decomposition divisor_scheme(const Rat& q, DivisorBase base = DivisorBase::primorial) {
    if (q <= 0 || q >= 1) throw std::domain_error("divisor_scheme: need 0 < q < 1");
    if (q.get_num() == 1)
        return Decomposition(q, UnitFractionSum({q.get_den()}), Method::divisor_scheme);

    const Int& n = q.get_den();
    const Int& m = q.get_num();

    Int N = 1;
    Factorization nf;
    if (base == DivisorBase::binary) {
        unsigned e = 0;
        while (N < n) N *= 2, ++e;
        nf = {{Int(2), e}};
    } else {
        Int p = 1;
        while (N < n) {
            mpz_nextprime(p.get_mpz_t(), p.get_mpz_t());
            N *= p;
            nf.emplace_back(p, 1);
        }
    }

    Int l = floor_div(m * N, n);
    Int rem = m * N - n * l;  // 0 <= rem < n <= N
    std::vector<Int> ds = divisors(nf);

    std::vector<Int> part_l, part_rem;
    if (!detail::pick_distinct_divisors(l, ds, part_l) ||
        !detail::pick_distinct_divisors(rem, ds, part_rem))
        throw std::logic_error("divisor_scheme: base is not divisor-dense enough");

    std::vector<Int> xs;
    for (const Int& d : part_l) xs.push_back(N / d);
    for (const Int& d : part_rem) xs.push_back(n * (N / d));

    UnitFractionSum raw{std::move(xs)};
    if (!raw.distinct()) {
        auto fixed = takenouchi_distinct(raw);
        if (!fixed) throw std::runtime_error("divisor_scheme: could not resolve collisions");
        raw = *std::move(fixed);
    }
    return Decomposition(q, std::move(raw), Method::divisor_scheme);
}

// ---- minimal term count -----------------------------------------------------

// Exhaustive search for the least k <= k_max admitting a distinct
// representation; among witnesses of that k the lexicographically smallest
// denominator sequence is returned. Candidates at each depth are forced into
// [ceil(1/r), floor(terms_left/r)], which keeps the tree small.
inline std::optional<Decomposition> min_terms(const Rat& q, unsigned k_max) {
    if (q <= 0 || q > 1) throw std::domain_error("min_terms: need 0 < q <= 1");
    if (k_max < 1 || k_max > 6) throw std::domain_error("min_terms: need 1 <= k_max <= 6");
    if (q == 1) return Decomposition(q, UnitFractionSum({Int(1)}), Method::minimal);

    std::vector<Int> path;
    auto dfs = [&](auto&& self, const Rat& r, const Int& prev, unsigned terms_left) -> bool {
        if (terms_left == 1) {
            if (r.get_num() != 1) return false;
            if (r.get_den() <= prev) return false;
            path.push_back(r.get_den());
            return true;
        }
        Int lo = smallest_unit_denominator(r);
        if (lo <= prev) lo = prev + 1;
        Int hi = floor_div(Int(terms_left) * r.get_den(), r.get_num());
        for (Int x = lo; x <= hi; ++x) {
            path.push_back(x);
            if (self(self, r - unit_fraction(x), x, terms_left - 1)) return true;
            path.pop_back();
        }
        return false;
    };

    for (unsigned k = 1; k <= k_max; ++k) {
        path.clear();
        if (dfs(dfs, q, Int(0), k))
            return Decomposition(q, UnitFractionSum(path), Method::minimal);
    }
    return std::nullopt;
}

}  // namespace aegyptus
