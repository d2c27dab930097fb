#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace aegyptus {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when a factorization or search exceeds its configured effort.
// Never a silent approximation: callers either get an exact answer or this.
struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int ceil_div(const Int& a, const Int& b) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int pow_ui(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

// Canonical reduced rational with positive denominator.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("make_rat: zero denominator");
    Rat q(std::move(num), std::move(den));
    q.canonicalize();
    return q;
}

inline Rat unit_fraction(const Int& x) {
    if (x < 1) throw std::domain_error("unit_fraction: denominator must be positive");
    return make_rat(1, x);
}

inline Rat rational_add(const Rat& a, const Rat& b) { return a + b; }

// Smallest integer x with 1/x <= q, for q > 0.
inline Int smallest_unit_denominator(const Rat& q) {
    if (q <= 0) throw std::domain_error("smallest_unit_denominator: needs q > 0");
    return ceil_div(q.get_den(), q.get_num());
}

// A finite sum of unit fractions, kept sorted non-decreasing. The distinct
// flag reflects the stored data (strictly increasing <=> distinct).
class UnitFractionSum {
public:
    UnitFractionSum() = default;

    explicit UnitFractionSum(std::vector<Int> denominators)
        : denoms_(std::move(denominators)) {
        for (const Int& d : denoms_)
            if (d < 1) throw std::domain_error("UnitFractionSum: denominators must be positive");
        std::sort(denoms_.begin(), denoms_.end());
        distinct_ = std::adjacent_find(denoms_.begin(), denoms_.end()) == denoms_.end();
    }

    const std::vector<Int>& denominators() const { return denoms_; }
    bool distinct() const { return distinct_; }
    std::size_t size() const { return denoms_.size(); }
    bool empty() const { return denoms_.empty(); }

    // Exact Σ 1/x_i.
    Rat value() const {
        Rat sum(0);
        for (const Int& d : denoms_) sum += make_rat(1, d);
        return sum;
    }

    std::string to_string() const {
        std::ostringstream out;
        for (std::size_t i = 0; i < denoms_.size(); ++i) {
            if (i) out << ',';
            out << denoms_[i];
        }
        return out.str();
    }

    friend bool operator==(const UnitFractionSum& a, const UnitFractionSum& b) {
        return a.denoms_ == b.denoms_;
    }

private:
    std::vector<Int> denoms_;
    bool distinct_ = true;
};

inline Rat sum_value(const UnitFractionSum& s) {
    if (s.empty()) throw std::domain_error("sum_value: empty sum");
    return s.value();
}

// u_1 = 1, u_{i+1} = u_i(u_i + 1):  1, 2, 6, 42, 1806, ...
class SylvesterTable {
public:
    // by value: growing the table reallocates, references would not survive
    Int at(std::size_t i) {
        if (i < 1) throw std::domain_error("SylvesterTable: index starts at 1");
        while (u_.size() < i) {
            if (u_.empty())
                u_.emplace_back(1);
            else
                u_.push_back(u_.back() * (u_.back() + 1));
        }
        return u_[i - 1];
    }

private:
    std::vector<Int> u_;
};

inline Int sylvester(std::size_t i) {
    SylvesterTable t;
    return t.at(i);
}

// Cap on the i-th denominator of a k-term unit fraction partition of 1.
inline Int vardi_bound(std::size_t k, std::size_t i) {
    if (k < 1) throw std::domain_error("vardi_bound: k must be positive");
    return Int(static_cast<unsigned long>(k)) * sylvester(i);
}

// ---- factorization -------------------------------------------------------

struct FactorBudget {
    unsigned long trial_limit = 1ul << 20;  // trial-divide up to this bound
    unsigned rho_rounds = 64;               // Pollard rho restarts before giving up
};

using Factorization = std::vector<std::pair<Int, unsigned>>;  // (prime, exponent), primes ascending

namespace detail {

inline Int pollard_rho(const Int& n, unsigned long c, unsigned long max_iter) {
    // Brent's cycle variant; returns a nontrivial factor or 0.
    Int x = 2, y = 2, d = 1, diff, prod = 1;
    unsigned long i = 0;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    while (d == 1 && i < max_iter) {
        // batch gcd every 64 steps
        for (int j = 0; j < 64 && i < max_iter; ++j, ++i) {
            step(x);
            step(y);
            step(y);
            diff = x - y;
            if (diff == 0) return 0;  // cycle without factor; caller retries with new c
            prod = (prod * abs(diff)) % n;
        }
        d = gcd(prod, n);
    }
    if (d != 1 && d != n) return d;
    return 0;
}

}  // namespace detail

inline void factorize_into(Int n, Factorization& out, const FactorBudget& budget) {
    if (n < 1) throw std::domain_error("factorize: n must be >= 1");
    auto push = [&out](const Int& p) {
        if (!out.empty() && out.back().first == p)
            ++out.back().second;
        else
            out.emplace_back(p, 1);
    };
    for (unsigned long p : {2ul, 3ul, 5ul}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            push(Int(p));
        }
    }
    // wheel over 6k±1
    for (unsigned long p = 7; p <= budget.trial_limit; p += (p % 6 == 1) ? 4 : 2) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            push(Int(p));
        }
    }
    if (n == 1) {
        std::sort(out.begin(), out.end());
        return;
    }
    if (Int(budget.trial_limit) * budget.trial_limit > n ||
        mpz_probab_prime_p(n.get_mpz_t(), 30)) {
        push(n);
        std::sort(out.begin(), out.end());
        return;
    }
    // composite remainder beyond the trial bound: Pollard rho
    std::vector<Int> stack{n};
    unsigned rounds_used = 0;
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (mpz_probab_prime_p(m.get_mpz_t(), 30)) {
            push(m);
            continue;
        }
        Int f = 0;
        while (f == 0) {
            if (rounds_used >= budget.rho_rounds)
                throw BudgetExceeded("factorize: budget exhausted on composite " + m.get_str());
            f = detail::pollard_rho(m, 1 + rounds_used, 1ul << 18);
            ++rounds_used;
        }
        stack.push_back(f);
        stack.push_back(m / f);
    }
    // exponents of equal primes may be split across pushes; normalize
    std::sort(out.begin(), out.end());
    Factorization merged;
    for (auto& [p, e] : out) {
        if (!merged.empty() && merged.back().first == p)
            merged.back().second += e;
        else
            merged.emplace_back(p, e);
    }
    out = std::move(merged);
}

inline Factorization factorize(const Int& n, const FactorBudget& budget = {}) {
    Factorization f;
    factorize_into(Int(n), f, budget);
    return f;
}

inline std::vector<Int> divisors(const Factorization& f) {
    std::vector<Int> ds{1};
    for (const auto& [p, e] : f) {
        std::size_t base = ds.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline std::vector<Int> divisors(const Int& n, const FactorBudget& budget = {}) {
    return divisors(factorize(n, budget));
}

// ---- small-integer fast paths --------------------------------------------
//
// The bulk searches work on word-sized values; these avoid mpz traffic in
// inner loops. Inputs must stay below 2^62 or so (callers guarantee this).

namespace smallint {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// (prime, exponent) pairs by trial division; fine for n up to ~10^14 when
// the caller knows n is built from small parts, otherwise O(sqrt n).
inline void factorize_u64(u64 n, std::vector<std::pair<u64, unsigned>>& out) {
    for (u64 p : {2ull, 3ull, 5ull}) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
        }
    }
    for (u64 p = 7; p * p <= n; p += (p % 6 == 1) ? 4 : 2) {
        if (n % p == 0) {
            unsigned e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
}

inline std::vector<u64> divisors_u64(const std::vector<std::pair<u64, unsigned>>& f) {
    std::vector<u64> ds{1};
    for (const auto& [p, e] : f) {
        std::size_t base = ds.size();
        u64 pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

inline u64 gcd_u64(u64 a, u64 b) {
    while (b) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Smallest-prime-factor sieve for [2, limit].
class SpfSieve {
public:
    explicit SpfSieve(std::uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0) {
        for (std::uint32_t i = 2; i <= limit; ++i) {
            if (spf_[i] == 0) {
                for (std::uint64_t j = i; j <= limit; j += i)
                    if (spf_[j] == 0) spf_[j] = i;
            }
        }
    }

    std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
    std::uint32_t spf(std::uint32_t n) const { return spf_[n]; }
    bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }

    void factorize(std::uint32_t n, std::vector<std::pair<u64, unsigned>>& out) const {
        while (n > 1) {
            std::uint32_t p = spf_[n];
            unsigned e = 0;
            while (n % p == 0) n /= p, ++e;
            out.emplace_back(p, e);
        }
        std::sort(out.begin(), out.end());
    }

private:
    std::vector<std::uint32_t> spf_;
};

}  // namespace smallint

}  // namespace aegyptus
