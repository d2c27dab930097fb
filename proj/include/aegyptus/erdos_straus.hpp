#pragma once

#include <aegyptus/core.hpp>
#include <aegyptus/decompose.hpp>

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace aegyptus::es {

using smallint::u128;
using smallint::u64;

inline bool is_es_triple(const Int& n, const Int& x, const Int& y, const Int& z) {
    if (n < 1 || x < 1 || y < 1 || z < 1) return false;
    return unit_fraction(x) + unit_fraction(y) + unit_fraction(z) == make_rat(4, n);
}

// 4/n = 1/x + 1/y + 1/z, checked exactly at construction. No unverified
// witness leaves this module.
struct Witness {
    Int n, x, y, z;

    Witness(Int n_, Int x_, Int y_, Int z_)
        : n(std::move(n_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {
        if (!is_es_triple(n, x, y, z))
            throw std::logic_error("Witness: 4/" + n.get_str() + " != 1/" + x.get_str() + " + 1/" +
                                   y.get_str() + " + 1/" + z.get_str());
    }
};

// ---- parametric identities --------------------------------------------------

// Two identity families solving 4/n on a whole congruence class:
//   first : parameters (a,c,d), class  -a/c            mod 4acd-1
//   second: parameters (c,d,k), k | 4c^2d+1, class -(4c^2d+1)/k  mod 4cd
struct Identity {
    enum class Family { first, second };

    Family family;
    Int a, c, d, k;  // a unused for the second family, k unused for the first

    static Identity first(Int a, Int c, Int d) {
        if (a < 1 || c < 1 || d < 1) throw std::domain_error("Identity: parameters must be >= 1");
        return Identity{Family::first, std::move(a), std::move(c), std::move(d), 1};
    }

    static Identity second(Int c, Int d, Int k) {
        if (c < 1 || d < 1 || k < 1) throw std::domain_error("Identity: parameters must be >= 1");
        if ((4 * c * c * d + 1) % k != 0)
            throw std::domain_error("Identity: k must divide 4c^2d+1");
        return Identity{Family::second, 0, std::move(c), std::move(d), std::move(k)};
    }

    Int modulus() const {
        if (family == Family::first) return 4 * a * c * d - 1;
        return 4 * c * d;
    }

    Int residue() const {
        Int m = modulus();
        if (family == Family::first) {
            Int cinv;
            // gcd(c, 4acd-1) = 1, so c is invertible
            if (!mpz_invert(cinv.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t()))
                throw std::logic_error("Identity: c not invertible");
            Int r = (-a * cinv) % m;
            if (r < 0) r += m;
            return r;
        }
        Int r = (-((4 * c * c * d + 1) / k)) % m;
        if (r < 0) r += m;
        return r;
    }
};

// Instantiate an identity at a concrete n of its class. Preconditions are
// reported with the divisibility that failed.
inline Witness identity_witness(const Identity& id, const Int& n) {
    if (n < 1) throw std::domain_error("identity_witness: n must be >= 1");
    Int M = id.modulus();
    if (id.family == Identity::Family::first) {
        Int top = id.c * n + id.a;
        if (top % M != 0)
            throw std::domain_error("identity_witness: (c*n + a) not divisible by 4acd-1; n is not in the class");
        Int b = top / M;
        return Witness(n, id.a * b * id.d, id.a * id.c * id.d * n, b * id.c * id.d * n);
    }
    Int e = (4 * id.c * id.c * id.d + 1) / id.k;
    Int top = n + e;
    if (top % M != 0)
        throw std::domain_error("identity_witness: (n + (4c^2d+1)/k) not divisible by 4cd; n is not in the class");
    Int a = top / M;
    Int w = a * id.k - id.c;
    if (w < 1) throw std::domain_error("identity_witness: ak - c must be positive");
    return Witness(n, a * id.d * w, a * id.c * id.d, w * id.c * id.d * n);
}

// All identities whose parameter product (acd, resp. c^2 d) is at most T.
inline std::vector<Identity> identities_up_to(unsigned long T) {
    std::vector<Identity> out;
    for (unsigned long a = 1; a <= T; ++a)
        for (unsigned long c = 1; a * c <= T; ++c)
            for (unsigned long d = 1; a * c * d <= T; ++d)
                out.push_back(Identity::first(a, c, d));
    for (unsigned long c = 1; c * c <= T; ++c)
        for (unsigned long d = 1; c * c * d <= T; ++d) {
            Int val = Int(4) * c * c * d + 1;
            for (const Int& k : divisors(val)) out.push_back(Identity::second(c, d, k));
        }
    return out;
}

// Distinct (residue, modulus) pairs covered by identities with parameter
// products <= T.
inline std::set<std::pair<Int, Int>> solved_classes(unsigned long T) {
    std::set<std::pair<Int, Int>> out;
    for (const Identity& id : identities_up_to(T)) out.emplace(id.residue(), id.modulus());
    return out;
}

// Distinct solved residues for one fixed modulus M (both families).
inline std::vector<Int> solved_residues_mod(const Int& M) {
    if (!M.fits_ulong_p()) throw BudgetExceeded("solved_residues_mod: modulus too large");
    std::set<Int> res;
    if (M >= 3 && M % 4 == 3) {
        unsigned long prod = mpz_get_ui(Int((M + 1) / 4).get_mpz_t());
        for (unsigned long a = 1; a <= prod; ++a) {
            if (prod % a) continue;
            for (unsigned long c = 1; c <= prod / a; ++c) {
                if ((prod / a) % c) continue;
                unsigned long d = prod / a / c;
                res.insert(Identity::first(a, c, d).residue());
            }
        }
    } else if (M >= 4 && M % 4 == 0) {
        unsigned long prod = mpz_get_ui(Int(M / 4).get_mpz_t());
        for (unsigned long c = 1; c <= prod; ++c) {
            if (prod % c) continue;
            unsigned long d = prod / c;
            Int val = Int(4) * c * c * d + 1;
            for (const Int& k : divisors(val)) res.insert(Identity::second(c, d, k).residue());
        }
    }
    return {res.begin(), res.end()};
}

// Residues mod M not covered by any identity class whose modulus divides M.
// Residues sharing a factor with M are dropped first: 4/n with such n reduces
// to a smaller case, and for prime n they do not occur at all.
inline std::vector<Int> uncovered_classes(const Int& M) {
    if (M < 2) throw std::domain_error("uncovered_classes: need M >= 2");
    if (M > 10'000'000) throw BudgetExceeded("uncovered_classes: modulus too large");
    std::vector<std::pair<Int, std::vector<Int>>> cover;  // (q, residues mod q)
    for (const Int& q : divisors(M)) {
        if (q < 3) continue;
        auto res = solved_residues_mod(q);
        if (!res.empty()) cover.emplace_back(q, std::move(res));
    }
    std::vector<Int> out;
    for (Int r = 0; r < M; ++r) {
        if (gcd(r, M) != 1) continue;
        bool covered = false;
        for (const auto& [q, res] : cover) {
            Int rq = r % q;
            if (std::binary_search(res.begin(), res.end(), rq)) {
                covered = true;
                break;
            }
        }
        if (!covered) out.push_back(r);
    }
    return out;
}

// ---- counting and searching -------------------------------------------------

enum class Flavor { distinct_unordered, multiset_unordered };

namespace detail {

using FactorVec = std::vector<std::pair<u64, unsigned>>;

inline void merge_factors(FactorVec& into, const FactorVec& other, int sign) {
    for (const auto& [p, e] : other) {
        auto it = std::find_if(into.begin(), into.end(), [&](const auto& pe) { return pe.first == p; });
        if (it == into.end()) {
            into.emplace_back(p, e);
        } else if (sign > 0) {
            it->second += e;
        } else {
            it->second -= e;
            if (it->second == 0) into.erase(it);
        }
    }
    std::sort(into.begin(), into.end());
}

// Completions 1/y + 1/z = num/den (reduced), y <= z, y >= min_y.
// Divisor-pair form of Stewart's criterion; z can exceed 64 bits, so
// everything is carried in 128-bit.
struct TwoTermHit {
    u128 y, z;
};

template <typename Fn>
inline void for_each_two_term(u64 num, u64 den, u64 min_y, bool allow_equal,
                              const std::vector<u64>& den_divisors, Fn&& fn) {
    const auto& ds = den_divisors;
    for (std::size_t i = 0; i < ds.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            u64 d1 = ds[i], d2 = ds[j];
            if (!allow_equal && d1 == d2) continue;
            if (smallint::gcd_u64(d1, d2) != 1) continue;
            u64 top = d1 + d2;
            if (top % num != 0) continue;
            u64 s = top / num;
            u128 y = static_cast<u128>(s) * (den / d1);
            if (y < min_y) continue;
            fn(TwoTermHit{y, static_cast<u128>(s) * (den / d2)});
        }
    }
}

inline std::string u128_str(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

inline bool verify_quad(u64 n, u128 x, u128 y, u128 z) {
    // 4xyz == n(xy + yz + xz), done in mpz when the products might not fit.
    auto big = [](u128 v) { return v >> 42; };
    if (!big(x) && !big(y) && !big(z)) {
        u128 xy = x * y, yz = y * z, xz = x * z;
        return 4 * xy * z == static_cast<u128>(n) * (xy + yz + xz);
    }
    auto to_mpz = [](u128 v) {
        Int r = static_cast<unsigned long>(v >> 64);
        r <<= 64;
        r += static_cast<unsigned long>(v);
        return r;
    };
    Int X = to_mpz(x), Y = to_mpz(y), Z = to_mpz(z);
    return Int(4) * X * Y * Z == Int(static_cast<unsigned long>(n)) * (X * Y + Y * Z + X * Z);
}

}  // namespace detail

// Exact number of representations m_target/n = 1/x + 1/y + 1/z. The x loop
// runs over (n/4, 3n/4]; completions for the remainder are counted through
// the divisor pairs of its denominator rather than a y sweep, which is the
// same count at a fraction of the cost.
inline u64 f_count(u64 n, Flavor flavor = Flavor::distinct_unordered) {
    if (n < 2) throw std::domain_error("f_count: need n >= 2");
    if (n > 100'000'000) throw BudgetExceeded("f_count: n too large for exact search");
    const bool distinct = flavor == Flavor::distinct_unordered;

    detail::FactorVec nf;
    smallint::factorize_u64(n, nf);

    u64 count = 0;
    for (u64 x = n / 4 + 1; 4 * x <= 3 * n; ++x) {
        u64 s = 4 * x - n;
        u128 nx = static_cast<u128>(n) * x;
        u64 gg = smallint::gcd_u64(s, static_cast<u64>(nx % s));
        u64 num = s / gg;
        u64 den = static_cast<u64>(nx / gg);
        detail::FactorVec xf, gf, denf = nf;
        smallint::factorize_u64(x, xf);
        detail::merge_factors(denf, xf, +1);
        smallint::factorize_u64(gg, gf);
        detail::merge_factors(denf, gf, -1);
        std::vector<u64> ds = smallint::divisors_u64(denf);
        u64 min_y = distinct ? x + 1 : x;
        detail::for_each_two_term(num, den, min_y, /*allow_equal=*/!distinct, ds,
                                  [&](const detail::TwoTermHit& h) {
                                      if (distinct && h.y == h.z) return;
                                      ++count;
                                  });
    }
    return count;
}

// First witness of m/n = 1/x + 1/y + 1/z (x <= y <= z) in lexicographic
// order, or nothing. Repeats allowed.
inline std::optional<std::array<Int, 3>> solve_three(u64 m, u64 n) {
    if (m < 1 || n < 1) throw std::domain_error("solve_three: need m, n >= 1");
    if (n > 100'000'000 || m > 1'000'000)
        throw BudgetExceeded("solve_three: arguments too large for exact search");

    for (u64 x = n / m + 1; m * x <= 3 * n; ++x) {
        u64 s = m * x - n;
        u128 nx = static_cast<u128>(n) * x;
        u64 g = smallint::gcd_u64(s, static_cast<u64>(nx % s));
        u64 num = s / g;
        u64 den = static_cast<u64>(nx / g);
        detail::FactorVec denf;
        {
            detail::FactorVec nf, xf, gf;
            smallint::factorize_u64(n, nf);
            smallint::factorize_u64(x, xf);
            smallint::factorize_u64(g, gf);
            denf = nf;
            detail::merge_factors(denf, xf, +1);
            detail::merge_factors(denf, gf, -1);
        }
        std::vector<u64> ds = smallint::divisors_u64(denf);
        bool found = false;
        detail::TwoTermHit best{0, 0};
        detail::for_each_two_term(num, den, x, /*allow_equal=*/true, ds,
                                  [&](const detail::TwoTermHit& h) {
                                      if (!found || h.y < best.y || (h.y == best.y && h.z < best.z)) {
                                          best = h;
                                          found = true;
                                      }
                                  });
        if (found) {
            auto to_mpz = [](u128 v) {
                Int r = static_cast<unsigned long>(v >> 64);
                r <<= 64;
                r += static_cast<unsigned long>(v);
                return r;
            };
            return std::array<Int, 3>{Int(static_cast<unsigned long>(x)), to_mpz(best.y),
                                      to_mpz(best.z)};
        }
    }
    return std::nullopt;
}

// Does m/n have a k-term representation (k = 1, 2, 3)?
inline bool has_k_term(u64 m, u64 n, unsigned k, Flavor flavor) {
    u64 g = smallint::gcd_u64(m, n);
    u64 rm = m / g, rn = n / g;
    if (k == 1) return rm == 1;
    if (k == 2) {
        detail::FactorVec f;
        smallint::factorize_u64(rn, f);
        std::vector<u64> ds = smallint::divisors_u64(f);
        bool distinct = flavor == Flavor::distinct_unordered;
        bool found = false;
        detail::for_each_two_term(rm, rn, 1, /*allow_equal=*/!distinct, ds,
                                  [&](const detail::TwoTermHit& h) {
                                      if (distinct && h.y == h.z) return;
                                      found = true;
                                  });
        return found;
    }
    if (k == 3) {
        if (flavor == Flavor::multiset_unordered) return solve_three(m, n).has_value();
        if (rm >= 2 * rn) return false;  // three distinct unit fractions sum to < 2
        // distinct three-term search, first completion wins
        for (u64 x = rn / rm + 1; rm * x <= 3 * rn; ++x) {
            u64 s = rm * x - rn;
            u128 nx = static_cast<u128>(rn) * x;
            u64 g2 = smallint::gcd_u64(s, static_cast<u64>(nx % s));
            detail::FactorVec denf;
            {
                detail::FactorVec nf, xf, gf;
                smallint::factorize_u64(rn, nf);
                smallint::factorize_u64(x, xf);
                smallint::factorize_u64(g2, gf);
                denf = nf;
                detail::merge_factors(denf, xf, +1);
                detail::merge_factors(denf, gf, -1);
            }
            std::vector<u64> ds = smallint::divisors_u64(denf);
            bool found = false;
            detail::for_each_two_term(s / g2, static_cast<u64>(nx / g2), x + 1, false, ds,
                                      [&](const detail::TwoTermHit& h) {
                                          if (h.y != h.z) found = true;
                                      });
            if (found) return true;
        }
        return false;
    }
    throw std::domain_error("has_k_term: k must be 1, 2 or 3");
}

// E_{m,k}(N): how many n in [2, N] admit no k-term representation of m/n.
inline u64 count_exceptions(u64 m, unsigned k, u64 N,
                            Flavor flavor = Flavor::multiset_unordered) {
    u64 count = 0;
    for (u64 n = 2; n <= N; ++n)
        if (!has_k_term(m, n, k, flavor)) ++count;
    return count;
}

// ---- bulk verification -------------------------------------------------------

enum class VerifyMethod { even, composite, mod4, mod8, class_sieve, search };

inline const char* verify_method_name(VerifyMethod m) {
    switch (m) {
        case VerifyMethod::even: return "even";
        case VerifyMethod::composite: return "composite";
        case VerifyMethod::mod4: return "mod4";
        case VerifyMethod::mod8: return "mod8";
        case VerifyMethod::class_sieve: return "class";
        case VerifyMethod::search: return "search";
    }
    return "?";
}

struct Certificate {
    u64 n;
    VerifyMethod method;
    u128 x, y, z;
};

struct VerifyReport {
    u64 verified = 0;
    std::map<std::string, u64> by_method;
    std::vector<u64> failures;

    void merge(const VerifyReport& o) {
        verified += o.verified;
        for (const auto& [k, v] : o.by_method) by_method[k] += v;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

// Immutable tables shared by all verification workers: a smallest-prime-factor
// sieve and the identity classes, ordered by modulus so the cheap classes are
// tried first.
class VerifyContext {
public:
    struct ClassEntry {
        u64 modulus, residue;
        bool second;
        u64 a, c, d, k;
    };

    explicit VerifyContext(u64 max_n, unsigned long class_bound = 120)
        : sieve_(static_cast<std::uint32_t>(std::max<u64>(check_limit(max_n), 100))) {
        for (const Identity& id : identities_up_to(class_bound)) {
            ClassEntry e;
            e.modulus = mpz_get_ui(id.modulus().get_mpz_t());
            e.residue = mpz_get_ui(id.residue().get_mpz_t());
            e.second = id.family == Identity::Family::second;
            e.a = mpz_get_ui(id.a.get_mpz_t());
            e.c = mpz_get_ui(id.c.get_mpz_t());
            e.d = mpz_get_ui(id.d.get_mpz_t());
            e.k = mpz_get_ui(id.k.get_mpz_t());
            classes_.push_back(e);
        }
        std::sort(classes_.begin(), classes_.end(), [](const ClassEntry& l, const ClassEntry& r) {
            return std::tie(l.modulus, l.residue) < std::tie(r.modulus, r.residue);
        });
        classes_.erase(std::unique(classes_.begin(), classes_.end(),
                                   [](const ClassEntry& l, const ClassEntry& r) {
                                       return l.modulus == r.modulus && l.residue == r.residue;
                                   }),
                       classes_.end());
    }

    const smallint::SpfSieve& sieve() const { return sieve_; }
    const std::vector<ClassEntry>& classes() const { return classes_; }

private:
    static u64 check_limit(u64 max_n) {
        if (max_n > 2'000'000'000ull)
            throw BudgetExceeded("VerifyContext: range too large for the sieve");
        return max_n;
    }

    smallint::SpfSieve sieve_;
    std::vector<ClassEntry> classes_;
};

namespace detail {

// Witness for an odd prime p, chosen by the cheapest applicable method.
inline std::optional<Certificate> prime_witness(const VerifyContext& ctx, u64 p) {
    if (p % 4 == 3) {
        u64 t = (p - 3) / 4;
        return Certificate{p, VerifyMethod::mod4, t + 2, static_cast<u128>(t + 1) * (t + 2),
                           static_cast<u128>(t + 1) * p};
    }
    if (p % 8 == 5) {
        u64 t = (p - 5) / 8;
        return Certificate{p, VerifyMethod::mod8, 2 * (t + 1), static_cast<u128>(t + 1) * p,
                           static_cast<u128>(2 * (t + 1)) * p};
    }
    for (const auto& e : ctx.classes()) {
        if (p % e.modulus != e.residue) continue;
        if (!e.second) {
            u128 b = (static_cast<u128>(e.c) * p + e.a) / e.modulus;
            return Certificate{p, VerifyMethod::class_sieve, static_cast<u128>(e.a) * e.d * b,
                               static_cast<u128>(e.a) * e.c * e.d * p, b * e.c * e.d * p};
        }
        u64 ee = (4 * e.c * e.c * e.d + 1) / e.k;
        u128 a = (static_cast<u128>(p) + ee) / e.modulus;
        if (a * e.k <= e.c) continue;
        u128 w = a * e.k - e.c;
        return Certificate{p, VerifyMethod::class_sieve, a * e.d * w,
                           a * e.c * e.d, w * e.c * e.d * p};
    }
    if (auto t = solve_three(4, p)) {
        auto to_u128 = [](const Int& v) {
            u128 r = 0;
            for (char ch : v.get_str()) r = r * 10 + static_cast<unsigned>(ch - '0');
            return r;
        };
        return Certificate{p, VerifyMethod::search, to_u128((*t)[0]), to_u128((*t)[1]),
                           to_u128((*t)[2])};
    }
    return std::nullopt;
}

}  // namespace detail

using CertificateSink = std::function<void(const Certificate&)>;

// Check 4/n = 1/x + 1/y + 1/z for every n in [lo, hi]. Every witness is
// re-verified exactly before it counts. Composites inherit the witness of
// their smallest prime factor, scaled.
inline VerifyReport verify_range(const VerifyContext& ctx, u64 lo, u64 hi,
                                 const CertificateSink& sink = nullptr) {
    if (lo < 2) throw std::domain_error("verify_range: need lo >= 2");
    if (hi > ctx.sieve().limit()) throw std::domain_error("verify_range: range exceeds context");
    VerifyReport rep;
    for (u64 n = lo; n <= hi; ++n) {
        std::optional<Certificate> cert;
        if (n % 2 == 0) {
            u64 u = n / 2;
            cert = Certificate{n, VerifyMethod::even, u, 2 * u, 2 * u};
        } else {
            u64 p = ctx.sieve().spf(static_cast<std::uint32_t>(n));
            if (p == n) {
                cert = detail::prime_witness(ctx, n);
            } else if (auto pw = detail::prime_witness(ctx, p)) {
                u64 t = n / p;
                cert = Certificate{n, VerifyMethod::composite, pw->x * t, pw->y * t, pw->z * t};
            }
        }
        if (cert && detail::verify_quad(n, cert->x, cert->y, cert->z)) {
            ++rep.verified;
            ++rep.by_method[verify_method_name(cert->method)];
            if (sink) sink(*cert);
        } else {
            rep.failures.push_back(n);
        }
    }
    return rep;
}

inline VerifyReport verify_range(u64 lo, u64 hi) {
    VerifyContext ctx(hi);
    return verify_range(ctx, lo, hi);
}

// ---- gcd parametrization ------------------------------------------------------

// Encode a k-tuple by parameters t_I over nonempty I ⊆ {1..k}:
// t_I = gcd_{i∈I}(x_i) / ∏_{J ⊋ I} t_J, assigned from the largest I down.
struct GcdParametrization {
    unsigned k = 0;
    std::vector<Int> t;  // indexed by subset bitmask; t[0] unused

    friend bool operator==(const GcdParametrization&, const GcdParametrization&) = default;
};

inline GcdParametrization gcd_parametrize(const std::vector<Int>& xs) {
    unsigned k = static_cast<unsigned>(xs.size());
    if (k < 2 || k > 5) throw std::domain_error("gcd_parametrize: need 2 <= k <= 5");
    for (const Int& x : xs)
        if (x < 1) throw std::domain_error("gcd_parametrize: entries must be >= 1");

    unsigned full = (1u << k) - 1;
    GcdParametrization P{k, std::vector<Int>(full + 1, Int(1))};
    std::vector<unsigned> masks;
    for (unsigned m = 1; m <= full; ++m) masks.push_back(m);
    std::sort(masks.begin(), masks.end(), [](unsigned a, unsigned b) {
        int pa = __builtin_popcount(a), pb = __builtin_popcount(b);
        return pa != pb ? pa > pb : a < b;
    });
    for (unsigned mask : masks) {
        Int g = 0;
        for (unsigned i = 0; i < k; ++i)
            if (mask & (1u << i)) g = gcd(g, xs[i]);
        Int prod = 1;
        for (unsigned sup = (mask + 1) | mask; sup <= full; sup = (sup + 1) | mask)
            prod *= P.t[sup];
        if (g % prod != 0) throw std::logic_error("gcd_parametrize: non-integral layer");
        P.t[mask] = g / prod;
    }
    return P;
}

inline std::vector<Int> reconstruct(const GcdParametrization& p) {
    std::vector<Int> xs(p.k, Int(1));
    unsigned full = (1u << p.k) - 1;
    for (unsigned mask = 1; mask <= full; ++mask)
        for (unsigned i = 0; i < p.k; ++i)
            if (mask & (1u << i)) xs[i] *= p.t[mask];
    return xs;
}

// ---- Theorem-1 style factoring of witnesses -----------------------------------

struct FamilyParams {
    int family;  // 1 or 2
    Int a, b, c, d;
};

// Try to express an ordered witness x <= y <= z of 4/p (p prime) as
//   family 1: (abd, acdp, bcdp)   or   family 2: (abd, acd, bcdp).
inline std::optional<FamilyParams> factor_witness_through_families(const Int& p, Int x, Int y,
                                                                   Int z) {
    std::array<Int, 3> w{std::move(x), std::move(y), std::move(z)};
    std::sort(w.begin(), w.end());

    auto family1 = [&](const Int& X, const Int& Y, const Int& Z) -> std::optional<FamilyParams> {
        if (Y % p != 0 || Z % p != 0) return std::nullopt;
        Int ys = Y / p, zs = Z / p;
        for (const Int& e : divisors(gcd(ys, zs))) {
            Int a = ys / e, b = zs / e;
            for (const Int& d : divisors(e))
                if (a * b * d == X) return FamilyParams{1, a, b, e / d, d};
        }
        return std::nullopt;
    };
    auto family2 = [&](const Int& X, const Int& Y, const Int& Z) -> std::optional<FamilyParams> {
        if (Z % p != 0 || Y % p == 0) return std::nullopt;
        Int zs = Z / p;
        for (const Int& e : divisors(gcd(Y, zs))) {
            Int a = Y / e, b = zs / e;
            for (const Int& d : divisors(e))
                if (a * b * d == X) return FamilyParams{2, a, b, e / d, d};
        }
        return std::nullopt;
    };

    if (auto r = family1(w[0], w[1], w[2])) return r;
    if (auto r = family2(w[0], w[1], w[2])) return r;
    if (auto r = family2(w[0], w[2], w[1])) return r;  // p dividing the middle term
    return std::nullopt;
}

// Ordered witnesses (x <= y <= z) of 4/n, ascending lexicographic, visited
// until fn returns false.
template <typename Fn>
inline void for_each_witness(u64 n, Fn&& fn) {
    for (u64 x = n / 4 + 1; 4 * x <= 3 * n; ++x) {
        u64 s = 4 * x - n;
        u128 nx = static_cast<u128>(n) * x;
        u64 g = smallint::gcd_u64(s, static_cast<u64>(nx % s));
        detail::FactorVec denf;
        {
            detail::FactorVec nf, xf, gf;
            smallint::factorize_u64(n, nf);
            smallint::factorize_u64(x, xf);
            smallint::factorize_u64(g, gf);
            denf = nf;
            detail::merge_factors(denf, xf, +1);
            detail::merge_factors(denf, gf, -1);
        }
        std::vector<u64> ds = smallint::divisors_u64(denf);
        std::vector<detail::TwoTermHit> hits;
        detail::for_each_two_term(s / g, static_cast<u64>(nx / g), x, /*allow_equal=*/true, ds,
                                  [&](const detail::TwoTermHit& h) { hits.push_back(h); });
        std::sort(hits.begin(), hits.end(), [](const detail::TwoTermHit& l, const detail::TwoTermHit& r) {
            return std::tie(l.y, l.z) < std::tie(r.y, r.z);
        });
        for (const auto& h : hits)
            if (!fn(x, h.y, h.z)) return;
    }
}

}  // namespace aegyptus::es
