#pragma once

#include <aegyptus/core.hpp>

#include <functional>

namespace aegyptus::huffman {

enum class Kraft { strict_inequality, equality, violation };

// Exact comparison of Σ t^{-l_i} against 1.
inline Kraft kraft_check(unsigned t, const std::vector<unsigned>& lengths) {
    if (t < 2) throw std::domain_error("kraft_check: alphabet size must be >= 2");
    Rat sum(0);
    for (unsigned l : lengths) sum += make_rat(1, pow_ui(t, l));
    if (sum == 1) return Kraft::equality;
    return sum < 1 ? Kraft::strict_inequality : Kraft::violation;
}

// Word lengths of a compact prefix-free code: l_1 <= ... <= l_k with
// Σ t^{-l_i} = 1. Equivalently a canonical t-ary tree with k leaves.
struct LengthProfile {
    unsigned t;
    std::vector<unsigned> lengths;

    LengthProfile(unsigned t_, std::vector<unsigned> lengths_)
        : t(t_), lengths(std::move(lengths_)) {
        if (!std::is_sorted(lengths.begin(), lengths.end()))
            throw std::domain_error("LengthProfile: lengths must be non-decreasing");
        if (kraft_check(t, lengths) != Kraft::equality)
            throw std::domain_error("LengthProfile: lengths must satisfy Kraft equality");
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i < lengths.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(lengths[i]);
        }
        return s;
    }

    friend bool operator==(const LengthProfile&, const LengthProfile&) = default;
};

using ProfileVisitor = std::function<bool(const std::vector<unsigned>&)>;

// All non-decreasing length multisets with exact Kraft equality, in
// lexicographic order. Length 0 only fits the single-word code (k = 1).
inline void enumerate_profiles(unsigned t, unsigned k, const ProfileVisitor& visit,
                               unsigned k_limit = 25) {
    if (t < 2) throw std::domain_error("enumerate_profiles: alphabet size must be >= 2");
    if (k < 1) throw std::domain_error("enumerate_profiles: need k >= 1");
    if (k > k_limit) throw BudgetExceeded("enumerate_profiles: k exceeds configured bound");

    std::vector<unsigned> path;
    auto rec = [&](auto&& self, const Rat& r, unsigned prev, unsigned left) -> bool {
        if (left == 0) return true;  // unreachable; last level handled below
        // need t^-l <= r and (left) t^-l >= r
        unsigned l = prev;
        while (make_rat(1, pow_ui(t, l)) > r) ++l;
        if (left == 1) {
            if (make_rat(1, pow_ui(t, l)) != r) return true;
            path.push_back(l);
            bool keep = visit(path);
            path.pop_back();
            return keep;
        }
        for (; Int(left) * r.get_den() >= pow_ui(t, l) * r.get_num(); ++l) {
            Rat rest = r - make_rat(1, pow_ui(t, l));
            if (rest == 0) continue;  // left-1 positive terms still owed
            path.push_back(l);
            bool keep = self(self, rest, l, left - 1);
            path.pop_back();
            if (!keep) return false;
        }
        return true;
    };
    rec(rec, Rat(1), 0, k);
}

inline std::vector<LengthProfile> profiles(unsigned t, unsigned k, unsigned k_limit = 25) {
    std::vector<LengthProfile> out;
    enumerate_profiles(
        t, k,
        [&](const std::vector<unsigned>& ls) {
            out.emplace_back(t, ls);
            return true;
        },
        k_limit);
    return out;
}

inline Int count_profiles(unsigned t, unsigned k, unsigned k_limit = 25) {
    Int c = 0;
    enumerate_profiles(
        t, k,
        [&](const std::vector<unsigned>&) {
            ++c;
            return true;
        },
        k_limit);
    return c;
}

struct PrefixCode {
    unsigned t;
    std::vector<std::string> words;
};

// Canonical code for a profile: words assigned in order of increasing length,
// each the numerically smallest string not shadowed by an earlier word. This
// is the usual canonical construction: w_{i+1} = (w_i + 1) · t^(l_{i+1}-l_i).
inline PrefixCode profile_to_code(const LengthProfile& p) {
    if (p.t > 36) throw std::domain_error("profile_to_code: alphabet size above 36 not printable");
    static const char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";

    PrefixCode code{p.t, {}};
    Int value = 0;
    unsigned prev_len = p.lengths.empty() ? 0 : p.lengths.front();
    for (std::size_t i = 0; i < p.lengths.size(); ++i) {
        unsigned len = p.lengths[i];
        if (i == 0) {
            value = 0;
        } else {
            value += 1;
            for (unsigned j = prev_len; j < len; ++j) value *= p.t;
        }
        std::string word(len, '0');
        Int v = value;
        for (unsigned j = len; j-- > 0;) {
            word[j] = digits[mpz_get_ui(Int(v % p.t).get_mpz_t())];
            v /= p.t;
        }
        code.words.push_back(std::move(word));
        prev_len = len;
    }
    return code;
}

}  // namespace aegyptus::huffman
