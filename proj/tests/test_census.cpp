#include <catch2/catch_amalgamated.hpp>

#include <aegyptus/census.hpp>
#include <aegyptus/decompose.hpp>

#include <numeric>
#include <random>

using namespace aegyptus;
using namespace aegyptus::census;

namespace {

// Unpruned scan over the whole box x_i <= k*u_i; only the ordering constraint
// is applied, partial sums are exact 64-bit fractions. Independent of the
// searcher's remainder pruning.
long brute_box_count(unsigned k, bool distinct) {
    static const long u[] = {0, 1, 2, 6, 42, 1806};
    long count = 0;
    std::vector<long> x(k, 0);
    auto rec = [&](auto&& self, unsigned i, long num, long den) -> void {
        // partial sum so far is num/den
        if (i == k) {
            if (num == den) ++count;
            return;
        }
        long lo = i == 0 ? 1 : (distinct ? x[i - 1] + 1 : x[i - 1]);
        long hi = static_cast<long>(k) * u[i + 1];
        for (long v = lo; v <= hi; ++v) {
            long nn = num * v + den;
            long dd = den * v;
            long g = std::gcd(nn, dd);
            x[i] = v;
            self(self, i + 1, nn / g, dd / g);
        }
    };
    rec(rec, 0, 0, 1);
    return count;
}

std::vector<std::vector<long>> to_longs(const std::vector<UnitFractionSum>& xs) {
    std::vector<std::vector<long>> out;
    for (const auto& s : xs) {
        std::vector<long> v;
        for (const Int& d : s.denominators()) v.push_back(d.get_si());
        out.push_back(v);
    }
    return out;
}

}  // namespace

TEST_CASE("distinct unit fraction partitions of 1", "[census]") {
    Query q3;
    q3.k = 3;
    CHECK(to_longs(enumerate_all(q3)) == std::vector<std::vector<long>>{{2, 3, 6}});

    Query q4;
    q4.k = 4;
    CHECK(to_longs(enumerate_all(q4)) ==
          std::vector<std::vector<long>>{{2, 3, 7, 42},
                                         {2, 3, 8, 24},
                                         {2, 3, 9, 18},
                                         {2, 3, 10, 15},
                                         {2, 4, 5, 20},
                                         {2, 4, 6, 12}});

    Query m3;
    m3.k = 3;
    m3.distinct = false;
    CHECK(to_longs(enumerate_all(m3)) ==
          std::vector<std::vector<long>>{{2, 3, 6}, {2, 4, 4}, {3, 3, 3}});

    Query q2;
    q2.k = 2;
    CHECK(enumerate_all(q2).empty());

    Query q1;
    q1.k = 1;
    q1.min_denominator = 1;
    CHECK(to_longs(enumerate_all(q1)) == std::vector<std::vector<long>>{{1}});
}

TEST_CASE("census counts match the unpruned box oracle", "[census]") {
    for (unsigned k = 1; k <= 4; ++k) {
        for (bool distinct : {true, false}) {
            Query q;
            q.k = k;
            q.distinct = distinct;
            q.min_denominator = 1;
            CAPTURE(k, distinct);
            CHECK(count(q).count == brute_box_count(k, distinct));
        }
    }
}

TEST_CASE("solution counts for k = 5", "[census]") {
    Query d5;
    d5.k = 5;
    CHECK(count(d5).count == 72);
    Query m5;
    m5.k = 5;
    m5.distinct = false;
    CHECK(count(m5).count == 147);
}

TEST_CASE("count report carries the exact pruning box", "[census]") {
    Query q;
    q.k = 3;
    CountReport rep = count(q);
    CHECK(rep.count == 1);
    CHECK(rep.bound_box == Int(3) * 1 * 3 * 2 * 3 * 6);  // ∏ k·u_i = 3·6·18
    CHECK_THROWS_AS(count([] {
        Query big;
        big.k = 8;
        return big;
    }()), BudgetExceeded);
}

TEST_CASE("emitted solutions respect the sylvester bounds", "[census]") {
    SylvesterTable t;
    for (unsigned k = 1; k <= 4; ++k) {
        Query q;
        q.k = k;
        q.min_denominator = 1;
        enumerate(q, [&](const std::vector<Int>& xs) {
            for (std::size_t i = 0; i < xs.size(); ++i)
                CHECK(xs[i] <= Int(k) * t.at(i + 1));
            return true;
        });
    }
}

TEST_CASE("predicates steer the search", "[census]") {
    Query evens;
    evens.k = 4;
    evens.predicate = Predicate::progression(0, 2);
    CHECK(to_longs(enumerate_all(evens)) == std::vector<std::vector<long>>{{2, 4, 6, 12}});

    Query inside;
    inside.k = 3;
    inside.predicate = Predicate::interval(2, 6);
    CHECK(to_longs(enumerate_all(inside)) == std::vector<std::vector<long>>{{2, 3, 6}});

    Query shifted;
    shifted.k = 3;
    shifted.predicate = Predicate::interval(3, 20);
    CHECK(enumerate_all(shifted).empty());

    Query table;
    table.k = 3;
    table.predicate = Predicate::explicit_set({Int(2), Int(3), Int(6), Int(10)});
    CHECK(to_longs(enumerate_all(table)) == std::vector<std::vector<long>>{{2, 3, 6}});

    // all nine-term partitions of 1 into odd denominators > 1
    Query odd;
    odd.k = 9;
    odd.predicate = Predicate::odd();
    auto odd9 = enumerate_all(odd);
    CHECK(to_longs(odd9) == std::vector<std::vector<long>>{{3, 5, 7, 9, 11, 15, 21, 135, 10395},
                                                           {3, 5, 7, 9, 11, 15, 21, 165, 693},
                                                           {3, 5, 7, 9, 11, 15, 21, 231, 315},
                                                           {3, 5, 7, 9, 11, 15, 33, 45, 385},
                                                           {3, 5, 7, 9, 11, 15, 35, 45, 231}});
    for (const auto& s : odd9) CHECK(s.value() == 1);

    CHECK_THROWS_AS(Predicate::interval(5, 5), std::domain_error);
    CHECK_THROWS_AS(Predicate::progression(3, 2), std::domain_error);
}

TEST_CASE("partitioned enumeration covers the stream in order", "[census]") {
    Query q;
    q.k = 5;
    std::vector<UnitFractionSum> whole = enumerate_all(q);

    std::vector<UnitFractionSum> stitched;
    for (const Int& x1 : first_denominator_candidates(q))
        enumerate_with_first(q, x1, [&](const std::vector<Int>& xs) {
            stitched.emplace_back(xs);
            return true;
        });
    CHECK(whole == stitched);
}

TEST_CASE("subset search over explicit sets", "[census]") {
    SubsetResult direct = subset_solution({Int(2), Int(3), Int(6)});
    REQUIRE(direct.solution);
    CHECK(*direct.solution == UnitFractionSum({Int(2), Int(3), Int(6)}));

    SubsetResult odd9 = subset_solution(
        {Int(3), Int(5), Int(7), Int(9), Int(11), Int(15), Int(35), Int(45), Int(231)});
    REQUIRE(odd9.solution);
    CHECK(odd9.solution->size() == 9);
    CHECK(odd9.solution->value() == 1);

    // [N, 2N] carries too little reciprocal mass once N >= 3
    for (long N = 3; N <= 10; ++N) {
        std::vector<Int> A;
        for (long v = N; v <= 2 * N; ++v) A.emplace_back(v);
        SubsetResult r = subset_solution(A);
        CHECK_FALSE(r.solution);
        CHECK(r.trivial_obstruction);
    }

    // N = 2 is the one interval case where the mass bound does not fire
    SubsetResult two = subset_solution({Int(2), Int(3), Int(4)});
    CHECK_FALSE(two.solution);
    CHECK_FALSE(two.trivial_obstruction);

    CHECK_THROWS_AS(subset_solution({Int(1), Int(2)}), std::domain_error);
    CHECK_THROWS_AS(subset_solution({Int(2), Int(3), Int(4), Int(5), Int(6), Int(7)}, 2),
                    BudgetExceeded);
}

TEST_CASE("interval search reports the trivial obstruction", "[census]") {
    SubsetResult r = interval_search(2, make_rat(271828, 100000));
    CHECK_FALSE(r.solution);
    CHECK(r.trivial_obstruction);  // {3,4,5} sums to 47/60

    // (10, 30] carries reciprocal mass 1.066... yet no exact subset: the
    // search exhausts rather than tripping the obstruction
    SubsetResult wide = interval_search(10, Rat(3));
    CHECK_FALSE(wide.solution);
    CHECK_FALSE(wide.trivial_obstruction);
}

TEST_CASE("largest smallest denominator", "[census]") {
    auto [x1, w1] = max_min_denominator(1);
    CHECK(x1 == 1);
    CHECK(w1 == UnitFractionSum({Int(1)}));

    auto [x3, w3] = max_min_denominator(3);
    CHECK(x3 == 2);
    CHECK(w3 == UnitFractionSum({Int(2), Int(3), Int(6)}));

    CHECK(max_min_denominator(4).first == 2);
    CHECK(max_min_denominator(5).first == 3);
}

TEST_CASE("census agrees with min_terms across random targets", "[census]") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> den(2, 60);
    for (int i = 0; i < 60; ++i) {
        long n = den(rng);
        long m = std::uniform_int_distribution<long>(1, n - 1)(rng);
        Rat q = make_rat(m, n);
        auto best = min_terms(q, 4);

        for (unsigned k = 1; k <= 4; ++k) {
            Query cq;
            cq.k = k;
            cq.target = q;
            std::vector<Int> first;
            enumerate(cq, [&](const std::vector<Int>& xs) {
                first = xs;
                return false;
            });
            bool census_has = !first.empty();
            bool minterms_says = best && best->denominators.size() <= k;
            CAPTURE(m, n, k);
            CHECK(census_has == minterms_says);
            if (best && best->denominators.size() == k && census_has)
                CHECK(UnitFractionSum(first) == best->denominators);
        }
    }
}

TEST_CASE("konyagin exponent identities hold exactly", "[census]") {
    for (unsigned n = 2; n <= 10; ++n) {
        Rat lhs = make_rat(1, pow_ui(2, n) - 1);
        Int Q = pow_ui(2, 2 * n);
        Rat dbl = make_rat(1, Q - 1) + make_rat(1, Q) + make_rat(1, Q * (Q - 1)) +
                  make_rat(1, pow_ui(2, n) + 1);
        CHECK(dbl == lhs);
        Int M = pow_ui(2, n + 1);
        Rat inc = make_rat(1, M - 1) + make_rat(1, (pow_ui(2, n) - 1) * (M - 1)) +
                  make_rat(1, M) + make_rat(1, M * (M - 1));
        CHECK(inc == lhs);
    }
}

TEST_CASE("konyagin base solutions", "[census]") {
    std::vector<KonyaginMove> chain;
    UnitFractionSum base2 = konyagin_base(2, &chain);
    CHECK(base2 == UnitFractionSum({Int(2), Int(3), Int(6)}));
    CHECK(chain.size() == 1);

    UnitFractionSum base6 = konyagin_base(6);
    CHECK(base6 == UnitFractionSum({Int(2), Int(6), Int(8), Int(9), Int(21), Int(56), Int(63),
                                    Int(64), Int(4032)}));

    for (unsigned n = 1; n <= 12; ++n) {
        UnitFractionSum b = konyagin_base(n);
        CHECK(b.value() == 1);
        CHECK(b.distinct());
        Int q = pow_ui(2, n) - 1;
        bool contains = std::binary_search(b.denominators().begin(), b.denominators().end(), q);
        CHECK(contains);
    }
}

TEST_CASE("konyagin split solutions", "[census]") {
    // split of 1/3 at m = 1: 1/4 + 1/12
    auto sols2 = konyagin_generate(2);
    REQUIRE(sols2.size() == 1);
    CHECK(*sols2[0].split_divisor == 1);
    CHECK(sols2[0].denominators == UnitFractionSum({Int(2), Int(4), Int(6), Int(12)}));

    auto sols6 = konyagin_generate(6);
    CHECK(sols6.size() == 4);  // divisors 3, 7, 9, 21 of 63 survive the collision filter
    for (const auto& s : sols6) {
        CHECK(s.denominators.value() == 1);
        CHECK(s.denominators.distinct());
        CHECK(s.base == konyagin_base(6));
    }

    CHECK(konyagin_generate(2, 0).empty());
    CHECK_THROWS_AS(konyagin_base(0), std::domain_error);
    CHECK_THROWS_AS(konyagin_base(31), std::domain_error);
}

TEST_CASE("landau class equations", "[census]") {
    LandauReport k1 = landau_enumerate(1);
    REQUIRE(k1.equations.size() == 1);
    CHECK(k1.max_order == 1);

    LandauReport k2 = landau_enumerate(2);
    REQUIRE(k2.equations.size() == 1);
    CHECK(k2.max_order == 2);
    CHECK(k2.equations[0].sizes == std::vector<Int>{1, 1});

    LandauReport k3 = landau_enumerate(3);
    CHECK(k3.equations.size() == 3);
    CHECK(k3.max_order == 6);

    LandauReport k4 = landau_enumerate(4);
    CHECK(k4.equations.size() == 12);
    CHECK(k4.max_order == 42);

    // Σ sizes = order and each size divides the order
    Int prev = 0;
    for (unsigned k = 1; k <= 5; ++k) {
        LandauReport rep = landau_enumerate(k);
        CHECK(rep.max_order >= prev);
        prev = rep.max_order;
        for (const ClassEquation& eq : rep.equations) {
            Int total = 0;
            for (const Int& m : eq.sizes) {
                CHECK(eq.order % m == 0);
                total += m;
            }
            CHECK(total == eq.order);
        }
    }
    CHECK(prev == 1806);
}
