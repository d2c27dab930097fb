#include <catch2/catch_amalgamated.hpp>

#include <aegyptus/census.hpp>
#include <aegyptus/huffman.hpp>

using namespace aegyptus;
using namespace aegyptus::huffman;

TEST_CASE("kraft classification", "[huffman]") {
    CHECK(kraft_check(2, {1, 2}) == Kraft::strict_inequality);
    CHECK(kraft_check(2, {1, 2, 3, 4, 4}) == Kraft::equality);
    CHECK(kraft_check(2, {1, 1, 1}) == Kraft::violation);
    CHECK(kraft_check(3, {1, 1, 2, 2, 2}) == Kraft::equality);
    CHECK_THROWS_AS(kraft_check(1, {1}), std::domain_error);
}

TEST_CASE("profile enumeration", "[huffman]") {
    auto p25 = profiles(2, 5);
    REQUIRE(p25.size() == 3);
    CHECK(p25[0].lengths == std::vector<unsigned>{1, 2, 3, 4, 4});
    CHECK(p25[1].lengths == std::vector<unsigned>{1, 3, 3, 3, 3});
    CHECK(p25[2].lengths == std::vector<unsigned>{2, 2, 2, 3, 3});

    auto p21 = profiles(2, 1);
    REQUIRE(p21.size() == 1);
    CHECK(p21[0].lengths == std::vector<unsigned>{0});

    auto p35 = profiles(3, 5);
    REQUIRE(p35.size() == 1);
    CHECK(p35[0].lengths == std::vector<unsigned>{1, 1, 2, 2, 2});

    CHECK_THROWS_AS(profiles(2, 0), std::domain_error);
    CHECK_THROWS_AS(profiles(2, 26), BudgetExceeded);
}

TEST_CASE("canonical code assignment", "[huffman]") {
    auto code = profile_to_code(LengthProfile(2, {1, 2, 3, 4, 4}));
    CHECK(code.words == std::vector<std::string>{"0", "10", "110", "1110", "1111"});

    auto mid = profile_to_code(LengthProfile(2, {1, 3, 3, 3, 3}));
    CHECK(mid.words == std::vector<std::string>{"0", "100", "101", "110", "111"});

    auto flat = profile_to_code(LengthProfile(2, {2, 2, 2, 3, 3}));
    CHECK(flat.words == std::vector<std::string>{"00", "01", "10", "110", "111"});

    auto eps = profile_to_code(LengthProfile(2, {0}));
    CHECK(eps.words == std::vector<std::string>{""});

    CHECK_THROWS_AS(LengthProfile(2, {2, 1}), std::domain_error);
    CHECK_THROWS_AS(LengthProfile(2, {1, 2}), std::domain_error);
}

TEST_CASE("every enumerated profile is a Kraft equality and codes are prefix-free",
          "[huffman]") {
    for (unsigned t = 2; t <= 3; ++t) {
        for (unsigned k = 1; k <= 8; ++k) {
            for (const LengthProfile& p : profiles(t, k)) {
                CHECK(kraft_check(p.t, p.lengths) == Kraft::equality);
                PrefixCode code = profile_to_code(p);
                REQUIRE(code.words.size() == p.lengths.size());
                for (std::size_t i = 0; i < code.words.size(); ++i) {
                    CHECK(code.words[i].size() == p.lengths[i]);
                    for (std::size_t j = 0; j < code.words.size(); ++j) {
                        if (i == j) continue;
                        bool prefix = code.words[j].size() >= code.words[i].size() &&
                                      code.words[j].compare(0, code.words[i].size(),
                                                            code.words[i]) == 0;
                        CHECK_FALSE(prefix);
                    }
                }
            }
        }
    }
}

TEST_CASE("profile counts equal the power-of-two census", "[huffman]") {
    for (unsigned k = 1; k <= 10; ++k) {
        std::vector<Int> powers;
        for (unsigned l = 0; l < k; ++l) powers.push_back(pow_ui(2, l));
        census::Query q;
        q.k = k;
        q.distinct = false;
        q.min_denominator = 1;
        q.predicate = census::Predicate::explicit_set(powers);
        CAPTURE(k);
        CHECK(census::count(q).count == count_profiles(2, k));
    }
}
