#include <doctest.h>

#include <set>

#include "hlmaj/descent.hpp"
#include "hlmaj/parking.hpp"
#include "oracles.hpp"

using namespace hlmaj;

namespace {

std::vector<std::pair<int, int>> brute_dinv_pairs(const ParkingFunction& p) {
    std::vector<std::pair<int, int>> out;
    const auto& a = p.area_seq;
    const auto& s = p.labels;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if ((s[i] < s[j] && a[i] == a[j]) || (s[i] > s[j] && a[i] == a[j] + 1)) out.emplace_back(s[i], s[j]);
    std::sort(out.begin(), out.end());
    return out;
}

const ParkingFunction kExample{{0, 0, 1, 0, 0, 1, 2, 2, 3}, {2, 4, 7, 9, 1, 5, 8, 3, 6}};

}  // namespace

TEST_CASE("worked parking function") {
    REQUIRE(is_valid_parking_function(kExample));
    CHECK(area(kExample) == 9);
    auto pairs = dinv_pairs(kExample);
    std::sort(pairs.begin(), pairs.end());
    CHECK(pairs == std::vector<std::pair<int, int>>{{2, 4}, {2, 9}, {4, 9}, {7, 1}});
    CHECK(dinv(kExample) == 4);
    CHECK(in_touch_family(kExample, {1, 2, 6}));
    CHECK(doff(kExample, {1, 2, 6}) == 3);
    CHECK_THROWS_AS(doff(kExample, {2, 1, 6}), std::invalid_argument);
}

TEST_CASE("validity rules") {
    CHECK_FALSE(is_valid_parking_function({{1, 0}, {1, 2}}));
    CHECK_FALSE(is_valid_parking_function({{0, 2}, {1, 2}}));
    CHECK_FALSE(is_valid_parking_function({{0, 1}, {2, 1}}));
    CHECK(is_valid_parking_function({{0, 1}, {1, 2}}));
}

TEST_CASE("enumeration counts and dinv oracle") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = enumerate_PF(n);
        long expected = 1;
        for (int i = 0; i < n - 1; ++i) expected *= n + 1;
        CHECK(static_cast<long>(all.size()) == expected);
        CHECK(std::set<ParkingFunction>(all.begin(), all.end()).size() == all.size());
        for (const auto& p : all) {
            CHECK(is_valid_parking_function(p));
            auto pairs = dinv_pairs(p);
            std::sort(pairs.begin(), pairs.end());
            CHECK(pairs == brute_dinv_pairs(p));
            CHECK(is_dinv_zero(p) == is_dinv_zero_structural(p));
            int sum = 0;
            for (int x : p.area_seq) sum += x;
            CHECK(area(p) == sum);
        }
    }
}

TEST_CASE("dinv-zero parking functions carry maj to area") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : oracle::permutations(n)) {
            const Permutation s(w);
            const auto p = perm_to_pf0(s);
            CHECK(is_valid_parking_function(p));
            CHECK(dinv(p) == 0);
            CHECK(area(p) == oracle::maj(w));
            CHECK(reading_word(p) == s);
            CHECK(pf0_to_perm(p) == s);
            CHECK(level_composition(p) == oracle::majt(w));
        }
    CHECK_THROWS_AS(pf0_to_perm(kExample), std::invalid_argument);
}

TEST_CASE("minimal touch families") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            const auto alpha = reversed(lambda.parts());
            const auto pf0 = enumerate_PF0_alpha(alpha);
            CHECK(mpz_class(static_cast<long>(pf0.size())) == multinomial(lambda));
            std::set<Composition> levels;
            for (const auto& p : pf0) {
                CHECK(dinv(p) + doff(p, alpha) == n_stat(lambda));
                levels.insert(level_composition(p));
            }
            const auto d = enumerate_D_lambda(lambda);
            CHECK(levels == std::set<Composition>(d.begin(), d.end()));
            long min_stat = -1;
            for (const auto& p : enumerate_PF_alpha(alpha)) {
                const long s = dinv(p) + doff(p, alpha);
                if (min_stat < 0 || s < min_stat) min_stat = s;
            }
            CHECK(min_stat == n_stat(lambda));
        }
    CHECK_THROWS_AS(enumerate_PF0_alpha({2, 1}), std::invalid_argument);
}
