#include <doctest.h>

#include "hlmaj/symfunc.hpp"
#include "oracles.hpp"

using namespace hlmaj;

namespace {

TPoly poly(std::initializer_list<long> coeffs) {
    TPoly p;
    int d = 0;
    for (long c : coeffs) p.add(d++, c);
    return p;
}

}  // namespace

TEST_CASE("t-polynomials") {
    CHECK(poly({1, 3, 5}).to_string() == "1 + 3t + 5t^2");
    CHECK(TPoly().to_string() == "0");
    CHECK(poly({0, -1}).to_string() == "-t");
    CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
    CHECK((poly({1, 1}) + poly({-1, 0, 2})) == poly({0, 1, 2}));
    CHECK(poly({0, 0}).is_zero());
    CHECK(q_factorial(3) == poly({1, 2, 2, 1}));
    CHECK(q_factorial(4).at_one() == 24);
}

TEST_CASE("displayed expansion of H~_(2,1,1)") {
    const auto h = hl_via_descents(Partition({2, 1, 1}));
    CHECK(h.coefficient(Partition({4})) == poly({1}));
    CHECK(h.coefficient(Partition({3, 1})) == poly({1, 1, 1}));
    CHECK(h.coefficient(Partition({2, 2})) == poly({1, 1, 2}));
    CHECK(h.coefficient(Partition({1, 1, 1, 1})) == poly({1, 3, 5, 3}));
    CHECK(h.coefficient(Partition({2, 1, 1})) == oracle::modified_hl({2, 1, 1}, false).coefficient(Partition({2, 1, 1})));
}

TEST_CASE("displayed expansion of omega H~_(2,2,1)") {
    const auto h = hl_omega_via_descents(Partition({2, 2, 1}));
    CHECK(h.coefficient(Partition({3, 2})) == poly({0, 0, 0, 0, 1}));
    CHECK(h.coefficient(Partition({3, 1, 1})) == poly({0, 0, 0, 1, 1}));
    CHECK(h.coefficient(Partition({2, 2, 1})) == poly({0, 0, 1, 2, 2}));
    CHECK(h.coefficient(Partition({2, 1, 1, 1})) == poly({0, 1, 3, 5, 3}));
    CHECK(h.coefficient(Partition({1, 1, 1, 1, 1})) == poly({1, 4, 9, 11, 5}));
    CHECK(h.terms.size() == 5);
}

TEST_CASE("omega H~_(3,1)") {
    SymExpansion expected;
    expected.n = 4;
    expected.add(Partition({2, 1, 1}), poly({0, 1}));
    expected.add(Partition({1, 1, 1, 1}), poly({1, 3}));
    CHECK(hl_omega_via_descents(Partition({3, 1})) == expected);
    CHECK(hl_via_ribbons(Partition({2, 1, 1}), true) == expected);
}

TEST_CASE("both routes agree with the charge formula") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CAPTURE(lambda.to_string());
            const auto plain = oracle::modified_hl(lambda.parts(), false);
            const auto twisted = oracle::modified_hl(lambda.parts(), true);
            CHECK(hl_via_descents(lambda) == plain);
            CHECK(hl_omega_via_descents(lambda) == twisted);
            CHECK(hl_via_ribbons(conjugate(lambda), false) == plain);
            CHECK(hl_via_ribbons(conjugate(lambda), true) == twisted);
        }
}

TEST_CASE("structural properties of the expansions") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CAPTURE(lambda.to_string());
            const auto h = hl_via_descents(lambda);
            CHECK(expansion_diff(h, hl_via_ribbons(conjugate(lambda), false)).empty());
            for (const auto& [mu, c] : h.terms) {
                CHECK(c.is_nonnegative());
                CHECK(c.at(0) == 1);
            }
            const Partition ones(std::vector<int>(static_cast<std::size_t>(n), 1));
            CHECK(h.coefficient(ones).at_one() == composition_multinomial(lambda.parts()));
            CHECK(leading_coefficient_check(lambda));
            CHECK(dominance_support_check(lambda));
        }
}

TEST_CASE("expansion formatting and diff") {
    const auto h = hl_via_descents(Partition({2, 1}));
    CHECK(h.to_string() == "m[3]: 1\nm[2,1]: 1 + t\nm[1,1,1]: 1 + 2t\n");
    const auto g = hl_via_descents(Partition({3}));
    const auto diff = expansion_diff(h, g);
    CHECK(diff.size() == 2);
    CHECK(diff.at(Partition({2, 1})) == poly({0, 1}));
}
