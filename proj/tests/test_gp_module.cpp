#include <doctest.h>

#include <set>

#include "hlmaj/descent.hpp"
#include "hlmaj/gp_module.hpp"
#include "hlmaj/symfunc.hpp"
#include "oracles.hpp"

using namespace hlmaj;

TEST_CASE("Tanisaki generators") {
    const auto ideal = tanisaki_generators(Partition({2, 1}), 3);
    CHECK(ideal.generators.size() == ideal.labels.size());
    for (const auto& [S, d] : ideal.labels) {
        CHECK(d > static_cast<int>(S.size()) - p_stat(Partition({2, 1}), 3, static_cast<int>(S.size())));
        CHECK(d <= static_cast<int>(S.size()));
    }
    CHECK(p_stat(Partition({2, 1}), 3, 1) == 0);
    CHECK(p_stat(Partition({2, 1}), 3, 2) == 1);
    CHECK(p_stat(Partition({2, 1}), 3, 3) == 3);
}

TEST_CASE("Hilbert series of R_mu") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(hilbert_series(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))) == q_factorial(n));
        CHECK(hilbert_series(Partition({n})) == TPoly::monomial(0));
        for (const auto& mu : partitions_of(n)) {
            CAPTURE(mu.to_string());
            const auto h = hilbert_series(mu);
            CHECK(h.at_one() == composition_multinomial(mu.parts()));
            const auto ones = Partition(std::vector<int>(static_cast<std::size_t>(n), 1));
            CHECK(h == oracle::modified_hl(mu.parts(), false).coefficient(ones));
            CHECK(h.degree() == n_stat(mu));
        }
    }
    CHECK_THROWS_AS(hilbert_series(Partition({4, 3})), ResourceBoundExceeded);
}

TEST_CASE("descent monomials are the standard monomials of R_{lambda'}") {
    for (int n = 1; n <= 5; ++n)
        for (const auto& lambda : partitions_of(n)) {
            CAPTURE(lambda.to_string());
            const auto q = gp_quotient(conjugate(lambda));
            std::set<Composition> standard;
            for (int d = 0; d <= q->top_degree(); ++d)
                for (const auto& m : q->standard_monomials(d)) standard.insert(m);
            const auto d = enumerate_D_lambda(lambda);
            CHECK(standard == std::set<Composition>(d.begin(), d.end()));
            const auto report = verify_descent_basis(lambda);
            CHECK(report.ok());
            CHECK(report.diagnostics.empty());
            CHECK(verify_leading_terms(lambda));
        }
}

TEST_CASE("parabolic submodules") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n))
            for (const auto& mu : partitions_of(n)) {
                CAPTURE(lambda.to_string());
                CAPTURE(mu.to_string());
                const auto r = verify_parabolic_basis(lambda, mu.parts());
                CHECK(r.ok());
                CHECK(r.count_poly == hl_omega_via_descents(conjugate(lambda)).coefficient(mu));
            }
    const auto r = verify_parabolic_basis(Partition({2, 2}), {1, 2, 1});
    CHECK(r.ok());
    CHECK(r.count_poly == hl_omega_via_descents(Partition({2, 2})).coefficient(Partition({2, 1, 1})));
}

TEST_CASE("the (3,2) elements for mu = (2,2,1)") {
    const auto r = verify_parabolic_basis(Partition({3, 2}), {2, 2, 1});
    REQUIRE(r.ok());
    std::set<std::string> printed;
    for (const auto& e : r.elements) printed.insert(e.to_string());
    const std::set<std::string> expected{
        "x1*x3 - x1*x4 - x2*x3 + x2*x4",
        "x1*x3*x5 - x1*x4*x5 - x2*x3*x5 + x2*x4*x5",
        "x1*x3^2 - x1*x4^2 - x2*x3^2 + x2*x4^2",
        "x1*x3^2*x5 - x1*x4^2*x5 - x2*x3^2*x5 + x2*x4^2*x5",
        "x1*x3*x5^2 - x1*x4*x5^2 - x2*x3*x5^2 + x2*x4*x5^2",
    };
    CHECK(printed == expected);
}

TEST_CASE("splitting map") {
    const auto p = MPoly::monomial({2, 1, 0, 3, 0, 1, 0});
    const auto image = phi_map({2, 3, 7}, p);
    CHECK(image.to_string() == "(-x2 - x3) ⊗ x1^2*x2^3*x4");
    for (int n = 1; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n)) CHECK(verify_phi_injective(lambda));
}

TEST_CASE("generators land in the smaller ideal after splitting") {
    for (int n = 2; n <= 4; ++n)
        for (const auto& lambda : partitions_of(n)) {
            if (lambda.length() < 2) continue;
            const auto r = tanimap_spot_check(lambda, 5, 7);
            CHECK(r.trials > 0);
            CHECK(r.failures == 0);
        }
}

TEST_CASE("resource bound") {
    CHECK_THROWS_AS(verify_descent_basis(Partition({4, 3}), 6), ResourceBoundExceeded);
    CHECK_THROWS_AS(verify_parabolic_basis(Partition({2, 1}), {1, 2}, 2), ResourceBoundExceeded);
}
