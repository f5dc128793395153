#include "doctest.h"
#include "hfgrowth/binomial_calculus.hpp"

using namespace hfg;

namespace {
// Naive greedy by linear scan; independent of the binary search.
std::vector<BinomialTerm> naive_expand(long k, long i) {
    std::vector<BinomialTerm> out;
    while (k > 0) {
        long top = i;
        while (binomial(top + 1, i) <= k) ++top;
        out.push_back({top, i});
        k -= binomial(top, i).get_si();
        --i;
    }
    return out;
}
}  // namespace

TEST_CASE("expansion of 21 in degree 6") {
    BinomialExpansion e = macaulay_expand(21, 6);
    std::vector<std::pair<long, long>> expect{{7, 6}, {6, 5}, {5, 4}, {3, 3}, {2, 2}, {1, 1}};
    REQUIRE(e.terms.size() == expect.size());
    for (std::size_t t = 0; t < expect.size(); ++t) {
        CHECK(e.terms[t].top == expect[t].first);
        CHECK(e.terms[t].bottom == expect[t].second);
    }
    CHECK(e.to_string() == "C(7,6) + C(6,5) + C(5,4) + C(3,3) + C(2,2) + C(1,1)");
}

TEST_CASE("small expansions") {
    for (int i = 1; i <= 8; ++i) {
        auto e = macaulay_expand(1, i);
        REQUIRE(e.terms.size() == 1);
        CHECK(e.terms[0].top == i);
    }
    // k <= n gives k ones
    auto e = macaulay_expand(4, 6);
    REQUIRE(e.terms.size() == 4);
    for (std::size_t t = 0; t < 4; ++t) CHECK(e.terms[t].top == e.terms[t].bottom);
    CHECK_THROWS_AS(macaulay_expand(0, 3), Error);
    CHECK_THROWS_AS(macaulay_expand(3, 0), Error);
}

TEST_CASE("expansion agrees with a linear-scan greedy") {
    for (long k = 1; k <= 400; ++k)
        for (int i = 1; i <= 7; ++i) {
            auto e = macaulay_expand(k, i);
            auto n = naive_expand(k, i);
            REQUIRE(e.terms.size() == n.size());
            for (std::size_t t = 0; t < n.size(); ++t) CHECK(e.terms[t].top == n[t].top);
        }
}

TEST_CASE("shift operators") {
    auto e = macaulay_expand(21, 6);
    CHECK(shift(e, 1, 1) == 24);
    CHECK(shift(e, 0, 0) == 21);
    CHECK(shift(e, 0, -1) == 3);
}

TEST_CASE("Macaulay and Green bounds") {
    CHECK(macaulay_bound(21, 6) == 24);
    CHECK(macaulay_bound(1, 5) == 1);
    for (long k = 1; k <= 6; ++k) CHECK(macaulay_bound(k, 6) == k);
    CHECK(green_bound(21, 6) == 3);
    for (long k = 1; k <= 6; ++k) CHECK(green_bound(k, 6) == 0);
    for (int n = 1; n <= 9; ++n) CHECK(green_bound(binomial(n + 2, 2).get_si(), n) == n + 1);
    CHECK(macaulay_bound(2, 1) == 3);
}

TEST_CASE("MG-dimension") {
    CHECK(mg_dimension(21, 6) == 1);
    CHECK(mg_dimension(28, 6) == 2);
    for (long k = 1; k <= 6; ++k) CHECK(mg_dimension(k, 6) == 0);
}

TEST_CASE("Gotzmann values") {
    CHECK(gotzmann_values(21, 6, 2) == std::vector<long>{21, 24, 27});
    auto p = gotzmann_polynomial(21, 6);
    REQUIRE(p.size() == 2);
    CHECK(p[0] == 3);
    CHECK(p[1] == 3);
    CHECK(gotzmann_values(1, 4, 3) == std::vector<long>{1, 1, 1, 1});
    CHECK(gotzmann_values(5, 4, 3) == std::vector<long>{5, 6, 7, 8});
    // polynomial and values agree
    for (long k : {7L, 21L, 40L, 100L})
        for (int n : {2, 3, 5}) {
            auto poly = gotzmann_polynomial(k, n);
            auto vals = gotzmann_values(k, n, 6);
            for (int d = 0; d <= 6; ++d) {
                Rational t = n + d, s = 0, pw = 1;
                for (const auto& c : poly) {
                    s += c * pw;
                    pw *= t;
                }
                CHECK(s == vals[static_cast<std::size_t>(d)]);
            }
        }
}

TEST_CASE("bound monotone in k and consistent with persistence") {
    for (int i = 1; i <= 8; ++i) {
        long prev = 0;
        for (long k = 1; k <= 300; ++k) {
            long b = macaulay_bound(k, i);
            CHECK(b >= prev);
            prev = b;
            CHECK(gotzmann_values(k, i, 1)[1] == b);
        }
    }
}

TEST_CASE("O-sequences") {
    CHECK(is_o_sequence({{1, 3, 6, 7, 7, 7, 7, 7, 7, 6}}).ok);
    auto bad = is_o_sequence({{1, 2, 4}});
    CHECK_FALSE(bad.ok);
    CHECK(bad.failure == 2u);
    CHECK(is_o_sequence({{1}}).ok);
    CHECK(is_o_sequence({{}}).ok);
    CHECK(is_o_sequence({{0, 0, 0}}).ok);
    CHECK_FALSE(is_o_sequence({{1, 2, 0, 1}}).ok);
    CHECK_FALSE(is_o_sequence({{2, 1}}).ok);
}

TEST_CASE("growth gap") {
    HVector h{{1, 3, 6, 10, 15, 21, 21, 23}};
    CHECK(growth_gap(h, 6) == 1);
    h.values[7] = 24;
    CHECK(growth_gap(h, 6) == 0);
    HVector tail{{1, 2, 3, 3, 3, 2}};
    CHECK(growth_gap(tail, 4) == 1);
    HVector ends{{1, 2, 2, 0}};
    CHECK(growth_gap(ends, 2) == 2);
    CHECK_THROWS_AS(growth_gap(ends, 3), Error);
}
