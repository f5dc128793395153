#include "doctest.h"
#include "hfgrowth/constructions.hpp"

using namespace hfg;

TEST_CASE("the four ideals with h(6) = 21 and h(7) = 23") {
    const char* polys[] = {"3t+2", "2t+9", "t+16", "23"};
    const int base_dims[] = {1, 1, 1, 0};
    const long base_degrees[] = {3, 2, 1, 24};
    for (int which = 1; which <= 4; ++which) {
        CAPTURE(which);
        GradedSpan j = growth21_ideal(which, 7, 13);
        CHECK(hilbert_function(j, 6) == 21);
        CHECK(hilbert_function(j, 7) == 23);
        std::vector<std::pair<int, long>> vals;
        for (int t = 7; t <= 13; ++t) vals.emplace_back(t, hilbert_function(j, t));
        PolynomialFit fit = hilbert_polynomial_fit(vals);
        REQUIRE(fit.determined);
        CHECK(fit.to_string() == polys[which - 1]);
        CHECK(min_generator_count(j, 7) == (which == 1 ? 1 : 0));
        BaseLocusProfile p = base_locus_profile(j, 7, 6);
        CHECK(p.dimension == base_dims[which - 1]);
        CHECK(p.degree == base_degrees[which - 1]);
        if (which == 4) {
            CHECK(j.is_ideal_closed());
            CHECK(p.status == BaseLocusStatus::zero_dimensional);
            for (int d = 1; d <= 12; ++d) {
                CAPTURE(d);
                CHECK((min_generator_count(j, d) > 0) == (d == 4 || d == 6 || d == 8));
            }
        }
    }
    CHECK_THROWS_AS(growth21_ideal(5), Error);
}

TEST_CASE("general points") {
    CHECK(h_vector(general_points(5, 2, 1)).values == std::vector<long>{1, 2, 2});
    CHECK(h_vector(general_points(1, 3, 1)).values == std::vector<long>{1});
    CHECK(general_points(0, 3, 1).empty());
    CHECK(h_vector(general_points(12, 3, 4)).values == std::vector<long>{1, 3, 6, 2});
}

TEST_CASE("points on unions of plane lines") {
    PointSet line = points_on_plane_curve(1, 4, 3, 2);
    CHECK(line.size() == 5);
    CHECK(h_vector(line).values == std::vector<long>{1, 1, 1, 1, 1});
    PointSet conic = points_on_plane_curve(2, 4, 3, 2);
    CHECK(conic.size() == 10);
    CHECK(h_vector(conic).values == std::vector<long>{1, 2, 2, 2, 2, 1});
    for (int d = 1; d <= 4; ++d)
        for (int n = d; n <= 6; ++n) {
            PointSet z = points_on_plane_curve(d, n, 2, static_cast<std::uint64_t>(10 * d + n));
            CHECK(static_cast<long>(z.size()) == d * (d - 1) / 2 + (n - d + 2) * d + (d - 1));
        }
    CHECK_THROWS_AS(points_on_plane_curve(3, 2, 3, 0), Error);
}

TEST_CASE("truncating h-vectors") {
    PointSet z = general_points(7, 2, 3);
    REQUIRE(h_vector(z).values == std::vector<long>{1, 2, 3, 1});
    PointSet six = truncate_hvector(z, 2);
    CHECK(h_vector(six).values == std::vector<long>{1, 2, 3});
    PointSet five = truncate_hvector(six, 2);
    CHECK(five.size() == 6);
    PointSet fewer = truncate_hvector(z, 1);
    CHECK(h_vector(fewer).values == std::vector<long>{1, 2});
    CHECK(truncate_hvector(z, -1).empty());
    CHECK_THROWS_AS(truncate_hvector(z, 5), Error);
}

TEST_CASE("points whose degree-n ideal has a curve as base locus") {
    for (auto [d, k, n] : std::vector<std::array<int, 3>>{{2, 4, 6}, {3, 3, 5}}) {
        CAPTURE(d);
        Construction c = build_curve_base_locus(d, k, n, 3, 5);
        HVector h = h_vector(c.points);
        CHECK(h.values == c.recipe.expected_h.values);
        CHECK(h[static_cast<std::size_t>(n)] == k);
        CHECK(h[static_cast<std::size_t>(n) + 1] == k - 1);
        CHECK(h[1] == 3);
        BaseLocusProfile p = base_locus_profile(Component::span_of(4, n, ideal_component(c.points, n)));
        CHECK(p.status == BaseLocusStatus::positive_dimensional);
        CHECK(p.dimension == 1);
        CHECK(p.degree == d);
    }
    CHECK_THROWS_AS(build_curve_base_locus(3, 2, 5, 3, 0), Error);
}

TEST_CASE("binary forms with a decreasing tail") {
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            auto gens = binary_tail_generators(n, k, static_cast<std::uint64_t>(n * 10 + k));
            GradedSpan s = span_from_generators(gens, 2, 0, n + k + 2);
            for (int j = 0; j <= k; ++j) CHECK(hilbert_function(s, n + j) == k - j);
        }
}
