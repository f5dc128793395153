#pragma once

#include "hfgrowth/binomial_calculus.hpp"
#include "hfgrowth/exact_algebra.hpp"
#include "hfgrowth/graded_ideals.hpp"
#include "hfgrowth/point_geometry.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hfg {

struct ConstructionRecipe {
    std::string name;
    std::map<std::string, long> parameters;
    std::uint64_t seed = 0;
    HVector expected_h;
    std::optional<int> expected_base_dim;
    std::optional<long> expected_base_degree;
    std::optional<LinearSubspace> plane;
    std::vector<std::string> notes;
};

struct Construction {
    PointSet points;
    ConstructionRecipe recipe;
};

// The four ideals with h(6) = 21, h(7) = 23 in k[x,y,z]: three monomial
// ideals and (F, G) : I_P for a seeded (4,6) complete intersection through a
// point P. Components over degrees 0..d_max.
GradedSpan growth21_ideal(int which, std::uint64_t seed = 0, int d_max = 14);

// m points of P^r imposing independent conditions in every degree.
PointSet general_points(int m, int r, std::uint64_t seed);

// C(d,2) + (n-d+2)d + (d-1) points on d general lines of the plane spanned by
// the first three coordinates; h-vector (1,2,...,d,d,...,d,d-1), last d in degree n.
PointSet points_on_plane_curve(int d, int n, int r, std::uint64_t seed);

// Points with Δh(n) = k, Δh(n+1) = k-1 whose degree-n ideal has a reduced
// curve of degree d as its one-dimensional base locus.
Construction build_curve_base_locus(int d, int k, int n, int r, std::uint64_t seed);

// Plane points with h-vector (1,2,...,k,k+1,...,k+1,k,k-1), k in degree n,
// satisfying every plane-finder hypothesis. Needs k+1 <= n.
Construction build_plane_regime(int k, int n, int r, std::uint64_t seed);

// Remove points one at a time, each removal lowering only the last nonzero
// h-vector entry, until the h-vector ends in degree target_end.
PointSet truncate_hvector(const PointSet& z, int target_end);

// Maximal minors of an (n-k+1) x (n-k) matrix of binary forms: n-k-1 linear
// columns and one of degree k+1. The ideal is generated in degree n with
// Hilbert function k, k-1, ..., 1, 0 from degree n on.
std::vector<Form> binary_tail_generators(int n, int k, std::uint64_t seed);

// The defining forms of the plane used by the point constructions.
LinearSubspace coordinate_plane(int r);

nlohmann::json to_json(const ConstructionRecipe& r);

}  // namespace hfg
