#pragma once

#include "hfgrowth/binomial_calculus.hpp"
#include "hfgrowth/exact_algebra.hpp"
#include "hfgrowth/graded_ideals.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfg {

// Distinct points of P^r, each scaled so its last nonzero coordinate is 1.
class PointSet {
public:
    PointSet(int ambient_dim, std::vector<Vector> points);

    int ambient_dim() const { return r_; }
    std::size_t size() const { return pts_.size(); }
    bool empty() const { return pts_.empty(); }
    const Vector& operator[](std::size_t i) const { return pts_[i]; }
    const std::vector<Vector>& points() const { return pts_; }

    PointSet subset(const std::vector<std::size_t>& indices) const;
    PointSet with(const std::vector<Vector>& more) const;

private:
    int r_;
    std::vector<Vector> pts_;
};

Vector normalize_point(Vector p);

// |Z| x (monomials of degree d) matrix of values.
RationalMatrix evaluation_matrix(const PointSet& z, int d);

long hf_points(const PointSet& z, int d);
HVector h_vector(const PointSet& z);
std::vector<Form> ideal_component(const PointSet& z, int d);

struct ArtinianReduction {
    int num_vars = 0;            // r: one fewer than the ambient ring
    GradedSpan components;       // J = (I_Z, L)/(L) in k[x_1..x_r] after elimination
    Form reduction_form;         // L, in r+1 variables
    int eliminated = 0;          // index of the variable solved for
    Form substitution;           // x_eliminated = substitution, in the remaining r variables
    HVector h;                   // h-vector of Z, equal to the Hilbert function of S/J
};

// With d_max unset the window ends one degree past the first zero of Δh_Z.
ArtinianReduction artinian_reduction(const PointSet& z, std::uint64_t seed, std::optional<int> d_max = std::nullopt);

// Lift a form of the reduction ring back to the ambient ring (exponent 0 on
// the eliminated variable).
Form lift_form(const ArtinianReduction& red, const Form& f);

struct MultiplicationPencil {
    int n = 0;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::vector<std::size_t> source_basis;  // standard monomial indices in degree n
    std::vector<std::size_t> target_basis;  // and in degree n+1
    std::vector<RationalMatrix> matrices;   // B_i : target_dim x source_dim

    RationalMatrix at(std::span<const Rational> a) const;
};

MultiplicationPencil multiplication_pencil(const ArtinianReduction& red, int n, std::uint64_t seed = 0);

struct DavisDecomposition {
    Form gcd;
    PointSet z1;
    PointSet z2;
    std::vector<std::size_t> z1_indices;
    std::vector<std::size_t> z2_indices;
    HVector dh_z;
    HVector dh_z1;
    HVector dh_z2;
    std::vector<long> h_z1;    // Hilbert function of Z1 on the same range
    bool z2_vanishes = false;  // Δh_Z2(t) = 0 for t >= n - k
    // Δh_Z(t) = Δh_Z2(t-k) + h_Z1(t) and Δh_Z(t) = Δh_Z2(t-k) + Δh_Z1(t), t over the range
    bool identity_with_h = false;
    bool identity_with_delta = false;
    std::vector<std::string> alarms;
};

DavisDecomposition davis_decompose(const PointSet& z, int n, int k);

}  // namespace hfg
