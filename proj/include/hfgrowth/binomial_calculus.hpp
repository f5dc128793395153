#pragma once

#include "hfgrowth/exact_algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfg {

// k = C(k_i, i) + C(k_{i-1}, i-1) + ... + C(k_j, j), k_i > k_{i-1} > ... > k_j >= j >= 1.
struct BinomialTerm {
    long top;
    long bottom;
};

struct BinomialExpansion {
    long value = 0;
    int degree = 0;
    std::vector<BinomialTerm> terms;

    long leading_top() const { return terms.front().top; }
    std::string to_string() const;
};

// Degree-indexed integer sequence (Hilbert functions, h-vectors).
struct HVector {
    std::vector<long> values;

    std::size_t size() const { return values.size(); }
    long operator[](std::size_t d) const { return d < values.size() ? values[d] : 0; }
    long sum() const;
    std::string to_string() const;
};

BinomialExpansion macaulay_expand(long k, int i);
Integer shift(const BinomialExpansion& e, long a, long b);

long macaulay_bound(long k, int i);
long green_bound(long k, int i);
long mg_dimension(long k, int n);
std::vector<long> gotzmann_values(long k, int n, int d_max);

// The persisted Hilbert function as a polynomial in t (degree n+d = t);
// coefficients lowest degree first.
std::vector<Rational> gotzmann_polynomial(long k, int n);

struct OSequenceCheck {
    bool ok = true;
    std::optional<std::size_t> failure;  // first index that breaks the condition
};
OSequenceCheck is_o_sequence(const HVector& h);

long growth_gap(const HVector& h, int n);

}  // namespace hfg
