#pragma once

#include "hfgrowth/binomial_calculus.hpp"
#include "hfgrowth/graded_ideals.hpp"
#include "hfgrowth/point_geometry.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hfg {

enum class Regime { maximal, almost_maximal_high, type_k_kminus1, submaximal_other };
std::string to_string(Regime r);

struct NamedBound {
    std::string name;
    std::string formula;
    long value = 0;
    std::string hypothesis;
};

// Base-locus dimensions use -1 for "empty".
constexpr int empty_locus = -1;

struct GrowthReport {
    int n = 0;
    long h_n = 0;
    long h_n1 = 0;
    long gap = 0;
    Regime regime = Regime::submaximal_other;
    long mg_dim = 0;
    std::vector<int> predicted_dims;              // empty: no prediction
    std::optional<long> max_zero_dim_degree;      // degree bound for a 0-dimensional locus
    std::optional<std::vector<Rational>> persistence_poly;  // valid when no generators past n+1
    std::vector<NamedBound> bounds;
};

GrowthReport classify(const HVector& h, int n);

// The point-count bounds for Δh(n) = k, Δh(n+1) = k-1. With d given, only
// the curve-of-degree-d pair is emitted; otherwise every d in 1..k-1.
std::vector<NamedBound> bounds_report(long k, int n, std::optional<long> d = std::nullopt);

struct ColonTable {
    Form ell;
    std::vector<int> degrees;
    std::vector<long> quotient;  // dim [S/J]_i
    std::vector<long> colon;     // dim [S/(J:ell)]_{i-1}
    std::vector<long> section;   // dim [S/(J,ell)]_i
    bool exact = true;
    bool green_ok = true;
    bool macaulay_ok = true;
    std::optional<long> q;              // number of leading C(j+1, j) terms of h(n)
    std::optional<std::string> pattern; // (p,s) = (q-1,q-1), (q,q-1), (q,q) or "other"
};

ColonTable colon_table(const GradedSpan& span, int n, std::uint64_t seed);
ColonTable colon_table(const ArtinianReduction& red, int n, std::uint64_t seed);

enum class Verdict { pass, alarm, inconclusive };
std::string to_string(Verdict v);

struct PredictionCheck {
    Verdict verdict = Verdict::inconclusive;
    std::optional<int> measured_dim;
    std::string detail;
};

PredictionCheck verify_prediction(const BaseLocusProfile& profile, const GrowthReport& report);

nlohmann::json to_json(const GrowthReport& r);
nlohmann::json to_json(const ColonTable& t);
nlohmann::json to_json(const BaseLocusProfile& p);
nlohmann::json to_json(const PredictionCheck& c);
std::string polynomial_string(const std::vector<Rational>& coefficients);

}  // namespace hfg
