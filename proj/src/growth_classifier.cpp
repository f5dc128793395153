#include "hfgrowth/growth_classifier.hpp"

#include <algorithm>

namespace hfg {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::maximal: return "maximal";
        case Regime::almost_maximal_high: return "almost_maximal_high";
        case Regime::type_k_kminus1: return "type_k_kminus1";
        case Regime::submaximal_other: return "submaximal_other";
    }
    return "?";
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::alarm: return "alarm";
        case Verdict::inconclusive: return "inconclusive";
    }
    return "?";
}

std::string polynomial_string(const std::vector<Rational>& coefficients) {
    PolynomialFit f;
    f.determined = true;
    f.coefficients = coefficients;
    return f.to_string();
}

GrowthReport classify(const HVector& h, int n) {
    if (n < 1) throw Error("degree must be at least 1");
    if (h.size() < static_cast<std::size_t>(n) + 2) throw Error("Hilbert function is not given in degree n+1");
    if (auto c = is_o_sequence(h); !c.ok)
        throw Error("not an O-sequence (fails at degree " + std::to_string(*c.failure) + ")");

    GrowthReport g;
    g.n = n;
    g.h_n = h[static_cast<std::size_t>(n)];
    g.h_n1 = h[static_cast<std::size_t>(n) + 1];
    g.gap = growth_gap(h, n);
    g.mg_dim = mg_dimension(g.h_n, n);

    if (g.gap == 0) {
        g.regime = Regime::maximal;
        g.predicted_dims = {static_cast<int>(g.mg_dim)};
        g.persistence_poly = gotzmann_polynomial(g.h_n, n);
    } else if (g.gap == 1 && g.h_n >= n + 1) {
        g.regime = Regime::almost_maximal_high;
        if (g.mg_dim >= 1) g.predicted_dims.push_back(static_cast<int>(g.mg_dim) - 1);
        g.predicted_dims.push_back(static_cast<int>(g.mg_dim));
    } else if (g.gap == 1) {
        g.regime = Regime::type_k_kminus1;
        g.predicted_dims = {empty_locus, 0};
        g.max_zero_dim_degree = g.h_n;
        if (g.h_n >= 2) g.bounds = bounds_report(g.h_n, n);
    } else {
        g.regime = Regime::submaximal_other;
    }
    return g;
}

std::vector<NamedBound> bounds_report(long k, int n, std::optional<long> d) {
    if (k < 2 || n < k) throw Error("bounds need 2 <= k <= n");
    if (d && (*d < 1 || *d > k - 1)) throw Error("curve degree d must lie in 1..k-1");
    auto c2 = [](long a) { return a * (a - 1) / 2; };
    std::vector<NamedBound> out;
    out.push_back({"curve_degree_k", "C(k,2)+k(n-k+3)-1", c2(k) + k * (n - k + 3) - 1,
                   "I_Z has a minimal generator in degree n+1"});
    out.push_back({"curve_degree_k_minus_1", "C(k-1,2)+(k-1)(n-k+4)", c2(k - 1) + (k - 1) * (n - k + 4),
                   "[J]_{n+1} has a zero-dimensional base locus of degree k-1"});
    const long lo = d.value_or(1);
    const long hi = d.value_or(k - 1);
    for (long e = lo; e <= hi; ++e) {
        const std::string tag = "curve_degree_d" + std::to_string(e);
        if (k - 1 - e <= e + 1)
            out.push_back({tag, "2*C(d,2)+5d", 2 * c2(e) + 5 * e,
                           "base locus of [I_Z]_{<=n} has a curve of degree d=" + std::to_string(e) +
                               " and k-1-d <= d+1"});
        if (e + 1 <= k - 1 - e)
            out.push_back({tag, "d^2+d(n-k+4)", e * e + e * (n - k + 4),
                           "base locus of [I_Z]_{<=n} has a curve of degree d=" + std::to_string(e) +
                               " and d+1 <= k-1-d"});
    }
    out.push_back({"plane", "C(k+1,2)+(k+1)(n-k+2)-3", c2(k + 1) + (k + 1) * (n - k + 2) - 3,
                   "[J]_n basepoint free, no generator of J in degree n+1, no socle of S/J in degree n"});
    return out;
}

ColonTable colon_table(const GradedSpan& span, int n, std::uint64_t seed) {
    const int lo = std::max(span.d_min(), 1);
    if (n < 1 || lo > std::max(n - 1, 1) || !span.covers(n + 1))
        throw Error("window must cover degrees n-1 .. n+1");
    const int r = span.num_vars();
    Rng rng = seeded_rng(seed, 2);
    ColonTable t{Form::linear(random_vector(rng, static_cast<std::size_t>(r))), {}, {}, {}, {}, true, true, true, {}, {}};
    for (int i = lo; i <= n + 1; ++i) {
        const long whole = hilbert_function(span, i);
        const long section = static_cast<long>(add_multiples(span[i], {t.ell}).codim());
        const long colon = static_cast<long>(colon_by_forms(span, {t.ell}, i - 1).codim());
        t.degrees.push_back(i);
        t.quotient.push_back(whole);
        t.colon.push_back(colon);
        t.section.push_back(section);
        if (whole != colon + section) t.exact = false;
        if (section > green_bound(whole, i)) t.green_ok = false;
    }
    for (std::size_t j = 0; j + 1 < t.degrees.size(); ++j) {
        const int i = t.degrees[j];
        if (t.quotient[j] > 0 && t.quotient[j + 1] > macaulay_bound(t.quotient[j], i)) t.macaulay_ok = false;
        if (t.section[j] > 0 && t.section[j + 1] > macaulay_bound(t.section[j], i)) t.macaulay_ok = false;
        if (t.quotient[j] == 0 && t.quotient[j + 1] != 0) t.macaulay_ok = false;
    }

    const long k = hilbert_function(span, n);
    const long top = binomial(n + 2, 2).get_si();
    if (k >= n + 1 && k < top && hilbert_function(span, n + 1) == macaulay_bound(k, n) - 1) {
        long q = 0;
        for (const auto& term : macaulay_expand(k, n).terms)
            if (term.top - term.bottom == 1) ++q;
        t.q = q;
        const long p = t.section[static_cast<std::size_t>(n - lo)];
        const long s = t.section[static_cast<std::size_t>(n + 1 - lo)];
        if (p == q - 1 && s == q - 1) t.pattern = "(q-1,q-1)";
        else if (p == q && s == q - 1) t.pattern = "(q,q-1)";
        else if (p == q && s == q) t.pattern = "(q,q)";
        else t.pattern = "other";
    }
    return t;
}

ColonTable colon_table(const ArtinianReduction& red, int n, std::uint64_t seed) {
    return colon_table(red.components, n, seed);
}

PredictionCheck verify_prediction(const BaseLocusProfile& profile, const GrowthReport& report) {
    PredictionCheck c;
    switch (profile.status) {
        case BaseLocusStatus::empty: c.measured_dim = empty_locus; break;
        case BaseLocusStatus::zero_dimensional: c.measured_dim = 0; break;
        case BaseLocusStatus::positive_dimensional:
            if (profile.dimension) c.measured_dim = *profile.dimension;
            break;
        case BaseLocusStatus::undetermined: break;
    }
    if (!c.measured_dim) {
        c.detail = "base locus not determined within the window";
        return c;
    }
    if (report.predicted_dims.empty()) {
        c.detail = "no prediction in regime " + to_string(report.regime);
        return c;
    }
    const auto& pd = report.predicted_dims;
    if (std::find(pd.begin(), pd.end(), *c.measured_dim) == pd.end()) {
        c.verdict = Verdict::alarm;
        c.detail = "measured dimension " + std::to_string(*c.measured_dim) + " is not predicted";
        return c;
    }
    if (*c.measured_dim == 0 && report.max_zero_dim_degree && profile.degree &&
        *profile.degree > *report.max_zero_dim_degree) {
        c.verdict = Verdict::alarm;
        c.detail = "zero-dimensional base locus of degree " + std::to_string(*profile.degree) + " exceeds " +
                   std::to_string(*report.max_zero_dim_degree);
        return c;
    }
    c.verdict = Verdict::pass;
    c.detail = "measured dimension " + std::to_string(*c.measured_dim) + " is predicted";
    return c;
}

namespace {
nlohmann::json dims_json(const std::vector<int>& dims) {
    nlohmann::json a = nlohmann::json::array();
    for (int d : dims) {
        if (d == empty_locus) a.push_back("empty");
        else a.push_back(d);
    }
    return a;
}
}  // namespace

nlohmann::json to_json(const GrowthReport& r) {
    nlohmann::json bounds = nlohmann::json::array();
    for (const auto& b : r.bounds)
        bounds.push_back({{"name", b.name}, {"formula", b.formula}, {"value", b.value}, {"hypothesis", b.hypothesis}});
    nlohmann::json j = {{"n", r.n},           {"h_n", r.h_n},     {"h_n1", r.h_n1},
                        {"gap", r.gap},       {"regime", to_string(r.regime)},
                        {"mg_dim", r.mg_dim}, {"predicted_dims", dims_json(r.predicted_dims)},
                        {"persistence_poly", nullptr}, {"bounds", bounds}};
    if (r.persistence_poly) j["persistence_poly"] = polynomial_string(*r.persistence_poly);
    if (r.max_zero_dim_degree) j["max_zero_dim_degree"] = *r.max_zero_dim_degree;
    return j;
}

nlohmann::json to_json(const ColonTable& t) {
    nlohmann::json j = {{"ell", t.ell.to_string()}, {"degrees", t.degrees}, {"quotient", t.quotient},
                        {"colon", t.colon},         {"section", t.section}, {"exact", t.exact},
                        {"green_ok", t.green_ok},   {"macaulay_ok", t.macaulay_ok}};
    if (t.q) j["q"] = *t.q;
    if (t.pattern) j["pattern"] = *t.pattern;
    return j;
}

nlohmann::json to_json(const BaseLocusProfile& p) {
    nlohmann::json j = {{"status", to_string(p.status)},
                        {"truncation_degree", p.truncation_degree},
                        {"quotient_dims", p.quotient_dims}};
    j["dimension"] = p.dimension ? nlohmann::json(*p.dimension) : nlohmann::json(nullptr);
    j["degree"] = p.degree ? nlohmann::json(*p.degree) : nlohmann::json(nullptr);
    j["hilbert_polynomial"] = p.hilbert_polynomial ? nlohmann::json(polynomial_string(*p.hilbert_polynomial))
                                                   : nlohmann::json(nullptr);
    return j;
}

nlohmann::json to_json(const PredictionCheck& c) {
    nlohmann::json j = {{"verdict", to_string(c.verdict)}, {"detail", c.detail}};
    j["measured_dim"] = c.measured_dim ? (*c.measured_dim == empty_locus ? nlohmann::json("empty")
                                                                          : nlohmann::json(*c.measured_dim))
                                       : nlohmann::json(nullptr);
    return j;
}

}  // namespace hfg
