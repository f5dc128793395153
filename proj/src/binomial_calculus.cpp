#include "hfgrowth/binomial_calculus.hpp"

#include <numeric>
#include <sstream>

namespace hfg {

std::string BinomialExpansion::to_string() const {
    std::ostringstream os;
    for (std::size_t t = 0; t < terms.size(); ++t) {
        if (t) os << " + ";
        os << "C(" << terms[t].top << "," << terms[t].bottom << ")";
    }
    return os.str();
}

long HVector::sum() const { return std::accumulate(values.begin(), values.end(), 0L); }

std::string HVector::to_string() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
    os << ")";
    return os.str();
}

namespace {
long to_long(const Integer& z) {
    if (!z.fits_slong_p()) throw Error("value exceeds 64-bit range");
    return z.get_si();
}

void require_positive(long k, long i) {
    if (k <= 0) throw Error("binomial expansion needs k >= 1");
    if (i <= 0) throw Error("binomial expansion needs degree i >= 1");
}
}  // namespace

BinomialExpansion macaulay_expand(long k, int i) {
    require_positive(k, i);
    BinomialExpansion e;
    e.value = k;
    e.degree = i;
    long rest = k;
    long bottom = i;
    while (rest > 0) {
        // C(top, bottom) >= top - bottom + 1, so top <= rest + bottom - 1.
        long lo = bottom, hi = rest + bottom - 1;
        const Integer target = rest;
        while (lo < hi) {
            long mid = lo + (hi - lo + 1) / 2;
            if (binomial(mid, bottom) <= target)
                lo = mid;
            else
                hi = mid - 1;
        }
        e.terms.push_back({lo, bottom});
        rest -= to_long(binomial(lo, bottom));
        --bottom;
    }
    return e;
}

Integer shift(const BinomialExpansion& e, long a, long b) {
    Integer sum = 0;
    for (const auto& t : e.terms) sum += binomial(t.top + b, t.bottom + a);
    return sum;
}

long macaulay_bound(long k, int i) { return to_long(shift(macaulay_expand(k, i), 1, 1)); }

long green_bound(long k, int i) { return to_long(shift(macaulay_expand(k, i), 0, -1)); }

long mg_dimension(long k, int n) {
    BinomialExpansion e = macaulay_expand(k, n);
    return e.leading_top() - n;
}

std::vector<long> gotzmann_values(long k, int n, int d_max) {
    if (d_max < 0) throw Error("d_max must be non-negative");
    BinomialExpansion e = macaulay_expand(k, n);
    std::vector<long> out;
    for (int d = 0; d <= d_max; ++d) out.push_back(to_long(shift(e, d, d)));
    return out;
}

std::vector<Rational> gotzmann_polynomial(long k, int n) {
    BinomialExpansion e = macaulay_expand(k, n);
    std::vector<Rational> poly;
    for (const auto& term : e.terms) {
        // C(top + t - n, bottom + t - n) = C(t + top - n, top - bottom)
        const long m = term.top - term.bottom;
        const long a = term.top - n;
        std::vector<Rational> p{1};
        for (long j = 0; j < m; ++j) {
            std::vector<Rational> q(p.size() + 1);
            for (std::size_t s = 0; s < p.size(); ++s) {
                q[s + 1] += p[s];
                q[s] += p[s] * Rational(a - j);
            }
            p = std::move(q);
        }
        Rational fact = 1;
        for (long j = 2; j <= m; ++j) fact *= j;
        if (poly.size() < p.size()) poly.resize(p.size());
        for (std::size_t s = 0; s < p.size(); ++s) poly[s] += p[s] / fact;
    }
    while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
    return poly;
}

OSequenceCheck is_o_sequence(const HVector& h) {
    OSequenceCheck out;
    const auto& v = h.values;
    if (v.empty()) return out;
    bool all_zero = true;
    for (long x : v) {
        if (x < 0) {
            out.ok = false;
            out.failure = static_cast<std::size_t>(&x - v.data());
            return out;
        }
        all_zero = all_zero && x == 0;
    }
    if (all_zero) return out;
    if (v[0] != 1) {
        out.ok = false;
        out.failure = 0;
        return out;
    }
    for (std::size_t t = 1; t + 1 < v.size(); ++t) {
        const long next = v[t + 1];
        const long bound = v[t] > 0 ? macaulay_bound(v[t], static_cast<int>(t)) : 0;
        if (next > bound) {
            out.ok = false;
            out.failure = t + 1;
            return out;
        }
    }
    return out;
}

long growth_gap(const HVector& h, int n) {
    if (n < 1) throw Error("growth gap needs n >= 1");
    const auto un = static_cast<std::size_t>(n);
    if (un + 1 >= h.values.size()) throw Error("h(n+1) is missing");
    if (h.values[un] < 1) throw Error("growth gap needs h(n) >= 1");
    return macaulay_bound(h.values[un], n) - h.values[un + 1];
}

}  // namespace hfg
