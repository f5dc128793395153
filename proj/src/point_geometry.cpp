#include "hfgrowth/point_geometry.hpp"

#include <algorithm>
#include <set>

namespace hfg {

Vector normalize_point(Vector p) {
    auto last = std::find_if(p.rbegin(), p.rend(), [](const Rational& x) { return sgn(x) != 0; });
    if (last == p.rend()) throw Error("zero vector is not a point");
    const Rational s = *last;
    for (auto& x : p) x /= s;
    return p;
}

PointSet::PointSet(int ambient_dim, std::vector<Vector> points) : r_(ambient_dim) {
    if (r_ < 1) throw Error("ambient dimension must be positive");
    std::set<std::vector<std::string>> seen;
    pts_.reserve(points.size());
    for (auto& p : points) {
        if (static_cast<int>(p.size()) != r_ + 1)
            throw Error("point has " + std::to_string(p.size()) + " coordinates, expected " + std::to_string(r_ + 1));
        Vector q = normalize_point(std::move(p));
        std::vector<std::string> key;
        for (const auto& x : q) key.push_back(to_string(x));
        if (!seen.insert(std::move(key)).second) throw Error("duplicate point");
        pts_.push_back(std::move(q));
    }
}

PointSet PointSet::subset(const std::vector<std::size_t>& indices) const {
    std::vector<Vector> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(pts_.at(i));
    return PointSet(r_, std::move(out));
}

PointSet PointSet::with(const std::vector<Vector>& more) const {
    std::vector<Vector> out = pts_;
    out.insert(out.end(), more.begin(), more.end());
    return PointSet(r_, std::move(out));
}

namespace {

// Values of every degree-d monomial in len(p) variables at p, in basis order.
Vector monomial_values(std::span<const Rational> p, int d) {
    const MonomialBasis& b = monomial_basis(static_cast<int>(p.size()), d);
    std::vector<Vector> powers(p.size(), Vector(static_cast<std::size_t>(d) + 1));
    for (std::size_t j = 0; j < p.size(); ++j) {
        powers[j][0] = 1;
        for (int e = 1; e <= d; ++e) powers[j][static_cast<std::size_t>(e)] = powers[j][static_cast<std::size_t>(e) - 1] * p[j];
    }
    Vector out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        Rational v = 1;
        for (std::size_t j = 0; j < p.size(); ++j)
            if (b[i][j] > 0) v *= powers[j][static_cast<std::size_t>(b[i][j])];
        out[i] = v;
    }
    return out;
}

Vector drop_coordinate(const Vector& p, int e) {
    Vector q;
    q.reserve(p.size() - 1);
    for (std::size_t j = 0; j < p.size(); ++j)
        if (static_cast<int>(j) != e) q.push_back(p[j]);
    return q;
}

}  // namespace

RationalMatrix evaluation_matrix(const PointSet& z, int d) {
    std::vector<Vector> rows;
    rows.reserve(z.size());
    for (const auto& p : z.points()) rows.push_back(monomial_values(p, d));
    return RationalMatrix::from_rows(rows, count_monomials(z.ambient_dim() + 1, d));
}

long hf_points(const PointSet& z, int d) {
    if (d < 0 || z.empty()) return 0;
    return static_cast<long>(rank(evaluation_matrix(z, d)));
}

HVector h_vector(const PointSet& z) {
    HVector h;
    const long total = static_cast<long>(z.size());
    long prev = 0;
    for (int d = 0;; ++d) {
        long cur = hf_points(z, d);
        if (cur == prev) {
            // the next difference must vanish too
            if (hf_points(z, d + 1) != cur)
                throw Error("h-vector revived after a zero difference");
            break;
        }
        h.values.push_back(cur - prev);
        prev = cur;
    }
    if (h.sum() != total) throw Error("h-vector does not sum to the number of points");
    return h;
}

std::vector<Form> ideal_component(const PointSet& z, int d) {
    const int nv = z.ambient_dim() + 1;
    std::vector<Form> out;
    if (z.empty()) {
        for (const auto& e : monomial_basis(nv, d).monomials()) out.push_back(Form::monomial(e));
        return out;
    }
    for (const auto& v : kernel_basis(evaluation_matrix(z, d), true)) out.push_back(Form::from_vector(nv, d, v));
    return out;
}

namespace {

struct Draw {
    Form l;
    int eliminated;
    std::vector<Rational> l_values;  // L(P) for each point
};

Draw draw_form(const PointSet& z, Rng& rng) {
    const int nv = z.ambient_dim() + 1;
    for (int attempt = 0; attempt < 8; ++attempt) {
        Vector c = random_vector(rng, static_cast<std::size_t>(nv));
        auto nz = std::find_if(c.rbegin(), c.rend(), [](const Rational& x) { return sgn(x) != 0; });
        if (nz == c.rend()) continue;
        Draw d{Form::linear(c), static_cast<int>(std::distance(nz, c.rend())) - 1, {}};
        bool ok = true;
        for (const auto& p : z.points()) {
            Rational v = evaluate(d.l, p);
            if (sgn(v) == 0) {
                ok = false;
                break;
            }
            d.l_values.push_back(v);
        }
        if (ok) return d;
    }
    throw Error("no linear form avoiding the points after 8 draws");
}

// Rows W[P][u] = u(P') / L(P), with P' the point minus the eliminated coordinate.
RationalMatrix scaled_values(const PointSet& z, const Draw& dr, int t) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < z.size(); ++i) {
        Vector v = monomial_values(drop_coordinate(z[i], dr.eliminated), t);
        for (auto& x : v) x /= dr.l_values[i];
        rows.push_back(std::move(v));
    }
    return RationalMatrix::from_rows(rows, count_monomials(z.ambient_dim(), t));
}

// The matrix whose kernel is J_t: a form g in the reduction ring lies in J_t
// exactly when (g(P)/L(P))_P is a value vector of some form of degree t-1.
RationalMatrix membership_matrix(const PointSet& z, const Draw& dr, int t, const std::vector<Vector>& left_kernel) {
    RationalMatrix w = scaled_values(z, dr, t);
    RationalMatrix a(left_kernel.size(), w.cols());
    for (std::size_t i = 0; i < left_kernel.size(); ++i)
        for (std::size_t p = 0; p < z.size(); ++p) {
            const Rational& y = left_kernel[i][p];
            if (sgn(y) == 0) continue;
            for (std::size_t u = 0; u < w.cols(); ++u) a(i, u) += y * w(p, u);
        }
    return a;
}

}  // namespace

ArtinianReduction artinian_reduction(const PointSet& z, std::uint64_t seed, std::optional<int> d_max) {
    const int r = z.ambient_dim();
    Rng rng(seed);
    Draw first = draw_form(z, rng);
    Draw second = draw_form(z, rng);
    HVector h = h_vector(z);
    const int top = d_max.value_or(static_cast<int>(h.size()) + 1);

    std::vector<Component> comps;
    for (int t = 0; t <= top; ++t) {
        const long want = h[static_cast<std::size_t>(t)];
        if (want == 0) {
            comps.push_back(Component::full(r, t));
            continue;
        }
        if (t == 0) {
            comps.emplace_back(r, 0);
            continue;
        }
        std::vector<Vector> left = kernel_basis(evaluation_matrix(z, t - 1).transposed());
        RationalMatrix a = membership_matrix(z, first, t, left);
        std::vector<SparseVector> rows;
        for (const auto& v : kernel_basis(a, true)) {
            SparseVector s;
            for (std::size_t j = 0; j < v.size(); ++j)
                if (sgn(v[j]) != 0) s.emplace_back(j, v[j]);
            rows.push_back(std::move(s));
        }
        Component c = Component::from_reduced_rows(r, t, std::move(rows));
        if (static_cast<long>(c.codim()) != want)
            throw Error("reduction has Hilbert function " + std::to_string(c.codim()) + " in degree " +
                        std::to_string(t) + ", expected " + std::to_string(want));
        if (static_cast<long>(rank(membership_matrix(z, second, t, left))) != want)
            throw Error("two draws of the reduction form disagree in degree " + std::to_string(t));
        comps.push_back(std::move(c));
    }

    // x_e = -(sum_{i != e} c_i x_i) / c_e
    const Exponent unit_e = [&] {
        Exponent e(static_cast<std::size_t>(r) + 1, 0);
        e[static_cast<std::size_t>(first.eliminated)] = 1;
        return e;
    }();
    const Rational ce = first.l.coefficient(unit_e);
    Form rest = first.l;
    rest.add_term(unit_e, -ce);
    Form sub = drop_variable(rest, first.eliminated) * Rational(-1 / ce);
    return ArtinianReduction{r, GradedSpan(r, 0, std::move(comps)), first.l, first.eliminated, std::move(sub), std::move(h)};
}

Form lift_form(const ArtinianReduction& red, const Form& f) { return insert_variable(f, red.eliminated); }

RationalMatrix MultiplicationPencil::at(std::span<const Rational> a) const {
    RationalMatrix m(target_dim, source_dim);
    for (std::size_t v = 0; v < matrices.size(); ++v) {
        if (sgn(a[v]) == 0) continue;
        for (std::size_t i = 0; i < target_dim; ++i)
            for (std::size_t j = 0; j < source_dim; ++j) m(i, j) += a[v] * matrices[v](i, j);
    }
    return m;
}

MultiplicationPencil multiplication_pencil(const ArtinianReduction& red, int n, std::uint64_t seed) {
    const GradedSpan& j = red.components;
    if (!j.covers(n) || !j.covers(n + 1)) throw Error("reduction window does not cover degrees n, n+1");
    const long k = hilbert_function(j, n);
    if (k < 2 || hilbert_function(j, n + 1) != k - 1)
        throw HypothesisError("pencil needs Hilbert function k, k-1 with k >= 2 in degrees " + std::to_string(n) +
                              ", " + std::to_string(n + 1));
    const int r = red.num_vars;
    const Component& src = j[n];
    const Component& dst = j[n + 1];
    const MonomialBasis& bn = monomial_basis(r, n);
    const MonomialBasis& bn1 = monomial_basis(r, n + 1);

    MultiplicationPencil p;
    p.n = n;
    p.source_basis = src.standard();
    p.target_basis = dst.standard();
    p.source_dim = p.source_basis.size();
    p.target_dim = p.target_basis.size();
    for (int v = 0; v < r; ++v) {
        RationalMatrix b(p.target_dim, p.source_dim);
        for (std::size_t col = 0; col < p.source_dim; ++col) {
            Exponent m = bn[p.source_basis[col]];
            ++m[static_cast<std::size_t>(v)];
            Vector nf = dst.normal_form(SparseVector{{bn1.index(m), Rational(1)}});
            for (std::size_t row = 0; row < p.target_dim; ++row) b(row, col) = nf[row];
        }
        p.matrices.push_back(std::move(b));
    }
    // a separate stream: the reduction form drawn from Rng(seed) restricts to a form of J
    Rng rng = seeded_rng(seed, 1);
    Vector a = random_vector(rng, static_cast<std::size_t>(r));
    if (static_cast<long>(rank(p.at(a))) != k - 1)
        throw AlarmError("multiplication by a generic linear form is not surjective in degree " + std::to_string(n));
    return p;
}

DavisDecomposition davis_decompose(const PointSet& z, int n, int k) {
    if (z.ambient_dim() != 2) throw Error("decomposition is defined for points in the plane");
    HVector dh = h_vector(z);
    if (n < 0 || dh[static_cast<std::size_t>(n)] != k || dh[static_cast<std::size_t>(n) + 1] != k)
        throw HypothesisError("need Δh(" + std::to_string(n) + ") = Δh(" + std::to_string(n + 1) + ") = " +
                              std::to_string(k) + ", got " + dh.to_string());
    std::vector<Form> forms = ideal_component(z, n);
    std::vector<Form> more = ideal_component(z, n + 1);
    forms.insert(forms.end(), more.begin(), more.end());
    if (forms.empty()) throw HypothesisError("no forms of degree n+1 vanish on the points");

    DavisDecomposition out{form_gcd(forms), PointSet(2, {}), PointSet(2, {}), {}, {}, dh, {}, {}, {}, false, false, false, {}};
    if (out.gcd.degree() != k)
        out.alarms.push_back("common factor has degree " + std::to_string(out.gcd.degree()) + ", expected " +
                             std::to_string(k));
    for (std::size_t i = 0; i < z.size(); ++i)
        (sgn(evaluate(out.gcd, z[i])) == 0 ? out.z1_indices : out.z2_indices).push_back(i);
    out.z1 = z.subset(out.z1_indices);
    out.z2 = z.subset(out.z2_indices);
    out.dh_z1 = h_vector(out.z1);
    out.dh_z2 = h_vector(out.z2);

    out.z2_vanishes = static_cast<int>(out.dh_z2.size()) <= std::max(n - k, 0);
    if (!out.z2_vanishes) out.alarms.push_back("residual h-vector " + out.dh_z2.to_string() + " survives past degree " + std::to_string(n - k - 1));

    const std::size_t range = std::max({dh.size(), out.dh_z1.size(), out.dh_z2.size() + static_cast<std::size_t>(k)}) + 1;
    out.identity_with_h = out.identity_with_delta = true;
    long running = 0;
    for (std::size_t t = 0; t < range; ++t) {
        running += out.dh_z1[t];
        out.h_z1.push_back(running);
        const long shifted = static_cast<long>(t) >= k ? out.dh_z2[t - static_cast<std::size_t>(k)] : 0;
        if (dh[t] != shifted + running) out.identity_with_h = false;
        if (dh[t] != shifted + out.dh_z1[t]) out.identity_with_delta = false;
    }
    return out;
}

}  // namespace hfg
