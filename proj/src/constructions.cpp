#include "hfgrowth/constructions.hpp"

#include "hfgrowth/plane_finder.hpp"

#include <algorithm>
#include <array>

namespace hfg {

namespace {

constexpr int redraw_budget = 8;

long small_int(Rng& rng, long bound) { return std::uniform_int_distribution<long>(-bound, bound)(rng); }

Form small_form(Rng& rng, int num_vars, int degree) {
    Form f(num_vars, degree);
    for (const auto& e : monomial_basis(num_vars, degree).monomials()) f.add_term(e, small_int(rng, 20));
    return f;
}

using Plane3 = std::array<Integer, 3>;

Plane3 cross(const Plane3& a, const Plane3& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Integer dot(const Plane3& a, const Plane3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

bool is_zero(const Plane3& a) { return a[0] == 0 && a[1] == 0 && a[2] == 0; }

Plane3 random_line(Rng& rng) {
    for (;;) {
        Plane3 c{small_int(rng, 9), small_int(rng, 9), small_int(rng, 9)};
        if (!is_zero(c)) return c;
    }
}

Vector to_vector(const Plane3& p) { return {Rational(p[0]), Rational(p[1]), Rational(p[2])}; }

// Points of the line c = 0 in P^2 avoiding the other lines and each other.
std::vector<Vector> points_on_line(Rng& rng, const Plane3& c, std::size_t m, const std::vector<Plane3>& avoid) {
    Plane3 a, b;
    do {
        a = cross(c, random_line(rng));
        b = cross(c, random_line(rng));
    } while (is_zero(a) || is_zero(b) || is_zero(cross(a, b)));
    std::vector<Vector> out;
    std::vector<std::vector<std::string>> seen;
    for (int guard = 0; out.size() < m; ++guard) {
        if (guard > 10000) throw Error("could not place points on a line");
        const long s = small_int(rng, 40), t = small_int(rng, 40);
        Plane3 p{s * a[0] + t * b[0], s * a[1] + t * b[1], s * a[2] + t * b[2]};
        if (is_zero(p)) continue;
        if (std::any_of(avoid.begin(), avoid.end(), [&](const Plane3& l) { return dot(l, p) == 0; })) continue;
        Vector v = normalize_point(to_vector(p));
        std::vector<std::string> key;
        for (const auto& x : v) key.push_back(to_string(x));
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        out.push_back(v);
    }
    return out;
}

// Intersections of two families of lines, none of them on a third line of
// the families or on a line to avoid.
std::optional<std::vector<Vector>> grid_points(Rng& rng, int a, int b, const std::vector<Plane3>& avoid) {
    std::vector<Plane3> rows, cols;
    for (int i = 0; i < a; ++i) rows.push_back(random_line(rng));
    for (int j = 0; j < b; ++j) cols.push_back(random_line(rng));
    std::vector<Plane3> all = rows;
    all.insert(all.end(), cols.begin(), cols.end());
    std::vector<Vector> out;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
            Plane3 p = cross(rows[static_cast<std::size_t>(i)], cols[static_cast<std::size_t>(j)]);
            if (is_zero(p)) return std::nullopt;
            int on = 0;
            for (const auto& l : all) on += dot(l, p) == 0;
            if (on != 2) return std::nullopt;
            if (std::any_of(avoid.begin(), avoid.end(), [&](const Plane3& l) { return dot(l, p) == 0; }))
                return std::nullopt;
            out.push_back(to_vector(p));
        }
    return out;
}

Vector embed(const Vector& p, int r) {
    Vector q(static_cast<std::size_t>(r) + 1);
    std::copy(p.begin(), p.end(), q.begin());
    return q;
}

PointSet embed_all(const std::vector<Vector>& ps, int r) {
    std::vector<Vector> out;
    for (const auto& p : ps) out.push_back(embed(p, r));
    return PointSet(r, out);
}

HVector generic_h_vector(long m, int r) {
    HVector h;
    long left = m;
    for (int t = 0; left > 0; ++t) {
        const long c = std::min<long>(left, binomial(t + r - 1, r - 1).get_si());
        h.values.push_back(c);
        left -= c;
    }
    return h;
}

HVector curve_h_vector(int d, int n) {
    HVector h;
    for (int t = 0; t <= n; ++t) h.values.push_back(std::min(t + 1, d));
    if (d > 1) h.values.push_back(d - 1);
    return h;
}

HVector ci_h_vector(int a, int b) {
    HVector h;
    for (int t = 0; t <= a + b - 2; ++t) {
        long c = 0;
        for (int i = 0; i < a; ++i)
            if (t - i >= 0 && t - i < b) ++c;
        h.values.push_back(c);
    }
    return h;
}

std::vector<Plane3> distinct_lines(Rng& rng, int d) {
    std::vector<Plane3> lines;
    while (static_cast<int>(lines.size()) < d) {
        Plane3 c = random_line(rng);
        bool fresh = std::none_of(lines.begin(), lines.end(), [&](const Plane3& l) { return is_zero(cross(l, c)); });
        // no three concurrent
        for (std::size_t i = 0; fresh && i < lines.size(); ++i)
            for (std::size_t j = i + 1; fresh && j < lines.size(); ++j)
                if (dot(cross(lines[i], lines[j]), c) == 0) fresh = false;
        if (fresh) lines.push_back(c);
    }
    return lines;
}

// Points of the plane curve given as lines, spread round-robin.
std::vector<Vector> curve_points(Rng& rng, const std::vector<Plane3>& lines, std::size_t m) {
    std::vector<Vector> out;
    const std::size_t d = lines.size();
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Plane3> others;
        for (std::size_t j = 0; j < d; ++j)
            if (j != i) others.push_back(lines[j]);
        const std::size_t share = m / d + (i < m % d ? 1 : 0);
        auto ps = points_on_line(rng, lines[i], share, others);
        out.insert(out.end(), ps.begin(), ps.end());
    }
    return out;
}

std::string hv(const HVector& h) { return h.to_string(); }

}  // namespace

LinearSubspace coordinate_plane(int r) {
    std::vector<Form> forms;
    for (int i = 3; i <= r; ++i) forms.push_back(Form::variable(r + 1, i));
    return LinearSubspace(r, forms);
}

GradedSpan growth21_ideal(int which, std::uint64_t seed, int d_max) {
    std::vector<Exponent> g = {{6, 0, 0}, {5, 1, 0}, {5, 0, 1}, {4, 2, 0}, {4, 1, 1}, {4, 0, 2}};
    switch (which) {
        case 1:
            g.push_back({3, 3, 0});
            g.push_back({3, 2, 2});
            break;
        case 2: g.push_back({2, 4, 0}); break;
        case 3: g.push_back({1, 5, 0}); break;
        case 4: {
            Rng rng(seed);
            Vector p{Rational(small_int(rng, 20)), Rational(small_int(rng, 20)), Rational(1)};
            // I_P = (x - p0 z, y - p1 z)
            Form l1 = Form::variable(3, 0) - Form::variable(3, 2) * p[0];
            Form l2 = Form::variable(3, 1) - Form::variable(3, 2) * p[1];
            Form f = multiply_forms(l1, small_form(rng, 3, 3)) + multiply_forms(l2, small_form(rng, 3, 3));
            Form h = multiply_forms(l1, small_form(rng, 3, 5)) + multiply_forms(l2, small_form(rng, 3, 5));
            GradedSpan ci = span_from_generators({f, h}, 3, 0, d_max + 1);
            std::vector<Component> comps;
            for (int d = 0; d <= d_max; ++d) comps.push_back(colon_by_forms(ci, {l1, l2}, d));
            return GradedSpan(3, 0, std::move(comps));
        }
        default: throw Error("example index must be 1..4");
    }
    return span_from_monomials(MonomialIdeal(3, g), 0, d_max);
}

PointSet general_points(int m, int r, std::uint64_t seed) {
    if (m < 0 || r < 1) throw Error("need m >= 0 and r >= 1");
    Rng rng(seed);
    const HVector want = generic_h_vector(m, r);
    for (int attempt = 0; attempt < redraw_budget; ++attempt) {
        std::vector<Vector> ps;
        for (int i = 0; i < m; ++i) {
            Vector p(static_cast<std::size_t>(r) + 1);
            for (auto& x : p) x = small_int(rng, 99);
            p.back() = 1;
            ps.push_back(std::move(p));
        }
        try {
            PointSet z(r, ps);
            if (h_vector(z).values == want.values) return z;
        } catch (const Error&) {
            // duplicate draw
        }
    }
    throw Error("no general draw of " + std::to_string(m) + " points after " + std::to_string(redraw_budget) + " tries");
}

PointSet points_on_plane_curve(int d, int n, int r, std::uint64_t seed) {
    if (d < 1 || d > n || r < 2) throw Error("need 1 <= d <= n and r >= 2");
    const HVector want = curve_h_vector(d, n);
    Rng rng(seed);
    for (int attempt = 0; attempt < redraw_budget; ++attempt) {
        auto lines = distinct_lines(rng, d);
        auto ps = curve_points(rng, lines, static_cast<std::size_t>(want.sum()));
        std::vector<Vector> plane(ps.begin(), ps.end());
        if (h_vector(PointSet(2, plane)).values == want.values) return embed_all(plane, r);
    }
    throw Error("curve points did not reach h-vector " + hv(want));
}

PointSet truncate_hvector(const PointSet& z, int target_end) {
    HVector h = h_vector(z);
    const int end_now = static_cast<int>(h.size()) - 1;
    if (target_end > end_now) throw Error("h-vector already ends in degree " + std::to_string(end_now));
    std::vector<std::size_t> keep(z.size());
    for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
    while (static_cast<int>(h.size()) - 1 > target_end) {
        HVector want = h;
        if (--want.values.back() == 0) want.values.pop_back();
        bool removed = false;
        for (std::size_t j = keep.size(); j-- > 0;) {
            std::vector<std::size_t> trial = keep;
            trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(j));
            HVector got = h_vector(z.subset(trial));
            if (got.values == want.values) {
                keep = std::move(trial);
                h = std::move(got);
                removed = true;
                break;
            }
        }
        if (!removed) throw Error("no point removal lowers only the last entry of " + hv(h));
    }
    return z.subset(keep);
}

Construction build_curve_base_locus(int d, int k, int n, int r, std::uint64_t seed) {
    if (d < 1 || d > k || k > n || r < 3) throw Error("need 1 <= d <= k <= n and r >= 3");
    Rng rng(seed);
    const int a = (k + n - 2 * d + 1) / 2;
    const int b = (k + n - 2 * d + 2) / 2;

    HVector residual;
    if (d < k) {
        residual = ci_h_vector(a, b);
        residual.values.resize(static_cast<std::size_t>(n - d) + 2);
    }
    HVector want;
    for (int t = 0; t <= n + 1; ++t) {
        long v = d < k ? (t >= d ? residual[static_cast<std::size_t>(t - d)] : 0) + std::min(t + 1, d)
                       : curve_h_vector(d, n)[static_cast<std::size_t>(t)];
        if (t == 1) v += r - 2;
        want.values.push_back(v);
    }
    while (!want.values.empty() && want.values.back() == 0) want.values.pop_back();

    for (int attempt = 0; attempt < redraw_budget; ++attempt) {
        auto lines = distinct_lines(rng, d);
        const auto base = static_cast<std::size_t>(curve_h_vector(d, n).sum());
        std::vector<Vector> plane = curve_points(rng, lines, base + (d < k ? 1 : 0));
        if (d < k) {
            auto grid = grid_points(rng, a, b, lines);
            if (!grid) continue;
            PointSet z2(2, *grid);
            if (a + b - 2 > n - d + 1) z2 = truncate_hvector(z2, n - d + 1);
            plane.insert(plane.end(), z2.points().begin(), z2.points().end());
        }
        std::vector<Vector> all;
        try {
            PointSet in_plane(2, plane);
            for (const auto& p : in_plane.points()) all.push_back(embed(p, r));
        } catch (const Error&) {
            continue;  // a grid point landed on the curve points
        }
        for (int i = 0; i < r - 2; ++i) {
            Vector p(static_cast<std::size_t>(r) + 1);
            for (auto& x : p) x = small_int(rng, 99);
            p.back() = 1;
            all.push_back(std::move(p));
        }
        PointSet z(r, all);
        if (h_vector(z).values != want.values) continue;

        ConstructionRecipe rec;
        rec.name = "curvebase";
        rec.parameters = {{"d", d}, {"k", k}, {"n", n}, {"r", r}};
        rec.seed = seed;
        rec.expected_h = want;
        rec.expected_base_dim = 1;
        rec.expected_base_degree = d;
        rec.notes.push_back("degree-" + std::to_string(d) + " curve realized as a union of general lines in the plane " +
                            "spanned by the first three coordinates");
        if (d < k)
            rec.notes.push_back("residual points: (" + std::to_string(a) + "," + std::to_string(b) +
                                ") line grid truncated to end in degree " + std::to_string(n - d + 1));
        return {std::move(z), std::move(rec)};
    }
    throw Error("no draw reached h-vector " + hv(want));
}

Construction build_plane_regime(int k, int n, int r, std::uint64_t seed) {
    if (k < 2 || n < k + 1 || r < 3) throw Error("need 2 <= k, k+1 <= n and r >= 3");
    HVector want;
    for (int t = 0; t <= n + 1; ++t)
        want.values.push_back(t <= k ? t + 1 : t < n ? k + 1 : t == n ? k : k - 1);
    Rng rng(seed);
    for (int attempt = 0; attempt < redraw_budget; ++attempt) {
        // a (k+1, n) complete intersection already has the right h-vector up
        // to degree n+1; drop points until it stops there
        auto grid = grid_points(rng, k + 1, n, {});
        if (!grid) continue;
        PointSet flat = truncate_hvector(PointSet(2, *grid), n + 1);
        if (h_vector(flat).values != want.values) continue;
        PointSet z = embed_all(flat.points(), r);
        if (!check_hypotheses(z, n, k, rng()).all_passed()) continue;

        ConstructionRecipe rec;
        rec.name = "planeregime";
        rec.parameters = {{"k", k}, {"n", n}, {"r", r}};
        rec.seed = seed;
        rec.expected_h = want;
        rec.plane = coordinate_plane(r);
        rec.notes.push_back("(" + std::to_string(k + 1) + "," + std::to_string(n) +
                            ") line grid in the plane spanned by the first three coordinates, truncated to end in degree " +
                            std::to_string(n + 1));
        return {std::move(z), std::move(rec)};
    }
    throw Error("no draw satisfied the plane hypotheses for h-vector " + hv(want));
}

std::vector<Form> binary_tail_generators(int n, int k, std::uint64_t seed) {
    if (k < 1 || n < k + 1) throw Error("need 1 <= k <= n-1");
    const int m = n - k;
    Rng rng(seed);
    std::vector<std::vector<Form>> mat(static_cast<std::size_t>(m) + 1);
    for (auto& row : mat) {
        for (int c = 0; c + 1 < m; ++c) row.push_back(random_form(rng, 2, 1));
        row.push_back(random_form(rng, 2, k + 1));
    }
    std::vector<Form> gens;
    for (int skip = 0; skip <= m; ++skip) {
        std::vector<std::vector<Form>> minor;
        for (int i = 0; i <= m; ++i)
            if (i != skip) minor.push_back(mat[static_cast<std::size_t>(i)]);
        gens.push_back(determinant(minor));
    }
    return gens;
}

nlohmann::json to_json(const ConstructionRecipe& r) {
    nlohmann::json j = {{"name", r.name}, {"parameters", r.parameters}, {"seed", r.seed},
                        {"expected_h_vector", r.expected_h.values}, {"notes", r.notes}};
    j["expected_base_dim"] = r.expected_base_dim ? nlohmann::json(*r.expected_base_dim) : nlohmann::json(nullptr);
    j["expected_base_degree"] = r.expected_base_degree ? nlohmann::json(*r.expected_base_degree) : nlohmann::json(nullptr);
    if (r.plane) {
        nlohmann::json forms = nlohmann::json::array();
        for (const Form& f : r.plane->defining_forms()) forms.push_back(f.to_string());
        j["plane"] = forms;
    }
    return j;
}

}  // namespace hfg
