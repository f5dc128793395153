#include "hfgrowth/plane_finder.hpp"

#include "hfgrowth/graded_ideals.hpp"

#include <algorithm>

namespace hfg {

bool HypothesisLog::all_passed() const {
    return std::all_of(records.begin(), records.end(), [](const HypothesisRecord& r) { return r.passed; });
}

long plane_point_bound(long k, int n) { return k * (k + 1) / 2 + (k + 1) * (n - k + 2) - 3; }

namespace {

int reduction_window(const HVector& h, int n) { return std::max(n + 2, static_cast<int>(h.size()) + 1); }

HypothesisLog run_checks(const ArtinianReduction& red, int n, int k) {
    HypothesisLog log;
    const HVector& h = red.h;
    const auto at = [&](int d) { return h[static_cast<std::size_t>(d)]; };
    const bool shape = k >= 2 && k <= n && at(n) == k && at(n + 1) == k - 1 && static_cast<int>(h.size()) == n + 2;
    log.records.push_back({"tail_shape", shape,
                           "h-vector " + h.to_string() + ", want " + std::to_string(k) + ", " + std::to_string(k - 1) +
                               ", 0 from degree " + std::to_string(n) + " with 2 <= k <= n"});
    const long gens = min_generator_count(red.components, n + 1);
    log.records.push_back({"no_generator_in_degree_n+1", gens == 0,
                           std::to_string(gens) + " minimal generators of J in degree " + std::to_string(n + 1)});
    const bool bpf = basepoint_free_check(red.components, n);
    log.records.push_back({"basepoint_free", bpf, bpf ? "<[J]_n> is artinian" : "<[J]_n> has a base locus"});
    const long soc = socle_dimension(red.components, n);
    log.records.push_back({"no_socle_in_degree_n", soc == 0, "socle dimension " + std::to_string(soc)});
    return log;
}

std::string describe(const std::vector<Vector>& vs) {
    std::string s = "[";
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i) s += ", ";
        s += "(";
        for (std::size_t j = 0; j < vs[i].size(); ++j) s += (j ? "," : "") + to_string(vs[i][j]);
        s += ")";
    }
    return s + "]";
}

}  // namespace

HypothesisLog check_hypotheses(const PointSet& z, int n, int k, std::uint64_t seed) {
    HVector h = h_vector(z);
    return run_checks(artinian_reduction(z, seed, reduction_window(h, n)), n, k);
}

AnnihilatorLine annihilator_line(const ArtinianReduction& red, int n, std::uint64_t seed) {
    MultiplicationPencil p = multiplication_pencil(red, n, seed);
    const auto r = static_cast<std::size_t>(red.num_vars);
    RationalMatrix entries(p.target_dim * p.source_dim, r);
    for (std::size_t i = 0; i < p.target_dim; ++i)
        for (std::size_t j = 0; j < p.source_dim; ++j)
            for (std::size_t v = 0; v < r; ++v) entries(i * p.source_dim + j, v) = p.matrices[v](i, j);

    AnnihilatorLine out;
    out.entry_span = row_echelon(entries).rows;
    out.entry_span_rank = out.entry_span.size();
    if (out.entry_span_rank != 2)
        throw AlarmError("pencil entries span a space of dimension " + std::to_string(out.entry_span_rank) +
                         " instead of 2: " + describe(out.entry_span));
    for (const Vector& a : kernel_basis(entries, true)) out.forms.push_back(Form::linear(a));

    // the annihilating forms must also kill [S/J]_{n-1} -> [S/J]_n
    const Component& lower = red.components[n - 1];
    const Component& upper = red.components[n];
    const MonomialBasis& b = monomial_basis(red.num_vars, n - 1);
    for (const Form& l : out.forms) {
        std::vector<Vector> images;
        for (std::size_t s : lower.standard())
            images.push_back(upper.normal_form(multiply_forms(l, Form::monomial(b[s]))));
        const std::size_t p_rank = images.empty() ? 0 : rank(RationalMatrix::from_rows(images, upper.codim()));
        if (p_rank != 0)
            throw AlarmError("multiplication by " + l.to_string() + " from degree " + std::to_string(n - 1) +
                             " has rank " + std::to_string(p_rank) + ", expected 0");
    }
    return out;
}

PlaneCertificate find_plane(const PointSet& z, int n, int k, std::uint64_t seed) {
    const int r = z.ambient_dim();
    if (r < 3) throw Error("plane search needs ambient dimension at least 3");
    HVector h = h_vector(z);
    Rng master(seed);
    std::vector<std::uint64_t> seeds = {master(), master(), master()};
    std::vector<ArtinianReduction> reds;
    for (auto s : seeds) reds.push_back(artinian_reduction(z, s, reduction_window(h, n)));

    HypothesisLog log = run_checks(reds[0], n, k);
    if (!log.all_passed()) {
        std::string msg = "hypotheses fail:";
        for (const auto& rec : log.records)
            if (!rec.passed) msg += " " + rec.name + " (" + rec.evidence + ")";
        throw HypothesisError(msg);
    }

    std::vector<LinearSubspace> lines;
    for (std::size_t i = 0; i < reds.size(); ++i) {
        AnnihilatorLine ann = annihilator_line(reds[i], n, seeds[i]);
        std::vector<Form> forms = {reds[i].reduction_form};
        for (const Form& l : ann.forms) forms.push_back(lift_form(reds[i], l));
        LinearSubspace line(r, forms);
        if (line.projective_dimension() != 1)
            throw AlarmError("lifted annihilator has projective dimension " + std::to_string(line.projective_dimension()));
        lines.push_back(std::move(line));
    }
    LinearSubspace plane = LinearSubspace::span(lines[0], lines[1]);
    if (plane.projective_dimension() != 2)
        throw AlarmError("the two lines span a subspace of projective dimension " +
                         std::to_string(plane.projective_dimension()));

    PlaneCertificate c{plane, {}, {}, {}, log, plane_point_bound(k, n), 0, false, {}};
    c.seeds_agree = LinearSubspace::span(lines[0], lines[2]).same_as(plane) &&
                    LinearSubspace::span(lines[1], lines[2]).same_as(plane);
    if (!c.seeds_agree) c.alarms.push_back("a third hyperplane section gives a different plane");

    for (std::size_t i = 0; i < z.size(); ++i) (plane.contains(z[i]) ? c.z1_indices : c.z2_indices).push_back(i);
    HVector h1 = h_vector(z.subset(c.z1_indices));
    HVector h2 = h_vector(z.subset(c.z2_indices));
    const std::size_t len = std::max({h.size(), h1.size(), h2.size()});
    for (std::size_t t = 0; t < len; ++t) {
        c.delta_table.push_back({static_cast<int>(t), h[t], h1[t], h2[t]});
        if (static_cast<int>(t) >= n && h1[t] != h[t])
            c.alarms.push_back("Δh of the plane part differs from Δh_Z in degree " + std::to_string(t));
        if (static_cast<int>(t) >= n - 1 && h2[t] != 0)
            c.alarms.push_back("Δh of the off-plane part is nonzero in degree " + std::to_string(t));
    }
    c.actual = static_cast<long>(c.z1_indices.size());
    if (c.actual < c.required)
        c.alarms.push_back("only " + std::to_string(c.actual) + " points on the plane, bound is " +
                           std::to_string(c.required));
    return c;
}

nlohmann::json to_json(const HypothesisLog& log) {
    nlohmann::json a = nlohmann::json::array();
    for (const auto& r : log.records) a.push_back({{"name", r.name}, {"passed", r.passed}, {"evidence", r.evidence}});
    return a;
}

nlohmann::json to_json(const PlaneCertificate& c) {
    nlohmann::json forms = nlohmann::json::array();
    for (const Form& f : c.plane.defining_forms()) forms.push_back(f.to_string());
    nlohmann::json table = nlohmann::json::array();
    for (const auto& d : c.delta_table) table.push_back({{"t", d.t}, {"dh_z", d.z}, {"dh_z1", d.z1}, {"dh_z2", d.z2}});
    return {{"plane", forms},
            {"z1_indices", c.z1_indices},
            {"z2_indices", c.z2_indices},
            {"delta_table", table},
            {"hypothesis_log", to_json(c.hypotheses)},
            {"bound", {{"required", c.required}, {"actual", c.actual}}},
            {"seeds_agree", c.seeds_agree},
            {"alarms", c.alarms}};
}

}  // namespace hfg
