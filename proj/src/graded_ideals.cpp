#include "hfgrowth/graded_ideals.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <sstream>

namespace hfg {

SparseVector to_sparse(const Form& f) {
    const MonomialBasis& b = monomial_basis(f.num_vars(), f.degree());
    SparseVector v;
    v.reserve(f.terms().size());
    for (const auto& [e, c] : f.terms()) v.emplace_back(b.index(e), c);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
}

namespace {

// Incremental row reduction over a fixed column count. Rows are kept in
// semi-echelon form while inserting and fully reduced by finish().
class EchelonBuilder {
public:
    explicit EchelonBuilder(std::size_t n) : row_of_(n, -1), acc_(n), queued_(n, 0) {}

    void insert_reduced_row(SparseVector v) {
        row_of_[v.front().first] = static_cast<long>(rows_.size());
        rows_.push_back(std::move(v));
    }

    void insert(const SparseVector& v) {
        if (v.empty()) return;
        if (row_of_[v.front().first] < 0) {
            store(v);
            return;
        }
        std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> heap;
        for (const auto& [j, x] : v) {
            acc_[j] = x;
            touch(j, heap);
        }
        std::size_t lead = acc_.size();
        while (!heap.empty()) {
            std::size_t c = heap.top();
            heap.pop();
            if (sgn(acc_[c]) == 0) continue;
            long r = row_of_[c];
            if (r < 0) {
                lead = c;
                break;
            }
            const Rational f = acc_[c];
            for (const auto& [j, x] : rows_[static_cast<std::size_t>(r)]) {
                acc_[j] -= f * x;
                touch(j, heap);
            }
            acc_[c] = 0;
        }
        if (lead < acc_.size()) {
            std::sort(touched_.begin(), touched_.end());
            SparseVector out;
            for (std::size_t j : touched_)
                if (j >= lead && sgn(acc_[j]) != 0) out.emplace_back(j, acc_[j]);
            store(out);
        }
        for (std::size_t j : touched_) {
            acc_[j] = 0;
            queued_[j] = 0;
        }
        touched_.clear();
    }

    std::vector<SparseVector> finish() {
        std::vector<std::size_t> order(rows_.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return rows_[a].front().first > rows_[b].front().first; });
        for (std::size_t i : order) {
            SparseVector& row = rows_[i];
            const std::size_t p = row.front().first;
            bool clean = true;
            for (std::size_t t = 1; t < row.size() && clean; ++t) clean = row_of_[row[t].first] < 0;
            if (clean) continue;
            std::vector<std::size_t> cols;
            for (const auto& [j, x] : row) {
                if (j != p && row_of_[j] >= 0) {
                    for (const auto& [k, y] : rows_[static_cast<std::size_t>(row_of_[j])]) {
                        if (k == j) continue;
                        if (sgn(acc_[k]) == 0) cols.push_back(k);
                        acc_[k] -= x * y;
                    }
                } else {
                    if (sgn(acc_[j]) == 0) cols.push_back(j);
                    acc_[j] += x;
                }
            }
            std::sort(cols.begin(), cols.end());
            cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
            SparseVector out;
            for (std::size_t j : cols) {
                if (sgn(acc_[j]) != 0) out.emplace_back(j, acc_[j]);
                acc_[j] = 0;
            }
            row = std::move(out);
        }
        std::vector<SparseVector> out;
        out.reserve(rows_.size());
        for (auto it = order.rbegin(); it != order.rend(); ++it) out.push_back(std::move(rows_[*it]));
        return out;
    }

private:
    void touch(std::size_t j, std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>>& heap) {
        if (!queued_[j]) {
            queued_[j] = 1;
            touched_.push_back(j);
            heap.push(j);
        } else if (sgn(acc_[j]) != 0) {
            heap.push(j);
        }
    }

    void store(SparseVector v) {
        const Rational inv = 1 / v.front().second;
        if (inv != 1)
            for (auto& [j, x] : v) x *= inv;
        insert_reduced_row(std::move(v));
    }

    std::vector<SparseVector> rows_;
    std::vector<long> row_of_;
    std::vector<Rational> acc_;
    std::vector<char> queued_;
    std::vector<std::size_t> touched_;
};

// index of x_i * m in degree d+1, for every monomial m of degree d
std::vector<std::vector<std::size_t>> shift_table(int r, int d) {
    const MonomialBasis& src = monomial_basis(r, d);
    const MonomialBasis& dst = monomial_basis(r, d + 1);
    std::vector<std::vector<std::size_t>> t(static_cast<std::size_t>(r), std::vector<std::size_t>(src.size()));
    Exponent e;
    for (std::size_t m = 0; m < src.size(); ++m)
        for (int i = 0; i < r; ++i) {
            e = src[m];
            ++e[static_cast<std::size_t>(i)];
            t[static_cast<std::size_t>(i)][m] = dst.index(e);
        }
    return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Component

Component::Component(int num_vars, int degree) : Component(num_vars, degree, {}) {}

Component::Component(int num_vars, int degree, std::vector<SparseVector> rows)
    : r_(num_vars), d_(degree), rows_(std::move(rows)) {
    const std::size_t n = monomial_basis(num_vars, degree).size();
    row_of_.assign(n, -1);
    for (std::size_t i = 0; i < rows_.size(); ++i) row_of_[rows_[i].front().first] = static_cast<long>(i);
    standard_pos_.assign(n, -1);
    for (std::size_t j = 0; j < n; ++j)
        if (row_of_[j] < 0) {
            standard_pos_[j] = static_cast<long>(standard_.size());
            standard_.push_back(j);
        }
}

Component Component::full(int num_vars, int degree) {
    const std::size_t n = monomial_basis(num_vars, degree).size();
    std::vector<SparseVector> rows(n);
    for (std::size_t j = 0; j < n; ++j) rows[j] = {{j, Rational(1)}};
    return Component(num_vars, degree, std::move(rows));
}

Component Component::from_reduced_rows(int num_vars, int degree, std::vector<SparseVector> rows) {
    return Component(num_vars, degree, std::move(rows));
}

Component Component::span_of(int num_vars, int degree, std::vector<SparseVector> vectors) {
    EchelonBuilder b(monomial_basis(num_vars, degree).size());
    for (auto& v : vectors) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& c) { return a.first < c.first; });
        v.erase(std::remove_if(v.begin(), v.end(), [](const auto& a) { return sgn(a.second) == 0; }), v.end());
        b.insert(v);
    }
    return Component(num_vars, degree, b.finish());
}

Component Component::span_of(int num_vars, int degree, const std::vector<Form>& forms) {
    std::vector<SparseVector> vs;
    for (const Form& f : forms) {
        if (f.num_vars() != num_vars || f.degree() != degree) throw Error("form does not belong to this component");
        vs.push_back(to_sparse(f));
    }
    return span_of(num_vars, degree, std::move(vs));
}

Vector Component::normal_form(const SparseVector& v) const {
    Vector out(standard_.size());
    for (const auto& [j, x] : v) {
        long r = row_of_[j];
        if (r >= 0) {
            for (const auto& [k, y] : rows_[static_cast<std::size_t>(r)])
                if (k != j) out[static_cast<std::size_t>(standard_pos_[k])] -= x * y;
        } else {
            out[static_cast<std::size_t>(standard_pos_[j])] += x;
        }
    }
    return out;
}

bool Component::contains(const Form& f) const {
    if (f.num_vars() != r_ || f.degree() != d_) return false;
    for (const Rational& x : normal_form(f))
        if (sgn(x) != 0) return false;
    return true;
}

std::vector<Form> Component::basis() const {
    const MonomialBasis& b = monomial_basis(r_, d_);
    std::vector<Form> out;
    for (const auto& row : rows_) {
        Form f(r_, d_);
        for (const auto& [j, x] : row) f.add_term(b[j], x);
        out.push_back(std::move(f));
    }
    return out;
}

Component multiply_by_variables(const Component& v) {
    const int r = v.num_vars(), d = v.degree();
    if (v.dim() == 0) return Component(r, d + 1);
    if (v.codim() == 0) return Component::full(r, d + 1);
    auto table = shift_table(r, d);
    EchelonBuilder b(monomial_basis(r, d + 1).size());
    SparseVector prod;
    // Last variable first: these products have the smallest leading
    // monomials, so most later products fall through without reduction.
    for (int i = r - 1; i >= 0; --i)
        for (const auto& row : v.rows()) {
            prod.clear();
            for (const auto& [j, x] : row) prod.emplace_back(table[static_cast<std::size_t>(i)][j], x);
            b.insert(prod);
        }
    return Component::from_reduced_rows(r, d + 1, b.finish());
}

Component add_multiples(const Component& v, const std::vector<Form>& fs) {
    const int r = v.num_vars(), d = v.degree();
    const MonomialBasis& dst = monomial_basis(r, d);
    EchelonBuilder b(dst.size());
    for (const auto& row : v.rows()) b.insert(row);
    Exponent e;
    for (const Form& f : fs) {
        if (f.num_vars() != r) throw Error("generator in a different ring");
        if (f.degree() > d || f.is_zero()) continue;
        for (const Exponent& m : monomial_basis(r, d - f.degree()).monomials()) {
            SparseVector row;
            for (const auto& [fe, c] : f.terms()) {
                e = fe;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += m[i];
                row.emplace_back(dst.index(e), c);
            }
            b.insert(row);
        }
    }
    return Component::from_reduced_rows(r, d, b.finish());
}

// ---------------------------------------------------------------------------
// GradedSpan

GradedSpan::GradedSpan(int num_vars, int d_min, std::vector<Component> components)
    : r_(num_vars), d_min_(d_min), comps_(std::move(components)) {
    if (comps_.empty()) throw Error("graded span needs a nonempty window");
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (comps_[i].num_vars() != r_ || comps_[i].degree() != d_min_ + static_cast<int>(i))
            throw Error("graded span components out of order");
}

const Component& GradedSpan::operator[](int d) const {
    if (!covers(d)) throw Error("degree " + std::to_string(d) + " outside the window");
    return comps_[static_cast<std::size_t>(d - d_min_)];
}

bool GradedSpan::is_ideal_closed() const {
    for (std::size_t i = 1; i < comps_.size(); ++i) {
        Component up = multiply_by_variables(comps_[i - 1]);
        for (const auto& row : up.rows())
            for (const Rational& x : comps_[i].normal_form(row))
                if (sgn(x) != 0) return false;
    }
    return true;
}

MonomialIdeal::MonomialIdeal(int r, std::vector<Exponent> gens) : num_vars(r) {
    for (const auto& g : gens) {
        if (static_cast<int>(g.size()) != r) throw Error("generator exponent has wrong length");
        for (int x : g)
            if (x < 0) throw Error("negative exponent in generator");
    }
    std::sort(gens.begin(), gens.end(), [](const Exponent& a, const Exponent& b) {
        int da = total_degree(a), db = total_degree(b);
        return da != db ? da < db : grlex_greater(a, b);
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    auto divides = [](const Exponent& a, const Exponent& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : generators) redundant = redundant || divides(h, g);
        if (!redundant) generators.push_back(g);
    }
}

bool MonomialIdeal::contains(const Exponent& m) const {
    for (const auto& g : generators) {
        bool div = true;
        for (std::size_t i = 0; i < m.size() && div; ++i) div = g[i] <= m[i];
        if (div) return true;
    }
    return false;
}

GradedSpan span_from_generators(const std::vector<Form>& gens, int num_vars, int d_min, int d_max) {
    if (d_min > d_max) throw Error("inverted degree window");
    if (d_min < 0) throw Error("negative degree window");
    std::vector<Component> comps;
    for (int d = d_min; d <= d_max; ++d) {
        std::vector<Form> fresh;
        for (const Form& g : gens)
            if (d == d_min ? g.degree() <= d : g.degree() == d) fresh.push_back(g);
        Component base = d == d_min ? Component(num_vars, d) : multiply_by_variables(comps.back());
        comps.push_back(fresh.empty() ? std::move(base) : add_multiples(base, fresh));
    }
    return GradedSpan(num_vars, d_min, std::move(comps));
}

GradedSpan span_from_monomials(const MonomialIdeal& ideal, int d_min, int d_max) {
    if (d_min > d_max) throw Error("inverted degree window");
    std::vector<Component> comps;
    for (int d = d_min; d <= d_max; ++d) {
        const MonomialBasis& b = monomial_basis(ideal.num_vars, d);
        std::vector<SparseVector> rows;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (ideal.contains(b[j])) rows.push_back({{j, Rational(1)}});
        comps.push_back(Component::span_of(ideal.num_vars, d, std::move(rows)));
    }
    return GradedSpan(ideal.num_vars, d_min, std::move(comps));
}

long hilbert_function(const GradedSpan& span, int d) { return static_cast<long>(span[d].codim()); }

std::vector<long> hilbert_function(const GradedSpan& span) {
    std::vector<long> out;
    for (const auto& c : span.components()) out.push_back(static_cast<long>(c.codim()));
    return out;
}

long monomial_hilbert_function(const MonomialIdeal& ideal, int d) {
    const int r = ideal.num_vars;
    const auto& gens = ideal.generators;
    if (gens.size() > 20) {
        long count = 0;
        for (const auto& m : monomial_basis(r, d).monomials())
            if (!ideal.contains(m)) ++count;
        return count;
    }
    // inclusion-exclusion over generator subsets
    Integer total = 0;
    Exponent lcm(static_cast<std::size_t>(r), 0);
    std::function<void(std::size_t, Exponent&, int)> walk = [&](std::size_t from, Exponent& cur, int size) {
        const int dl = d - total_degree(cur);
        if (size > 0 && dl >= 0) {
            Integer term = binomial(dl + r - 1, r - 1);
            if (size % 2) total -= term;
            else total += term;
        }
        if (dl < 0) return;  // supersets only grow the lcm
        for (std::size_t g = from; g < gens.size(); ++g) {
            Exponent next = cur;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] = std::max(next[i], gens[g][i]);
            walk(g + 1, next, size + 1);
        }
    };
    total += binomial(d + r - 1, r - 1);
    walk(0, lcm, 0);
    return total.get_si();
}

MonomialIdeal lex_segment_ideal(const HVector& h, int r) {
    if (!is_o_sequence(h).ok) throw Error("lex segment needs an O-sequence; got " + h.to_string());
    if (h.size() > 1 && h.values[1] > r) throw Error("h(1) exceeds the number of variables");
    std::vector<Exponent> gens;
    std::vector<std::size_t> in_ideal;  // per degree: length of the lex-initial segment
    for (std::size_t d = 0; d < h.size(); ++d) {
        const MonomialBasis& b = monomial_basis(r, static_cast<int>(d));
        const long count = static_cast<long>(b.size()) - h.values[d];
        if (count < 0) throw Error("h(" + std::to_string(d) + ") exceeds the number of monomials");
        in_ideal.push_back(static_cast<std::size_t>(count));
        for (std::size_t j = 0; j < in_ideal[d]; ++j) {
            bool minimal = true;
            if (d > 0) {
                const MonomialBasis& prev = monomial_basis(r, static_cast<int>(d) - 1);
                Exponent e = b[j];
                for (int i = 0; i < r && minimal; ++i) {
                    if (e[static_cast<std::size_t>(i)] == 0) continue;
                    --e[static_cast<std::size_t>(i)];
                    minimal = prev.index(e) >= in_ideal[d - 1];
                    ++e[static_cast<std::size_t>(i)];
                }
            }
            if (minimal) gens.push_back(b[j]);
        }
        if (d > 0) {
            // the segment must contain all variable multiples of the previous one
            const MonomialBasis& prev = monomial_basis(r, static_cast<int>(d) - 1);
            for (std::size_t j = 0; j < in_ideal[d - 1]; ++j)
                for (int i = 0; i < r; ++i) {
                    Exponent e = prev[j];
                    ++e[static_cast<std::size_t>(i)];
                    if (b.index(e) >= in_ideal[d]) throw Error("lex segments do not form an ideal");
                }
        }
    }
    return MonomialIdeal(r, std::move(gens));
}

Component colon_by_forms(const GradedSpan& span, const std::vector<Form>& fs, int d) {
    const int r = span.num_vars();
    const MonomialBasis& src = monomial_basis(r, d);
    std::size_t total_rows = 0;
    for (const Form& f : fs)
        if (!span.covers(d + f.degree())) throw Error("window too small for the colon in degree " + std::to_string(d));
    RationalMatrix m;
    std::vector<std::vector<Vector>> cols(fs.size());
    for (std::size_t k = 0; k < fs.size(); ++k) {
        const Component& target = span[d + fs[k].degree()];
        total_rows += target.codim();
        for (const Exponent& u : src.monomials())
            cols[k].push_back(target.normal_form(multiply_forms(Form::monomial(u), fs[k])));
    }
    m = RationalMatrix(total_rows, src.size());
    std::size_t offset = 0;
    for (std::size_t k = 0; k < fs.size(); ++k) {
        const std::size_t h = cols[k].empty() ? 0 : cols[k][0].size();
        for (std::size_t j = 0; j < src.size(); ++j)
            for (std::size_t i = 0; i < h; ++i) m(offset + i, j) = cols[k][j][i];
        offset += h;
    }
    std::vector<SparseVector> rows;
    for (const Vector& v : kernel_basis(m, true)) {
        SparseVector s;
        for (std::size_t j = 0; j < v.size(); ++j)
            if (sgn(v[j]) != 0) s.emplace_back(j, v[j]);
        rows.push_back(std::move(s));
    }
    return Component::span_of(r, d, std::move(rows));
}

long min_generator_count(const GradedSpan& span, int d) {
    if (!span.covers(d) || !span.covers(d - 1)) throw Error("window too small for generator count");
    return static_cast<long>(span[d].dim()) - static_cast<long>(multiply_by_variables(span[d - 1]).dim());
}

std::vector<Form> minimal_generators(const GradedSpan& span, int d) {
    if (d == span.d_min()) return span[d].basis();
    Component up = multiply_by_variables(span[d - 1]);
    std::vector<Form> out;
    for (const Form& f : span[d].basis()) {
        if (up.contains(f)) continue;
        out.push_back(f);
        up = add_multiples(up, {f});
    }
    return out;
}

// ---------------------------------------------------------------------------
// Hilbert polynomials and base loci

std::string PolynomialFit::to_string() const {
    if (!determined) return "undetermined";
    if (coefficients.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coefficients[static_cast<std::size_t>(k)];
        if (sgn(c) == 0) continue;
        Rational a = abs(c);
        if (!first || sgn(c) < 0) os << (sgn(c) < 0 ? "-" : "+");
        first = false;
        if (k == 0 || a != 1) os << (a.get_den() == 1 ? a.get_str() : "(" + a.get_str() + ")");
        if (k >= 1) os << "t";
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

PolynomialFit hilbert_polynomial_fit(const std::vector<std::pair<int, long>>& values) {
    if (values.size() < 4) throw Error("polynomial fit needs at least four values");
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i].first != values[i - 1].first + 1) throw Error("polynomial fit needs consecutive degrees");
    std::vector<Integer> diff;
    for (const auto& [t, v] : values) diff.emplace_back(v);
    PolynomialFit fit;
    const std::size_t m = values.size();
    for (std::size_t e = 0;; ++e) {
        std::vector<Integer> next;
        for (std::size_t i = 1; i < diff.size(); ++i) next.push_back(diff[i] - diff[i - 1]);
        if (next.size() < 3) return fit;
        if (sgn(next[next.size() - 1]) == 0 && sgn(next[next.size() - 2]) == 0 && sgn(next[next.size() - 3]) == 0) {
            // Newton form through the last e+1 points, based at t0
            const std::size_t base = m - e - 1;
            const Rational t0 = values[base].first;
            std::vector<Integer> fwd;
            for (std::size_t i = base; i < m; ++i) fwd.emplace_back(values[i].second);
            std::vector<Rational> poly(e + 1);
            std::vector<Rational> binom{1};  // C(t - t0, j) as a polynomial in t
            Rational fact = 1;
            for (std::size_t j = 0; j <= e; ++j) {
                if (j > 0) {
                    std::vector<Rational> q(binom.size() + 1);
                    for (std::size_t s = 0; s < binom.size(); ++s) {
                        q[s + 1] += binom[s];
                        q[s] -= binom[s] * (t0 + static_cast<long>(j) - 1);
                    }
                    binom = std::move(q);
                    fact *= static_cast<long>(j);
                }
                for (std::size_t s = 0; s < binom.size(); ++s) poly[s] += binom[s] * Rational(fwd[0]) / fact;
                for (std::size_t i = 0; i + 1 < fwd.size(); ++i) fwd[i] = fwd[i + 1] - fwd[i];
                fwd.pop_back();
            }
            while (!poly.empty() && sgn(poly.back()) == 0) poly.pop_back();
            fit.determined = true;
            fit.coefficients = poly;
            auto eval = [&](long t) {
                Rational s = 0, p = 1;
                for (const auto& c : poly) {
                    s += c * p;
                    p *= t;
                }
                return s;
            };
            std::size_t from = m;
            while (from > 0 && eval(values[from - 1].first) == values[from - 1].second) --from;
            fit.valid_from = values[from].first;
            return fit;
        }
        diff = std::move(next);
    }
}

std::vector<long> truncation_quotient_dims(const Component& v, int steps, bool stop_at_zero) {
    std::vector<long> dims{static_cast<long>(v.codim())};
    Component cur = v;
    for (int s = 0; s < steps; ++s) {
        if (stop_at_zero && dims.back() == 0) break;
        cur = multiply_by_variables(cur);
        const long prev = dims.back();
        dims.push_back(static_cast<long>(cur.codim()));
        // <V> is generated in degree deg V, so maximal growth once means
        // maximal growth from here on (Gotzmann persistence)
        const int d = cur.degree() - 1;
        if (prev > 0 && dims.back() > 0 && dims.back() == macaulay_bound(prev, d)) {
            std::vector<long> rest = gotzmann_values(dims.back(), d + 1, steps - s - 1);
            dims.insert(dims.end(), rest.begin() + 1, rest.end());
            break;
        }
    }
    return dims;
}

std::string to_string(BaseLocusStatus s) {
    switch (s) {
        case BaseLocusStatus::empty: return "empty";
        case BaseLocusStatus::zero_dimensional: return "zero_dimensional";
        case BaseLocusStatus::positive_dimensional: return "positive_dimensional";
        case BaseLocusStatus::undetermined: return "undetermined";
    }
    return "undetermined";
}

int default_profile_window(int n, int r) { return n + r + 5; }

BaseLocusProfile base_locus_profile(const Component& degree_n, std::optional<int> window) {
    const int n = degree_n.degree();
    const int steps = window.value_or(default_profile_window(n, degree_n.num_vars()));
    BaseLocusProfile p;
    p.truncation_degree = n;
    p.quotient_dims = truncation_quotient_dims(degree_n, steps, true);
    if (p.quotient_dims.back() == 0) {
        p.status = BaseLocusStatus::empty;
        p.hilbert_polynomial = std::vector<Rational>{};
        return p;
    }
    std::vector<std::pair<int, long>> values;
    for (std::size_t i = 0; i < p.quotient_dims.size(); ++i) values.emplace_back(n + static_cast<int>(i), p.quotient_dims[i]);
    if (values.size() < 4) return p;
    PolynomialFit fit = hilbert_polynomial_fit(values);
    if (!fit.determined || fit.coefficients.empty()) return p;
    const int e = fit.degree();
    Rational deg = fit.coefficients.back();
    for (int j = 2; j <= e; ++j) deg *= j;
    if (deg.get_den() != 1 || sgn(deg) <= 0) return p;
    p.status = e == 0 ? BaseLocusStatus::zero_dimensional : BaseLocusStatus::positive_dimensional;
    p.dimension = e;
    p.degree = deg.get_num().get_si();
    p.hilbert_polynomial = fit.coefficients;
    return p;
}

BaseLocusProfile base_locus_profile(const GradedSpan& span, int n, std::optional<int> window) {
    return base_locus_profile(span[n], window);
}

bool basepoint_free_check(const Component& degree_n) {
    const int n = degree_n.degree(), r = degree_n.num_vars();
    const int cutoff = r * (n - 1) + 1;
    return truncation_quotient_dims(degree_n, std::max(0, cutoff - n), true).back() == 0;
}

bool basepoint_free_check(const GradedSpan& span, int n) { return basepoint_free_check(span[n]); }

long socle_dimension(const GradedSpan& span, int d) {
    const Component& src = span[d];
    const Component& dst = span[d + 1];
    const int r = span.num_vars();
    if (src.codim() == 0) return 0;
    auto table = shift_table(r, d);
    RationalMatrix m(static_cast<std::size_t>(r) * dst.codim(), src.codim());
    for (int i = 0; i < r; ++i)
        for (std::size_t s = 0; s < src.codim(); ++s) {
            Vector v = dst.normal_form(SparseVector{{table[static_cast<std::size_t>(i)][src.standard()[s]], Rational(1)}});
            for (std::size_t t = 0; t < v.size(); ++t) m(static_cast<std::size_t>(i) * dst.codim() + t, s) = v[t];
        }
    return static_cast<long>(src.codim() - rank(m));
}

TailCheck binary_tail_check(const GradedSpan& span, int n) {
    if (span.num_vars() != 2) throw Error("the tail check applies to two-variable ideals");
    if (!span.covers(n) || !span.covers(n + 1)) throw Error("window must cover n and n+1");
    TailCheck out;
    if (!basepoint_free_check(span, n)) {
        out.failed_hypothesis = 'a';
        out.diagnostic = "hypothesis (a) fails: [J]_n has a base point";
        return out;
    }
    const long hn = hilbert_function(span, n), hn1 = hilbert_function(span, n + 1);
    if (hn1 != hn - 1) {
        out.failed_hypothesis = 'b';
        out.diagnostic = "hypothesis (b) fails: h(n+1) = " + std::to_string(hn1) + " but h(n) - 1 = " + std::to_string(hn - 1);
        return out;
    }
    for (int d = n + 1; d <= span.d_max(); ++d) {
        long g = min_generator_count(span, d);
        if (g != 0) {
            out.failed_hypothesis = 'c';
            out.diagnostic = "hypothesis (c) fails: " + std::to_string(g) + " minimal generator(s) in degree " + std::to_string(d);
            return out;
        }
    }
    out.tail = truncation_quotient_dims(span[n], 2 * n, true);
    out.holds = true;
    for (std::size_t j = 0; j + 1 < out.tail.size(); ++j)
        out.holds = out.holds && out.tail[j + 1] == std::max(out.tail[j] - 1, 0L);
    out.holds = out.holds && out.tail.back() == 0;
    return out;
}

}  // namespace hfg
