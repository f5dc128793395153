#include "hfgrowth/exact_algebra.hpp"

#include <algorithm>
#include <cctype>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

namespace hfg {

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& text) {
    auto valid_int = [](std::string_view s, bool allow_sign) {
        std::size_t i = 0;
        if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) return false;
        for (; i < s.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
        return true;
    };
    std::string_view s(text);
    auto slash = s.find('/');
    std::string num(s.substr(0, slash));
    std::string den = slash == std::string_view::npos ? "1" : std::string(s.substr(slash + 1));
    if (!valid_int(num, true) || !valid_int(den, false)) throw Error("malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    Rational q{Integer(num), Integer(den)};
    if (q.get_den() == 0) throw Error("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

// ---------------------------------------------------------------------------
// Matrices

RationalMatrix RationalMatrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
    RationalMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) throw Error("row length mismatch");
        std::copy(rows[i].begin(), rows[i].end(), m.a_.begin() + static_cast<std::ptrdiff_t>(i * cols));
    }
    return m;
}

Vector RationalMatrix::row(std::size_t i) const {
    return Vector(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                  a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

RationalMatrix RationalMatrix::transposed() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

Vector RationalMatrix::apply(std::span<const Rational> v) const {
    if (v.size() != cols_) throw Error("matrix-vector size mismatch");
    Vector out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j]) != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Clear denominators row by row; only row spaces and kernels are used.
IntRows integer_rows(const RationalMatrix& m, const std::vector<std::size_t>& col_order) {
    IntRows a(m.rows(), std::vector<Integer>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Integer& d = m(i, j).get_den();
            if (d != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
        }
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const Rational& q = m(i, col_order[j]);
            if (sgn(q) == 0) continue;
            Integer t = l / q.get_den();
            a[i][j] = t * q.get_num();
        }
    }
    return a;
}

std::vector<std::size_t> identity_order(std::size_t n) {
    std::vector<std::size_t> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

std::size_t pick_pivot(const IntRows& a, std::size_t from, std::size_t col) {
    std::size_t best = a.size();
    std::size_t best_bits = 0;
    for (std::size_t i = from; i < a.size(); ++i) {
        if (sgn(a[i][col]) == 0) continue;
        std::size_t bits = mpz_sizeinbase(a[i][col].get_mpz_t(), 2);
        if (best == a.size() || bits < best_bits) {
            best = i;
            best_bits = bits;
        }
    }
    return best;
}

// Integer-preserving Gauss-Jordan. On return every pivot row has the common
// value `det` at its pivot and zeros in all other pivot columns.
struct FractionFreeRref {
    IntRows a;
    std::vector<std::size_t> pivot_cols;
    Integer det = 1;
};

FractionFreeRref fraction_free_rref(IntRows a, std::size_t cols) {
    FractionFreeRref out;
    std::size_t r = 0;
    Integer prev = 1;
    Integer t;
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = pick_pivot(a, r, c);
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        const Integer piv = a[r][c];
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r) continue;
            const Integer f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                t = piv * a[i][j];
                if (sgn(f) != 0) t -= f * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        out.pivot_cols.push_back(c);
        ++r;
    }
    a.resize(r);
    out.a = std::move(a);
    out.det = prev;
    return out;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
    IntRows a = integer_rows(m, identity_order(m.cols()));
    std::size_t r = 0;
    Integer prev = 1;
    Integer t;
    for (std::size_t c = 0; c < m.cols() && r < a.size(); ++c) {
        std::size_t p = pick_pivot(a, r, c);
        if (p == a.size()) continue;
        std::swap(a[r], a[p]);
        const Integer piv = a[r][c];
        for (std::size_t i = r + 1; i < a.size(); ++i) {
            const Integer f = a[i][c];
            for (std::size_t j = c + 1; j < m.cols(); ++j) {
                t = piv * a[i][j];
                if (sgn(f) != 0) t -= f * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = piv;
        ++r;
    }
    return r;
}

std::vector<Vector> kernel_basis(const RationalMatrix& m, bool leading_pivots) {
    const std::size_t n = m.cols();
    // Eliminating columns last-to-first makes each free column depend only on
    // later pivot columns, which is the shape leading_pivots asks for.
    std::vector<std::size_t> order = identity_order(n);
    if (leading_pivots) std::reverse(order.begin(), order.end());
    FractionFreeRref e = fraction_free_rref(integer_rows(m, order), n);
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : e.pivot_cols) is_pivot[c] = true;
    std::vector<Vector> basis;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f]) continue;
        Vector v(n);
        v[order[f]] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            const Integer& x = e.a[i][f];
            if (sgn(x) == 0) continue;
            v[order[e.pivot_cols[i]]] = Rational(-x, e.det);
            v[order[e.pivot_cols[i]]].canonicalize();
        }
        basis.push_back(std::move(v));
    }
    if (leading_pivots) std::reverse(basis.begin(), basis.end());
    return basis;
}

RowEchelon row_echelon(const RationalMatrix& m) {
    FractionFreeRref e = fraction_free_rref(integer_rows(m, identity_order(m.cols())), m.cols());
    RowEchelon out;
    out.pivots = e.pivot_cols;
    for (auto& r : e.a) {
        Vector v(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (sgn(r[j]) == 0) continue;
            v[j] = Rational(r[j], e.det);
            v[j].canonicalize();
        }
        out.rows.push_back(std::move(v));
    }
    return out;
}

std::vector<Vector> intersect_row_spaces(const std::vector<Vector>& a, const std::vector<Vector>& b,
                                         std::size_t n) {
    if (a.empty() || b.empty()) return {};
    RationalMatrix m(n, a.size() + b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(j, i) = a[i][j];
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < n; ++j) m(j, a.size() + i) = -b[i][j];
    std::vector<Vector> common;
    for (const Vector& k : kernel_basis(m)) {
        Vector v(n);
        for (std::size_t i = 0; i < a.size(); ++i)
            if (sgn(k[i]) != 0)
                for (std::size_t j = 0; j < n; ++j) v[j] += k[i] * a[i][j];
        common.push_back(std::move(v));
    }
    if (common.empty()) return {};
    return row_echelon(RationalMatrix::from_rows(common, n)).rows;
}

// ---------------------------------------------------------------------------
// Monomials

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool grlex_greater(const Exponent& a, const Exponent& b) {
    int da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] > b[i];
    return false;
}

std::size_t ExponentHash::operator()(const Exponent& e) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (int x : e) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
}

namespace {
void fill_monomials(std::vector<Exponent>& out, Exponent& cur, std::size_t pos, int left) {
    if (pos + 1 == cur.size()) {
        cur[pos] = left;
        out.push_back(cur);
        return;
    }
    for (int e = left; e >= 0; --e) {
        cur[pos] = e;
        fill_monomials(out, cur, pos + 1, left - e);
    }
}
}  // namespace

MonomialBasis::MonomialBasis(int num_vars, int degree) : r_(num_vars), d_(degree) {
    if (num_vars < 1) throw Error("monomial basis needs at least one variable");
    if (degree < 0) return;
    Exponent cur(static_cast<std::size_t>(num_vars), 0);
    fill_monomials(mons_, cur, 0, degree);
    index_.reserve(mons_.size());
    for (std::size_t i = 0; i < mons_.size(); ++i) index_.emplace(mons_[i], i);
}

std::size_t MonomialBasis::index(const Exponent& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) throw Error("exponent not in monomial basis");
    return it->second;
}

const MonomialBasis& monomial_basis(int num_vars, int degree) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<MonomialBasis>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{num_vars, degree}];
    if (!slot) slot = std::make_unique<MonomialBasis>(num_vars, degree);
    return *slot;
}

Integer binomial(long top, long bottom) {
    if (bottom < 0 || top < bottom) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(top), static_cast<unsigned long>(bottom));
    return out;
}

std::size_t count_monomials(int num_vars, int degree) {
    if (degree < 0) return 0;
    return binomial(degree + num_vars - 1, num_vars - 1).get_ui();
}

// ---------------------------------------------------------------------------
// Forms

Form::Form(int num_vars, int degree) : r_(num_vars), d_(degree) {
    if (num_vars < 1) throw Error("a form needs at least one variable");
    if (degree < 0) throw Error("negative form degree");
}

Form Form::constant(int num_vars, const Rational& c) {
    Form f(num_vars, 0);
    f.add_term(Exponent(static_cast<std::size_t>(num_vars), 0), c);
    return f;
}

Form Form::monomial(const Exponent& e, const Rational& c) {
    Form f(static_cast<int>(e.size()), total_degree(e));
    f.add_term(e, c);
    return f;
}

Form Form::variable(int num_vars, int i) {
    Exponent e(static_cast<std::size_t>(num_vars), 0);
    e.at(static_cast<std::size_t>(i)) = 1;
    return monomial(e);
}

Form Form::linear(std::span<const Rational> coeffs) {
    Form f(static_cast<int>(coeffs.size()), 1);
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        Exponent e(coeffs.size(), 0);
        e[i] = 1;
        f.add_term(e, coeffs[i]);
    }
    return f;
}

Form Form::from_vector(int num_vars, int degree, std::span<const Rational> coords) {
    const MonomialBasis& b = monomial_basis(num_vars, degree);
    if (coords.size() != b.size()) throw Error("coordinate vector has wrong length");
    Form f(num_vars, degree);
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (sgn(coords[i]) != 0) f.terms_.emplace(b[i], coords[i]);
    return f;
}

Rational Form::coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

const Exponent& Form::leading_exponent() const {
    if (terms_.empty()) throw Error("zero form has no leading term");
    return terms_.begin()->first;
}

const Rational& Form::leading_coefficient() const {
    if (terms_.empty()) throw Error("zero form has no leading term");
    return terms_.begin()->second;
}

void Form::add_term(const Exponent& e, const Rational& c) {
    if (static_cast<int>(e.size()) != r_) throw Error("exponent length does not match variable count");
    if (total_degree(e) != d_) throw Error("term degree does not match form degree");
    for (int x : e)
        if (x < 0) throw Error("negative exponent");
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Form& Form::operator+=(const Form& g) {
    if (g.r_ != r_ || g.d_ != d_) throw Error("adding forms of different shape");
    for (const auto& [e, c] : g.terms_) add_term(e, c);
    return *this;
}

Form& Form::operator-=(const Form& g) {
    if (g.r_ != r_ || g.d_ != d_) throw Error("subtracting forms of different shape");
    for (const auto& [e, c] : g.terms_) add_term(e, -c);
    return *this;
}

Form& Form::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

Form Form::operator-() const {
    Form f = *this;
    return f *= Rational(-1);
}

Vector Form::to_vector() const {
    const MonomialBasis& b = monomial_basis(r_, d_);
    Vector v(b.size());
    for (const auto& [e, c] : terms_) v[b.index(e)] = c;
    return v;
}

Form Form::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading_coefficient();
    return *this * inv;
}

std::string Form::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = abs(c);
        bool unit_monomial = d_ == 0;
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool wrote = false;
        if (a != 1 || unit_monomial) {
            os << a.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (wrote) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            wrote = true;
        }
    }
    return os.str();
}

Form multiply_forms(const Form& f, const Form& g) {
    if (f.num_vars() != g.num_vars()) throw Error("multiplying forms in different rings");
    Form out(f.num_vars(), f.degree() + g.degree());
    Exponent e(static_cast<std::size_t>(f.num_vars()));
    for (const auto& [ef, cf] : f.terms())
        for (const auto& [eg, cg] : g.terms()) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ef[i] + eg[i];
            out.add_term(e, cf * cg);
        }
    return out;
}

Rational evaluate(const Form& f, std::span<const Rational> point) {
    if (static_cast<int>(point.size()) != f.num_vars()) throw Error("point has wrong number of coordinates");
    std::vector<std::vector<Rational>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) {
        powers[i].resize(static_cast<std::size_t>(f.degree()) + 1);
        powers[i][0] = 1;
        for (int k = 1; k <= f.degree(); ++k) powers[i][k] = powers[i][k - 1] * point[i];
    }
    Rational sum = 0;
    for (const auto& [e, c] : f.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] != 0) t *= powers[i][e[i]];
        sum += t;
    }
    return sum;
}

std::optional<Form> divide_exact(const Form& f, const Form& g) {
    if (f.num_vars() != g.num_vars()) throw Error("dividing forms in different rings");
    if (g.is_zero()) throw Error("division by the zero form");
    if (f.degree() < g.degree()) {
        if (f.is_zero()) return Form(f.num_vars(), 0);
        return std::nullopt;
    }
    Form q(f.num_vars(), f.degree() - g.degree());
    Form rem = f;
    const Exponent& lg = g.leading_exponent();
    const Rational& cg = g.leading_coefficient();
    Exponent e(lg.size());
    while (!rem.is_zero()) {
        const Exponent& lr = rem.leading_exponent();
        for (std::size_t i = 0; i < e.size(); ++i) {
            e[i] = lr[i] - lg[i];
            if (e[i] < 0) return std::nullopt;
        }
        Form t = Form::monomial(e, rem.leading_coefficient() / cg);
        q += t;
        rem -= multiply_forms(t, g);
    }
    return q;
}

// ---------------------------------------------------------------------------
// GCD of forms in at most three variables.

namespace {

using UPoly = std::vector<Rational>;  // coefficients, low degree first

void trim(UPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

int deg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(a[i]) != 0)
            for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    trim(c);
    return c;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly c(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
    trim(c);
    return c;
}

// Returns (quotient, remainder).
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    UPoly q;
    if (deg(a) >= deg(b)) q.assign(a.size() - b.size() + 1, 0);
    while (!a.empty() && deg(a) >= deg(b)) {
        std::size_t shift = a.size() - b.size();
        Rational c = a.back() / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

UPoly monic(UPoly p) {
    if (p.empty()) return p;
    Rational inv = 1 / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

UPoly ugcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(std::move(a));
}

using BPoly = std::vector<UPoly>;  // coefficients in Q[y], indexed by x-degree

void trim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

UPoly content(const BPoly& p) {
    UPoly c;
    for (const auto& q : p) {
        if (q.empty()) continue;
        c = c.empty() ? monic(q) : ugcd(c, q);
        if (deg(c) == 0) break;
    }
    return c;
}

BPoly primitive(const BPoly& p) {
    UPoly c = content(p);
    BPoly out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].empty()) out[i] = divmod(p[i], c).first;
    return out;
}

BPoly prem(BPoly a, const BPoly& b) {
    const UPoly& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        std::size_t shift = a.size() - b.size();
        UPoly la = a.back();
        for (auto& c : a) c = mul(c, lb);
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = sub(a[shift + i], mul(la, b[i]));
        trim(a);
    }
    return a;
}

BPoly bgcd(BPoly a, BPoly b) {
    UPoly c = ugcd(content(a), content(b));
    a = primitive(a);
    b = primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        BPoly r = prem(a, b);
        a = std::move(b);
        b = r.empty() ? BPoly{} : primitive(r);
    }
    a = primitive(a);
    for (auto& q : a) q = mul(q, c);
    return a;
}

int valuation_last(const Form& f) {
    int v = f.degree();
    for (const auto& [e, c] : f.terms()) v = std::min(v, e.back());
    return v;
}

}  // namespace

Form form_gcd(std::span<const Form> fs) {
    if (fs.empty()) throw Error("form_gcd of an empty sequence");
    const int r = fs[0].num_vars();
    if (r > 3) throw Error("form_gcd supports at most three variables");
    for (const Form& f : fs) {
        if (f.num_vars() != r) throw Error("form_gcd inputs in different rings");
        if (f.is_zero()) throw Error("form_gcd input is zero");
    }
    int v = fs[0].degree();
    for (const Form& f : fs) v = std::min(v, valuation_last(f));

    Form out(r, 0);
    if (r == 1) {
        out = Form::constant(1, 1);
    } else if (r == 2) {
        auto dehom = [](const Form& f) {
            UPoly p(static_cast<std::size_t>(f.degree()) + 1);
            for (const auto& [e, c] : f.terms()) p[static_cast<std::size_t>(e[0])] = c;
            trim(p);
            return p;
        };
        UPoly g = dehom(fs[0]);
        for (const Form& f : fs.subspan(1)) g = ugcd(g, dehom(f));
        g = monic(g);
        out = Form(2, deg(g));
        for (int a = 0; a <= deg(g); ++a) out.add_term({a, deg(g) - a}, g[static_cast<std::size_t>(a)]);
    } else {
        auto dehom = [](const Form& f) {
            BPoly p(static_cast<std::size_t>(f.degree()) + 1);
            for (const auto& [e, c] : f.terms()) {
                auto& q = p[static_cast<std::size_t>(e[0])];
                if (q.size() <= static_cast<std::size_t>(e[1])) q.resize(static_cast<std::size_t>(e[1]) + 1);
                q[static_cast<std::size_t>(e[1])] = c;
            }
            for (auto& q : p) trim(q);
            trim(p);
            return p;
        };
        BPoly g = dehom(fs[0]);
        for (const Form& f : fs.subspan(1)) g = bgcd(g, dehom(f));
        if (fs.size() == 1) g = bgcd(g, g);
        int d = 0;
        for (std::size_t a = 0; a < g.size(); ++a)
            if (!g[a].empty()) d = std::max(d, static_cast<int>(a) + deg(g[a]));
        out = Form(3, d);
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < g[a].size(); ++b)
                if (sgn(g[a][b]) != 0)
                    out.add_term({static_cast<int>(a), static_cast<int>(b), d - static_cast<int>(a + b)}, g[a][b]);
    }
    Exponent zpow(static_cast<std::size_t>(r), 0);
    zpow.back() = v;
    return multiply_forms(out, Form::monomial(zpow)).monic();
}

Form determinant(const std::vector<std::vector<Form>>& m) {
    const std::size_t n = m.size();
    if (n == 0) throw Error("determinant of an empty matrix");
    for (const auto& row : m)
        if (row.size() != n) throw Error("determinant of a non-square matrix");
    if (n == 1) return m[0][0];
    std::optional<Form> total;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Form>> minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<Form> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        Form term = multiply_forms(m[0][j], determinant(minor));
        if (j % 2) term = -term;
        if (total) *total += term;
        else total = term;
    }
    return *total;
}

Form substitute_variable(const Form& f, int var, const Form& value) {
    if (value.num_vars() != f.num_vars() || value.degree() != 1) throw Error("substitution needs a linear form");
    const auto v = static_cast<std::size_t>(var);
    std::vector<Form> powers{Form::constant(f.num_vars(), 1)};
    Form out(f.num_vars(), f.degree());
    for (const auto& [e, c] : f.terms()) {
        while (powers.size() <= static_cast<std::size_t>(e[v])) powers.push_back(multiply_forms(powers.back(), value));
        Exponent rest = e;
        rest[v] = 0;
        out += multiply_forms(Form::monomial(rest, c), powers[static_cast<std::size_t>(e[v])]);
    }
    return out;
}

Form drop_variable(const Form& f, int var) {
    if (f.num_vars() < 2) throw Error("cannot drop the only variable");
    const auto v = static_cast<std::size_t>(var);
    Form out(f.num_vars() - 1, f.degree());
    for (const auto& [e, c] : f.terms()) {
        if (e[v] != 0) throw Error("form involves the dropped variable");
        Exponent g = e;
        g.erase(g.begin() + static_cast<std::ptrdiff_t>(v));
        out.add_term(g, c);
    }
    return out;
}

Form insert_variable(const Form& f, int var) {
    Form out(f.num_vars() + 1, f.degree());
    for (const auto& [e, c] : f.terms()) {
        Exponent g = e;
        g.insert(g.begin() + var, 0);
        out.add_term(g, c);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Linear subspaces

namespace {
std::vector<Form> canonical_linear(int num_coords, const std::vector<Form>& forms) {
    if (forms.empty()) return {};
    std::vector<Vector> rows;
    for (const Form& f : forms) {
        if (f.degree() != 1 || f.num_vars() != num_coords) throw Error("defining forms must be linear in r+1 variables");
        rows.push_back(f.to_vector());
    }
    std::vector<Form> out;
    for (const Vector& v : row_echelon(RationalMatrix::from_rows(rows, static_cast<std::size_t>(num_coords))).rows)
        out.push_back(Form::from_vector(num_coords, 1, v));
    return out;
}
}  // namespace

LinearSubspace::LinearSubspace(int ambient_dim, std::vector<Form> defining_forms)
    : r_(ambient_dim), forms_(canonical_linear(ambient_dim + 1, defining_forms)) {
    if (ambient_dim < 1) throw Error("ambient dimension must be positive");
}

bool LinearSubspace::contains(std::span<const Rational> point) const {
    for (const Form& f : forms_)
        if (sgn(evaluate(f, point)) != 0) return false;
    return true;
}

bool LinearSubspace::same_as(const LinearSubspace& other) const {
    return r_ == other.r_ && forms_ == other.forms_;
}

LinearSubspace LinearSubspace::span(const LinearSubspace& a, const LinearSubspace& b) {
    if (a.r_ != b.r_) throw Error("subspaces in different projective spaces");
    const auto n = static_cast<std::size_t>(a.r_ + 1);
    std::vector<Vector> ra, rb;
    for (const Form& f : a.forms_) ra.push_back(f.to_vector());
    for (const Form& f : b.forms_) rb.push_back(f.to_vector());
    std::vector<Form> forms;
    for (const Vector& v : intersect_row_spaces(ra, rb, n))
        forms.push_back(Form::from_vector(a.r_ + 1, 1, v));
    return LinearSubspace(a.r_, std::move(forms));
}

// ---------------------------------------------------------------------------
// Genericity

Rational random_rational(Rng& rng) {
    std::uniform_int_distribution<long> num(-10000, 10000);
    std::uniform_int_distribution<long> den(1, 100);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

Rng seeded_rng(std::uint64_t seed, std::uint32_t purpose) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), purpose};
    return Rng(seq);
}

Vector random_vector(Rng& rng, std::size_t n) {
    Vector v(n);
    for (auto& x : v) x = random_rational(rng);
    return v;
}

Form random_form(Rng& rng, int num_vars, int degree) {
    const MonomialBasis& b = monomial_basis(num_vars, degree);
    return Form::from_vector(num_vars, degree, random_vector(rng, b.size()));
}

}  // namespace hfg
