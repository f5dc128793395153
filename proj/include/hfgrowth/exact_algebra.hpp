#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace hfg {

using Integer = mpz_class;
using Rational = mpq_class;
using Vector = std::vector<Rational>;

// Bad input or violated precondition.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A stated hypothesis does not hold on the given data.
class HypothesisError : public Error {
public:
    using Error::Error;
};

// A theorem conclusion failed on hypothesis-passing input.
class AlarmError : public Error {
public:
    using Error::Error;
};

std::string to_string(const Rational& q);
Rational parse_rational(const std::string& text);

// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RationalMatrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    Vector row(std::size_t i) const;
    RationalMatrix transposed() const;
    Vector apply(std::span<const Rational> v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> a_;
};

// Fraction-free (Bareiss) elimination; pivots chosen by smallest bit size.
std::size_t rank(const RationalMatrix& m);

// Right null space. With leading_pivots the basis is the reduced echelon
// form of the kernel whose pivot in each vector is its first nonzero index,
// and every other entry lies on a non-pivot index.
std::vector<Vector> kernel_basis(const RationalMatrix& m, bool leading_pivots = false);

// Reduced row echelon form of the row space (pivot = first nonzero column).
struct RowEchelon {
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
};
RowEchelon row_echelon(const RationalMatrix& m);

// Basis of the intersection of two row spaces in Q^n.
std::vector<Vector> intersect_row_spaces(const std::vector<Vector>& a, const std::vector<Vector>& b,
                                         std::size_t n);

// ---------------------------------------------------------------------------
// Monomials and forms. Exponent vectors of length r; graded lex with
// x1 > x2 > ... > xr.

using Exponent = std::vector<int>;

int total_degree(const Exponent& e);
bool grlex_greater(const Exponent& a, const Exponent& b);

struct GrlexGreater {
    bool operator()(const Exponent& a, const Exponent& b) const { return grlex_greater(a, b); }
};

struct ExponentHash {
    std::size_t operator()(const Exponent& e) const noexcept;
};

// All monomials of degree d in r variables, grlex-descending, with index lookup.
class MonomialBasis {
public:
    MonomialBasis(int num_vars, int degree);
    int num_vars() const { return r_; }
    int degree() const { return d_; }
    std::size_t size() const { return mons_.size(); }
    const Exponent& operator[](std::size_t i) const { return mons_[i]; }
    const std::vector<Exponent>& monomials() const { return mons_; }
    std::size_t index(const Exponent& e) const;

private:
    int r_;
    int d_;
    std::vector<Exponent> mons_;
    std::unordered_map<Exponent, std::size_t, ExponentHash> index_;
};

// Shared, lazily built bases (thread-safe).
const MonomialBasis& monomial_basis(int num_vars, int degree);

Integer binomial(long top, long bottom);
std::size_t count_monomials(int num_vars, int degree);

class Form {
public:
    using Terms = std::map<Exponent, Rational, GrlexGreater>;

    Form(int num_vars, int degree);
    static Form constant(int num_vars, const Rational& c);
    static Form monomial(const Exponent& e, const Rational& c = 1);
    static Form variable(int num_vars, int i);
    static Form linear(std::span<const Rational> coeffs);
    static Form from_vector(int num_vars, int degree, std::span<const Rational> coords);

    int num_vars() const { return r_; }
    int degree() const { return d_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const Exponent& e) const;
    const Exponent& leading_exponent() const;
    const Rational& leading_coefficient() const;

    void add_term(const Exponent& e, const Rational& c);
    Form& operator+=(const Form& g);
    Form& operator-=(const Form& g);
    Form& operator*=(const Rational& c);
    Form operator-() const;
    friend Form operator+(Form f, const Form& g) { return f += g; }
    friend Form operator-(Form f, const Form& g) { return f -= g; }
    friend Form operator*(Form f, const Rational& c) { return f *= c; }
    bool operator==(const Form& g) const { return r_ == g.r_ && d_ == g.d_ && terms_ == g.terms_; }

    // Coordinates in monomial_basis(r, d).
    Vector to_vector() const;
    Form monic() const;
    std::string to_string() const;

private:
    int r_;
    int d_;
    Terms terms_;
};

Form multiply_forms(const Form& f, const Form& g);
Rational evaluate(const Form& f, std::span<const Rational> point);
// Exact quotient f / g, or nullopt when g does not divide f.
std::optional<Form> divide_exact(const Form& f, const Form& g);
// Monic (grlex) greatest common divisor of forms in at most three variables.
Form form_gcd(std::span<const Form> fs);
// Determinant of a square matrix of forms (Laplace expansion); entries of
// each row must have degrees that make every product homogeneous.
Form determinant(const std::vector<std::vector<Form>>& m);
// Replace variable `var` by the linear form `value` (same variable count).
Form substitute_variable(const Form& f, int var, const Form& value);
// Drop variable `var` from a form that does not involve it.
Form drop_variable(const Form& f, int var);
// Insert a new variable at position `var` with exponent zero.
Form insert_variable(const Form& f, int var);

// Projective linear subspace of P^r cut out by linear forms in r+1 variables.
class LinearSubspace {
public:
    LinearSubspace(int ambient_dim, std::vector<Form> defining_forms);
    int ambient_dim() const { return r_; }
    const std::vector<Form>& defining_forms() const { return forms_; }
    int projective_dimension() const { return r_ - static_cast<int>(forms_.size()); }
    bool contains(std::span<const Rational> point) const;
    // Equality as point sets: same row space of defining forms.
    bool same_as(const LinearSubspace& other) const;
    // Smallest subspace containing both.
    static LinearSubspace span(const LinearSubspace& a, const LinearSubspace& b);

private:
    int r_;
    std::vector<Form> forms_;
};

// ---------------------------------------------------------------------------
// Seeded genericity.

using Rng = std::mt19937_64;

// An engine seeded by (seed, purpose). Draws made for different purposes
// from the same user seed are independent of each other.
Rng seeded_rng(std::uint64_t seed, std::uint32_t purpose);

// Numerator uniform in [-10^4, 10^4], denominator uniform in [1, 10^2].
Rational random_rational(Rng& rng);
Vector random_vector(Rng& rng, std::size_t n);
Form random_form(Rng& rng, int num_vars, int degree);

}  // namespace hfg
