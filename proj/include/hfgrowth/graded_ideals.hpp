#pragma once

#include "hfgrowth/binomial_calculus.hpp"
#include "hfgrowth/exact_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hfg {

// Sorted (index, nonzero value) pairs over monomial_basis(r, d).
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

SparseVector to_sparse(const Form& f);

// A subspace of the degree-d forms kept in reduced echelon form: each basis
// row starts with coefficient 1 on its grlex-leading monomial (a pivot) and
// is otherwise supported on non-pivot ("standard") monomials.
class Component {
public:
    Component(int num_vars, int degree);  // zero subspace
    static Component full(int num_vars, int degree);
    static Component span_of(int num_vars, int degree, std::vector<SparseVector> vectors);
    static Component span_of(int num_vars, int degree, const std::vector<Form>& forms);
    // Rows already in the reduced echelon shape described above, sorted by pivot.
    static Component from_reduced_rows(int num_vars, int degree, std::vector<SparseVector> rows);

    int num_vars() const { return r_; }
    int degree() const { return d_; }
    std::size_t ambient_dim() const { return row_of_.size(); }
    std::size_t dim() const { return rows_.size(); }
    std::size_t codim() const { return standard_.size(); }

    const std::vector<SparseVector>& rows() const { return rows_; }
    const std::vector<std::size_t>& standard() const { return standard_; }
    bool is_pivot(std::size_t monomial) const { return row_of_[monomial] >= 0; }

    // Coordinates of v modulo the subspace, over standard().
    Vector normal_form(const SparseVector& v) const;
    Vector normal_form(const Form& f) const { return normal_form(to_sparse(f)); }
    bool contains(const Form& f) const;
    std::vector<Form> basis() const;
    bool operator==(const Component& o) const { return r_ == o.r_ && d_ == o.d_ && rows_ == o.rows_; }

private:
    Component(int num_vars, int degree, std::vector<SparseVector> rows);

    int r_;
    int d_;
    std::vector<SparseVector> rows_;
    std::vector<long> row_of_;
    std::vector<std::size_t> standard_;
    std::vector<long> standard_pos_;
};

// x_1 V + ... + x_r V (one degree up).
Component multiply_by_variables(const Component& v);
// V + f * [S]_{d - deg f} for each f.
Component add_multiples(const Component& v, const std::vector<Form>& fs);

// Per-degree components of a homogeneous ideal over [d_min, d_max].
class GradedSpan {
public:
    GradedSpan(int num_vars, int d_min, std::vector<Component> components);

    int num_vars() const { return r_; }
    int d_min() const { return d_min_; }
    int d_max() const { return d_min_ + static_cast<int>(comps_.size()) - 1; }
    bool covers(int d) const { return d >= d_min_ && d <= d_max(); }
    const Component& operator[](int d) const;
    const std::vector<Component>& components() const { return comps_; }
    // Every component contains the variable multiples of the previous one.
    bool is_ideal_closed() const;

private:
    int r_;
    int d_min_;
    std::vector<Component> comps_;
};

struct MonomialIdeal {
    int num_vars;
    std::vector<Exponent> generators;

    MonomialIdeal(int r, std::vector<Exponent> gens);  // drops non-minimal generators
    bool contains(const Exponent& m) const;
};

GradedSpan span_from_generators(const std::vector<Form>& gens, int num_vars, int d_min, int d_max);
GradedSpan span_from_monomials(const MonomialIdeal& ideal, int d_min, int d_max);

long hilbert_function(const GradedSpan& span, int d);
std::vector<long> hilbert_function(const GradedSpan& span);  // over the window
long monomial_hilbert_function(const MonomialIdeal& ideal, int d);

// Lex-segment ideal with Hilbert function h in degrees 0..h.size()-1.
MonomialIdeal lex_segment_ideal(const HVector& h, int r);

Component colon_by_forms(const GradedSpan& span, const std::vector<Form>& fs, int d);
long min_generator_count(const GradedSpan& span, int d);
// Basis forms of [J]_d completing S_1 [J]_{d-1}; at d_min every basis form.
std::vector<Form> minimal_generators(const GradedSpan& span, int d);

struct PolynomialFit {
    bool determined = false;
    std::vector<Rational> coefficients;  // in t, lowest degree first
    int valid_from = 0;                   // first degree where data matches
    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    std::string to_string() const;
};
PolynomialFit hilbert_polynomial_fit(const std::vector<std::pair<int, long>>& values);

// Quotient dimensions of S / <V> in degrees deg V .. (deg V + steps); stops
// early (trailing entry 0) when the quotient vanishes and stop_at_zero is set.
// After the first step of maximal growth the remaining entries are filled in
// from the Macaulay representation instead of by elimination.
std::vector<long> truncation_quotient_dims(const Component& v, int steps, bool stop_at_zero = true);

enum class BaseLocusStatus { empty, zero_dimensional, positive_dimensional, undetermined };
std::string to_string(BaseLocusStatus s);

struct BaseLocusProfile {
    BaseLocusStatus status = BaseLocusStatus::undetermined;
    std::optional<int> dimension;
    std::optional<long> degree;
    std::optional<std::vector<Rational>> hilbert_polynomial;
    int truncation_degree = 0;
    std::vector<long> quotient_dims;  // from the truncation degree upward
};

int default_profile_window(int n, int r);
BaseLocusProfile base_locus_profile(const GradedSpan& span, int n, std::optional<int> window = std::nullopt);
BaseLocusProfile base_locus_profile(const Component& degree_n, std::optional<int> window = std::nullopt);

bool basepoint_free_check(const GradedSpan& span, int n);
bool basepoint_free_check(const Component& degree_n);

long socle_dimension(const GradedSpan& span, int d);

struct TailCheck {
    std::optional<char> failed_hypothesis;  // 'a', 'b' or 'c'
    std::string diagnostic;
    std::vector<long> tail;  // h(n), h(n+1), ... down to 0
    bool holds = false;
};
TailCheck binary_tail_check(const GradedSpan& span, int n);

}  // namespace hfg
