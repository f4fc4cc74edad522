/*
 * tensor.hpp
 * ----------
 * Chart-level tensor calculus on exact rational-function fields: skew
 * bivectors, one/two/three-forms, vector fields, divergence, exterior
 * derivative, pencil Pfaffians and contraction with a volume form.
 */
#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "biham/chart.hpp"
#include "biham/rational.hpp"
#include "biham/univariate.hpp"

namespace biham {

// P^{ij} with i<j stored; P^{ji} = -P^{ij} and P^{ii} = 0 are implicit, so
// skewness holds by construction. Zero entries are not stored.
class SkewBivector {
public:
    SkewBivector() = default;
    explicit SkewBivector(Chart chart) : chart_(std::move(chart)) {}

    const Chart& chart() const { return chart_; }
    const std::map<std::pair<int, int>, RationalFunction>& upper_entries() const { return entries_; }

    // Any index pair; applies the sign convention.
    RationalFunction entry(int i, int j) const;
    void set_entry(int i, int j, RationalFunction value); // requires i < j

    bool is_zero() const { return entries_.empty(); }
    SkewBivector operator+(const SkewBivector& o) const;
    SkewBivector operator*(const RationalFunction& f) const;
    bool operator==(const SkewBivector& o) const = default;

    // Exact evaluation of all entries; dim x dim skew matrix.
    std::vector<std::vector<Rational>> evaluate(std::span<const Rational> point) const;

private:
    Chart chart_;
    std::map<std::pair<int, int>, RationalFunction> entries_;
};

struct OneForm {
    Chart chart;
    std::vector<RationalFunction> components;

    OneForm() = default;
    explicit OneForm(Chart c);
    bool is_zero() const;
    OneForm operator+(const OneForm& o) const;
    OneForm operator-() const;
    OneForm operator*(const RationalFunction& f) const;
    bool operator==(const OneForm& o) const = default;
};

struct VectorField {
    Chart chart;
    std::vector<RationalFunction> components;

    VectorField() = default;
    explicit VectorField(Chart c);
    bool is_zero() const;
    bool operator==(const VectorField& o) const = default;
};

// (i,j) with i<j stored; antisymmetric by construction.
class TwoForm {
public:
    TwoForm() = default;
    explicit TwoForm(Chart chart) : chart_(std::move(chart)) {}

    const Chart& chart() const { return chart_; }
    const std::map<std::pair<int, int>, RationalFunction>& upper_entries() const { return entries_; }
    RationalFunction entry(int i, int j) const;
    void set_entry(int i, int j, RationalFunction value);
    bool is_zero() const { return entries_.empty(); }
    TwoForm operator+(const TwoForm& o) const;
    bool operator==(const TwoForm& o) const = default;

private:
    Chart chart_;
    std::map<std::pair<int, int>, RationalFunction> entries_;
};

// (i,j,k) with i<j<k stored; fully antisymmetric by construction.
class Trivector {
public:
    Trivector() = default;
    explicit Trivector(Chart chart) : chart_(std::move(chart)) {}

    const Chart& chart() const { return chart_; }
    const std::map<std::tuple<int, int, int>, RationalFunction>& entries() const { return entries_; }
    RationalFunction entry(int i, int j, int k) const; // any permutation
    void set_entry(int i, int j, int k, RationalFunction value); // requires i<j<k
    bool is_zero() const { return entries_.empty(); }

private:
    Chart chart_;
    std::map<std::tuple<int, int, int>, RationalFunction> entries_;
};

// The pencil P + lambda Q of two bivectors on one chart.
struct Pencil {
    SkewBivector P;
    SkewBivector Q;

    Pencil() = default;
    Pencil(SkewBivector p, SkewBivector q);
    const Chart& chart() const { return P.chart(); }
};

// A volume form stored through its logarithmic derivative alpha, with
// density exp(integral of alpha) understood. An explicit density
// exp(rational_part) * prod q_k^{c_k} is attached when the restricted
// integrator succeeds; its logarithmic derivative always equals
// log_derivative exactly.
struct VolumeForm {
    struct ExplicitDensity {
        RationalFunction rational_part;
        std::vector<std::pair<Polynomial, Rational>> log_terms; // (factor, exponent)
        bool operator==(const ExplicitDensity&) const = default;
    };

    Chart chart;
    OneForm log_derivative;
    std::optional<ExplicitDensity> explicit_density;

    static VolumeForm coordinate_volume(const Chart& chart); // density 1
    // Exact logarithmic derivative of the explicit density.
    static OneForm density_log_derivative(const Chart& chart, const ExplicitDensity& d);
    bool operator==(const VolumeForm&) const = default;
};

// ---- operations ----------------------------------------------------------

// Component i of the returned field is sum_j d P^{ij} / d x^j.
VectorField divergence(const SkewBivector& p);

// (P alpha)^i = sum_j P^{ij} alpha_j.
VectorField apply(const SkewBivector& p, const OneForm& alpha);

// (d alpha)_{ij} = d_i alpha_j - d_j alpha_i.
TwoForm exterior_derivative(const OneForm& alpha);

// (a ^ b)_{ij} = a_i b_j - a_j b_i.
TwoForm wedge(const OneForm& a, const OneForm& b);

// Gradient one-form of a function.
OneForm gradient(const Chart& chart, const RationalFunction& f);

// The bivector P + lam Q on chart().extended(); the pencil parameter is the
// last coordinate of *extended_chart. Entries carry no lam denominators.
SkewBivector pencil_bivector(const Pencil& pencil, Chart* extended_chart);

// Coefficient list in the extension coordinate `lambda_var` of a rational
// function whose denominator does not involve it.
std::vector<RationalFunction> collect_lambda(const RationalFunction& f, int lambda_var);

// Pfaffian of the pencil with row/column i removed (0-based), as a
// polynomial in lambda with rational-function coefficients; degree <= n
// where dim = 2n+1. Unsigned, i.e. without the (-1)^i prefactor.
std::vector<RationalFunction> deleted_pfaffian(const Pencil& pencil, int i);

// Same, evaluated exactly at a point.
UnivariatePolynomial deleted_pfaffian_at(const Pencil& pencil, int i, std::span<const Rational> point);

// alpha(lambda) as a lambda-polynomial of one-forms. The represented form
// is density * sum_k coefficients[k] lambda^k; the density of the volume
// form is kept as a symbolic prefactor (recorded through its logarithmic
// derivative) because it need not be a rational function. Checks that
// consume this form account for the prefactor exactly.
struct LambdaOneForm {
    Chart chart;
    std::vector<OneForm> coefficients;       // index = power of lambda, trailing zeros trimmed
    OneForm density_log_derivative;          // zero when the density is constant

    int degree() const { return static_cast<int>(coefficients.size()) - 1; }
    OneForm at_lambda(const Rational& lambda0) const;
};

// Component i of coefficient k: (-1)^i * [lambda^k] Pf(pencil minus i)
// (0-based i; the sign convention makes dim-3 P = d/dx1 ^ d/dx2 with unit
// density contract to +dx3).
LambdaOneForm contract_with_volume(const Pencil& pencil, const VolumeForm& volume);

} // namespace biham
