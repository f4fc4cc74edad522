#include "biham/tensor.hpp"

#include <cassert>

#include "biham/pfaffian.hpp"

namespace biham {

// ------------------------------------------------------------ SkewBivector

RationalFunction SkewBivector::entry(int i, int j) const
{
    if (i == j) return RationalFunction();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = entries_.find({i, j});
    if (it == entries_.end()) return RationalFunction();
    return flip ? -it->second : it->second;
}

void SkewBivector::set_entry(int i, int j, RationalFunction value)
{
    if (!(0 <= i && i < j && j < chart_.dim))
        throw Error("bivector entry indices must satisfy 0 <= i < j < dim");
    if (value.is_zero())
        entries_.erase({i, j});
    else
        entries_.insert_or_assign({i, j}, std::move(value));
}

SkewBivector SkewBivector::operator+(const SkewBivector& o) const
{
    assert(chart_ == o.chart_);
    SkewBivector sum(chart_);
    for (auto& [ij, f] : entries_) sum.set_entry(ij.first, ij.second, f + o.entry(ij.first, ij.second));
    for (auto& [ij, f] : o.entries_)
        if (!entries_.contains(ij)) sum.set_entry(ij.first, ij.second, f);
    return sum;
}

SkewBivector SkewBivector::operator*(const RationalFunction& f) const
{
    SkewBivector out(chart_);
    for (auto& [ij, g] : entries_) out.set_entry(ij.first, ij.second, g * f);
    return out;
}

std::vector<std::vector<Rational>> SkewBivector::evaluate(std::span<const Rational> point) const
{
    int n = chart_.dim;
    std::vector<std::vector<Rational>> m(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n), Rational(0)));
    for (auto& [ij, f] : entries_) {
        Rational v = f.evaluate(point);
        m[static_cast<std::size_t>(ij.first)][static_cast<std::size_t>(ij.second)] = v;
        m[static_cast<std::size_t>(ij.second)][static_cast<std::size_t>(ij.first)] = -v;
    }
    return m;
}

// ------------------------------------------------------- OneForm / VectorField

OneForm::OneForm(Chart c) : chart(std::move(c))
{
    components.assign(static_cast<std::size_t>(chart.dim), RationalFunction());
}

bool OneForm::is_zero() const
{
    for (auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

OneForm OneForm::operator+(const OneForm& o) const
{
    assert(chart == o.chart);
    OneForm out(chart);
    for (std::size_t k = 0; k < components.size(); ++k)
        out.components[k] = components[k] + o.components[k];
    return out;
}

OneForm OneForm::operator-() const
{
    OneForm out(chart);
    for (std::size_t k = 0; k < components.size(); ++k) out.components[k] = -components[k];
    return out;
}

OneForm OneForm::operator*(const RationalFunction& f) const
{
    OneForm out(chart);
    for (std::size_t k = 0; k < components.size(); ++k) out.components[k] = components[k] * f;
    return out;
}

VectorField::VectorField(Chart c) : chart(std::move(c))
{
    components.assign(static_cast<std::size_t>(chart.dim), RationalFunction());
}

bool VectorField::is_zero() const
{
    for (auto& c : components)
        if (!c.is_zero()) return false;
    return true;
}

// ----------------------------------------------------------------- TwoForm

RationalFunction TwoForm::entry(int i, int j) const
{
    if (i == j) return RationalFunction();
    bool flip = i > j;
    if (flip) std::swap(i, j);
    auto it = entries_.find({i, j});
    if (it == entries_.end()) return RationalFunction();
    return flip ? -it->second : it->second;
}

void TwoForm::set_entry(int i, int j, RationalFunction value)
{
    if (!(0 <= i && i < j && j < chart_.dim))
        throw Error("two-form entry indices must satisfy 0 <= i < j < dim");
    if (value.is_zero())
        entries_.erase({i, j});
    else
        entries_.insert_or_assign({i, j}, std::move(value));
}

TwoForm TwoForm::operator+(const TwoForm& o) const
{
    assert(chart_ == o.chart_);
    TwoForm sum(chart_);
    for (int i = 0; i < chart_.dim; ++i)
        for (int j = i + 1; j < chart_.dim; ++j) sum.set_entry(i, j, entry(i, j) + o.entry(i, j));
    return sum;
}

// --------------------------------------------------------------- Trivector

RationalFunction Trivector::entry(int i, int j, int k) const
{
    if (i == j || j == k || i == k) return RationalFunction();
    // Sort and track the permutation sign.
    int sign = 1;
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    if (j > k) {
        std::swap(j, k);
        sign = -sign;
    }
    if (i > j) {
        std::swap(i, j);
        sign = -sign;
    }
    auto it = entries_.find({i, j, k});
    if (it == entries_.end()) return RationalFunction();
    return sign > 0 ? it->second : -it->second;
}

void Trivector::set_entry(int i, int j, int k, RationalFunction value)
{
    if (!(0 <= i && i < j && j < k && k < chart_.dim))
        throw Error("trivector entry indices must satisfy 0 <= i < j < k < dim");
    if (value.is_zero())
        entries_.erase({i, j, k});
    else
        entries_.insert_or_assign({i, j, k}, std::move(value));
}

// ------------------------------------------------------------------ Pencil

Pencil::Pencil(SkewBivector p, SkewBivector q) : P(std::move(p)), Q(std::move(q))
{
    if (!(P.chart() == Q.chart())) throw Error("pencil members must live on the same chart");
}

// -------------------------------------------------------------- VolumeForm

VolumeForm VolumeForm::coordinate_volume(const Chart& chart)
{
    VolumeForm v;
    v.chart = chart;
    v.log_derivative = OneForm(chart);
    ExplicitDensity d;
    d.rational_part = RationalFunction();
    v.explicit_density = std::move(d);
    return v;
}

OneForm VolumeForm::density_log_derivative(const Chart& chart, const ExplicitDensity& d)
{
    // d log(exp(r) prod q^c) = dr + sum c dq/q.
    OneForm out(chart);
    for (int i = 0; i < chart.dim; ++i) {
        RationalFunction comp = d.rational_part.derivative(i);
        for (auto& [q, c] : d.log_terms) {
            RationalFunction qf{q};
            comp += RationalFunction(c) * RationalFunction(q.derivative(i)) / qf;
        }
        out.components[static_cast<std::size_t>(i)] = comp;
    }
    return out;
}

// -------------------------------------------------------------- operations

VectorField divergence(const SkewBivector& p)
{
    VectorField out(p.chart());
    for (auto& [ij, f] : p.upper_entries()) {
        auto [i, j] = ij;
        // d_j P^{ij} lands in component i; d_i P^{ji} = -d_i P^{ij} in j.
        out.components[static_cast<std::size_t>(i)] += f.derivative(j);
        out.components[static_cast<std::size_t>(j)] -= f.derivative(i);
    }
    return out;
}

VectorField apply(const SkewBivector& p, const OneForm& alpha)
{
    assert(p.chart() == alpha.chart);
    VectorField out(p.chart());
    for (auto& [ij, f] : p.upper_entries()) {
        auto [i, j] = ij;
        out.components[static_cast<std::size_t>(i)] += f * alpha.components[static_cast<std::size_t>(j)];
        out.components[static_cast<std::size_t>(j)] -= f * alpha.components[static_cast<std::size_t>(i)];
    }
    return out;
}

TwoForm exterior_derivative(const OneForm& alpha)
{
    TwoForm out(alpha.chart);
    for (int i = 0; i < alpha.chart.dim; ++i)
        for (int j = i + 1; j < alpha.chart.dim; ++j)
            out.set_entry(i, j,
                          alpha.components[static_cast<std::size_t>(j)].derivative(i) -
                              alpha.components[static_cast<std::size_t>(i)].derivative(j));
    return out;
}

TwoForm wedge(const OneForm& a, const OneForm& b)
{
    assert(a.chart == b.chart);
    TwoForm out(a.chart);
    for (int i = 0; i < a.chart.dim; ++i)
        for (int j = i + 1; j < a.chart.dim; ++j)
            out.set_entry(i, j,
                          a.components[static_cast<std::size_t>(i)] * b.components[static_cast<std::size_t>(j)] -
                              a.components[static_cast<std::size_t>(j)] * b.components[static_cast<std::size_t>(i)]);
    return out;
}

OneForm gradient(const Chart& chart, const RationalFunction& f)
{
    OneForm out(chart);
    for (int i = 0; i < chart.dim; ++i) out.components[static_cast<std::size_t>(i)] = f.derivative(i);
    return out;
}

SkewBivector pencil_bivector(const Pencil& pencil, Chart* extended_chart)
{
    Chart ext = pencil.chart().extended();
    RationalFunction lam = RationalFunction::variable(ext.dim - 1);
    SkewBivector out(ext);
    for (int i = 0; i < pencil.chart().dim; ++i)
        for (int j = i + 1; j < pencil.chart().dim; ++j) {
            RationalFunction e = pencil.P.entry(i, j) + lam * pencil.Q.entry(i, j);
            if (!e.is_zero()) out.set_entry(i, j, std::move(e));
        }
    if (extended_chart) *extended_chart = std::move(ext);
    return out;
}

std::vector<RationalFunction> collect_lambda(const RationalFunction& f, int lambda_var)
{
    if (f.den().degree_in(lambda_var) > 0)
        throw Error("cannot collect: denominator involves the pencil parameter");
    int deg = f.num().degree_in(lambda_var);
    std::vector<RationalFunction> out;
    if (f.is_zero()) return out;
    for (int k = 0; k <= deg; ++k) {
        Polynomial coeff;
        for (auto& [m, c] : f.num().terms())
            if (m.exponent_of(lambda_var) == k) coeff.add_term(m.without_variable(lambda_var), c);
        out.emplace_back(std::move(coeff), f.den());
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

namespace {

// Matrix over the base indices 0..dim-1 minus `skip`; the extended
// pencil-parameter coordinate never contributes a row.
std::vector<std::vector<RationalFunction>> base_matrix_without(const SkewBivector& b, int base_dim,
                                                               int skip)
{
    std::vector<int> keep;
    for (int i = 0; i < base_dim; ++i)
        if (i != skip) keep.push_back(i);
    std::vector<std::vector<RationalFunction>> m(keep.size(),
                                                 std::vector<RationalFunction>(keep.size()));
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) m[r][c] = b.entry(keep[r], keep[c]);
    return m;
}

} // namespace

std::vector<RationalFunction> deleted_pfaffian(const Pencil& pencil, int i)
{
    Chart ext;
    SkewBivector pl = pencil_bivector(pencil, &ext);
    auto m = base_matrix_without(pl, pencil.chart().dim, i);
    RationalFunction pf = pfaffian(m);
    return collect_lambda(pf, ext.dim - 1);
}

UnivariatePolynomial deleted_pfaffian_at(const Pencil& pencil, int i, std::span<const Rational> point)
{
    auto a = pencil.P.evaluate(point);
    auto b = pencil.Q.evaluate(point);
    int n = pencil.chart().dim;
    std::vector<int> keep;
    for (int k = 0; k < n; ++k)
        if (k != i) keep.push_back(k);
    std::vector<std::vector<UnivariatePolynomial>> m(keep.size(),
                                                     std::vector<UnivariatePolynomial>(keep.size()));
    for (std::size_t r = 0; r < keep.size(); ++r)
        for (std::size_t c = 0; c < keep.size(); ++c) {
            auto& pa = a[static_cast<std::size_t>(keep[r])][static_cast<std::size_t>(keep[c])];
            auto& pb = b[static_cast<std::size_t>(keep[r])][static_cast<std::size_t>(keep[c])];
            m[r][c] = UnivariatePolynomial(std::vector<Rational>{pa, pb});
        }
    return pfaffian(m);
}

OneForm LambdaOneForm::at_lambda(const Rational& lambda0) const
{
    OneForm out(chart);
    RationalFunction power(1L);
    RationalFunction l0{lambda0};
    for (const OneForm& coeff : coefficients) {
        for (std::size_t i = 0; i < out.components.size(); ++i)
            out.components[i] += coeff.components[i] * power;
        power *= l0;
    }
    return out;
}

LambdaOneForm contract_with_volume(const Pencil& pencil, const VolumeForm& volume)
{
    const Chart& chart = pencil.chart();
    if (chart.dim % 2 == 0) throw Error("contraction requires an odd-dimensional chart");
    LambdaOneForm out;
    out.chart = chart;
    out.density_log_derivative = volume.log_derivative;
    int max_deg = -1;
    std::vector<std::vector<RationalFunction>> per_component(static_cast<std::size_t>(chart.dim));
    for (int i = 0; i < chart.dim; ++i) {
        auto coeffs = deleted_pfaffian(pencil, i);
        if (i % 2 == 1)
            for (auto& c : coeffs) c = -c;
        per_component[static_cast<std::size_t>(i)] = std::move(coeffs);
        max_deg = std::max(max_deg,
                           static_cast<int>(per_component[static_cast<std::size_t>(i)].size()) - 1);
    }
    for (int k = 0; k <= max_deg; ++k) {
        OneForm coeff(chart);
        for (int i = 0; i < chart.dim; ++i) {
            const auto& list = per_component[static_cast<std::size_t>(i)];
            if (k < static_cast<int>(list.size()))
                coeff.components[static_cast<std::size_t>(i)] = list[static_cast<std::size_t>(k)];
        }
        out.coefficients.push_back(std::move(coeff));
    }
    while (!out.coefficients.empty() && out.coefficients.back().is_zero()) out.coefficients.pop_back();
    return out;
}

} // namespace biham
