#include "biham/poisson.hpp"

#include <cassert>

namespace biham {

RationalFunction bracket(const SkewBivector& p, const RationalFunction& f, const RationalFunction& g)
{
    RationalFunction out;
    for (auto& [ij, entry] : p.upper_entries()) {
        auto [i, j] = ij;
        // P^{ij}(d_i f d_j g - d_j f d_i g)
        out += entry * (f.derivative(i) * g.derivative(j) - f.derivative(j) * g.derivative(i));
    }
    return out;
}

VectorField hamiltonian_vf(const SkewBivector& p, const RationalFunction& h)
{
    OneForm dh = gradient(p.chart(), h);
    return apply(p, dh);
}

namespace {

// sum_l ( P^{li} d_l Q^{jk} + Q^{li} d_l P^{jk} ), one cyclic slot.
RationalFunction mixed_term(const SkewBivector& p, const SkewBivector& q, int i, int j, int k)
{
    RationalFunction out;
    int dim = p.chart().dim;
    for (int l = 0; l < dim; ++l) {
        RationalFunction pli = p.entry(l, i);
        RationalFunction qli = q.entry(l, i);
        if (pli.is_zero() && qli.is_zero()) continue;
        RationalFunction dq = q.entry(j, k).derivative(l);
        RationalFunction dp = p.entry(j, k).derivative(l);
        out += pli * dq + qli * dp;
    }
    return out;
}

} // namespace

Trivector schouten(const SkewBivector& p, const SkewBivector& q)
{
    assert(p.chart() == q.chart());
    const Chart& chart = p.chart();
    Trivector out(chart);
    for (int i = 0; i < chart.dim; ++i)
        for (int j = i + 1; j < chart.dim; ++j)
            for (int k = j + 1; k < chart.dim; ++k) {
                RationalFunction c = mixed_term(p, q, i, j, k) + mixed_term(p, q, j, k, i) +
                                     mixed_term(p, q, k, i, j);
                out.set_entry(i, j, k, std::move(c));
            }
    return out;
}

namespace {

std::optional<SchoutenWitness> first_nonzero(const Trivector& t)
{
    if (t.is_zero()) return std::nullopt;
    const auto& [ijk, value] = *t.entries().begin();
    auto [i, j, k] = ijk;
    return SchoutenWitness{i, j, k, value};
}

} // namespace

PoissonCheck is_poisson(const SkewBivector& p)
{
    Trivector t = schouten(p, p);
    PoissonCheck check;
    check.witness = first_nonzero(t);
    check.ok = !check.witness.has_value();
    return check;
}

CompatibilityCheck is_compatible(const SkewBivector& p, const SkewBivector& q)
{
    Trivector mixed = schouten(p, q);
    CompatibilityCheck check;
    check.witness = first_nonzero(mixed);
    check.ok = !check.witness.has_value();

    // Redundant route: P+Q is Poisson iff the mixed bracket vanishes
    // (given that P and Q are Poisson themselves).
    if (is_poisson(p).ok && is_poisson(q).ok) {
        bool via_sum = is_poisson(p + q).ok;
        if (via_sum != check.ok)
            throw Error("internal: compatibility routes disagree (mixed Schouten vs P+Q Jacobi)");
    }
    return check;
}

Trivector pencil_self_schouten(const Pencil& pencil)
{
    SkewBivector pl = pencil_bivector(pencil, nullptr);
    return schouten(pl, pl);
}

} // namespace biham
