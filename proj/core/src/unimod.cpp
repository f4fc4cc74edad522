#include "biham/unimod.hpp"

#include <algorithm>
#include <cassert>

namespace biham {

UnimodularSystem build_system(const SkewBivector& p, const SkewBivector& q)
{
    if (!(p.chart() == q.chart())) throw Error("system members must live on the same chart");
    const Chart& chart = p.chart();
    const int m = chart.dim;

    UnimodularSystem sys;
    sys.chart = chart;
    sys.matrix.assign(static_cast<std::size_t>(2 * m),
                      std::vector<RationalFunction>(static_cast<std::size_t>(m)));
    sys.rhs.assign(static_cast<std::size_t>(2 * m), RationalFunction());

    VectorField div_p = divergence(p);
    VectorField div_q = divergence(q);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            sys.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = p.entry(i, j);
            sys.matrix[static_cast<std::size_t>(m + i)][static_cast<std::size_t>(j)] = q.entry(i, j);
        }
        sys.rhs[static_cast<std::size_t>(i)] = -div_p.components[static_cast<std::size_t>(i)];
        sys.rhs[static_cast<std::size_t>(m + i)] = -div_q.components[static_cast<std::size_t>(i)];
    }
    return sys;
}

namespace {

// One row of the cleared system: polynomial coefficients plus polynomial rhs.
struct PolyRow {
    std::vector<Polynomial> coeff;
    Polynomial rhs;
    int original = -1; // equation index in the input system
};

Polynomial row_gcd(const PolyRow& row)
{
    Polynomial g;
    for (const Polynomial& p : row.coeff)
        if (!p.is_zero()) g = g.is_zero() ? p.primitive_part() : poly_gcd(g, p);
    if (!row.rhs.is_zero()) g = g.is_zero() ? row.rhs.primitive_part() : poly_gcd(g, row.rhs);
    return g;
}

// Multiply the equation by the lcm of its denominators, then strip the
// common polynomial factor. Row scaling by nonzero functions preserves the
// solution set.
PolyRow clear_row(const std::vector<RationalFunction>& coeff, const RationalFunction& rhs, int original)
{
    Polynomial common(1L);
    for (const RationalFunction& f : coeff)
        if (!f.is_zero()) common = poly_lcm(common, f.den());
    if (!rhs.is_zero()) common = poly_lcm(common, rhs.den());

    PolyRow row;
    row.original = original;
    row.coeff.reserve(coeff.size());
    for (const RationalFunction& f : coeff) {
        if (f.is_zero()) {
            row.coeff.emplace_back();
            continue;
        }
        row.coeff.push_back(f.num() * *Polynomial::divide_exact(common, f.den()));
    }
    row.rhs = rhs.is_zero() ? Polynomial() : rhs.num() * *Polynomial::divide_exact(common, rhs.den());

    Polynomial g = row_gcd(row);
    if (!g.is_zero() && !g.is_constant()) {
        for (Polynomial& p : row.coeff)
            if (!p.is_zero()) p = *Polynomial::divide_exact(p, g);
        if (!row.rhs.is_zero()) row.rhs = *Polynomial::divide_exact(row.rhs, g);
    }
    return row;
}

// Structural size used for pivot selection: fewest terms, then lowest degree.
std::pair<std::size_t, int> pivot_weight(const Polynomial& p)
{
    return {p.term_count(), p.total_degree()};
}

} // namespace

AlphaSolution solve_alpha(const UnimodularSystem& system)
{
    const int m = system.chart.dim;
    const int rows = 2 * m;

    std::vector<PolyRow> w;
    w.reserve(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i)
        w.push_back(clear_row(system.matrix[static_cast<std::size_t>(i)],
                              system.rhs[static_cast<std::size_t>(i)], i));

    // Column permutation: col_of[c] is the alpha component held in column c.
    std::vector<int> col_of(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) col_of[static_cast<std::size_t>(c)] = c;

    Polynomial prev(1L);
    int rank = 0;
    for (int k = 0; k < m; ++k) {
        // Pick the structurally simplest nonzero pivot in the remaining block.
        int best_i = -1, best_j = -1;
        std::pair<std::size_t, int> best_w{0, 0};
        for (int i = rank; i < rows; ++i)
            for (int j = k; j < m; ++j) {
                const Polynomial& e = w[static_cast<std::size_t>(i)].coeff[static_cast<std::size_t>(j)];
                if (e.is_zero()) continue;
                auto wt = pivot_weight(e);
                if (best_i < 0 || wt < best_w) {
                    best_i = i;
                    best_j = j;
                    best_w = wt;
                }
            }
        if (best_i < 0) break;
        std::swap(w[static_cast<std::size_t>(rank)], w[static_cast<std::size_t>(best_i)]);
        if (best_j != k) {
            for (auto& row : w)
                std::swap(row.coeff[static_cast<std::size_t>(k)], row.coeff[static_cast<std::size_t>(best_j)]);
            std::swap(col_of[static_cast<std::size_t>(k)], col_of[static_cast<std::size_t>(best_j)]);
        }

        const Polynomial pivot = w[static_cast<std::size_t>(rank)].coeff[static_cast<std::size_t>(k)];
        for (int i = rank + 1; i < rows; ++i) {
            PolyRow& row = w[static_cast<std::size_t>(i)];
            const Polynomial factor = row.coeff[static_cast<std::size_t>(k)];
            // Rows with nothing to eliminate are still rescaled by
            // pivot/prev, or later divisions stop being exact.
            for (int j = k + 1; j < m; ++j) {
                Polynomial t = pivot * row.coeff[static_cast<std::size_t>(j)] -
                               factor * w[static_cast<std::size_t>(rank)].coeff[static_cast<std::size_t>(j)];
                auto q = Polynomial::divide_exact(t, prev);
                assert(q && "Bareiss division must be exact");
                row.coeff[static_cast<std::size_t>(j)] = std::move(*q);
            }
            Polynomial t = pivot * row.rhs - factor * w[static_cast<std::size_t>(rank)].rhs;
            auto q = Polynomial::divide_exact(t, prev);
            assert(q && "Bareiss division must be exact");
            row.rhs = std::move(*q);
            row.coeff[static_cast<std::size_t>(k)] = Polynomial();
        }
        prev = pivot;
        ++rank;
    }

    AlphaSolution out;
    // A vanished row with a surviving right-hand side witnesses inconsistency.
    for (int i = rank; i < rows; ++i) {
        const PolyRow& row = w[static_cast<std::size_t>(i)];
        bool zero_row = std::all_of(row.coeff.begin(), row.coeff.end(),
                                    [](const Polynomial& p) { return p.is_zero(); });
        if (zero_row && !row.rhs.is_zero()) {
            out.status = AlphaSolution::Status::Inconsistent;
            out.witness_equation = row.original;
            out.witness_residue = RationalFunction(row.rhs);
            return out;
        }
    }
    if (rank < m) {
        out.status = AlphaSolution::Status::Underdetermined;
        out.free_column = col_of[static_cast<std::size_t>(rank)];
        return out;
    }

    // Back substitution over the function field.
    std::vector<RationalFunction> x(static_cast<std::size_t>(m));
    for (int r = m - 1; r >= 0; --r) {
        const PolyRow& row = w[static_cast<std::size_t>(r)];
        RationalFunction acc{row.rhs};
        for (int j = r + 1; j < m; ++j)
            acc -= RationalFunction(row.coeff[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(r)] = acc / RationalFunction(row.coeff[static_cast<std::size_t>(r)]);
    }
    OneForm alpha(system.chart);
    for (int c = 0; c < m; ++c)
        alpha.components[static_cast<std::size_t>(col_of[static_cast<std::size_t>(c)])] =
            x[static_cast<std::size_t>(c)];
    out.status = AlphaSolution::Status::Unique;
    out.alpha = std::move(alpha);
    return out;
}

ClosednessResult check_closed(const OneForm& alpha)
{
    TwoForm d = exterior_derivative(alpha);
    ClosednessResult res;
    if (d.is_zero()) {
        res.closed = true;
        return res;
    }
    const auto& [ij, value] = *d.upper_entries().begin();
    res.closed = false;
    res.i = ij.first;
    res.j = ij.second;
    res.witness = value;
    return res;
}

// ------------------------------------------------------- volume integrator

namespace {

// Squarefree part via gcd with the partial derivatives.
Polynomial squarefree_part(const Polynomial& f)
{
    Polynomial g = f;
    for (int v = 0; v <= f.max_variable(); ++v) {
        if (f.degree_in(v) == 0) continue;
        g = poly_gcd(g, f.derivative(v));
        if (g.is_constant()) return f.primitive_part();
    }
    auto q = Polynomial::divide_exact(f, g);
    assert(q);
    return q->primitive_part();
}

// Pairwise-coprime (gcd-free) refinement of a factor list. Splitting a
// pair strictly lowers the combined degree, so the worklist drains.
std::vector<Polynomial> coprime_basis(std::vector<Polynomial> pending)
{
    std::vector<Polynomial> basis;
    while (!pending.empty()) {
        Polynomial f = pending.back().primitive_part();
        pending.pop_back();
        if (f.is_constant()) continue;
        bool absorbed = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Polynomial g = poly_gcd(f, basis[k]);
            if (g.is_constant()) continue;
            Polynomial bq = *Polynomial::divide_exact(basis[k], g);
            Polynomial fq = *Polynomial::divide_exact(f, g);
            basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(k));
            pending.push_back(g);
            if (!bq.is_constant()) pending.push_back(bq);
            if (!fq.is_constant()) pending.push_back(fq);
            absorbed = true;
            break;
        }
        if (!absorbed) basis.push_back(f);
    }
    // Largest leading monomial first, so coordinate factors list as x1, x2, ...
    std::sort(basis.begin(), basis.end(),
              [](const Polynomial& a, const Polynomial& b) { return b.terms() < a.terms(); });
    return basis;
}

int multiplicity_of(const Polynomial& den, const Polynomial& q)
{
    int count = 0;
    Polynomial rest = den;
    while (true) {
        auto quo = Polynomial::divide_exact(rest, q);
        if (!quo) return count;
        rest = std::move(*quo);
        ++count;
    }
}

std::vector<Monomial> monomials_up_to(const std::vector<int>& vars, int degree)
{
    std::vector<Monomial> out{Monomial{}};
    for (int v : vars) {
        std::vector<Monomial> next;
        for (const Monomial& m : out) {
            int room = degree - m.total_degree();
            for (int e = 0; e <= room; ++e)
                next.push_back(e == 0 ? m : m * Monomial::variable(v, e));
        }
        out = std::move(next);
    }
    return out;
}

} // namespace

VolumeForm reconstruct_volume(const OneForm& alpha)
{
    VolumeForm volume;
    volume.chart = alpha.chart;
    volume.log_derivative = alpha;

    if (alpha.is_zero()) {
        volume.explicit_density = VolumeForm::ExplicitDensity{RationalFunction(), {}};
        return volume;
    }

    // Candidate logarithmic factors: coprime squarefree refinement of the
    // component denominators.
    std::vector<Polynomial> raw;
    for (const RationalFunction& c : alpha.components)
        if (!c.is_zero() && !c.den().is_constant()) raw.push_back(squarefree_part(c.den()));
    std::vector<Polynomial> qs = coprime_basis(std::move(raw));

    // Denominator ansatz for the exact rational part: one power less than
    // the worst pole order of each factor.
    Polynomial s(1L);
    int s_degree = 0;
    for (const Polynomial& q : qs) {
        int worst = 0;
        for (const RationalFunction& c : alpha.components)
            if (!c.is_zero()) worst = std::max(worst, multiplicity_of(c.den(), q));
        for (int k = 1; k < worst; ++k) s *= q;
        s_degree += (worst - 1) * q.total_degree();
    }

    std::vector<int> vars;
    for (int v = 0; v < alpha.chart.dim; ++v) {
        bool used = false;
        for (const RationalFunction& c : alpha.components)
            if (c.num().degree_in(v) > 0 || c.den().degree_in(v) > 0) used = true;
        if (used) vars.push_back(v);
    }

    int worst_gap = 0;
    for (const RationalFunction& c : alpha.components)
        if (!c.is_zero()) worst_gap = std::max(worst_gap, c.num().total_degree() - c.den().total_degree());
    int degree_bound = 2 * s_degree + worst_gap + 2;

    std::vector<Monomial> basis = monomials_up_to(vars, degree_bound);
    if (basis.size() > 600) return volume; // ansatz too large; density stays implicit

    // Unknowns: one coefficient per numerator monomial, then one per log factor.
    const std::size_t n_unknowns = basis.size() + qs.size();

    Polynomial big(1L); // s^2 * prod q
    big = s * s;
    for (const Polynomial& q : qs) big *= q;

    // Rows keyed by (component, monomial).
    std::map<std::pair<int, Monomial>, std::vector<Rational>> rows;
    std::map<std::pair<int, Monomial>, Rational> rhs_rows;
    auto row_of = [&](int component, const Monomial& m) -> std::vector<Rational>& {
        auto [it, inserted] = rows.try_emplace({component, m},
                                               std::vector<Rational>(n_unknowns, Rational(0)));
        return it->second;
    };

    for (int j = 0; j < alpha.chart.dim; ++j) {
        const RationalFunction& aj = alpha.components[static_cast<std::size_t>(j)];
        // Left side: alpha_j * big, a polynomial by construction.
        if (!aj.is_zero()) {
            auto scaled = Polynomial::divide_exact(big, aj.den());
            if (!scaled) return volume; // denominator outside the factor basis
            Polynomial lhs = aj.num() * *scaled;
            for (auto& [m, c] : lhs.terms()) {
                row_of(j, m); // ensure the row exists
                rhs_rows[{j, m}] += c;
            }
        }
        // d_j of the rational part: (d_j(n) s - n d_j(s)) * prod q.
        Polynomial prodq(1L);
        for (const Polynomial& q : qs) prodq *= q;
        for (std::size_t t = 0; t < basis.size(); ++t) {
            Polynomial mu = Polynomial::term(basis[t], Rational(1));
            Polynomial contrib = (mu.derivative(j) * s - mu * s.derivative(j)) * prodq;
            for (auto& [m, c] : contrib.terms()) row_of(j, m)[t] += c;
        }
        // Log terms: c_q d_j(q) s^2 prod_{q' != q} q'.
        for (std::size_t l = 0; l < qs.size(); ++l) {
            Polynomial rest(1L);
            for (std::size_t l2 = 0; l2 < qs.size(); ++l2)
                if (l2 != l) rest *= qs[l2];
            Polynomial contrib = qs[l].derivative(j) * s * s * rest;
            for (auto& [m, c] : contrib.terms()) row_of(j, m)[basis.size() + l] += c;
        }
    }

    QMatrix system(static_cast<int>(rows.size()), static_cast<int>(n_unknowns));
    std::vector<Rational> rhs(rows.size(), Rational(0));
    int r = 0;
    for (auto& [key, row] : rows) {
        for (std::size_t c = 0; c < n_unknowns; ++c) system.at(r, static_cast<int>(c)) = row[c];
        auto it = rhs_rows.find(key);
        if (it != rhs_rows.end()) rhs[static_cast<std::size_t>(r)] = it->second;
        ++r;
    }
    auto sol = solve_linear(system, rhs);
    if (!sol) return volume;

    Polynomial numerator;
    for (std::size_t t = 0; t < basis.size(); ++t) numerator.add_term(basis[t], (*sol)[t]);
    VolumeForm::ExplicitDensity density;
    density.rational_part = RationalFunction(numerator, s);
    for (std::size_t l = 0; l < qs.size(); ++l) {
        Rational c = (*sol)[basis.size() + l];
        if (c != 0) density.log_terms.emplace_back(qs[l], c);
    }

    // Accept only when re-differentiation reproduces alpha exactly.
    OneForm check = VolumeForm::density_log_derivative(alpha.chart, density);
    if (check == alpha) volume.explicit_density = std::move(density);
    return volume;
}

// ------------------------------------------------------------ the verdict

std::string to_string(FlatnessVerdict v)
{
    switch (v) {
    case FlatnessVerdict::Flat: return "flat";
    case FlatnessVerdict::NotUnimodular: return "not_unimodular";
    case FlatnessVerdict::NotGeneric: return "not_generic";
    case FlatnessVerdict::NotCompatible: return "not_compatible";
    case FlatnessVerdict::NotPoisson: return "not_poisson";
    }
    return "unknown";
}

FlatnessReport flatness_verdict(const SkewBivector& p, const SkewBivector& q,
                                std::span<const Rational> point, const FlatnessOptions& options)
{
    FlatnessReport report;
    report.point.assign(point.begin(), point.end());

    report.poisson_p = is_poisson(p);
    if (!report.poisson_p.ok) {
        report.verdict = FlatnessVerdict::NotPoisson;
        report.notes.push_back("P fails the Jacobi identity");
        return report;
    }
    report.poisson_q = is_poisson(q);
    if (!report.poisson_q.ok) {
        report.verdict = FlatnessVerdict::NotPoisson;
        report.notes.push_back("Q fails the Jacobi identity");
        return report;
    }
    report.compatibility = is_compatible(p, q);
    if (!report.compatibility.ok) {
        report.verdict = FlatnessVerdict::NotCompatible;
        return report;
    }

    Pencil pencil(p, q);
    report.genericity = genericity_certificate(pencil, point);
    if (!report.genericity->generic()) {
        report.verdict = FlatnessVerdict::NotGeneric;
        return report;
    }

    UnimodularSystem system = build_system(p, q);
    if (options.debug_perturb_rhs >= 0) {
        if (options.debug_perturb_rhs >= static_cast<int>(system.rhs.size()))
            throw Error("perturbation index out of range");
        system.rhs[static_cast<std::size_t>(options.debug_perturb_rhs)] += RationalFunction(1L);
        report.notes.push_back("debug: rhs equation " + std::to_string(options.debug_perturb_rhs) +
                               " perturbed by 1");
    }

    AlphaSolution sol = solve_alpha(system);
    report.solution = sol;
    if (sol.status == AlphaSolution::Status::Inconsistent) {
        report.verdict = FlatnessVerdict::NotUnimodular;
        report.notes.push_back("no invariant volume form: system inconsistent at equation " +
                               std::to_string(sol.witness_equation));
        return report;
    }
    if (sol.status == AlphaSolution::Status::Underdetermined)
        throw Error("internal: system rank-deficient although the pencil is generic at the point");

    report.alpha = sol.alpha;
    report.closedness = check_closed(*sol.alpha);
    if (!report.closedness->closed) {
        report.verdict = FlatnessVerdict::NotUnimodular;
        report.notes.push_back("solution exists but is not closed");
        return report;
    }

    report.volume = reconstruct_volume(*sol.alpha);
    report.verdict = FlatnessVerdict::Flat;
    return report;
}

} // namespace biham
