#include "biham/models.hpp"

namespace biham {
namespace models {

namespace {

// Residue representative in 1..n.
int cyc(int k, int n)
{
    int r = ((k - 1) % n + n) % n + 1;
    return r;
}

} // namespace

Pencil volterra(int n)
{
    if (n < 3) throw Error("volterra lattice needs n >= 3");
    Chart chart = Chart::standard(n);

    auto x = [&](int i) { return Polynomial::variable(cyc(i, n) - 1); };

    SkewBivector p(chart), q(chart);
    // Entry table over 1-based (i, j), i < j; each matching delta family
    // adds its term.
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            Polynomial pe, qe;
            if (cyc(i + 1, n) == j) {
                pe += x(i) * x(j);
                qe += x(i) * x(j) * (x(i) + x(j));
            }
            if (i == cyc(j + 1, n)) {
                pe -= x(i) * x(j);
                qe -= x(i) * x(j) * (x(i) + x(j));
            }
            if (cyc(i + 2, n) == j) qe += x(i) * x(i + 1) * x(i + 2);
            if (cyc(i - 2, n) == j) qe -= x(i) * x(i - 1) * x(i - 2);
            if (!pe.is_zero()) p.set_entry(i - 1, j - 1, RationalFunction(std::move(pe)));
            if (!qe.is_zero()) q.set_entry(i - 1, j - 1, RationalFunction(std::move(qe)));
        }
    }
    return Pencil(std::move(p), std::move(q));
}

Pencil canonical_pair(int n)
{
    if (n < 1) throw Error("canonical pair needs n >= 1");
    Chart chart = Chart::standard(2 * n + 1);
    SkewBivector p(chart), q(chart);
    for (int i = 0; i < n; ++i) {
        p.set_entry(i, n + i, RationalFunction(1L));
        q.set_entry(i, n + i + 1, RationalFunction(1L));
    }
    return Pencil(std::move(p), std::move(q));
}

SkewBivector mutate_drop_term(const SkewBivector& q, int i, int j)
{
    if (q.entry(i, j).is_zero()) throw Error("entry is already zero");
    SkewBivector out = q;
    out.set_entry(i, j, RationalFunction());
    return out;
}

} // namespace models
} // namespace biham
