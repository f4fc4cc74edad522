#include "biham/pencil.hpp"

#include <cassert>
#include <random>

#include "biham/pfaffian.hpp"

namespace biham {

ConstantSkewPair::ConstantSkewPair(QMatrix a, QMatrix b) : dim(a.rows()), A(std::move(a)), B(std::move(b))
{
    if (A.rows() != A.cols() || B.rows() != B.cols() || A.rows() != B.rows())
        throw Error("pair members must be square matrices of equal size");
    if (!A.is_skew() || !B.is_skew()) throw Error("pair members must be skew-symmetric");
}

int corank_at(const ConstantSkewPair& pair, const Rational& mu, const Rational& nu)
{
    if (mu == 0 && nu == 0) throw Error("corank_at requires (mu, nu) != (0, 0)");
    QMatrix m = pair.A.scaled(mu) + pair.B.scaled(nu);
    return pair.dim - rank(std::move(m));
}

namespace {

GenericityCertificate certificate_from_matrices(const std::vector<std::vector<Rational>>& a,
                                                const std::vector<std::vector<Rational>>& b,
                                                std::vector<Rational> point)
{
    const int dim = static_cast<int>(a.size());
    if (dim % 2 == 0) throw Error("genericity certificate requires odd dimension");
    const int n = (dim - 1) / 2;

    GenericityCertificate cert;
    cert.point = std::move(point);

    for (int skip = 0; skip < dim; ++skip) {
        std::vector<int> keep;
        for (int k = 0; k < dim; ++k)
            if (k != skip) keep.push_back(k);
        std::vector<std::vector<UnivariatePolynomial>> m(keep.size(),
                                                         std::vector<UnivariatePolynomial>(keep.size()));
        for (std::size_t r = 0; r < keep.size(); ++r)
            for (std::size_t c = 0; c < keep.size(); ++c)
                m[r][c] = UnivariatePolynomial(std::vector<Rational>{
                    a[static_cast<std::size_t>(keep[r])][static_cast<std::size_t>(keep[c])],
                    b[static_cast<std::size_t>(keep[r])][static_cast<std::size_t>(keep[c])]});
        cert.deleted_pfaffians.push_back(pfaffian(m));
    }

    UnivariatePolynomial g;
    bool infinity_ok = false;
    for (const auto& p : cert.deleted_pfaffians) {
        g = gcd(g, p);
        if (p.coefficient(n) != 0) infinity_ok = true;
    }
    cert.gcd_finite = g; // already monic (or zero)
    cert.infinity_ok = infinity_ok;
    return cert;
}

std::vector<std::vector<Rational>> to_rows(const QMatrix& m)
{
    std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m.rows()),
                                            std::vector<Rational>(static_cast<std::size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m.at(i, j);
    return rows;
}

} // namespace

GenericityCertificate genericity_certificate(const ConstantSkewPair& pair)
{
    return certificate_from_matrices(to_rows(pair.A), to_rows(pair.B), {});
}

GenericityCertificate genericity_certificate(const Pencil& pencil, std::span<const Rational> point)
{
    if (static_cast<int>(point.size()) != pencil.chart().dim)
        throw Error("evaluation point dimension mismatch");
    auto a = pencil.P.evaluate(point);
    auto b = pencil.Q.evaluate(point);
    return certificate_from_matrices(a, b, std::vector<Rational>(point.begin(), point.end()));
}

std::optional<long> stratum_codim(long m, long dim)
{
    if (m < 0) throw Error("corank must be non-negative");
    if (m > dim || (m % 2) != (dim % 2)) return std::nullopt;
    return m * (m - 1) / 2;
}

QMatrix jk_canonical_A(int dim)
{
    assert(dim % 2 == 1);
    int n = (dim - 1) / 2;
    QMatrix a(dim, dim);
    for (int i = 0; i < n; ++i) {
        a.at(i, n + i) = 1;
        a.at(n + i, i) = -1;
    }
    return a;
}

QMatrix jk_canonical_B(int dim)
{
    assert(dim % 2 == 1);
    int n = (dim - 1) / 2;
    QMatrix b(dim, dim);
    for (int i = 0; i < n; ++i) {
        b.at(i, n + i + 1) = 1;
        b.at(n + i + 1, i) = -1;
    }
    return b;
}

namespace {

std::vector<Rational> matvec(const QMatrix& m, const std::vector<Rational>& v)
{
    std::vector<Rational> out(static_cast<std::size_t>(m.rows()), Rational(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0) out[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
    return out;
}

// Coefficient vectors of the lambda-polynomial kernel of A + lambda B,
// built from deleted Pfaffians: w_i(lambda) = (-1)^i Pf((A + lambda B)_i).
// For a corank-one pencil this spans Ker(A + lambda B) over Q(lambda).
std::vector<std::vector<Rational>> pfaffian_kernel_chain(const ConstantSkewPair& pair,
                                                         const GenericityCertificate& cert, int n)
{
    const int dim = pair.dim;
    std::vector<std::vector<Rational>> v(static_cast<std::size_t>(n) + 1,
                                         std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
    for (int i = 0; i < dim; ++i) {
        const UnivariatePolynomial& p = cert.deleted_pfaffians[static_cast<std::size_t>(i)];
        for (int k = 0; k <= n; ++k) {
            Rational c = p.coefficient(k);
            if (i % 2 == 1) c = -c;
            v[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] = c;
        }
    }
    return v;
}

} // namespace

CanonicalBasisChange jk_canonical_basis(const ConstantSkewPair& pair, std::uint64_t seed)
{
    const int dim = pair.dim;
    if (dim % 2 == 0) throw Error("canonical basis requires odd dimension");
    const int n = (dim - 1) / 2;

    GenericityCertificate cert = genericity_certificate(pair);
    if (!cert.generic())
        throw NotGenericError("pair is not generic: " +
                              (cert.infinity_ok ? "deleted Pfaffians share the root locus " +
                                                      cert.degenerate_locus().to_string()
                                                : std::string("the pencil degenerates at infinity")));

    // Kernel chain u_0..u_n: u_k = (-1)^k v_k where sum v_k lambda^k spans
    // Ker(A + lambda B). The relations A u_0 = 0, B u_{k-1} = A u_k and
    // B u_n = 0 hold automatically.
    auto v = pfaffian_kernel_chain(pair, cert, n);
    std::vector<std::vector<Rational>> u(v.size());
    for (int k = 0; k <= n; ++k) {
        u[static_cast<std::size_t>(k)] = v[static_cast<std::size_t>(k)];
        if (k % 2 == 1)
            for (auto& c : u[static_cast<std::size_t>(k)]) c = -c;
    }

    // Pairing rows against the chain.
    std::vector<std::vector<Rational>> a_rows(u.size()), b_rows(u.size());
    for (std::size_t k = 0; k < u.size(); ++k) {
        a_rows[k] = matvec(pair.A, u[k]);
        b_rows[k] = matvec(pair.B, u[k]);
    }

    const QMatrix canon_a = jk_canonical_A(dim);
    const QMatrix canon_b = jk_canonical_B(dim);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<int> small(-4, 4);

    const int max_attempts = 16;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // Dual vectors f_0..f_{n-1}: each solves the pairing conditions
        // against the chain and annihilates the previously chosen duals.
        std::vector<std::vector<Rational>> f;
        bool failed = false;
        for (int i0 = 0; i0 < n && !failed; ++i0) {
            std::vector<std::vector<Rational>> rows;
            std::vector<Rational> rhs;
            for (int k = 0; k <= n; ++k) {
                rows.push_back(a_rows[static_cast<std::size_t>(k)]);
                rhs.push_back(k == n - i0 ? Rational(1) : Rational(0));
            }
            for (int k = 0; k <= n; ++k) {
                rows.push_back(b_rows[static_cast<std::size_t>(k)]);
                rhs.push_back(k == n - 1 - i0 ? Rational(1) : Rational(0));
            }
            for (const auto& fj : f) {
                rows.push_back(matvec(pair.A, fj));
                rhs.push_back(Rational(0));
                rows.push_back(matvec(pair.B, fj));
                rhs.push_back(Rational(0));
            }
            QMatrix system(static_cast<int>(rows.size()), dim);
            for (std::size_t r = 0; r < rows.size(); ++r)
                for (int c = 0; c < dim; ++c) system.at(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
            auto sol = solve_linear(system, rhs);
            if (!sol) {
                failed = true;
                break;
            }
            if (attempt > 0) {
                // Explore the solution space when the first pick fails.
                auto basis = nullspace(system);
                for (const auto& nv : basis) {
                    int c = small(rng);
                    if (c == 0) continue;
                    for (int j = 0; j < dim; ++j)
                        (*sol)[static_cast<std::size_t>(j)] += Rational(c) * nv[static_cast<std::size_t>(j)];
                }
            }
            f.push_back(std::move(*sol));
        }
        if (failed) continue;

        QMatrix t(dim, dim);
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < dim; ++r) t.at(r, c) = f[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
        for (int k = 0; k <= n; ++k) {
            int c = n + (n - k); // u_n, u_{n-1}, ..., u_0
            for (int r = 0; r < dim; ++r) t.at(r, c) = u[static_cast<std::size_t>(k)][static_cast<std::size_t>(r)];
        }

        QMatrix tt = t.transpose();
        if (tt * pair.A * t == canon_a && tt * pair.B * t == canon_b)
            return CanonicalBasisChange{dim, std::move(t)};
    }
    throw ConstructionError("canonical basis construction failed verification after " +
                            std::to_string(max_attempts) + " attempts");
}

} // namespace biham
