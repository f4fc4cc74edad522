#include "biham/linalg.hpp"

#include <cassert>

namespace biham {

QMatrix QMatrix::identity(int n)
{
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

QMatrix QMatrix::transpose() const
{
    QMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

QMatrix QMatrix::operator*(const QMatrix& o) const
{
    assert(cols_ == o.rows_);
    QMatrix p(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < o.cols_; ++j) p.at(i, j) += aik * o.at(k, j);
        }
    return p;
}

QMatrix QMatrix::operator+(const QMatrix& o) const
{
    assert(rows_ == o.rows_ && cols_ == o.cols_);
    QMatrix s = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s.at(i, j) += o.at(i, j);
    return s;
}

QMatrix QMatrix::operator-() const
{
    QMatrix s = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s.at(i, j) = -s.at(i, j);
    return s;
}

QMatrix QMatrix::scaled(const Rational& c) const
{
    QMatrix s = *this;
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) s.at(i, j) *= c;
    return s;
}

bool QMatrix::is_skew() const
{
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i; j < cols_; ++j)
            if (at(i, j) != -at(j, i)) return false;
    return true;
}

namespace {

// Row echelon by exact Gaussian elimination. Returns pivot columns.
std::vector<int> echelon(QMatrix& m)
{
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, c) != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = m.at(r, c);
        for (int j = c; j < m.cols(); ++j) m.at(r, j) /= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            Rational f = m.at(i, c);
            for (int j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

int rank(QMatrix m)
{
    return static_cast<int>(echelon(m).size());
}

std::optional<std::vector<Rational>> solve_linear(const QMatrix& a, const std::vector<Rational>& b)
{
    assert(static_cast<int>(b.size()) == a.rows());
    QMatrix aug(a.rows(), a.cols() + 1);
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
        aug.at(i, a.cols()) = b[static_cast<std::size_t>(i)];
    }
    std::vector<int> pivots = echelon(aug);
    if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt; // 0 = 1 row
    std::vector<Rational> x(static_cast<std::size_t>(a.cols()), Rational(0));
    for (std::size_t r = 0; r < pivots.size(); ++r)
        x[static_cast<std::size_t>(pivots[r])] = aug.at(static_cast<int>(r), a.cols());
    return x;
}

std::vector<std::vector<Rational>> nullspace(const QMatrix& a)
{
    QMatrix m = a;
    std::vector<int> pivots = echelon(m);
    std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
    for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        std::vector<Rational> v(static_cast<std::size_t>(a.cols()), Rational(0));
        v[static_cast<std::size_t>(f)] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[static_cast<std::size_t>(pivots[r])] = -m.at(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace biham
