#pragma once

#include <optional>
#include <vector>

#include "biham/rational.hpp"

namespace biham {

// Dense exact rational matrix, row-major.
class QMatrix {
public:
    QMatrix() = default;
    QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Rational(0)) {}
    static QMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

    QMatrix transpose() const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-() const;
    QMatrix scaled(const Rational& c) const;
    bool operator==(const QMatrix& o) const = default;

    bool is_skew() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

int rank(QMatrix m); // by value: eliminates in place

// One solution of A x = b when consistent (free variables set to zero).
std::optional<std::vector<Rational>> solve_linear(const QMatrix& a, const std::vector<Rational>& b);

// Basis of the right nullspace.
std::vector<std::vector<Rational>> nullspace(const QMatrix& a);

} // namespace biham
