#pragma once

#include "mrbla/rational.hpp"

#include <vector>

namespace mrbla {

using Vec = std::vector<Rational>;

bool is_zero(const Vec& v);
Vec& add_scaled(Vec& target, const Rational& c, const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rational& c, const Vec& v);

/// Dense matrix of exact rationals. Column j holds the image of the j-th
/// basis vector, so a Matrix doubles as a linear operator with
/// domain_dim = cols() and codomain_dim = rows().
class Matrix {
  public:
    Matrix() = default;
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols) {}

    static Matrix identity(int n);
    static Matrix zero(int rows, int cols) { return Matrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int r, int c) { return a_[static_cast<std::size_t>(r) * cols_ + c]; }
    const Rational& operator()(int r, int c) const { return a_[static_cast<std::size_t>(r) * cols_ + c]; }

    Vec apply(const Vec& x) const;
    Vec column(int c) const;
    Vec row(int r) const;

    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix operator-() const;
    Matrix scaled(const Rational& c) const;
    Matrix transposed() const;

    bool operator==(const Matrix& rhs) const = default;
    bool is_zero() const;

  private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<Rational> a_;
};

using LinearOperator = Matrix;

} // namespace mrbla
