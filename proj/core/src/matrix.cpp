#include "mrbla/matrix.hpp"

#include "mrbla/errors.hpp"

namespace mrbla {

bool is_zero(const Vec& v) {
    for (const auto& x : v) {
        if (x != 0) return false;
    }
    return true;
}

Vec& add_scaled(Vec& target, const Rational& c, const Vec& v) {
    for (std::size_t i = 0; i < target.size(); ++i) target[i] += c * v[i];
    return target;
}

Vec operator+(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
    return out;
}

Vec operator-(const Vec& a, const Vec& b) {
    Vec out(a);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
    return out;
}

Vec operator*(const Rational& c, const Vec& v) {
    Vec out(v);
    for (auto& x : out) x *= c;
    return out;
}

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Vec Matrix::apply(const Vec& x) const {
    if (static_cast<int>(x.size()) != cols_) {
        throw MalformedInputError("matrix-vector shape mismatch");
    }
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i) {
        Rational acc = 0;
        for (int j = 0; j < cols_; ++j) {
            const Rational& m = (*this)(i, j);
            if (m != 0 && x[j] != 0) acc += m * x[j];
        }
        out[i] = acc;
    }
    return out;
}

Vec Matrix::column(int c) const {
    Vec out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, c);
    return out;
}

Vec Matrix::row(int r) const {
    Vec out(cols_);
    for (int j = 0; j < cols_; ++j) out[j] = (*this)(r, j);
    return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw MalformedInputError("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
        for (int k = 0; k < cols_; ++k) {
            const Rational& m = (*this)(i, k);
            if (m == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j) {
                if (rhs(k, j) != 0) out(i, j) += m * rhs(k, j);
            }
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw MalformedInputError("matrix sum shape mismatch");
    Matrix out(*this);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) += rhs(i, j);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw MalformedInputError("matrix difference shape mismatch");
    Matrix out(*this);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) -= rhs(i, j);
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) = -(*this)(i, j);
    return out;
}

Matrix Matrix::scaled(const Rational& c) const {
    Matrix out(*this);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(i, j) *= c;
    return out;
}

Matrix Matrix::transposed() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
}

bool Matrix::is_zero() const {
    for (const auto& x : a_) {
        if (x != 0) return false;
    }
    return true;
}

} // namespace mrbla
