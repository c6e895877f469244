#include "mrbla/linalg.hpp"

#include "mrbla/errors.hpp"

namespace mrbla {

namespace {

LinearSolveResult eliminate(Matrix M, const Vec* rhs) {
    const int rows = M.rows();
    const int cols = M.cols();
    Vec b = rhs ? *rhs : Vec{};

    std::vector<int> pivot_col; // pivot_col[r] for used rows, in order
    int next_row = 0;
    for (int c = 0; c < cols && next_row < rows; ++c) {
        int pr = -1;
        for (int r = next_row; r < rows; ++r) {
            if (M(r, c) != 0) {
                pr = r;
                break;
            }
        }
        if (pr < 0) continue;
        if (pr != next_row) {
            for (int j = 0; j < cols; ++j) std::swap(M(pr, j), M(next_row, j));
            if (rhs) std::swap(b[pr], b[next_row]);
        }
        const Rational inv = 1 / M(next_row, c);
        for (int j = c; j < cols; ++j) M(next_row, j) *= inv;
        if (rhs) b[next_row] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == next_row || M(r, c) == 0) continue;
            const Rational f = M(r, c);
            for (int j = c; j < cols; ++j) M(r, j) -= f * M(next_row, j);
            if (rhs) b[r] -= f * b[next_row];
        }
        pivot_col.push_back(c);
        ++next_row;
    }

    LinearSolveResult out;
    out.rank = static_cast<int>(pivot_col.size());
    out.nullity = cols - out.rank;

    std::vector<int> pivot_of_col(cols, -1);
    for (int r = 0; r < out.rank; ++r) pivot_of_col[pivot_col[r]] = r;

    for (int c = 0; c < cols; ++c) {
        if (pivot_of_col[c] >= 0) continue;
        Vec v(cols);
        v[c] = 1;
        for (int r = 0; r < out.rank; ++r) v[pivot_col[r]] = -M(r, c);
        out.nullspace_basis.push_back(std::move(v));
    }

    if (rhs) {
        bool consistent = true;
        for (int r = out.rank; r < rows; ++r) {
            if (b[r] != 0) {
                consistent = false;
                break;
            }
        }
        if (consistent) {
            Vec x(cols);
            for (int r = 0; r < out.rank; ++r) x[pivot_col[r]] = b[r];
            out.particular_solution = std::move(x);
        }
    }
    return out;
}

} // namespace

LinearSolveResult reduce(const Matrix& A) { return eliminate(A, nullptr); }

LinearSolveResult solve(const Matrix& A, const Vec& b) {
    if (static_cast<int>(b.size()) != A.rows()) {
        throw MalformedInputError("right-hand side length does not match row count");
    }
    return eliminate(A, &b);
}

} // namespace mrbla
