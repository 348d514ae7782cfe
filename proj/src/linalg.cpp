#include "admgraph/linalg.hpp"

#include <utility>

#include "admgraph/error.hpp"

namespace admgraph {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw Error(ErrorCode::OutOfRange, "matrix shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

Matrix solve(Matrix a, Matrix b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n) throw Error(ErrorCode::OutOfRange, "solve: shape mismatch");
    const std::size_t m = b.cols();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw Error(ErrorCode::SingularSystem, "singular linear system");
        if (pivot != col) {
            for (std::size_t c = 0; c < n; ++c) std::swap(a(pivot, c), a(col, c));
            for (std::size_t c = 0; c < m; ++c) std::swap(b(pivot, c), b(col, c));
        }
        const Rational inv = Rational(1) / a(col, col);
        for (std::size_t c = col; c < n; ++c) a(col, c) *= inv;
        for (std::size_t c = 0; c < m; ++c) b(col, c) *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            const Rational factor = a(r, col);
            for (std::size_t c = col; c < n; ++c) a(r, c) -= factor * a(col, c);
            for (std::size_t c = 0; c < m; ++c) b(r, c) -= factor * b(col, c);
        }
    }
    return b;
}

}  // namespace admgraph
