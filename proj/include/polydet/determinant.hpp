#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polydet/errors.hpp"
#include "polydet/matrix.hpp"

namespace polydet {

namespace detail {

// Exact quotient in the entry domain: ring division for polynomials
// (guaranteed exact where Bareiss/condensation use it), field division
// for rational functions.
inline Polynomial quotient(const Polynomial& a, const Polynomial& b) {
    return Polynomial::exact_div(a, b);
}
inline RationalFunction quotient(const RationalFunction& a, const RationalFunction& b) {
    return a / b;
}

template <class T>
T one() {
    return T(Rational(1));
}

}  // namespace detail

// Cofactor expansion; oracle only, capped at size 6.
template <class T>
T det_laplace(const Matrix<T>& m) {
    if (!m.is_square()) throw OutOfBounds();
    if (m.rows() > 6) throw TooLarge();
    std::size_t n = m.rows();
    if (n == 1) return m.at(0, 0);
    T acc{};
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero()) continue;
        Matrix<T> sub(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t col = 0;
            for (std::size_t jj = 0; jj < n; ++jj) {
                if (jj == j) continue;
                sub.at(i - 1, col++) = m.at(i, jj);
            }
        }
        T term = m.at(0, j) * det_laplace(sub);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Fraction-free elimination; every division is exact over the polynomial ring.
inline Polynomial det_bareiss(const PolyMatrix& mat) {
    if (!mat.is_square()) throw OutOfBounds();
    std::size_t n = mat.rows();
    PolyMatrix m = mat;
    Polynomial prev(Rational(1));
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return {};
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m.at(i, j) = Polynomial::exact_div(
                    m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j), prev);
        prev = m.at(k, k);
    }
    Polynomial det = m.at(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

// Elimination over the rational-function field, pivot = first nonzero entry.
inline RationalFunction det_field_gauss(const RatMatrix& mat) {
    if (!mat.is_square()) throw OutOfBounds();
    std::size_t n = mat.rows();
    RatMatrix m = mat;
    RationalFunction det = detail::one<RationalFunction>();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = k;
        while (pivot < n && m.at(pivot, k).is_zero()) ++pivot;
        if (pivot == n) return {};
        if (pivot != k) {
            for (std::size_t j = k; j < n; ++j) std::swap(m.at(pivot, j), m.at(k, j));
            det = -det;
        }
        det *= m.at(k, k);
        RationalFunction inv = m.at(k, k).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m.at(i, k).is_zero()) continue;
            RationalFunction factor = m.at(i, k) * inv;
            for (std::size_t j = k; j < n; ++j) m.at(i, j) -= factor * m.at(k, j);
        }
    }
    return det;
}

inline Polynomial det_elimination(const PolyMatrix& m) { return det_bareiss(m); }
inline RationalFunction det_elimination(const RatMatrix& m) { return det_field_gauss(m); }

template <class T>
struct DetResult {
    T value;
    bool fallback_used = false;
};

// Dodgson condensation via the Desnanot-Jacobi identity. Any zero interior
// minor forces a whole-matrix fallback to elimination; the fallback is
// recorded so callers can exercise both paths.
template <class T>
DetResult<T> det_condensation(const Matrix<T>& mat) {
    if (!mat.is_square()) throw OutOfBounds();
    std::size_t n = mat.rows();
    if (n == 1) return {mat.at(0, 0), false};
    // level[k][i][j] = det of the (k+1)x(k+1) contiguous minor at (i,j)
    Matrix<T> prev2(n, n);  // 0x0 minors, all 1
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) prev2.at(i, j) = detail::one<T>();
    Matrix<T> prev1 = mat;  // 1x1 minors
    for (std::size_t size = 2; size <= n; ++size) {
        std::size_t count = n - size + 1;
        Matrix<T> cur(count, count);
        for (std::size_t i = 0; i < count; ++i) {
            for (std::size_t j = 0; j < count; ++j) {
                const T& divisor = prev2.at(i + 1, j + 1);
                if (divisor.is_zero())
                    return {det_elimination(mat), true};
                cur.at(i, j) = detail::quotient(
                    prev1.at(i, j) * prev1.at(i + 1, j + 1) -
                        prev1.at(i + 1, j) * prev1.at(i, j + 1),
                    divisor);
            }
        }
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return {prev1.at(0, 0), false};
}

// Determinant of the k x k submatrix whose top-left corner sits at row i,
// column j (1-based, matching the A_k(i,j) convention).
struct MinorRef {
    std::size_t k;
    std::size_t i;
    std::size_t j;
};

template <class T>
T minor(const Matrix<T>& mat, const MinorRef& ref) {
    if (ref.i < 1 || ref.j < 1 || ref.i + ref.k > mat.rows() + 1 || ref.j + ref.k > mat.cols() + 1)
        throw OutOfBounds();
    if (ref.k == 0) return detail::one<T>();
    return det_elimination(mat.block(ref.i - 1, ref.j - 1, ref.k));
}

}  // namespace polydet
