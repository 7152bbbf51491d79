#pragma once

#include "skewsym/conjugation.hpp"
#include "skewsym/numerics.hpp"
#include "skewsym/random.hpp"
#include "skewsym/types.hpp"

#include <cmath>

namespace skewsym::test {

/// <x, y> linear in the first argument, conjugate-linear in the second.
inline Complex inner(const ComplexVector& x, const ComplexVector& y) {
    return y.dot(x);
}

inline ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y) {
    return x * y.adjoint();  // (x (x) y) z = <z, y> x
}

inline ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
    ComplexMatrix m(2, 2);
    m << a, b, c, d;
    return m;
}

inline ComplexMatrix rotation_generator() { return mat2(0.0, 1.0, -1.0, 0.0); }

inline Conjugation plain_conjugation(Index n) {
    return Conjugation(ComplexMatrix::Identity(n, n));
}

inline Conjugation flip_conjugation(Index n) {
    ComplexMatrix j = ComplexMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) j(i, n - 1 - i) = 1.0;
    return Conjugation(j);
}

/// Random complex symmetric matrix.
inline ComplexMatrix random_symmetric(Index n, Rng& rng) {
    const ComplexMatrix g = ginibre_matrix(n, n, rng);
    return 0.5 * (g + g.transpose());
}

/// Random element of the skew class of c with Gaussian coefficients.
inline ComplexMatrix random_skew_element(const Conjugation& c, Rng& rng) {
    const Index n = c.dim();
    ComplexMatrix a = ComplexMatrix::Zero(n, n);
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            const Complex z = rng.complex_gaussian();
            a(i, j) += z;
            a(j, i) -= z;
        }
    }
    return c.kernel() * a;
}

}  // namespace skewsym::test
