#include "skewsym/random.hpp"

#include <cmath>

namespace skewsym {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index + 0x632be59bd9b4e019ULL));
}

double Rng::uniform() {
    // 53 mantissa bits of the engine output; independent of any library
    // distribution implementation.
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
}

Complex Rng::complex_gaussian() {
    const double re = gaussian();
    const double im = gaussian();
    return {re, im};
}

ComplexMatrix ginibre_matrix(Index rows, Index cols, Rng& rng) {
    ComplexMatrix g(rows, cols);
    for (Index i = 0; i < rows; ++i) {
        for (Index j = 0; j < cols; ++j) {
            g(i, j) = rng.complex_gaussian();
        }
    }
    return g;
}

ComplexVector random_unit_vector(Index dim, Rng& rng) {
    ComplexVector v(dim);
    double norm2 = 0.0;
    do {
        for (Index i = 0; i < dim; ++i) {
            v(i) = rng.complex_gaussian();
        }
        norm2 = v.squaredNorm();
    } while (norm2 <= 0.0);
    return v / std::sqrt(norm2);
}

ComplexMatrix random_unitary(Index dim, Rng& rng) {
    const ComplexMatrix g = ginibre_matrix(dim, dim, rng);
    Eigen::HouseholderQR<ComplexMatrix> qr(g);
    ComplexMatrix q = qr.householderQ();
    const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double a = std::abs(d);
        q.col(j) *= (a > 0.0) ? d / a : Complex(1.0, 0.0);
    }
    return q;
}

}  // namespace skewsym
