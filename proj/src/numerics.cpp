#include "skewsym/numerics.hpp"

#include "skewsym/random.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <limits>

namespace skewsym {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct SvdTriplet {
    ComplexMatrix u;
    RealVector sigma;
    ComplexMatrix v;
};

RealVector singular_values(const ComplexMatrix& m) {
    if (m.size() == 0) return RealVector(0);
    if (std::max(m.rows(), m.cols()) <= 48) {
        return Eigen::JacobiSVD<ComplexMatrix>(m).singularValues();
    }
    return Eigen::BDCSVD<ComplexMatrix>(m).singularValues();
}

SvdTriplet thin_svd(const ComplexMatrix& m) {
    if (std::max(m.rows(), m.cols()) <= 48) {
        Eigen::JacobiSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
    }
    Eigen::BDCSVD<ComplexMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

ComplexMatrix assemble(const SubspaceBasis& basis, const ComplexVector& c) {
    ComplexMatrix m = ComplexMatrix::Zero(basis.rows, basis.cols);
    for (Index i = 0; i < basis.subspace_dim(); ++i) {
        m += c(i) * basis.elements[static_cast<std::size_t>(i)];
    }
    return m;
}

Complex frobenius_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
    // <a, b>_F = tr(b^H a)
    return (b.conjugate().cwiseProduct(a)).sum();
}

/// Rotates the global phase so the largest coefficient is real positive;
/// candidates are only defined up to a scalar multiple.
void canonicalize_phase(RankOneCandidate& cand) {
    Index best = 0;
    double best_abs = 0.0;
    for (Index i = 0; i < cand.coefficients.size(); ++i) {
        const double a = std::abs(cand.coefficients(i));
        if (a > best_abs) {
            best_abs = a;
            best = i;
        }
    }
    if (best_abs <= 0.0) return;
    const Complex phase = cand.coefficients(best) / best_abs;
    cand.coefficients /= phase;
    cand.matrix /= phase;
}

bool coefficients_less(const ComplexVector& a, const ComplexVector& b) {
    for (Index i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a(i).real() != b(i).real()) return a(i).real() < b(i).real();
        if (a(i).imag() != b(i).imag()) return a(i).imag() < b(i).imag();
    }
    return a.size() < b.size();
}

}  // namespace

MatrixNorms matrix_norms(const ComplexMatrix& m) {
    MatrixNorms out;
    if (m.size() == 0) return out;
    const RealVector sv = singular_values(m);
    if (!sv.allFinite()) {
        throw NumericalFailure("matrix_norms: singular value decomposition failed");
    }
    out.operator_norm = sv.size() > 0 ? sv(0) : 0.0;
    out.trace_norm = sv.sum();
    return out;
}

double operator_norm(const ComplexMatrix& m) { return matrix_norms(m).operator_norm; }

TakagiFactorization takagi(const ComplexMatrix& s, double tol) {
    if (s.rows() != s.cols()) throw NotSquare("takagi: matrix must be square");
    const Index n = s.rows();
    const double scale = operator_norm(s);
    const double asym = operator_norm(s - s.transpose());
    if (asym > tol * std::max(1.0, scale)) {
        throw NotSymmetric("takagi: matrix is not complex symmetric");
    }
    const ComplexMatrix sym = 0.5 * (s + s.transpose());

    // Realification of x -> sym * conj(x). Its spectrum is {+sigma} u {-sigma}
    // and eigenvectors at +sigma realify the Takagi columns.
    const RealMatrix a = sym.real();
    const RealMatrix b = sym.imag();
    RealMatrix phi(2 * n, 2 * n);
    phi.topLeftCorner(n, n) = a;
    phi.topRightCorner(n, n) = b;
    phi.bottomLeftCorner(n, n) = b;
    phi.bottomRightCorner(n, n) = -a;
    phi = 0.5 * (phi + phi.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<RealMatrix> es(phi);
    if (es.info() != Eigen::Success) {
        throw NumericalFailure("takagi: eigensolver did not converge");
    }
    const RealVector lam = es.eigenvalues();  // ascending
    const double lam_max = std::max(std::abs(lam(0)), std::abs(lam(2 * n - 1)));
    const double zero_cut = 256.0 * kEps * lam_max;

    TakagiFactorization out;
    out.q = ComplexMatrix(n, n);
    out.sigma = RealVector::Zero(n);
    Index filled = 0;
    for (Index j = 2 * n - 1; j >= 0 && filled < n; --j) {
        if (lam(j) <= zero_cut) break;  // descending scan: rest is the zero cluster
        const RealVector w = es.eigenvectors().col(j);
        out.q.col(filled) = w.head(n) + Complex(0.0, 1.0) * w.tail(n);
        out.sigma(filled) = lam(j);
        ++filled;
    }
    if (filled < n) {
        // Orthonormal completion spans the zero singular cluster.
        if (filled == 0) {
            out.q = ComplexMatrix::Identity(n, n);
        } else {
            Eigen::JacobiSVD<ComplexMatrix> svd(out.q.leftCols(filled), Eigen::ComputeFullU);
            out.q.rightCols(n - filled) = svd.matrixU().rightCols(n - filled);
        }
    }

    out.residual =
        operator_norm(sym - out.q * out.sigma.asDiagonal() * out.q.transpose());
    const double unit_err =
        operator_norm(out.q.adjoint() * out.q - ComplexMatrix::Identity(n, n));
    if (unit_err > 1e-8 || out.residual > 1e-6 * std::max(1.0, scale)) {
        throw NumericalFailure("takagi: factorization residual out of bounds");
    }
    return out;
}

QuadFormSup quad_form_sup(const ComplexMatrix& s, SupMethod method, std::uint64_t seed,
                          int restarts) {
    if (s.rows() != s.cols()) throw NotSquare("quad_form_sup: matrix must be square");
    const Index n = s.rows();
    const ComplexMatrix sym = 0.5 * (s + s.transpose());

    if (method == SupMethod::kTakagi) {
        const TakagiFactorization tf = takagi(sym, 1.0);
        QuadFormSup out;
        out.value = tf.sigma.size() > 0 ? tf.sigma(0) : 0.0;
        out.witness = tf.q.col(0).conjugate();
        return out;
    }

    const double s_scale = sym.norm();
    QuadFormSup best;
    best.value = -1.0;
    restarts = std::max(restarts, 1);
    for (int r = 0; r < restarts; ++r) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
        ComplexVector h = random_unit_vector(n, rng);
        auto objective = [&](const ComplexVector& x) {
            const Complex g = x.transpose() * sym * x;
            return std::norm(g);
        };
        double phi = objective(h);
        double step = 1.0 / std::max(1.0, s_scale);
        for (int it = 0; it < 500; ++it) {
            const ComplexVector sh = sym * h;
            const Complex g = h.transpose() * sh;
            ComplexVector grad = 4.0 * g * sh.conjugate();
            grad -= h.dot(grad).real() * h;
            const double gnorm = grad.norm();
            if (gnorm <= 1e-10 * (1.0 + 2.0 * std::sqrt(phi))) break;

            bool advanced = false;
            double t = step;
            for (int halve = 0; halve < 50; ++halve) {
                ComplexVector cand = h + t * grad;
                cand /= cand.norm();
                const double cand_phi = objective(cand);
                if (cand_phi >= phi + 1e-4 * t * gnorm * gnorm) {
                    h = cand;
                    phi = cand_phi;
                    step = (halve == 0) ? t * 1.5 : t;
                    advanced = true;
                    break;
                }
                t *= 0.5;
            }
            if (!advanced) break;
        }
        const double value = std::sqrt(phi);
        if (value > best.value) {
            best.value = value;
            best.witness = h;
        }
    }
    if (best.value < 0.0) best.value = 0.0;
    return best;
}

SubspaceBasis orthonormalize(const std::vector<ComplexMatrix>& mats, double tol) {
    SubspaceBasis out;
    if (mats.empty()) return out;
    out.rows = mats.front().rows();
    out.cols = mats.front().cols();
    const Index vec_len = out.rows * out.cols;
    ComplexMatrix stack(vec_len, static_cast<Index>(mats.size()));
    for (std::size_t i = 0; i < mats.size(); ++i) {
        if (mats[i].rows() != out.rows || mats[i].cols() != out.cols) {
            throw DimensionMismatch("orthonormalize: matrices differ in shape");
        }
        stack.col(static_cast<Index>(i)) =
            Eigen::Map<const ComplexVector>(mats[i].data(), vec_len);
    }
    Eigen::BDCSVD<ComplexMatrix> svd(stack, Eigen::ComputeThinU);
    const RealVector sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return out;
    const double cut = tol * sv(0);
    Index rank = 0;
    while (rank < sv.size() && sv(rank) > cut) ++rank;
    out.elements.reserve(static_cast<std::size_t>(rank));
    for (Index j = 0; j < rank; ++j) {
        const ComplexVector col = svd.matrixU().col(j);
        out.elements.emplace_back(
            Eigen::Map<const ComplexMatrix>(col.data(), out.rows, out.cols));
    }
    return out;
}

ComplexVector subspace_coefficients(const SubspaceBasis& basis, const ComplexMatrix& m) {
    if (m.rows() != basis.rows || m.cols() != basis.cols) {
        throw DimensionMismatch("subspace_coefficients: shape mismatch");
    }
    ComplexVector c(basis.subspace_dim());
    for (Index i = 0; i < basis.subspace_dim(); ++i) {
        c(i) = frobenius_inner(m, basis.elements[static_cast<std::size_t>(i)]);
    }
    return c;
}

double projection_residual(const SubspaceBasis& basis, const ComplexMatrix& m) {
    const ComplexVector c = subspace_coefficients(basis, m);
    ComplexMatrix rec = ComplexMatrix::Zero(basis.rows, basis.cols);
    for (Index i = 0; i < basis.subspace_dim(); ++i) {
        rec += c(i) * basis.elements[static_cast<std::size_t>(i)];
    }
    return (m - rec).norm();
}

namespace {

struct SearchPoint {
    ComplexVector c;
    ComplexMatrix m;
    double sigma1 = 0.0;
    double sigma2 = 0.0;
};

SearchPoint evaluate_point(const SubspaceBasis& basis, const ComplexVector& c) {
    SearchPoint p;
    p.c = c;
    p.m = assemble(basis, c);
    const RealVector sv = singular_values(p.m);
    p.sigma1 = sv.size() > 0 ? sv(0) : 0.0;
    p.sigma2 = sv.size() > 1 ? sv(1) : 0.0;
    return p;
}

/// One alternating step: nearest rank-one to the current matrix, projected
/// back onto the subspace. Monotone in the top singular value.
bool alternating_step(const SubspaceBasis& basis, SearchPoint& p) {
    const SvdTriplet svd = thin_svd(p.m);
    const ComplexMatrix rank_one = svd.u.col(0) * svd.v.col(0).adjoint();
    ComplexVector next = subspace_coefficients(basis, rank_one);
    const double nn = next.norm();
    if (nn <= 1e-13) return false;
    p = evaluate_point(basis, next / nn);
    return true;
}

/// Damped Newton steps on sigma_2(c) = 0 along its gradient; quadratic once
/// near the rank-one variety. Reaches isolated variety points whose basins
/// the alternating ascent misses.
void newton_descent(const SubspaceBasis& basis, SearchPoint& p, int max_iters) {
    for (int it = 0; it < max_iters; ++it) {
        if (p.sigma1 <= 0.0 || p.sigma2 <= 1e-16 * p.sigma1) return;
        const SvdTriplet svd = thin_svd(p.m);
        if (svd.sigma.size() < 2) return;
        ComplexVector grad(basis.subspace_dim());
        for (Index i = 0; i < basis.subspace_dim(); ++i) {
            // d sigma_2 = Re(u_2^H dM v_2)
            grad(i) = std::conj(
                (svd.u.col(1).adjoint() * basis.elements[static_cast<std::size_t>(i)] *
                 svd.v.col(1))(0));
        }
        const double g2 = grad.squaredNorm();
        if (g2 <= 1e-24) return;
        bool moved = false;
        double step = 1.0;
        for (int halve = 0; halve < 30; ++halve) {
            ComplexVector next = p.c - step * (p.sigma2 / g2) * grad;
            next /= next.norm();
            const SearchPoint cand = evaluate_point(basis, next);
            if (cand.sigma2 < p.sigma2) {
                p = cand;
                moved = true;
                break;
            }
            step *= 0.5;
        }
        if (!moved) return;
    }
}

}  // namespace

std::vector<RankOneCandidate> rank_one_search(const SubspaceBasis& basis, int restarts,
                                              std::uint64_t seed, double tol) {
    std::vector<RankOneCandidate> found;
    const Index m = basis.subspace_dim();
    if (m == 0) return found;

    if (std::min(basis.rows, basis.cols) <= 1) {
        // Every element of the ambient space has rank <= 1.
        for (Index i = 0; i < m; ++i) {
            RankOneCandidate cand;
            cand.coefficients = ComplexVector::Unit(m, i);
            cand.matrix = basis.elements[static_cast<std::size_t>(i)];
            cand.ratio = 0.0;
            canonicalize_phase(cand);
            found.push_back(std::move(cand));
        }
        return found;
    }

    const auto offer = [&](const SearchPoint& p) {
        if (p.sigma1 <= 1e-13) return;
        const double ratio = p.sigma2 / p.sigma1;
        if (ratio > tol) return;
        RankOneCandidate cand{p.c, p.m, ratio};
        canonicalize_phase(cand);
        const ComplexVector vec_new =
            Eigen::Map<const ComplexVector>(cand.matrix.data(), cand.matrix.size())
                .normalized();
        for (const RankOneCandidate& prior : found) {
            const ComplexVector vec_old =
                Eigen::Map<const ComplexVector>(prior.matrix.data(), prior.matrix.size())
                    .normalized();
            if (std::abs(vec_old.dot(vec_new)) >= 1.0 - 1e-6) return;
        }
        found.push_back(std::move(cand));
    };

    restarts = std::max(restarts, 1);
    for (int r = 0; r < restarts; ++r) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(r)));
        const SearchPoint start = evaluate_point(basis, random_unit_vector(m, rng));

        // Alternating ascent converges to the dominant rank-one content.
        SearchPoint p = start;
        double prev = -1.0;
        for (int it = 0; it < 400; ++it) {
            if (!alternating_step(basis, p)) break;
            if (std::abs(p.sigma1 - prev) <= 1e-15 * std::max(1.0, p.sigma1)) break;
            prev = p.sigma1;
        }
        newton_descent(basis, p, 12);
        offer(p);

        // Direct descent from the same start covers variety points with
        // small ascent basins.
        SearchPoint q = start;
        newton_descent(basis, q, 200);
        offer(q);
    }

    std::sort(found.begin(), found.end(),
              [](const RankOneCandidate& a, const RankOneCandidate& b) {
                  if (a.ratio != b.ratio) return a.ratio < b.ratio;
                  return coefficients_less(a.coefficients, b.coefficients);
              });
    return found;
}

}  // namespace skewsym
