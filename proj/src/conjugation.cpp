#include "skewsym/conjugation.hpp"

#include "skewsym/numerics.hpp"
#include "skewsym/random.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <utility>

namespace skewsym {

KernelResiduals kernel_residuals(const ComplexMatrix& kernel) {
    KernelResiduals r;
    r.symmetry = operator_norm(kernel - kernel.transpose());
    r.unitarity = operator_norm(kernel.adjoint() * kernel -
                                ComplexMatrix::Identity(kernel.rows(), kernel.cols()));
    return r;
}

Conjugation::Conjugation(ComplexMatrix kernel, double tol)
    : kernel_(std::move(kernel)), tol_(tol) {
    if (kernel_.rows() != kernel_.cols() || kernel_.rows() < 1) {
        throw NotSquare("Conjugation: kernel must be square and nonempty");
    }
    if (!kernel_.allFinite()) {
        throw NumericalFailure("Conjugation: kernel has non-finite entries");
    }
    const KernelResiduals r = kernel_residuals(kernel_);
    if (r.unitarity > tol_) {
        throw NotUnitary("Conjugation: kernel is not unitary");
    }
    if (r.symmetry > tol_) {
        throw NotSymmetric("Conjugation: kernel is not symmetric");
    }
}

ComplexVector Conjugation::apply(const ComplexVector& x) const {
    require_same_dim(dim(), x.size(), "Conjugation::apply");
    return kernel_ * x.conjugate();
}

ComplexMatrix conjugate_operator(const Conjugation& c, const ComplexMatrix& t,
                                 bool adjoint) {
    if (t.rows() != t.cols()) throw NotSquare("conjugate_operator: T must be square");
    require_same_dim(c.dim(), t.rows(), "conjugate_operator");
    const ComplexMatrix& k = c.kernel();
    if (adjoint) {
        return k * t.transpose() * k.conjugate();
    }
    return k * t.conjugate() * k.conjugate();
}

SymmetryReport symmetry_class(const Conjugation& c, const ComplexMatrix& t, double tol) {
    const ComplexMatrix ctc = conjugate_operator(c, t, false);
    const ComplexMatrix t_adj = t.adjoint();
    SymmetryReport rep;
    rep.symmetric_residual = operator_norm(ctc - t_adj);
    rep.skew_residual = operator_norm(ctc + t_adj);
    const double cut = tol * operator_norm(t);
    const bool sym = rep.symmetric_residual <= cut;
    const bool skew = rep.skew_residual <= cut;
    if (sym && skew) {
        rep.label = OperatorClass::kZero;
    } else if (sym) {
        rep.label = OperatorClass::kSymmetric;
    } else if (skew) {
        rep.label = OperatorClass::kSkew;
    } else {
        rep.label = OperatorClass::kNeither;
    }
    return rep;
}

SplitParts split_parts(const Conjugation& c, const ComplexMatrix& t) {
    const ComplexMatrix ct_adj_c = conjugate_operator(c, t, true);
    return {0.5 * (t + ct_adj_c), 0.5 * (t - ct_adj_c)};
}

RealFormBasis real_form_basis(const Conjugation& c) {
    const Index n = c.dim();
    const RealMatrix p = c.kernel().real();
    const RealMatrix q = c.kernel().imag();
    // Realified involution (u, v) -> (Pu + Qv, Qu - Pv); its +1 eigenspace
    // is the fixed-point set of C and has real dimension n.
    RealMatrix phi(2 * n, 2 * n);
    phi.topLeftCorner(n, n) = p;
    phi.topRightCorner(n, n) = q;
    phi.bottomLeftCorner(n, n) = q;
    phi.bottomRightCorner(n, n) = -p;
    phi = 0.5 * (phi + phi.transpose()).eval();

    Eigen::SelfAdjointEigenSolver<RealMatrix> es(phi);
    if (es.info() != Eigen::Success) {
        throw NumericalFailure("real_form_basis: eigensolver did not converge");
    }
    const RealVector lam = es.eigenvalues();  // ascending, should be -1 and +1
    Index positive = 0;
    for (Index j = 0; j < 2 * n; ++j) {
        if (std::abs(std::abs(lam(j)) - 1.0) > 1e-6) {
            throw NumericalFailure("real_form_basis: spectrum is not +/-1");
        }
        if (lam(j) > 0.0) ++positive;
    }
    if (positive != n) {
        throw NumericalFailure("real_form_basis: fixed space has wrong dimension");
    }

    // Canonical basis: Gram-Schmidt over the projected standard axes. For
    // the plain conjugation this reproduces the standard basis exactly.
    const RealMatrix vplus = es.eigenvectors().rightCols(n);
    const RealMatrix proj = vplus * vplus.transpose();
    std::vector<RealVector> cols;
    cols.reserve(static_cast<std::size_t>(n));
    for (const double threshold : {1e-6, 1e-12}) {
        for (Index cand = 0; cand < 2 * n && static_cast<Index>(cols.size()) < n; ++cand) {
            RealVector v = proj.col(cand);
            for (int pass = 0; pass < 2; ++pass) {
                for (const RealVector& r : cols) v -= r.dot(v) * r;
            }
            const double nn = v.norm();
            if (nn > threshold) cols.push_back(v / nn);
        }
        if (static_cast<Index>(cols.size()) == n) break;
    }
    if (static_cast<Index>(cols.size()) != n) {
        throw NumericalFailure("real_form_basis: could not span the fixed space");
    }

    RealFormBasis basis;
    basis.columns = ComplexMatrix(n, n);
    for (Index j = 0; j < n; ++j) {
        const RealVector& w = cols[static_cast<std::size_t>(j)];
        basis.columns.col(j) = w.head(n) + Complex(0.0, 1.0) * w.tail(n);
    }
    return basis;
}

BlockDecomposition block_decompose(const Conjugation& c, const ComplexMatrix& t) {
    if (t.rows() != t.cols()) throw NotSquare("block_decompose: T must be square");
    require_same_dim(c.dim(), t.rows(), "block_decompose");
    BlockDecomposition out;
    out.frame = real_form_basis(c);
    const ComplexMatrix& r = out.frame.columns;
    // Coefficients of T on the fixed basis: T r_j = sum_k coeff(k, j) r_k.
    const ComplexMatrix coeff = r.adjoint() * t * r;
    out.w = coeff.real();
    out.y = coeff.imag();
    out.x = -coeff.imag();
    out.z = coeff.real();
    const auto opnorm_real = [](const RealMatrix& m) {
        return operator_norm(m.cast<Complex>());
    };
    out.residual_w = opnorm_real(out.w + out.w.transpose());
    out.residual_z = opnorm_real(out.z + out.z.transpose());
    out.residual_yx = opnorm_real(out.y - out.x.transpose());
    return out;
}

Conjugation block_conjugation(const Conjugation& c) {
    const Index n = c.dim();
    ComplexMatrix kernel = ComplexMatrix::Zero(2 * n, 2 * n);
    kernel.topRightCorner(n, n) = c.kernel();
    kernel.bottomLeftCorner(n, n) = c.kernel();
    return Conjugation(std::move(kernel), c.tol());
}

Conjugation random_conjugation(Index dim, std::uint64_t seed) {
    Rng rng(seed);
    const ComplexMatrix u = random_unitary(dim, rng);
    ComplexMatrix kernel = u * u.transpose();
    kernel = 0.5 * (kernel + kernel.transpose()).eval();
    return Conjugation(std::move(kernel), kConstructionTol);
}

}  // namespace skewsym
