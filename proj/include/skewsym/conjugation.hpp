#pragma once

#include "skewsym/types.hpp"

#include <cstdint>

namespace skewsym {

/// Antilinear isometric involution on C^n, stored through its kernel matrix:
/// the action is x -> K * conj(x) with K symmetric unitary. Construction
/// validates both kernel properties, which together force C^2 = I and
/// <Cx, Cy> = <y, x>.
class Conjugation {
  public:
    /// Throws NotSquare / NotSymmetric / NotUnitary when K fails validation
    /// at the given absolute tolerance.
    explicit Conjugation(ComplexMatrix kernel, double tol = kConstructionTol);

    Index dim() const { return kernel_.rows(); }
    const ComplexMatrix& kernel() const { return kernel_; }
    double tol() const { return tol_; }

    /// K * conj(x).
    ComplexVector apply(const ComplexVector& x) const;

  private:
    ComplexMatrix kernel_;
    double tol_;
};

/// Residuals of the two kernel conditions, used by validation reporting.
struct KernelResiduals {
    double symmetry = 0.0;   // ||K - K^T||
    double unitarity = 0.0;  // ||K^H K - I||
};
KernelResiduals kernel_residuals(const ComplexMatrix& kernel);

/// CTC (adjoint = false) or CT*C (adjoint = true) as a matrix. In kernel
/// form these are K conj(T) conj(K) and K T^T conj(K); both realizations are
/// exercised against the definitional action in the tests.
ComplexMatrix conjugate_operator(const Conjugation& c, const ComplexMatrix& t,
                                 bool adjoint);

enum class OperatorClass { kSymmetric, kSkew, kNeither, kZero };

struct SymmetryReport {
    OperatorClass label = OperatorClass::kNeither;
    double symmetric_residual = 0.0;  // ||CTC - T*||
    double skew_residual = 0.0;       // ||CTC + T*||
};

/// Classifies T against both defining identities at relative tolerance
/// tol * ||T||. The zero operator satisfies both and is labeled kZero.
SymmetryReport symmetry_class(const Conjugation& c, const ComplexMatrix& t,
                              double tol = kDefaultTol);

struct SplitParts {
    ComplexMatrix symmetric_part;  // (T + CT*C) / 2
    ComplexMatrix skew_part;       // (T - CT*C) / 2
};

/// Unique decomposition T = A + B with A conjugation-symmetric and B skew.
SplitParts split_parts(const Conjugation& c, const ComplexMatrix& t);

/// Orthonormal vectors fixed by C; they span the real form, every h splits
/// as h_R + i h_I with real coordinates in this basis, where
/// h_R = (I + C) h / 2 and h_I = (I - C) h / (2i).
struct RealFormBasis {
    ComplexMatrix columns;  // n x n unitary, column j is r_j with C r_j = r_j

    Index dim() const { return columns.rows(); }
};

RealFormBasis real_form_basis(const Conjugation& c);

/// Real-linear blocks of T between the real and imaginary copies of the
/// real form. T is skew precisely when W and Z are antisymmetric and Y is
/// the transpose of X; the three residuals report those conditions.
struct BlockDecomposition {
    RealMatrix w, x, y, z;
    double residual_w = 0.0;   // ||W + W^T||
    double residual_z = 0.0;   // ||Z + Z^T||
    double residual_yx = 0.0;  // ||Y - X^T||
    RealFormBasis frame;
};

BlockDecomposition block_decompose(const Conjugation& c, const ComplexMatrix& t);

/// Conjugation on C^(2n) with kernel [[0, K], [K, 0]]; acts as
/// (f, g) -> (Cg, Cf).
Conjugation block_conjugation(const Conjugation& c);

/// Deterministic sample: K = U U^T for a pseudo-Haar unitary U drawn from
/// the given seed.
Conjugation random_conjugation(Index dim, std::uint64_t seed);

}  // namespace skewsym
