#pragma once

#include "skewsym/types.hpp"

#include <cstdint>
#include <vector>

namespace skewsym {

struct MatrixNorms {
    double operator_norm = 0.0;  // largest singular value
    double trace_norm = 0.0;     // sum of singular values
};

/// Both norms from one singular value decomposition (backward-stable
/// bidiagonal divide-and-conquer, Jacobi fallback for small sizes).
MatrixNorms matrix_norms(const ComplexMatrix& m);

/// Shorthand for matrix_norms(m).operator_norm.
double operator_norm(const ComplexMatrix& m);

/// Factorization S = Q * diag(sigma) * Q^T of a complex symmetric matrix,
/// with Q unitary and sigma nonincreasing and nonnegative.
struct TakagiFactorization {
    ComplexMatrix q;
    RealVector sigma;
    double residual = 0.0;  // operator norm of S - Q diag(sigma) Q^T
};

/// Computes the factorization through the doubled real symmetric
/// eigenproblem of x -> S*conj(x): eigenvalues come in +/-sigma pairs and
/// the nonnegative half delivers the columns of Q. Degenerate clusters and
/// zero singular values need no special casing on this route.
///
/// Throws NotSymmetric when || S - S^T || > tol * max(1, ||S||); the
/// symmetric part (S + S^T)/2 is what gets factorized.
TakagiFactorization takagi(const ComplexMatrix& s, double tol = kDefaultTol);

enum class SupMethod { kTakagi, kSearch };

struct QuadFormSup {
    double value = 0.0;
    ComplexVector witness;
};

/// sup over ||h|| = 1 of |h^T S h| (S symmetrized internally).
///
/// kTakagi returns the top Takagi value with the matching extremal vector;
/// kSearch runs projected gradient ascent on the unit sphere with seeded
/// restarts and no factorization, so the two methods cross-check each other.
QuadFormSup quad_form_sup(const ComplexMatrix& s, SupMethod method,
                          std::uint64_t seed = 0, int restarts = 20);

/// Orthonormal (Frobenius) basis of the span of a family of equally sized
/// matrices. Numerical rank is cut at tol * (largest singular value of the
/// vectorized stack).
struct SubspaceBasis {
    Index rows = 0;
    Index cols = 0;
    std::vector<ComplexMatrix> elements;

    Index subspace_dim() const { return static_cast<Index>(elements.size()); }
};

SubspaceBasis orthonormalize(const std::vector<ComplexMatrix>& mats,
                             double tol = kConstructionTol);

/// Coefficients of m in an orthonormal basis (Frobenius projections).
ComplexVector subspace_coefficients(const SubspaceBasis& basis, const ComplexMatrix& m);

/// Norm of the component of m outside the subspace.
double projection_residual(const SubspaceBasis& basis, const ComplexMatrix& m);

struct RankOneCandidate {
    ComplexVector coefficients;  // in the searched basis, unit norm
    ComplexMatrix matrix;
    double ratio = 0.0;  // sigma_2 / sigma_1 of the assembled matrix
};

/// Searches the unit coefficient sphere of the subspace for elements whose
/// second singular value vanishes relative to the first. Each seeded restart
/// runs an alternating projection between the subspace and the rank-one set
/// (monotone in the top singular value); converged points with ratio <= tol
/// are kept, deduplicated up to scalar multiples, and sorted by ratio then
/// coefficients. An empty result is a search failure, not a certificate
/// that the subspace contains no rank-one element.
std::vector<RankOneCandidate> rank_one_search(const SubspaceBasis& basis,
                                              int restarts, std::uint64_t seed,
                                              double tol = 1e-8);

}  // namespace skewsym
