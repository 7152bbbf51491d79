#pragma once

#include "skewsym/conjugation.hpp"
#include "skewsym/duality.hpp"
#include "skewsym/numerics.hpp"
#include "skewsym/types.hpp"

#include <map>
#include <string>
#include <vector>

namespace skewsym {

/// Ready-made scenario: a conjugation together with generator families,
/// reference matrices, search evidence and an explanatory note where the
/// computation deserves one.
struct ExampleBundle {
    Conjugation conjugation;
    std::map<std::string, std::vector<ComplexMatrix>> families;
    std::map<std::string, ComplexMatrix> references;
    std::vector<RankOneCandidate> evidence;
    std::string note;
};

/// The two standard conjugations on C^3 (variant 1 reverses coordinates,
/// variant 2 swaps the first two) with their three-parameter skew templates
/// and the free-entry symmetric templates.
ExampleBundle c3_example(int variant);

/// The k-dimensional polynomial model space: flip conjugation (coefficient
/// reversal), truncated shift (nilpotent of index k), reproducing kernels.
struct ModelSpaceZk {
    int k = 2;
    Conjugation conjugation;
    ComplexMatrix shift;
};

ModelSpaceZk model_space(int k);

/// k_lambda with entries conj(lambda)^j and its conjugated partner.
struct KernelVector {
    Complex lambda;
    ComplexVector vector;
    ComplexVector tilde;
};

KernelVector kernel_vector(const ModelSpaceZk& ms, Complex lambda);

struct ModelPairingResiduals {
    /// |<A S^n k, S*^m k~> + <A S^m k, S*^n k~>|; vanishes for skew A.
    double antisymmetry = 0.0;
    /// |<A S^n k, S*^n k~>|, the equal-index case.
    double equal_index = 0.0;
};

/// Both kernel-vector pairing residuals at (lambda, n, m). Requires A to
/// pass the skew test first (NotSkew otherwise) and n, m < k.
ModelPairingResiduals model_identities_check(const ModelSpaceZk& ms,
                                             const ComplexMatrix& a, Complex lambda,
                                             int n, int m);

/// max over n, m of |a(n, k-1-m) + a(m, k-1-n)| with a(n, m) = <A e_n, e_m>.
/// Zero exactly on the flip-skew matrices (the n = m case is the vanishing
/// anti-diagonal). Entries are read through inner products, not raw
/// indices, to keep the convention explicit.
double antidiagonal_check(const ModelSpaceZk& ms, const ComplexMatrix& a);

/// Assembles [[A, B], [D, corner]] and returns its skew residual under the
/// doubled conjugation. The residual vanishes iff B and D are skew and
/// corner = -CA*C.
double block_skew_check(const Conjugation& c, const ComplexMatrix& a,
                        const ComplexMatrix& b, const ComplexMatrix& d,
                        const ComplexMatrix& corner);

/// Plain conjugation on C^2 with the rotation generator T = [[0,1],[-1,0]]:
/// the algebra it generates, that algebra's preannihilator, and the
/// rank-one content found inside it, with a note on why the search result
/// matters.
ExampleBundle nonreflexive_example();

}  // namespace skewsym
