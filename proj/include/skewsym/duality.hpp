#pragma once

#include "skewsym/conjugation.hpp"
#include "skewsym/numerics.hpp"
#include "skewsym/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace skewsym {

/// Bilinear trace pairing tr(T * t). No conjugation on either side.
Complex trace_pair(const ComplexMatrix& t_op, const ComplexMatrix& t_tr);

enum class StructuredKind { kSymmetric, kSkew };

/// Orthonormal basis of the symmetric (dim n(n+1)/2) or skew (dim n(n-1)/2)
/// class of the conjugation: K * (E_ij + E_ji), K * E_ii, respectively
/// K * (E_ij - E_ji). T belongs to the skew class exactly when conj(K) * T
/// is antisymmetric, so these generators span it.
SubspaceBasis structured_basis(const Conjugation& c, StructuredKind kind);

/// Orthonormal basis of { t : tr(S t) = 0 for all S in the subspace }.
/// The pairing is bilinear, so this is the null space of the plain (not
/// conjugated) vectorized pairing matrix. Dimension is n^2 - subspace_dim.
SubspaceBasis preannihilator(const SubspaceBasis& basis, double tol = kConstructionTol);

/// Rank-one annihilator h (x) Ch of the skew class (rank = 1, g ignored),
/// or the rank-two element h (x) g + Cg (x) Ch (rank = 2, g required).
ComplexMatrix annihilator_element(const Conjugation& c, const ComplexVector& h,
                                  const std::optional<ComplexVector>& g, int rank);

enum class AlphaMethod { kClosedForm, kSampled };

/// Supremum of |tr(T t)| over unit trace-norm rank <= k elements t of the
/// skew class preannihilator, with a witness achieving it.
struct AlphaReport {
    int k = 1;
    double value = 0.0;
    ComplexVector witness_h;
    ComplexVector witness_g;  // only for k = 2
    AlphaMethod method = AlphaMethod::kClosedForm;
};

/// Closed forms: k = 1 is the top Takagi value of the symmetrized
/// conj(K) * T (the rank-one family is h (x) Ch and tr(T (h (x) Ch)) is the
/// quadratic form h^T conj(K) T h); k = 2 is ||T + CT*C|| / 2 with the top
/// singular pair of T* + CTC as witness. The sampled method climbs with
/// seeded restarts and evaluates through the trace pairing only, so it
/// lower-bounds and cross-checks the closed forms.
AlphaReport alpha(const Conjugation& c, const ComplexMatrix& t, int k,
                  AlphaMethod method = AlphaMethod::kClosedForm, std::uint64_t seed = 0,
                  int samples = 512);

struct DistanceReport {
    double dist = 0.0;
    ComplexMatrix nearest;        // skew part of T, attains the distance
    double certificate_gap = 0.0;  // dist - alpha_2; zero when the duality is tight
};

/// Operator-norm distance from T to the skew class: ||T + CT*C|| / 2,
/// attained by the skew part of T.
DistanceReport distance_to_skew(const Conjugation& c, const ComplexMatrix& t);

struct HyperreflexivityRatios {
    double ratio1 = 1.0;  // dist / alpha_1
    double ratio2 = 1.0;  // dist / alpha_2
    bool degenerate = false;  // T was already skew to tolerance; ratios fixed at 1
};

HyperreflexivityRatios hyperreflexivity_ratios(const Conjugation& c,
                                               const ComplexMatrix& t);

enum class ReflexivityVerdict { kReflexive, kNotCertified };

struct ReflexivityReport {
    int k = 1;
    Index preannihilator_dim = 0;
    Index rank_k_span_dim = 0;
    ReflexivityVerdict verdict = ReflexivityVerdict::kNotCertified;
    std::vector<RankOneCandidate> evidence;
};

/// Checks whether rank <= k elements of the preannihilator span it. With a
/// conjugation supplied the exact annihilator families over seeded random
/// vectors are used (each element is verified to annihilate the subspace
/// before it counts); otherwise rank_one_search provides the evidence. A
/// kNotCertified verdict is a search failure, never a proof.
ReflexivityReport reflexivity_check(const SubspaceBasis& basis, int k,
                                    const std::optional<Conjugation>& c, int trials,
                                    std::uint64_t seed);

/// Orthonormal basis of span{I, T, T^2, ...} (the unital algebra generated
/// by T; in finite dimension the span of the first n^2 powers). Powers are
/// taken of T scaled to unit operator norm so they cannot overflow.
SubspaceBasis algebra_generated(const ComplexMatrix& t, double tol = kConstructionTol);

}  // namespace skewsym
