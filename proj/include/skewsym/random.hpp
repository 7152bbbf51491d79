#pragma once

#include "skewsym/types.hpp"

#include <cstdint>
#include <random>

namespace skewsym {

/// Derives an independent stream seed from (seed, index). Used so that
/// per-trial / per-restart RNG streams are reproducible no matter in which
/// order (or on which thread) the trials run.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Seeded generator producing platform-independent uniforms and normals.
/// Normals come from Box-Muller on raw engine bits, so the byte stream of
/// any computation depending on this class is a pure function of the seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, 1).
    double uniform();
    /// Standard normal.
    double gaussian();
    /// re + i*im with independent standard normal parts.
    Complex complex_gaussian();

    std::uint64_t raw() { return engine_(); }

  private:
    std::mt19937_64 engine_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

/// Matrix with i.i.d. complex_gaussian() entries (complex Ginibre ensemble).
ComplexMatrix ginibre_matrix(Index rows, Index cols, Rng& rng);

/// Unit vector drawn from the rotation-invariant distribution on the sphere.
ComplexVector random_unit_vector(Index dim, Rng& rng);

/// Pseudo-Haar random unitary: QR of a Ginibre matrix with the R-diagonal
/// phases absorbed into Q.
ComplexMatrix random_unitary(Index dim, Rng& rng);

}  // namespace skewsym
