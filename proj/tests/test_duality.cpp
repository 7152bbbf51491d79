#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "helpers.hpp"
#include "skewsym/duality.hpp"
#include "skewsym/numerics.hpp"
#include "skewsym/random.hpp"

#include <algorithm>
#include <cmath>

using namespace skewsym;
using namespace skewsym::test;

TEST_CASE("trace_pair: identity, rank-one identity, bilinearity") {
    const ComplexMatrix eye = ComplexMatrix::Identity(2, 2);
    CHECK(std::abs(trace_pair(eye, eye) - Complex(2.0, 0.0)) <= 1e-15);

    for (int trial = 0; trial < 50; ++trial) {
        Rng rng(mix_seed(1000, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 7);
        const ComplexMatrix t = ginibre_matrix(n, n, rng);
        const ComplexVector x = random_unit_vector(n, rng);
        const ComplexVector y = random_unit_vector(n, rng);

        // tr(T (x (x) y)) = <Tx, y>
        CHECK(std::abs(trace_pair(t, rank_one(x, y)) - inner(t * x, y)) <= 1e-12 * t.norm());

        // Bilinearity in both slots.
        const ComplexMatrix u = ginibre_matrix(n, n, rng);
        const Complex lam = rng.complex_gaussian();
        CHECK(std::abs(trace_pair(lam * t + u, rank_one(x, y)) -
                       (lam * trace_pair(t, rank_one(x, y)) + trace_pair(u, rank_one(x, y)))) <=
              1e-11 * (t.norm() + u.norm()));
    }
}

TEST_CASE("skew operators annihilate the rank-one family") {
    for (int trial = 0; trial < 50; ++trial) {
        Rng rng(mix_seed(1100, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 7);
        const Conjugation c = random_conjugation(n, mix_seed(1101, trial));
        const ComplexMatrix t = random_skew_element(c, rng);
        const ComplexVector h = random_unit_vector(n, rng);
        CHECK(std::abs(trace_pair(t, rank_one(h, c.apply(h)))) <= 1e-12 * t.norm());
    }
}

TEST_CASE("structured_basis dimensions and membership") {
    const Conjugation plain2 = plain_conjugation(2);
    const SubspaceBasis skew2 = structured_basis(plain2, StructuredKind::kSkew);
    CHECK(skew2.subspace_dim() == 1);
    CHECK(projection_residual(skew2, rotation_generator()) <= 1e-12 * rotation_generator().norm());

    // Reversal conjugation on C^3: the displayed three-parameter family
    // spans the skew class.
    const Conjugation flip3 = flip_conjugation(3);
    const SubspaceBasis skew3 = structured_basis(flip3, StructuredKind::kSkew);
    CHECK(skew3.subspace_dim() == 3);
    ComplexMatrix fam(3, 3);
    fam << 1.0, 2.0, 0.0, 3.0, 0.0, -2.0, 0.0, -3.0, -1.0;
    CHECK(projection_residual(skew3, fam) <= 1e-12 * fam.norm());

    for (int trial = 0; trial < 30; ++trial) {
        Rng rng(mix_seed(1200, trial));
        const Index n = 1 + static_cast<Index>(rng.raw() % 8);
        const Conjugation c = random_conjugation(n, mix_seed(1201, trial));
        const SubspaceBasis skew = structured_basis(c, StructuredKind::kSkew);
        const SubspaceBasis sym = structured_basis(c, StructuredKind::kSymmetric);
        CHECK(skew.subspace_dim() == n * (n - 1) / 2);
        CHECK(sym.subspace_dim() == n * (n + 1) / 2);
        CHECK(skew.subspace_dim() + sym.subspace_dim() == n * n);
        for (const ComplexMatrix& e : skew.elements) {
            CHECK(symmetry_class(c, e).skew_residual <= 1e-10);
        }
        for (const ComplexMatrix& e : sym.elements) {
            CHECK(symmetry_class(c, e).symmetric_residual <= 1e-10);
        }
    }
}

TEST_CASE("preannihilator of the skew class is the conjugation-symmetric family") {
    const Conjugation plain2 = plain_conjugation(2);
    const SubspaceBasis pre = preannihilator(structured_basis(plain2, StructuredKind::kSkew));
    CHECK(pre.subspace_dim() == 3);
    // Complex symmetric matrices annihilate complex antisymmetric ones.
    CHECK(projection_residual(pre, ComplexMatrix::Identity(2, 2)) <= 1e-10);
    CHECK(projection_residual(pre, mat2(0.0, 1.0, 1.0, 0.0)) <= 1e-10);
    CHECK(projection_residual(pre, mat2(1.0, 0.0, 0.0, -1.0)) <= 1e-10);

    // Full matrix space annihilates only zero.
    std::vector<ComplexMatrix> all;
    for (Index i = 0; i < 2; ++i)
        for (Index j = 0; j < 2; ++j) {
            ComplexMatrix e = ComplexMatrix::Zero(2, 2);
            e(i, j) = 1.0;
            all.push_back(e);
        }
    CHECK(preannihilator(orthonormalize(all)).subspace_dim() == 0);

    for (int trial = 0; trial < 30; ++trial) {
        Rng rng(mix_seed(1300, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 9);
        const Conjugation c = random_conjugation(n, mix_seed(1301, trial));
        const SubspaceBasis skew = structured_basis(c, StructuredKind::kSkew);
        const SubspaceBasis pre_n = preannihilator(skew);
        CHECK(pre_n.subspace_dim() == n * (n + 1) / 2);

        // Pairing vanishes between the basis and its preannihilator.
        for (const ComplexMatrix& s : skew.elements) {
            for (const ComplexMatrix& t : pre_n.elements) {
                CHECK(std::abs(trace_pair(s, t)) <= 1e-12);
            }
        }

        // h (x) Ch lies inside.
        const ComplexVector h = random_unit_vector(n, rng);
        const ComplexMatrix elem = annihilator_element(c, h, std::nullopt, 1);
        CHECK(projection_residual(pre_n, elem) <= 1e-10 * std::max(1.0, elem.norm()));
    }
}

TEST_CASE("annihilator_element: closed forms, degeneracy, errors") {
    const Conjugation plain2 = plain_conjugation(2);
    ComplexVector e1(2);
    e1 << 1.0, 0.0;
    ComplexMatrix e11 = ComplexMatrix::Zero(2, 2);
    e11(0, 0) = 1.0;
    CHECK((annihilator_element(plain2, e1, std::nullopt, 1) - e11).norm() == 0.0);

    const Conjugation flip2 = flip_conjugation(2);
    CHECK((annihilator_element(flip2, e1, std::nullopt, 1) - mat2(0.0, 1.0, 0.0, 0.0))
              .norm() == 0.0);

    CHECK_THROWS_AS(annihilator_element(plain2, e1, std::nullopt, 2), MissingArgument);
    CHECK_THROWS_AS(annihilator_element(plain2, e1, std::nullopt, 3), InvalidK);

    for (int trial = 0; trial < 40; ++trial) {
        Rng rng(mix_seed(1400, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 7);
        const Conjugation c = random_conjugation(n, mix_seed(1401, trial));
        const ComplexVector h = random_unit_vector(n, rng);
        const ComplexVector g = random_unit_vector(n, rng);

        // With g = Ch the rank-two element degenerates to twice the rank-one.
        const ComplexMatrix degen = annihilator_element(c, h, c.apply(h), 2);
        const ComplexMatrix twice = 2.0 * annihilator_element(c, h, std::nullopt, 1);
        CHECK((degen - twice).norm() <= 1e-12);

        // Both families annihilate every structured skew generator.
        const SubspaceBasis skew = structured_basis(c, StructuredKind::kSkew);
        const ComplexMatrix r1 = annihilator_element(c, h, std::nullopt, 1);
        const ComplexMatrix r2 = annihilator_element(c, h, g, 2);
        for (const ComplexMatrix& s : skew.elements) {
            CHECK(std::abs(trace_pair(s, r1)) <= 1e-12);
            CHECK(std::abs(trace_pair(s, r2)) <= 1e-12);
        }
    }
}

TEST_CASE("alpha closed forms on fixed operators") {
    const Conjugation plain2 = plain_conjugation(2);

    // Brute-force sphere oracle for sup |h^T h|: never above 1, and 1 is hit
    // on the real slice.
    double oracle = 0.0;
    for (int i = 0; i < 10000; ++i) {
        Rng rng(mix_seed(1500, i));
        const ComplexVector h = random_unit_vector(2, rng);
        oracle = std::max(oracle, std::abs(Complex(h.transpose() * h)));
    }
    ComplexVector real_dir(2);
    real_dir << 1.0, 0.0;
    oracle = std::max(oracle, std::abs(Complex(real_dir.transpose() * real_dir)));
    CHECK(oracle <= 1.0 + 1e-12);
    CHECK(oracle == doctest::Approx(1.0).epsilon(1e-9));

    const AlphaReport a1 = alpha(plain2, ComplexMatrix::Identity(2, 2), 1);
    CHECK(a1.value == doctest::Approx(1.0).epsilon(1e-10));

    // A skew operator annihilates its own preannihilator.
    for (int k : {1, 2}) {
        CHECK(alpha(plain2, rotation_generator(), k).value <= 1e-12);
    }

    // alpha_2 of the nilpotent: half the norm of T + T^T symmetrization.
    const AlphaReport a2 = alpha(plain2, mat2(0.0, 1.0, 0.0, 0.0), 2);
    CHECK(a2.value == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("alpha witnesses reproduce the reported values") {
    for (int trial = 0; trial < 40; ++trial) {
        Rng rng(mix_seed(1600, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 9);
        const Conjugation c = random_conjugation(n, mix_seed(1601, trial));
        const ComplexMatrix t = ginibre_matrix(n, n, rng);

        for (int k : {1, 2}) {
            const AlphaReport rep = alpha(c, t, k);
            double eval;
            if (k == 1) {
                eval = std::abs(trace_pair(t, annihilator_element(c, rep.witness_h,
                                                                  std::nullopt, 1)));
            } else {
                eval = 0.5 * std::abs(trace_pair(
                                 t, annihilator_element(c, rep.witness_h, rep.witness_g, 2)));
            }
            CHECK(std::abs(eval - rep.value) <= 1e-8 * std::max(1.0, rep.value));
        }
    }
}

TEST_CASE("sampled alpha never exceeds and closely tracks the closed form") {
    for (int trial = 0; trial < 15; ++trial) {
        Rng rng(mix_seed(1700, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 5);
        const Conjugation c = random_conjugation(n, mix_seed(1701, trial));
        const ComplexMatrix t = ginibre_matrix(n, n, rng);

        for (int k : {1, 2}) {
            const double closed = alpha(c, t, k).value;
            const double sampled =
                alpha(c, t, k, AlphaMethod::kSampled, mix_seed(1702, trial)).value;
            CHECK(sampled <= closed + 1e-10);
            CHECK(sampled >= closed * (1.0 - 1e-6));
        }
    }
}

TEST_CASE("rank-one sampling with 1e4 seeded evaluations reaches the closed form") {
    // The oracle only ever evaluates |tr(T (h (x) Ch))| at seeded unit
    // vectors: uniform exploration first, then random local refinement of
    // the running best. It must undershoot, and by no more than 1e-4.
    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(mix_seed(1800, trial));
        const Conjugation c = random_conjugation(2, mix_seed(1801, trial));
        const ComplexMatrix t = ginibre_matrix(2, 2, rng);
        const double closed = alpha(c, t, 1).value;

        const auto eval = [&](const ComplexVector& h) {
            return std::abs(trace_pair(t, annihilator_element(c, h, std::nullopt, 1)));
        };
        Rng hr(mix_seed(1802, trial));
        ComplexVector best_h = random_unit_vector(2, hr);
        double sampled = eval(best_h);
        for (int i = 1; i < 6000; ++i) {
            const ComplexVector h = random_unit_vector(2, hr);
            const double v = eval(h);
            if (v > sampled) {
                sampled = v;
                best_h = h;
            }
        }
        double radius = 0.3;
        for (int i = 0; i < 4000; ++i) {
            ComplexVector h = best_h + radius * random_unit_vector(2, hr);
            h /= h.norm();
            const double v = eval(h);
            if (v > sampled) {
                sampled = v;
                best_h = h;
            }
            radius = std::max(radius * 0.999, 1e-5);
        }
        CHECK(sampled <= closed + 1e-10);
        CHECK(sampled >= closed * (1.0 - 1e-4));
    }
}

TEST_CASE("rank-two sampling lower-bounds alpha_2") {
    for (int trial = 0; trial < 20; ++trial) {
        Rng rng(mix_seed(1900, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 9);
        const Conjugation c = random_conjugation(n, mix_seed(1901, trial));
        const ComplexMatrix t = ginibre_matrix(n, n, rng);
        const double a2 = alpha(c, t, 2).value;
        for (int i = 0; i < 50; ++i) {
            const ComplexVector h = random_unit_vector(n, rng);
            const ComplexVector g = random_unit_vector(n, rng);
            const double lower =
                0.5 * std::abs(trace_pair(t, annihilator_element(c, h, g, 2)));
            CHECK(lower <= a2 + 1e-10);
        }
    }
}

TEST_CASE("distance_to_skew: identity, membership, nilpotent") {
    const Conjugation plain2 = plain_conjugation(2);

    // Sampling oracle: no skew matrix comes closer than 1 to the identity.
    double closest = 1e9;
    for (int i = 0; i < 10000; ++i) {
        Rng rng(mix_seed(2000, i));
        ComplexMatrix a = ComplexMatrix::Zero(2, 2);
        const Complex z = rng.complex_gaussian();
        a(0, 1) = z;
        a(1, 0) = -z;
        a *= rng.uniform() * 3.0;  // random radius
        closest = std::min(closest, operator_norm(ComplexMatrix::Identity(2, 2) - a));
    }
    CHECK(closest >= 1.0 - 1e-6);

    const DistanceReport ident = distance_to_skew(plain2, ComplexMatrix::Identity(2, 2));
    CHECK(ident.dist == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(ident.nearest.norm() <= 1e-14);
    CHECK(std::abs(ident.certificate_gap) <= 1e-10);

    const DistanceReport member = distance_to_skew(plain2, rotation_generator());
    CHECK(member.dist <= 1e-14);
    CHECK((member.nearest - rotation_generator()).norm() <= 1e-14);

    const DistanceReport nil = distance_to_skew(plain2, mat2(0.0, 1.0, 0.0, 0.0));
    CHECK(nil.dist == doctest::Approx(0.5).epsilon(1e-12));
    CHECK((nil.nearest - mat2(0.0, 0.5, -0.5, 0.0)).norm() <= 1e-14);

    // Sampling lower-bound oracle for the nilpotent case.
    double nil_closest = 1e9;
    for (int i = 0; i < 10000; ++i) {
        Rng rng(mix_seed(2001, i));
        ComplexMatrix a = ComplexMatrix::Zero(2, 2);
        const Complex z = rng.complex_gaussian();
        a(0, 1) = z;
        a(1, 0) = -z;
        a *= rng.uniform() * 2.0;
        nil_closest = std::min(nil_closest, operator_norm(mat2(0.0, 1.0, 0.0, 0.0) - a));
    }
    CHECK(nil_closest >= 0.5 - 1e-6);
}

TEST_CASE("distance report invariants on a random corpus") {
    for (int trial = 0; trial < 60; ++trial) {
        Rng rng(mix_seed(2100, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 11);
        const Conjugation c = random_conjugation(n, mix_seed(2101, trial));
        const ComplexMatrix t = ginibre_matrix(n, n, rng);
        const double scale = std::max(1.0, operator_norm(t));

        const DistanceReport rep = distance_to_skew(c, t);
        CHECK(symmetry_class(c, rep.nearest).skew_residual <= 1e-9 * scale);
        CHECK(std::abs(operator_norm(t - rep.nearest) - rep.dist) <= 1e-10 * scale);
        CHECK(std::abs(rep.certificate_gap) <= 1e-10 * scale);

        // Duality bound and the two hyperreflexivity relations.
        const double a1 = alpha(c, t, 1).value;
        const double a2 = alpha(c, t, 2).value;
        CHECK(a1 <= rep.dist + 1e-10 * scale);
        CHECK(a2 <= rep.dist + 1e-10 * scale);
        CHECK(std::abs(rep.dist - a2) <= 1e-10 * scale);
        CHECK(rep.dist <= 3.0 * a1 + 1e-8 * scale);

        // The finite-dimensional identity: the skew defect is exactly twice
        // alpha_1.
        CHECK(std::abs(symmetry_class(c, t).skew_residual - 2.0 * a1) <= 1e-9 * scale);
    }
}

TEST_CASE("hyperreflexivity_ratios contracts") {
    const Conjugation plain2 = plain_conjugation(2);
    const HyperreflexivityRatios ident =
        hyperreflexivity_ratios(plain2, ComplexMatrix::Identity(2, 2));
    CHECK(ident.ratio1 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(ident.ratio2 == doctest::Approx(1.0).epsilon(1e-8));
    CHECK_FALSE(ident.degenerate);

    const HyperreflexivityRatios member =
        hyperreflexivity_ratios(plain2, rotation_generator());
    CHECK(member.degenerate);
    CHECK(member.ratio1 == 1.0);
    CHECK(member.ratio2 == 1.0);

    for (int trial = 0; trial < 60; ++trial) {
        Rng rng(mix_seed(2200, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 11);
        const Conjugation c = random_conjugation(n, mix_seed(2201, trial));
        const ComplexMatrix t = ginibre_matrix(n, n, rng);

        const HyperreflexivityRatios r = hyperreflexivity_ratios(c, t);
        CHECK(r.ratio1 <= 3.0 + 1e-8);
        CHECK(r.ratio1 <= 1.0 + 1e-6);  // sharper finite-dimensional identity
        CHECK(std::abs(r.ratio2 - 1.0) <= 1e-8);
    }
}

TEST_CASE("alpha_1 = 0 certifies skewness") {
    for (int trial = 0; trial < 30; ++trial) {
        Rng rng(mix_seed(2300, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 9);
        const Conjugation c = random_conjugation(n, mix_seed(2301, trial));
        const ComplexMatrix s = random_skew_element(c, rng);
        const double scale = std::max(1.0, operator_norm(s));
        CHECK(alpha(c, s, 1).value <= 1e-10 * scale);
        CHECK(symmetry_class(c, s).skew_residual <= 1e-8 * scale);
    }
}

TEST_CASE("reflexivity_check on the skew class") {
    const Conjugation plain3 = plain_conjugation(3);
    const SubspaceBasis skew3 = structured_basis(plain3, StructuredKind::kSkew);
    const ReflexivityReport rep = reflexivity_check(skew3, 1, plain3, 50, 17);
    CHECK(rep.preannihilator_dim == 6);
    CHECK(rep.rank_k_span_dim == 6);
    CHECK(rep.verdict == ReflexivityVerdict::kReflexive);
    CHECK(rep.evidence.size() == 50);
    for (const RankOneCandidate& cand : rep.evidence) {
        CHECK(cand.ratio <= 1e-12);
    }

    for (int trial = 0; trial < 10; ++trial) {
        Rng rng(mix_seed(2400, trial));
        const Index n = 2 + static_cast<Index>(rng.raw() % 7);
        const Conjugation c = random_conjugation(n, mix_seed(2401, trial));
        const SubspaceBasis skew = structured_basis(c, StructuredKind::kSkew);
        for (int k : {1, 2}) {
            const ReflexivityReport r =
                reflexivity_check(skew, k, c, static_cast<int>(3 * n * n), mix_seed(2402, trial));
            CHECK(r.preannihilator_dim == n * (n + 1) / 2);
            CHECK(r.verdict == ReflexivityVerdict::kReflexive);
        }
    }
}

TEST_CASE("reflexivity_check falls back to search without a conjugation") {
    // The generated algebra of the rotation generator.
    const SubspaceBasis algebra = algebra_generated(rotation_generator());
    const ReflexivityReport rep = reflexivity_check(algebra, 1, std::nullopt, 24, 5);
    CHECK(rep.preannihilator_dim == 2);
    CHECK(rep.rank_k_span_dim == 2);
    CHECK(rep.verdict == ReflexivityVerdict::kReflexive);
    REQUIRE(rep.evidence.size() >= 2);

    // span{I} in C^2: preannihilator is the trace-zero plane.
    const SubspaceBasis eye = orthonormalize({ComplexMatrix::Identity(2, 2)});
    const ReflexivityReport triv = reflexivity_check(eye, 1, std::nullopt, 24, 5);
    CHECK(triv.preannihilator_dim == 3);
    CHECK(triv.rank_k_span_dim <= 3);
    if (triv.rank_k_span_dim == 3) {
        CHECK(triv.verdict == ReflexivityVerdict::kReflexive);
    } else {
        CHECK(triv.verdict == ReflexivityVerdict::kNotCertified);
    }
}

TEST_CASE("algebra_generated spans and stops") {
    const SubspaceBasis rot = algebra_generated(rotation_generator());
    CHECK(rot.subspace_dim() == 2);
    CHECK(projection_residual(rot, ComplexMatrix::Identity(2, 2)) <= 1e-10);
    CHECK(projection_residual(rot, rotation_generator()) <= 1e-10);

    CHECK(algebra_generated(ComplexMatrix::Identity(3, 3)).subspace_dim() == 1);
    CHECK(algebra_generated(ComplexMatrix::Zero(2, 2)).subspace_dim() == 1);

    ComplexMatrix diag = ComplexMatrix::Zero(3, 3);
    diag(0, 0) = 1.0;
    diag(1, 1) = 2.0;
    diag(2, 2) = 3.0;
    CHECK(algebra_generated(diag).subspace_dim() == 3);

    // The span is closed under multiplication.
    Rng rng(31);
    const ComplexMatrix t = ginibre_matrix(3, 3, rng);
    const SubspaceBasis alg = algebra_generated(t);
    for (const ComplexMatrix& a : alg.elements) {
        for (const ComplexMatrix& b : alg.elements) {
            const ComplexMatrix prod = a * b;
            CHECK(projection_residual(alg, prod) <= 1e-8 * std::max(1.0, prod.norm()));
        }
    }
}
