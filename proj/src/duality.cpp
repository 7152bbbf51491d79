#include "skewsym/duality.hpp"

#include "skewsym/random.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

namespace skewsym {

Complex trace_pair(const ComplexMatrix& t_op, const ComplexMatrix& t_tr) {
    if (t_op.rows() != t_op.cols() || t_tr.rows() != t_tr.cols()) {
        throw NotSquare("trace_pair: both operands must be square");
    }
    require_same_dim(t_op.rows(), t_tr.rows(), "trace_pair");
    // tr(T t) = sum_ab T(a,b) t(b,a)
    return (t_op.cwiseProduct(t_tr.transpose())).sum();
}

SubspaceBasis structured_basis(const Conjugation& c, StructuredKind kind) {
    const Index n = c.dim();
    const ComplexMatrix& k = c.kernel();
    std::vector<ComplexMatrix> raw;
    if (kind == StructuredKind::kSkew) {
        raw.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
        for (Index i = 0; i < n; ++i) {
            for (Index j = i + 1; j < n; ++j) {
                ComplexMatrix e = ComplexMatrix::Zero(n, n);
                e(i, j) = 1.0;
                e(j, i) = -1.0;
                raw.push_back(k * e);
            }
        }
    } else {
        raw.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
        for (Index i = 0; i < n; ++i) {
            for (Index j = i; j < n; ++j) {
                ComplexMatrix e = ComplexMatrix::Zero(n, n);
                e(i, j) += 1.0;
                e(j, i) += 1.0;
                raw.push_back(k * e);
            }
        }
    }
    SubspaceBasis basis = orthonormalize(raw, kConstructionTol);
    if (basis.elements.empty() && n > 0) {
        basis.rows = n;
        basis.cols = n;
    }
    return basis;
}

SubspaceBasis preannihilator(const SubspaceBasis& basis, double tol) {
    const Index n = basis.rows;
    if (n != basis.cols) throw NotSquare("preannihilator: ambient matrices not square");
    const Index full = n * n;
    const Index m = basis.subspace_dim();
    if (m == 0) {
        std::vector<ComplexMatrix> all;
        all.reserve(static_cast<std::size_t>(full));
        for (Index i = 0; i < n; ++i) {
            for (Index j = 0; j < n; ++j) {
                ComplexMatrix e = ComplexMatrix::Zero(n, n);
                e(i, j) = 1.0;
                all.push_back(e);
            }
        }
        return orthonormalize(all, tol);
    }
    // Row i holds vec(S_i^T) so that pairing . vec(t) = tr(S_i t); the
    // bilinear pairing must not be conjugated.
    ComplexMatrix pairing(m, full);
    for (Index i = 0; i < m; ++i) {
        const ComplexMatrix st = basis.elements[static_cast<std::size_t>(i)].transpose();
        pairing.row(i) = Eigen::Map<const ComplexVector>(st.data(), full).transpose();
    }
    Eigen::BDCSVD<ComplexMatrix> svd(pairing, Eigen::ComputeFullV);
    const RealVector sv = svd.singularValues();
    const double cut = (sv.size() > 0 ? sv(0) : 0.0) * tol;
    Index rank = 0;
    while (rank < sv.size() && sv(rank) > cut) ++rank;

    SubspaceBasis out;
    out.rows = n;
    out.cols = n;
    out.elements.reserve(static_cast<std::size_t>(full - rank));
    for (Index j = rank; j < full; ++j) {
        const ComplexVector col = svd.matrixV().col(j);
        out.elements.emplace_back(Eigen::Map<const ComplexMatrix>(col.data(), n, n));
    }
    return out;
}

ComplexMatrix annihilator_element(const Conjugation& c, const ComplexVector& h,
                                  const std::optional<ComplexVector>& g, int rank) {
    require_same_dim(c.dim(), h.size(), "annihilator_element");
    if (rank == 1) {
        // h (x) Ch = h h^T conj(K)
        return h * h.transpose() * c.kernel().conjugate();
    }
    if (rank == 2) {
        if (!g.has_value()) {
            throw MissingArgument("annihilator_element: rank 2 requires g");
        }
        require_same_dim(c.dim(), g->size(), "annihilator_element");
        const ComplexVector ch = c.apply(h);
        const ComplexVector cg = c.apply(*g);
        return h * g->adjoint() + cg * ch.adjoint();
    }
    throw InvalidK("annihilator_element: rank must be 1 or 2");
}

namespace {

/// |tr(T (h (x) Ch))|: the honest pairing evaluation used by the sampled
/// method and by report witnesses.
double eval_rank1(const Conjugation& c, const ComplexMatrix& t, const ComplexVector& h) {
    return std::abs(trace_pair(t, h * h.transpose() * c.kernel().conjugate()));
}

/// |tr(T (h (x) g + Cg (x) Ch))| / 2, the rank-two family evaluation (the
/// element has trace norm at most 2).
double eval_rank2(const Conjugation& c, const ComplexMatrix& t, const ComplexVector& h,
                  const ComplexVector& g) {
    const ComplexVector ch = c.apply(h);
    const ComplexVector cg = c.apply(g);
    const ComplexMatrix elem = h * g.adjoint() + cg * ch.adjoint();
    return 0.5 * std::abs(trace_pair(t, elem));
}

}  // namespace

AlphaReport alpha(const Conjugation& c, const ComplexMatrix& t, int k, AlphaMethod method,
                  std::uint64_t seed, int samples) {
    if (t.rows() != t.cols()) throw NotSquare("alpha: T must be square");
    require_same_dim(c.dim(), t.rows(), "alpha");
    if (k != 1 && k != 2) throw InvalidK("alpha: k must be 1 or 2");

    AlphaReport rep;
    rep.k = k;
    rep.method = method;
    const Index n = t.rows();

    if (k == 1) {
        const ComplexMatrix m = c.kernel().conjugate() * t;
        const ComplexMatrix sym = 0.5 * (m + m.transpose());
        if (method == AlphaMethod::kClosedForm) {
            const QuadFormSup sup = quad_form_sup(sym, SupMethod::kTakagi);
            rep.witness_h = sup.witness;
            rep.value = eval_rank1(c, t, rep.witness_h);
            return rep;
        }
        const QuadFormSup sup = quad_form_sup(sym, SupMethod::kSearch, seed);
        rep.witness_h = sup.witness;
        rep.value = eval_rank1(c, t, sup.witness);
        for (int i = 0; i < samples; ++i) {
            Rng rng(mix_seed(seed, 0x51000000ULL + static_cast<std::uint64_t>(i)));
            const ComplexVector h = random_unit_vector(n, rng);
            const double v = eval_rank1(c, t, h);
            if (v > rep.value) {
                rep.value = v;
                rep.witness_h = h;
            }
        }
        return rep;
    }

    // k == 2: the pairing with the rank-two family reduces to
    // <h, (T* + CTC) g>, so the closed form is the top singular pair.
    const ComplexMatrix pairing_op = t.adjoint() + conjugate_operator(c, t, false);
    if (method == AlphaMethod::kClosedForm) {
        Eigen::JacobiSVD<ComplexMatrix> svd(pairing_op,
                                            Eigen::ComputeThinU | Eigen::ComputeThinV);
        rep.witness_h = svd.matrixU().col(0);
        rep.witness_g = svd.matrixV().col(0);
        rep.value = eval_rank2(c, t, rep.witness_h, rep.witness_g);
        return rep;
    }
    double best = -1.0;
    ComplexVector best_h, best_g;
    const int starts = std::max(1, samples / 128);
    for (int s = 0; s < starts; ++s) {
        Rng rng(mix_seed(seed, 0x52000000ULL + static_cast<std::uint64_t>(s)));
        ComplexVector g = random_unit_vector(n, rng);
        ComplexVector h = random_unit_vector(n, rng);
        // Alternating maximization of |<h, P g>| over the two unit spheres.
        for (int it = 0; it < 60; ++it) {
            ComplexVector ph = pairing_op * g;
            if (ph.norm() <= 1e-300) break;
            h = ph / ph.norm();
            ComplexVector pg = pairing_op.adjoint() * h;
            if (pg.norm() <= 1e-300) break;
            g = pg / pg.norm();
        }
        const double v = eval_rank2(c, t, h, g);
        if (v > best) {
            best = v;
            best_h = h;
            best_g = g;
        }
    }
    for (int i = 0; i < samples; ++i) {
        Rng rng(mix_seed(seed, 0x53000000ULL + static_cast<std::uint64_t>(i)));
        const ComplexVector h = random_unit_vector(n, rng);
        const ComplexVector g = random_unit_vector(n, rng);
        const double v = eval_rank2(c, t, h, g);
        if (v > best) {
            best = v;
            best_h = h;
            best_g = g;
        }
    }
    rep.value = std::max(best, 0.0);
    rep.witness_h = best_h;
    rep.witness_g = best_g;
    return rep;
}

DistanceReport distance_to_skew(const Conjugation& c, const ComplexMatrix& t) {
    if (t.rows() != t.cols()) throw NotSquare("distance_to_skew: T must be square");
    require_same_dim(c.dim(), t.rows(), "distance_to_skew");
    DistanceReport rep;
    const SplitParts parts = split_parts(c, t);
    rep.dist = operator_norm(t + conjugate_operator(c, t, true)) * 0.5;
    rep.nearest = parts.skew_part;
    rep.certificate_gap = rep.dist - alpha(c, t, 2).value;
    return rep;
}

HyperreflexivityRatios hyperreflexivity_ratios(const Conjugation& c,
                                               const ComplexMatrix& t) {
    HyperreflexivityRatios out;
    const double t_norm = operator_norm(t);
    const DistanceReport d = distance_to_skew(c, t);
    if (d.dist <= 1e-12 * t_norm || t_norm == 0.0) {
        out.degenerate = true;
        return out;  // membership: ratios are 1 by convention
    }
    const double a1 = alpha(c, t, 1).value;
    const double a2 = alpha(c, t, 2).value;
    if (a1 <= 0.0 || a2 <= 0.0) {
        throw DegenerateInput("hyperreflexivity_ratios: vanishing alpha at positive distance");
    }
    out.ratio1 = d.dist / a1;
    out.ratio2 = d.dist / a2;
    return out;
}

ReflexivityReport reflexivity_check(const SubspaceBasis& basis, int k,
                                    const std::optional<Conjugation>& c, int trials,
                                    std::uint64_t seed) {
    if (k != 1 && k != 2) throw InvalidK("reflexivity_check: k must be 1 or 2");
    ReflexivityReport rep;
    rep.k = k;
    const SubspaceBasis pre = preannihilator(basis);
    rep.preannihilator_dim = pre.subspace_dim();

    std::vector<ComplexMatrix> collected;
    if (c.has_value()) {
        const Index n = c->dim();
        require_same_dim(n, basis.rows, "reflexivity_check");
        trials = std::max(trials, 1);
        for (int tr = 0; tr < trials; ++tr) {
            Rng rng(mix_seed(seed, static_cast<std::uint64_t>(tr)));
            const ComplexVector h = random_unit_vector(n, rng);
            ComplexMatrix elem;
            if (k == 1) {
                elem = annihilator_element(*c, h, std::nullopt, 1);
            } else {
                const ComplexVector g = random_unit_vector(n, rng);
                elem = annihilator_element(*c, h, g, 2);
            }
            // Evidence must actually annihilate the subspace to count.
            double worst = 0.0;
            for (const ComplexMatrix& s : basis.elements) {
                worst = std::max(worst, std::abs(trace_pair(s, elem)));
            }
            if (worst > 1e-10 * std::max(1.0, elem.norm())) continue;
            collected.push_back(elem);
            RankOneCandidate cand;
            cand.coefficients = subspace_coefficients(pre, elem);
            cand.matrix = elem;
            const Eigen::JacobiSVD<ComplexMatrix> svd(elem);
            const RealVector sv = svd.singularValues();
            cand.ratio = (sv.size() > 1 && sv(0) > 0.0) ? sv(1) / sv(0) : 0.0;
            rep.evidence.push_back(std::move(cand));
        }
    } else {
        const int restarts = std::max(trials, 20);
        rep.evidence = rank_one_search(pre, restarts, seed, 1e-8);
        for (const RankOneCandidate& cand : rep.evidence) {
            collected.push_back(cand.matrix);
        }
    }

    const SubspaceBasis span = orthonormalize(collected, 1e-8);
    rep.rank_k_span_dim = span.subspace_dim();
    rep.verdict = (rep.rank_k_span_dim == rep.preannihilator_dim)
                      ? ReflexivityVerdict::kReflexive
                      : ReflexivityVerdict::kNotCertified;
    return rep;
}

SubspaceBasis algebra_generated(const ComplexMatrix& t, double tol) {
    if (t.rows() != t.cols()) throw NotSquare("algebra_generated: T must be square");
    const Index n = t.rows();
    const double scale = operator_norm(t);
    std::vector<ComplexMatrix> powers;
    powers.push_back(ComplexMatrix::Identity(n, n));
    if (scale > 0.0) {
        const ComplexMatrix unit = t / scale;  // span is scale invariant
        ComplexMatrix p = ComplexMatrix::Identity(n, n);
        for (Index k = 1; k < n * n; ++k) {
            p = p * unit;
            if (!p.allFinite()) {
                throw NumericalFailure("algebra_generated: power overflow");
            }
            powers.push_back(p);
        }
    }
    return orthonormalize(powers, tol);
}

}  // namespace skewsym
