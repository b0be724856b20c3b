// Lie-bialgebra data extracted from a quadratic bracket: the cobracket
// family Delta_a, the dual Lie algebra on A*, the cocycle condition, and
// bracket pencils.
#pragma once

#include <utility>
#include <vector>

#include "qpb/yang_baxter.hpp"

namespace qpb {

// Delta(e_k) in A /\ A for each basis index; constants d_k^{ij} = -d_k^{ji}.
struct Cobracket {
    int dim = 0;
    std::vector<Tensor2> delta;  // delta[k], antisymmetric

    Rational constant(int k, int i, int j) const { return delta[k].get({i, j}); }
};

// Delta_a(e_k) = delta(e_k (x) a + a (x) e_k), i.e. (c^{ij}_{kl}+c^{ij}_{lk}) a^l.
// With a = u and doubled = true this is the Lie-bialgebra comultiplication
// Delta(x) = 2 delta(x (x) u + u (x) x) of the invertible-element group.
inline Cobracket cobracket_at(const Algebra& alg, const QuadraticTensor& qt, const Vector& a, bool doubled = false) {
    if (alg.dim() != qt.dim()) throw input_error("bracket dimension differs from algebra dimension");
    if (static_cast<int>(a.size()) != qt.dim()) throw input_error("vector length differs from bracket dimension");
    Cobracket cb;
    cb.dim = qt.dim();
    for (int k = 0; k < qt.dim(); ++k) {
        Tensor2 d(qt.dim());
        for (int l = 0; l < qt.dim(); ++l) {
            if (a[l] == 0) continue;
            Tensor2 part = delta_of_symmetric_pair(qt, k, l);
            part *= a[l];
            d += part;
        }
        if (doubled) d *= Rational(2);
        cb.delta.push_back(std::move(d));
    }
    return cb;
}

// Delta_r(e_k) = [r, e_k (x) u + u (x) e_k]; the coboundary cobracket of r.
inline Cobracket coboundary_cobracket(const Algebra& alg, const RMatrix& r) {
    if (alg.dim() != r.dim()) throw input_error("r-matrix dimension differs from algebra dimension");
    const Vector& u = alg.unit();
    Cobracket cb;
    cb.dim = alg.dim();
    for (int k = 0; k < alg.dim(); ++k) {
        Tensor2 x(alg.dim());
        for (int m = 0; m < alg.dim(); ++m) {
            if (u[m] == 0) continue;
            x.add({k, m}, u[m]);
            x.add({m, k}, u[m]);
        }
        cb.delta.push_back(tensor2_commutator(alg, r.tensor(), x));
    }
    return cb;
}

// Structure constants of the dual bracket [x^i, x^j]* = d_k^{ij} x^k plus a
// report carrying the skewness and Jacobi residuals. A cobracket coming from
// a multiplicative quadratic bracket always passes; the report is never
// assumed, because arbitrary cobrackets may legitimately fail.
inline std::pair<LieStructure, ResidualReport> dual_lie(const Cobracket& cb) {
    std::map<std::array<int, 2>, std::vector<std::pair<int, Rational>>> rows;
    ResidualReport report;
    for (int k = 0; k < cb.dim; ++k)
        for (const auto& [ij, v] : cb.delta[k].coeffs()) {
            // skewness residual of the raw constants
            ++report.checked;
            report.add({k, ij[0], ij[1]}, v + cb.delta[k].get({ij[1], ij[0]}));
            if (ij[0] < ij[1]) rows[{ij[0], ij[1]}].emplace_back(k, v);
        }
    LieStructure lie(cb.dim, std::move(rows));
    ResidualReport jacobi = lie_jacobi_residual(lie);
    report.checked += jacobi.checked;
    for (auto& e : jacobi.entries) report.entries.push_back(std::move(e));
    return {std::move(lie), std::move(report)};
}

// Adjoint action of e_a on A /\ A, leg by leg.
inline Tensor2 ad_action(const LieStructure& lie, int a, const Tensor2& t) {
    Tensor2 out(t.dim());
    for (const auto& [k, v] : t.coeffs()) {
        for (const auto& [m, w] : lie.bracket(a, k[0])) out.add({m, k[1]}, v * w);
        for (const auto& [m, w] : lie.bracket(a, k[1])) out.add({k[0], m}, v * w);
    }
    return out;
}

// Residual of Delta([e_i,e_j]) = ad_{e_i} Delta(e_j) - ad_{e_j} Delta(e_i)
// over all basis pairs; entries keyed (i, j, leg indices).
inline ResidualReport cocycle_residual(const LieStructure& lie, const Cobracket& cb) {
    if (lie.dim() != cb.dim) throw input_error("cobracket dimension differs from Lie algebra dimension");
    ResidualReport report;
    const int n = lie.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Tensor2 residual(n);
            for (const auto& [k, v] : lie.bracket(i, j)) {
                Tensor2 part = cb.delta[k];
                part *= v;
                residual += part;
            }
            residual -= ad_action(lie, i, cb.delta[j]);
            residual += ad_action(lie, j, cb.delta[i]);
            ++report.checked;
            for (const auto& [k, v] : residual.coeffs()) report.add({i, j, k[0], k[1]}, v);
        }
    return report;
}

// Linear tensor of the dual bracket: {x^i, x^j} = d_k^{ij} x^k.
inline LinearTensor linear_tensor_of(const Cobracket& cb) {
    LinearTensor lt(cb.dim, 1);
    for (int k = 0; k < cb.dim; ++k)
        for (const auto& [ij, v] : cb.delta[k].coeffs())
            if (ij[0] < ij[1]) lt.accumulate(ij[0], ij[1], {k}, v);
    return lt;
}

// Mixed Jacobiator of the quadratic/linear pair; zero together with the two
// endpoint Jacobiators means every member of alpha qt + beta lt is Poisson.
inline ResidualReport pencil_residual(const QuadraticTensor& qt, const LinearTensor& lt) {
    return jacobi_mixed(qt, lt);
}

// Coefficient decomposition of the shifted tensor pi(x + t u): the quadratic
// part reproduces pi, the linear part is t times the Delta_u^* tensor and the
// constant part is t^2 pi(u), which vanishes for multiplicative brackets.
struct ShiftDecomposition {
    QuadraticTensor quadratic{1, 2};
    LinearTensor linear{1, 1};
    std::map<std::array<int, 2>, Rational> constant;  // (i,j) with i < j
};

inline ShiftDecomposition shift_tensor(const QuadraticTensor& qt, const Vector& u, const Rational& t) {
    if (static_cast<int>(u.size()) != qt.dim()) throw input_error("shift vector length differs from bracket dimension");
    ShiftDecomposition out{QuadraticTensor(qt.dim(), 2), LinearTensor(qt.dim(), 1), {}};
    out.quadratic = qt;
    for (const auto& [key, v] : qt.coeffs()) {
        const int i = key.first[0], j = key.first[1];
        const int k = key.second[0], l = key.second[1];
        // v x^k x^l -> v (x^k + t u^k)(x^l + t u^l)
        out.linear.accumulate(i, j, {l}, t * v * u[k]);
        out.linear.accumulate(i, j, {k}, t * v * u[l]);
        Rational c = t * t * v * u[k] * u[l];
        if (c != 0) {
            auto& slot = out.constant[{i, j}];
            slot += c;
            if (slot == 0) out.constant.erase({i, j});
        }
    }
    return out;
}

}  // namespace qpb
