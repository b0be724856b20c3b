// r-matrices and the Yang-Baxter side of the story: the bracket delta = ad_r,
// CYBE/Schouten residuals, ad-invariance, the derivation property, and
// operator Schouten brackets of extensions of delta.
#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "qpb/poly.hpp"
#include "qpb/tensor.hpp"

namespace qpb {

// Antisymmetric element r = r^{ij} e_i (x) e_j of A /\ A.
class RMatrix {
public:
    explicit RMatrix(Tensor2 t) : t_(std::move(t)) {
        if (!symmetry_tests(t_).antisymmetric) throw input_error("r-matrix must be antisymmetric");
    }

    // Build from strict upper-triangle entries (i < j, value of r^{ij}).
    static RMatrix from_upper(int dim, const std::vector<std::tuple<int, int, Rational>>& upper) {
        Tensor2 t(dim);
        for (const auto& [i, j, v] : upper) {
            if (i >= j) throw input_error("r-matrix upper-triangle entry needs i < j");
            t.add({i, j}, v);
            t.add({j, i}, -v);
        }
        return RMatrix(std::move(t));
    }

    int dim() const { return t_.dim(); }
    const Tensor2& tensor() const { return t_; }
    Rational get(int i, int j) const { return t_.get({i, j}); }

private:
    Tensor2 t_;
};

// Quadratic tensor of the bracket pi(x) = scale [r, x (x) x], i.e. the
// coefficients scale r^{pq} (a_{pk}^i a_{ql}^j - a_{kp}^i a_{lq}^j) in
// canonical form. With scale 1 this realizes delta = ad_r.
inline QuadraticTensor quadratic_from_r(const Algebra& alg, const RMatrix& r, const Rational& scale = Rational(1)) {
    if (alg.dim() != r.dim()) throw input_error("r-matrix dimension differs from algebra dimension");
    QuadraticTensor out(alg.dim(), 2);
    if (scale == 0) return out;
    // The expansion emits the full antisymmetric (i,j) table, so each
    // canonical cell receives both the (i,j) and the (j,i) contribution;
    // half the scale compensates.
    Rational s = scale / 2;
    for (const auto& [pq, rv] : r.tensor().coeffs()) {
        const int p = pq[0], q = pq[1];
        for (int k = 0; k < alg.dim(); ++k)
            for (int l = 0; l < alg.dim(); ++l) {
                for (const auto& [i, av] : alg.product(p, k))
                    for (const auto& [j, bv] : alg.product(q, l)) out.accumulate(i, j, {k, l}, s * rv * av * bv);
                for (const auto& [i, av] : alg.product(k, p))
                    for (const auto& [j, bv] : alg.product(l, q)) out.accumulate(i, j, {k, l}, -s * rv * av * bv);
            }
    }
    return out;
}

// [r12, r13] + [r12, r23] + [r13, r23] in the tensor cube; zero iff r solves
// the classical Yang-Baxter equation. Legs are padded with the unit.
inline Tensor3 cybe_residual(const Algebra& alg, const RMatrix& r) {
    Tensor3 r12 = embed_leg(alg, r.tensor(), LegPair::legs12);
    Tensor3 r13 = embed_leg(alg, r.tensor(), LegPair::legs13);
    Tensor3 r23 = embed_leg(alg, r.tensor(), LegPair::legs23);
    return tensor3_commutator(alg, r12, r13) + tensor3_commutator(alg, r12, r23) +
           tensor3_commutator(alg, r13, r23);
}

// The Schouten bracket [[r, r]] is the same expression; the alias keeps
// ad-invariance checks readable.
inline Tensor3 schouten(const Algebra& alg, const RMatrix& r) { return cybe_residual(alg, r); }

// Residuals [T, S_{e_i}] for every basis vector; T is ad-invariant iff all
// vanish, which is equivalent to commuting with every fully symmetric tensor.
// Entries are keyed (basis index, leg indices).
inline ResidualReport ad_invariance_residual(const Algebra& alg, const Tensor3& t) {
    if (alg.dim() != t.dim()) throw input_error("tensor dimension differs from algebra dimension");
    ResidualReport report;
    for (int a = 0; a < alg.dim(); ++a) {
        Tensor3 s = s_tensor(alg, basis_vector(alg.dim(), a));
        Tensor3 c = tensor3_commutator(alg, t, s);
        ++report.checked;
        for (const auto& [k, v] : c.coeffs()) report.add({a, k[0], k[1], k[2]}, v);
    }
    return report;
}

// A linear operator on A (x) A extending the dual map delta of a quadratic
// tensor: its restriction to symmetric tensors is pinned by the bracket,
// the rest is a free choice. Rows map (k,l) to the image of e_k (x) e_l.
struct DeltaExtension {
    int dim = 0;
    std::map<std::array<int, 2>, std::vector<std::pair<std::array<int, 2>, Rational>>> rows;
    QuadraticTensor source{1, 2};
    std::uint64_t seed = 0;  // nonzero when the free part was randomized

    std::vector<std::pair<std::array<int, 2>, Rational>> row(int k, int l) const {
        auto it = rows.find({k, l});
        return it == rows.end() ? std::vector<std::pair<std::array<int, 2>, Rational>>{} : it->second;
    }
};

// delta(e_k (x) e_l + e_l (x) e_k) as an antisymmetric Tensor2 read off the
// canonical monomial coefficients.
inline Tensor2 delta_of_symmetric_pair(const QuadraticTensor& qt, int k, int l) {
    Tensor2 out(qt.dim());
    for (int i = 0; i < qt.dim(); ++i)
        for (int j = i + 1; j < qt.dim(); ++j) {
            Rational v = qt.monomial_coefficient(i, j, {k, l});
            if (k == l) v *= 2;
            if (v == 0) continue;
            out.add({i, j}, v);
            out.add({j, i}, -v);
        }
    return out;
}

// delta on an arbitrary symmetric tensor S = 1/2 sum S^{pq} (e_p(x)e_q + e_q(x)e_p).
inline Tensor2 delta_of_symmetric(const QuadraticTensor& qt, const Tensor2& s) {
    Tensor2 out(qt.dim());
    for (const auto& [k, v] : s.coeffs()) {
        Tensor2 d = delta_of_symmetric_pair(qt, k[0], k[1]);
        d *= v / 2;
        out += d;
    }
    return out;
}

namespace detail {

inline void extension_add(DeltaExtension& ext, int k, int l, int i, int j, const Rational& v) {
    if (v == 0) return;
    auto& row = ext.rows[{k, l}];
    for (auto& [idx, val] : row)
        if (idx == std::array<int, 2>{i, j}) {
            val += v;
            return;
        }
    row.emplace_back(std::array<int, 2>{i, j}, v);
}

inline void extension_prune(DeltaExtension& ext) {
    for (auto it = ext.rows.begin(); it != ext.rows.end();) {
        auto& row = it->second;
        row.erase(std::remove_if(row.begin(), row.end(), [](const auto& p) { return p.second == 0; }), row.end());
        it = row.empty() ? ext.rows.erase(it) : std::next(it);
    }
}

}  // namespace detail

enum class ExtensionChoice { canonical, randomized };

// Canonical choice: each half of the symmetrized coefficient, i.e.
// delta~(e_k (x) e_l) = 1/2 delta(e_k (x) e_l + e_l (x) e_k). The randomized
// choice redistributes the two halves by a seeded perturbation that is
// antisymmetric in (k,l) -- so it vanishes on symmetric tensors -- and keeps
// values in A /\ A.
inline DeltaExtension extend_delta(const QuadraticTensor& qt, ExtensionChoice choice, std::uint64_t seed = 0) {
    if (qt.degree() != 2) throw input_error("delta extensions require a quadratic bracket");
    DeltaExtension ext;
    ext.dim = qt.dim();
    ext.source = qt;
    const int n = qt.dim();
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            Tensor2 d = delta_of_symmetric_pair(qt, k, l);
            for (const auto& [ij, v] : d.coeffs()) detail::extension_add(ext, k, l, ij[0], ij[1], v / 2);
        }
    if (choice == ExtensionChoice::randomized) {
        ext.seed = seed;
        std::mt19937_64 rng(seed);
        for (int k = 0; k < n; ++k)
            for (int l = k + 1; l < n; ++l)
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        Rational w(static_cast<long>(rng() % 7) - 3);
                        if (w == 0) continue;
                        detail::extension_add(ext, k, l, i, j, w);
                        detail::extension_add(ext, k, l, j, i, -w);
                        detail::extension_add(ext, l, k, i, j, -w);
                        detail::extension_add(ext, l, k, j, i, w);
                    }
    }
    detail::extension_prune(ext);
    return ext;
}

// The operator ad_r on A (x) A, tagged with the bracket it extends. Its
// restriction to symmetric tensors equals the canonical extension's, but the
// free part differs; it is exactly the extension under which the operator
// Schouten bracket becomes ad of the Schouten tensor [[r, r]].
inline DeltaExtension delta_operator_from_r(const Algebra& alg, const RMatrix& r) {
    if (alg.dim() != r.dim()) throw input_error("r-matrix dimension differs from algebra dimension");
    DeltaExtension ext;
    ext.dim = alg.dim();
    ext.source = quadratic_from_r(alg, r);
    for (int k = 0; k < alg.dim(); ++k)
        for (int l = 0; l < alg.dim(); ++l)
            for (const auto& [pq, rv] : r.tensor().coeffs()) {
                for (const auto& [i, av] : alg.product(pq[0], k))
                    for (const auto& [j, bv] : alg.product(pq[1], l)) detail::extension_add(ext, k, l, i, j, rv * av * bv);
                for (const auto& [i, av] : alg.product(k, pq[0]))
                    for (const auto& [j, bv] : alg.product(l, pq[1]))
                        detail::extension_add(ext, k, l, i, j, -rv * av * bv);
            }
    detail::extension_prune(ext);
    return ext;
}

// Checks that an extension restricts to the delta of its tagged bracket.
inline bool extension_consistent(const DeltaExtension& ext) {
    const int n = ext.dim;
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
            Tensor2 restricted(n);
            for (const auto& [ij, v] : ext.row(k, l)) restricted.add({ij[0], ij[1]}, v);
            for (const auto& [ij, v] : ext.row(l, k)) restricted.add({ij[0], ij[1]}, v);
            if (!(restricted == delta_of_symmetric_pair(ext.source, k, l))) return false;
        }
    return true;
}

// Applies the extension on two legs of the cube, identity on the third.
inline Tensor3 apply_extension_legs(const DeltaExtension& ext, const Tensor3& t, int leg_a, int leg_b) {
    Tensor3 out(t.dim());
    for (const auto& [key, v] : t.coeffs())
        for (const auto& [ij, w] : ext.row(key[leg_a], key[leg_b])) {
            std::array<int, 3> idx = key;
            idx[leg_a] = ij[0];
            idx[leg_b] = ij[1];
            out.add(idx, v * w);
        }
    return out;
}

// Operator Schouten bracket [[delta~, delta~]] applied to the spanning set
// of fully symmetric tensors. All residuals vanish iff the underlying
// quadratic bracket satisfies the Jacobi identity; on symmetric input the
// result does not depend on the choice of extension. Entries are keyed
// (p, q, r, leg indices). The algebra product plays no role here and no unit
// is needed; the algebra argument only fixes the dimension.
inline ResidualReport symmetric_annihilation_residual(const Algebra& alg, const DeltaExtension& ext) {
    if (alg.dim() != ext.dim) throw input_error("extension dimension differs from algebra dimension");
    if (!extension_consistent(ext)) throw input_error("extension inconsistent with its tagged bracket");
    ResidualReport report;
    report.seed = ext.seed;
    const int n = ext.dim;
    const std::array<std::pair<std::array<int, 2>, std::array<int, 2>>, 3> pairs = {
        {{{0, 1}, {0, 2}}, {{0, 1}, {1, 2}}, {{0, 2}, {1, 2}}}};
    for (int p = 0; p < n; ++p)
        for (int q = p; q < n; ++q)
            for (int r = q; r < n; ++r) {
                Tensor3 x = symmetric_basis_tensor(n, p, q, r);
                Tensor3 res(n);
                for (const auto& [la, lb] : pairs) {
                    res += apply_extension_legs(ext, apply_extension_legs(ext, x, lb[0], lb[1]), la[0], la[1]);
                    res -= apply_extension_legs(ext, apply_extension_legs(ext, x, la[0], la[1]), lb[0], lb[1]);
                }
                ++report.checked;
                for (const auto& [k, v] : res.coeffs()) report.add({p, q, r, k[0], k[1], k[2]}, v);
            }
    return report;
}

// delta(p q) = p delta(q) + delta(p) q over the spanning set
// {e_k (x) e_l + e_l (x) e_k} of Symm(A (x) A); holds iff the bracket is
// compatible with the product. Entries keyed (k, l, s, t, leg indices).
inline ResidualReport derivation_residual(const Algebra& alg, const QuadraticTensor& qt) {
    if (alg.dim() != qt.dim()) throw input_error("bracket dimension differs from algebra dimension");
    ResidualReport report;
    const int n = alg.dim();
    std::vector<Tensor2> pair_tensors;
    std::vector<Tensor2> deltas;
    std::vector<std::array<int, 2>> labels;
    for (int k = 0; k < n; ++k)
        for (int l = k; l < n; ++l) {
            labels.push_back({k, l});
            pair_tensors.push_back(symmetric_pair_tensor(n, k, l));
            deltas.push_back(delta_of_symmetric_pair(qt, k, l));
        }
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = 0; b < labels.size(); ++b) {
            Tensor2 product = tensor2_multiply(alg, pair_tensors[a], pair_tensors[b]);
            Tensor2 residual = delta_of_symmetric(qt, product);
            residual -= tensor2_multiply(alg, pair_tensors[a], deltas[b]);
            residual -= tensor2_multiply(alg, deltas[a], pair_tensors[b]);
            ++report.checked;
            for (const auto& [k, v] : residual.coeffs())
                report.add({labels[a][0], labels[a][1], labels[b][0], labels[b][1], k[0], k[1]}, v);
        }
    return report;
}

}  // namespace qpb
