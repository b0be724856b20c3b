// Sparse elements of A (x) A and A (x) A (x) A with the componentwise
// product inherited from the algebra: (s t)^{ij} = s^{pq} t^{rs} a_{pr}^i a_{qs}^j
// and its three-leg analog.
#pragma once

#include <array>
#include <map>

#include "qpb/algebra.hpp"

namespace qpb {

template <int Legs>
class Tensor {
public:
    using Key = std::array<int, Legs>;

    explicit Tensor(int dim) : dim_(dim) {
        if (dim < 1) throw input_error("tensor dimension must be >= 1");
    }

    int dim() const { return dim_; }
    const std::map<Key, Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }

    Rational get(const Key& k) const {
        auto it = c_.find(k);
        return it == c_.end() ? Rational(0) : it->second;
    }

    void add(const Key& k, const Rational& v) {
        if (v == 0) return;
        for (int idx : k)
            if (idx < 0 || idx >= dim_) throw input_error("tensor index out of range");
        auto it = c_.find(k);
        if (it == c_.end()) {
            c_.emplace(k, v);
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    Tensor& operator+=(const Tensor& o) {
        require_same_dim(o);
        for (const auto& [k, v] : o.c_) add(k, v);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        require_same_dim(o);
        for (const auto& [k, v] : o.c_) add(k, -v);
        return *this;
    }
    Tensor& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [k, v] : c_) v *= s;
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Rational& s, Tensor a) { return a *= s; }
    friend bool operator==(const Tensor& a, const Tensor& b) { return a.dim_ == b.dim_ && a.c_ == b.c_; }

    void require_same_dim(const Tensor& o) const {
        if (dim_ != o.dim_) throw input_error("tensor dimension mismatch");
    }

private:
    int dim_;
    std::map<Key, Rational> c_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

inline Tensor2 tensor2_multiply(const Algebra& alg, const Tensor2& s, const Tensor2& t) {
    s.require_same_dim(t);
    if (s.dim() != alg.dim()) throw input_error("tensor dimension differs from algebra dimension");
    Tensor2 out(alg.dim());
    for (const auto& [sk, sv] : s.coeffs())
        for (const auto& [tk, tv] : t.coeffs()) {
            Rational f = sv * tv;
            for (const auto& [i, av] : alg.product(sk[0], tk[0]))
                for (const auto& [j, bv] : alg.product(sk[1], tk[1])) out.add({i, j}, f * av * bv);
        }
    return out;
}

inline Tensor2 tensor2_commutator(const Algebra& alg, const Tensor2& s, const Tensor2& t) {
    return tensor2_multiply(alg, s, t) - tensor2_multiply(alg, t, s);
}

inline Tensor3 tensor3_multiply(const Algebra& alg, const Tensor3& s, const Tensor3& t) {
    s.require_same_dim(t);
    if (s.dim() != alg.dim()) throw input_error("tensor dimension differs from algebra dimension");
    Tensor3 out(alg.dim());
    for (const auto& [sk, sv] : s.coeffs())
        for (const auto& [tk, tv] : t.coeffs()) {
            Rational f = sv * tv;
            for (const auto& [i, av] : alg.product(sk[0], tk[0]))
                for (const auto& [j, bv] : alg.product(sk[1], tk[1]))
                    for (const auto& [k, cv] : alg.product(sk[2], tk[2])) out.add({i, j, k}, f * av * bv * cv);
        }
    return out;
}

inline Tensor3 tensor3_commutator(const Algebra& alg, const Tensor3& s, const Tensor3& t) {
    return tensor3_multiply(alg, s, t) - tensor3_multiply(alg, t, s);
}

enum class LegPair { legs12, legs13, legs23 };

// Pads the unused leg with the unit: t^{ij} e_i (x) e_j goes to
// t^{ij} e_i (x) e_j (x) u, t^{ij} e_i (x) u (x) e_j or t^{ij} u (x) e_i (x) e_j.
inline Tensor3 embed_leg(const Algebra& alg, const Tensor2& t, LegPair legs) {
    const Vector& u = alg.unit();  // throws for non-unital algebras
    Tensor3 out(alg.dim());
    for (const auto& [k, v] : t.coeffs())
        for (int m = 0; m < alg.dim(); ++m) {
            if (u[m] == 0) continue;
            Rational f = v * u[m];
            switch (legs) {
                case LegPair::legs12: out.add({k[0], k[1], m}, f); break;
                case LegPair::legs13: out.add({k[0], m, k[1]}, f); break;
                case LegPair::legs23: out.add({m, k[0], k[1]}, f); break;
            }
        }
    return out;
}

// S_a = u (x) u (x) a + u (x) a (x) u + a (x) u (x) u.
inline Tensor3 s_tensor(const Algebra& alg, const Vector& a) {
    const Vector& u = alg.unit();
    if (static_cast<int>(a.size()) != alg.dim()) throw input_error("vector length differs from algebra dimension");
    Tensor3 out(alg.dim());
    for (int p = 0; p < alg.dim(); ++p) {
        if (u[p] == 0) continue;
        for (int q = 0; q < alg.dim(); ++q) {
            if (u[q] == 0) continue;
            Rational f = u[p] * u[q];
            for (int r = 0; r < alg.dim(); ++r) {
                if (a[r] == 0) continue;
                out.add({p, q, r}, f * a[r]);
                out.add({p, r, q}, f * a[r]);
                out.add({r, p, q}, f * a[r]);
            }
        }
    }
    return out;
}

struct SymmetryFlags {
    bool symmetric = true;
    bool antisymmetric = true;
    bool fully_symmetric = true;      // meaningful for three legs
    bool fully_antisymmetric = true;  // meaningful for three legs
};

inline SymmetryFlags symmetry_tests(const Tensor2& t) {
    SymmetryFlags f;
    for (const auto& [k, v] : t.coeffs()) {
        Rational mirror = t.get({k[1], k[0]});
        if (mirror != v) f.symmetric = false;
        if (mirror != -v) f.antisymmetric = false;
    }
    f.fully_symmetric = f.symmetric;
    f.fully_antisymmetric = f.antisymmetric;
    return f;
}

inline SymmetryFlags symmetry_tests(const Tensor3& t) {
    SymmetryFlags f;
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    const std::array<int, 6> sign = {1, -1, -1, 1, 1, -1};
    for (const auto& [k, v] : t.coeffs()) {
        // pairwise flags from the (0,1) transposition
        Rational swap01 = t.get({k[1], k[0], k[2]});
        if (swap01 != v) f.symmetric = false;
        if (swap01 != -v) f.antisymmetric = false;
        for (std::size_t p = 1; p < perms.size(); ++p) {
            Rational img = t.get({k[perms[p][0]], k[perms[p][1]], k[perms[p][2]]});
            if (img != v) f.fully_symmetric = false;
            if (img != (sign[p] > 0 ? v : Rational(-v))) f.fully_antisymmetric = false;
        }
    }
    return f;
}

// Fully symmetrized basis tensor: sum over all six leg orders of e_p,e_q,e_r.
// These span Symm(A (x) A (x) A) as (p,q,r) runs over p <= q <= r.
inline Tensor3 symmetric_basis_tensor(int dim, int p, int q, int r) {
    Tensor3 out(dim);
    const std::array<std::array<int, 3>, 6> perms = {{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    std::array<int, 3> v = {p, q, r};
    for (const auto& perm : perms) out.add({v[perm[0]], v[perm[1]], v[perm[2]]}, Rational(1));
    return out;
}

// e_k (x) e_l + e_l (x) e_k; spans Symm(A (x) A) as k <= l.
inline Tensor2 symmetric_pair_tensor(int dim, int k, int l) {
    Tensor2 out(dim);
    out.add({k, l}, Rational(1));
    out.add({l, k}, Rational(1));
    return out;
}

}  // namespace qpb
