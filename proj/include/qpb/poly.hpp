// Homogeneous polynomial (pre-)Poisson tensors {x^i, x^j} = sum_K c^{ij}_K x^K.
//
// Storage is canonical: upper pairs kept for i < j only (the i > j value is
// the negative), lower multi-indices sorted, and the stored scalar is the
// coefficient of the monomial x^K in pi^{ij}. Degree 2 is the quadratic case
// of interest; degree 1 covers the linear (Berezin-Lie) brackets.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <utility>
#include <vector>

#include "qpb/algebra.hpp"

namespace qpb {

using Monomial = std::vector<int>;              // sorted basis indices, one per degree
using Polynomial = std::map<Monomial, Rational>;  // monomial -> coefficient

struct RawPolyEntry {
    int i, j;
    Monomial lower;
    Rational value;
};

class PolyTensor {
public:
    using Key = std::pair<std::array<int, 2>, Monomial>;

    PolyTensor(int dim, int degree) : dim_(dim), degree_(degree) {
        if (dim < 1) throw input_error("bracket dimension must be >= 1");
        if (degree < 0) throw input_error("bracket degree must be >= 0");
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    bool is_zero() const { return c_.empty(); }
    const std::map<Key, Rational>& coeffs() const { return c_; }

    // Adds value to the canonical slot of {x^i, x^j} x^K: drops i == j,
    // flips sign for i > j, sorts the monomial.
    void accumulate(int i, int j, Monomial lower, const Rational& value) {
        if (i < 0 || i >= dim_ || j < 0 || j >= dim_) throw input_error("bracket upper index out of range");
        if (static_cast<int>(lower.size()) != degree_) throw input_error("monomial length differs from bracket degree");
        for (int k : lower)
            if (k < 0 || k >= dim_) throw input_error("bracket lower index out of range");
        if (i == j || value == 0) return;
        std::sort(lower.begin(), lower.end());
        Rational v = (i < j) ? value : -value;
        Key key{{std::min(i, j), std::max(i, j)}, std::move(lower)};
        auto it = c_.find(key);
        if (it == c_.end()) {
            c_.emplace(std::move(key), std::move(v));
        } else {
            it->second += v;
            if (it->second == 0) c_.erase(it);
        }
    }

    // Coefficient of x^K in pi^{ij} for any index order (0 on the diagonal).
    Rational monomial_coefficient(int i, int j, Monomial lower) const {
        if (i == j) return Rational(0);
        std::sort(lower.begin(), lower.end());
        auto it = c_.find({{std::min(i, j), std::max(i, j)}, std::move(lower)});
        if (it == c_.end()) return Rational(0);
        return i < j ? it->second : Rational(-it->second);
    }

    // pi^{ij} as a polynomial, signed by the order of (i, j).
    Polynomial component(int i, int j) const {
        Polynomial out;
        if (i == j) return out;
        auto lo = c_.lower_bound({{std::min(i, j), std::max(i, j)}, Monomial{}});
        for (auto it = lo; it != c_.end() && it->first.first == std::array<int, 2>{std::min(i, j), std::max(i, j)}; ++it)
            out[it->first.second] = (i < j) ? it->second : Rational(-it->second);
        return out;
    }

    PolyTensor& operator+=(const PolyTensor& o) {
        if (dim_ != o.dim_ || degree_ != o.degree_) throw input_error("bracket shape mismatch");
        for (const auto& [k, v] : o.c_) accumulate(k.first[0], k.first[1], k.second, v);
        return *this;
    }
    PolyTensor& operator*=(const Rational& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& [k, v] : c_) v *= s;
        return *this;
    }
    friend PolyTensor operator*(const Rational& s, PolyTensor t) { return t *= s; }
    friend PolyTensor operator+(PolyTensor a, const PolyTensor& b) { return a += b; }
    friend bool operator==(const PolyTensor& a, const PolyTensor& b) {
        return a.dim_ == b.dim_ && a.degree_ == b.degree_ && a.c_ == b.c_;
    }

private:
    int dim_;
    int degree_;
    std::map<Key, Rational> c_;
};

using QuadraticTensor = PolyTensor;  // degree 2
using LinearTensor = PolyTensor;     // degree 1

// Canonical form of raw coefficients: antisymmetrized upper pair (an entry
// given as (j, i, K) contributes with opposite sign to slot (i, j, K)),
// lower indices merged by sorted multi-index, diagonal dropped. Idempotent,
// because canonical storage only ever emits i < j entries.
inline PolyTensor canonicalize(int dim, int degree, const std::vector<RawPolyEntry>& raw) {
    PolyTensor out(dim, degree);
    for (const auto& e : raw) out.accumulate(e.i, e.j, e.lower, e.value);
    return out;
}

inline QuadraticTensor quadratic_tensor(int dim, const std::vector<RawPolyEntry>& raw) {
    return canonicalize(dim, 2, raw);
}

inline LinearTensor linear_tensor(int dim, const std::vector<RawPolyEntry>& raw) {
    return canonicalize(dim, 1, raw);
}

namespace detail {

inline Polynomial poly_scale(Polynomial p, const Rational& s) {
    for (auto& [k, v] : p) v *= s;
    return p;
}

inline void poly_add(Polynomial& a, const Polynomial& b) {
    for (const auto& [k, v] : b) {
        auto it = a.find(k);
        if (it == a.end()) {
            a.emplace(k, v);
        } else {
            it->second += v;
            if (it->second == 0) a.erase(it);
        }
    }
}

inline Polynomial poly_mult(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    for (const auto& [ka, va] : a)
        for (const auto& [kb, vb] : b) {
            Monomial m;
            m.reserve(ka.size() + kb.size());
            std::merge(ka.begin(), ka.end(), kb.begin(), kb.end(), std::back_inserter(m));
            auto it = out.find(m);
            Rational v = va * vb;
            if (it == out.end()) {
                out.emplace(std::move(m), std::move(v));
            } else {
                it->second += v;
                if (it->second == 0) out.erase(it);
            }
        }
    return out;
}

inline Polynomial poly_partial(const Polynomial& p, int l) {
    Polynomial out;
    for (const auto& [k, v] : p) {
        auto count = static_cast<int>(std::count(k.begin(), k.end(), l));
        if (count == 0) continue;
        Monomial m = k;
        m.erase(std::find(m.begin(), m.end(), l));
        out[m] += v * count;
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace detail

// J^{ijk} = pi^{lk} d_l pi^{ij} + pi^{li} d_l pi^{jk} + pi^{lj} d_l pi^{ki},
// valid for any index order; antisymmetric in (i,j,k) identically.
inline Polynomial jacobiator_component(const PolyTensor& pi, int i, int j, int k) {
    Polynomial out;
    auto term = [&](int a, int b, int c) {
        // sum_l pi^{lc} d_l pi^{ab}
        Polynomial pab = pi.component(a, b);
        for (int l = 0; l < pi.dim(); ++l) {
            Polynomial dl = detail::poly_partial(pab, l);
            if (dl.empty()) continue;
            detail::poly_add(out, detail::poly_mult(pi.component(l, c), dl));
        }
    };
    term(i, j, k);
    term(j, k, i);
    term(k, i, j);
    return out;
}

// All Jacobiator coefficients over i < j < k; pass iff the bracket is Poisson.
// Entry index layout: (i, j, k, K...) with K the degree 2d-1 monomial.
inline ResidualReport jacobiator(const PolyTensor& pi) {
    ResidualReport report;
    const int n = pi.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Polynomial J = jacobiator_component(pi, i, j, k);
                ++report.checked;
                for (const auto& [mono, v] : J) {
                    std::vector<int> idx = {i, j, k};
                    idx.insert(idx.end(), mono.begin(), mono.end());
                    report.add(std::move(idx), v);
                }
            }
    return report;
}

// Polarized Jacobiator J(p1 + p2) - J(p1) - J(p2); exact because J is
// quadratic in its argument. Together with J(p1) = J(p2) = 0 this decides
// compatibility of the whole pencil alpha p1 + beta p2.
inline Polynomial jacobi_mixed_component(const PolyTensor& p1, const PolyTensor& p2, int i, int j, int k) {
    Polynomial out;
    auto term = [&](const PolyTensor& pa, const PolyTensor& pb, int a, int b, int c) {
        Polynomial pab = pb.component(a, b);
        for (int l = 0; l < pa.dim(); ++l) {
            Polynomial dl = detail::poly_partial(pab, l);
            if (dl.empty()) continue;
            detail::poly_add(out, detail::poly_mult(pa.component(l, c), dl));
        }
    };
    term(p1, p2, i, j, k);
    term(p2, p1, i, j, k);
    term(p1, p2, j, k, i);
    term(p2, p1, j, k, i);
    term(p1, p2, k, i, j);
    term(p2, p1, k, i, j);
    return out;
}

inline ResidualReport jacobi_mixed(const PolyTensor& p1, const PolyTensor& p2) {
    if (p1.dim() != p2.dim()) throw input_error("bracket dimension mismatch");
    ResidualReport report;
    const int n = p1.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Polynomial J = jacobi_mixed_component(p1, p2, i, j, k);
                ++report.checked;
                for (const auto& [mono, v] : J) {
                    std::vector<int> idx = {i, j, k};
                    idx.insert(idx.end(), mono.begin(), mono.end());
                    report.add(std::move(idx), v);
                }
            }
    return report;
}

// Compatibility of the bracket with the product: both sides of
//   pi^{ij}(y z) = a_{pq}^i a_{st}^j (z^q z^t pi^{ps}(y) + y^p y^s pi^{qt}(z))
// expanded as polynomials in the 2n indeterminates (y, z) and compared
// coefficientwise. Entries are keyed (i, j, p, s, q, t) for the monomial
// y^p y^s z^q z^t with p <= s, q <= t. No unit is required.
inline ResidualReport multiplicativity_residual(const Algebra& alg, const QuadraticTensor& qt) {
    if (alg.dim() != qt.dim()) throw input_error("bracket dimension differs from algebra dimension");
    if (qt.degree() != 2) throw input_error("multiplicativity check needs a quadratic bracket");
    const int n = alg.dim();

    // transpose index: for output k, all (p, q, a_{pq}^k)
    std::vector<std::vector<std::tuple<int, int, Rational>>> by_output(n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q)
            for (const auto& [k, v] : alg.product(p, q)) by_output[k].emplace_back(p, q, v);

    ResidualReport report;
    using MKey = std::array<int, 4>;  // (y-pair sorted, z-pair sorted)
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::map<MKey, Rational> residual;
            auto put = [&](int p, int s, int q, int t, const Rational& v) {
                if (v == 0) return;
                MKey key{std::min(p, s), std::max(p, s), std::min(q, t), std::max(q, t)};
                auto it = residual.find(key);
                if (it == residual.end()) {
                    residual.emplace(key, v);
                } else {
                    it->second += v;
                    if (it->second == 0) residual.erase(it);
                }
            };
            // LHS: pi^{ij}(y z) with (y z)^m = a_{pq}^m y^p z^q
            for (const auto& [mono, v] : qt.component(i, j)) {
                for (const auto& [p1, q1, a1] : by_output[mono[0]])
                    for (const auto& [p2, q2, a2] : by_output[mono[1]]) put(p1, p2, q1, q2, v * a1 * a2);
            }
            // RHS, subtracted
            for (const auto& [p, q, apq] : by_output[i])
                for (const auto& [s, t, ast] : by_output[j]) {
                    Rational f = apq * ast;
                    for (const auto& [mono, v] : qt.component(p, s)) put(mono[0], mono[1], q, t, -f * v);
                    for (const auto& [mono, v] : qt.component(q, t)) put(p, s, mono[0], mono[1], -f * v);
                }
            ++report.checked;
            for (const auto& [key, v] : residual) report.add({i, j, key[0], key[1], key[2], key[3]}, v);
        }
    return report;
}

// Exact evaluation pi^{ij}(x); antisymmetric by construction.
inline std::vector<Vector> evaluate(const PolyTensor& pi, const Vector& x) {
    if (static_cast<int>(x.size()) != pi.dim()) throw input_error("point length differs from bracket dimension");
    std::vector<Vector> out(pi.dim(), Vector(pi.dim(), Rational(0)));
    for (const auto& [key, v] : pi.coeffs()) {
        Rational m = v;
        for (int k : key.second) m *= x[k];
        if (m == 0) continue;
        out[key.first[0]][key.first[1]] += m;
        out[key.first[1]][key.first[0]] -= m;
    }
    return out;
}

// Floating evaluation for sampled points.
inline std::vector<std::vector<double>> evaluate(const PolyTensor& pi, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != pi.dim()) throw input_error("point length differs from bracket dimension");
    std::vector<std::vector<double>> out(pi.dim(), std::vector<double>(pi.dim(), 0.0));
    for (const auto& [key, v] : pi.coeffs()) {
        double m = static_cast<double>(v);
        for (int k : key.second) m *= x[k];
        out[key.first[0]][key.first[1]] += m;
        out[key.first[1]][key.first[0]] -= m;
    }
    return out;
}

// pi^{ij}(u) for the algebra unit; zero for every multiplicative bracket.
inline ResidualReport unit_vanishing(const Algebra& alg, const QuadraticTensor& qt) {
    if (alg.dim() != qt.dim()) throw input_error("bracket dimension differs from algebra dimension");
    const Vector& u = alg.unit();
    auto values = evaluate(qt, u);
    ResidualReport report;
    for (int i = 0; i < qt.dim(); ++i)
        for (int j = i + 1; j < qt.dim(); ++j) {
            ++report.checked;
            report.add({i, j}, values[i][j]);
        }
    return report;
}

}  // namespace qpb
