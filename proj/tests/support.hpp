// Seeded random generators for property tests: rationals, vectors,
// r-matrices, quadratic tensors, and random unital algebras produced by
// exact basis changes of known associative algebras.
#pragma once

#include <random>
#include <vector>

#include "qpb/catalog.hpp"

namespace support {

using qpb::Algebra;
using qpb::QuadraticTensor;
using qpb::Rational;
using qpb::RMatrix;
using qpb::Vector;

inline Rational random_rational(std::mt19937_64& rng, int span = 4, int max_den = 3) {
    long num = static_cast<long>(rng() % (2 * span + 1)) - span;
    long den = 1 + static_cast<long>(rng() % max_den);
    return Rational(num, den);
}

inline Vector random_vector(std::mt19937_64& rng, int dim) {
    Vector v(dim);
    for (auto& x : v) x = random_rational(rng);
    return v;
}

inline RMatrix random_rmatrix(std::mt19937_64& rng, int dim) {
    std::vector<std::tuple<int, int, Rational>> upper;
    for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) {
            Rational v = random_rational(rng);
            if (v != 0) upper.emplace_back(i, j, v);
        }
    return RMatrix::from_upper(dim, upper);
}

inline QuadraticTensor random_quadratic(std::mt19937_64& rng, int dim, int entries = 6) {
    std::vector<qpb::RawPolyEntry> raw;
    for (int t = 0; t < entries; ++t) {
        int i = static_cast<int>(rng() % dim);
        int j = static_cast<int>(rng() % dim);
        int k = static_cast<int>(rng() % dim);
        int l = static_cast<int>(rng() % dim);
        raw.push_back({i, j, {k, l}, random_rational(rng)});
    }
    return qpb::quadratic_tensor(dim, raw);
}

// Truncated polynomials Q[t]/(t^n): e_i e_j = e_{i+j} when i+j < n.
inline Algebra truncated_polynomials(int n) {
    std::vector<qpb::StructureEntry> e;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) e.push_back({i, j, i + j, Rational(1)});
    Vector unit(n, Rational(0));
    unit[0] = 1;
    return Algebra("trunc_poly(" + std::to_string(n) + ")", n, e, unit);
}

inline std::vector<Algebra> unital_pool_dim_le_4() {
    return {
        qpb::componentwise_algebra(2), qpb::componentwise_algebra(3), qpb::componentwise_algebra(4),
        qpb::dual_numbers_algebra(),   qpb::upper_triangular_algebra(2), qpb::matrix_algebra(2),
        qpb::quaternion_algebra(),     truncated_polynomials(3),          truncated_polynomials(4),
    };
}

// Exact change of basis e'_i = sum_p T[i][p] e_p with random invertible
// integer T: a'_{ij}^k = T[i][p] T[j][q] a_{pq}^r (T^{-1})[r][k], and the
// unit transported the same way.
inline Algebra random_basis_change(const Algebra& alg, std::mt19937_64& rng) {
    const int n = alg.dim();
    std::vector<Vector> t(n, Vector(n, Rational(0)));
    std::vector<Vector> minv(n, Vector(n, Rational(0)));  // rows of T^{-1}
    while (true) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) t[i][j] = Rational(static_cast<long>(rng() % 5) - 2);
        // row k of T^{-1} solves T^T x = e_k
        bool ok = true;
        for (int k = 0; k < n && ok; ++k) {
            std::vector<Vector> rows(n, Vector(n, Rational(0)));
            Vector rhs(n, Rational(0));
            rhs[k] = 1;
            for (int r = 0; r < n; ++r)
                for (int c = 0; c < n; ++c) rows[r][c] = t[c][r];
            auto sol = qpb::solve_linear(rows, rhs);
            ok = sol.status == qpb::LinearSolution::Status::unique;
            if (ok) minv[k] = sol.solution;
        }
        if (ok) break;
    }
    std::vector<qpb::StructureEntry> entries;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vector image(n, Rational(0));  // e'_i e'_j in the old basis
            for (int p = 0; p < n; ++p) {
                if (t[i][p] == 0) continue;
                for (int q = 0; q < n; ++q) {
                    if (t[j][q] == 0) continue;
                    Rational f = t[i][p] * t[j][q];
                    for (const auto& [r, v] : alg.product(p, q)) image[r] += f * v;
                }
            }
            for (int k = 0; k < n; ++k) {
                Rational c(0);
                for (int r = 0; r < n; ++r) c += image[r] * minv[r][k];
                if (c != 0) entries.push_back({i, j, k, c});
            }
        }
    std::optional<Vector> unit;
    if (alg.has_unit()) {
        Vector u(n, Rational(0));
        for (int k = 0; k < n; ++k)
            for (int m = 0; m < n; ++m) u[k] += alg.unit()[m] * minv[m][k];
        unit = std::move(u);
    }
    return Algebra(alg.name() + "'", n, entries, std::move(unit));
}

inline Algebra random_unital_algebra(std::mt19937_64& rng) {
    auto pool = unital_pool_dim_le_4();
    const Algebra& base = pool[rng() % pool.size()];
    return random_basis_change(base, rng);
}

}  // namespace support
