// Floating-point sampling checks for the statements that are not polynomial
// identities in the exact engine: the invariant-field formula for the group
// bracket, the Poisson-map property of multiplication at sampled points, and
// the singular log-bracket example. Deterministic given the seed.
#pragma once

#include <cmath>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "qpb/numeric_plan.hpp"
#include "qpb/poly.hpp"

namespace qpb {

using BracketEvaluator = std::function<std::vector<std::vector<double>>(const std::vector<double>&)>;

namespace detail {

// Uniform doubles mapped from raw 53-bit draws; avoids the
// implementation-defined std::uniform_real_distribution.
inline double next_double(std::mt19937_64& rng, double lo, double hi) {
    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + u * (hi - lo);
}

inline std::vector<double> sample_point(std::mt19937_64& rng, int dim, const SamplePlan& plan) {
    std::vector<double> x(dim);
    for (auto& v : x) {
        do {
            v = next_double(rng, plan.lo, plan.hi);
        } while (plan.positive && v <= 1e-6);
    }
    return x;
}

inline double determinant(std::vector<std::vector<double>> m) {
    const int n = static_cast<int>(m.size());
    double det = 1.0;
    for (int c = 0; c < n; ++c) {
        int p = c;
        for (int i = c + 1; i < n; ++i)
            if (std::fabs(m[i][c]) > std::fabs(m[p][c])) p = i;
        if (m[p][c] == 0.0) return 0.0;
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (int i = c + 1; i < n; ++i) {
            double f = m[i][c] / m[c][c];
            for (int j = c; j < n; ++j) m[i][j] -= f * m[c][j];
        }
    }
    return det;
}

}  // namespace detail

// Left-multiplication operator L_x in the basis; column j is x e_j.
inline std::vector<std::vector<double>> left_multiplication(const Algebra& alg, const std::vector<double>& x) {
    const int n = alg.dim();
    std::vector<std::vector<double>> m(n, std::vector<double>(n, 0.0));
    for (int k = 0; k < n; ++k) {
        if (x[k] == 0.0) continue;
        for (int j = 0; j < n; ++j)
            for (const auto& [i, v] : alg.product(k, j)) m[i][j] += x[k] * static_cast<double>(v);
    }
    return m;
}

inline bool is_invertible(const Algebra& alg, const std::vector<double>& x, double threshold = 1e-12) {
    return std::fabs(detail::determinant(left_multiplication(alg, x))) > threshold;
}

// The invariant-field bracket r^{pq} ((x e_p) (x) (x e_q) - (e_p x) (x) (e_q x))
// with the left-invariant convention E_p(x) = x e_p.
inline std::vector<std::vector<double>> drinfeld_tensor(const Algebra& alg, const RMatrix& r,
                                                        const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != alg.dim()) throw input_error("point length differs from algebra dimension");
    if (!is_invertible(alg, x)) throw input_error("drinfeld tensor requested at a non-invertible point");
    const int n = alg.dim();
    // left[p] = x e_p, right[p] = e_p x
    std::vector<std::vector<double>> left(n, std::vector<double>(n, 0.0)), right = left;
    for (int p = 0; p < n; ++p)
        for (int k = 0; k < n; ++k) {
            if (x[k] == 0.0) continue;
            for (const auto& [i, v] : alg.product(k, p)) left[p][i] += x[k] * static_cast<double>(v);
            for (const auto& [i, v] : alg.product(p, k)) right[p][i] += x[k] * static_cast<double>(v);
        }
    std::vector<std::vector<double>> out(n, std::vector<double>(n, 0.0));
    for (const auto& [pq, rv] : r.tensor().coeffs()) {
        double w = static_cast<double>(rv);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                out[i][j] += w * (left[pq[0]][i] * left[pq[1]][j] - right[pq[0]][i] * right[pq[1]][j]);
    }
    return out;
}

struct DrinfeldReport {
    NumericReport base;
    double kappa = 0.0;           // fitted proportionality constant
    double kappa_variance = 0.0;  // across samples; convention-independent core
    bool pass = false;
};

// Measures the proportionality constant between the invariant-field bracket
// and the exact quadratic bracket at sampled invertible points. kappa is
// fitted, not assumed: only its constancy across samples is asserted.
inline DrinfeldReport drinfeld_proportionality(const Algebra& alg, const RMatrix& r, const QuadraticTensor& qt,
                                               const SamplePlan& plan) {
    plan.validate();
    DrinfeldReport report;
    std::mt19937_64 rng(plan.seed);
    std::vector<double> kappas;
    int accepted = 0;
    long guard = 0;
    while (accepted < plan.count) {
        if (++guard > 1000LL * plan.count) throw input_error("sampling produced too few invertible points");
        std::vector<double> x = detail::sample_point(rng, alg.dim(), plan);
        if (!is_invertible(alg, x)) continue;
        ++accepted;
        auto d = drinfeld_tensor(alg, r, x);
        auto p = evaluate(qt, x);
        double num = 0.0, den = 0.0;
        for (int i = 0; i < alg.dim(); ++i)
            for (int j = 0; j < alg.dim(); ++j) {
                num += d[i][j] * p[i][j];
                den += p[i][j] * p[i][j];
            }
        if (den == 0.0) continue;  // degenerate sample; keep it out of the fit
        double kappa = num / den;
        kappas.push_back(kappa);
        double mag = 0.0, res = 0.0;
        for (int i = 0; i < alg.dim(); ++i)
            for (int j = 0; j < alg.dim(); ++j) {
                mag = std::max(mag, std::fabs(d[i][j]));
                res = std::max(res, std::fabs(d[i][j] - kappa * p[i][j]));
            }
        report.base.record(res, mag, x);
        ++report.base.samples;
    }
    double mean = 0.0;
    for (double k : kappas) mean += k;
    mean /= static_cast<double>(kappas.size());
    double var = 0.0;
    for (double k : kappas) var += (k - mean) * (k - mean);
    var /= static_cast<double>(kappas.size());
    report.kappa = mean;
    report.kappa_variance = var;
    report.base.finish(plan.tolerance);
    report.pass = report.base.pass && var < 1e-18;
    return report;
}

// Residual of the compatibility identity
//   pi^{ij}(y z) = a_{pq}^i a_{st}^j (z^q z^t pi^{ps}(y) + y^p y^s pi^{qt}(z))
// at sampled invertible pairs, for an arbitrary coordinate bracket evaluator.
inline NumericReport group_multiplicativity_sample(const Algebra& alg, const BracketEvaluator& bracket,
                                                   const SamplePlan& plan) {
    plan.validate();
    NumericReport report;
    std::mt19937_64 rng(plan.seed);
    const int n = alg.dim();
    int accepted = 0;
    long guard = 0;
    while (accepted < plan.count) {
        if (++guard > 1000LL * plan.count)
            throw input_error("sampling produced no invertible pairs; range too degenerate");
        std::vector<double> y = detail::sample_point(rng, n, plan);
        std::vector<double> z = detail::sample_point(rng, n, plan);
        if (!is_invertible(alg, y) || !is_invertible(alg, z)) continue;
        ++accepted;
        std::vector<double> yz(n, 0.0);
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                for (const auto& [k, v] : alg.product(p, q)) yz[k] += y[p] * z[q] * static_cast<double>(v);
        auto pi_yz = bracket(yz);
        auto pi_y = bracket(y);
        auto pi_z = bracket(z);
        std::vector<double> sample = y;
        sample.insert(sample.end(), z.begin(), z.end());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double rhs = 0.0;
                for (int p = 0; p < n; ++p)
                    for (int q = 0; q < n; ++q) {
                        double apq = static_cast<double>(alg.structure_constant(p, q, i));
                        if (apq == 0.0) continue;
                        for (int s = 0; s < n; ++s)
                            for (int t = 0; t < n; ++t) {
                                double ast = static_cast<double>(alg.structure_constant(s, t, j));
                                if (ast == 0.0) continue;
                                rhs += apq * ast * (z[q] * z[t] * pi_y[p][s] + y[p] * y[s] * pi_z[q][t]);
                            }
                    }
                double lhs = pi_yz[i][j];
                report.record(std::fabs(lhs - rhs), std::max(std::fabs(lhs), std::fabs(rhs)), sample);
            }
        ++report.samples;
    }
    report.finish(plan.tolerance);
    return report;
}

inline BracketEvaluator make_poly_evaluator(const PolyTensor& pi) {
    return [pi](const std::vector<double>& x) { return evaluate(pi, x); };
}

// The singular bracket {f,g} = x y log|x| (df/dx dg/dy - df/dy dg/dx) on the
// componentwise plane; compatible with the multiplication although it is not
// polynomial (it is not even smooth at x = 0).
inline BracketEvaluator log_bracket_evaluator() {
    return [](const std::vector<double>& x) {
        if (x.size() != 2) throw input_error("log bracket lives on the componentwise plane");
        double v = x[0] * x[1] * std::log(std::fabs(x[0]));
        return std::vector<std::vector<double>>{{0.0, v}, {-v, 0.0}};
    };
}

// Pushforward of the log bracket through xi = log x, eta = log y must equal
// the linear bracket {xi, eta} = xi: (1/(xy)) * x y log x = log x.
inline NumericReport iso_pushforward_check(const SamplePlan& plan) {
    plan.validate();
    if (!plan.positive || plan.lo < 0.0) throw input_error("iso check samples must be positive");
    NumericReport report;
    std::mt19937_64 rng(plan.seed);
    for (int s = 0; s < plan.count; ++s) {
        std::vector<double> p = detail::sample_point(rng, 2, plan);
        double x = p[0], y = p[1];
        double pushed = (1.0 / x) * (1.0 / y) * (x * y * std::log(std::fabs(x)));
        double linear = std::log(x);  // xi at the image point
        report.record(std::fabs(pushed - linear), std::fabs(linear), p);
        ++report.samples;
    }
    report.finish(plan.tolerance);
    return report;
}

}  // namespace qpb
