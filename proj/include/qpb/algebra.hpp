// Finite-dimensional associative algebras over Q.
//
// An algebra is a dimension n, a sparse table of structure constants
// a_{ij}^k (so e_i e_j = a_{ij}^k e_k), an optional unit vector and optional
// basis labels. Everything downstream (tensor squares and cubes, brackets,
// r-matrices) is driven by this table. All types here are immutable after
// construction and all operations are pure.
#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qpb/rational.hpp"
#include "qpb/report.hpp"

namespace qpb {

using Vector = std::vector<Rational>;

// One structure-constant entry a_{ij}^k = value.
struct StructureEntry {
    int i, j, k;
    Rational value;
};

class Algebra {
public:
    Algebra(std::string name, int dim, const std::vector<StructureEntry>& entries,
            std::optional<Vector> unit = std::nullopt, std::vector<std::string> labels = {})
        : name_(std::move(name)), dim_(dim), unit_(std::move(unit)), labels_(std::move(labels)) {
        if (dim_ < 1) throw input_error("algebra dimension must be >= 1");
        if (!labels_.empty() && static_cast<int>(labels_.size()) != dim_)
            throw input_error("label list length differs from dimension");
        if (unit_ && static_cast<int>(unit_->size()) != dim_)
            throw input_error("unit vector length differs from dimension");
        std::map<std::array<int, 3>, Rational> acc;
        for (const auto& e : entries) {
            if (e.i < 0 || e.i >= dim_ || e.j < 0 || e.j >= dim_ || e.k < 0 || e.k >= dim_)
                throw input_error("structure-constant index out of range in algebra '" + name_ + "'");
            acc[{e.i, e.j, e.k}] += e.value;
        }
        for (const auto& [idx, v] : acc)
            if (v != 0) table_[{idx[0], idx[1]}].emplace_back(idx[2], v);
    }

    const std::string& name() const { return name_; }
    int dim() const { return dim_; }
    bool has_unit() const { return unit_.has_value(); }
    const Vector& unit() const {
        if (!unit_) throw input_error("algebra '" + name_ + "' has no unit");
        return *unit_;
    }
    const std::vector<std::string>& labels() const { return labels_; }

    // e_i e_j as a sparse vector of (k, a_{ij}^k); empty when the product is 0.
    const std::vector<std::pair<int, Rational>>& product(int i, int j) const {
        auto it = table_.find({i, j});
        return it == table_.end() ? empty_ : it->second;
    }

    Rational structure_constant(int i, int j, int k) const {
        for (const auto& [m, v] : product(i, j))
            if (m == k) return v;
        return Rational(0);
    }

    // All nonzero entries in lexicographic (i,j,k) order; used for emission.
    std::vector<StructureEntry> entries() const {
        std::vector<StructureEntry> out;
        for (const auto& [ij, row] : table_)
            for (const auto& [k, v] : row) out.push_back({ij[0], ij[1], k, v});
        return out;
    }

    int label_index(const std::string& label) const {
        for (int i = 0; i < static_cast<int>(labels_.size()); ++i)
            if (labels_[i] == label) return i;
        throw input_error("unknown basis label '" + label + "' in algebra '" + name_ + "'");
    }

private:
    std::string name_;
    int dim_;
    std::map<std::array<int, 2>, std::vector<std::pair<int, Rational>>> table_;
    std::optional<Vector> unit_;
    std::vector<std::string> labels_;
    inline static const std::vector<std::pair<int, Rational>> empty_{};
};

// (xy)^k = a_{ij}^k x^i y^j, exactly.
inline Vector multiply(const Algebra& alg, const Vector& x, const Vector& y) {
    if (static_cast<int>(x.size()) != alg.dim() || static_cast<int>(y.size()) != alg.dim())
        throw input_error("vector length differs from algebra dimension");
    Vector out(alg.dim(), Rational(0));
    for (int i = 0; i < alg.dim(); ++i) {
        if (x[i] == 0) continue;
        for (int j = 0; j < alg.dim(); ++j) {
            if (y[j] == 0) continue;
            Rational f = x[i] * y[j];
            for (const auto& [k, v] : alg.product(i, j)) out[k] += f * v;
        }
    }
    return out;
}

inline Vector basis_vector(int dim, int i) {
    Vector v(dim, Rational(0));
    v[i] = 1;
    return v;
}

// Exhaustive associativity and unit check. Violations carry the index tuple
// and both sides so failures are reproducible by hand.
inline ValidationReport validate_algebra(const Algebra& alg) {
    ValidationReport report;
    const int n = alg.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                // (e_i e_j) e_k  vs  e_i (e_j e_k), componentwise over l
                Vector lhs(n, Rational(0)), rhs(n, Rational(0));
                for (const auto& [m, v] : alg.product(i, j))
                    for (const auto& [l, w] : alg.product(m, k)) lhs[l] += v * w;
                for (const auto& [m, v] : alg.product(j, k))
                    for (const auto& [l, w] : alg.product(i, m)) rhs[l] += v * w;
                for (int l = 0; l < n; ++l) {
                    ++report.checked;
                    if (lhs[l] != rhs[l])
                        report.violations.push_back({"associativity", {i, j, k, l}, lhs[l], rhs[l]});
                }
            }
    if (alg.has_unit()) {
        const Vector& u = alg.unit();
        for (int i = 0; i < n; ++i) {
            Vector left = multiply(alg, u, basis_vector(n, i));
            Vector right = multiply(alg, basis_vector(n, i), u);
            for (int j = 0; j < n; ++j) {
                Rational expect = (i == j) ? 1 : 0;
                ++report.checked;
                if (left[j] != expect) report.violations.push_back({"unit-left", {i, j}, left[j], expect});
                ++report.checked;
                if (right[j] != expect) report.violations.push_back({"unit-right", {i, j}, right[j], expect});
            }
        }
    }
    return report;
}

// Skew structure constants of a Lie algebra, stored for i < j only.
class LieStructure {
public:
    LieStructure(int dim, std::map<std::array<int, 2>, std::vector<std::pair<int, Rational>>> rows)
        : dim_(dim), rows_(std::move(rows)) {}

    int dim() const { return dim_; }

    // [e_i, e_j] as sparse (k, l_{ij}^k); sign handled for any index order.
    std::vector<std::pair<int, Rational>> bracket(int i, int j) const {
        if (i == j) return {};
        bool flip = i > j;
        auto it = rows_.find({std::min(i, j), std::max(i, j)});
        if (it == rows_.end()) return {};
        if (!flip) return it->second;
        auto row = it->second;
        for (auto& [k, v] : row) v = -v;
        return row;
    }

    Rational constant(int i, int j, int k) const {
        for (const auto& [m, v] : bracket(i, j))
            if (m == k) return v;
        return Rational(0);
    }

    const std::map<std::array<int, 2>, std::vector<std::pair<int, Rational>>>& rows() const { return rows_; }

private:
    int dim_;
    std::map<std::array<int, 2>, std::vector<std::pair<int, Rational>>> rows_;
};

// Jacobi residual sum_m (l_{ij}^m l_{mk}^p + l_{jk}^m l_{mi}^p + l_{ki}^m l_{mj}^p).
inline ResidualReport lie_jacobi_residual(const LieStructure& lie) {
    ResidualReport report;
    const int n = lie.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vector res(n, Rational(0));
                auto cyc = [&](int a, int b, int c) {
                    for (const auto& [m, v] : lie.bracket(a, b))
                        for (const auto& [p, w] : lie.bracket(m, c)) res[p] += v * w;
                };
                cyc(i, j, k);
                cyc(j, k, i);
                cyc(k, i, j);
                for (int p = 0; p < n; ++p) {
                    ++report.checked;
                    report.add({i, j, k, p}, res[p]);
                }
            }
    return report;
}

// Adjacent Lie algebra A_L: l_{ij}^k = a_{ij}^k - a_{ji}^k. Skewness holds by
// construction; the Jacobi identity follows from associativity but is
// asserted anyway.
inline LieStructure lie_structure(const Algebra& alg) {
    std::map<std::array<int, 2>, std::vector<std::pair<int, Rational>>> rows;
    const int n = alg.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            std::map<int, Rational> acc;
            for (const auto& [k, v] : alg.product(i, j)) acc[k] += v;
            for (const auto& [k, v] : alg.product(j, i)) acc[k] -= v;
            std::vector<std::pair<int, Rational>> row;
            for (const auto& [k, v] : acc)
                if (v != 0) row.emplace_back(k, v);
            if (!row.empty()) rows[{i, j}] = std::move(row);
        }
    LieStructure lie(n, std::move(rows));
    if (!lie_jacobi_residual(lie).pass())
        throw input_error("adjacent Lie structure of '" + alg.name() + "' violates Jacobi; algebra not associative?");
    return lie;
}

// Exact Gaussian elimination for the small systems this library needs.
struct LinearSolution {
    enum class Status { unique, none, underdetermined } status;
    Vector solution;  // valid when status != none (any solution if underdetermined)
};

inline LinearSolution solve_linear(std::vector<Vector> a, Vector b) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (a[i][c] != 0) {
                p = i;
                break;
            }
        if (p < 0) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rational inv = a[r][c];
        for (int cc = c; cc < cols; ++cc) a[r][cc] /= inv;
        b[r] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (int cc = c; cc < cols; ++cc) a[i][cc] -= f * a[r][cc];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (int i = r; i < rows; ++i)
        if (b[i] != 0) return {LinearSolution::Status::none, {}};
    Vector x(cols, Rational(0));
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i) x[pivot_col[i]] = b[i];
    auto status = static_cast<int>(pivot_col.size()) == cols ? LinearSolution::Status::unique
                                                             : LinearSolution::Status::underdetermined;
    return {status, std::move(x)};
}

// Solves u e_i = e_i u = e_i for all i. The unit is never inferred silently:
// callers decide what to do with the result.
inline LinearSolution find_unit(const Algebra& alg) {
    const int n = alg.dim();
    std::vector<Vector> rows;
    Vector rhs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vector left(n, Rational(0)), right(n, Rational(0));
            for (int k = 0; k < n; ++k) {
                left[k] = alg.structure_constant(k, i, j);
                right[k] = alg.structure_constant(i, k, j);
            }
            rows.push_back(std::move(left));
            rhs.push_back(i == j ? 1 : 0);
            rows.push_back(std::move(right));
            rhs.push_back(i == j ? 1 : 0);
        }
    return solve_linear(std::move(rows), std::move(rhs));
}

// A -> <1> (+) A with a formal unit in slot 0. Used for the non-unital
// catalog algebras before any construction that pads tensor legs with u.
inline Algebra adjoin_unit(const Algebra& alg) {
    const int n = alg.dim();
    std::vector<StructureEntry> entries;
    entries.push_back({0, 0, 0, Rational(1)});
    for (int i = 0; i < n; ++i) {
        entries.push_back({0, i + 1, i + 1, Rational(1)});
        entries.push_back({i + 1, 0, i + 1, Rational(1)});
    }
    for (const auto& e : alg.entries()) entries.push_back({e.i + 1, e.j + 1, e.k + 1, e.value});
    Vector unit(n + 1, Rational(0));
    unit[0] = 1;
    std::vector<std::string> labels;
    if (!alg.labels().empty()) {
        labels.push_back("1");
        labels.insert(labels.end(), alg.labels().begin(), alg.labels().end());
    }
    return Algebra(alg.name() + "+unit", n + 1, entries, std::move(unit), std::move(labels));
}

}  // namespace qpb
