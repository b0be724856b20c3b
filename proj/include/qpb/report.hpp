// Residual and validation reports shared by all checks.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qpb/rational.hpp"

namespace qpb {

// Outcome of an exact identity check: the list of nonzero residual
// coefficients, each tagged with the index tuple it belongs to.
// pass() iff the list is empty.
struct ResidualReport {
    std::vector<std::pair<std::vector<int>, Rational>> entries;
    long long checked = 0;
    std::uint64_t seed = 0;  // set when a randomized choice participated

    void add(std::vector<int> indices, Rational value) {
        if (value != 0) entries.emplace_back(std::move(indices), std::move(value));
    }
    bool pass() const { return entries.empty(); }
};

// Structure-constant validation: every violated identity with both sides.
struct ValidationReport {
    struct Violation {
        std::string kind;  // "associativity" | "unit-left" | "unit-right"
        std::vector<int> indices;
        Rational lhs;
        Rational rhs;
    };
    std::vector<Violation> violations;
    long long checked = 0;

    bool pass() const { return violations.empty(); }
};

}  // namespace qpb
