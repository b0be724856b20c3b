#include <catch2/catch_amalgamated.hpp>

#include "qpb/catalog.hpp"
#include "support.hpp"

using namespace qpb;

TEST_CASE("validate_algebra passes the worked examples", "[algebra]") {
    CHECK(validate_algebra(componentwise_algebra(2)).pass());
    CHECK(validate_algebra(quaternion_algebra()).pass());
}

TEST_CASE("validate_algebra pins the failing triple product", "[algebra]") {
    // e1 e1 = e2, e2 e1 = 0, e1 e2 = e1: then (e1 e1) e1 = 0 but e1 (e1 e1) = e1.
    Algebra bad("bad", 2,
                {{0, 0, 1, Rational(1)}, {1, 0, 0, Rational(0)}, {0, 1, 0, Rational(1)}});
    auto rep = validate_algebra(bad);
    REQUIRE_FALSE(rep.pass());
    bool found = false;
    for (const auto& v : rep.violations)
        if (v.kind == "associativity" && v.indices == std::vector<int>{0, 0, 0, 0} && v.lhs == 0 && v.rhs == 1)
            found = true;
    CHECK(found);
}

TEST_CASE("structure-table index out of range is an input error, not a failed check", "[algebra]") {
    CHECK_THROWS_AS(Algebra("oops", 2, {{0, 0, 2, Rational(1)}}), input_error);
    CHECK_THROWS_AS(Algebra("oops", 2, {{-1, 0, 0, Rational(1)}}), input_error);
}

TEST_CASE("multiply matches the defining tables", "[algebra]") {
    auto h = quaternion_algebra();
    // i j = k
    CHECK(multiply(h, basis_vector(4, 1), basis_vector(4, 2)) == basis_vector(4, 3));
    // u x = x for arbitrary x
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
        Vector x = support::random_vector(rng, 4);
        CHECK(multiply(h, h.unit(), x) == x);
        CHECK(multiply(h, x, h.unit()) == x);
    }
    auto ut = upper_triangular_algebra(2);  // basis e11, e12, e22
    CHECK(multiply(ut, basis_vector(3, 0), basis_vector(3, 1)) == basis_vector(3, 1));
    CHECK_THROWS_AS(multiply(h, Vector(3, Rational(1)), basis_vector(4, 0)), input_error);
}

TEST_CASE("multiply is associative on random triples over catalog algebras", "[algebra]") {
    std::mt19937_64 rng(13);
    for (const auto& alg : {quaternion_algebra(), matrix_algebra(2), upper_triangular_algebra(2),
                            componentwise_algebra(3), heisenberg_algebra(Rational(1))}) {
        for (int t = 0; t < 100; ++t) {
            Vector x = support::random_vector(rng, alg.dim());
            Vector y = support::random_vector(rng, alg.dim());
            Vector z = support::random_vector(rng, alg.dim());
            CHECK(multiply(alg, multiply(alg, x, y), z) == multiply(alg, x, multiply(alg, y, z)));
        }
    }
}

TEST_CASE("adjacent Lie structure", "[algebra]") {
    auto commutative = componentwise_algebra(3);
    CHECK(lie_structure(commutative).rows().empty());

    auto h = quaternion_algebra();
    auto lie = lie_structure(h);
    // [i, j] = 2k
    CHECK(lie.constant(1, 2, 3) == 2);
    CHECK(lie.constant(2, 1, 3) == -2);

    auto ut = upper_triangular_algebra(2);
    CHECK(lie_structure(ut).constant(0, 1, 1) == 1);  // [e11, e12] = e12

    // skewness and Jacobi on a random basis change of matrix(2)
    std::mt19937_64 rng(17);
    auto alg = support::random_basis_change(matrix_algebra(2), rng);
    auto l2 = lie_structure(alg);
    CHECK(lie_jacobi_residual(l2).pass());
    for (int i = 0; i < alg.dim(); ++i)
        for (int j = 0; j < alg.dim(); ++j)
            for (int k = 0; k < alg.dim(); ++k) CHECK(l2.constant(i, j, k) == -l2.constant(j, i, k));
}

TEST_CASE("find_unit solves the unit system and reports failure modes", "[algebra]") {
    auto sol = find_unit(componentwise_algebra(2));
    REQUIRE(sol.status == LinearSolution::Status::unique);
    CHECK(sol.solution == Vector{Rational(1), Rational(1)});

    // the Heisenberg product has no unit
    CHECK(find_unit(heisenberg_algebra(Rational(1))).status == LinearSolution::Status::none);

    auto m = find_unit(matrix_algebra(2));
    REQUIRE(m.status == LinearSolution::Status::unique);
    CHECK(m.solution == matrix_algebra(2).unit());
}

TEST_CASE("adjoin_unit produces a validated unital extension", "[algebra]") {
    auto ext = adjoin_unit(heisenberg_algebra(Rational(1)));
    CHECK(ext.dim() == 4);
    CHECK(validate_algebra(ext).pass());
    CHECK(multiply(ext, ext.unit(), basis_vector(4, 2)) == basis_vector(4, 2));
    // old product survives with shifted indices: p * q = z/2
    Vector pq = multiply(ext, basis_vector(4, 1), basis_vector(4, 2));
    CHECK(pq[3] == Rational(1, 2));
}
