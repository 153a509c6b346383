#include <doctest.h>

#include "coeffective/exterior.hpp"
#include "coeffective/matrix.hpp"
#include "coeffective/structures.hpp"
#include "support/oracle.hpp"
#include "support/random_forms.hpp"

using namespace coeffective;

TEST_CASE("rational string round trip") {
    CHECK(to_string(rat(3, 6)) == "1/2");
    CHECK(to_string(rat(-4, 2)) == "-2");
    CHECK(to_string(rat(0, 5)) == "0");
    CHECK(rational_from_string("7/3") == rat(7, 3));
    CHECK(rational_from_string("-5") == rat(-5));
    CHECK(rational_from_string("4/6") == rat(2, 3));
    CHECK_THROWS(rational_from_string(""));
    CHECK_THROWS(rational_from_string("x"));
}

TEST_CASE("rank basics") {
    CHECK(rank(Matrix::identity(2)) == 2);
    CHECK(rank(Matrix(3, 4)) == 0);
    Matrix prop(2, 2);  // proportional rows
    prop.set(0, 0, 1);
    prop.set(0, 1, 2);
    prop.set(1, 0, 2);
    prop.set(1, 1, 4);
    CHECK(rank(prop) == 1);
}

TEST_CASE("kernel basics") {
    CHECK(kernel_basis(Matrix::identity(3)).empty());

    Matrix row(1, 2);
    row.set(0, 0, 1);
    row.set(0, 1, 1);
    auto k = kernel_basis(row);
    REQUIRE(k.size() == 1);
    // canonical representative of the line through (1, -1)
    CHECK(k[0][0] == 1);
    CHECK(k[0][1] == -1);
}

TEST_CASE("kernel of J wedge on 2-forms of Q^4") {
    // expected count frozen from the naive oracle: the 1 x 6 wedge matrix has
    // rank 1, kernel dimension 5
    auto naive = oracle::naive_wedge_matrix(oracle::naive_std_symplectic(2), 4, 2, 2);
    REQUIRE(naive.size() == 1);
    REQUIRE(naive[0].size() == 6);
    CHECK(oracle::naive_rank(naive) == 1);

    Matrix w = wedge_map(standard_symplectic(2).F, 2);
    auto k = kernel_basis(w);
    CHECK(k.size() == 5);
    for (const auto& v : k) {
        for (const auto& x : w.apply(v)) CHECK(x == 0);
    }
}

TEST_CASE("quotient examples") {
    SUBCASE("ambient 3 by e1") {
        Vec e1{Rational(1), Rational(0), Rational(0)};
        auto q = quotient(3, {e1});
        CHECK(q.dim() == 2);
        CHECK(q.rep_coords == std::vector<int>{1, 2});
    }
    SUBCASE("full subspace leaves nothing") {
        auto q = quotient(2, {{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
        CHECK(q.dim() == 0);
    }
    SUBCASE("quotient of Lambda^2 Q^4 by the symplectic line") {
        Matrix w = wedge_map(standard_symplectic(2).F, 0);
        auto q = quotient(6, {w.column_vec(0)});
        CHECK(q.dim() == 5);
    }
}

TEST_CASE("subquotient invariants") {
    testsupport::Rng rng(2024);
    for (int trial = 0; trial < 25; ++trial) {
        int ambient = rng.integer(1, 8);
        int nsub = rng.integer(0, ambient);
        std::vector<Vec> sub;
        for (int i = 0; i < nsub; ++i) {
            Vec v(ambient);
            for (auto& x : v) x = rng.rational(-4, 4);
            sub.push_back(v);
        }
        auto q = quotient(ambient, sub);
        CHECK(static_cast<int>(q.sub_basis.size()) + q.dim() == ambient);

        // project . include = identity on representatives
        for (int j = 0; j < q.dim(); ++j) {
            Vec coords(q.dim(), Rational(0));
            coords[j] = 1;
            CHECK(q.project_vec(q.include(coords)) == coords);
        }
        // project annihilates the subspace
        for (const auto& s : q.sub_basis) {
            for (const auto& x : q.project_vec(s)) CHECK(x == 0);
        }
        // the projection matrix agrees with project_vec on a random vector
        Vec v(ambient);
        for (auto& x : v) x = rng.rational(-6, 6);
        CHECK(q.project.apply(v) == q.project_vec(v));
    }
}

TEST_CASE("solve basics and the wedge isomorphism strand") {
    SUBCASE("identity") {
        Vec b{rat(3), rat(-1, 2)};
        auto x = solve(Matrix::identity(2), b);
        REQUIRE(x.has_value());
        CHECK(*x == b);
    }
    SUBCASE("zero matrix, nonzero rhs") {
        Vec b{rat(1)};
        CHECK_FALSE(solve(Matrix(1, 2), b).has_value());
    }
    SUBCASE("J wedge from degree n-1 to n+1 is a solvable isomorphism") {
        for (int n : {2, 3}) {
            auto cal = standard_symplectic(n);
            Matrix iso = wedge_map(cal.F, n - 1);
            // the expected rank C(2n, n-1), computed independently
            auto naive = oracle::naive_wedge_matrix(oracle::naive_std_symplectic(n), 2 * n, n - 1, 2);
            int expected = oracle::naive_rank(naive);
            CHECK(expected == iso.cols());
            CHECK(rank(iso) == expected);

            testsupport::Rng rng(77 + n);
            Vec b(iso.rows());
            for (auto& x : b) x = rng.rational();
            auto x = solve(iso, b);
            REQUIRE(x.has_value());
            CHECK(iso.apply(*x) == b);
        }
    }
}

TEST_CASE("rank-nullity and solve round trip on random matrices") {
    testsupport::Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int rows = rng.integer(1, 9), cols = rng.integer(1, 9);
        Matrix m(rows, cols);
        int fill = rng.integer(0, rows * cols);
        for (int t = 0; t < fill; ++t)
            m.set(rng.integer(0, rows - 1), rng.integer(0, cols - 1), rng.rational(-5, 5));

        auto k = kernel_basis(m);
        CHECK(rank(m) + static_cast<int>(k.size()) == cols);
        for (const auto& v : k)
            for (const auto& x : m.apply(v)) CHECK(x == 0);

        // solve(m, m x) reproduces m x
        Vec x(cols);
        for (auto& v : x) v = rng.rational(-5, 5);
        Vec b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);

        // the component-split rank agrees with the naive oracle
        std::vector<std::vector<oracle::Q>> dense(rows, std::vector<oracle::Q>(cols, oracle::Q(0)));
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) dense[r][c] = m.get(r, c);
        CHECK(oracle::naive_rank(dense) == rank(m));
    }
}

TEST_CASE("degenerate shapes") {
    // zero matrix: kernel is the whole space, canonical basis is the identity
    auto k = kernel_basis(Matrix(3, 4));
    REQUIRE(k.size() == 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(k[i][j] == (i == j ? 1 : 0));
    // zero-row and zero-column matrices
    CHECK(rank(Matrix(0, 5)) == 0);
    CHECK(rank(Matrix(5, 0)) == 0);
    CHECK(kernel_basis(Matrix(0, 2)).size() == 2);
    auto x = solve(Matrix(0, 3), Vec{});
    REQUIRE(x.has_value());
    CHECK(x->size() == 3);
}

TEST_CASE("sparse elimination agrees with the naive oracle on larger matrices") {
    testsupport::Rng rng(2718);
    for (int trial = 0; trial < 6; ++trial) {
        int rows = rng.integer(30, 60), cols = rng.integer(30, 80);
        Matrix m(rows, cols);
        int fill = rows * cols / 10;
        for (int t = 0; t < fill; ++t)
            m.add(rng.integer(0, rows - 1), rng.integer(0, cols - 1), rng.rational(-3, 3));
        std::vector<std::vector<oracle::Q>> dense(rows, std::vector<oracle::Q>(cols, oracle::Q(0)));
        for (int c = 0; c < cols; ++c)
            for (int r = 0; r < rows; ++r) dense[r][c] = m.get(r, c);
        CHECK(rank(m) == oracle::naive_rank(dense));
    }
}

TEST_CASE("results are identical across repeated runs") {
    testsupport::Rng rng(5);
    Matrix m(6, 7);
    for (int t = 0; t < 20; ++t)
        m.set(rng.integer(0, 5), rng.integer(0, 6), rng.rational(-5, 5));
    auto k1 = kernel_basis(m);
    auto k2 = kernel_basis(m);
    CHECK(k1 == k2);
    auto q1 = quotient(7, k1);
    auto q2 = quotient(7, k2);
    CHECK(q1.rep_coords == q2.rep_coords);
    CHECK(q1.project == q2.project);
}
