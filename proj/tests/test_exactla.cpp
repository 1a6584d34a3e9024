#include <random>

#include <doctest.h>

#include "qred/matrix.hpp"
#include "support.hpp"

using namespace qred;

namespace {

Matrix q_matrix(std::size_t rows, std::size_t cols, std::vector<long> entries, Field f = Field::rational()) {
    std::vector<Scalar> s;
    for (long e : entries)
        s.push_back(f.from_int(e));
    return Matrix(f, rows, cols, s);
}

Matrix random_matrix(const Field &f, std::size_t rows, std::size_t cols, std::mt19937_64 &rng) {
    Matrix m(f, rows, cols);
    for (std::size_t c = 0; c < cols; ++c)
        m.set_column(c, testing::random_vec(f, rows, rng));
    return m;
}

} // namespace

TEST_CASE("field arithmetic is exact and canonical") {
    Field q = Field::rational();
    CHECK(q.add(q.from_fraction(1, 3), q.from_fraction(1, 6)) == Scalar(1, 2));
    CHECK(q.format(q.from_fraction(-2, 4)) == "-1/2");

    Field f7 = Field::prime(7);
    CHECK(f7.from_int(-1) == 6);
    CHECK(f7.mul(f7.from_int(3), f7.inv(f7.from_int(3))) == 1);
    CHECK(f7.from_fraction(1, 2) == 4);
    CHECK(f7.name() == "gf 7");
    CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
}

TEST_CASE("rref of small matrices") {
    auto id = rref(Matrix::identity(Field::rational(), 2));
    CHECK(id.rank == 2);
    CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(id.reduced == Matrix::identity(Field::rational(), 2));

    auto prop = rref(q_matrix(2, 2, {1, 2, 2, 4}));
    CHECK(prop.rank == 1);
    CHECK(prop.reduced == q_matrix(2, 2, {1, 2, 0, 0}));

    Field f2 = Field::prime(2);
    auto mod2 = rref(q_matrix(2, 2, {1, 1, 1, 1}, f2));
    CHECK(mod2.rank == 1);
    CHECK(mod2.reduced == q_matrix(2, 2, {1, 1, 0, 0}, f2));
}

TEST_CASE("kernel bases") {
    CHECK(kernel_basis(Matrix::identity(Field::rational(), 3)).cols() == 0);

    Matrix k = kernel_basis(q_matrix(1, 2, {1, -1}));
    REQUIRE(k.cols() == 1);
    CHECK(k(0, 0) == k(1, 0));

    Matrix k2 = kernel_basis(q_matrix(2, 2, {1, 2, 2, 4}));
    REQUIRE(k2.cols() == 1);
    CHECK(k2(0, 0) == -2 * k2(1, 0));
}

TEST_CASE("solve") {
    Matrix rhs = q_matrix(2, 1, {5, -3});
    auto x = solve(Matrix::identity(Field::rational(), 2), rhs);
    REQUIRE(x);
    CHECK(*x == rhs);

    auto zero = solve(q_matrix(1, 2, {1, 1}), q_matrix(1, 1, {0}));
    REQUIRE(zero);
    CHECK(zero->is_zero());

    CHECK_FALSE(solve(q_matrix(2, 2, {1, 2, 2, 4}), q_matrix(2, 1, {1, 1})));
}

TEST_CASE("quotient maps and echelon bases") {
    Field q = Field::rational();
    QuotientMap qm(q_matrix(3, 1, {1, 1, 0}));
    CHECK(qm.quotient_dim() == 2);
    CHECK(qm.contains({q.from_int(2), q.from_int(2), q.from_int(0)}));
    CHECK_FALSE(qm.contains({q.from_int(1), q.from_int(0), q.from_int(0)}));

    EchelonBasis e(q, 3);
    CHECK(e.add({q.from_int(1), q.from_int(2), q.from_int(0)}));
    CHECK(e.add({q.from_int(0), q.from_int(1), q.from_int(1)}));
    CHECK_FALSE(e.add({q.from_int(1), q.from_int(3), q.from_int(1)}));
    CHECK(e.size() == 2);
}

TEST_CASE("rref idempotence, rank-nullity and solve exactness on random matrices") {
    std::mt19937_64 rng(11);
    for (Field f : {Field::rational(), Field::prime(5)}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t rows = rng() % 6 + 1, cols = rng() % 6 + 1;
            Matrix m = random_matrix(f, rows, cols, rng);
            auto r = rref(m);
            CHECK(rref(r.reduced).reduced == r.reduced);
            Matrix k = kernel_basis(m);
            CHECK(r.rank + k.cols() == cols);
            CHECK((m * k).is_zero());

            Matrix rhs = m * random_matrix(f, cols, 1, rng);
            auto x = solve(m, rhs);
            REQUIRE(x);
            CHECK(m * *x == rhs);

            if (rows == cols && is_invertible(m))
                CHECK(m * inverse(m) == Matrix::identity(f, rows));
        }
    }
}
