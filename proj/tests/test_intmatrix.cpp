#include "brauerk3/intmatrix.hpp"

#include <doctest.h>

#include <random>

using namespace brauerk3;

TEST_CASE("Smith invariants of small matrices") {
    CHECK(smith_invariants(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}}) == std::vector<Int>{2, 6, 12});
    CHECK(smith_invariants(IntMatrix{{2, 0}, {0, 3}}) == std::vector<Int>{1, 6});
    CHECK(smith_invariants(IntMatrix{{0, 0}, {0, 0}}).empty());
    CHECK(smith_invariants(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == std::vector<Int>{1, 3});
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("determinant and Smith invariants agree in absolute value") {
    std::mt19937 rng(1);
    std::uniform_int_distribution<long> d(-9, 9);
    for (int i = 0; i < 300; ++i) {
        IntMatrix m(4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(r, c) = d(rng);
        auto inv = smith_invariants(m);
        Int prod = 1;
        for (std::size_t k = 0; k < inv.size(); ++k) {
            prod *= inv[k];
            if (k > 0) CHECK(inv[k] % inv[k - 1] == 0);
        }
        Int det = determinant(m);
        if (inv.size() < 4) {
            CHECK(det == 0);
        } else {
            CHECK(abs(det) == prod);
        }
        CHECK(determinant(m.transpose()) == det);
    }
    CHECK(determinant(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(IntMatrix{{-2, -1}, {1, -1}}) == 3);
}

TEST_CASE("integer kernels are saturated bases") {
    IntMatrix a{{2, 4, 6}};
    IntMatrix k = integer_kernel(a);
    CHECK(k.cols() == 2);
    CHECK(is_saturated(k));
    for (std::size_t j = 0; j < k.cols(); ++j) {
        auto v = a * k.column(j);
        CHECK(v[0] == 0);
    }
    // (1, 1, -1) is in the kernel and must be an integral combination.
    CHECK(solve_in_basis(k, IntVector{1, 1, -1}).has_value());

    std::mt19937 rng(2);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int i = 0; i < 200; ++i) {
        IntMatrix m(2, 4);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(r, c) = d(rng);
        IntMatrix ker = integer_kernel(m);
        CHECK(ker.cols() == 4 - rank(m));
        CHECK(is_saturated(ker));
        CHECK((m * ker) == IntMatrix(2, ker.cols()));
    }
}

TEST_CASE("solve_in_basis") {
    IntMatrix basis = IntMatrix::from_columns({{1, 0, 1}, {0, 2, 0}});
    auto x = solve_in_basis(basis, IntVector{3, 4, 3});
    REQUIRE(x);
    CHECK(*x == IntVector{3, 2});
    CHECK_FALSE(solve_in_basis(basis, IntVector{0, 1, 0}));  // half-integral
    CHECK_FALSE(solve_in_basis(basis, IntVector{1, 0, 0}));  // outside the span
    CHECK_FALSE(is_saturated(basis));
}

TEST_CASE("matrix arithmetic") {
    IntMatrix r{{0, -1}, {1, -1}};
    CHECK(r.pow(3) == IntMatrix::identity(2));
    CHECK((r + r).to_string() == "[[0, -2], [2, -2]]");
    CHECK((r - r) == IntMatrix(2, 2));
    CHECK(r.transpose() == IntMatrix{{0, 1}, {-1, -1}});
}
