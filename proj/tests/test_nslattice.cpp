#include "brauerk3/error.hpp"
#include "brauerk3/nslattice.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace brauerk3;

namespace {

std::vector<EndomorphismRing> all_rings() {
    std::vector<EndomorphismRing> rings = {EndomorphismRing::non_cm()};
    for (long c = -20; c <= 20; ++c)
        for (long d = 1; d <= 20; ++d)
            if (c * c - 4 * d < 0) rings.push_back(EndomorphismRing::imaginary(c, d));
    return rings;
}

KaniClass random_class(std::mt19937& rng, const EndomorphismRing& ring) {
    std::uniform_int_distribution<long> d(-50, 50);
    return {d(rng), d(rng), {d(rng), ring.cm ? d(rng) : 0}};
}

IntVector e4(long a, long b, long u, long v) { return {a, b, u, v}; }

}  // namespace

TEST_CASE("endomorphism arithmetic") {
    auto ring = EndomorphismRing::imaginary(1, 1);  // alpha = w
    EndElement alpha{0, 1};
    CHECK(dual(alpha, ring) == EndElement{-1, -1});
    CHECK(degree(alpha, ring) == 1);
    CHECK(multiply(alpha, alpha, ring) == EndElement{-1, -1});
    CHECK(degree(EndElement{2, 0}, ring) == 4);
    CHECK_THROWS_AS(EndomorphismRing::imaginary(3, 2), Error);
    CHECK_THROWS_AS(EndomorphismRing::imaginary(2, 1), Error);
    std::mt19937 rng(4);
    for (const auto& r : all_rings()) {
        for (int i = 0; i < 5; ++i) {
            auto f = random_class(rng, r).f, g = random_class(rng, r).f;
            CHECK(degree(multiply(f, g, r), r) == degree(f, r) * degree(g, r));
            CHECK(dual(dual(f, r), r) == f);
            CHECK(degree(f, r) >= 0);
        }
    }
}

TEST_CASE("Kani coordinates and the pairing") {
    auto ring = EndomorphismRing::imaginary(1, 1);
    auto e = kani_e(), ep = kani_e_prime();
    CHECK(intersection_pairing(e, ep, ring) == 1);
    CHECK(intersection_pairing(e, e, ring) == 0);
    CHECK(intersection_pairing(ep, ep, ring) == 0);
    auto diag = graph({1, 0}, ring);
    CHECK(diag == KaniClass{1, 1, {1, 0}});
    CHECK(intersection_pairing(diag, diag, ring) == 0);
    CHECK(graph({0, 0}, ring) == e);
    auto g2 = graph({2, 0}, ring);
    CHECK(intersection_pairing(g2, ep, ring) == 1);  // one point over each fiber of the first factor
    CHECK(intersection_pairing(g2, e, ring) == 4);   // deg f points over each fiber of the second
    CHECK(intersection_pairing(g2, g2, ring) == 0);
}

TEST_CASE("inverse graphs") {
    auto ring = EndomorphismRing::imaginary(1, 1);
    CHECK(inverse_graph({1, 0}, ring) == KaniClass{1, 1, {1, 0}});
    CHECK(inverse_graph({2, 0}, ring) == KaniClass{4, 1, {2, 0}});
    CHECK(inverse_graph({0, 1}, ring) == KaniClass{1, 1, {-1, -1}});
    CHECK_THROWS_AS(inverse_graph({0, 0}, ring), Error);

    std::mt19937 rng(8);
    for (const auto& r : all_rings()) {
        for (int i = 0; i < 5; ++i) {
            auto f = random_class(rng, r).f;
            if (f.is_zero()) continue;
            // the graph of f read on E2 x E1, pulled back by the swap
            CHECK(inverse_graph(f, r) == swap_factors(graph(f, r), r));
            // Gamma_f^-1 = Gamma_{f dual} + (deg f - 1)(e - e')
            CHECK(inverse_graph(f, r) == graph(dual(f, r), r) + (degree(f, r) - 1) * (kani_e() - kani_e_prime()));
            auto x = random_class(rng, r);
            CHECK(swap_factors(swap_factors(x, r), r) == x);
            CHECK(intersection_pairing(swap_factors(x, r), swap_factors(x, r), r) == intersection_pairing(x, x, r));
        }
    }
}

TEST_CASE("rho action columns") {
    auto ring = EndomorphismRing::imaginary(1, 1);
    auto rho = rho_action(ring);
    CHECK(rho.matrix.column(0) == e4(1, 1, -1, 0));
    CHECK(rho.matrix.column(1) == e4(1, 0, 0, 0));
    CHECK(rho.matrix.column(2) == e4(2, 0, -1, 0));
    CHECK(rho.matrix.column(3) == e4(-1, 0, 1, 1));
    CHECK(rho.matrix.pow(3) == IntMatrix::identity(4));
    auto n = norm_map(rho);
    CHECK(n * e4(0, 1, 0, 0) == e4(2, 2, -1, 0));
    CHECK_THROWS_AS(rho_action(EndomorphismRing{true, 2, 1}), Error);
}

TEST_CASE("rho columns follow from the inverse-graph lemma") {
    // rho(0,0,f) = rho(-e) + rho(-deg f e') + class of rho*(Gamma_f), with
    // rho*(Gamma_f) the inverse graph of -1 - f.
    for (const auto& ring : all_rings()) {
        auto rho = rho_action(ring);
        auto derive = [&](const EndElement& f) {
            KaniClass minus_e = Int(-1) * rho.apply(kani_e());
            KaniClass minus_ep = Int(-degree(f, ring)) * rho.apply(kani_e_prime());
            EndElement g{-1 - f.u, -f.v};
            return minus_e + minus_ep + inverse_graph(g, ring);
        };
        CHECK(rho.apply(kani_e()) == KaniClass{1, 1, {-1, 0}});
        CHECK(rho.apply(kani_e_prime()) == kani_e());
        CHECK(rho.apply({0, 0, {1, 0}}) == derive({1, 0}));
        if (ring.cm) CHECK(rho.apply({0, 0, {0, 1}}) == derive({0, 1}));
    }
}

TEST_CASE("rho has order three and is an isometry") {
    std::mt19937 rng(6);
    for (const auto& ring : all_rings()) {
        auto rho = rho_action(ring);
        REQUIRE(rho.matrix.pow(3) == IntMatrix::identity(ring.lattice_rank()));
        auto g = gram_matrix(ring);
        REQUIRE(rho.matrix.transpose() * g * rho.matrix == g);
    }
    for (const auto& ring : {EndomorphismRing::non_cm(), EndomorphismRing::imaginary(1, 1),
                             EndomorphismRing::imaginary(0, 1), EndomorphismRing::imaginary(-3, 7)}) {
        auto rho = rho_action(ring);
        for (int i = 0; i < 500; ++i) {
            auto x = random_class(rng, ring), y = random_class(rng, ring);
            REQUIRE(intersection_pairing(rho.apply(x), rho.apply(y), ring) == intersection_pairing(x, y, ring));
        }
    }
}

TEST_CASE("H1 of the rho action vanishes") {
    for (const auto& ring : all_rings()) {
        auto rho = rho_action(ring);
        auto h1 = cyclic_h1(rho);
        REQUIRE(h1.trivial());
        REQUIRE(h1.kernel_rank == 2);
        REQUIRE(h1.image_rank == 2);
        auto image = coboundaries(rho);
        CHECK(rank(image) == 2);
        CHECK(is_saturated(image));
        // N(0,0,alpha) = (-c, -c, 3 alpha + 2c)
        if (ring.cm) {
            const long c = ring.c.get_si();
            CHECK(norm_map(rho) * e4(0, 0, 0, 1) == e4(-c, -c, 2 * c, 3));
            auto gens = IntMatrix::from_columns({e4(0, 1, -1, 0), e4(1, 0, -1, 0)});
            for (std::size_t j = 0; j < 4; ++j) CHECK(solve_in_basis(gens, image.column(j)).has_value());
        }
    }
    CHECK(cyclic_h1(rho_action(EndomorphismRing::imaginary(1, 1))).to_string() ==
          "H1 trivial; image rank 2; kernel rank 2");
}

TEST_CASE("cyclic H1 agrees with block structure and coset counting") {
    // Z with trivial action, Z[zeta_3] and the regular representation Z[C3]
    // have H1 = 0, Z/3 and 0.
    const IntMatrix zeta{{0, -1}, {1, -1}};
    const IntMatrix regular{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
    struct Block {
        IntMatrix m;
        int threes;
    };
    const std::vector<Block> blocks = {{IntMatrix{{1}}, 0}, {zeta, 1}, {regular, 0}};

    std::mt19937 rng(10);
    std::uniform_int_distribution<std::size_t> pick(0, 2);
    std::uniform_int_distribution<long> small(-1, 1);
    int nontrivial = 0;
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<const Block*> chosen;
        std::size_t n = 0;
        int threes = 0;
        while (true) {
            const Block& b = blocks[pick(rng)];
            if (n + b.m.rows() > 4) break;
            chosen.push_back(&b);
            n += b.m.rows();
            threes += b.threes;
        }
        IntMatrix r(n, n);
        std::size_t off = 0;
        for (const auto* b : chosen) {
            for (std::size_t i = 0; i < b->m.rows(); ++i)
                for (std::size_t j = 0; j < b->m.cols(); ++j) r(off + i, off + j) = b->m(i, j);
            off += b->m.rows();
        }
        if (r == IntMatrix::identity(n)) continue;

        // conjugate by a random unimodular upper-triangular matrix and its inverse
        IntMatrix u = IntMatrix::identity(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) u(i, j) = small(rng);
        // exact inverse of a unipotent matrix: sum of (I - u)^k
        IntMatrix nil = IntMatrix::identity(n) - u;
        IntMatrix uinv = IntMatrix::identity(n);
        IntMatrix power = IntMatrix::identity(n);
        for (std::size_t k = 1; k < n; ++k) {
            power = power * nil;
            uinv = uinv + power;
        }
        REQUIRE(u * uinv == IntMatrix::identity(n));
        IntMatrix conj = u * r * uinv;

        LatticeAction action{conj, 3, EndomorphismRing::non_cm()};
        auto h1 = cyclic_h1(action);
        REQUIRE(h1.order().has_value());
        Int expected = arith::pow(3, static_cast<unsigned long>(threes));
        REQUIRE(*h1.order() == expected);
        REQUIRE(oracle::coset_count(conj, 1, 8) == expected.get_ui());
        if (threes > 0) ++nontrivial;
    }
    CHECK(nontrivial > 10);
    CHECK_THROWS_AS(cyclic_h1(LatticeAction{IntMatrix{{0, 1}, {1, 0}}, 3, {}}), Error);
    CHECK_THROWS_AS(cyclic_h1(LatticeAction{IntMatrix::identity(3), 3, {}}), Error);
}

TEST_CASE("torsion surjectivity") {
    CHECK(torsion_surjectivity_det() == 3);
    for (long n = 1; n <= 60; ++n) {
        // brute force: image of (Z/n)^2 under the matrix
        std::set<std::pair<long, long>> image;
        for (long p = 0; p < n; ++p)
            for (long q = 0; q < n; ++q) image.insert({(((-2 * p - q) % n) + n) % n, (((p - q) % n) + n) % n});
        CHECK(surjective_mod(n) == (static_cast<long>(image.size()) == n * n));
        CHECK(surjective_mod(n) == (n % 3 != 0));
    }
}

TEST_CASE("A2 invariant ring") {
    auto inv = a2_invariants();
    CHECK(rotate(inv.a) == inv.a);
    CHECK(rotate(inv.b) == inv.b);
    CHECK(rotate(inv.c) == inv.c);
    CHECK(rotate(rotate(rotate(BivariatePolynomial::r()))) == BivariatePolynomial::r());
    CHECK_FALSE(rotate(BivariatePolynomial::r()) == BivariatePolynomial::r());
    CHECK(a2_relation().is_zero());
    CHECK(inv.a.evaluate(1, 1) == 3);
    CHECK(inv.b.evaluate(1, 1) == -6);
    CHECK(inv.c.evaluate(1, 1) == 3);
    CHECK(inv.a.pow(3).total_degree() == 6);
    CHECK(verify_a2_invariants());
}
