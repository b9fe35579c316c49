#pragma once

// The Neron-Severi lattice of E x E in Kani coordinates (a, b, f), the
// order-3 action of rho, its cyclic cohomology, and the A2 invariant ring.

#include "brauerk3/intmatrix.hpp"
#include "brauerk3/polynomial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace brauerk3 {

/// End(E) = Z (non-CM) or Z[alpha] with alpha^2 + c alpha + d = 0.
struct EndomorphismRing {
    bool cm = false;
    Int c = 0;
    Int d = 0;

    static EndomorphismRing non_cm() { return {}; }
    /// Throws NotImaginary unless c^2 - 4d < 0.
    static EndomorphismRing imaginary(const Int& c, const Int& d);

    /// Coordinates of a Kani class: 3 without CM, 4 with.
    std::size_t lattice_rank() const { return cm ? 4 : 3; }
    std::string to_string() const;
};

/// u + v*alpha.
struct EndElement {
    Int u = 0;
    Int v = 0;

    bool is_zero() const { return u == 0 && v == 0; }
    friend bool operator==(const EndElement&, const EndElement&) = default;
};

EndElement dual(const EndElement& f, const EndomorphismRing& ring);
Int degree(const EndElement& f, const EndomorphismRing& ring);
EndElement multiply(const EndElement& f, const EndElement& g, const EndomorphismRing& ring);
/// Reduced trace of f: 2u - c v.
Int trace(const EndElement& f, const EndomorphismRing& ring);
std::string to_string(const EndElement& f);

/// The class (a - 1) e + (b - deg f) e' + Gamma_f.
struct KaniClass {
    Int a = 0;
    Int b = 0;
    EndElement f;

    friend bool operator==(const KaniClass&, const KaniClass&) = default;
    friend KaniClass operator+(const KaniClass& x, const KaniClass& y) {
        return {x.a + y.a, x.b + y.b, {x.f.u + y.f.u, x.f.v + y.f.v}};
    }
    friend KaniClass operator-(const KaniClass& x, const KaniClass& y) {
        return {x.a - y.a, x.b - y.b, {x.f.u - y.f.u, x.f.v - y.f.v}};
    }
    friend KaniClass operator*(const Int& k, const KaniClass& x) { return {k * x.a, k * x.b, {k * x.f.u, k * x.f.v}}; }
    std::string to_string() const;
};

KaniClass kani_e();
KaniClass kani_e_prime();
/// Gamma_f = (1, deg f, f); Gamma_0 = e and Gamma_1 is the diagonal.
KaniClass graph(const EndElement& f, const EndomorphismRing& ring);
/// The graph of f read in E2 x E1: (deg f, 1, f^dual). Throws ZeroIsogeny.
KaniClass inverse_graph(const EndElement& f, const EndomorphismRing& ring);
/// Pulls a class back along (P, Q) -> (Q, P): (b, a, f^dual).
KaniClass swap_factors(const KaniClass& x, const EndomorphismRing& ring);

/// a1 b2 + a2 b1 - Tr(dual(f1) f2).
Int intersection_pairing(const KaniClass& x, const KaniClass& y, const EndomorphismRing& ring);
/// Gram matrix of the pairing on the coordinate basis.
IntMatrix gram_matrix(const EndomorphismRing& ring);

IntVector to_coordinates(const KaniClass& x, const EndomorphismRing& ring);
KaniClass from_coordinates(const IntVector& v, const EndomorphismRing& ring);

struct LatticeAction {
    IntMatrix matrix;
    unsigned order = 3;
    EndomorphismRing ring;

    KaniClass apply(const KaniClass& x) const;
};

/// Columns are the images of (1,0,0), (0,1,0), (0,0,1) and (0,0,alpha):
/// (1,1,-1), (1,0,0), (2,0,-1), (-c,0,alpha+c). Without CM the alpha
/// coordinate is dropped.
LatticeAction rho_action(const EndomorphismRing& ring);

/// I + R + R^2.
IntMatrix norm_map(const LatticeAction& action);

struct CohomologyResult {
    /// Invariant factors of ker(N) / im(R - I); a 0 entry is a free summand.
    std::vector<Int> invariant_factors;
    std::size_t kernel_rank = 0;
    std::size_t image_rank = 0;

    bool trivial() const;
    /// Group order, or nullopt when infinite.
    std::optional<Int> order() const;
    std::string to_string() const;
};

/// H^1 of the cyclic group generated by R: ker(1 + R + R^2) / (R - 1).
/// Throws NotOrderThree unless R^3 = I and R != I.
CohomologyResult cyclic_h1(const LatticeAction& action);

/// Columns spanning im(R - I).
IntMatrix coboundaries(const LatticeAction& action);

/// (rho - 1)(P, Q) = (-2P - Q, P - Q) on A^dual.
IntMatrix torsion_map();
Int torsion_surjectivity_det();
/// True iff the torsion map is onto (Z/n)^2.
bool surjective_mod(const Int& n);

struct A2Invariants {
    BivariatePolynomial a;
    BivariatePolynomial b;
    BivariatePolynomial c;
};

/// a = r^2 + rs + s^2, b = -3rs(r + s), c = r^3 + 3r^2 s - s^3.
A2Invariants a2_invariants();
/// P(s, -r - s).
BivariatePolynomial rotate(const BivariatePolynomial& p);
/// a^3 - b^2 - bc - c^2, identically zero.
BivariatePolynomial a2_relation();
bool verify_a2_invariants();

}  // namespace brauerk3
