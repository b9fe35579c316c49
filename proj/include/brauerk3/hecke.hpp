#pragma once

// Hecke character of the CM curve y^2 = x^3 + D at primes of K = Q(sqrt(-3))
// and the prime scan certifying m(3) = 0 for E x E over KL, L = Q(cbrt(lambda)).

#include "brauerk3/cubeclass.hpp"
#include "brauerk3/eisenstein.hpp"

#include <cstdint>

namespace brauerk3 {

/// y^2 = x^3 + D, D != 0. CM by Z[w].
struct CurveModel {
    Int D;
};

/// D = -2^4 3^3 (abc)^2, the Jacobian of a x^3 + b y^3 + c z^3 = 0.
Int jacobian_D(const PrimitiveTriple& t);

struct HeckeValue {
    EisensteinInt value;
    PrimaryPrime prime;
    unsigned inertia_degree = 1;
};

/// psi(q) = [ (4D/pi)_6^{-1} * pi ]^f for a split prime pi of good reduction.
HeckeValue hecke_at_split_prime(const CurveModel& curve, const PrimaryPrime& pi, unsigned inertia_degree = 1);

/// The order Z + l^k Z[w].
struct OrderMembership {
    Int l;
    unsigned k = 0;
};

bool in_order(const EisensteinInt& value, const OrderMembership& order);
inline bool in_order(const HeckeValue& v, const OrderMembership& order) { return in_order(v.value, order); }

/// A split prime p of K at which lambda is a cube (so f = 1 in KL/K) and 4D
/// is not, together with every intermediate quantity of the argument.
struct M3Certificate {
    std::uint64_t p = 0;
    PrimaryPrime pi;
    SexticUnit lambda_cubic;
    SexticUnit four_d_cubic;
    SexticUnit four_d_sextic;
    HeckeValue hecke;
    bool in_o3 = true;
};

struct ScanOptions {
    std::uint64_t bound = 100000;
    unsigned threads = 1;
};

/// Smallest witness prime p <= bound. Throws CubeCase if 4D is a cube and
/// NotFound if no prime below the bound qualifies.
M3Certificate find_m3_witness(const CurveModel& curve, const Rational& lambda, const ScanOptions& options = {});
M3Certificate find_m3_witness(const CurveModel& curve, const LambdaChoice& lambda, const ScanOptions& options = {});

/// Recomputes the whole chain for a certificate: p splits in K with N(pi) = p,
/// lambda is a cube mod pi, 4D is not, the sextic symbol squares to the cubic
/// one, the Hecke value matches and lies outside Z + 3 Z[w].
bool verify_certificate(const M3Certificate& cert, const CurveModel& curve, const Rational& lambda);

}  // namespace brauerk3
