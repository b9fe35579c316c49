#pragma once

// Arithmetic in Q^x / Q^x3: cube classes of rationals, normalization of the
// diagonal cubic's coefficient triple, and the choice of a cubic field
// Q(cbrt(lambda)) distinct from Q(cbrt(abc)).

#include "brauerk3/arith.hpp"

#include <map>
#include <string>

namespace brauerk3 {

/// Coefficients of a x^3 + b y^3 + c z^3 = 0, positive with gcd 1.
struct PrimitiveTriple {
    Int a;
    Int b;
    Int c;

    Int product() const { return a * b * c; }
    std::string to_string() const;

    friend bool operator==(const PrimitiveTriple&, const PrimitiveTriple&) = default;
};

/// Divides out the gcd and absorbs signs (x -> -x flips the sign of a).
PrimitiveTriple normalize_triple(const Int& a, const Int& b, const Int& c);

/// Image of |n| in Q^x / Q^x3, stored as prime -> exponent in {1, 2}.
class CubeClass {
public:
    CubeClass() = default;

    static CubeClass of(const Rational& n);

    bool is_trivial() const { return exponents_.empty(); }
    const std::map<Int, unsigned>& exponents() const { return exponents_; }

    CubeClass operator*(const CubeClass& other) const;
    CubeClass squared() const { return *this * *this; }
    CubeClass inverse() const { return squared(); }

    /// Smallest positive integer in the class, e.g. 12 for {2:2, 3:1}.
    Int representative() const;
    std::string to_string() const;

    friend bool operator==(const CubeClass&, const CubeClass&) = default;

private:
    void add(const Int& prime, unsigned exponent);

    std::map<Int, unsigned> exponents_;
};

CubeClass cube_class(const Rational& n);

/// True iff n is a rational cube up to sign (-1 is itself a cube).
bool is_cube(const Rational& n);

enum class LambdaSource { AOverB, BOverC, COverA };

std::string to_string(LambdaSource source);

struct LambdaChoice {
    Int numerator;
    Int denominator;
    LambdaSource source;

    Rational value() const { return Rational(numerator, denominator); }
};

/// Picks lambda in {a/b, b/c, c/a} with Q(cbrt(abc)) != Q(cbrt(lambda)).
/// Throws CubeCase when abc is a cube.
LambdaChoice choose_lambda(const PrimitiveTriple& t);

}  // namespace brauerk3
