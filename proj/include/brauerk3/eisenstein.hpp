#pragma once

// The Eisenstein integers Z[w], w^2 + w + 1 = 0: norms, primary associates
// (congruent to 1 mod 3), prime decomposition of rational primes, and the
// cubic and sextic power-residue symbols.

#include "brauerk3/arith.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace brauerk3 {

/// x + y*w with arbitrary-precision coordinates.
class EisensteinInt {
public:
    EisensteinInt() = default;
    EisensteinInt(Int x, Int y = 0) : x_(std::move(x)), y_(std::move(y)) {}  // NOLINT

    static EisensteinInt omega() { return {0, 1}; }
    /// The unit (-w)^k; k is taken mod 6.
    static EisensteinInt unit(unsigned k);

    const Int& x() const { return x_; }
    const Int& y() const { return y_; }

    Int norm() const { return x_ * x_ - x_ * y_ + y_ * y_; }
    EisensteinInt conjugate() const { return {x_ - y_, -y_}; }
    bool is_zero() const { return x_ == 0 && y_ == 0; }

    /// True iff *this divides `other` in Z[w].
    bool divides(const EisensteinInt& other) const;

    EisensteinInt pow(unsigned long exponent) const;

    EisensteinInt operator-() const { return {-x_, -y_}; }
    friend EisensteinInt operator+(const EisensteinInt& a, const EisensteinInt& b) {
        return {a.x_ + b.x_, a.y_ + b.y_};
    }
    friend EisensteinInt operator-(const EisensteinInt& a, const EisensteinInt& b) {
        return {a.x_ - b.x_, a.y_ - b.y_};
    }
    friend EisensteinInt operator*(const EisensteinInt& a, const EisensteinInt& b) {
        // w^2 = -1 - w
        Int bd = a.y_ * b.y_;
        return {a.x_ * b.x_ - bd, a.x_ * b.y_ + a.y_ * b.x_ - bd};
    }
    friend bool operator==(const EisensteinInt& a, const EisensteinInt& b) {
        return a.x_ == b.x_ && a.y_ == b.y_;
    }

    std::string to_string() const;

private:
    Int x_;
    Int y_;
};

inline Int norm(const EisensteinInt& z) { return z.norm(); }

/// z == 1 (mod 3) in Z[w].
bool is_primary(const EisensteinInt& z);

/// The unique unit multiple of z that is 1 mod 3. Throws NotCoprimeToThree
/// when 3 | N(z).
EisensteinInt primary_associate(const EisensteinInt& z);

/// One of the six units of Z[w], stored as k with value (-w)^k.
class SexticUnit {
public:
    constexpr SexticUnit() = default;
    static constexpr SexticUnit from_exponent(unsigned k) { return SexticUnit(k % 6); }
    static std::optional<SexticUnit> from_value(const EisensteinInt& z);

    constexpr unsigned exponent() const { return k_; }
    EisensteinInt value() const { return EisensteinInt::unit(k_); }
    constexpr bool is_one() const { return k_ == 0; }
    /// 1, w or w^2.
    constexpr bool is_cube_root_of_unity() const { return k_ % 2 == 0; }
    /// +1 or -1.
    constexpr bool is_sign() const { return k_ % 3 == 0; }

    constexpr SexticUnit operator*(SexticUnit o) const { return SexticUnit((k_ + o.k_) % 6); }
    constexpr SexticUnit inverse() const { return SexticUnit((6 - k_) % 6); }
    constexpr SexticUnit pow(unsigned n) const { return SexticUnit((k_ * (n % 6)) % 6); }

    std::string to_string() const;

    friend constexpr bool operator==(SexticUnit, SexticUnit) = default;

private:
    constexpr explicit SexticUnit(unsigned k) : k_(k) {}
    unsigned k_ = 0;
};

/// A prime of Z[w] coprime to 3, generated by pi == 1 (mod 3).
struct PrimaryPrime {
    EisensteinInt pi;
    Int residue_norm;
    /// The rational prime below pi.
    std::uint64_t rational_prime = 0;
    /// False for an inert rational prime (pi = -p, N(pi) = p^2).
    bool split = true;
};

struct InertPrime {
    std::uint64_t p;
    PrimaryPrime primary() const;
};

struct RamifiedPrime {
    static constexpr std::uint64_t p = 3;
};

using PrimeDecomposition = std::variant<PrimaryPrime, InertPrime, RamifiedPrime>;

/// Decomposition of a rational prime in Z[w]. For p == 1 mod 3 the primary
/// prime comes from a solution of x^2 + 3y^2 = p (Cornacchia).
PrimeDecomposition split_prime(std::uint64_t p);

/// The primary prime used for residue symbols at p: the split factor for
/// p == 1 mod 3, -p for p == 2 mod 3. Throws for p = 3.
PrimaryPrime residue_prime(std::uint64_t p);

/// alpha^((N(pi)-1)/degree) mod pi as a unit, for degree in {2, 3, 6}.
SexticUnit power_residue_symbol(const EisensteinInt& alpha, const PrimaryPrime& pi, unsigned degree);

/// The cubic residue symbol (alpha/pi)_3 in {1, w, w^2}.
SexticUnit cubic_symbol(const EisensteinInt& alpha, const PrimaryPrime& pi);

/// The sextic residue symbol (alpha/pi)_6. Requires N(pi) == 1 (mod 6).
SexticUnit sextic_symbol(const EisensteinInt& alpha, const PrimaryPrime& pi);

}  // namespace brauerk3
