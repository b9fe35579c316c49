#pragma once

// Exact integer helpers shared by every module: GMP-backed big integers and
// rationals plus word-size modular arithmetic for residue computations.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace brauerk3 {

using Int = mpz_class;
using Rational = mpq_class;

namespace arith {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Non-negative residue of `a` modulo `m` (m > 0).
std::uint64_t mod(const Int& a, std::uint64_t m);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);
bool is_prime(const Int& n);

/// A square root of `a` modulo the odd prime `p`, if one exists.
std::optional<std::uint64_t> sqrt_mod(std::uint64_t a, std::uint64_t p);

/// Legendre symbol (a/p) for an odd prime p; returns 0 when p | a.
int legendre(const Int& a, std::uint64_t p);

/// p-adic valuation of a nonzero integer.
unsigned valuation(const Int& n, const Int& p);
int valuation(const Rational& q, const Int& p);

/// Prime factorization of |n| for n != 0: trial division by small primes,
/// then Miller-Rabin and Pollard-Brent rho on the cofactor.
std::map<Int, unsigned> factor(const Int& n);

std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

static_assert(sizeof(unsigned long) == 8, "LP64 data model expected");

inline Int to_int(std::uint64_t v) { return Int(static_cast<unsigned long>(v)); }

bool fits_u64(const Int& n);
std::uint64_t to_u64(const Int& n);

Int pow(const Int& base, unsigned long exp);

/// True iff n is the cube of an integer (sign allowed).
bool is_integer_cube(const Int& n);

inline std::string str(const Int& n) { return n.get_str(); }
std::string str(const Rational& q);

/// Parses "n" or "n/d" exactly.
Rational parse_rational(const std::string& text);

}  // namespace arith
}  // namespace brauerk3
