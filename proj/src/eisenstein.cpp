#include "brauerk3/eisenstein.hpp"

#include "brauerk3/error.hpp"

#include <array>
#include <stdexcept>

namespace brauerk3 {

namespace {

using u64 = std::uint64_t;

// Z[w]/pi for split pi, identified with Z/p through w -> r where pi | (r - w).
struct SplitResidueField {
    u64 p;
    u64 r;

    explicit SplitResidueField(const PrimaryPrime& prime) : p(prime.rational_prime) {
        // pi = x + y w maps to 0, so r = -x / y mod p.
        u64 x = arith::mod(prime.pi.x(), p);
        u64 y = arith::mod(prime.pi.y(), p);
        r = arith::mulmod((p - x) % p, arith::invmod(y, p), p);
    }

    u64 image(const EisensteinInt& z) const {
        return (arith::mod(z.x(), p) + arith::mulmod(arith::mod(z.y(), p), r, p)) % p;
    }
};

// Z[w]/p for inert p: the field with p^2 elements, elements as (x, y) mod p.
struct InertResidueField {
    u64 p;

    struct Elem {
        u64 x;
        u64 y;
        bool operator==(const Elem&) const = default;
    };

    Elem image(const EisensteinInt& z) const { return {arith::mod(z.x(), p), arith::mod(z.y(), p)}; }

    Elem mul(Elem a, Elem b) const {
        u64 bd = arith::mulmod(a.y, b.y, p);
        u64 x = (arith::mulmod(a.x, b.x, p) + p - bd) % p;
        u64 y = (arith::mulmod(a.x, b.y, p) + arith::mulmod(a.y, b.x, p)) % p;
        y = (y + p - bd) % p;
        return {x, y};
    }

    Elem pow(Elem base, Int exponent) const {
        Elem result{1 % p, 0};
        while (exponent > 0) {
            if (mpz_odd_p(exponent.get_mpz_t())) result = mul(result, base);
            base = mul(base, base);
            exponent >>= 1;
        }
        return result;
    }
};

void check_degree(unsigned degree) {
    if (degree != 2 && degree != 3 && degree != 6) {
        throw std::invalid_argument("residue symbol degree must be 2, 3 or 6");
    }
}

}  // namespace

EisensteinInt EisensteinInt::unit(unsigned k) {
    static const std::array<EisensteinInt, 6> units = {
        EisensteinInt{1, 0},   EisensteinInt{0, -1}, EisensteinInt{-1, -1},
        EisensteinInt{-1, 0},  EisensteinInt{0, 1},  EisensteinInt{1, 1},
    };
    return units[k % 6];
}

bool EisensteinInt::divides(const EisensteinInt& other) const {
    if (is_zero()) return other.is_zero();
    Int n = norm();
    EisensteinInt q = other * conjugate();
    return mpz_divisible_p(q.x_.get_mpz_t(), n.get_mpz_t()) && mpz_divisible_p(q.y_.get_mpz_t(), n.get_mpz_t());
}

EisensteinInt EisensteinInt::pow(unsigned long exponent) const {
    EisensteinInt result{1, 0};
    EisensteinInt base = *this;
    while (exponent > 0) {
        if (exponent & 1) result = result * base;
        base = base * base;
        exponent >>= 1;
    }
    return result;
}

std::string EisensteinInt::to_string() const {
    if (y_ == 0) return x_.get_str();
    std::string ycoef;
    Int ay = abs(y_);
    if (ay != 1) ycoef = ay.get_str();
    if (x_ == 0) return (y_ < 0 ? "-" : "") + ycoef + "w";
    return x_.get_str() + (y_ < 0 ? "-" : "+") + ycoef + "w";
}

bool is_primary(const EisensteinInt& z) {
    return mpz_divisible_ui_p(Int(z.x() - 1).get_mpz_t(), 3) && mpz_divisible_ui_p(z.y().get_mpz_t(), 3);
}

EisensteinInt primary_associate(const EisensteinInt& z) {
    if (mpz_divisible_ui_p(z.norm().get_mpz_t(), 3)) {
        throw Error(ErrorKind::NotCoprimeToThree, "norm of " + z.to_string() + " is divisible by 3");
    }
    for (unsigned k = 0; k < 6; ++k) {
        EisensteinInt candidate = EisensteinInt::unit(k) * z;
        if (is_primary(candidate)) return candidate;
    }
    throw std::logic_error("no primary associate found");
}

std::optional<SexticUnit> SexticUnit::from_value(const EisensteinInt& z) {
    for (unsigned k = 0; k < 6; ++k) {
        if (EisensteinInt::unit(k) == z) return SexticUnit(k);
    }
    return std::nullopt;
}

std::string SexticUnit::to_string() const {
    static constexpr std::array<const char*, 6> names = {"1", "-w", "w^2", "-1", "w", "-w^2"};
    return names[k_];
}

PrimaryPrime InertPrime::primary() const {
    return PrimaryPrime{EisensteinInt(-arith::to_int(p)), arith::to_int(p) * arith::to_int(p), p, false};
}

PrimeDecomposition split_prime(u64 p) {
    if (!arith::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (p == 3) return RamifiedPrime{};
    if (p % 3 == 2) return InertPrime{p};

    // Cornacchia on x^2 + 3 y^2 = p, starting from a square root of -3.
    u64 root = *arith::sqrt_mod(p - 3, p);
    Int pi = arith::to_int(p);
    for (u64 r : {root, p - root}) {
        Int a = pi;
        Int b = arith::to_int(r);
        while (b * b >= pi) {
            Int t = a % b;
            a = b;
            b = t;
        }
        Int rest = pi - b * b;
        if (!mpz_divisible_ui_p(rest.get_mpz_t(), 3)) continue;
        rest /= 3;
        if (!mpz_perfect_square_p(rest.get_mpz_t())) continue;
        Int y = sqrt(rest);
        // b + y sqrt(-3) = (b + y) + 2y w
        EisensteinInt z(b + y, 2 * y);
        return PrimaryPrime{primary_associate(z), pi, p, true};
    }
    throw std::logic_error("Cornacchia failed for p = " + std::to_string(p));
}

PrimaryPrime residue_prime(u64 p) {
    auto decomposition = split_prime(p);
    if (auto* split = std::get_if<PrimaryPrime>(&decomposition)) return *split;
    if (auto* inert = std::get_if<InertPrime>(&decomposition)) return inert->primary();
    throw Error(ErrorKind::NotCoprimeToThree, "3 ramifies in Z[w]; no primary generator");
}

SexticUnit power_residue_symbol(const EisensteinInt& alpha, const PrimaryPrime& pi, unsigned degree) {
    check_degree(degree);
    Int n_minus_1 = pi.residue_norm - 1;
    if (!mpz_divisible_ui_p(n_minus_1.get_mpz_t(), degree)) {
        throw Error(ErrorKind::BadResidueNorm,
                    "N(pi) = " + pi.residue_norm.get_str() + " is not 1 mod " + std::to_string(degree));
    }
    Int exponent = n_minus_1 / degree;

    if (pi.split) {
        SplitResidueField field(pi);
        u64 a = field.image(alpha);
        if (a == 0) throw Error(ErrorKind::NotCoprime, pi.pi.to_string() + " divides " + alpha.to_string());
        u64 t = arith::powmod(a, arith::to_u64(exponent), field.p);
        for (unsigned k = 0; k < 6; k += 6 / degree) {
            if (field.image(EisensteinInt::unit(k)) == t) return SexticUnit::from_exponent(k);
        }
    } else {
        InertResidueField field{pi.rational_prime};
        auto a = field.image(alpha);
        if (a.x == 0 && a.y == 0) {
            throw Error(ErrorKind::NotCoprime, pi.pi.to_string() + " divides " + alpha.to_string());
        }
        auto t = field.pow(a, exponent);
        for (unsigned k = 0; k < 6; k += 6 / degree) {
            if (field.image(EisensteinInt::unit(k)) == t) return SexticUnit::from_exponent(k);
        }
    }
    throw std::logic_error("power residue is not a root of unity");
}

SexticUnit cubic_symbol(const EisensteinInt& alpha, const PrimaryPrime& pi) {
    return power_residue_symbol(alpha, pi, 3);
}

SexticUnit sextic_symbol(const EisensteinInt& alpha, const PrimaryPrime& pi) {
    return power_residue_symbol(alpha, pi, 6);
}

}  // namespace brauerk3
