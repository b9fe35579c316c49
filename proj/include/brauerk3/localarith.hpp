#pragma once

// Local arithmetic over Q_p and R: Hilbert symbols, cubes in Z_p, local
// solubility of a x^3 + b y^3 + c z^3 = 0, p-adic points of y^2 = x^3 + D
// and the local evaluation of the quaternion class (x - 3, u - 3).

#include "brauerk3/cubeclass.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace brauerk3 {

/// A place of Q: the real place or a finite prime.
class Place {
public:
    static Place infinity() { return Place(); }
    static Place prime(std::uint64_t p);

    bool is_infinite() const { return !p_.has_value(); }
    /// Throws for the real place.
    std::uint64_t p() const;
    std::string to_string() const;

    friend bool operator==(const Place&, const Place&) = default;
    friend bool operator<(const Place& a, const Place& b);

private:
    Place() = default;
    std::optional<std::uint64_t> p_;
};

/// Hilbert symbol (a, b)_v in {+1, -1}.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Decides whether the p-adic unit t is a cube in Z_p by searching residues
/// mod p^j, j <= depth. Throws NotUnit when v_p(t) != 0 and DepthExceeded
/// when depth is too small to decide.
bool is_cube_in_Zp(const Rational& t, std::uint64_t p, unsigned depth = 8);

/// C(Q_v) != {} for C: a x^3 + b y^3 + c z^3 = 0.
bool diagonal_cubic_soluble(const PrimitiveTriple& t, const Place& v);

/// The places where solubility is not automatic: inf, 2, 3 and p | abc.
std::vector<Place> relevant_places(const PrimitiveTriple& t);

/// A residue mod p^precision with its valuation (precision when zero).
struct PadicApprox {
    std::uint64_t p = 2;
    unsigned precision = 0;
    Int value;
    unsigned valuation = 0;

    static PadicApprox of(const Int& n, std::uint64_t p, unsigned precision);
    bool is_zero() const { return valuation >= precision; }
    friend bool operator==(const PadicApprox&, const PadicApprox&) = default;
};

/// A point of y^2 = x^3 + D over Z_p known mod p^precision, or the origin.
struct CurvePointApprox {
    bool at_infinity = false;
    PadicApprox x;
    PadicApprox y;
    Int D;
    /// The residues are the exact coordinates of a rational point.
    bool exact = false;

    static CurvePointApprox origin(const Int& D, std::uint64_t p, unsigned precision);
    std::string to_string() const;
    friend bool operator==(const CurvePointApprox&, const CurvePointApprox&) = default;
};

/// The origin, the rational points (x, 0), and every class (x, y) mod
/// p^precision of integral points that lifts to E(Z_p). Throws
/// PrecisionTooLow for precision < 3.
std::vector<CurvePointApprox> enumerate_E_points(const Int& D, std::uint64_t p, unsigned precision);

/// True iff the class of pt mod p^precision contains a Z_p point.
bool lifts_to_Zp(const Int& D, std::uint64_t p, unsigned precision, const Int& x, const Int& y);

/// An element of (1/2)Z / Z.
struct EvaluationValue {
    bool half = false;

    std::string to_string() const { return half ? "1/2" : "0"; }
    friend bool operator==(EvaluationValue, EvaluationValue) = default;
};

/// The representative of x - 3 used for the evaluation: x - 3 itself, or
/// x^2 + 3x + 9 when v(x - 3) >= precision / 2. Throws PrecisionTooLow if the
/// square class cannot be read off the residue.
PadicApprox beta_component(const CurvePointApprox& pt);

/// Local invariant of (x - 3, u - 3) at (P, Q) on y^2 = x^3 - 27.
EvaluationValue evaluate_beta(const CurvePointApprox& P, const CurvePointApprox& Q);

struct EvaluationImage {
    bool zero = false;
    bool half = false;
    /// First pair reaching each value, indices into the point list.
    std::optional<std::pair<std::size_t, std::size_t>> zero_witness;
    std::optional<std::pair<std::size_t, std::size_t>> half_witness;

    bool surjective() const { return zero && half; }
    std::string to_string() const;
};

/// Image of evaluate_beta over all ordered pairs of the given points.
EvaluationImage evaluation_image(const std::vector<CurvePointApprox>& points, bool stop_when_surjective = false);

}  // namespace brauerk3
