#include "brauerk3/localarith.hpp"

#include "brauerk3/error.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

namespace brauerk3 {

namespace {

using u64 = std::uint64_t;

// Above this bound, p != 3 is handled by residue criteria instead of a
// lifting search.
constexpr u64 kSearchBound = 200;

unsigned vp(const Int& n, u64 p) { return arith::valuation(n, arith::to_int(p)); }

Int ppow(u64 p, unsigned k) { return arith::pow(arith::to_int(p), k); }

Int reduce(const Int& n, const Int& modulus) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t());
    return r;
}

// Unit residue u is a cube mod p.
bool cube_mod_p(u64 u, u64 p) {
    if (p == 2 || p % 3 == 2) return true;
    return arith::powmod(u % p, (p - 1) / 3, p) == 1;
}

unsigned v3(u64 p) { return p == 3 ? 1 : 0; }

// Coefficients with valuations reduced mod 3 and the common power of p
// divided out, so the valuations lie in {0, 1, 2} with minimum 0.
std::array<Int, 3> local_model(const PrimitiveTriple& t, u64 p) {
    std::array<Int, 3> coef = {t.a, t.b, t.c};
    std::array<unsigned, 3> v{};
    for (std::size_t i = 0; i < 3; ++i) {
        unsigned e = vp(coef[i], p);
        coef[i] /= ppow(p, e - e % 3);
        v[i] = e % 3;
    }
    unsigned m = *std::min_element(v.begin(), v.end());
    for (auto& c : coef) c /= ppow(p, m);
    return coef;
}

// Primitive projective search with Hensel acceptance. Every chart fixes its
// leading unit coordinate to 1 and forces earlier coordinates into pZ_p.
bool lifting_search(const std::array<Int, 3>& coef, u64 p) {
    std::array<unsigned, 3> vcoef{};
    unsigned maxv = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        vcoef[i] = vp(coef[i], p);
        maxv = std::max(maxv, vcoef[i]);
    }
    const unsigned depth = 1 + 2 * v3(p) + 2 * maxv;
    const Int P = arith::to_int(p);

    std::function<bool(std::array<Int, 3>&, std::size_t, unsigned, const Int&)> node;
    node = [&](std::array<Int, 3>& x, std::size_t chart, unsigned level, const Int& modulus) -> bool {
        Int f = coef[0] * x[0] * x[0] * x[0] + coef[1] * x[1] * x[1] * x[1] + coef[2] * x[2] * x[2] * x[2];
        if (!mpz_divisible_p(f.get_mpz_t(), modulus.get_mpz_t())) return false;
        if (f == 0) return true;
        unsigned vf = vp(f, p);
        for (std::size_t i = 0; i < 3; ++i) {
            if (x[i] == 0) continue;
            if (vf > 2 * (v3(p) + vcoef[i] + 2 * vp(x[i], p))) return true;
        }
        if (level >= depth) return false;
        std::size_t k1 = chart == 0 ? 1 : 0;
        std::size_t k2 = chart == 2 ? 1 : 2;
        const Int next = modulus * P;
        const Int b1 = x[k1], b2 = x[k2];
        for (u64 s = 0; s < p; ++s)
            for (u64 r = 0; r < p; ++r) {
                x[k1] = b1 + modulus * arith::to_int(s);
                x[k2] = b2 + modulus * arith::to_int(r);
                if (node(x, chart, level + 1, next)) return true;
            }
        x[k1] = b1;
        x[k2] = b2;
        return false;
    };

    for (std::size_t chart = 0; chart < 3; ++chart) {
        std::array<Int, 3> x = {0, 0, 0};
        x[chart] = 1;
        u64 free1 = chart < 2 ? p : 1;  // coordinates after the chart are free mod p
        u64 free2 = chart < 1 ? p : 1;
        for (u64 s = 0; s < free1; ++s)
            for (u64 r = 0; r < free2; ++r) {
                if (chart == 0) {
                    x[1] = arith::to_int(s);
                    x[2] = arith::to_int(r);
                } else if (chart == 1) {
                    x[0] = 0;
                    x[2] = arith::to_int(s);
                } else {
                    x[0] = 0;
                    x[1] = 0;
                }
                if (node(x, chart, 1, P)) return true;
            }
    }
    return false;
}

// p > kSearchBound, p != 3, valuations in {0, 1, 2} with minimum 0.
bool soluble_by_residues(const std::array<Int, 3>& coef, u64 p) {
    std::vector<std::size_t> units;
    for (std::size_t i = 0; i < 3; ++i)
        if (!mpz_divisible_ui_p(coef[i].get_mpz_t(), p)) units.push_back(i);
    if (units.size() == 3) return true;
    if (units.size() == 2) {
        // Every primitive solution has both unit-coefficient coordinates
        // units, so -c_j / c_i must be a cube mod p; z = 0 then lifts.
        u64 ci = arith::mod(coef[units[0]], p);
        u64 cj = arith::mod(-coef[units[1]], p);
        return cube_mod_p(arith::mulmod(cj, arith::invmod(ci, p), p), p);
    }
    // One unit coefficient a: x must lie in pZ_p, and the other two terms
    // must cancel to valuation >= 3, which needs equal valuations beta.
    std::size_t i = units[0];
    std::size_t j = (i + 1) % 3, k = (i + 2) % 3;
    unsigned bj = vp(coef[j], p), bk = vp(coef[k], p);
    if (bj != bk) return false;
    std::array<Int, 3> next;
    next[i] = coef[i] * ppow(p, 3 - bj);
    next[j] = coef[j] / ppow(p, bj);
    next[k] = coef[k] / ppow(p, bk);
    return soluble_by_residues(next, p);
}

u64 place_prime(const Place& v) { return v.p(); }

}  // namespace

Place Place::prime(u64 p) {
    if (!arith::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    Place place;
    place.p_ = p;
    return place;
}

u64 Place::p() const {
    if (!p_) throw std::logic_error("the real place has no prime");
    return *p_;
}

std::string Place::to_string() const { return p_ ? std::to_string(*p_) : "inf"; }

bool operator<(const Place& a, const Place& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() && !b.is_infinite();
    return a.p() < b.p();
}

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw Error(ErrorKind::ZeroInput, "Hilbert symbol of zero");
    // n/d and n*d differ by the square d^2.
    Int A = a.get_num() * a.get_den();
    Int B = b.get_num() * b.get_den();
    if (v.is_infinite()) return (A < 0 && B < 0) ? -1 : 1;

    const u64 p = place_prime(v);
    unsigned alpha = vp(A, p), beta = vp(B, p);
    Int u = A / ppow(p, alpha);
    Int w = B / ppow(p, beta);
    if (p == 2) {
        u64 u8 = arith::mod(u, 8), w8 = arith::mod(w, 8);
        auto eps = [](u64 x) { return ((x - 1) / 2) & 1; };
        auto omega = [](u64 x) { return ((x * x - 1) / 8) & 1; };
        u64 e = eps(u8) * eps(w8) + alpha * omega(w8) + beta * omega(u8);
        return (e & 1) ? -1 : 1;
    }
    int sign = ((static_cast<u64>(alpha) * beta * ((p - 1) / 2)) & 1) ? -1 : 1;
    if (beta & 1) sign *= arith::legendre(u, p);
    if (alpha & 1) sign *= arith::legendre(w, p);
    return sign;
}

bool is_cube_in_Zp(const Rational& t, u64 p, unsigned depth) {
    if (t == 0) throw Error(ErrorKind::ZeroInput, "cube test of zero");
    if (!arith::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    const Int& n = t.get_num();
    const Int& d = t.get_den();
    if (mpz_divisible_ui_p(n.get_mpz_t(), p) || mpz_divisible_ui_p(d.get_mpz_t(), p)) {
        throw Error(ErrorKind::NotUnit, arith::str(t) + " is not a " + std::to_string(p) + "-adic unit");
    }
    if (p != 3 && p > kSearchBound) {
        return cube_mod_p(arith::mulmod(arith::mod(n, p), arith::invmod(arith::mod(d, p), p), p), p);
    }

    // Roots of d x^3 = n mod p^j; accept once v(d x^3 - n) > 2 v(3 x^2).
    const unsigned accept = 2 * v3(p);
    const Int P = arith::to_int(p);
    std::vector<Int> level;
    for (u64 x = 1; x < p; ++x) {
        Int r = arith::to_int(x);
        if (mpz_divisible_ui_p(Int(d * r * r * r - n).get_mpz_t(), p)) level.push_back(r);
    }
    Int modulus = P;
    for (unsigned j = 1; j <= depth; ++j) {
        if (level.empty()) return false;
        for (const auto& x : level) {
            Int f = d * x * x * x - n;
            if (f == 0 || vp(f, p) > accept) return true;
        }
        if (j == depth) break;
        Int next_modulus = modulus * P;
        std::vector<Int> next;
        for (const auto& x : level)
            for (u64 a = 0; a < p; ++a) {
                Int y = x + modulus * arith::to_int(a);
                Int f = d * y * y * y - n;
                if (mpz_divisible_p(f.get_mpz_t(), next_modulus.get_mpz_t())) next.push_back(y);
            }
        level = std::move(next);
        modulus = next_modulus;
    }
    throw Error(ErrorKind::DepthExceeded, "cube test undecided at depth " + std::to_string(depth));
}

bool diagonal_cubic_soluble(const PrimitiveTriple& t, const Place& v) {
    if (v.is_infinite()) return true;
    const u64 p = v.p();
    Int bad = 3 * t.product();
    if (!mpz_divisible_ui_p(bad.get_mpz_t(), p)) return true;  // smooth mod p: Hasse-Weil and Hensel

    auto coef = local_model(t, p);
    bool all_units = std::none_of(coef.begin(), coef.end(),
                                  [p](const Int& c) { return mpz_divisible_ui_p(c.get_mpz_t(), p); });
    if (all_units && p != 3) return true;
    if (p != 3 && p > kSearchBound) return soluble_by_residues(coef, p);
    return lifting_search(coef, p);
}

std::vector<Place> relevant_places(const PrimitiveTriple& t) {
    std::vector<Place> places = {Place::infinity(), Place::prime(2), Place::prime(3)};
    for (const auto& [q, e] : arith::factor(t.product())) {
        (void)e;
        if (q == 2 || q == 3) continue;
        places.push_back(Place::prime(arith::to_u64(q)));
    }
    return places;
}

PadicApprox PadicApprox::of(const Int& n, u64 p, unsigned precision) {
    PadicApprox a;
    a.p = p;
    a.precision = precision;
    a.value = reduce(n, ppow(p, precision));
    a.valuation = a.value == 0 ? precision : std::min(precision, vp(a.value, p));
    return a;
}

CurvePointApprox CurvePointApprox::origin(const Int& D, u64 p, unsigned precision) {
    CurvePointApprox o;
    o.at_infinity = true;
    o.x = PadicApprox::of(0, p, precision);
    o.y = PadicApprox::of(0, p, precision);
    o.D = D;
    o.exact = true;
    return o;
}

std::string CurvePointApprox::to_string() const {
    if (at_infinity) return "O";
    std::string s = "(" + x.value.get_str() + ", " + y.value.get_str() + ")";
    if (!exact) s += " mod " + std::to_string(x.p) + "^" + std::to_string(x.precision);
    return s;
}

bool lifts_to_Zp(const Int& D, u64 p, unsigned precision, const Int& x0, const Int& y0) {
    const Int P = arith::to_int(p);
    const unsigned cap = precision + 64;
    std::function<bool(const Int&, const Int&, unsigned, const Int&)> node;
    node = [&](const Int& x, const Int& y, unsigned level, const Int& modulus) -> bool {
        Int f = y * y - x * x * x - D;
        if (!mpz_divisible_p(f.get_mpz_t(), modulus.get_mpz_t())) return false;
        if (f == 0) return true;
        unsigned vf = vp(f, p);
        // Hensel in y (partial 2y) or in x (partial -3x^2); the root stays in
        // the class when v(f) - v(partial) >= precision.
        for (const Int& partial : {Int(2 * y), Int(3 * x * x)}) {
            if (partial == 0) continue;
            unsigned g = vp(partial, p);
            if (vf > 2 * g && vf - g >= precision) return true;
        }
        if (level >= cap) {
            throw Error(ErrorKind::PrecisionTooLow, "could not decide lifting of a class mod " +
                                                        std::to_string(p) + "^" + std::to_string(precision));
        }
        const Int next = modulus * P;
        for (u64 s = 0; s < p; ++s)
            for (u64 r = 0; r < p; ++r)
                if (node(x + modulus * arith::to_int(s), y + modulus * arith::to_int(r), level + 1, next)) return true;
        return false;
    };
    const Int modulus = ppow(p, precision);
    return node(reduce(x0, modulus), reduce(y0, modulus), precision, modulus);
}

std::vector<CurvePointApprox> enumerate_E_points(const Int& D, u64 p, unsigned precision) {
    if (D == 0) throw Error(ErrorKind::ZeroD, "D must be nonzero");
    if (!arith::is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    if (precision < 3) throw Error(ErrorKind::PrecisionTooLow, "precision must be at least 3");

    // Solutions of y^2 = x^3 + D mod p^j, refined one digit at a time.
    const Int P = arith::to_int(p);
    std::vector<std::pair<Int, Int>> level;
    for (u64 x = 0; x < p; ++x)
        for (u64 y = 0; y < p; ++y) {
            Int X = arith::to_int(x), Y = arith::to_int(y);
            if (mpz_divisible_ui_p(Int(Y * Y - X * X * X - D).get_mpz_t(), p)) level.emplace_back(X, Y);
        }
    Int modulus = P;
    for (unsigned j = 1; j < precision; ++j) {
        Int next_modulus = modulus * P;
        std::vector<std::pair<Int, Int>> next;
        for (const auto& [x, y] : level)
            for (u64 s = 0; s < p; ++s)
                for (u64 r = 0; r < p; ++r) {
                    Int X = x + modulus * arith::to_int(s), Y = y + modulus * arith::to_int(r);
                    Int f = Y * Y - X * X * X - D;
                    if (mpz_divisible_p(f.get_mpz_t(), next_modulus.get_mpz_t())) next.emplace_back(X, Y);
                }
        level = std::move(next);
        modulus = next_modulus;
    }
    std::sort(level.begin(), level.end());

    // Rational 2-torsion: x^3 = -D.
    std::optional<Int> torsion_x;
    if (arith::is_integer_cube(-D)) {
        Int r;
        mpz_root(r.get_mpz_t(), Int(-D).get_mpz_t(), 3);
        torsion_x = r;
    }

    std::vector<CurvePointApprox> points = {CurvePointApprox::origin(D, p, precision)};
    for (const auto& [x, y] : level) {
        if (!lifts_to_Zp(D, p, precision, x, y)) continue;
        CurvePointApprox pt;
        pt.x = PadicApprox::of(x, p, precision);
        pt.y = PadicApprox::of(y, p, precision);
        pt.D = D;
        pt.exact = torsion_x && y == 0 && x == *torsion_x;
        points.push_back(pt);
    }
    if (torsion_x && reduce(*torsion_x, modulus) != *torsion_x) {
        // the residue differs from the coordinate; list the rational point on its own
        CurvePointApprox pt;
        pt.x = PadicApprox::of(*torsion_x, p, precision);
        pt.y = PadicApprox::of(0, p, precision);
        pt.D = D;
        pt.exact = true;
        points.push_back(pt);
    }
    return points;
}

PadicApprox beta_component(const CurvePointApprox& pt) {
    if (pt.at_infinity) throw std::invalid_argument("x - 3 is not a function value at the origin");
    const u64 p = pt.x.p;
    const unsigned k = pt.x.precision;
    const Int& x = pt.x.value;
    PadicApprox shifted = PadicApprox::of(x - 3, p, k);
    PadicApprox g = 2 * shifted.valuation < k ? shifted : PadicApprox::of(x * x + 3 * x + 9, p, k);
    const unsigned needed = p == 2 ? 3 : 1;
    if (g.valuation >= k || k - g.valuation < needed) {
        throw Error(ErrorKind::PrecisionTooLow, "square class of x - 3 at " + pt.to_string() + " is not determined");
    }
    return g;
}

EvaluationValue evaluate_beta(const CurvePointApprox& P, const CurvePointApprox& Q) {
    if (P.D != -27 || Q.D != -27) throw std::invalid_argument("the class (x - 3, u - 3) lives on y^2 = x^3 - 27");
    if (P.at_infinity || Q.at_infinity) return {false};
    if (P.x.p != Q.x.p) throw std::invalid_argument("points at different primes");
    PadicApprox g1 = beta_component(P);
    PadicApprox g2 = beta_component(Q);
    return {hilbert_symbol(Rational(g1.value), Rational(g2.value), Place::prime(P.x.p)) == -1};
}

std::string EvaluationImage::to_string() const {
    std::string s = "{";
    if (zero) s += "0";
    if (half) s += zero ? ", 1/2" : "1/2";
    return s + "}";
}

EvaluationImage evaluation_image(const std::vector<CurvePointApprox>& points, bool stop_when_surjective) {
    EvaluationImage image;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = 0; j < points.size(); ++j) {
            bool half = evaluate_beta(points[i], points[j]).half;
            if (half && !image.half) {
                image.half = true;
                image.half_witness = std::make_pair(i, j);
            } else if (!half && !image.zero) {
                image.zero = true;
                image.zero_witness = std::make_pair(i, j);
            }
            if (stop_when_surjective && image.surjective()) return image;
        }
    return image;
}

}  // namespace brauerk3
