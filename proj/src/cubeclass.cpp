#include "brauerk3/cubeclass.hpp"

#include "brauerk3/error.hpp"

namespace brauerk3 {

std::string PrimitiveTriple::to_string() const {
    return a.get_str() + "," + b.get_str() + "," + c.get_str();
}

PrimitiveTriple normalize_triple(const Int& a, const Int& b, const Int& c) {
    if (a == 0 || b == 0 || c == 0) {
        throw Error(ErrorKind::ZeroCoefficient, "coefficients of a diagonal cubic must be nonzero");
    }
    Int g = gcd(gcd(a, b), c);
    return PrimitiveTriple{abs(a) / g, abs(b) / g, abs(c) / g};
}

void CubeClass::add(const Int& prime, unsigned exponent) {
    unsigned e = (exponents_[prime] + exponent) % 3;
    if (e == 0) {
        exponents_.erase(prime);
    } else {
        exponents_[prime] = e;
    }
}

CubeClass CubeClass::of(const Rational& n) {
    if (n == 0) throw Error(ErrorKind::ZeroInput, "cube class of zero");
    CubeClass out;
    for (const auto& [p, e] : arith::factor(n.get_num())) out.add(p, e % 3);
    // 1/p ~ p^2 modulo cubes
    for (const auto& [p, e] : arith::factor(n.get_den())) out.add(p, (2 * e) % 3);
    return out;
}

CubeClass CubeClass::operator*(const CubeClass& other) const {
    CubeClass out = *this;
    for (const auto& [p, e] : other.exponents_) out.add(p, e);
    return out;
}

Int CubeClass::representative() const {
    Int r = 1;
    for (const auto& [p, e] : exponents_) r *= arith::pow(p, e);
    return r;
}

std::string CubeClass::to_string() const {
    if (is_trivial()) return "1";
    std::string out;
    for (const auto& [p, e] : exponents_) {
        if (!out.empty()) out += "*";
        out += p.get_str();
        if (e == 2) out += "^2";
    }
    return out;
}

CubeClass cube_class(const Rational& n) { return CubeClass::of(n); }

bool is_cube(const Rational& n) {
    if (n == 0) throw Error(ErrorKind::ZeroInput, "is_cube of zero");
    return arith::is_integer_cube(n.get_num()) && arith::is_integer_cube(n.get_den());
}

std::string to_string(LambdaSource source) {
    switch (source) {
    case LambdaSource::AOverB: return "a/b";
    case LambdaSource::BOverC: return "b/c";
    case LambdaSource::COverA: return "c/a";
    }
    return "?";
}

LambdaChoice choose_lambda(const PrimitiveTriple& t) {
    const auto& [a, b, c] = t;
    if (cube_class(Rational(t.product())).is_trivial()) {
        throw Error(ErrorKind::CubeCase, "abc = " + t.product().get_str() + " is a cube");
    }
    auto make = [](const Int& num, const Int& den, LambdaSource src) {
        Rational q(num, den);
        q.canonicalize();
        return LambdaChoice{q.get_num(), q.get_den(), src};
    };
    const bool b2c_trivial = cube_class(Rational(b * b * c)).is_trivial();
    const bool a2c_trivial = cube_class(Rational(a * a * c)).is_trivial();
    if (!b2c_trivial && !a2c_trivial) return make(a, b, LambdaSource::AOverB);
    if (b2c_trivial) return make(b, c, LambdaSource::BOverC);
    return make(c, a, LambdaSource::COverA);
}

}  // namespace brauerk3
