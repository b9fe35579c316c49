#pragma once

// Dense bivariate polynomials over Z in variables r, s.

#include "brauerk3/arith.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace brauerk3 {

class BivariatePolynomial {
public:
    BivariatePolynomial() = default;
    BivariatePolynomial(const Int& constant);  // NOLINT

    static BivariatePolynomial r();
    static BivariatePolynomial s();
    /// coefficient * r^i * s^j
    static BivariatePolynomial monomial(const Int& coefficient, std::size_t i, std::size_t j);

    /// Coefficient of r^i s^j (zero outside the stored range).
    Int coefficient(std::size_t i, std::size_t j) const;
    /// -1 for the zero polynomial.
    int total_degree() const;
    bool is_zero() const;

    Int evaluate(const Int& r, const Int& s) const;
    /// P(x(r,s), y(r,s)).
    BivariatePolynomial compose(const BivariatePolynomial& x, const BivariatePolynomial& y) const;
    BivariatePolynomial pow(unsigned n) const;

    friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    BivariatePolynomial operator-() const;
    friend bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b);

    std::string to_string() const;

private:
    void trim();

    // coeffs_[i][j] multiplies r^i s^j
    std::vector<std::vector<Int>> coeffs_;
};

}  // namespace brauerk3
