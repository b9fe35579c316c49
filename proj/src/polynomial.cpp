#include "brauerk3/polynomial.hpp"

#include <algorithm>

namespace brauerk3 {

BivariatePolynomial::BivariatePolynomial(const Int& constant) {
    if (constant != 0) coeffs_ = {{constant}};
}

BivariatePolynomial BivariatePolynomial::monomial(const Int& coefficient, std::size_t i, std::size_t j) {
    BivariatePolynomial p;
    if (coefficient == 0) return p;
    p.coeffs_.assign(i + 1, {});
    p.coeffs_[i].assign(j + 1, Int(0));
    p.coeffs_[i][j] = coefficient;
    return p;
}

BivariatePolynomial BivariatePolynomial::r() { return monomial(1, 1, 0); }
BivariatePolynomial BivariatePolynomial::s() { return monomial(1, 0, 1); }

Int BivariatePolynomial::coefficient(std::size_t i, std::size_t j) const {
    if (i >= coeffs_.size() || j >= coeffs_[i].size()) return 0;
    return coeffs_[i][j];
}

void BivariatePolynomial::trim() {
    for (auto& row : coeffs_) {
        while (!row.empty() && row.back() == 0) row.pop_back();
    }
    while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

bool BivariatePolynomial::is_zero() const { return coeffs_.empty(); }

int BivariatePolynomial::total_degree() const {
    int deg = -1;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < coeffs_[i].size(); ++j)
            if (coeffs_[i][j] != 0) deg = std::max(deg, static_cast<int>(i + j));
    return deg;
}

Int BivariatePolynomial::evaluate(const Int& r, const Int& s) const {
    Int total = 0, rp = 1;
    for (const auto& row : coeffs_) {
        Int sp = 1;
        for (const auto& c : row) {
            total += c * rp * sp;
            sp *= s;
        }
        rp *= r;
    }
    return total;
}

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial c = a;
    if (c.coeffs_.size() < b.coeffs_.size()) c.coeffs_.resize(b.coeffs_.size());
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        auto& row = c.coeffs_[i];
        if (row.size() < b.coeffs_[i].size()) row.resize(b.coeffs_[i].size(), Int(0));
        for (std::size_t j = 0; j < b.coeffs_[i].size(); ++j) row[j] += b.coeffs_[i][j];
    }
    c.trim();
    return c;
}

BivariatePolynomial BivariatePolynomial::operator-() const {
    BivariatePolynomial c = *this;
    for (auto& row : c.coeffs_)
        for (auto& v : row) v = -v;
    return c;
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) { return a + (-b); }

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial c;
    if (a.is_zero() || b.is_zero()) return c;
    std::size_t cols = 0;
    for (const auto& row : a.coeffs_) cols = std::max(cols, row.size());
    std::size_t bcols = 0;
    for (const auto& row : b.coeffs_) bcols = std::max(bcols, row.size());
    c.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, std::vector<Int>(cols + bcols - 1, Int(0)));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < a.coeffs_[i].size(); ++j) {
            if (a.coeffs_[i][j] == 0) continue;
            for (std::size_t k = 0; k < b.coeffs_.size(); ++k)
                for (std::size_t l = 0; l < b.coeffs_[k].size(); ++l)
                    c.coeffs_[i + k][j + l] += a.coeffs_[i][j] * b.coeffs_[k][l];
        }
    c.trim();
    return c;
}

bool operator==(const BivariatePolynomial& a, const BivariatePolynomial& b) { return (a - b).is_zero(); }

BivariatePolynomial BivariatePolynomial::pow(unsigned n) const {
    BivariatePolynomial result(1);
    for (unsigned i = 0; i < n; ++i) result = result * *this;
    return result;
}

BivariatePolynomial BivariatePolynomial::compose(const BivariatePolynomial& x, const BivariatePolynomial& y) const {
    BivariatePolynomial total;
    BivariatePolynomial xp(1);
    for (const auto& row : coeffs_) {
        BivariatePolynomial yp(1);
        for (const auto& c : row) {
            if (c != 0) total = total + BivariatePolynomial(c) * xp * yp;
            yp = yp * y;
        }
        xp = xp * x;
    }
    return total;
}

std::string BivariatePolynomial::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < coeffs_[i].size(); ++j) {
            const Int& c = coeffs_[i][j];
            if (c == 0) continue;
            if (out.empty()) out += c < 0 ? "-" : "";
            else out += c < 0 ? " - " : " + ";
            std::string term;
            if (i > 0) term += i > 1 ? "r^" + std::to_string(i) : "r";
            if (j > 0) term += (term.empty() ? "" : "*") + (j > 1 ? "s^" + std::to_string(j) : std::string("s"));
            Int mag = abs(c);
            if (term.empty()) out += mag.get_str();
            else out += (mag == 1 ? "" : mag.get_str() + "*") + term;
        }
    return out;
}

}  // namespace brauerk3
