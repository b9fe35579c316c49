#include "brauerk3/intmatrix.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace brauerk3 {

namespace {

void swap_rows(IntMatrix& a, std::size_t r1, std::size_t r2) {
    if (r1 == r2) return;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

void swap_cols(IntMatrix& a, std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (std::size_t i = 0; i < a.rows(); ++i) std::swap(a(i, c1), a(i, c2));
}

// row_target -= q * row_source
void sub_row(IntMatrix& a, std::size_t target, std::size_t source, const Int& q) {
    for (std::size_t j = 0; j < a.cols(); ++j) a(target, j) -= q * a(source, j);
}

void sub_col(IntMatrix& a, std::size_t target, std::size_t source, const Int& q) {
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, target) -= q * a(i, source);
}

Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
        if (row.size() != cols_) throw std::invalid_argument("ragged matrix literal");
        for (long v : row) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns) {
    if (columns.empty()) return {};
    IntMatrix m(columns.front().size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        if (columns[j].size() != m.rows()) throw std::invalid_argument("columns of unequal length");
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = columns[j][i];
    }
    return m;
}

IntVector IntMatrix::column(std::size_t j) const {
    IntVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::pow(unsigned n) const {
    if (!is_square()) throw std::invalid_argument("power of a non-square matrix");
    IntMatrix result = identity(rows_);
    for (unsigned i = 0; i < n; ++i) result = result * *this;
    return result;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    IntMatrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in sum");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch in difference");
    IntMatrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
    if (a.cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    IntVector out(a.rows_, Int(0));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

std::vector<Int> smith_invariants(IntMatrix a) {
    std::vector<Int> diag;
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // Move the smallest nonzero entry of the trailing block to (t, t).
            std::size_t pi = m, pj = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (a(i, j) != 0 && (pi == m || abs(a(i, j)) < abs(a(pi, pj)))) {
                        pi = i;
                        pj = j;
                    }
            if (pi == m) return diag;
            swap_rows(a, t, pi);
            swap_cols(a, t, pj);
            const Int pivot = a(t, t);

            bool remainder = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (a(i, t) == 0) continue;
                sub_row(a, i, t, floor_div(a(i, t), pivot));
                remainder = remainder || a(i, t) != 0;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (a(t, j) == 0) continue;
                sub_col(a, j, t, floor_div(a(t, j), pivot));
                remainder = remainder || a(t, j) != 0;
            }
            if (remainder) continue;

            // Pivot must divide the whole trailing block.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < n && !fixed; ++j)
                    if (!mpz_divisible_p(a(i, j).get_mpz_t(), pivot.get_mpz_t())) {
                        for (std::size_t k = 0; k < n; ++k) a(t, k) += a(i, k);
                        fixed = true;
                    }
            if (fixed) continue;
            diag.push_back(abs(pivot));
            break;
        }
    }
    return diag;
}

std::size_t rank(const IntMatrix& a) { return smith_invariants(a).size(); }

Int determinant(const IntMatrix& input) {
    if (!input.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
    // Bareiss fraction-free elimination.
    IntMatrix a = input;
    const std::size_t n = a.rows();
    if (n == 0) return 1;
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == 0) ++swap;
            if (swap == n) return 0;
            swap_rows(a, k, swap);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntMatrix integer_kernel(const IntMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    // Row-reduce [a^T | I]; rows whose a^T part vanishes carry kernel vectors.
    IntMatrix b(n, m + n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < m; ++j) b(i, j) = a(j, i);
        b(i, m + i) = 1;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < m && r < n; ++c) {
        for (;;) {
            std::size_t best = n;
            for (std::size_t i = r; i < n; ++i)
                if (b(i, c) != 0 && (best == n || abs(b(i, c)) < abs(b(best, c)))) best = i;
            if (best == n) break;
            swap_rows(b, r, best);
            bool cleared = true;
            for (std::size_t i = r + 1; i < n; ++i) {
                if (b(i, c) == 0) continue;
                sub_row(b, i, r, floor_div(b(i, c), b(r, c)));
                cleared = cleared && b(i, c) == 0;
            }
            if (cleared) {
                ++r;
                break;
            }
        }
    }
    IntMatrix kernel(n, n - r);
    for (std::size_t k = r; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) kernel(i, k - r) = b(k, m + i);
    return kernel;
}

std::optional<IntVector> solve_in_basis(const IntMatrix& basis, const IntVector& y) {
    const std::size_t n = basis.rows(), k = basis.cols();
    if (y.size() != n) throw std::invalid_argument("vector length does not match basis");
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(k + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < k; ++j) aug[i][j] = basis(i, j);
        aug[i][k] = y[i];
    }
    std::size_t row = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < k && row < n; ++c) {
        std::size_t p = row;
        while (p < n && aug[p][c] == 0) ++p;
        if (p == n) return std::nullopt;  // dependent columns
        std::swap(aug[row], aug[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == row || aug[i][c] == 0) continue;
            Rational f = aug[i][c] / aug[row][c];
            for (std::size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_col.push_back(c);
        ++row;
    }
    if (pivot_col.size() != k) return std::nullopt;
    for (std::size_t i = row; i < n; ++i)
        if (aug[i][k] != 0) return std::nullopt;
    IntVector x(k);
    for (std::size_t i = 0; i < k; ++i) {
        Rational v = aug[i][k] / aug[i][pivot_col[i]];
        if (v.get_den() != 1) return std::nullopt;
        x[pivot_col[i]] = v.get_num();
    }
    return x;
}

bool is_saturated(const IntMatrix& generators) {
    auto d = smith_invariants(generators);
    return std::all_of(d.begin(), d.end(), [](const Int& v) { return v == 1; });
}

}  // namespace brauerk3
