#include "brauerk3/arith.hpp"

#include "brauerk3/error.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace brauerk3::arith {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialBound = 10007;

const std::vector<u64>& small_primes() {
    static const std::vector<u64> primes = primes_up_to(kTrialBound);
    return primes;
}

u64 gcd_u64(u64 a, u64 b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of the odd
// composite n.
u64 rho_u64(u64 n) {
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, n) + c) % n; };
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u64(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = gcd_u64(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

Int rho_big(const Int& n) {
    for (unsigned long c = 1;; ++c) {
        Int x = 2, y = 2, g = 1;
        auto f = [&](const Int& v) {
            Int r = v * v + c;
            mpz_mod(r.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t());
            return r;
        };
        while (g == 1) {
            x = f(x);
            y = f(f(y));
            Int d = abs(x - y);
            mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
        }
        if (g != n) return g;
    }
}

void split_into(const Int& n, std::map<Int, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int d;
    if (fits_u64(n)) {
        d = to_int(rho_u64(to_u64(n)));
    } else {
        d = rho_big(n);
    }
    split_into(d, out);
    split_into(Int(n / d), out);
}

}  // namespace

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) * b) % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 invmod(u64 a, u64 m) {
    Int r;
    Int ai = to_int(a), mi = to_int(m);
    if (mpz_invert(r.get_mpz_t(), ai.get_mpz_t(), mi.get_mpz_t()) == 0) {
        throw Error(ErrorKind::NotCoprime, "no inverse of " + std::to_string(a) + " mod " + std::to_string(m));
    }
    return to_u64(r);
}

u64 mod(const Int& a, u64 m) {
    Int mi = to_int(m);
    Int r;
    mpz_mod(r.get_mpz_t(), a.get_mpz_t(), mi.get_mpz_t());
    return to_u64(r);
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime(to_u64(n));
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::optional<u64> sqrt_mod(u64 a, u64 p) {
    a %= p;
    if (a == 0) return 0;
    if (p == 2) return a;
    if (powmod(a, (p - 1) / 2, p) != 1) return std::nullopt;
    if (p % 4 == 3) return powmod(a, (p + 1) / 4, p);
    // Tonelli-Shanks
    u64 q = p - 1;
    unsigned s = 0;
    while ((q & 1) == 0) {
        q >>= 1;
        ++s;
    }
    u64 z = 2;
    while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;
    u64 c = powmod(z, q, p);
    u64 r = powmod(a, (q + 1) / 2, p);
    u64 t = powmod(a, q, p);
    unsigned m = s;
    while (t != 1) {
        unsigned i = 0;
        u64 t2 = t;
        while (t2 != 1) {
            t2 = mulmod(t2, t2, p);
            ++i;
        }
        u64 b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = mulmod(b, b, p);
        r = mulmod(r, b, p);
        c = mulmod(b, b, p);
        t = mulmod(t, c, p);
        m = i;
    }
    return r;
}

int legendre(const Int& a, u64 p) {
    u64 r = mod(a, p);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

unsigned valuation(const Int& n, const Int& p) {
    if (n == 0) throw Error(ErrorKind::ZeroInput, "valuation of zero");
    unsigned v = 0;
    Int m = n;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
        m /= p;
        ++v;
    }
    return v;
}

int valuation(const Rational& q, const Int& p) {
    return static_cast<int>(valuation(q.get_num(), p)) - static_cast<int>(valuation(q.get_den(), p));
}

std::map<Int, unsigned> factor(const Int& n) {
    if (n == 0) throw Error(ErrorKind::ZeroInput, "cannot factor zero");
    std::map<Int, unsigned> out;
    Int m = abs(n);
    for (u64 p : small_primes()) {
        if (m == 1) break;
        unsigned e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
            ++e;
        }
        if (e > 0) out[to_int(p)] = e;
    }
    split_into(m, out);
    return out;
}

std::vector<u64> primes_up_to(u64 n) {
    std::vector<u64> primes;
    if (n < 2) return primes;
    std::vector<bool> sieve(n + 1, true);
    sieve[0] = sieve[1] = false;
    for (u64 i = 2; i * i <= n; ++i) {
        if (!sieve[i]) continue;
        for (u64 j = i * i; j <= n; j += i) sieve[j] = false;
    }
    for (u64 i = 2; i <= n; ++i) {
        if (sieve[i]) primes.push_back(i);
    }
    return primes;
}

bool fits_u64(const Int& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

u64 to_u64(const Int& n) {
    if (!fits_u64(n)) throw Error(ErrorKind::OutOfRange, n.get_str() + " does not fit in 64 bits");
    return mpz_get_ui(n.get_mpz_t());
}

Int pow(const Int& base, unsigned long exp) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

bool is_integer_cube(const Int& n) {
    Int root;
    return mpz_root(root.get_mpz_t(), n.get_mpz_t(), 3) != 0;
}

std::string str(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::ZeroInput, "zero denominator in '" + text + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

}  // namespace brauerk3::arith
