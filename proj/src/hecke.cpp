#include "brauerk3/hecke.hpp"

#include "brauerk3/error.hpp"

#include <algorithm>
#include <future>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

namespace brauerk3 {

namespace {

using u64 = std::uint64_t;

// lambda = n/d is a cube mod pi iff n d^2 is.
EisensteinInt cleared(const Rational& lambda) {
    return EisensteinInt(lambda.get_num() * lambda.get_den() * lambda.get_den());
}

struct ScanContext {
    const CurveModel& curve;
    Rational lambda;
    Int four_d;
    Int excluded;  // 6 D num(lambda) den(lambda)
};

std::optional<M3Certificate> try_prime(const ScanContext& ctx, u64 p) {
    if (!arith::is_prime(p)) return std::nullopt;
    if (mpz_divisible_ui_p(ctx.excluded.get_mpz_t(), p)) return std::nullopt;
    auto pi = std::get<PrimaryPrime>(split_prime(p));
    SexticUnit lam = cubic_symbol(cleared(ctx.lambda), pi);
    if (!lam.is_one()) return std::nullopt;
    SexticUnit cubic = cubic_symbol(EisensteinInt(ctx.four_d), pi);
    if (cubic.is_one()) return std::nullopt;

    M3Certificate cert;
    cert.p = p;
    cert.pi = pi;
    cert.lambda_cubic = lam;
    cert.four_d_cubic = cubic;
    cert.four_d_sextic = sextic_symbol(EisensteinInt(ctx.four_d), pi);
    cert.hecke = hecke_at_split_prime(ctx.curve, pi, 1);
    cert.in_o3 = in_order(cert.hecke, OrderMembership{3, 1});
    return cert;
}

// Candidates are p = 7, 13, 19, ... (p == 1 mod 6) up to the bound.
std::optional<M3Certificate> scan_range(const ScanContext& ctx, u64 first, u64 last) {
    for (u64 p = first; p <= last; p += 6) {
        if (auto cert = try_prime(ctx, p)) return cert;
    }
    return std::nullopt;
}

}  // namespace

Int jacobian_D(const PrimitiveTriple& t) {
    Int abc = t.product();
    return -432 * abc * abc;
}

HeckeValue hecke_at_split_prime(const CurveModel& curve, const PrimaryPrime& pi, unsigned inertia_degree) {
    if (!pi.split) throw std::invalid_argument("Hecke values are only computed at split primes");
    if (inertia_degree == 0) throw std::invalid_argument("inertia degree must be positive");
    Int bad = 6 * curve.D;
    if (mpz_divisible_ui_p(bad.get_mpz_t(), pi.rational_prime)) {
        throw Error(ErrorKind::BadReduction,
                    "p = " + std::to_string(pi.rational_prime) + " divides 6D = " + bad.get_str());
    }
    SexticUnit chi = sextic_symbol(EisensteinInt(4 * curve.D), pi);
    EisensteinInt base = chi.inverse().value() * pi.pi;
    return HeckeValue{base.pow(inertia_degree), pi, inertia_degree};
}

bool in_order(const EisensteinInt& value, const OrderMembership& order) {
    Int modulus = arith::pow(order.l, order.k);
    return mpz_divisible_p(value.y().get_mpz_t(), modulus.get_mpz_t());
}

M3Certificate find_m3_witness(const CurveModel& curve, const Rational& lambda, const ScanOptions& options) {
    if (curve.D == 0) throw Error(ErrorKind::ZeroD, "D must be nonzero");
    if (lambda <= 0) throw std::invalid_argument("lambda must be a positive rational");
    Int four_d = 4 * curve.D;
    if (is_cube(Rational(four_d))) {
        throw Error(ErrorKind::CubeCase, "4D = " + four_d.get_str() + " is a cube; no witness exists");
    }
    ScanContext ctx{curve, lambda, four_d, 6 * curve.D * lambda.get_num() * lambda.get_den()};

    const unsigned threads = std::max(1U, options.threads);
    if (threads == 1) {
        if (auto cert = scan_range(ctx, 7, options.bound)) return *cert;
    } else {
        // Waves of consecutive blocks, one block per worker; the first wave
        // containing a witness decides, and the smallest prime in it wins.
        const u64 block = 6 * 512;
        for (u64 start = 7; start <= options.bound; start += block * threads) {
            std::vector<std::future<std::optional<M3Certificate>>> jobs;
            for (unsigned w = 0; w < threads; ++w) {
                u64 first = start + w * block;
                if (first > options.bound) break;
                u64 last = std::min(options.bound, first + block - 1);
                jobs.push_back(std::async(std::launch::async, scan_range, std::cref(ctx), first, last));
            }
            for (auto& job : jobs) {
                if (auto cert = job.get()) return *cert;
            }
        }
    }
    throw Error(ErrorKind::NotFound, "no witness prime below " + std::to_string(options.bound));
}

M3Certificate find_m3_witness(const CurveModel& curve, const LambdaChoice& lambda, const ScanOptions& options) {
    return find_m3_witness(curve, lambda.value(), options);
}

bool verify_certificate(const M3Certificate& cert, const CurveModel& curve, const Rational& lambda) {
    if (!arith::is_prime(cert.p) || cert.p % 3 != 1) return false;
    const auto& pi = cert.pi;
    if (!pi.split || pi.rational_prime != cert.p || pi.residue_norm != arith::to_int(cert.p)) return false;
    if (pi.pi.norm() != pi.residue_norm || !is_primary(pi.pi)) return false;
    Int excluded = 6 * curve.D * lambda.get_num() * lambda.get_den();
    if (mpz_divisible_ui_p(excluded.get_mpz_t(), cert.p)) return false;
    if (!cubic_symbol(cleared(lambda), pi).is_one()) return false;
    const EisensteinInt four_d(4 * curve.D);
    SexticUnit cubic = cubic_symbol(four_d, pi);
    SexticUnit sextic = sextic_symbol(four_d, pi);
    if (cubic.is_one() || sextic.is_sign() || sextic.pow(2) != cubic) return false;
    HeckeValue psi = hecke_at_split_prime(curve, pi, 1);
    if (!(psi.value == cert.hecke.value) || psi.value.norm() != pi.residue_norm) return false;
    return !in_order(psi, OrderMembership{3, 1}) && !cert.in_o3;
}

}  // namespace brauerk3
