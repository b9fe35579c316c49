#include "brauerk3/nslattice.hpp"

#include "brauerk3/error.hpp"

#include <stdexcept>

namespace brauerk3 {

EndomorphismRing EndomorphismRing::imaginary(const Int& c, const Int& d) {
    if (c * c - 4 * d >= 0) {
        throw Error(ErrorKind::NotImaginary,
                    "x^2 + " + c.get_str() + "x + " + d.get_str() + " has non-negative discriminant");
    }
    return {true, c, d};
}

std::string EndomorphismRing::to_string() const {
    if (!cm) return "Z";
    return "Z[alpha], alpha^2 + (" + c.get_str() + ")alpha + (" + d.get_str() + ") = 0";
}

EndElement dual(const EndElement& f, const EndomorphismRing& ring) { return {f.u - f.v * ring.c, -f.v}; }

Int degree(const EndElement& f, const EndomorphismRing& ring) {
    return f.u * f.u - f.u * ring.c * f.v + ring.d * f.v * f.v;
}

EndElement multiply(const EndElement& f, const EndElement& g, const EndomorphismRing& ring) {
    Int vv = f.v * g.v;
    return {f.u * g.u - ring.d * vv, f.u * g.v + f.v * g.u - ring.c * vv};
}

Int trace(const EndElement& f, const EndomorphismRing& ring) { return 2 * f.u - ring.c * f.v; }

std::string to_string(const EndElement& f) {
    if (f.v == 0) return f.u.get_str();
    Int mag = abs(f.v);
    std::string v = mag == 1 ? std::string() : mag.get_str();
    if (f.u == 0) return (f.v < 0 ? "-" : "") + v + "alpha";
    return f.u.get_str() + (f.v < 0 ? " - " : " + ") + v + "alpha";
}

std::string KaniClass::to_string() const {
    return "(" + a.get_str() + ", " + b.get_str() + ", " + brauerk3::to_string(f) + ")";
}

KaniClass kani_e() { return {1, 0, {}}; }
KaniClass kani_e_prime() { return {0, 1, {}}; }

KaniClass graph(const EndElement& f, const EndomorphismRing& ring) { return {1, degree(f, ring), f}; }

KaniClass inverse_graph(const EndElement& f, const EndomorphismRing& ring) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroIsogeny, "the zero map has no inverse graph");
    return {degree(f, ring), 1, dual(f, ring)};
}

KaniClass swap_factors(const KaniClass& x, const EndomorphismRing& ring) { return {x.b, x.a, dual(x.f, ring)}; }

Int intersection_pairing(const KaniClass& x, const KaniClass& y, const EndomorphismRing& ring) {
    return x.a * y.b + y.a * x.b - trace(multiply(dual(x.f, ring), y.f, ring), ring);
}

IntVector to_coordinates(const KaniClass& x, const EndomorphismRing& ring) {
    if (ring.cm) return {x.a, x.b, x.f.u, x.f.v};
    if (x.f.v != 0) throw std::invalid_argument("alpha component on a curve without CM");
    return {x.a, x.b, x.f.u};
}

KaniClass from_coordinates(const IntVector& v, const EndomorphismRing& ring) {
    if (v.size() != ring.lattice_rank()) throw std::invalid_argument("coordinate vector has the wrong length");
    return {v[0], v[1], {v[2], ring.cm ? v[3] : Int(0)}};
}

IntMatrix gram_matrix(const EndomorphismRing& ring) {
    const std::size_t n = ring.lattice_rank();
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            IntVector ei(n, Int(0)), ej(n, Int(0));
            ei[i] = 1;
            ej[j] = 1;
            g(i, j) = intersection_pairing(from_coordinates(ei, ring), from_coordinates(ej, ring), ring);
        }
    return g;
}

KaniClass LatticeAction::apply(const KaniClass& x) const {
    return from_coordinates(matrix * to_coordinates(x, ring), ring);
}

LatticeAction rho_action(const EndomorphismRing& ring) {
    if (ring.cm) {
        // re-validate in case the ring was built by hand
        EndomorphismRing::imaginary(ring.c, ring.d);
        const Int& c = ring.c;
        return {IntMatrix::from_columns({{1, 1, -1, 0}, {1, 0, 0, 0}, {2, 0, -1, 0}, {-c, 0, c, 1}}), 3, ring};
    }
    return {IntMatrix::from_columns({{1, 1, -1}, {1, 0, 0}, {2, 0, -1}}), 3, ring};
}

IntMatrix norm_map(const LatticeAction& action) {
    const IntMatrix& r = action.matrix;
    return IntMatrix::identity(r.rows()) + r + r * r;
}

IntMatrix coboundaries(const LatticeAction& action) {
    return action.matrix - IntMatrix::identity(action.matrix.rows());
}

bool CohomologyResult::trivial() const {
    for (const auto& d : invariant_factors)
        if (d != 1) return false;
    return true;
}

std::optional<Int> CohomologyResult::order() const {
    Int n = 1;
    for (const auto& d : invariant_factors) {
        if (d == 0) return std::nullopt;
        n *= d;
    }
    return n;
}

std::string CohomologyResult::to_string() const {
    std::string head;
    if (trivial()) {
        head = "H1 trivial";
    } else if (auto n = order()) {
        head = "H1 of order " + n->get_str();
    } else {
        head = "H1 infinite";
    }
    return head + "; image rank " + std::to_string(image_rank) + "; kernel rank " + std::to_string(kernel_rank);
}

CohomologyResult cyclic_h1(const LatticeAction& action) {
    const IntMatrix& r = action.matrix;
    if (!r.is_square()) throw Error(ErrorKind::NotOrderThree, "action matrix is not square");
    const IntMatrix id = IntMatrix::identity(r.rows());
    if (r.pow(3) != id || r == id) throw Error(ErrorKind::NotOrderThree, "matrix does not have order 3");

    IntMatrix kernel = integer_kernel(norm_map(action));
    IntMatrix image = coboundaries(action);

    // Coordinates of the coboundary generators in the kernel basis.
    IntMatrix coords(kernel.cols(), image.cols());
    for (std::size_t j = 0; j < image.cols(); ++j) {
        auto x = solve_in_basis(kernel, image.column(j));
        if (!x) throw std::logic_error("coboundary outside ker(N)");
        for (std::size_t i = 0; i < kernel.cols(); ++i) coords(i, j) = (*x)[i];
    }

    CohomologyResult result;
    result.kernel_rank = kernel.cols();
    result.invariant_factors = smith_invariants(coords);
    result.image_rank = result.invariant_factors.size();
    for (std::size_t i = result.image_rank; i < result.kernel_rank; ++i) result.invariant_factors.emplace_back(0);
    return result;
}

IntMatrix torsion_map() { return {{-2, -1}, {1, -1}}; }

Int torsion_surjectivity_det() { return determinant(torsion_map()); }

bool surjective_mod(const Int& n) {
    if (n <= 0) throw std::invalid_argument("modulus must be positive");
    auto d = smith_invariants(torsion_map());
    if (d.size() != 2) return false;
    for (const auto& v : d)
        if (gcd(v, n) != 1) return false;
    return true;
}

A2Invariants a2_invariants() {
    const auto r = BivariatePolynomial::r();
    const auto s = BivariatePolynomial::s();
    return {
        r * r + r * s + s * s,
        BivariatePolynomial(-3) * r * s * (r + s),
        r.pow(3) + BivariatePolynomial(3) * r * r * s - s.pow(3),
    };
}

BivariatePolynomial rotate(const BivariatePolynomial& p) {
    const auto r = BivariatePolynomial::r();
    const auto s = BivariatePolynomial::s();
    return p.compose(s, -r - s);
}

BivariatePolynomial a2_relation() {
    auto [a, b, c] = a2_invariants();
    return a.pow(3) - b * b - b * c - c * c;
}

bool verify_a2_invariants() {
    auto inv = a2_invariants();
    for (const auto* p : {&inv.a, &inv.b, &inv.c})
        if (!(rotate(*p) == *p)) return false;
    return a2_relation().is_zero();
}

}  // namespace brauerk3
