#include "skewcodes/factorization.hpp"

namespace skewcodes {

namespace {

void require_commutative(const SkewPoly& p, const char* what) {
    if (p.aut_exponent() != 0)
        throw DomainError(std::string(what) + " requires the identity automorphism");
}

// monic polynomials of the given degree in ascending base-q coefficient order
std::vector<SkewPoly> monic_of_degree(const Automorphism& th, unsigned d) {
    const std::uint64_t q = th.field()->q();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    std::vector<SkewPoly> out;
    out.reserve((std::size_t)count);
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<Field::Rep> c(d + 1, 0);
        std::uint64_t t = v;
        for (unsigned i = 0; i < d; ++i) { c[i] = (Field::Rep)(t % q); t /= q; }
        c[d] = 1;
        out.push_back(SkewPoly::of_reps(th, std::move(c)));
    }
    return out;
}

}  // namespace

bool is_irreducible_commutative(const SkewPoly& p) {
    require_commutative(p, "irreducibility test");
    if (p.is_zero() || p.degree() == 0) return false;
    const unsigned d = p.degree();
    const Automorphism th = p.theta();
    for (unsigned e = 1; 2 * e <= d; ++e)
        for (const auto& g : monic_of_degree(th, e))
            if (right_quotrem(p, g).rem.is_zero()) return false;
    return true;
}

std::vector<std::pair<SkewPoly, unsigned>> factor_commutative(const SkewPoly& p) {
    require_commutative(p, "factorization");
    if (p.is_zero()) throw DomainError("cannot factor the zero polynomial");
    const Automorphism th = p.theta();
    SkewPoly rest = p.monic();
    std::vector<std::pair<SkewPoly, unsigned>> out;
    unsigned d = 1;
    while (!rest.is_one()) {
        if (2 * d > rest.degree()) {
            // no factor of degree < d remains, so rest itself is irreducible
            out.emplace_back(rest, 1);
            break;
        }
        for (const auto& g : monic_of_degree(th, d)) {
            unsigned mult = 0;
            while (true) {
                auto qr = right_quotrem(rest, g);
                if (!qr.rem.is_zero()) break;
                rest = qr.quot;
                ++mult;
            }
            if (mult) out.emplace_back(g, mult);
            if (rest.is_one() || 2 * d > rest.degree()) break;
        }
        ++d;
    }
    return out;
}

SkewPoly poly_gcd_commutative(const SkewPoly& a, const SkewPoly& b) {
    require_commutative(a, "gcd");
    if (a.is_zero() && b.is_zero()) return a;
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return right_gcd(a, b).g;
}

SkewPoly poly_lcm_commutative(const SkewPoly& a, const SkewPoly& b) {
    require_commutative(a, "lcm");
    if (a.is_zero() || b.is_zero()) throw DomainError("lcm with zero polynomial");
    SkewPoly g = poly_gcd_commutative(a, b);
    return right_quotrem(a * b, g).quot.monic();
}

}  // namespace skewcodes
