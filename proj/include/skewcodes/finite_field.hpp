#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "skewcodes/errors.hpp"

namespace skewcodes {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

// F_{p^s} in polynomial-basis representation over F_p.
//
// An element is stored as a 32-bit "rep": the base-p digit string of its
// coordinate vector (c_0, ..., c_{s-1}) in the basis {1, x, ..., x^{s-1}},
// i.e. rep = sum c_i p^i.  Multiplication and inversion go through
// log/antilog tables built once at construction, so q = p^s is capped at
// 2^16.  All arithmetic is exact.
class Field : public std::enable_shared_from_this<Field> {
public:
    using Rep = std::uint32_t;

    // modulus: ascending coefficients over F_p, monic of degree s;
    // empty means "pick the default": the smallest monic irreducible of
    // degree s in base-p coefficient order.
    static FieldPtr make(unsigned p, unsigned s,
                         std::vector<unsigned> modulus = {},
                         std::string gen_name = "a");

    unsigned p() const { return p_; }
    unsigned s() const { return s_; }
    std::uint32_t q() const { return q_; }
    const std::vector<unsigned>& modulus() const { return mod_; }
    const std::string& gen_name() const { return gen_name_; }

    // Structural equality: same p, s and modulus (generator name ignored).
    bool same_as(const Field& other) const;

    // ---- raw arithmetic on reps (all inputs must be < q) ----
    Rep add(Rep a, Rep b) const;
    Rep sub(Rep a, Rep b) const;
    Rep neg(Rep a) const;
    Rep mul(Rep a, Rep b) const;
    Rep inv(Rep a) const;          // DomainError on 0
    Rep div(Rep a, Rep b) const;   // DomainError on b = 0
    Rep pow(Rep a, long long e) const;  // 0^0 = 1; negative e inverts
    // a^(p^k) for any integer k (reduced mod s); the Frobenius orbit.
    Rep frobenius(Rep a, long long k) const;

    // Multiplicative order of a nonzero element.
    std::uint32_t element_order(Rep a) const;
    // The fixed primitive element the tables are built on.
    Rep primitive_element() const { return prim_; }
    // rep of the polynomial-basis generator x (requires s > 1).
    Rep gen_rep() const;
    // Canonical embedding of an integer (value mod p) into the prime field.
    Rep from_int(long long v) const;

    // ---- element factory ----
    FieldElement elem(Rep r) const;
    FieldElement zero() const;
    FieldElement one() const;
    FieldElement gen() const;  // element for gen_rep()

    // digits <-> rep helpers (base-p coordinate vector, ascending)
    std::vector<unsigned> rep_digits(Rep a) const;
    Rep digits_rep(const std::vector<unsigned>& d) const;

private:
    Field() = default;
    void build_tables();

    unsigned p_ = 0, s_ = 0;
    std::uint32_t q_ = 0;
    std::vector<unsigned> mod_;
    std::string gen_name_;
    Rep prim_ = 0;
    std::vector<Rep> exp_;            // size 2(q-1), exp_[i] = g^i
    std::vector<std::uint32_t> log_;  // size q, log_[0] unused
};

// Value-semantic element handle; carries its field.
class FieldElement {
public:
    FieldElement() = default;
    FieldElement(FieldPtr f, Field::Rep r) : f_(std::move(f)), r_(r) {}

    const FieldPtr& field() const { return f_; }
    Field::Rep rep() const { return r_; }
    bool is_zero() const { return r_ == 0; }
    bool is_one() const { return r_ == 1; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement inv() const;
    FieldElement pow(long long e) const;
    FieldElement frob(long long k) const;  // a^(p^k)
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

private:
    void check(const FieldElement& o) const;
    FieldPtr f_;
    Field::Rep r_ = 0;
};

// theta : a -> a^(p^t), an automorphism of F_{p^s} over F_p.
class Automorphism {
public:
    // t is reduced mod s; any integer accepted.
    Automorphism(FieldPtr f, long long t);

    const FieldPtr& field() const { return f_; }
    unsigned exponent() const { return t_; }
    bool is_identity() const { return t_ == 0; }
    // Order of theta in the Galois group: s / gcd(s, t).
    unsigned order() const;

    // theta^power applied to a (power may be negative).
    Field::Rep apply(Field::Rep a, long long power = 1) const;
    FieldElement operator()(const FieldElement& a) const;

    Automorphism power(long long k) const;  // theta^k
    Automorphism inverse() const;
    bool operator==(const Automorphism& o) const;
    bool operator!=(const Automorphism& o) const { return !(*this == o); }

    // Fixed subfield F_q^theta = F_{p^d} with d = gcd(s, t) (t = 0 fixes all).
    unsigned fixed_degree() const;
    bool fixes(Field::Rep a) const;
    // All reps fixed by theta, ascending.
    std::vector<Field::Rep> fixed_subfield() const;

private:
    FieldPtr f_;
    unsigned t_ = 0;
};

// ---- F_p[x] utilities used for moduli (plain integer coefficient vectors) ----
// Coefficients ascending, reduced mod p; used before a Field exists.
namespace fp_poly {
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);
std::vector<unsigned> default_modulus(unsigned p, unsigned s);
}  // namespace fp_poly

}  // namespace skewcodes
