#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "skewcodes/finite_field.hpp"

namespace skewcodes {

// Element of the skew polynomial ring R = F_q[X; theta] with the commutation
// rule X * a = theta(a) * X for a in F_q.  Coefficients are stored ascending
// (c_[i] is the coefficient of X^i) and normalized: the zero polynomial has
// an empty coefficient vector, anything else has a nonzero top coefficient.
// The degree of the zero polynomial is treated as "minus infinity": degree()
// refuses to answer rather than returning a sentinel integer.
class SkewPoly {
public:
    SkewPoly(Automorphism theta, const std::vector<FieldElement>& coeffs);
    static SkewPoly of_reps(const Automorphism& theta, std::vector<Field::Rep> coeffs);
    static SkewPoly zero(const Automorphism& theta);
    static SkewPoly one(const Automorphism& theta);
    static SkewPoly x(const Automorphism& theta);
    // c * X^k
    static SkewPoly monomial(const Automorphism& theta, FieldElement c, unsigned k);

    const FieldPtr& field() const { return f_; }
    unsigned aut_exponent() const { return t_; }
    Automorphism theta() const { return Automorphism(f_, t_); }

    bool is_zero() const { return c_.empty(); }
    // Degree of a nonzero polynomial; DomainError on zero (its degree is
    // "minus infinity" and must never feed integer arithmetic).
    unsigned degree() const;
    std::size_t coeff_count() const { return c_.size(); }
    Field::Rep coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    FieldElement coeff_elem(std::size_t i) const { return f_->elem(coeff(i)); }
    Field::Rep lead() const;
    Field::Rep constant() const { return coeff(0); }
    const std::vector<Field::Rep>& reps() const { return c_; }

    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    SkewPoly operator+(const SkewPoly& o) const;
    SkewPoly operator-(const SkewPoly& o) const;
    SkewPoly operator-() const;
    SkewPoly operator*(const SkewPoly& o) const;  // skew product
    bool operator==(const SkewPoly& o) const;
    bool operator!=(const SkewPoly& o) const { return !(*this == o); }

    SkewPoly scale_left(Field::Rep c) const;   // c * f
    SkewPoly scale_right(Field::Rep c) const;  // f * c = sum f_i theta^i(c) X^i
    SkewPoly monic() const;                    // lead^{-1} * f (left scale)
    SkewPoly mul_x_left(unsigned k) const;     // X^k * f
    SkewPoly mul_x_right(unsigned k) const;    // f * X^k
    SkewPoly pow(unsigned k) const;

    // Coefficientwise theta^k (k may be negative).
    SkewPoly theta_shift(long long k) const;

private:
    SkewPoly(FieldPtr f, unsigned t, std::vector<Field::Rep> c);
    void trim();
    void check_compatible(const SkewPoly& o) const;

    FieldPtr f_;
    unsigned t_ = 0;
    std::vector<Field::Rep> c_;
};

struct QuotRem {
    SkewPoly quot, rem;
};

// a = quot * b + rem with rem = 0 or deg rem < deg b (divisor on the RIGHT).
QuotRem right_quotrem(const SkewPoly& a, const SkewPoly& b);
// a = b * quot + rem with rem = 0 or deg rem < deg b (divisor on the LEFT).
QuotRem left_quotrem(const SkewPoly& a, const SkewPoly& b);

// true iff f = q * g exactly for some q (g sits on the right).
bool is_right_divisor(const SkewPoly& g, const SkewPoly& f);

struct RightGcd {
    SkewPoly g, u, v;  // g = u*a + v*b, g monic greatest common right divisor
};
RightGcd right_gcd(const SkewPoly& a, const SkewPoly& b);

// Least left common multiple: the monic L of minimal degree with
// L = u*a = v*b (both a and b are right divisors of L).
SkewPoly left_lcm(const SkewPoly& a, const SkewPoly& b);

// All monic right divisors of f of the given degree, paired with their
// cofactors (f = q * g).  By default only candidates with nonzero constant
// term are enumerated (q^{d-1}(q-1) of them); allow_zero_const widens the
// scan to all q^d monic candidates.
std::vector<std::pair<SkewPoly, SkewPoly>> right_divisors(
    const SkewPoly& f, unsigned degree, bool allow_zero_const = false,
    std::uint64_t budget = (std::uint64_t)1 << 20);

// For f = (-1)^n (X^n - sum f_i X^i) with f_0 != 0, the companion polynomial
// f^* = 1 - sum_{i=1}^{n} theta^i(f_{n-i}) X^i.  Left and right division
// roles swap between f and f^*; their periods agree.
SkewPoly star(const SkewPoly& f);

SkewPoly theta_shift(const SkewPoly& f, long long k);

}  // namespace skewcodes
