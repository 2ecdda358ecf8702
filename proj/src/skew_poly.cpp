#include "skewcodes/skew_poly.hpp"

#include <algorithm>

namespace skewcodes {

SkewPoly::SkewPoly(FieldPtr f, unsigned t, std::vector<Field::Rep> c)
    : f_(std::move(f)), t_(t), c_(std::move(c)) {
    trim();
}

SkewPoly::SkewPoly(Automorphism theta, const std::vector<FieldElement>& coeffs)
    : f_(theta.field()), t_(theta.exponent()) {
    c_.reserve(coeffs.size());
    for (const auto& e : coeffs) {
        if (!e.field() || !e.field()->same_as(*f_))
            throw DomainError("skew polynomial coefficient from another field");
        c_.push_back(e.rep());
    }
    trim();
}

SkewPoly SkewPoly::of_reps(const Automorphism& theta, std::vector<Field::Rep> coeffs) {
    for (auto r : coeffs)
        if (r >= theta.field()->q()) throw DomainError("coefficient rep out of range");
    return SkewPoly(theta.field(), theta.exponent(), std::move(coeffs));
}

SkewPoly SkewPoly::zero(const Automorphism& theta) { return of_reps(theta, {}); }
SkewPoly SkewPoly::one(const Automorphism& theta) { return of_reps(theta, {1}); }
SkewPoly SkewPoly::x(const Automorphism& theta) { return of_reps(theta, {0, 1}); }

SkewPoly SkewPoly::monomial(const Automorphism& theta, FieldElement c, unsigned k) {
    if (!c.field() || !c.field()->same_as(*theta.field()))
        throw DomainError("monomial coefficient from another field");
    std::vector<Field::Rep> v(k + 1, 0);
    v[k] = c.rep();
    return SkewPoly(theta.field(), theta.exponent(), std::move(v));
}

void SkewPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

unsigned SkewPoly::degree() const {
    if (c_.empty()) throw DomainError("degree of the zero polynomial is minus infinity");
    return (unsigned)c_.size() - 1;
}

Field::Rep SkewPoly::lead() const {
    if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
    return c_.back();
}

void SkewPoly::check_compatible(const SkewPoly& o) const {
    if (!f_->same_as(*o.f_)) throw DomainError("skew polynomials over different fields");
    if (t_ != o.t_) throw DomainError("skew polynomials with different automorphisms");
}

SkewPoly SkewPoly::operator+(const SkewPoly& o) const {
    check_compatible(o);
    std::vector<Field::Rep> c(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = f_->add(coeff(i), o.coeff(i));
    return SkewPoly(f_, t_, std::move(c));
}

SkewPoly SkewPoly::operator-() const {
    std::vector<Field::Rep> c(c_);
    for (auto& x : c) x = f_->neg(x);
    return SkewPoly(f_, t_, std::move(c));
}

SkewPoly SkewPoly::operator-(const SkewPoly& o) const { return *this + (-o); }

SkewPoly SkewPoly::operator*(const SkewPoly& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return SkewPoly(f_, t_, {});
    std::vector<Field::Rep> c(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) {
            // (a X^i)(b X^j) = a theta^i(b) X^{i+j}
            Field::Rep term = f_->mul(c_[i], f_->frobenius(o.c_[j], (long long)t_ * (long long)i));
            c[i + j] = f_->add(c[i + j], term);
        }
    }
    return SkewPoly(f_, t_, std::move(c));
}

bool SkewPoly::operator==(const SkewPoly& o) const {
    return t_ == o.t_ && f_->same_as(*o.f_) && c_ == o.c_;
}

SkewPoly SkewPoly::scale_left(Field::Rep c) const {
    std::vector<Field::Rep> v(c_);
    for (auto& x : v) x = f_->mul(c, x);
    return SkewPoly(f_, t_, std::move(v));
}

SkewPoly SkewPoly::scale_right(Field::Rep c) const {
    std::vector<Field::Rep> v(c_);
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = f_->mul(v[i], f_->frobenius(c, (long long)t_ * (long long)i));
    return SkewPoly(f_, t_, std::move(v));
}

SkewPoly SkewPoly::monic() const {
    if (is_zero()) throw DomainError("cannot normalize the zero polynomial");
    if (c_.back() == 1) return *this;
    return scale_left(f_->inv(c_.back()));
}

SkewPoly SkewPoly::mul_x_left(unsigned k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : SkewPoly(f_, t_, {});
    std::vector<Field::Rep> v(c_.size() + k, 0);
    for (std::size_t i = 0; i < c_.size(); ++i)
        v[i + k] = f_->frobenius(c_[i], (long long)t_ * (long long)k);
    return SkewPoly(f_, t_, std::move(v));
}

SkewPoly SkewPoly::mul_x_right(unsigned k) const {
    if (is_zero() || k == 0) return k == 0 ? *this : SkewPoly(f_, t_, {});
    std::vector<Field::Rep> v(c_.size() + k, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) v[i + k] = c_[i];
    return SkewPoly(f_, t_, std::move(v));
}

SkewPoly SkewPoly::pow(unsigned k) const {
    SkewPoly acc = SkewPoly::of_reps(theta(), {1});
    for (unsigned i = 0; i < k; ++i) acc = acc * *this;
    return acc;
}

SkewPoly SkewPoly::theta_shift(long long k) const {
    std::vector<Field::Rep> v(c_);
    for (auto& x : v) x = f_->frobenius(x, (long long)t_ * k);
    return SkewPoly(f_, t_, std::move(v));
}

SkewPoly theta_shift(const SkewPoly& f, long long k) { return f.theta_shift(k); }

QuotRem right_quotrem(const SkewPoly& a, const SkewPoly& b) {
    if (b.is_zero()) throw DomainError("right division by zero polynomial");
    const auto& F = a.field();
    const Automorphism th = a.theta();
    if (!F->same_as(*b.field()) || a.aut_exponent() != b.aut_exponent())
        throw DomainError("right division across mismatched rings");
    SkewPoly q = SkewPoly::zero(th);
    SkewPoly r = a;
    const unsigned db = b.degree();
    const Field::Rep bl = b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        unsigned d = r.degree() - db;
        // (c X^d)(b_e X^e) = c theta^d(b_e) X^{d+e}
        Field::Rep c = F->div(r.lead(), th.apply(bl, (long long)d));
        SkewPoly term = SkewPoly::monomial(th, F->elem(c), d);
        q = q + term;
        r = r - term * b;
    }
    return {q, r};
}

QuotRem left_quotrem(const SkewPoly& a, const SkewPoly& b) {
    if (b.is_zero()) throw DomainError("left division by zero polynomial");
    const auto& F = a.field();
    const Automorphism th = a.theta();
    if (!F->same_as(*b.field()) || a.aut_exponent() != b.aut_exponent())
        throw DomainError("left division across mismatched rings");
    SkewPoly q = SkewPoly::zero(th);
    SkewPoly r = a;
    const unsigned db = b.degree();
    const Field::Rep bl = b.lead();
    while (!r.is_zero() && r.degree() >= db) {
        unsigned d = r.degree() - db;
        // (b_e X^e)(c X^d) = b_e theta^e(c) X^{e+d}
        Field::Rep c = th.apply(F->div(r.lead(), bl), -(long long)db);
        SkewPoly term = SkewPoly::monomial(th, F->elem(c), d);
        q = q + term;
        r = r - b * term;
    }
    return {q, r};
}

bool is_right_divisor(const SkewPoly& g, const SkewPoly& f) {
    if (g.is_zero()) return f.is_zero();
    return right_quotrem(f, g).rem.is_zero();
}

RightGcd right_gcd(const SkewPoly& a, const SkewPoly& b) {
    const Automorphism th = a.theta();
    SkewPoly r0 = a, r1 = b;
    SkewPoly u0 = SkewPoly::one(th), u1 = SkewPoly::zero(th);
    SkewPoly v0 = SkewPoly::zero(th), v1 = SkewPoly::one(th);
    while (!r1.is_zero()) {
        auto qr = right_quotrem(r0, r1);
        SkewPoly u2 = u0 - qr.quot * u1;
        SkewPoly v2 = v0 - qr.quot * v1;
        r0 = r1; r1 = qr.rem;
        u0 = u1; u1 = u2;
        v0 = v1; v1 = v2;
    }
    if (r0.is_zero()) return {r0, u0, v0};  // gcd(0,0) = 0
    Field::Rep s = a.field()->inv(r0.lead());
    return {r0.scale_left(s), u0.scale_left(s), v0.scale_left(s)};
}

namespace {

// Left kernel of the small dense rep-matrix `rows` (each row has `cols`
// entries), returned as combination vectors over the given field.  Local
// helper so the polynomial layer does not depend on the matrix layer.
std::vector<std::vector<Field::Rep>> rep_left_kernel(
    const FieldPtr& F, std::vector<std::vector<Field::Rep>> rows, std::size_t cols) {
    const std::size_t n = rows.size();
    // augment with identity to track combinations
    for (std::size_t i = 0; i < n; ++i) {
        rows[i].resize(cols + n, 0);
        rows[i][cols + i] = 1;
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < n; ++c) {
        std::size_t piv = rank;
        while (piv < n && rows[piv][c] == 0) ++piv;
        if (piv == n) continue;
        std::swap(rows[rank], rows[piv]);
        Field::Rep inv = F->inv(rows[rank][c]);
        for (auto& x : rows[rank]) x = F->mul(x, inv);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == rank || rows[i][c] == 0) continue;
            Field::Rep m = rows[i][c];
            for (std::size_t j = 0; j < cols + n; ++j)
                rows[i][j] = F->sub(rows[i][j], F->mul(m, rows[rank][j]));
        }
        ++rank;
    }
    std::vector<std::vector<Field::Rep>> kernel;
    for (std::size_t i = rank; i < n; ++i)
        kernel.emplace_back(rows[i].begin() + (long)cols, rows[i].end());
    return kernel;
}

}  // namespace

SkewPoly left_lcm(const SkewPoly& a, const SkewPoly& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("left lcm with zero polynomial");
    const Automorphism th = a.theta();
    const auto& F = a.field();
    if (!F->same_as(*b.field()) || a.aut_exponent() != b.aut_exponent())
        throw DomainError("left lcm across mismatched rings");
    if (a.degree() == 0) return b.monic();
    if (b.degree() == 0) return a.monic();
    const unsigned da = a.degree(), db = b.degree();
    const std::size_t cols = da + db + 1;
    // unknowns: u_0..u_db (coefficients of u with L = u*a) and v_0..v_da;
    // rows are the coefficient vectors of X^i * a and -(X^j * b)
    std::vector<std::vector<Field::Rep>> rows;
    for (unsigned i = 0; i <= db; ++i) {
        SkewPoly xa = a.mul_x_left(i);
        std::vector<Field::Rep> r(cols, 0);
        for (std::size_t j = 0; j < xa.coeff_count(); ++j) r[j] = xa.coeff(j);
        rows.push_back(std::move(r));
    }
    for (unsigned j = 0; j <= da; ++j) {
        SkewPoly xb = b.mul_x_left(j);
        std::vector<Field::Rep> r(cols, 0);
        for (std::size_t i = 0; i < xb.coeff_count(); ++i) r[i] = F->neg(xb.coeff(i));
        rows.push_back(std::move(r));
    }
    auto kernel = rep_left_kernel(F, rows, cols);
    if (kernel.empty()) throw DomainError("left lcm: no common multiple found (unreachable)");
    // each kernel vector w yields L = (sum w_i X^i)*a; pick the minimal degree
    std::vector<std::vector<Field::Rep>> cands;
    for (const auto& w : kernel) {
        std::vector<Field::Rep> u(w.begin(), w.begin() + db + 1);
        SkewPoly up = SkewPoly::of_reps(th, std::move(u));
        SkewPoly L = up * a;
        if (!L.is_zero()) {
            std::vector<Field::Rep> v(cols, 0);
            for (std::size_t i = 0; i < L.coeff_count(); ++i) v[i] = L.coeff(i);
            cands.push_back(std::move(v));
        }
    }
    if (cands.empty()) throw DomainError("left lcm degenerated to zero (unreachable)");
    // eliminate top-down to find the lowest-degree element of the span
    std::sort(cands.begin(), cands.end(), [](const auto& x, const auto& y) {
        for (std::size_t i = x.size(); i-- > 0;) {
            bool xi = x[i] != 0, yi = y[i] != 0;
            if (xi != yi) return yi;  // lower top degree first
            if (xi) break;
        }
        return false;
    });
    // reduce repeatedly: cancel leading terms between candidates
    auto top = [](const std::vector<Field::Rep>& v) -> long {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i]) return (long)i;
        return -1;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            for (std::size_t j = 0; j < cands.size(); ++j) {
                if (i == j) continue;
                long ti = top(cands[i]), tj = top(cands[j]);
                if (ti < 0 || tj < 0 || ti != tj) continue;
                Field::Rep m = F->div(cands[i][ti], cands[j][tj]);
                for (std::size_t k2 = 0; k2 < cols; ++k2)
                    cands[i][k2] = F->sub(cands[i][k2], F->mul(m, cands[j][k2]));
                changed = true;
            }
        }
    }
    long best = -1;
    std::size_t besti = 0;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        long t = top(cands[i]);
        if (t >= 0 && (best < 0 || t < best)) { best = t; besti = i; }
    }
    if (best < 0) throw DomainError("left lcm elimination collapsed (unreachable)");
    return SkewPoly::of_reps(th, cands[besti]).monic();
}

std::vector<std::pair<SkewPoly, SkewPoly>> right_divisors(
    const SkewPoly& f, unsigned degree, bool allow_zero_const, std::uint64_t budget) {
    if (f.is_zero()) throw DomainError("right divisors of the zero polynomial");
    const Automorphism th = f.theta();
    const auto& F = f.field();
    std::vector<std::pair<SkewPoly, SkewPoly>> out;
    if (degree > f.degree()) return out;
    if (degree == 0) {
        out.emplace_back(SkewPoly::one(th), f);
        return out;
    }
    const std::uint64_t q = F->q();
    std::uint64_t count = 1;
    for (unsigned i = 0; i < degree; ++i) {
        count *= q;
        if (count > budget) throw BudgetError("right divisor enumeration exceeds budget");
    }
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<Field::Rep> c(degree + 1, 0);
        std::uint64_t t = v;
        for (unsigned i = 0; i < degree; ++i) { c[i] = (Field::Rep)(t % q); t /= q; }
        if (!allow_zero_const && c[0] == 0) continue;
        c[degree] = 1;
        SkewPoly g = SkewPoly::of_reps(th, std::move(c));
        auto qr = right_quotrem(f, g);
        if (qr.rem.is_zero()) out.emplace_back(g, qr.quot);
    }
    return out;
}

SkewPoly star(const SkewPoly& f) {
    if (f.is_zero()) throw DomainError("companion polynomial of zero");
    if (f.constant() == 0)
        throw DomainError("companion polynomial requires a nonzero constant term");
    const Automorphism th = f.theta();
    const auto& F = f.field();
    const unsigned n = f.degree();
    SkewPoly m = f.monic();
    // hypothesis coefficients: f = (-1)^n (X^n - sum a_i X^i)  =>  a_i = -m_i
    std::vector<Field::Rep> c(n + 1, 0);
    c[0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
        Field::Rep a = F->neg(m.coeff(n - i));           // a_{n-i}
        c[i] = F->neg(th.apply(a, (long long)i));        // - theta^i(a_{n-i})
    }
    return SkewPoly::of_reps(th, std::move(c));
}

}  // namespace skewcodes
