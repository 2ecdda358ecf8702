#include "skewcodes/finite_field.hpp"

#include <algorithm>
#include <numeric>

namespace skewcodes {

namespace {

bool is_prime(unsigned n) {
    if (n < 2) return false;
    for (unsigned d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    while (e) {
        if (e & 1) r = r * base % m;
        base = base * base % m;
        e >>= 1;
    }
    return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; (std::uint64_t)d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// ---- F_p[x] helpers on ascending coefficient vectors ----

void fp_trim(std::vector<unsigned>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

// a mod b, b monic-led (lead invertible), both ascending.
std::vector<unsigned> fp_mod(std::vector<unsigned> a, const std::vector<unsigned>& b, unsigned p) {
    fp_trim(a);
    const int db = (int)b.size() - 1;
    unsigned lead_inv = 1;
    {   // b's lead inverse mod p
        unsigned lb = b.back();
        for (unsigned i = 1; i < p; ++i)
            if (lb * i % p == 1) { lead_inv = i; break; }
    }
    while ((int)a.size() - 1 >= db) {
        unsigned c = (unsigned)((std::uint64_t)a.back() * lead_inv % p);
        int shift = (int)a.size() - 1 - db;
        for (int i = 0; i <= db; ++i) {
            unsigned sub = (unsigned)((std::uint64_t)c * b[i] % p);
            a[i + shift] = (a[i + shift] + p - sub) % p;
        }
        fp_trim(a);
        if (a.empty()) break;
    }
    return a;
}

}  // namespace

namespace fp_poly {

bool is_irreducible(const std::vector<unsigned>& poly, unsigned p) {
    std::vector<unsigned> f = poly;
    fp_trim(f);
    if (f.size() < 2) return false;  // constants are not irreducible
    const unsigned d = (unsigned)f.size() - 1;
    if (d == 1) return true;
    // trial division by all monic polynomials of degree 1..d/2
    for (unsigned e = 1; 2 * e <= d; ++e) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < e; ++i) count *= p;
        for (std::uint64_t v = 0; v < count; ++v) {
            std::vector<unsigned> g(e + 1);
            std::uint64_t t = v;
            for (unsigned i = 0; i < e; ++i) { g[i] = (unsigned)(t % p); t /= p; }
            g[e] = 1;
            if (fp_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::vector<unsigned> default_modulus(unsigned p, unsigned s) {
    // smallest monic irreducible of degree s in base-p coefficient order
    std::uint64_t count = 1;
    for (unsigned i = 0; i < s; ++i) count *= p;
    for (std::uint64_t v = 0; v < count; ++v) {
        std::vector<unsigned> f(s + 1);
        std::uint64_t t = v;
        for (unsigned i = 0; i < s; ++i) { f[i] = (unsigned)(t % p); t /= p; }
        f[s] = 1;
        if (is_irreducible(f, p)) return f;
    }
    throw DomainError("no irreducible modulus found (unreachable)");
}

}  // namespace fp_poly

FieldPtr Field::make(unsigned p, unsigned s, std::vector<unsigned> modulus, std::string gen_name) {
    if (!is_prime(p)) throw DomainError("field characteristic must be prime, got " + std::to_string(p));
    if (s < 1) throw DomainError("field extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < s; ++i) {
        q *= p;
        if (q > 65536) throw DomainError("field size p^s exceeds the 2^16 cap");
    }
    if (modulus.empty()) {
        modulus = fp_poly::default_modulus(p, s);
    } else {
        for (auto& c : modulus) c %= p;
        if (modulus.size() != s + 1 || modulus.back() != 1)
            throw DomainError("modulus must be monic of degree s");
        if (!fp_poly::is_irreducible(modulus, p))
            throw DomainError("modulus is not irreducible over F_p");
    }
    if (gen_name.empty() || gen_name == "x" || gen_name == "X")
        throw DomainError("generator name must be nonempty and distinct from the variable 'x'");
    for (char c : gen_name)
        if (!std::isalpha((unsigned char)c))
            throw DomainError("generator name must be alphabetic");

    auto f = std::shared_ptr<Field>(new Field());
    f->p_ = p;
    f->s_ = s;
    f->q_ = (std::uint32_t)q;
    f->mod_ = std::move(modulus);
    f->gen_name_ = std::move(gen_name);
    f->build_tables();
    return f;
}

bool Field::same_as(const Field& other) const {
    return this == &other || (p_ == other.p_ && s_ == other.s_ && mod_ == other.mod_);
}

std::vector<unsigned> Field::rep_digits(Rep a) const {
    std::vector<unsigned> d(s_);
    for (unsigned i = 0; i < s_; ++i) { d[i] = a % p_; a /= p_; }
    return d;
}

Field::Rep Field::digits_rep(const std::vector<unsigned>& d) const {
    Rep r = 0;
    for (unsigned i = (unsigned)d.size(); i-- > 0;) r = r * p_ + d[i] % p_;
    return r;
}

void Field::build_tables() {
    // polynomial-basis multiply (digit vectors) used only to seed the tables
    auto poly_mul = [&](const std::vector<unsigned>& a, const std::vector<unsigned>& b) {
        std::vector<unsigned> c(2 * s_ - 1, 0);
        for (unsigned i = 0; i < s_; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < s_; ++j)
                c[i + j] = (unsigned)((c[i + j] + (std::uint64_t)a[i] * b[j]) % p_);
        }
        auto r = fp_mod(c, mod_, p_);
        r.resize(s_, 0);
        return r;
    };
    auto rep_of = [&](const std::vector<unsigned>& d) {
        Rep r = 0;
        for (unsigned i = s_; i-- > 0;) r = r * p_ + d[i];
        return r;
    };

    const std::uint32_t n = q_ - 1;
    auto factors = prime_factors(n);
    // order of a rep, via digit-vector powering (tables not built yet)
    auto has_full_order = [&](Rep g) {
        auto gd = rep_digits(g);
        for (auto pr : factors) {
            // g^(n/pr) by square-and-multiply on digit vectors
            std::uint64_t e = n / pr;
            std::vector<unsigned> acc(s_, 0); acc[0] = 1;
            auto base = gd;
            while (e) {
                if (e & 1) acc = poly_mul(acc, base);
                base = poly_mul(base, base);
                e >>= 1;
            }
            if (rep_of(acc) == 1) return false;
        }
        return true;
    };

    prim_ = 1;
    if (n > 1) {
        for (Rep g = 2; g < q_; ++g)
            if (has_full_order(g)) { prim_ = g; break; }
    }

    exp_.assign(2 * (std::size_t)n, 1);
    log_.assign(q_, 0);
    std::vector<unsigned> cur(s_, 0); cur[0] = 1;
    auto pd = rep_digits(prim_);
    for (std::uint32_t i = 0; i < n; ++i) {
        Rep r = rep_of(cur);
        exp_[i] = r;
        exp_[i + n] = r;
        log_[r] = i;
        cur = poly_mul(cur, pd);
    }
}

Field::Rep Field::add(Rep a, Rep b) const {
    if (p_ == 2) return a ^ b;
    Rep r = 0, mult = 1;
    for (unsigned i = 0; i < s_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_; b /= p_; mult *= p_;
    }
    return r;
}

Field::Rep Field::neg(Rep a) const {
    if (p_ == 2) return a;
    Rep r = 0, mult = 1;
    for (unsigned i = 0; i < s_; ++i) {
        r += (p_ - a % p_) % p_ * mult;
        a /= p_; mult *= p_;
    }
    return r;
}

Field::Rep Field::sub(Rep a, Rep b) const { return add(a, neg(b)); }

Field::Rep Field::mul(Rep a, Rep b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(std::size_t)log_[a] + log_[b]];
}

Field::Rep Field::inv(Rep a) const {
    if (a == 0) throw DomainError("division by zero in F_q");
    return exp_[(q_ - 1) - log_[a]];
}

Field::Rep Field::div(Rep a, Rep b) const { return mul(a, inv(b)); }

Field::Rep Field::pow(Rep a, long long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw DomainError("negative power of zero in F_q");
        return 0;
    }
    const long long n = q_ - 1;
    long long k = ((std::int64_t)log_[a] * (e % n)) % n;
    if (k < 0) k += n;
    return exp_[(std::size_t)k];
}

Field::Rep Field::frobenius(Rep a, long long k) const {
    if (a == 0) return 0;
    long long kk = k % (long long)s_;
    if (kk < 0) kk += s_;
    const std::uint64_t n = q_ - 1;
    std::uint64_t e = mod_pow(p_, (std::uint64_t)kk, n);
    return exp_[(std::size_t)((std::uint64_t)log_[a] * e % n)];
}

std::uint32_t Field::element_order(Rep a) const {
    if (a == 0) throw DomainError("order of zero is undefined");
    const std::uint32_t n = q_ - 1;
    return n / std::gcd(n, log_[a]);
}

Field::Rep Field::gen_rep() const {
    if (s_ < 2) throw DomainError("prime field has no polynomial generator");
    return p_;
}

Field::Rep Field::from_int(long long v) const {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    return (Rep)r;
}

FieldElement Field::elem(Rep r) const {
    if (r >= q_) throw DomainError("element rep out of range");
    return FieldElement(shared_from_this(), r);
}
FieldElement Field::zero() const { return elem(0); }
FieldElement Field::one() const { return elem(1); }
FieldElement Field::gen() const { return elem(gen_rep()); }

void FieldElement::check(const FieldElement& o) const {
    if (!f_ || !o.f_ || !f_->same_as(*o.f_))
        throw DomainError("field elements from different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check(o);
    return FieldElement(f_, f_->add(r_, o.r_));
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check(o);
    return FieldElement(f_, f_->sub(r_, o.r_));
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check(o);
    return FieldElement(f_, f_->mul(r_, o.r_));
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check(o);
    return FieldElement(f_, f_->div(r_, o.r_));
}
FieldElement FieldElement::operator-() const { return FieldElement(f_, f_->neg(r_)); }
FieldElement FieldElement::inv() const { return FieldElement(f_, f_->inv(r_)); }
FieldElement FieldElement::pow(long long e) const { return FieldElement(f_, f_->pow(r_, e)); }
FieldElement FieldElement::frob(long long k) const { return FieldElement(f_, f_->frobenius(r_, k)); }
bool FieldElement::operator==(const FieldElement& o) const {
    check(o);
    return r_ == o.r_;
}

Automorphism::Automorphism(FieldPtr f, long long t) : f_(std::move(f)) {
    if (!f_) throw DomainError("automorphism needs a field");
    long long s = f_->s();
    long long tt = t % s;
    if (tt < 0) tt += s;
    t_ = (unsigned)tt;
}

unsigned Automorphism::order() const {
    unsigned s = f_->s();
    return s / std::gcd(s, t_);
}

Field::Rep Automorphism::apply(Field::Rep a, long long power) const {
    return f_->frobenius(a, (long long)t_ * power);
}

FieldElement Automorphism::operator()(const FieldElement& a) const {
    if (!a.field() || !a.field()->same_as(*f_))
        throw DomainError("automorphism applied to element of another field");
    return FieldElement(f_, apply(a.rep()));
}

Automorphism Automorphism::power(long long k) const { return Automorphism(f_, (long long)t_ * k); }
Automorphism Automorphism::inverse() const { return power(-1); }

bool Automorphism::operator==(const Automorphism& o) const {
    return t_ == o.t_ && f_->same_as(*o.f_);
}

unsigned Automorphism::fixed_degree() const {
    return (unsigned)std::gcd((unsigned long long)f_->s(), (unsigned long long)t_);
}

bool Automorphism::fixes(Field::Rep a) const { return apply(a) == a; }

std::vector<Field::Rep> Automorphism::fixed_subfield() const {
    std::vector<Field::Rep> out;
    for (Field::Rep a = 0; a < f_->q(); ++a)
        if (fixes(a)) out.push_back(a);
    return out;
}

}  // namespace skewcodes
