#include "skewcodes/codes.hpp"

#include <set>
#include <utility>

#include "skewcodes/factorization.hpp"

namespace skewcodes {

ModuleThetaCode::ModuleThetaCode(SkewPoly f, SkewPoly g)
    : f_(std::move(f)), g_(std::move(g)) {
    if (f_.is_zero() || f_.degree() == 0)
        throw DomainError("module code needs an ambient polynomial of degree >= 1");
    if (f_.constant() == 0) throw DomainError("ambient polynomial must have f(0) != 0");
    if (g_.is_zero() || !g_.is_monic()) throw DomainError("generator must be monic");
    if (g_.degree() > f_.degree())
        throw DomainError("generator degree must not exceed deg f");
    if (g_.constant() == 0)
        throw DomainError(
            "generator has zero constant term; such codes are degenerate "
            "(every counted generator has g(0) != 0) and are not built here");
    if (!is_right_divisor(g_, f_))
        throw DomainError("generator does not divide the ambient polynomial on the right");
}

Matrix ModuleThetaCode::generator_matrix() const {
    std::vector<RowVec> rows;
    for (std::size_t j = 0; j < k(); ++j)
        rows.push_back(pi_inv(g_.mul_x_left((unsigned)j), f_));
    Matrix G = Matrix::from_rows(field(), rows, n());
    if (rank(G) != k()) throw Error("internal: module code generator rows are dependent");
    return G;
}

SemiLinearMap ModuleThetaCode::invariance_map() const {
    return SemiLinearMap(theta(), companion(f_));
}

bool ModuleThetaCode::contains(const RowVec& v) const {
    if (v.size() != n()) throw DomainError("word length does not match the code");
    SkewPoly p = pi(v, f_);
    if (p.is_zero()) return true;
    return right_quotrem(p, g_).rem.is_zero();
}

StandardForm parity_check(const ModuleThetaCode& code) {
    const auto& F = code.field();
    const std::size_t n = code.n(), k = code.k();
    const Automorphism th = code.theta();

    Matrix S(F, k, n - k);
    for (std::size_t i = 0; i < k; ++i) {
        SkewPoly xp = SkewPoly::monomial(th, F->one(), (unsigned)(n - k + i));
        SkewPoly r = right_quotrem(xp, code.g()).rem;
        RowVec full = pi_inv(r, code.f());
        for (std::size_t j = n - k; j < n; ++j)
            if (full[j] != 0) throw Error("internal: remainder escapes the low coordinates");
        for (std::size_t j = 0; j < n - k; ++j) S.set(i, j, full[j]);
    }

    Matrix G = S.scale(F->neg(1)).hstack(Matrix::identity(F, k));
    Matrix H = Matrix::identity(F, n - k).hstack(S.transpose());
    return StandardForm{std::move(S), std::move(G), std::move(H)};
}

ProductTCode::ProductTCode(std::vector<ModuleThetaCode> components, Matrix C)
    : comps_(std::move(components)), C_(std::move(C)), Cinv_(inverse(C_)) {
    if (comps_.empty()) throw DomainError("product code needs at least one component");
    std::size_t total = 0;
    for (const auto& c : comps_) {
        if (!c.field()->same_as(*comps_.front().field()) ||
            c.theta() != comps_.front().theta())
            throw DomainError("product components disagree on field or automorphism");
        total += c.n();
    }
    if (!C_.field()->same_as(*comps_.front().field()))
        throw DomainError("conjugator lives over the wrong field");
    if (C_.rows() != total || C_.cols() != total)
        throw DomainError("conjugator shape does not match the component lengths");
}

ProductTCode ProductTCode::direct_product(std::vector<ModuleThetaCode> components) {
    if (components.empty()) throw DomainError("product code needs at least one component");
    std::size_t total = 0;
    for (const auto& c : components) total += c.n();
    Matrix I = Matrix::identity(components.front().field(), total);
    return ProductTCode(std::move(components), std::move(I));
}

std::size_t ProductTCode::n() const {
    std::size_t t = 0;
    for (const auto& c : comps_) t += c.n();
    return t;
}

std::size_t ProductTCode::k() const {
    std::size_t t = 0;
    for (const auto& c : comps_) t += c.k();
    return t;
}

Matrix ProductTCode::generator_matrix() const {
    std::vector<Matrix> blocks;
    std::vector<std::size_t> dims;
    std::size_t total_k = 0;
    for (const auto& c : comps_) {
        blocks.push_back(c.generator_matrix());
        dims.push_back(c.n());
        total_k += c.k();
    }
    // block_diag needs square-ish placement by rows AND cols; generator
    // blocks are k_i x n_i, which block_diag lays out correctly
    Matrix G = Matrix::block_diag(blocks) * C_;
    if (rank(G) != total_k) throw Error("internal: product generator lost rank");
    return G;
}

SemiLinearMap ProductTCode::invariance_map() const {
    std::vector<Matrix> blocks;
    for (const auto& c : comps_) blocks.push_back(companion(c.f()));
    Matrix D = Matrix::block_diag(blocks);
    Matrix Cth = entrywise_theta(C_, theta());
    return SemiLinearMap(theta(), inverse(Cth) * D * C_);
}

bool ProductTCode::contains(const RowVec& v) const {
    auto parts = split(to_components(v));
    for (std::size_t i = 0; i < comps_.size(); ++i)
        if (!comps_[i].contains(parts[i])) return false;
    return true;
}

RowVec ProductTCode::to_components(const RowVec& v) const {
    if (v.size() != n()) throw DomainError("word length does not match the code");
    return mul_row(field(), v, Cinv_);
}

RowVec ProductTCode::from_components(const RowVec& w) const {
    if (w.size() != n()) throw DomainError("word length does not match the code");
    return mul_row(field(), w, C_);
}

std::vector<RowVec> ProductTCode::split(const RowVec& w) const {
    if (w.size() != n()) throw DomainError("word length does not match the code");
    std::vector<RowVec> parts;
    std::size_t off = 0;
    for (const auto& c : comps_) {
        parts.emplace_back(w.begin() + (long)off, w.begin() + (long)(off + c.n()));
        off += c.n();
    }
    return parts;
}

RowVec ProductTCode::join(const std::vector<RowVec>& parts) const {
    if (parts.size() != comps_.size())
        throw DomainError("component count does not match the code");
    RowVec w;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i].size() != comps_[i].n())
            throw DomainError("component length does not match the code");
        w.insert(w.end(), parts[i].begin(), parts[i].end());
    }
    return w;
}

LinearCode::LinearCode(const Matrix& spanning_rows) : gen_(row_image(spanning_rows)) {}

bool LinearCode::contains(const RowVec& v) const {
    if (v.size() != n()) throw DomainError("word length does not match the code");
    return row_space_contains(gen_, v);
}

std::uint64_t min_distance(const LinearCode& code, std::uint64_t budget) {
    const auto& F = code.field();
    const std::size_t k = code.k();
    if (k == 0) throw DomainError("the zero code has no minimum distance");

    std::uint64_t words = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (words > budget / F->q())
            throw BudgetError("codeword enumeration exceeds the distance budget");
        words *= F->q();
    }

    std::uint64_t best = code.n() + 1;
    std::vector<Field::Rep> msg(k, 0);
    for (std::uint64_t c = 1; c < words; ++c) {
        for (std::size_t i = k; i-- > 0;) {
            if (++msg[i] < F->q()) break;
            msg[i] = 0;
        }
        RowVec w = mul_row(F, msg, code.generators());
        std::uint64_t wt = 0;
        for (auto x : w) wt += (x != 0);
        if (wt && wt < best) best = wt;
        if (best == 1) break;
    }
    return best;
}

std::vector<std::size_t> feasible_dimensions(const SemiLinearMap& T) {
    if (!T.theta().is_identity())
        throw DomainError("dimension feasibility is a commutative-case computation");
    Rcf r = rational_canonical_form(T.matrix());
    SkewPoly charpoly = r.factors.front();
    for (std::size_t i = 1; i < r.factors.size(); ++i) charpoly = charpoly * r.factors[i];

    auto fac = factor_commutative(charpoly);
    std::set<std::size_t> ks{0};
    for (const auto& [p, e] : fac) {
        const std::size_t d = p.degree();
        std::set<std::size_t> next;
        for (auto k : ks)
            for (unsigned a = 0; a <= e; ++a) next.insert(k + a * d);
        ks.swap(next);
    }
    return std::vector<std::size_t>(ks.begin(), ks.end());
}

}  // namespace skewcodes
