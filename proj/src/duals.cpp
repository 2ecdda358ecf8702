#include "skewcodes/duals.hpp"

#include <string>
#include <utility>

namespace skewcodes {

namespace {

SkewPoly x_power_minus_one(const Automorphism& th, std::size_t m) {
    std::vector<Field::Rep> c(m + 1, 0);
    c[0] = th.field()->neg(1);
    c[m] = 1;
    return SkewPoly::of_reps(th, c);
}

const char* reading_name(TwistReading reading) {
    return reading == TwistReading::summation_index ? "summation-index" : "component-index";
}

// ed must carry exactly the ambient polynomials and conjugator of the code
void check_describes(const ProductTCode& code, const EmbeddingData& ed) {
    if (ed.periods.size() != code.component_count())
        throw DomainError("embedding data has the wrong number of components for this code");
    for (std::size_t i = 0; i < ed.periods.size(); ++i)
        if (!(ed.periods[i].f == code.component(i).f()))
            throw DomainError("embedding data was built from different ambient polynomials");
    if (!(ed.C == code.conjugator()))
        throw DomainError("embedding data carries a different coordinate change");
}

void check_order_divides_periods(const EmbeddingData& ed) {
    const std::size_t s = ed.theta().order();
    for (const auto& pd : ed.periods)
        if (pd.m % s != 0)
            throw DomainError("the automorphism order ( " + std::to_string(s) +
                              " ) must divide every component period; period " +
                              std::to_string(pd.m) + " breaks that");
}

// v read through the conjugator as a tuple of residues mod the f_i
std::vector<SkewPoly> word_tuple(const ProductTCode& code, const EmbeddingData& ed,
                                 const RowVec& v) {
    auto parts = code.split(code.to_components(v));
    std::vector<SkewPoly> t;
    t.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i)
        t.push_back(pi(parts[i], ed.periods[i].f));
    return t;
}

}  // namespace

LinearCode euclidean_dual(const LinearCode& code) {
    return LinearCode(left_kernel(code.generators().transpose()));
}

LinearCode euclidean_dual_product(const std::vector<LinearCode>& components,
                                  const Matrix& Chat) {
    if (components.empty()) throw DomainError("dual of an empty product");
    std::size_t total = 0;
    std::vector<Matrix> blocks;
    blocks.reserve(components.size());
    for (const auto& c : components) {
        if (!c.field()->same_as(*components.front().field()))
            throw DomainError("product components disagree on the field");
        blocks.push_back(euclidean_dual(c).generators());
        total += c.n();
    }
    if (Chat.rows() != total || Chat.cols() != total)
        throw DomainError("conjugator shape does not match the component lengths");
    return LinearCode(Matrix::block_diag(blocks) * inverse(Chat.transpose()));
}

SemiLinearMap dual_invariance_map(const SemiLinearMap& T) {
    Automorphism thinv = T.theta().inverse();
    return SemiLinearMap(thinv, entrywise_theta(T.matrix().transpose(), thinv));
}

LinearCode quasi_euclidean_dual(const LinearCode& code, const EmbeddingData& ed) {
    if (ed.n() != code.n())
        throw DomainError("embedding data does not match the code length");
    if (!ed.field()->same_as(*code.field()))
        throw DomainError("embedding data lives over a different field");
    return LinearCode(left_kernel(ed.B * code.generators().transpose()));
}

SkewPoly reversed_cofactor(const SkewPoly& h, TwistReading reading,
                           std::size_t component_index) {
    if (h.is_zero()) throw DomainError("cannot reverse the zero polynomial");
    const Automorphism th = h.theta();
    const std::size_t k = h.degree();
    std::vector<Field::Rep> c(k + 1, 0);
    for (std::size_t j = 0; j <= k; ++j) {
        long long e = reading == TwistReading::summation_index
                          ? static_cast<long long>(j)
                          : static_cast<long long>(component_index);
        c[j] = th.apply(h.coeff(k - j), e);
    }
    return SkewPoly::of_reps(th, c);
}

SkewPoly quasi_dual_component_generator(const SkewPoly& g, const PeriodData& pd,
                                        TwistReading reading,
                                        std::size_t component_index) {
    const Automorphism th = pd.f.theta();
    if (pd.m % th.order() != 0)
        throw DomainError("the automorphism order must divide the period for the "
                          "dual generator construction");
    if (g.is_zero() || !is_right_divisor(g, pd.f))
        throw DomainError("the generator must divide the ambient polynomial on the right");

    SkewPoly xm1 = x_power_minus_one(th, pd.m);
    auto top = left_quotrem(xm1, g * pd.q_f);
    if (!top.rem.is_zero())
        throw Error("internal: X^m - 1 failed to split off g * q_f on the left");
    SkewPoly L = left_lcm(reversed_cofactor(top.quot, reading, component_index), pd.q_f);
    auto rec = right_quotrem(L, pd.q_f);
    if (!rec.rem.is_zero())
        throw Error("internal: the common left multiple is not a right multiple of q_f");
    return rec.quot.monic();
}

ProductTCode quasi_dual_generator(const ProductTCode& code, const EmbeddingData& ed,
                                  TwistReading reading) {
    check_describes(code, ed);
    check_order_divides_periods(ed);

    std::vector<ModuleThetaCode> duals;
    duals.reserve(code.component_count());
    for (std::size_t i = 0; i < code.component_count(); ++i) {
        const auto& comp = code.component(i);
        SkewPoly gstar =
            quasi_dual_component_generator(comp.g(), ed.periods[i], reading, i + 1);
        if (!is_right_divisor(gstar, comp.f()))
            throw Error(std::string("dual generator does not divide the ambient "
                                    "polynomial; the ") +
                        reading_name(reading) + " twist does not fit this instance");
        duals.emplace_back(comp.f(), gstar);
    }

    ProductTCode dual(std::move(duals), code.conjugator());
    LinearCode got(dual.generator_matrix());
    LinearCode want = quasi_euclidean_dual(LinearCode(code.generator_matrix()), ed);
    if (!(got == want))
        throw Error(std::string("dual generator row space disagrees with the "
                                "bilinear-form dual; the ") +
                    reading_name(reading) + " twist does not fit this instance");
    return dual;
}

HermitianContext::HermitianContext(EmbeddingData ed) : ed_(std::move(ed)) {
    const std::size_t s = ed_.theta().order();
    valid_ = true;
    for (const auto& pd : ed_.periods)
        if (pd.m % s != 0) valid_ = false;
}

void HermitianContext::require_valid() const {
    if (!valid_) check_order_divides_periods(ed_);
}

SkewPoly conjugate_reverse(const SkewPoly& p, std::size_t m) {
    if (m == 0) throw DomainError("conjugate reversal needs a positive modulus");
    if (p.is_zero()) return p;
    if (p.degree() >= m) throw DomainError("polynomial is not reduced mod X^m - 1");
    const Automorphism th = p.theta();
    std::vector<Field::Rep> c(m, 0);
    for (std::size_t i = 0; i <= p.degree(); ++i)
        c[(m - i) % m] = th.apply(p.coeff(i), -static_cast<long long>(i));
    return SkewPoly::of_reps(th, c);
}

SkewPoly cyclic_skew_mul(const SkewPoly& p, const SkewPoly& t, std::size_t m) {
    if (m == 0) throw DomainError("cyclic product needs a positive modulus");
    if (p.is_zero() || t.is_zero()) return SkewPoly::zero(p.theta());
    if (p.degree() >= m || t.degree() >= m)
        throw DomainError("factors are not reduced mod X^m - 1");
    const Automorphism th = p.theta();
    const auto& F = p.field();
    std::vector<Field::Rep> c(m, 0);
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        if (p.coeff(i) == 0) continue;
        for (std::size_t j = 0; j <= t.degree(); ++j) {
            if (t.coeff(j) == 0) continue;
            std::size_t k = (i + j) % m;
            c[k] = F->add(c[k],
                          F->mul(p.coeff(i), th.apply(t.coeff(j),
                                                      static_cast<long long>(i))));
        }
    }
    return SkewPoly::of_reps(th, c);
}

std::vector<SkewPoly> hermitian_product(const std::vector<SkewPoly>& a,
                                        const std::vector<SkewPoly>& b,
                                        const HermitianContext& ctx) {
    ctx.require_valid();
    const auto& periods = ctx.data().periods;
    if (a.size() != periods.size() || b.size() != periods.size())
        throw DomainError("tuple length does not match the component count");

    std::vector<SkewPoly> out;
    out.reserve(periods.size());
    for (std::size_t i = 0; i < periods.size(); ++i) {
        const auto& pd = periods[i];
        for (const SkewPoly* p : {&a[i], &b[i]}) {
            if (p->theta() != pd.f.theta())
                throw DomainError("tuple entry lives in a different skew ring");
            if (!p->is_zero() && p->degree() >= pd.f.degree())
                throw DomainError("tuple entry is not reduced mod the ambient polynomial");
        }
        out.push_back(cyclic_skew_mul(a[i] * pd.q_f,
                                      conjugate_reverse(b[i] * pd.q_f, pd.m), pd.m));
    }
    return out;
}

LinearCode hermitian_dual(const ProductTCode& code, const HermitianContext& ctx) {
    ctx.require_valid();
    const EmbeddingData& ed = ctx.data();
    check_describes(code, ed);

    const auto& F = code.field();
    const std::size_t n = code.n();

    Matrix G = code.generator_matrix();
    std::vector<std::vector<SkewPoly>> gens;
    gens.reserve(G.rows());
    for (std::size_t r = 0; r < G.rows(); ++r)
        gens.push_back(word_tuple(code, ed, G.row(r)));

    std::size_t width = 0;
    for (const auto& pd : ed.periods) width += pd.m;

    // the pairing is linear in its first slot, so the dual is the kernel of
    // the matrix sending a word to its pairings with the generator rows
    Matrix M(F, n, width * gens.size());
    for (std::size_t t = 0; t < n; ++t) {
        RowVec e(n, 0);
        e[t] = 1;
        auto x = word_tuple(code, ed, e);
        std::size_t off = 0;
        for (const auto& c : gens) {
            auto prod = hermitian_product(x, c, ctx);
            for (std::size_t i = 0; i < prod.size(); ++i) {
                auto reps = prod[i].reps();
                for (std::size_t j = 0; j < reps.size(); ++j)
                    M.set(t, off + j, reps[j]);
                off += ed.periods[i].m;
            }
        }
    }
    return LinearCode(left_kernel(M));
}

}  // namespace skewcodes
