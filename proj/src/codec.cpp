#include "skewcodes/codec.hpp"

#include <utility>

#include "skewcodes/errors.hpp"

namespace skewcodes {

namespace {

// message block -> polynomial of degree < k_i
SkewPoly block_poly(const Automorphism& th, const RowVec& block) {
    return SkewPoly::of_reps(th, block);
}

RowVec encode_component_poly(const RowVec& block, const ModuleThetaCode& comp) {
    const std::size_t nk = comp.n() - comp.k();
    SkewPoly shifted = block_poly(comp.theta(), block).mul_x_left((unsigned)nk);
    SkewPoly r = right_quotrem(shifted, comp.g()).rem;
    return pi_inv(shifted - r, comp.f());
}

RowVec encode_component_matrix(const RowVec& block, const ModuleThetaCode& comp) {
    const auto& F = comp.field();
    const Automorphism th = comp.theta();
    const long long nk = (long long)(comp.n() - comp.k());
    RowVec tail(block.size());
    for (std::size_t j = 0; j < block.size(); ++j) tail[j] = th.apply(block[j], nk);
    return mul_row(F, tail, parity_check(comp).G_std);
}

}  // namespace

RowVec encode(const Message& msg, const ProductTCode& code, EncodeMethod method) {
    if (msg.size() != code.component_count())
        throw DomainError("message must have one block per component");
    std::vector<RowVec> parts;
    parts.reserve(msg.size());
    for (std::size_t i = 0; i < msg.size(); ++i) {
        const ModuleThetaCode& comp = code.component(i);
        if (msg[i].size() != comp.k())
            throw DomainError("message block length must equal the component dimension");
        for (Field::Rep c : msg[i])
            if (c >= code.field()->q()) throw DomainError("message entry out of field range");
        parts.push_back(method == EncodeMethod::poly ? encode_component_poly(msg[i], comp)
                                                     : encode_component_matrix(msg[i], comp));
    }
    return code.join(parts);
}

std::vector<SkewPoly> syndrome(const RowVec& v, const ProductTCode& code) {
    std::vector<RowVec> parts = code.split(v);
    std::vector<SkewPoly> out;
    out.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const ModuleThetaCode& comp = code.component(i);
        out.push_back(right_quotrem(pi(parts[i], comp.f()), comp.g()).rem);
    }
    return out;
}

Message decode_plain(const RowVec& cw, const ProductTCode& code) {
    for (const SkewPoly& s : syndrome(cw, code))
        if (!s.is_zero())
            throw DomainError("word is not in the product code; correct errors first");
    std::vector<RowVec> parts = code.split(cw);
    Message msg;
    msg.reserve(parts.size());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const ModuleThetaCode& comp = code.component(i);
        const Automorphism th = comp.theta();
        const long long back = (long long)comp.k() - (long long)comp.n();
        RowVec block(comp.k());
        for (std::size_t j = 0; j < comp.k(); ++j)
            block[j] = th.apply(parts[i][comp.n() - comp.k() + j], back);
        msg.push_back(std::move(block));
    }
    return msg;
}

SkewPoly x_inverse(const SkewPoly& f) {
    if (f.is_zero() || f.degree() == 0)
        throw DomainError("X has no inverse modulo a constant");
    if (f.constant() == 0)
        throw DomainError("X is a zero divisor modulo f when f(0) = 0");
    const auto& F = f.field();
    // t*X - 1 = c*f forces c = -f_0^{-1} and t_{j-1} = c f_j
    const Field::Rep c = F->neg(F->inv(f.constant()));
    std::vector<Field::Rep> t(f.degree());
    for (std::size_t j = 1; j <= f.degree(); ++j) t[j - 1] = F->mul(c, f.coeff(j));
    return SkewPoly::of_reps(f.theta(), std::move(t));
}

SyndromeTable::SyndromeTable(const ProductTCode& code, std::uint64_t budget) {
    d_.reserve(code.component_count());
    for (const ModuleThetaCode& comp : code.components())
        d_.push_back(min_distance(LinearCode(comp.generator_matrix()), budget));
    build(code, budget);
}

SyndromeTable::SyndromeTable(const ProductTCode& code, std::vector<std::uint64_t> distances,
                             std::uint64_t budget)
    : d_(std::move(distances)) {
    if (d_.size() != code.component_count())
        throw DomainError("need one distance per component");
    for (std::uint64_t d : d_)
        if (d < 1) throw DomainError("distances start at 1");
    build(code, budget);
}

void SyndromeTable::build(const ProductTCode& code, std::uint64_t budget) {
    const auto& F = code.field();
    dmin_ = d_.front();
    for (std::uint64_t d : d_) dmin_ = std::min(dmin_, d);
    maps_.resize(code.component_count());

    for (std::size_t ci = 0; ci < code.component_count(); ++ci) {
        const ModuleThetaCode& comp = code.component(ci);
        fs_.push_back(comp.f());
        gs_.push_back(comp.g());
        const std::size_t n = comp.n();
        const std::size_t keylen = comp.g().degree();  // remainders mod g
        const std::size_t t = (std::size_t)((d_[ci] - 1) / 2);

        // weight w patterns: position n-1 plus a (w-1)-subset of 0..n-2,
        // every position carrying a nonzero value
        for (std::size_t w = 1; w <= t; ++w) {
            if (w - 1 > n - 1) break;
            std::vector<std::size_t> pick(w - 1);
            for (std::size_t i = 0; i < pick.size(); ++i) pick[i] = i;
            bool more_supports = true;
            while (more_supports) {
                std::vector<Field::Rep> vals(w, 1);
                bool more_vals = true;
                while (more_vals) {
                    RowVec e(n, 0);
                    for (std::size_t i = 0; i < pick.size(); ++i) e[pick[i]] = vals[i];
                    e[n - 1] = vals[w - 1];
                    if (++entries_ > budget)
                        throw BudgetError("syndrome table exceeds the entry budget");
                    SkewPoly rem = right_quotrem(pi(e, comp.f()), comp.g()).rem;
                    std::vector<Field::Rep> key(keylen);
                    for (std::size_t i = 0; i < keylen; ++i) key[i] = rem.coeff(i);
                    if (!maps_[ci].emplace(std::move(key), std::move(e)).second)
                        throw DomainError(
                            "two correctable patterns share a syndrome; "
                            "the distance claim for this component is too large");
                    more_vals = false;
                    for (std::size_t v = w; v-- > 0;) {
                        if (++vals[v] < F->q()) {
                            more_vals = true;
                            break;
                        }
                        vals[v] = 1;
                    }
                }
                more_supports = false;
                for (std::size_t i = pick.size(); i-- > 0;) {
                    if (pick[i] + 1 < (n - 1) - (pick.size() - 1 - i)) {
                        ++pick[i];
                        for (std::size_t j = i + 1; j < pick.size(); ++j)
                            pick[j] = pick[j - 1] + 1;
                        more_supports = true;
                        break;
                    }
                }
            }
        }
    }
}

bool SyndromeTable::matches(const ProductTCode& code) const {
    if (code.component_count() != fs_.size()) return false;
    for (std::size_t i = 0; i < fs_.size(); ++i)
        if (code.component(i).f() != fs_[i] || code.component(i).g() != gs_[i]) return false;
    return true;
}

const RowVec* SyndromeTable::find(std::size_t comp, const SkewPoly& syn) const {
    const std::size_t keylen = gs_[comp].degree();
    std::vector<Field::Rep> key(keylen);
    for (std::size_t i = 0; i < keylen; ++i) key[i] = syn.coeff(i);
    auto it = maps_[comp].find(key);
    return it == maps_[comp].end() ? nullptr : &it->second;
}

DecodedWord meggitt_decode(const RowVec& received, const SyndromeTable& table,
                           const ProductTCode& code, bool literal_shift_recovery) {
    if (!table.matches(code))
        throw DomainError("syndrome table was built for a different code");
    const auto& F = code.field();
    std::vector<RowVec> parts = code.split(received);
    std::vector<RowVec> error_parts;
    error_parts.reserve(parts.size());

    for (std::size_t ci = 0; ci < parts.size(); ++ci) {
        const ModuleThetaCode& comp = code.component(ci);
        const Automorphism th = comp.theta();
        const std::size_t n = comp.n();
        SkewPoly s = right_quotrem(pi(parts[ci], comp.f()), comp.g()).rem;
        RowVec e(n, 0);
        if (!s.is_zero()) {
            bool found = false;
            SkewPoly shifted = s;
            for (std::size_t delta = 0; delta < n && !found; ++delta) {
                if (delta > 0)
                    shifted = right_quotrem(shifted.mul_x_left(1), comp.g()).rem;
                if (const RowVec* ebar = table.find(ci, shifted)) {
                    if (literal_shift_recovery) {
                        // multiply by x_inverse(f)^delta and reduce mod f;
                        // matches the exact unshift only when theta is the
                        // identity, kept for comparison
                        SkewPoly t = x_inverse(comp.f());
                        SkewPoly lifted =
                            t.pow((unsigned)delta) * pi(*ebar, comp.f());
                        e = pi_inv(right_quotrem(lifted, comp.f()).rem, comp.f());
                    } else {
                        // ebar = X^delta * e exactly (no wrap), so e drops
                        // delta leading-zero low coordinates and untwists
                        for (std::size_t j = 0; j < delta; ++j)
                            if ((*ebar)[j] != 0)
                                throw Error("internal: shifted pattern has a nonzero low coordinate");
                        for (std::size_t j = delta; j < n; ++j)
                            e[j - delta] = th.apply((*ebar)[j], -(long long)delta);
                    }
                    found = true;
                }
            }
            if (!found)
                throw UncorrectableError("component syndrome matches no correctable pattern");
        }
        error_parts.push_back(std::move(e));
    }

    RowVec error = code.join(error_parts);
    RowVec codeword(received.size());
    for (std::size_t i = 0; i < received.size(); ++i)
        codeword[i] = F->sub(received[i], error[i]);
    if (!literal_shift_recovery)
        for (const SkewPoly& s : syndrome(codeword, code))
            if (!s.is_zero()) throw Error("internal: corrected word fails the parity check");
    return {std::move(codeword), std::move(error)};
}

}  // namespace skewcodes
