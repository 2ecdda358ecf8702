#include "skewcodes/semilinear.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <utility>

namespace skewcodes {

SemiLinearMap::SemiLinearMap(Automorphism theta, Matrix M)
    : th_(std::move(theta)), M_(std::move(M)) {
    if (M_.rows() != M_.cols()) throw DomainError("semi-linear map needs a square matrix");
    if (M_.rows() == 0) throw DomainError("semi-linear map needs dimension at least 1");
    if (!th_.field()->same_as(*M_.field()))
        throw DomainError("automorphism and matrix live over different fields");
}

RowVec SemiLinearMap::apply(const RowVec& v, std::uint64_t k) const {
    if (v.size() != M_.rows()) throw DomainError("vector length does not match the map");
    RowVec w = v;
    for (std::uint64_t i = 0; i < k; ++i) {
        for (auto& c : w) c = th_.apply(c);
        w = mul_row(M_.field(), w, M_);
    }
    return w;
}

CyclicSubspace cyclic_subspace(const SemiLinearMap& T, const RowVec& v) {
    const std::size_t n = T.dim();
    if (v.size() != n) throw DomainError("vector length does not match the map");
    const auto& F = T.matrix().field();
    std::vector<RowVec> rows;
    RowVec w = v;
    while (rows.size() < n) {
        if (row_space_contains(Matrix::from_rows(F, rows, n), w)) break;
        rows.push_back(w);
        w = T.apply(w);
    }
    return CyclicSubspace{Matrix::from_rows(F, rows, n), rows.size()};
}

SkewPoly pi(const RowVec& v, const SkewPoly& f) {
    if (f.is_zero() || f.degree() == 0) throw DomainError("pi needs a modulus of degree >= 1");
    if (v.size() != f.degree()) throw DomainError("vector length must equal deg f");
    return SkewPoly::of_reps(f.theta(), std::vector<Field::Rep>(v));
}

RowVec pi_inv(const SkewPoly& p, const SkewPoly& f) {
    if (f.is_zero() || f.degree() == 0) throw DomainError("pi_inv needs a modulus of degree >= 1");
    SkewPoly r = right_quotrem(p, f).rem;
    RowVec v(f.degree(), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.coeff(i);
    return v;
}

bool is_invariant(const SemiLinearMap& T, const Matrix& basis) {
    if (basis.cols() != T.dim()) throw DomainError("basis width does not match the map");
    for (std::size_t i = 0; i < basis.rows(); ++i)
        if (!row_space_contains(basis, T.apply(basis.row(i)))) return false;
    return true;
}

Matrix CyclicDecomposition::block_diag_matrix() const {
    return Matrix::block_diag(blocks);
}

// ---- decompose ----

namespace {

// Stack the cyclic bases of `gens`, derive the companion blocks, and check
// the full certificate.  nullopt whenever the generators do not produce a
// direct-sum decomposition with non-increasing dimensions.
std::optional<CyclicDecomposition> assemble(const SemiLinearMap& T,
                                            const std::vector<RowVec>& gens) {
    const std::size_t n = T.dim();
    const auto& F = T.matrix().field();
    if (gens.empty()) return std::nullopt;

    std::vector<CyclicSubspace> parts;
    std::size_t total = 0;
    for (const auto& g : gens) {
        auto cyc = cyclic_subspace(T, g);
        if (cyc.dim == 0) return std::nullopt;
        if (!parts.empty() && cyc.dim > parts.back().dim) return std::nullopt;
        total += cyc.dim;
        parts.push_back(std::move(cyc));
    }
    if (total != n) return std::nullopt;

    Matrix C = parts.front().basis;
    for (std::size_t i = 1; i < parts.size(); ++i) C = C.vstack(parts[i].basis);
    if (rank(C) != n) return std::nullopt;

    std::vector<Matrix> blocks;
    std::vector<SkewPoly> factors;
    std::vector<std::size_t> sizes;
    for (const auto& part : parts) {
        const std::size_t d = part.dim;
        RowVec w = T.apply(part.basis.row(d - 1));  // (u) T^d
        auto a = solve_left(part.basis, w);
        if (!a || (*a)[0] == 0) return std::nullopt;

        Matrix B(F, d, d);
        for (std::size_t j = 0; j + 1 < d; ++j) B.set(j, j + 1, 1);
        B.set_row(d - 1, *a);
        blocks.push_back(std::move(B));

        std::vector<Field::Rep> cf(d + 1, 0);
        for (std::size_t j = 0; j < d; ++j) cf[j] = F->neg((*a)[j]);
        cf[d] = 1;
        SkewPoly fac = SkewPoly::of_reps(T.theta(), std::move(cf));
        if (d % 2 == 1) fac = fac.scale_left(F->neg(1));  // the (-1)^d convention
        factors.push_back(std::move(fac));
        sizes.push_back(d);
    }

    Matrix D = Matrix::block_diag(blocks);
    if (entrywise_theta(C, T.theta()) * T.matrix() != D * C) return std::nullopt;
    return CyclicDecomposition{gens, std::move(sizes), std::move(factors),
                               std::move(blocks), std::move(C)};
}

// true iff row r of M is exactly the unit vector e_c
bool row_is_unit(const Matrix& M, std::size_t r, std::size_t c) {
    if (c >= M.cols()) return false;
    for (std::size_t j = 0; j < M.cols(); ++j)
        if (M.at(r, j) != (j == c ? 1u : 0u)) return false;
    return true;
}

// Recognize a matrix that is already block diagonal with companion blocks:
// runs of superdiagonal unit rows closed off by a row supported inside the
// block's own columns.  Returns (start, size) pairs in matrix order.
std::optional<std::vector<std::pair<std::size_t, std::size_t>>> parse_companion_blocks(
    const Matrix& M) {
    const std::size_t n = M.rows();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t start = 0;
    while (start < n) {
        std::size_t j = start;
        while (j < n && row_is_unit(M, j, j + 1)) ++j;
        if (j == n) return std::nullopt;  // ran off the end without a closing row
        for (std::size_t c = 0; c < n; ++c)
            if ((c < start || c > j) && M.at(j, c) != 0) return std::nullopt;
        out.emplace_back(start, j - start + 1);
        start = j + 1;
    }
    return out;
}

bool entries_fixed(const Matrix& M, const Automorphism& th) {
    for (std::size_t i = 0; i < M.rows(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!th.fixes(M.at(i, j))) return false;
    return true;
}

// How many vectors a coordinate alphabet of the given size spawns in
// dimension n, saturating at cap+1.
std::size_t space_size_capped(std::size_t alphabet, std::size_t n, std::size_t cap) {
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
        total *= alphabet;
        if (total > cap) return cap + 1;
    }
    return total;
}

// Candidate generators in a fixed deterministic order: every vector over the
// fixed subfield when that set is small enough, the unit vectors, then the
// whole space when it is small enough to enumerate, and pseudo-random
// vectors otherwise.  Duplicates are dropped; the fixed order is what makes
// search runs reproducible.
std::vector<RowVec> build_pool(const SemiLinearMap& T) {
    constexpr std::size_t kEnumCap = 4096;
    constexpr std::size_t kRandomSubfield = 1024;
    constexpr std::size_t kRandomFull = 2048;

    const std::size_t n = T.dim();
    const auto& F = T.matrix().field();
    std::vector<RowVec> pool;
    std::set<RowVec> seen;
    auto push = [&](const RowVec& v) {
        if (std::all_of(v.begin(), v.end(), [](Field::Rep c) { return c == 0; })) return;
        if (seen.insert(v).second) pool.push_back(v);
    };
    // all vectors with coordinates drawn from `alph`, first coordinate most
    // significant
    auto enumerate = [&](const std::vector<Field::Rep>& alph) {
        std::vector<std::size_t> dig(n, 0);
        const std::size_t total = space_size_capped(alph.size(), n, kEnumCap);
        for (std::size_t c = 0; c < total; ++c) {
            RowVec v(n);
            for (std::size_t i = 0; i < n; ++i) v[i] = alph[dig[i]];
            push(v);
            for (std::size_t i = n; i-- > 0;) {
                if (++dig[i] < alph.size()) break;
                dig[i] = 0;
            }
        }
    };

    const std::vector<Field::Rep> sub = T.theta().fixed_subfield();
    const bool sub_enumerated = space_size_capped(sub.size(), n, kEnumCap) <= kEnumCap;
    if (sub_enumerated) enumerate(sub);

    for (std::size_t i = 0; i < n; ++i) {
        RowVec e(n, 0);
        e[i] = 1;
        push(e);
    }

    std::vector<Field::Rep> all(F->q());
    for (Field::Rep r = 0; r < F->q(); ++r) all[r] = r;
    const bool full_enumerated = space_size_capped(all.size(), n, kEnumCap) <= kEnumCap;
    if (full_enumerated) enumerate(all);

    std::mt19937_64 rng(0x736b6577ULL);  // fixed seed: runs are reproducible
    if (!sub_enumerated && !full_enumerated)
        for (std::size_t c = 0; c < kRandomSubfield; ++c) {
            RowVec v(n);
            for (auto& x : v) x = sub[rng() % sub.size()];
            push(v);
        }
    if (!full_enumerated)
        for (std::size_t c = 0; c < kRandomFull; ++c) {
            RowVec v(n);
            for (auto& x : v) x = (Field::Rep)(rng() % F->q());
            push(v);
        }
    return pool;
}

// Depth-first extension of a partial decomposition.  At each level every
// pool vector is scored by its cyclic dimension; candidates that direct-sum
// with the span built so far are tried largest first, with backtracking.
bool extend(const SemiLinearMap& T, const std::vector<RowVec>& pool,
            std::uint64_t& budget, std::vector<RowVec>& gens, const Matrix& span,
            std::size_t cap) {
    const std::size_t n = T.dim();
    if (span.rows() == n) return true;

    struct Scored {
        const RowVec* v;
        CyclicSubspace cyc;
    };
    std::vector<Scored> ok;
    for (const auto& v : pool) {
        if (budget == 0) throw BudgetError("cyclic decomposition search budget exceeded");
        --budget;
        auto cyc = cyclic_subspace(T, v);
        if (cyc.dim == 0 || cyc.dim > cap || span.rows() + cyc.dim > n) continue;
        if (rank(span.vstack(cyc.basis)) != span.rows() + cyc.dim) continue;
        ok.push_back({&v, std::move(cyc)});
    }
    std::stable_sort(ok.begin(), ok.end(),
                     [](const Scored& a, const Scored& b) { return a.cyc.dim > b.cyc.dim; });
    for (const auto& cand : ok) {
        gens.push_back(*cand.v);
        if (extend(T, pool, budget, gens, span.vstack(cand.cyc.basis), cand.cyc.dim))
            return true;
        gens.pop_back();
    }
    return false;
}

}  // namespace

CyclicDecomposition decompose(const SemiLinearMap& T, std::uint64_t budget) {
    const Matrix& M = T.matrix();
    const std::size_t n = T.dim();
    if (rank(M) != n)
        throw DomainError("decompose requires an invertible matrix (nonzero constant terms)");

    // Already in (block) companion shape: read the structure off directly.
    if (auto bl = parse_companion_blocks(M)) {
        std::stable_sort(bl->begin(), bl->end(),
                         [](const auto& a, const auto& b) { return a.second > b.second; });
        std::vector<RowVec> gens;
        for (const auto& [start, size] : *bl) {
            (void)size;
            RowVec e(n, 0);
            e[start] = 1;
            gens.push_back(e);
        }
        if (auto dec = assemble(T, gens)) return *dec;
    }

    // theta acts trivially on the entries: the commutative normal form of M
    // already yields T-cyclic generators (its conjugator stays over the
    // fixed subfield), so try it and keep it whenever it certifies.
    if (T.theta().is_identity() || entries_fixed(M, T.theta())) {
        Rcf r = rational_canonical_form(M);
        std::vector<RowVec> gens(r.generators.rbegin(), r.generators.rend());
        if (auto dec = assemble(T, gens)) return *dec;
        if (T.theta().is_identity())
            throw Error("internal: commutative normal form failed to certify");
    }

    std::vector<RowVec> pool = build_pool(T);
    std::vector<RowVec> gens;
    Matrix span(M.field(), 0, n);
    if (extend(T, pool, budget, gens, span, n)) {
        if (auto dec = assemble(T, gens)) return *dec;
        throw Error("internal: searched decomposition failed to certify");
    }
    throw BudgetError("cyclic decomposition search exhausted its candidates");
}

}  // namespace skewcodes
