#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "skewcodes/codes.hpp"

namespace skewcodes {

// One block per component, block i of length k_i.
using Message = std::vector<RowVec>;

enum class EncodeMethod { poly, matrix };

// Systematic encoder into C_1 x ... x C_r (component coordinates, no
// conjugator): block i carries the message in its last k_i positions,
// twisted by theta^{n_i - k_i}.  The poly method clears the remainder of
// X^{n_i-k_i} * m_i under division by g_i; the matrix method solves the
// parity constraint.  Both produce the same codeword.
RowVec encode(const Message& msg, const ProductTCode& code,
              EncodeMethod method = EncodeMethod::poly);

// Inverse of encode on clean codewords: untwist each block and read the
// last k_i coordinates.  Rejects words with a nonzero syndrome.
Message decode_plain(const RowVec& cw, const ProductTCode& code);

// Componentwise remainder of the block polynomial under division by g_i;
// the zero tuple exactly on C_1 x ... x C_r.
std::vector<SkewPoly> syndrome(const RowVec& v, const ProductTCode& code);

// The least-degree t with t * X = 1 in R/Rf; closed form
// t = -f_0^{-1} (f_1 + f_2 X + ... + f_n X^{n-1}).
SkewPoly x_inverse(const SkewPoly& f);

// Per component: every error pattern of weight at most (d_i - 1)/2 whose
// top coordinate e_{n_i - 1} is nonzero, keyed by its syndrome.  Any other
// correctable pattern is a twisted down-shift of a stored one.
class SyndromeTable {
public:
    static constexpr std::uint64_t default_budget = std::uint64_t(1) << 22;

    // distances computed by exhaustive enumeration
    explicit SyndromeTable(const ProductTCode& code,
                           std::uint64_t budget = default_budget);
    // caller-supplied component distances (a wrong value makes two stored
    // patterns collide, which is reported instead of building a bad table)
    SyndromeTable(const ProductTCode& code, std::vector<std::uint64_t> distances,
                  std::uint64_t budget = default_budget);

    const std::vector<std::uint64_t>& distances() const { return d_; }
    std::uint64_t d_min() const { return dmin_; }
    std::size_t entries() const { return entries_; }

    bool matches(const ProductTCode& code) const;
    // stored pattern for this component syndrome, or nullptr
    const RowVec* find(std::size_t comp, const SkewPoly& syn) const;

private:
    void build(const ProductTCode& code, std::uint64_t budget);

    std::vector<SkewPoly> fs_, gs_;
    std::vector<std::uint64_t> d_;
    std::uint64_t dmin_ = 0;
    std::vector<std::map<std::vector<Field::Rep>, RowVec>> maps_;
    std::size_t entries_ = 0;
};

struct DecodedWord {
    RowVec codeword;
    RowVec error;
};

// Error correction by syndrome lookup: each component walks the shifts
// X^delta * s of its syndrome until a stored pattern matches, then recovers
// the error from the match.  The default recovery undoes the shift exactly
// (drop delta low zeros, untwist by theta^{-delta}); literal_shift_recovery
// instead multiplies by x_inverse(f)^delta and reduces mod f, which agrees
// only when theta is the identity.  Words with more than (d_min - 1)/2
// errors either come back as some other codeword or raise
// UncorrectableError; a non-codeword is never returned silently.
DecodedWord meggitt_decode(const RowVec& received, const SyndromeTable& table,
                           const ProductTCode& code,
                           bool literal_shift_recovery = false);

}  // namespace skewcodes
