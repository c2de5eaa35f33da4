// Binary linear codes and their correspondence with origin-avoiding
// hyperplane covers.
//
// Convention: a code of dimension n and length m is given by m row vectors
// u_1..u_m of F_2^n (the m x n matrix A). The codeword of message x is
// (x.u_1, ..., x.u_m), i.e. A x. This is the transpose of the usual
// "rows of G are basis codewords" convention: the rows here are the COLUMNS
// of a textbook generator matrix.

#pragma once

#include "affcover/cover.hpp"

#include <cstdint>
#include <vector>

namespace affcover {

inline constexpr int kMaxCodeDim = 24;

class LinearCode {
public:
    LinearCode(int dim, std::vector<Mask> rows);

    int dim() const { return dim_; }
    int length() const { return static_cast<int>(rows_.size()); }
    const std::vector<Mask>& rows() const { return rows_; }

    /// Codeword A x as a bit vector of length m (little-endian 64-bit words).
    std::vector<std::uint64_t> encode(Mask message) const;

    friend bool operator==(const LinearCode&, const LinearCode&) = default;

private:
    int dim_;
    std::vector<Mask> rows_;
};

/// Rows of the hyperplanes x.u = 1 of a (k,1;0)-cover, multiplicities
/// expanded. Throws if d != 1 or any member passes through the origin.
LinearCode code_from_cover(const Cover& c);

/// Hyperplanes x.u_i = 1. Throws on a zero row.
Cover cover_from_code(const LinearCode& code);

/// Minimum weight of A x over nonzero messages x (0 if the rows do not span).
/// Messages are walked in Gray-code order; threads > 1 split the message range.
int min_distance(const LinearCode& code, int threads = 1);

/// Reference implementation: encodes every message from scratch.
int min_distance_naive(const LinearCode& code);

/// [24,12,8] extended Golay code: rows are the columns of [I_12 | B], where B
/// borders the 11x11 circulant whose first row marks {0} and the quadratic
/// residues mod 11.
LinearCode golay_generator();

/// Sphere-packing test 2^dim * V(len, t) <= 2^len with t = floor((dist-1)/2),
/// in exact integer arithmetic.
bool satisfies_hamming_bound(int dim, int length, int distance);

} // namespace affcover
