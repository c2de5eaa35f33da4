// Explicit (k,d)-cover families. Every constructor returns a Cover tagged
// with its family and parameters; the sizes are exact closed forms.

#pragma once

#include "affcover/cover.hpp"

#include <cstdint>

namespace affcover {

class ExhaustedError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Optimal cover for k >= 2^{n-d-1}; size 2^d k - floor(k / 2^{n-d}).
Cover thm_a_cover(int n, int k, int d);

/// Size n + 2^d k - d - 2. For d = 1 this is {H_{e_i}} + H_1 + (k-2) parallel
/// pairs, a (k,1;k-2)-cover.
Cover lemma31_cover(int n, int k, int d);

/// Lifts a (k,1;s)-cover of F_2^{n-d+1} to a (k,d;s)-cover of F_2^n of size
/// |inner| + 2k(2^{d-1} - 1).
///
/// Coordinates x_1..x_{d-1} index the 2^{d-1} cosets of S_0 = {x_1 = ... =
/// x_{d-1} = 0}. Each nonzero coset is split by x_d and taken k times; the
/// inner cover is placed in S_0 with its coordinates y_1..y_{n-d+1} mapped to
/// x_d..x_n. Throws if inner is not a (k,1)-cover.
Cover reduce_d(const Cover& inner, int n, int k, int d);

/// S -> S x {0,1} for each member, plus one subspace {x_{n+1} = 1, x_1 = ... =
/// x_{d-1} = 0} through (0,...,0,1). A (k,d;k-1)-cover stays one.
Cover lift(const Cover& c);

/// (k,d;k-1)-cover of size n + 2^d k - d - 1: k copies of every nonzero point
/// of F_2^d and k-1 copies of the origin, lifted n - d times.
Cover smax_cover(int n, int k, int d);

/// k-cover of F_2^k of size 3k - 4 (k >= 4).
Cover diagonal_cover(int k);

/// Random (k,1;0)-cover: hyperplanes H_u with u uniform nonzero, starting from
/// m = n + ceil((k-1) log2(2n)) planes and adding one plane after every
/// ceil(max_tries / 4) failed samples. Throws ExhaustedError after max_tries.
Cover gv_random_cover(int n, int k, std::uint64_t seed, int max_tries = 256);

/// Initial plane count used by gv_random_cover.
int gv_initial_size(int n, int k);

/// The size-24 (8,1;0)-cover of F_2^12 given by the extended Golay code.
Cover golay_cover();

} // namespace affcover
