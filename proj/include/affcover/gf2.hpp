// Bit-parallel linear algebra over GF(2) and affine subspaces of GF(2)^n in
// constraint form.
//
// Coordinate convention used everywhere in this library: bit i of a mask is
// coordinate x_{i+1}, so e_1 is 0x1 and the all-ones vector of F_2^n is
// (1 << n) - 1.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace affcover {

using Mask = std::uint32_t;

inline constexpr int kDefaultMaxDim = 20;
inline constexpr int kHardMaxDim = 24;

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr Mask full_mask(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }
inline constexpr Mask unit(int i) { return Mask{1} << i; } // e_{i+1}
inline constexpr int parity(Mask x) { return __builtin_parity(x); }

/// A vector of F_2^n stored as a bit mask.
class GFVector {
public:
    GFVector(Mask bits, int n);

    Mask bits() const { return bits_; }
    int dim() const { return n_; }

    friend bool operator==(const GFVector&, const GFVector&) = default;

private:
    Mask bits_;
    int n_;
};

/// Parity of x AND u. Throws DimensionError when the ambient dimensions differ.
int dot(const GFVector& x, const GFVector& u);

struct EmptySet {
    friend bool operator==(const EmptySet&, const EmptySet&) = default;
};
struct Degenerate {
    int rank;
    friend bool operator==(const Degenerate&, const Degenerate&) = default;
};

class AffineSubspace;
using CanonicalizeResult = std::variant<AffineSubspace, EmptySet, Degenerate>;

/// Codimension-d affine subspace {x : x.u_i = c_i for all i} of F_2^n.
///
/// Always held in canonical form: the augmented matrix [U|c] is in reduced
/// row echelon form, with pivots taken at the lowest set bit of each row (the
/// x_1 column comes first) and rows ordered by increasing pivot. Two values
/// describe the same point set iff they compare equal.
class AffineSubspace {
public:
    /// Canonicalizes the system; throws std::invalid_argument when it is
    /// inconsistent or its constraints are dependent.
    static AffineSubspace from_constraints(int n, const std::vector<Mask>& normals, Mask rhs);
    static AffineSubspace hyperplane(int n, Mask normal, int rhs);
    static AffineSubspace point(int n, Mask x);

    int dim() const { return n_; }
    int codim() const { return static_cast<int>(normals_.size()); }
    const std::vector<Mask>& normals() const { return normals_; }
    /// Bit i is the right-hand side of normals()[i].
    Mask rhs() const { return rhs_; }
    int rhs_bit(int i) const { return (rhs_ >> i) & 1; }

    bool contains(Mask x) const;
    bool contains_origin() const { return rhs_ == 0; }
    std::uint64_t size() const { return std::uint64_t{1} << (n_ - codim()); }

    /// Canonical byte encoding: n, d, then each augmented row (normal with
    /// its rhs bit at position n) as 4 big-endian bytes.
    std::vector<std::uint8_t> canonical_bytes() const;

    /// One-line human readable form, e.g. "{x.0x5=1, x.0x2=0}".
    std::string to_string() const;

    friend bool operator==(const AffineSubspace&, const AffineSubspace&) = default;
    friend std::strong_ordering operator<=>(const AffineSubspace& a, const AffineSubspace& b);

private:
    friend CanonicalizeResult canonicalize(int n, const std::vector<Mask>& normals, Mask rhs);
    AffineSubspace(int n, std::vector<Mask> normals, Mask rhs)
        : n_(n), normals_(std::move(normals)), rhs_(rhs) {}

    int n_ = 0;
    std::vector<Mask> normals_;
    Mask rhs_ = 0;
};

/// RREF of [normals | rhs]. Bit i of rhs belongs to normals[i].
/// Returns EmptySet for an inconsistent system (reported even when the rows
/// are also dependent), Degenerate when the rows are dependent but consistent.
CanonicalizeResult canonicalize(int n, const std::vector<Mask>& normals, Mask rhs);

bool contains(const AffineSubspace& s, const GFVector& x);

/// All 2^{n-d} points, in increasing mask order.
std::vector<Mask> enumerate_points(const AffineSubspace& s);

/// Calls f(point) for every point of s in Gray-code order (unsorted).
template <typename F>
void for_each_point(const AffineSubspace& s, F&& f);

/// Basis of the direction space of s and one particular point, as used by
/// for_each_point.
struct PointParametrization {
    Mask base = 0;
    std::vector<Mask> directions;
};
PointParametrization parametrize(const AffineSubspace& s);

struct EnumerationLimits {
    int max_dim = kDefaultMaxDim;
    std::uint64_t max_count = 4'000'000;
};

/// Number of d-dimensional linear subspaces of F_2^n.
std::uint64_t gaussian_binomial2(int n, int d);

/// Every codim-d affine subspace of F_2^n, canonical, sorted by canonical
/// order. Throws ResourceLimitError above limits.max_count.
std::vector<AffineSubspace> enumerate_subspaces(int n, int d, const EnumerationLimits& limits = {});

void check_dim(int n, int max_dim = kHardMaxDim);

template <typename F>
void for_each_point(const AffineSubspace& s, F&& f) {
    const PointParametrization p = parametrize(s);
    Mask x = p.base;
    f(x);
    const std::uint64_t count = std::uint64_t{1} << p.directions.size();
    for (std::uint64_t i = 1; i < count; ++i) {
        x ^= p.directions[static_cast<std::size_t>(__builtin_ctzll(i))];
        f(x);
    }
}

} // namespace affcover
