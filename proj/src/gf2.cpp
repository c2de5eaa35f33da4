#include "affcover/gf2.hpp"

#include <algorithm>
#include <sstream>

namespace affcover {

void check_dim(int n, int max_dim) {
    if (n < 1 || n > max_dim) {
        throw DimensionError("ambient dimension " + std::to_string(n) + " outside [1, " +
                             std::to_string(max_dim) + "]");
    }
}

GFVector::GFVector(Mask bits, int n) : bits_(bits), n_(n) {
    check_dim(n);
    if ((bits & ~full_mask(n)) != 0) {
        throw DimensionError("vector has bits beyond dimension " + std::to_string(n));
    }
}

int dot(const GFVector& x, const GFVector& u) {
    if (x.dim() != u.dim()) {
        throw DimensionError("dot: dimension mismatch");
    }
    return parity(x.bits() & u.bits());
}

CanonicalizeResult canonicalize(int n, const std::vector<Mask>& normals, Mask rhs) {
    check_dim(n);
    if (normals.empty()) {
        throw std::invalid_argument("canonicalize: no constraints");
    }
    if (normals.size() > 32) {
        throw std::invalid_argument("canonicalize: too many constraints");
    }
    const Mask width = full_mask(n);
    std::vector<Mask> rows;
    rows.reserve(normals.size());
    for (std::size_t i = 0; i < normals.size(); ++i) {
        if ((normals[i] & ~width) != 0) {
            throw DimensionError("canonicalize: normal wider than n");
        }
        rows.push_back(normals[i] | (((rhs >> i) & 1u) << n));
    }

    std::size_t rank = 0;
    bool inconsistent = false;
    for (int col = 0; col <= n && rank < rows.size(); ++col) {
        const Mask bit = Mask{1} << col;
        auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(rank), rows.end(),
                               [bit](Mask r) { return (r & bit) != 0; });
        if (it == rows.end()) {
            continue;
        }
        std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(rank), it);
        for (std::size_t j = 0; j < rows.size(); ++j) {
            if (j != rank && (rows[j] & bit) != 0) {
                rows[j] ^= rows[rank];
            }
        }
        if (col == n) {
            inconsistent = true;
        }
        ++rank;
    }
    if (inconsistent) {
        return EmptySet{};
    }
    if (rank < rows.size()) {
        return Degenerate{static_cast<int>(rank)};
    }
    std::vector<Mask> out(rows.size());
    Mask out_rhs = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out[i] = rows[i] & width;
        out_rhs |= ((rows[i] >> n) & 1u) << i;
    }
    return AffineSubspace(n, std::move(out), out_rhs);
}

AffineSubspace AffineSubspace::from_constraints(int n, const std::vector<Mask>& normals, Mask rhs) {
    auto r = canonicalize(n, normals, rhs);
    if (auto* s = std::get_if<AffineSubspace>(&r)) {
        return std::move(*s);
    }
    if (std::holds_alternative<EmptySet>(r)) {
        throw std::invalid_argument("constraint system is inconsistent");
    }
    throw std::invalid_argument("constraint system has dependent rows");
}

AffineSubspace AffineSubspace::hyperplane(int n, Mask normal, int rhs) {
    return from_constraints(n, {normal}, static_cast<Mask>(rhs & 1));
}

AffineSubspace AffineSubspace::point(int n, Mask x) {
    std::vector<Mask> normals(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        normals[static_cast<std::size_t>(i)] = unit(i);
    }
    return from_constraints(n, normals, x);
}

bool AffineSubspace::contains(Mask x) const {
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        if (static_cast<Mask>(parity(x & normals_[i])) != ((rhs_ >> i) & 1u)) {
            return false;
        }
    }
    return true;
}

std::vector<std::uint8_t> AffineSubspace::canonical_bytes() const {
    std::vector<std::uint8_t> out;
    out.reserve(2 + 4 * normals_.size());
    out.push_back(static_cast<std::uint8_t>(n_));
    out.push_back(static_cast<std::uint8_t>(normals_.size()));
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        const Mask row = normals_[i] | (((rhs_ >> i) & 1u) << n_);
        for (int shift = 24; shift >= 0; shift -= 8) {
            out.push_back(static_cast<std::uint8_t>(row >> shift));
        }
    }
    return out;
}

std::string AffineSubspace::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < normals_.size(); ++i) {
        if (i) os << ", ";
        os << "x.0x" << std::hex << normals_[i] << std::dec << '=' << ((rhs_ >> i) & 1u);
    }
    os << '}';
    return os.str();
}

std::strong_ordering operator<=>(const AffineSubspace& a, const AffineSubspace& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.normals_.size() <=> b.normals_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.normals_.size(); ++i) {
        const Mask ra = a.normals_[i] | (((a.rhs_ >> i) & 1u) << a.n_);
        const Mask rb = b.normals_[i] | (((b.rhs_ >> i) & 1u) << b.n_);
        if (auto c = ra <=> rb; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

bool contains(const AffineSubspace& s, const GFVector& x) {
    if (s.dim() != x.dim()) {
        throw DimensionError("contains: dimension mismatch");
    }
    return s.contains(x.bits());
}

PointParametrization parametrize(const AffineSubspace& s) {
    PointParametrization p;
    Mask pivots = 0;
    for (std::size_t i = 0; i < s.normals().size(); ++i) {
        const Mask row = s.normals()[i];
        const Mask pivot = row & (~row + 1);
        pivots |= pivot;
        if (s.rhs_bit(static_cast<int>(i))) {
            p.base |= pivot;
        }
    }
    for (int j = 0; j < s.dim(); ++j) {
        if (pivots & unit(j)) {
            continue;
        }
        Mask dir = unit(j);
        for (const Mask row : s.normals()) {
            if (row & unit(j)) {
                dir |= row & (~row + 1);
            }
        }
        p.directions.push_back(dir);
    }
    return p;
}

std::vector<Mask> enumerate_points(const AffineSubspace& s) {
    std::vector<Mask> pts;
    pts.reserve(static_cast<std::size_t>(s.size()));
    for_each_point(s, [&](Mask x) { pts.push_back(x); });
    std::sort(pts.begin(), pts.end());
    return pts;
}

std::uint64_t gaussian_binomial2(int n, int d) {
    if (d < 0 || d > n) return 0;
    // prod_{i<d} (2^{n-i} - 1) / (2^{i+1} - 1), exact at every step
    unsigned __int128 num = 1;
    unsigned __int128 den = 1;
    for (int i = 0; i < d; ++i) {
        num *= (static_cast<unsigned __int128>(1) << (n - i)) - 1;
        den *= (static_cast<unsigned __int128>(1) << (i + 1)) - 1;
    }
    return static_cast<std::uint64_t>(num / den);
}

namespace {

void enumerate_rref(int n, int d, int row, int min_col, std::vector<int>& pivots,
                    std::vector<AffineSubspace>& out) {
    if (row == d) {
        const Mask pivot_mask = [&] {
            Mask m = 0;
            for (int p : pivots) m |= unit(p);
            return m;
        }();
        // free entries of row i: non-pivot columns right of its pivot
        std::vector<std::vector<int>> free_cols(static_cast<std::size_t>(d));
        int total_free = 0;
        for (int i = 0; i < d; ++i) {
            for (int j = pivots[static_cast<std::size_t>(i)] + 1; j < n; ++j) {
                if (!(pivot_mask & unit(j))) {
                    free_cols[static_cast<std::size_t>(i)].push_back(j);
                    ++total_free;
                }
            }
        }
        std::vector<Mask> normals(static_cast<std::size_t>(d));
        for (std::uint64_t fill = 0; fill < (std::uint64_t{1} << total_free); ++fill) {
            int used = 0;
            for (int i = 0; i < d; ++i) {
                Mask r = unit(pivots[static_cast<std::size_t>(i)]);
                for (int j : free_cols[static_cast<std::size_t>(i)]) {
                    if ((fill >> used) & 1u) r |= unit(j);
                    ++used;
                }
                normals[static_cast<std::size_t>(i)] = r;
            }
            for (Mask rhs = 0; rhs < (Mask{1} << d); ++rhs) {
                out.push_back(AffineSubspace::from_constraints(n, normals, rhs));
            }
        }
        return;
    }
    for (int col = min_col; col <= n - (d - row); ++col) {
        pivots.push_back(col);
        enumerate_rref(n, d, row + 1, col + 1, pivots, out);
        pivots.pop_back();
    }
}

} // namespace

std::vector<AffineSubspace> enumerate_subspaces(int n, int d, const EnumerationLimits& limits) {
    check_dim(n, limits.max_dim);
    if (d < 1 || d > n) {
        throw std::invalid_argument("enumerate_subspaces: need 1 <= d <= n");
    }
    const std::uint64_t count = gaussian_binomial2(n, d) << d;
    if (count > limits.max_count) {
        throw ResourceLimitError("enumerate_subspaces: " + std::to_string(count) +
                                 " subspaces exceed limit " + std::to_string(limits.max_count));
    }
    std::vector<AffineSubspace> out;
    out.reserve(static_cast<std::size_t>(count));
    std::vector<int> pivots;
    enumerate_rref(n, d, 0, 0, pivots, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace affcover
