#include "affcover/codes.hpp"

#include <algorithm>
#include <atomic>
#include <boost/multiprecision/cpp_int.hpp>
#include <thread>

namespace affcover {

LinearCode::LinearCode(int dim, std::vector<Mask> rows) : dim_(dim), rows_(std::move(rows)) {
    check_dim(dim, kMaxCodeDim);
    for (const Mask r : rows_) {
        if ((r & ~full_mask(dim)) != 0) {
            throw DimensionError("code row wider than the code dimension");
        }
    }
}

std::vector<std::uint64_t> LinearCode::encode(Mask message) const {
    std::vector<std::uint64_t> word((rows_.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (parity(message & rows_[i])) word[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    return word;
}

LinearCode code_from_cover(const Cover& c) {
    if (c.codim() != 1) {
        throw std::invalid_argument("code_from_cover: cover must consist of hyperplanes");
    }
    std::vector<Mask> rows;
    rows.reserve(static_cast<std::size_t>(c.size()));
    for (const auto& e : c.entries()) {
        if (e.subspace.contains_origin()) {
            throw std::invalid_argument("code_from_cover: " + e.subspace.to_string() +
                                        " passes through the origin (s > 0)");
        }
        for (std::uint32_t i = 0; i < e.mult; ++i) rows.push_back(e.subspace.normals()[0]);
    }
    return LinearCode(c.dim(), std::move(rows));
}

Cover cover_from_code(const LinearCode& code) {
    Cover c(code.dim(), 1);
    for (const Mask u : code.rows()) {
        if (u == 0) {
            throw std::invalid_argument("cover_from_code: zero row has no origin-avoiding hyperplane");
        }
        c.add(AffineSubspace::hyperplane(code.dim(), u, 1));
    }
    c.with_tag({Family::FromCode, code.dim(), 0, 1, 0});
    return c;
}

namespace {

// column j of A: bit i set iff row i has coordinate j
std::vector<std::vector<std::uint64_t>> columns(const LinearCode& code) {
    const std::size_t words = (code.rows().size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> cols(static_cast<std::size_t>(code.dim()),
                                                 std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < code.rows().size(); ++i) {
        for (int j = 0; j < code.dim(); ++j) {
            if (code.rows()[i] & unit(j)) cols[static_cast<std::size_t>(j)][i / 64] |= std::uint64_t{1} << (i % 64);
        }
    }
    return cols;
}

int weight(const std::vector<std::uint64_t>& w) {
    int total = 0;
    for (const auto x : w) total += __builtin_popcountll(x);
    return total;
}

// Minimum weight over Gray-code indices [lo, hi), lo >= 1.
int min_weight_range(const LinearCode& code, const std::vector<std::vector<std::uint64_t>>& cols, std::uint64_t lo,
                     std::uint64_t hi) {
    const Mask start = static_cast<Mask>(lo ^ (lo >> 1));
    std::vector<std::uint64_t> word = code.encode(start);
    int best = weight(word);
    for (std::uint64_t i = lo + 1; i < hi; ++i) {
        const auto& col = cols[static_cast<std::size_t>(__builtin_ctzll(i))];
        int w = 0;
        for (std::size_t b = 0; b < word.size(); ++b) {
            word[b] ^= col[b];
            w += __builtin_popcountll(word[b]);
        }
        best = std::min(best, w);
    }
    return best;
}

} // namespace

int min_distance(const LinearCode& code, int threads) {
    const std::uint64_t total = std::uint64_t{1} << code.dim();
    const auto cols = columns(code);
    const std::uint64_t workers = std::clamp<std::uint64_t>(static_cast<std::uint64_t>(std::max(threads, 1)), 1, total - 1);
    if (workers == 1) {
        return min_weight_range(code, cols, 1, total);
    }
    std::vector<int> partial(workers, 0);
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total - 1 + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = 1 + w * chunk;
        const std::uint64_t hi = std::min(total, lo + chunk);
        if (lo >= hi) {
            partial[w] = code.length();
            continue;
        }
        pool.emplace_back([&, w, lo, hi] { partial[w] = min_weight_range(code, cols, lo, hi); });
    }
    for (auto& t : pool) t.join();
    return *std::min_element(partial.begin(), partial.end());
}

int min_distance_naive(const LinearCode& code) {
    int best = code.length();
    for (Mask x = 1; x < (Mask{1} << code.dim()); ++x) {
        best = std::min(best, weight(code.encode(x)));
    }
    return best;
}

LinearCode golay_generator() {
    constexpr int kResidues[] = {1, 3, 4, 5, 9};
    auto marked = [&](int delta) {
        if (delta == 0) return true;
        return std::find(std::begin(kResidues), std::end(kResidues), delta) != std::end(kResidues);
    };
    // b[i] is row i of the 12x12 border matrix, bit j = column j.
    Mask b[12] = {};
    b[0] = 0xffe; // 0 1 1 ... 1
    for (int i = 0; i < 11; ++i) {
        Mask row = 1; // border column
        for (int j = 0; j < 11; ++j) {
            if (marked(((j - i) % 11 + 11) % 11)) row |= unit(j + 1);
        }
        b[i + 1] = row;
    }
    std::vector<Mask> rows;
    rows.reserve(24);
    for (int i = 0; i < 12; ++i) rows.push_back(unit(i));
    // Column j of B, read as a vector over the 12 message coordinates.
    for (int j = 0; j < 12; ++j) {
        Mask col = 0;
        for (int i = 0; i < 12; ++i) {
            if (b[i] & unit(j)) col |= unit(i);
        }
        rows.push_back(col);
    }
    return LinearCode(12, std::move(rows));
}

bool satisfies_hamming_bound(int dim, int length, int distance) {
    using boost::multiprecision::cpp_int;
    const int t = std::max(0, (distance - 1) / 2);
    cpp_int volume = 0;
    cpp_int binom = 1;
    for (int i = 0; i <= t && i <= length; ++i) {
        volume += binom;
        binom = binom * (length - i) / (i + 1);
    }
    return (cpp_int(1) << dim) * volume <= (cpp_int(1) << length);
}

} // namespace affcover
