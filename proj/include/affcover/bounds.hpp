// Closed-form bounds on f(n,k,d), the minimum size of a (k,d)-cover of
// F_2^n, and on g(n,k,d;s), the minimum at origin multiplicity exactly s.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace affcover {

/// 2^d k - floor((k - s) / 2^{n-d}); a lower bound on g(n,k,d;s), and on
/// f(n,k,d) for s = 0.
std::int64_t lb_double_count(int n, int k, int d, int s = 0);

/// The exact value 2^d k - floor(k / 2^{n-d}) when k >= 2^{n-d-1}.
std::optional<std::int64_t> exact_thm_a(int n, int k, int d);

/// n + 2^d k - d - 2, valid for k >= 2.
std::int64_t lemma31_upper(int n, int k, int d);

/// g(n,k,d;k-1) = n + 2^d k - d - 1.
std::int64_t g_smax_formula(int n, int k, int d);

/// f(n,1,d) = n + 2^d - d - 1.
std::int64_t jamison_value(int n, int d);

/// True iff n > 2^e for a possibly large exponent e.
bool exceeds_power_of_two(std::int64_t n, std::int64_t e);

/// Large-dimension regime: n > 2^{2^d k - d - k + 1}.
bool thm_b_applies(int n, int k, int d);

enum class ThmBCLowerSource { ThmB, ThmC, DoubleCount };

struct ThmBCBounds {
    std::int64_t lo;
    std::int64_t hi;
    ThmBCLowerSource source;
};

/// hi = n + 2^d k - d - 2. lo = hi in the large-dimension regime, else
/// ceil(n + 2^d k - d - log2(2k)) = n + 2^d k - d - 1 - floor(log2 k) once
/// n >= floor(log2 k) + d + 1, else the double-count bound. nullopt for k < 2.
std::optional<ThmBCBounds> bounds_thm_bc(int n, int k, int d);

int floor_log2(std::int64_t x);

/// Exact real of the form integer + t * log2(num / den), ordered without
/// floating point by comparing 2^integer (num/den)^t via big integers.
struct Log2Value {
    std::int64_t integer = 0;
    std::int64_t t = 0;
    boost::multiprecision::cpp_int num = 1;
    boost::multiprecision::cpp_int den = 1;

    static Log2Value of_integer(std::int64_t v) { return {v, 0, 1, 1}; }
    double approx() const;
    /// Smallest integer >= value.
    std::int64_t ceil() const;
    std::string to_string() const;

    friend std::strong_ordering operator<=>(const Log2Value& a, const Log2Value& b);
    friend bool operator==(const Log2Value& a, const Log2Value& b) { return (a <=> b) == 0; }
};

/// n + floor((k-1)/2) log2(2n/(k-1)): lower bound on g(n,k,1;0) from the
/// sphere-packing bound on the associated code.
Log2Value lb_hamming_s0(int n, int k);

/// k - 2 when n > 2^{2^d k - k - d + 1} (every optimal cover then passes
/// through the origin at least k - 2 times), else 0.
int origin_mult_floor(int n, int k, int d);

/// The deduction f(n,k,d) = n + 2^d k - d - 2 through the origin-multiplicity
/// argument, evaluated with the exact sphere-packing bound:
///   covers with s <= k-3 have size >= lb_hamming_s0(n,3) + k - 3, which must
///   exceed the Lemma31 upper bound; then s in {k-2, k-1} and
///   f >= g(n,k,d;k-1) - 1.
struct OriginChain {
    Log2Value low_origin_size; // lb_hamming_s0(n,3) + k - 3
    std::int64_t upper;        // n + 2^d k - d - 2
    bool low_origin_excluded;  // low_origin_size > upper
    std::int64_t lower;        // g_smax_formula - 1 (valid when excluded)
};
OriginChain origin_chain(int n, int k, int d);

} // namespace affcover
