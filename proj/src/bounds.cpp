#include "affcover/bounds.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace affcover {

using boost::multiprecision::cpp_int;

namespace {

void check_ndk(int n, int k, int d) {
    if (d < 1 || n < d || k < 1 || n > 62) {
        throw std::invalid_argument("bounds: need 62 >= n >= d >= 1 and k >= 1");
    }
}

std::int64_t pow2(int e) { return std::int64_t{1} << e; }

cpp_int big_pow(cpp_int base, std::int64_t e) {
    cpp_int r = 1;
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace

std::int64_t lb_double_count(int n, int k, int d, int s) {
    check_ndk(n, k, d);
    if (s < 0 || s >= k) {
        throw std::invalid_argument("lb_double_count: need k > s >= 0");
    }
    return pow2(d) * k - (k - s) / pow2(n - d);
}

std::optional<std::int64_t> exact_thm_a(int n, int k, int d) {
    check_ndk(n, k, d);
    if (2 * std::int64_t{k} < pow2(n - d)) return std::nullopt;
    return pow2(d) * k - k / pow2(n - d);
}

std::int64_t lemma31_upper(int n, int k, int d) {
    check_ndk(n, k, d);
    if (k < 2) throw std::invalid_argument("lemma31_upper: requires k >= 2");
    return n + pow2(d) * k - d - 2;
}

std::int64_t g_smax_formula(int n, int k, int d) {
    check_ndk(n, k, d);
    return n + pow2(d) * k - d - 1;
}

std::int64_t jamison_value(int n, int d) {
    check_ndk(n, 1, d);
    return n + pow2(d) - d - 1;
}

bool exceeds_power_of_two(std::int64_t n, std::int64_t e) {
    if (e < 0) return n >= 1; // 2^e < 1 <= n
    if (e >= 62) return false;
    return n > pow2(static_cast<int>(e));
}

bool thm_b_applies(int n, int k, int d) {
    check_ndk(n, k, d);
    return exceeds_power_of_two(n, pow2(d) * k - d - k + 1);
}

int floor_log2(std::int64_t x) {
    if (x < 1) throw std::invalid_argument("floor_log2: x must be positive");
    return 63 - __builtin_clzll(static_cast<unsigned long long>(x));
}

std::optional<ThmBCBounds> bounds_thm_bc(int n, int k, int d) {
    check_ndk(n, k, d);
    if (k < 2) return std::nullopt;
    const std::int64_t hi = lemma31_upper(n, k, d);
    if (thm_b_applies(n, k, d)) return ThmBCBounds{hi, hi, ThmBCLowerSource::ThmB};
    const int lg = floor_log2(k);
    if (n >= lg + d + 1) {
        return ThmBCBounds{n + pow2(d) * k - d - 1 - lg, hi, ThmBCLowerSource::ThmC};
    }
    return ThmBCBounds{lb_double_count(n, k, d), hi, ThmBCLowerSource::DoubleCount};
}

double Log2Value::approx() const {
    if (t == 0) return static_cast<double>(integer);
    return static_cast<double>(integer) +
           static_cast<double>(t) * (std::log2(num.convert_to<double>()) - std::log2(den.convert_to<double>()));
}

std::int64_t Log2Value::ceil() const {
    auto c = static_cast<std::int64_t>(std::ceil(approx()));
    // settle the float guess exactly
    while (*this > of_integer(c)) ++c;
    while (*this <= of_integer(c - 1)) --c;
    return c;
}

std::string Log2Value::to_string() const {
    std::ostringstream os;
    os << integer;
    if (t != 0) os << " + " << t << "*log2(" << num << "/" << den << ")";
    return os.str();
}

std::strong_ordering operator<=>(const Log2Value& a, const Log2Value& b) {
    // compare 2^{a.i} (a.num/a.den)^{a.t} with 2^{b.i} (b.num/b.den)^{b.t};
    // negative exponents swap numerator and denominator
    auto side = [](const Log2Value& v, cpp_int& top, cpp_int& bottom) {
        if (v.t >= 0) {
            top = big_pow(v.num, v.t);
            bottom = big_pow(v.den, v.t);
        } else {
            top = big_pow(v.den, -v.t);
            bottom = big_pow(v.num, -v.t);
        }
    };
    cpp_int at, ab, bt, bb;
    side(a, at, ab);
    side(b, bt, bb);
    cpp_int lhs = at * bb;
    cpp_int rhs = bt * ab;
    const std::int64_t shift = a.integer - b.integer;
    if (shift >= 0) {
        lhs <<= static_cast<unsigned>(shift);
    } else {
        rhs <<= static_cast<unsigned>(-shift);
    }
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Log2Value lb_hamming_s0(int n, int k) {
    if (n < 1 || k < 2) throw std::invalid_argument("lb_hamming_s0: need n >= 1 and k >= 2");
    const std::int64_t t = (k - 1) / 2;
    if (t == 0) return Log2Value::of_integer(n);
    return Log2Value{n, t, cpp_int(2 * n), cpp_int(k - 1)};
}

int origin_mult_floor(int n, int k, int d) {
    check_ndk(n, k, d);
    if (k < 2) return 0;
    return exceeds_power_of_two(n, pow2(d) * k - k - d + 1) ? k - 2 : 0;
}

OriginChain origin_chain(int n, int k, int d) {
    check_ndk(n, k, d);
    OriginChain c;
    c.upper = k >= 2 ? lemma31_upper(n, k, d) : jamison_value(n, d);
    c.lower = g_smax_formula(n, k, d) - 1;
    if (k < 2) {
        c.low_origin_size = Log2Value::of_integer(0);
        c.low_origin_excluded = false;
        return c;
    }
    if (k == 2) {
        // no origin multiplicity s <= k - 3 exists
        c.low_origin_size = Log2Value::of_integer(0);
        c.low_origin_excluded = true;
        return c;
    }
    c.low_origin_size = lb_hamming_s0(n, 3);
    c.low_origin_size.integer += k - 3;
    c.low_origin_excluded = c.low_origin_size > Log2Value::of_integer(c.upper);
    return c;
}

} // namespace affcover
