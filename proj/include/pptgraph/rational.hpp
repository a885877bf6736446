#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "pptgraph/int_math.hpp"

namespace pptgraph {

namespace detail {
inline i128 gcd128(i128 a, i128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}
} // namespace detail

// Exact rational number on int64 with 128-bit intermediates.
// Always stored reduced, denominator > 0.
struct Rat {
    int64_t num = 0;
    int64_t den = 1;

    Rat() = default;
    Rat(int64_t n) : num(n), den(1) {}
    Rat(int64_t n, int64_t d) { assign(n, d); }

    bool is_integer() const { return den == 1; }

    friend bool operator==(const Rat&, const Rat&) = default;

    friend Rat operator-(const Rat& r) { return Rat(-r.num, r.den); }

    friend Rat operator+(const Rat& a, const Rat& b) {
        return make(i128(a.num) * b.den + i128(b.num) * a.den, i128(a.den) * b.den);
    }
    friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
    friend Rat operator*(const Rat& a, const Rat& b) {
        return make(i128(a.num) * b.num, i128(a.den) * b.den);
    }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    double approx() const { return double(num) / double(den); }

private:
    void assign(int64_t n, int64_t d) {
        auto r = make(n, d);
        num = r.num;
        den = r.den;
    }

    static Rat make(i128 n, i128 d) {
        if (d == 0) throw std::domain_error("rational with zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = detail::gcd128(n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        if (n > INT64_MAX || n < INT64_MIN || d > INT64_MAX)
            throw std::overflow_error("rational out of int64 range");
        Rat r;
        r.num = int64_t(n);
        r.den = int64_t(d);
        return r;
    }
};

} // namespace pptgraph
