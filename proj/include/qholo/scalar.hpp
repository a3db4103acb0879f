#ifndef QHOLO_SCALAR_HPP
#define QHOLO_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>

namespace qholo {

using Complex = std::complex<double>;
using Rational = boost::multiprecision::cpp_rational;

/// Exact complex scalar with rational real and imaginary parts.
/// Closed under +,-,*,/ and conjugation, so algebraic identities can be
/// verified with zero rounding.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(long n) : re(n) {}
    GaussRational(Rational r) : re(std::move(r)) {}
    GaussRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i() { return {Rational(0), Rational(1)}; }

    bool is_zero() const { return re == 0 && im == 0; }

    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussRational operator/(const GaussRational& a, const GaussRational& b) {
        Rational n = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
    }
    GaussRational& operator+=(const GaussRational& o) { return *this = *this + o; }
    GaussRational& operator-=(const GaussRational& o) { return *this = *this - o; }
    GaussRational& operator*=(const GaussRational& o) { return *this = *this * o; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

inline GaussRational conj(const GaussRational& a) { return {a.re, -a.im}; }

inline Complex to_complex(const GaussRational& a) {
    return {static_cast<double>(a.re), static_cast<double>(a.im)};
}

/// Numeric contract shared by the two scalar backends.  `exact` backends
/// drop only true zeros when pruning; the float backend drops magnitudes
/// below the epsilon passed in.
template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
    using Real = double;
    static constexpr bool exact = false;
    static Complex zero() { return {0.0, 0.0}; }
    static Complex one() { return {1.0, 0.0}; }
    static Complex imag_unit() { return {0.0, 1.0}; }
    static Complex conj(const Complex& c) { return std::conj(c); }
    static Complex from_int(long n) { return {static_cast<double>(n), 0.0}; }
    static Complex from_ratio(long p, long q) {
        return {static_cast<double>(p) / static_cast<double>(q), 0.0};
    }
    static double real_part(const Complex& c) { return c.real(); }
    static bool negligible(const Complex& c, double eps) { return std::abs(c) < eps; }
};

template <>
struct ScalarTraits<GaussRational> {
    using Real = Rational;
    static constexpr bool exact = true;
    static GaussRational zero() { return {}; }
    static GaussRational one() { return {Rational(1)}; }
    static GaussRational imag_unit() { return GaussRational::i(); }
    static GaussRational conj(const GaussRational& c) { return qholo::conj(c); }
    static GaussRational from_int(long n) { return {Rational(n)}; }
    static GaussRational from_ratio(long p, long q) { return {Rational(p, q)}; }
    static Rational real_part(const GaussRational& c) { return c.re; }
    static bool negligible(const GaussRational& c, double) { return c.is_zero(); }
};

}  // namespace qholo

#endif
