#pragma once

#include <cmath>
#include <complex>

namespace bergman {

// Minimal complex value type that works uniformly over double and the
// multiprecision reals. std::complex is only specified for builtin floating
// types, so the series engine carries its own.
//
// Division uses the plain formula; operand magnitudes in this library stay
// far from the overflow scale of every supported real type.
template <class R>
struct Cx {
    R re{}, im{};

    Cx() = default;
    Cx(R r) : re(std::move(r)) {}
    Cx(R r, R i) : re(std::move(r)), im(std::move(i)) {}

    Cx& operator+=(const Cx& o) { re += o.re; im += o.im; return *this; }
    Cx& operator-=(const Cx& o) { re -= o.re; im -= o.im; return *this; }

    friend Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cx operator-(const Cx& a) { return {-a.re, -a.im}; }
    friend Cx operator*(const Cx& a, const Cx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cx operator*(const R& s, const Cx& a) { return {s * a.re, s * a.im}; }
    friend Cx operator*(const Cx& a, const R& s) { return {a.re * s, a.im * s}; }
    friend Cx operator/(const Cx& a, const R& s) { return {a.re / s, a.im / s}; }
    friend Cx operator/(const Cx& a, const Cx& b) {
        R d = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
    }
    friend Cx operator/(const R& s, const Cx& b) { return Cx(s) / b; }
    friend bool operator==(const Cx& a, const Cx& b) { return a.re == b.re && a.im == b.im; }
};

template <class R> Cx<R> conj(const Cx<R>& z) { return {z.re, -z.im}; }
template <class R> R sqnorm(const Cx<R>& z) { return z.re * z.re + z.im * z.im; }
template <class R> R abs(const Cx<R>& z) { using std::sqrt; return sqrt(sqnorm(z)); }

template <class R> Cx<R> to_cx(const std::complex<double>& z) { return {R(z.real()), R(z.imag())}; }
inline std::complex<double> to_std(const Cx<double>& z) { return {z.re, z.im}; }

} // namespace bergman
