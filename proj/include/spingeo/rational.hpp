#ifndef SPINGEO_RATIONAL_HPP
#define SPINGEO_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace spingeo {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

/// Gaussian rational a + b*i. All spinor amplitudes and exact form
/// coefficients live in this field; no rounding ever occurs.
struct CRat {
    Rational re;
    Rational im;

    CRat() = default;
    CRat(Rational r) : re(std::move(r)) {}
    CRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    CRat(int r) : re(r) {}
    CRat(int r, int i) : re(r), im(i) {}

    static CRat unit_i() { return CRat(0, 1); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    CRat conj() const { return CRat(re, -im); }

    friend CRat operator+(const CRat& a, const CRat& b) {
        return CRat(a.re + b.re, a.im + b.im);
    }
    friend CRat operator-(const CRat& a, const CRat& b) {
        return CRat(a.re - b.re, a.im - b.im);
    }
    friend CRat operator-(const CRat& a) { return CRat(-a.re, -a.im); }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return CRat(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend CRat operator/(const CRat& a, const CRat& b) {
        Rational n = b.re * b.re + b.im * b.im;
        if (n == 0) throw std::domain_error("CRat: division by zero");
        return CRat((a.re * b.re + a.im * b.im) / n,
                    (a.im * b.re - a.re * b.im) / n);
    }
    CRat& operator+=(const CRat& b) { re += b.re; im += b.im; return *this; }
    CRat& operator-=(const CRat& b) { re -= b.re; im -= b.im; return *this; }
    CRat& operator*=(const CRat& b) { *this = *this * b; return *this; }

    friend bool operator==(const CRat& a, const CRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }

    std::complex<double> to_complex() const {
        return {to_double(re), to_double(im)};
    }
};

/// Printed as "a/b" / "c/d i" / "a/b+c/d i" (matches the spinor text form).
std::string to_string(const CRat& c);
std::string to_string(const Rational& q);

/// Parses the output of to_string (and plain integers / fractions).
Rational parse_rational(const std::string& s);

} // namespace spingeo

#endif
