#ifndef SPINGEO_SPINOR_HPP
#define SPINGEO_SPINOR_HPP

#include <array>
#include <complex>
#include <string>
#include <vector>

#include "spingeo/rational.hpp"

namespace spingeo {

/// Basis index of Δ_c = Λ*(C^5): a subset of {1,...,5} packed as a 5-bit
/// mask, bit i-1 <-> e_i. The canonical monomial is e_{i1...ik}, i1<...<ik.
struct SpinorIndex {
    unsigned mask = 0;

    static constexpr unsigned count = 32;

    int degree() const { return __builtin_popcount(mask); }
    bool even() const { return degree() % 2 == 0; }
    bool contains(int i) const { return (mask >> (i - 1)) & 1u; }

    /// Number of basis indices j in the subset with j < i.
    int below(int i) const { return __builtin_popcount(mask & ((1u << (i - 1)) - 1u)); }

    std::string name() const;  // "1" or "e_{13}" etc.
};

/// Dirac spinor of Spin(9,1) with exact Gaussian-rational amplitudes,
/// stored densely over all 32 basis subsets.
class Spinor {
public:
    Spinor() = default;

    static Spinor zero() { return Spinor(); }
    static Spinor basis(unsigned mask);          // e_S
    static Spinor scalar_one() { return basis(0); }

    CRat& operator[](unsigned mask) { return amp_[mask]; }
    const CRat& operator[](unsigned mask) const { return amp_[mask]; }

    bool is_zero() const;

    Spinor conj() const;

    friend Spinor operator+(const Spinor& a, const Spinor& b);
    friend Spinor operator-(const Spinor& a, const Spinor& b);
    friend Spinor operator-(const Spinor& a);
    friend Spinor operator*(const CRat& c, const Spinor& a);
    Spinor& operator+=(const Spinor& b);
    Spinor& operator-=(const Spinor& b);

    friend bool operator==(const Spinor& a, const Spinor& b) { return a.amp_ == b.amp_; }
    friend bool operator!=(const Spinor& a, const Spinor& b) { return !(a == b); }

    /// Divides out the rational content (gcd of all numerators over lcm of
    /// denominators), making the amplitudes primitive. Sign is fixed so the
    /// first nonzero amplitude has positive real part (or positive imaginary
    /// part if the real part vanishes).
    Spinor primitive() const;

    /// Real coordinates (re, im per amplitude), length 64. Used by the exact
    /// rank computations.
    std::vector<Rational> real_coords() const;

    std::array<std::complex<double>, 32> to_complex() const;

    std::string str() const;

private:
    std::array<CRat, 32> amp_{};
};

/// Parses spinor expressions: "1+e_{1234}", "i(1-e_{1234})", "3/2 e_{15}",
/// "(1/2+1/3i)*e_{25}", sums and differences thereof. Inverse of
/// Spinor::str() and tolerant of the table notation.
Spinor parse_spinor(const std::string& text);

} // namespace spingeo

#endif
