#ifndef SPINGEO_CLIFFORD_HPP
#define SPINGEO_CLIFFORD_HPP

#include <array>
#include <complex>
#include <vector>

#include "spingeo/spinor.hpp"

namespace spingeo {

/// Frame index 0..9 of the pseudo-orthonormal basis with
/// eta = diag(-1,+1,...,+1).
using FrameIndex = int;

constexpr int kDim = 10;

inline int eta(FrameIndex a, FrameIndex b) {
    if (a != b) return 0;
    return a == 0 ? -1 : 1;
}

/// Gamma action on Delta_c realized on exterior forms:
///   Gamma_0   = -e_5^ + e_5~     Gamma_5   = e_5^ + e_5~
///   Gamma_i   =  e_i^ + e_i~     Gamma_5+i = i e_i^ - i e_i~   (i = 1..4)
/// where ^ is the wedge and ~ the inner-product adjoint contraction, both
/// carrying the sign (-1)^{#(j in S : j < i)} on basis subsets.
Spinor gamma_apply(FrameIndex a, const Spinor& psi);

/// Gamma with the frame index raised by eta.
Spinor gamma_upper_apply(FrameIndex a, const Spinor& psi);

/// Left-to-right composition Gamma_{a1} ... Gamma_{ak} psi. Indices must be
/// pairwise distinct; a repeated index means the caller has not reduced the
/// monomial through the Clifford relation and is an error.
Spinor gamma_monomial(const std::vector<FrameIndex>& indices, const Spinor& psi);

enum class Chirality { positive, negative, mixed };

/// Subset-parity chirality: +1 on even forms, -1 on odd. The convention is
/// anchored to Gamma_0...Gamma_9 = +1 on the even subspace (see
/// conventions.hpp). Throws on the zero spinor.
Chirality chirality(const Spinor& psi);

/// Reality map R = Gamma_{6789} conj. Antilinear, R^2 = 1, commutes with the
/// Spin(9,1) action. Majorana spinors satisfy R(psi) = psi.
Spinor reality_map(const Spinor& psi);

bool is_majorana(const Spinor& psi);

/// psi + R(psi) and i psi + R(i psi): the real and imaginary Majorana parts.
/// majorana_real("1") = 1 + e_{1234}, majorana_imag("1") = i(1 - e_{1234}).
Spinor majorana_real(const Spinor& psi);
Spinor majorana_imag(const Spinor& psi);

/// The 16 Majorana-Weyl basis spinors of positive chirality (real span of
/// Delta_16^+), content-normalized, in a fixed order.
const std::vector<Spinor>& majorana_weyl_basis();

/// Dense complex matrix of a gamma monomial in the 32-dim basis, for the
/// floating-point operator pipelines. m[col] gives the column action on e_col.
using SpinorC = std::array<std::complex<double>, 32>;
using GammaMatrixC = std::array<SpinorC, 32>;

const GammaMatrixC& gamma_matrix_c(FrameIndex a);

SpinorC apply(const GammaMatrixC& g, const SpinorC& psi);
SpinorC to_complex(const Spinor& s);

} // namespace spingeo

#endif
