#ifndef SPINGEO_BILINEAR_HPP
#define SPINGEO_BILINEAR_HPP

#include <string>
#include <vector>

#include "spingeo/clifford.hpp"
#include "spingeo/form.hpp"
#include "spingeo/spinor.hpp"

namespace spingeo {

/// Majorana bilinear inner product B(psi, theta) = <Gamma_{06789} psi*, theta>
/// with <.,.> the Hermitian basis inner product. Complex-bilinear in both
/// arguments and Spin(9,1)-invariant.
CRat majorana_inner(const Spinor& psi, const Spinor& theta);

/// Hermitian inner product <psi, theta> = sum conj(psi_S) theta_S.
CRat hermitian_inner(const Spinor& psi, const Spinor& theta);

/// Degree-k spacetime form bilinear with components
/// alpha_{A1..Ak} = B(psi, Gamma_{A1..Ak} theta) over increasing frame
/// tuples (the 1/k! of the unordered-sum convention is absorbed by the
/// increasing-tuple storage).
FormQ form_bilinear(const Spinor& psi, const Spinor& theta, int k);

struct BilinearCatalogEntry {
    std::string label;   // "(i,j)" spinor pair
    int degree = 0;
    FormQ value;
};

/// All pairwise bilinears of degrees 1..5 of the given spinors, filtered to
/// an exactly linearly independent set per degree, degree-1 entries first.
std::vector<BilinearCatalogEntry> fundamental_forms(const std::vector<Spinor>& spinors);

/// Number of linearly independent 1-form bilinears (the count tabulated per
/// stabilizer case).
std::size_t independent_one_form_count(const std::vector<Spinor>& spinors);

} // namespace spingeo

#endif
