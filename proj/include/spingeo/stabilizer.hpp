#ifndef SPINGEO_STABILIZER_HPP
#define SPINGEO_STABILIZER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "spingeo/clifford.hpp"
#include "spingeo/form.hpp"
#include "spingeo/ratlinalg.hpp"
#include "spingeo/spinor.hpp"

namespace spingeo {

/// Element of so(9,1): antisymmetric rational parameter matrix Lambda_{AB}
/// in the frame metric eta.
struct SpinAlgebraElement {
    std::array<std::array<Rational, 10>, 10> lambda{};

    static SpinAlgebraElement elementary(int a, int b);  // Lambda_ab = 1 = -Lambda_ba

    Rational& operator()(int a, int b) { return lambda[a][b]; }
    const Rational& operator()(int a, int b) const { return lambda[a][b]; }

    bool is_zero() const;

    /// eta-contracted matrix commutator [this, other].
    SpinAlgebraElement bracket(const SpinAlgebraElement& other) const;
};

/// sigma(Lambda) = (1/4) sum_{A,B} Lambda_{AB} Gamma_A Gamma_B
///               = (1/2) sum_{A<B} Lambda_{AB} Gamma_A Gamma_B.
Spinor spin_action(const SpinAlgebraElement& lam, const Spinor& psi);

/// Infinitesimal tensorial action on a frame covector matching the spinor
/// action: w'_A = eta_{AA} sum_C Lambda_{AC} w_C, so that
/// alpha(sigma psi, theta) + alpha(psi, sigma theta) = Lambda . alpha(psi, theta).
std::vector<Rational> covector_action(const SpinAlgebraElement& lam,
                                      const std::vector<Rational>& v);

/// Slot-wise extension of covector_action to forms.
template <class T>
Form<T> form_action(const SpinAlgebraElement& lam, const Form<T>& f) {
    Form<T> out(f.dim(), f.degree());
    for (const auto& tup : increasing_tuples(f.dim(), f.degree())) {
        const T& c = f(tup);
        if (c == T(0)) continue;
        // out_A picks up eta_{AA} Lambda_{AC} f_C in each slot
        for (std::size_t slot = 0; slot < tup.size(); ++slot) {
            int cv = tup[slot];
            for (int a = 0; a < 10; ++a) {
                Rational lab = lam.lambda[a][cv];
                if (lab == 0) continue;
                if (a == 0) lab = -lab;
                std::vector<int> t2 = tup;
                t2[slot] = a;
                out.add(t2, T(lab) * c);
            }
        }
    }
    return out;
}

struct SpinorSubspace {
    std::vector<Spinor> basis;  // exactly independent Majorana-Weyl spinors
    int real_dim() const { return static_cast<int>(basis.size()); }
};

struct AlgebraReport {
    int dim = 0;
    std::vector<SpinAlgebraElement> basis;
    /// Dimension of the subspace acting trivially on the transverse 8-space
    /// (frame directions 1..4, 6..9); separates K|xR^8 kernels from compact
    /// ones of equal dimension.
    int nilradical_dim = 0;
    std::optional<std::string> catalog_match;
};

/// Exact kernel of so(9,1) -> (+)_i Delta, Lambda -> sigma(Lambda) eps_i.
AlgebraReport isotropy_algebra(const std::vector<Spinor>& spinors);

/// Exact solution of sigma(Lambda) P <= P. The reported sigma_dim of a case
/// is dim(normalizer) - dim(isotropy).
AlgebraReport normalizer_algebra(const SpinorSubspace& P);

/// Expands complex representatives into Majorana real/imaginary parts,
/// dropping zero vectors and exact linear dependents, and content-normalizing
/// each survivor. Throws (naming the offending set) unless exactly
/// target_count independent Majorana-Weyl spinors result.
SpinorSubspace expand_majorana(const std::vector<std::string>& representatives,
                               int target_count);
SpinorSubspace expand_majorana(const std::vector<Spinor>& representatives,
                               int target_count);

/// Anticommuting endomorphisms of the transverse 8-space built from the
/// degree-3 bilinears of (eps_1, eps_r); the Clifford-algebra generators
/// associated with a non-compact K|xR^8 stabilizer. Entries are exact, with
/// I_r I_s + I_s I_r = -2 delta_{rs}. Throws for compact-type inputs.
struct CliffordModule {
    std::vector<std::array<std::array<Rational, 8>, 8>> generators;
    int count() const { return static_cast<int>(generators.size()); }
};
CliffordModule clifford_module_structure(const std::vector<Spinor>& spinors);

/// One row of the stabilizer catalog (the isotropy/Sigma tables).
struct CatalogRow {
    int L;
    bool noncompact;
    std::vector<std::string> representatives;
    int stabilizer_dim;
    std::string stabilizer_name;
    int nilradical_dim;
    int sigma_dim;
    std::string sigma_name;
    int clifford_generators;  // -1 where no Clifford module is associated
};

const std::vector<CatalogRow>& stabilizer_catalog();

/// Looks up a (dim, nilradical_dim) signature in the catalog.
std::optional<std::string> catalog_name(int dim, int nil_dim);

} // namespace spingeo

#endif
