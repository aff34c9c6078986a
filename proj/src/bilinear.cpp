#include "spingeo/bilinear.hpp"

#include <stdexcept>

#include "spingeo/ratlinalg.hpp"

namespace spingeo {

CRat hermitian_inner(const Spinor& psi, const Spinor& theta) {
    CRat acc;
    for (unsigned m = 0; m < 32; ++m) acc += psi[m].conj() * theta[m];
    return acc;
}

CRat majorana_inner(const Spinor& psi, const Spinor& theta) {
    Spinor b = gamma_monomial({0, 6, 7, 8, 9}, psi.conj());
    return hermitian_inner(b, theta);
}

FormQ form_bilinear(const Spinor& psi, const Spinor& theta, int k) {
    if (k < 0 || k > 9) throw std::invalid_argument("form_bilinear: degree must be 0..9");
    FormQ out(kDim, k);
    Spinor b = gamma_monomial({0, 6, 7, 8, 9}, psi.conj());
    for (const auto& tup : increasing_tuples(kDim, k)) {
        std::vector<FrameIndex> idx(tup.begin(), tup.end());
        Spinor g = gamma_monomial(idx, theta);
        out(tup) = hermitian_inner(b, g);
    }
    return out;
}

namespace {

std::vector<Rational> real_coords(const FormQ& f) {
    std::vector<Rational> v;
    v.reserve(2 * f.size());
    for (std::size_t r = 0; r < f.size(); ++r) {
        v.push_back(f.at_rank(static_cast<long>(r)).re);
        v.push_back(f.at_rank(static_cast<long>(r)).im);
    }
    return v;
}

} // namespace

std::vector<BilinearCatalogEntry> fundamental_forms(const std::vector<Spinor>& spinors) {
    for (const auto& s : spinors) {
        if (s.is_zero()) throw std::invalid_argument("fundamental_forms: zero spinor");
        if (!is_majorana(s) || chirality(s) != Chirality::positive)
            throw std::invalid_argument("fundamental_forms: spinors must be Majorana-Weyl");
    }
    std::vector<BilinearCatalogEntry> out;
    for (int degree = 1; degree <= 5; ++degree) {
        std::vector<BilinearCatalogEntry> candidates;
        std::vector<std::vector<Rational>> coords;
        for (std::size_t i = 0; i < spinors.size(); ++i) {
            for (std::size_t j = i; j < spinors.size(); ++j) {
                FormQ f = form_bilinear(spinors[i], spinors[j], degree);
                if (f.is_zero()) continue;
                candidates.push_back({"(" + std::to_string(i) + "," + std::to_string(j) + ")",
                                      degree, f});
                coords.push_back(real_coords(f));
            }
        }
        for (std::size_t k : independent_subset(coords)) out.push_back(candidates[k]);
    }
    return out;
}

std::size_t independent_one_form_count(const std::vector<Spinor>& spinors) {
    std::vector<std::vector<Rational>> coords;
    for (std::size_t i = 0; i < spinors.size(); ++i)
        for (std::size_t j = i; j < spinors.size(); ++j) {
            FormQ f = form_bilinear(spinors[i], spinors[j], 1);
            if (!f.is_zero()) coords.push_back(real_coords(f));
        }
    return span_rank(coords);
}

} // namespace spingeo
