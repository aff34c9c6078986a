#include "spingeo/clifford.hpp"

#include <stdexcept>

namespace spingeo {

namespace {

// wedge e_i ^ e_S and contraction e_i ~ e_S on a basis subset, with the
// (-1)^{#(j in S : j < i)} sign. Returns false when the result vanishes.
bool wedge(int i, unsigned mask, unsigned& out, int& sign) {
    unsigned bit = 1u << (i - 1);
    if (mask & bit) return false;
    SpinorIndex idx{mask};
    sign = idx.below(i) % 2 ? -1 : 1;
    out = mask | bit;
    return true;
}

bool contract(int i, unsigned mask, unsigned& out, int& sign) {
    unsigned bit = 1u << (i - 1);
    if (!(mask & bit)) return false;
    SpinorIndex idx{mask};
    sign = idx.below(i) % 2 ? -1 : 1;
    out = mask & ~bit;
    return true;
}

struct BasisAction {
    unsigned target;
    CRat coeff;  // zero coeff encodes annihilation
};

// Gamma_a maps each basis monomial to a single monomial with coefficient in
// {+-1, +-i}; tabulate once.
using GammaTable = std::array<BasisAction, 32>;

GammaTable build_gamma_table(FrameIndex a) {
    GammaTable t{};
    for (unsigned m = 0; m < 32; ++m) {
        unsigned out;
        int sign;
        CRat c;
        unsigned target = m;
        if (a == 0 || a == 5) {
            if (wedge(5, m, out, sign)) {
                c = CRat(a == 0 ? -sign : sign);
                target = out;
            } else if (contract(5, m, out, sign)) {
                c = CRat(sign);
                target = out;
            }
        } else if (a >= 1 && a <= 4) {
            if (wedge(a, m, out, sign)) {
                c = CRat(sign);
                target = out;
            } else if (contract(a, m, out, sign)) {
                c = CRat(sign);
                target = out;
            }
        } else if (a >= 6 && a <= 9) {
            int i = a - 5;
            if (wedge(i, m, out, sign)) {
                c = CRat(0, sign);
                target = out;
            } else if (contract(i, m, out, sign)) {
                c = CRat(0, -sign);
                target = out;
            }
        } else {
            throw std::out_of_range("frame index must be 0..9");
        }
        t[m] = {target, c};
    }
    return t;
}

const std::array<GammaTable, 10>& gamma_tables() {
    static const std::array<GammaTable, 10> tables = [] {
        std::array<GammaTable, 10> t;
        for (int a = 0; a < 10; ++a) t[a] = build_gamma_table(a);
        return t;
    }();
    return tables;
}

} // namespace

Spinor gamma_apply(FrameIndex a, const Spinor& psi) {
    if (a < 0 || a > 9) throw std::out_of_range("frame index must be 0..9");
    const GammaTable& t = gamma_tables()[a];
    Spinor out;
    for (unsigned m = 0; m < 32; ++m) {
        if (psi[m].is_zero() || t[m].coeff.is_zero()) continue;
        out[t[m].target] += t[m].coeff * psi[m];
    }
    return out;
}

Spinor gamma_upper_apply(FrameIndex a, const Spinor& psi) {
    Spinor g = gamma_apply(a, psi);
    return a == 0 ? -g : g;
}

Spinor gamma_monomial(const std::vector<FrameIndex>& indices, const Spinor& psi) {
    unsigned seen = 0;
    for (FrameIndex a : indices) {
        if (a < 0 || a > 9) throw std::out_of_range("frame index must be 0..9");
        unsigned bit = 1u << a;
        if (seen & bit)
            throw std::invalid_argument(
                "gamma_monomial: repeated index " + std::to_string(a) +
                " (reduce with the Clifford relation first)");
        seen |= bit;
    }
    Spinor out = psi;
    for (auto it = indices.rbegin(); it != indices.rend(); ++it)
        out = gamma_apply(*it, out);
    return out;
}

Chirality chirality(const Spinor& psi) {
    if (psi.is_zero()) throw std::invalid_argument("chirality of the zero spinor");
    bool has_even = false, has_odd = false;
    for (unsigned m = 0; m < 32; ++m) {
        if (psi[m].is_zero()) continue;
        (SpinorIndex{m}.even() ? has_even : has_odd) = true;
    }
    if (has_even && has_odd) return Chirality::mixed;
    return has_even ? Chirality::positive : Chirality::negative;
}

Spinor reality_map(const Spinor& psi) {
    return gamma_monomial({6, 7, 8, 9}, psi.conj());
}

bool is_majorana(const Spinor& psi) { return reality_map(psi) == psi; }

Spinor majorana_real(const Spinor& psi) { return psi + reality_map(psi); }

Spinor majorana_imag(const Spinor& psi) {
    Spinor ipsi = CRat::unit_i() * psi;
    return ipsi + reality_map(ipsi);
}

const std::vector<Spinor>& majorana_weyl_basis() {
    static const std::vector<Spinor> basis = [] {
        std::vector<Spinor> b;
        for (unsigned m = 0; m < 32; ++m) {
            if (!SpinorIndex{m}.even()) continue;
            for (const Spinor& cand :
                 {majorana_real(Spinor::basis(m)), majorana_imag(Spinor::basis(m))}) {
                if (cand.is_zero()) continue;
                Spinor p = cand.primitive();
                bool dup = false;
                for (const auto& have : b) {
                    if (have == p || have == -p) { dup = true; break; }
                }
                if (!dup) b.push_back(p);
            }
        }
        if (b.size() != 16) throw std::logic_error("Majorana-Weyl basis size != 16");
        return b;
    }();
    return basis;
}

const GammaMatrixC& gamma_matrix_c(FrameIndex a) {
    static const std::array<GammaMatrixC, 10> mats = [] {
        std::array<GammaMatrixC, 10> out{};
        for (int g = 0; g < 10; ++g) {
            for (unsigned col = 0; col < 32; ++col) {
                Spinor image = gamma_apply(g, Spinor::basis(col));
                for (unsigned row = 0; row < 32; ++row)
                    out[g][col][row] = image[row].to_complex();
            }
        }
        return out;
    }();
    if (a < 0 || a > 9) throw std::out_of_range("frame index must be 0..9");
    return mats[a];
}

SpinorC apply(const GammaMatrixC& g, const SpinorC& psi) {
    SpinorC out{};
    for (unsigned col = 0; col < 32; ++col) {
        if (psi[col] == std::complex<double>(0.0, 0.0)) continue;
        for (unsigned row = 0; row < 32; ++row) out[row] += g[col][row] * psi[col];
    }
    return out;
}

SpinorC to_complex(const Spinor& s) { return s.to_complex(); }

} // namespace spingeo
