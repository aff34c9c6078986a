#include "spingeo/stabilizer.hpp"

#include <sstream>
#include <stdexcept>

#include "spingeo/bilinear.hpp"

namespace spingeo {

SpinAlgebraElement SpinAlgebraElement::elementary(int a, int b) {
    if (a == b) throw std::invalid_argument("elementary generator needs a != b");
    SpinAlgebraElement e;
    e.lambda[a][b] = 1;
    e.lambda[b][a] = -1;
    return e;
}

bool SpinAlgebraElement::is_zero() const {
    for (const auto& row : lambda)
        for (const auto& x : row)
            if (x != 0) return false;
    return true;
}

SpinAlgebraElement SpinAlgebraElement::bracket(const SpinAlgebraElement& o) const {
    // [L, M]_{AB} = L_{AC} eta^{CD} M_{DB} - M_{AC} eta^{CD} L_{DB}
    SpinAlgebraElement out;
    for (int a = 0; a < 10; ++a)
        for (int b = 0; b < 10; ++b) {
            Rational acc = 0;
            for (int c = 0; c < 10; ++c) {
                Rational s = (c == 0) ? -1 : 1;
                acc += s * (lambda[a][c] * o.lambda[c][b] - o.lambda[a][c] * lambda[c][b]);
            }
            out.lambda[a][b] = acc;
        }
    return out;
}

Spinor spin_action(const SpinAlgebraElement& lam, const Spinor& psi) {
    Spinor out;
    for (int a = 0; a < 10; ++a)
        for (int b = a + 1; b < 10; ++b) {
            if (lam.lambda[a][b] == 0) continue;
            Spinor g = gamma_apply(a, gamma_apply(b, psi));
            out += CRat(lam.lambda[a][b] / 2) * g;
        }
    return out;
}

std::vector<Rational> covector_action(const SpinAlgebraElement& lam,
                                      const std::vector<Rational>& v) {
    std::vector<Rational> out(10, Rational(0));
    for (int a = 0; a < 10; ++a) {
        Rational acc = 0;
        for (int c = 0; c < 10; ++c) acc += lam.lambda[a][c] * v[c];
        out[a] = a == 0 ? -acc : acc;
    }
    return out;
}

namespace {

struct GeneratorBasis {
    std::vector<std::pair<int, int>> pairs;          // (a,b), a<b, 45 entries
    std::vector<std::array<Spinor, 32>> images;      // sigma(elem) on each basis monomial
};

const GeneratorBasis& generator_basis() {
    static const GeneratorBasis g = [] {
        GeneratorBasis gb;
        for (int a = 0; a < 10; ++a)
            for (int b = a + 1; b < 10; ++b) {
                gb.pairs.emplace_back(a, b);
                std::array<Spinor, 32> img;
                for (unsigned m = 0; m < 32; ++m)
                    img[m] = CRat(Rational(1, 2)) *
                             gamma_apply(a, gamma_apply(b, Spinor::basis(m)));
                gb.images.push_back(std::move(img));
            }
        return gb;
    }();
    return g;
}

Spinor elementary_action(std::size_t gen, const Spinor& psi) {
    const auto& img = generator_basis().images[gen];
    Spinor out;
    for (unsigned m = 0; m < 32; ++m) {
        if (psi[m].is_zero()) continue;
        out += psi[m] * img[m];
    }
    return out;
}

SpinAlgebraElement from_coeffs(const std::vector<Rational>& c) {
    SpinAlgebraElement e;
    const auto& pairs = generator_basis().pairs;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        e.lambda[pairs[k].first][pairs[k].second] = c[k];
        e.lambda[pairs[k].second][pairs[k].first] = -c[k];
    }
    return e;
}

constexpr std::array<int, 8> kTransverse = {1, 2, 3, 4, 6, 7, 8, 9};

int nilradical_dim_of(const std::vector<SpinAlgebraElement>& basis) {
    // dimension of the subspace with vanishing transverse-transverse block
    if (basis.empty()) return 0;
    std::vector<std::vector<Rational>> blocks;
    for (const auto& e : basis) {
        std::vector<Rational> row;
        for (int i = 0; i < 8; ++i)
            for (int j = i + 1; j < 8; ++j)
                row.push_back(e.lambda[kTransverse[i]][kTransverse[j]]);
        blocks.push_back(std::move(row));
    }
    return static_cast<int>(basis.size() - span_rank(blocks));
}

AlgebraReport kernel_report(const RatMatrix& conditions) {
    AlgebraReport rep;
    for (auto& coeffs : kernel_basis(conditions)) rep.basis.push_back(from_coeffs(coeffs));
    rep.dim = static_cast<int>(rep.basis.size());
    rep.nilradical_dim = nilradical_dim_of(rep.basis);
    rep.catalog_match = catalog_name(rep.dim, rep.nilradical_dim);
    return rep;
}

} // namespace

AlgebraReport isotropy_algebra(const std::vector<Spinor>& spinors) {
    const auto& gb = generator_basis();
    RatMatrix m(64 * spinors.size(), 45);
    for (std::size_t i = 0; i < spinors.size(); ++i) {
        for (std::size_t k = 0; k < gb.pairs.size(); ++k) {
            Spinor img = elementary_action(k, spinors[i]);
            auto coords = img.real_coords();
            for (std::size_t r = 0; r < 64; ++r) m(64 * i + r, k) = coords[r];
        }
    }
    return kernel_report(m);
}

AlgebraReport normalizer_algebra(const SpinorSubspace& P) {
    if (P.basis.empty()) throw std::invalid_argument("normalizer_algebra: empty subspace");
    // reduced row echelon of P's real coordinates; the residual of a vector
    // after elimination vanishes exactly on span_R(P)
    RatMatrix pm;
    for (const auto& s : P.basis) pm.append_row(s.real_coords());
    Rref pe = rref(std::move(pm));

    auto residual = [&](std::vector<Rational> v) {
        for (std::size_t i = 0; i < pe.pivot_cols.size(); ++i) {
            Rational f = v[pe.pivot_cols[i]];
            if (f == 0) continue;
            for (std::size_t j = 0; j < 64; ++j) v[j] -= f * pe.m(i, j);
        }
        return v;
    };

    const auto& gb = generator_basis();
    RatMatrix m(64 * P.basis.size(), 45);
    for (std::size_t i = 0; i < P.basis.size(); ++i) {
        for (std::size_t k = 0; k < gb.pairs.size(); ++k) {
            auto res = residual(elementary_action(k, P.basis[i]).real_coords());
            for (std::size_t r = 0; r < 64; ++r) m(64 * i + r, k) = res[r];
        }
    }
    return kernel_report(m);
}

SpinorSubspace expand_majorana(const std::vector<std::string>& representatives,
                               int target_count) {
    std::vector<Spinor> reps;
    reps.reserve(representatives.size());
    for (const auto& r : representatives) reps.push_back(parse_spinor(r));
    return expand_majorana(reps, target_count);
}

SpinorSubspace expand_majorana(const std::vector<Spinor>& representatives,
                               int target_count) {
    SpinorSubspace out;
    std::vector<std::vector<Rational>> coords;
    std::size_t rank_now = 0;
    for (const auto& rep : representatives) {
        for (const Spinor& part : {majorana_real(rep), majorana_imag(rep)}) {
            if (part.is_zero()) continue;
            Spinor p = part.primitive();
            coords.push_back(p.real_coords());
            std::size_t r = span_rank(coords);
            if (r > rank_now) {
                rank_now = r;
                out.basis.push_back(p);
            } else {
                coords.pop_back();
            }
        }
    }
    if (static_cast<int>(out.basis.size()) != target_count) {
        std::ostringstream os;
        os << "expand_majorana: representatives {";
        for (std::size_t i = 0; i < representatives.size(); ++i)
            os << (i ? ", " : "") << representatives[i].str();
        os << "} expand to " << out.basis.size() << " independent Majorana-Weyl spinors, "
           << "expected " << target_count;
        throw std::runtime_error(os.str());
    }
    for (const auto& s : out.basis) {
        if (!is_majorana(s)) throw std::logic_error("expand_majorana: non-Majorana output");
    }
    return out;
}

CliffordModule clifford_module_structure(const std::vector<Spinor>& spinors) {
    if (spinors.size() < 2)
        throw std::invalid_argument("clifford_module_structure: need at least 2 spinors");
    AlgebraReport iso = isotropy_algebra(spinors);
    if (iso.nilradical_dim != 8)
        throw std::invalid_argument(
            "clifford_module_structure: stabilizer is not of non-compact K|xR^8 type "
            "(nilradical dim " + std::to_string(iso.nilradical_dim) + ")");

    CliffordModule mod;
    // Hermitian-form endomorphisms from the degree-3 bilinears against the
    // first spinor: alpha(eps_1, eps_r) = e^- ^ omega_r, omega on the
    // transverse 8-space.
    auto bilinear_endo = [&](const Spinor& a, const Spinor& b) {
        FormQ t = form_bilinear(a, b, 3);
        std::array<std::array<Rational, 8>, 8> m{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                if (i == j) continue;
                CRat c = t.component({0, kTransverse[i], kTransverse[j]});
                if (c.im != 0)
                    throw std::runtime_error(
                        "clifford_module_structure: non-real bilinear component");
                m[i][j] = c.re;
            }
        return m;
    };

    for (std::size_t r = 1; r < spinors.size(); ++r) {
        auto m = bilinear_endo(spinors[0], spinors[r]);
        // I^2 must be -q * Id with q a square of a rational; rescale exactly
        std::array<std::array<Rational, 8>, 8> sq{};
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                Rational acc = 0;
                for (int k = 0; k < 8; ++k) acc += m[i][k] * m[k][j];
                sq[i][j] = acc;
            }
        Rational q = -sq[0][0];
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j)
                if (sq[i][j] != (i == j ? -q : Rational(0)))
                    throw std::runtime_error(
                        "clifford_module_structure: bilinear endomorphism does not square "
                        "to a multiple of -Id");
        if (q <= 0)
            throw std::runtime_error("clifford_module_structure: endomorphism squares to "
                                     "a non-negative multiple of Id");
        BigInt num = numerator(q), den = denominator(q);
        BigInt snum = boost::multiprecision::sqrt(num), sden = boost::multiprecision::sqrt(den);
        if (snum * snum != num || sden * sden != den)
            throw std::runtime_error("clifford_module_structure: normalization scale "
                                     "is not rational");
        Rational s(snum, sden);
        for (auto& row : m)
            for (auto& x : row) x /= s;
        mod.generators.push_back(m);
    }

    // exact Clifford relations I_r I_s + I_s I_r = -2 delta_{rs}
    for (std::size_t r = 0; r < mod.generators.size(); ++r)
        for (std::size_t s = 0; s <= r; ++s) {
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    Rational acc = 0;
                    for (int k = 0; k < 8; ++k)
                        acc += mod.generators[r][i][k] * mod.generators[s][k][j] +
                               mod.generators[s][i][k] * mod.generators[r][k][j];
                    Rational expect = (r == s && i == j) ? Rational(-2) : Rational(0);
                    if (acc != expect)
                        throw std::runtime_error(
                            "clifford_module_structure: anticommutation failure between "
                            "generators " + std::to_string(r) + " and " + std::to_string(s));
                }
        }
    return mod;
}

const std::vector<CatalogRow>& stabilizer_catalog() {
    static const std::vector<CatalogRow> rows = {
        {1, true, {"1+e_{1234}"}, 29, "Spin(7)|xR^8", 8, 1, "Spin(1,1)", -1},
        {2, true, {"1"}, 23, "SU(4)|xR^8", 8, 2, "Spin(1,1)xU(1)", 1},
        {3, true, {"1", "i(e_{12}+e_{34})"}, 18, "Sp(2)|xR^8", 8, 4, "Spin(1,1)xSU(2)", 2},
        {4, true, {"1", "e_{12}"}, 14, "SU(2)xSU(2)|xR^8", 8, 7, "Spin(1,1)xSp(1)xSp(1)", 3},
        {5, true, {"1", "e_{12}", "e_{13}+e_{24}"}, 11, "SU(2)|xR^8", 8, 11,
         "Spin(1,1)xSp(2)", 4},
        {6, true, {"1", "e_{12}", "e_{13}"}, 9, "U(1)|xR^8", 8, 16, "Spin(1,1)xSU(4)", 5},
        {8, true, {"1", "e_{12}", "e_{13}", "e_{14}"}, 8, "R^8", 8, 29,
         "Spin(1,1)xSpin(8)", 7},
        {2, false, {"1+e_{1234}", "e_{15}+e_{2345}"}, 14, "G_2", 0, 3, "Spin(2,1)", -1},
        {4, false, {"1", "e_{15}"}, 8, "SU(3)", 0, 7, "Spin(3,1)xU(1)", -1},
        {8, false, {"1", "e_{12}", "e_{15}", "e_{25}"}, 3, "SU(2)", 0, 18,
         "Spin(5,1)xSU(2)", -1},
        {16, false,
         {"1", "e_{12}", "e_{13}", "e_{14}", "e_{23}", "e_{24}", "e_{34}",
          "e_{15}", "e_{25}", "e_{35}", "e_{45}"},
         0, "1", 0, 45, "Spin(9,1)", -1},
    };
    return rows;
}

std::optional<std::string> catalog_name(int dim, int nil_dim) {
    for (const auto& row : stabilizer_catalog())
        if (row.stabilizer_dim == dim && row.nilradical_dim == nil_dim)
            return row.stabilizer_name;
    return std::nullopt;
}

} // namespace spingeo
