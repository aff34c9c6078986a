#ifndef SPINGEO_FORM_HPP
#define SPINGEO_FORM_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spingeo/rational.hpp"

namespace spingeo {

/// Binomial coefficients up to the sizes used by 10-dimensional forms.
long binom(int n, int k);

/// Increasing index tuples of length k from {0,...,n-1}, in the
/// combinatorial (colex) order used to address form components.
std::vector<std::vector<int>> increasing_tuples(int n, int k);

long tuple_rank(const std::vector<int>& tuple);

/// Fully antisymmetric degree-k tensor on an n-dimensional space; only
/// strictly increasing tuples are stored.
template <class T>
class Form {
public:
    Form() = default;
    Form(int dim, int degree)
        : dim_(dim), degree_(degree), comp_(static_cast<std::size_t>(binom(dim, degree))) {
        if (degree < 0 || degree > dim) throw std::invalid_argument("form degree out of range");
    }

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    std::size_t size() const { return comp_.size(); }

    T& at_rank(long r) { return comp_[static_cast<std::size_t>(r)]; }
    const T& at_rank(long r) const { return comp_[static_cast<std::size_t>(r)]; }

    const T& operator()(const std::vector<int>& increasing) const {
        return comp_[static_cast<std::size_t>(tuple_rank(increasing))];
    }
    T& operator()(const std::vector<int>& increasing) {
        return comp_[static_cast<std::size_t>(tuple_rank(increasing))];
    }

    /// Component for an arbitrary tuple, antisymmetry applied. Returns T(0)
    /// on repeated indices.
    T component(std::vector<int> tuple) const {
        int sign = sort_sign(tuple);
        if (sign == 0) return T(0);
        T v = (*this)(tuple);
        return sign > 0 ? v : T(-1) * v;
    }

    /// Adds v to the component of an arbitrary tuple, with the
    /// antisymmetrization sign. No-op on repeated indices.
    void add(std::vector<int> tuple, const T& v) {
        int sign = sort_sign(tuple);
        if (sign == 0) return;
        (*this)(tuple) += sign > 0 ? v : T(-1) * v;
    }

    bool is_zero() const {
        for (const auto& c : comp_)
            if (!(c == T(0))) return false;
        return true;
    }

    friend Form operator+(const Form& a, const Form& b) {
        Form out = a;
        for (std::size_t i = 0; i < out.comp_.size(); ++i) out.comp_[i] += b.comp_[i];
        return out;
    }
    friend Form operator-(const Form& a, const Form& b) {
        Form out = a;
        for (std::size_t i = 0; i < out.comp_.size(); ++i)
            out.comp_[i] = out.comp_[i] - b.comp_[i];
        return out;
    }
    friend Form operator*(const T& c, const Form& a) {
        Form out = a;
        for (auto& x : out.comp_) x = c * x;
        return out;
    }
    Form& operator+=(const Form& b) {
        for (std::size_t i = 0; i < comp_.size(); ++i) comp_[i] += b.comp_[i];
        return *this;
    }

    static int sort_sign(std::vector<int>& tuple) {
        int sign = 1;
        for (std::size_t i = 1; i < tuple.size(); ++i) {
            for (std::size_t j = i; j > 0 && tuple[j - 1] > tuple[j]; --j) {
                std::swap(tuple[j - 1], tuple[j]);
                sign = -sign;
            }
        }
        for (std::size_t i = 1; i < tuple.size(); ++i)
            if (tuple[i - 1] == tuple[i]) return 0;
        return sign;
    }

private:
    int dim_ = 0;
    int degree_ = 0;
    std::vector<T> comp_;
};

using FormD = Form<double>;
using FormQ = Form<CRat>;

template <class T>
Form<T> wedge(const Form<T>& a, const Form<T>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    Form<T> out(a.dim(), a.degree() + b.degree());
    auto ta = increasing_tuples(a.dim(), a.degree());
    auto tb = increasing_tuples(b.dim(), b.degree());
    for (const auto& i : ta) {
        const T& ai = a(i);
        if (ai == T(0)) continue;
        for (const auto& j : tb) {
            const T& bj = b(j);
            if (bj == T(0)) continue;
            std::vector<int> merged = i;
            merged.insert(merged.end(), j.begin(), j.end());
            out.add(merged, ai * bj);
        }
    }
    return out;
}

/// Interior product with the contravariant vector v.
template <class T>
Form<T> interior(const std::vector<T>& v, const Form<T>& a) {
    if (a.degree() == 0) return Form<T>(a.dim(), 0);
    Form<T> out(a.dim(), a.degree() - 1);
    for (const auto& tup : increasing_tuples(a.dim(), a.degree())) {
        const T& c = a(tup);
        if (c == T(0)) continue;
        for (std::size_t p = 0; p < tup.size(); ++p) {
            std::vector<int> rest;
            for (std::size_t q = 0; q < tup.size(); ++q)
                if (q != p) rest.push_back(tup[q]);
            T term = v[tup[p]] * c;
            if (p % 2) term = T(-1) * term;
            out(rest) += term;
        }
    }
    return out;
}

/// Components pushed through the linear substitution e'_A = M[A][B] e_B,
/// i.e. out_{A1..Ak} = sum M[A1][B1]...M[Ak][Bk] in_{B1..Bk}.
template <class T>
Form<T> transform(const Form<T>& a, const std::vector<std::vector<T>>& M, int out_dim) {
    Form<T> out(out_dim, a.degree());
    if (a.degree() == 0) {
        out.at_rank(0) = a.at_rank(0);
        return out;
    }
    auto src = increasing_tuples(a.dim(), a.degree());
    auto dst = increasing_tuples(out_dim, a.degree());
    const int k = a.degree();
    for (const auto& I : dst) {
        T acc(0);
        for (const auto& J : src) {
            const T& aj = a(J);
            if (aj == T(0)) continue;
            // minor determinant det(M[I,J]) by Leibniz over k <= 5
            std::vector<int> perm(k);
            for (int p = 0; p < k; ++p) perm[p] = p;
            T det(0);
            do {
                int sgn = 1;
                for (int p = 0; p < k; ++p)
                    for (int q = p + 1; q < k; ++q)
                        if (perm[p] > perm[q]) sgn = -sgn;
                T prod(1);
                for (int p = 0; p < k; ++p) prod *= M[I[p]][J[perm[p]]];
                det += sgn > 0 ? prod : T(-1) * prod;
            } while (std::next_permutation(perm.begin(), perm.end()));
            acc += det * aj;
        }
        out(I) = acc;
    }
    return out;
}

double max_abs(const FormD& f);

/// Hodge dual with respect to a metric and an orientation sign for the
/// standard-order volume element e^0 ^ ... ^ e^{n-1}.
FormD hodge_star(const FormD& f, const std::vector<std::vector<double>>& metric,
                 int orientation);

/// Pointwise inner product (alpha, beta) = sum over increasing tuples of
/// alpha_I beta^I; the 1/k! convention matching the stored components.
double form_inner(const FormD& a, const FormD& b,
                  const std::vector<std::vector<double>>& metric_inv);

std::string form_to_json(const FormQ& f);
std::string form_to_json(const FormD& f);
FormD form_from_json_d(const std::string& text);

} // namespace spingeo

#endif
