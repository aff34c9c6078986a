#include "spingeo/ratlinalg.hpp"

#include <numeric>
#include <stdexcept>

namespace spingeo {

void RatMatrix::append_row(const std::vector<Rational>& row) {
    if (cols_ == 0) cols_ = row.size();
    if (row.size() != cols_) throw std::invalid_argument("RatMatrix: ragged row");
    a_.insert(a_.end(), row.begin(), row.end());
    ++rows_;
}

namespace {

// Divides a row by the gcd of numerators over lcm of denominators, keeping
// the leading nonzero entry positive. Keeps intermediate entries small.
void normalize_row(RatMatrix& m, std::size_t i) {
    BigInt g = 0, l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Rational& q = m(i, j);
        if (q == 0) continue;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(numerator(q)));
        l = boost::multiprecision::lcm(l, denominator(q));
    }
    if (g == 0) return;
    Rational scale(l, g);
    bool flip = false;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        if (m(i, j) != 0) { flip = m(i, j) < 0; break; }
    }
    if (flip) scale = -scale;
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) *= scale;
}

void normalize_vec(std::vector<Rational>& v) {
    BigInt g = 0, l = 1;
    for (const auto& q : v) {
        if (q == 0) continue;
        g = boost::multiprecision::gcd(g, boost::multiprecision::abs(numerator(q)));
        l = boost::multiprecision::lcm(l, denominator(q));
    }
    if (g == 0) return;
    Rational scale(l, g);
    for (const auto& q : v) {
        if (q != 0) { if (q < 0) scale = -scale; break; }
    }
    for (auto& q : v) q *= scale;
}

} // namespace

Rref rref(RatMatrix m) {
    Rref out;
    const std::size_t nr = m.rows(), nc = m.cols();
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t piv = nr;
        for (std::size_t i = r; i < nr; ++i) {
            if (m(i, c) != 0) { piv = i; break; }
        }
        if (piv == nr) continue;
        if (piv != r) {
            for (std::size_t j = 0; j < nc; ++j) std::swap(m(piv, j), m(r, j));
        }
        Rational inv = Rational(1) / m(r, c);
        for (std::size_t j = c; j < nc; ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r || m(i, c) == 0) continue;
            Rational f = m(i, c);
            for (std::size_t j = c; j < nc; ++j) m(i, j) -= f * m(r, j);
            normalize_row(m, i);
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    // Re-scale pivot rows to leading coefficient 1 (normalize_row may have
    // rescaled them through the elimination loop above).
    for (std::size_t i = 0; i < out.pivot_cols.size(); ++i) {
        Rational lead = m(i, out.pivot_cols[i]);
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            for (std::size_t j = 0; j < nc; ++j) m(i, j) *= inv;
        }
    }
    out.rank = r;
    out.m = std::move(m);
    return out;
}

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m) {
    Rref e = rref(m);
    const std::size_t nc = m.cols();
    std::vector<bool> is_pivot(nc, false);
    for (auto c : e.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(nc, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) {
            v[e.pivot_cols[i]] = -e.m(i, f);
        }
        normalize_vec(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t span_rank(const std::vector<std::vector<Rational>>& vecs) {
    if (vecs.empty()) return 0;
    RatMatrix m;
    for (const auto& v : vecs) m.append_row(v);
    return rank(m);
}

std::vector<std::size_t> independent_subset(const std::vector<std::vector<Rational>>& vecs) {
    std::vector<std::size_t> keep;
    RatMatrix m;
    std::size_t r = 0;
    for (std::size_t k = 0; k < vecs.size(); ++k) {
        m.append_row(vecs[k]);
        std::size_t nr = rank(m);
        if (nr > r) {
            keep.push_back(k);
            r = nr;
        } else {
            // drop the dependent row again
            RatMatrix kept;
            for (auto idx : keep) kept.append_row(vecs[idx]);
            m = std::move(kept);
        }
    }
    return keep;
}

bool in_span(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& v) {
    RatMatrix m;
    for (const auto& r : rows) m.append_row(r);
    std::size_t r0 = rank(m);
    m.append_row(v);
    return rank(m) == r0;
}

} // namespace spingeo
