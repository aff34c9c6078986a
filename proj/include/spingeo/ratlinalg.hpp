#ifndef SPINGEO_RATLINALG_HPP
#define SPINGEO_RATLINALG_HPP

#include <cstddef>
#include <vector>

#include "spingeo/rational.hpp"

namespace spingeo {

/// Dense matrix over the rationals. Only what the kernel/rank computations
/// need; this is not a general linear-algebra library.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    void append_row(const std::vector<Rational>& row);

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// Fraction-managed Gaussian elimination: rows are rescaled to integer
/// content 1 after each step so entries stay small. Exact.
struct Rref {
    RatMatrix m;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

Rref rref(RatMatrix m);

std::size_t rank(const RatMatrix& m);

/// Basis of {x : m x = 0}, columns as vectors, content-normalized.
std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

/// Rank of the span of a set of row vectors.
std::size_t span_rank(const std::vector<std::vector<Rational>>& vecs);

/// Greedy selection: indices of rows forming a basis of the span,
/// scanning in input order.
std::vector<std::size_t> independent_subset(const std::vector<std::vector<Rational>>& vecs);

/// Solves span{rows} ∋ v exactly. Used for membership tests.
bool in_span(const std::vector<std::vector<Rational>>& rows, const std::vector<Rational>& v);

} // namespace spingeo

#endif
