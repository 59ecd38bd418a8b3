#pragma once

#include <gmpxx.h>

#include <vector>

#include "rotorder/poly.hpp"

namespace rotorder {

/// Square matrix over the rationals, row-major.
class MatrixQ {
public:
    explicit MatrixQ(std::size_t n) : n_(n), e_(n * n, mpq_class(0)) {}

    static MatrixQ identity(std::size_t n);

    std::size_t dim() const { return n_; }
    mpq_class& at(std::size_t i, std::size_t j) { return e_[i * n_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return e_[i * n_ + j]; }

    friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
    friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
    MatrixQ scaled(const mpq_class& s) const;
    bool operator==(const MatrixQ&) const = default;

private:
    std::size_t n_;
    std::vector<mpq_class> e_;
};

/// Companion matrix of a monic polynomial of degree >= 1: subdiagonal ones,
/// negated coefficients in the last column. Its characteristic polynomial is
/// the input.
MatrixQ companion(const PolyQ& monic);

/// det(xI - M), computed exactly via Hessenberg reduction.
PolyQ charpoly(const MatrixQ& m);

/// Kronecker product; annihilates products of roots when applied to
/// companion matrices.
MatrixQ kron_prod(const MatrixQ& a, const MatrixQ& b);

/// A ⊗ I + I ⊗ B; annihilates sums of roots for companion inputs.
MatrixQ kron_sum(const MatrixQ& a, const MatrixQ& b);

}  // namespace rotorder
