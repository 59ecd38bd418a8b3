#include "rotorder/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace rotorder {

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    MatrixQ out(a.n_);
    for (std::size_t i = 0; i < a.e_.size(); ++i) out.e_[i] = a.e_[i] + b.e_[i];
    return out;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    const std::size_t n = a.n_;
    MatrixQ out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const mpq_class& aik = a.at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < n; ++j) out.at(i, j) += aik * b.at(k, j);
        }
    return out;
}

MatrixQ MatrixQ::scaled(const mpq_class& s) const {
    MatrixQ out(n_);
    for (std::size_t i = 0; i < e_.size(); ++i) out.e_[i] = e_[i] * s;
    return out;
}

MatrixQ companion(const PolyQ& monic) {
    if (!monic.is_monic() || monic.degree() < 1)
        throw std::invalid_argument("companion: requires a monic polynomial of degree >= 1");
    const std::size_t d = static_cast<std::size_t>(monic.degree());
    MatrixQ m(d);
    for (std::size_t i = 1; i < d; ++i) m.at(i, i - 1) = 1;
    for (std::size_t i = 0; i < d; ++i) m.at(i, d - 1) = -monic[i];
    return m;
}

PolyQ charpoly(const MatrixQ& m) {
    const std::size_t n = m.dim();
    if (n == 0) return PolyQ::constant(1);
    MatrixQ h = m;

    // Similarity reduction to upper Hessenberg form with exact pivoting.
    for (std::size_t j = 0; j + 2 < n; ++j) {
        std::size_t piv = j + 1;
        while (piv < n && h.at(piv, j) == 0) ++piv;
        if (piv == n) continue;
        if (piv != j + 1) {
            for (std::size_t k = 0; k < n; ++k) std::swap(h.at(piv, k), h.at(j + 1, k));
            for (std::size_t k = 0; k < n; ++k) std::swap(h.at(k, piv), h.at(k, j + 1));
        }
        for (std::size_t i = j + 2; i < n; ++i) {
            if (h.at(i, j) == 0) continue;
            mpq_class t = h.at(i, j) / h.at(j + 1, j);
            for (std::size_t k = 0; k < n; ++k) h.at(i, k) -= t * h.at(j + 1, k);
            for (std::size_t k = 0; k < n; ++k) h.at(k, j + 1) += t * h.at(k, i);
        }
    }

    // Leading-principal-minor recurrence for Hessenberg characteristic
    // polynomials. p_k = (x - h_kk) p_{k-1} - sum over trailing columns with
    // the subdiagonal products.
    std::vector<PolyQ> p(n + 1);
    p[0] = PolyQ::constant(1);
    for (std::size_t k = 1; k <= n; ++k) {
        PolyQ x_minus({-h.at(k - 1, k - 1), mpq_class(1)});
        PolyQ acc = x_minus * p[k - 1];
        mpq_class sub = 1;
        for (std::size_t i = 1; i < k; ++i) {
            sub *= h.at(k - i, k - i - 1);
            if (sub == 0) break;
            mpq_class cfac = h.at(k - i - 1, k - 1) * sub;
            if (cfac != 0) acc = acc - p[k - i - 1].scaled(cfac);
        }
        p[k] = std::move(acc);
    }
    return p[n];
}

MatrixQ kron_prod(const MatrixQ& a, const MatrixQ& b) {
    const std::size_t na = a.dim(), nb = b.dim();
    MatrixQ out(na * nb);
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < na; ++j) {
            const mpq_class& aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < nb; ++k)
                for (std::size_t l = 0; l < nb; ++l)
                    out.at(i * nb + k, j * nb + l) = aij * b.at(k, l);
        }
    return out;
}

MatrixQ kron_sum(const MatrixQ& a, const MatrixQ& b) {
    return kron_prod(a, MatrixQ::identity(b.dim())) + kron_prod(MatrixQ::identity(a.dim()), b);
}

}  // namespace rotorder
