#ifndef LEHMER_BANDED_HPP
#define LEHMER_BANDED_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace lehmer {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Tridiagonal n x n matrix stored by bands (0-based):
/// diag[i] = A(i, i), super[i] = A(i, i + 1), sub[i] = A(i + 1, i).
template <typename Scalar>
struct TriMatrix {
    std::vector<Scalar> diag;
    std::vector<Scalar> super;
    std::vector<Scalar> sub;

    TriMatrix() = default;

    TriMatrix(std::vector<Scalar> d, std::vector<Scalar> up, std::vector<Scalar> lo)
        : diag(std::move(d)), super(std::move(up)), sub(std::move(lo)) {
        const std::size_t bands = diag.empty() ? 0 : diag.size() - 1;
        if (super.size() != bands || sub.size() != bands) {
            throw std::invalid_argument("tridiagonal bands must have length n - 1");
        }
    }

    std::size_t size() const noexcept { return diag.size(); }

    /// Entry (i, j), zero off the three bands.
    Scalar operator()(std::size_t i, std::size_t j) const {
        if (i == j) return diag[i];
        if (j == i + 1) return super[i];
        if (i == j + 1) return sub[j];
        return Scalar(0);
    }

    template <typename Other>
    TriMatrix<Other> cast() const {
        return TriMatrix<Other>(std::vector<Other>(diag.begin(), diag.end()),
                                std::vector<Other>(super.begin(), super.end()),
                                std::vector<Other>(sub.begin(), sub.end()));
    }
};

template <typename Scalar>
DenseMatrix<Scalar> densify(const TriMatrix<Scalar>& m) {
    const auto n = static_cast<Eigen::Index>(m.size());
    DenseMatrix<Scalar> out = DenseMatrix<Scalar>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        out(i, i) = m.diag[static_cast<std::size_t>(i)];
        if (i + 1 < n) {
            out(i, i + 1) = m.super[static_cast<std::size_t>(i)];
            out(i + 1, i) = m.sub[static_cast<std::size_t>(i)];
        }
    }
    return out;
}

/// LU factors of a tridiagonal matrix: L is unit lower bidiagonal with
/// subdiagonal l_sub; U is upper bidiagonal with diagonal u_diag and
/// superdiagonal u_super. Indices are 0-based.
template <typename Field>
struct BandedFactors {
    std::vector<Field> u_diag;
    std::vector<Field> u_super;
    std::vector<Field> l_sub;

    std::size_t size() const noexcept { return u_diag.size(); }
};

template <typename Field>
DenseMatrix<Field> dense_l(const BandedFactors<Field>& f) {
    const auto n = static_cast<Eigen::Index>(f.size());
    DenseMatrix<Field> l = DenseMatrix<Field>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        l(i, i) = Field(1);
        if (i + 1 < n) l(i + 1, i) = f.l_sub[static_cast<std::size_t>(i)];
    }
    return l;
}

template <typename Field>
DenseMatrix<Field> dense_u(const BandedFactors<Field>& f) {
    const auto n = static_cast<Eigen::Index>(f.size());
    DenseMatrix<Field> u = DenseMatrix<Field>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        u(i, i) = f.u_diag[static_cast<std::size_t>(i)];
        if (i + 1 < n) u(i, i + 1) = f.u_super[static_cast<std::size_t>(i)];
    }
    return u;
}

}  // namespace lehmer

#endif  // LEHMER_BANDED_HPP
