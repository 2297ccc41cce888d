#ifndef LEHMER_LINALG_HPP
#define LEHMER_LINALG_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "lehmer/banded.hpp"
#include "lehmer/eigen_support.hpp"
#include "lehmer/poly.hpp"

namespace lehmer {

class ZeroPivot : public std::domain_error {
public:
    explicit ZeroPivot(std::size_t index)
        : std::domain_error("zero pivot at row " + std::to_string(index + 1)), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

/// Exact integer quotient; throws NonExactDivision when b does not divide a.
inline mpz_class exact_div(const mpz_class& a, const mpz_class& b) {
    if (b == 0 || !mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) {
        throw NonExactDivision("integer division leaves a remainder");
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

/// Doolittle elimination on a tridiagonal matrix over a field, without pivoting.
/// Each step eliminates the single subdiagonal entry below the pivot, so L keeps
/// only its subdiagonal band and U only diagonal plus superdiagonal.
/// Throws ZeroPivot when a leading principal minor vanishes.
template <typename Field, typename Scalar>
BandedFactors<Field> lu_generic(const TriMatrix<Scalar>& m) {
    const std::size_t n = m.size();
    BandedFactors<Field> f;
    if (n == 0) return f;
    f.u_diag.reserve(n);
    f.u_super.reserve(n - 1);
    f.l_sub.reserve(n - 1);

    f.u_diag.push_back(Field(m.diag[0]));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const Field& pivot = f.u_diag[k];
        if (pivot == Field(0)) throw ZeroPivot(k);
        // Row k of U is row k of the partially reduced matrix; its superdiagonal
        // entry is untouched by earlier steps.
        f.u_super.push_back(Field(m.super[k]));
        Field multiplier = Field(m.sub[k]) / pivot;
        f.u_diag.push_back(Field(m.diag[k + 1]) - multiplier * f.u_super[k]);
        f.l_sub.push_back(std::move(multiplier));
    }
    return f;
}

struct ProductCheck {
    bool ok = true;
    /// First (row, column) where L * U differs from the matrix, 0-based.
    std::optional<std::pair<std::size_t, std::size_t>> first_failure;

    explicit operator bool() const noexcept { return ok; }
};

/// Forms the dense product L * U and compares it with m at every position,
/// including the off-band zeros.
template <typename Field, typename Scalar>
ProductCheck product_check(const BandedFactors<Field>& f, const TriMatrix<Scalar>& m) {
    if (f.size() != m.size()) throw std::invalid_argument("factor and matrix dimensions differ");
    const DenseMatrix<Field> lu = dense_l(f) * dense_u(f);
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!(lu(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) == Field(m(i, j)))) {
                return {false, std::pair{i, j}};
            }
        }
    }
    return {};
}

/// Determinant of a tridiagonal matrix by cofactor expansion along the last
/// row, i.e. the continuant recurrence
///   D_k = diag_k D_{k-1} - sub_{k-1} super_{k-1} D_{k-2}.
/// Uses ring operations only.
template <typename Ring>
Ring det_cofactor(const TriMatrix<Ring>& m) {
    if (m.size() == 0) throw std::invalid_argument("determinant of an empty matrix");
    Ring prev(1);
    Ring cur = m.diag[0];
    for (std::size_t k = 1; k < m.size(); ++k) {
        Ring next = m.diag[k] * cur - m.sub[k - 1] * m.super[k - 1] * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

/// Fraction-free (Bareiss) determinant of a dense matrix over an integral
/// domain. Every division is exact; a zero pivot is handled by a row swap with
/// a sign flip. Ignores any band structure.
template <typename Ring>
Ring det_bareiss(DenseMatrix<Ring> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const Eigen::Index n = a.rows();
    if (n == 0) return Ring(1);

    bool negate = false;
    Ring prev(1);
    for (Eigen::Index k = 0; k + 1 < n; ++k) {
        if (a(k, k) == Ring(0)) {
            Eigen::Index r = k + 1;
            while (r < n && a(r, k) == Ring(0)) ++r;
            if (r == n) return Ring(0);
            a.row(k).swap(a.row(r));
            negate = !negate;
        }
        for (Eigen::Index i = k + 1; i < n; ++i) {
            for (Eigen::Index j = k + 1; j < n; ++j) {
                a(i, j) = exact_div(Ring(a(i, j) * a(k, k) - a(i, k) * a(k, j)), prev);
            }
            a(i, k) = Ring(0);
        }
        prev = a(k, k);
    }
    Ring det = a(n - 1, n - 1);
    return negate ? Ring(-det) : det;
}

}  // namespace lehmer

#endif  // LEHMER_LINALG_HPP
