#ifndef LEHMER_LEHMER_HPP
#define LEHMER_LEHMER_HPP

#include <cstdint>
#include <vector>

#include "lehmer/banded.hpp"
#include "lehmer/poly.hpp"

namespace lehmer {

/// lambda(0..j_max), built by the three-term recursion.
struct LambdaFamily {
    std::vector<Poly2> values;

    const Poly2& operator[](std::size_t j) const { return values.at(j); }
    std::size_t size() const noexcept { return values.size(); }
};

/// lambda(j) = sum_{0 <= k <= j/2} [j-k, k] (-1)^k q^(k(k-1)) z^k, each
/// Gaussian binomial taken from the product form.
Poly2 lambda_sum(std::uint32_t j);

/// lambda(0) = lambda(1) = 1 and lambda(j) = lambda(j-1) - z q^(j-2) lambda(j-2)
/// for 2 <= j <= j_max.
LambdaFamily lambda_rec(std::uint32_t j_max);

/// The n x n tridiagonal matrix with unit diagonal and both off-diagonals equal
/// to z^(1/2) q^((i-1)/2) = v u^(i-1) at 1-based band position i.
/// Throws std::invalid_argument for n = 0.
TriMatrix<Poly2> lehmer_matrix(std::uint32_t n);

/// Closed-form factors (1-based j):
///   U(j, j) = lambda(j) / lambda(j-1),   U(j, j+1) = v u^(j-1),
///   L(j, j) = 1,   L(j+1, j) = v u^(j-1) lambda(j-1) / lambda(j).
/// Throws std::invalid_argument for n = 0.
BandedFactors<RatFunc> closed_factors(std::uint32_t n);

/// Determinant of lehmer_matrix(n): the telescoped product of U's diagonal,
/// lambda(n) / lambda(0) = lambda(n).
Poly2 det_closed(std::uint32_t n);

}  // namespace lehmer

#endif  // LEHMER_LEHMER_HPP
