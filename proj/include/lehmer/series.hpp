#ifndef LEHMER_SERIES_HPP
#define LEHMER_SERIES_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "lehmer/poly.hpp"

namespace lehmer {

/// Formal power series in z, kept through z^K, whose coefficients are
/// q-polynomials kept through q^D. Coefficients are stored as Poly2 values in u
/// alone (even exponents).
class Series2 {
public:
    Series2(std::uint32_t z_trunc, std::uint32_t q_trunc);

    /// Truncation of an even-exponent polynomial in (q, z). Throws OddExponent
    /// if p has half-integer powers.
    static Series2 truncate(const Poly2& p, std::uint32_t z_trunc, std::uint32_t q_trunc);

    std::uint32_t z_trunc() const noexcept { return z_trunc_; }
    std::uint32_t q_trunc() const noexcept { return q_trunc_; }

    /// Coefficient of z^i, a polynomial in q of degree at most q_trunc().
    const Poly2& coeff(std::uint32_t i) const { return coeffs_.at(i); }
    void set_coeff(std::uint32_t i, const Poly2& q_poly);

    /// The whole truncated series as one (q, z) polynomial.
    Poly2 to_poly() const;

    Series2& operator+=(const Series2& other);
    friend Series2 operator+(Series2 a, const Series2& b) { return a += b; }
    friend Series2 operator*(const Series2& a, const Series2& b);

    friend bool operator==(const Series2&, const Series2&) = default;

private:
    std::uint32_t z_trunc_;
    std::uint32_t q_trunc_;
    std::vector<Poly2> coeffs_;
};

/// Drops every term whose q-degree exceeds q_trunc.
Poly2 truncate_q(const Poly2& p, std::uint32_t q_trunc);

/// Coefficient of z^k of an even-exponent polynomial, as a q-polynomial.
Poly2 z_coefficient(const Poly2& p, std::uint32_t k);

/// Dense coefficients of a polynomial in a single variable, index = exponent.
/// Entries beyond `len` are discarded.
std::vector<mpz_class> dense_q(const Poly2& q_poly, std::size_t len);
std::vector<mpz_class> dense_z(const Poly2& z_poly, std::size_t len);

/// Power-series reciprocal of f (f[0] must be +1 or -1) through index `order`.
std::vector<mpz_class> invert_unit_series(const std::vector<mpz_class>& f, std::size_t order);

/// 1 / (q;q)_k through q^D.
Poly2 invert_poch(std::uint32_t k, std::uint32_t q_trunc);

/// sum_{k=0..K} (-1)^k q^(k(k-1)) z^k / (q;q)_k, truncated at (K, D).
Series2 limit_det(std::uint32_t z_trunc, std::uint32_t q_trunc);

/// Compares the z^k coefficient of det_closed(n) with the z^k coefficient of
/// the infinite-limit series and returns the largest d such that they agree
/// modulo q^(d+1) (-1 if they already differ at q^0). Returns nullopt when
/// they agree at every degree, which happens for k = 0.
/// Throws std::invalid_argument unless n >= 1 and 2k <= n.
std::optional<int> stabilization_check(std::uint32_t n, std::uint32_t k);

/// Number of Dyck paths with m up-steps whose height never exceeds h, by
/// dynamic programming over (step, height).
mpz_class dyck_count(std::uint32_t m, std::uint32_t h);

/// Coefficients of z^0..z^M in lambda(h) / lambda(h+1) at q = 1.
std::vector<mpz_class> dyck_gf_series(std::uint32_t h, std::uint32_t max_order);

/// True iff dyck_gf_series(h, M)[m] == dyck_count(m, h) for every m <= M.
bool dyck_gf_check(std::uint32_t h, std::uint32_t max_order);

}  // namespace lehmer

#endif  // LEHMER_SERIES_HPP
