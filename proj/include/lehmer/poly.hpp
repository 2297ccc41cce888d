#ifndef LEHMER_POLY_HPP
#define LEHMER_POLY_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace lehmer {

/// Exponent pair of a monomial u^eu * v^ev, where u = q^(1/2) and v = z^(1/2).
struct Monomial {
    std::uint32_t eu = 0;
    std::uint32_t ev = 0;

    constexpr std::uint32_t degree() const noexcept { return eu + ev; }

    constexpr bool divides(const Monomial& other) const noexcept {
        return eu <= other.eu && ev <= other.ev;
    }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

    /// Graded lexicographic: total degree first, then eu, then ev.
    friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) noexcept {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
        if (auto c = a.eu <=> b.eu; c != 0) return c;
        return a.ev <=> b.ev;
    }

    friend constexpr Monomial operator*(const Monomial& a, const Monomial& b) noexcept {
        return {a.eu + b.eu, a.ev + b.ev};
    }
};

struct Term {
    Monomial mono;
    mpz_class coeff;
};

class NonExactDivision : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class OddExponent : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Sparse polynomial in Z[u, v] with arbitrary-precision coefficients.
///
/// Terms are kept sorted ascending in the graded lexicographic order of
/// Monomial, with no zero coefficients and no repeated monomials, so that
/// structural equality coincides with polynomial equality.
class Poly2 {
public:
    Poly2() = default;
    Poly2(long c);  // NOLINT(google-explicit-constructor)
    Poly2(const mpz_class& c);  // NOLINT(google-explicit-constructor)

    /// Builds a polynomial from arbitrary terms; merges duplicates and drops zeros.
    static Poly2 from_terms(std::vector<Term> terms);
    static Poly2 monomial(const mpz_class& c, std::uint32_t eu, std::uint32_t ev);

    /// c * q^qe * z^ze, i.e. c * u^(2 qe) * v^(2 ze).
    static Poly2 qz(const mpz_class& c, std::uint32_t qe, std::uint32_t ze) {
        return monomial(c, 2 * qe, 2 * ze);
    }

    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_one() const noexcept;

    /// Coefficient of u^eu v^ev (zero when absent).
    mpz_class coeff(Monomial m) const;
    /// Greatest term in the term order. Requires a nonzero polynomial.
    const Term& leading_term() const;

    std::uint32_t degree_u() const noexcept;
    std::uint32_t degree_v() const noexcept;

    /// True iff every exponent (in both variables) is even.
    bool has_integral_qz_exponents() const noexcept;

    Poly2 operator-() const;
    Poly2& operator+=(const Poly2& other);
    Poly2& operator-=(const Poly2& other);
    Poly2& operator*=(const Poly2& other);

    friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
    friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
    friend Poly2 operator*(const Poly2& a, const Poly2& b);

    friend bool operator==(const Poly2& a, const Poly2& b);

private:
    std::vector<Term> terms_;
};

Poly2 add(const Poly2& a, const Poly2& b);
Poly2 mul(const Poly2& a, const Poly2& b);

/// Quotient c with c * b == a. Throws NonExactDivision when b does not divide a
/// (or b is zero).
Poly2 exact_div(const Poly2& a, const Poly2& b);

/// Multiplies by a single monomial c * u^eu v^ev without a full product.
Poly2 shift(const Poly2& a, Monomial m, const mpz_class& c = 1);

/// Substitutes u := 1 (hence q = 1); the result involves v only.
Poly2 eval_u1(const Poly2& a);

/// Substitutes u := u0, v := v0 (integers) and returns the resulting integer.
mpz_class eval_at(const Poly2& a, const mpz_class& u0, const mpz_class& v0);

/// A term read in the (q, z) variables.
struct QZTerm {
    std::uint32_t qe = 0;
    std::uint32_t ze = 0;
    mpz_class coeff;
};

/// Relabels exponents (eu, ev) as (eu/2, ev/2) in q and z. Terms stay in the
/// module term order. Throws OddExponent if a half-integer power is present.
std::vector<QZTerm> as_qz(const Poly2& a);

/// Fraction num/den of two Poly2 values. No GCD normalisation is attempted;
/// equality is decided by cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly2 num) : num_(std::move(num)), den_(1) {}  // NOLINT(google-explicit-constructor)
    RatFunc(Poly2 num, Poly2 den);

    const Poly2& num() const noexcept { return num_; }
    const Poly2& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }

    RatFunc operator-() const { return {-num_, den_}; }
    RatFunc& operator+=(const RatFunc& other);
    RatFunc& operator-=(const RatFunc& other) { return *this += -other; }
    RatFunc& operator*=(const RatFunc& other);
    /// Throws std::domain_error when other is zero.
    RatFunc& operator/=(const RatFunc& other);

    friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
    friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
    friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
    friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }

    friend bool operator==(const RatFunc& a, const RatFunc& b);

private:
    void tidy();

    Poly2 num_;
    Poly2 den_;
};

bool ratfunc_eq(const RatFunc& a, const RatFunc& b);

// Text and JSON forms live in poly_io.hpp.

}  // namespace lehmer

#endif  // LEHMER_POLY_HPP
