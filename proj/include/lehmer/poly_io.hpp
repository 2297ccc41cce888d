#ifndef LEHMER_POLY_IO_HPP
#define LEHMER_POLY_IO_HPP

#include <ostream>
#include <string>

#include "json.hpp"
#include "lehmer/poly.hpp"

namespace lehmer {

enum class VarView { qz, uv };

/// The (q, z) view when every exponent is even, else the (u, v) view.
VarView preferred_view(const Poly2& p) noexcept;

/// Canonical text, terms in ascending term order, e.g. "1 - z - q*z" or "v*u^2".
/// Throws OddExponent when VarView::qz is requested for a half-integer polynomial.
std::string to_text(const Poly2& p, VarView view);
inline std::string to_text(const Poly2& p) { return to_text(p, preferred_view(p)); }

/// "num" when the denominator is 1, otherwise "(num) / (den)"; each side in its
/// own preferred view.
std::string to_text(const RatFunc& r);

/// Header line naming the half-integer variables.
inline constexpr const char* kUvHeader = "# u = q^(1/2), v = z^(1/2)";

/// Even polynomials: [[z_exp, q_exp, "coeff"], ...].
/// Otherwise: {"vars": "uv", "terms": [[ev, eu, "coeff"], ...]}.
nlohmann::json to_json(const Poly2& p);

/// Inverse of to_json. Throws std::invalid_argument on malformed input.
Poly2 poly_from_json(const nlohmann::json& j);

std::ostream& operator<<(std::ostream& os, const Poly2& p);
std::ostream& operator<<(std::ostream& os, const RatFunc& r);

}  // namespace lehmer

#endif  // LEHMER_POLY_IO_HPP
