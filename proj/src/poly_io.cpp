#include "lehmer/poly_io.hpp"

#include <sstream>
#include <stdexcept>

namespace lehmer {

namespace {

void append_power(std::string& out, const char* var, std::uint32_t e) {
    if (e == 0) return;
    if (!out.empty()) out += '*';
    out += var;
    if (e > 1) {
        out += '^';
        out += std::to_string(e);
    }
}

std::string monomial_text(Monomial m, VarView view) {
    std::string s;
    if (view == VarView::qz) {
        append_power(s, "q", m.eu / 2);
        append_power(s, "z", m.ev / 2);
    } else {
        append_power(s, "v", m.ev);
        append_power(s, "u", m.eu);
    }
    return s;
}

bool is_monomial_or_constant(const Poly2& p) { return p.size() <= 1; }

std::string wrapped(const Poly2& p) {
    std::string s = to_text(p);
    if (is_monomial_or_constant(p) && (p.is_zero() || p.terms().front().coeff > 0)) return s;
    return "(" + s + ")";
}

}  // namespace

VarView preferred_view(const Poly2& p) noexcept {
    return p.has_integral_qz_exponents() ? VarView::qz : VarView::uv;
}

std::string to_text(const Poly2& p, VarView view) {
    if (view == VarView::qz && !p.has_integral_qz_exponents()) {
        throw OddExponent("polynomial has half-integer powers of q or z");
    }
    if (p.is_zero()) return "0";

    std::string out;
    bool first = true;
    for (const auto& t : p.terms()) {
        const bool negative = t.coeff < 0;
        mpz_class mag = abs(t.coeff);
        if (first) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;

        std::string mono = monomial_text(t.mono, view);
        if (mono.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.get_str();
            out += '*';
            out += mono;
        }
    }
    return out;
}

std::string to_text(const RatFunc& r) {
    if (r.den().is_one()) return to_text(r.num());
    return wrapped(r.num()) + " / " + wrapped(r.den());
}

nlohmann::json to_json(const Poly2& p) {
    nlohmann::json terms = nlohmann::json::array();
    const bool even = p.has_integral_qz_exponents();
    for (const auto& t : p.terms()) {
        if (even) {
            terms.push_back({t.mono.ev / 2, t.mono.eu / 2, t.coeff.get_str()});
        } else {
            terms.push_back({t.mono.ev, t.mono.eu, t.coeff.get_str()});
        }
    }
    if (even) return terms;
    return {{"vars", "uv"}, {"terms", std::move(terms)}};
}

Poly2 poly_from_json(const nlohmann::json& j) {
    const nlohmann::json* terms = &j;
    bool uv = false;
    if (j.is_object()) {
        if (!j.contains("vars") || j.at("vars") != "uv" || !j.contains("terms")) {
            throw std::invalid_argument("polynomial object must carry \"vars\":\"uv\" and \"terms\"");
        }
        uv = true;
        terms = &j.at("terms");
    }
    if (!terms->is_array()) throw std::invalid_argument("polynomial terms must be an array");

    std::vector<Term> out;
    for (const auto& t : *terms) {
        if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() || !t[1].is_number_unsigned() ||
            !t[2].is_string()) {
            throw std::invalid_argument("polynomial term must be [exp, exp, \"coeff\"]");
        }
        auto e0 = t[0].get<std::uint32_t>();
        auto e1 = t[1].get<std::uint32_t>();
        mpz_class c;
        if (c.set_str(t[2].get<std::string>(), 10) != 0) {
            throw std::invalid_argument("bad coefficient: " + t[2].get<std::string>());
        }
        // [z, q, c] in the (q, z) view; [v, u, c] in the (u, v) view.
        Monomial m = uv ? Monomial{e1, e0} : Monomial{2 * e1, 2 * e0};
        out.push_back({m, std::move(c)});
    }
    return Poly2::from_terms(std::move(out));
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) { return os << to_text(p); }
std::ostream& operator<<(std::ostream& os, const RatFunc& r) { return os << to_text(r); }

}  // namespace lehmer
