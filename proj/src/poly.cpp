#include "lehmer/poly.hpp"

#include <algorithm>
#include <unordered_map>

namespace lehmer {

namespace {

std::uint64_t pack(Monomial m) noexcept {
    return (static_cast<std::uint64_t>(m.eu) << 32) | m.ev;
}

Monomial unpack(std::uint64_t key) noexcept {
    return {static_cast<std::uint32_t>(key >> 32), static_cast<std::uint32_t>(key & 0xffffffffu)};
}

// Merges two canonical term lists, b scaled by sign (+1 or -1).
std::vector<Term> merge(const std::vector<Term>& a, const std::vector<Term>& b, int sign) {
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() && ib != b.end()) {
        if (ia->mono < ib->mono) {
            out.push_back(*ia++);
        } else if (ib->mono < ia->mono) {
            out.push_back({ib->mono, sign > 0 ? ib->coeff : mpz_class(-ib->coeff)});
            ++ib;
        } else {
            mpz_class c = sign > 0 ? mpz_class(ia->coeff + ib->coeff) : mpz_class(ia->coeff - ib->coeff);
            if (c != 0) out.push_back({ia->mono, std::move(c)});
            ++ia;
            ++ib;
        }
    }
    for (; ia != a.end(); ++ia) out.push_back(*ia);
    for (; ib != b.end(); ++ib) out.push_back({ib->mono, sign > 0 ? ib->coeff : mpz_class(-ib->coeff)});
    return out;
}

}  // namespace

Poly2::Poly2(long c) {
    if (c != 0) terms_.push_back({Monomial{}, mpz_class(c)});
}

Poly2::Poly2(const mpz_class& c) {
    if (c != 0) terms_.push_back({Monomial{}, c});
}

Poly2 Poly2::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono < b.mono; });
    Poly2 p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Poly2 Poly2::monomial(const mpz_class& c, std::uint32_t eu, std::uint32_t ev) {
    Poly2 p;
    if (c != 0) p.terms_.push_back({Monomial{eu, ev}, c});
    return p;
}

bool Poly2::is_one() const noexcept {
    return terms_.size() == 1 && terms_.front().mono == Monomial{} && terms_.front().coeff == 1;
}

mpz_class Poly2::coeff(Monomial m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono < key; });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
}

const Term& Poly2::leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of the zero polynomial");
    return terms_.back();
}

std::uint32_t Poly2::degree_u() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.eu);
    return d;
}

std::uint32_t Poly2::degree_v() const noexcept {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.ev);
    return d;
}

bool Poly2::has_integral_qz_exponents() const noexcept {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.mono.eu % 2 == 0 && t.mono.ev % 2 == 0; });
}

Poly2 Poly2::operator-() const {
    Poly2 p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Poly2& Poly2::operator+=(const Poly2& other) {
    if (other.is_zero()) return *this;
    terms_ = merge(terms_, other.terms_, +1);
    return *this;
}

Poly2& Poly2::operator-=(const Poly2& other) {
    if (other.is_zero()) return *this;
    terms_ = merge(terms_, other.terms_, -1);
    return *this;
}

Poly2& Poly2::operator*=(const Poly2& other) {
    *this = *this * other;
    return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.size() == 1) return shift(b, a.terms_.front().mono, a.terms_.front().coeff);
    if (b.size() == 1) return shift(a, b.terms_.front().mono, b.terms_.front().coeff);

    std::unordered_map<std::uint64_t, mpz_class> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& ta : a.terms_) {
        for (const auto& tb : b.terms_) {
            mpz_class& slot = acc[pack(ta.mono * tb.mono)];
            mpz_addmul(slot.get_mpz_t(), ta.coeff.get_mpz_t(), tb.coeff.get_mpz_t());
        }
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [key, c] : acc) {
        if (c != 0) terms.push_back({unpack(key), std::move(c)});
    }
    std::sort(terms.begin(), terms.end(),
              [](const Term& x, const Term& y) { return x.mono < y.mono; });
    Poly2 p;
    p.terms_ = std::move(terms);
    return p;
}

bool operator==(const Poly2& a, const Poly2& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
}

Poly2 add(const Poly2& a, const Poly2& b) { return a + b; }
Poly2 mul(const Poly2& a, const Poly2& b) { return a * b; }

Poly2 shift(const Poly2& a, Monomial m, const mpz_class& c) {
    if (c == 0) return {};
    std::vector<Term> terms;
    terms.reserve(a.size());
    // Multiplying by a monomial preserves the graded lex order.
    for (const auto& t : a.terms()) terms.push_back({t.mono * m, t.coeff * c});
    Poly2 p;
    if (!terms.empty()) p = Poly2::from_terms(std::move(terms));
    return p;
}

Poly2 exact_div(const Poly2& a, const Poly2& b) {
    if (b.is_zero()) throw NonExactDivision("division by the zero polynomial");
    if (b.is_one()) return a;

    const Term& lead = b.leading_term();
    std::vector<Term> quotient;
    Poly2 rem = a;
    while (!rem.is_zero()) {
        const Term& lt = rem.leading_term();
        if (!lead.mono.divides(lt.mono) || !mpz_divisible_p(lt.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
            throw NonExactDivision("polynomial division leaves a nonzero remainder");
        }
        Monomial m{lt.mono.eu - lead.mono.eu, lt.mono.ev - lead.mono.ev};
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), lt.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
        rem -= shift(b, m, c);
        quotient.push_back({m, std::move(c)});
    }
    return Poly2::from_terms(std::move(quotient));
}

Poly2 eval_u1(const Poly2& a) {
    std::vector<Term> terms;
    terms.reserve(a.size());
    for (const auto& t : a.terms()) terms.push_back({Monomial{0, t.mono.ev}, t.coeff});
    return Poly2::from_terms(std::move(terms));
}

mpz_class eval_at(const Poly2& a, const mpz_class& u0, const mpz_class& v0) {
    mpz_class sum = 0;
    mpz_class pu;
    mpz_class pv;
    for (const auto& t : a.terms()) {
        mpz_pow_ui(pu.get_mpz_t(), u0.get_mpz_t(), t.mono.eu);
        mpz_pow_ui(pv.get_mpz_t(), v0.get_mpz_t(), t.mono.ev);
        sum += t.coeff * pu * pv;
    }
    return sum;
}

std::vector<QZTerm> as_qz(const Poly2& a) {
    std::vector<QZTerm> out;
    out.reserve(a.size());
    for (const auto& t : a.terms()) {
        if (t.mono.eu % 2 != 0 || t.mono.ev % 2 != 0) {
            throw OddExponent("half-integer power u^" + std::to_string(t.mono.eu) + " v^" +
                              std::to_string(t.mono.ev) + " has no (q, z) reading");
        }
        out.push_back({t.mono.eu / 2, t.mono.ev / 2, t.coeff});
    }
    return out;
}

RatFunc::RatFunc(Poly2 num, Poly2 den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    tidy();
}

void RatFunc::tidy() {
    if (num_.is_zero()) {
        den_ = 1;
    } else if (num_ == den_) {
        num_ = 1;
        den_ = 1;
    } else if (!den_.is_one() && den_.size() == 1 && den_.terms().front().mono == Monomial{} &&
               mpz_divisible_p(num_.terms().front().coeff.get_mpz_t(), den_.terms().front().coeff.get_mpz_t())) {
        // Constant denominator: fold it into the numerator when it divides exactly.
        try {
            num_ = exact_div(num_, den_);
            den_ = 1;
        } catch (const NonExactDivision&) {
        }
    }
}

RatFunc& RatFunc::operator+=(const RatFunc& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) return *this = other;
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ = den_ * other.den_;
    }
    tidy();
    return *this;
}

RatFunc& RatFunc::operator*=(const RatFunc& other) {
    if (is_zero() || other.is_zero()) return *this = RatFunc{};
    // Cancel the obvious cross factors before multiplying out.
    if (num_ == other.den_) {
        num_ = other.num_;
    } else if (den_ == other.num_) {
        den_ = other.den_;
    } else {
        num_ *= other.num_;
        den_ *= other.den_;
    }
    tidy();
    return *this;
}

RatFunc& RatFunc::operator/=(const RatFunc& other) {
    if (other.is_zero()) throw std::domain_error("division by a zero rational function");
    return *this *= RatFunc(other.den_, other.num_);
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return a.num_ == b.num_;
    return a.num_ * b.den_ == b.num_ * a.den_;
}

bool ratfunc_eq(const RatFunc& a, const RatFunc& b) { return a == b; }

}  // namespace lehmer
