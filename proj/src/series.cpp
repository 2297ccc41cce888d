#include "lehmer/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "lehmer/lehmer.hpp"
#include "lehmer/qcomb.hpp"

namespace lehmer {

namespace {

Poly2 q_poly_from_dense(const std::vector<mpz_class>& c) {
    std::vector<Term> terms;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] != 0) terms.push_back({Monomial{static_cast<std::uint32_t>(2 * i), 0}, c[i]});
    }
    return Poly2::from_terms(std::move(terms));
}

void require_q_poly(const Poly2& p) {
    for (const auto& t : p.terms()) {
        if (t.mono.ev != 0 || t.mono.eu % 2 != 0) {
            throw std::invalid_argument("series coefficient must be a polynomial in q alone");
        }
    }
}

}  // namespace

Poly2 truncate_q(const Poly2& p, std::uint32_t q_trunc) {
    std::vector<Term> kept;
    for (const auto& t : p.terms()) {
        if (t.mono.eu <= 2 * q_trunc) kept.push_back(t);
    }
    return Poly2::from_terms(std::move(kept));
}

Poly2 z_coefficient(const Poly2& p, std::uint32_t k) {
    std::vector<Term> out;
    for (const auto& t : as_qz(p)) {
        if (t.ze == k) out.push_back({Monomial{2 * t.qe, 0}, t.coeff});
    }
    return Poly2::from_terms(std::move(out));
}

std::vector<mpz_class> dense_q(const Poly2& q_poly, std::size_t len) {
    std::vector<mpz_class> out(len);
    for (const auto& t : as_qz(q_poly)) {
        if (t.ze != 0) throw std::invalid_argument("dense_q: polynomial involves z");
        if (t.qe < len) out[t.qe] = t.coeff;
    }
    return out;
}

std::vector<mpz_class> dense_z(const Poly2& z_poly, std::size_t len) {
    std::vector<mpz_class> out(len);
    for (const auto& t : as_qz(z_poly)) {
        if (t.qe != 0) throw std::invalid_argument("dense_z: polynomial involves q");
        if (t.ze < len) out[t.ze] = t.coeff;
    }
    return out;
}

std::vector<mpz_class> invert_unit_series(const std::vector<mpz_class>& f, std::size_t order) {
    if (f.empty() || (f[0] != 1 && f[0] != -1)) {
        throw std::domain_error("series reciprocal needs a unit constant term");
    }
    std::vector<mpz_class> g(order + 1);
    g[0] = f[0];
    for (std::size_t m = 1; m <= order; ++m) {
        mpz_class acc = 0;
        for (std::size_t i = 1; i <= std::min(m, f.size() - 1); ++i) acc += f[i] * g[m - i];
        g[m] = -f[0] * acc;
    }
    return g;
}

Series2::Series2(std::uint32_t z_trunc, std::uint32_t q_trunc)
    : z_trunc_(z_trunc), q_trunc_(q_trunc), coeffs_(z_trunc + 1) {}

Series2 Series2::truncate(const Poly2& p, std::uint32_t z_trunc, std::uint32_t q_trunc) {
    Series2 s(z_trunc, q_trunc);
    std::vector<std::vector<Term>> buckets(z_trunc + 1);
    for (const auto& t : as_qz(p)) {
        if (t.ze <= z_trunc && t.qe <= q_trunc) buckets[t.ze].push_back({Monomial{2 * t.qe, 0}, t.coeff});
    }
    for (std::uint32_t i = 0; i <= z_trunc; ++i) s.coeffs_[i] = Poly2::from_terms(std::move(buckets[i]));
    return s;
}

void Series2::set_coeff(std::uint32_t i, const Poly2& q_poly) {
    require_q_poly(q_poly);
    coeffs_.at(i) = truncate_q(q_poly, q_trunc_);
}

Poly2 Series2::to_poly() const {
    Poly2 out;
    for (std::uint32_t i = 0; i <= z_trunc_; ++i) out += shift(coeffs_[i], Monomial{0, 2 * i});
    return out;
}

Series2& Series2::operator+=(const Series2& other) {
    if (z_trunc_ != other.z_trunc_ || q_trunc_ != other.q_trunc_) {
        throw std::invalid_argument("series truncation orders differ");
    }
    for (std::uint32_t i = 0; i <= z_trunc_; ++i) coeffs_[i] += other.coeffs_[i];
    return *this;
}

Series2 operator*(const Series2& a, const Series2& b) {
    if (a.z_trunc_ != b.z_trunc_ || a.q_trunc_ != b.q_trunc_) {
        throw std::invalid_argument("series truncation orders differ");
    }
    Series2 out(a.z_trunc_, a.q_trunc_);
    for (std::uint32_t i = 0; i <= a.z_trunc_; ++i) {
        Poly2 acc;
        for (std::uint32_t j = 0; j <= i; ++j) acc += a.coeffs_[j] * b.coeffs_[i - j];
        out.coeffs_[i] = truncate_q(acc, a.q_trunc_);
    }
    return out;
}

Poly2 invert_poch(std::uint32_t k, std::uint32_t q_trunc) {
    const auto f = dense_q(poch_qq(k), static_cast<std::size_t>(q_trunc) + 1);
    return q_poly_from_dense(invert_unit_series(f, q_trunc));
}

Series2 limit_det(std::uint32_t z_trunc, std::uint32_t q_trunc) {
    Series2 s(z_trunc, q_trunc);
    for (std::uint32_t k = 0; k <= z_trunc; ++k) {
        const std::uint32_t lift = k == 0 ? 0 : k * (k - 1);
        if (lift > q_trunc) continue;
        const mpz_class sign = (k % 2 == 0) ? 1 : -1;
        s.set_coeff(k, shift(invert_poch(k, q_trunc - lift), Monomial{2 * lift, 0}, sign));
    }
    return s;
}

std::optional<int> stabilization_check(std::uint32_t n, std::uint32_t k) {
    if (n == 0) throw std::invalid_argument("stabilization_check: n must be at least 1");
    if (2 * static_cast<std::uint64_t>(k) > n) {
        throw std::invalid_argument("stabilization_check: z^" + std::to_string(k) + " is absent from det M(" +
                                    std::to_string(n) + ")");
    }
    const Poly2 finite = z_coefficient(det_closed(n), k);
    if (k == 0) {
        // The limit coefficient is exactly 1, a polynomial.
        if (finite == Poly2(1)) return std::nullopt;
        return finite.coeff(Monomial{}) == 1 ? 0 : -1;
    }
    // For k >= 1 the limit coefficient +-q^(k(k-1)) / (q;q)_k is nonzero at every
    // degree >= k(k-1), so the two must differ no later than one past the
    // polynomial's degree.
    const std::uint32_t window = finite.degree_u() / 2 + 1;
    const Poly2 limit = limit_det(k, window).coeff(k);
    const auto a = dense_q(finite, window + 1);
    const auto b = dense_q(limit, window + 1);
    for (std::uint32_t d = 0; d <= window; ++d) {
        if (a[d] != b[d]) return static_cast<int>(d) - 1;
    }
    throw std::logic_error("stabilization_check: no disagreement inside the search window");
}

mpz_class dyck_count(std::uint32_t m, std::uint32_t h) {
    // ways[y] = number of prefixes ending at height y.
    std::vector<mpz_class> ways(h + 1);
    ways[0] = 1;
    for (std::uint64_t step = 0; step < 2 * static_cast<std::uint64_t>(m); ++step) {
        std::vector<mpz_class> next(h + 1);
        for (std::uint32_t y = 0; y <= h; ++y) {
            if (ways[y] == 0) continue;
            if (y + 1 <= h) next[y + 1] += ways[y];
            if (y >= 1) next[y - 1] += ways[y];
        }
        ways = std::move(next);
    }
    return ways[0];
}

std::vector<mpz_class> dyck_gf_series(std::uint32_t h, std::uint32_t max_order) {
    const LambdaFamily lam = lambda_rec(h + 1);
    const std::size_t len = static_cast<std::size_t>(max_order) + 1;
    const auto num = dense_z(eval_u1(lam[h]), len);
    const auto den = dense_z(eval_u1(lam[h + 1]), len);
    const auto inv = invert_unit_series(den, max_order);
    std::vector<mpz_class> out(len);
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j <= i; ++j) out[i] += num[j] * inv[i - j];
    }
    return out;
}

bool dyck_gf_check(std::uint32_t h, std::uint32_t max_order) {
    const auto gf = dyck_gf_series(h, max_order);
    for (std::uint32_t m = 0; m <= max_order; ++m) {
        if (gf[m] != dyck_count(m, h)) return false;
    }
    return true;
}

}  // namespace lehmer
