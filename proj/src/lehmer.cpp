#include "lehmer/lehmer.hpp"

#include <stdexcept>

#include "lehmer/qcomb.hpp"

namespace lehmer {

namespace {

// z^(1/2) q^((i-1)/2) for 1-based band position i.
Poly2 band_entry(std::uint32_t i) { return Poly2::monomial(1, i - 1, 1); }

void require_positive(std::uint32_t n, const char* what) {
    if (n == 0) throw std::invalid_argument(std::string(what) + ": dimension must be at least 1");
}

}  // namespace

Poly2 lambda_sum(std::uint32_t j) {
    Poly2 sum;
    for (std::uint32_t k = 0; 2 * k <= j; ++k) {
        const mpz_class sign = (k % 2 == 0) ? 1 : -1;
        const std::uint32_t q_exp = k == 0 ? 0 : k * (k - 1);
        sum += shift(gauss_product(j - k, k), Monomial{2 * q_exp, 2 * k}, sign);
    }
    return sum;
}

LambdaFamily lambda_rec(std::uint32_t j_max) {
    LambdaFamily fam;
    fam.values.reserve(j_max + 1);
    fam.values.emplace_back(1);
    if (j_max >= 1) fam.values.emplace_back(1);
    for (std::uint32_t j = 2; j <= j_max; ++j) {
        fam.values.push_back(fam.values[j - 1] - shift(fam.values[j - 2], Monomial{2 * (j - 2), 2}));
    }
    return fam;
}

TriMatrix<Poly2> lehmer_matrix(std::uint32_t n) {
    require_positive(n, "lehmer_matrix");
    std::vector<Poly2> diag(n, Poly2(1));
    std::vector<Poly2> band;
    band.reserve(n - 1);
    for (std::uint32_t i = 1; i < n; ++i) band.push_back(band_entry(i));
    return {std::move(diag), band, band};
}

BandedFactors<RatFunc> closed_factors(std::uint32_t n) {
    require_positive(n, "closed_factors");
    const LambdaFamily lam = lambda_rec(n);
    BandedFactors<RatFunc> f;
    for (std::uint32_t j = 1; j <= n; ++j) {
        f.u_diag.emplace_back(lam[j], lam[j - 1]);
        if (j < n) {
            f.u_super.emplace_back(band_entry(j));
            f.l_sub.emplace_back(band_entry(j) * lam[j - 1], lam[j]);
        }
    }
    return f;
}

Poly2 det_closed(std::uint32_t n) {
    require_positive(n, "det_closed");
    return lambda_rec(n)[n];
}

}  // namespace lehmer
