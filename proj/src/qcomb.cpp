#include "lehmer/qcomb.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>
#include <vector>

namespace lehmer {

namespace {

class PascalTable {
public:
    Poly2 get(std::uint32_t n, std::uint32_t k) {
        std::lock_guard lock(mutex_);
        while (rows_.size() <= n) extend();
        return rows_[n][k];
    }

private:
    void extend() {
        const auto n = static_cast<std::uint32_t>(rows_.size());
        std::vector<Poly2> row(n + 1);
        row[0] = 1;
        row[n] = 1;
        for (std::uint32_t k = 1; k < n; ++k) {
            row[k] = rows_[n - 1][k] + shift(rows_[n - 1][k - 1], Monomial{2 * (n - k), 0});
        }
        rows_.push_back(std::move(row));
    }

    std::mutex mutex_;
    std::vector<std::vector<Poly2>> rows_;
};

PascalTable& pascal_table() {
    static PascalTable table;
    return table;
}

}  // namespace

Poly2 poch_qq(std::uint32_t k) {
    Poly2 p = 1;
    for (std::uint32_t i = 1; i <= k; ++i) p *= Poly2(1) - Poly2::qz(1, i, 0);
    return p;
}

Poly2 gauss_product(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return {};
    const auto un = static_cast<std::uint32_t>(n);
    const auto uk = static_cast<std::uint32_t>(k);
    try {
        return exact_div(poch_qq(un), poch_qq(uk) * poch_qq(un - uk));
    } catch (const NonExactDivision& e) {
        // Divisibility is a theorem; reaching this is a bug in the polynomial layer.
        std::cerr << "gauss_product(" << n << ", " << k << "): " << e.what() << '\n';
        std::abort();
    }
}

Poly2 gauss_pascal(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return {};
    return pascal_table().get(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
}

QBinom qbinom(std::int64_t n, std::int64_t k) { return {n, k, gauss_pascal(n, k)}; }

}  // namespace lehmer
