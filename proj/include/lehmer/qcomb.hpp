#ifndef LEHMER_QCOMB_HPP
#define LEHMER_QCOMB_HPP

#include <cstdint>

#include "lehmer/poly.hpp"

namespace lehmer {

/// q-Pochhammer symbol (q;q)_k = (1 - q)(1 - q^2)...(1 - q^k); (q;q)_0 = 1.
Poly2 poch_qq(std::uint32_t k);

/// Gaussian binomial from the product form (q;q)_n / ((q;q)_k (q;q)_{n-k}).
/// Zero when k < 0 or k > n.
Poly2 gauss_product(std::int64_t n, std::int64_t k);

/// Gaussian binomial from the q-Pascal recurrence
///   [n, k] = [n-1, k] + q^(n-k) [n-1, k-1],   [n, 0] = [n, n] = 1,
/// memoised in a process-wide table that is filled row by row under a lock.
Poly2 gauss_pascal(std::int64_t n, std::int64_t k);

struct QBinom {
    std::int64_t n = 0;
    std::int64_t k = 0;
    Poly2 value;
};

QBinom qbinom(std::int64_t n, std::int64_t k);

}  // namespace lehmer

#endif  // LEHMER_QCOMB_HPP
