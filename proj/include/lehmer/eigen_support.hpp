#ifndef LEHMER_EIGEN_SUPPORT_HPP
#define LEHMER_EIGEN_SUPPORT_HPP

// NumTraits for the exact scalar types so they can live in Eigen matrices.
// Only the structural and product machinery is used; nothing here relies on
// epsilon, precision, or ordering.

#include <Eigen/Core>

#include "lehmer/poly.hpp"

namespace Eigen {

template <>
struct NumTraits<lehmer::Poly2> : GenericNumTraits<lehmer::Poly2> {
    using Real = lehmer::Poly2;
    using NonInteger = lehmer::Poly2;
    using Nested = lehmer::Poly2;
    using Literal = lehmer::Poly2;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 10,
        MulCost = 100
    };
};

template <>
struct NumTraits<lehmer::RatFunc> : GenericNumTraits<lehmer::RatFunc> {
    using Real = lehmer::RatFunc;
    using NonInteger = lehmer::RatFunc;
    using Nested = lehmer::RatFunc;
    using Literal = lehmer::RatFunc;

    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 30,
        MulCost = 300
    };
};

}  // namespace Eigen

#endif  // LEHMER_EIGEN_SUPPORT_HPP
