#pragma once

#include "germlab/rational.hpp"

#include <Eigen/Core>

namespace germlab {

template <typename S>
using Matrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {

template <typename S>
struct ExactNumTraits {
    typedef S Real;
    typedef S NonInteger;
    typedef S Nested;
    typedef S Literal;
    static inline Real epsilon() { return S(0); }
    static inline Real dummy_precision() { return S(0); }
    static inline int digits10() { return 0; }
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 60,
        MulCost = 60
    };
};

} // namespace detail
} // namespace germlab

namespace Eigen {

template <>
struct NumTraits<mpq_class> : germlab::detail::ExactNumTraits<mpq_class> {};

} // namespace Eigen
