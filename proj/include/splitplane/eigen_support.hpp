#pragma once

#include <limits>

#include <Eigen/Core>

#include "splitplane/double_number.hpp"

namespace Eigen {

// Lets Double<S> be the scalar of fixed-size Eigen matrices (homographic
// coefficient matrices). Only ring operations are required of it.
template <typename S>
struct NumTraits<splitplane::Double<S>> : GenericNumTraits<splitplane::Double<S>> {
  using Real = S;
  using NonInteger = splitplane::Double<S>;
  using Literal = splitplane::Double<S>;
  using Nested = splitplane::Double<S>;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 2,
    MulCost = 4,
  };

  static S epsilon() { return std::numeric_limits<S>::epsilon(); }
  static S dummy_precision() { return S(1e-12); }
  static int digits10() { return std::numeric_limits<S>::digits10; }
};

}  // namespace Eigen

namespace splitplane {

template <typename S>
using DoubleMatrix2 = Eigen::Matrix<Double<S>, 2, 2>;

}  // namespace splitplane
