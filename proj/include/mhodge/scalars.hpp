#pragma once

// Exact scalars for the whole library: GMP integers and rationals plugged
// into Eigen dense types. No floating point is used anywhere in the exact
// pipelines.

#include <Eigen/Core>
#include <gmpxx.h>

#include <string>

namespace mhodge {

using Int = mpz_class;
using Rat = mpq_class;

}  // namespace mhodge

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  typedef mpz_class Real;
  typedef mpz_class NonInteger;
  typedef mpz_class Nested;
  typedef mpz_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 60,
    MulCost = 60,
  };
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen

namespace mhodge {

using IntMat = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVec = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using RatMat = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using RatVec = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;
using LongMat = Eigen::Matrix<long long, Eigen::Dynamic, Eigen::Dynamic>;
using LongVec = Eigen::Matrix<long long, Eigen::Dynamic, 1>;

inline bool is_integral(const Rat& q) { return q.get_den() == 1; }

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

// Exact conversion; throws if the value does not fit in a long long.
long long to_long_checked(const Int& z);

}  // namespace mhodge
