#pragma once

// 3x3 matrices over K, used as an independent route to the group laws: the
// library multiplies coordinates by closed formulas, the oracle multiplies
// the matrices those coordinates stand for.

#include <Eigen/Core>

#include "nilint/gprime.hpp"
#include "nilint/group.hpp"
#include "nilint/qfield.hpp"

namespace Eigen {

template <>
struct NumTraits<nilint::QuadRat> : GenericNumTraits<nilint::QuadRat> {
  using Real = nilint::QuadRat;
  using NonInteger = nilint::QuadRat;
  using Nested = nilint::QuadRat;
  using Literal = nilint::QuadRat;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3,
  };
};

}  // namespace Eigen

namespace nilint::oracle {

using Mat3 = Eigen::Matrix<QuadRat, 3, 3>;

inline Mat3 matrix(const QuadRat& a, const QuadRat& b, const QuadRat& c,
                   const QuadRat& x = 1) {
  Mat3 m;
  m << 1, a, c,  //
      0, x, b,   //
      0, 0, 1;
  return m;
}

inline Mat3 matrix(const HElem& h) { return matrix(h.a, h.b, h.c); }
inline Mat3 matrix(const GElem& g) { return matrix(g.a(), g.b(), g.c()); }
inline Mat3 matrix(const GPrimeElem& g) {
  return matrix(g.a(), g.b(), g.c(), g.x());
}

inline HElem h_of(const Mat3& m) { return {m(0, 1), m(1, 2), m(0, 2)}; }

// Reads a product back into G, reducing the corner mod Gamma.
inline GElem g_of(const Mat3& m) { return {m(0, 1), m(1, 2), m(0, 2)}; }

inline GPrimeElem gp_of(const Mat3& m) {
  return {m(0, 1), m(1, 2), m(0, 2), m(1, 1)};
}

// Inverse of an upper triangular matrix with unit corners, by back
// substitution on M X = I.
inline Mat3 upper_inverse(const Mat3& m) {
  Mat3 inv = Mat3::Zero();
  for (int col = 0; col < 3; ++col) {
    for (int row = 2; row >= 0; --row) {
      QuadRat rhs = row == col ? QuadRat(1) : QuadRat(0);
      for (int k = row + 1; k < 3; ++k) rhs -= m(row, k) * inv(k, col);
      inv(row, col) = rhs / m(row, row);
    }
  }
  return inv;
}

}  // namespace nilint::oracle
