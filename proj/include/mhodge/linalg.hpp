#pragma once

// Exact linear algebra free functions over Eigen dense types. Everything
// here is pivoted for exactness, not speed: matrices at desk scale stay
// in the low hundreds.

#include <vector>

#include "mhodge/scalars.hpp"

namespace mhodge {

// Rank over Q by Gaussian elimination.
Eigen::Index rank_of(RatMat a);
Eigen::Index rank_of(const IntMat& a);

// Columns form a basis of the right kernel {x : a x = 0}.
RatMat kernel_basis(RatMat a);

// Determinant of a square integer matrix (fraction-free Bareiss).
Int det_bareiss(IntMat a);

// Diagonal of the Smith normal form (non-negative, divisibility chain).
std::vector<Int> smith_diagonal(IntMat a);

// Whether the columns of `a` are part of a Z-basis of the ambient lattice,
// i.e. all elementary divisors equal 1.
bool extends_to_lattice_basis(const IntMat& a);

struct Signature {
  Eigen::Index positive = 0;
  Eigen::Index negative = 0;
  Eigen::Index zero = 0;
};

// Signature of a symmetric matrix by congruence diagonalization with exact
// pivoting; zero pivots are repaired by simultaneous row/column moves.
Signature signature_of(RatMat g);

// Rank of an integer matrix over the prime field F_p.
int rank_mod_p(Eigen::MatrixXi a, long long p);

// Row-reduces `a` mod p in place, returns pivot columns.
std::vector<int> row_reduce_mod_p(Eigen::MatrixXi& a, long long p);

}  // namespace mhodge
