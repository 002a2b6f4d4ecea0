#pragma once

#include <vector>

#include "mhodge/matroid.hpp"
#include "mhodge/polynomial.hpp"
#include "mhodge/scalars.hpp"
#include "mhodge/subset.hpp"

namespace mhodge {

// Ranked lattice of flats with covering relations and join/meet. Also
// accepts a bare graded lattice of subsets for incidence-algebra work.
class FlatLattice {
 public:
  explicit FlatLattice(const Matroid& m);
  // Order is by inclusion, ranks by longest chain; callers must hand in a
  // genuine lattice.
  explicit FlatLattice(std::vector<Subset> elements);

  int size() const { return static_cast<int>(elems_.size()); }
  Subset element(int i) const { return elems_[static_cast<std::size_t>(i)]; }
  int rank_of(int i) const { return ranks_[static_cast<std::size_t>(i)]; }
  int rank() const { return ranks_.back(); }
  int bottom() const { return 0; }
  int top() const { return size() - 1; }
  int index_of(Subset s) const;

  bool leq(int i, int j) const { return elems_[static_cast<std::size_t>(i)].subset_of(elems_[static_cast<std::size_t>(j)]); }
  // Upper covers of i (indices).
  const std::vector<int>& covers_up(int i) const { return covers_up_[static_cast<std::size_t>(i)]; }

  int join(int i, int j) const;
  int meet(int i, int j) const;

  // Every maximal chain has length rank(); false flags a non-graded input.
  bool is_graded() const;
  // rk(P) + rk(Q) >= rk(P meet Q) + rk(P join Q) on all pairs.
  bool is_submodular() const;

 private:
  void build();
  std::vector<Subset> elems_;  // sorted by (rank, bits)
  std::vector<int> ranks_;
  std::vector<std::vector<int>> covers_up_;
};

// Incidence functions are dense matrices with entries only on pairs x <= y.
using IncidenceFn = IntMat;

IncidenceFn zeta_fn(const FlatLattice& l);
IncidenceFn delta_fn(const FlatLattice& l);
// Convolution (phi * psi)(x,y) = sum_{x <= z <= y} phi(x,z) psi(z,y).
IncidenceFn convolve(const FlatLattice& l, const IncidenceFn& phi, const IncidenceFn& psi);
// Left action on functions: (phi * f)(x) = sum_{x <= y} phi(x,y) f(y).
IntVec convolve_apply(const FlatLattice& l, const IncidenceFn& phi, const IntVec& f);

// Moebius function of the lattice: the convolution inverse of zeta.
class MoebiusTable {
 public:
  explicit MoebiusTable(const FlatLattice& l);
  // mu(x,y); zero when x <= y fails.
  long long mu(int x, int y) const { return table_(x, y); }
  const LongMat& values() const { return table_; }

 private:
  LongMat table_;
};

MoebiusTable moebius(const FlatLattice& l);

// Weisner: sum of mu(bottom, x) over x with x v a = top vanishes (a != bottom).
bool weisner_check(const FlatLattice& l, int a);
// Sign rule for submodular lattices: (-1)^{rk y - rk x} mu(x,y) >= 0.
bool moebius_sign_check(const FlatLattice& l);

enum class CharPolyAlgorithm { subset_sum, moebius, deletion_contraction };

IntPolynomial char_poly(const Matroid& m, CharPolyAlgorithm alg);
IntPolynomial char_poly(const Matroid& m);  // subset_sum
IntPolynomial char_poly_deletion_contraction(const Matroid& m);

// chi / (T - 1); exact, throws Errc::nonzero_remainder on upstream bugs.
IntPolynomial reduced_char_poly(const Matroid& m);

// mu^k from the reduced characteristic polynomial: chibar = sum (-1)^k mu^k T^{r-k},
// r = rank - 1. Requires a loop-free matroid on a non-empty ground set.
std::vector<Int> mu_vector(const Matroid& m);

// Whitney numbers of the first kind: chi = sum (-1)^k w_k T^{r-k}, r = rank.
std::vector<Int> whitney_first(const Matroid& m);
// Whitney numbers of the second kind: W_k = number of rank-k flats.
std::vector<long long> whitney_second(const Matroid& m);

// Counts flags P_1 < ... < P_k of flats with rk(P_j) = j whose minima under
// `order` strictly decrease and avoid the first element of the order. For a
// combinatorial geometry this equals mu^k for any total order.
long long descending_flag_count(const Matroid& m, int k, const std::vector<int>& order);
long long descending_flag_count(const Matroid& m, int k);

// Σ_k (-1)^k f_k(M) T^{r-k} with r = rank(M); the reduced characteristic
// polynomial of the free coextension must reproduce it.
IntPolynomial f_vector_polynomial(const Matroid& m);

bool is_log_concave_positive(const std::vector<Int>& a);
bool is_unimodal(const std::vector<Int>& a);

// min over internal k of f_k^2 / (f_{k-1} f_{k+1}), reported against (k+1)/k.
struct MasonRatioReport {
  bool defined = false;
  Rat min_ratio;           // over k with f_{k-1} f_{k+1} != 0
  bool meets_strong_bound = false;  // k f_k^2 >= (k+1) f_{k-1} f_{k+1} for all k
};
MasonRatioReport mason_ratio_report(const Matroid& m);

}  // namespace mhodge
