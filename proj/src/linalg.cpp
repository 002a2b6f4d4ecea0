#include "mhodge/linalg.hpp"

#include <algorithm>

#include "mhodge/error.hpp"

namespace mhodge {

long long to_long_checked(const Int& z) {
  MHODGE_CHECK(z.fits_slong_p(), "integer does not fit in long long");
  return z.get_si();
}

Eigen::Index rank_of(RatMat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(rank));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      if (a(r, col) == 0) continue;
      Rat f = a(r, col) / a(rank, col);
      for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

Eigen::Index rank_of(const IntMat& a) {
  return rank_of(a.cast<Rat>().eval());
}

RatMat kernel_basis(RatMat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Eigen::Index> pivot_col;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(rank));
    Rat inv = a(rank, col);
    for (Eigen::Index c = col; c < cols; ++c) a(rank, c) /= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || a(r, col) == 0) continue;
      Rat f = a(r, col);
      for (Eigen::Index c = col; c < cols; ++c) a(r, c) -= f * a(rank, c);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Eigen::Index c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = true;
  RatMat basis(cols, cols - rank);
  basis.setZero();
  Eigen::Index k = 0;
  for (Eigen::Index free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<std::size_t>(free_col)]) continue;
    basis(free_col, k) = 1;
    for (Eigen::Index r = 0; r < rank; ++r) basis(pivot_col[static_cast<std::size_t>(r)], k) = -a(r, free_col);
    ++k;
  }
  return basis;
}

Int det_bareiss(IntMat a) {
  const Eigen::Index n = a.rows();
  MHODGE_CHECK(n == a.cols(), "det of non-square matrix");
  if (n == 0) return 1;
  Int denom = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      Eigen::Index piv = -1;
      for (Eigen::Index r = k + 1; r < n; ++r)
        if (a(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      a.row(k).swap(a.row(piv));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), denom.get_mpz_t());
      }
    denom = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::vector<Int> smith_diagonal(IntMat a) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  std::vector<Int> diag;
  Eigen::Index t = 0;
  while (t < rows && t < cols) {
    // locate a nonzero entry of minimal absolute value in the trailing block
    Eigen::Index pr = -1, pc = -1;
    Int best = 0;
    for (Eigen::Index i = t; i < rows; ++i)
      for (Eigen::Index j = t; j < cols; ++j) {
        if (a(i, j) == 0) continue;
        Int v = abs(a(i, j));
        if (pr < 0 || v < best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (pr < 0) break;
    a.row(t).swap(a.row(pr));
    a.col(t).swap(a.col(pc));
    bool clean = true;
    for (Eigen::Index i = t + 1; i < rows; ++i) {
      if (a(i, t) == 0) continue;
      Int q = a(i, t) / a(t, t);
      a.row(i) -= (q * a.row(t)).eval();
      if (a(i, t) != 0) clean = false;
    }
    for (Eigen::Index j = t + 1; j < cols; ++j) {
      if (a(t, j) == 0) continue;
      Int q = a(t, j) / a(t, t);
      a.col(j) -= (q * a.col(t)).eval();
      if (a(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // residues became smaller; pick a new pivot
    // pivot must divide the rest of the block for a true Smith chain
    bool divides_all = true;
    for (Eigen::Index i = t + 1; i < rows && divides_all; ++i)
      for (Eigen::Index j = t + 1; j < cols; ++j)
        if (a(i, j) % a(t, t) != 0) {
          a.row(t) += a.row(i);
          divides_all = false;
          break;
        }
    if (!divides_all) continue;
    diag.push_back(abs(a(t, t)));
    ++t;
  }
  return diag;
}

bool extends_to_lattice_basis(const IntMat& a) {
  std::vector<Int> d = smith_diagonal(a);
  if (static_cast<Eigen::Index>(d.size()) != std::min(a.rows(), a.cols())) return false;
  for (const Int& v : d)
    if (v != 1) return false;
  return true;
}

Signature signature_of(RatMat g) {
  const Eigen::Index n = g.rows();
  MHODGE_CHECK(n == g.cols() && g == g.transpose(), "signature of non-symmetric matrix");
  Signature sig;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (g(i, i) == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index j = i + 1; j < n; ++j)
        if (g(j, j) != 0) {
          swap = j;
          break;
        }
      if (swap >= 0) {
        g.row(i).swap(g.row(swap));
        g.col(i).swap(g.col(swap));
      } else {
        Eigen::Index off = -1;
        for (Eigen::Index j = i + 1; j < n; ++j)
          if (g(i, j) != 0) {
            off = j;
            break;
          }
        if (off < 0) {
          ++sig.zero;
          continue;
        }
        // g(i,i)=g(off,off)=0, g(i,off)!=0: adding row/col off to i makes
        // the (i,i) entry 2*g(i,off) != 0.
        g.row(i) += g.row(off);
        g.col(i) += g.col(off);
      }
    }
    const Rat pivot = g(i, i);
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (g(j, i) == 0) continue;
      Rat f = g(j, i) / pivot;
      g.row(j) -= (f * g.row(i)).eval();
      g.col(j) -= (f * g.col(i)).eval();
    }
    if (pivot > 0)
      ++sig.positive;
    else
      ++sig.negative;
  }
  return sig;
}

std::vector<int> row_reduce_mod_p(Eigen::MatrixXi& a, long long p) {
  const Eigen::Index rows = a.rows(), cols = a.cols();
  auto inv_mod = [&](long long x) {
    // Fermat; p is prime and x != 0 mod p.
    long long result = 1, base = ((x % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  std::vector<int> pivots;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index piv = -1;
    for (Eigen::Index r = rank; r < rows; ++r)
      if (a(r, col) % p != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    a.row(piv).swap(a.row(rank));
    long long inv = inv_mod(a(rank, col));
    for (Eigen::Index c = 0; c < cols; ++c)
      a(rank, c) = static_cast<int>((static_cast<long long>(a(rank, c)) % p + p) * inv % p);
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == rank || a(r, col) % p == 0) continue;
      long long f = ((a(r, col) % p) + p) % p;
      for (Eigen::Index c = 0; c < cols; ++c)
        a(r, c) = static_cast<int>(((a(r, c) - f * a(rank, c)) % p + static_cast<long long>(p) * p) % p);
    }
    pivots.push_back(static_cast<int>(col));
    ++rank;
  }
  return pivots;
}

int rank_mod_p(Eigen::MatrixXi a, long long p) {
  return static_cast<int>(row_reduce_mod_p(a, p).size());
}

}  // namespace mhodge
