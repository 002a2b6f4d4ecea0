#include "mhodge/lattice.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "mhodge/error.hpp"

namespace mhodge {

FlatLattice::FlatLattice(const Matroid& m) : elems_(m.flats()) {
  ranks_.reserve(elems_.size());
  for (Subset f : elems_) ranks_.push_back(m.flat_rank(f));
  build();
}

FlatLattice::FlatLattice(std::vector<Subset> elements) : elems_(std::move(elements)) {
  std::sort(elems_.begin(), elems_.end(),
            [](Subset a, Subset b) { return std::pair(a.count(), a.bits) < std::pair(b.count(), b.bits); });
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  MHODGE_CHECK(!elems_.empty(), "empty lattice");
  ranks_.assign(elems_.size(), 0);
  for (std::size_t i = 0; i < elems_.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (elems_[j].proper_subset_of(elems_[i]))
        ranks_[i] = std::max(ranks_[i], ranks_[j] + 1);
  std::vector<std::size_t> order(elems_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(ranks_[a], elems_[a].bits) < std::pair(ranks_[b], elems_[b].bits);
  });
  std::vector<Subset> e2;
  std::vector<int> r2;
  for (std::size_t idx : order) {
    e2.push_back(elems_[idx]);
    r2.push_back(ranks_[idx]);
  }
  elems_ = std::move(e2);
  ranks_ = std::move(r2);
  build();
}

void FlatLattice::build() {
  const int m = size();
  covers_up_.assign(static_cast<std::size_t>(m), {});
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !leq(i, j)) continue;
      bool cover = true;
      for (int z = 0; z < m && cover; ++z)
        if (z != i && z != j && leq(i, z) && leq(z, j)) cover = false;
      if (cover) covers_up_[static_cast<std::size_t>(i)].push_back(j);
    }
}

int FlatLattice::index_of(Subset s) const {
  for (std::size_t i = 0; i < elems_.size(); ++i)
    if (elems_[i] == s) return static_cast<int>(i);
  fail(Errc::bad_parameters, "subset " + s.to_string() + " is not a lattice element");
}

int FlatLattice::join(int i, int j) const {
  int best = -1;
  for (int k = 0; k < size(); ++k)
    if (leq(i, k) && leq(j, k) && (best < 0 || leq(k, best))) best = k;
  // `best` is minimal among common upper bounds; verify it is least
  for (int k = 0; k < size(); ++k)
    if (leq(i, k) && leq(j, k) && !leq(best, k)) fail(Errc::internal, "poset is not a lattice (join)");
  return best;
}

int FlatLattice::meet(int i, int j) const {
  int best = -1;
  for (int k = 0; k < size(); ++k)
    if (leq(k, i) && leq(k, j) && (best < 0 || leq(best, k))) best = k;
  for (int k = 0; k < size(); ++k)
    if (leq(k, i) && leq(k, j) && !leq(k, best)) fail(Errc::internal, "poset is not a lattice (meet)");
  return best;
}

bool FlatLattice::is_graded() const {
  // graded iff every cover raises rank by exactly one and bottom has rank 0
  if (ranks_.front() != 0) return false;
  for (int i = 0; i < size(); ++i)
    for (int j : covers_up_[static_cast<std::size_t>(i)])
      if (rank_of(j) != rank_of(i) + 1) return false;
  return true;
}

bool FlatLattice::is_submodular() const {
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (rank_of(i) + rank_of(j) < rank_of(meet(i, j)) + rank_of(join(i, j))) return false;
  return true;
}

IncidenceFn zeta_fn(const FlatLattice& l) {
  const int m = l.size();
  IncidenceFn z(m, m);
  z.setZero();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (l.leq(i, j)) z(i, j) = 1;
  return z;
}

IncidenceFn delta_fn(const FlatLattice& l) {
  const int m = l.size();
  IncidenceFn d(m, m);
  d.setZero();
  for (int i = 0; i < m; ++i) d(i, i) = 1;
  return d;
}

IncidenceFn convolve(const FlatLattice& l, const IncidenceFn& phi, const IncidenceFn& psi) {
  const int m = l.size();
  IncidenceFn out(m, m);
  out.setZero();
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (!l.leq(x, y)) continue;
      Int acc = 0;
      for (int z = 0; z < m; ++z)
        if (l.leq(x, z) && l.leq(z, y)) acc += phi(x, z) * psi(z, y);
      out(x, y) = acc;
    }
  return out;
}

IntVec convolve_apply(const FlatLattice& l, const IncidenceFn& phi, const IntVec& f) {
  const int m = l.size();
  IntVec out(m);
  for (int x = 0; x < m; ++x) {
    Int acc = 0;
    for (int y = 0; y < m; ++y)
      if (l.leq(x, y)) acc += phi(x, y) * f(y);
    out(x) = acc;
  }
  return out;
}

MoebiusTable::MoebiusTable(const FlatLattice& l) {
  const int m = l.size();
  table_ = LongMat(m, m);
  table_.setZero();
  // mu(x,x) = 1 and sum_{x <= z <= y} mu(x,z) = 0, solved upward in y
  for (int x = 0; x < m; ++x) {
    table_(x, x) = 1;
    for (int y = 0; y < m; ++y) {
      if (y == x || !l.leq(x, y)) continue;
      long long acc = 0;
      for (int z = 0; z < m; ++z)
        if (z != y && l.leq(x, z) && l.leq(z, y)) acc += table_(x, z);
      table_(x, y) = -acc;
    }
  }
}

MoebiusTable moebius(const FlatLattice& l) { return MoebiusTable(l); }

bool weisner_check(const FlatLattice& l, int a) {
  MHODGE_CHECK(a != l.bottom(), "weisner_check needs a != bottom");
  MoebiusTable mu(l);
  long long acc = 0;
  for (int x = 0; x < l.size(); ++x)
    if (l.join(x, a) == l.top()) acc += mu.mu(l.bottom(), x);
  return acc == 0;
}

bool moebius_sign_check(const FlatLattice& l) {
  MoebiusTable mu(l);
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y) {
      if (!l.leq(x, y)) continue;
      long long v = mu.mu(x, y);
      if (((l.rank_of(y) - l.rank_of(x)) % 2 == 0 && v < 0) ||
          ((l.rank_of(y) - l.rank_of(x)) % 2 == 1 && v > 0))
        return false;
    }
  return true;
}

namespace {

IntPolynomial char_poly_subset_sum(const Matroid& m) {
  if (m.size() > 24) fail(Errc::too_large, "subset-sum characteristic polynomial capped at 24 elements");
  std::vector<Int> coeffs(static_cast<std::size_t>(m.rank()) + 1, Int(0));
  for (std::uint64_t bits = 0; bits < (1ull << m.size()); ++bits) {
    Subset a{bits};
    int cork = m.corank_of(a);
    if (a.count() % 2 == 0)
      coeffs[static_cast<std::size_t>(cork)] += 1;
    else
      coeffs[static_cast<std::size_t>(cork)] -= 1;
  }
  return IntPolynomial(std::move(coeffs));
}

IntPolynomial char_poly_moebius(const Matroid& m) {
  // eq. over the lattice: chi(T) = sum_P mu(bottom, P) T^{cork(P)};
  // only valid with bottom = empty set, otherwise a loop forces chi = 0
  if (m.has_loops()) return IntPolynomial::zero();
  FlatLattice l(m);
  MoebiusTable mu(l);
  std::vector<Int> coeffs(static_cast<std::size_t>(m.rank()) + 1, Int(0));
  for (int p = 0; p < l.size(); ++p)
    coeffs[static_cast<std::size_t>(m.rank() - l.rank_of(p))] += mu.mu(l.bottom(), p);
  return IntPolynomial(std::move(coeffs));
}

// connected components of the matroid: the partition generated by circuits
std::vector<Subset> matroid_components(const Matroid& m) {
  std::vector<int> parent(static_cast<std::size_t>(m.size()));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (Subset c : m.circuits()) {
    auto el = c.elements();
    for (std::size_t i = 1; i < el.size(); ++i)
      parent[static_cast<std::size_t>(find(el[i]))] = find(el[0]);
  }
  std::vector<Subset> comp(static_cast<std::size_t>(m.size()));
  for (int x = 0; x < m.size(); ++x)
    comp[static_cast<std::size_t>(find(x))] = comp[static_cast<std::size_t>(find(x))].with(x);
  std::vector<Subset> out;
  for (int x = 0; x < m.size(); ++x)
    if (find(x) == x) out.push_back(comp[static_cast<std::size_t>(x)]);
  return out;
}

}  // namespace

IntPolynomial char_poly_deletion_contraction(const Matroid& m) {
  if (m.size() == 0) return IntPolynomial::constant(1);
  if (m.has_loops()) return IntPolynomial::zero();
  // product rule over connected components (coloops are singleton components)
  std::vector<Subset> comps = matroid_components(m);
  if (comps.size() > 1) {
    IntPolynomial acc = IntPolynomial::constant(1);
    for (Subset c : comps)
      acc = acc * char_poly_deletion_contraction(Matroid::deletion_impl(m, m.ground() - c, false));
    return acc;
  }
  if (m.size() == 1)
    return IntPolynomial({Int(-1), Int(1)});  // single coloop: T - 1
  // connected with >= 2 elements: the smallest element is neither a loop
  // nor a coloop
  const Subset e = Subset::single(0);
  IntPolynomial del = char_poly_deletion_contraction(Matroid::deletion_impl(m, e, false));
  IntPolynomial con = char_poly_deletion_contraction(Matroid::contraction_impl(m, e, false));
  return del - con;
}

IntPolynomial char_poly(const Matroid& m, CharPolyAlgorithm alg) {
  switch (alg) {
    case CharPolyAlgorithm::subset_sum: return char_poly_subset_sum(m);
    case CharPolyAlgorithm::moebius: return char_poly_moebius(m);
    case CharPolyAlgorithm::deletion_contraction: return char_poly_deletion_contraction(m);
  }
  fail(Errc::bad_parameters, "unknown char_poly algorithm");
}

IntPolynomial char_poly(const Matroid& m) { return char_poly_subset_sum(m); }

IntPolynomial reduced_char_poly(const Matroid& m) {
  MHODGE_CHECK(m.size() >= 1, "reduced_char_poly needs a non-empty ground set");
  return char_poly(m).divide_by_linear(Int(1));
}

std::vector<Int> mu_vector(const Matroid& m) {
  if (m.has_loops() || m.size() == 0)
    fail(Errc::bad_parameters, "mu_vector needs a loop-free matroid on a non-empty ground set");
  IntPolynomial chibar = reduced_char_poly(m);
  const int r = m.rank() - 1;
  std::vector<Int> mu(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    Int c = chibar.coeff(r - k);
    mu[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c : Int(-c);
  }
  return mu;
}

std::vector<Int> whitney_first(const Matroid& m) {
  IntPolynomial chi = char_poly(m);
  const int r = m.rank();
  std::vector<Int> w(static_cast<std::size_t>(r) + 1);
  for (int k = 0; k <= r; ++k) {
    Int c = chi.coeff(r - k);
    w[static_cast<std::size_t>(k)] = (k % 2 == 0) ? c : Int(-c);
  }
  return w;
}

std::vector<long long> whitney_second(const Matroid& m) {
  std::vector<long long> w;
  w.reserve(m.flats_by_rank().size());
  for (const auto& level : m.flats_by_rank()) w.push_back(static_cast<long long>(level.size()));
  return w;
}

long long descending_flag_count(const Matroid& m, int k, const std::vector<int>& order) {
  MHODGE_CHECK(m.is_simple(), "descending flags are defined for combinatorial geometries");
  MHODGE_CHECK(static_cast<int>(order.size()) == m.size(), "order must list every element");
  std::vector<int> pos(static_cast<std::size_t>(m.size()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  if (k == 0) return 1;
  if (k >= m.rank()) return 0;
  auto min_pos = [&](Subset f) {
    int best = m.size();
    for (int x : f.elements()) best = std::min(best, pos[static_cast<std::size_t>(x)]);
    return best;
  };
  // The chain condition reads inf(P_1) > inf(P_2) > ... > inf(P_k) > 0 with
  // minima taken as positions under `order`; build flags upward while the
  // minimum strictly drops and stays off the order's first element.
  long long count = 0;
  std::function<void(int, Subset, int)> walk = [&](int depth, Subset prev, int bound) {
    if (depth > k) {
      ++count;
      return;
    }
    for (Subset f : m.flats_by_rank()[static_cast<std::size_t>(depth)]) {
      if (depth > 1 && !prev.proper_subset_of(f)) continue;
      int mp = min_pos(f);
      if (depth > 1 && mp >= bound) continue;
      if (mp <= 0) continue;
      walk(depth + 1, f, mp);
    }
  };
  walk(1, Subset::empty_set(), m.size() + 1);
  return count;
}

long long descending_flag_count(const Matroid& m, int k) {
  std::vector<int> order(static_cast<std::size_t>(m.size()));
  std::iota(order.begin(), order.end(), 0);
  return descending_flag_count(m, k, order);
}

IntPolynomial f_vector_polynomial(const Matroid& m) {
  const int r = m.rank();
  std::vector<long long> f = m.f_vector();
  std::vector<Int> coeffs(static_cast<std::size_t>(r) + 1, Int(0));
  for (int k = 0; k <= r; ++k)
    coeffs[static_cast<std::size_t>(r - k)] = (k % 2 == 0) ? Int(f[static_cast<std::size_t>(k)])
                                                           : Int(-f[static_cast<std::size_t>(k)]);
  return IntPolynomial(std::move(coeffs));
}

bool is_log_concave_positive(const std::vector<Int>& a) {
  for (const Int& v : a)
    if (v <= 0) return false;
  for (std::size_t k = 1; k + 1 < a.size(); ++k)
    if (a[k - 1] * a[k + 1] > a[k] * a[k]) return false;
  return true;
}

bool is_unimodal(const std::vector<Int>& a) {
  std::size_t peak = 0;
  while (peak + 1 < a.size() && a[peak] <= a[peak + 1]) ++peak;
  for (std::size_t k = peak; k + 1 < a.size(); ++k)
    if (a[k] < a[k + 1]) return false;
  return true;
}

MasonRatioReport mason_ratio_report(const Matroid& m) {
  MasonRatioReport rep;
  std::vector<long long> f = m.f_vector();
  rep.meets_strong_bound = true;
  for (std::size_t k = 1; k + 1 < f.size(); ++k) {
    if (f[k - 1] == 0 || f[k + 1] == 0) continue;
    Rat ratio(Int(f[k]) * Int(f[k]), Int(f[k - 1]) * Int(f[k + 1]));
    ratio.canonicalize();
    if (!rep.defined || ratio < rep.min_ratio) rep.min_ratio = ratio;
    rep.defined = true;
    if (Int(static_cast<long long>(k)) * Int(f[k]) * Int(f[k]) <
        Int(static_cast<long long>(k) + 1) * Int(f[k - 1]) * Int(f[k + 1]))
      rep.meets_strong_bound = false;
  }
  return rep;
}

}  // namespace mhodge
