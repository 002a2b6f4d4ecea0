#include "mhodge/matroid.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "mhodge/error.hpp"
#include "mhodge/linalg.hpp"

namespace mhodge {

namespace {

// union-find over a fixed number of vertices
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

std::vector<Subset> sorted_unique(std::vector<Subset> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// All flats of the matroid described by a rank oracle, found by growing
// closures: every cover of a flat F is the closure of F + one element.
std::vector<Subset> flats_from_rank_fn(int n, const std::function<int(Subset)>& rank_fn) {
  const Subset ground = Subset::full_set(n);
  auto closure_of = [&](Subset s) {
    int r = rank_fn(s);
    Subset c = s;
    for (int x = 0; x < n; ++x)
      if (!s.contains(x) && rank_fn(s.with(x)) == r) c = c.with(x);
    return c;
  };
  std::vector<Subset> flats;
  std::unordered_map<std::uint64_t, bool> seen;
  std::vector<Subset> frontier{closure_of(Subset::empty_set())};
  seen[frontier[0].bits] = true;
  while (!frontier.empty()) {
    std::vector<Subset> next;
    for (Subset f : frontier) {
      flats.push_back(f);
      if (f == ground) continue;
      for (int x = 0; x < n; ++x) {
        if (f.contains(x)) continue;
        Subset q = closure_of(f.with(x));
        if (!seen[q.bits]) {
          seen[q.bits] = true;
          next.push_back(q);
        }
      }
    }
    frontier = std::move(next);
  }
  return sorted_unique(std::move(flats));
}

}  // namespace

int Graph::components() const {
  Dsu dsu(vertices);
  for (auto [u, v] : edges) dsu.unite(u, v);
  int count = 0;
  for (int v = 0; v < vertices; ++v)
    if (dsu.find(v) == v) ++count;
  return count;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::flats: return "flats";
    case Provenance::bases: return "bases";
    case Provenance::circuits: return "circuits";
    case Provenance::graph: return "graph";
    case Provenance::matrix: return "matrix";
    case Provenance::derived: return "derived";
  }
  return "?";
}

Matroid::Matroid(int n, std::vector<Subset> flats, bool validate) : n_(n) {
  if (n < 0 || n > 64) fail(Errc::bad_parameters, "ground set size out of range");
  if (flats.empty()) fail(Errc::axiom_violation_i, "empty flat family");
  const Subset ground = Subset::full_set(n);
  for (Subset f : flats)
    if (!f.subset_of(ground)) fail(Errc::index_out_of_range, "flat " + f.to_string() + " not inside ground set");
  flats = sorted_unique(std::move(flats));
  std::sort(flats.begin(), flats.end(),
            [](Subset a, Subset b) { return std::pair(a.count(), a.bits) < std::pair(b.count(), b.bits); });

  std::unordered_map<std::uint64_t, int> index;
  for (std::size_t i = 0; i < flats.size(); ++i) index[flats[i].bits] = static_cast<int>(i);

  if (validate) {
    if (!index.count(ground.bits))
      fail(Errc::axiom_violation_i, "ground set " + ground.to_string() + " is not a flat");
    for (std::size_t i = 0; i < flats.size(); ++i)
      for (std::size_t j = i + 1; j < flats.size(); ++j) {
        Subset meet = flats[i] & flats[j];
        if (!index.count(meet.bits))
          fail(Errc::axiom_violation_i, "intersection of " + flats[i].to_string() + " and " +
                                            flats[j].to_string() + " is not a flat");
      }
  }

  // ranks by longest chain below each flat (flats are popcount-sorted)
  std::vector<int> ranks(flats.size(), 0);
  for (std::size_t i = 0; i < flats.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (flats[j].proper_subset_of(flats[i])) ranks[i] = std::max(ranks[i], ranks[j] + 1);

  if (validate) {
    // axiom (ii): minimal flats strictly above P cover E
    for (std::size_t i = 0; i < flats.size(); ++i) {
      if (flats[i] == ground) continue;
      Subset covered = flats[i];
      for (std::size_t j = 0; j < flats.size(); ++j) {
        if (!flats[i].proper_subset_of(flats[j])) continue;
        bool minimal = true;
        for (std::size_t k = 0; k < flats.size() && minimal; ++k)
          if (k != j && flats[i].proper_subset_of(flats[k]) && flats[k].proper_subset_of(flats[j]))
            minimal = false;
        if (minimal) covered = covered | flats[j];
      }
      if (covered != ground)
        fail(Errc::axiom_violation_ii, "minimal flats above " + flats[i].to_string() +
                                           " only cover " + covered.to_string());
    }
  }

  // regroup sorted by (rank, bits)
  std::vector<std::size_t> order(flats.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::pair(ranks[a], flats[a].bits) < std::pair(ranks[b], flats[b].bits);
  });
  flats_.reserve(flats.size());
  flat_ranks_.reserve(flats.size());
  for (std::size_t idx : order) {
    flats_.push_back(flats[idx]);
    flat_ranks_.push_back(ranks[idx]);
  }
  rank_ = flat_ranks_.back();
  MHODGE_CHECK(flats_.back() == ground, "top flat is not the ground set");
  flats_by_rank_.assign(static_cast<std::size_t>(rank_) + 1, {});
  for (std::size_t i = 0; i < flats_.size(); ++i) {
    flats_by_rank_[static_cast<std::size_t>(flat_ranks_[i])].push_back(flats_[i]);
    flat_index_[flats_[i].bits] = static_cast<int>(i);
  }
  for (const auto& level : flats_by_rank_)
    MHODGE_CHECK(!level.empty(), "flat family skips a rank level");
}

int Matroid::flat_rank(Subset f) const {
  auto it = flat_index_.find(f.bits);
  MHODGE_CHECK(it != flat_index_.end(), "flat_rank of a non-flat " + f.to_string());
  return flat_ranks_[static_cast<std::size_t>(it->second)];
}

Subset Matroid::closure(Subset s) const {
  MHODGE_CHECK(s.subset_of(ground()), "closure argument outside ground set");
  Subset acc = ground();
  for (Subset f : flats_)
    if (s.subset_of(f)) acc = acc & f;
  return acc;
}

int Matroid::rank_of(Subset s) const { return flat_rank(closure(s)); }

bool Matroid::is_simple() const {
  if (has_loops()) return false;
  if (rank_ == 0) return n_ == 0;
  for (Subset f : flats_by_rank_[1])
    if (f.count() != 1) return false;
  return true;
}

std::vector<Subset> Matroid::independent_sets() const {
  std::vector<Subset> out{Subset::empty_set()};
  std::vector<Subset> frontier = out;
  for (int size = 1; size <= rank_; ++size) {
    std::vector<Subset> next;
    for (Subset s : frontier) {
      // extend only past the largest current element, so each independent
      // set is produced exactly once
      int start = s.empty() ? 0 : 63 - std::countl_zero(s.bits) + 1;
      for (int x = start; x < n_; ++x) {
        Subset t = s.with(x);
        if (is_independent(t)) next.push_back(t);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<Subset> Matroid::bases() const {
  std::vector<Subset> out;
  for (Subset s : independent_sets())
    if (s.count() == rank_) out.push_back(s);
  return out;
}

std::vector<Subset> Matroid::circuits() const {
  std::vector<Subset> out;
  for (std::uint64_t bits = 1; bits < (1ull << n_); ++bits) {
    Subset s{bits};
    if (is_independent(s)) continue;
    bool minimal = true;
    for (int x : s.elements())
      if (!is_independent(s.without(x))) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(s);
  }
  return out;
}

std::vector<long long> Matroid::f_vector() const {
  std::vector<long long> f(static_cast<std::size_t>(rank_) + 1, 0);
  for (Subset s : independent_sets()) ++f[static_cast<std::size_t>(s.count())];
  return f;
}

Matroid Matroid::from_flats(int n, std::vector<Subset> flats) {
  Matroid m(n, std::move(flats), true);
  m.provenance = Provenance::flats;
  return m;
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
  if (bases.empty()) fail(Errc::bad_parameters, "empty basis family");
  bases = sorted_unique(std::move(bases));
  const Subset ground = Subset::full_set(n);
  const int r = bases.front().count();
  std::unordered_map<std::uint64_t, bool> basis_set;
  for (Subset b : bases) {
    if (!b.subset_of(ground)) fail(Errc::index_out_of_range, "basis " + b.to_string() + " not inside ground set");
    if (b.count() != r) fail(Errc::bad_parameters, "bases are not equicardinal");
    basis_set[b.bits] = true;
  }
  for (Subset b1 : bases)
    for (Subset b2 : bases)
      for (int x : (b1 - b2).elements()) {
        bool found = false;
        for (int y : (b2 - b1).elements())
          if (basis_set.count(b1.without(x).with(y).bits)) {
            found = true;
            break;
          }
        if (!found)
          fail(Errc::exchange_violation, "exchange fails for bases " + b1.to_string() + ", " +
                                             b2.to_string() + " at element " + std::to_string(x));
      }
  auto rank_fn = [&bases](Subset s) {
    int best = 0;
    for (Subset b : bases) best = std::max(best, (s & b).count());
    return best;
  };
  Matroid m(n, flats_from_rank_fn(n, rank_fn), true);
  m.provenance = Provenance::bases;
  return m;
}

Matroid Matroid::from_circuits(int n, std::vector<Subset> circuits) {
  circuits = sorted_unique(std::move(circuits));
  const Subset ground = Subset::full_set(n);
  for (Subset c : circuits) {
    if (!c.subset_of(ground)) fail(Errc::index_out_of_range, "circuit " + c.to_string() + " not inside ground set");
    if (c.empty()) fail(Errc::circuit_violation, "the empty set cannot be a circuit");
  }
  for (Subset c1 : circuits)
    for (Subset c2 : circuits)
      if (c1 != c2 && c1.subset_of(c2))
        fail(Errc::circuit_violation, "circuit " + c1.to_string() + " contained in " + c2.to_string());
  for (Subset c1 : circuits)
    for (Subset c2 : circuits) {
      if (c1.bits >= c2.bits || (c1 & c2).empty()) continue;
      for (int e : (c1 & c2).elements()) {
        Subset target = (c1 | c2).without(e);
        bool found = false;
        for (Subset c3 : circuits)
          if (c3.subset_of(target)) {
            found = true;
            break;
          }
        if (!found)
          fail(Errc::circuit_violation, "elimination fails for " + c1.to_string() + ", " +
                                            c2.to_string() + " at element " + std::to_string(e));
      }
    }
  auto independent = [&circuits](Subset s) {
    for (Subset c : circuits)
      if (c.subset_of(s)) return false;
    return true;
  };
  auto rank_fn = [&](Subset s) {
    Subset i = Subset::empty_set();
    for (int x : s.elements())
      if (independent(i.with(x))) i = i.with(x);
    return i.count();
  };
  Matroid m(n, flats_from_rank_fn(n, rank_fn), true);
  m.provenance = Provenance::circuits;
  return m;
}

Matroid Matroid::from_graph(const Graph& g) {
  const int m = static_cast<int>(g.edges.size());
  if (m > 20) fail(Errc::too_large, "graphic matroid limited to 20 edges");
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices)
      fail(Errc::index_out_of_range, "edge endpoint outside vertex range");
  // P is a flat iff no edge outside P has both endpoints in one component
  // of (V, P).
  std::vector<Subset> flats;
  for (std::uint64_t bits = 0; bits < (1ull << m); ++bits) {
    Dsu dsu(g.vertices);
    for (int e = 0; e < m; ++e)
      if ((bits >> e) & 1u) dsu.unite(g.edges[static_cast<std::size_t>(e)].first,
                                      g.edges[static_cast<std::size_t>(e)].second);
    bool flat = true;
    for (int e = 0; e < m && flat; ++e) {
      if ((bits >> e) & 1u) continue;
      auto [u, v] = g.edges[static_cast<std::size_t>(e)];
      if (dsu.find(u) == dsu.find(v)) flat = false;
    }
    if (flat) flats.push_back(Subset{bits});
  }
  Matroid result(m, std::move(flats), true);
  result.provenance = Provenance::graph;
  result.representable_known = true;
  return result;
}

Matroid Matroid::from_matrix(const FiniteFieldMatrix& mat) {
  if (!is_prime(mat.p)) fail(Errc::not_prime, std::to_string(mat.p) + " is not prime");
  Eigen::MatrixXi entries = mat.entries;
  for (Eigen::Index i = 0; i < entries.rows(); ++i)
    for (Eigen::Index j = 0; j < entries.cols(); ++j)
      entries(i, j) = static_cast<int>(((entries(i, j) % mat.p) + mat.p) % mat.p);
  const int n = static_cast<int>(entries.cols());
  auto rank_fn = [&](Subset s) {
    if (s.empty()) return 0;
    Eigen::MatrixXi sub(entries.rows(), s.count());
    int c = 0;
    for (int j : s.elements()) sub.col(c++) = entries.col(j);
    return rank_mod_p(sub, mat.p);
  };
  Matroid m(n, flats_from_rank_fn(n, rank_fn), true);
  m.provenance = Provenance::matrix;
  m.representable_known = true;
  return m;
}

Matroid Matroid::uniform(int r, int n) {
  if (r < 0 || r > n || n > 16) fail(Errc::bad_parameters, "uniform(r,n) needs 0 <= r <= n <= 16");
  std::vector<Subset> flats;
  for (std::uint64_t bits = 0; bits < (1ull << n); ++bits)
    if (std::popcount(bits) < r) flats.push_back(Subset{bits});
  flats.push_back(Subset::full_set(n));
  Matroid m(n, std::move(flats), true);
  m.name = "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")";
  m.representable_known = true;  // Vandermonde over any large enough field
  return m;
}

Matroid Matroid::boolean(int n) {
  Matroid m = uniform(n, n);
  m.name = "boolean(" + std::to_string(n) + ")";
  return m;
}

Matroid Matroid::fano() {
  FiniteFieldMatrix mat;
  mat.p = 2;
  mat.entries.resize(3, 7);
  // columns: all nonzero vectors of F_2^3
  int col = 0;
  for (int v = 1; v <= 7; ++v) {
    mat.entries(0, col) = v & 1;
    mat.entries(1, col) = (v >> 1) & 1;
    mat.entries(2, col) = (v >> 2) & 1;
    ++col;
  }
  Matroid m = from_matrix(mat);
  m.name = "fano";
  return m;
}

Matroid Matroid::vamos() {
  // pairs {0,1},{2,3},{4,5},{6,7}; five of the six pair-unions are
  // circuits, {4,5,6,7} stays independent
  const Subset l1 = Subset{0b00000011}, l2 = Subset{0b00001100}, l3 = Subset{0b00110000},
               l4 = Subset{0b11000000};
  std::vector<Subset> four_circuits = {l1 | l2, l1 | l3, l1 | l4, l2 | l3, l2 | l4};
  std::vector<Subset> bases;
  for (std::uint64_t bits = 0; bits < (1ull << 8); ++bits) {
    if (std::popcount(bits) != 4) continue;
    Subset s{bits};
    if (std::find(four_circuits.begin(), four_circuits.end(), s) == four_circuits.end())
      bases.push_back(s);
  }
  Matroid m = from_bases(8, std::move(bases));
  m.name = "vamos";
  m.representable_known = false;  // representable over no field
  return m;
}

Matroid Matroid::graphic_k4() {
  Graph g{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  Matroid m = from_graph(g);
  m.name = "k4";
  return m;
}

Matroid Matroid::graphic_c5() {
  Graph g{5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
  Matroid m = from_graph(g);
  m.name = "c5";
  return m;
}

Matroid Matroid::builtin(const std::string& name) {
  if (name == "fano") return fano();
  if (name == "vamos") return vamos();
  if (name == "k4") return graphic_k4();
  if (name == "c5") return graphic_c5();
  int a = 0, b = 0;
  if (std::sscanf(name.c_str(), "uniform(%d,%d)", &a, &b) == 2) return uniform(a, b);
  if (std::sscanf(name.c_str(), "boolean(%d)", &a) == 1) return boolean(a);
  fail(Errc::bad_parameters, "unknown builtin matroid '" + name + "'");
}

Matroid Matroid::dual() const {
  const Subset ground = this->ground();
  auto rank_fn = [this, ground](Subset a) {
    return a.count() - rank_ + rank_of(ground - a);
  };
  Matroid m(n_, flats_from_rank_fn(n_, rank_fn), true);
  m.provenance = Provenance::derived;
  m.representable_known = representable_known;
  if (!name.empty()) m.name = name + "*";
  return m;
}

Matroid Matroid::deletion_impl(const Matroid& src, Subset f, bool validate) {
  if (!f.subset_of(src.ground())) fail(Errc::index_out_of_range, "deletion set outside ground set");
  const Subset keep = src.ground() - f;
  std::vector<int> new_index(static_cast<std::size_t>(src.n_), -1);
  int next = 0;
  for (int x : keep.elements()) new_index[static_cast<std::size_t>(x)] = next++;
  auto compress = [&](Subset s) {
    Subset out;
    for (int x : s.elements()) out = out.with(new_index[static_cast<std::size_t>(x)]);
    return out;
  };
  std::vector<Subset> flats;
  for (Subset x : src.flats_) flats.push_back(compress(x & keep));
  Matroid m(next, sorted_unique(std::move(flats)), validate);
  m.representable_known = src.representable_known;
  return m;
}

Matroid Matroid::contraction_impl(const Matroid& src, Subset f, bool validate) {
  if (!f.subset_of(src.ground())) fail(Errc::index_out_of_range, "contraction set outside ground set");
  const Subset cl = src.closure(f);
  const Subset keep = src.ground() - f;
  std::vector<int> new_index(static_cast<std::size_t>(src.n_), -1);
  int next = 0;
  for (int x : keep.elements()) new_index[static_cast<std::size_t>(x)] = next++;
  auto compress = [&](Subset s) {
    Subset out;
    for (int x : s.elements()) out = out.with(new_index[static_cast<std::size_t>(x)]);
    return out;
  };
  std::vector<Subset> flats;
  for (Subset x : src.flats_)
    if (cl.subset_of(x)) flats.push_back(compress(x - f));
  Matroid m(next, sorted_unique(std::move(flats)), validate);
  m.representable_known = src.representable_known;
  return m;
}

Matroid Matroid::deletion(Subset f) const { return deletion_impl(*this, f, true); }
Matroid Matroid::contraction(Subset f) const { return contraction_impl(*this, f, true); }

Matroid Matroid::direct_sum(const Matroid& a, const Matroid& b) {
  if (a.n_ + b.n_ > 64) fail(Errc::too_large, "direct sum would exceed 64 elements");
  std::vector<Subset> flats;
  flats.reserve(a.flats_.size() * b.flats_.size());
  for (Subset fa : a.flats_)
    for (Subset fb : b.flats_) flats.push_back(Subset{fa.bits | (fb.bits << a.n_)});
  Matroid m(a.n_ + b.n_, std::move(flats), true);
  m.representable_known = a.representable_known && b.representable_known;
  return m;
}

std::pair<Matroid, std::vector<int>> Matroid::simplify() const {
  std::vector<int> element_map(static_cast<std::size_t>(n_), -1);
  if (rank_ == 0) {
    return {Matroid(0, {Subset::empty_set()}, true), element_map};
  }
  const Subset loop_set = loops();
  Matroid base = has_loops() ? contraction_impl(*this, loop_set, false) : *this;
  std::vector<int> base_index(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int x = 0; x < n_; ++x)
    if (!loop_set.contains(x)) base_index[static_cast<std::size_t>(x)] = next++;

  const std::vector<Subset>& classes = base.flats_by_rank_[1];
  std::vector<int> class_of(static_cast<std::size_t>(base.n_), -1);
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (int x : classes[c].elements()) class_of[static_cast<std::size_t>(x)] = static_cast<int>(c);

  std::vector<Subset> flats;
  for (Subset x : base.flats_) {
    Subset out;
    for (int e : x.elements()) out = out.with(class_of[static_cast<std::size_t>(e)]);
    flats.push_back(out);
  }
  flats = sorted_unique(std::move(flats));
  MHODGE_CHECK(flats.size() == base.flats_.size(), "simplification must preserve the flat lattice");
  Matroid geometry(static_cast<int>(classes.size()), std::move(flats), true);
  geometry.representable_known = representable_known;
  if (!name.empty()) geometry.name = name + "~";
  for (int x = 0; x < n_; ++x)
    if (!loop_set.contains(x))
      element_map[static_cast<std::size_t>(x)] =
          class_of[static_cast<std::size_t>(base_index[static_cast<std::size_t>(x)])];
  return {std::move(geometry), std::move(element_map)};
}

Matroid Matroid::truncate(int k) const {
  if (k < 0 || k > rank_ - 2) fail(Errc::bad_parameters, "truncate(k) needs 0 <= k <= rank-2");
  std::vector<Subset> flats;
  for (std::size_t i = 0; i < flats_.size(); ++i)
    if (flat_ranks_[i] <= k + 1) flats.push_back(flats_[i]);
  flats.push_back(ground());
  Matroid m(n_, std::move(flats), true);
  m.representable_known = false;  // truncation does not preserve representability evidence
  return m;
}

Matroid free_extension(const Matroid& src) {
  const int n = src.size();
  if (n >= 64) fail(Errc::too_large, "free extension would exceed 64 elements");
  const int r = src.rank();
  auto rank_fn = [&src, r, n](Subset s) {
    Subset old{s.bits & ~(1ull << n)};
    int base = src.rank_of(old);
    if (s.contains(n)) return base < r ? base + 1 : base;
    return base;
  };
  Matroid m = Matroid::from_flats(n + 1, flats_from_rank_fn(n + 1, rank_fn));
  m.provenance = Provenance::derived;
  return m;
}

Matroid Matroid::free_coextension() const {
  Matroid m = free_extension(dual()).dual();
  if (!name.empty()) m.name = name + "+";
  m.representable_known = false;
  return m;
}

}  // namespace mhodge
