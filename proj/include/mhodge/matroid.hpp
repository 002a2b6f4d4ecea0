#pragma once

#include <Eigen/Core>

#include <functional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mhodge/subset.hpp"

namespace mhodge {

class IntPolynomial;

// Finite multigraph; parallel edges and self-loops allowed. Edges are the
// ground set of the associated graphic matroid, indexed by position.
struct Graph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;

  int components() const;  // counts isolated vertices too
};

// Matrix over the prime field F_p; columns are the ground set of the
// associated representable matroid.
struct FiniteFieldMatrix {
  long long p = 2;
  Eigen::MatrixXi entries;  // rows x cols, reduced mod p

  int rows() const { return static_cast<int>(entries.rows()); }
  int cols() const { return static_cast<int>(entries.cols()); }
};

bool is_prime(long long p);

enum class Provenance { flats, bases, circuits, graph, matrix, derived };

std::string to_string(Provenance p);

// A matroid given by the complete list of its flats, grouped by rank.
// Construction always validates the two flat axioms: the family is closed
// under pairwise intersection, and for every flat P != E the minimal flats
// strictly containing P cover E. Instances are immutable; every operation
// below is a pure function, so concurrent reads need no synchronization.
class Matroid {
 public:
  // --- constructors -----------------------------------------------------
  static Matroid from_flats(int n, std::vector<Subset> flats);
  static Matroid from_bases(int n, std::vector<Subset> bases);
  static Matroid from_circuits(int n, std::vector<Subset> circuits);
  static Matroid from_graph(const Graph& g);
  static Matroid from_matrix(const FiniteFieldMatrix& m);

  // Canonical instances. `builtin` accepts "uniform(r,n)", "boolean(n)",
  // "fano", "vamos", "k4", "c5".
  static Matroid uniform(int r, int n);
  static Matroid boolean(int n);
  static Matroid fano();
  static Matroid vamos();
  static Matroid graphic_k4();
  static Matroid graphic_c5();
  static Matroid builtin(const std::string& name);

  // --- basic queries ----------------------------------------------------
  int size() const { return n_; }
  int rank() const { return rank_; }
  Subset ground() const { return Subset::full_set(n_); }
  const std::vector<Subset>& flats() const { return flats_; }  // sorted by (rank, bits)
  const std::vector<std::vector<Subset>>& flats_by_rank() const { return flats_by_rank_; }
  int num_flats() const { return static_cast<int>(flats_.size()); }
  bool is_flat(Subset s) const { return flat_index_.count(s.bits) > 0; }
  int flat_rank(Subset f) const;

  Subset closure(Subset s) const;
  int rank_of(Subset s) const;
  int corank_of(Subset s) const { return rank_ - rank_of(s); }
  bool is_independent(Subset s) const { return rank_of(s) == s.count(); }

  Subset loops() const { return flats_.front(); }  // bottom flat <closure of empty>
  bool has_loops() const { return !loops().empty(); }
  // Loop-free with singleton rank-1 classes (a combinatorial geometry).
  bool is_simple() const;

  std::vector<Subset> independent_sets() const;
  std::vector<Subset> bases() const;
  std::vector<Subset> circuits() const;
  // f_k = number of independent k-subsets, k = 0..rank.
  std::vector<long long> f_vector() const;

  // --- standard operations ----------------------------------------------
  Matroid dual() const;
  // Deletes F: the restriction M|(E \ F) with elements re-indexed in
  // increasing order.
  Matroid deletion(Subset f) const;
  Matroid restriction(Subset f) const { return deletion(ground() - f); }
  Matroid contraction(Subset f) const;
  static Matroid direct_sum(const Matroid& a, const Matroid& b);
  // Simplification: drops loops, merges parallel classes. Returns the
  // combinatorial geometry plus the element map (loops map to -1).
  std::pair<Matroid, std::vector<int>> simplify() const;
  // Keeps flats of rank <= k+1 together with E; the result has rank k+2.
  // Requires 0 <= k <= rank-2.
  Matroid truncate(int k) const;
  Matroid free_coextension() const;

  bool same_flats(const Matroid& o) const { return n_ == o.n_ && flats_ == o.flats_; }

  // --- metadata -----------------------------------------------------------
  std::string name;
  Provenance provenance = Provenance::derived;
  // True when a representation is known to exist (uniform, boolean, graphic,
  // F_p-matrix constructions, and duals of such).
  bool representable_known = false;

 private:
  Matroid(int n, std::vector<Subset> flats, bool validate);

  static Matroid deletion_impl(const Matroid& m, Subset f, bool validate);
  static Matroid contraction_impl(const Matroid& m, Subset f, bool validate);
  friend IntPolynomial char_poly_deletion_contraction(const Matroid&);

  int n_ = 0;
  int rank_ = 0;
  std::vector<Subset> flats_;
  std::vector<int> flat_ranks_;
  std::vector<std::vector<Subset>> flats_by_rank_;
  std::unordered_map<std::uint64_t, int> flat_index_;
};

// Free extension: adds one element lying as generally as possible (it
// extends every independent set of rank below rank(M)).
Matroid free_extension(const Matroid& m);

}  // namespace mhodge
