// Truncated simplicial sets, simplicial groups and simplicial maps, with
// exhaustive validators for the simplicial identities.
//
// Every simplicial set here is presented through ranks: the n-simplices are
// the integers 0..count(n)-1 and the structure maps act on those ranks. A
// concrete space (a classifying space, a twisted product) decides how a rank
// encodes its simplex and how to print it.

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "simpfib/group.hpp"
#include "simpfib/report.hpp"

namespace simpfib {

using Index = std::uint64_t;

class SimplicialError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A simplicial set known up to dimension cutoff(). Faces are defined on
/// n-simplices for 1 <= n <= cutoff, degeneracies for n < cutoff.
class SimplicialSet {
 public:
  virtual ~SimplicialSet() = default;

  virtual int cutoff() const = 0;
  virtual Index count(int n) const = 0;
  virtual Index face(int i, int n, Index x) const = 0;
  virtual Index degeneracy(int i, int n, Index x) const = 0;
  virtual std::string format(int n, Index x) const = 0;
};

using SpacePtr = std::shared_ptr<const SimplicialSet>;

/// True iff the space has exactly one vertex.
bool is_reduced(SimplicialSet const& space);

/// True iff x is s_i y for some i; y is then ∂_i x. Needs n <= cutoff.
bool is_degenerate(SimplicialSet const& space, int n, Index x);

/// Checks the five families of simplicial identities on every simplex of
/// dimension <= max_dim (the cutoff when negative), one record per family
/// and dimension:
///   face-face      ∂_i ∂_j = ∂_{j-1} ∂_i                 (i < j)
///   degen-degen    s_i s_j = s_{j+1} s_i                  (i <= j)
///   face-degen-lo  ∂_i s_j = s_{j-1} ∂_i                  (i < j)
///   face-degen-id  ∂_j s_j = ∂_{j+1} s_j = id
///   face-degen-hi  ∂_i s_j = s_j ∂_{i-1}                  (i > j + 1)
std::vector<CheckRecord> check_simplicial_identities(SimplicialSet const& space,
                                                     int max_dim = -1);

/// Constant simplicial set on `points` vertices.
class DiscreteSet final : public SimplicialSet {
 public:
  DiscreteSet(Index points, int cutoff) : points_(points), cutoff_(cutoff) {}

  int cutoff() const override { return cutoff_; }
  Index count(int) const override { return points_; }
  Index face(int, int, Index x) const override { return x; }
  Index degeneracy(int, int, Index x) const override { return x; }
  std::string format(int, Index x) const override;

 private:
  Index points_;
  int cutoff_;
};

/// All structure maps materialised as tables. Useful as a cache for spaces
/// whose structure maps are expensive, and for building deliberately broken
/// spaces in tests.
class TabulatedSet final : public SimplicialSet {
 public:
  explicit TabulatedSet(SimplicialSet const& source);

  int cutoff() const override { return cutoff_; }
  Index count(int n) const override { return counts_.at(n); }
  Index face(int i, int n, Index x) const override {
    return faces_[n][i][x];
  }
  Index degeneracy(int i, int n, Index x) const override {
    return degeneracies_[n][i][x];
  }
  std::string format(int n, Index x) const override { return labels_[n][x]; }

  /// Copy with ∂_i of the n-simplex x redirected to `value`.
  TabulatedSet with_face(int i, int n, Index x, Index value) const;

 private:
  int cutoff_;
  std::vector<Index> counts_;
  std::vector<std::vector<std::vector<Index>>> faces_;         // [n][i][x]
  std::vector<std::vector<std::vector<Index>>> degeneracies_;  // [n][i][x]
  std::vector<std::vector<std::string>> labels_;
};

/// A simplicial group truncated at cutoff(): one finite group per level and
/// homomorphisms ∂_i: G_n -> G_{n-1}, s_i: G_n -> G_{n+1}.
class SimplicialGroup {
 public:
  /// faces[n][i] is the table of ∂_i on level n (n >= 1), degeneracies[n][i]
  /// the table of s_i on level n (n < cutoff). Every table is checked to be
  /// a homomorphism; the simplicial identities are checked separately.
  SimplicialGroup(std::vector<GroupPtr> levels,
                  std::vector<std::vector<std::vector<Elem>>> faces,
                  std::vector<std::vector<std::vector<Elem>>> degeneracies);

  /// Every level is `group`, every structure map the identity.
  static std::shared_ptr<const SimplicialGroup> constant(GroupPtr group,
                                                         int cutoff);

  /// Level n is group^(n+1); ∂_i drops coordinate i and s_i repeats it.
  /// This is the 0-coskeleton of the group, a simplicial group whose ∂_0 is
  /// far from the identity.
  static std::shared_ptr<const SimplicialGroup> coskeleton(GroupPtr group,
                                                           int cutoff);

  int cutoff() const noexcept { return static_cast<int>(levels_.size()) - 1; }
  FiniteGroup const& level(int n) const { return *levels_.at(n); }
  GroupPtr const& level_ptr(int n) const { return levels_.at(n); }

  Elem face(int i, int n, Elem g) const { return faces_[n][i][g]; }
  Elem degeneracy(int i, int n, Elem g) const {
    return degeneracies_[n][i][g];
  }
  /// ∂_0 applied `times` times to an element of level n.
  Elem face0_power(int times, int n, Elem g) const;

  Elem mul(int n, Elem a, Elem b) const { return levels_[n]->mul(a, b); }
  Elem inv(int n, Elem a) const { return levels_[n]->inv(a); }
  Elem one(int n) const { return levels_[n]->identity(); }

  /// True iff every level is constant with identity structure maps.
  bool is_constant() const noexcept { return constant_; }

 private:
  std::vector<GroupPtr> levels_;
  std::vector<std::vector<std::vector<Elem>>> faces_;
  std::vector<std::vector<std::vector<Elem>>> degeneracies_;
  bool constant_ = false;
};

using SimplicialGroupPtr = std::shared_ptr<const SimplicialGroup>;

/// The underlying simplicial set of a simplicial group.
class UnderlyingSet final : public SimplicialSet {
 public:
  explicit UnderlyingSet(SimplicialGroupPtr group) : group_(std::move(group)) {}

  int cutoff() const override { return group_->cutoff(); }
  Index count(int n) const override { return group_->level(n).order(); }
  Index face(int i, int n, Index x) const override {
    return group_->face(i, n, static_cast<Elem>(x));
  }
  Index degeneracy(int i, int n, Index x) const override {
    return group_->degeneracy(i, n, static_cast<Elem>(x));
  }
  std::string format(int n, Index x) const override {
    return group_->level(n).label(static_cast<Elem>(x));
  }

 private:
  SimplicialGroupPtr group_;
};

/// Checks that every ∂_i and s_i of a simplicial group is a homomorphism
/// and that ∂_i, s_i send identities to identities.
std::vector<CheckRecord> check_simplicial_group(SimplicialGroup const& group);

/// A levelwise map between truncated simplicial sets.
struct SimplicialMap {
  SpacePtr source;
  SpacePtr target;
  std::function<Index(int n, Index x)> component;
};

enum class MapKind {
  simplicial,  // commutes with every face and degeneracy
  pseudo,      // fails only to commute with ∂_0
  neither,
};

struct MapCheck {
  std::vector<CheckRecord> records;  // "face[i]" and "degeneracy" per dim
  MapKind kind = MapKind::simplicial;
};

/// Checks f ∂_i = ∂_i f and f s_i = s_i f on every simplex of dimension
/// <= max_dim, one record per face index and dimension plus one record per
/// dimension for degeneracies.
MapCheck check_simplicial_map(SimplicialMap const& map, int max_dim = -1);

}  // namespace simpfib
