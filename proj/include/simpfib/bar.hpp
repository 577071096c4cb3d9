// The classifying space BG of a simplicial group G (the W-bar construction)
// and its canonical twisting function.

#pragma once

#include <string>
#include <vector>

#include "simpfib/simplicial.hpp"

namespace simpfib {

/// An n-simplex [g_{n-1}|...|g_0] of BG. entries[j] is g_j, an element of
/// level j, so the top entry is entries.back(). The 0-simplex is [].
struct BarSimplex {
  std::vector<Elem> entries;

  int degree() const noexcept { return static_cast<int>(entries.size()); }
  Elem top() const { return entries.back(); }
  Elem& operator[](int j) { return entries[j]; }
  Elem operator[](int j) const { return entries[j]; }

  bool operator==(BarSimplex const&) const = default;
  auto operator<=>(BarSimplex const&) const = default;
};

/// Builds [entries given top first], the way simplices are written.
BarSimplex bar(std::initializer_list<Elem> top_first);

class BarConstruction final : public SimplicialSet {
 public:
  /// BG up to dimension `cutoff`; needs the group up to level cutoff - 1.
  BarConstruction(SimplicialGroupPtr group, int cutoff);

  SimplicialGroup const& group() const noexcept { return *group_; }
  SimplicialGroupPtr const& group_ptr() const noexcept { return group_; }

  // Rank-based view. Ranks are lexicographic in (g_{n-1}, ..., g_0).
  int cutoff() const override { return cutoff_; }
  Index count(int n) const override { return counts_.at(n); }
  Index face(int i, int n, Index x) const override;
  Index degeneracy(int i, int n, Index x) const override;
  std::string format(int n, Index x) const override;

  Index rank(BarSimplex const& g) const;
  BarSimplex unrank(int n, Index x) const;

  /// ∂_0 drops the top entry, ∂_n applies faces and drops g_0, and a middle
  /// face ∂_i merges ∂_0 g_{n-i} with g_{n-i-1}, applying ∂_{i-1},...,∂_1 to
  /// the entries above the merge.
  BarSimplex face(int i, BarSimplex const& g) const;
  /// Inserts 1_{n-i} at position n-i and applies s_{i-1},...,s_0 above it.
  BarSimplex degeneracy(int i, BarSimplex const& g) const;
  /// The canonical twisting function: inverse of the top entry, in G_{n-1}.
  Elem twist(BarSimplex const& g) const;

  /// A simplex is s_0-degenerate exactly when its top entry is 1.
  bool is_s0_degenerate(BarSimplex const& g) const;

  std::string format(BarSimplex const& g) const;

  /// Throws SimplicialError unless g is a valid simplex of this space.
  void validate(BarSimplex const& g) const;

 private:
  SimplicialGroupPtr group_;
  int cutoff_;
  std::vector<Index> counts_;
};

using BarPtr = std::shared_ptr<const BarConstruction>;

inline BarPtr make_bar(SimplicialGroupPtr group, int cutoff) {
  return std::make_shared<const BarConstruction>(std::move(group), cutoff);
}

}  // namespace simpfib
