// The Kan loop group ΩX of a reduced simplicial set X.
//
// (ΩX)_n is the free group on X_{n+1} modulo the relations s_0 y = 1 for
// y in X_n. Since the relations only kill generators, the quotient is free on
// the generators outside the image of s_0, and a word's canonical form is
// obtained by deleting s_0-degenerate letters and then freely reducing.

#pragma once

#include <string>
#include <vector>

#include "simpfib/bar.hpp"
#include "simpfib/report.hpp"
#include "simpfib/simplicial.hpp"

namespace simpfib {

struct Letter {
  Index generator;  // rank of an (n+1)-simplex of X
  int sign;         // +1 or -1

  bool operator==(Letter const&) const = default;
};

/// An element of (ΩX)_n in canonical form. Construct through LoopGroup.
struct LoopWord {
  int degree = 0;
  std::vector<Letter> letters;

  bool is_identity() const noexcept { return letters.empty(); }
  bool operator==(LoopWord const&) const = default;
};

class LoopGroup {
 public:
  /// Throws SimplicialError if X is not reduced.
  explicit LoopGroup(SpacePtr space);

  SimplicialSet const& space() const noexcept { return *space_; }
  SpacePtr const& space_ptr() const noexcept { return space_; }
  /// Words of degree n need X up to n+1.
  int cutoff() const noexcept { return space_->cutoff() - 1; }

  /// Whether the (n+1)-simplex x is s_0 of an n-simplex.
  bool is_trivial_generator(int n, Index x) const;

  LoopWord identity(int n) const;
  /// [x] for x in X_{n+1}; the identity when x is s_0-degenerate.
  LoopWord generator(int n, Index x, int sign = +1) const;
  /// Deletes s_0-degenerate letters, then cancels adjacent inverse pairs.
  LoopWord canonicalize(int n, std::vector<Letter> letters) const;

  LoopWord multiply(LoopWord const& a, LoopWord const& b) const;
  LoopWord invert(LoopWord const& a) const;

  /// ∂_0[x] = [∂_0 x]^{-1}[∂_1 x], ∂_i[x] = [∂_{i+1} x] for i >= 1,
  /// extended to words as a homomorphism.
  LoopWord face(int i, LoopWord const& w) const;
  /// s_i[x] = [s_{i+1} x], extended as a homomorphism.
  LoopWord degeneracy(int i, LoopWord const& w) const;

  /// The canonical twisting function x -> [x] on X_n, n >= 1.
  LoopWord twist(int n, Index x) const;

  /// Generator letters "+x" / "-x" joined by "·"; the identity is "ε".
  std::string format(LoopWord const& w) const;

  /// Every generator of (ΩX)_n that survives the relations.
  std::vector<Index> free_generators(int n) const;

 private:
  void require_degree(int n, int needed_space_dim) const;

  SpacePtr space_;
};

/// The canonical morphism ΩBG -> G, <g_n|...|g_0> -> g_n^{-1}, extended
/// multiplicatively. Throws SimplicialError unless the loop group's space
/// is a BarConstruction.
Elem loop_to_group(LoopGroup const& loops, LoopWord const& w);

/// Checks that ΩBG -> G is a homomorphism on all pairs of generators
/// ("homomorphism") and commutes with every face ("face") and degeneracy
/// ("degeneracy") on generators, in degrees 0..max_degree.
std::vector<CheckRecord> check_canonical_morphism(LoopGroup const& loops,
                                                  int max_degree);

}  // namespace simpfib
