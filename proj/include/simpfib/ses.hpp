#pragma once

#include <memory>
#include <vector>

#include "simpfib/group.hpp"
#include "simpfib/report.hpp"
#include "simpfib/simplicial.hpp"

namespace simpfib {

/// 1 -> K -> G -> L -> 1, levelwise, up to a common cutoff.
struct ShortExactSequence {
  SimplicialGroupPtr kernel;    // K
  SimplicialGroupPtr group;     // G
  SimplicialGroupPtr quotient;  // L
  std::vector<std::vector<Elem>> inclusion;   // ι_n: K_n -> G_n
  std::vector<std::vector<Elem>> projection;  // π_n: G_n -> L_n

  int cutoff() const noexcept { return group->cutoff(); }

  /// The constant simplicial sequence on an exact sequence of groups.
  static ShortExactSequence constant(GroupHom const& inclusion,
                                     GroupHom const& projection, int cutoff);
  /// The levelwise 0-coskeleton of an exact sequence of groups; see
  /// SimplicialGroup::coskeleton.
  static ShortExactSequence coskeleton(GroupHom const& inclusion,
                                       GroupHom const& projection, int cutoff);
};

using SesPtr = std::shared_ptr<const ShortExactSequence>;

/// Checks, level by level: ι and π are homomorphisms, ι is injective, π is
/// surjective, image ι = ker π (hence normal), and ι, π commute with all
/// face and degeneracy maps. Also validates K, G, L as simplicial groups.
std::vector<CheckRecord> validate_ses(ShortExactSequence const& ses);

}  // namespace simpfib
