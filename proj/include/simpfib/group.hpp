// Finite groups given by multiplication tables, homomorphisms between them,
// and the small factory of groups used throughout the library.

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace simpfib {

/// Dense element id inside one finite group.
using Elem = std::uint32_t;

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Outcome of the associativity scan run when a table is validated.
struct AssociativityReport {
  bool associative = true;
  bool exhaustive = true;         // false when random triples were sampled
  std::uint64_t triples_checked = 0;
  std::optional<std::array<Elem, 3>> counterexample;
};

/// Orders up to this bound get an exhaustive associativity scan; larger
/// tables are checked on `kAssociativitySamples` seeded random triples.
inline constexpr std::size_t kExhaustiveAssociativityOrder = 64;
inline constexpr std::uint64_t kAssociativitySamples = 10'000;

AssociativityReport check_associativity(std::span<const Elem> table,
                                        std::size_t order);

/// A finite group stored as a row-major multiplication table over the ids
/// 0..order-1. Immutable after construction.
class FiniteGroup {
 public:
  /// Validates the table (closure, identity, inverses, associativity) and
  /// throws GroupError on any violation. Empty `labels` means "0".."n-1".
  FiniteGroup(std::vector<Elem> table, std::vector<std::string> labels = {});

  std::size_t order() const noexcept { return order_; }
  Elem identity() const noexcept { return identity_; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  std::string const& label(Elem a) const { return labels_[a]; }
  std::optional<Elem> find(std::string_view label) const;
  std::span<const Elem> table() const noexcept { return table_; }
  std::vector<std::string> const& labels() const noexcept { return labels_; }
  AssociativityReport const& associativity() const noexcept {
    return associativity_;
  }

  /// Order of the element `a` (smallest m >= 1 with a^m = 1).
  std::size_t element_order(Elem a) const;

  /// Multiplication tables are compared; labels are display only.
  bool same_table(FiniteGroup const& other) const noexcept {
    return table_ == other.table_;
  }

 private:
  std::size_t order_;
  std::vector<Elem> table_;
  std::vector<Elem> inverse_;
  std::vector<std::string> labels_;
  Elem identity_ = 0;
  AssociativityReport associativity_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// Sorted list of element orders; a cheap isomorphism invariant.
std::vector<std::size_t> order_profile(FiniteGroup const& group);

/// A homomorphism between two finite groups, validated on construction.
class GroupHom {
 public:
  GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image);

  static GroupHom identity(GroupPtr group);

  Elem operator()(Elem a) const { return image_[a]; }
  GroupPtr const& source() const noexcept { return source_; }
  GroupPtr const& target() const noexcept { return target_; }
  std::vector<Elem> const& image() const noexcept { return image_; }

  bool injective() const;
  bool surjective() const;
  std::vector<Elem> kernel() const;

 private:
  GroupPtr source_;
  GroupPtr target_;
  std::vector<Elem> image_;
};

/// Returns the first pair (a, b) with h(ab) != h(a)h(b), if any.
std::optional<std::pair<Elem, Elem>> homomorphism_violation(
    FiniteGroup const& source, FiniteGroup const& target,
    std::span<const Elem> image);

// Factories ----------------------------------------------------------------

/// Z/n with additive labels "0".."n-1", or multiplicative labels
/// "e", "c", "c^2", ... when a symbol is given.
GroupPtr make_cyclic(std::size_t n, std::string_view symbol = {});
GroupPtr make_trivial();

/// Symmetric group on {1..n}, n <= 5. Elements are permutations in
/// lexicographic order of their one-line notation (so id 0 is the identity)
/// and labelled in cycle notation such as "(12)(345)". The product a*b is
/// the composite "first b, then a".
GroupPtr make_symmetric(std::size_t n);

/// Dihedral group of the given order 2m, element r^a s^b has id a + m*b.
GroupPtr make_dihedral(std::size_t order);

/// Element (a, b) has id a * |B| + b.
GroupPtr make_direct_product(GroupPtr a, GroupPtr b);

/// The product of `factors` copies of `group`, tuples encoded mixed-radix
/// with the first coordinate most significant.
GroupPtr make_power(GroupPtr group, std::size_t factors);

/// An action of L on K by automorphisms: action[l][k] = l * k.
using ActionTable = std::vector<std::vector<Elem>>;

/// Trivial action table.
ActionTable trivial_action(FiniteGroup const& k, FiniteGroup const& l);

/// For abelian K and L = Z/m from make_cyclic with m even: the element l
/// acts as inversion applied l times.
ActionTable inversion_action(FiniteGroup const& k, FiniteGroup const& l);

struct SemidirectProduct {
  GroupPtr group;
  GroupHom inclusion;   // k -> (k, 1)
  GroupHom projection;  // (k, l) -> l
  GroupHom section;     // l -> (1, l), multiplicative
};

/// K ⋊ L on pairs (k, l) with (k,l)(k',l') = (k (l*k'), l l'). The pair
/// (k, l) has id k * |L| + l. Throws GroupError if `action` is not a
/// homomorphism L -> Aut(K).
SemidirectProduct make_semidirect(GroupPtr k, GroupPtr l,
                                  ActionTable const& action);

/// A normal subgroup given by its element ids in G, realised as a group.
struct Quotient {
  GroupPtr kernel;     // the subgroup, elements in ascending G-id order
  GroupPtr quotient;   // cosets ordered by their minimal representative
  GroupHom inclusion;  // kernel -> G
  GroupHom projection; // G -> quotient
};

/// Coset enumeration. Throws GroupError if `elements` is not a normal
/// subgroup.
Quotient quotient_by(GroupPtr g, std::vector<Elem> elements);

/// A set-theoretic section of a surjection: `rho` takes the minimal id in
/// each fibre, `sigma` is the normalised version sigma(l) = rho(l) rho(1)^-1.
struct CosetSection {
  std::vector<Elem> rho;
  std::vector<Elem> sigma;
};

CosetSection coset_section(GroupHom const& projection);

/// True if the table `section` is a homomorphism L -> G.
bool is_multiplicative(FiniteGroup const& l, FiniteGroup const& g,
                       std::span<const Elem> section);

}  // namespace simpfib
