// BG as a twisted Cartesian product BK ×_τ BL for a short exact sequence
// 1 -> K -> G -> L -> 1 of simplicial groups.
//
// Given a pseudo-cross section σ: L -> G of π with σ(1) = 1, the Kan loop
// group ΩBL acts on BK, and the map Ψ: BG -> BK ×_{τ^{BL}} BL built from the
// bijection α(g) = (g σ(πg)^{-1}, πg) is an isomorphism of simplicial sets.
// When σ is multiplicative the structure group reduces to L and Ψ becomes
// Φ: BG -> BK ×_{τ_L} BL.
//
// Index conventions. Products of the form
//     ∂_0^{m-1} l_a · ∂_0^{m-2} l_{a-1} ⋯ ∂_0 l_{a-m+2} · l_{a-m+1}
// are "leading products" of m factors starting at l_a; they live in level
// a-m+1 and satisfy P(m+1) = ∂_0 P(m) · l_{a-m}. With them, for
// 𝒍 = [l_{n-1}|...|l_0] the Ψ factors are P_j = leading(l, n-1, j), and for a
// loop generator ⟨l_n|...|l_0⟩ the action factors are Q_j = leading(l, n, j+1)
// and R_j = leading(l, n-1, j). An empty leading product contributes no
// factor at all.

#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "simpfib/bar.hpp"
#include "simpfib/loop.hpp"
#include "simpfib/report.hpp"
#include "simpfib/ses.hpp"
#include "simpfib/twisting.hpp"

namespace simpfib {

class FibrationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Levelwise maps σ_n: L_n -> G_n.
class PseudoSection {
 public:
  PseudoSection() = default;
  explicit PseudoSection(std::vector<std::vector<Elem>> tables)
      : tables_(std::move(tables)) {}

  /// The same table on every level 0..cutoff.
  static PseudoSection uniform(std::vector<Elem> table, int cutoff) {
    return PseudoSection(std::vector<std::vector<Elem>>(cutoff + 1, table));
  }

  /// Lifts the minimal-id coset section of each π_n and normalises it. On a
  /// constant sequence every structure map is the identity, so this is a
  /// pseudo-cross section.
  static PseudoSection from_cosets(ShortExactSequence const& ses);

  int cutoff() const noexcept { return static_cast<int>(tables_.size()) - 1; }
  Elem operator()(int n, Elem l) const { return tables_[n][l]; }
  std::vector<std::vector<Elem>> const& tables() const noexcept {
    return tables_;
  }

 private:
  std::vector<std::vector<Elem>> tables_;
};

/// Records "projection" (πσ = id), "normalized" (σ(1) = 1), "face"
/// (∂_i σ = σ ∂_i for i >= 1) and "degeneracy" (s_i σ = σ s_i), per level.
std::vector<CheckRecord> validate_section(ShortExactSequence const& ses,
                                          PseudoSection const& section);

/// Whether σ is multiplicative at every level.
bool is_multiplicative(ShortExactSequence const& ses,
                       PseudoSection const& section);

/// α(g) = (k, l) with k read back in K.
struct AlphaPair {
  Elem k;
  Elem l;
  bool operator==(AlphaPair const&) const = default;
};

/// A simplex (f, b) of BK ×_τ BL.
struct TwistedBar {
  BarSimplex fibre;
  BarSimplex base;
  bool operator==(TwistedBar const&) const = default;
};

class Fibration {
 public:
  /// Spaces are built up to dimension `cutoff`; the sequence and section
  /// must reach level cutoff - 1. Throws FibrationError otherwise.
  Fibration(SesPtr ses, PseudoSection section, int cutoff);

  int cutoff() const noexcept { return cutoff_; }
  ShortExactSequence const& ses() const noexcept { return *ses_; }
  PseudoSection const& section() const noexcept { return section_; }
  bool multiplicative() const noexcept { return multiplicative_; }

  BarPtr const& bar_g() const noexcept { return bar_g_; }
  BarPtr const& bar_k() const noexcept { return bar_k_; }
  BarPtr const& bar_l() const noexcept { return bar_l_; }
  std::shared_ptr<const LoopGroup> const& loops() const noexcept {
    return loops_;
  }

  Elem iota(int n, Elem k) const { return ses_->inclusion[n][k]; }
  Elem pi(int n, Elem g) const { return ses_->projection[n][g]; }
  /// ι^{-1}(g), throwing FibrationError (with `context`) when g ∉ ι(K).
  Elem to_kernel(int n, Elem g, std::string_view context) const;

  AlphaPair alpha(int n, Elem g) const;
  Elem alpha_inverse(int n, AlphaPair pair) const;

  /// α(∂_0 g · g') against (∂_0 k ∂_0σ(l) k' σ(l') σ(∂_0 l · l')^{-1}, ∂_0 l · l')
  /// for g in G_n and g' in G_{n-1}, compared in G.
  bool alpha_twist_identity(int n, Elem g, Elem g_prime) const;

  /// The leading product of `count` factors of `ls` starting at l_start,
  /// an element of L_{start-count+1}. count = 0 gives the identity of
  /// L_{start+1}.
  Elem leading_product(BarSimplex const& ls, int start, int count) const;

  /// Factors (A_j, B_j) with ⟨𝒍⟩·𝒌 having entry A_j k_{n-j} B_j at position
  /// n - j, j = 1..n, for the generator 𝒍 = [l_n|...|l_0] of (ΩBL)_n. Entry
  /// j-1 of the result belongs to j.
  std::vector<std::pair<Elem, Elem>> generator_flanks(
      BarSimplex const& generator) const;

  /// ⟨𝒍⟩ · 𝒌 (sign +1) or ⟨𝒍⟩^{-1} · 𝒌 (sign -1) for 𝒍 in BL_{n+1} and 𝒌 in
  /// BK_n.
  BarSimplex act_generator(BarSimplex const& generator, BarSimplex const& k,
                           int sign = +1) const;
  /// w · 𝒌, letters applied right to left.
  BarSimplex act(LoopWord const& w, BarSimplex const& k) const;

  TwistedBar psi(BarSimplex const& g) const;
  BarSimplex psi_inverse(TwistedBar const& t) const;

  /// l * k = σ(l) k σ(l)^{-1}, read back in K_n.
  Elem conjugate(int n, Elem l, Elem k) const;
  /// l · 𝒌 = [∂_0 l * k_{n-1} | ∂_0^2 l * k_{n-2} | ... | ∂_0^n l * k_0].
  /// Throws FibrationError unless σ is multiplicative.
  BarSimplex semidirect_action(Elem l, int n, BarSimplex const& k) const;
  /// Throws FibrationError unless σ is multiplicative.
  TwistedBar phi(BarSimplex const& g) const;

  /// BK ×_{τ^{BL}} BL with ΩBL acting through `act`. The returned spaces
  /// and maps stay valid after this object is destroyed.
  std::shared_ptr<const TwistedProduct> loop_product() const;
  /// BK ×_{τ_L} BL with L acting through `semidirect_action`.
  std::shared_ptr<const TwistedProduct> semidirect_product() const;

  /// Ψ and Φ as maps of ranks, for the generic map checks.
  SimplicialMap psi_map() const;
  SimplicialMap phi_map() const;

  std::string format(TwistedBar const& t) const;

 private:
  Elem sigma(int n, Elem l) const { return section_(n, l); }
  /// A heap copy for closures that outlive this object.
  std::shared_ptr<const Fibration> detached() const;

  SesPtr ses_;
  PseudoSection section_;
  int cutoff_;
  bool multiplicative_ = false;
  std::vector<std::vector<Elem>> kernel_index_;  // [n][g] -> k or kNotInKernel
  BarPtr bar_g_, bar_k_, bar_l_;
  std::shared_ptr<const LoopGroup> loops_;
  mutable std::shared_ptr<const TwistedProduct> loop_product_;
  mutable std::shared_ptr<const TwistedProduct> semidirect_product_;
};

struct VerifyOptions {
  int max_dim = 3;
  /// Loop degrees on which the ΩBL action axioms are checked; clamped to
  /// max_dim - 1.
  int action_dim = 3;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

/// Runs every check of the main theorem (and of its semidirect form when σ
/// is multiplicative) and bundles the records. Failures are data.
Report verify_theorem(Fibration const& fibration, VerifyOptions const& options);

}  // namespace simpfib
