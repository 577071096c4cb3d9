// Twisting functions, simplicial group actions, twisted Cartesian products
// F ×_τ B and pseudo-cross sections of their projection.
//
// Structure groups come in two flavours: simplicial groups with finite levels
// (values are element ids) and Kan loop groups (values are LoopWords). Both
// are wrapped in a small "carrier" type exposing the group operations and
// structure maps degree by degree, and the validators are templates over it.

#pragma once

#include <concepts>
#include <fmt/format.h>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "simpfib/bar.hpp"
#include "simpfib/check.hpp"
#include "simpfib/loop.hpp"
#include "simpfib/rng.hpp"
#include "simpfib/simplicial.hpp"

namespace simpfib {

template <class C>
concept GroupCarrier = requires(C const& c, typename C::value_type const& a,
                                int i, int n) {
  { c.identity(n) } -> std::convertible_to<typename C::value_type>;
  { c.multiply(n, a, a) } -> std::convertible_to<typename C::value_type>;
  { c.invert(n, a) } -> std::convertible_to<typename C::value_type>;
  { c.face(i, n, a) } -> std::convertible_to<typename C::value_type>;
  { c.degeneracy(i, n, a) } -> std::convertible_to<typename C::value_type>;
  { c.format(n, a) } -> std::convertible_to<std::string>;
  { c.cutoff() } -> std::convertible_to<int>;
  { a == a } -> std::convertible_to<bool>;
};

/// A simplicial group with finite levels as a carrier.
class FiniteCarrier {
 public:
  using value_type = Elem;

  explicit FiniteCarrier(SimplicialGroupPtr group) : group_(std::move(group)) {}

  SimplicialGroup const& group() const noexcept { return *group_; }
  int cutoff() const { return group_->cutoff(); }
  Elem identity(int n) const { return group_->one(n); }
  Elem multiply(int n, Elem a, Elem b) const { return group_->mul(n, a, b); }
  Elem invert(int n, Elem a) const { return group_->inv(n, a); }
  Elem face(int i, int n, Elem a) const { return group_->face(i, n, a); }
  Elem degeneracy(int i, int n, Elem a) const {
    return group_->degeneracy(i, n, a);
  }
  std::string format(int n, Elem a) const { return group_->level(n).label(a); }

 private:
  SimplicialGroupPtr group_;
};

/// The Kan loop group ΩX as a carrier.
class LoopCarrier {
 public:
  using value_type = LoopWord;

  explicit LoopCarrier(std::shared_ptr<const LoopGroup> loops)
      : loops_(std::move(loops)) {}

  LoopGroup const& loops() const noexcept { return *loops_; }
  int cutoff() const { return loops_->cutoff(); }
  LoopWord identity(int n) const { return loops_->identity(n); }
  LoopWord multiply(int, LoopWord const& a, LoopWord const& b) const {
    return loops_->multiply(a, b);
  }
  LoopWord invert(int, LoopWord const& a) const { return loops_->invert(a); }
  LoopWord face(int i, int, LoopWord const& a) const {
    return loops_->face(i, a);
  }
  LoopWord degeneracy(int i, int, LoopWord const& a) const {
    return loops_->degeneracy(i, a);
  }
  std::string format(int, LoopWord const& a) const { return loops_->format(a); }

 private:
  std::shared_ptr<const LoopGroup> loops_;
};

/// τ: B_n -> Γ_{n-1} for n >= 1, given on simplex ranks.
template <GroupCarrier C>
using TwistFn = std::function<typename C::value_type(int n, Index b)>;

/// γ · f for γ in Γ_n and f an n-simplex of F, on ranks.
template <GroupCarrier C>
using ActionFn =
    std::function<Index(int n, typename C::value_type const& g, Index f)>;

/// Checks the four twisting-function axioms on every simplex of B with
/// dimension <= max_dim:
///   axiom-1  ∂_0 τ(b) = τ(∂_0 b)^{-1} τ(∂_1 b)
///   axiom-2  ∂_i τ(b) = τ(∂_{i+1} b)        1 <= i <= n-1
///   axiom-3  s_i τ(b) = τ(s_{i+1} b)        0 <= i <= n-1
///   axiom-4  τ(s_0 b) = 1
/// One record per axiom and dimension.
template <GroupCarrier C>
std::vector<CheckRecord> validate_twisting(SimplicialSet const& base,
                                           C const& carrier,
                                           TwistFn<C> const& tau,
                                           int max_dim = -1) {
  int const top = max_dim < 0 ? base.cutoff() : max_dim;
  if (top > base.cutoff() || top - 1 > carrier.cutoff()) {
    throw SimplicialError("twisting check beyond the cutoff");
  }
  std::vector<CheckRecord> records;
  auto show = [&](int n, Index b) { return base.format(n, b); };
  for (int n = 2; n <= top; ++n) {
    records.push_back(run_check("axiom-1", n, base.count(n),
                                [&, n](Index b) -> std::optional<std::string> {
      auto lhs = carrier.face(0, n - 1, tau(n, b));
      auto rhs = carrier.multiply(
          n - 2, carrier.invert(n - 2, tau(n - 1, base.face(0, n, b))),
          tau(n - 1, base.face(1, n, b)));
      if (!(lhs == rhs)) {
        return fmt::format("b={}: {} != {}", show(n, b),
                           carrier.format(n - 2, lhs),
                           carrier.format(n - 2, rhs));
      }
      return std::nullopt;
    }));
    records.push_back(run_check("axiom-2", n, base.count(n),
                                [&, n](Index b) -> std::optional<std::string> {
      auto value = tau(n, b);
      for (int i = 1; i <= n - 1; ++i) {
        auto lhs = carrier.face(i, n - 1, value);
        auto rhs = tau(n - 1, base.face(i + 1, n, b));
        if (!(lhs == rhs)) {
          return fmt::format("b={} i={}: {} != {}", show(n, b), i,
                             carrier.format(n - 2, lhs),
                             carrier.format(n - 2, rhs));
        }
      }
      return std::nullopt;
    }));
  }
  for (int n = 1; n + 1 <= top; ++n) {
    records.push_back(run_check("axiom-3", n, base.count(n),
                                [&, n](Index b) -> std::optional<std::string> {
      auto value = tau(n, b);
      for (int i = 0; i <= n - 1; ++i) {
        auto lhs = carrier.degeneracy(i, n - 1, value);
        auto rhs = tau(n + 1, base.degeneracy(i + 1, n, b));
        if (!(lhs == rhs)) {
          return fmt::format("b={} i={}: {} != {}", show(n, b), i,
                             carrier.format(n, lhs), carrier.format(n, rhs));
        }
      }
      return std::nullopt;
    }));
  }
  for (int n = 0; n + 1 <= top; ++n) {
    records.push_back(run_check("axiom-4", n, base.count(n),
                                [&, n](Index b) -> std::optional<std::string> {
      auto value = tau(n + 1, base.degeneracy(0, n, b));
      if (!(value == carrier.identity(n))) {
        return fmt::format("b={}: tau(s_0 b) = {}", show(n, b),
                           carrier.format(n, value));
      }
      return std::nullopt;
    }));
  }
  return records;
}

/// Elements of Γ_n on which the action axioms are tested: `elements` for
/// the unit and compatibility axioms, `pairs` for composition.
template <GroupCarrier C>
struct ActionSamples {
  std::vector<typename C::value_type> elements;
  std::vector<std::pair<typename C::value_type, typename C::value_type>> pairs;
};

template <GroupCarrier C>
using SampleFn = std::function<ActionSamples<C>(int n)>;

/// Every element and every pair of elements, for finite carriers.
SampleFn<FiniteCarrier> all_elements(FiniteCarrier const& carrier);

/// Free generators of each sign plus the identity, all pairs of those, and
/// `random_words` seeded random words w of length 3..6 paired both with
/// their inverse and with a second random word.
SampleFn<LoopCarrier> loop_samples(LoopCarrier const& carrier,
                                   std::size_t random_words,
                                   std::uint64_t seed);

/// Checks 1·f = f, (γγ')·f = γ·(γ'·f), ∂_i(γ·f) = ∂_iγ·∂_i f and
/// s_i(γ·f) = s_iγ·s_i f for all sampled γ, γ' and every f of dimension
/// <= max_dim.
template <GroupCarrier C>
std::vector<CheckRecord> validate_action(SimplicialSet const& fibre,
                                         C const& carrier,
                                         ActionFn<C> const& act,
                                         SampleFn<C> const& samples,
                                         int max_dim) {
  if (max_dim > fibre.cutoff() || max_dim > carrier.cutoff()) {
    throw SimplicialError("action check beyond the cutoff");
  }
  std::vector<CheckRecord> records;
  for (int n = 0; n <= max_dim; ++n) {
    auto const sample = samples(n);
    auto const& gammas = sample.elements;
    auto const& pairs = sample.pairs;
    auto const m = fibre.count(n);
    auto show = [&](int d, Index f) { return fibre.format(d, f); };
    records.push_back(run_check("unit", n, m,
                                [&, n](Index f) -> std::optional<std::string> {
      auto y = act(n, carrier.identity(n), f);
      if (y != f) {
        return fmt::format("1·{} = {}", show(n, f), show(n, y));
      }
      return std::nullopt;
    }));
    auto const g = gammas.size();
    records.push_back(run_check("composition", n, pairs.size() * m,
                                [&, n](Index t) -> std::optional<std::string> {
      auto const& [a, b] = pairs[t / m];
      Index f = t % m;
      auto lhs = act(n, carrier.multiply(n, a, b), f);
      auto rhs = act(n, a, act(n, b, f));
      if (lhs != rhs) {
        return fmt::format("g={} h={} f={}: (gh)·f = {} but g·(h·f) = {}",
                           carrier.format(n, a), carrier.format(n, b),
                           show(n, f), show(n, lhs), show(n, rhs));
      }
      return std::nullopt;
    }));
    if (n >= 1) {
      records.push_back(run_check("face", n, g * m,
                                  [&, n](Index t) -> std::optional<std::string> {
        auto const& a = gammas[t / m];
        Index f = t % m;
        auto moved = act(n, a, f);
        for (int i = 0; i <= n; ++i) {
          auto lhs = fibre.face(i, n, moved);
          auto rhs = act(n - 1, carrier.face(i, n, a), fibre.face(i, n, f));
          if (lhs != rhs) {
            return fmt::format("g={} f={} i={}: {} != {}", carrier.format(n, a),
                               show(n, f), i, show(n - 1, lhs),
                               show(n - 1, rhs));
          }
        }
        return std::nullopt;
      }));
    }
    if (n < max_dim) {
      records.push_back(run_check("degeneracy", n, g * m,
                                  [&, n](Index t) -> std::optional<std::string> {
        auto const& a = gammas[t / m];
        Index f = t % m;
        auto moved = act(n, a, f);
        for (int i = 0; i <= n; ++i) {
          auto lhs = fibre.degeneracy(i, n, moved);
          auto rhs =
              act(n + 1, carrier.degeneracy(i, n, a), fibre.degeneracy(i, n, f));
          if (lhs != rhs) {
            return fmt::format("g={} f={} i={}: {} != {}", carrier.format(n, a),
                               show(n, f), i, show(n + 1, lhs),
                               show(n + 1, rhs));
          }
        }
        return std::nullopt;
      }));
    }
  }
  return records;
}

/// F ×_τ B. An n-simplex (f, b) has rank f * |B_n| + b. The twisted face is
/// ∂_0(f, b) = (τ(b)·∂_0 f, ∂_0 b); everything else acts componentwise.
class TwistedProduct final : public SimplicialSet {
 public:
  /// transport(n, b, f') returns τ(b)·f' for b in B_n and f' in F_{n-1}.
  using Transport = std::function<Index(int n, Index b, Index f)>;

  TwistedProduct(SpacePtr fibre, SpacePtr base, Transport transport);

  SimplicialSet const& fibre() const noexcept { return *fibre_; }
  SimplicialSet const& base() const noexcept { return *base_; }

  int cutoff() const override { return cutoff_; }
  Index count(int n) const override {
    return fibre_->count(n) * base_->count(n);
  }
  Index face(int i, int n, Index x) const override;
  Index degeneracy(int i, int n, Index x) const override;
  std::string format(int n, Index x) const override;

  Index pair(int n, Index f, Index b) const { return f * base_->count(n) + b; }
  Index fibre_part(int n, Index x) const { return x / base_->count(n); }
  Index base_part(int n, Index x) const { return x % base_->count(n); }

 private:
  SpacePtr fibre_;
  SpacePtr base_;
  Transport transport_;
  int cutoff_;
};

/// Thrown when a twisted product is requested for data that fails the
/// twisting or action axioms.
class TwistedProductError : public std::runtime_error {
 public:
  explicit TwistedProductError(CheckRecord failure)
      : std::runtime_error(fmt::format(
            "{} failed in dimension {}: {}", failure.name, failure.dimension,
            failure.counterexample.value_or("?"))),
        failure_(std::move(failure)) {}

  CheckRecord const& failure() const noexcept { return failure_; }

 private:
  CheckRecord failure_;
};

/// Builds F ×_τ B after validating τ and the action (up to `check_dim`; no
/// validation when negative). The first failing record aborts construction.
template <GroupCarrier C>
std::shared_ptr<const TwistedProduct> make_twisted_product(
    SpacePtr fibre, SpacePtr base, C carrier, TwistFn<C> tau, ActionFn<C> act,
    SampleFn<C> samples = {}, int check_dim = -1) {
  if (check_dim >= 0) {
    auto records = validate_twisting(*base, carrier, tau, check_dim);
    if (samples) {
      auto more = validate_action(*fibre, carrier, act, samples,
                                  std::min(check_dim, carrier.cutoff()));
      records.insert(records.end(), more.begin(), more.end());
    }
    for (auto& r : records) {
      if (!r.passed) {
        throw TwistedProductError(std::move(r));
      }
    }
  }
  auto transport = [fibre, tau = std::move(tau), act = std::move(act)](
                       int n, Index b, Index f) { return act(n - 1, tau(n, b), f); };
  return std::make_shared<const TwistedProduct>(std::move(fibre),
                                                std::move(base),
                                                std::move(transport));
}

struct PseudoSectionCheck {
  /// "projection", "face[i]" for i >= 1, "degeneracy"
  std::vector<CheckRecord> clauses;
  /// Whether σ also commutes with ∂_0, making it an honest cross section.
  bool honest = true;
  std::optional<std::string> honesty_counterexample;

  bool passed() const;
};

/// Validates a pseudo-cross section σ: B -> F ×_τ B of the projection,
/// given on ranks, up to dimension max_dim.
PseudoSectionCheck validate_pseudo_cross_section(
    TwistedProduct const& product, std::function<Index(int n, Index b)> const& section,
    int max_dim = -1);

}  // namespace simpfib
