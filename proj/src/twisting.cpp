#include "simpfib/twisting.hpp"

namespace simpfib {

SampleFn<FiniteCarrier> all_elements(FiniteCarrier const& carrier) {
  return [carrier](int n) {
    ActionSamples<FiniteCarrier> out;
    auto const order = static_cast<Elem>(carrier.group().level(n).order());
    for (Elem a = 0; a < order; ++a) {
      out.elements.push_back(a);
      for (Elem b = 0; b < order; ++b) {
        out.pairs.emplace_back(a, b);
      }
    }
    return out;
  };
}

SampleFn<LoopCarrier> loop_samples(LoopCarrier const& carrier,
                                   std::size_t random_words,
                                   std::uint64_t seed) {
  return [carrier, random_words, seed](int n) {
    auto const& loops = carrier.loops();
    ActionSamples<LoopCarrier> out;
    out.elements.push_back(loops.identity(n));
    auto const generators = loops.free_generators(n);
    for (Index x : generators) {
      out.elements.push_back(loops.generator(n, x, +1));
      out.elements.push_back(loops.generator(n, x, -1));
    }
    for (auto const& a : out.elements) {
      for (auto const& b : out.elements) {
        out.pairs.emplace_back(a, b);
      }
    }
    if (generators.empty()) {
      return out;
    }
    // One stream per degree so the sample of degree n does not depend on
    // which other degrees were requested.
    SplitMix64 root(seed);
    for (int d = 0; d < n; ++d) {
      root.split();
    }
    auto rng = root.split();
    auto random_word = [&] {
      std::vector<Letter> letters(3 + rng.below(4));
      for (auto& letter : letters) {
        letter.generator = generators[rng.below(generators.size())];
        letter.sign = rng.below(2) == 0 ? +1 : -1;
      }
      return loops.canonicalize(n, std::move(letters));
    };
    for (std::size_t t = 0; t < random_words; ++t) {
      auto w = random_word();
      auto v = random_word();
      out.elements.push_back(w);
      out.pairs.emplace_back(w, loops.invert(w));
      out.pairs.emplace_back(w, v);
    }
    return out;
  };
}

TwistedProduct::TwistedProduct(SpacePtr fibre, SpacePtr base,
                               Transport transport)
    : fibre_(std::move(fibre)),
      base_(std::move(base)),
      transport_(std::move(transport)),
      cutoff_(std::min(fibre_->cutoff(), base_->cutoff())) {}

Index TwistedProduct::face(int i, int n, Index x) const {
  auto f = fibre_part(n, x), b = base_part(n, x);
  auto fb = fibre_->face(i, n, f);
  if (i == 0) {
    fb = transport_(n, b, fb);
  }
  return pair(n - 1, fb, base_->face(i, n, b));
}

Index TwistedProduct::degeneracy(int i, int n, Index x) const {
  auto f = fibre_part(n, x), b = base_part(n, x);
  return pair(n + 1, fibre_->degeneracy(i, n, f), base_->degeneracy(i, n, b));
}

std::string TwistedProduct::format(int n, Index x) const {
  return fmt::format("({},{})", fibre_->format(n, fibre_part(n, x)),
                     base_->format(n, base_part(n, x)));
}

bool PseudoSectionCheck::passed() const {
  return std::all_of(clauses.begin(), clauses.end(),
                     [](CheckRecord const& r) { return r.passed; });
}

PseudoSectionCheck validate_pseudo_cross_section(
    TwistedProduct const& product,
    std::function<Index(int n, Index b)> const& section, int max_dim) {
  auto const& base = product.base();
  int const top = max_dim < 0 ? product.cutoff() : max_dim;
  if (top > product.cutoff()) {
    throw SimplicialError("section check beyond the cutoff");
  }
  PseudoSectionCheck result;
  for (int n = 0; n <= top; ++n) {
    result.clauses.push_back(run_check("projection", n, base.count(n),
                                       [&, n](Index b) -> std::optional<std::string> {
      auto image = product.base_part(n, section(n, b));
      if (image != b) {
        return fmt::format("pi(sigma({})) = {}", base.format(n, b),
                           base.format(n, image));
      }
      return std::nullopt;
    }));
  }
  for (int n = 1; n <= top; ++n) {
    for (int i = 1; i <= n; ++i) {
      result.clauses.push_back(run_check(fmt::format("face[{}]", i), n,
                                         base.count(n),
                                         [&, n, i](Index b) -> std::optional<std::string> {
        auto lhs = product.face(i, n, section(n, b));
        auto rhs = section(n - 1, base.face(i, n, b));
        if (lhs != rhs) {
          return fmt::format("b={}: {} != {}", base.format(n, b),
                             product.format(n - 1, lhs),
                             product.format(n - 1, rhs));
        }
        return std::nullopt;
      }));
    }
    auto honesty = run_check("face[0]", n, base.count(n),
                             [&, n](Index b) -> std::optional<std::string> {
      auto lhs = product.face(0, n, section(n, b));
      auto rhs = section(n - 1, base.face(0, n, b));
      if (lhs != rhs) {
        return fmt::format("b={}: {} != {}", base.format(n, b),
                           product.format(n - 1, lhs),
                           product.format(n - 1, rhs));
      }
      return std::nullopt;
    });
    if (!honesty.passed && result.honest) {
      result.honest = false;
      result.honesty_counterexample = honesty.counterexample;
    }
  }
  for (int n = 0; n < top; ++n) {
    result.clauses.push_back(run_check("degeneracy", n, base.count(n),
                                       [&, n](Index b) -> std::optional<std::string> {
      for (int i = 0; i <= n; ++i) {
        auto lhs = product.degeneracy(i, n, section(n, b));
        auto rhs = section(n + 1, base.degeneracy(i, n, b));
        if (lhs != rhs) {
          return fmt::format("b={} i={}: {} != {}", base.format(n, b), i,
                             product.format(n + 1, lhs),
                             product.format(n + 1, rhs));
        }
      }
      return std::nullopt;
    }));
  }
  return result;
}

}  // namespace simpfib
