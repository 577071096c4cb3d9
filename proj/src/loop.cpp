#include "simpfib/loop.hpp"

#include <fmt/format.h>

#include "simpfib/check.hpp"

namespace simpfib {

LoopGroup::LoopGroup(SpacePtr space) : space_(std::move(space)) {
  if (!is_reduced(*space_)) {
    throw SimplicialError(fmt::format(
        "loop group of a space with {} vertices; X must be reduced",
        space_->count(0)));
  }
}

void LoopGroup::require_degree(int n, int needed_space_dim) const {
  if (n < 0 || needed_space_dim > space_->cutoff()) {
    throw SimplicialError(fmt::format(
        "loop group degree {} needs the space up to dimension {}, cutoff is {}",
        n, needed_space_dim, space_->cutoff()));
  }
}

bool LoopGroup::is_trivial_generator(int n, Index x) const {
  // x = s_0 y forces y = ∂_0 x.
  return space_->degeneracy(0, n, space_->face(0, n + 1, x)) == x;
}

LoopWord LoopGroup::identity(int n) const {
  require_degree(n, n + 1);
  return LoopWord{n, {}};
}

LoopWord LoopGroup::generator(int n, Index x, int sign) const {
  require_degree(n, n + 1);
  if (x >= space_->count(n + 1)) {
    throw SimplicialError("loop generator out of range");
  }
  return canonicalize(n, {Letter{x, sign}});
}

LoopWord LoopGroup::canonicalize(int n, std::vector<Letter> letters) const {
  LoopWord w{n, {}};
  w.letters.reserve(letters.size());
  for (auto const& letter : letters) {
    if (is_trivial_generator(n, letter.generator)) {
      continue;
    }
    if (!w.letters.empty() && w.letters.back().generator == letter.generator &&
        w.letters.back().sign == -letter.sign) {
      w.letters.pop_back();
    } else {
      w.letters.push_back(letter);
    }
  }
  return w;
}

LoopWord LoopGroup::multiply(LoopWord const& a, LoopWord const& b) const {
  if (a.degree != b.degree) {
    throw SimplicialError(fmt::format(
        "multiplying loop words of degrees {} and {}", a.degree, b.degree));
  }
  std::vector<Letter> letters = a.letters;
  letters.insert(letters.end(), b.letters.begin(), b.letters.end());
  return canonicalize(a.degree, std::move(letters));
}

LoopWord LoopGroup::invert(LoopWord const& a) const {
  LoopWord w{a.degree, {}};
  w.letters.reserve(a.letters.size());
  for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) {
    w.letters.push_back(Letter{it->generator, -it->sign});
  }
  return w;
}

LoopWord LoopGroup::face(int i, LoopWord const& w) const {
  int const n = w.degree;
  if (n < 1 || i < 0 || i > n) {
    throw SimplicialError(fmt::format("face d_{} of a loop word of degree {}",
                                      i, n));
  }
  require_degree(n, n + 1);
  std::vector<Letter> letters;
  letters.reserve(2 * w.letters.size());
  for (auto const& letter : w.letters) {
    if (i == 0) {
      Letter a{space_->face(0, n + 1, letter.generator), -1};
      Letter b{space_->face(1, n + 1, letter.generator), +1};
      if (letter.sign > 0) {
        letters.push_back(a);
        letters.push_back(b);
      } else {
        letters.push_back(Letter{b.generator, -1});
        letters.push_back(Letter{a.generator, +1});
      }
    } else {
      letters.push_back(
          Letter{space_->face(i + 1, n + 1, letter.generator), letter.sign});
    }
  }
  return canonicalize(n - 1, std::move(letters));
}

LoopWord LoopGroup::degeneracy(int i, LoopWord const& w) const {
  int const n = w.degree;
  if (i < 0 || i > n) {
    throw SimplicialError(fmt::format(
        "degeneracy s_{} of a loop word of degree {}", i, n));
  }
  require_degree(n + 1, n + 2);
  std::vector<Letter> letters;
  letters.reserve(w.letters.size());
  for (auto const& letter : w.letters) {
    letters.push_back(Letter{space_->degeneracy(i + 1, n + 1, letter.generator),
                             letter.sign});
  }
  return canonicalize(n + 1, std::move(letters));
}

LoopWord LoopGroup::twist(int n, Index x) const {
  if (n < 1) {
    throw SimplicialError("twisting function is undefined in degree 0");
  }
  return generator(n - 1, x);
}

std::string LoopGroup::format(LoopWord const& w) const {
  if (w.letters.empty()) {
    return "ε";
  }
  std::string out;
  for (std::size_t t = 0; t < w.letters.size(); ++t) {
    if (t > 0) {
      out += "·";
    }
    out += w.letters[t].sign > 0 ? '+' : '-';
    out += space_->format(w.degree + 1, w.letters[t].generator);
  }
  return out;
}

std::vector<Index> LoopGroup::free_generators(int n) const {
  require_degree(n, n + 1);
  std::vector<Index> out;
  for (Index x = 0; x < space_->count(n + 1); ++x) {
    if (!is_trivial_generator(n, x)) {
      out.push_back(x);
    }
  }
  return out;
}

Elem loop_to_group(LoopGroup const& loops, LoopWord const& w) {
  auto const* bar = dynamic_cast<BarConstruction const*>(&loops.space());
  if (bar == nullptr) {
    throw SimplicialError(
        "ΩX -> G is only defined when X is a classifying space");
  }
  auto const& group = bar->group();
  int const n = w.degree;
  Elem acc = group.one(n);
  for (auto const& letter : w.letters) {
    auto top = bar->unrank(n + 1, letter.generator).top();
    // [x] maps to top^{-1}, [x]^{-1} to top.
    acc = group.mul(n, acc, letter.sign > 0 ? group.inv(n, top) : top);
  }
  return acc;
}

std::vector<CheckRecord> check_canonical_morphism(LoopGroup const& loops,
                                                  int max_degree) {
  auto const* bar = dynamic_cast<BarConstruction const*>(&loops.space());
  if (bar == nullptr || max_degree > loops.cutoff()) {
    throw SimplicialError("canonical morphism check needs BG up to degree + 1");
  }
  auto const& group = bar->group();
  std::vector<CheckRecord> records;
  for (int n = 0; n <= max_degree; ++n) {
    auto const gens = loops.free_generators(n);
    auto const m = gens.size();
    // signed letters: index t < m is +gens[t], otherwise -gens[t - m]
    auto letter = [&, n](std::uint64_t t) {
      return t < m ? loops.generator(n, gens[t]) : loops.generator(n, gens[t - m], -1);
    };
    records.push_back(run_check("homomorphism", n, 4 * m * m,
                                [&, n](std::uint64_t t) -> std::optional<std::string> {
      auto a = letter(t / (2 * m)), b = letter(t % (2 * m));
      auto lhs = loop_to_group(loops, loops.multiply(a, b));
      auto rhs = group.mul(n, loop_to_group(loops, a), loop_to_group(loops, b));
      if (lhs != rhs) {
        return fmt::format("{} {}: {} != {}", loops.format(a), loops.format(b),
                           group.level(n).label(lhs), group.level(n).label(rhs));
      }
      return std::nullopt;
    }));
    if (n >= 1) {
      records.push_back(run_check("face", n, m,
                                  [&, n](std::uint64_t t) -> std::optional<std::string> {
        auto w = loops.generator(n, gens[t]);
        auto image = loop_to_group(loops, w);
        for (int i = 0; i <= n; ++i) {
          auto lhs = loop_to_group(loops, loops.face(i, w));
          auto rhs = group.face(i, n, image);
          if (lhs != rhs) {
            return fmt::format("{} i={}: {} != {}", loops.format(w), i,
                               group.level(n - 1).label(lhs),
                               group.level(n - 1).label(rhs));
          }
        }
        return std::nullopt;
      }));
    }
    if (n + 1 <= loops.cutoff()) {
      records.push_back(run_check("degeneracy", n, m,
                                  [&, n](std::uint64_t t) -> std::optional<std::string> {
        auto w = loops.generator(n, gens[t]);
        auto image = loop_to_group(loops, w);
        for (int i = 0; i <= n; ++i) {
          auto lhs = loop_to_group(loops, loops.degeneracy(i, w));
          auto rhs = group.degeneracy(i, n, image);
          if (lhs != rhs) {
            return fmt::format("{} i={}: {} != {}", loops.format(w), i,
                               group.level(n + 1).label(lhs),
                               group.level(n + 1).label(rhs));
          }
        }
        return std::nullopt;
      }));
    }
  }
  return records;
}

}  // namespace simpfib
