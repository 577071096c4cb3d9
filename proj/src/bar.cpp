#include "simpfib/bar.hpp"

#include <fmt/format.h>
#include <limits>

namespace simpfib {

BarSimplex bar(std::initializer_list<Elem> top_first) {
  return BarSimplex{std::vector<Elem>(std::rbegin(top_first),
                                      std::rend(top_first))};
}

BarConstruction::BarConstruction(SimplicialGroupPtr group, int cutoff)
    : group_(std::move(group)), cutoff_(cutoff) {
  if (cutoff < 0) {
    throw SimplicialError("negative cutoff");
  }
  if (group_->cutoff() < cutoff - 1) {
    throw SimplicialError(fmt::format(
        "BG up to dimension {} needs the group up to level {}, have {}",
        cutoff, cutoff - 1, group_->cutoff()));
  }
  counts_.push_back(1);
  for (int n = 1; n <= cutoff; ++n) {
    auto const order = group_->level(n - 1).order();
    if (counts_.back() > std::numeric_limits<Index>::max() / order) {
      throw SimplicialError("BG too large to enumerate");
    }
    counts_.push_back(counts_.back() * order);
  }
}

void BarConstruction::validate(BarSimplex const& g) const {
  if (g.degree() > cutoff_) {
    throw SimplicialError(fmt::format("bar simplex of degree {} beyond cutoff {}",
                                      g.degree(), cutoff_));
  }
  for (int j = 0; j < g.degree(); ++j) {
    if (g[j] >= group_->level(j).order()) {
      throw SimplicialError(
          fmt::format("entry {} of a bar simplex is not in level {}", j, j));
    }
  }
}

Index BarConstruction::rank(BarSimplex const& g) const {
  Index x = 0;
  for (int j = g.degree() - 1; j >= 0; --j) {
    x = x * group_->level(j).order() + g[j];
  }
  return x;
}

BarSimplex BarConstruction::unrank(int n, Index x) const {
  BarSimplex g;
  g.entries.resize(n);
  for (int j = 0; j < n; ++j) {
    auto const order = group_->level(j).order();
    g[j] = static_cast<Elem>(x % order);
    x /= order;
  }
  return g;
}

BarSimplex BarConstruction::face(int i, BarSimplex const& g) const {
  int const n = g.degree();
  if (n < 1 || i < 0 || i > n) {
    throw SimplicialError(fmt::format("face d_{} of a {}-simplex", i, n));
  }
  BarSimplex out;
  out.entries.resize(n - 1);
  if (i == 0) {
    std::copy(g.entries.begin(), g.entries.end() - 1, out.entries.begin());
    return out;
  }
  // Entries below the merge are untouched.
  for (int j = 0; j < n - i - 1; ++j) {
    out[j] = g[j];
  }
  if (i < n) {
    int const j = n - i - 1;
    out[j] = group_->mul(j, group_->face(0, j + 1, g[j + 1]), g[j]);
  }
  // Entry g_{j+1} lands at position j after ∂_{i-n+j+1}.
  for (int j = std::max(0, n - i); j <= n - 2; ++j) {
    out[j] = group_->face(i - n + j + 1, j + 1, g[j + 1]);
  }
  return out;
}

BarSimplex BarConstruction::degeneracy(int i, BarSimplex const& g) const {
  int const n = g.degree();
  if (i < 0 || i > n) {
    throw SimplicialError(fmt::format("degeneracy s_{} of a {}-simplex", i, n));
  }
  BarSimplex out;
  out.entries.resize(n + 1);
  for (int j = 0; j < n - i; ++j) {
    out[j] = g[j];
  }
  out[n - i] = group_->one(n - i);
  for (int j = n - i + 1; j <= n; ++j) {
    out[j] = group_->degeneracy(i - n + j - 1, j - 1, g[j - 1]);
  }
  return out;
}

Elem BarConstruction::twist(BarSimplex const& g) const {
  if (g.degree() < 1) {
    throw SimplicialError("twisting function is undefined in degree 0");
  }
  int const n = g.degree();
  return group_->inv(n - 1, g.top());
}

bool BarConstruction::is_s0_degenerate(BarSimplex const& g) const {
  return g.degree() >= 1 && g.top() == group_->one(g.degree() - 1);
}

std::string BarConstruction::format(BarSimplex const& g) const {
  std::string out = "[";
  for (int j = g.degree() - 1; j >= 0; --j) {
    out += group_->level(j).label(g[j]);
    if (j > 0) {
      out += '|';
    }
  }
  return out + "]";
}

Index BarConstruction::face(int i, int n, Index x) const {
  return rank(face(i, unrank(n, x)));
}

Index BarConstruction::degeneracy(int i, int n, Index x) const {
  return rank(degeneracy(i, unrank(n, x)));
}

std::string BarConstruction::format(int n, Index x) const {
  return format(unrank(n, x));
}

}  // namespace simpfib
