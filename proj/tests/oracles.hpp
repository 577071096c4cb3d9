// Independent reference computations for the tests. Nothing here calls the
// code under test for the quantity being checked.

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "simpfib/group.hpp"

namespace oracle {

using simpfib::Elem;
using simpfib::FiniteGroup;

/// The classical nerve of a discrete group on tuples (a_1, ..., a_n):
/// d_0 drops a_1, d_n drops a_n, d_i multiplies a_i a_{i+1}, and s_i
/// inserts the identity after a_i.
struct Nerve {
  FiniteGroup const& g;

  std::vector<Elem> face(int i, std::vector<Elem> const& a) const {
    int const n = static_cast<int>(a.size());
    std::vector<Elem> out;
    for (int p = 1; p <= n; ++p) {
      if (i == 0 && p == 1) continue;
      if (i == n && p == n) continue;
      if (i > 0 && i < n && p == i) {
        out.push_back(g.mul(a[p - 1], a[p]));
        ++p;
        continue;
      }
      out.push_back(a[p - 1]);
    }
    return out;
  }

  std::vector<Elem> degeneracy(int i, std::vector<Elem> const& a) const {
    std::vector<Elem> out(a.begin(), a.begin() + i);
    out.push_back(g.identity());
    out.insert(out.end(), a.begin() + i, a.end());
    return out;
  }
};

/// Order and exponent of G / [G, G], by closing the commutators under
/// multiplication.
struct Abelianization {
  std::size_t order;
  std::size_t exponent;
};

inline Abelianization abelianization(FiniteGroup const& g) {
  auto const n = static_cast<Elem>(g.order());
  std::set<Elem> sub{g.identity()};
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      sub.insert(g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)));
    }
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<Elem> now(sub.begin(), sub.end());
    for (Elem x : now) {
      for (Elem y : now) {
        grew |= sub.insert(g.mul(x, y)).second;
      }
    }
  }
  std::size_t exponent = 1;
  for (Elem a = 0; a < n; ++a) {
    std::size_t m = 1;
    Elem power = a;
    while (!sub.count(power)) {
      power = g.mul(power, a);
      ++m;
    }
    exponent = std::lcm(exponent, m);
  }
  return {g.order() / sub.size(), exponent};
}

/// Invariant factors d_k = D_k / D_{k-1}, where D_k is the gcd of all k×k
/// minors. Only for small matrices.
inline std::int64_t determinant(std::vector<std::vector<std::int64_t>> m) {
  auto const n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t det = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(m[r][k]);
      }
      minor.push_back(row);
    }
    det += (c % 2 == 0 ? 1 : -1) * m[0][c] * determinant(minor);
  }
  return det;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t start,
                    std::vector<std::size_t>& cur,
                    std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::int64_t> invariant_factors(
    std::vector<std::vector<std::int64_t>> const& m) {
  std::size_t const rows = m.size(), cols = rows ? m[0].size() : 0;
  std::vector<std::int64_t> out;
  std::int64_t previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    std::int64_t g = 0;
    for (auto const& r : rs) {
      for (auto const& c : cs) {
        std::vector<std::vector<std::int64_t>> sub(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[r[i]][c[j]];
        g = std::gcd(g, determinant(sub));
      }
    }
    if (g == 0) break;
    out.push_back(std::abs(g / previous));
    previous = g;
  }
  return out;
}

/// Free reduction by repeatedly deleting the leftmost cancelling pair.
template <class Letter>
std::vector<Letter> free_reduce(std::vector<Letter> word) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i].generator == word[i + 1].generator &&
          word[i].sign == -word[i + 1].sign) {
        word.erase(word.begin() + i, word.begin() + i + 2);
        changed = true;
        break;
      }
    }
  }
  return word;
}

}  // namespace oracle
