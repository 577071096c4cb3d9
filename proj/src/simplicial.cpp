#include "simpfib/simplicial.hpp"

#include <fmt/format.h>

#include "simpfib/check.hpp"

namespace simpfib {

bool is_reduced(SimplicialSet const& space) { return space.count(0) == 1; }

bool is_degenerate(SimplicialSet const& space, int n, Index x) {
  if (n == 0) {
    return false;
  }
  for (int i = 0; i < n; ++i) {
    if (space.degeneracy(i, n - 1, space.face(i, n, x)) == x) {
      return true;
    }
  }
  return false;
}

namespace {

int resolve_dim(SimplicialSet const& space, int max_dim) {
  if (max_dim < 0) {
    return space.cutoff();
  }
  if (max_dim > space.cutoff()) {
    throw SimplicialError(fmt::format(
        "requested dimension {} exceeds the cutoff {}", max_dim,
        space.cutoff()));
  }
  return max_dim;
}

}  // namespace

std::vector<CheckRecord> check_simplicial_identities(SimplicialSet const& space,
                                                     int max_dim) {
  int const top = resolve_dim(space, max_dim);
  std::vector<CheckRecord> records;
  auto show = [&](int n, Index x) { return space.format(n, x); };

  for (int n = 2; n <= top; ++n) {
    records.push_back(run_check("face-face", n, space.count(n),
                                [&, n](Index x) -> std::optional<std::string> {
      for (int j = 1; j <= n; ++j) {
        for (int i = 0; i < j; ++i) {
          auto lhs = space.face(i, n - 1, space.face(j, n, x));
          auto rhs = space.face(j - 1, n - 1, space.face(i, n, x));
          if (lhs != rhs) {
            return fmt::format("x={} i={} j={}: {} != {}", show(n, x), i, j,
                               show(n - 2, lhs), show(n - 2, rhs));
          }
        }
      }
      return std::nullopt;
    }));
  }
  for (int n = 0; n + 2 <= top; ++n) {
    records.push_back(run_check("degen-degen", n, space.count(n),
                                [&, n](Index x) -> std::optional<std::string> {
      for (int j = 0; j <= n; ++j) {
        for (int i = 0; i <= j; ++i) {
          auto lhs = space.degeneracy(i, n + 1, space.degeneracy(j, n, x));
          auto rhs = space.degeneracy(j + 1, n + 1, space.degeneracy(i, n, x));
          if (lhs != rhs) {
            return fmt::format("x={} i={} j={}: {} != {}", show(n, x), i, j,
                               show(n + 2, lhs), show(n + 2, rhs));
          }
        }
      }
      return std::nullopt;
    }));
  }
  for (int n = 0; n + 1 <= top; ++n) {
    // n-simplices x, s_j x in dimension n+1, faces back to dimension n.
    records.push_back(run_check("face-degen-id", n, space.count(n),
                                [&, n](Index x) -> std::optional<std::string> {
      for (int j = 0; j <= n; ++j) {
        auto y = space.degeneracy(j, n, x);
        auto a = space.face(j, n + 1, y);
        auto b = space.face(j + 1, n + 1, y);
        if (a != x || b != x) {
          return fmt::format("x={} j={}: d_j s_j x = {}, d_(j+1) s_j x = {}",
                             show(n, x), j, show(n, a), show(n, b));
        }
      }
      return std::nullopt;
    }));
    if (n == 0) {
      continue;
    }
    records.push_back(run_check("face-degen-lo", n, space.count(n),
                                [&, n](Index x) -> std::optional<std::string> {
      for (int j = 1; j <= n; ++j) {
        auto y = space.degeneracy(j, n, x);
        for (int i = 0; i < j; ++i) {
          auto lhs = space.face(i, n + 1, y);
          auto rhs = space.degeneracy(j - 1, n - 1, space.face(i, n, x));
          if (lhs != rhs) {
            return fmt::format("x={} i={} j={}: {} != {}", show(n, x), i, j,
                               show(n, lhs), show(n, rhs));
          }
        }
      }
      return std::nullopt;
    }));
    records.push_back(run_check("face-degen-hi", n, space.count(n),
                                [&, n](Index x) -> std::optional<std::string> {
      for (int j = 0; j <= n; ++j) {
        auto y = space.degeneracy(j, n, x);
        for (int i = j + 2; i <= n + 1; ++i) {
          auto lhs = space.face(i, n + 1, y);
          auto rhs = space.degeneracy(j, n - 1, space.face(i - 1, n, x));
          if (lhs != rhs) {
            return fmt::format("x={} i={} j={}: {} != {}", show(n, x), i, j,
                               show(n, lhs), show(n, rhs));
          }
        }
      }
      return std::nullopt;
    }));
  }
  return records;
}

std::string DiscreteSet::format(int, Index x) const {
  return fmt::format("p{}", x);
}

TabulatedSet::TabulatedSet(SimplicialSet const& source)
    : cutoff_(source.cutoff()) {
  counts_.resize(cutoff_ + 1);
  faces_.resize(cutoff_ + 1);
  degeneracies_.resize(cutoff_ + 1);
  labels_.resize(cutoff_ + 1);
  for (int n = 0; n <= cutoff_; ++n) {
    auto const m = source.count(n);
    counts_[n] = m;
    for (Index x = 0; x < m; ++x) {
      labels_[n].push_back(source.format(n, x));
    }
    if (n >= 1) {
      faces_[n].assign(n + 1, std::vector<Index>(m));
      for (int i = 0; i <= n; ++i) {
        for (Index x = 0; x < m; ++x) {
          faces_[n][i][x] = source.face(i, n, x);
        }
      }
    }
    if (n < cutoff_) {
      degeneracies_[n].assign(n + 1, std::vector<Index>(m));
      for (int i = 0; i <= n; ++i) {
        for (Index x = 0; x < m; ++x) {
          degeneracies_[n][i][x] = source.degeneracy(i, n, x);
        }
      }
    }
  }
}

TabulatedSet TabulatedSet::with_face(int i, int n, Index x, Index value) const {
  if (n < 1 || n > cutoff_ || i < 0 || i > n || x >= counts_[n] ||
      value >= counts_[n - 1]) {
    throw SimplicialError("face table position out of range");
  }
  TabulatedSet copy = *this;
  copy.faces_[n][i][x] = value;
  return copy;
}

SimplicialGroup::SimplicialGroup(
    std::vector<GroupPtr> levels,
    std::vector<std::vector<std::vector<Elem>>> faces,
    std::vector<std::vector<std::vector<Elem>>> degeneracies)
    : levels_(std::move(levels)),
      faces_(std::move(faces)),
      degeneracies_(std::move(degeneracies)) {
  if (levels_.empty()) {
    throw SimplicialError("simplicial group needs at least level 0");
  }
  int const top = cutoff();
  faces_.resize(top + 1);
  degeneracies_.resize(top + 1);
  constant_ = true;
  for (int n = 0; n <= top; ++n) {
    if (!levels_[n]) {
      throw SimplicialError(fmt::format("level {} missing", n));
    }
    if (n >= 1 && faces_[n].size() != static_cast<std::size_t>(n + 1)) {
      throw SimplicialError(fmt::format("level {} needs {} face maps", n, n + 1));
    }
    if (n < top && degeneracies_[n].size() != static_cast<std::size_t>(n + 1)) {
      throw SimplicialError(
          fmt::format("level {} needs {} degeneracy maps", n, n + 1));
    }
    if (n >= 1 && !levels_[n]->same_table(*levels_[0])) {
      constant_ = false;
    }
    auto validate = [&](std::vector<Elem> const& table, int from, int to,
                        char const* what, int i) {
      if (table.size() != levels_[from]->order()) {
        throw SimplicialError(fmt::format("{}_{} on level {} has wrong size",
                                          what, i, from));
      }
      for (Elem y : table) {
        if (y >= levels_[to]->order()) {
          throw SimplicialError(fmt::format("{}_{} on level {} out of range",
                                            what, i, from));
        }
      }
      if (homomorphism_violation(*levels_[from], *levels_[to], table)) {
        throw SimplicialError(fmt::format(
            "{}_{} on level {} is not a homomorphism", what, i, from));
      }
      for (Elem y = 0; y < table.size(); ++y) {
        if (table[y] != y) {
          constant_ = false;
          break;
        }
      }
    };
    if (n >= 1) {
      for (int i = 0; i <= n; ++i) {
        validate(faces_[n][i], n, n - 1, "d", i);
      }
    }
    if (n < top) {
      for (int i = 0; i <= n; ++i) {
        validate(degeneracies_[n][i], n, n + 1, "s", i);
      }
    }
  }
}

std::shared_ptr<const SimplicialGroup> SimplicialGroup::constant(GroupPtr group,
                                                                 int cutoff) {
  if (cutoff < 0) {
    throw SimplicialError("negative cutoff");
  }
  std::vector<Elem> id(group->order());
  for (Elem a = 0; a < id.size(); ++a) {
    id[a] = a;
  }
  std::vector<GroupPtr> levels(cutoff + 1, group);
  std::vector<std::vector<std::vector<Elem>>> faces(cutoff + 1), degs(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    if (n >= 1) {
      faces[n].assign(n + 1, id);
    }
    if (n < cutoff) {
      degs[n].assign(n + 1, id);
    }
  }
  return std::make_shared<const SimplicialGroup>(std::move(levels),
                                                 std::move(faces),
                                                 std::move(degs));
}

std::shared_ptr<const SimplicialGroup> SimplicialGroup::coskeleton(
    GroupPtr group, int cutoff) {
  if (cutoff < 0) {
    throw SimplicialError("negative cutoff");
  }
  auto const base = group->order();
  std::vector<GroupPtr> levels;
  for (int n = 0; n <= cutoff; ++n) {
    levels.push_back(make_power(group, n + 1));
  }
  auto digits = [&](int n, Elem x) {
    std::vector<Elem> d(n + 1);
    for (int f = n; f >= 0; --f) {
      d[f] = x % base;
      x /= base;
    }
    return d;
  };
  auto encode = [&](std::vector<Elem> const& d) {
    Elem x = 0;
    for (Elem v : d) {
      x = static_cast<Elem>(x * base + v);
    }
    return x;
  };
  std::vector<std::vector<std::vector<Elem>>> faces(cutoff + 1), degs(cutoff + 1);
  for (int n = 0; n <= cutoff; ++n) {
    auto const m = levels[n]->order();
    if (n >= 1) {
      faces[n].assign(n + 1, std::vector<Elem>(m));
    }
    if (n < cutoff) {
      degs[n].assign(n + 1, std::vector<Elem>(m));
    }
    for (Elem x = 0; x < m; ++x) {
      auto d = digits(n, x);
      for (int i = 0; i <= n; ++i) {
        if (n >= 1) {
          auto e = d;
          e.erase(e.begin() + i);
          faces[n][i][x] = encode(e);
        }
        if (n < cutoff) {
          auto e = d;
          e.insert(e.begin() + i, d[i]);
          degs[n][i][x] = encode(e);
        }
      }
    }
  }
  return std::make_shared<const SimplicialGroup>(std::move(levels),
                                                 std::move(faces),
                                                 std::move(degs));
}

Elem SimplicialGroup::face0_power(int times, int n, Elem g) const {
  for (int t = 0; t < times; ++t) {
    g = face(0, n - t, g);
  }
  return g;
}

std::vector<CheckRecord> check_simplicial_group(SimplicialGroup const& group) {
  std::vector<CheckRecord> records;
  for (int n = 0; n <= group.cutoff(); ++n) {
    auto const& level = group.level(n);
    auto const order = level.order();
    records.push_back(run_check("homomorphism", n, order * order,
                                [&, n](Index t) -> std::optional<std::string> {
      auto a = static_cast<Elem>(t / order), b = static_cast<Elem>(t % order);
      auto ab = level.mul(a, b);
      for (int i = 0; n >= 1 && i <= n; ++i) {
        if (group.face(i, n, ab) !=
            group.mul(n - 1, group.face(i, n, a), group.face(i, n, b))) {
          return fmt::format("d_{} on ({}, {})", i, level.label(a),
                             level.label(b));
        }
      }
      for (int i = 0; n < group.cutoff() && i <= n; ++i) {
        if (group.degeneracy(i, n, ab) !=
            group.mul(n + 1, group.degeneracy(i, n, a),
                      group.degeneracy(i, n, b))) {
          return fmt::format("s_{} on ({}, {})", i, level.label(a),
                             level.label(b));
        }
      }
      return std::nullopt;
    }));
    bool units = true;
    std::string where;
    for (int i = 0; n >= 1 && i <= n; ++i) {
      if (group.face(i, n, group.one(n)) != group.one(n - 1)) {
        units = false;
        where = fmt::format("d_{} 1_{}", i, n);
      }
    }
    for (int i = 0; n < group.cutoff() && i <= n; ++i) {
      if (group.degeneracy(i, n, group.one(n)) != group.one(n + 1)) {
        units = false;
        where = fmt::format("s_{} 1_{}", i, n);
      }
    }
    records.push_back(make_record("identity-preserved", n, units, 1, where));
  }
  return records;
}

MapCheck check_simplicial_map(SimplicialMap const& map, int max_dim) {
  auto const& src = *map.source;
  auto const& dst = *map.target;
  int top = max_dim < 0 ? std::min(src.cutoff(), dst.cutoff()) : max_dim;
  if (top > src.cutoff() || top > dst.cutoff()) {
    throw SimplicialError("map check beyond the cutoff");
  }
  MapCheck result;
  bool face0_ok = true, others_ok = true;
  for (int n = 1; n <= top; ++n) {
    for (int i = 0; i <= n; ++i) {
      auto record = run_check(fmt::format("face[{}]", i), n, src.count(n),
                              [&, n, i](Index x) -> std::optional<std::string> {
        auto lhs = dst.face(i, n, map.component(n, x));
        auto rhs = map.component(n - 1, src.face(i, n, x));
        if (lhs != rhs) {
          return fmt::format("x={}: d_{} f(x) = {} but f(d_{} x) = {}",
                             src.format(n, x), i, dst.format(n - 1, lhs), i,
                             dst.format(n - 1, rhs));
        }
        return std::nullopt;
      });
      (i == 0 ? face0_ok : others_ok) &= record.passed;
      result.records.push_back(std::move(record));
    }
  }
  for (int n = 0; n < top; ++n) {
    auto record = run_check("degeneracy", n, src.count(n),
                            [&, n](Index x) -> std::optional<std::string> {
      for (int i = 0; i <= n; ++i) {
        auto lhs = dst.degeneracy(i, n, map.component(n, x));
        auto rhs = map.component(n + 1, src.degeneracy(i, n, x));
        if (lhs != rhs) {
          return fmt::format("x={}: s_{} f(x) = {} but f(s_{} x) = {}",
                             src.format(n, x), i, dst.format(n + 1, lhs), i,
                             dst.format(n + 1, rhs));
        }
      }
      return std::nullopt;
    });
    others_ok &= record.passed;
    result.records.push_back(std::move(record));
  }
  result.kind = !others_ok ? MapKind::neither
                : face0_ok ? MapKind::simplicial
                           : MapKind::pseudo;
  return result;
}

}  // namespace simpfib
