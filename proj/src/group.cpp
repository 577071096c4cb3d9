#include "simpfib/group.hpp"

#include <algorithm>
#include <cmath>
#include <fmt/format.h>
#include <numeric>

#include "simpfib/rng.hpp"

namespace simpfib {

AssociativityReport check_associativity(std::span<const Elem> table,
                                        std::size_t order) {
  AssociativityReport report;
  auto mul = [&](Elem a, Elem b) { return table[a * order + b]; };
  auto test = [&](Elem a, Elem b, Elem c) {
    ++report.triples_checked;
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      report.associative = false;
      report.counterexample = std::array<Elem, 3>{a, b, c};
      return false;
    }
    return true;
  };
  if (order <= kExhaustiveAssociativityOrder) {
    for (Elem a = 0; a < order; ++a) {
      for (Elem b = 0; b < order; ++b) {
        for (Elem c = 0; c < order; ++c) {
          if (!test(a, b, c)) {
            return report;
          }
        }
      }
    }
    return report;
  }
  report.exhaustive = false;
  SplitMix64 rng(order);
  for (std::uint64_t t = 0; t < kAssociativitySamples; ++t) {
    auto a = static_cast<Elem>(rng.below(order));
    auto b = static_cast<Elem>(rng.below(order));
    auto c = static_cast<Elem>(rng.below(order));
    if (!test(a, b, c)) {
      return report;
    }
  }
  return report;
}

FiniteGroup::FiniteGroup(std::vector<Elem> table,
                         std::vector<std::string> labels)
    : order_(0), table_(std::move(table)), labels_(std::move(labels)) {
  auto n = static_cast<std::size_t>(
      std::llround(std::sqrt(static_cast<double>(table_.size()))));
  if (n == 0 || n * n != table_.size()) {
    throw GroupError(fmt::format(
        "multiplication table of size {} is not a nonempty square",
        table_.size()));
  }
  order_ = n;
  for (Elem x : table_) {
    if (x >= n) {
      throw GroupError(fmt::format("table entry {} out of range", x));
    }
  }
  // Latin square: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[table_[r * n + c]]++) {
        throw GroupError(fmt::format("row {} repeats an element", r));
      }
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      if (seen[table_[c * n + r]]++) {
        throw GroupError(fmt::format("column {} repeats an element", r));
      }
    }
  }
  bool found = false;
  for (Elem e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (Elem a = 0; a < n && ok; ++a) {
      ok = mul(e, a) == a && mul(a, e) == a;
    }
    if (ok) {
      identity_ = e;
      found = true;
    }
  }
  if (!found) {
    throw GroupError("table has no two-sided identity");
  }
  associativity_ = check_associativity(table_, n);
  if (!associativity_.associative) {
    auto const& t = *associativity_.counterexample;
    throw GroupError(fmt::format("table is not associative at ({}, {}, {})",
                                 t[0], t[1], t[2]));
  }
  inverse_.resize(n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (mul(a, b) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    // Latin square plus associativity make left and right inverses agree.
  }
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t a = 0; a < n; ++a) {
      labels_.push_back(std::to_string(a));
    }
  } else if (labels_.size() != n) {
    throw GroupError(fmt::format("{} labels given for a group of order {}",
                                 labels_.size(), n));
  }
}

std::optional<Elem> FiniteGroup::find(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) {
    return std::nullopt;
  }
  return static_cast<Elem>(it - labels_.begin());
}

std::size_t FiniteGroup::element_order(Elem a) const {
  std::size_t m = 1;
  for (Elem x = a; x != identity_; x = mul(x, a)) {
    ++m;
  }
  return m;
}

std::vector<std::size_t> order_profile(FiniteGroup const& group) {
  std::vector<std::size_t> result;
  for (Elem a = 0; a < group.order(); ++a) {
    result.push_back(group.element_order(a));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::optional<std::pair<Elem, Elem>> homomorphism_violation(
    FiniteGroup const& source, FiniteGroup const& target,
    std::span<const Elem> image) {
  for (Elem a = 0; a < source.order(); ++a) {
    for (Elem b = 0; b < source.order(); ++b) {
      if (image[source.mul(a, b)] != target.mul(image[a], image[b])) {
        return std::pair{a, b};
      }
    }
  }
  return std::nullopt;
}

GroupHom::GroupHom(GroupPtr source, GroupPtr target, std::vector<Elem> image)
    : source_(std::move(source)),
      target_(std::move(target)),
      image_(std::move(image)) {
  if (!source_ || !target_) {
    throw GroupError("homomorphism needs a source and a target");
  }
  if (image_.size() != source_->order()) {
    throw GroupError(fmt::format("homomorphism table has {} entries, need {}",
                                 image_.size(), source_->order()));
  }
  for (Elem x : image_) {
    if (x >= target_->order()) {
      throw GroupError(fmt::format("homomorphism value {} out of range", x));
    }
  }
  if (auto bad = homomorphism_violation(*source_, *target_, image_)) {
    throw GroupError(fmt::format(
        "map is not a homomorphism: h({} * {}) != h({}) h({})",
        source_->label(bad->first), source_->label(bad->second),
        source_->label(bad->first), source_->label(bad->second)));
  }
}

GroupHom GroupHom::identity(GroupPtr group) {
  std::vector<Elem> image(group->order());
  std::iota(image.begin(), image.end(), Elem{0});
  return GroupHom(group, group, std::move(image));
}

bool GroupHom::injective() const {
  std::vector<char> hit(target_->order());
  for (Elem x : image_) {
    if (hit[x]++) {
      return false;
    }
  }
  return true;
}

bool GroupHom::surjective() const {
  std::vector<char> hit(target_->order());
  for (Elem x : image_) {
    hit[x] = 1;
  }
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

std::vector<Elem> GroupHom::kernel() const {
  std::vector<Elem> result;
  for (Elem a = 0; a < image_.size(); ++a) {
    if (image_[a] == target_->identity()) {
      result.push_back(a);
    }
  }
  return result;
}

GroupPtr make_cyclic(std::size_t n, std::string_view symbol) {
  if (n == 0) {
    throw GroupError("cyclic group of order 0");
  }
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      table[a * n + b] = static_cast<Elem>((a + b) % n);
    }
  }
  std::vector<std::string> labels;
  if (!symbol.empty()) {
    for (std::size_t a = 0; a < n; ++a) {
      labels.push_back(a == 0   ? std::string("e")
                       : a == 1 ? std::string(symbol)
                                : fmt::format("{}^{}", symbol, a));
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(table),
                                             std::move(labels));
}

GroupPtr make_trivial() { return make_cyclic(1); }

namespace {

std::string cycle_notation(std::vector<int> const& perm) {
  std::string out;
  std::vector<char> done(perm.size());
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (done[start] || perm[start] == static_cast<int>(start)) {
      continue;
    }
    out += '(';
    for (std::size_t i = start; !done[i]; i = perm[i]) {
      done[i] = 1;
      out += static_cast<char>('1' + i);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace

GroupPtr make_symmetric(std::size_t n) {
  if (n == 0 || n > 5) {
    throw GroupError(fmt::format("symmetric group S_{} not supported (1..5)", n));
  }
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  auto const m = perms.size();
  auto index_of = [&](std::vector<int> const& q) {
    return static_cast<Elem>(std::lower_bound(perms.begin(), perms.end(), q) -
                             perms.begin());
  };
  std::vector<Elem> table(m * m);
  std::vector<int> composite(n);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < n; ++i) {
        composite[i] = perms[a][perms[b][i]];
      }
      table[a * m + b] = index_of(composite);
    }
  }
  std::vector<std::string> labels;
  for (auto const& q : perms) {
    labels.push_back(cycle_notation(q));
  }
  return std::make_shared<const FiniteGroup>(std::move(table),
                                             std::move(labels));
}

GroupPtr make_dihedral(std::size_t order) {
  if (order < 2 || order % 2 != 0) {
    throw GroupError(fmt::format("dihedral group order {} must be even", order));
  }
  if (order > 1024) {
    throw GroupError(fmt::format("dihedral group order {} too large", order));
  }
  auto const m = order / 2;
  std::vector<Elem> table(order * order);
  for (std::size_t x = 0; x < order; ++x) {
    for (std::size_t y = 0; y < order; ++y) {
      auto a = x % m, b = x / m, c = y % m, d = y / m;
      // r^a s^b r^c s^d = r^(a + (-1)^b c) s^(b + d)
      auto rot = b == 0 ? (a + c) % m : (a + m - c) % m;
      table[x * order + y] = static_cast<Elem>(rot + m * ((b + d) % 2));
    }
  }
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < order; ++x) {
    auto a = x % m, b = x / m;
    std::string r = a == 0 ? "" : a == 1 ? "r" : fmt::format("r^{}", a);
    std::string label = r + (b ? "s" : "");
    labels.push_back(label.empty() ? "e" : label);
  }
  return std::make_shared<const FiniteGroup>(std::move(table),
                                             std::move(labels));
}

GroupPtr make_direct_product(GroupPtr a, GroupPtr b) {
  auto const na = a->order(), nb = b->order(), n = na * nb;
  if (n > 4096) {
    throw GroupError(fmt::format("direct product of order {} too large", n));
  }
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (Elem x = 0; x < n; ++x) {
    labels[x] = fmt::format("({},{})", a->label(x / nb), b->label(x % nb));
    for (Elem y = 0; y < n; ++y) {
      table[x * n + y] = static_cast<Elem>(
          a->mul(x / nb, y / nb) * nb + b->mul(x % nb, y % nb));
    }
  }
  return std::make_shared<const FiniteGroup>(std::move(table),
                                             std::move(labels));
}

GroupPtr make_power(GroupPtr group, std::size_t factors) {
  if (factors == 0) {
    return make_trivial();
  }
  auto const base = group->order();
  std::size_t n = 1;
  for (std::size_t f = 0; f < factors; ++f) {
    n *= base;
    if (n > 4096) {
      throw GroupError("power group too large");
    }
  }
  std::vector<std::vector<Elem>> digits(n, std::vector<Elem>(factors));
  for (std::size_t x = 0; x < n; ++x) {
    auto rest = x;
    for (std::size_t f = factors; f-- > 0;) {
      digits[x][f] = static_cast<Elem>(rest % base);
      rest /= base;
    }
  }
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      std::size_t z = 0;
      for (std::size_t f = 0; f < factors; ++f) {
        z = z * base + group->mul(digits[x][f], digits[y][f]);
      }
      table[x * n + y] = static_cast<Elem>(z);
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::string label = "(";
    for (std::size_t f = 0; f < factors; ++f) {
      label += (f ? "," : "") + group->label(digits[x][f]);
    }
    labels[x] = label + ")";
  }
  return std::make_shared<const FiniteGroup>(std::move(table),
                                             std::move(labels));
}

ActionTable trivial_action(FiniteGroup const& k, FiniteGroup const& l) {
  std::vector<Elem> id(k.order());
  std::iota(id.begin(), id.end(), Elem{0});
  return ActionTable(l.order(), id);
}

ActionTable inversion_action(FiniteGroup const& k, FiniteGroup const& l) {
  ActionTable action(l.order(), std::vector<Elem>(k.order()));
  for (Elem x = 0; x < l.order(); ++x) {
    for (Elem y = 0; y < k.order(); ++y) {
      action[x][y] = x % 2 == 0 ? y : k.inv(y);
    }
  }
  return action;
}

SemidirectProduct make_semidirect(GroupPtr k, GroupPtr l,
                                  ActionTable const& action) {
  auto const nk = k->order(), nl = l->order(), n = nk * nl;
  if (action.size() != nl) {
    throw GroupError("action table needs one row per element of L");
  }
  for (Elem x = 0; x < nl; ++x) {
    if (action[x].size() != nk) {
      throw GroupError("action row has the wrong length");
    }
    for (Elem y : action[x]) {
      if (y >= nk) {
        throw GroupError("action value out of range");
      }
    }
    std::vector<char> hit(nk);
    for (Elem y : action[x]) {
      hit[y] = 1;
    }
    if (!std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; }) ||
        homomorphism_violation(*k, *k, action[x])) {
      throw GroupError(fmt::format(
          "action of {} is not an automorphism of K", l->label(x)));
    }
  }
  for (Elem x = 0; x < nl; ++x) {
    for (Elem y = 0; y < nl; ++y) {
      for (Elem z = 0; z < nk; ++z) {
        if (action[l->mul(x, y)][z] != action[x][action[y][z]]) {
          throw GroupError(fmt::format(
              "action is not a homomorphism L -> Aut(K) at ({}, {})",
              l->label(x), l->label(y)));
        }
      }
    }
  }
  std::vector<Elem> table(n * n);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < n; ++a) {
    auto ka = a / nl, la = a % nl;
    labels[a] = fmt::format("({},{})", k->label(ka), l->label(la));
    for (Elem b = 0; b < n; ++b) {
      auto kb = b / nl, lb = b % nl;
      table[a * n + b] = static_cast<Elem>(
          k->mul(ka, action[la][kb]) * nl + l->mul(la, lb));
    }
  }
  auto g = std::make_shared<const FiniteGroup>(std::move(table),
                                               std::move(labels));
  std::vector<Elem> incl(nk), proj(n), sect(nl);
  for (Elem a = 0; a < nk; ++a) {
    incl[a] = static_cast<Elem>(a * nl + l->identity());
  }
  for (Elem a = 0; a < n; ++a) {
    proj[a] = static_cast<Elem>(a % nl);
  }
  for (Elem a = 0; a < nl; ++a) {
    sect[a] = static_cast<Elem>(k->identity() * nl + a);
  }
  return SemidirectProduct{g, GroupHom(k, g, std::move(incl)),
                           GroupHom(g, l, std::move(proj)),
                           GroupHom(l, g, std::move(sect))};
}

Quotient quotient_by(GroupPtr g, std::vector<Elem> elements) {
  auto const n = g->order();
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<char> member(n);
  for (Elem x : elements) {
    if (x >= n) {
      throw GroupError(fmt::format("subgroup element {} out of range", x));
    }
    member[x] = 1;
  }
  if (elements.empty() || !member[g->identity()]) {
    throw GroupError("subgroup must contain the identity");
  }
  for (Elem x : elements) {
    for (Elem y : elements) {
      if (!member[g->mul(x, g->inv(y))]) {
        throw GroupError(fmt::format("subset is not closed: {} * {}^-1",
                                     g->label(x), g->label(y)));
      }
    }
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem x : elements) {
      if (!member[g->mul(g->mul(a, x), g->inv(a))]) {
        throw GroupError(fmt::format("subgroup is not normal: {} {} {}^-1",
                                     g->label(a), g->label(x), g->label(a)));
      }
    }
  }
  auto const nk = elements.size();
  std::vector<Elem> position(n, 0);
  for (std::size_t i = 0; i < nk; ++i) {
    position[elements[i]] = static_cast<Elem>(i);
  }
  std::vector<Elem> ktable(nk * nk);
  std::vector<std::string> klabels(nk);
  for (std::size_t i = 0; i < nk; ++i) {
    klabels[i] = g->label(elements[i]);
    for (std::size_t j = 0; j < nk; ++j) {
      ktable[i * nk + j] = position[g->mul(elements[i], elements[j])];
    }
  }
  auto kernel = std::make_shared<const FiniteGroup>(std::move(ktable),
                                                    std::move(klabels));

  // Cosets gK, numbered in order of their minimal representative.
  constexpr Elem unset = ~Elem{0};
  std::vector<Elem> coset(n, unset);
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (coset[a] != unset) {
      continue;
    }
    auto id = static_cast<Elem>(reps.size());
    reps.push_back(a);
    for (Elem x : elements) {
      coset[g->mul(a, x)] = id;
    }
  }
  auto const nq = reps.size();
  std::vector<Elem> qtable(nq * nq);
  std::vector<std::string> qlabels(nq);
  for (std::size_t i = 0; i < nq; ++i) {
    qlabels[i] = g->label(reps[i]) + "K";
    for (std::size_t j = 0; j < nq; ++j) {
      qtable[i * nq + j] = coset[g->mul(reps[i], reps[j])];
    }
  }
  auto quotient = std::make_shared<const FiniteGroup>(std::move(qtable),
                                                      std::move(qlabels));
  return Quotient{kernel, quotient, GroupHom(kernel, g, elements),
                  GroupHom(g, quotient, coset)};
}

CosetSection coset_section(GroupHom const& projection) {
  if (!projection.surjective()) {
    throw GroupError("coset section of a map that is not surjective");
  }
  auto const& source = *projection.source();
  auto const& target = *projection.target();
  constexpr Elem unset = ~Elem{0};
  CosetSection result;
  result.rho.assign(target.order(), unset);
  for (Elem g = 0; g < source.order(); ++g) {
    auto& slot = result.rho[projection(g)];
    if (slot == unset) {
      slot = g;
    }
  }
  auto correction = source.inv(result.rho[target.identity()]);
  result.sigma.resize(target.order());
  for (Elem l = 0; l < target.order(); ++l) {
    result.sigma[l] = source.mul(result.rho[l], correction);
  }
  return result;
}

bool is_multiplicative(FiniteGroup const& l, FiniteGroup const& g,
                       std::span<const Elem> section) {
  return !homomorphism_violation(l, g, section).has_value();
}

}  // namespace simpfib
