#include "simpfib/ses.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "simpfib/check.hpp"

namespace simpfib {

namespace {

void check_levels(ShortExactSequence const& ses) {
  int const top = ses.cutoff();
  if (ses.kernel->cutoff() != top || ses.quotient->cutoff() != top ||
      ses.inclusion.size() != static_cast<std::size_t>(top + 1) ||
      ses.projection.size() != static_cast<std::size_t>(top + 1)) {
    throw SimplicialError("short exact sequence with mismatched cutoffs");
  }
}

}  // namespace

ShortExactSequence ShortExactSequence::constant(GroupHom const& inclusion,
                                                GroupHom const& projection,
                                                int cutoff) {
  if (inclusion.target() != projection.source() &&
      !inclusion.target()->same_table(*projection.source())) {
    throw GroupError("inclusion and projection do not share the middle group");
  }
  ShortExactSequence ses;
  ses.kernel = SimplicialGroup::constant(inclusion.source(), cutoff);
  ses.group = SimplicialGroup::constant(projection.source(), cutoff);
  ses.quotient = SimplicialGroup::constant(projection.target(), cutoff);
  ses.inclusion.assign(cutoff + 1, inclusion.image());
  ses.projection.assign(cutoff + 1, projection.image());
  return ses;
}

ShortExactSequence ShortExactSequence::coskeleton(GroupHom const& inclusion,
                                                  GroupHom const& projection,
                                                  int cutoff) {
  ShortExactSequence ses;
  ses.kernel = SimplicialGroup::coskeleton(inclusion.source(), cutoff);
  ses.group = SimplicialGroup::coskeleton(projection.source(), cutoff);
  ses.quotient = SimplicialGroup::coskeleton(projection.target(), cutoff);
  // Apply a map coordinatewise to mixed-radix tuples of length n + 1.
  auto lift = [](GroupHom const& h, int n) {
    auto const from = h.source()->order(), to = h.target()->order();
    std::size_t size = 1;
    for (int f = 0; f <= n; ++f) {
      size *= from;
    }
    std::vector<Elem> table(size);
    for (std::size_t x = 0; x < size; ++x) {
      std::vector<Elem> digits(n + 1);
      auto rest = x;
      for (int f = n; f >= 0; --f) {
        digits[f] = static_cast<Elem>(rest % from);
        rest /= from;
      }
      std::size_t y = 0;
      for (int f = 0; f <= n; ++f) {
        y = y * to + h(digits[f]);
      }
      table[x] = static_cast<Elem>(y);
    }
    return table;
  };
  for (int n = 0; n <= cutoff; ++n) {
    ses.inclusion.push_back(lift(inclusion, n));
    ses.projection.push_back(lift(projection, n));
  }
  return ses;
}

std::vector<CheckRecord> validate_ses(ShortExactSequence const& ses) {
  check_levels(ses);
  std::vector<CheckRecord> records;
  auto const& k = *ses.kernel;
  auto const& g = *ses.group;
  auto const& l = *ses.quotient;
  for (auto const& [name, group] :
       {std::pair{"K", ses.kernel}, std::pair{"G", ses.group},
        std::pair{"L", ses.quotient}}) {
    for (auto r : check_simplicial_group(*group)) {
      r.name = fmt::format("{}.{}", name, r.name);
      records.push_back(std::move(r));
    }
    UnderlyingSet set(group);
    for (auto r : check_simplicial_identities(set)) {
      r.name = fmt::format("{}.{}", name, r.name);
      records.push_back(std::move(r));
    }
  }
  for (int n = 0; n <= ses.cutoff(); ++n) {
    auto const& iota = ses.inclusion[n];
    auto const& pi = ses.projection[n];
    auto const& kn = k.level(n);
    auto const& gn = g.level(n);
    auto const& ln = l.level(n);
    bool sizes = iota.size() == kn.order() && pi.size() == gn.order() &&
                 std::all_of(iota.begin(), iota.end(),
                             [&](Elem x) { return x < gn.order(); }) &&
                 std::all_of(pi.begin(), pi.end(),
                             [&](Elem x) { return x < ln.order(); });
    records.push_back(make_record("tables", n, sizes, 1,
                                  "inclusion or projection table has the wrong shape"));
    if (!sizes) {
      continue;
    }
    auto hom = [](FiniteGroup const& a, FiniteGroup const& b,
                  std::vector<Elem> const& t) -> std::optional<std::string> {
      if (auto bad = homomorphism_violation(a, b, t)) {
        return fmt::format("({}, {})", a.label(bad->first),
                           a.label(bad->second));
      }
      return std::nullopt;
    };
    auto iota_bad = hom(kn, gn, iota);
    records.push_back(make_record("inclusion.homomorphism", n, !iota_bad,
                                  kn.order() * kn.order(), iota_bad));
    auto pi_bad = hom(gn, ln, pi);
    records.push_back(make_record("projection.homomorphism", n, !pi_bad,
                                  gn.order() * gn.order(), pi_bad));

    std::vector<char> hit(gn.order());
    std::optional<std::string> not_injective;
    for (Elem x = 0; x < kn.order(); ++x) {
      if (hit[iota[x]]++) {
        not_injective = fmt::format("{} hit twice", gn.label(iota[x]));
        break;
      }
    }
    records.push_back(make_record("inclusion.injective", n, !not_injective,
                                  kn.order(), not_injective));
    std::vector<char> covered(ln.order());
    for (Elem x : pi) {
      covered[x] = 1;
    }
    auto missing = std::find(covered.begin(), covered.end(), 0);
    records.push_back(make_record(
        "projection.surjective", n, missing == covered.end(), gn.order(),
        missing == covered.end()
            ? std::string()
            : fmt::format("{} not hit",
                          ln.label(static_cast<Elem>(missing - covered.begin())))));

    // image ι = ker π: every image lies in the kernel and the sizes agree.
    std::optional<std::string> exactness;
    for (Elem x = 0; x < kn.order() && !exactness; ++x) {
      if (pi[iota[x]] != ln.identity()) {
        exactness = fmt::format("pi(iota({})) = {}", kn.label(x),
                                ln.label(pi[iota[x]]));
      }
    }
    if (!exactness) {
      auto kernel_size = std::count(pi.begin(), pi.end(), ln.identity());
      if (static_cast<std::size_t>(kernel_size) != kn.order()) {
        exactness = fmt::format("|ker pi| = {} but |K| = {}", kernel_size,
                                kn.order());
      }
    }
    records.push_back(make_record("exact", n, !exactness, kn.order(), exactness));

    std::optional<std::string> commute;
    for (int i = 0; i <= n && n >= 1 && !commute; ++i) {
      for (Elem x = 0; x < kn.order() && !commute; ++x) {
        if (g.face(i, n, iota[x]) != ses.inclusion[n - 1][k.face(i, n, x)]) {
          commute = fmt::format("d_{} iota({})", i, kn.label(x));
        }
      }
      for (Elem x = 0; x < gn.order() && !commute; ++x) {
        if (l.face(i, n, pi[x]) != ses.projection[n - 1][g.face(i, n, x)]) {
          commute = fmt::format("d_{} pi({})", i, gn.label(x));
        }
      }
    }
    for (int i = 0; i <= n && n < ses.cutoff() && !commute; ++i) {
      for (Elem x = 0; x < kn.order() && !commute; ++x) {
        if (g.degeneracy(i, n, iota[x]) !=
            ses.inclusion[n + 1][k.degeneracy(i, n, x)]) {
          commute = fmt::format("s_{} iota({})", i, kn.label(x));
        }
      }
      for (Elem x = 0; x < gn.order() && !commute; ++x) {
        if (l.degeneracy(i, n, pi[x]) !=
            ses.projection[n + 1][g.degeneracy(i, n, x)]) {
          commute = fmt::format("s_{} pi({})", i, gn.label(x));
        }
      }
    }
    records.push_back(make_record("simplicial", n, !commute,
                                  kn.order() + gn.order(), commute));
  }
  return records;
}

}  // namespace simpfib
