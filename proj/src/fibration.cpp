#include "simpfib/fibration.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "simpfib/check.hpp"

namespace simpfib {

namespace {

constexpr Elem kNotInKernel = ~Elem{0};

}  // namespace

PseudoSection PseudoSection::from_cosets(ShortExactSequence const& ses) {
  std::vector<std::vector<Elem>> tables;
  for (int n = 0; n <= ses.cutoff(); ++n) {
    GroupHom pi(ses.group->level_ptr(n), ses.quotient->level_ptr(n),
                ses.projection[n]);
    tables.push_back(coset_section(pi).sigma);
  }
  return PseudoSection(std::move(tables));
}

std::vector<CheckRecord> validate_section(ShortExactSequence const& ses,
                                          PseudoSection const& section) {
  auto const& g = *ses.group;
  auto const& l = *ses.quotient;
  int const top = std::min(section.cutoff(), ses.cutoff());
  std::vector<CheckRecord> records;
  for (int n = 0; n <= top; ++n) {
    auto const& ln = l.level(n);
    auto const& table = section.tables()[n];
    bool shape = table.size() == ln.order() &&
                 std::all_of(table.begin(), table.end(), [&](Elem x) {
                   return x < g.level(n).order();
                 });
    if (!shape) {
      records.push_back(make_record("projection", n, false, 1,
                                    "section table has the wrong shape"));
      return records;
    }
  }
  for (int n = 0; n <= top; ++n) {
    auto const& ln = l.level(n);
    records.push_back(run_check("projection", n, ln.order(),
                                [&, n](Index x) -> std::optional<std::string> {
      auto y = ses.projection[n][section(n, static_cast<Elem>(x))];
      if (y != x) {
        return fmt::format("pi(sigma({})) = {}", ln.label(x), ln.label(y));
      }
      return std::nullopt;
    }));
    auto one = section(n, ln.identity());
    records.push_back(make_record(
        "normalized", n, one == g.one(n), 1,
        fmt::format("sigma(1) = {}", g.level(n).label(one))));
  }
  for (int n = 1; n <= top; ++n) {
    auto const& ln = l.level(n);
    records.push_back(run_check("face", n, ln.order(),
                                [&, n](Index x) -> std::optional<std::string> {
      auto e = static_cast<Elem>(x);
      for (int i = 1; i <= n; ++i) {
        auto lhs = g.face(i, n, section(n, e));
        auto rhs = section(n - 1, l.face(i, n, e));
        if (lhs != rhs) {
          return fmt::format("l={} i={}: {} != {}", ln.label(e), i,
                             g.level(n - 1).label(lhs),
                             g.level(n - 1).label(rhs));
        }
      }
      return std::nullopt;
    }));
  }
  for (int n = 0; n < top; ++n) {
    auto const& ln = l.level(n);
    records.push_back(run_check("degeneracy", n, ln.order(),
                                [&, n](Index x) -> std::optional<std::string> {
      auto e = static_cast<Elem>(x);
      for (int i = 0; i <= n; ++i) {
        auto lhs = g.degeneracy(i, n, section(n, e));
        auto rhs = section(n + 1, l.degeneracy(i, n, e));
        if (lhs != rhs) {
          return fmt::format("l={} i={}: {} != {}", ln.label(e), i,
                             g.level(n + 1).label(lhs),
                             g.level(n + 1).label(rhs));
        }
      }
      return std::nullopt;
    }));
  }
  return records;
}

bool is_multiplicative(ShortExactSequence const& ses,
                       PseudoSection const& section) {
  int const top = std::min(section.cutoff(), ses.cutoff());
  for (int n = 0; n <= top; ++n) {
    if (!is_multiplicative(ses.quotient->level(n), ses.group->level(n),
                           section.tables()[n])) {
      return false;
    }
  }
  return true;
}

Fibration::Fibration(SesPtr ses, PseudoSection section, int cutoff)
    : ses_(std::move(ses)), section_(std::move(section)), cutoff_(cutoff) {
  if (cutoff < 1) {
    throw FibrationError("fibration cutoff must be at least 1");
  }
  if (ses_->cutoff() < cutoff - 1 || section_.cutoff() < cutoff - 1) {
    throw FibrationError(fmt::format(
        "dimension {} needs the sequence and section up to level {}", cutoff,
        cutoff - 1));
  }
  for (int n = 0; n < cutoff; ++n) {
    auto const& table = section_.tables()[n];
    if (table.size() != ses_->quotient->level(n).order() ||
        std::any_of(table.begin(), table.end(), [&](Elem x) {
          return x >= ses_->group->level(n).order();
        })) {
      throw FibrationError(
          fmt::format("section table at level {} has the wrong shape", n));
    }
  }
  multiplicative_ = is_multiplicative(*ses_, section_);
  for (int n = 0; n <= ses_->cutoff(); ++n) {
    std::vector<Elem> index(ses_->group->level(n).order(), kNotInKernel);
    auto const& iota = ses_->inclusion[n];
    for (Elem k = 0; k < iota.size(); ++k) {
      index[iota[k]] = k;
    }
    kernel_index_.push_back(std::move(index));
  }
  bar_g_ = make_bar(ses_->group, cutoff);
  bar_k_ = make_bar(ses_->kernel, cutoff);
  bar_l_ = make_bar(ses_->quotient, cutoff);
  loops_ = std::make_shared<const LoopGroup>(bar_l_);
}

Elem Fibration::to_kernel(int n, Elem g, std::string_view context) const {
  auto k = kernel_index_.at(n).at(g);
  if (k == kNotInKernel) {
    throw FibrationError(fmt::format("{}: {} is not in the image of K_{}",
                                     context, ses_->group->level(n).label(g),
                                     n));
  }
  return k;
}

AlphaPair Fibration::alpha(int n, Elem g) const {
  auto const& G = *ses_->group;
  auto l = pi(n, g);
  auto k = to_kernel(n, G.mul(n, g, G.inv(n, sigma(n, l))), "alpha");
  return {k, l};
}

Elem Fibration::alpha_inverse(int n, AlphaPair pair) const {
  return ses_->group->mul(n, iota(n, pair.k), sigma(n, pair.l));
}

bool Fibration::alpha_twist_identity(int n, Elem g, Elem g_prime) const {
  auto const& G = *ses_->group;
  auto const& L = *ses_->quotient;
  int const m = n - 1;
  auto const [k, l] = alpha(n, g);
  auto const [k2, l2] = alpha(m, g_prime);
  auto lhs = alpha(m, G.mul(m, G.face(0, n, g), g_prime));
  auto l_out = L.mul(m, L.face(0, n, l), l2);
  auto k_out = G.face(0, n, iota(n, k));
  k_out = G.mul(m, k_out, G.face(0, n, sigma(n, l)));
  k_out = G.mul(m, k_out, iota(m, k2));
  k_out = G.mul(m, k_out, sigma(m, l2));
  k_out = G.mul(m, k_out, G.inv(m, sigma(m, l_out)));
  return lhs.l == l_out && iota(m, lhs.k) == k_out;
}

Elem Fibration::leading_product(BarSimplex const& ls, int start,
                                int count) const {
  auto const& L = *ses_->quotient;
  if (count < 0 || start >= ls.degree() || start - count + 1 < 0) {
    throw FibrationError(fmt::format(
        "leading product of {} factors from position {} in a list of {}",
        count, start, ls.degree()));
  }
  if (count == 0) {
    return L.one(start + 1);
  }
  Elem acc = ls[start];
  for (int t = 1; t < count; ++t) {
    int const level = start - t;
    acc = L.mul(level, L.face(0, level + 1, acc), ls[level]);
  }
  return acc;
}

std::vector<std::pair<Elem, Elem>> Fibration::generator_flanks(
    BarSimplex const& generator) const {
  auto const& G = *ses_->group;
  int const n = generator.degree() - 1;
  std::vector<std::pair<Elem, Elem>> flanks;
  flanks.reserve(n);
  // Q_j and R_j are built incrementally; Q_j, R_j live in level n - j.
  Elem q = generator[n];  // Q_0
  Elem r = 0;             // R_{j-1}, meaningful from j = 2 on
  for (int j = 1; j <= n; ++j) {
    int const level = n - j;
    auto const& L = *ses_->quotient;
    Elem a = G.inv(level, G.face(0, level + 1, sigma(level + 1, q)));
    if (j >= 2) {
      a = G.mul(level, G.face(0, level + 1, sigma(level + 1, r)), a);
    }
    Elem q_next = L.mul(level, L.face(0, level + 1, q), generator[level]);
    Elem r_next = j == 1 ? generator[level]
                         : L.mul(level, L.face(0, level + 1, r),
                                 generator[level]);
    Elem b = G.mul(level, sigma(level, q_next),
                   G.inv(level, sigma(level, r_next)));
    flanks.emplace_back(a, b);
    q = q_next;
    r = r_next;
  }
  return flanks;
}

BarSimplex Fibration::act_generator(BarSimplex const& generator,
                                    BarSimplex const& k, int sign) const {
  auto const& G = *ses_->group;
  int const n = k.degree();
  if (generator.degree() != n + 1) {
    throw FibrationError(fmt::format(
        "generator of dimension {} cannot act on a {}-simplex",
        generator.degree(), n));
  }
  auto const flanks = generator_flanks(generator);
  BarSimplex out = k;
  for (int j = 1; j <= n; ++j) {
    int const level = n - j;
    auto [a, b] = flanks[j - 1];
    if (sign < 0) {
      a = G.inv(level, a);
      b = G.inv(level, b);
    }
    Elem value = G.mul(level, G.mul(level, a, iota(level, k[level])), b);
    out[level] = to_kernel(level, value, fmt::format("action entry j={}", j));
  }
  return out;
}

BarSimplex Fibration::act(LoopWord const& w, BarSimplex const& k) const {
  if (w.degree != k.degree()) {
    throw FibrationError(fmt::format(
        "loop word of degree {} cannot act on a {}-simplex", w.degree,
        k.degree()));
  }
  BarSimplex out = k;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    out = act_generator(bar_l_->unrank(w.degree + 1, it->generator), out,
                        it->sign);
  }
  return out;
}

TwistedBar Fibration::psi(BarSimplex const& g) const {
  auto const& G = *ses_->group;
  int const n = g.degree();
  TwistedBar out;
  out.fibre.entries.resize(n);
  out.base.entries.resize(n);
  std::vector<AlphaPair> pairs(n);
  for (int i = 0; i < n; ++i) {
    pairs[i] = alpha(i, g[i]);
    out.base[i] = pairs[i].l;
  }
  if (n == 0) {
    return out;
  }
  out.fibre[n - 1] = pairs[n - 1].k;
  Elem p = out.base[n - 1];  // P_1
  for (int j = 1; j < n; ++j) {
    int const level = n - 1 - j;
    auto const& L = *ses_->quotient;
    Elem p_next = L.mul(level, L.face(0, level + 1, p), out.base[level]);
    Elem value = G.face(0, level + 1, sigma(level + 1, p));
    value = G.mul(level, value, iota(level, pairs[level].k));
    value = G.mul(level, value, sigma(level, pairs[level].l));
    value = G.mul(level, value, G.inv(level, sigma(level, p_next)));
    out.fibre[level] = to_kernel(level, value, fmt::format("psi entry j={}", j));
    p = p_next;
  }
  return out;
}

BarSimplex Fibration::psi_inverse(TwistedBar const& t) const {
  auto const& G = *ses_->group;
  auto const& L = *ses_->quotient;
  int const n = t.base.degree();
  if (t.fibre.degree() != n) {
    throw FibrationError("fibre and base of different dimensions");
  }
  BarSimplex g;
  g.entries.resize(n);
  if (n == 0) {
    return g;
  }
  g[n - 1] = alpha_inverse(n - 1, {t.fibre[n - 1], t.base[n - 1]});
  Elem p = t.base[n - 1];
  for (int j = 1; j < n; ++j) {
    int const level = n - 1 - j;
    Elem l = t.base[level];
    Elem p_next = L.mul(level, L.face(0, level + 1, p), l);
    Elem value = G.inv(level, G.face(0, level + 1, sigma(level + 1, p)));
    value = G.mul(level, value, iota(level, t.fibre[level]));
    value = G.mul(level, value, sigma(level, p_next));
    value = G.mul(level, value, G.inv(level, sigma(level, l)));
    auto k = to_kernel(level, value, fmt::format("psi inverse entry j={}", j));
    g[level] = alpha_inverse(level, {k, l});
    p = p_next;
  }
  return g;
}

Elem Fibration::conjugate(int n, Elem l, Elem k) const {
  auto const& G = *ses_->group;
  auto s = sigma(n, l);
  return to_kernel(n, G.mul(n, G.mul(n, s, iota(n, k)), G.inv(n, s)),
                   "conjugation");
}

BarSimplex Fibration::semidirect_action(Elem l, int n,
                                        BarSimplex const& k) const {
  if (!multiplicative_) {
    throw FibrationError("the section is not multiplicative");
  }
  if (k.degree() != n) {
    throw FibrationError("action degree mismatch");
  }
  auto const& L = *ses_->quotient;
  BarSimplex out = k;
  Elem power = l;
  for (int j = 1; j <= n; ++j) {
    int const level = n - j;
    power = L.face(0, level + 1, power);  // ∂_0^j l
    out[level] = conjugate(level, power, k[level]);
  }
  return out;
}

TwistedBar Fibration::phi(BarSimplex const& g) const {
  if (!multiplicative_) {
    throw FibrationError("the section is not multiplicative");
  }
  auto const& L = *ses_->quotient;
  int const n = g.degree();
  TwistedBar out;
  out.fibre.entries.resize(n);
  out.base.entries.resize(n);
  std::vector<AlphaPair> pairs(n);
  for (int i = 0; i < n; ++i) {
    pairs[i] = alpha(i, g[i]);
    out.base[i] = pairs[i].l;
    out.fibre[i] = pairs[i].k;
  }
  if (n == 0) {
    return out;
  }
  Elem p = out.base[n - 1];
  for (int j = 1; j < n; ++j) {
    int const level = n - 1 - j;
    out.fibre[level] =
        conjugate(level, L.face(0, level + 1, p), pairs[level].k);
    p = L.mul(level, L.face(0, level + 1, p), out.base[level]);
  }
  return out;
}

std::shared_ptr<const Fibration> Fibration::detached() const {
  auto copy = std::make_shared<Fibration>(*this);
  copy->loop_product_.reset();
  copy->semidirect_product_.reset();
  return copy;
}

std::shared_ptr<const TwistedProduct> Fibration::loop_product() const {
  if (!loop_product_) {
    auto transport = [self = detached()](int n, Index b, Index f) {
      auto word = self->loops_->twist(n, b);
      return self->bar_k_->rank(
          self->act(word, self->bar_k_->unrank(n - 1, f)));
    };
    loop_product_ =
        std::make_shared<const TwistedProduct>(bar_k_, bar_l_, transport);
  }
  return loop_product_;
}

std::shared_ptr<const TwistedProduct> Fibration::semidirect_product() const {
  if (!semidirect_product_) {
    auto transport = [self = detached()](int n, Index b, Index f) {
      auto tau = self->bar_l_->twist(self->bar_l_->unrank(n, b));
      return self->bar_k_->rank(self->semidirect_action(
          tau, n - 1, self->bar_k_->unrank(n - 1, f)));
    };
    semidirect_product_ =
        std::make_shared<const TwistedProduct>(bar_k_, bar_l_, transport);
  }
  return semidirect_product_;
}

SimplicialMap Fibration::psi_map() const {
  auto product = loop_product();
  return {bar_g_, product, [self = detached(), product](int n, Index x) {
            auto t = self->psi(self->bar_g_->unrank(n, x));
            return product->pair(n, self->bar_k_->rank(t.fibre),
                                 self->bar_l_->rank(t.base));
          }};
}

SimplicialMap Fibration::phi_map() const {
  auto product = semidirect_product();
  return {bar_g_, product, [self = detached(), product](int n, Index x) {
            auto t = self->phi(self->bar_g_->unrank(n, x));
            return product->pair(n, self->bar_k_->rank(t.fibre),
                                 self->bar_l_->rank(t.base));
          }};
}

std::string Fibration::format(TwistedBar const& t) const {
  return fmt::format("({},{})", bar_k_->format(t.fibre),
                     bar_l_->format(t.base));
}

namespace {

void add_prefixed(Report& report, std::string const& prefix,
                  std::vector<CheckRecord> records) {
  for (auto& r : records) {
    r.name = prefix + r.name;
    report.add(std::move(r));
  }
}

/// Bijectivity of a map BG_n -> BK_n × BL_n: cardinalities agree and no two
/// simplices share an image.
CheckRecord bijectivity(std::string name, int n, Fibration const& f,
                        std::function<TwistedBar(BarSimplex const&)> const& map) {
  auto const& bg = *f.bar_g();
  auto const& bk = *f.bar_k();
  auto const& bl = *f.bar_l();
  if (bg.count(n) != bk.count(n) * bl.count(n)) {
    return make_record(std::move(name), n, false, bg.count(n),
                       fmt::format("|BG_{}| = {} but |BK_{}|·|BL_{}| = {}", n,
                                   bg.count(n), n, n,
                                   bk.count(n) * bl.count(n)));
  }
  std::vector<Index> preimage(bg.count(n), ~Index{0});
  return run_check(std::move(name), n, bg.count(n),
                   [&](Index x) -> std::optional<std::string> {
    auto t = map(bg.unrank(n, x));
    Index y = bk.rank(t.fibre) * bl.count(n) + bl.rank(t.base);
    if (preimage[y] != ~Index{0}) {
      return fmt::format("{} and {} both map to {}", bg.format(n, preimage[y]),
                         bg.format(n, x), f.format(t));
    }
    preimage[y] = x;
    return std::nullopt;
  }, 1);
}

void add_map_checks(Report& report, std::string const& prefix,
                    SimplicialMap const& map, int max_dim) {
  auto check = check_simplicial_map(map, max_dim);
  add_prefixed(report, prefix, std::move(check.records));
}

}  // namespace

Report verify_theorem(Fibration const& f, VerifyOptions const& options) {
  int const top = options.max_dim;
  if (top < 1 || top > f.cutoff()) {
    throw FibrationError(fmt::format(
        "max dimension {} outside 1..{}", top, f.cutoff()));
  }
  Report report("verify-ses");
  auto& config = report.config();
  config["max_dim"] = top;
  config["seed"] = options.seed;
  config["samples"] = options.samples;
  config["multiplicative"] = f.multiplicative();

  add_prefixed(report, "ses.", validate_ses(f.ses()));
  if (!report.passed()) {
    // Everything below assumes an exact sequence.
    config["phi"] = false;
    return report;
  }
  // A broken section is reported but not fatal: the map checks below then
  // show where it breaks Ψ.
  add_prefixed(report, "section.", validate_section(f.ses(), f.section()));

  auto const& ses = f.ses();
  auto const& G = *ses.group;
  auto const& bg = *f.bar_g();
  auto const& bk = *f.bar_k();
  auto const& bl = *f.bar_l();

  // α on each level used by simplices of dimension <= top.
  for (int n = 0; n < top; ++n) {
    auto const& gn = G.level(n);
    report.add(run_check("alpha.inverse", n, gn.order(),
                         [&, n](Index x) -> std::optional<std::string> {
      auto g = static_cast<Elem>(x);
      auto back = f.alpha_inverse(n, f.alpha(n, g));
      if (back != g) {
        return fmt::format("alpha^-1(alpha({})) = {}", gn.label(g),
                           gn.label(back));
      }
      return std::nullopt;
    }));
    if (n >= 1) {
      report.add(run_check("alpha.face", n, gn.order(),
                           [&, n](Index x) -> std::optional<std::string> {
        auto g = static_cast<Elem>(x);
        auto a = f.alpha(n, g);
        for (int i = 1; i <= n; ++i) {
          auto lhs = f.alpha(n - 1, G.face(i, n, g));
          AlphaPair rhs{ses.kernel->face(i, n, a.k),
                        ses.quotient->face(i, n, a.l)};
          if (lhs != rhs) {
            return fmt::format("g={} i={}", gn.label(g), i);
          }
        }
        return std::nullopt;
      }));
      auto const& prev = G.level(n - 1);
      report.add(run_check("alpha.twist-identity", n,
                           gn.order() * prev.order(),
                           [&, n](Index x) -> std::optional<std::string> {
        auto g = static_cast<Elem>(x / prev.order());
        auto h = static_cast<Elem>(x % prev.order());
        if (!f.alpha_twist_identity(n, g, h)) {
          return fmt::format("g={} g'={}", gn.label(g), prev.label(h));
        }
        return std::nullopt;
      }));
    }
    if (n + 1 < top) {
      report.add(run_check("alpha.degeneracy", n, gn.order(),
                           [&, n](Index x) -> std::optional<std::string> {
        auto g = static_cast<Elem>(x);
        auto a = f.alpha(n, g);
        for (int i = 0; i <= n; ++i) {
          auto lhs = f.alpha(n + 1, G.degeneracy(i, n, g));
          AlphaPair rhs{ses.kernel->degeneracy(i, n, a.k),
                        ses.quotient->degeneracy(i, n, a.l)};
          if (lhs != rhs) {
            return fmt::format("g={} i={}", gn.label(g), i);
          }
        }
        return std::nullopt;
      }));
    }
  }

  // τ^{BL} and the ΩBL action on BK.
  LoopCarrier loop_carrier(f.loops());
  add_prefixed(report, "twisting.loop.",
               validate_twisting<LoopCarrier>(
                   bl, loop_carrier,
                   [&](int n, Index b) { return f.loops()->twist(n, b); }, top));
  int const action_dim = std::min(options.action_dim, top - 1);
  for (int n = 0; n <= action_dim; ++n) {
    auto const generators = bl.count(n + 1);
    report.add(run_check("action.degenerate-trivial", n,
                         generators * bk.count(n),
                         [&, n](Index t) -> std::optional<std::string> {
      Index x = t / bk.count(n), y = t % bk.count(n);
      if (!f.loops()->is_trivial_generator(n, x)) {
        return std::nullopt;
      }
      auto gen = bl.unrank(n + 1, x);
      auto k = bk.unrank(n, y);
      auto moved = f.act_generator(gen, k);
      if (moved != k) {
        return fmt::format("<{}>·{} = {}", bl.format(gen), bk.format(k),
                           bk.format(moved));
      }
      return std::nullopt;
    }));
  }
  ActionFn<LoopCarrier> loop_act = [&](int n, LoopWord const& w, Index k) {
    return bk.rank(f.act(w, bk.unrank(n, k)));
  };
  add_prefixed(report, "action.",
               validate_action<LoopCarrier>(
                   bk, loop_carrier, loop_act,
                   loop_samples(loop_carrier, options.samples, options.seed),
                   action_dim));

  // Ψ.
  for (int n = 0; n <= top; ++n) {
    report.add(bijectivity("psi.bijective", n, f,
                           [&](BarSimplex const& g) { return f.psi(g); }));
    report.add(run_check("psi.inverse", n, bg.count(n),
                         [&, n](Index x) -> std::optional<std::string> {
      auto g = bg.unrank(n, x);
      auto t = f.psi(g);
      auto back = f.psi_inverse(t);
      if (back != g) {
        return fmt::format("psi^-1(psi({})) = {}", bg.format(g),
                           bg.format(back));
      }
      if (f.psi(back) != t) {
        return fmt::format("psi(psi^-1({})) != itself", f.format(t));
      }
      return std::nullopt;
    }));
  }
  add_map_checks(report, "psi.", f.psi_map(), top);

  // Φ, when the section is a homomorphism.
  config["phi"] = f.multiplicative();
  if (f.multiplicative()) {
    FiniteCarrier l_carrier(ses.quotient);
    ActionFn<FiniteCarrier> l_act = [&](int n, Elem l, Index k) {
      return bk.rank(f.semidirect_action(l, n, bk.unrank(n, k)));
    };
    add_prefixed(report, "semidirect.action.",
                 validate_action<FiniteCarrier>(
                     bk, l_carrier, l_act, all_elements(l_carrier),
                     std::min(top, ses.quotient->cutoff())));
    add_prefixed(report, "semidirect.twisting.",
                 validate_twisting<FiniteCarrier>(
                     bl, l_carrier,
                     [&](int n, Index b) {
                       return bl.twist(bl.unrank(n, b));
                     },
                     top));
    for (int n = 0; n <= action_dim; ++n) {
      report.add(run_check("semidirect.factorization", n,
                           bl.count(n + 1) * bk.count(n),
                           [&, n](Index t) -> std::optional<std::string> {
        Index x = t / bk.count(n), y = t % bk.count(n);
        auto word = f.loops()->generator(n, x);
        auto k = bk.unrank(n, y);
        auto lhs = f.act(word, k);
        auto rhs = f.semidirect_action(loop_to_group(*f.loops(), word), n, k);
        if (lhs != rhs) {
          return fmt::format("<{}>·{}: {} != {}",
                             bl.format(n + 1, x), bk.format(k),
                             bk.format(lhs), bk.format(rhs));
        }
        return std::nullopt;
      }));
    }
    for (int n = 0; n <= top; ++n) {
      report.add(bijectivity("phi.bijective", n, f,
                             [&](BarSimplex const& g) { return f.phi(g); }));
      report.add(run_check("phi.agrees-psi", n, bg.count(n),
                           [&, n](Index x) -> std::optional<std::string> {
        auto g = bg.unrank(n, x);
        auto a = f.phi(g), b = f.psi(g);
        if (a != b) {
          return fmt::format("g={}: phi = {} but psi = {}", bg.format(g),
                             f.format(a), f.format(b));
        }
        return std::nullopt;
      }));
    }
    add_map_checks(report, "phi.", f.phi_map(), top);
  }
  return report;
}

}  // namespace simpfib
