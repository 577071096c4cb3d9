#include "demo.hpp"

#include <fmt/format.h>
#include <stdexcept>

#include "simpfib/fibration.hpp"
#include "simpfib/spec_io.hpp"

namespace simpfib {

namespace {

using nlohmann::json;

/// Top-first entries, cycling through `pattern`.
BarSimplex cycled(std::vector<Elem> const& pattern, int degree) {
  BarSimplex s;
  s.entries.resize(degree);
  for (int p = 0; p < degree; ++p) {
    s[degree - 1 - p] = pattern[p % pattern.size()];
  }
  return s;
}

void show_section(std::string& out, Fibration const& f) {
  auto const& L = f.ses().quotient->level(0);
  auto const& G = f.ses().group->level(0);
  out += "section sigma:";
  for (Elem l = 0; l < L.order(); ++l) {
    out += fmt::format(" {} -> {}", L.label(l), G.label(f.section()(0, l)));
    out += l + 1 < L.order() ? "," : "\n";
  }
  out += fmt::format("multiplicative: {}\n", f.multiplicative() ? "yes" : "no");
}

void show_psi(std::string& out, Fibration const& f, BarSimplex const& g) {
  auto const& ses = f.ses();
  auto const& bg = *f.bar_g();
  int const n = g.degree();
  out += fmt::format("\nPsi of g = {}\n", bg.format(g));
  BarSimplex ls;
  ls.entries.resize(n);
  for (int i = n - 1; i >= 0; --i) {
    auto a = f.alpha(i, g[i]);
    ls[i] = a.l;
    out += fmt::format("  alpha(g_{}) = alpha({}) = (k={}, l={})\n", i,
                       ses.group->level(i).label(g[i]),
                       ses.kernel->level(i).label(a.k),
                       ses.quotient->level(i).label(a.l));
  }
  for (int j = 1; j < n; ++j) {
    int const level = n - 1 - j;
    auto p = f.leading_product(ls, n - 1, j);
    out += fmt::format("  P_{} = {} in L_{}\n", j,
                       ses.quotient->level(level + 1).label(p), level + 1);
  }
  auto t = f.psi(g);
  out += fmt::format("  Psi(g) = {}\n", f.format(t));
  out += fmt::format("  Psi^-1(Psi(g)) = {}\n", bg.format(f.psi_inverse(t)));
}

void show_action(std::string& out, Fibration const& f,
                 BarSimplex const& generator, BarSimplex const& k) {
  auto const& ses = f.ses();
  auto const& G = *ses.group;
  auto word = f.bar_l()->format(generator);
  word = "<" + word.substr(1, word.size() - 2) + ">";
  out += fmt::format("\nloop action {} . {}\n", word, f.bar_k()->format(k));
  auto flanks = f.generator_flanks(generator);
  int const n = k.degree();
  for (int j = 1; j <= n; ++j) {
    int const level = n - j;
    auto [a, b] = flanks[j - 1];
    out += fmt::format("  j={}: A = {}, B = {}, A k_{} B = {}\n", j,
                       G.level(level).label(a), G.level(level).label(b), level,
                       G.level(level).label(G.mul(
                           level, G.mul(level, a, f.iota(level, k[level])), b)));
  }
  out += fmt::format("  result {}\n", f.bar_k()->format(f.act_generator(generator, k)));
}

void show_phi(std::string& out, Fibration const& f, BarSimplex const& g) {
  auto const& ses = f.ses();
  int const n = g.degree();
  out += fmt::format("\nPhi of g = {}\n", f.bar_g()->format(g));
  BarSimplex ls;
  ls.entries.resize(n);
  for (int i = 0; i < n; ++i) {
    ls[i] = f.alpha(i, g[i]).l;
  }
  for (int j = 1; j < n; ++j) {
    int const level = n - 1 - j;
    auto p = f.leading_product(ls, n - 1, j);
    auto d0p = ses.quotient->face(0, level + 1, p);
    auto k = f.alpha(level, g[level]).k;
    out += fmt::format("  entry {}: d0(P_{}) * k_{} = {} * {} = {}\n", level, j,
                       level, ses.quotient->level(level).label(d0p),
                       ses.kernel->level(level).label(k),
                       ses.kernel->level(level).label(f.conjugate(level, d0p, k)));
  }
  auto phi = f.phi(g);
  out += fmt::format("  Phi(g) = {}\n", f.format(phi));
  out += fmt::format("  agrees with Psi: {}\n", phi == f.psi(g) ? "yes" : "no");
}

}  // namespace

std::vector<DemoExample> const& demo_examples() {
  static std::vector<DemoExample> const examples = {
      {"z4", "1 -> Z/2 -> Z/4 -> Z/2 -> 1, non-split",
       json::parse(R"({
         "name": "z4",
         "K": {"kind": "cyclic", "n": 2},
         "G": {"kind": "cyclic", "n": 4},
         "L": {"kind": "cyclic", "n": 2},
         "iota": [0, 2],
         "pi": [0, 1, 0, 1]
       })")},
      {"s3", "1 -> Z/3 -> S3 -> Z/2 -> 1, split by l -> (e,l)",
       json::parse(R"({
         "name": "s3",
         "semidirect": {
           "K": {"kind": "cyclic", "n": 3, "symbol": "c"},
           "L": {"kind": "cyclic", "n": 2, "symbol": "t"},
           "action": "inversion"
         }
       })")},
  };
  return examples;
}

std::string demo_text(std::string const& name, int dim) {
  if (dim < 1 || dim > 4) {
    throw std::invalid_argument("demo dimension must be between 1 and 4");
  }
  DemoExample const* example = nullptr;
  for (auto const& e : demo_examples()) {
    if (e.name == name) {
      example = &e;
    }
  }
  if (!example) {
    throw std::invalid_argument(fmt::format("unknown example \"{}\"", name));
  }
  auto spec = parse_ses(example->spec, dim);
  Fibration f(spec.ses, spec.section, dim);
  auto const& G = f.ses().group->level(0);
  auto const& L = f.ses().quotient->level(0);

  std::string out = fmt::format("example {}: {}\n", name, example->summary);
  show_section(out, f);
  if (name == "z4") {
    show_psi(out, f, cycled({3, 1}, dim));
    show_action(out, f, cycled({1}, dim), cycled({0}, dim - 1));
  } else {
    auto ct = *G.find("(c,t)");
    auto c2e = *G.find("(c^2,e)");
    auto g = cycled({ct, c2e}, dim);
    show_psi(out, f, g);
    show_phi(out, f, g);
    auto const& K = f.ses().kernel->level(0);
    auto k = cycled({*K.find("c"), *K.find("c^2")}, dim);
    auto t = *L.find("t");
    out += fmt::format("\nL-action {} . {} = {}\n", L.label(t),
                       f.bar_k()->format(k),
                       f.bar_k()->format(f.semidirect_action(t, dim, k)));
  }
  return out;
}

}  // namespace simpfib
