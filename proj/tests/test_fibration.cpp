#include <doctest.h>

#include <filesystem>

#include "simpfib/fibration.hpp"
#include "simpfib/spec_io.hpp"

using namespace simpfib;

namespace {

std::filesystem::path data(char const* name) {
  return std::filesystem::path(SIMPFIB_SOURCE_DIR) / "data" / name;
}

Fibration from_file(char const* name, int cutoff) {
  auto spec = load_ses(data(name), cutoff);
  return Fibration(spec.ses, spec.section, cutoff);
}

Fibration constant(GroupHom const& iota, GroupHom const& pi, int cutoff) {
  auto ses = std::make_shared<const ShortExactSequence>(
      ShortExactSequence::constant(iota, pi, cutoff));
  return Fibration(ses, PseudoSection::from_cosets(*ses), cutoff);
}

CheckRecord const& record(Report const& r, std::string const& prefix) {
  auto const* found = r.find(prefix);
  REQUIRE(found != nullptr);
  return *found;
}

// For a constant sequence every ∂_0 is the identity, so Ψ has the closed form
// fibre_i = σ(P) g_i σ(P π(g_i))^{-1} with P = π(g_{n-1} ⋯ g_{i+1}) and
// base_i = π(g_i).
TwistedBar psi_closed_form(Fibration const& f, BarSimplex const& g) {
  auto const& G = f.ses().group->level(0);
  auto const& L = f.ses().quotient->level(0);
  auto const& sigma = f.section();
  int const n = g.degree();
  TwistedBar out;
  out.fibre.entries.resize(n);
  out.base.entries.resize(n);
  Elem p = L.identity();
  for (int i = n - 1; i >= 0; --i) {
    Elem const l = f.pi(0, g[i]);
    Elem const x = G.mul(G.mul(sigma(0, p), g[i]), G.inv(sigma(0, L.mul(p, l))));
    out.fibre[i] = f.to_kernel(0, x, "oracle");
    out.base[i] = l;
    p = L.mul(p, l);
  }
  return out;
}

}  // namespace

TEST_SUITE("fibration") {

TEST_CASE("alpha on Z/2 -> Z/4 -> Z/2") {
  auto f = from_file("z4.json", 3);
  CHECK(f.alpha(0, 3) == AlphaPair{1, 1});
  CHECK(f.alpha(0, 2) == AlphaPair{1, 0});
  CHECK(f.alpha(0, 1) == AlphaPair{0, 1});
  for (Elem g = 0; g < 4; ++g) CHECK(f.alpha_inverse(0, f.alpha(0, g)) == g);
  CHECK_FALSE(f.multiplicative());
}

TEST_CASE("Psi on the worked example") {
  auto f = from_file("z4.json", 3);
  auto t = f.psi(bar({3, 1}));
  CHECK(t.fibre == bar({1, 1}));
  CHECK(t.base == bar({1, 1}));
  CHECK(f.format(t) == "([1|1],[1|1])");
  CHECK(f.psi_inverse(t) == bar({3, 1}));
  CHECK(f.psi(BarSimplex{}) == TwistedBar{});
}

TEST_CASE("Psi matches the closed form on constant sequences") {
  auto z2 = make_cyclic(2), z4 = make_cyclic(4), z8 = make_cyclic(8);
  std::vector<Fibration> cases = {
      from_file("z4.json", 3), from_file("s3_split.json", 3),
      constant(GroupHom(z2, z8, {0, 4}), GroupHom(z8, z4, {0, 1, 2, 3, 0, 1, 2, 3}), 3)};
  for (auto const& f : cases) {
    auto const& bg = *f.bar_g();
    for (int n = 0; n <= 3; ++n) {
      for (Index x = 0; x < bg.count(n); ++x) {
        auto g = bg.unrank(n, x);
        REQUIRE(f.psi(g) == psi_closed_form(f, g));
      }
    }
  }
}

TEST_CASE("leading products") {
  auto f = from_file("z4.json", 4);
  // over L = Z/2, [1|1|0] written top first
  auto ls = bar({1, 1, 0});
  CHECK(f.leading_product(ls, 2, 1) == 1);
  CHECK(f.leading_product(ls, 2, 2) == 0);
  CHECK(f.leading_product(ls, 2, 3) == 0);
  CHECK(f.leading_product(ls, 1, 2) == 1);
  CHECK(f.leading_product(ls, 2, 0) == 0);
}

TEST_CASE("the loop action on the worked example") {
  auto f = from_file("z4.json", 3);
  auto flanks = f.generator_flanks(bar({1, 1}));
  REQUIRE(flanks.size() == 1);
  CHECK(flanks[0] == std::pair<Elem, Elem>{3, 3});
  CHECK(f.act_generator(bar({1, 1}), bar({0})) == bar({1}));
  CHECK(f.act_generator(bar({1, 1}), bar({1}), -1) == bar({0}));
}

TEST_CASE("the action of words") {
  auto f = from_file("z4.json", 4);
  auto const& loops = *f.loops();
  auto const& bl = *f.bar_l();
  auto a = loops.generator(1, bl.rank(bar({1, 1})));
  auto b = loops.generator(1, bl.rank(bar({1, 0})), -1);
  auto const& bk = *f.bar_k();
  for (Index x = 0; x < bk.count(1); ++x) {
    auto k = bk.unrank(1, x);
    CHECK(f.act(loops.identity(1), k) == k);
    CHECK(f.act(loops.multiply(a, b), k) == f.act(a, f.act(b, k)));
    CHECK(f.act(loops.invert(a), f.act(a, k)) == k);
  }
}

TEST_CASE("Psi is invertible on every simplex") {
  auto f = from_file("s3_split.json", 3);
  auto const& bg = *f.bar_g();
  for (int n = 0; n <= 3; ++n) {
    for (Index x = 0; x < bg.count(n); ++x) {
      auto g = bg.unrank(n, x);
      REQUIRE(f.psi_inverse(f.psi(g)) == g);
    }
  }
}

TEST_CASE("Phi and the L-action for the split extension") {
  auto f = from_file("s3_split.json", 3);
  REQUIRE(f.multiplicative());
  auto const& G = f.ses().group->level(0);
  auto const& K = f.ses().kernel->level(0);
  auto ct = *G.find("(c,t)"), c2e = *G.find("(c^2,e)");
  auto t = f.phi(BarSimplex{{c2e, ct}});
  CHECK(f.format(t) == "([c|c],[t|e])");
  CHECK(t == f.psi(BarSimplex{{c2e, ct}}));

  auto c = *K.find("c"), c2 = *K.find("c^2");
  auto tl = *f.ses().quotient->level(0).find("t");
  auto moved = f.semidirect_action(tl, 2, BarSimplex{{c2, c}});
  CHECK(f.bar_k()->format(moved) == "[c^2|c]");
  CHECK(f.conjugate(0, tl, c) == c2);
}

TEST_CASE("Phi is refused for a non-multiplicative section") {
  auto f = from_file("z4.json", 3);
  CHECK_THROWS_AS(f.phi(bar({1})), FibrationError);
  CHECK_THROWS_AS(f.semidirect_action(1, 1, bar({1})), FibrationError);
}

TEST_CASE("the theorem holds for Z/2 -> Z/4 -> Z/2 to dimension 4") {
  auto f = from_file("z4.json", 4);
  VerifyOptions options;
  options.max_dim = 4;
  auto report = verify_theorem(f, options);
  for (auto const& r : report.failures()) {
    FAIL_CHECK(r.name, " ", r.dimension, ": ", r.counterexample.value_or(""));
  }
  CHECK(report.passed());
  CHECK(record(report, "psi.bijective").passed);
  CHECK(report.find("phi.") == nullptr);
  CHECK(report.config()["phi"] == false);
}

TEST_CASE("the theorem and its semidirect form hold for S3") {
  auto f = from_file("s3_split.json", 3);
  auto report = verify_theorem(f, {});
  CHECK(report.passed());
  CHECK(record(report, "phi.agrees-psi").passed);
  CHECK(record(report, "semidirect.factorization").passed);
  CHECK(report.config()["multiplicative"] == true);
}

TEST_CASE("a section that is not normalised is reported where it fails") {
  auto spec = load_ses(data("z4.json"), 3);
  Fibration f(spec.ses, PseudoSection::uniform({2, 1}, 3), 3);
  auto report = verify_theorem(f, {});
  CHECK_FALSE(report.passed());
  auto const& bad = record(report, "section.normalized");
  CHECK_FALSE(bad.passed);
  CHECK(bad.dimension == 0);
  REQUIRE(bad.counterexample.has_value());
  CHECK(bad.counterexample->find("2") != std::string::npos);
  CHECK(record(report, "ses.").passed);
}

TEST_CASE("a table that misses the fibre is not a section") {
  auto spec = load_ses(data("z4.json"), 3);
  auto records = validate_section(*spec.ses, PseudoSection::uniform({0, 2}, 3));
  bool projection_failed = false;
  for (auto const& r : records) {
    if (r.name == "projection" && !r.passed) projection_failed = true;
  }
  CHECK(projection_failed);
}

TEST_CASE("a bad sequence stops the run early") {
  auto z2 = make_cyclic(2);
  auto v = make_direct_product(z2, z2);
  auto ses = std::make_shared<const ShortExactSequence>(ShortExactSequence::constant(
      GroupHom(z2, v, {0, 1}), GroupHom(v, z2, {0, 1, 0, 1}), 3));
  Fibration f(ses, PseudoSection::uniform({0, 1}, 3), 3);
  auto report = verify_theorem(f, {});
  CHECK_FALSE(report.passed());
  CHECK(report.find("psi.") == nullptr);
}

TEST_CASE("trivial kernel or quotient") {
  auto s3 = make_symmetric(3);
  auto one = make_trivial();
  // K = 1: the base is BG itself and the fibre is a point.
  auto f = constant(GroupHom(one, s3, {0}), GroupHom::identity(s3), 3);
  // L = 1: the fibre is BG and the base a point.
  auto h = constant(GroupHom::identity(s3), GroupHom(s3, one, std::vector<Elem>(6, 0)), 3);
  auto const& bg = *f.bar_g();
  for (int n = 0; n <= 3; ++n) {
    for (Index x = 0; x < bg.count(n); ++x) {
      auto g = bg.unrank(n, x);
      auto ones = BarSimplex{std::vector<Elem>(n, 0)};
      REQUIRE(f.psi(g) == TwistedBar{ones, g});
      REQUIRE(h.psi(g) == TwistedBar{g, ones});
    }
  }
  CHECK(verify_theorem(f, {}).passed());
  CHECK(verify_theorem(h, {}).passed());
}

TEST_CASE("a coskeleton sequence, where d0 is not the identity") {
  auto f = from_file("z4_coskeleton.json", 3);
  CHECK_FALSE(f.ses().group->is_constant());
  auto report = verify_theorem(f, {});
  for (auto const& r : report.failures()) {
    FAIL_CHECK(r.name, " ", r.dimension, ": ", r.counterexample.value_or(""));
  }
  CHECK(report.passed());
}

TEST_CASE("the sequence must reach the requested dimension") {
  auto spec = load_ses(data("z4.json"), 2);
  CHECK_THROWS_AS(Fibration(spec.ses, spec.section, 5), FibrationError);
}

TEST_CASE("products and maps outlive their fibration") {
  std::shared_ptr<const TwistedProduct> product;
  SimplicialMap psi;
  {
    auto f = from_file("z4.json", 3);
    product = f.loop_product();
    psi = f.psi_map();
  }
  CHECK(product->count(2) == 16);
  CHECK(psi.component(2, 5) < product->count(2));
  CHECK(check_simplicial_map(psi).kind == MapKind::simplicial);
}

}
