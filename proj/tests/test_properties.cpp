// The main theorem and its invariants on a spread of extensions, including
// randomly chosen sections.

#include <doctest.h>

#include "simpfib/fibration.hpp"
#include "simpfib/homology.hpp"
#include "simpfib/rng.hpp"

using namespace simpfib;

namespace {

// Q8 on ids 0..7 = 1, -1, i, -i, j, -j, k, -k.
GroupPtr quaternions() {
  // unit index u in {1, i, j, k} and a sign
  int const mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  int const sgn[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  std::vector<Elem> table(64);
  for (Elem a = 0; a < 8; ++a) {
    for (Elem b = 0; b < 8; ++b) {
      int ua = a / 2, ub = b / 2;
      int sign = (a % 2 ? -1 : 1) * (b % 2 ? -1 : 1) * sgn[ua][ub];
      table[a * 8 + b] = static_cast<Elem>(2 * mul[ua][ub] + (sign < 0 ? 1 : 0));
    }
  }
  return std::make_shared<const FiniteGroup>(
      table, std::vector<std::string>{"1", "-1", "i", "-i", "j", "-j", "k", "-k"});
}

SesPtr constant_ses(Quotient const& q, int cutoff) {
  return std::make_shared<const ShortExactSequence>(
      ShortExactSequence::constant(q.inclusion, q.projection, cutoff));
}

SesPtr constant_ses(GroupHom const& iota, GroupHom const& pi, int cutoff) {
  return std::make_shared<const ShortExactSequence>(
      ShortExactSequence::constant(iota, pi, cutoff));
}

std::string failures(Report const& report) {
  std::string out;
  for (auto const& r : report.failures()) {
    out += r.name + "@" + std::to_string(r.dimension) + ": " +
           r.counterexample.value_or("") + "\n";
  }
  return out;
}

void check_theorem(SesPtr ses, PseudoSection section, int cutoff) {
  Fibration f(std::move(ses), std::move(section), cutoff);
  VerifyOptions options;
  options.max_dim = cutoff;
  options.samples = 200;
  auto report = verify_theorem(f, options);
  INFO(failures(report));
  CHECK(report.passed());
}

// A random normalised set section of a surjection, one table for all levels.
std::vector<Elem> random_section(GroupHom const& pi, SplitMix64& rng) {
  auto const& l = *pi.target();
  std::vector<std::vector<Elem>> fibres(l.order());
  for (Elem g = 0; g < pi.source()->order(); ++g) fibres[pi(g)].push_back(g);
  std::vector<Elem> sigma(l.order());
  for (Elem x = 0; x < l.order(); ++x) {
    sigma[x] = fibres[x][rng.below(fibres[x].size())];
  }
  sigma[l.identity()] = pi.source()->identity();
  return sigma;
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("the quaternion table is Q8") {
  auto q = quaternions();
  CHECK(order_profile(*q) == std::vector<std::size_t>{1, 2, 4, 4, 4, 4, 4, 4});
}

TEST_CASE("non-split cyclic extension Z/2 -> Z/8 -> Z/4") {
  auto z2 = make_cyclic(2), z4 = make_cyclic(4), z8 = make_cyclic(8);
  auto ses = constant_ses(GroupHom(z2, z8, {0, 4}),
                          GroupHom(z8, z4, {0, 1, 2, 3, 0, 1, 2, 3}), 3);
  check_theorem(ses, PseudoSection::from_cosets(*ses), 3);
}

TEST_CASE("the centre of D8") {
  auto q = quotient_by(make_dihedral(8), {0, 2});
  auto ses = constant_ses(q, 3);
  check_theorem(ses, PseudoSection::from_cosets(*ses), 3);
}

TEST_CASE("rotations in D8, with the split section") {
  auto d8 = make_dihedral(8);
  auto q = quotient_by(d8, {0, 1, 2, 3});
  auto ses = constant_ses(q, 3);
  auto section = PseudoSection::from_cosets(*ses);
  check_theorem(ses, section, 3);
  // s has order 2, so the coset section is multiplicative and Phi applies
  Fibration f(ses, section, 3);
  CHECK(f.multiplicative());
}

TEST_CASE("the centre of Q8") {
  auto q = quotient_by(quaternions(), {0, 1});
  auto ses = constant_ses(q, 3);
  auto section = PseudoSection::from_cosets(*ses);
  CHECK_FALSE(is_multiplicative(*ses, section));
  check_theorem(ses, section, 3);
}

TEST_CASE("the Klein subgroup of S4") {
  auto s4 = make_symmetric(4);
  std::vector<Elem> klein{s4->identity()};
  for (auto label : {"(12)(34)", "(13)(24)", "(14)(23)"}) {
    klein.push_back(*s4->find(label));
  }
  std::sort(klein.begin(), klein.end());
  auto q = quotient_by(s4, klein);
  CHECK(q.quotient->order() == 6);
  auto ses = constant_ses(q, 3);
  check_theorem(ses, PseudoSection::from_cosets(*ses), 3);
}

TEST_CASE("split extensions with an inversion action") {
  for (std::size_t k : {3u, 4u, 5u}) {
    auto sd = make_semidirect(make_cyclic(k), make_cyclic(2), inversion_action(
        *make_cyclic(k), *make_cyclic(2)));
    auto ses = constant_ses(sd.inclusion, sd.projection, 3);
    auto section = PseudoSection::uniform(sd.section.image(), 3);
    CHECK(is_multiplicative(*ses, section));
    CAPTURE(k);
    check_theorem(ses, section, 3);
  }
}

TEST_CASE("random sections") {
  SplitMix64 rng(2024);
  std::vector<Quotient> cases = {
      quotient_by(make_dihedral(8), {0, 2}),
      quotient_by(make_symmetric(3), {0, 3, 4}),
      quotient_by(make_cyclic(8), {0, 2, 4, 6}),
  };
  for (auto const& q : cases) {
    auto ses = constant_ses(q, 3);
    for (int trial = 0; trial < 3; ++trial) {
      auto table = random_section(q.projection, rng);
      auto section = PseudoSection::uniform(table, 3);
      CAPTURE(q.kernel->order());
      check_theorem(ses, section, 3);
    }
  }
}

TEST_CASE("Psi preserves simplex counts and is inverted by Psi^-1") {
  auto q = quotient_by(make_dihedral(8), {0, 2});
  auto ses = constant_ses(q, 3);
  Fibration f(ses, PseudoSection::from_cosets(*ses), 3);
  auto product = f.loop_product();
  auto const& bg = *f.bar_g();
  for (int n = 0; n <= 3; ++n) {
    REQUIRE(product->count(n) == bg.count(n));
    for (Index x = 0; x < bg.count(n); ++x) {
      auto g = bg.unrank(n, x);
      REQUIRE(f.psi_inverse(f.psi(g)) == g);
    }
  }
}

TEST_CASE("homology is invariant under Psi") {
  auto q = quotient_by(quaternions(), {0, 1});
  auto ses = constant_ses(q, 3);
  Fibration f(ses, PseudoSection::from_cosets(*ses), 3);
  auto bg = homology(normalized_chains(*f.bar_g()));
  auto twisted = homology(normalized_chains(*f.loop_product()));
  CHECK(bg == twisted);
  CHECK(bg[1].format() == "(Z/2)^2");
}

TEST_CASE("coskeleton sequences with random seeds") {
  auto z2 = make_cyclic(2), z4 = make_cyclic(4);
  auto ses = std::make_shared<const ShortExactSequence>(ShortExactSequence::coskeleton(
      GroupHom(z2, z4, {0, 2}), GroupHom(z4, z2, {0, 1, 0, 1}), 3));
  Fibration f(ses, PseudoSection::from_cosets(*ses), 3);
  for (std::uint64_t seed : {1u, 2u}) {
    VerifyOptions options;
    options.seed = seed;
    options.samples = 100;
    auto report = verify_theorem(f, options);
    INFO(failures(report));
    CHECK(report.passed());
  }
}

}
