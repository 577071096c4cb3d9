#include <doctest.h>

#include "simpfib/group.hpp"
#include "simpfib/ses.hpp"

using namespace simpfib;

namespace {

Elem power(FiniteGroup const& g, Elem a, int m) {
  Elem out = g.identity();
  for (int i = 0; i < m; ++i) out = g.mul(out, a);
  return out;
}

bool all_pass(std::vector<CheckRecord> const& records) {
  for (auto const& r : records) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("group") {

TEST_CASE("cyclic groups") {
  CHECK(make_cyclic(1)->order() == 1);
  auto z4 = make_cyclic(4);
  CHECK(z4->mul(1, 2) == 3);
  CHECK(z4->inv(3) == 1);
  auto z2 = make_cyclic(2);
  CHECK(z2->mul(1, 1) == 0);
  CHECK_THROWS_AS(make_cyclic(0), GroupError);
  CHECK(make_cyclic(3, "c")->label(2) == "c^2");
}

TEST_CASE("symmetric group composes right to left") {
  auto s3 = make_symmetric(3);
  CHECK(s3->order() == 6);
  auto t = *s3->find("(12)");
  auto c = *s3->find("(123)");
  CHECK(s3->label(s3->mul(t, c)) == "(23)");
  CHECK(s3->label(s3->identity()) == "()");
  CHECK_THROWS_AS(make_symmetric(6), GroupError);
}

TEST_CASE("dihedral group of order 8 satisfies its presentation") {
  auto d8 = make_dihedral(8);
  REQUIRE(d8->order() == 8);
  Elem r = 1, s = 4;  // r^a s^b has id a + 4b
  CHECK(power(*d8, r, 4) == d8->identity());
  CHECK(power(*d8, r, 2) != d8->identity());
  CHECK(d8->mul(s, s) == d8->identity());
  CHECK(d8->mul(d8->mul(s, r), s) == d8->inv(r));
}

TEST_CASE("Klein four-group") {
  auto v = make_direct_product(make_cyclic(2), make_cyclic(2));
  for (Elem a = 1; a < 4; ++a) CHECK(v->element_order(a) == 2);
}

TEST_CASE("non-associative tables are rejected") {
  // The smallest loop that is not a group.
  std::vector<Elem> table = {0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0,
                             1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS((void)FiniteGroup(table), GroupError);
  CHECK_THROWS_AS(FiniteGroup({0, 1, 1, 1}), GroupError);
}

TEST_CASE("homomorphisms are validated") {
  auto z2 = make_cyclic(2), z4 = make_cyclic(4);
  CHECK_NOTHROW(GroupHom(z2, z4, {0, 2}));
  CHECK_THROWS_AS(GroupHom(z2, z4, {0, 1}), GroupError);
  GroupHom pi(z4, z2, {0, 1, 0, 1});
  CHECK(pi.surjective());
  CHECK_FALSE(pi.injective());
  CHECK(pi.kernel() == std::vector<Elem>{0, 2});
}

TEST_CASE("semidirect product with the inversion action is S3") {
  auto k = make_cyclic(3, "c"), l = make_cyclic(2, "t");
  auto sd = make_semidirect(k, l, inversion_action(*k, *l));
  auto const& g = *sd.group;
  CHECK(order_profile(g) == std::vector<std::size_t>{1, 2, 2, 2, 3, 3});
  CHECK(order_profile(g) == order_profile(*make_symmetric(3)));
  auto ct = *g.find("(c,t)"), ce = *g.find("(c,e)");
  CHECK(g.label(g.mul(ct, ce)) == "(e,t)");
  // σ is a section and a homomorphism
  for (Elem x = 0; x < l->order(); ++x) CHECK(sd.projection(sd.section(x)) == x);
  CHECK(is_multiplicative(*l, g, sd.section.image()));
}

TEST_CASE("trivial action gives the direct product") {
  auto k = make_cyclic(3), l = make_cyclic(2);
  auto sd = make_semidirect(k, l, trivial_action(*k, *l));
  CHECK(sd.group->same_table(*make_direct_product(k, l)));
}

TEST_CASE("coset sections") {
  auto z4 = make_cyclic(4), z2 = make_cyclic(2);
  auto s = coset_section(GroupHom(z4, z2, {0, 1, 0, 1}));
  CHECK(s.sigma == std::vector<Elem>{0, 1});
  CHECK(coset_section(GroupHom::identity(z4)).sigma ==
        std::vector<Elem>{0, 1, 2, 3});
  auto to_one = coset_section(GroupHom(z4, make_trivial(), {0, 0, 0, 0}));
  CHECK(to_one.sigma == std::vector<Elem>{0});
  // deterministic
  CHECK(coset_section(GroupHom(z4, z2, {0, 1, 0, 1})).sigma == s.sigma);
}

TEST_CASE("normalisation of a coset section") {
  auto s3 = make_symmetric(3);
  auto q = quotient_by(s3, {0, 3, 4});  // the rotations
  auto sec = coset_section(q.projection);
  CHECK(sec.sigma[q.quotient->identity()] == s3->identity());
  for (Elem x = 0; x < q.quotient->order(); ++x) {
    CHECK(q.projection(sec.sigma[x]) == x);
  }
}

TEST_CASE("quotients need normal subgroups") {
  auto s3 = make_symmetric(3);
  auto t = *s3->find("(12)");
  CHECK_THROWS_AS(quotient_by(s3, {s3->identity(), t}), GroupError);
}

TEST_CASE("short exact sequence validation") {
  auto z2 = make_cyclic(2), z4 = make_cyclic(4);
  auto good = ShortExactSequence::constant(GroupHom(z2, z4, {0, 2}),
                                           GroupHom(z4, z2, {0, 1, 0, 1}), 3);
  CHECK(all_pass(validate_ses(good)));

  // ι lands outside ker π.
  auto v = make_direct_product(z2, z2);
  auto bad = ShortExactSequence::constant(GroupHom(z2, v, {0, 1}),
                                          GroupHom(v, z2, {0, 1, 0, 1}), 3);
  auto records = validate_ses(bad);
  CHECK_FALSE(all_pass(records));
  bool exact_failed = false;
  for (auto const& r : records) {
    if (r.name == "exact" && !r.passed) {
      exact_failed = true;
      CHECK(r.counterexample.has_value());
    }
  }
  CHECK(exact_failed);
}

TEST_CASE("large groups use sampled associativity") {
  auto s5 = make_symmetric(5);
  CHECK_FALSE(s5->associativity().exhaustive);
  CHECK(make_cyclic(8)->associativity().exhaustive);
}

}
