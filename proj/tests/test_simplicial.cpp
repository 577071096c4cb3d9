#include <doctest.h>

#include "simpfib/bar.hpp"
#include "simpfib/simplicial.hpp"

using namespace simpfib;

namespace {

bool all_pass(std::vector<CheckRecord> const& records) {
  for (auto const& r : records) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("simplicial") {

TEST_CASE("constant simplicial groups") {
  auto g = SimplicialGroup::constant(make_cyclic(4), 3);
  CHECK(g->is_constant());
  CHECK(g->cutoff() == 3);
  for (int n = 1; n <= 3; ++n) {
    for (int i = 0; i <= n; ++i) CHECK(g->face(i, n, 3) == 3);
  }
  CHECK(g->degeneracy(0, 0, 2) == 2);
  CHECK(all_pass(check_simplicial_group(*g)));
  CHECK(all_pass(check_simplicial_identities(UnderlyingSet(g))));
}

TEST_CASE("the coskeleton is a simplicial group with a nontrivial d0") {
  auto g = SimplicialGroup::coskeleton(make_cyclic(2), 3);
  CHECK_FALSE(g->is_constant());
  CHECK(g->level(2).order() == 8);
  CHECK(all_pass(check_simplicial_group(*g)));
  CHECK(all_pass(check_simplicial_identities(UnderlyingSet(g))));
  bool d0_moves = false;
  for (Elem x = 0; x < 4; ++x) d0_moves |= g->face(0, 1, x) != g->face(1, 1, x);
  CHECK(d0_moves);
}

TEST_CASE("simplicial identities hold on BZ/4") {
  auto bz4 = make_bar(SimplicialGroup::constant(make_cyclic(4), 4), 4);
  auto records = check_simplicial_identities(*bz4);
  CHECK(all_pass(records));
  CHECK(records.size() > 10);
}

TEST_CASE("a corrupted face is caught with its location") {
  auto bz4 = make_bar(SimplicialGroup::constant(make_cyclic(4), 4), 4);
  TabulatedSet table(*bz4);
  CHECK(all_pass(check_simplicial_identities(table)));

  auto x = bz4->rank(bar({1, 1, 1}));
  auto broken = table.with_face(0, 3, x, bz4->rank(bar({1, 2})));
  auto records = check_simplicial_identities(broken);
  CHECK_FALSE(all_pass(records));
  bool located = false;
  for (auto const& r : records) {
    if (r.passed) continue;
    CHECK(r.dimension >= 3);
    REQUIRE(r.counterexample.has_value());
    located |= r.dimension == 3 &&
               r.counterexample->find("[1|1|1]") != std::string::npos;
  }
  CHECK(located);
}

TEST_CASE("reduced spaces") {
  CHECK(is_reduced(*make_bar(SimplicialGroup::constant(make_cyclic(3), 2), 2)));
  CHECK(is_reduced(DiscreteSet(1, 3)));
  CHECK_FALSE(is_reduced(DiscreteSet(2, 3)));
}

TEST_CASE("degenerate simplices of a bar construction") {
  auto bz4 = make_bar(SimplicialGroup::constant(make_cyclic(4), 3), 3);
  CHECK(is_degenerate(*bz4, 2, bz4->rank(bar({0, 2}))));
  CHECK(is_degenerate(*bz4, 2, bz4->rank(bar({2, 0}))));
  CHECK_FALSE(is_degenerate(*bz4, 2, bz4->rank(bar({1, 2}))));
  CHECK_FALSE(is_degenerate(*bz4, 1, bz4->rank(bar({1}))));
  CHECK(is_degenerate(*bz4, 1, bz4->rank(bar({0}))));
}

TEST_CASE("the identity map is simplicial") {
  SpacePtr bz2 = make_bar(SimplicialGroup::constant(make_cyclic(2), 4), 4);
  SimplicialMap id{bz2, bz2, [](int, Index x) { return x; }};
  auto check = check_simplicial_map(id);
  CHECK(check.kind == MapKind::simplicial);
  CHECK(all_pass(check.records));
}

TEST_CASE("swapping two edges breaks more than d0") {
  auto bz4 = make_bar(SimplicialGroup::constant(make_cyclic(4), 3), 3);
  auto one = bz4->rank(bar({1})), three = bz4->rank(bar({3}));
  SpacePtr space = bz4;
  SimplicialMap swap{space, space, [=](int n, Index x) {
    if (n != 1) return x;
    return x == one ? three : x == three ? one : x;
  }};
  auto check = check_simplicial_map(swap, 2);
  CHECK(check.kind == MapKind::neither);
}

TEST_CASE("discrete sets") {
  DiscreteSet d(3, 2);
  CHECK(d.count(2) == 3);
  CHECK(d.face(1, 2, 2) == 2);
  CHECK(all_pass(check_simplicial_identities(d)));
}

TEST_CASE("structure maps must be homomorphisms") {
  auto z4 = make_cyclic(4);
  std::vector<std::vector<std::vector<Elem>>> faces(2), degens(2);
  faces[1] = {{0, 1, 2, 3}, {0, 3, 2, 1}};
  degens[0] = {{0, 1, 2, 3}};
  CHECK_NOTHROW(SimplicialGroup({z4, z4}, faces, degens));
  faces[1][1] = {0, 2, 1, 3};  // not a homomorphism
  CHECK_THROWS(SimplicialGroup({z4, z4}, faces, degens));
}

}
