#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "picring/enriched.hpp"
#include "picring/tworing.hpp"

using namespace picring;
using namespace picring::testing;

namespace {
  std::set<std::string> labels(Report const& r) {
    auto v = element_labels(r);
    return {v.begin(), v.end()};
  }
}  // namespace

TEST_CASE("ring multiplication is bilinear", "[enriched]") {
  auto U = unit_two_ring(2);
  auto r = validate_bilinear(U.mult, 2);
  CHECK(r.ok());
  CHECK(r.checked > 100);
  for (auto const& R : small_rings()) {
    INFO(R.name);
    CHECK(validate_bilinear(discrete_two_ring(R).mult).ok());
  }
}

TEST_CASE("bilinear failures name the broken square", "[enriched]") {
  auto U = unit_two_ring(2);
  auto f = U.mult;
  bump(f.left, {Elem{1}, Elem{1}, Elem{1}});
  auto r = validate_bilinear(f, 2);
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(r.failures.front().instance.empty());
  f = U.mult;
  f.obj.set({Elem{2}, Elem{2}}, Elem{5});
  r = validate_bilinear(f, 2);
  REQUIRE_FALSE(r.ok());
  CHECK(labels(r).size() > 0);
}

TEST_CASE("one-object wrappers of valid 2-rings validate", "[enriched]") {
  auto U = unit_two_ring(2);
  CHECK(validate_enriched_category(one_object_category(U), 2).ok());
  for (auto const& R : small_rings()) {
    INFO(R.name);
    CHECK(validate_enriched_category(
              one_object_category(discrete_two_ring(R)))
              .ok());
  }
}

TEST_CASE("enriched and 2-ring validators agree label for label",
          "[enriched]") {
  std::size_t pairs = 0;
  for (auto const& [name, M] : two_ring_mutations()) {
    INFO(name);
    auto r1 = validate_two_ring(M, 2);
    auto r2 = validate_enriched_category(one_object_category(M), 2);
    CHECK(labels(r1) == labels(r2));
    CHECK(r1.checked == r2.checked);
    ++pairs;
  }
  CHECK(pairs >= 10);
}

TEST_CASE("identity functor and transformation", "[enriched]") {
  auto E  = one_object_category(unit_two_ring(2));
  auto F  = EnrichedFunctor::identity(E);
  CHECK(validate_enriched_functor(F, E, E, 2).ok());
  auto s = EnrichedNat::identity(F, E, E);
  CHECK(validate_enriched_nat(s, F, F, E, E, 2).ok());

  auto D = one_object_category(discrete_two_ring(cyclic_ring(4)));
  auto G = EnrichedFunctor::identity(D);
  CHECK(validate_enriched_nat(EnrichedNat::identity(G, D, D), G, G, D, D).ok());
}

TEST_CASE("a perturbed transformation component fails", "[enriched]") {
  auto E = one_object_category(unit_two_ring(2));
  auto F = EnrichedFunctor::identity(E);
  auto s = EnrichedNat::identity(F, E, E);
  bump(s.kappa[0], {Elem{1}});
  auto r = validate_enriched_nat(s, F, F, E, E, 2);
  REQUIRE_FALSE(r.ok());
  CHECK_FALSE(r.failures.front().instance.empty());
}

TEST_CASE("functors compose", "[enriched]") {
  auto A  = discrete_two_ring(cyclic_ring(4));
  auto B  = discrete_two_ring(cyclic_ring(2));
  auto EA = one_object_category(A);
  auto EB = one_object_category(B);
  auto f  = GroupHom{Zn(4), Zn(2), {Elem{1}}};
  auto h  = discrete_morphism(f, A, B);
  EnrichedFunctor F{{0}, {h.H_plus}, {h.T}, {h.T0}};
  REQUIRE(validate_enriched_functor(F, EA, EB).ok());
  auto IB = EnrichedFunctor::identity(EB);
  auto K  = compose_enriched(F, IB, EA, EB, EB);
  CHECK(validate_enriched_functor(K, EA, EB).ok());
  auto IA = EnrichedFunctor::identity(EA);
  auto K2 = compose_enriched(IA, F, EA, EA, EB);
  CHECK(validate_enriched_functor(K2, EA, EB).ok());

  auto EU = one_object_category(unit_two_ring(2));
  auto IU = EnrichedFunctor::identity(EU);
  auto KU = compose_enriched(IU, IU, EU, EU, EU);
  CHECK(validate_enriched_functor(KU, EU, EU, 2).ok());
}

TEST_CASE("functors that break the unit fail", "[enriched]") {
  auto A  = discrete_two_ring(cyclic_ring(4));
  auto B  = discrete_two_ring(cyclic_ring(2));
  auto EA = one_object_category(A);
  auto EB = one_object_category(B);
  auto f  = GroupHom{Zn(4), Zn(2), {Elem{0}}};
  auto h  = discrete_morphism(f, A, B);
  EnrichedFunctor F{{0}, {h.H_plus}, {h.T}, {h.T0}};
  CHECK_FALSE(validate_enriched_functor(F, EA, EB).ok());
}

TEST_CASE("element labels drop object bindings", "[enriched]") {
  Report r;
  r.fail("alpha-object", {{"@x", "*"}, {"a", "1"}, {"b", "0"}});
  auto ls = element_labels(r);
  REQUIRE(ls.size() == 1);
  CHECK(ls.front().find("@x") == std::string::npos);
  CHECK(ls.front().find("alpha-object") != std::string::npos);
}
