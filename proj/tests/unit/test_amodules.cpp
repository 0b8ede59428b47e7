#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "picring/amodules.hpp"

using namespace picring;
using namespace picring::testing;

TEST_CASE("each carrier has exactly one strict unit structure", "[amodules]") {
  for (auto const& [name, C] : skeletal_corpus()) {
    INFO(name);
    auto s = search_strict_unit_module(C, 3);
    CHECK(s.found.size() == 1);
    CHECK(s.candidates >= s.found.size());
    REQUIRE(s.found.size() == s.ell.size());
    if (s.found.size() == 1) {
      CHECK(validate_module(s.found[0], 3).ok());
      // the left action is the symmetry against the generator's image
      for (auto const& x : C.objects()) {
        CHECK(s.ell[0](x) == C.sym(x, x));
      }
    }
  }
}

TEST_CASE("strict structures with the wrong action fail", "[amodules]") {
  auto C = PicardModel::make(Zn(2), Zn(2), {{Elem{1}}});
  auto M = strict_unit_module(C, GroupHom::zero(C.G, C.H),
                              BiadditivePairing::zero(C.G, C.H), 3);
  auto r = validate_module(M, 3);
  REQUIRE_FALSE(r.ok());
  CHECK(cites_instance(r));
}

TEST_CASE("twisted structures are modules equivalent to the strict one",
          "[amodules]") {
  for (auto const& [name, C] : skeletal_corpus()) {
    auto s = search_strict_unit_module(C, 3);
    REQUIRE(s.found.size() == 1);
    for (auto const& e : enumerate_homs(C.G, C.H)) {
      INFO(name << " twist " << elem_str(e.images.empty() ? Elem{}
                                                           : e.images[0]));
      auto T = twisted_unit_module(s.found[0], e);
      CHECK(validate_module(T, 3).ok());
      auto q = check_unit_equivalence(T, 3);
      CHECK(q.ok());
    }
  }
}

TEST_CASE("induced morphisms are valid and unique", "[amodules]") {
  auto M = twisted_xy_module();
  auto N = search_strict_unit_module(M.carrier, 3).found.at(0);
  auto H = MonFunctor::identity(M.carrier);
  auto h = induced_unit_morphism(M, N, H);
  CHECK(validate_module_morphism(h, M, N, 3).ok());
  CHECK(count_unit_morphisms(M, N, H, 3) == 1);
  // strict to strict over the identity: only the identity
  CHECK(count_unit_morphisms(N, N, H, 3) == 1);
  auto id = ModuleMorphism::identity(N);
  CHECK(validate_module_morphism(id, N, N, 3).ok());
}

TEST_CASE("composites with identities", "[amodules]") {
  auto M  = twisted_xy_module();
  auto N  = search_strict_unit_module(M.carrier, 3).found.at(0);
  auto h  = induced_unit_morphism(M, N, MonFunctor::identity(M.carrier));
  auto k1 = compose_module_morphisms(ModuleMorphism::identity(M), h, M, M);
  auto k2 = compose_module_morphisms(h, ModuleMorphism::identity(N), M, N);
  for (auto const& k : {k1, k2}) {
    CHECK(validate_module_morphism(k, M, N, 3).ok());
    for (auto const& a : ints({-2, -1, 0, 1, 2})) {
      for (auto const& m : M.carrier.objects()) {
        CHECK(k.delta(a, m) == h.delta(a, m));
      }
    }
  }
}

TEST_CASE("the equivalence report covers both directions", "[amodules]") {
  auto r = check_unit_equivalence(twisted_xy_module(), 3);
  CHECK(r.ok());
  CHECK(r.checked > 100);
  auto bad = twisted_xy_module();
  bump(bad.gamma, {Elem{1}});
  auto rb = check_unit_equivalence(bad, 3);
  REQUIRE_FALSE(rb.ok());
  CHECK(rb.failures.front().axiom.rfind("source/", 0) == 0);
}

TEST_CASE("presheaf encodings agree with ring homomorphisms", "[amodules]") {
  struct Case {
    FiniteRing A;
    Int        n;
  };
  std::vector<Case> cases = {{cyclic_ring(4), 2},
                             {cyclic_ring(6), 3},
                             {cyclic_ring(6), 2},
                             {cyclic_ring(2), 2},
                             {product_ring(cyclic_ring(2), cyclic_ring(2)), 2}};
  for (auto const& [A, n] : cases) {
    for (auto const& f : enumerate_homs(A.additive, Zn(n))) {
      INFO(A.name << " on Z/" << n);
      auto P      = presheaf_encoding(A, n, f);
      bool module = validate_module(P.module).ok();
      bool functr =
          validate_enriched_functor(P.functor, P.source, P.target).ok();
      CHECK(module == functr);
      CHECK(module == is_ring_hom(f, A, cyclic_ring(n)));
    }
  }
}
