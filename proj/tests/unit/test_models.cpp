#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "picring/models.hpp"
#include "picring/presentations.hpp"

using namespace picring;
using namespace picring::testing;

TEST_CASE("corpus models validate", "[models]") {
  for (auto const& [name, m] : skeletal_corpus()) {
    INFO(name);
    CHECK(validate_picard(m).ok());
    CHECK(validate_explicit_picard(from_skeletal(m)).ok());
  }
}

TEST_CASE("a pairing with c(x,x) of order 2 is not symmetric", "[models]") {
  auto m = PicardModel::make(Zn(4), Zn(4), {{Elem{1}}});
  auto r = validate_picard(m);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failures.front().axiom == "pairing");
}

TEST_CASE("tensor of arrows is a functor", "[models]") {
  for (auto const& [name, m] : skeletal_corpus()) {
    INFO(name);
    auto xs = m.objects();
    auto hs = m.autos();
    for (auto const& x : xs) {
      for (auto const& y : xs) {
        for (auto const& h : hs) {
          for (auto const& h2 : hs) {
            for (auto const& k : hs) {
              ModelArrow f{x, h}, f2{x, h2}, g{y, k}, g2{y, h};
              auto lhs = tensor(m, compose(m, f2, f), compose(m, g2, g));
              auto rhs = compose(m, tensor(m, f2, g2), tensor(m, f, g));
              CHECK(lhs == rhs);
            }
          }
        }
        CHECK(tensor(m, {x, m.H.zero()}, {y, m.H.zero()})
              == ModelArrow{m.G.add(x, y), m.H.zero()});
      }
    }
  }
  auto m = skeletal_corpus().front().model;
  CHECK_THROWS_AS(compose(m, {Elem{1}, Elem{0}}, {Elem{0}, Elem{0}}),
                  term_error);
}

TEST_CASE("evaluation respects every unit relation instance", "[models]") {
  auto   p = build_unit_presentation();
  Budget b = default_budget(p);
  b.depth  = 2;
  auto insts = instantiate_relations(p, b);
  REQUIRE(insts.size() > 50);
  for (auto const& [name, m] : skeletal_corpus()) {
    INFO(name);
    for (auto const& x : m.objects()) {
      Env env{{"*", x}};
      for (auto const& r : insts) {
        INFO(r.schema_id << ": " << print(r.lhs));
        CHECK(canonical_eval(m, r.lhs, env) == canonical_eval(m, r.rhs, env));
      }
    }
  }
}

TEST_CASE("symmetry evaluates to the pairing", "[models]") {
  auto m  = PicardModel::make(Zn(4), Zn(2), {{Elem{1}}});
  Env  e  = {{"x", Elem{1}}, {"y", Elem{3}}};
  auto ev = canonical_eval(m, parse_arrow("s(g:x,g:y)"), e);
  CHECK(ev.at == Elem{0});
  CHECK(ev.aut == Elem{1});
  auto ss = canonical_eval(m, parse_arrow("comp(s(g:y,g:x),s(g:x,g:y))"), e);
  CHECK(ss.aut == Elem{0});
  CHECK(canonical_eval(m, parse_arrow("s(g:3,g:3)")).aut == Elem{1});
}

TEST_CASE("canonical coherence of the corpus", "[models]") {
  for (auto const& [name, m] : skeletal_corpus()) {
    INFO(name);
    auto r = check_canonical_coherence(m);
    CHECK(r.ok());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("identity functors and zero transformations", "[models]") {
  for (auto const& [name, m] : skeletal_corpus()) {
    INFO(name);
    auto F = MonFunctor::identity(m);
    CHECK(validate_mon_functor(F, m, m).ok());
    CHECK(validate_mon_nat(MonNat{Table(m.H)}, F, F, m, m).ok());
    CHECK(compute_F0(m, m, F) == m.H.zero());
    auto FF = compose_functors(F, F, m, m);
    CHECK(same_functor(FF, F, m));
  }
}

TEST_CASE("a functor that ignores the symmetry fails", "[models]") {
  auto A = PicardModel::make(Zn(2), Zn(2), {{Elem{1}}});
  auto B = PicardModel::make(Zn(2), Zn(2), {{Elem{0}}});
  MonFunctor F{GroupHom::identity(A.G), GroupHom::identity(A.H), Table(A.H),
               std::nullopt};
  auto r = validate_mon_functor(F, A, B);
  REQUIRE_FALSE(r.ok());
  CHECK(r.failures.front().axiom == "symmetry");
  CHECK_FALSE(r.failures.front().instance.empty());
}

TEST_CASE("the inverse functor and its lemmas", "[models]") {
  for (auto const& [name, m] : skeletal_corpus()) {
    INFO(name);
    auto s = build_inv(m);
    CHECK(s.lemmas.ok());
    CHECK(validate_mon_functor(s.functor, m, m).ok());
    auto twice = compose_functors(s.functor, s.functor, m, m);
    for (auto const& x : m.objects()) {
      CHECK(twice.psi0(x) == x);
    }
    for (auto const& h : m.autos()) {
      CHECK(twice.psi1(h) == h);
    }
  }
}

TEST_CASE("inverse must negate automorphisms", "[models]") {
  auto g = FinAbGroup({4, 4});
  auto m = PicardModel::make(g, Zn(4), {{Elem{0}, Elem{1}}, {Elem{3}, Elem{0}}});
  REQUIRE(validate_picard(m).ok());
  auto s = build_inv(m);
  REQUIRE(validate_mon_functor(s.functor, m, m).ok());
  auto naive       = s.functor;
  naive.psi1       = GroupHom::identity(m.H);
  auto r           = validate_mon_functor(naive, m, m);
  CHECK_FALSE(r.ok());
}

TEST_CASE("bang is the unique solution of its square", "[models]") {
  auto m = PicardModel::make(Zn(4), Zn(2), {{Elem{1}}});
  for (auto const& x : m.objects()) {
    for (auto const& y : m.objects()) {
      CHECK(m.H.is_reduced(bang(m, x, y)));
    }
  }
}

TEST_CASE("bullet isomorphisms on functor pairs", "[models]") {
  auto corpus = skeletal_corpus();
  std::size_t instances = 0;
  for (std::size_t i : {0u, 1u, 2u, 5u}) {
    for (std::size_t j : {0u, 2u, 5u}) {
      auto const& A  = corpus[i].model;
      auto const& B  = corpus[j].model;
      auto        Fs = enumerate_functors(A, B);
      REQUIRE_FALSE(Fs.empty());
      for (auto const& F : Fs) {
        CHECK(validate_mon_functor(F, A, B).ok());
        for (auto const& G : Fs) {
          for (auto const& s : enumerate_nats(F, G, A, B)) {
            INFO(corpus[i].name << " -> " << corpus[j].name);
            CHECK(validate_mon_nat(MonNat{s}, F, G, A, B).ok());
            CHECK(check_bullet_lemmas(A, B, F, G, MonNat{s}).ok());
            ++instances;
          }
        }
        CHECK(check_bullet_composite(A, B, B, F, MonFunctor::identity(B)).ok());
      }
    }
  }
  CHECK(instances >= 5);
}

TEST_CASE("hom models are Picard categories", "[models]") {
  auto A = PicardModel::one_object(Zn(2));
  auto B = PicardModel::make(Zn(2), Zn(2), {{Elem{1}}});
  for (auto const& [X, Y] : std::vector<std::pair<PicardModel, PicardModel>>{
           {A, A}, {B, A}, {A, B}}) {
    auto h = hom_model(X, Y);
    CHECK_FALSE(h.functors.empty());
    CHECK(validate_explicit_picard(h.cat).ok());
  }
  HomModelCaps tiny;
  tiny.max_functors = 1;
  CHECK_THROWS_AS(hom_model(B, B, tiny), cap_exceeded);
}
