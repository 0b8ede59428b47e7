#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "picring/presentations.hpp"
#include "picring/tworing.hpp"

using namespace picring;
using namespace picring::testing;

TEST_CASE("ring constructors satisfy the ring axioms", "[tworing]") {
  for (auto const& R : small_rings()) {
    INFO(R.name);
    CHECK(ring_axiom_failures(R).empty());
    CHECK(R.additive.order() <= 8);
  }
  CHECK(ring_axiom_failures(matrix_ring(2, 2)).empty());
  CHECK(matrix_ring(2, 2).additive.order() == 16);
}

TEST_CASE("the triangular ring is noncommutative", "[tworing]") {
  auto R  = matrix_ring(2, 2, true);
  bool nc = false;
  for (auto const& a : R.elements()) {
    for (auto const& b : R.elements()) {
      nc = nc || R.mul(a, b) != R.mul(b, a);
    }
  }
  CHECK(nc);
}

TEST_CASE("discrete 2-rings agree with the ring oracle", "[tworing]") {
  auto rings = small_rings();
  auto bad   = broken_rings();
  rings.insert(rings.end(), bad.begin(), bad.end());
  for (auto const& R : rings) {
    INFO(R.name);
    bool oracle = ring_axiom_failures(R).empty();
    auto r      = validate_two_ring(discrete_two_ring(R));
    CHECK(r.ok() == oracle);
    if (!r.ok()) {
      CHECK(cites_instance(r));
    }
  }
}

TEST_CASE("the unit 2-ring", "[tworing]") {
  auto U = unit_two_ring(3);
  auto r = validate_two_ring(U, 3);
  CHECK(r.ok());
  CHECK(r.checked >= 1000);
  CHECK(r.bound == 3);
  // the symmetry on the generator is the sign of s(*, *)
  auto s = sign_eval(parse_arrow("s(g:*,g:*)"));
  CHECK(U.base.sym(Elem{1}, Elem{1}) == Elem{s.sign});
  // the distributor on 2 = 1 + 1 is one symmetry
  CHECK(U.mult.u(Elem{2}, Elem{1}, Elem{1}) == Elem{1});
  CHECK(U.mult.u(Elem{3}, Elem{1}, Elem{1}) == Elem{1});
  CHECK(U.mult.u(Elem{4}, Elem{1}, Elem{1}) == Elem{0});
}

TEST_CASE("unit 2-ring verdicts are monotone in the bound", "[tworing]") {
  auto bad = unit_two_ring(3);
  bump(bad.mult.under, {Elem{2}, Elem{1}, Elem{1}});
  std::set<std::string> prev;
  for (Int n = 1; n <= 3; ++n) {
    auto r = validate_two_ring(unit_two_ring(n), n);
    CHECK(r.ok());
    auto b  = validate_two_ring(bad, n);
    auto ls = element_labels(b);
    std::set<std::string> cur(ls.begin(), ls.end());
    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    prev = std::move(cur);
  }
  CHECK_FALSE(prev.empty());
}

TEST_CASE("a zero distributor breaks the unit 2-ring", "[tworing]") {
  auto M       = unit_two_ring(2);
  M.mult.under = Table(M.base.H);
  auto r       = validate_two_ring(M, 2);
  REQUIRE_FALSE(r.ok());
  std::set<std::string> axioms;
  for (auto const& f : r.failures) {
    axioms.insert(f.axiom);
  }
  CHECK(axioms.count("distrib-interchange") == 1);
}

TEST_CASE("ring homomorphisms and their lifts", "[tworing]") {
  auto A  = cyclic_ring(4);
  auto B  = cyclic_ring(2);
  auto DA = discrete_two_ring(A);
  auto DB = discrete_two_ring(B);
  for (auto const& f : enumerate_homs(A.additive, B.additive)) {
    INFO(elem_str(f.images[0]));
    bool hom = is_ring_hom(f, A, B);
    CHECK(validate_two_ring_morphism(discrete_morphism(f, DA, DB), DA, DB)
              .ok()
          == hom);
  }
  auto six = cyclic_ring(6);
  auto D6  = discrete_two_ring(six);
  std::size_t n = 0;
  for (auto const& f : enumerate_homs(six.additive, six.additive)) {
    n += is_ring_hom(f, six, six);
    CHECK(validate_two_ring_morphism(discrete_morphism(f, D6, D6), D6, D6)
              .ok()
          == is_ring_hom(f, six, six));
  }
  CHECK(n == 1);
}

TEST_CASE("identity morphisms validate", "[tworing]") {
  auto U = unit_two_ring(2);
  CHECK(validate_two_ring_morphism(TwoRingMorphism::identity(U), U, U, 2).ok());
  for (auto const& R : small_rings()) {
    auto D = discrete_two_ring(R);
    CHECK(validate_two_ring_morphism(TwoRingMorphism::identity(D), D, D).ok());
  }
}

TEST_CASE("a wrong multiplicative unit component fails", "[tworing]") {
  auto U  = unit_two_ring(2);
  auto h  = TwoRingMorphism::identity(U);
  h.T0    = Elem{1};
  auto r  = validate_two_ring_morphism(h, U, U, 2);
  REQUIRE_FALSE(r.ok());
  CHECK(cites_instance(r));
}

TEST_CASE("explicit form of small discrete 2-rings", "[tworing]") {
  for (auto const& A : {PicardModel::one_object(Zn(2)),
                        PicardModel::discrete(Zn(2))}) {
    auto e = endo_two_ring(A);
    CHECK(e.report.ok());
    CHECK(validate_explicit_picard(e.ring.base).ok());
    CHECK(validate_explicit_two_ring(e.ring).ok());
    CHECK(e.hom.functors.size() == e.ring.base.objects.size());
  }
}

TEST_CASE("mutated explicit 2-rings fail", "[tworing]") {
  auto e = endo_two_ring(PicardModel::one_object(Zn(2)));
  REQUIRE(validate_explicit_two_ring(e.ring).ok());
  auto r = e.ring;
  r.mult_arr[1] = (r.mult_arr[1] + 1) % r.base.n_arr();
  CHECK_FALSE(validate_explicit_two_ring(r).ok());
  auto s = e.ring;
  s.rho.pop_back();
  auto rs = validate_explicit_two_ring(s);
  REQUIRE_FALSE(rs.ok());
  CHECK(rs.failures.front().axiom == "shape");
}

TEST_CASE("endomorphism caps are enforced", "[tworing]") {
  HomModelCaps caps;
  caps.max_functors = 1;
  CHECK_THROWS_AS(endo_two_ring(PicardModel::discrete(Zn(2)), caps),
                  cap_exceeded);
}
