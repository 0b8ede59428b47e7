// 2-rings over skeletal models, their morphisms, discrete 2-rings from
// finite rings, the unit 2-ring and the endomorphism 2-ring of a tiny model.
//
// alpha(a, b, c): (ab)c -> a(bc), rho(a): a1 -> a, lambda(b): 1b -> b.

#ifndef PICRING_TWORING_HPP_
#define PICRING_TWORING_HPP_

#include <string>
#include <vector>

#include "enriched.hpp"
#include "models.hpp"
#include "report.hpp"
#include "table.hpp"

namespace picring {

  struct TwoRingModel {
    PicardModel base;
    BilinearMap mult;  // base x base -> base
    Elem        one;
    Table       alpha;
    Table       rho;
    Table       lambda;
  };

  Report validate_two_ring(TwoRingModel const& r, Int bound = -1);

  // The additive functor H with multiplicative components
  // T(a, b): Ha.Hb -> H(ab) and T0: 1 -> H1.
  struct TwoRingMorphism {
    MonFunctor H_plus;
    Table      T;
    Elem       T0;

    static TwoRingMorphism identity(TwoRingModel const& r);
  };

  Report validate_two_ring_morphism(TwoRingMorphism const& h,
                                    TwoRingModel const& A,
                                    TwoRingModel const& B, Int bound = -1);

  // One-object SPC-category: g o f = g.f, with the coherence arrows of the
  // 2-ring reversed.
  EnrichedCategory one_object_category(TwoRingModel const& r);

  // ---------------------------------------------------------------------
  // Finite rings

  struct FiniteRing {
    std::string name;
    FinAbGroup  additive;
    Table       mul;  // explicit on all pairs
    Elem        one;

    std::vector<Elem> elements() const {
      return enumerate_elements(additive, 0);
    }
  };

  // Z/n
  FiniteRing cyclic_ring(Int n);
  // Product ring R x S
  FiniteRing product_ring(FiniteRing const& R, FiniteRing const& S);
  // k x k matrices over Z/p, or upper triangular ones
  FiniteRing matrix_ring(Int p, int k, bool upper = false);
  // Z/p[x] / (f) for a monic f given by its lower coefficients
  FiniteRing quotient_poly_ring(Int p, std::vector<Int> const& lower);

  // Direct check of the unital ring axioms on the tables.
  std::vector<std::string> ring_axiom_failures(FiniteRing const& R);

  TwoRingModel discrete_two_ring(FiniteRing const& R);

  // Ring homomorphism check and its discrete lift.
  bool is_ring_hom(GroupHom const& f, FiniteRing const& R, FiniteRing const& S);
  TwoRingMorphism discrete_morphism(GroupHom const& f, TwoRingModel const& A,
                                    TwoRingModel const& B);

  // (Z, Z/2, mn mod 2) with integer multiplication.
  TwoRingModel unit_two_ring(Int bound = 3);

  // ---------------------------------------------------------------------
  // 2-rings on explicit categories, with every structure arrow given by
  // index.

  struct ExplicitTwoRing {
    ExplicitPicard   base;
    std::vector<int> mult_obj;  // a * n + b
    std::vector<int> mult_arr;  // f * m + g
    int              one = 0;
    std::vector<int> under;     // (a n + b) n + b': ab + ab' -> a(b + b')
    std::vector<int> over;      // (a n + a') n + b: ab + a'b -> (a + a')b
    std::vector<int> alpha;     // (ab)c -> a(bc)
    std::vector<int> rho;       // a1 -> a
    std::vector<int> lambda;    // 1b -> b
  };

  Report validate_explicit_two_ring(ExplicitTwoRing const& r);

  struct EndoTwoRing {
    HomModel        hom;
    ExplicitTwoRing ring;
    Report          report;
  };

  // [A, A] with composition as multiplication.  Throws cap_exceeded.
  EndoTwoRing endo_two_ring(PicardModel const& A,
                            HomModelCaps const& caps = {});

}  // namespace picring

#endif  // PICRING_TWORING_HPP_
