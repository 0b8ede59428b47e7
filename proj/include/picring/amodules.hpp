// Modules over a 2-ring in elementwise form, their morphisms, and the
// comparison of modules over the unit 2-ring with plain Picard models.
//
// beta(a1, a2, m): a1(a2 m) -> (a1 a2)m and gamma(m): m -> 1m.  The ring's
// coherence arrows enter with the reversed orientation, as in the one-object
// SPC-category of the ring.

#ifndef PICRING_AMODULES_HPP_
#define PICRING_AMODULES_HPP_

#include <vector>

#include "enriched.hpp"
#include "models.hpp"
#include "report.hpp"
#include "tworing.hpp"

namespace picring {

  struct ModuleModel {
    TwoRingModel ring;
    PicardModel  carrier;
    BilinearMap  action;  // ring.base x carrier -> carrier
    Table        beta;
    Table        gamma;
  };

  Report validate_module(ModuleModel const& M, Int bound = -1);

  // delta(a, m): a.Hm -> H(a.m)
  struct ModuleMorphism {
    MonFunctor H;
    Table      delta;

    static ModuleMorphism identity(ModuleModel const& M);
  };

  Report validate_module_morphism(ModuleMorphism const& h,
                                  ModuleModel const& M, ModuleModel const& N,
                                  Int bound = -1);

  // h2 after h1
  ModuleMorphism compose_module_morphisms(ModuleMorphism const& h1,
                                          ModuleMorphism const& h2,
                                          ModuleModel const&    M,
                                          ModuleModel const&    N);

  // ---------------------------------------------------------------------
  // Modules over the unit 2-ring

  // Strict action n.x on M with L(n, x; h) = h.ell(x) and
  // under(n; x, x') = C(n, 2) B(x, x'); over, beta and gamma vanish.
  ModuleModel strict_unit_module(PicardModel const& M, GroupHom const& ell,
                                 BiadditivePairing const& B, Int bound = 3);

  struct UnitModuleSearch {
    std::vector<ModuleModel>       found;
    std::vector<GroupHom>          ell;
    std::vector<BiadditivePairing> pairing;
    std::size_t                    candidates = 0;
  };

  // Every strict structure of the above shape that validates.
  UnitModuleSearch search_strict_unit_module(PicardModel const& M,
                                             Int bound = 3);

  // The strict module twisted by a homomorphism e: G -> H:
  // gamma(m) = e(m), beta(a1, a2, m) = -a1 a2 e(m).
  ModuleModel twisted_unit_module(ModuleModel const& strict,
                                  GroupHom const&    e);

  // The morphism M -> N over H determined by delta(1, m) = H(gamma_m) and
  // linearity in the ring variable; N must be strict.
  ModuleMorphism induced_unit_morphism(ModuleModel const& M,
                                       ModuleModel const& N,
                                       MonFunctor const&  H);

  // Number of valid morphisms over H among all choices of delta(1, -),
  // each extended by linearity.
  std::size_t count_unit_morphisms(ModuleModel const& M, ModuleModel const& N,
                                   MonFunctor const& H, Int bound = -1);

  // Builds the induced morphism from M to the strict structure on its
  // carrier, its inverse, and checks both composites are identities.
  Report check_unit_equivalence(ModuleModel const& M, Int bound = -1);

  // ---------------------------------------------------------------------
  // A discrete ring acting on Z/n through f, as a module and as an
  // SPC-functor between one-object categories.

  struct PresheafEncoding {
    ModuleModel      module;
    EnrichedCategory source;
    EnrichedCategory target;
    EnrichedFunctor  functor;
  };

  PresheafEncoding presheaf_encoding(FiniteRing const& A, Int n,
                                     GroupHom const& f);

}  // namespace picring

#endif  // PICRING_AMODULES_HPP_
