// Concrete symmetric Picard categories.  A skeletal model is (G, H, c):
// objects are elements of G with + as tensor, every object has automorphism
// group H, and the symmetry at (x, y) is c(x, y).  Associators, unitors and
// the j's are identities.  Explicit models carry full finite tables.

#ifndef PICRING_MODELS_HPP_
#define PICRING_MODELS_HPP_

#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "report.hpp"
#include "table.hpp"
#include "terms.hpp"

namespace picring {

  struct PicardModel {
    FinAbGroup        G;
    FinAbGroup        H;
    BiadditivePairing c;
    Int               bound = 3;  // enumeration range for infinite factors

    static PicardModel discrete(FinAbGroup g, Int bound = 3);
    static PicardModel one_object(FinAbGroup h);
    // c given by its values on pairs of generators
    static PicardModel make(FinAbGroup                     g,
                            FinAbGroup                     h,
                            std::vector<std::vector<Elem>> cvals,
                            Int                            bound = 3);

    std::vector<Elem> objects() const {
      return enumerate_elements(G, bound);
    }
    std::vector<Elem> autos() const {
      return enumerate_elements(H, bound);
    }
    Elem sym(Elem const& x, Elem const& y) const {
      return c(x, y);
    }

    bool operator==(PicardModel const&) const = default;
  };

  struct ModelArrow {
    Elem at;
    Elem aut;
    bool operator==(ModelArrow const&) const = default;
  };

  // Throws term_error when the arrows are not composable.
  ModelArrow compose(PicardModel const& m, ModelArrow const& g,
                     ModelArrow const& f);
  ModelArrow tensor(PicardModel const& m, ModelArrow const& f,
                    ModelArrow const& g);

  Report validate_picard(PicardModel const& m);

  // ---------------------------------------------------------------------
  // Explicit tables.  Objects and arrows are indices; comp[g * n + f] is
  // g after f or -1.  assoc(x, y, z): x(yz) -> (xy)z, runit(x): xI -> x,
  // lunit(x): Ix -> x, sym(x, y): xy -> yx, j(x): I -> x* x.

  struct ExplicitPicard {
    struct Arrow {
      int         src = 0;
      int         dst = 0;
      std::string label;
    };

    std::vector<std::string> objects;
    std::vector<Arrow>       arrows;
    std::vector<int>         identity;
    std::vector<int>         comp;
    std::vector<int>         tensor_obj;
    std::vector<int>         tensor_arr;
    int                      unit = 0;
    std::vector<int>         dual;
    std::vector<int>         assoc;
    std::vector<int>         runit;
    std::vector<int>         lunit;
    std::vector<int>         sym;
    std::vector<int>         j;

    int n_obj() const {
      return static_cast<int>(objects.size());
    }
    int n_arr() const {
      return static_cast<int>(arrows.size());
    }
    int  compose(int g, int f) const;
    int  tensor_o(int x, int y) const;
    int  tensor_a(int f, int g) const;
    int  assoc_at(int x, int y, int z) const;
    int  sym_at(int x, int y) const;
  };

  Report validate_explicit_picard(ExplicitPicard const& e);

  // Tabulates a finite skeletal model.
  ExplicitPicard from_skeletal(PicardModel const& m);

  // ---------------------------------------------------------------------
  // Canonical arrows

  using Env = std::map<std::string, Elem>;

  // Object of m named by a term: generators are looked up in env, or read
  // as an integer when m.G is cyclic.
  Elem eval_obj(PicardModel const& m, ObjTerm const& x, Env const& env = {});

  // Evaluates an arrow built from a, r, l, s, j, identities, composition,
  // inverses and whiskering.
  ModelArrow canonical_eval(PicardModel const& m, ArrowTerm const& f,
                            Env const& env = {});

  struct CoherenceBounds {
    int         depth     = 2;
    std::size_t max_edges = 3;
    std::size_t max_terms = 4000;
  };

  // Every pair of parallel canonical paths between terms over distinct
  // variables x, y, z must evaluate equally at every instantiation.
  Report check_canonical_coherence(PicardModel const&     m,
                                   CoherenceBounds const& b = {});

  // ---------------------------------------------------------------------
  // Monoidal functors between skeletal models

  struct MonFunctor {
    GroupHom            psi0;  // objects
    GroupHom            psi1;  // automorphisms
    Table               F2;    // F2(a, b): Fa Fb -> F(a + b)
    std::optional<Elem> F0;    // I -> F(I)

    static MonFunctor identity(PicardModel const& m);
    static MonFunctor zero(PicardModel const& a, PicardModel const& b);
  };

  struct MonNat {
    Table sigma;  // sigma(a): Fa -> Ga
  };

  // F0 = -F2(a, 0); reports the a at which this is not constant.
  Elem compute_F0(PicardModel const& A, PicardModel const& B,
                  MonFunctor const& F, Report* report = nullptr);

  Report validate_mon_functor(MonFunctor const& F, PicardModel const& A,
                              PicardModel const& B);
  Report validate_mon_nat(MonNat const& s, MonFunctor const& F,
                          MonFunctor const& G, PicardModel const& A,
                          PicardModel const& B);

  // G after F
  MonFunctor compose_functors(MonFunctor const& F, MonFunctor const& G,
                              PicardModel const& A, PicardModel const& B);

  // ---------------------------------------------------------------------
  // The functor inv = (-)* and its structure

  // bang(x, y): x* y* -> (y x)*, the unique canonical arrow, solved from
  // its defining square.
  Elem bang(PicardModel const& m, Elem const& x, Elem const& y);

  struct InvStructure {
    MonFunctor functor;  // on arrows h -> -h
    Table      inv2;     // inv2(a, b): a* b* -> (a b)*
    Report     lemmas;
  };

  InvStructure build_inv(PicardModel const& m);

  // iso F(a)* -> F(a*) solved from its defining diagram
  ModelArrow bullet_iso(PicardModel const& A, PicardModel const& B,
                        MonFunctor const& F, Elem const& a);

  Report check_bullet_lemmas(PicardModel const& A, PicardModel const& B,
                             MonFunctor const& F, MonFunctor const& G,
                             MonNat const& sigma);
  Report check_bullet_composite(PicardModel const& A, PicardModel const& B,
                      PicardModel const& C, MonFunctor const& F,
                      MonFunctor const& G);

  // ---------------------------------------------------------------------
  // [A, B] with pointwise structure, on normalised functors (F2(0,0) = 0)

  struct HomModelCaps {
    std::size_t max_candidates = 2000000;
    std::size_t max_functors   = 400;
    std::size_t max_arrows     = 4000;
  };

  struct HomModel {
    ExplicitPicard          cat;
    std::vector<MonFunctor> functors;
    struct Nat {
      int   src;
      int   dst;
      Table sigma;
    };
    std::vector<Nat> nats;
  };

  class cap_exceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  std::vector<MonFunctor> enumerate_functors(PicardModel const&  A,
                                             PicardModel const&  B,
                                             HomModelCaps const& caps = {});
  std::vector<Table> enumerate_nats(MonFunctor const& F, MonFunctor const& G,
                                    PicardModel const&  A,
                                    PicardModel const&  B,
                                    HomModelCaps const& caps = {});

  HomModel hom_model(PicardModel const& A, PicardModel const& B,
                     HomModelCaps const& caps = {});

  // Tables of a functor compared on the enumerated objects of A.
  bool same_functor(MonFunctor const& F, MonFunctor const& G,
                    PicardModel const& A);

}  // namespace picring

#endif  // PICRING_MODELS_HPP_
