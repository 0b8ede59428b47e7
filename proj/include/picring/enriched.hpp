// Elementwise SPC-categories, SPC-functors and SPC-natural transformations
// over skeletal hom models.
//
// A bilinear map between skeletal models is given by its object map, its
// action on automorphisms of either argument and its two distributors.
// Multilinear natural transformations are given by component tables; their
// linearity conditions are the squares against the derived distributors.

#ifndef PICRING_ENRICHED_HPP_
#define PICRING_ENRICHED_HPP_

#include <string>
#include <vector>

#include "models.hpp"
#include "report.hpp"
#include "table.hpp"

namespace picring {

  // f: P x Q -> C.  Keys: obj(x, y), left(x, y, h) for h in Aut(x) giving
  // h.y, right(x, y, k) for k in Aut(y) giving x.k, under(x, y, y'):
  // x.y + x.y' -> x.(y + y'), over(x, x', y): x.y + x'.y -> (x + x').y.
  struct BilinearMap {
    PicardModel P;
    PicardModel Q;
    PicardModel C;
    Table       obj;
    Table       left;
    Table       right;
    Table       under;
    Table       over;

    Elem operator()(Elem const& x, Elem const& y) const {
      return obj(x, y);
    }
    Elem L(Elem const& x, Elem const& y, Elem const& h) const {
      return left(x, y, h);
    }
    Elem R(Elem const& x, Elem const& y, Elem const& k) const {
      return right(x, y, k);
    }
    Elem u(Elem const& x, Elem const& y, Elem const& y2) const {
      return under(x, y, y2);
    }
    Elem o(Elem const& x, Elem const& x2, Elem const& y) const {
      return over(x, x2, y);
    }
  };

  // Element bound used by exhaustive checks: the given one, or each model's
  // own when negative.
  std::vector<Elem> elements_of(PicardModel const& m, Int bound);
  std::vector<Elem> autos_of(PicardModel const& m, Int bound);

  // Objects, additivity and naturality of the arrow action and distributors,
  // and the five distributor diagrams.
  Report validate_bilinear(BilinearMap const& f, Int bound = -1);

  // T(x, y, z) = outer(inner(x, y), z) or outer(x, inner(y, z)), with the
  // action and distributors derived from the two bilinear maps.
  struct TrilinearComposite {
    enum class Shape { LeftNested, RightNested };
    Shape              shape;
    BilinearMap const* outer;
    BilinearMap const* inner;

    PicardModel const& arg(int i) const;
    PicardModel const& target() const {
      return outer->C;
    }
    Elem obj(Elem const& x, Elem const& y, Elem const& z) const;
    // action of an automorphism h of argument i
    Elem act(int i, Elem const& x, Elem const& y, Elem const& z,
             Elem const& h) const;
    // T(.., v, ..) + T(.., w, ..) -> T(.., v + w, ..) in argument i
    Elem dist(int i, Elem const& x, Elem const& y, Elem const& z,
              Elem const& w) const;
  };

  // Checks a trilinear transformation sigma: T1 -> T2.  Families are named
  // prefix-object, prefix-natural-{a,b,c} and the three given linearity
  // names; `extra` is appended to every instance.
  void check_trilinear_nat(Report& r, std::string const& prefix,
                           std::vector<std::string> const& linear_names,
                           TrilinearComposite const& T1,
                           TrilinearComposite const& T2, Table const& sigma,
                           std::vector<Binding> const& extra, Int bound);

  // ---------------------------------------------------------------------

  struct EnrichedCategory {
    std::vector<std::string> objects;
    std::vector<PicardModel> homs;     // x * n + y
    std::vector<BilinearMap> compose;  // (x * n + y) * n + z: A_yz x A_xy -> A_xz
    std::vector<Elem>        units;    // 1_x in A_xx
    std::vector<Table>       alpha;    // ((x n + y) n + z) n + t: h(gf) -> (hg)f
    std::vector<Table>       rho;      // x * n + y: f -> f 1_x
    std::vector<Table>       lambda;   // x * n + y: f -> 1_y f

    int size() const {
      return static_cast<int>(objects.size());
    }
    PicardModel const& hom(int x, int y) const {
      return homs[x * size() + y];
    }
    BilinearMap const& comp(int x, int y, int z) const {
      return compose[(x * size() + y) * size() + z];
    }
    Table const& alpha_at(int x, int y, int z, int t) const {
      return alpha[((x * size() + y) * size() + z) * size() + t];
    }
  };

  Report validate_enriched_category(EnrichedCategory const& E,
                                    Int bound = -1);

  struct EnrichedFunctor {
    std::vector<int>        obj;   // object map
    std::vector<MonFunctor> homs;  // x * n + y: A_xy -> B_FxFy
    std::vector<Table>      F2;    // (x n + y) n + z: Fg Ff -> F(g f)
    std::vector<Elem>       F0;    // x: 1_Fx -> F(1_x)

    static EnrichedFunctor identity(EnrichedCategory const& A);
  };

  Report validate_enriched_functor(EnrichedFunctor const& F,
                                   EnrichedCategory const& A,
                                   EnrichedCategory const& B,
                                   Int bound = -1);

  // G after F
  EnrichedFunctor compose_enriched(EnrichedFunctor const& F,
                                   EnrichedFunctor const& G,
                                   EnrichedCategory const& A,
                                   EnrichedCategory const& B,
                                   EnrichedCategory const& C);

  struct EnrichedNat {
    std::vector<Elem>  sigma;  // x: object of B_{Fx,Gx}
    std::vector<Table> kappa;  // x * n + y: Gf sigma_x -> sigma_y Ff

    static EnrichedNat identity(EnrichedFunctor const& F,
                                EnrichedCategory const& A,
                                EnrichedCategory const& B);
  };

  Report validate_enriched_nat(EnrichedNat const& s, EnrichedFunctor const& F,
                               EnrichedFunctor const& G,
                               EnrichedCategory const& A,
                               EnrichedCategory const& B, Int bound = -1);

  // Failure labels without the object bindings (those named "@...").
  std::vector<std::string> element_labels(Report const& r);

}  // namespace picring

#endif  // PICRING_ENRICHED_HPP_
