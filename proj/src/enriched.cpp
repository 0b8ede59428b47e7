#include "picring/enriched.hpp"

#include <algorithm>

namespace picring {

  namespace {
    // Records one instance of an equation between arrows (or objects) of a
    // group.
    struct Eq {
      Report&           r;
      FinAbGroup const& H;

      void operator()(std::string const& axiom, std::vector<Binding> inst,
                      Elem const& lhs, Elem const& rhs) const {
        ++r.checked;
        if (H.reduce(lhs) != H.reduce(rhs)) {
          r.fail(axiom, std::move(inst),
                 elem_str(H.reduce(lhs)) + " vs " + elem_str(H.reduce(rhs)));
        }
      }
    };

    std::vector<Binding> with(std::vector<Binding> inst,
                              std::vector<Binding> const& extra) {
      inst.insert(inst.end(), extra.begin(), extra.end());
      return inst;
    }

    void absorb_with(Report& r, Report const& sub,
                     std::vector<Binding> const& extra) {
      for (auto const& f : sub.failures) {
        r.fail(f.axiom, with(f.instance, extra), f.detail);
      }
      r.checked += sub.checked;
    }

    Binding obj_arg(char const* name, int x) {
      return {std::string("@") + name, std::to_string(x)};
    }

    Elem sum(FinAbGroup const& H, std::initializer_list<Elem> xs) {
      Elem s = H.zero();
      for (auto const& x : xs) {
        s = H.add(s, x);
      }
      return s;
    }
  }  // namespace

  std::vector<Elem> elements_of(PicardModel const& m, Int bound) {
    return enumerate_elements(m.G, bound < 0 ? m.bound : bound);
  }

  std::vector<Elem> autos_of(PicardModel const& m, Int bound) {
    return enumerate_elements(m.H, bound < 0 ? m.bound : bound);
  }

  Report validate_bilinear(BilinearMap const& f, Int bound) {
    Report r;
    r.bound           = bound < 0 ? f.P.bound : bound;
    auto const  xs    = elements_of(f.P, bound);
    auto const  ys    = elements_of(f.Q, bound);
    auto const  hs    = autos_of(f.P, bound);
    auto const  ks    = autos_of(f.Q, bound);
    auto const& GP    = f.P.G;
    auto const& GQ    = f.Q.G;
    auto const& GC    = f.C.G;
    auto const& H     = f.C.H;
    Eq          obj_eq{r, GC};
    Eq          eq{r, H};

    for (auto const& x : xs) {
      for (auto const& y : ys) {
        for (auto const& y2 : ys) {
          obj_eq("under-object", {arg("a", x), arg("b", y), arg("b'", y2)},
                 f(x, GQ.add(y, y2)), GC.add(f(x, y), f(x, y2)));
        }
      }
    }
    for (auto const& x : xs) {
      for (auto const& x2 : xs) {
        for (auto const& y : ys) {
          obj_eq("over-object", {arg("a", x), arg("b", y), arg("a'", x2)},
                 f(GP.add(x, x2), y), GC.add(f(x, y), f(x2, y)));
        }
      }
    }
    for (auto const& x : xs) {
      for (auto const& y : ys) {
        for (auto const& h : hs) {
          for (auto const& h2 : hs) {
            eq("left-additive",
               {arg("a", x), arg("b", y), arg("h", h), arg("h'", h2)},
               f.L(x, y, f.P.H.add(h, h2)),
               H.add(f.L(x, y, h), f.L(x, y, h2)));
          }
        }
        for (auto const& k : ks) {
          for (auto const& k2 : ks) {
            eq("right-additive",
               {arg("a", x), arg("b", y), arg("k", k), arg("k'", k2)},
               f.R(x, y, f.Q.H.add(k, k2)),
               H.add(f.R(x, y, k), f.R(x, y, k2)));
          }
        }
      }
    }
    // naturality of the distributors
    for (auto const& x : xs) {
      for (auto const& y : ys) {
        for (auto const& y2 : ys) {
          Elem yy = GQ.add(y, y2);
          for (auto const& h : hs) {
            eq("under-natural-a",
               {arg("a", x), arg("b", y), arg("b'", y2), arg("h", h)},
               f.L(x, yy, h), H.add(f.L(x, y, h), f.L(x, y2, h)));
          }
          for (auto const& k : ks) {
            eq("under-natural-b",
               {arg("a", x), arg("b", y), arg("b'", y2), arg("k", k)},
               f.R(x, y, k), f.R(x, yy, k));
            eq("under-natural-b'",
               {arg("a", x), arg("b", y), arg("b'", y2), arg("k", k)},
               f.R(x, y2, k), f.R(x, yy, k));
          }
        }
      }
    }
    for (auto const& x : xs) {
      for (auto const& x2 : xs) {
        Elem xx = GP.add(x, x2);
        for (auto const& y : ys) {
          for (auto const& k : ks) {
            eq("over-natural-b",
               {arg("a", x), arg("b", y), arg("a'", x2), arg("k", k)},
               f.R(xx, y, k), H.add(f.R(x, y, k), f.R(x2, y, k)));
          }
          for (auto const& h : hs) {
            eq("over-natural-a",
               {arg("a", x), arg("b", y), arg("a'", x2), arg("h", h)},
               f.L(x, y, h), f.L(xx, y, h));
            eq("over-natural-a'",
               {arg("a", x), arg("b", y), arg("a'", x2), arg("h", h)},
               f.L(x2, y, h), f.L(xx, y, h));
          }
        }
      }
    }
    // the five diagrams
    for (auto const& x : xs) {
      for (auto const& y : ys) {
        for (auto const& y2 : ys) {
          for (auto const& y3 : ys) {
            eq("under-assoc",
               {arg("a", x), arg("b", y), arg("b'", y2), arg("b''", y3)},
               H.add(f.u(x, y2, y3), f.u(x, y, GQ.add(y2, y3))),
               H.add(f.u(x, y, y2), f.u(x, GQ.add(y, y2), y3)));
          }
        }
      }
    }
    for (auto const& x : xs) {
      for (auto const& x2 : xs) {
        for (auto const& x3 : xs) {
          for (auto const& y : ys) {
            eq("over-assoc",
               {arg("a", x), arg("a'", x2), arg("a''", x3), arg("b", y)},
               H.add(f.o(x2, x3, y), f.o(x, GP.add(x2, x3), y)),
               H.add(f.o(x, x2, y), f.o(GP.add(x, x2), x3, y)));
          }
        }
      }
    }
    for (auto const& x : xs) {
      for (auto const& y : ys) {
        for (auto const& y2 : ys) {
          eq("under-sym", {arg("a", x), arg("b", y), arg("b'", y2)},
             H.add(f.u(x, y, y2), f.R(x, GQ.add(y, y2), f.Q.c(y, y2))),
             H.add(f.C.c(f(x, y), f(x, y2)), f.u(x, y2, y)));
        }
      }
    }
    for (auto const& x : xs) {
      for (auto const& x2 : xs) {
        for (auto const& y : ys) {
          eq("over-sym", {arg("a", x), arg("a'", x2), arg("b", y)},
             H.add(f.o(x, x2, y), f.L(GP.add(x, x2), y, f.P.c(x, x2))),
             H.add(f.C.c(f(x, y), f(x2, y)), f.o(x2, x, y)));
        }
      }
    }
    for (auto const& x : xs) {
      for (auto const& x2 : xs) {
        for (auto const& y : ys) {
          for (auto const& y2 : ys) {
            eq("distrib-interchange",
               {arg("a", x), arg("a'", x2), arg("b", y), arg("b'", y2)},
               sum(H, {f.u(x, y, y2), f.u(x2, y, y2),
                       f.o(x, x2, GQ.add(y, y2))}),
               sum(H, {f.C.c(f(x, y2), f(x2, y)), f.o(x, x2, y),
                       f.o(x, x2, y2), f.u(GP.add(x, x2), y, y2)}));
          }
        }
      }
    }
    return r;
  }

  // ---------------------------------------------------------------------

  PicardModel const& TrilinearComposite::arg(int i) const {
    if (shape == Shape::LeftNested) {
      return i == 0 ? inner->P : i == 1 ? inner->Q : outer->Q;
    }
    return i == 0 ? outer->P : i == 1 ? inner->P : inner->Q;
  }

  Elem TrilinearComposite::obj(Elem const& x, Elem const& y,
                               Elem const& z) const {
    if (shape == Shape::LeftNested) {
      return (*outer)((*inner)(x, y), z);
    }
    return (*outer)(x, (*inner)(y, z));
  }

  Elem TrilinearComposite::act(int i, Elem const& x, Elem const& y,
                               Elem const& z, Elem const& h) const {
    if (shape == Shape::LeftNested) {
      Elem xy = (*inner)(x, y);
      switch (i) {
        case 0: return outer->L(xy, z, inner->L(x, y, h));
        case 1: return outer->L(xy, z, inner->R(x, y, h));
        default: return outer->R(xy, z, h);
      }
    }
    Elem yz = (*inner)(y, z);
    switch (i) {
      case 0: return outer->L(x, yz, h);
      case 1: return outer->R(x, yz, inner->L(y, z, h));
      default: return outer->R(x, yz, inner->R(y, z, h));
    }
  }

  Elem TrilinearComposite::dist(int i, Elem const& x, Elem const& y,
                                Elem const& z, Elem const& w) const {
    auto const& H  = outer->C.H;
    auto const& GM = inner->C.G;
    if (shape == Shape::LeftNested) {
      Elem xy = (*inner)(x, y);
      switch (i) {
        case 0: {
          Elem wy = (*inner)(w, y);
          return H.add(outer->o(xy, wy, z),
                       outer->L(GM.add(xy, wy), z, inner->o(x, w, y)));
        }
        case 1: {
          Elem xw = (*inner)(x, w);
          return H.add(outer->o(xy, xw, z),
                       outer->L(GM.add(xy, xw), z, inner->u(x, y, w)));
        }
        default:
          return outer->u(xy, z, w);
      }
    }
    Elem yz = (*inner)(y, z);
    switch (i) {
      case 0:
        return outer->o(x, w, yz);
      case 1: {
        Elem wz = (*inner)(w, z);
        return H.add(outer->u(x, yz, wz),
                     outer->R(x, GM.add(yz, wz), inner->o(y, w, z)));
      }
      default: {
        Elem yw = (*inner)(y, w);
        return H.add(outer->u(x, yz, yw),
                     outer->R(x, GM.add(yz, yw), inner->u(y, z, w)));
      }
    }
  }

  void check_trilinear_nat(Report& r, std::string const& prefix,
                           std::vector<std::string> const& linear_names,
                           TrilinearComposite const& T1,
                           TrilinearComposite const& T2, Table const& sigma,
                           std::vector<Binding> const& extra, Int bound) {
    auto const& C = T1.target();
    auto const& H = C.H;
    Eq          obj_eq{r, C.G};
    Eq          eq{r, H};
    std::vector<Elem> el[3] = {elements_of(T1.arg(0), bound),
                               elements_of(T1.arg(1), bound),
                               elements_of(T1.arg(2), bound)};
    static char const* const names[3]  = {"a", "b", "c"};
    static char const* const primed[3] = {"a'", "b'", "c'"};
    for (auto const& x : el[0]) {
      for (auto const& y : el[1]) {
        for (auto const& z : el[2]) {
          std::vector<Binding> base{arg("a", x), arg("b", y), arg("c", z)};
          obj_eq(prefix + "-object", with(base, extra), T1.obj(x, y, z),
                 T2.obj(x, y, z));
          for (int i = 0; i < 3; ++i) {
            for (auto const& h : autos_of(T1.arg(i), bound)) {
              auto inst = base;
              inst.push_back(arg("h", h));
              eq(prefix + "-natural-" + names[i], with(inst, extra),
                 T1.act(i, x, y, z, h), T2.act(i, x, y, z, h));
            }
          }
          for (int i = 0; i < 3; ++i) {
            auto const& G = T1.arg(i).G;
            for (auto const& w : el[i]) {
              Elem v[3] = {x, y, z};
              Elem s[3] = {x, y, z};
              s[i]      = G.add(v[i], w);
              Elem t[3] = {x, y, z};
              t[i]      = w;
              auto inst = base;
              inst.push_back(arg(primed[i], w));
              eq(linear_names[i], with(inst, extra),
                 H.add(T1.dist(i, x, y, z, w), sigma(s[0], s[1], s[2])),
                 sum(H, {sigma(x, y, z), sigma(t[0], t[1], t[2]),
                         T2.dist(i, x, y, z, w)}));
            }
          }
        }
      }
    }
  }

  // ---------------------------------------------------------------------

  Report validate_enriched_category(EnrichedCategory const& E, Int bound) {
    Report    r;
    r.bound     = bound >= 0 ? bound : E.homs.empty() ? 0 : E.homs[0].bound;
    int const n = E.size();
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          absorb_with(r, validate_bilinear(E.comp(x, y, z), bound),
                      {obj_arg("x", x), obj_arg("y", y), obj_arg("z", z)});
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          for (int t = 0; t < n; ++t) {
            TrilinearComposite T1{TrilinearComposite::Shape::RightNested,
                                  &E.comp(x, z, t), &E.comp(x, y, z)};
            TrilinearComposite T2{TrilinearComposite::Shape::LeftNested,
                                  &E.comp(x, y, t), &E.comp(y, z, t)};
            check_trilinear_nat(
                r, "alpha", {"alpha-over", "alpha-mixed", "alpha-under"}, T1,
                T2, E.alpha_at(x, y, z, t),
                {obj_arg("x", x), obj_arg("y", y), obj_arg("z", z),
                 obj_arg("t", t)},
                bound);
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        PicardModel const&         A     = E.hom(x, y);
        std::vector<Binding> const extra = {obj_arg("x", x), obj_arg("y", y)};
        Eq                         obj_eq{r, A.G};
        Eq                         eq{r, A.H};
        auto const&                cr  = E.comp(x, x, y);
        auto const&                cl  = E.comp(x, y, y);
        Table const&               rho = E.rho[x * n + y];
        Table const&               lam = E.lambda[x * n + y];
        Elem const&                ux  = E.units[x];
        Elem const&                uy  = E.units[y];
        auto const                 fs  = elements_of(A, bound);
        for (auto const& f : fs) {
          obj_eq("rho-object", with({arg("a", f)}, extra), f, cr(f, ux));
          obj_eq("lambda-object", with({arg("b", f)}, extra), f, cl(uy, f));
          for (auto const& k : autos_of(A, bound)) {
            eq("rho-natural", with({arg("a", f), arg("h", k)}, extra), k,
               cr.L(f, ux, k));
            eq("lambda-natural", with({arg("b", f), arg("k", k)}, extra), k,
               cl.R(uy, f, k));
          }
          for (auto const& f2 : fs) {
            eq("rho-over", with({arg("a", f), arg("a'", f2)}, extra),
               sum(A.H, {rho(f), rho(f2), cr.o(f, f2, ux)}),
               rho(A.G.add(f, f2)));
            eq("lambda-under", with({arg("b", f), arg("b'", f2)}, extra),
               sum(A.H, {lam(f), lam(f2), cl.u(uy, f, f2)}),
               lam(A.G.add(f, f2)));
          }
        }
      }
    }
    // pentagon
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          for (int t = 0; t < n; ++t) {
            for (int u = 0; u < n; ++u) {
              std::vector<Binding> const extra = {
                  obj_arg("x", x), obj_arg("y", y), obj_arg("z", z),
                  obj_arg("t", t), obj_arg("u", u)};
              auto const& H = E.hom(x, u).H;
              Eq          eq{r, H};
              for (auto const& f : elements_of(E.hom(x, y), bound)) {
                for (auto const& g : elements_of(E.hom(y, z), bound)) {
                  Elem gf = E.comp(x, y, z)(g, f);
                  for (auto const& h : elements_of(E.hom(z, t), bound)) {
                    Elem hgf = E.comp(x, z, t)(h, gf);
                    Elem hg  = E.comp(y, z, t)(h, g);
                    for (auto const& k : elements_of(E.hom(t, u), bound)) {
                      Elem kh  = E.comp(z, t, u)(k, h);
                      Elem khg = E.comp(y, t, u)(k, hg);
                      eq("mult-pentagon",
                         with({arg("a", k), arg("b", h), arg("c", g),
                               arg("d", f)},
                              extra),
                         H.add(E.alpha_at(x, z, t, u)(k, h, gf),
                               E.alpha_at(x, y, z, u)(kh, g, f)),
                         sum(H, {E.comp(x, t, u).R(
                                     k, hgf, E.alpha_at(x, y, z, t)(h, g, f)),
                                 E.alpha_at(x, y, t, u)(k, hg, f),
                                 E.comp(x, y, u).L(
                                     khg, f,
                                     E.alpha_at(y, z, t, u)(k, h, g))}));
                    }
                  }
                }
              }
            }
          }
        }
      }
    }
    // unit triangle
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          std::vector<Binding> const extra = {obj_arg("x", x), obj_arg("y", y),
                                              obj_arg("z", z)};
          auto const& c = E.comp(x, y, z);
          Eq          eq{r, E.hom(x, z).H};
          for (auto const& f : elements_of(E.hom(x, y), bound)) {
            for (auto const& g : elements_of(E.hom(y, z), bound)) {
              eq("mult-triangle", with({arg("a", g), arg("b", f)}, extra),
                 E.hom(x, z).H.add(
                     c.R(g, f, E.lambda[x * n + y](f)),
                     E.alpha_at(x, y, y, z)(g, E.units[y], f)),
                 c.L(g, f, E.rho[y * n + z](g)));
            }
          }
        }
      }
    }
    return r;
  }

  // ---------------------------------------------------------------------

  EnrichedFunctor EnrichedFunctor::identity(EnrichedCategory const& A) {
    EnrichedFunctor F;
    int const       n = A.size();
    for (int x = 0; x < n; ++x) {
      F.obj.push_back(x);
      F.F0.push_back(A.hom(x, x).H.zero());
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        F.homs.push_back(MonFunctor::identity(A.hom(x, y)));
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          F.F2.push_back(Table(A.hom(x, z).H));
        }
      }
    }
    return F;
  }

  Report validate_enriched_functor(EnrichedFunctor const& F,
                                   EnrichedCategory const& A,
                                   EnrichedCategory const& B, Int bound) {
    Report    r;
    r.bound     = bound >= 0 ? bound : A.homs.empty() ? 0 : A.homs[0].bound;
    int const n = A.size();
    int const m = B.size();
    auto hom    = [&](int x, int y) -> MonFunctor const& {
      return F.homs[x * n + y];
    };
    auto F2 = [&](int x, int y, int z) -> Table const& {
      return F.F2[(x * n + y) * n + z];
    };
    if (static_cast<int>(F.obj.size()) != n
        || static_cast<int>(F.homs.size()) != n * n
        || static_cast<int>(F.F2.size()) != n * n * n
        || static_cast<int>(F.F0.size()) != n
        || std::any_of(F.obj.begin(), F.obj.end(),
                       [&](int v) { return v < 0 || v >= m; })) {
      r.fail("functor-shape", {}, "tables do not match the categories");
      return r;
    }
    auto const& Fo = F.obj;
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        absorb_with(r,
                    validate_mon_functor(hom(x, y), A.hom(x, y),
                                         B.hom(Fo[x], Fo[y])),
                    {obj_arg("x", x), obj_arg("y", y)});
      }
    }
    for (int x = 0; x < n; ++x) {
      Eq obj_eq{r, B.hom(Fo[x], Fo[x]).G};
      obj_eq("functor-unit-object", {obj_arg("x", x)}, B.units[Fo[x]],
             hom(x, x).psi0(A.units[x]));
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          std::vector<Binding> const extra = {obj_arg("x", x), obj_arg("y", y),
                                              obj_arg("z", z)};
          auto const& cA  = A.comp(x, y, z);
          auto const& cB  = B.comp(Fo[x], Fo[y], Fo[z]);
          auto const& Fxy = hom(x, y);
          auto const& Fyz = hom(y, z);
          auto const& Fxz = hom(x, z);
          auto const& T   = F2(x, y, z);
          auto const& H   = B.hom(Fo[x], Fo[z]).H;
          Eq          obj_eq{r, B.hom(Fo[x], Fo[z]).G};
          Eq          eq{r, H};
          auto const  fs = elements_of(A.hom(x, y), bound);
          auto const  gs = elements_of(A.hom(y, z), bound);
          for (auto const& g : gs) {
            Elem Fg = Fyz.psi0(g);
            for (auto const& f : fs) {
              Elem Ff = Fxy.psi0(f);
              Elem gf = cA(g, f);
              obj_eq("functor-object", with({arg("a", g), arg("b", f)}, extra),
                     cB(Fg, Ff), Fxz.psi0(gf));
              for (auto const& h : autos_of(A.hom(y, z), bound)) {
                eq("functor-natural-a",
                   with({arg("a", g), arg("b", f), arg("h", h)}, extra),
                   cB.L(Fg, Ff, Fyz.psi1(h)), Fxz.psi1(cA.L(g, f, h)));
              }
              for (auto const& k : autos_of(A.hom(x, y), bound)) {
                eq("functor-natural-b",
                   with({arg("a", g), arg("b", f), arg("k", k)}, extra),
                   cB.R(Fg, Ff, Fxy.psi1(k)), Fxz.psi1(cA.R(g, f, k)));
              }
              for (auto const& f2 : fs) {
                Elem Ff2 = Fxy.psi0(f2);
                Elem gf2 = cA(g, f2);
                eq("functor-under",
                   with({arg("a", g), arg("b", f), arg("b'", f2)}, extra),
                   sum(H, {cB.u(Fg, Ff, Ff2),
                           cB.R(Fg, B.hom(Fo[x], Fo[y]).G.add(Ff, Ff2),
                                Fxy.F2(f, f2)),
                           T(g, A.hom(x, y).G.add(f, f2))}),
                   sum(H, {T(g, f), T(g, f2), Fxz.F2(gf, gf2),
                           Fxz.psi1(cA.u(g, f, f2))}));
              }
              for (auto const& g2 : gs) {
                Elem Fg2 = Fyz.psi0(g2);
                Elem g2f = cA(g2, f);
                eq("functor-over",
                   with({arg("a", g), arg("b", f), arg("a'", g2)}, extra),
                   sum(H, {cB.o(Fg, Fg2, Ff),
                           cB.L(B.hom(Fo[y], Fo[z]).G.add(Fg, Fg2), Ff,
                                Fyz.F2(g, g2)),
                           T(A.hom(y, z).G.add(g, g2), f)}),
                   sum(H, {T(g, f), T(g2, f), Fxz.F2(gf, g2f),
                           Fxz.psi1(cA.o(g, g2, f))}));
              }
            }
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          for (int t = 0; t < n; ++t) {
            std::vector<Binding> const extra = {
                obj_arg("x", x), obj_arg("y", y), obj_arg("z", z),
                obj_arg("t", t)};
            auto const& H = B.hom(Fo[x], Fo[t]).H;
            Eq          eq{r, H};
            for (auto const& f : elements_of(A.hom(x, y), bound)) {
              Elem Ff = hom(x, y).psi0(f);
              for (auto const& g : elements_of(A.hom(y, z), bound)) {
                Elem Fg   = hom(y, z).psi0(g);
                Elem gf   = A.comp(x, y, z)(g, f);
                Elem FgFf = B.comp(Fo[x], Fo[y], Fo[z])(Fg, Ff);
                for (auto const& h : elements_of(A.hom(z, t), bound)) {
                  Elem Fh   = hom(z, t).psi0(h);
                  Elem hg   = A.comp(y, z, t)(h, g);
                  Elem FhFg = B.comp(Fo[y], Fo[z], Fo[t])(Fh, Fg);
                  eq("functor-assoc",
                     with({arg("a", h), arg("b", g), arg("c", f)}, extra),
                     sum(H, {B.comp(Fo[x], Fo[z], Fo[t])
                                 .R(Fh, FgFf, F2(x, y, z)(g, f)),
                             F2(x, z, t)(h, gf),
                             hom(x, t).psi1(A.alpha_at(x, y, z, t)(h, g, f))}),
                     sum(H, {B.alpha_at(Fo[x], Fo[y], Fo[z], Fo[t])(Fh, Fg,
                                                                     Ff),
                             B.comp(Fo[x], Fo[y], Fo[t])
                                 .L(FhFg, Ff, F2(y, z, t)(h, g)),
                             F2(x, y, t)(hg, f)}));
                }
              }
            }
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        std::vector<Binding> const extra = {obj_arg("x", x), obj_arg("y", y)};
        auto const& H = B.hom(Fo[x], Fo[y]).H;
        Eq          eq{r, H};
        int const   bxy = Fo[x] * m + Fo[y];
        for (auto const& f : elements_of(A.hom(x, y), bound)) {
          Elem Ff = hom(x, y).psi0(f);
          eq("functor-right-unit", with({arg("a", f)}, extra),
             hom(x, y).psi1(A.rho[x * n + y](f)),
             sum(H, {B.rho[bxy](Ff),
                     B.comp(Fo[x], Fo[x], Fo[y]).R(Ff, B.units[Fo[x]], F.F0[x]),
                     F2(x, x, y)(f, A.units[x])}));
          eq("functor-left-unit", with({arg("b", f)}, extra),
             hom(x, y).psi1(A.lambda[x * n + y](f)),
             sum(H, {B.lambda[bxy](Ff),
                     B.comp(Fo[x], Fo[y], Fo[y]).L(B.units[Fo[y]], Ff, F.F0[y]),
                     F2(x, y, y)(A.units[y], f)}));
        }
      }
    }
    return r;
  }

  EnrichedFunctor compose_enriched(EnrichedFunctor const& F,
                                   EnrichedFunctor const& G,
                                   EnrichedCategory const& A,
                                   EnrichedCategory const& B,
                                   EnrichedCategory const& C) {
    EnrichedFunctor K;
    int const       n = A.size();
    int const       m = B.size();
    for (int x = 0; x < n; ++x) {
      K.obj.push_back(G.obj[F.obj[x]]);
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        K.homs.push_back(compose_functors(F.homs[x * n + y],
                                          G.homs[F.obj[x] * m + F.obj[y]],
                                          A.hom(x, y),
                                          B.hom(F.obj[x], F.obj[y])));
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          int const  fx = F.obj[x], fy = F.obj[y], fz = F.obj[z];
          MonFunctor Fxy = F.homs[x * n + y];
          MonFunctor Fyz = F.homs[y * n + z];
          MonFunctor Gxz = G.homs[fx * m + fz];
          Table      GT  = G.F2[(fx * m + fy) * m + fz];
          Table      FT  = F.F2[(x * n + y) * n + z];
          auto const H   = C.hom(K.obj[x], K.obj[z]).H;
          K.F2.push_back(Table(H, [=](Table::Key const& k) {
            return H.add(GT(Fyz.psi0(k[0]), Fxy.psi0(k[1])),
                         Gxz.psi1(FT(k[0], k[1])));
          }));
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      int const fx = F.obj[x];
      K.F0.push_back(C.hom(K.obj[x], K.obj[x])
                         .H.add(G.F0[fx], G.homs[fx * m + fx].psi1(F.F0[x])));
    }
    return K;
  }

  // ---------------------------------------------------------------------

  EnrichedNat EnrichedNat::identity(EnrichedFunctor const& F,
                                    EnrichedCategory const& A,
                                    EnrichedCategory const& B) {
    EnrichedNat s;
    int const   n = A.size();
    int const   m = B.size();
    for (int x = 0; x < n; ++x) {
      s.sigma.push_back(B.units[F.obj[x]]);
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        int const  b   = F.obj[x] * m + F.obj[y];
        auto const H   = B.homs[b].H;
        Table      rho = B.rho[b];
        Table      lam = B.lambda[b];
        MonFunctor Fxy = F.homs[x * n + y];
        s.kappa.push_back(Table(H, [=](Table::Key const& k) {
          Elem Ff = Fxy.psi0(k[0]);
          return H.sub(lam(Ff), rho(Ff));
        }));
      }
    }
    return s;
  }

  Report validate_enriched_nat(EnrichedNat const& s, EnrichedFunctor const& F,
                               EnrichedFunctor const& G,
                               EnrichedCategory const& A,
                               EnrichedCategory const& B, Int bound) {
    Report    r;
    r.bound     = bound >= 0 ? bound : A.homs.empty() ? 0 : A.homs[0].bound;
    int const n = A.size();
    int const m = B.size();
    if (static_cast<int>(s.sigma.size()) != n
        || static_cast<int>(s.kappa.size()) != n * n) {
      r.fail("nat-shape", {}, "tables do not match the categories");
      return r;
    }
    auto const& Fo    = F.obj;
    auto const& Go    = G.obj;
    auto        Fh    = [&](int x, int y) -> MonFunctor const& {
      return F.homs[x * n + y];
    };
    auto Gh = [&](int x, int y) -> MonFunctor const& {
      return G.homs[x * n + y];
    };
    auto kappa = [&](int x, int y) -> Table const& {
      return s.kappa[x * n + y];
    };
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        std::vector<Binding> const extra = {obj_arg("x", x), obj_arg("y", y)};
        auto const& cL = B.comp(Fo[x], Go[x], Go[y]);
        auto const& cR = B.comp(Fo[x], Fo[y], Go[y]);
        auto const& T  = B.hom(Fo[x], Go[y]);
        Eq          obj_eq{r, T.G};
        Eq          eq{r, T.H};
        Elem const& sx = s.sigma[x];
        Elem const& sy = s.sigma[y];
        auto const  fs = elements_of(A.hom(x, y), bound);
        for (auto const& f : fs) {
          Elem Gf = Gh(x, y).psi0(f);
          Elem Ff = Fh(x, y).psi0(f);
          obj_eq("nat-object", with({arg("a", f)}, extra), cL(Gf, sx),
                 cR(sy, Ff));
          for (auto const& k : autos_of(A.hom(x, y), bound)) {
            eq("nat-natural", with({arg("a", f), arg("h", k)}, extra),
               cL.L(Gf, sx, Gh(x, y).psi1(k)),
               cR.R(sy, Ff, Fh(x, y).psi1(k)));
          }
          for (auto const& f2 : fs) {
            Elem Gf2 = Gh(x, y).psi0(f2);
            Elem Ff2 = Fh(x, y).psi0(f2);
            Elem ff  = A.hom(x, y).G.add(f, f2);
            eq("nat-linear", with({arg("a", f), arg("a'", f2)}, extra),
               sum(T.H, {cL.o(Gf, Gf2, sx),
                         cL.L(B.hom(Go[x], Go[y]).G.add(Gf, Gf2), sx,
                              Gh(x, y).F2(f, f2)),
                         kappa(x, y)(ff)}),
               sum(T.H, {kappa(x, y)(f), kappa(x, y)(f2), cR.u(sy, Ff, Ff2),
                         cR.R(sy, B.hom(Fo[x], Fo[y]).G.add(Ff, Ff2),
                              Fh(x, y).F2(f, f2))}));
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          std::vector<Binding> const extra = {obj_arg("x", x), obj_arg("y", y),
                                              obj_arg("z", z)};
          auto const& H = B.hom(Fo[x], Go[z]).H;
          Eq          eq{r, H};
          Elem const& sx = s.sigma[x];
          Elem const& sy = s.sigma[y];
          Elem const& sz = s.sigma[z];
          for (auto const& f : elements_of(A.hom(x, y), bound)) {
            Elem Ff = Fh(x, y).psi0(f);
            Elem Gf = Gh(x, y).psi0(f);
            for (auto const& g : elements_of(A.hom(y, z), bound)) {
              Elem Fg   = Fh(y, z).psi0(g);
              Elem Gg   = Gh(y, z).psi0(g);
              Elem gf   = A.comp(x, y, z)(g, f);
              Elem GgGf = B.comp(Go[x], Go[y], Go[z])(Gg, Gf);
              Elem Gfsx = B.comp(Fo[x], Go[x], Go[y])(Gf, sx);
              Elem Ggsy = B.comp(Fo[y], Go[y], Go[z])(Gg, sy);
              Elem FgFf = B.comp(Fo[x], Fo[y], Fo[z])(Fg, Ff);
              eq("nat-compose", with({arg("a", g), arg("b", f)}, extra),
                 sum(H, {B.alpha_at(Fo[x], Go[x], Go[y], Go[z])(Gg, Gf, sx),
                         B.comp(Fo[x], Go[x], Go[z])
                             .L(GgGf, sx,
                                G.F2[(x * n + y) * n + z](g, f)),
                         kappa(x, z)(gf)}),
                 sum(H, {B.comp(Fo[x], Go[y], Go[z]).R(Gg, Gfsx, kappa(x, y)(f)),
                         B.alpha_at(Fo[x], Fo[y], Go[y], Go[z])(Gg, sy, Ff),
                         B.comp(Fo[x], Fo[y], Go[z]).L(Ggsy, Ff, kappa(y, z)(g)),
                         H.neg(B.alpha_at(Fo[x], Fo[y], Fo[z], Go[z])(sz, Fg,
                                                                      Ff)),
                         B.comp(Fo[x], Fo[z], Go[z])
                             .R(sz, FgFf, F.F2[(x * n + y) * n + z](g, f))}));
            }
          }
        }
      }
    }
    for (int x = 0; x < n; ++x) {
      int const b = Fo[x] * m + Go[x];
      auto const& H = B.homs[b].H;
      Eq          eq{r, H};
      Elem const& sx = s.sigma[x];
      eq("nat-unit", {obj_arg("x", x)},
         H.add(B.rho[b](sx),
               B.comp(Fo[x], Fo[x], Go[x]).R(sx, B.units[Fo[x]], F.F0[x])),
         sum(H, {B.lambda[b](sx),
                 B.comp(Fo[x], Go[x], Go[x]).L(B.units[Go[x]], sx, G.F0[x]),
                 kappa(x, x)(A.units[x])}));
    }
    return r;
  }

  std::vector<std::string> element_labels(Report const& r) {
    std::vector<std::string> out;
    for (auto const& f : r.failures) {
      Failure g = f;
      g.instance.clear();
      for (auto const& b : f.instance) {
        if (b.first.empty() || b.first[0] != '@') {
          g.instance.push_back(b);
        }
      }
      out.push_back(g.label());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

}  // namespace picring
