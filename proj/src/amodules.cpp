#include "picring/amodules.hpp"

namespace picring {

  namespace {
    struct Check {
      Report&           r;
      FinAbGroup const& H;

      void operator()(std::string const& axiom, std::vector<Binding> inst,
                      Elem const& lhs, Elem const& rhs) const {
        ++r.checked;
        Elem l = H.reduce(lhs), q = H.reduce(rhs);
        if (l != q) {
          r.fail(axiom, std::move(inst), elem_str(l) + " vs " + elem_str(q));
        }
      }
    };

    Elem sum(FinAbGroup const& H, std::initializer_list<Elem> xs) {
      Elem s = H.zero();
      for (auto const& x : xs) {
        s = H.add(s, x);
      }
      return s;
    }

    Int choose2(Int n) {
      return n * (n - 1) / 2;
    }
  }  // namespace

  Report validate_module(ModuleModel const& M, Int bound) {
    Report r;
    r.bound         = bound < 0 ? M.ring.base.bound : bound;
    r.absorb(validate_bilinear(M.action, bound), "action/");
    auto const& act = M.action;
    auto const& rg  = M.ring;
    auto const& mul = rg.mult;
    auto const& G   = M.carrier.G;
    auto const& H   = M.carrier.H;
    auto const& RH  = rg.base.H;
    auto const  as  = elements_of(rg.base, bound);
    auto const  ms  = elements_of(M.carrier, bound);
    Elem const& one = rg.one;
    Check       obj{r, G};
    Check       eq{r, H};

    TrilinearComposite T1{TrilinearComposite::Shape::RightNested, &act, &act};
    TrilinearComposite T2{TrilinearComposite::Shape::LeftNested, &act, &mul};
    check_trilinear_nat(r, "beta", {"beta-over", "beta-mixed", "beta-under"},
                        T1, T2, M.beta, {}, bound);

    for (auto const& m : ms) {
      obj("gamma-object", {arg("m", m)}, m, act(one, m));
      for (auto const& k : autos_of(M.carrier, bound)) {
        eq("gamma-natural", {arg("m", m), arg("k", k)}, k, act.R(one, m, k));
      }
      for (auto const& m2 : ms) {
        eq("gamma-linear", {arg("m", m), arg("m'", m2)},
           sum(H, {M.gamma(m), M.gamma(m2), act.u(one, m, m2)}),
           M.gamma(G.add(m, m2)));
      }
    }
    // ring coherence arrows in the module's orientation
    auto ralpha = [&](Elem const& a, Elem const& b, Elem const& c) {
      return RH.neg(rg.alpha(a, b, c));
    };
    for (auto const& a1 : as) {
      for (auto const& m : ms) {
        Elem a1m = act(a1, m);
        eq("module-right-unit", {arg("a", a1), arg("m", m)},
           H.add(act.R(a1, m, M.gamma(m)), M.beta(a1, one, m)),
           act.L(a1, m, RH.neg(rg.rho(a1))));
        eq("module-left-unit", {arg("a", a1), arg("m", m)},
           H.add(M.gamma(a1m), M.beta(one, a1, m)),
           act.L(a1, m, RH.neg(rg.lambda(a1))));
        for (auto const& a2 : as) {
          Elem a1a2 = mul(a1, a2);
          for (auto const& a3 : as) {
            Elem a3m  = act(a3, m);
            Elem a2a3 = mul(a2, a3);
            eq("module-pentagon",
               {arg("a1", a1), arg("a2", a2), arg("a3", a3), arg("m", m)},
               H.add(M.beta(a1, a2, a3m), M.beta(a1a2, a3, m)),
               sum(H, {act.R(a1, act(a2, a3m), M.beta(a2, a3, m)),
                       M.beta(a1, a2a3, m),
                       act.L(mul(a1, a2a3), m, ralpha(a1, a2, a3))}));
          }
        }
      }
    }
    return r;
  }

  ModuleMorphism ModuleMorphism::identity(ModuleModel const& M) {
    return {MonFunctor::identity(M.carrier), Table(M.carrier.H)};
  }

  Report validate_module_morphism(ModuleMorphism const& h,
                                  ModuleModel const& M, ModuleModel const& N,
                                  Int bound) {
    Report r;
    r.bound         = bound < 0 ? M.ring.base.bound : bound;
    r.absorb(validate_mon_functor(h.H, M.carrier, N.carrier), "functor/");
    auto const& p0  = h.H.psi0;
    auto const& p1  = h.H.psi1;
    auto const& F2  = h.H.F2;
    auto const& d   = h.delta;
    auto const& aM  = M.action;
    auto const& aN  = N.action;
    auto const& GA  = M.ring.base.G;
    auto const& GN  = N.carrier.G;
    auto const& HN  = N.carrier.H;
    auto const& GM  = M.carrier.G;
    auto const  as  = elements_of(M.ring.base, bound);
    auto const  ms  = elements_of(M.carrier, bound);
    Elem const& one = M.ring.one;
    Check       obj{r, GN};
    Check       eq{r, HN};

    for (auto const& m : ms) {
      Elem Hm = p0(m);
      eq("morphism-unit", {arg("m", m)}, p1(M.gamma(m)),
         HN.add(N.gamma(Hm), d(one, m)));
      for (auto const& a : as) {
        Elem am = aM(a, m);
        obj("morphism-object", {arg("a", a), arg("m", m)}, aN(a, Hm), p0(am));
        for (auto const& h : autos_of(M.ring.base, bound)) {
          eq("morphism-natural-a", {arg("a", a), arg("m", m), arg("h", h)},
             aN.L(a, Hm, h), p1(aM.L(a, m, h)));
        }
        for (auto const& k : autos_of(M.carrier, bound)) {
          eq("morphism-natural-m", {arg("a", a), arg("m", m), arg("k", k)},
             aN.R(a, Hm, p1(k)), p1(aM.R(a, m, k)));
        }
        for (auto const& a2 : as) {
          Elem a2m = aM(a2, m);
          eq("morphism-over", {arg("a", a), arg("m", m), arg("a'", a2)},
             HN.add(aN.o(a, a2, Hm), d(GA.add(a, a2), m)),
             sum(HN, {d(a, m), d(a2, m), F2(am, a2m), p1(aM.o(a, a2, m))}));
          Elem a1a2 = M.ring.mult(a, a2);
          eq("morphism-assoc", {arg("a1", a), arg("a2", a2), arg("m", m)},
             HN.add(N.beta(a, a2, Hm), d(a1a2, m)),
             sum(HN, {aN.R(a, aN(a2, Hm), d(a2, m)), d(a, a2m),
                      p1(M.beta(a, a2, m))}));
        }
        for (auto const& m2 : ms) {
          Elem Hm2 = p0(m2);
          Elem am2 = aM(a, m2);
          eq("morphism-under", {arg("a", a), arg("m", m), arg("m'", m2)},
             sum(HN, {aN.u(a, Hm, Hm2), aN.R(a, GN.add(Hm, Hm2), F2(m, m2)),
                      d(a, GM.add(m, m2))}),
             sum(HN, {d(a, m), d(a, m2), F2(am, am2), p1(aM.u(a, m, m2))}));
        }
      }
    }
    return r;
  }

  ModuleMorphism compose_module_morphisms(ModuleMorphism const& h1,
                                          ModuleMorphism const& h2,
                                          ModuleModel const&    M,
                                          ModuleModel const&    N) {
    ModuleMorphism k;
    k.H             = compose_functors(h1.H, h2.H, M.carrier, N.carrier);
    Table      d1   = h1.delta;
    Table      d2   = h2.delta;
    GroupHom   p0   = h1.H.psi0;
    GroupHom   q1   = h2.H.psi1;
    FinAbGroup H    = q1.dst;
    k.delta         = Table(H, [=](Table::Key const& key) {
      return H.add(d2(key[0], p0(key[1])), q1(d1(key[0], key[1])));
    });
    return k;
  }

  // ---------------------------------------------------------------------

  ModuleModel strict_unit_module(PicardModel const& M, GroupHom const& ell,
                                 BiadditivePairing const& B, Int bound) {
    TwoRingModel I  = unit_two_ring(bound);
    FinAbGroup   G  = M.G;
    FinAbGroup   H  = M.H;
    BilinearMap  act{
        I.base,
        M,
        M,
        Table(G, [G](Table::Key const& k) { return G.scale(k[0][0], k[1]); }),
        Table(H,
              [H, ell](Table::Key const& k) {
                return H.scale(k[2][0], ell(k[1]));
              }),
        Table(H, [H](Table::Key const& k) { return H.scale(k[0][0], k[2]); }),
        Table(H,
              [H, B](Table::Key const& k) {
                return H.scale(choose2(k[0][0]), B(k[1], k[2]));
              }),
        Table(H)};
    return {I, M, act, Table(H), Table(H)};
  }

  UnitModuleSearch search_strict_unit_module(PicardModel const& M,
                                             Int bound) {
    UnitModuleSearch s;
    auto const       hvals = enumerate_elements(M.H, 0);
    std::size_t const r    = M.G.rank();
    auto const       homs  = enumerate_homs(M.G, M.H);
    for (auto const& vals : tuples(hvals, r * r)) {
      BiadditivePairing B{M.G, M.G, M.H, {}, false};
      B.values.assign(r, std::vector<Elem>(r));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          B.values[i][j] = vals[i * r + j];
        }
      }
      if (!validate_pairing(B).empty()) {
        continue;
      }
      for (auto const& ell : homs) {
        ++s.candidates;
        ModuleModel cand = strict_unit_module(M, ell, B, bound);
        if (validate_module(cand, bound).ok()) {
          s.found.push_back(std::move(cand));
          s.ell.push_back(ell);
          s.pairing.push_back(B);
        }
      }
    }
    return s;
  }

  ModuleModel twisted_unit_module(ModuleModel const& strict,
                                  GroupHom const&    e) {
    ModuleModel M = strict;
    FinAbGroup  H = strict.carrier.H;
    M.gamma = Table(H, [e](Table::Key const& k) { return e(k[0]); });
    M.beta  = Table(H, [H, e](Table::Key const& k) {
      return H.neg(H.scale(k[0][0] * k[1][0], e(k[2])));
    });
    return M;
  }

  namespace {
    // Extends delta(1, -) to every integer by linearity over the ring's
    // overline.
    Table extend_by_linearity(ModuleModel const& M, ModuleModel const& N,
                              MonFunctor const& Hf, Table const& at_one) {
      FinAbGroup  HN = N.carrier.H;
      BilinearMap aM = M.action;
      BilinearMap aN = N.action;
      MonFunctor  F  = Hf;
      Table       d1 = at_one;
      return Table(HN, [=](Table::Key const& k) {
        Elem const& m  = k[1];
        Elem        Hm = F.psi0(m);
        Elem        n0{0}, n1{1};
        // step(a): delta(a + 1) - delta(a) - delta(1)
        auto step = [&](Elem const& a) {
          return HN.sub(HN.add(F.F2(aM(a, m), aM(n1, m)),
                               F.psi1(aM.o(a, n1, m))),
                        aN.o(a, n1, Hm));
        };
        Elem d = HN.sub(HN.neg(F.F2(aM(n0, m), aM(n0, m))),
                        HN.sub(F.psi1(aM.o(n0, n0, m)), aN.o(n0, n0, Hm)));
        Int target = k[0][0];
        for (Int a = 0; a < target; ++a) {
          d = HN.add(HN.add(d, d1(m)), step(Elem{a}));
        }
        for (Int a = 0; a > target; --a) {
          d = HN.sub(HN.sub(d, d1(m)), step(Elem{a - 1}));
        }
        return d;
      });
    }
  }  // namespace

  ModuleMorphism induced_unit_morphism(ModuleModel const& M,
                                       ModuleModel const& N,
                                       MonFunctor const&  H) {
    FinAbGroup HN = N.carrier.H;
    Table      gM = M.gamma;
    GroupHom   p1 = H.psi1;
    Table      at_one(HN, [=](Table::Key const& k) { return p1(gM(k[0])); });
    return {H, extend_by_linearity(M, N, H, at_one)};
  }

  std::size_t count_unit_morphisms(ModuleModel const& M, ModuleModel const& N,
                                   MonFunctor const& H, Int bound) {
    auto const  ms    = elements_of(M.carrier, bound);
    auto const  hvals = enumerate_elements(N.carrier.H, 0);
    std::size_t count = 0;
    for (auto const& vals : tuples(hvals, ms.size())) {
      Table at_one(N.carrier.H);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        at_one.set({ms[i]}, vals[i]);
      }
      ModuleMorphism h{H, extend_by_linearity(M, N, H, at_one)};
      if (validate_module_morphism(h, M, N, bound).ok()) {
        ++count;
      }
    }
    return count;
  }

  Report check_unit_equivalence(ModuleModel const& M, Int bound) {
    Report r;
    r.bound = bound < 0 ? M.ring.base.bound : bound;
    r.absorb(validate_module(M, bound), "source/");
    if (!r.ok()) {
      return r;
    }
    auto search = search_strict_unit_module(M.carrier, M.ring.base.bound);
    if (search.found.size() != 1) {
      r.fail("strict-structure", {{"found", std::to_string(search.found.size())}});
      return r;
    }
    ModuleModel const& N  = search.found[0];
    MonFunctor const   id = MonFunctor::identity(M.carrier);
    ModuleMorphism     fw = induced_unit_morphism(M, N, id);
    r.absorb(validate_module_morphism(fw, M, N, bound), "forward/");
    std::size_t n = count_unit_morphisms(M, N, id, bound);
    r.notes.push_back("valid morphisms over the identity: " + std::to_string(n));
    if (n != 1) {
      r.fail("forward-unique", {{"found", std::to_string(n)}});
    }

    FinAbGroup     H  = M.carrier.H;
    Table          d  = fw.delta;
    ModuleMorphism bw{id, Table(H, [H, d](Table::Key const& k) {
                        return H.neg(d.at(k));
                      })};
    r.absorb(validate_module_morphism(bw, N, M, bound), "inverse/");

    auto is_identity = [&](ModuleMorphism const& k, ModuleModel const& X,
                           std::string const& name) {
      ++r.checked;
      if (!same_functor(k.H, id, X.carrier)) {
        r.fail(name, {}, "functor is not the identity");
      }
      for (auto const& a : elements_of(X.ring.base, bound)) {
        for (auto const& m : elements_of(X.carrier, bound)) {
          ++r.checked;
          if (!H.is_zero(k.delta(a, m))) {
            r.fail(name, {arg("a", a), arg("m", m)},
                   elem_str(k.delta(a, m)));
          }
        }
      }
    };
    is_identity(compose_module_morphisms(fw, bw, M, N), M, "inverse-left");
    is_identity(compose_module_morphisms(bw, fw, N, M), N, "inverse-right");
    return r;
  }

  // ---------------------------------------------------------------------

  PresheafEncoding presheaf_encoding(FiniteRing const& A, Int n,
                                     GroupHom const& f) {
    PresheafEncoding out;
    FiniteRing       Zn   = cyclic_ring(n);
    TwoRingModel     ring = discrete_two_ring(A);
    TwoRingModel     endo = discrete_two_ring(Zn);
    PicardModel      M    = PicardModel::discrete(Zn.additive, 0);
    FinAbGroup       H    = M.H;
    Table            mul  = Zn.mul;
    GroupHom         g    = f;
    BilinearMap      act{
        ring.base, M, M,
        Table(M.G, [mul, g](Table::Key const& k) { return mul(g(k[0]), k[1]); }),
        Table(H), Table(H), Table(H), Table(H)};
    out.module = {ring, M, act, Table(H), Table(H)};
    out.source = one_object_category(ring);
    out.target = one_object_category(endo);
    out.functor.obj  = {0};
    out.functor.homs = {MonFunctor{f, GroupHom::zero(ring.base.H, H), Table(H),
                                   H.zero()}};
    out.functor.F2   = {Table(H)};
    out.functor.F0   = {H.zero()};
    return out;
  }

}  // namespace picring
