#include "picring/tworing.hpp"

#include <map>
#include <sstream>
#include <tuple>

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

    Elem add3(FinAbGroup const& H, Elem const& a, Elem const& b,
              Elem const& c) {
      return H.add(H.add(a, b), c);
    }
  }  // namespace

  // The mult functor's own axioms come from validate_bilinear; everything
  // about alpha, rho and lambda is written out here directly.
  Report validate_two_ring(TwoRingModel const& R, Int bound) {
    Report      r    = validate_bilinear(R.mult, bound);
    r.bound          = bound < 0 ? R.base.bound : bound;
    auto const& G    = R.base.G;
    auto const& H    = R.base.H;
    auto const& f    = R.mult;
    auto const& al   = R.alpha;
    auto const  xs   = elements_of(R.base, bound);
    auto const  hs   = autos_of(R.base, bound);
    Elem const& one  = R.one;
    Check       obj{r, G};
    Check       eq{r, H};

    for (auto const& a : xs) {
      for (auto const& b : xs) {
        Elem ab = f(a, b);
        for (auto const& c : xs) {
          Elem bc = f(b, c);
          Elem l  = f(ab, c);  // (ab)c
          Elem rr = f(a, bc);  // a(bc)
          obj("alpha-object", {arg("a", a), arg("b", b), arg("c", c)}, rr, l);
          for (auto const& h : hs) {
            std::vector<Binding> in{arg("a", a), arg("b", b), arg("c", c),
                                    arg("h", h)};
            // alpha is natural in each variable
            eq("alpha-natural-a", in, f.L(a, bc, h), f.L(ab, c, f.L(a, b, h)));
            eq("alpha-natural-b", in, f.R(a, bc, f.L(b, c, h)),
               f.L(ab, c, f.R(a, b, h)));
            eq("alpha-natural-c", in, f.R(a, bc, f.R(b, c, h)), f.R(ab, c, h));
          }
          for (auto const& a2 : xs) {
            Elem a2b = f(a2, b);
            eq("alpha-over", {arg("a", a), arg("b", b), arg("c", c),
                              arg("a'", a2)},
               add3(H, f.o(ab, a2b, c), f.L(G.add(ab, a2b), c, f.o(a, a2, b)),
                    al(G.add(a, a2), b, c)),
               add3(H, al(a, b, c), al(a2, b, c), f.o(a, a2, bc)));
          }
          for (auto const& b2 : xs) {
            Elem ab2 = f(a, b2);
            Elem b2c = f(b2, c);
            eq("alpha-mixed", {arg("a", a), arg("b", b), arg("c", c),
                               arg("b'", b2)},
               add3(H, f.o(ab, ab2, c), f.L(G.add(ab, ab2), c, f.u(a, b, b2)),
                    al(a, G.add(b, b2), c)),
               H.add(add3(H, al(a, b, c), al(a, b2, c), f.u(a, bc, b2c)),
                     f.R(a, G.add(bc, b2c), f.o(b, b2, c))));
          }
          for (auto const& c2 : xs) {
            Elem bc2 = f(b, c2);
            eq("alpha-under", {arg("a", a), arg("b", b), arg("c", c),
                               arg("c'", c2)},
               H.add(f.u(ab, c, c2), al(a, b, G.add(c, c2))),
               H.add(add3(H, al(a, b, c), al(a, b, c2), f.u(a, bc, bc2)),
                     f.R(a, G.add(bc, bc2), f.u(b, c, c2))));
          }
        }
      }
    }

    for (auto const& a : xs) {
      obj("rho-object", {arg("a", a)}, a, f(a, one));
      obj("lambda-object", {arg("b", a)}, a, f(one, a));
      for (auto const& k : hs) {
        eq("rho-natural", {arg("a", a), arg("h", k)}, k, f.L(a, one, k));
        eq("lambda-natural", {arg("b", a), arg("k", k)}, k, f.R(one, a, k));
      }
      for (auto const& a2 : xs) {
        eq("rho-over", {arg("a", a), arg("a'", a2)},
           H.add(f.o(a, a2, one), R.rho(G.add(a, a2))),
           H.add(R.rho(a), R.rho(a2)));
        eq("lambda-under", {arg("b", a), arg("b'", a2)},
           H.add(f.u(one, a, a2), R.lambda(G.add(a, a2))),
           H.add(R.lambda(a), R.lambda(a2)));
      }
    }

    for (auto const& a : xs) {
      for (auto const& b : xs) {
        Elem ab = f(a, b);
        for (auto const& c : xs) {
          Elem bc   = f(b, c);
          Elem ab_c = f(ab, c);
          for (auto const& d : xs) {
            Elem cd = f(c, d);
            eq("mult-pentagon",
               {arg("a", a), arg("b", b), arg("c", c), arg("d", d)},
               H.add(al(ab, c, d), al(a, b, cd)),
               add3(H, f.L(ab_c, d, al(a, b, c)), al(a, bc, d),
                    f.R(a, f(bc, d), al(b, c, d))));
          }
        }
        eq("mult-triangle", {arg("a", a), arg("b", b)},
           H.add(al(a, one, b), f.R(a, f(one, b), R.lambda(b))),
           f.L(f(a, one), b, R.rho(a)));
      }
    }
    return r;
  }

  TwoRingMorphism TwoRingMorphism::identity(TwoRingModel const& r) {
    return {MonFunctor::identity(r.base), Table(r.base.H), r.base.H.zero()};
  }

  Report validate_two_ring_morphism(TwoRingMorphism const& h,
                                    TwoRingModel const& A,
                                    TwoRingModel const& B, Int bound) {
    Report r;
    r.absorb(validate_mon_functor(h.H_plus, A.base, B.base));
    r.bound         = bound < 0 ? A.base.bound : bound;
    auto const& p0  = h.H_plus.psi0;
    auto const& p1  = h.H_plus.psi1;
    auto const& F2  = h.H_plus.F2;
    auto const& T   = h.T;
    auto const& fa  = A.mult;
    auto const& fb  = B.mult;
    auto const& GA  = A.base.G;
    auto const& GB  = B.base.G;
    auto const& HB  = B.base.H;
    auto const  xs  = elements_of(A.base, bound);
    auto const  hs  = autos_of(A.base, bound);
    Elem const  one = B.one;
    Check       obj{r, GB};
    Check       eq{r, HB};

    obj("morphism-unit-object", {}, p0(A.one), one);
    for (auto const& a : xs) {
      Elem Ha = p0(a);
      for (auto const& b : xs) {
        Elem Hb = p0(b);
        Elem ab = fa(a, b);
        obj("morphism-object", {arg("a", a), arg("b", b)}, fb(Ha, Hb), p0(ab));
        for (auto const& k : hs) {
          eq("morphism-natural-a", {arg("a", a), arg("b", b), arg("h", k)},
             p1(fa.L(a, b, k)), fb.L(Ha, Hb, p1(k)));
          eq("morphism-natural-b", {arg("a", a), arg("b", b), arg("k", k)},
             p1(fa.R(a, b, k)), fb.R(Ha, Hb, p1(k)));
        }
        for (auto const& b2 : xs) {
          Elem Hb2 = p0(b2);
          Elem ab2 = fa(a, b2);
          eq("morphism-under", {arg("a", a), arg("b", b), arg("b'", b2)},
             add3(HB, fb.u(Ha, Hb, Hb2),
                  fb.R(Ha, GB.add(Hb, Hb2), F2(b, b2)), T(a, GA.add(b, b2))),
             HB.add(add3(HB, T(a, b), T(a, b2), F2(ab, ab2)),
                    p1(fa.u(a, b, b2))));
        }
        for (auto const& a2 : xs) {
          Elem Ha2 = p0(a2);
          Elem a2b = fa(a2, b);
          eq("morphism-over", {arg("a", a), arg("b", b), arg("a'", a2)},
             add3(HB, fb.o(Ha, Ha2, Hb),
                  fb.L(GB.add(Ha, Ha2), Hb, F2(a, a2)), T(GA.add(a, a2), b)),
             HB.add(add3(HB, T(a, b), T(a2, b), F2(ab, a2b)),
                    p1(fa.o(a, a2, b))));
        }
        for (auto const& c : xs) {
          Elem Hc = p0(c);
          Elem bc = fa(b, c);
          eq("times-assoc", {arg("a", a), arg("b", b), arg("c", c)},
             add3(HB, fb.L(fb(Ha, Hb), Hc, T(a, b)), T(ab, c),
                  p1(A.alpha(a, b, c))),
             add3(HB, B.alpha(Ha, Hb, Hc), fb.R(Ha, fb(Hb, Hc), T(b, c)),
                  T(a, bc)));
        }
      }
      eq("times-right-unit", {arg("a", a)},
         add3(HB, fb.R(Ha, one, h.T0), T(a, A.one), p1(A.rho(a))),
         B.rho(Ha));
      eq("times-left-unit", {arg("a", a)},
         add3(HB, fb.L(one, Ha, h.T0), T(A.one, a), p1(A.lambda(a))),
         B.lambda(Ha));
    }
    return r;
  }

  EnrichedCategory one_object_category(TwoRingModel const& r) {
    EnrichedCategory E;
    E.objects      = {"*"};
    E.homs         = {r.base};
    E.compose      = {r.mult};
    E.units        = {r.one};
    FinAbGroup H   = r.base.H;
    auto reversed  = [H](Table t) {
      return Table(H, [H, t](Table::Key const& k) { return H.neg(t.at(k)); });
    };
    E.alpha  = {reversed(r.alpha)};
    E.rho    = {reversed(r.rho)};
    E.lambda = {reversed(r.lambda)};
    return E;
  }

  // ---------------------------------------------------------------------

  namespace {
    FiniteRing tabulate(std::string name, FinAbGroup g, Elem one,
                        std::function<Elem(Elem const&, Elem const&)> mul) {
      FiniteRing R{std::move(name), g, Table(g), std::move(one)};
      auto       els = enumerate_elements(g, 0);
      for (auto const& a : els) {
        for (auto const& b : els) {
          R.mul.set({a, b}, g.reduce(mul(a, b)));
        }
      }
      return R;
    }
  }  // namespace

  FiniteRing cyclic_ring(Int n) {
    return tabulate("Z/" + std::to_string(n), FinAbGroup::cyclic(n), {1 % n},
                    [](Elem const& a, Elem const& b) {
                      return Elem{a[0] * b[0]};
                    });
  }

  FiniteRing product_ring(FiniteRing const& R, FiniteRing const& S) {
    std::vector<Int> orders = R.additive.orders();
    for (Int o : S.additive.orders()) {
      orders.push_back(o);
    }
    std::size_t const k   = R.additive.rank();
    Elem              one = R.one;
    one.insert(one.end(), S.one.begin(), S.one.end());
    return tabulate(R.name + " x " + S.name, FinAbGroup(orders), one,
                    [&](Elem const& a, Elem const& b) {
                      Elem a1(a.begin(), a.begin() + k), a2(a.begin() + k,
                                                            a.end());
                      Elem b1(b.begin(), b.begin() + k), b2(b.begin() + k,
                                                            b.end());
                      Elem x = R.mul(a1, b1);
                      Elem y = S.mul(a2, b2);
                      x.insert(x.end(), y.begin(), y.end());
                      return x;
                    });
  }

  FiniteRing matrix_ring(Int p, int k, bool upper) {
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < k; ++i) {
      for (int j = upper ? i : 0; j < k; ++j) {
        cells.emplace_back(i, j);
      }
    }
    std::map<std::pair<int, int>, std::size_t> pos;
    for (std::size_t q = 0; q < cells.size(); ++q) {
      pos[cells[q]] = q;
    }
    Elem one(cells.size(), 0);
    for (int i = 0; i < k; ++i) {
      one[pos[{i, i}]] = 1;
    }
    std::ostringstream name;
    name << (upper ? "T" : "M") << k << "(Z/" << p << ")";
    return tabulate(
        name.str(), FinAbGroup(std::vector<Int>(cells.size(), p)), one,
        [&](Elem const& a, Elem const& b) {
          Elem c(cells.size(), 0);
          for (auto [i, j] : cells) {
            Int s = 0;
            for (int t = 0; t < k; ++t) {
              auto l = pos.find({i, t});
              auto r = pos.find({t, j});
              if (l != pos.end() && r != pos.end()) {
                s += a[l->second] * b[r->second];
              }
            }
            c[pos[{i, j}]] = s;
          }
          return c;
        });
  }

  FiniteRing quotient_poly_ring(Int p, std::vector<Int> const& lower) {
    std::size_t const d = lower.size();
    std::ostringstream name;
    name << "Z/" << p << "[x]/(x^" << d;
    for (std::size_t i = d; i-- > 0;) {
      if (lower[i] != 0) {
        name << " + ";
        if (i == 0 || lower[i] != 1) {
          name << lower[i];
        }
        if (i > 0) {
          name << "x" << (i > 1 ? "^" + std::to_string(i) : "");
        }
      }
    }
    name << ")";
    Elem one(d, 0);
    one[0] = 1 % p;
    return tabulate(name.str(), FinAbGroup(std::vector<Int>(d, p)), one,
                    [&](Elem const& a, Elem const& b) {
                      std::vector<Int> prod(2 * d, 0);
                      for (std::size_t i = 0; i < d; ++i) {
                        for (std::size_t j = 0; j < d; ++j) {
                          prod[i + j] += a[i] * b[j];
                        }
                      }
                      // x^d = -sum lower_i x^i
                      for (std::size_t e = 2 * d; e-- > d;) {
                        Int top = prod[e];
                        prod[e] = 0;
                        for (std::size_t i = 0; i < d; ++i) {
                          prod[e - d + i] -= top * lower[i];
                        }
                      }
                      return Elem(prod.begin(), prod.begin() + d);
                    });
  }

  std::vector<std::string> ring_axiom_failures(FiniteRing const& R) {
    std::vector<std::string> out;
    auto const&              g   = R.additive;
    auto const               els = R.elements();
    auto                     m   = [&](Elem const& a, Elem const& b) {
      return R.mul(a, b);
    };
    auto at = [](std::string what, std::initializer_list<Elem> xs) {
      std::string s = what + " at";
      for (auto const& x : xs) {
        s += " " + elem_str(x);
      }
      return s;
    };
    for (auto const& a : els) {
      if (m(R.one, a) != a || m(a, R.one) != a) {
        out.push_back(at("unit", {a}));
      }
      for (auto const& b : els) {
        for (auto const& c : els) {
          if (m(m(a, b), c) != m(a, m(b, c))) {
            out.push_back(at("associativity", {a, b, c}));
          }
          if (m(a, g.add(b, c)) != g.add(m(a, b), m(a, c))) {
            out.push_back(at("left distributivity", {a, b, c}));
          }
          if (m(g.add(a, b), c) != g.add(m(a, c), m(b, c))) {
            out.push_back(at("right distributivity", {a, b, c}));
          }
        }
      }
    }
    return out;
  }

  TwoRingModel discrete_two_ring(FiniteRing const& R) {
    PicardModel base = PicardModel::discrete(R.additive, 0);
    FinAbGroup  H    = base.H;
    BilinearMap mult{base,     base,     base,     R.mul,
                     Table(H), Table(H), Table(H), Table(H)};
    return {base, mult, R.one, Table(H), Table(H), Table(H)};
  }

  bool is_ring_hom(GroupHom const& f, FiniteRing const& R,
                   FiniteRing const& S) {
    if (!validate_hom(f).empty() || f(R.one) != S.one) {
      return false;
    }
    auto const els = R.elements();
    for (auto const& a : els) {
      for (auto const& b : els) {
        if (f(R.mul(a, b)) != S.mul(f(a), f(b))) {
          return false;
        }
      }
    }
    return true;
  }

  TwoRingMorphism discrete_morphism(GroupHom const& f, TwoRingModel const& A,
                                    TwoRingModel const& B) {
    MonFunctor H{f, GroupHom::zero(A.base.H, B.base.H), Table(B.base.H),
                 B.base.H.zero()};
    return {H, Table(B.base.H), B.base.H.zero()};
  }

  TwoRingModel unit_two_ring(Int bound) {
    FinAbGroup  Z  = FinAbGroup::cyclic(0);
    FinAbGroup  Z2 = FinAbGroup::cyclic(2);
    PicardModel base = PicardModel::make(Z, Z2, {{Elem{1}}}, bound);
    auto        scalar = [Z2](Int n, Elem const& h) { return Z2.scale(n, h); };
    BilinearMap mult{
        base,
        base,
        base,
        Table(Z, [](Table::Key const& k) { return Elem{k[0][0] * k[1][0]}; }),
        Table(Z2,
              [scalar](Table::Key const& k) { return scalar(k[1][0], k[2]); }),
        Table(Z2,
              [scalar](Table::Key const& k) { return scalar(k[0][0], k[2]); }),
        // m(m-1)/2 copies of the symmetry on the distributed summands
        Table(Z2,
              [](Table::Key const& k) {
                Int m = k[0][0];
                return Elem{mod(m * (m - 1) / 2 * k[1][0] * k[2][0], 2)};
              }),
        Table(Z2)};
    return {base, mult, Elem{1}, Table(Z2), Table(Z2), Table(Z2)};
  }

  // ---------------------------------------------------------------------

  Report validate_explicit_two_ring(ExplicitTwoRing const& R) {
    Report      rep;
    auto const& e = R.base;
    int const   n = e.n_obj();
    int const   m = e.n_arr();
    if (static_cast<int>(R.mult_obj.size()) != n * n
        || static_cast<int>(R.mult_arr.size()) != m * m
        || static_cast<int>(R.under.size()) != n * n * n
        || static_cast<int>(R.over.size()) != n * n * n
        || static_cast<int>(R.alpha.size()) != n * n * n
        || static_cast<int>(R.rho.size()) != n
        || static_cast<int>(R.lambda.size()) != n) {
      rep.fail("shape", {}, "table sizes do not match the base");
      return rep;
    }
    auto ok_o = [&](int x) { return x >= 0 && x < n; };
    auto ok_a = [&](int f) { return f >= 0 && f < m; };
    auto Mo   = [&](int a, int b) {
      return ok_o(a) && ok_o(b) ? R.mult_obj[a * n + b] : -1;
    };
    auto Ma = [&](int f, int g) {
      return ok_a(f) && ok_a(g) ? R.mult_arr[f * m + g] : -1;
    };
    auto C = [&](int g, int f) {
      return ok_a(g) && ok_a(f) ? e.compose(g, f) : -1;
    };
    auto To = [&](int x, int y) {
      return ok_o(x) && ok_o(y) ? e.tensor_o(x, y) : -1;
    };
    auto Ta = [&](int f, int g) {
      return ok_a(f) && ok_a(g) ? e.tensor_a(f, g) : -1;
    };
    auto id = [&](int x) { return ok_o(x) ? e.identity[x] : -1; };
    auto As = [&](int x, int y, int z) {
      return ok_o(x) && ok_o(y) && ok_o(z) ? e.assoc_at(x, y, z) : -1;
    };
    auto Sy = [&](int x, int y) {
      return ok_o(x) && ok_o(y) ? e.sym_at(x, y) : -1;
    };
    std::vector<int> inverse(m, -1);
    for (int f = 0; f < m; ++f) {
      for (int g = 0; g < m; ++g) {
        if (e.arrows[g].src == e.arrows[f].dst
            && C(g, f) == id(e.arrows[f].src)
            && C(f, g) == id(e.arrows[f].dst)) {
          inverse[f] = g;
          break;
        }
      }
    }
    auto inv = [&](int f) { return ok_a(f) ? inverse[f] : -1; };
    // composite of arrows listed in the order they are applied
    auto path = [&](std::initializer_list<int> fs) {
      int acc = -2;
      for (int f : fs) {
        acc = acc == -2 ? f : C(f, acc);
      }
      return acc;
    };
    auto label = [&](int f) {
      return ok_a(f) ? e.arrows[f].label : std::string("undefined");
    };
    auto same = [&](std::string const& axiom, std::vector<Binding> inst, int p,
                    int q) {
      ++rep.checked;
      if (!ok_a(p) || !ok_a(q) || p != q) {
        rep.fail(axiom, std::move(inst), label(p) + " vs " + label(q));
      }
    };
    auto typed = [&](std::string const& axiom, std::vector<Binding> inst,
                     int f, int s, int t) {
      ++rep.checked;
      if (!ok_a(f) || e.arrows[f].src != s || e.arrows[f].dst != t) {
        rep.fail(axiom, std::move(inst), label(f));
      }
    };
    auto ob = [&](char const* k, int x) -> Binding {
      return {k, e.objects[x]};
    };
    auto ar = [&](char const* k, int f) -> Binding {
      return {k, e.arrows[f].label};
    };
    auto src = [&](int f) { return e.arrows[f].src; };
    auto dst = [&](int f) { return e.arrows[f].dst; };
    auto U   = [&](int a, int b, int b2) {
      return ok_o(a) && ok_o(b) && ok_o(b2) ? R.under[(a * n + b) * n + b2]
                                            : -1;
    };
    auto O = [&](int a, int a2, int b) {
      return ok_o(a) && ok_o(a2) && ok_o(b) ? R.over[(a * n + a2) * n + b]
                                            : -1;
    };
    auto Al = [&](int a, int b, int c) {
      return ok_o(a) && ok_o(b) && ok_o(c) ? R.alpha[(a * n + b) * n + c] : -1;
    };
    auto Rh = [&](int a) { return ok_o(a) ? R.rho[a] : -1; };
    auto Lm = [&](int a) { return ok_o(a) ? R.lambda[a] : -1; };
    int const one = R.one;

    // multiplication is a functor
    for (int f = 0; f < m; ++f) {
      for (int g = 0; g < m; ++g) {
        typed("mult-functor", {ar("f", f), ar("g", g)}, Ma(f, g),
              Mo(src(f), src(g)), Mo(dst(f), dst(g)));
      }
    }
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        same("mult-functor", {ob("a", x), ob("b", y)}, Ma(id(x), id(y)),
             id(Mo(x, y)));
      }
    }
    for (int f = 0; f < m; ++f) {
      for (int f2 = 0; f2 < m; ++f2) {
        if (src(f2) != dst(f)) {
          continue;
        }
        for (int g = 0; g < m; ++g) {
          for (int g2 = 0; g2 < m; ++g2) {
            if (src(g2) != dst(g)) {
              continue;
            }
            same("mult-functor",
                 {ar("f", f), ar("f'", f2), ar("g", g), ar("g'", g2)},
                 Ma(C(f2, f), C(g2, g)), C(Ma(f2, g2), Ma(f, g)));
          }
        }
      }
    }

    // typing of the structure arrows
    for (int a = 0; a < n; ++a) {
      typed("rho-object", {ob("a", a)}, Rh(a), Mo(a, one), a);
      typed("lambda-object", {ob("b", a)}, Lm(a), Mo(one, a), a);
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          typed("under-object", {ob("a", a), ob("b", b), ob("b'", c)},
                U(a, b, c), To(Mo(a, b), Mo(a, c)), Mo(a, To(b, c)));
          typed("over-object", {ob("a", a), ob("a'", b), ob("b", c)},
                O(a, b, c), To(Mo(a, c), Mo(b, c)), Mo(To(a, b), c));
          typed("alpha-object", {ob("a", a), ob("b", b), ob("c", c)},
                Al(a, b, c), Mo(Mo(a, b), c), Mo(a, Mo(b, c)));
        }
      }
    }
    if (!rep.ok()) {
      return rep;
    }

    // naturality
    for (int f = 0; f < m; ++f) {
      same("rho-natural", {ar("f", f)}, C(Rh(dst(f)), Ma(f, id(one))),
           C(f, Rh(src(f))));
      same("lambda-natural", {ar("f", f)}, C(Lm(dst(f)), Ma(id(one), f)),
           C(f, Lm(src(f))));
      for (int g = 0; g < m; ++g) {
        for (int k = 0; k < m; ++k) {
          std::vector<Binding> in{ar("f", f), ar("g", g), ar("k", k)};
          same("under-natural", in,
               C(U(dst(f), dst(g), dst(k)), Ta(Ma(f, g), Ma(f, k))),
               C(Ma(f, Ta(g, k)), U(src(f), src(g), src(k))));
          same("over-natural", in,
               C(O(dst(f), dst(g), dst(k)), Ta(Ma(f, k), Ma(g, k))),
               C(Ma(Ta(f, g), k), O(src(f), src(g), src(k))));
          same("alpha-natural", in,
               C(Al(dst(f), dst(g), dst(k)), Ma(Ma(f, g), k)),
               C(Ma(f, Ma(g, k)), Al(src(f), src(g), src(k))));
        }
      }
    }

    // the distributor diagrams
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int b2 = 0; b2 < n; ++b2) {
          int ab = Mo(a, b), ab2 = Mo(a, b2);
          same("under-sym", {ob("a", a), ob("b", b), ob("b'", b2)},
               path({U(a, b, b2), Ma(id(a), Sy(b, b2))}),
               path({Sy(ab, ab2), U(a, b2, b)}));
          same("over-sym", {ob("a", a), ob("a'", b), ob("b", b2)},
               path({O(a, b, b2), Ma(Sy(a, b), id(b2))}),
               path({Sy(Mo(a, b2), Mo(b, b2)), O(b, a, b2)}));
          for (int b3 = 0; b3 < n; ++b3) {
            int ab3 = Mo(a, b3);
            same("under-assoc",
                 {ob("a", a), ob("b", b), ob("b'", b2), ob("b''", b3)},
                 path({Ta(U(a, b, b2), id(ab3)), U(a, To(b, b2), b3)}),
                 path({inv(As(ab, ab2, ab3)), Ta(id(ab), U(a, b2, b3)),
                       U(a, b, To(b2, b3)), Ma(id(a), As(b, b2, b3))}));
            // here a, b, b2 play a, a', a'' and b3 plays b
            int ac = Mo(a, b3), bc = Mo(b, b3), cc = Mo(b2, b3);
            same("over-assoc",
                 {ob("a", a), ob("a'", b), ob("a''", b2), ob("b", b3)},
                 path({Ta(O(a, b, b3), id(cc)), O(To(a, b), b2, b3)}),
                 path({inv(As(ac, bc, cc)), Ta(id(ac), O(b, b2, b3)),
                       O(a, To(b, b2), b3), Ma(As(a, b, b2), id(b3))}));
          }
        }
      }
    }
    auto middle_four = [&](int p, int q, int r, int s) {
      return path({inv(As(p, q, To(r, s))), Ta(id(p), As(q, r, s)),
                   Ta(id(p), Ta(Sy(q, r), id(s))),
                   Ta(id(p), inv(As(r, q, s))), As(p, r, To(q, s))});
    };
    for (int a = 0; a < n; ++a) {
      for (int a2 = 0; a2 < n; ++a2) {
        for (int b = 0; b < n; ++b) {
          for (int b2 = 0; b2 < n; ++b2) {
            same("distrib-interchange",
                 {ob("a", a), ob("a'", a2), ob("b", b), ob("b'", b2)},
                 path({Ta(U(a, b, b2), U(a2, b, b2)), O(a, a2, To(b, b2))}),
                 path({middle_four(Mo(a, b), Mo(a, b2), Mo(a2, b), Mo(a2, b2)),
                       Ta(O(a, a2, b), O(a, a2, b2)), U(To(a, a2), b, b2)}));
          }
        }
      }
    }

    // coherence of alpha, rho, lambda with the distributors
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        int ab = Mo(a, b);
        for (int c = 0; c < n; ++c) {
          int bc = Mo(b, c);
          for (int x = 0; x < n; ++x) {
            int xb = Mo(x, b);
            same("alpha-over",
                 {ob("a", a), ob("b", b), ob("c", c), ob("a'", x)},
                 path({O(ab, xb, c), Ma(O(a, x, b), id(c)),
                       Al(To(a, x), b, c)}),
                 path({Ta(Al(a, b, c), Al(x, b, c)), O(a, x, bc)}));
            int ax = Mo(a, x), xc = Mo(x, c);
            same("alpha-mixed",
                 {ob("a", a), ob("b", b), ob("c", c), ob("b'", x)},
                 path({O(ab, ax, c), Ma(U(a, b, x), id(c)),
                       Al(a, To(b, x), c)}),
                 path({Ta(Al(a, b, c), Al(a, x, c)), U(a, bc, xc),
                       Ma(id(a), O(b, x, c))}));
            int bx = Mo(b, x);
            same("alpha-under",
                 {ob("a", a), ob("b", b), ob("c", c), ob("c'", x)},
                 path({U(ab, c, x), Al(a, b, To(c, x))}),
                 path({Ta(Al(a, b, c), Al(a, b, x)), U(a, bc, bx),
                       Ma(id(a), U(b, c, x))}));
          }
          for (int d = 0; d < n; ++d) {
            same("mult-pentagon",
                 {ob("a", a), ob("b", b), ob("c", c), ob("d", d)},
                 path({Al(ab, c, d), Al(a, b, Mo(c, d))}),
                 path({Ma(Al(a, b, c), id(d)), Al(a, bc, d),
                       Ma(id(a), Al(b, c, d))}));
          }
        }
        same("rho-over", {ob("a", a), ob("a'", b)},
             path({O(a, b, one), Rh(To(a, b))}), Ta(Rh(a), Rh(b)));
        same("lambda-under", {ob("b", a), ob("b'", b)},
             path({U(one, a, b), Lm(To(a, b))}), Ta(Lm(a), Lm(b)));
        same("mult-triangle", {ob("a", a), ob("b", b)},
             path({Al(a, one, b), Ma(id(a), Lm(b))}), Ma(Rh(a), id(b)));
      }
    }
    return rep;
  }

  EndoTwoRing endo_two_ring(PicardModel const& A, HomModelCaps const& caps) {
    EndoTwoRing out;
    out.hom          = hom_model(A, A, caps);
    auto const& fs   = out.hom.functors;
    auto const& nats = out.hom.nats;
    auto const& e    = out.hom.cat;
    int const   n    = static_cast<int>(fs.size());
    int const   m    = static_cast<int>(nats.size());
    auto const  objs = A.objects();
    auto const& H    = A.H;

    auto find_functor = [&](MonFunctor const& F) {
      for (int i = 0; i < n; ++i) {
        if (same_functor(F, fs[i], A)) {
          return i;
        }
      }
      return -1;
    };
    std::map<std::tuple<int, int, std::vector<Elem>>, int> index;
    for (int f = 0; f < m; ++f) {
      std::vector<Elem> v;
      for (auto const& a : objs) {
        v.push_back(nats[f].sigma(a));
      }
      index[{nats[f].src, nats[f].dst, v}] = f;
    }
    auto find_arrow = [&](int s, int t, auto&& component) {
      if (s < 0 || t < 0) {
        return -1;
      }
      std::vector<Elem> v;
      for (auto const& a : objs) {
        v.push_back(H.reduce(component(a)));
      }
      auto it = index.find({s, t, v});
      return it == index.end() ? -1 : it->second;
    };

    ExplicitTwoRing& R = out.ring;
    R.base             = e;
    R.mult_obj.assign(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        R.mult_obj[i * n + k] = find_functor(compose_functors(fs[k], fs[i], A, A));
      }
    }
    auto Mo = [&](int i, int k) {
      return i < 0 || k < 0 ? -1 : R.mult_obj[i * n + k];
    };
    R.mult_arr.assign(static_cast<std::size_t>(m) * m, -1);
    for (int t = 0; t < m; ++t) {
      for (int s = 0; s < m; ++s) {
        auto const& G  = fs[nats[t].src];
        auto const& F2 = fs[nats[s].dst];
        R.mult_arr[t * m + s] = find_arrow(
            Mo(nats[t].src, nats[s].src), Mo(nats[t].dst, nats[s].dst),
            [&](Elem const& a) {
              return H.add(G.psi1(nats[s].sigma(a)), nats[t].sigma(F2.psi0(a)));
            });
      }
    }
    R.one = find_functor(MonFunctor::identity(A));
    auto ident = [&](int x) { return x < 0 ? -1 : e.identity[x]; };
    auto To    = [&](int x, int y) {
      return x < 0 || y < 0 ? -1 : e.tensor_o(x, y);
    };
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        for (int c = 0; c < n; ++c) {
          R.under.push_back(find_arrow(
              To(Mo(a, b), Mo(a, c)), Mo(a, To(b, c)), [&](Elem const& x) {
                return fs[a].F2(fs[b].psi0(x), fs[c].psi0(x));
              }));
          R.over.push_back(ident(To(Mo(a, c), Mo(b, c))));
          R.alpha.push_back(ident(Mo(Mo(a, b), c)));
        }
      }
      R.rho.push_back(ident(Mo(a, R.one)));
      R.lambda.push_back(ident(Mo(R.one, a)));
    }
    out.report.absorb(validate_explicit_picard(e), "base: ");
    out.report.absorb(validate_explicit_two_ring(R));
    return out;
  }

}  // namespace picring
