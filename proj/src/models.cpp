#include "picring/models.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_map>

namespace picring {

  PicardModel PicardModel::discrete(FinAbGroup g, Int bound) {
    PicardModel m;
    m.G     = g;
    m.H     = FinAbGroup::trivial();
    m.c     = BiadditivePairing::zero(g, m.H);
    m.bound = bound;
    return m;
  }

  PicardModel PicardModel::one_object(FinAbGroup h) {
    PicardModel m;
    m.G = FinAbGroup::trivial();
    m.H = h;
    m.c = BiadditivePairing::zero(m.G, h);
    return m;
  }

  PicardModel PicardModel::make(FinAbGroup                     g,
                                FinAbGroup                     h,
                                std::vector<std::vector<Elem>> cvals,
                                Int                            bound) {
    PicardModel m;
    m.G     = g;
    m.H     = h;
    m.c     = BiadditivePairing{g, g, h, std::move(cvals), true};
    m.bound = bound;
    return m;
  }

  ModelArrow compose(PicardModel const& m, ModelArrow const& g,
                     ModelArrow const& f) {
    if (m.G.reduce(g.at) != m.G.reduce(f.at)) {
      throw term_error("arrows at " + elem_str(f.at) + " and "
                       + elem_str(g.at) + " are not composable");
    }
    return {f.at, m.H.add(g.aut, f.aut)};
  }

  ModelArrow tensor(PicardModel const& m, ModelArrow const& f,
                    ModelArrow const& g) {
    return {m.G.add(f.at, g.at), m.H.add(f.aut, g.aut)};
  }

  Report validate_picard(PicardModel const& m) {
    Report r;
    if (!(m.c.left == m.G) || !(m.c.right == m.G) || !(m.c.target == m.H)) {
      r.fail("pairing-groups", {}, "symmetry pairing must be G x G -> H");
      return r;
    }
    BiadditivePairing c = m.c;
    c.antisymmetric     = true;
    for (auto const& msg : validate_pairing(c)) {
      r.fail("pairing", {}, msg);
    }
    r.checked = m.G.rank() * m.G.rank();
    r.bound   = m.bound;
    return r;
  }

  // ---------------------------------------------------------------------

  int ExplicitPicard::compose(int g, int f) const {
    return comp[static_cast<std::size_t>(g) * arrows.size() + f];
  }
  int ExplicitPicard::tensor_o(int x, int y) const {
    return tensor_obj[static_cast<std::size_t>(x) * objects.size() + y];
  }
  int ExplicitPicard::tensor_a(int f, int g) const {
    return tensor_arr[static_cast<std::size_t>(f) * arrows.size() + g];
  }
  int ExplicitPicard::assoc_at(int x, int y, int z) const {
    std::size_t n = objects.size();
    return assoc[(static_cast<std::size_t>(x) * n + y) * n + z];
  }
  int ExplicitPicard::sym_at(int x, int y) const {
    return sym[static_cast<std::size_t>(x) * objects.size() + y];
  }

  namespace {
    std::string oname(ExplicitPicard const& e, int x) {
      return x >= 0 && x < e.n_obj() ? e.objects[x] : std::to_string(x);
    }
    std::string aname(ExplicitPicard const& e, int f) {
      return f >= 0 && f < e.n_arr() ? e.arrows[f].label : std::to_string(f);
    }
  }  // namespace

  Report validate_explicit_picard(ExplicitPicard const& e) {
    Report    r;
    int const n = e.n_obj(), m = e.n_arr();
    auto      sz = [](std::size_t k) { return k; };
    if (e.identity.size() != sz(n) || e.comp.size() != sz(m) * m
        || e.tensor_obj.size() != sz(n) * n || e.tensor_arr.size() != sz(m) * m
        || e.dual.size() != sz(n) || e.assoc.size() != sz(n) * n * n
        || e.runit.size() != sz(n) || e.lunit.size() != sz(n)
        || e.sym.size() != sz(n) * n || e.j.size() != sz(n)) {
      r.fail("table-shape", {}, "a table has the wrong size");
      return r;
    }
    auto obj_ok = [&](int x) { return x >= 0 && x < n; };
    auto arr_ok = [&](int f) { return f >= 0 && f < m; };
    for (int f = 0; f < m; ++f) {
      if (!obj_ok(e.arrows[f].src) || !obj_ok(e.arrows[f].dst)) {
        r.fail("arrow-typing", {{"f", aname(e, f)}});
        return r;
      }
    }
    auto src = [&](int f) { return e.arrows[f].src; };
    auto dst = [&](int f) { return e.arrows[f].dst; };
    for (int x = 0; x < n; ++x) {
      int i = e.identity[x];
      if (!arr_ok(i) || src(i) != x || dst(i) != x) {
        r.fail("identity-typing", {{"x", oname(e, x)}});
        return r;
      }
      for (int y = 0; y < n; ++y) {
        if (!obj_ok(e.tensor_o(x, y))) {
          r.fail("tensor-typing", {{"x", oname(e, x)}, {"y", oname(e, y)}});
          return r;
        }
      }
      if (!obj_ok(e.dual[x])) {
        r.fail("dual-typing", {{"x", oname(e, x)}});
        return r;
      }
    }
    if (!obj_ok(e.unit)) {
      r.fail("unit-typing", {});
      return r;
    }
    // composition
    std::vector<std::vector<int>> out(n);
    for (int f = 0; f < m; ++f) {
      out[src(f)].push_back(f);
    }
    bool typed = true;
    for (int g = 0; g < m; ++g) {
      for (int f = 0; f < m; ++f) {
        int h = e.compose(g, f);
        ++r.checked;
        if (dst(f) != src(g)) {
          if (h != -1) {
            r.fail("comp-typing", {{"g", aname(e, g)}, {"f", aname(e, f)}},
                   "defined on non-composable pair");
            typed = false;
          }
          continue;
        }
        if (!arr_ok(h) || src(h) != src(f) || dst(h) != dst(g)) {
          r.fail("comp-typing", {{"g", aname(e, g)}, {"f", aname(e, f)}});
          typed = false;
        }
      }
    }
    for (int f = 0; f < m; ++f) {
      for (int g = 0; g < m; ++g) {
        int t = e.tensor_a(f, g);
        ++r.checked;
        if (!arr_ok(t) || src(t) != e.tensor_o(src(f), src(g))
            || dst(t) != e.tensor_o(dst(f), dst(g))) {
          r.fail("tensor-arrow-typing",
                 {{"f", aname(e, f)}, {"g", aname(e, g)}});
          typed = false;
        }
      }
    }
    auto comp_ok = [&](int x) { return arr_ok(x); };
    auto check_comp = [&](int x, int s, int t, char const* what,
                          std::vector<Binding> b) {
      ++r.checked;
      if (!comp_ok(x) || src(x) != s || dst(x) != t) {
        r.fail(what, std::move(b), "component has the wrong type");
        typed = false;
      }
    };
    for (int x = 0; x < n; ++x) {
      check_comp(e.runit[x], e.tensor_o(x, e.unit), x, "runit-typing",
                 {{"x", oname(e, x)}});
      check_comp(e.lunit[x], e.tensor_o(e.unit, x), x, "lunit-typing",
                 {{"x", oname(e, x)}});
      check_comp(e.j[x], e.unit, e.tensor_o(e.dual[x], x), "j-typing",
                 {{"x", oname(e, x)}});
      for (int y = 0; y < n; ++y) {
        check_comp(e.sym_at(x, y), e.tensor_o(x, y), e.tensor_o(y, x),
                   "sym-typing", {{"x", oname(e, x)}, {"y", oname(e, y)}});
        for (int z = 0; z < n; ++z) {
          check_comp(e.assoc_at(x, y, z), e.tensor_o(x, e.tensor_o(y, z)),
                     e.tensor_o(e.tensor_o(x, y), z), "assoc-typing",
                     {{"x", oname(e, x)}, {"y", oname(e, y)},
                      {"z", oname(e, z)}});
        }
      }
    }
    if (!typed) {
      return r;
    }
    auto C = [&](int g, int f) { return e.compose(g, f); };
    auto T = [&](int f, int g) { return e.tensor_a(f, g); };
    auto I = [&](int x) { return e.identity[x]; };
    // groupoid laws
    for (int f = 0; f < m; ++f) {
      ++r.checked;
      if (C(I(dst(f)), f) != f || C(f, I(src(f))) != f) {
        r.fail("identity-law", {{"f", aname(e, f)}});
      }
      bool inverse = false;
      for (int g : out[dst(f)]) {
        if (dst(g) == src(f) && C(g, f) == I(src(f)) && C(f, g) == I(dst(f))) {
          inverse = true;
          break;
        }
      }
      if (!inverse) {
        r.fail("inverse", {{"f", aname(e, f)}});
      }
      for (int g : out[dst(f)]) {
        for (int h : out[dst(g)]) {
          ++r.checked;
          if (C(h, C(g, f)) != C(C(h, g), f)) {
            r.fail("comp-assoc",
                   {{"h", aname(e, h)}, {"g", aname(e, g)}, {"f", aname(e, f)}});
          }
        }
      }
    }
    // bifunctoriality
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        ++r.checked;
        if (T(I(x), I(y)) != I(e.tensor_o(x, y))) {
          r.fail("tensor-identity", {{"x", oname(e, x)}, {"y", oname(e, y)}});
        }
      }
    }
    for (int f = 0; f < m; ++f) {
      for (int f2 = 0; f2 < m; ++f2) {
        for (int g : out[dst(f)]) {
          for (int g2 : out[dst(f2)]) {
            ++r.checked;
            if (C(T(g, g2), T(f, f2)) != T(C(g, f), C(g2, f2))) {
              r.fail("interchange", {{"f", aname(e, f)}, {"f'", aname(e, f2)},
                                     {"g", aname(e, g)}, {"g'", aname(e, g2)}});
            }
          }
        }
      }
    }
    // naturality
    for (int f = 0; f < m; ++f) {
      int x = src(f), x2 = dst(f);
      ++r.checked;
      if (C(e.runit[x2], T(f, I(e.unit))) != C(f, e.runit[x])) {
        r.fail("runit-naturality", {{"f", aname(e, f)}});
      }
      ++r.checked;
      if (C(e.lunit[x2], T(I(e.unit), f)) != C(f, e.lunit[x])) {
        r.fail("lunit-naturality", {{"f", aname(e, f)}});
      }
      for (int g = 0; g < m; ++g) {
        int y = src(g), y2 = dst(g);
        ++r.checked;
        if (C(e.sym_at(x2, y2), T(f, g)) != C(T(g, f), e.sym_at(x, y))) {
          r.fail("sym-naturality", {{"f", aname(e, f)}, {"g", aname(e, g)}});
        }
        for (int h = 0; h < m; ++h) {
          int z = src(h), z2 = dst(h);
          ++r.checked;
          if (C(e.assoc_at(x2, y2, z2), T(f, T(g, h)))
              != C(T(T(f, g), h), e.assoc_at(x, y, z))) {
            r.fail("assoc-naturality", {{"f", aname(e, f)},
                                        {"g", aname(e, g)},
                                        {"h", aname(e, h)}});
          }
        }
      }
    }
    // coherence
    auto t  = [&](int x, int y) { return e.tensor_o(x, y); };
    auto A  = [&](int x, int y, int z) { return e.assoc_at(x, y, z); };
    auto S  = [&](int x, int y) { return e.sym_at(x, y); };
    for (int x = 0; x < n; ++x) {
      ++r.checked;
      if (C(e.lunit[x], S(x, e.unit)) != e.runit[x]) {
        r.fail("unit-symmetry", {{"x", oname(e, x)}});
      }
      for (int y = 0; y < n; ++y) {
        std::vector<Binding> bxy{{"x", oname(e, x)}, {"y", oname(e, y)}};
        ++r.checked;
        if (C(S(y, x), S(x, y)) != I(t(x, y))) {
          r.fail("involution", bxy);
        }
        ++r.checked;
        if (C(T(e.runit[x], I(y)), A(x, e.unit, y))
            != T(I(x), e.lunit[y])) {
          r.fail("triangle", bxy);
        }
        for (int z = 0; z < n; ++z) {
          std::vector<Binding> bxyz = bxy;
          bxyz.push_back({"z", oname(e, z)});
          ++r.checked;
          int lhs = C(T(S(z, x), I(y)),
                      C(A(z, x, y), C(S(t(x, y), z), A(x, y, z))));
          int rhs = C(A(x, z, y), T(I(x), S(y, z)));
          if (lhs != rhs) {
            r.fail("hexagon", bxyz);
          }
          for (int w = 0; w < n; ++w) {
            ++r.checked;
            int p1 = C(A(t(x, y), z, w), A(x, y, t(z, w)));
            int p2 = C(T(A(x, y, z), I(w)),
                       C(A(x, t(y, z), w), T(I(x), A(y, z, w))));
            if (p1 != p2) {
              auto b = bxyz;
              b.push_back({"w", oname(e, w)});
              r.fail("pentagon", b);
            }
          }
        }
      }
    }
    return r;
  }

  ExplicitPicard from_skeletal(PicardModel const& m) {
    if (!m.G.finite() || !m.H.finite()) {
      throw std::invalid_argument("from_skeletal needs finite groups");
    }
    auto objs = m.objects();
    auto auts = m.autos();
    std::map<Elem, int> oi, hi;
    for (std::size_t i = 0; i < objs.size(); ++i) {
      oi[objs[i]] = static_cast<int>(i);
    }
    for (std::size_t i = 0; i < auts.size(); ++i) {
      hi[auts[i]] = static_cast<int>(i);
    }
    int const      n = static_cast<int>(objs.size());
    int const      k = static_cast<int>(auts.size());
    ExplicitPicard e;
    auto arrow = [&](Elem const& x, Elem const& h) {
      return oi.at(x) * k + hi.at(h);
    };
    for (auto const& x : objs) {
      e.objects.push_back(elem_str(x));
    }
    for (int x = 0; x < n; ++x) {
      for (int h = 0; h < k; ++h) {
        e.arrows.push_back({x, x, "(" + elem_str(objs[x]) + ";"
                                      + elem_str(auts[h]) + ")"});
      }
      e.identity.push_back(arrow(objs[x], m.H.zero()));
    }
    int const na = n * k;
    e.comp.assign(static_cast<std::size_t>(na) * na, -1);
    e.tensor_arr.assign(static_cast<std::size_t>(na) * na, -1);
    for (int f = 0; f < na; ++f) {
      for (int g = 0; g < na; ++g) {
        Elem const& hf = auts[f % k];
        Elem const& hg = auts[g % k];
        if (f / k == g / k) {
          e.comp[static_cast<std::size_t>(g) * na + f]
              = arrow(objs[f / k], m.H.add(hf, hg));
        }
        e.tensor_arr[static_cast<std::size_t>(f) * na + g]
            = arrow(m.G.add(objs[f / k], objs[g / k]), m.H.add(hf, hg));
      }
    }
    e.unit = oi.at(m.G.zero());
    for (int x = 0; x < n; ++x) {
      e.dual.push_back(oi.at(m.G.neg(objs[x])));
      e.runit.push_back(e.identity[x]);
      e.lunit.push_back(e.identity[x]);
      e.j.push_back(e.identity[e.unit]);
      for (int y = 0; y < n; ++y) {
        Elem s = m.G.add(objs[x], objs[y]);
        e.tensor_obj.push_back(oi.at(s));
        e.sym.push_back(arrow(s, m.c(objs[x], objs[y])));
      }
    }
    e.assoc.resize(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          Elem s = m.G.add(objs[x], m.G.add(objs[y], objs[z]));
          e.assoc[(static_cast<std::size_t>(x) * n + y) * n + z]
              = e.identity[oi.at(s)];
        }
      }
    }
    return e;
  }

  // ---------------------------------------------------------------------

  Elem eval_obj(PicardModel const& m, ObjTerm const& x, Env const& env) {
    switch (x.kind()) {
      case ObjTerm::Kind::Unit:
        return m.G.zero();
      case ObjTerm::Kind::Gen: {
        if (auto it = env.find(x.name()); it != env.end()) {
          return m.G.reduce(it->second);
        }
        Int         v   = 0;
        auto const& s   = x.name();
        auto [p, ec]    = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec == std::errc() && p == s.data() + s.size() && m.G.rank() == 1) {
          return m.G.make({v});
        }
        throw term_error("no object assigned to generator " + s);
      }
      case ObjTerm::Kind::Pair:
        throw term_error("base pairs are not objects of a single model");
      case ObjTerm::Kind::Tensor:
        return m.G.add(eval_obj(m, x.left(), env), eval_obj(m, x.right(), env));
      case ObjTerm::Kind::Dual:
        return m.G.neg(eval_obj(m, x.inner(), env));
    }
    return m.G.zero();
  }

  namespace {
    Elem eval_aut(PicardModel const& m, ArrowTerm const& f, Env const& env) {
      using K = ArrowTerm::Kind;
      switch (f.kind()) {
        case K::Assoc:
        case K::RightUnit:
        case K::LeftUnit:
        case K::J:
        case K::Id:
          return m.H.zero();
        case K::Sym:
          return m.c(eval_obj(m, f.objs()[0], env),
                     eval_obj(m, f.objs()[1], env));
        case K::Compose:
          return m.H.add(eval_aut(m, f.args()[0], env),
                         eval_aut(m, f.args()[1], env));
        case K::Inv:
          return m.H.neg(eval_aut(m, f.args()[0], env));
        case K::WhiskL:
        case K::WhiskR:
          return eval_aut(m, f.args()[0], env);
        default:
          throw term_error("not a canonical arrow: " + print(f));
      }
    }
  }  // namespace

  ModelArrow canonical_eval(PicardModel const& m, ArrowTerm const& f,
                            Env const& env) {
    Elem s = eval_obj(m, f.src(), env);
    Elem t = eval_obj(m, f.dst(), env);
    if (s != t) {
      throw term_error("endpoints of " + print(f) + " evaluate to "
                       + elem_str(s) + " and " + elem_str(t));
    }
    return {s, eval_aut(m, f, env)};
  }

  namespace {
    struct VarTerm {
      ObjTerm term;
      int     mask;
    };

    std::vector<VarTerm> variable_terms(int depth) {
      std::vector<VarTerm> cur{{ObjTerm::unit(), 0},
                               {ObjTerm::gen("x"), 1},
                               {ObjTerm::gen("y"), 2},
                               {ObjTerm::gen("z"), 4}};
      for (int d = 1; d <= depth; ++d) {
        std::vector<VarTerm> next = cur;
        std::set<ObjTerm>    seen;
        for (auto const& v : cur) {
          seen.insert(v.term);
        }
        auto push = [&](ObjTerm t, int mask) {
          if (seen.insert(t).second) {
            next.push_back({std::move(t), mask});
          }
        };
        for (auto const& v : cur) {
          push(ObjTerm::dual(v.term), v.mask);
        }
        for (auto const& a : cur) {
          for (auto const& b : cur) {
            if ((a.mask & b.mask) == 0) {
              push(ObjTerm::tensor(a.term, b.term), a.mask | b.mask);
            }
          }
        }
        cur = std::move(next);
      }
      return cur;
    }
  }  // namespace

  Report check_canonical_coherence(PicardModel const&     m,
                                   CoherenceBounds const& b) {
    Report r;
    r.bound    = m.bound;
    auto terms = variable_terms(b.depth);
    if (terms.size() > b.max_terms) {
      terms.resize(b.max_terms);
      r.notes.push_back("term universe truncated to "
                        + std::to_string(b.max_terms));
    }
    std::unordered_map<ObjTerm, int, ObjTermHash> index;
    std::vector<int>                              masks;
    for (auto const& v : terms) {
      index.emplace(v.term, static_cast<int>(masks.size()));
      masks.push_back(v.mask);
    }
    struct Step {
      int       to;
      ArrowTerm arrow;
      int       edge;  // signed edge id, +1 based
    };
    std::vector<std::vector<Step>> adj(terms.size());
    int                            eid = 0;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      for (auto const& e : canonical_edges_at(terms[i].term)) {
        auto it = index.find(e.dst());
        if (it == index.end()) {
          continue;
        }
        ++eid;
        adj[i].push_back({it->second, e, eid});
        adj[it->second].push_back(
            {static_cast<int>(i), ArrowTerm::inv(e), -eid});
      }
    }
    auto objs = m.objects();
    for (std::size_t s = 0; s < terms.size(); ++s) {
      // all reduced paths from s
      std::map<int, ArrowTerm> first;
      struct Frame {
        int       at;
        ArrowTerm path;
        int       last;
        std::size_t len;
      };
      std::vector<Frame> stack{{static_cast<int>(s),
                                ArrowTerm::id(terms[s].term), 0, 0}};
      int                mask = masks[s];
      std::vector<std::string> vars;
      for (int k = 0; k < 3; ++k) {
        if (mask & (1 << k)) {
          vars.push_back(std::string(1, "xyz"[k]));
        }
      }
      auto envs = tuples(objs, vars.size());
      while (!stack.empty()) {
        Frame fr = std::move(stack.back());
        stack.pop_back();
        auto [it, fresh] = first.emplace(fr.at, fr.path);
        if (!fresh) {
          for (auto const& vals : envs) {
            Env env;
            for (std::size_t k = 0; k < vars.size(); ++k) {
              env[vars[k]] = vals[k];
            }
            ++r.checked;
            ModelArrow u = canonical_eval(m, it->second, env);
            ModelArrow v = canonical_eval(m, fr.path, env);
            if (u.aut != v.aut) {
              std::vector<Binding> bnd{{"f", print(it->second)},
                                       {"g", print(fr.path)}};
              for (std::size_t k = 0; k < vars.size(); ++k) {
                bnd.push_back(arg(vars[k], vals[k]));
              }
              r.fail("canonical-coherence", std::move(bnd),
                     elem_str(u.aut) + " != " + elem_str(v.aut));
              break;
            }
          }
        }
        if (fr.len == b.max_edges) {
          continue;
        }
        for (auto const& st : adj[fr.at]) {
          if (st.edge == -fr.last) {
            continue;
          }
          ArrowTerm p = fr.len == 0 ? st.arrow
                                    : ArrowTerm::compose(st.arrow, fr.path);
          stack.push_back({st.to, std::move(p), st.edge, fr.len + 1});
        }
      }
    }
    return r;
  }

  // ---------------------------------------------------------------------

  MonFunctor MonFunctor::identity(PicardModel const& m) {
    return {GroupHom::identity(m.G), GroupHom::identity(m.H), Table(m.H),
            m.H.zero()};
  }

  MonFunctor MonFunctor::zero(PicardModel const& a, PicardModel const& b) {
    return {GroupHom::zero(a.G, b.G), GroupHom::zero(a.H, b.H), Table(b.H),
            b.H.zero()};
  }

  Elem compute_F0(PicardModel const& A, PicardModel const& B,
                  MonFunctor const& F, Report* report) {
    auto objs = A.objects();
    Elem f0   = B.H.neg(F.F2(A.G.zero(), A.G.zero()));
    for (auto const& a : objs) {
      Elem v = B.H.neg(F.F2(a, A.G.zero()));
      if (v != f0) {
        if (report) {
          report->fail("F0-constant", {arg("a", a)},
                       "-F2(a,0) = " + elem_str(v) + " but -F2(0,0) = "
                           + elem_str(f0));
        } else {
          throw std::invalid_argument("F2(a, 0) is not constant in a");
        }
      }
    }
    return f0;
  }

  Report validate_mon_functor(MonFunctor const& F, PicardModel const& A,
                              PicardModel const& B) {
    Report r;
    r.bound = A.bound;
    if (!(F.psi0.src == A.G) || !(F.psi0.dst == B.G) || !(F.psi1.src == A.H)
        || !(F.psi1.dst == B.H) || !(F.F2.target() == B.H)) {
      r.fail("functor-groups", {}, "maps do not match the models");
      return r;
    }
    for (auto const& msg : validate_hom(F.psi0)) {
      r.fail("psi0-hom", {}, msg);
    }
    for (auto const& msg : validate_hom(F.psi1)) {
      r.fail("psi1-hom", {}, msg);
    }
    if (!r.ok()) {
      return r;
    }
    auto const& H    = B.H;
    auto        objs = A.objects();
    Elem        f0   = F.F0 ? H.reduce(*F.F0) : compute_F0(A, B, F, &r);
    for (auto const& a : objs) {
      ++r.checked;
      if (!H.is_zero(H.add(F.F2(a, A.G.zero()), f0))) {
        r.fail("unit-right", {arg("a", a)});
      }
      ++r.checked;
      if (!H.is_zero(H.add(F.F2(A.G.zero(), a), f0))) {
        r.fail("unit-left", {arg("a", a)});
      }
      for (auto const& b : objs) {
        ++r.checked;
        Elem lhs = H.add(F.F2(a, b), F.psi1(A.c(a, b)));
        Elem rhs = H.add(B.c(F.psi0(a), F.psi0(b)), F.F2(b, a));
        if (lhs != rhs) {
          r.fail("symmetry", {arg("a", a), arg("b", b)},
                 elem_str(lhs) + " != " + elem_str(rhs));
        }
        for (auto const& c : objs) {
          ++r.checked;
          Elem l = H.add(F.F2(b, c), F.F2(a, A.G.add(b, c)));
          Elem q = H.add(F.F2(a, b), F.F2(A.G.add(a, b), c));
          if (l != q) {
            r.fail("associativity", {arg("a", a), arg("b", b), arg("c", c)},
                   elem_str(l) + " != " + elem_str(q));
          }
        }
      }
    }
    return r;
  }

  Report validate_mon_nat(MonNat const& s, MonFunctor const& F,
                          MonFunctor const& G, PicardModel const& A,
                          PicardModel const& B) {
    Report r;
    r.bound = A.bound;
    if (!(F.psi0 == G.psi0)) {
      r.fail("object-maps", {}, "object maps differ; no arrows Fa -> Ga");
      return r;
    }
    if (!(F.psi1 == G.psi1)) {
      r.fail("naturality", {}, "arrow maps differ");
    }
    auto const& H    = B.H;
    auto        objs = A.objects();
    Elem        f0   = F.F0 ? *F.F0 : compute_F0(A, B, F, &r);
    Elem        g0   = G.F0 ? *G.F0 : compute_F0(A, B, G, &r);
    ++r.checked;
    if (H.add(s.sigma(A.G.zero()), f0) != H.reduce(g0)) {
      r.fail("unit", {}, "sigma(0) + F0 != G0");
    }
    for (auto const& a : objs) {
      for (auto const& b : objs) {
        ++r.checked;
        Elem lhs = H.add(s.sigma(A.G.add(a, b)), F.F2(a, b));
        Elem rhs = H.add(G.F2(a, b), H.add(s.sigma(a), s.sigma(b)));
        if (lhs != rhs) {
          r.fail("monoidal", {arg("a", a), arg("b", b)},
                 elem_str(lhs) + " != " + elem_str(rhs));
        }
      }
    }
    return r;
  }

  MonFunctor compose_functors(MonFunctor const& F, MonFunctor const& G,
                              PicardModel const& A, PicardModel const& B) {
    MonFunctor K;
    K.psi0   = F.psi0.then(G.psi0);
    K.psi1   = F.psi1.then(G.psi1);
    Table f2 = F.F2, g2 = G.F2;
    GroupHom fp0 = F.psi0, gp1 = G.psi1;
    FinAbGroup Hc = G.psi1.dst;
    K.F2 = Table(Hc, [=](Table::Key const& k) {
      return Hc.add(gp1(f2(k[0], k[1])), g2(fp0(k[0]), fp0(k[1])));
    });
    Elem f0 = F.F0 ? *F.F0 : compute_F0(A, B, F);
    Elem g0 = G.F0 ? *G.F0 : Hc.neg(G.F2(B.G.zero(), B.G.zero()));
    K.F0    = Hc.add(g0, G.psi1(f0));
    return K;
  }

  // ---------------------------------------------------------------------

  Elem bang(PicardModel const& m, Elem const& x, Elem const& y) {
    // (x* y*)(y x) -> I along the canonical left leg of the defining
    // square; the right leg is j_{yx}^{-1} after bang (x) 1.
    ObjTerm a = ObjTerm::gen("a"), b = ObjTerm::gen("b");
    ObjTerm ad = ObjTerm::dual(a), bd = ObjTerm::dual(b);
    using A    = ArrowTerm;
    A leg = A::inv(A::assoc(ad, bd, ObjTerm::tensor(b, a)));
    leg   = A::compose(A::whisk_l(ad, A::assoc(bd, b, a)), leg);
    leg   = A::compose(A::whisk_l(ad, A::whisk_r(A::inv(A::j(b)), a)), leg);
    leg   = A::compose(A::whisk_l(ad, A::left_unit(a)), leg);
    leg   = A::compose(A::inv(A::j(a)), leg);
    Env  env{{"a", x}, {"b", y}};
    Elem l = canonical_eval(m, leg, env).aut;
    Elem j = canonical_eval(m, A::inv(A::j(ObjTerm::tensor(b, a))), env).aut;
    return m.H.sub(l, j);
  }

  InvStructure build_inv(PicardModel const& m) {
    InvStructure s;
    PicardModel  mm = m;
    s.inv2 = Table(m.H, [mm](Table::Key const& k) {
      Elem const& a = k[0];
      Elem const& b = k[1];
      return mm.H.add(mm.c(mm.G.neg(a), mm.G.neg(b)), bang(mm, b, a));
    });
    s.functor = {GroupHom::negation(m.G), GroupHom::negation(m.H), s.inv2,
                 m.H.zero()};
    Report& r = s.lemmas;
    r.bound   = m.bound;
    auto const& G = m.G;
    auto const& H = m.H;
    auto        objs = m.objects();
    for (auto const& a : objs) {
      for (auto const& b : objs) {
        // the composite "bang then inv(s)" agrees with "s then bang"
        ++r.checked;
        Elem alt = H.add(bang(m, a, b), H.neg(m.c(b, a)));
        if (alt != s.inv2(a, b)) {
          r.fail("inv2-alternative", {arg("a", a), arg("b", b)},
                 elem_str(alt) + " != " + elem_str(s.inv2(a, b)));
        }
        // j is monoidal: j_{ab} against j_a (x) j_b through the middle
        // four interchange
        ObjTerm x = ObjTerm::gen("a"), y = ObjTerm::gen("b");
        ObjTerm xd = ObjTerm::dual(x), yd = ObjTerm::dual(y);
        using A    = ArrowTerm;
        A mid = A::inv(A::assoc(xd, yd, ObjTerm::tensor(x, y)));
        mid   = A::compose(A::whisk_l(xd, A::assoc(yd, x, y)), mid);
        mid   = A::compose(A::whisk_l(xd, A::whisk_r(A::sym(yd, x), y)), mid);
        mid   = A::compose(A::whisk_l(xd, A::inv(A::assoc(x, yd, y))), mid);
        mid   = A::compose(A::assoc(xd, x, ObjTerm::tensor(yd, y)), mid);
        Env  env{{"a", a}, {"b", b}};
        Elem top = canonical_eval(m, A::j(ObjTerm::tensor(x, y)), env).aut;
        top      = H.add(top, H.neg(bang(m, b, a)));
        top      = H.add(top, m.c(G.neg(b), G.neg(a)));
        top      = H.add(top, canonical_eval(m, mid, env).aut);
        Elem bot = H.add(canonical_eval(m, A::j(x), env).aut,
                         canonical_eval(m, A::j(y), env).aut);
        ++r.checked;
        if (top != bot) {
          r.fail("j-monoidal", {arg("a", a), arg("b", b)},
                 elem_str(top) + " != " + elem_str(bot));
        }
        for (auto const& c : objs) {
          ++r.checked;
          Elem bc  = G.add(b, c);
          Elem ab  = G.add(a, b);
          Elem lhs = H.add(m.c(G.neg(b), G.neg(c)), bang(m, c, b));
          lhs      = H.add(lhs, m.c(G.neg(a), G.neg(bc)));
          lhs      = H.add(lhs, bang(m, bc, a));
          Elem rhs = H.add(m.c(G.neg(a), G.neg(b)), bang(m, b, a));
          rhs      = H.add(rhs, m.c(G.neg(ab), G.neg(c)));
          rhs      = H.add(rhs, bang(m, c, ab));
          if (lhs != rhs) {
            r.fail("inv-associativity", {arg("a", a), arg("b", b), arg("c", c)},
                   elem_str(lhs) + " != " + elem_str(rhs));
          }
        }
      }
    }
    // naturality of j: I -> inv(x) x against inv(f) (x) f
    for (auto const& h : m.autos()) {
      ++r.checked;
      if (!H.is_zero(H.add(s.functor.psi1(h), h))) {
        r.fail("j-natural", {arg("h", h)});
      }
    }
    r.absorb(validate_mon_functor(s.functor, m, m), "inv-");
    // inv inv = id on objects and arrows
    GroupHom twice0 = s.functor.psi0.then(s.functor.psi0);
    GroupHom twice1 = s.functor.psi1.then(s.functor.psi1);
    ++r.checked;
    if (!(twice0 == GroupHom::identity(G)) || !(twice1 == GroupHom::identity(H))) {
      r.fail("involutive", {});
    }
    return s;
  }

  ModelArrow bullet_iso(PicardModel const& A, PicardModel const& B,
                        MonFunctor const& F, Elem const& a) {
    Elem f0 = F.F0 ? *F.F0 : compute_F0(A, B, F);
    return {B.G.neg(F.psi0(a)), B.H.sub(f0, F.F2(A.G.neg(a), a))};
  }

  namespace {
    bool is_strict(MonFunctor const& F, PicardModel const& A,
                   PicardModel const& B) {
      auto objs = A.objects();
      Elem f0   = F.F0 ? *F.F0 : compute_F0(A, B, F);
      if (!B.H.is_zero(f0)) {
        return false;
      }
      for (auto const& a : objs) {
        for (auto const& b : objs) {
          if (!B.H.is_zero(F.F2(a, b))) {
            return false;
          }
        }
      }
      return true;
    }

    void check_iso_unique(Report& r, std::string const& name,
                          MonFunctor const& F, PicardModel const& A,
                          PicardModel const& B) {
      Elem f0    = F.F0 ? *F.F0 : compute_F0(A, B, F);
      auto autos = B.autos();
      for (auto const& a : A.objects()) {
        // theta solves j + theta (x) 1 + F2(a*, a) = F0 + F(j)
        Elem        want = bullet_iso(A, B, F, a).aut;
        std::size_t hits = 0;
        bool        own  = false;
        for (auto const& t : autos) {
          if (B.H.add(t, F.F2(A.G.neg(a), a)) == B.H.reduce(f0)) {
            ++hits;
            own = own || t == want;
          }
        }
        ++r.checked;
        if (hits != 1 || !own) {
          r.fail("bullet-iso-unique", {{"F", name}, arg("a", a)},
                 std::to_string(hits) + " solutions");
        }
      }
      if (is_strict(F, A, B)) {
        for (auto const& a : A.objects()) {
          ++r.checked;
          if (!B.H.is_zero(bullet_iso(A, B, F, a).aut)) {
            r.fail("strict-identity", {{"F", name}, arg("a", a)});
          }
        }
      }
    }
  }  // namespace

  Report check_bullet_lemmas(PicardModel const& A, PicardModel const& B,
                             MonFunctor const& F, MonFunctor const& G,
                             MonNat const& sigma) {
    Report r;
    r.bound = A.bound;
    check_iso_unique(r, "F", F, A, B);
    check_iso_unique(r, "G", G, A, B);
    for (auto const& a : A.objects()) {
      ++r.checked;
      Elem lhs = B.H.add(sigma.sigma(a), bullet_iso(A, B, F, a).aut);
      lhs      = B.H.add(lhs, sigma.sigma(A.G.neg(a)));
      Elem rhs = bullet_iso(A, B, G, a).aut;
      if (lhs != rhs) {
        r.fail("bullet-iso-natural", {arg("a", a)},
               elem_str(lhs) + " != " + elem_str(rhs));
      }
    }
    return r;
  }

  Report check_bullet_composite(PicardModel const& A, PicardModel const& B,
                      PicardModel const& C, MonFunctor const& F,
                      MonFunctor const& G) {
    Report     r;
    r.bound      = A.bound;
    MonFunctor K = compose_functors(F, G, A, B);
    for (auto const& a : A.objects()) {
      ++r.checked;
      Elem lhs = bullet_iso(A, C, K, a).aut;
      Elem rhs = C.H.add(bullet_iso(B, C, G, F.psi0(a)).aut,
                         G.psi1(bullet_iso(A, B, F, a).aut));
      if (lhs != rhs) {
        r.fail("bullet-iso-composite", {arg("a", a)},
               elem_str(lhs) + " != " + elem_str(rhs));
      }
    }
    return r;
  }

  // ---------------------------------------------------------------------

  bool same_functor(MonFunctor const& F, MonFunctor const& G,
                    PicardModel const& A) {
    if (!(F.psi0 == G.psi0) || !(F.psi1 == G.psi1)) {
      return false;
    }
    auto objs = A.objects();
    for (auto const& a : objs) {
      for (auto const& b : objs) {
        if (F.F2(a, b) != G.F2(a, b)) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {
    // Odometer over tables keys -> values with the first `fixed` keys
    // pinned to values[0].
    template <class Visit>
    void for_each_table(std::vector<Table::Key> const& keys,
                        std::vector<Elem> const&       values,
                        std::size_t                    fixed,
                        Visit&&                        visit) {
      std::vector<std::size_t> idx(keys.size(), 0);
      while (true) {
        visit(idx);
        std::size_t i = idx.size();
        bool        more = false;
        while (i > fixed) {
          --i;
          if (++idx[i] < values.size()) {
            more = true;
            break;
          }
          idx[i] = 0;
        }
        if (!more) {
          return;
        }
      }
    }

    std::string functor_label(MonFunctor const& F, PicardModel const& A) {
      std::string s = "psi0=";
      for (auto const& e : F.psi0.images) {
        s += elem_str(e);
      }
      s += " psi1=";
      for (auto const& e : F.psi1.images) {
        s += elem_str(e);
      }
      s += " F2=";
      auto objs = A.objects();
      for (auto const& a : objs) {
        for (auto const& b : objs) {
          s += elem_str(F.F2(a, b));
        }
      }
      return s;
    }
  }  // namespace

  std::vector<MonFunctor> enumerate_functors(PicardModel const&  A,
                                             PicardModel const&  B,
                                             HomModelCaps const& caps) {
    if (!A.G.finite() || !A.H.finite() || !B.G.finite() || !B.H.finite()) {
      throw cap_exceeded("functor enumeration needs finite models");
    }
    auto   objs  = A.objects();
    auto   autos = B.autos();
    auto   keys  = tuples(objs, 2);
    double cand  = 1;
    for (std::size_t i = 1; i < keys.size(); ++i) {
      cand *= static_cast<double>(autos.size());
    }
    auto p0 = enumerate_homs(A.G, B.G);
    auto p1 = enumerate_homs(A.H, B.H);
    cand *= static_cast<double>(p0.size() * p1.size());
    if (cand > static_cast<double>(caps.max_candidates)) {
      throw cap_exceeded("functor candidates exceed the cap");
    }
    std::vector<MonFunctor> out;
    for (auto const& f0 : p0) {
      for (auto const& f1 : p1) {
        for_each_table(keys, autos, 1, [&](std::vector<std::size_t> const& idx) {
          MonFunctor F{f0, f1, Table(B.H), B.H.zero()};
          for (std::size_t i = 0; i < keys.size(); ++i) {
            F.F2.set(keys[i], autos[idx[i]]);
          }
          if (validate_mon_functor(F, A, B).ok()) {
            out.push_back(std::move(F));
            if (out.size() > caps.max_functors) {
              throw cap_exceeded("functor count exceeds the cap");
            }
          }
          return true;
        });
      }
    }
    return out;
  }

  std::vector<Table> enumerate_nats(MonFunctor const& F, MonFunctor const& G,
                                    PicardModel const&  A,
                                    PicardModel const&  B,
                                    HomModelCaps const& caps) {
    std::vector<Table> out;
    if (!(F.psi0 == G.psi0) || !(F.psi1 == G.psi1)) {
      return out;
    }
    auto objs  = A.objects();
    auto autos = B.autos();
    std::vector<Table::Key> keys;
    for (auto const& a : objs) {
      keys.push_back({a});
    }
    for_each_table(keys, autos, 1, [&](std::vector<std::size_t> const& idx) {
      MonNat s{Table(B.H)};
      for (std::size_t i = 0; i < keys.size(); ++i) {
        s.sigma.set(keys[i], autos[idx[i]]);
      }
      if (validate_mon_nat(s, F, G, A, B).ok()) {
        out.push_back(std::move(s.sigma));
        if (out.size() > caps.max_arrows) {
          throw cap_exceeded("transformation count exceeds the cap");
        }
      }
      return true;
    });
    return out;
  }

  HomModel hom_model(PicardModel const& A, PicardModel const& B,
                     HomModelCaps const& caps) {
    HomModel hm;
    hm.functors = enumerate_functors(A, B, caps);
    auto const& fs   = hm.functors;
    int const   n    = static_cast<int>(fs.size());
    auto        objs = A.objects();
    auto find_functor = [&](MonFunctor const& F) {
      for (int i = 0; i < n; ++i) {
        if (same_functor(F, fs[i], A)) {
          return i;
        }
      }
      throw std::logic_error("pointwise structure leaves the functor set");
    };
    auto values = [&](Table const& s) {
      std::vector<Elem> v;
      for (auto const& a : objs) {
        v.push_back(s(a));
      }
      return v;
    };
    std::map<std::tuple<int, int, std::vector<Elem>>, int> arrow_index;
    ExplicitPicard& e = hm.cat;
    for (int i = 0; i < n; ++i) {
      e.objects.push_back(functor_label(fs[i], A));
    }
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        for (auto& s : enumerate_nats(fs[i], fs[k], A, B, caps)) {
          int id = static_cast<int>(hm.nats.size());
          auto v = values(s);
          std::string lab = "F" + std::to_string(i) + "->F" + std::to_string(k)
                            + " [";
          for (std::size_t q = 0; q < v.size(); ++q) {
            lab += (q ? " " : "") + elem_str(v[q]);
          }
          arrow_index[{i, k, v}] = id;
          e.arrows.push_back({i, k, lab + "]"});
          hm.nats.push_back({i, k, std::move(s)});
          if (hm.nats.size() > caps.max_arrows) {
            throw cap_exceeded("arrow count exceeds the cap");
          }
        }
      }
    }
    int const m = static_cast<int>(hm.nats.size());
    auto      find_arrow = [&](int s, int t, std::vector<Elem> const& v) {
      auto it = arrow_index.find({s, t, v});
      if (it == arrow_index.end()) {
        return -1;
      }
      return it->second;
    };
    auto const& H = B.H;
    for (int i = 0; i < n; ++i) {
      e.identity.push_back(
          find_arrow(i, i, std::vector<Elem>(objs.size(), H.zero())));
    }
    e.comp.assign(static_cast<std::size_t>(m) * m, -1);
    for (int g = 0; g < m; ++g) {
      for (int f = 0; f < m; ++f) {
        if (hm.nats[f].dst != hm.nats[g].src) {
          continue;
        }
        std::vector<Elem> v;
        for (auto const& a : objs) {
          v.push_back(H.add(hm.nats[g].sigma(a), hm.nats[f].sigma(a)));
        }
        e.comp[static_cast<std::size_t>(g) * m + f]
            = find_arrow(hm.nats[f].src, hm.nats[g].dst, v);
      }
    }
    // pointwise tensor
    auto tensor_f = [&](MonFunctor const& F, MonFunctor const& G) {
      MonFunctor T;
      T.psi0 = F.psi0;
      T.psi1 = F.psi1;
      for (std::size_t q = 0; q < T.psi0.images.size(); ++q) {
        T.psi0.images[q] = B.G.add(F.psi0.images[q], G.psi0.images[q]);
      }
      for (std::size_t q = 0; q < T.psi1.images.size(); ++q) {
        T.psi1.images[q] = H.add(F.psi1.images[q], G.psi1.images[q]);
      }
      T.F2 = Table(H);
      for (auto const& a : objs) {
        for (auto const& b : objs) {
          Elem v = H.add(B.c(G.psi0(a), F.psi0(b)),
                         H.add(F.F2(a, b), G.F2(a, b)));
          T.F2.set({a, b}, v);
        }
      }
      T.F0 = H.zero();
      return T;
    };
    e.tensor_obj.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        e.tensor_obj[static_cast<std::size_t>(i) * n + k]
            = find_functor(tensor_f(fs[i], fs[k]));
      }
    }
    e.tensor_arr.resize(static_cast<std::size_t>(m) * m);
    for (int f = 0; f < m; ++f) {
      for (int g = 0; g < m; ++g) {
        std::vector<Elem> v;
        for (auto const& a : objs) {
          v.push_back(H.add(hm.nats[f].sigma(a), hm.nats[g].sigma(a)));
        }
        e.tensor_arr[static_cast<std::size_t>(f) * m + g] = find_arrow(
            e.tensor_o(hm.nats[f].src, hm.nats[g].src),
            e.tensor_o(hm.nats[f].dst, hm.nats[g].dst), v);
      }
    }
    MonFunctor zero = MonFunctor::zero(A, B);
    e.unit          = find_functor(zero);
    for (int i = 0; i < n; ++i) {
      MonFunctor D;
      D.psi0 = fs[i].psi0.then(GroupHom::negation(B.G));
      D.psi1 = fs[i].psi1.then(GroupHom::negation(H));
      D.F2   = Table(H);
      for (auto const& a : objs) {
        for (auto const& b : objs) {
          D.F2.set({a, b}, H.add(H.neg(fs[i].F2(a, b)),
                                 B.c(fs[i].psi0(a), fs[i].psi0(b))));
        }
      }
      D.F0 = H.zero();
      e.dual.push_back(find_functor(D));
    }
    std::vector<Elem> zeros(objs.size(), H.zero());
    for (int i = 0; i < n; ++i) {
      e.runit.push_back(e.identity[i]);
      e.lunit.push_back(e.identity[i]);
      int jt = e.tensor_o(e.dual[i], i);
      e.j.push_back(jt == e.unit ? e.identity[jt] : -1);
      for (int k = 0; k < n; ++k) {
        std::vector<Elem> v;
        for (auto const& a : objs) {
          v.push_back(B.c(fs[i].psi0(a), fs[k].psi0(a)));
        }
        e.sym.push_back(find_arrow(e.tensor_o(i, k), e.tensor_o(k, i), v));
      }
    }
    e.assoc.resize(static_cast<std::size_t>(n) * n * n);
    for (int x = 0; x < n; ++x) {
      for (int y = 0; y < n; ++y) {
        for (int z = 0; z < n; ++z) {
          int s = e.tensor_o(x, e.tensor_o(y, z));
          int t = e.tensor_o(e.tensor_o(x, y), z);
          e.assoc[(static_cast<std::size_t>(x) * n + y) * n + z]
              = s == t ? e.identity[s] : -1;
        }
      }
    }
    return hm;
  }

}  // namespace picring
