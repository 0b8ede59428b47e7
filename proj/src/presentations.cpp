#include "picring/presentations.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

namespace picring {

  namespace {
    using EK = Complex::EdgeKind;

    std::vector<SchemaInfo> unit_relations() {
      return {
          {"interchange",
           "(t W)(X s) ~ (Y s)(t Z) for edges t: X -> Y and s: Z -> W at "
           "disjoint positions"},
          {"nat-a", "naturality of a in each of its three arguments"},
          {"nat-r", "naturality of r"},
          {"nat-l", "naturality of l"},
          {"nat-s", "naturality of s in each argument"},
          {"pentagon", "a a ~ (a 1) a (1 a) on X(Y(ZT))"},
          {"triangle", "1 l ~ (r 1) a on X(IY)"},
          {"unit-symmetry", "l s ~ r on XI"},
          {"hexagon", "(s 1) a s a ~ a (1 s) on X(YZ)"},
          {"involution", "s s ~ 1 on XY"},
      };
    }

    std::vector<SchemaInfo> tensor_relations() {
      auto r = unit_relations();
      std::vector<SchemaInfo> more{
          {"act-compose-b", "a(g f) ~ (a g)(a f)"},
          {"act-compose-a", "(g f)b ~ (g b)(f b)"},
          {"act-unit-b", "a id ~ id"},
          {"act-unit-a", "id b ~ id"},
          {"act-commute", "(a' g)(f b) ~ (f b')(a g)"},
          {"gamma-nat-a", "naturality of gamma in a"},
          {"gamma-nat-a2", "naturality of gamma in a'"},
          {"gamma-nat-b", "naturality of gamma in b"},
          {"delta-nat-a", "naturality of delta in a"},
          {"delta-nat-b", "naturality of delta in b"},
          {"delta-nat-b2", "naturality of delta in b'"},
          {"delta-assoc", "delta against the associator"},
          {"delta-sym", "delta against the symmetry"},
          {"gamma-assoc", "gamma against the associator"},
          {"gamma-sym", "gamma against the symmetry"},
          {"gamma-delta", "delta then gamma against the middle-four "
                          "interchange, gamma then delta"},
      };
      r.insert(r.end(), more.begin(), more.end());
      return r;
    }

    std::vector<SchemaInfo> unit_edges() {
      return {
          {"a", "a_{X,Y,Z}: X(YZ) -> (XY)Z"},
          {"r", "r_X: XI -> X"},
          {"l", "l_X: IX -> X"},
          {"s", "s_{X,Y}: XY -> YX"},
          {"j", "j_X: I -> X* X for every vertex X"},
          {"whisker", "X p and p X for every vertex X and edge p"},
      };
    }

    int leaf_count(ObjTerm const& x) {
      switch (x.kind()) {
        case ObjTerm::Kind::Tensor:
          return leaf_count(x.left()) + leaf_count(x.right());
        case ObjTerm::Kind::Dual:
          return leaf_count(x.inner());
        default:
          return 1;
      }
    }

    bool is_prefix(std::string const& a, std::string const& b) {
      return a.size() <= b.size() && b.compare(0, a.size(), a) == 0;
    }

    std::string kind_name(EK k) {
      switch (k) {
        case EK::Assoc: return "a";
        case EK::RightUnit: return "r";
        case EK::LeftUnit: return "l";
        case EK::Sym: return "s";
        case EK::J: return "j";
        case EK::Gamma: return "gam";
        case EK::Delta: return "del";
        case EK::LeftAct: return "lact";
        case EK::RightAct: return "ract";
      }
      return "?";
    }

    // Where a subterm at a relative position inside the source of an edge
    // sits in its target.
    std::vector<std::pair<std::string, std::string>> variable_moves(EK k) {
      switch (k) {
        case EK::Assoc:
          return {{"0", "00"}, {"10", "01"}, {"11", "1"}};
        case EK::RightUnit:
          return {{"0", ""}};
        case EK::LeftUnit:
          return {{"1", ""}};
        case EK::Sym:
          return {{"0", "1"}, {"1", "0"}};
        default:
          return {};
      }
    }

    std::size_t index_of(std::vector<Elem> const& xs, Elem const& x) {
      auto it = std::find(xs.begin(), xs.end(), x);
      return it == xs.end() ? xs.size()
                            : static_cast<std::size_t>(it - xs.begin());
    }
  }  // namespace

  bool Presentation::has_relation(std::string const& id) const {
    return std::any_of(relation_schemas.begin(), relation_schemas.end(),
                       [&](SchemaInfo const& s) { return s.id == id; });
  }

  bool Presentation::has_edge(std::string const& id) const {
    return std::any_of(edge_schemas.begin(), edge_schemas.end(),
                       [&](SchemaInfo const& s) { return s.id == id; });
  }

  Presentation build_unit_presentation() {
    Presentation p;
    p.kind             = Presentation::Kind::Unit;
    p.generators       = {"*"};
    p.edge_schemas     = unit_edges();
    p.relation_schemas = unit_relations();
    return p;
  }

  Presentation build_tensor_presentation(PicardModel const& A,
                                         PicardModel const& B) {
    Presentation p;
    p.kind         = Presentation::Kind::Tensor;
    p.A            = A;
    p.B            = B;
    p.edge_schemas = unit_edges();
    p.edge_schemas.push_back(
        {"gam", "gamma_{a,a',b}: (a.b)(a'.b) -> (a+a').b"});
    p.edge_schemas.push_back(
        {"del", "delta_{a,b,b'}: (a.b)(a.b') -> a.(b+b')"});
    p.edge_schemas.push_back({"lact", "a.g: a.b -> a.b for g in Aut(b)"});
    p.edge_schemas.push_back({"ract", "f.b: a.b -> a.b for f in Aut(a)"});
    p.relation_schemas = tensor_relations();
    return p;
  }

  Budget default_budget(Presentation const& p) {
    Budget b;
    if (p.kind == Presentation::Kind::Tensor) {
      b.depth      = 3;
      b.max_leaves = 4;
    }
    return b;
  }

  // ---------------------------------------------------------------------

  std::size_t Complex::EdgeKeyHash::operator()(EdgeKey const& k) const noexcept {
    std::size_t h = std::hash<std::string>()(k.pos);
    h ^= static_cast<std::size_t>(k.src) * 0x9e3779b97f4a7c15ULL;
    h ^= (static_cast<std::size_t>(k.kind) + 1) * 0xc2b2ae3d27d4eb4fULL
         + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(k.param + 7) * 0x165667b19e3779f9ULL
         + (h << 6) + (h >> 2);
    return h;
  }

  Complex::Complex(Presentation const& p, Budget const& b)
      : pres_(p), budget_(b) {
    if (pres_.kind == Presentation::Kind::Tensor) {
      if (!pres_.A || !pres_.B) {
        throw std::invalid_argument("tensor presentation without models");
      }
      elems_a_ = pres_.A->objects();
      elems_b_ = pres_.B->objects();
      autos_a_ = pres_.A->autos();
      autos_b_ = pres_.B->autos();
    }
    build_vertices();
    build_edges();
    build_relators();
  }

  void Complex::build_vertices() {
    std::vector<ObjTerm> leaves{ObjTerm::unit()};
    if (pres_.kind == Presentation::Kind::Unit) {
      for (auto const& g : pres_.generators) {
        leaves.push_back(ObjTerm::gen(g));
      }
    } else {
      for (auto const& a : elems_a_) {
        for (auto const& b : elems_b_) {
          leaves.push_back(ObjTerm::pair(a, b));
        }
      }
    }
    int const            maxl = budget_.max_leaves;
    std::vector<ObjTerm> cur  = budget_.depth >= 0 ? leaves
                                                   : std::vector<ObjTerm>{};
    for (int d = 1; d <= budget_.depth; ++d) {
      std::vector<int> lc;
      lc.reserve(cur.size());
      for (auto const& x : cur) {
        lc.push_back(leaf_count(x));
      }
      std::vector<ObjTerm> next = leaves;
      for (auto const& x : cur) {
        next.push_back(ObjTerm::dual(x));
      }
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (std::size_t k = 0; k < cur.size(); ++k) {
          if (maxl > 0 && lc[i] + lc[k] > maxl) {
            continue;
          }
          next.push_back(ObjTerm::tensor(cur[i], cur[k]));
          if (next.size() > budget_.vertex_cap) {
            throw budget_exceeded("vertex cap "
                                  + std::to_string(budget_.vertex_cap)
                                  + " exceeded at depth "
                                  + std::to_string(d));
          }
        }
      }
      cur = std::move(next);
    }
    vertices_ = std::move(cur);
    vindex_.reserve(vertices_.size() * 2);
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      vindex_.emplace(vertices_[i], static_cast<int>(i));
    }
  }

  std::optional<int> Complex::find_vertex(ObjTerm const& x) const {
    auto it = vindex_.find(x);
    if (it == vindex_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  std::optional<ObjTerm> Complex::edge_target(ObjTerm const& s, EK k,
                                              int param) const {
    switch (k) {
      case EK::Assoc:
        if (s.is_tensor() && s.right().is_tensor()) {
          return ObjTerm::tensor(ObjTerm::tensor(s.left(), s.right().left()),
                                 s.right().right());
        }
        return std::nullopt;
      case EK::RightUnit:
        if (s.is_tensor() && s.right().is_unit()) {
          return s.left();
        }
        return std::nullopt;
      case EK::LeftUnit:
        if (s.is_tensor() && s.left().is_unit()) {
          return s.right();
        }
        return std::nullopt;
      case EK::Sym:
        if (s.is_tensor()) {
          return ObjTerm::tensor(s.right(), s.left());
        }
        return std::nullopt;
      case EK::J:
        if (s.is_unit() && param >= 0
            && param < static_cast<int>(vertices_.size())) {
          auto const& x = vertices_[param];
          return ObjTerm::tensor(ObjTerm::dual(x), x);
        }
        return std::nullopt;
      case EK::Gamma:
        if (s.is_tensor() && s.left().kind() == ObjTerm::Kind::Pair
            && s.right().kind() == ObjTerm::Kind::Pair
            && s.left().pair_b() == s.right().pair_b()) {
          return ObjTerm::pair(
              pres_.A->G.add(s.left().pair_a(), s.right().pair_a()),
              s.left().pair_b());
        }
        return std::nullopt;
      case EK::Delta:
        if (s.is_tensor() && s.left().kind() == ObjTerm::Kind::Pair
            && s.right().kind() == ObjTerm::Kind::Pair
            && s.left().pair_a() == s.right().pair_a()) {
          return ObjTerm::pair(
              s.left().pair_a(),
              pres_.B->G.add(s.left().pair_b(), s.right().pair_b()));
        }
        return std::nullopt;
      case EK::LeftAct:
        if (s.kind() == ObjTerm::Kind::Pair && param >= 0
            && param < static_cast<int>(autos_b_.size())) {
          return s;
        }
        return std::nullopt;
      case EK::RightAct:
        if (s.kind() == ObjTerm::Kind::Pair && param >= 0
            && param < static_cast<int>(autos_a_.size())) {
          return s;
        }
        return std::nullopt;
    }
    return std::nullopt;
  }

  void Complex::add_edge_family(int v, std::string const& pos) {
    ObjTerm const& V = vertices_[v];
    ObjTerm        s = subterm(V, pos);
    auto           add = [&](EK k, int param) {
      auto t = edge_target(s, k, param);
      if (!t) {
        return;
      }
      auto dst = find_vertex(replace_at(V, pos, *t));
      if (!dst) {
        return;
      }
      int id = static_cast<int>(edges_.size());
      edges_.push_back({v, *dst, pos, k, param});
      eindex_.emplace(EdgeKey{v, pos, k, param}, id);
    };
    if (s.is_tensor()) {
      add(EK::Assoc, -1);
      add(EK::RightUnit, -1);
      add(EK::LeftUnit, -1);
      add(EK::Sym, -1);
      if (pres_.kind == Presentation::Kind::Tensor) {
        add(EK::Gamma, -1);
        add(EK::Delta, -1);
      }
    } else if (s.is_unit()) {
      int room = budget_.depth - static_cast<int>(pos.size()) - 2;
      for (std::size_t x = 0; x < vertices_.size(); ++x) {
        if (vertices_[x].depth() <= room) {
          add(EK::J, static_cast<int>(x));
        }
      }
    } else if (s.kind() == ObjTerm::Kind::Pair) {
      for (std::size_t h = 0; h < autos_b_.size(); ++h) {
        add(EK::LeftAct, static_cast<int>(h));
      }
      for (std::size_t h = 0; h < autos_a_.size(); ++h) {
        add(EK::RightAct, static_cast<int>(h));
      }
    }
  }

  void Complex::build_edges() {
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
      for (auto const& p : tensor_positions(vertices_[v])) {
        add_edge_family(static_cast<int>(v), p);
      }
    }
    out_.assign(vertices_.size(), {});
    in_.assign(vertices_.size(), {});
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      out_[edges_[e].src].push_back(static_cast<int>(e));
      in_[edges_[e].dst].push_back(static_cast<int>(e));
    }
  }

  std::optional<int> Complex::find_edge(int src, std::string const& pos,
                                        EK k, int param) const {
    auto it = eindex_.find(EdgeKey{src, pos, k, param});
    if (it == eindex_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  int Complex::edge_at(int v, std::string const& pos, EK k, int param) const {
    if (v < 0) {
      return -1;
    }
    auto e = find_edge(v, pos, k, param);
    return e ? *e : -1;
  }

  ArrowTerm Complex::base_arrow(int e) const {
    Edge const& ed = edges_[e];
    ObjTerm     s  = subterm(vertices_[ed.src], ed.pos);
    switch (ed.kind) {
      case EK::Assoc:
        return ArrowTerm::assoc(s.left(), s.right().left(), s.right().right());
      case EK::RightUnit:
        return ArrowTerm::right_unit(s.left());
      case EK::LeftUnit:
        return ArrowTerm::left_unit(s.right());
      case EK::Sym:
        return ArrowTerm::sym(s.left(), s.right());
      case EK::J:
        return ArrowTerm::j(vertices_[ed.param]);
      case EK::Gamma:
        return ArrowTerm::gamma(
            s.left().pair_a(), s.right().pair_a(), s.left().pair_b(),
            pres_.A->G.add(s.left().pair_a(), s.right().pair_a()));
      case EK::Delta:
        return ArrowTerm::delta(
            s.left().pair_a(), s.left().pair_b(), s.right().pair_b(),
            pres_.B->G.add(s.left().pair_b(), s.right().pair_b()));
      case EK::LeftAct:
        return ArrowTerm::left_act(s.pair_a(), s.pair_b(), autos_b_[ed.param]);
      case EK::RightAct:
        return ArrowTerm::right_act(s.pair_a(), autos_a_[ed.param], s.pair_b());
    }
    throw std::logic_error("unknown edge kind");
  }

  ArrowTerm Complex::arrow(int e) const {
    return whisker_into(vertices_[edges_[e].src], edges_[e].pos, base_arrow(e));
  }

  Word Complex::word(Relator const& r) const {
    Word w = r.lhs;
    for (auto it = r.rhs.rbegin(); it != r.rhs.rend(); ++it) {
      w.push_back(-*it);
    }
    return w;
  }

  ArrowTerm path_arrow(Complex const& c, int start, Word const& w) {
    if (w.empty()) {
      return ArrowTerm::id(c.vertex(start));
    }
    std::optional<ArrowTerm> acc;
    for (Letter x : w) {
      int       e     = std::abs(x) - 1;
      ArrowTerm piece = x > 0 ? c.arrow(e) : ArrowTerm::inv(c.arrow(e));
      acc = acc ? ArrowTerm::compose(piece, *acc) : piece;
    }
    return *acc;
  }

  RelationInstance Complex::instance(Relator const& r) const {
    RelationInstance in{schema_names_[r.schema],
                        {{"at", print(vertices_[r.vertex])},
                         {"pos", r.pos.empty() ? "root" : r.pos}},
                        path_arrow(*this, r.vertex, r.lhs),
                        path_arrow(*this, r.vertex, r.rhs)};
    return in;
  }

  void Complex::relate(std::string const& schema, int v,
                       std::string const& pos, Word lhs, Word rhs) {
    auto [it, fresh] = schema_ids_.emplace(
        schema, static_cast<std::uint16_t>(schema_names_.size()));
    if (fresh) {
      schema_names_.push_back(schema);
    }
    relators_.push_back({it->second, v, pos, std::move(lhs), std::move(rhs)});
  }

  void Complex::build_relators() {
    // A walk along edges; it dies when an edge leaves the universe.
    struct Walk {
      int  cur;
      Word w;
      bool ok = true;
    };
    auto fwd = [&](Walk& w, std::string const& pos, EK k, int param = -1) {
      if (!w.ok) {
        return;
      }
      int e = edge_at(w.cur, pos, k, param);
      if (e < 0) {
        w.ok = false;
        return;
      }
      w.w.push_back(e + 1);
      w.cur = edges_[e].dst;
    };
    // backwards along an associator whose target subterm sits at pos
    auto back_assoc = [&](Walk& w, std::string const& pos) {
      if (!w.ok) {
        return;
      }
      ObjTerm const& V = vertices_[w.cur];
      ObjTerm        s = subterm(V, pos);
      if (!s.is_tensor() || !s.left().is_tensor()) {
        w.ok = false;
        return;
      }
      ObjTerm pre = ObjTerm::tensor(
          s.left().left(), ObjTerm::tensor(s.left().right(), s.right()));
      auto from = find_vertex(replace_at(V, pos, pre));
      int  e    = from ? edge_at(*from, pos, EK::Assoc, -1) : -1;
      if (e < 0) {
        w.ok = false;
        return;
      }
      w.w.push_back(-(e + 1));
      w.cur = *from;
    };
    auto emit = [&](std::string const& schema, int v, std::string const& pos,
                    Walk const& l, Walk const& r) {
      if (!l.ok || !r.ok) {
        return;
      }
      if (l.cur != r.cur) {
        throw std::logic_error("relation " + schema + " is not parallel at "
                               + print(vertices_[v]));
      }
      relate(schema, v, pos, l.w, r.w);
    };
    bool const tensor = pres_.kind == Presentation::Kind::Tensor;
    auto const zero_a = tensor ? static_cast<int>(index_of(
                                     autos_a_, pres_.A->H.zero()))
                               : -1;
    auto const zero_b = tensor ? static_cast<int>(index_of(
                                     autos_b_, pres_.B->H.zero()))
                               : -1;
    auto aut_index = [](std::vector<Elem> const& xs, Elem const& x) {
      return static_cast<int>(index_of(xs, x));
    };

    for (std::size_t vi = 0; vi < vertices_.size(); ++vi) {
      int const v = static_cast<int>(vi);
      // pairs of edges leaving v
      auto const& outs = out_[v];
      for (int e1 : outs) {
        Edge const& E1 = edges_[e1];
        for (int e2 : outs) {
          if (e1 == e2) {
            continue;
          }
          Edge const& E2 = edges_[e2];
          bool pre12 = is_prefix(E1.pos, E2.pos);
          bool pre21 = is_prefix(E2.pos, E1.pos);
          if (!pre12 && !pre21) {
            if (e1 < e2) {
              Walk l{v, {}}, r{v, {}};
              fwd(l, E1.pos, E1.kind, E1.param);
              fwd(l, E2.pos, E2.kind, E2.param);
              fwd(r, E2.pos, E2.kind, E2.param);
              fwd(r, E1.pos, E1.kind, E1.param);
              emit("interchange", v, "", l, r);
            }
          } else if (pre12 && E1.pos.size() < E2.pos.size()) {
            std::string q = E2.pos.substr(E1.pos.size());
            for (auto const& [from, to] : variable_moves(E1.kind)) {
              if (!is_prefix(from, q)) {
                continue;
              }
              std::string np = E1.pos + to + q.substr(from.size());
              Walk        l{v, {}}, r{v, {}};
              fwd(l, E1.pos, E1.kind, E1.param);
              fwd(l, np, E2.kind, E2.param);
              fwd(r, E2.pos, E2.kind, E2.param);
              fwd(r, E1.pos, E1.kind, E1.param);
              emit("nat-" + kind_name(E1.kind), v, E1.pos, l, r);
            }
          }
        }
      }
      // schemas anchored at a position
      for (auto const& p : tensor_positions(vertices_[v])) {
        ObjTerm s = subterm(vertices_[v], p);
        if (s.is_tensor()) {
          ObjTerm const& Y = s.right();
          {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p, EK::Sym);
            fwd(l, p, EK::Sym);
            emit("involution", v, p, l, r);
          }
          if (Y.is_unit()) {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p, EK::Sym);
            fwd(l, p, EK::LeftUnit);
            fwd(r, p, EK::RightUnit);
            emit("unit-symmetry", v, p, l, r);
          }
          if (Y.is_tensor()) {
            if (Y.left().is_unit()) {
              Walk l{v, {}}, r{v, {}};
              fwd(l, p + "1", EK::LeftUnit);
              fwd(r, p, EK::Assoc);
              fwd(r, p + "0", EK::RightUnit);
              emit("triangle", v, p, l, r);
            }
            {
              Walk l{v, {}}, r{v, {}};
              fwd(l, p, EK::Assoc);
              fwd(l, p, EK::Sym);
              fwd(l, p, EK::Assoc);
              fwd(l, p + "0", EK::Sym);
              fwd(r, p + "1", EK::Sym);
              fwd(r, p, EK::Assoc);
              emit("hexagon", v, p, l, r);
            }
            if (Y.right().is_tensor()) {
              Walk l{v, {}}, r{v, {}};
              fwd(l, p, EK::Assoc);
              fwd(l, p, EK::Assoc);
              fwd(r, p + "1", EK::Assoc);
              fwd(r, p, EK::Assoc);
              fwd(r, p + "0", EK::Assoc);
              emit("pentagon", v, p, l, r);
            }
          }
        }
        if (!tensor) {
          continue;
        }
        auto const& HA = pres_.A->H;
        auto const& HB = pres_.B->H;
        if (s.kind() == ObjTerm::Kind::Pair) {
          int nb = static_cast<int>(autos_b_.size());
          int na = static_cast<int>(autos_a_.size());
          for (int h = 0; h < nb; ++h) {
            for (int k = 0; k < nb; ++k) {
              Walk l{v, {}}, r{v, {}};
              fwd(l, p, EK::LeftAct, h);
              fwd(l, p, EK::LeftAct, k);
              fwd(r, p, EK::LeftAct,
                  aut_index(autos_b_, HB.add(autos_b_[h], autos_b_[k])));
              emit("act-compose-b", v, p, l, r);
            }
          }
          for (int h = 0; h < na; ++h) {
            for (int k = 0; k < na; ++k) {
              Walk l{v, {}}, r{v, {}};
              fwd(l, p, EK::RightAct, h);
              fwd(l, p, EK::RightAct, k);
              fwd(r, p, EK::RightAct,
                  aut_index(autos_a_, HA.add(autos_a_[h], autos_a_[k])));
              emit("act-compose-a", v, p, l, r);
            }
          }
          {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p, EK::LeftAct, zero_b);
            emit("act-unit-b", v, p, l, r);
          }
          {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p, EK::RightAct, zero_a);
            emit("act-unit-a", v, p, l, r);
          }
          for (int h = 0; h < na; ++h) {
            for (int k = 0; k < nb; ++k) {
              Walk l{v, {}}, r{v, {}};
              fwd(l, p, EK::RightAct, h);
              fwd(l, p, EK::LeftAct, k);
              fwd(r, p, EK::LeftAct, k);
              fwd(r, p, EK::RightAct, h);
              emit("act-commute", v, p, l, r);
            }
          }
          continue;
        }
        if (!s.is_tensor()) {
          continue;
        }
        ObjTerm const& X     = s.left();
        ObjTerm const& Y     = s.right();
        bool const     pairs = X.kind() == ObjTerm::Kind::Pair
                           && Y.kind() == ObjTerm::Kind::Pair;
        std::string const p0 = p + "0", p1 = p + "1";
        if (pairs && X.pair_b() == Y.pair_b()) {
          for (int h = 0; h < static_cast<int>(autos_a_.size()); ++h) {
            for (auto const& [at, name] :
                 {std::pair{p0, "gamma-nat-a"}, std::pair{p1, "gamma-nat-a2"}}) {
              Walk l{v, {}}, r{v, {}};
              fwd(l, at, EK::RightAct, h);
              fwd(l, p, EK::Gamma);
              fwd(r, p, EK::Gamma);
              fwd(r, p, EK::RightAct, h);
              emit(name, v, p, l, r);
            }
          }
          for (int k = 0; k < static_cast<int>(autos_b_.size()); ++k) {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p0, EK::LeftAct, k);
            fwd(l, p1, EK::LeftAct, k);
            fwd(l, p, EK::Gamma);
            fwd(r, p, EK::Gamma);
            fwd(r, p, EK::LeftAct, k);
            emit("gamma-nat-b", v, p, l, r);
          }
          {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p, EK::Gamma);
            fwd(l, p, EK::RightAct,
                aut_index(autos_a_, pres_.A->c(X.pair_a(), Y.pair_a())));
            fwd(r, p, EK::Sym);
            fwd(r, p, EK::Gamma);
            emit("gamma-sym", v, p, l, r);
          }
        }
        if (pairs && X.pair_a() == Y.pair_a()) {
          for (int k = 0; k < static_cast<int>(autos_b_.size()); ++k) {
            for (auto const& [at, name] :
                 {std::pair{p0, "delta-nat-b"}, std::pair{p1, "delta-nat-b2"}}) {
              Walk l{v, {}}, r{v, {}};
              fwd(l, at, EK::LeftAct, k);
              fwd(l, p, EK::Delta);
              fwd(r, p, EK::Delta);
              fwd(r, p, EK::LeftAct, k);
              emit(name, v, p, l, r);
            }
          }
          for (int h = 0; h < static_cast<int>(autos_a_.size()); ++h) {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p0, EK::RightAct, h);
            fwd(l, p1, EK::RightAct, h);
            fwd(l, p, EK::Delta);
            fwd(r, p, EK::Delta);
            fwd(r, p, EK::RightAct, h);
            emit("delta-nat-a", v, p, l, r);
          }
          {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p, EK::Delta);
            fwd(l, p, EK::LeftAct,
                aut_index(autos_b_, pres_.B->c(X.pair_b(), Y.pair_b())));
            fwd(r, p, EK::Sym);
            fwd(r, p, EK::Delta);
            emit("delta-sym", v, p, l, r);
          }
        }
        // three pairs X(YZ)
        if (X.kind() == ObjTerm::Kind::Pair && Y.is_tensor()
            && Y.left().kind() == ObjTerm::Kind::Pair
            && Y.right().kind() == ObjTerm::Kind::Pair) {
          ObjTerm const& Y1 = Y.left();
          ObjTerm const& Z  = Y.right();
          if (X.pair_a() == Y1.pair_a() && X.pair_a() == Z.pair_a()) {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p, EK::Assoc);
            fwd(l, p0, EK::Delta);
            fwd(l, p, EK::Delta);
            fwd(r, p1, EK::Delta);
            fwd(r, p, EK::Delta);
            fwd(r, p, EK::LeftAct, zero_b);
            emit("delta-assoc", v, p, l, r);
          }
          if (X.pair_b() == Y1.pair_b() && X.pair_b() == Z.pair_b()) {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p, EK::Assoc);
            fwd(l, p0, EK::Gamma);
            fwd(l, p, EK::Gamma);
            fwd(r, p1, EK::Gamma);
            fwd(r, p, EK::Gamma);
            fwd(r, p, EK::RightAct, zero_a);
            emit("gamma-assoc", v, p, l, r);
          }
        }
        // ((a.b)(a.b'))((a'.b)(a'.b'))
        if (X.is_tensor() && Y.is_tensor()) {
          ObjTerm const& P  = X.left();
          ObjTerm const& Q  = X.right();
          ObjTerm const& R  = Y.left();
          ObjTerm const& S  = Y.right();
          auto           pr = [](ObjTerm const& t) {
            return t.kind() == ObjTerm::Kind::Pair;
          };
          if (pr(P) && pr(Q) && pr(R) && pr(S) && P.pair_a() == Q.pair_a()
              && R.pair_a() == S.pair_a() && P.pair_b() == R.pair_b()
              && Q.pair_b() == S.pair_b()) {
            Walk l{v, {}}, r{v, {}};
            fwd(l, p0, EK::Delta);
            fwd(l, p1, EK::Delta);
            fwd(l, p, EK::Gamma);
            fwd(r, p, EK::Assoc);
            back_assoc(r, p0);
            fwd(r, p + "01", EK::Sym);
            fwd(r, p0, EK::Assoc);
            back_assoc(r, p);
            fwd(r, p0, EK::Gamma);
            fwd(r, p1, EK::Gamma);
            fwd(r, p, EK::Delta);
            emit("gamma-delta", v, p, l, r);
          }
        }
      }
    }
  }

  void instantiate_relations(
      Presentation const& p, Budget const& b,
      std::function<void(RelationInstance const&)> const& sink) {
    if (b.depth < 0 || b.max_edges == 0) {
      return;
    }
    Complex c(p, b);
    for (auto const& r : c.relators()) {
      sink(c.instance(r));
    }
  }

  std::vector<RelationInstance> instantiate_relations(Presentation const& p,
                                                      Budget const&       b) {
    std::vector<RelationInstance> out;
    instantiate_relations(p, b, [&](RelationInstance const& r) {
      out.push_back(r);
    });
    return out;
  }

  // ---------------------------------------------------------------------

  Session::Session(Presentation const& p, Budget const& b)
      : cx_(std::make_shared<Complex>(p, b)) {
    init(nullptr);
  }

  Session::Session(Presentation const& p, Budget const& b,
                   std::vector<int> const& only)
      : cx_(std::make_shared<Complex>(p, b)) {
    init(&only);
  }

  Session::Session(std::shared_ptr<Complex> cx, std::vector<int> const& only)
      : cx_(std::move(cx)), local_(true) {
    init(&only);
  }

  void Session::init(std::vector<int> const* only) {
    Complex const& c  = *cx_;
    auto const&    E  = c.edges();
    int const      nv = static_cast<int>(c.vertex_count());
    active_.assign(c.relators().size(), only ? 0 : 1);
    if (only) {
      for (int r : *only) {
        if (r >= 0 && r < static_cast<int>(active_.size())) {
          active_[r] = 1;
        }
      }
    }
    // spanning forest, breadth first, edges in id order
    std::vector<std::vector<std::pair<int, int>>> adj(nv);
    for (std::size_t e = 0; e < E.size(); ++e) {
      adj[E[e].src].push_back({static_cast<int>(e), E[e].dst});
      adj[E[e].dst].push_back({static_cast<int>(e), E[e].src});
    }
    comp_.assign(nv, -1);
    tree_.assign(E.size(), 0);
    for (int v = 0; v < nv; ++v) {
      if (comp_[v] >= 0) {
        continue;
      }
      int cid = static_cast<int>(comp_roots_.size());
      comp_roots_.push_back(v);
      comp_[v] = cid;
      std::deque<int> q{v};
      while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (auto [e, w] : adj[u]) {
          if (comp_[w] < 0) {
            comp_[w] = cid;
            tree_[e] = 1;
            q.push_back(w);
          }
        }
      }
    }
    for (std::size_t e = 0; e < E.size(); ++e) {
      if (tree_[e]) {
        subst_[static_cast<int>(e) + 1] = {};
      }
    }
    // eliminate generators occurring once in a relator
    struct Pending {
      Word w;
      int  origin;
    };
    std::vector<Pending> left;
    auto const&          R = c.relators();
    for (std::size_t i = 0; i < R.size(); ++i) {
      if (active_[i]) {
        left.push_back({c.word(R[i]), static_cast<int>(i)});
      }
    }
    while (true) {
      bool                 changed = false;
      std::vector<Pending> next;
      for (auto& pd : left) {
        Word w = cyclic_reduce(expand(pd.w));
        if (w.empty()) {
          continue;
        }
        std::unordered_map<int, int> count;
        for (Letter x : w) {
          ++count[std::abs(x)];
        }
        std::size_t j = w.size();
        for (std::size_t k = 0; k < w.size(); ++k) {
          if (count[std::abs(w[k])] == 1) {
            j = k;
            break;
          }
        }
        if (j == w.size()) {
          next.push_back({std::move(w), pd.origin});
          continue;
        }
        int  g = std::abs(w[j]);
        Word rest(w.begin() + j + 1, w.end());
        rest.insert(rest.end(), w.begin(), w.begin() + j);
        subst_[g]      = w[j] > 0 ? inverse(rest) : rest;
        subst_from_[g] = pd.origin;
        changed        = true;
      }
      left = std::move(next);
      if (!changed) {
        break;
      }
    }
    residual_.assign(comp_roots_.size(), {});
    std::set<std::pair<int, Word>> seen;
    for (auto& pd : left) {
      Word w = cyclic_reduce(expand(pd.w));
      if (w.empty()) {
        continue;
      }
      int cid = comp_[E[std::abs(w[0]) - 1].src];
      if (!seen.insert({cid, w}).second) {
        continue;
      }
      residual_[cid].push_back(static_cast<int>(residual_words_.size()));
      residual_words_.push_back(std::move(w));
      residual_origin_.push_back(pd.origin);
    }
  }

  Word Session::expand_letter(Letter x) {
    int  g  = std::abs(x);
    auto it = subst_.find(g);
    if (it == subst_.end()) {
      return {x};
    }
    bool deeper = false;
    for (Letter y : it->second) {
      if (subst_.count(std::abs(y))) {
        deeper = true;
        break;
      }
    }
    if (deeper) {
      Word s = expand(it->second);
      it     = subst_.find(g);
      it->second = std::move(s);
    }
    return x > 0 ? it->second : inverse(it->second);
  }

  Word Session::expand(Word const& w) {
    Word out;
    for (Letter x : w) {
      Word piece = expand_letter(x);
      out.insert(out.end(), piece.begin(), piece.end());
    }
    return free_reduce(out);
  }

  void Session::collect_deps(Letter x, std::vector<char>& seen,
                             std::vector<int>& out) const {
    std::vector<int> stack{std::abs(x)};
    auto const&      R = cx_->relators();
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      if (seen[g]) {
        continue;
      }
      seen[g] = 1;
      auto it = subst_from_.find(g);
      if (it == subst_from_.end()) {
        continue;
      }
      out.push_back(it->second);
      for (Letter y : cx_->word(R[it->second])) {
        if (!seen[std::abs(y)]) {
          stack.push_back(std::abs(y));
        }
      }
    }
  }

  Rewriter& Session::rewriter(int component) {
    auto it = kb_.find(component);
    if (it != kb_.end()) {
      return *it->second;
    }
    Budget const& b = cx_->budget();
    auto rw = std::make_unique<Rewriter>(
        Rewriter::Limits{b.kb_rules, 30, b.max_steps});
    for (int k : residual_[component]) {
      if (residual_words_[k].size() <= b.kb_relator) {
        rw->add_relator(residual_words_[k], k);
      } else {
        partial_.insert(component);
      }
    }
    rw->complete();
    return *kb_.emplace(component, std::move(rw)).first->second;
  }

  bool Session::kb_complete(int component) {
    return rewriter(component).is_complete();
  }

  Word Session::normal_form(Word const& path, std::vector<int>* deps) {
    Word w = expand(path);
    if (path.empty()) {
      return w;
    }
    int              cid = comp_[cx_->edges()[std::abs(path[0]) - 1].src];
    std::vector<int> used;
    Word             nf = rewriter(cid).reduce(w, deps ? &used : nullptr);
    if (deps) {
      std::vector<char> seen(cx_->edges().size() + 1, 0);
      std::vector<int>  out;
      for (Letter x : path) {
        collect_deps(x, seen, out);
      }
      auto const& R = cx_->relators();
      for (int k : used) {
        int origin = residual_origin_[k];
        out.push_back(origin);
        for (Letter y : cx_->word(R[origin])) {
          collect_deps(y, seen, out);
        }
      }
      deps->insert(deps->end(), out.begin(), out.end());
    }
    return nf;
  }

  namespace {
    struct Item {
      std::string pos;
      ArrowTerm   base;
      bool        inverse;
    };

    void flatten(ArrowTerm const& f, bool inv, std::string const& pos,
                 std::vector<Item>& out) {
      using K = ArrowTerm::Kind;
      switch (f.kind()) {
        case K::Compose:
          if (!inv) {
            flatten(f.args()[1], false, pos, out);
            flatten(f.args()[0], false, pos, out);
          } else {
            flatten(f.args()[0], true, pos, out);
            flatten(f.args()[1], true, pos, out);
          }
          return;
        case K::Inv:
          flatten(f.args()[0], !inv, pos, out);
          return;
        case K::Id:
          return;
        case K::WhiskL:
          flatten(f.args()[0], inv, pos + "1", out);
          return;
        case K::WhiskR:
          flatten(f.args()[0], inv, pos + "0", out);
          return;
        default:
          out.push_back({pos, f, inv});
      }
    }
  }  // namespace

  std::optional<Word> Session::path_word(ArrowTerm const& f,
                                         std::string*     why) const {
    Complex const&    c = *cx_;
    std::vector<Item> items;
    flatten(f, false, "", items);
    auto fail = [&](std::string msg) -> std::optional<Word> {
      if (why) {
        *why = std::move(msg);
      }
      return std::nullopt;
    };
    auto cur = c.find_vertex(f.src());
    if (!cur) {
      return fail("object " + print(f.src()) + " is outside the universe");
    }
    Word w;
    for (auto const& it : items) {
      using K = ArrowTerm::Kind;
      EK  k;
      int param = -1;
      switch (it.base.kind()) {
        case K::Assoc: k = EK::Assoc; break;
        case K::RightUnit: k = EK::RightUnit; break;
        case K::LeftUnit: k = EK::LeftUnit; break;
        case K::Sym: k = EK::Sym; break;
        case K::Gamma: k = EK::Gamma; break;
        case K::Delta: k = EK::Delta; break;
        case K::J: {
          k      = EK::J;
          auto x = c.find_vertex(it.base.objs()[0]);
          if (!x) {
            return fail("j at " + print(it.base.objs()[0])
                        + " is outside the universe");
          }
          param = *x;
          break;
        }
        case K::LeftAct:
          k     = EK::LeftAct;
          param = static_cast<int>(index_of(c.autos_b(), it.base.labels()[2]));
          break;
        case K::RightAct:
          k     = EK::RightAct;
          param = static_cast<int>(index_of(c.autos_a(), it.base.labels()[1]));
          break;
        default:
          return fail("unexpected constructor in " + print(it.base));
      }
      ObjTerm const& V = c.vertex(*cur);
      ObjTerm        here;
      try {
        here = subterm(V, it.pos);
      } catch (term_error const&) {
        return fail("whiskering position outside " + print(V));
      }
      ObjTerm const& expect = it.inverse ? it.base.dst() : it.base.src();
      if (!(here == expect)) {
        return fail("edge " + print(it.base) + " does not fit " + print(V));
      }
      int from = *cur;
      if (it.inverse) {
        auto w0 = c.find_vertex(replace_at(V, it.pos, it.base.src()));
        if (!w0) {
          return fail("path leaves the universe at " + print(it.base));
        }
        from = *w0;
      }
      auto e = c.find_edge(from, it.pos, k, param);
      if (!e) {
        return fail("edge " + print(it.base) + " leaves the universe");
      }
      w.push_back(it.inverse ? -(*e + 1) : *e + 1);
      cur = it.inverse ? from : c.edges()[*e].dst;
    }
    return w;
  }

  Verdict Session::decide(ArrowTerm const& f, ArrowTerm const& g) {
    if (!(f.src() == g.src()) || !(f.dst() == g.dst())) {
      throw term_error("arrows " + print(f) + " and " + print(g)
                       + " are not parallel");
    }
    Verdict v;
    if (f == g) {
      v.kind = Verdict::Kind::Equal;
      return v;
    }
    std::string why;
    auto        wf = path_word(f, &why);
    if (!wf) {
      v.reason = why;
      return v;
    }
    auto wg = path_word(g, &why);
    if (!wg) {
      v.reason = why;
      return v;
    }
    std::vector<int> deps;
    Word             nf = normal_form(*wf, &deps);
    Word             ng = normal_form(*wg, &deps);
    if (nf != ng) {
      int cid = comp_[*cx_->find_vertex(f.src())];
      if (!local_) {
        if (auto lv = decide_locally(*wf, *wg, f, g)) {
          return *lv;
        }
      }
      if (!rewriter(cid).is_complete()) {
        v.reason = "normal forms differ and completion stopped at its budget";
      } else if (partial_.count(cid)) {
        v.reason = "normal forms differ; completion left out relators longer "
                   "than the budget allows";
      } else {
        v.reason = "normal forms differ";
      }
      return v;
    }
    std::sort(deps.begin(), deps.end());
    deps.erase(std::unique(deps.begin(), deps.end()), deps.end());
    v.kind        = Verdict::Kind::Equal;
    v.relator_ids = deps;
    for (int r : deps) {
      v.witness.push_back(cx_->instance(cx_->relators()[r]));
    }
    return v;
  }

  std::optional<Verdict> Session::decide_locally(Word const& wf,
                                                 Word const& wg,
                                                 ArrowTerm const& f,
                                                 ArrowTerm const& g) {
    auto const&   E = cx_->edges();
    auto const&   R = cx_->relators();
    std::set<int> near{*cx_->find_vertex(f.src()), *cx_->find_vertex(f.dst())};
    for (Word const* w : {&wf, &wg}) {
      for (Letter x : *w) {
        auto const& e = E[std::abs(x) - 1];
        near.insert(e.src);
        near.insert(e.dst);
      }
    }
    for (int radius = 0; radius < 2; ++radius) {
      std::vector<int> only;
      for (std::size_t r = 0; r < R.size(); ++r) {
        if (!active_[r]) {
          continue;
        }
        bool inside = true;
        for (Letter x : cx_->word(R[r])) {
          auto const& e = E[std::abs(x) - 1];
          if (!near.count(e.src) || !near.count(e.dst)) {
            inside = false;
            break;
          }
        }
        if (inside) {
          only.push_back(static_cast<int>(r));
        }
      }
      if (!only.empty()) {
        Session local(cx_, only);
        Verdict v = local.decide(f, g);
        if (v.equal()) {
          return v;
        }
      }
      std::set<int> grown = near;
      for (int u : near) {
        for (int e : cx_->out_edges()[u]) {
          grown.insert(E[e].dst);
        }
        for (int e : cx_->in_edges()[u]) {
          grown.insert(E[e].src);
        }
      }
      near = std::move(grown);
    }
    return std::nullopt;
  }

  Verdict decide_equal(Session& s, ArrowTerm const& f, ArrowTerm const& g) {
    return s.decide(f, g);
  }

  Verdict decide_equal(Presentation const& p, ArrowTerm const& f,
                       ArrowTerm const& g, Budget const& b) {
    Session s(p, b);
    return s.decide(f, g);
  }

  bool replay(Presentation const& p, Budget const& b, ArrowTerm const& f,
              ArrowTerm const& g, Verdict const& v) {
    if (!v.equal()) {
      return false;
    }
    if (f == g) {
      return true;
    }
    Session s(p, b, v.relator_ids);
    // the cited instances must be regenerated exactly
    auto const& R = s.complex().relators();
    for (std::size_t k = 0; k < v.relator_ids.size(); ++k) {
      int r = v.relator_ids[k];
      if (r < 0 || r >= static_cast<int>(R.size())) {
        return false;
      }
      auto in = s.complex().instance(R[r]);
      if (k < v.witness.size()
          && (in.schema_id != v.witness[k].schema_id
              || !(in.lhs == v.witness[k].lhs)
              || !(in.rhs == v.witness[k].rhs))) {
        return false;
      }
    }
    return s.decide(f, g).equal();
  }

  // ---------------------------------------------------------------------

  SignValue sign_eval(ArrowTerm const& f) {
    using K = ArrowTerm::Kind;
    Int d = degree(f.src());
    if (degree(f.dst()) != d) {
      throw term_error("degree changes along " + print(f));
    }
    Int s = 0;
    switch (f.kind()) {
      case K::Sym:
        s = mod(degree(f.objs()[0]) * degree(f.objs()[1]), 2);
        break;
      case K::Compose:
        s = mod(sign_eval(f.args()[0]).sign + sign_eval(f.args()[1]).sign, 2);
        break;
      case K::Inv:
      case K::WhiskL:
      case K::WhiskR:
        s = sign_eval(f.args()[0]).sign;
        break;
      case K::Gamma:
      case K::Delta:
      case K::LeftAct:
      case K::RightAct:
        throw term_error("sign evaluation is defined on the unit "
                         "presentation only");
      default:
        s = 0;
    }
    return {d, s};
  }

  void enumerate_paths(Complex const& c, int X, std::size_t max_edges,
                       std::function<bool(int)> const&              keep,
                       std::function<void(int, Word const&)> const& sink) {
    if (keep && !keep(X)) {
      return;
    }
    auto const& E   = c.edges();
    auto const& out = c.out_edges();
    auto const& in  = c.in_edges();
    // steps from u: (letter, next vertex) ordered by edge id, forward first
    auto steps = [&](int u) {
      std::vector<std::pair<Letter, int>> st;
      st.reserve(out[u].size() + in[u].size());
      for (int e : out[u]) {
        st.push_back({e + 1, E[e].dst});
      }
      for (int e : in[u]) {
        st.push_back({-(e + 1), E[e].src});
      }
      std::sort(st.begin(), st.end(), [](auto const& a, auto const& b) {
        int ea = std::abs(a.first), eb = std::abs(b.first);
        return ea != eb ? ea < eb : a.first > b.first;
      });
      return st;
    };
    Word w;
    std::function<void(int)> go = [&](int u) {
      sink(u, w);
      if (w.size() == max_edges) {
        return;
      }
      for (auto [x, nxt] : steps(u)) {
        if (!w.empty() && w.back() == -x) {
          continue;
        }
        if (keep && !keep(nxt)) {
          continue;
        }
        w.push_back(x);
        go(nxt);
        w.pop_back();
      }
    };
    go(X);
  }

  std::vector<ArrowTerm> enumerate_arrow_terms(
      Session const& s, ObjTerm const& X, ObjTerm const& Y,
      std::size_t max_edges,
      std::function<bool(ObjTerm const&)> const& keep) {
    Complex const&         c  = s.complex();
    auto                   xv = c.find_vertex(X);
    auto                   yv = c.find_vertex(Y);
    std::vector<ArrowTerm> out;
    if (!xv || !yv) {
      return out;
    }
    std::function<bool(int)> k;
    if (keep) {
      k = [&](int v) { return keep(c.vertex(v)); };
    }
    enumerate_paths(c, *xv, max_edges, k, [&](int v, Word const& w) {
      if (v == *yv) {
        out.push_back(path_arrow(c, *xv, w));
      }
    });
    return out;
  }

  std::vector<ArrowTerm> enumerate_arrow_terms(Presentation const& p,
                                               ObjTerm const&      X,
                                               ObjTerm const&      Y,
                                               std::size_t max_edges,
                                               Budget const&       b) {
    Session s(p, b);
    return enumerate_arrow_terms(s, X, Y, max_edges);
  }

  std::vector<std::vector<ArrowTerm>> hom_classes(Session&       s,
                                                  ObjTerm const& X,
                                                  ObjTerm const& Y,
                                                  std::size_t    max_edges) {
    auto const terms = enumerate_arrow_terms(s, X, Y, max_edges);
    std::vector<std::vector<std::size_t>> classes;
    std::map<Word, std::size_t>           index;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      auto w = s.path_word(terms[i]);
      if (!w) {
        continue;
      }
      Word nf          = s.normal_form(*w);
      auto [it, fresh] = index.emplace(nf, classes.size());
      if (fresh) {
        classes.push_back({});
      }
      classes[it->second].push_back(i);
    }
    // normal forms can split a class when completion is partial; merge
    // classes whose representatives the full decision identifies
    std::vector<std::vector<std::size_t>> merged;
    for (auto& c : classes) {
      bool placed = false;
      for (auto& m : merged) {
        if (s.decide(terms[m.front()], terms[c.front()]).equal()) {
          m.insert(m.end(), c.begin(), c.end());
          std::sort(m.begin(), m.end());
          placed = true;
          break;
        }
      }
      if (!placed) {
        merged.push_back(std::move(c));
      }
    }
    std::vector<std::vector<ArrowTerm>> out;
    for (auto const& m : merged) {
      out.emplace_back();
      for (std::size_t i : m) {
        out.back().push_back(terms[i]);
      }
    }
    return out;
  }

}  // namespace picring
