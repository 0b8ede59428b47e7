#include "picring/json_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace picring {

  namespace {
    [[noreturn]] void bad(std::string const& path, std::string const& msg) {
      throw input_error(path.empty() ? "$" : path, msg);
    }

    void keys(json const& j, std::string const& path,
              std::set<std::string> const& allowed,
              std::set<std::string> const& required = {}) {
      if (!j.is_object()) {
        bad(path, "expected an object");
      }
      for (auto const& [k, v] : j.items()) {
        if (!allowed.count(k)) {
          bad(path + "." + k, "unknown key");
        }
      }
      for (auto const& k : required) {
        if (!j.contains(k)) {
          bad(path + "." + k, "missing key");
        }
      }
    }

    Int read_int(json const& j, std::string const& path) {
      if (!j.is_number_integer()) {
        bad(path, "expected an integer");
      }
      return j.get<Int>();
    }

    std::string read_string(json const& j, std::string const& path) {
      if (!j.is_string()) {
        bad(path, "expected a string");
      }
      return j.get<std::string>();
    }

    json const& array(json const& j, std::string const& path) {
      if (!j.is_array()) {
        bad(path, "expected an array");
      }
      return j;
    }

    std::string at(std::string const& path, std::size_t i) {
      return path + "[" + std::to_string(i) + "]";
    }

    Int bound_or(json const& j, std::string const& path, Int dflt) {
      if (!j.contains("bound")) {
        return dflt;
      }
      Int b = read_int(j["bound"], path + ".bound");
      if (b < 0) {
        bad(path + ".bound", "must be non-negative");
      }
      return b;
    }

    // Overrides of named tables: "name": [[k1, ..., kn, value], ...].
    struct TableSlot {
      Table*                          table;
      std::vector<FinAbGroup const*>  key_groups;
    };

    void apply_tables(json const& j, std::string const& path,
                      std::map<std::string, TableSlot> const& slots) {
      if (!j.is_object()) {
        bad(path, "expected an object");
      }
      for (auto const& [name, entries] : j.items()) {
        std::string p  = path + "." + name;
        auto        it = slots.find(name);
        if (it == slots.end()) {
          bad(p, "unknown table");
        }
        auto const& slot = it->second;
        array(entries, p);
        for (std::size_t i = 0; i < entries.size(); ++i) {
          std::string const q = at(p, i);
          auto const&       e = array(entries[i], q);
          if (e.size() != slot.key_groups.size() + 1) {
            bad(q, "expected " + std::to_string(slot.key_groups.size() + 1)
                       + " items (key then value)");
          }
          Table::Key key;
          for (std::size_t k = 0; k < slot.key_groups.size(); ++k) {
            key.push_back(read_elem(e[k], *slot.key_groups[k], at(q, k)));
          }
          slot.table->set(key, read_elem(e.back(), slot.table->target(),
                                         at(q, e.size() - 1)));
        }
      }
    }

    void bilinear_slots(std::map<std::string, TableSlot>& slots,
                        std::string const& prefix, BilinearMap& f) {
      auto const* gp = &f.P.G;
      auto const* gq = &f.Q.G;
      slots[prefix + "obj"]   = {&f.obj, {gp, gq}};
      slots[prefix + "left"]  = {&f.left, {gp, gq, &f.P.H}};
      slots[prefix + "right"] = {&f.right, {gp, gq, &f.Q.H}};
      slots[prefix + "under"] = {&f.under, {gp, gq, gq}};
      slots[prefix + "over"]  = {&f.over, {gp, gp, gq}};
    }
  }  // namespace

  json parse_json(std::string const& text, std::string const& origin) {
    try {
      return json::parse(text);
    } catch (json::parse_error const& e) {
      std::size_t line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
          ++line;
          col = 1;
        } else {
          ++col;
        }
      }
      std::ostringstream msg;
      msg << "malformed JSON at line " << line << ", column " << col
          << " (byte " << e.byte << ")";
      throw input_error(origin, msg.str());
    }
  }

  json load_json(std::string const& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) {
      throw input_error(file, "cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_json(buf.str(), file);
  }

  FinAbGroup read_group(json const& j, std::string const& path) {
    keys(j, path, {"cyclic_orders"}, {"cyclic_orders"});
    auto const&      a = array(j["cyclic_orders"], path + ".cyclic_orders");
    std::vector<Int> orders;
    for (std::size_t i = 0; i < a.size(); ++i) {
      Int n = read_int(a[i], at(path + ".cyclic_orders", i));
      if (n < 0 || n == 1) {
        bad(at(path + ".cyclic_orders", i),
            "orders are 0 (infinite) or at least 2");
      }
      orders.push_back(n);
    }
    return FinAbGroup(orders);
  }

  Elem read_elem(json const& j, FinAbGroup const& g, std::string const& path) {
    auto const& a = array(j, path);
    if (a.size() != g.rank()) {
      bad(path, "expected " + std::to_string(g.rank()) + " coordinates");
    }
    Elem x;
    for (std::size_t i = 0; i < a.size(); ++i) {
      x.push_back(read_int(a[i], at(path, i)));
    }
    return g.reduce(x);
  }

  GroupHom read_hom(json const& j, FinAbGroup const& src,
                    FinAbGroup const& dst, std::string const& path) {
    auto const& a = array(j, path);
    if (a.size() != src.rank()) {
      bad(path, "expected one image per generator ("
                    + std::to_string(src.rank()) + ")");
    }
    GroupHom f{src, dst, {}};
    for (std::size_t i = 0; i < a.size(); ++i) {
      f.images.push_back(read_elem(a[i], dst, at(path, i)));
    }
    if (auto errs = validate_hom(f); !errs.empty()) {
      bad(path, "not a homomorphism: " + errs.front());
    }
    return f;
  }

  PicardModel read_picard(json const& j, std::string const& path) {
    keys(j, path, {"G", "H", "c", "bound"}, {"G", "H"});
    FinAbGroup G = read_group(j["G"], path + ".G");
    FinAbGroup H = read_group(j["H"], path + ".H");
    std::vector<std::vector<Elem>> c(G.rank(),
                                     std::vector<Elem>(G.rank(), H.zero()));
    if (j.contains("c")) {
      std::string const p = path + ".c";
      auto const&       rows = array(j["c"], p);
      if (rows.size() != G.rank()) {
        bad(p, "expected a square matrix of size " + std::to_string(G.rank()));
      }
      for (std::size_t r = 0; r < rows.size(); ++r) {
        auto const& row = array(rows[r], at(p, r));
        if (row.size() != G.rank()) {
          bad(at(p, r), "expected " + std::to_string(G.rank()) + " entries");
        }
        for (std::size_t s = 0; s < row.size(); ++s) {
          c[r][s] = read_elem(row[s], H, at(at(p, r), s));
        }
      }
    }
    PicardModel m = PicardModel::make(G, H, c, bound_or(j, path, 3));
    if (auto errs = validate_pairing(m.c); !errs.empty()) {
      bad(path + ".c", errs.front());
    }
    return m;
  }

  FiniteRing read_ring(json const& j, std::string const& path) {
    if (!j.is_object() || !j.contains("kind")) {
      bad(path + ".kind", "missing key");
    }
    std::string kind = read_string(j["kind"], path + ".kind");
    if (kind == "cyclic") {
      keys(j, path, {"kind", "n"}, {"n"});
      Int n = read_int(j["n"], path + ".n");
      if (n < 1) {
        bad(path + ".n", "must be positive");
      }
      return cyclic_ring(n);
    }
    if (kind == "matrix") {
      keys(j, path, {"kind", "p", "size", "upper"}, {"p", "size"});
      Int  p = read_int(j["p"], path + ".p");
      Int  k = read_int(j["size"], path + ".size");
      bool u = j.contains("upper") && j["upper"].is_boolean()
               && j["upper"].get<bool>();
      if (p < 2 || k < 1 || k > 3) {
        bad(path, "need p >= 2 and 1 <= size <= 3");
      }
      return matrix_ring(p, static_cast<int>(k), u);
    }
    if (kind == "poly") {
      keys(j, path, {"kind", "p", "lower"}, {"p", "lower"});
      Int  p  = read_int(j["p"], path + ".p");
      auto const& a = array(j["lower"], path + ".lower");
      std::vector<Int> lower;
      for (std::size_t i = 0; i < a.size(); ++i) {
        lower.push_back(read_int(a[i], at(path + ".lower", i)));
      }
      if (p < 2 || lower.empty()) {
        bad(path, "need p >= 2 and a non-constant modulus");
      }
      return quotient_poly_ring(p, lower);
    }
    if (kind == "product") {
      keys(j, path, {"kind", "factors"}, {"factors"});
      auto const& a = array(j["factors"], path + ".factors");
      if (a.size() < 1) {
        bad(path + ".factors", "expected at least one factor");
      }
      FiniteRing R = read_ring(a[0], at(path + ".factors", 0));
      for (std::size_t i = 1; i < a.size(); ++i) {
        R = product_ring(R, read_ring(a[i], at(path + ".factors", i)));
      }
      return R;
    }
    if (kind == "table") {
      keys(j, path, {"kind", "name", "additive", "one", "mul"},
           {"additive", "one", "mul"});
      FiniteRing R;
      R.name     = j.contains("name") ? read_string(j["name"], path + ".name")
                                      : "table";
      R.additive = read_group(j["additive"], path + ".additive");
      if (!R.additive.finite()) {
        bad(path + ".additive", "ring tables need a finite group");
      }
      R.one = read_elem(j["one"], R.additive, path + ".one");
      R.mul = Table(R.additive);
      auto const& a = array(j["mul"], path + ".mul");
      for (std::size_t i = 0; i < a.size(); ++i) {
        std::string const q = at(path + ".mul", i);
        auto const&       e = array(a[i], q);
        if (e.size() != 3) {
          bad(q, "expected [a, b, ab]");
        }
        R.mul.set({read_elem(e[0], R.additive, at(q, 0)),
                   read_elem(e[1], R.additive, at(q, 1))},
                  read_elem(e[2], R.additive, at(q, 2)));
      }
      return R;
    }
    bad(path + ".kind", "unknown ring kind '" + kind + "'");
  }

  TwoRingModel read_two_ring(json const& j, std::string const& path,
                             FiniteRing* ring) {
    if (!j.is_object() || !j.contains("kind")) {
      bad(path + ".kind", "missing key");
    }
    std::string  kind = read_string(j["kind"], path + ".kind");
    TwoRingModel R;
    if (kind == "unit") {
      keys(j, path, {"kind", "bound", "tables"});
      R = unit_two_ring(bound_or(j, path, 3));
    } else if (kind == "discrete") {
      keys(j, path, {"kind", "ring", "tables"}, {"ring"});
      FiniteRing fr = read_ring(j["ring"], path + ".ring");
      if (ring) {
        *ring = fr;
      }
      R = discrete_two_ring(fr);
    } else if (kind == "explicit") {
      keys(j, path, {"kind", "base", "one", "tables"}, {"base", "one"});
      PicardModel base = read_picard(j["base"], path + ".base");
      FinAbGroup  H    = base.H;
      R = {base,
           BilinearMap{base, base, base, Table(base.G), Table(H), Table(H),
                       Table(H), Table(H)},
           read_elem(j["one"], base.G, path + ".one"),
           Table(H),
           Table(H),
           Table(H)};
    } else {
      bad(path + ".kind", "unknown 2-ring kind '" + kind + "'");
    }
    if (j.contains("tables")) {
      auto const*                      g = &R.base.G;
      std::map<std::string, TableSlot> slots;
      bilinear_slots(slots, "mult.", R.mult);
      slots["alpha"]  = {&R.alpha, {g, g, g}};
      slots["rho"]    = {&R.rho, {g}};
      slots["lambda"] = {&R.lambda, {g}};
      apply_tables(j["tables"], path + ".tables", slots);
    }
    return R;
  }

  TwoRingMorphism read_two_ring_morphism(json const& j, TwoRingModel& A,
                                         TwoRingModel&      B,
                                         std::string const& path) {
    keys(j, path,
         {"source", "target", "kind", "psi0", "psi1", "T0", "tables"},
         {"source", "target", "kind"});
    A = read_two_ring(j["source"], path + ".source");
    B = read_two_ring(j["target"], path + ".target");
    std::string     kind = read_string(j["kind"], path + ".kind");
    TwoRingMorphism h;
    if (kind == "identity") {
      if (!(A.base == B.base)) {
        bad(path + ".target", "identity needs equal base models");
      }
      h = TwoRingMorphism::identity(A);
    } else if (kind == "explicit") {
      if (!j.contains("psi0")) {
        bad(path + ".psi0", "missing key");
      }
      GroupHom p0 = read_hom(j["psi0"], A.base.G, B.base.G, path + ".psi0");
      GroupHom p1 = j.contains("psi1")
                        ? read_hom(j["psi1"], A.base.H, B.base.H,
                                   path + ".psi1")
                        : GroupHom::zero(A.base.H, B.base.H);
      h = {MonFunctor{p0, p1, Table(B.base.H), B.base.H.zero()},
           Table(B.base.H), B.base.H.zero()};
      if (j.contains("T0")) {
        h.T0 = read_elem(j["T0"], B.base.H, path + ".T0");
      }
    } else {
      bad(path + ".kind", "unknown morphism kind '" + kind + "'");
    }
    if (j.contains("tables")) {
      auto const* g = &A.base.G;
      apply_tables(j["tables"], path + ".tables",
                   {{"F2", {&h.H_plus.F2, {g, g}}}, {"T", {&h.T, {g, g}}}});
    }
    return h;
  }

  EnrichedCategory read_enriched(json const& j, std::string const& path) {
    if (!j.is_object() || !j.contains("kind")) {
      bad(path + ".kind", "missing key");
    }
    std::string      kind = read_string(j["kind"], path + ".kind");
    EnrichedCategory E;
    if (kind == "one-object") {
      keys(j, path, {"kind", "ring", "tables"}, {"ring"});
      E = one_object_category(read_two_ring(j["ring"], path + ".ring"));
    } else if (kind == "explicit") {
      keys(j, path, {"kind", "objects", "homs", "units", "tables"},
           {"objects", "homs", "units"});
      auto const& objs = array(j["objects"], path + ".objects");
      for (std::size_t i = 0; i < objs.size(); ++i) {
        E.objects.push_back(read_string(objs[i], at(path + ".objects", i)));
      }
      int const   n    = E.size();
      auto const& rows = array(j["homs"], path + ".homs");
      if (static_cast<int>(rows.size()) != n) {
        bad(path + ".homs", "expected one row per object");
      }
      for (int x = 0; x < n; ++x) {
        auto const& row = array(rows[x], at(path + ".homs", x));
        if (static_cast<int>(row.size()) != n) {
          bad(at(path + ".homs", x), "expected one model per object");
        }
        for (int y = 0; y < n; ++y) {
          E.homs.push_back(read_picard(row[y], at(at(path + ".homs", x), y)));
        }
      }
      auto const& us = array(j["units"], path + ".units");
      if (static_cast<int>(us.size()) != n) {
        bad(path + ".units", "expected one unit per object");
      }
      for (int x = 0; x < n; ++x) {
        E.units.push_back(read_elem(us[x], E.hom(x, x).G, at(path + ".units", x)));
      }
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          for (int z = 0; z < n; ++z) {
            auto const& P = E.hom(y, z);
            auto const& Q = E.hom(x, y);
            auto const& C = E.hom(x, z);
            E.compose.push_back({P, Q, C, Table(C.G), Table(C.H), Table(C.H),
                                 Table(C.H), Table(C.H)});
          }
        }
      }
      for (int q = 0; q < n * n * n * n; ++q) {
        int x = q / (n * n * n), t = q % n;
        E.alpha.push_back(Table(E.hom(x, t).H));
      }
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          E.rho.push_back(Table(E.hom(x, y).H));
          E.lambda.push_back(Table(E.hom(x, y).H));
        }
      }
    } else {
      bad(path + ".kind", "unknown category kind '" + kind + "'");
    }
    if (j.contains("tables")) {
      int const                        n = E.size();
      std::map<std::string, TableSlot> slots;
      auto name = [](std::string s, std::initializer_list<int> xs) {
        for (int x : xs) {
          s += "." + std::to_string(x);
        }
        return s;
      };
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          slots[name("rho", {x, y})]    = {&E.rho[x * n + y], {&E.hom(x, y).G}};
          slots[name("lambda", {x, y})] = {&E.lambda[x * n + y],
                                           {&E.hom(x, y).G}};
          for (int z = 0; z < n; ++z) {
            bilinear_slots(slots, name("compose", {x, y, z}) + ".",
                           E.compose[(x * n + y) * n + z]);
            for (int t = 0; t < n; ++t) {
              slots[name("alpha", {x, y, z, t})] = {
                  &E.alpha[((x * n + y) * n + z) * n + t],
                  {&E.hom(z, t).G, &E.hom(y, z).G, &E.hom(x, y).G}};
            }
          }
        }
      }
      apply_tables(j["tables"], path + ".tables", slots);
    }
    return E;
  }

  ModuleModel read_module(json const& j, std::string const& path) {
    if (!j.is_object() || !j.contains("kind")) {
      bad(path + ".kind", "missing key");
    }
    std::string kind = read_string(j["kind"], path + ".kind");
    ModuleModel M;
    if (kind == "strict-unit" || kind == "twisted-unit") {
      bool twisted = kind == "twisted-unit";
      keys(j, path, {"kind", "carrier", "bound", "twist", "tables"},
           twisted ? std::set<std::string>{"carrier", "twist"}
                   : std::set<std::string>{"carrier"});
      PicardModel C = read_picard(j["carrier"], path + ".carrier");
      auto        s = search_strict_unit_module(C, bound_or(j, path, 3));
      if (s.found.size() != 1) {
        bad(path + ".carrier", "carrier has " + std::to_string(s.found.size())
                                   + " strict structures, expected 1");
      }
      M = s.found[0];
      if (twisted) {
        M = twisted_unit_module(
            M, read_hom(j["twist"], C.G, C.H, path + ".twist"));
      }
    } else if (kind == "presheaf") {
      keys(j, path, {"kind", "ring", "n", "f", "tables"}, {"ring", "n", "f"});
      FiniteRing A = read_ring(j["ring"], path + ".ring");
      Int        n = read_int(j["n"], path + ".n");
      if (n < 2) {
        bad(path + ".n", "must be at least 2");
      }
      M = presheaf_encoding(
              A, n,
              read_hom(j["f"], A.additive, FinAbGroup::cyclic(n), path + ".f"))
              .module;
    } else if (kind == "explicit") {
      keys(j, path, {"kind", "ring", "carrier", "tables"}, {"ring", "carrier"});
      TwoRingModel R = read_two_ring(j["ring"], path + ".ring");
      PicardModel  C = read_picard(j["carrier"], path + ".carrier");
      FinAbGroup   H = C.H;
      M = {R, C,
           BilinearMap{R.base, C, C, Table(C.G), Table(H), Table(H), Table(H),
                       Table(H)},
           Table(H), Table(H)};
    } else {
      bad(path + ".kind", "unknown module kind '" + kind + "'");
    }
    if (j.contains("tables")) {
      auto const*                      ga = &M.ring.base.G;
      auto const*                      gm = &M.carrier.G;
      std::map<std::string, TableSlot> slots;
      bilinear_slots(slots, "action.", M.action);
      slots["beta"]  = {&M.beta, {ga, ga, gm}};
      slots["gamma"] = {&M.gamma, {gm}};
      apply_tables(j["tables"], path + ".tables", slots);
    }
    return M;
  }

  // ---------------------------------------------------------------------

  json elem_json(Elem const& x) {
    return json(x);
  }

  json picard_json(PicardModel const& m) {
    json c = json::array();
    for (auto const& row : m.c.values) {
      json r = json::array();
      for (auto const& v : row) {
        r.push_back(elem_json(v));
      }
      c.push_back(r);
    }
    return {{"G", {{"cyclic_orders", m.G.orders()}}},
            {"H", {{"cyclic_orders", m.H.orders()}}},
            {"c", c},
            {"bound", m.bound}};
  }

  json report_json(Report const& r) {
    json fs = json::array();
    for (auto const& f : r.failures) {
      json inst = json::array();
      for (auto const& [k, v] : f.instance) {
        inst.push_back({k, v});
      }
      fs.push_back({{"axiom", f.axiom}, {"instance", inst},
                    {"detail", f.detail}});
    }
    return {{"checked", r.checked},
            {"bound", r.bound},
            {"failures", fs},
            {"notes", r.notes}};
  }

  Report report_from_json(json const& j) {
    Report r;
    r.checked = j.at("checked").get<std::size_t>();
    r.bound   = j.at("bound").get<Int>();
    r.notes   = j.at("notes").get<std::vector<std::string>>();
    for (auto const& f : j.at("failures")) {
      std::vector<Binding> inst;
      for (auto const& b : f.at("instance")) {
        inst.emplace_back(b.at(0).get<std::string>(),
                          b.at(1).get<std::string>());
      }
      r.fail(f.at("axiom").get<std::string>(), inst,
             f.at("detail").get<std::string>());
    }
    return r;
  }

}  // namespace picring
