#include <catch2/catch_amalgamated.hpp>

#include "picring/presentations.hpp"
#include "picring/terms.hpp"

using namespace picring;

namespace {
  ObjTerm const x = ObjTerm::gen("x");
  ObjTerm const y = ObjTerm::gen("y");
  ObjTerm const z = ObjTerm::gen("z");
  ObjTerm       t(ObjTerm const& a, ObjTerm const& b) {
    return ObjTerm::tensor(a, b);
  }
}  // namespace

TEST_CASE("generator edges are typed", "[terms]") {
  auto a = ArrowTerm::assoc(x, y, z);
  CHECK(a.src() == t(x, t(y, z)));
  CHECK(a.dst() == t(t(x, y), z));
  CHECK(ArrowTerm::right_unit(x).src() == t(x, ObjTerm::unit()));
  CHECK(ArrowTerm::left_unit(x).src() == t(ObjTerm::unit(), x));
  CHECK(ArrowTerm::sym(x, y).dst() == t(y, x));
  CHECK(ArrowTerm::j(x).src().is_unit());
  CHECK(ArrowTerm::j(x).dst() == t(ObjTerm::dual(x), x));
}

TEST_CASE("endpoints of inverses and composites", "[terms]") {
  auto s  = ArrowTerm::sym(x, y);
  auto s2 = ArrowTerm::sym(y, x);
  auto c  = ArrowTerm::compose(s2, s);
  CHECK(endpoints(c) == std::pair{s.src(), s2.dst()});
  auto i = ArrowTerm::inv(s);
  CHECK(endpoints(i) == std::pair{s.dst(), s.src()});
  CHECK(endpoints(ArrowTerm::inv(c)) == std::pair{c.dst(), c.src()});
  CHECK(c.edge_count() == 2);
  CHECK(ArrowTerm::whisk_l(z, c).edge_count() == 2);
  CHECK_THROWS_AS(ArrowTerm::compose(s, s), term_error);
}

TEST_CASE("whiskering acts on one side", "[terms]") {
  auto s = ArrowTerm::sym(x, y);
  auto l = ArrowTerm::whisk_l(z, s);
  CHECK(l.src() == t(z, t(x, y)));
  CHECK(l.dst() == t(z, t(y, x)));
  auto r = ArrowTerm::whisk_r(s, z);
  CHECK(r.src() == t(t(x, y), z));
  auto w = whisker_into(t(z, t(x, y)), "1", s);
  CHECK(w.src() == l.src());
  CHECK(w.dst() == l.dst());
}

TEST_CASE("degree counts generators with duals negative", "[terms]") {
  CHECK(degree(ObjTerm::unit()) == 0);
  CHECK(degree(t(x, t(y, z))) == 3);
  CHECK(degree(t(ObjTerm::dual(x), x)) == 0);
  CHECK(degree(ObjTerm::dual(ObjTerm::dual(x))) == 1);
  CHECK(degree(ObjTerm::pair(Elem{1}, Elem{0})) == 0);
  CHECK(t(x, y).depth() == 1);
  CHECK(t(x, t(y, z)).depth() == 2);
  CHECK(t(x, y).size() == 3);
}

TEST_CASE("subterms and positions", "[terms]") {
  auto w = t(x, t(y, z));
  CHECK(subterm(w, "") == w);
  CHECK(subterm(w, "0") == x);
  CHECK(subterm(w, "10") == y);
  CHECK(replace_at(w, "11", x) == t(x, t(y, x)));
  auto ps = tensor_positions(w);
  CHECK(std::find(ps.begin(), ps.end(), "1") != ps.end());
  CHECK(std::find(ps.begin(), ps.end(), "") != ps.end());
  for (auto const& e : canonical_edges_at(w)) {
    CHECK(e.src() == w);
  }
}

TEST_CASE("print and parse round-trip", "[terms]") {
  std::vector<std::string> texts = {
      "comp(s(g:*,g:*),s(g:*,g:*))",
      "id(ten(g:*,g:*))",
      "inv(a(g:x,I,dual(g:y)))",
      "wl(g:x,r(g:y))",
      "wr(j(g:x),g:z)",
      "comp(l(g:x),inv(l(g:x)))",
      "lact(1,0,1)",
      "ract([1,0],1,2)"};
  for (auto const& s : texts) {
    auto p = parse_arrow(s);
    CHECK(print(p) == s);
    CHECK(parse_arrow(print(p)) == p);
  }
  CHECK(print(parse_obj("ten(pair(1,0),dual(I))")) == "ten(pair(1,0),dual(I))");
}

TEST_CASE("gamma and delta labels need groups", "[terms]") {
  CHECK_THROWS_AS(parse_arrow("gam(1,1,0)"), syntax_error);
  LabelGroups lg{FinAbGroup::cyclic(2), FinAbGroup::cyclic(2)};
  auto        g = parse_arrow("gam(1,1,1)", &lg);
  CHECK(g.dst() == ObjTerm::pair(Elem{0}, Elem{1}));
  auto d = build("del", {"1", "1", "1"}, &lg);
  CHECK(d.dst() == ObjTerm::pair(Elem{1}, Elem{0}));
}

TEST_CASE("syntax and typing errors", "[terms]") {
  CHECK_THROWS_AS(parse_arrow("foo(g:x)"), syntax_error);
  CHECK_THROWS_AS(parse_arrow("s(g:x"), syntax_error);
  CHECK_THROWS_AS(parse_obj("ten(g:,I)"), syntax_error);
  CHECK_THROWS_AS(parse_arrow("comp(s(g:x,g:y),s(g:x,g:y))"), term_error);
  try {
    parse_arrow("s(g:x,g:y) junk");
    FAIL("trailing text accepted");
  } catch (syntax_error const& e) {
    CHECK(e.position > 0);
  }
}

TEST_CASE("enumerated terms are well formed and monotone", "[terms]") {
  auto   p = build_unit_presentation();
  Budget b = default_budget(p);
  b.depth  = 2;
  auto X   = parse_obj("ten(g:*,g:*)");
  std::set<std::string> prev;
  for (std::size_t k = 0; k <= 3; ++k) {
    auto ts = enumerate_arrow_terms(p, X, X, k, b);
    std::set<std::string> cur;
    for (auto const& f : ts) {
      CHECK(f.src() == X);
      CHECK(f.dst() == X);
      CHECK(f.edge_count() <= k);
      // every term rebuilds through the parser's validation
      CHECK(parse_arrow(print(f)) == f);
      cur.insert(print(f));
    }
    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    prev = std::move(cur);
  }
  CHECK(prev.size() > 1);
}
