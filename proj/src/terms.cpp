#include "picring/terms.hpp"

#include <cctype>
#include <functional>

namespace picring {

  ////////////////////////////////////////////////////////////////////////
  // Objects
  ////////////////////////////////////////////////////////////////////////

  struct ObjTerm::Node {
    Kind                 kind;
    std::string          name;
    Elem                 a, b;
    std::vector<ObjTerm> kids;
    std::size_t          hash  = 0;
    int                  depth = 0;
    std::size_t          size  = 1;
  };

  namespace {
    std::size_t mix(std::size_t h, std::size_t v) {
      return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }

    std::size_t hash_elem(Elem const& x) {
      std::size_t h = x.size();
      for (Int v : x) {
        h = mix(h, std::hash<Int>()(v));
      }
      return h;
    }

    std::shared_ptr<ObjTerm::Node const> unit_node() {
      static auto n = [] {
        auto m  = std::make_shared<ObjTerm::Node>();
        m->kind = ObjTerm::Kind::Unit;
        m->hash = 0x51ed270b;
        return std::shared_ptr<ObjTerm::Node const>(m);
      }();
      return n;
    }
  }  // namespace

  ObjTerm::ObjTerm() : n_(unit_node()) {}

  ObjTerm ObjTerm::unit() {
    return ObjTerm();
  }

  ObjTerm ObjTerm::gen(std::string name) {
    if (name.empty()) {
      throw term_error("empty generator name");
    }
    auto n  = std::make_shared<Node>();
    n->kind = Kind::Gen;
    n->hash = mix(1, std::hash<std::string>()(name));
    n->name = std::move(name);
    return ObjTerm(std::move(n));
  }

  ObjTerm ObjTerm::pair(Elem a, Elem b) {
    auto n  = std::make_shared<Node>();
    n->kind = Kind::Pair;
    n->hash = mix(mix(2, hash_elem(a)), hash_elem(b));
    n->a    = std::move(a);
    n->b    = std::move(b);
    return ObjTerm(std::move(n));
  }

  ObjTerm ObjTerm::tensor(ObjTerm const& l, ObjTerm const& r) {
    auto n   = std::make_shared<Node>();
    n->kind  = Kind::Tensor;
    n->hash  = mix(mix(3, l.hash()), r.hash());
    n->depth = 1 + std::max(l.depth(), r.depth());
    n->size  = 1 + l.size() + r.size();
    n->kids  = {l, r};
    return ObjTerm(std::move(n));
  }

  ObjTerm ObjTerm::dual(ObjTerm const& x) {
    auto n   = std::make_shared<Node>();
    n->kind  = Kind::Dual;
    n->hash  = mix(4, x.hash());
    n->depth = 1 + x.depth();
    n->size  = 1 + x.size();
    n->kids  = {x};
    return ObjTerm(std::move(n));
  }

  ObjTerm::Kind ObjTerm::kind() const noexcept {
    return n_->kind;
  }

  std::string const& ObjTerm::name() const {
    if (kind() != Kind::Gen) {
      throw term_error("name() of a non-generator object");
    }
    return n_->name;
  }

  Elem const& ObjTerm::pair_a() const {
    if (kind() != Kind::Pair) {
      throw term_error("pair_a() of a non-pair object");
    }
    return n_->a;
  }

  Elem const& ObjTerm::pair_b() const {
    if (kind() != Kind::Pair) {
      throw term_error("pair_b() of a non-pair object");
    }
    return n_->b;
  }

  ObjTerm const& ObjTerm::left() const {
    if (kind() != Kind::Tensor) {
      throw term_error("left() of a non-tensor object");
    }
    return n_->kids[0];
  }

  ObjTerm const& ObjTerm::right() const {
    if (kind() != Kind::Tensor) {
      throw term_error("right() of a non-tensor object");
    }
    return n_->kids[1];
  }

  ObjTerm const& ObjTerm::inner() const {
    if (kind() != Kind::Dual) {
      throw term_error("inner() of a non-dual object");
    }
    return n_->kids[0];
  }

  std::size_t ObjTerm::hash() const noexcept {
    return n_->hash;
  }

  int ObjTerm::depth() const noexcept {
    return n_->depth;
  }

  std::size_t ObjTerm::size() const noexcept {
    return n_->size;
  }

  bool operator==(ObjTerm const& x, ObjTerm const& y) noexcept {
    if (x.n_ == y.n_) {
      return true;
    }
    if (x.hash() != y.hash() || x.kind() != y.kind()
        || x.n_->size != y.n_->size) {
      return false;
    }
    return (x <=> y) == std::strong_ordering::equal;
  }

  std::strong_ordering operator<=>(ObjTerm const& x,
                                   ObjTerm const& y) noexcept {
    if (x.n_ == y.n_) {
      return std::strong_ordering::equal;
    }
    if (auto c = x.kind() <=> y.kind(); c != 0) {
      return c;
    }
    switch (x.kind()) {
      case ObjTerm::Kind::Unit:
        return std::strong_ordering::equal;
      case ObjTerm::Kind::Gen:
        return x.n_->name <=> y.n_->name;
      case ObjTerm::Kind::Pair:
        if (auto c = x.n_->a <=> y.n_->a; c != 0) {
          return c;
        }
        return x.n_->b <=> y.n_->b;
      case ObjTerm::Kind::Tensor:
        if (auto c = x.n_->kids[0] <=> y.n_->kids[0]; c != 0) {
          return c;
        }
        return x.n_->kids[1] <=> y.n_->kids[1];
      case ObjTerm::Kind::Dual:
        return x.n_->kids[0] <=> y.n_->kids[0];
    }
    return std::strong_ordering::equal;
  }

  Int degree(ObjTerm const& x) {
    switch (x.kind()) {
      case ObjTerm::Kind::Gen:
        return 1;
      case ObjTerm::Kind::Tensor:
        return degree(x.left()) + degree(x.right());
      case ObjTerm::Kind::Dual:
        return -degree(x.inner());
      default:
        return 0;
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // Arrows
  ////////////////////////////////////////////////////////////////////////

  struct ArrowTerm::Node {
    Kind                   kind;
    std::vector<ObjTerm>   objs;
    std::vector<Elem>      labels;
    std::vector<ArrowTerm> args;
    ObjTerm                src, dst;
    std::size_t            hash  = 0;
    std::size_t            edges = 0;
  };

  ArrowTerm ArrowTerm::make(Kind                   k,
                            std::vector<ObjTerm>   objs,
                            std::vector<Elem>      labels,
                            std::vector<ArrowTerm> args,
                            ObjTerm                src,
                            ObjTerm                dst) {
    auto n  = std::make_shared<Node>();
    n->kind = k;
    std::size_t h = mix(17, static_cast<std::size_t>(k));
    for (auto const& o : objs) {
      h = mix(h, o.hash());
    }
    for (auto const& l : labels) {
      h = mix(h, hash_elem(l));
    }
    std::size_t e = 0;
    for (auto const& a : args) {
      h = mix(h, a.hash());
      e += a.edge_count();
    }
    switch (k) {
      case Kind::Id:
        e = 0;
        break;
      case Kind::Compose:
      case Kind::Inv:
      case Kind::WhiskL:
      case Kind::WhiskR:
        break;
      default:
        e = 1;
    }
    n->hash   = h;
    n->edges  = e;
    n->objs   = std::move(objs);
    n->labels = std::move(labels);
    n->args   = std::move(args);
    n->src    = std::move(src);
    n->dst    = std::move(dst);
    return ArrowTerm(std::move(n));
  }

  ArrowTerm ArrowTerm::assoc(ObjTerm const& x,
                             ObjTerm const& y,
                             ObjTerm const& z) {
    return make(Kind::Assoc, {x, y, z}, {}, {},
                ObjTerm::tensor(x, ObjTerm::tensor(y, z)),
                ObjTerm::tensor(ObjTerm::tensor(x, y), z));
  }

  ArrowTerm ArrowTerm::right_unit(ObjTerm const& x) {
    return make(Kind::RightUnit, {x}, {}, {},
                ObjTerm::tensor(x, ObjTerm::unit()), x);
  }

  ArrowTerm ArrowTerm::left_unit(ObjTerm const& x) {
    return make(Kind::LeftUnit, {x}, {}, {},
                ObjTerm::tensor(ObjTerm::unit(), x), x);
  }

  ArrowTerm ArrowTerm::sym(ObjTerm const& x, ObjTerm const& y) {
    return make(Kind::Sym, {x, y}, {}, {}, ObjTerm::tensor(x, y),
                ObjTerm::tensor(y, x));
  }

  ArrowTerm ArrowTerm::j(ObjTerm const& x) {
    return make(Kind::J, {x}, {}, {}, ObjTerm::unit(),
                ObjTerm::tensor(ObjTerm::dual(x), x));
  }

  ArrowTerm ArrowTerm::gamma(Elem a, Elem a2, Elem b, Elem sum) {
    auto src = ObjTerm::tensor(ObjTerm::pair(a, b), ObjTerm::pair(a2, b));
    auto dst = ObjTerm::pair(sum, b);
    return make(Kind::Gamma, {}, {a, a2, b, sum}, {}, src, dst);
  }

  ArrowTerm ArrowTerm::delta(Elem a, Elem b, Elem b2, Elem sum) {
    auto src = ObjTerm::tensor(ObjTerm::pair(a, b), ObjTerm::pair(a, b2));
    auto dst = ObjTerm::pair(a, sum);
    return make(Kind::Delta, {}, {a, b, b2, sum}, {}, src, dst);
  }

  ArrowTerm ArrowTerm::left_act(Elem a, Elem b, Elem h) {
    auto p = ObjTerm::pair(a, b);
    return make(Kind::LeftAct, {}, {a, b, h}, {}, p, p);
  }

  ArrowTerm ArrowTerm::right_act(Elem a, Elem h, Elem b) {
    auto p = ObjTerm::pair(a, b);
    return make(Kind::RightAct, {}, {a, h, b}, {}, p, p);
  }

  ArrowTerm ArrowTerm::id(ObjTerm const& x) {
    return make(Kind::Id, {x}, {}, {}, x, x);
  }

  ArrowTerm ArrowTerm::compose(ArrowTerm const& g, ArrowTerm const& f) {
    if (!(f.dst() == g.src())) {
      throw term_error("endpoint mismatch in comp(" + print(g) + ","
                       + print(f) + "): " + print(f.dst()) + " != "
                       + print(g.src()));
    }
    return make(Kind::Compose, {}, {}, {g, f}, f.src(), g.dst());
  }

  ArrowTerm ArrowTerm::inv(ArrowTerm const& p) {
    return make(Kind::Inv, {}, {}, {p}, p.dst(), p.src());
  }

  ArrowTerm ArrowTerm::whisk_l(ObjTerm const& x, ArrowTerm const& p) {
    return make(Kind::WhiskL, {x}, {}, {p}, ObjTerm::tensor(x, p.src()),
                ObjTerm::tensor(x, p.dst()));
  }

  ArrowTerm ArrowTerm::whisk_r(ArrowTerm const& p, ObjTerm const& x) {
    return make(Kind::WhiskR, {x}, {}, {p}, ObjTerm::tensor(p.src(), x),
                ObjTerm::tensor(p.dst(), x));
  }

  ArrowTerm::Kind ArrowTerm::kind() const noexcept {
    return n_->kind;
  }
  ObjTerm const& ArrowTerm::src() const noexcept {
    return n_->src;
  }
  ObjTerm const& ArrowTerm::dst() const noexcept {
    return n_->dst;
  }
  std::vector<ObjTerm> const& ArrowTerm::objs() const noexcept {
    return n_->objs;
  }
  std::vector<Elem> const& ArrowTerm::labels() const noexcept {
    return n_->labels;
  }
  std::vector<ArrowTerm> const& ArrowTerm::args() const noexcept {
    return n_->args;
  }
  std::size_t ArrowTerm::hash() const noexcept {
    return n_->hash;
  }
  std::size_t ArrowTerm::edge_count() const noexcept {
    return n_->edges;
  }

  bool operator==(ArrowTerm const& x, ArrowTerm const& y) noexcept {
    if (x.n_ == y.n_) {
      return true;
    }
    if (x.hash() != y.hash()) {
      return false;
    }
    return (x <=> y) == std::strong_ordering::equal;
  }

  std::strong_ordering operator<=>(ArrowTerm const& x,
                                   ArrowTerm const& y) noexcept {
    if (x.n_ == y.n_) {
      return std::strong_ordering::equal;
    }
    if (auto c = x.kind() <=> y.kind(); c != 0) {
      return c;
    }
    if (auto c = x.n_->objs <=> y.n_->objs; c != 0) {
      return c;
    }
    if (auto c = x.n_->labels <=> y.n_->labels; c != 0) {
      return c;
    }
    return x.n_->args <=> y.n_->args;
  }

  std::pair<ObjTerm, ObjTerm> endpoints(ArrowTerm const& p) {
    return {p.src(), p.dst()};
  }

  ////////////////////////////////////////////////////////////////////////
  // Printing
  ////////////////////////////////////////////////////////////////////////

  std::string print(ObjTerm const& x) {
    switch (x.kind()) {
      case ObjTerm::Kind::Unit:
        return "I";
      case ObjTerm::Kind::Gen:
        return "g:" + x.name();
      case ObjTerm::Kind::Pair:
        return "pair(" + elem_str(x.pair_a()) + "," + elem_str(x.pair_b())
               + ")";
      case ObjTerm::Kind::Tensor:
        return "ten(" + print(x.left()) + "," + print(x.right()) + ")";
      case ObjTerm::Kind::Dual:
        return "dual(" + print(x.inner()) + ")";
    }
    return "?";
  }

  std::string print(ArrowTerm const& p) {
    auto const& o = p.objs();
    auto const& l = p.labels();
    auto const& a = p.args();
    switch (p.kind()) {
      case ArrowTerm::Kind::Assoc:
        return "a(" + print(o[0]) + "," + print(o[1]) + "," + print(o[2])
               + ")";
      case ArrowTerm::Kind::RightUnit:
        return "r(" + print(o[0]) + ")";
      case ArrowTerm::Kind::LeftUnit:
        return "l(" + print(o[0]) + ")";
      case ArrowTerm::Kind::Sym:
        return "s(" + print(o[0]) + "," + print(o[1]) + ")";
      case ArrowTerm::Kind::J:
        return "j(" + print(o[0]) + ")";
      case ArrowTerm::Kind::Gamma:
        return "gam(" + elem_str(l[0]) + "," + elem_str(l[1]) + ","
               + elem_str(l[2]) + ")";
      case ArrowTerm::Kind::Delta:
        return "del(" + elem_str(l[0]) + "," + elem_str(l[1]) + ","
               + elem_str(l[2]) + ")";
      case ArrowTerm::Kind::LeftAct:
        return "lact(" + elem_str(l[0]) + "," + elem_str(l[1]) + ","
               + elem_str(l[2]) + ")";
      case ArrowTerm::Kind::RightAct:
        return "ract(" + elem_str(l[0]) + "," + elem_str(l[1]) + ","
               + elem_str(l[2]) + ")";
      case ArrowTerm::Kind::Id:
        return "id(" + print(o[0]) + ")";
      case ArrowTerm::Kind::Compose:
        return "comp(" + print(a[0]) + "," + print(a[1]) + ")";
      case ArrowTerm::Kind::Inv:
        return "inv(" + print(a[0]) + ")";
      case ArrowTerm::Kind::WhiskL:
        return "wl(" + print(o[0]) + "," + print(a[0]) + ")";
      case ArrowTerm::Kind::WhiskR:
        return "wr(" + print(a[0]) + "," + print(o[0]) + ")";
    }
    return "?";
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Parser {
     public:
      Parser(std::string_view text, LabelGroups const* groups)
          : s_(text), groups_(groups) {}

      ObjTerm obj() {
        skip();
        std::size_t at = pos_;
        if (peek() == 'I' && !ident_char(peek(1))) {
          ++pos_;
          return ObjTerm::unit();
        }
        if (peek() == 'g' && peek(1) == ':') {
          pos_ += 2;
          std::size_t b = pos_;
          while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ')'
                 && s_[pos_] != '(' && !std::isspace(uchar(s_[pos_]))) {
            ++pos_;
          }
          if (b == pos_) {
            throw syntax_error("empty generator name", b);
          }
          return ObjTerm::gen(std::string(s_.substr(b, pos_ - b)));
        }
        std::string id = ident();
        expect('(');
        if (id == "pair") {
          Elem a = elem();
          expect(',');
          Elem b = elem();
          expect(')');
          return ObjTerm::pair(a, b);
        }
        if (id == "ten") {
          ObjTerm l = obj();
          expect(',');
          ObjTerm r = obj();
          expect(')');
          return ObjTerm::tensor(l, r);
        }
        if (id == "dual") {
          ObjTerm x = obj();
          expect(')');
          return ObjTerm::dual(x);
        }
        throw syntax_error("unknown object constructor '" + id + "'", at);
      }

      ArrowTerm arrow() {
        skip();
        std::size_t at = pos_;
        std::string id = ident();
        expect('(');
        try {
          if (id == "a") {
            auto x = obj();
            expect(',');
            auto y = obj();
            expect(',');
            auto z = obj();
            expect(')');
            return ArrowTerm::assoc(x, y, z);
          }
          if (id == "r" || id == "l" || id == "j" || id == "id") {
            auto x = obj();
            expect(')');
            if (id == "r") {
              return ArrowTerm::right_unit(x);
            }
            if (id == "l") {
              return ArrowTerm::left_unit(x);
            }
            if (id == "j") {
              return ArrowTerm::j(x);
            }
            return ArrowTerm::id(x);
          }
          if (id == "s") {
            auto x = obj();
            expect(',');
            auto y = obj();
            expect(')');
            return ArrowTerm::sym(x, y);
          }
          if (id == "gam" || id == "del" || id == "lact" || id == "ract") {
            Elem u = elem();
            expect(',');
            Elem v = elem();
            expect(',');
            Elem w = elem();
            expect(')');
            if (id == "lact") {
              return ArrowTerm::left_act(u, v, w);
            }
            if (id == "ract") {
              return ArrowTerm::right_act(u, v, w);
            }
            if (groups_ == nullptr) {
              throw syntax_error(id + " needs the ingredient groups", at);
            }
            if (id == "gam") {
              return ArrowTerm::gamma(groups_->a.reduce(u),
                                      groups_->a.reduce(v),
                                      groups_->b.reduce(w),
                                      groups_->a.add(u, v));
            }
            return ArrowTerm::delta(groups_->a.reduce(u),
                                    groups_->b.reduce(v),
                                    groups_->b.reduce(w),
                                    groups_->b.add(v, w));
          }
          if (id == "comp") {
            auto g = arrow();
            expect(',');
            auto f = arrow();
            expect(')');
            return ArrowTerm::compose(g, f);
          }
          if (id == "inv") {
            auto p = arrow();
            expect(')');
            return ArrowTerm::inv(p);
          }
          if (id == "wl") {
            auto x = obj();
            expect(',');
            auto p = arrow();
            expect(')');
            return ArrowTerm::whisk_l(x, p);
          }
          if (id == "wr") {
            auto p = arrow();
            expect(',');
            auto x = obj();
            expect(')');
            return ArrowTerm::whisk_r(p, x);
          }
        } catch (dimension_error const& e) {
          throw syntax_error(e.what(), at);
        }
        throw syntax_error("unknown arrow constructor '" + id + "'", at);
      }

      void finish() {
        skip();
        if (pos_ != s_.size()) {
          throw syntax_error("trailing input", pos_);
        }
      }

     private:
      static unsigned char uchar(char c) {
        return static_cast<unsigned char>(c);
      }
      static bool ident_char(char c) {
        return std::isalnum(uchar(c)) || c == '_';
      }
      char peek(std::size_t k = 0) const {
        return pos_ + k < s_.size() ? s_[pos_ + k] : '\0';
      }
      void skip() {
        while (pos_ < s_.size() && std::isspace(uchar(s_[pos_]))) {
          ++pos_;
        }
      }
      void expect(char c) {
        skip();
        if (peek() != c) {
          throw syntax_error(std::string("expected '") + c + "'", pos_);
        }
        ++pos_;
      }
      std::string ident() {
        skip();
        std::size_t b = pos_;
        while (pos_ < s_.size() && std::isalpha(uchar(s_[pos_]))) {
          ++pos_;
        }
        if (b == pos_) {
          throw syntax_error("expected a constructor name", b);
        }
        return std::string(s_.substr(b, pos_ - b));
      }
      Int integer() {
        skip();
        std::size_t b   = pos_;
        bool        neg = false;
        if (peek() == '-') {
          neg = true;
          ++pos_;
        }
        if (!std::isdigit(uchar(peek()))) {
          throw syntax_error("expected an integer", b);
        }
        Int v = 0;
        while (std::isdigit(uchar(peek()))) {
          v = 10 * v + (s_[pos_++] - '0');
        }
        return neg ? -v : v;
      }
      Elem elem() {
        skip();
        if (peek() == '[') {
          ++pos_;
          Elem e;
          skip();
          if (peek() == ']') {
            ++pos_;
            return e;
          }
          while (true) {
            e.push_back(integer());
            skip();
            if (peek() == ']') {
              ++pos_;
              return e;
            }
            expect(',');
          }
        }
        return Elem{integer()};
      }

      std::string_view   s_;
      std::size_t        pos_ = 0;
      LabelGroups const* groups_;
    };

  }  // namespace

  ObjTerm parse_obj(std::string_view text) {
    Parser p(text, nullptr);
    auto   x = p.obj();
    p.finish();
    return x;
  }

  ArrowTerm parse_arrow(std::string_view text, LabelGroups const* groups) {
    Parser p(text, groups);
    auto   x = p.arrow();
    p.finish();
    return x;
  }

  ArrowTerm build(std::string const&              kind,
                  std::vector<std::string> const& args,
                  LabelGroups const*              groups) {
    std::string text = kind + "(";
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) {
        text += ",";
      }
      text += args[i];
    }
    text += ")";
    try {
      return parse_arrow(text, groups);
    } catch (syntax_error const& e) {
      throw term_error(std::string("cannot build ") + kind + ": " + e.what());
    }
  }

}  // namespace picring

namespace picring {

  ObjTerm subterm(ObjTerm const& x, std::string_view pos) {
    ObjTerm cur = x;
    for (char c : pos) {
      if (!cur.is_tensor()) {
        throw term_error("position " + std::string(pos) + " outside "
                         + print(x));
      }
      cur = c == '0' ? cur.left() : cur.right();
    }
    return cur;
  }

  ObjTerm replace_at(ObjTerm const&   x,
                     std::string_view pos,
                     ObjTerm const&   by) {
    if (pos.empty()) {
      return by;
    }
    if (!x.is_tensor()) {
      throw term_error("position outside " + print(x));
    }
    if (pos[0] == '0') {
      return ObjTerm::tensor(replace_at(x.left(), pos.substr(1), by),
                             x.right());
    }
    return ObjTerm::tensor(x.left(), replace_at(x.right(), pos.substr(1), by));
  }

  namespace {
    void collect_positions(ObjTerm const&            x,
                           std::string&              cur,
                           std::vector<std::string>& out) {
      out.push_back(cur);
      if (x.is_tensor()) {
        cur.push_back('0');
        collect_positions(x.left(), cur, out);
        cur.back() = '1';
        collect_positions(x.right(), cur, out);
        cur.pop_back();
      }
    }
  }  // namespace

  std::vector<std::string> tensor_positions(ObjTerm const& x) {
    std::vector<std::string> out;
    std::string              cur;
    collect_positions(x, cur, out);
    return out;
  }

  ArrowTerm whisker_into(ObjTerm const&   x,
                         std::string_view pos,
                         ArrowTerm const& base) {
    if (pos.empty()) {
      if (!(base.src() == x)) {
        throw term_error("edge " + print(base) + " does not leave "
                         + print(x));
      }
      return base;
    }
    if (!x.is_tensor()) {
      throw term_error("position outside " + print(x));
    }
    if (pos[0] == '0') {
      return ArrowTerm::whisk_r(whisker_into(x.left(), pos.substr(1), base),
                                x.right());
    }
    return ArrowTerm::whisk_l(x.left(),
                              whisker_into(x.right(), pos.substr(1), base));
  }

  std::vector<ArrowTerm> canonical_edges_at(ObjTerm const& x) {
    std::vector<ArrowTerm> out;
    for (auto const& p : tensor_positions(x)) {
      ObjTerm s = subterm(x, p);
      if (!s.is_tensor()) {
        continue;
      }
      ObjTerm const& l = s.left();
      ObjTerm const& r = s.right();
      if (r.is_tensor()) {
        out.push_back(whisker_into(x, p, ArrowTerm::assoc(l, r.left(), r.right())));
      }
      if (r.is_unit()) {
        out.push_back(whisker_into(x, p, ArrowTerm::right_unit(l)));
      }
      if (l.is_unit()) {
        out.push_back(whisker_into(x, p, ArrowTerm::left_unit(r)));
      }
      out.push_back(whisker_into(x, p, ArrowTerm::sym(l, r)));
    }
    return out;
  }

}  // namespace picring
