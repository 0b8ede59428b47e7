// Formal object and arrow terms of the free presentations: objects are
// words in I, generators, base pairs, tensor and dual; arrows are built from
// the canonical edges, j, the distributivity edges gamma/delta, the action
// edges of ingredient arrows, and the groupoid operations plus whiskering.

#ifndef PICRING_TERMS_HPP_
#define PICRING_TERMS_HPP_

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "abelian.hpp"

namespace picring {

  class term_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class syntax_error : public std::invalid_argument {
   public:
    syntax_error(std::string const& msg, std::size_t pos)
        : std::invalid_argument(msg + " at position " + std::to_string(pos)),
          position(pos) {}
    std::size_t position;
  };

  class ObjTerm {
   public:
    enum class Kind : std::uint8_t { Unit, Gen, Pair, Tensor, Dual };

    ObjTerm();  // the unit I

    static ObjTerm unit();
    static ObjTerm gen(std::string name);
    static ObjTerm pair(Elem a, Elem b);
    static ObjTerm tensor(ObjTerm const& l, ObjTerm const& r);
    static ObjTerm dual(ObjTerm const& x);

    Kind               kind() const noexcept;
    std::string const& name() const;
    Elem const&        pair_a() const;
    Elem const&        pair_b() const;
    ObjTerm const&     left() const;
    ObjTerm const&     right() const;
    ObjTerm const&     inner() const;

    std::size_t hash() const noexcept;
    int         depth() const noexcept;
    std::size_t size() const noexcept;  // node count

    bool is_unit() const noexcept {
      return kind() == Kind::Unit;
    }
    bool is_tensor() const noexcept {
      return kind() == Kind::Tensor;
    }

    friend bool operator==(ObjTerm const& x, ObjTerm const& y) noexcept;
    friend std::strong_ordering operator<=>(ObjTerm const& x,
                                            ObjTerm const& y) noexcept;

    struct Node;

   private:
    explicit ObjTerm(std::shared_ptr<Node const> n) : n_(std::move(n)) {}
    std::shared_ptr<Node const> n_;
  };

  struct ObjTermHash {
    std::size_t operator()(ObjTerm const& x) const noexcept {
      return x.hash();
    }
  };

  // Number of generator leaves, counted negatively under an odd number of
  // duals.  Base pairs and I count 0.
  Int degree(ObjTerm const& x);

  class ArrowTerm {
   public:
    enum class Kind : std::uint8_t {
      Assoc,
      RightUnit,
      LeftUnit,
      Sym,
      J,
      Gamma,
      Delta,
      LeftAct,
      RightAct,
      Id,
      Compose,
      Inv,
      WhiskL,
      WhiskR
    };

    static ArrowTerm assoc(ObjTerm const& x, ObjTerm const& y, ObjTerm const& z);
    static ArrowTerm right_unit(ObjTerm const& x);
    static ArrowTerm left_unit(ObjTerm const& x);
    static ArrowTerm sym(ObjTerm const& x, ObjTerm const& y);
    static ArrowTerm j(ObjTerm const& x);
    // gamma_{a,a',b}: (a.b) (a'.b) -> (a+a').b; the sum label is supplied
    // by the caller since terms do not know the ingredient groups.
    static ArrowTerm gamma(Elem a, Elem a2, Elem b, Elem sum);
    // delta_{a,b,b'}: (a.b) (a.b') -> a.(b+b')
    static ArrowTerm delta(Elem a, Elem b, Elem b2, Elem sum);
    // a (x) f for the automorphism h of b, and f (x) b for h at a.
    static ArrowTerm left_act(Elem a, Elem b, Elem h);
    static ArrowTerm right_act(Elem a, Elem h, Elem b);
    static ArrowTerm id(ObjTerm const& x);
    // g after f; throws term_error unless dst(f) == src(g).
    static ArrowTerm compose(ArrowTerm const& g, ArrowTerm const& f);
    static ArrowTerm inv(ArrowTerm const& p);
    static ArrowTerm whisk_l(ObjTerm const& x, ArrowTerm const& p);
    static ArrowTerm whisk_r(ArrowTerm const& p, ObjTerm const& x);

    Kind           kind() const noexcept;
    ObjTerm const& src() const noexcept;
    ObjTerm const& dst() const noexcept;
    // Object arguments (X, Y, Z as applicable, or the whiskering object).
    std::vector<ObjTerm> const& objs() const noexcept;
    // Ingredient labels (a, a', b, ...) for gamma/delta/action edges.
    std::vector<Elem> const& labels() const noexcept;
    // Sub-arrows: (g, f) for Compose, (p) for Inv and whiskerings.
    std::vector<ArrowTerm> const& args() const noexcept;

    std::size_t hash() const noexcept;
    // Generator edges, inverses and whiskered edges counting once each.
    std::size_t edge_count() const noexcept;

    friend bool operator==(ArrowTerm const& x, ArrowTerm const& y) noexcept;
    friend std::strong_ordering operator<=>(ArrowTerm const& x,
                                            ArrowTerm const& y) noexcept;

    struct Node;

   private:
    explicit ArrowTerm(std::shared_ptr<Node const> n) : n_(std::move(n)) {}
    static ArrowTerm make(Kind               k,
                          std::vector<ObjTerm> objs,
                          std::vector<Elem>  labels,
                          std::vector<ArrowTerm> args,
                          ObjTerm            src,
                          ObjTerm            dst);
    std::shared_ptr<Node const> n_;
  };

  std::pair<ObjTerm, ObjTerm> endpoints(ArrowTerm const& p);

  // Label arithmetic for gamma/delta when parsing: the two ingredient
  // object groups.
  struct LabelGroups {
    FinAbGroup a;
    FinAbGroup b;
  };

  // Positions address subterms reachable through tensors: a string over
  // {0,1}, 0 for the left factor.  The empty string is the root.
  ObjTerm subterm(ObjTerm const& x, std::string_view pos);
  ObjTerm replace_at(ObjTerm const& x, std::string_view pos, ObjTerm const& by);
  std::vector<std::string> tensor_positions(ObjTerm const& x);

  // The arrow acting as `base` on the subterm of x at pos and as the
  // identity elsewhere, spelled with whiskerings.
  ArrowTerm whisker_into(ObjTerm const& x, std::string_view pos,
                         ArrowTerm const& base);

  // All whiskered a, r, l, s edges leaving x.
  std::vector<ArrowTerm> canonical_edges_at(ObjTerm const& x);

  std::string print(ObjTerm const& x);
  std::string print(ArrowTerm const& p);

  ObjTerm   parse_obj(std::string_view text);
  ArrowTerm parse_arrow(std::string_view   text,
                        LabelGroups const* groups = nullptr);

  // Generic entry point: builds an arrow by constructor name and textual
  // arguments, as the parser does.
  ArrowTerm build(std::string const&       kind,
                  std::vector<std::string> const& args,
                  LabelGroups const*       groups = nullptr);

}  // namespace picring

#endif  // PICRING_TERMS_HPP_
