// Presentations of the free symmetric Picard category on one generator and
// of the tensor product of two skeletal models, and a bounded solver for
// their word problems.
//
// A presentation is realised inside a finite universe of vertices (object
// terms up to a depth).  Edges are whiskered generator edges between
// universe vertices and relators are closed edge paths, one per relation
// instance.  Two parallel paths are identified when their words agree in
// the fundamental groupoid of the resulting 2-complex.  The solver
// contracts a spanning forest, eliminates generators that occur once in a
// relator, and runs a bounded Knuth-Bendix completion on what is left in
// each component.  A failure to identify is not a proof of inequality.

#ifndef PICRING_PRESENTATIONS_HPP_
#define PICRING_PRESENTATIONS_HPP_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "models.hpp"
#include "rewriting.hpp"
#include "terms.hpp"

namespace picring {

  struct SchemaInfo {
    std::string id;
    std::string text;
  };

  struct Presentation {
    enum class Kind { Unit, Tensor };

    Kind                       kind = Kind::Unit;
    std::vector<std::string>   generators;
    std::optional<PicardModel> A;
    std::optional<PicardModel> B;
    std::vector<SchemaInfo>    edge_schemas;
    std::vector<SchemaInfo>    relation_schemas;

    bool has_relation(std::string const& id) const;
    bool has_edge(std::string const& id) const;
  };

  Presentation build_unit_presentation();
  Presentation build_tensor_presentation(PicardModel const& A,
                                         PicardModel const& B);

  struct Budget {
    int         depth      = 3;
    std::size_t max_edges  = 4;
    std::size_t max_steps  = 100000;
    int         max_leaves = 0;  // 0: no limit
    std::size_t vertex_cap = 200000;
    std::size_t kb_relator = 4;  // longest residual relator fed to completion
    std::size_t kb_rules   = 2000;
  };

  class budget_exceeded : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Budget used when none is given: depth 3 for the unit presentation,
  // depth 3 with four leaves for tensor presentations.
  Budget default_budget(Presentation const& p);

  struct RelationInstance {
    std::string          schema_id;
    std::vector<Binding> bindings;
    ArrowTerm            lhs;
    ArrowTerm            rhs;
  };

  // The finite 2-complex of a presentation within a budget.
  class Complex {
   public:
    enum class EdgeKind : std::uint8_t {
      Assoc,
      RightUnit,
      LeftUnit,
      Sym,
      J,
      Gamma,
      Delta,
      LeftAct,
      RightAct
    };

    struct Edge {
      int         src;
      int         dst;
      std::string pos;
      EdgeKind    kind;
      int         param;  // vertex of X for j, automorphism index for actions
    };

    struct Relator {
      std::uint16_t    schema;
      int              vertex;
      std::string      pos;
      Word             lhs;  // letters edge id + 1, negative when reversed
      Word             rhs;
    };

    Complex(Presentation const& p, Budget const& b);

    Presentation const& presentation() const noexcept {
      return pres_;
    }
    Budget const& budget() const noexcept {
      return budget_;
    }

    std::size_t vertex_count() const noexcept {
      return vertices_.size();
    }
    ObjTerm const& vertex(int v) const {
      return vertices_[v];
    }
    std::optional<int> find_vertex(ObjTerm const& x) const;

    std::vector<Edge> const& edges() const noexcept {
      return edges_;
    }
    std::vector<Relator> const& relators() const noexcept {
      return relators_;
    }
    std::vector<std::vector<int>> const& out_edges() const noexcept {
      return out_;
    }
    std::vector<std::vector<int>> const& in_edges() const noexcept {
      return in_;
    }
    std::string const& schema_name(std::uint16_t s) const {
      return schema_names_[s];
    }

    std::optional<int> find_edge(int src, std::string const& pos, EdgeKind k,
                                 int param) const;

    // The base arrow of an edge (at its subterm) and its whiskered form.
    ArrowTerm base_arrow(int e) const;
    ArrowTerm arrow(int e) const;

    // Relator as a word (lhs then inverse rhs), letters are edge id + 1.
    Word word(Relator const& r) const;
    RelationInstance instance(Relator const& r) const;

    // Automorphism group elements used as action parameters.
    std::vector<Elem> const& autos_a() const noexcept {
      return autos_a_;
    }
    std::vector<Elem> const& autos_b() const noexcept {
      return autos_b_;
    }

   private:
    struct EdgeKey {
      int         src;
      std::string pos;
      EdgeKind    kind;
      int         param;
      bool operator==(EdgeKey const&) const = default;
    };
    struct EdgeKeyHash {
      std::size_t operator()(EdgeKey const& k) const noexcept;
    };

    void build_vertices();
    void build_edges();
    void build_relators();
    void add_edge_family(int v, std::string const& pos);
    std::optional<ObjTerm> edge_target(ObjTerm const& s, EdgeKind k,
                                       int param) const;
    int  edge_at(int v, std::string const& pos, EdgeKind k, int param) const;
    void relate(std::string const& schema, int v, std::string const& pos,
                Word lhs, Word rhs);
    friend class PathBuilder;

    Presentation                                   pres_;
    Budget                                         budget_;
    std::vector<ObjTerm>                           vertices_;
    std::unordered_map<ObjTerm, int, ObjTermHash>  vindex_;
    std::vector<Edge>                              edges_;
    std::vector<std::vector<int>>                  out_;
    std::vector<std::vector<int>>                  in_;
    std::unordered_map<EdgeKey, int, EdgeKeyHash>  eindex_;
    std::vector<Relator>                           relators_;
    std::vector<std::string>                       schema_names_;
    std::map<std::string, std::uint16_t>           schema_ids_;
    std::vector<Elem>                              elems_a_, elems_b_;
    std::vector<Elem>                              autos_a_, autos_b_;
  };

  // Every relation instance of the presentation within the budget, in a
  // deterministic order.  The callback form avoids materialising them.
  void instantiate_relations(
      Presentation const& p, Budget const& b,
      std::function<void(RelationInstance const&)> const& sink);
  std::vector<RelationInstance> instantiate_relations(Presentation const& p,
                                                      Budget const&       b);

  struct Verdict {
    enum class Kind { Equal, NotIdentified };
    Kind                          kind = Kind::NotIdentified;
    std::vector<RelationInstance> witness;
    std::vector<int>              relator_ids;
    std::string                   reason;

    bool equal() const noexcept {
      return kind == Kind::Equal;
    }
  };

  class Session {
   public:
    Session(Presentation const& p, Budget const& b);
    // Restricts the relators to the given ids (used to replay witnesses).
    Session(Presentation const& p, Budget const& b,
            std::vector<int> const& only);

    Complex const& complex() const noexcept {
      return *cx_;
    }

    // Edge-id path of an arrow term (letters edge id + 1, negative for
    // inverses), or nullopt with a reason when it leaves the universe.
    std::optional<Word> path_word(ArrowTerm const& f,
                                  std::string*     why = nullptr) const;

    // Normal form of an edge path; origins of every relator used are
    // added to `deps`.
    Word normal_form(Word const& path, std::vector<int>* deps = nullptr);

    Verdict decide(ArrowTerm const& f, ArrowTerm const& g);

    int component(int vertex) const {
      return comp_[vertex];
    }
    std::size_t component_count() const noexcept {
      return comp_roots_.size();
    }
    bool kb_complete(int component);

    std::size_t substituted() const noexcept {
      return subst_.size();
    }

   private:
    Session(std::shared_ptr<Complex> cx, std::vector<int> const& only);
    void   init(std::vector<int> const* only);
    // Retries a failed comparison with only the relators that stay near
    // the two paths, where completion is cheap.
    std::optional<Verdict> decide_locally(Word const& wf, Word const& wg,
                                          ArrowTerm const& f,
                                          ArrowTerm const& g);
    Word   expand(Word const& w);
    Word   expand_letter(Letter x);
    void   collect_deps(Letter x, std::vector<char>& seen,
                        std::vector<int>& out) const;
    Rewriter& rewriter(int component);

    std::shared_ptr<Complex>              cx_;
    std::vector<int>                      comp_;
    std::vector<int>                      comp_roots_;
    std::vector<char>                     tree_;
    std::unordered_map<int, Word>         subst_;      // generator -> word
    std::unordered_map<int, int>          subst_from_; // generator -> relator
    std::vector<std::vector<int>>         residual_;   // per component
    std::vector<Word>                     residual_words_;
    std::vector<int>                      residual_origin_;
    std::map<int, std::unique_ptr<Rewriter>> kb_;
    std::vector<char>                     active_;     // relators in use
    std::set<int>                         partial_;    // long relators left out
    bool                                  local_ = false;
  };

  Verdict decide_equal(Session& s, ArrowTerm const& f, ArrowTerm const& g);
  Verdict decide_equal(Presentation const& p, ArrowTerm const& f,
                       ArrowTerm const& g, Budget const& b);

  // Re-decides the query using only the relators cited by the verdict.
  bool replay(Presentation const& p, Budget const& b, ArrowTerm const& f,
              ArrowTerm const& g, Verdict const& v);

  struct SignValue {
    Int degree = 0;
    Int sign   = 0;
    bool operator==(SignValue const&) const = default;
  };

  // Evaluation into (Z, Z/2, mn mod 2): symmetries count the product of
  // the degrees of their arguments, every other generator counts 0.
  SignValue sign_eval(ArrowTerm const& f);

  // Reduced edge paths (no edge followed by its own inverse) of at most
  // max_edges edges from X to Y, as right-nested composites, in depth-first
  // order by edge id.  `keep` restricts the intermediate vertices.
  // Word-level enumeration from vertex X; the sink receives the final
  // vertex and the path.
  void enumerate_paths(Complex const& c, int X, std::size_t max_edges,
                       std::function<bool(int)> const&              keep,
                       std::function<void(int, Word const&)> const& sink);

  // The arrow term of an edge path starting at vertex `start`.
  ArrowTerm path_arrow(Complex const& c, int start, Word const& w);

  std::vector<ArrowTerm> enumerate_arrow_terms(
      Session const& s, ObjTerm const& X, ObjTerm const& Y,
      std::size_t max_edges,
      std::function<bool(ObjTerm const&)> const& keep = {});
  std::vector<ArrowTerm> enumerate_arrow_terms(Presentation const& p,
                                               ObjTerm const&      X,
                                               ObjTerm const&      Y,
                                               std::size_t max_edges,
                                               Budget const&       b);

  // Classes of enumerate_arrow_terms under the solver; each class is
  // listed by enumeration index and its representative is the first.
  std::vector<std::vector<ArrowTerm>> hom_classes(Session&       s,
                                                  ObjTerm const& X,
                                                  ObjTerm const& Y,
                                                  std::size_t    max_edges);

}  // namespace picring

#endif  // PICRING_PRESENTATIONS_HPP_
