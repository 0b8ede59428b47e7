// Words in a free group on numbered generators and a bounded Knuth-Bendix
// completion over shortlex, used for the residual fundamental-group
// relators of a presentation complex.

#ifndef PICRING_REWRITING_HPP_
#define PICRING_REWRITING_HPP_

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace picring {

  // Letters are non-zero; -g is the inverse of generator g.
  using Letter = std::int32_t;
  using Word   = std::vector<Letter>;

  struct WordHash {
    std::size_t operator()(Word const& w) const noexcept;
  };

  Word free_reduce(Word const& w);
  Word cyclic_reduce(Word const& w);
  Word inverse(Word const& w);
  bool shortlex_less(Word const& u, Word const& v);

  class Rewriter {
   public:
    struct Limits {
      std::size_t max_rules = 2000;
      std::size_t max_len   = 30;
      std::size_t max_steps = 100000;  // critical pairs examined
    };

    Rewriter() = default;
    explicit Rewriter(Limits lim) : lim_(lim) {}

    // Adds the relation w = 1, tagged with a caller-side origin id.
    void add_relator(Word const& w, int origin);

    // Runs completion; returns true iff it finished within the limits.
    bool complete();
    bool is_complete() const noexcept {
      return complete_;
    }
    std::size_t rule_count() const noexcept;
    std::size_t steps() const noexcept {
      return steps_;
    }

    // Normal form with respect to the current rules (free cancellation is
    // built in).  Origins of every rule applied are appended to `used`.
    Word reduce(Word const& w, std::vector<int>* used = nullptr) const;

   private:
    struct Rule {
      Word             lhs, rhs;
      std::vector<int> deps;
      bool             alive = true;
    };

    bool orient_and_add(Word u, Word v, std::vector<int> deps);
    void overlaps(std::size_t i, std::size_t j);
    Word reduce_deps(Word const& w, std::vector<int>& deps) const;

    Limits                                 lim_;
    std::vector<Rule>                      rules_;
    std::unordered_map<Word, std::size_t, WordHash> index_;
    std::size_t                            longest_  = 0;
    std::size_t                            steps_    = 0;
    bool                                   complete_ = false;
    bool                                   overflow_ = false;
  };

  std::vector<int> merge_deps(std::vector<int> const& a,
                              std::vector<int> const& b);

}  // namespace picring

#endif  // PICRING_REWRITING_HPP_
