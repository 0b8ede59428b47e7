// Group-valued tables indexed by tuples of group elements.  Entries can be
// stored explicitly or supplied by a rule, so tables over infinite groups
// (the integers of the unit 2-ring) stay total.

#ifndef PICRING_TABLE_HPP_
#define PICRING_TABLE_HPP_

#include <functional>
#include <map>
#include <vector>

#include "abelian.hpp"

namespace picring {

  class Table {
   public:
    using Key  = std::vector<Elem>;
    using Rule = std::function<Elem(Key const&)>;

    Table() = default;
    explicit Table(FinAbGroup target) : target_(std::move(target)) {}
    Table(FinAbGroup target, Rule rule)
        : target_(std::move(target)), rule_(std::move(rule)) {}

    FinAbGroup const& target() const noexcept {
      return target_;
    }

    Elem at(Key const& key) const {
      if (auto it = entries_.find(key); it != entries_.end()) {
        return it->second;
      }
      return rule_ ? target_.reduce(rule_(key)) : target_.zero();
    }
    Elem operator()(Elem const& a) const {
      return at({a});
    }
    Elem operator()(Elem const& a, Elem const& b) const {
      return at({a, b});
    }
    Elem operator()(Elem const& a, Elem const& b, Elem const& c) const {
      return at({a, b, c});
    }

    void set(Key key, Elem value) {
      entries_[std::move(key)] = target_.reduce(std::move(value));
    }
    bool has_rule() const noexcept {
      return static_cast<bool>(rule_);
    }
    std::map<Key, Elem> const& entries() const noexcept {
      return entries_;
    }

    // Copies every value on the given keys into explicit entries and drops
    // the rule, so the table can be serialised.
    void materialise(std::vector<Key> const& keys) {
      for (auto const& k : keys) {
        entries_[k] = at(k);
      }
      rule_ = nullptr;
    }

   private:
    FinAbGroup          target_;
    Rule                rule_;
    std::map<Key, Elem> entries_;
  };

  // Cartesian power of an element list, in lexicographic order.
  std::vector<Table::Key> tuples(std::vector<Elem> const& xs, std::size_t n);

}  // namespace picring

#endif  // PICRING_TABLE_HPP_
