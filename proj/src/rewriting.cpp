#include "picring/rewriting.hpp"

#include <algorithm>
#include <cstdlib>

namespace picring {

  std::size_t WordHash::operator()(Word const& w) const noexcept {
    std::size_t h = w.size();
    for (Letter x : w) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6)
           + (h >> 2);
    }
    return h;
  }

  Word free_reduce(Word const& w) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
      } else {
        out.push_back(x);
      }
    }
    return out;
  }

  Word cyclic_reduce(Word const& w) {
    Word        r = free_reduce(w);
    std::size_t i = 0, j = r.size();
    while (j - i > 1 && r[i] == -r[j - 1]) {
      ++i;
      --j;
    }
    return Word(r.begin() + i, r.begin() + j);
  }

  Word inverse(Word const& w) {
    Word r(w.rbegin(), w.rend());
    for (auto& x : r) {
      x = -x;
    }
    return r;
  }

  namespace {
    bool letter_less(Letter x, Letter y) {
      auto ax = std::abs(x), ay = std::abs(y);
      if (ax != ay) {
        return ax < ay;
      }
      return x > y;  // positive letter before its inverse
    }
  }  // namespace

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(),
                                        v.end(), letter_less);
  }

  std::vector<int> merge_deps(std::vector<int> const& a,
                              std::vector<int> const& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                   std::back_inserter(out));
    return out;
  }

  void Rewriter::add_relator(Word const& w, int origin) {
    Word r = free_reduce(w);
    if (r.empty()) {
      return;
    }
    std::size_t h = (r.size() + 1) / 2;
    Word        u(r.begin(), r.begin() + h);
    Word        v = inverse(Word(r.begin() + h, r.end()));
    complete_     = false;
    orient_and_add(std::move(u), std::move(v), {origin});
  }

  std::size_t Rewriter::rule_count() const noexcept {
    return index_.size();
  }

  Word Rewriter::reduce_deps(Word const& w, std::vector<int>& deps) const {
    Word out;
    out.reserve(w.size());
    Word in(w.rbegin(), w.rend());
    Word probe;
    while (!in.empty()) {
      Letter x = in.back();
      in.pop_back();
      if (!out.empty() && out.back() == -x) {
        out.pop_back();
        continue;
      }
      out.push_back(x);
      std::size_t top = std::min(longest_, out.size());
      for (std::size_t len = 1; len <= top; ++len) {
        probe.assign(out.end() - len, out.end());
        auto it = index_.find(probe);
        if (it == index_.end()) {
          continue;
        }
        Rule const& r = rules_[it->second];
        out.resize(out.size() - len);
        for (auto k = r.rhs.rbegin(); k != r.rhs.rend(); ++k) {
          in.push_back(*k);
        }
        deps = merge_deps(deps, r.deps);
        break;
      }
    }
    return out;
  }

  Word Rewriter::reduce(Word const& w, std::vector<int>* used) const {
    std::vector<int> deps;
    Word             r = reduce_deps(w, deps);
    if (used) {
      *used = merge_deps(*used, deps);
    }
    return r;
  }

  bool Rewriter::orient_and_add(Word u, Word v, std::vector<int> deps) {
    ++steps_;
    u = reduce_deps(u, deps);
    v = reduce_deps(v, deps);
    if (u == v) {
      return false;
    }
    if (shortlex_less(u, v)) {
      std::swap(u, v);
    }
    if (u.size() > lim_.max_len) {
      overflow_ = true;
      return false;
    }
    std::size_t id = rules_.size();
    // Rules whose left side contains u are no longer reduced; retire them
    // and feed their equations back in.
    std::vector<std::size_t> retired;
    for (auto const& [lhs, k] : index_) {
      if (lhs.size() < u.size()) {
        continue;
      }
      if (std::search(lhs.begin(), lhs.end(), u.begin(), u.end())
          != lhs.end()) {
        retired.push_back(k);
      }
    }
    rules_.push_back({u, v, std::move(deps), true});
    index_[u] = id;
    longest_  = std::max(longest_, u.size());
    std::sort(retired.begin(), retired.end());
    for (auto k : retired) {
      rules_[k].alive = false;
      index_.erase(rules_[k].lhs);
    }
    for (auto k : retired) {
      Rule r = rules_[k];
      orient_and_add(r.lhs, r.rhs, r.deps);
    }
    return true;
  }

  void Rewriter::overlaps(std::size_t i, std::size_t j) {
    // suffix of lhs_i equal to a prefix of lhs_j
    Word const l1 = rules_[i].lhs;
    Word const l2 = rules_[j].lhs;
    std::size_t m  = std::min(l1.size(), l2.size());
    for (std::size_t k = 1; k < m; ++k) {
      if (!std::equal(l1.end() - k, l1.end(), l2.begin())) {
        continue;
      }
      if (!rules_[i].alive || !rules_[j].alive) {
        return;
      }
      Word w1 = rules_[i].rhs;
      w1.insert(w1.end(), l2.begin() + k, l2.end());
      Word w2(l1.begin(), l1.end() - k);
      w2.insert(w2.end(), rules_[j].rhs.begin(), rules_[j].rhs.end());
      orient_and_add(std::move(w1), std::move(w2),
                     merge_deps(rules_[i].deps, rules_[j].deps));
    }
  }

  bool Rewriter::complete() {
    std::size_t k = 0;
    while (k < rules_.size()) {
      if (rules_[k].alive) {
        // overlaps with the implicit cancellation rules x x^-1 -> 1
        Rule r = rules_[k];
        Word a = r.rhs;
        a.push_back(-r.lhs.back());
        orient_and_add(std::move(a), Word(r.lhs.begin(), r.lhs.end() - 1),
                       r.deps);
        Word b{-r.lhs.front()};
        b.insert(b.end(), r.rhs.begin(), r.rhs.end());
        orient_and_add(std::move(b), Word(r.lhs.begin() + 1, r.lhs.end()),
                       r.deps);
        for (std::size_t i = 0; i <= k && rules_[k].alive; ++i) {
          if (!rules_[i].alive) {
            continue;
          }
          overlaps(i, k);
          if (i != k && rules_[k].alive && rules_[i].alive) {
            overlaps(k, i);
          }
        }
      }
      ++k;
      if (index_.size() > lim_.max_rules || steps_ > lim_.max_steps) {
        complete_ = false;
        return false;
      }
    }
    complete_ = !overflow_;
    return complete_;
  }

}  // namespace picring
