#include "picring/report.hpp"
#include "picring/table.hpp"

namespace picring {

  std::string Failure::label() const {
    std::string s = axiom + "[";
    for (std::size_t i = 0; i < instance.size(); ++i) {
      if (i) {
        s += " ";
      }
      s += instance[i].first + "=" + instance[i].second;
    }
    return s + "]";
  }

  void Report::absorb(Report const& other, std::string const& prefix) {
    for (auto f : other.failures) {
      f.axiom = prefix + f.axiom;
      failures.push_back(std::move(f));
    }
    checked += other.checked;
    for (auto const& n : other.notes) {
      notes.push_back(n);
    }
  }

  std::vector<Table::Key> tuples(std::vector<Elem> const& xs, std::size_t n) {
    std::vector<Table::Key> out;
    if (xs.empty() && n > 0) {
      return out;
    }
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      Table::Key k;
      k.reserve(n);
      for (auto i : idx) {
        k.push_back(xs[i]);
      }
      out.push_back(std::move(k));
      std::size_t i = n;
      while (i > 0) {
        --i;
        if (++idx[i] < xs.size()) {
          break;
        }
        idx[i] = 0;
        if (i == 0) {
          return out;
        }
      }
      if (n == 0) {
        return out;
      }
    }
  }

}  // namespace picring
