// Validator reports: a list of failed axiom instances plus bookkeeping.

#ifndef PICRING_REPORT_HPP_
#define PICRING_REPORT_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "abelian.hpp"

namespace picring {

  using Binding = std::pair<std::string, std::string>;

  struct Failure {
    std::string          axiom;
    std::vector<Binding> instance;
    std::string          detail;

    std::string label() const;
    bool operator==(Failure const&) const = default;
  };

  struct Report {
    std::vector<Failure> failures;
    std::size_t          checked = 0;
    Int                  bound   = 0;
    std::vector<std::string> notes;

    bool ok() const noexcept {
      return failures.empty();
    }
    void fail(std::string axiom,
              std::vector<Binding> instance,
              std::string detail = {}) {
      failures.push_back({std::move(axiom), std::move(instance),
                          std::move(detail)});
    }
    void absorb(Report const& other, std::string const& prefix = {});
  };

  // Convenience for building bindings from group elements.
  inline Binding arg(std::string name, Elem const& x) {
    return {std::move(name), elem_str(x)};
  }

}  // namespace picring

#endif  // PICRING_REPORT_HPP_
