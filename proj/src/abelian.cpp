#include "picring/abelian.hpp"

#include <sstream>

namespace picring {

  FinAbGroup::FinAbGroup(std::vector<Int> orders) : orders_(std::move(orders)) {
    for (Int n : orders_) {
      if (n < 0) {
        throw std::invalid_argument("cyclic order must be non-negative");
      }
    }
  }

  bool FinAbGroup::finite() const noexcept {
    for (Int n : orders_) {
      if (n == 0) {
        return false;
      }
    }
    return true;
  }

  Int FinAbGroup::order() const {
    if (!finite()) {
      throw std::domain_error("order of an infinite group");
    }
    Int r = 1;
    for (Int n : orders_) {
      r *= n;
    }
    return r;
  }

  void FinAbGroup::check(Elem const& x) const {
    if (x.size() != rank()) {
      throw dimension_error("element of length " + std::to_string(x.size())
                            + " in group of rank "
                            + std::to_string(rank()));
    }
  }

  Elem FinAbGroup::gen(std::size_t i) const {
    Elem e = zero();
    e.at(i) = 1;
    return reduce(std::move(e));
  }

  Elem FinAbGroup::reduce(Elem x) const {
    check(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (orders_[i] > 0) {
        x[i] = mod(x[i], orders_[i]);
      }
    }
    return x;
  }

  bool FinAbGroup::is_reduced(Elem const& x) const {
    if (x.size() != rank()) {
      return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (orders_[i] > 0 && (x[i] < 0 || x[i] >= orders_[i])) {
        return false;
      }
    }
    return true;
  }

  Elem FinAbGroup::add(Elem const& x, Elem const& y) const {
    check(x);
    check(y);
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      r[i] = x[i] + y[i];
    }
    return reduce(std::move(r));
  }

  Elem FinAbGroup::sub(Elem const& x, Elem const& y) const {
    return add(x, neg(y));
  }

  Elem FinAbGroup::neg(Elem const& x) const {
    check(x);
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      r[i] = -x[i];
    }
    return reduce(std::move(r));
  }

  Elem FinAbGroup::scale(Int k, Elem const& x) const {
    check(x);
    Elem r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      r[i] = k * x[i];
    }
    return reduce(std::move(r));
  }

  bool FinAbGroup::is_zero(Elem const& x) const {
    check(x);
    for (std::size_t i = 0; i < x.size(); ++i) {
      if ((orders_[i] > 0 ? mod(x[i], orders_[i]) : x[i]) != 0) {
        return false;
      }
    }
    return true;
  }

  std::string FinAbGroup::describe() const {
    if (orders_.empty()) {
      return "0";
    }
    std::ostringstream os;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
      if (i) {
        os << "+";
      }
      if (orders_[i] == 0) {
        os << "Z";
      } else {
        os << "Z/" << orders_[i];
      }
    }
    return os.str();
  }

  std::vector<Elem> enumerate_elements(FinAbGroup const& g, Int bound) {
    if (bound < 0) {
      throw std::invalid_argument("negative enumeration bound");
    }
    std::vector<Int> lo, hi;
    for (Int n : g.orders()) {
      lo.push_back(n == 0 ? -bound : 0);
      hi.push_back(n == 0 ? bound : n - 1);
    }
    std::vector<Elem> out;
    Elem              cur = lo;
    while (true) {
      out.push_back(cur);
      std::size_t i = cur.size();
      while (i > 0) {
        --i;
        if (cur[i] < hi[i]) {
          ++cur[i];
          for (std::size_t k = i + 1; k < cur.size(); ++k) {
            cur[k] = lo[k];
          }
          break;
        }
        if (i == 0) {
          return out;
        }
      }
      if (cur.empty()) {
        return out;
      }
    }
  }

  std::string elem_str(Elem const& x) {
    if (x.size() == 1) {
      return std::to_string(x[0]);
    }
    std::string s = "[";
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (i) {
        s += ",";
      }
      s += std::to_string(x[i]);
    }
    return s + "]";
  }

  GroupHom GroupHom::identity(FinAbGroup const& g) {
    GroupHom f{g, g, {}};
    for (std::size_t i = 0; i < g.rank(); ++i) {
      f.images.push_back(g.gen(i));
    }
    return f;
  }

  GroupHom GroupHom::zero(FinAbGroup const& s, FinAbGroup const& t) {
    return GroupHom{s, t, std::vector<Elem>(s.rank(), t.zero())};
  }

  GroupHom GroupHom::negation(FinAbGroup const& g) {
    GroupHom f = identity(g);
    for (auto& e : f.images) {
      e = g.neg(e);
    }
    return f;
  }

  Elem GroupHom::operator()(Elem const& x) const {
    if (x.size() != src.rank() || images.size() != src.rank()) {
      throw dimension_error("homomorphism applied to element of wrong rank");
    }
    Elem r(dst.rank(), 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        r[j] += x[i] * images[i][j];
        if (dst.orders()[j] > 0) {
          r[j] = mod(r[j], dst.orders()[j]);
        }
      }
    }
    return dst.reduce(std::move(r));
  }

  GroupHom GroupHom::then(GroupHom const& next) const {
    GroupHom f{src, next.dst, {}};
    for (auto const& e : images) {
      f.images.push_back(next(e));
    }
    return f;
  }

  std::vector<std::string> validate_hom(GroupHom const& f) {
    std::vector<std::string> out;
    if (f.images.size() != f.src.rank()) {
      out.push_back("image count differs from source rank");
      return out;
    }
    for (std::size_t i = 0; i < f.images.size(); ++i) {
      if (!f.dst.is_reduced(f.images[i])) {
        out.push_back("image of generator " + std::to_string(i)
                      + " is not a reduced target element");
        continue;
      }
      Int n = f.src.orders()[i];
      if (n > 0 && !f.dst.is_zero(f.dst.scale(n, f.images[i]))) {
        out.push_back("generator " + std::to_string(i) + " of order "
                      + std::to_string(n) + " maps to "
                      + elem_str(f.images[i]) + " not killed by "
                      + std::to_string(n));
      }
    }
    return out;
  }

  std::vector<GroupHom> enumerate_homs(FinAbGroup const& s,
                                       FinAbGroup const& t,
                                       Int               bound) {
    auto                  targets = enumerate_elements(t, bound);
    std::vector<GroupHom> out;
    std::vector<std::size_t> idx(s.rank(), 0);
    while (true) {
      GroupHom f{s, t, {}};
      for (auto k : idx) {
        f.images.push_back(targets[k]);
      }
      if (validate_hom(f).empty()) {
        out.push_back(f);
      }
      std::size_t i = idx.size();
      while (i > 0) {
        --i;
        if (++idx[i] < targets.size()) {
          break;
        }
        idx[i] = 0;
        if (i == 0) {
          return out;
        }
      }
      if (idx.empty()) {
        return out;
      }
    }
  }

  BiadditivePairing BiadditivePairing::zero(FinAbGroup const& g,
                                            FinAbGroup const& h) {
    return BiadditivePairing{
        g, g, h, std::vector<std::vector<Elem>>(
                     g.rank(), std::vector<Elem>(g.rank(), h.zero())),
        true};
  }

  Elem BiadditivePairing::operator()(Elem const& x, Elem const& y) const {
    if (x.size() != left.rank() || y.size() != right.rank()) {
      throw dimension_error("pairing applied to element of wrong rank");
    }
    Elem r = target.zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) {
        continue;
      }
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) {
          continue;
        }
        r = target.add(r, target.scale(x[i] * y[j], values[i][j]));
      }
    }
    return r;
  }

  Elem pairing_eval(BiadditivePairing const& c, Elem const& x, Elem const& y) {
    return c(x, y);
  }

  std::vector<std::string> validate_pairing(BiadditivePairing const& c) {
    std::vector<std::string> out;
    if (c.values.size() != c.left.rank()) {
      out.push_back("pairing has wrong number of rows");
      return out;
    }
    for (auto const& row : c.values) {
      if (row.size() != c.right.rank()) {
        out.push_back("pairing has a row of wrong length");
        return out;
      }
    }
    for (std::size_t i = 0; i < c.left.rank(); ++i) {
      for (std::size_t j = 0; j < c.right.rank(); ++j) {
        Elem const& v = c.values[i][j];
        std::string at
            = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (!c.target.is_reduced(v)) {
          out.push_back("value at " + at + " is not reduced");
          continue;
        }
        for (Int n : {c.left.orders()[i], c.right.orders()[j]}) {
          if (n > 0 && !c.target.is_zero(c.target.scale(n, v))) {
            out.push_back("well-definedness at " + at + ": "
                          + std::to_string(n) + "*" + elem_str(v)
                          + " != 0");
          }
        }
      }
    }
    if (c.antisymmetric) {
      if (!(c.left == c.right)) {
        out.push_back("antisymmetry needs equal argument groups");
        return out;
      }
      for (std::size_t i = 0; i < c.left.rank(); ++i) {
        for (std::size_t j = i; j < c.left.rank(); ++j) {
          if (!c.target.is_zero(c.target.add(c.values[i][j],
                                             c.values[j][i]))) {
            out.push_back("antisymmetry at (" + std::to_string(i) + ","
                          + std::to_string(j) + ")");
          }
        }
      }
    }
    return out;
  }

}  // namespace picring
