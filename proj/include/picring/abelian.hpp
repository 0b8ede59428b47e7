// Finitely generated abelian groups given as products of cyclic factors,
// together with homomorphisms and biadditive pairings between them.

#ifndef PICRING_ABELIAN_HPP_
#define PICRING_ABELIAN_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace picring {

  using Int  = std::int64_t;
  using Elem = std::vector<Int>;

  // Euclidean remainder, always in [0, n) for n > 0.
  inline Int mod(Int x, Int n) {
    Int r = x % n;
    return r < 0 ? r + n : r;
  }

  class dimension_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Z/n_1 x ... x Z/n_k; an order of 0 stands for an infinite cyclic factor.
  class FinAbGroup {
   public:
    FinAbGroup() = default;
    explicit FinAbGroup(std::vector<Int> orders);

    static FinAbGroup trivial() {
      return FinAbGroup();
    }
    static FinAbGroup cyclic(Int n) {
      return FinAbGroup({n});
    }

    std::vector<Int> const& orders() const noexcept {
      return orders_;
    }
    std::size_t rank() const noexcept {
      return orders_.size();
    }
    bool finite() const noexcept;
    // Number of elements; throws for infinite groups.
    Int order() const;

    Elem zero() const {
      return Elem(rank(), 0);
    }
    Elem gen(std::size_t i) const;
    Elem reduce(Elem x) const;
    bool is_reduced(Elem const& x) const;
    Elem add(Elem const& x, Elem const& y) const;
    Elem sub(Elem const& x, Elem const& y) const;
    Elem neg(Elem const& x) const;
    Elem scale(Int k, Elem const& x) const;
    bool is_zero(Elem const& x) const;

    // Builds an element from raw coordinates, reducing them.
    Elem make(std::vector<Int> coords) const {
      return reduce(std::move(coords));
    }

    std::string describe() const;

    bool operator==(FinAbGroup const&) const = default;

   private:
    void check(Elem const& x) const;
    std::vector<Int> orders_;
  };

  // All elements (finite factors in full, infinite factors in [-bound,
  // bound]), lexicographic in the coordinates.
  std::vector<Elem> enumerate_elements(FinAbGroup const& g, Int bound);

  std::string elem_str(Elem const& x);

  // Homomorphism given by the images of the generators of the source.
  struct GroupHom {
    FinAbGroup        src;
    FinAbGroup        dst;
    std::vector<Elem> images;

    static GroupHom identity(FinAbGroup const& g);
    static GroupHom zero(FinAbGroup const& s, FinAbGroup const& t);
    static GroupHom negation(FinAbGroup const& g);

    Elem operator()(Elem const& x) const;
    GroupHom then(GroupHom const& next) const;
    bool operator==(GroupHom const&) const = default;
  };

  // Empty iff every generator image is killed by the order of its factor.
  std::vector<std::string> validate_hom(GroupHom const& f);

  // All homomorphisms between finite groups, generator images enumerated
  // lexicographically.
  std::vector<GroupHom> enumerate_homs(FinAbGroup const& s,
                                       FinAbGroup const& t,
                                       Int               bound = 0);

  // Pairing G x G' -> H, extended bilinearly from values on generators.
  struct BiadditivePairing {
    FinAbGroup                     left;
    FinAbGroup                     right;
    FinAbGroup                     target;
    std::vector<std::vector<Elem>> values;
    bool                           antisymmetric = true;

    static BiadditivePairing zero(FinAbGroup const& g, FinAbGroup const& h);

    Elem operator()(Elem const& x, Elem const& y) const;
    bool operator==(BiadditivePairing const&) const = default;
  };

  Elem pairing_eval(BiadditivePairing const& c, Elem const& x, Elem const& y);

  // Lists violated well-definedness and (if flagged) antisymmetry
  // constraints, checked on generators.
  std::vector<std::string> validate_pairing(BiadditivePairing const& c);

}  // namespace picring

#endif  // PICRING_ABELIAN_HPP_
