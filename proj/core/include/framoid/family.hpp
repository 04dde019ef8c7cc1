// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_FAMILY_HPP_
#define FRAMOID_FAMILY_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "framoid/diagram.hpp"
#include "framoid/symbol.hpp"

namespace framoid {

  //! The diagram monoids that can be enumerated.
  enum class FamilyName {
    Cdn,       //!< abacus monoid, d^n beaded identities
    Sdn,       //!< framed permutations
    Pn,        //!< set partitions of n (generated by all e_{i,j})
    Pdn,       //!< beaded set partitions
    Jn,        //!< Jones monoid
    Jdn,       //!< abacus Jones monoid
    Brn,       //!< Brauer monoid
    Brdn,      //!< abacus Brauer monoid
    Rn,        //!< rook monoid
    Rdn,       //!< abacus rook monoid, beads lost on free endpoints
    RPrimeDn,  //!< abacus rook monoid, beads kept on free endpoints
    tSn,       //!< tied permutations
    tJn,       //!< tied Jones monoid
    tBrn,      //!< tied Brauer monoid
    tRn,       //!< tied rook monoid
    tRPrimeN   //!< tied rook monoid generated by s, e, r, q
  };

  //! Every family, in declaration order.
  std::vector<FamilyName> const& all_families();

  //! `Jdn` and so on.
  std::string to_string(FamilyName f);

  //! Case-insensitive inverse of to_string; throws InvalidSymbol.
  FamilyName family_from_string(std::string_view name);

  //! A family together with its parameters d and n.
  //!
  //! Families without beads (Pn, Jn, Brn, Rn) and the tied families are
  //! always built with d = 1, whatever value is passed.
  class MonoidFamily {
   public:
    //! Throws InvalidSymbol unless n >= 1 and d >= 1.
    MonoidFamily(FamilyName name, int d, int n);

    FamilyName name() const noexcept {
      return _name;
    }
    int modulus() const noexcept {
      return _d;
    }
    int degree() const noexcept {
      return _n;
    }

    //! The family lives among tied diagrams.
    bool tied() const noexcept;
    //! The family has bead generators.
    bool beaded() const noexcept;
    ComposeRules rules() const noexcept;

    //! The generator symbols, in a fixed order.
    std::vector<GenSymbol> generator_symbols() const;

    //! Whether \p sym belongs to the family's symbol alphabet (generators
    //! and the symbols derived from them, such as `p_i` in tR'_n).
    bool accepts(GenSymbol const& sym) const;

    std::string to_string() const;

    bool operator==(MonoidFamily const&) const = default;

   private:
    FamilyName _name;
    int        _d;
    int        _n;
  };

  //! The diagram of \p sym in the ambient of \p fam; throws InvalidSymbol.
  Diagram generator(MonoidFamily const& fam, GenSymbol const& sym);

  //! The identity of the ambient of \p fam.
  Diagram identity(MonoidFamily const& fam);

  //! The generator diagrams, in the order of generator_symbols().
  std::vector<Diagram> generating_set(MonoidFamily const& fam);

  //! Product in the ambient of \p fam.
  ComposeResult compose(MonoidFamily const& fam,
                        Diagram const&      a,
                        Diagram const&      b);

  //! Left-to-right product of the generators of \p w starting from the
  //! identity, with the loops removed on the way.  Throws InvalidSymbol.
  ComposeResult evaluate(MonoidFamily const& fam, Word const& w);

  //! The closed formula for the number of elements.
  mpz_class predicted_cardinality(MonoidFamily const& fam);

  constexpr std::size_t default_closure_cap = 1'000'000;

  //! Every element of the monoid, sorted by canonical encoding.
  //!
  //! Breadth-first search by right multiplication with the generators,
  //! starting at the identity.  With \p threads > 1 products of a frontier
  //! are computed concurrently; the result does not depend on it.  Throws
  //! CapExceeded once more than \p cap elements have been found.
  std::vector<Diagram> closure(MonoidFamily const& fam,
                               std::size_t         cap     = default_closure_cap,
                               unsigned            threads = 1);

  //! Sorts diagrams by canonical encoding.
  void sort_by_encoding(std::vector<Diagram>& xs);

}  // namespace framoid

#endif  // FRAMOID_FAMILY_HPP_
