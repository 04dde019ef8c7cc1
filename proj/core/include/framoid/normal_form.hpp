// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_NORMAL_FORM_HPP_
#define FRAMOID_NORMAL_FORM_HPP_

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "framoid/diagram.hpp"
#include "framoid/family.hpp"
#include "framoid/symbol.hpp"

namespace framoid {

  enum class NormalFormKind { jones, brauer, rook_first, rook_prime };

  enum class RookVariant {
    first,  //!< beads on lines only (R_{d,n})
    prime   //!< beads on lines and on free endpoints (R'_{d,n})
  };

  //! `o_index^exponent`.
  struct BeadFactor {
    int index;
    int exponent;

    bool operator==(BeadFactor const&) const = default;
  };

  //! A normal form split into its parts.
  //!
  //! Which members are used depends on `kind`:
  //!
  //! * jones: `gap_beads prefix U(monomials) suffix` where each monomial
  //!   (i, j) is t_i t_{i-1} ... t_j;
  //! * brauer: `prefix top_permutation t_1 t_3 ... t_{2k-1} permutation
  //!   suffix` with k = `tangles`;
  //! * rook_first, rook_prime: `prefix r_{rooks[0]} ... permutation
  //!   suffix`.
  //!
  //! Bead factors with exponent 0 are never stored.
  struct NormalFormWord {
    NormalFormKind                   kind = NormalFormKind::jones;
    std::vector<BeadFactor>          gap_beads;
    std::vector<BeadFactor>          prefix;
    std::vector<std::pair<int, int>> monomials;
    Word                             top_permutation;
    int                              tangles = 0;
    std::vector<int>                 rooks;
    Word                             permutation;
    std::vector<BeadFactor>          suffix;

    //! The generator word, left to right.
    Word word() const;

    //! Number of symbols other than beads.
    std::size_t length() const;

    bool operator==(NormalFormWord const&) const = default;
  };

  std::string to_string(NormalFormWord const& nf);

  //! Strands g such that the diagram has the vertical line {top g, bottom g}
  //! and no arc passes over it; beads are ignored.  Throws NotPlanar.
  std::set<int> gaps(Diagram const& x);

  //! Strands g in [1, n] such that neither g nor g - 1 occurs as an index
  //! of \p w.
  std::set<int> gaps(Word const& w, int n);

  //! The normal form of an element of the abacus Jones monoid.  Throws
  //! NotPlanar, or InvalidDiagram for tied diagrams.
  NormalFormWord jones_nf(Diagram const& x);

  //! The tangle part of the dual normal form, V_{i_1 j_1} ... V_{i_h j_h}
  //! with V_{ij} = t_i t_{i+1} ... t_j and decreasing first indices;
  //! beads are ignored.  Throws NotPlanar.
  Word jones_dual_tangles(Diagram const& x);

  //! The normal form of an element of the abacus Brauer monoid.  Throws
  //! InvalidDiagram unless every block has two points.
  NormalFormWord brauer_nf(Diagram const& x);

  //! The normal form of an element of an abacus rook monoid.  Throws
  //! InvalidDiagram if \p x is not a rook diagram, or if \p variant is
  //! `first` and a free endpoint carries beads.
  NormalFormWord rook_nf(Diagram const& x, RookVariant variant);

  //! Word s_{a} s_{b} ... evaluating to the permutation diagram sending
  //! top i to bottom `image[i - 1]`; strands are moved into place left to
  //! right.
  Word permutation_word(std::vector<int> const& image);

  //! evaluate(fam, w).
  ComposeResult evaluate_word(Word const& w, MonoidFamily const& fam);

  //! The least number of non-bead generators in a word of \p fam equal to
  //! \p x.  Throws CapExceeded if more than \p cap elements are visited,
  //! and InvalidDiagram if \p x is not in the family.
  std::size_t min_length_oracle(Diagram const&      x,
                                MonoidFamily const& fam,
                                std::size_t         cap = default_closure_cap);

}  // namespace framoid

#endif  // FRAMOID_NORMAL_FORM_HPP_
