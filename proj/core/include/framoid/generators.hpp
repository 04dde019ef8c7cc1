// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_GENERATORS_HPP_
#define FRAMOID_GENERATORS_HPP_

#include "framoid/diagram.hpp"
#include "framoid/symbol.hpp"

namespace framoid {

  //! The diagram of a single generator symbol in degree \p n, modulus \p d.
  //!
  //! In a tied ambient (\p tied true) untied kinds carry the all-singletons
  //! tie partition and `e_{i,j}` ties the strands i and j.  In an untied
  //! ambient `e_{i,j}` is the partition diagram joining t_i, t_j, b_i, b_j
  //! into a single block, and the kinds `f`, `q`, `w` are rejected.
  //! Throws InvalidSymbol.
  Diagram generator(GenSymbol const& sym, int n, int d = 1, bool tied = false);

}  // namespace framoid

#endif  // FRAMOID_GENERATORS_HPP_
