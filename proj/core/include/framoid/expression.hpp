// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_EXPRESSION_HPP_
#define FRAMOID_EXPRESSION_HPP_

#include <functional>
#include <string_view>
#include <vector>

#include "framoid/algebra.hpp"

namespace framoid {

  //! Maps a symbol token such as `t2`, `o1^-1` or `E1,3` to an element.
  using SymbolResolver = std::function<AlgebraElement(std::string_view)>;

  //! Evaluates a linear combination of products.
  //!
  //! The grammar is
  //!
  //!     expr   := ['-'] term (('+' | '-') term)*
  //!     term   := factor (['*'] factor)*
  //!     factor := number | '(' expr ')' | name
  //!
  //! where a number is `3` or `3/4` and a name is a letter followed by
  //! letters, digits, `,` and `:`, optionally followed by `^` and a signed
  //! integer.  The names `x`, `y`, `v`, `a`, `q`, `alpha<k>` and `y<k>`
  //! (with `alpha0 = y0 = 1`) are scalars; every other name is passed to
  //! \p resolve.  Throws InvalidSymbol on syntax errors.
  AlgebraElement evaluate_expression(std::string_view      text,
                                     AlgebraElement const& one,
                                     SymbolResolver const& resolve);

  //! Splits \p text at `=` and evaluates every side.
  std::vector<AlgebraElement> evaluate_equation(std::string_view      text,
                                                AlgebraElement const& one,
                                                SymbolResolver const& resolve);

  //! Generators of \p fam (lower case, as in parse_symbol) together with
  //! the averaged elements: `E{i}` and `E{i},{j}` for bridge_e, `F{i}`
  //! for bridge_f, `Q{i}` for bridge_q, `W{i}` and `W{i}:{j}:{h}` for
  //! bridge_w and `Z{i}` for cap_z.
  SymbolResolver bridge_resolver(MonoidFamily const& fam, LoopPolicy policy);

}  // namespace framoid

#endif  // FRAMOID_EXPRESSION_HPP_
