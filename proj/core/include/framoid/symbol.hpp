// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_SYMBOL_HPP_
#define FRAMOID_SYMBOL_HPP_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace framoid {

  //! Kinds of generator.
  //!
  //! | kind     | token    | diagram                                   |
  //! |----------|----------|-------------------------------------------|
  //! | tangle   | `t3`     | cup/cap on strands 3, 4                   |
  //! | crossing | `s3`     | transposition of strands 3, 4             |
  //! | bead     | `o3^2`   | two beads on strand 3 (`z3^2` also read)  |
  //! | rook     | `r3`     | strand 3 broken                           |
  //! | rook_product | `p3` | strands 1..3 broken                       |
  //! | tie      | `e1,3`   | strands 1 and 3 tied (`e1` is `e1,2`)     |
  //! | tied_tangle | `f3`  | `t3` with its two brackets tied           |
  //! | tied_rook | `q3`    | `r3` with its two free points tied        |
  //! | tied_rook_product | `w3` | `p3` with free points at 3 tied      |
  enum class GenKind {
    tangle,
    crossing,
    bead,
    rook,
    rook_product,
    tie,
    tied_tangle,
    tied_rook,
    tied_rook_product
  };

  //! A generator symbol: kind, indices (1-based) and bead exponent.
  //!
  //! `i` is the strand index; `j` is only used by ties (`e_{i,j}`, i < j);
  //! `exponent` is only used by beads and may be negative before it is
  //! reduced modulo d.
  struct GenSymbol {
    GenKind kind     = GenKind::tangle;
    int     i        = 1;
    int     j        = 0;
    int     exponent = 1;

    auto operator<=>(GenSymbol const&) const = default;

    static GenSymbol t(int i) {
      return {GenKind::tangle, i, 0, 1};
    }
    static GenSymbol s(int i) {
      return {GenKind::crossing, i, 0, 1};
    }
    static GenSymbol o(int i, int k = 1) {
      return {GenKind::bead, i, 0, k};
    }
    static GenSymbol r(int i) {
      return {GenKind::rook, i, 0, 1};
    }
    static GenSymbol p(int i) {
      return {GenKind::rook_product, i, 0, 1};
    }
    static GenSymbol e(int i, int j) {
      return {GenKind::tie, i, j, 1};
    }
    static GenSymbol e(int i) {
      return {GenKind::tie, i, i + 1, 1};
    }
    static GenSymbol f(int i) {
      return {GenKind::tied_tangle, i, 0, 1};
    }
    static GenSymbol q(int i) {
      return {GenKind::tied_rook, i, 0, 1};
    }
    static GenSymbol w(int i) {
      return {GenKind::tied_rook_product, i, 0, 1};
    }
  };

  using Word = std::vector<GenSymbol>;

  //! True for the kinds that only exist in tied monoids.
  bool is_tied_kind(GenKind k) noexcept;

  //! True for everything except beads.
  inline bool counts_towards_length(GenKind k) noexcept {
    return k != GenKind::bead;
  }

  //! Throws InvalidSymbol unless \p sym has indices in range for \p n.
  void validate(GenSymbol const& sym, int n);

  //! Formats a single symbol as a word token (`o3^2`, `e1,3`, ...).
  //! Bead exponents equal to 1 are omitted, as are ties between
  //! adjacent strands, which print as `e1,2`.
  std::string to_string(GenSymbol const& sym);

  //! Whitespace separated tokens, read left to right.
  std::string to_string(Word const& w);

  //! Parses a single token; throws InvalidSymbol.
  GenSymbol parse_symbol(std::string_view token);

  //! Parses a whitespace separated word; the empty string is the empty
  //! word.  Throws InvalidSymbol.
  Word parse_word(std::string_view text);

}  // namespace framoid

#endif  // FRAMOID_SYMBOL_HPP_
