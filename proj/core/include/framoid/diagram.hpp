// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_DIAGRAM_HPP_
#define FRAMOID_DIAGRAM_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace framoid {

  //! Residue-indexed counts of the closed components removed by a product.
  //!
  //! `count(p)` is the number of floating components whose bead total is
  //! congruent to p modulo d.
  class LoopRecord {
   public:
    explicit LoopRecord(int d = 1);

    int modulus() const noexcept {
      return static_cast<int>(_counts.size());
    }
    std::uint32_t count(int residue) const {
      return _counts.at(static_cast<std::size_t>(residue));
    }
    std::uint32_t total() const noexcept;
    bool          empty() const noexcept {
      return total() == 0;
    }

    void        add(int residue, std::uint32_t how_many = 1);
    LoopRecord& operator+=(LoopRecord const& that);

    bool operator==(LoopRecord const&) const = default;

    //! `{}` or `{0:2,1:1}` (residue:count, non-zero entries only).
    std::string to_string() const;

   private:
    std::vector<std::uint32_t> _counts;
  };

  //! What happens to beads on blocks with a single point.
  enum class BeadRule {
    keep,               //!< beads stay (abacus R'_{d,n}; everything else)
    drop_on_singletons  //!< free endpoints let beads escape (R_{d,n})
  };

  //! How ties are composed.
  enum class TieRule {
    ramified,         //!< partition-monoid product of the coarse partitions
    untie_singletons  //!< as ramified, then singletons leave their class
  };

  struct ComposeRules {
    BeadRule beads = BeadRule::keep;
    TieRule  ties  = TieRule::ramified;

    bool operator==(ComposeRules const&) const = default;
  };

  //! The strongest structural class a diagram belongs to.
  enum class StructuralClass {
    permutation,      //!< every block is {top i, bottom j}
    planar_matching,  //!< blocks of size 2, no two arcs cross
    matching,         //!< blocks of size at most 2
    generic_partition
  };

  //! A set partition of the 2n boundary points with a residue mod d on
  //! every block and, optionally, a partition of the blocks (the ties).
  //!
  //! Points are numbered 0..n-1 along the top and n..2n-1 along the bottom
  //! (`top(i)` and `bottom(i)` convert 1-based strand numbers).  Values are
  //! always stored canonically: blocks are numbered by their least point,
  //! tie classes by their least block.  Two diagrams are therefore equal
  //! exactly when their members are equal.
  class Diagram {
   public:
    Diagram() = default;

    //! \p blocks lists 0-based points; \p beads is parallel to \p blocks
    //! (empty means all zero); \p ties, when present, lists classes of
    //! indices into \p blocks.  Throws InvalidDiagram.
    static Diagram from_blocks(
        int                                          n,
        int                                          d,
        std::vector<std::vector<int>> const&         blocks,
        std::vector<int> const&                      beads = {},
        std::optional<std::vector<std::vector<int>>> ties  = std::nullopt);

    static Diagram identity(int n, int d = 1, bool tied = false);

    int degree() const noexcept {
      return _n;
    }
    int modulus() const noexcept {
      return _d;
    }
    bool tied() const noexcept {
      return _tied;
    }

    int top(int strand) const noexcept {
      return strand - 1;
    }
    int bottom(int strand) const noexcept {
      return _n + strand - 1;
    }
    bool is_top(int point) const noexcept {
      return point < _n;
    }

    std::size_t number_of_blocks() const noexcept {
      return _beads.size();
    }
    int block_of(int point) const {
      return _block.at(static_cast<std::size_t>(point));
    }
    int bead(int block) const {
      return _beads.at(static_cast<std::size_t>(block));
    }
    //! Tie class of \p block; every block is its own class when untied.
    int tie_class(int block) const {
      return _tied ? _ties.at(static_cast<std::size_t>(block)) : block;
    }
    std::size_t number_of_tie_classes() const noexcept;

    std::vector<int>              block_points(int block) const;
    std::vector<std::vector<int>> blocks() const;
    std::vector<std::vector<int>> tie_classes() const;

    //! Same partition and ties with a different bead on \p block.
    Diagram with_bead(int block, int residue) const;

    std::size_t hash() const noexcept;

    bool operator==(Diagram const&) const = default;
    auto operator<=>(Diagram const&) const = default;

   private:
    friend class DiagramBuilder;

    int                       _n    = 0;
    int                       _d    = 1;
    bool                      _tied = false;
    std::vector<std::uint8_t> _block;  // point -> block
    std::vector<std::uint8_t> _beads;  // block -> residue
    std::vector<std::uint8_t> _ties;   // block -> tie class (tied only)
  };

  struct ComposeResult {
    Diagram    diagram;
    LoopRecord loops;
  };

  //! The product a * b with \p a drawn above \p b.
  //!
  //! The bottom of \p a is glued to the top of \p b; connected components
  //! reaching the boundary become blocks whose bead is the sum of the beads
  //! of their constituents modulo d; components lying entirely in the
  //! middle are removed and recorded in the LoopRecord.  Ties are composed
  //! as a partition-monoid product of the coarse partitions.  Throws
  //! AmbientMismatch.
  ComposeResult compose(Diagram const& a,
                        Diagram const& b,
                        ComposeRules   rules = {});

  //! Rebuilds \p x from its blocks; idempotent.
  Diagram canonicalize(Diagram const& x);

  //! All beads set to 0.
  Diagram erase_beads(Diagram const& x);
  //! The tie partition removed.
  Diagram erase_ties(Diagram const& x);
  //! Adds the all-singletons tie partition (no-op if already tied).
  Diagram with_trivial_ties(Diagram const& x);
  //! Same diagram read with framing modulus \p d (beads reduced mod d).
  Diagram with_modulus(Diagram const& x, int d);

  StructuralClass structural_class(Diagram const& x);
  bool            is_matching(Diagram const& x);
  bool            is_planar_matching(Diagram const& x);
  bool            is_permutation(Diagram const& x);
  //! Blocks of size 2 all join top to bottom (rook diagrams).
  bool is_rook(Diagram const& x);
  //! Every singleton block carries bead 0.
  bool singleton_beads_are_zero(Diagram const& x);

  //! Every block of \p x is contained in a block of \p coarse.
  bool refines(Diagram const& x, Diagram const& coarse);

  //! `n=3;d=2;blocks=[{t1,b1}:0,{t2,t3}:1,{b2,b3}:0]` and, when tied,
  //! `;ties=[[0],[1,2]]`.
  std::string encode(Diagram const& x);

  //! Inverse of encode; throws InvalidDiagram.
  Diagram parse_diagram(std::string_view text);

}  // namespace framoid

template <>
struct std::hash<framoid::Diagram> {
  std::size_t operator()(framoid::Diagram const& x) const noexcept {
    return x.hash();
  }
};

#endif  // FRAMOID_DIAGRAM_HPP_
