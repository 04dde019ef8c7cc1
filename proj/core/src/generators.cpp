// framoid - exact computations in framed and tied diagram monoids

#include "framoid/generators.hpp"

#include <optional>

#include "framoid/error.hpp"

namespace framoid {

  Diagram generator(GenSymbol const& sym, int n, int d, bool tied) {
    validate(sym, n);
    if (is_tied_kind(sym.kind) && !tied) {
      throw InvalidSymbol("symbol " + to_string(sym)
                          + " only exists in tied monoids");
    }
    auto top = [](int i) { return i - 1; };
    auto bot = [n](int i) { return n + i - 1; };

    std::vector<std::vector<int>> blocks;
    std::vector<int>              beads;
    // Indices (into blocks) of the blocks that must share a tie class.
    std::vector<int> tied_blocks;

    auto line = [&](int i, int j) {
      blocks.push_back({top(i), bot(j)});
      beads.push_back(0);
    };
    auto singleton = [&](int p) {
      blocks.push_back({p});
      beads.push_back(0);
    };

    int const i = sym.i;
    switch (sym.kind) {
      case GenKind::tangle:
      case GenKind::tied_tangle:
        for (int k = 1; k <= n; ++k) {
          if (k == i) {
            blocks.push_back({top(i), top(i + 1)});
            beads.push_back(0);
            blocks.push_back({bot(i), bot(i + 1)});
            beads.push_back(0);
            if (sym.kind == GenKind::tied_tangle) {
              tied_blocks = {static_cast<int>(blocks.size()) - 2,
                             static_cast<int>(blocks.size()) - 1};
            }
          } else if (k != i + 1) {
            line(k, k);
          }
        }
        break;
      case GenKind::crossing:
        for (int k = 1; k <= n; ++k) {
          line(k, k == i ? i + 1 : (k == i + 1 ? i : k));
        }
        break;
      case GenKind::bead:
        for (int k = 1; k <= n; ++k) {
          line(k, k);
          if (k == i) {
            beads.back() = sym.exponent;
          }
        }
        break;
      case GenKind::rook:
      case GenKind::tied_rook:
      case GenKind::rook_product:
      case GenKind::tied_rook_product: {
        bool const product = sym.kind == GenKind::rook_product
                             || sym.kind == GenKind::tied_rook_product;
        bool const tie_last = sym.kind == GenKind::tied_rook
                              || sym.kind == GenKind::tied_rook_product;
        for (int k = 1; k <= n; ++k) {
          if (k == i || (product && k < i)) {
            singleton(top(k));
            singleton(bot(k));
            if (tie_last && k == i) {
              tied_blocks = {static_cast<int>(blocks.size()) - 2,
                             static_cast<int>(blocks.size()) - 1};
            }
          } else {
            line(k, k);
          }
        }
        break;
      }
      case GenKind::tie:
        if (tied) {
          for (int k = 1; k <= n; ++k) {
            line(k, k);
          }
          tied_blocks = {i - 1, sym.j - 1};
        } else {
          for (int k = 1; k <= n; ++k) {
            if (k == i) {
              blocks.push_back({top(i), top(sym.j), bot(i), bot(sym.j)});
              beads.push_back(0);
            } else if (k != sym.j) {
              line(k, k);
            }
          }
        }
        break;
    }

    std::optional<std::vector<std::vector<int>>> ties;
    if (tied) {
      ties.emplace();
      for (int b = 0; b < static_cast<int>(blocks.size()); ++b) {
        if (!tied_blocks.empty() && b == tied_blocks[1]) {
          continue;
        }
        if (!tied_blocks.empty() && b == tied_blocks[0]) {
          ties->push_back(tied_blocks);
        } else {
          ties->push_back({b});
        }
      }
    }
    return Diagram::from_blocks(n, d, blocks, beads, ties);
  }

}  // namespace framoid
