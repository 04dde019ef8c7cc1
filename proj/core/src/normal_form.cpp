// framoid - exact computations in framed and tied diagram monoids

#include "framoid/normal_form.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <unordered_map>

#include "framoid/error.hpp"
#include "framoid/generators.hpp"

namespace framoid {

  namespace {
    void append_beads(Word& w, std::vector<BeadFactor> const& beads) {
      for (auto const& b : beads) {
        w.push_back(GenSymbol::o(b.index, b.exponent));
      }
    }

    void push_bead(std::vector<BeadFactor>& out, int index, int exponent) {
      if (exponent != 0) {
        out.push_back({index, exponent});
      }
    }

    void require_untied(Diagram const& x, char const* what) {
      if (x.tied()) {
        throw InvalidDiagram(std::string(what)
                             + " is not defined for tied diagrams");
      }
    }

    // 1-based strand of a point together with its row.
    struct End {
      bool top;
      int  strand;
    };

    End end_of(Diagram const& x, int p) {
      return x.is_top(p) ? End{true, p + 1} : End{false, p - x.degree() + 1};
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // NormalFormWord
  ////////////////////////////////////////////////////////////////////////

  Word NormalFormWord::word() const {
    Word w;
    append_beads(w, gap_beads);
    append_beads(w, prefix);
    switch (kind) {
      case NormalFormKind::jones:
        for (auto const& [i, j] : monomials) {
          for (int k = i; k >= j; --k) {
            w.push_back(GenSymbol::t(k));
          }
        }
        break;
      case NormalFormKind::brauer:
        w.insert(w.end(), top_permutation.begin(), top_permutation.end());
        for (int k = 1; k <= tangles; ++k) {
          w.push_back(GenSymbol::t(2 * k - 1));
        }
        w.insert(w.end(), permutation.begin(), permutation.end());
        break;
      case NormalFormKind::rook_first:
      case NormalFormKind::rook_prime:
        for (int i : rooks) {
          w.push_back(GenSymbol::r(i));
        }
        w.insert(w.end(), permutation.begin(), permutation.end());
        break;
    }
    append_beads(w, suffix);
    return w;
  }

  std::size_t NormalFormWord::length() const {
    auto const w = word();
    return static_cast<std::size_t>(
        std::count_if(w.begin(), w.end(), [](GenSymbol const& s) {
          return counts_towards_length(s.kind);
        }));
  }

  std::string to_string(NormalFormWord const& nf) {
    return to_string(nf.word());
  }

  ////////////////////////////////////////////////////////////////////////
  // Gaps
  ////////////////////////////////////////////////////////////////////////

  std::set<int> gaps(Diagram const& x) {
    if (!is_planar_matching(x)) {
      throw NotPlanar("gaps are only defined for planar matchings");
    }
    std::set<int> out;
    for (int g = 1; g <= x.degree(); ++g) {
      if (x.block_of(x.top(g)) == x.block_of(x.bottom(g))) {
        out.insert(g);
      }
    }
    return out;
  }

  std::set<int> gaps(Word const& w, int n) {
    std::set<int> used;
    for (auto const& sym : w) {
      if (counts_towards_length(sym.kind)) {
        used.insert(sym.i);
      }
    }
    std::set<int> out;
    for (int g = 1; g <= n; ++g) {
      if (!used.contains(g) && !used.contains(g - 1)) {
        out.insert(g);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Jones
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // The tangle part of the normal form of erase_beads(x) together with
    // its bottom anchors.
    std::vector<std::pair<int, int>> jones_monomials(Diagram const& x) {
      int const     n      = x.degree();
      Diagram const target = erase_beads(x);
      std::vector<int> lower;  // j indices
      for (auto const& blk : x.blocks()) {
        End a = end_of(x, blk[0]);
        End b = end_of(x, blk[1]);
        if (!a.top && !b.top) {
          lower.push_back(a.strand);
        } else if (a.top && !b.top && b.strand < a.strand) {
          lower.push_back(b.strand);
        }
      }
      std::sort(lower.begin(), lower.end());
      std::size_t const k = lower.size();

      std::vector<Diagram> tangle;
      for (int i = 1; i < n; ++i) {
        tangle.push_back(generator(GenSymbol::t(i), n, x.modulus()));
      }

      std::vector<int>                   upper(k);
      std::vector<std::pair<int, int>>   found;
      std::size_t                        solutions = 0;
      // Partial products: prefix[m] is U_{i_1 j_1} ... U_{i_m j_m}.
      std::vector<Diagram> prefix(k + 1);
      prefix[0] = Diagram::identity(n, x.modulus());

      std::function<void(std::size_t, int)> search = [&](std::size_t m,
                                                          int lowest) {
        if (m == k) {
          if (prefix[k] == target) {
            if (solutions++ == 0) {
              for (std::size_t q = 0; q < k; ++q) {
                found.emplace_back(upper[q], lower[q]);
              }
            }
          }
          return;
        }
        // Leave room for the remaining k - m - 1 strictly larger indices.
        int const highest = n - 1 - static_cast<int>(k - m - 1);
        for (int i = std::max(lowest, lower[m]); i <= highest; ++i) {
          upper[m]  = i;
          Diagram y = prefix[m];
          for (int t = i; t >= lower[m]; --t) {
            y = compose(y, tangle[t - 1]).diagram;
          }
          prefix[m + 1] = std::move(y);
          search(m + 1, i + 1);
        }
      };
      search(0, 1);
      if (solutions != 1) {
        throw Error("normal form search found " + std::to_string(solutions)
                    + " candidates for " + encode(x));
      }
      return found;
    }

    Diagram mirror(Diagram const& x) {
      int const                     n = x.degree();
      std::vector<std::vector<int>> blocks;
      std::vector<int>              beads;
      auto const                    blks = x.blocks();
      for (std::size_t b = 0; b < blks.size(); ++b) {
        std::vector<int> flipped;
        for (int p : blks[b]) {
          flipped.push_back(p < n ? p + n : p - n);
        }
        blocks.push_back(std::move(flipped));
        beads.push_back(x.bead(static_cast<int>(b)));
      }
      return Diagram::from_blocks(n, x.modulus(), blocks, beads);
    }
  }  // namespace

  NormalFormWord jones_nf(Diagram const& x) {
    require_untied(x, "the Jones normal form");
    if (!is_planar_matching(x)) {
      throw NotPlanar("the Jones normal form needs a planar matching, got "
                      + encode(x));
    }
    NormalFormWord nf;
    nf.kind = NormalFormKind::jones;

    std::vector<std::pair<int, int>> upper_beads;  // (strand, bead)
    std::vector<std::pair<int, int>> lower_beads;
    std::vector<std::pair<int, int>> gap_beads;
    auto const                       blks = x.blocks();
    for (std::size_t b = 0; b < blks.size(); ++b) {
      int const bead = x.bead(static_cast<int>(b));
      End       a    = end_of(x, blks[b][0]);
      End       c    = end_of(x, blks[b][1]);
      if (a.top && c.top) {
        upper_beads.emplace_back(a.strand, bead);
      } else if (!a.top && !c.top) {
        lower_beads.emplace_back(a.strand, bead);
      } else if (a.strand == c.strand) {
        gap_beads.emplace_back(a.strand, bead);
      } else if (c.strand < a.strand) {
        lower_beads.emplace_back(c.strand, bead);
      } else {
        upper_beads.emplace_back(a.strand, bead);
      }
    }
    std::sort(gap_beads.begin(), gap_beads.end());
    std::sort(upper_beads.rbegin(), upper_beads.rend());
    std::sort(lower_beads.begin(), lower_beads.end());
    for (auto [g, e] : gap_beads) {
      push_bead(nf.gap_beads, g, e);
    }
    for (auto [i, e] : upper_beads) {
      push_bead(nf.prefix, i, e);
    }
    for (auto [j, e] : lower_beads) {
      push_bead(nf.suffix, j, e);
    }
    nf.monomials = jones_monomials(x);
    return nf;
  }

  Word jones_dual_tangles(Diagram const& x) {
    require_untied(x, "the Jones normal form");
    if (!is_planar_matching(x)) {
      throw NotPlanar("the Jones normal form needs a planar matching, got "
                      + encode(x));
    }
    NormalFormWord mirrored;
    mirrored.kind      = NormalFormKind::jones;
    mirrored.monomials = jones_monomials(erase_beads(mirror(x)));
    Word w             = mirrored.word();
    std::reverse(w.begin(), w.end());
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Permutations
  ////////////////////////////////////////////////////////////////////////

  Word permutation_word(std::vector<int> const& image) {
    int const        n = static_cast<int>(image.size());
    std::vector<int> at(n);  // at[pos] = top strand currently at pos
    for (int p = 0; p < n; ++p) {
      at[p] = p;
    }
    Word w;
    for (int p = 0; p < n; ++p) {
      int c = p;
      while (image[at[c]] != p + 1) {
        ++c;
      }
      for (int q = c; q > p; --q) {
        w.push_back(GenSymbol::s(q));
        std::swap(at[q], at[q - 1]);
      }
    }
    return w;
  }

  ////////////////////////////////////////////////////////////////////////
  // Brauer
  ////////////////////////////////////////////////////////////////////////

  NormalFormWord brauer_nf(Diagram const& x) {
    require_untied(x, "the Brauer normal form");
    if (!is_matching(x)) {
      throw InvalidDiagram("the Brauer normal form needs a matching, got "
                           + encode(x));
    }
    int const n = x.degree();
    // Partner of each top and bottom strand.
    std::vector<End> partner_top(n + 1), partner_bottom(n + 1);
    std::vector<int> bead_top(n + 1, 0), bead_bottom(n + 1, 0);
    auto const       blks = x.blocks();
    for (std::size_t b = 0; b < blks.size(); ++b) {
      End u = end_of(x, blks[b][0]);
      End v = end_of(x, blks[b][1]);
      for (auto [self, other] : {std::pair{u, v}, std::pair{v, u}}) {
        (self.top ? partner_top : partner_bottom)[self.strand] = other;
        (self.top ? bead_top : bead_bottom)[self.strand]
            = x.bead(static_cast<int>(b));
      }
    }

    std::vector<int> a, b, c, a2, b2, c2;
    for (int j = 1; j <= n; ++j) {
      End p = partner_top[j];
      if (p.top && p.strand > j) {
        a.push_back(j);
        b.push_back(p.strand);
      } else if (!p.top) {
        c.push_back(j);
        c2.push_back(p.strand);
      }
      End q = partner_bottom[j];
      if (!q.top && q.strand > j) {
        a2.push_back(j);
        b2.push_back(q.strand);
      }
    }
    int const k = static_cast<int>(a.size());

    std::vector<int> s(n), s2(n);
    for (int i = 0; i < k; ++i) {
      s[a[i] - 1]     = 2 * i + 1;
      s[b[i] - 1]     = 2 * i + 2;
      s2[2 * i]       = a2[i];
      s2[2 * i + 1]   = b2[i];
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      s[c[i] - 1]        = 2 * k + static_cast<int>(i) + 1;
      s2[2 * k + i]      = c2[i];
    }

    NormalFormWord nf;
    nf.kind = NormalFormKind::brauer;
    for (int j = 1; j <= n; ++j) {
      End p = partner_top[j];
      if ((p.top && p.strand > j) || !p.top) {
        push_bead(nf.prefix, j, bead_top[j]);
      }
    }
    nf.top_permutation = permutation_word(s);
    nf.tangles         = k;
    nf.permutation     = permutation_word(s2);
    for (int j : a2) {
      push_bead(nf.suffix, j, bead_bottom[j]);
    }
    return nf;
  }

  ////////////////////////////////////////////////////////////////////////
  // Rook
  ////////////////////////////////////////////////////////////////////////

  NormalFormWord rook_nf(Diagram const& x, RookVariant variant) {
    require_untied(x, "the rook normal form");
    if (!is_rook(x)) {
      throw InvalidDiagram("the rook normal form needs a rook diagram, got "
                           + encode(x));
    }
    if (variant == RookVariant::first && !singleton_beads_are_zero(x)) {
      throw InvalidDiagram(
          "free endpoints carry beads, which the first rook normal form "
          "cannot express: "
          + encode(x));
    }
    int const        n = x.degree();
    std::vector<int> image(n, 0);
    std::vector<int> line_bead(n + 1, -1);
    std::vector<bool> bottom_used(n + 1, false);
    for (int i = 1; i <= n; ++i) {
      int blk = x.block_of(x.top(i));
      for (int p : x.block_points(blk)) {
        if (!x.is_top(p)) {
          image[i - 1]       = p - n + 1;
          bottom_used[p - n + 1] = true;
          line_bead[i]       = x.bead(blk);
        }
      }
    }

    NormalFormWord nf;
    nf.kind = variant == RookVariant::first ? NormalFormKind::rook_first
                                            : NormalFormKind::rook_prime;
    std::vector<int> free_bottom;
    for (int j = 1; j <= n; ++j) {
      if (!bottom_used[j]) {
        free_bottom.push_back(j);
      }
    }
    std::size_t next_free = 0;
    for (int i = 1; i <= n; ++i) {
      if (image[i - 1] == 0) {
        nf.rooks.push_back(i);
        image[i - 1] = free_bottom[next_free++];
      }
      if (variant == RookVariant::prime) {
        push_bead(nf.prefix, i, x.bead(x.block_of(x.top(i))));
      } else if (line_bead[i] >= 0) {
        push_bead(nf.prefix, i, line_bead[i]);
      }
    }
    nf.permutation = permutation_word(image);
    if (variant == RookVariant::prime) {
      for (int j : free_bottom) {
        push_bead(nf.suffix, j, x.bead(x.block_of(x.bottom(j))));
      }
    }
    return nf;
  }

  ////////////////////////////////////////////////////////////////////////
  // Words
  ////////////////////////////////////////////////////////////////////////

  ComposeResult evaluate_word(Word const& w, MonoidFamily const& fam) {
    return evaluate(fam, w);
  }

  std::size_t min_length_oracle(Diagram const&      x,
                                MonoidFamily const& fam,
                                std::size_t         cap) {
    if (x.degree() != fam.degree() || x.modulus() != fam.modulus()
        || x.tied() != fam.tied()) {
      throw AmbientMismatch("diagram " + encode(x)
                            + " does not lie in the ambient of "
                            + fam.to_string());
    }
    auto const           symbols = fam.generator_symbols();
    std::vector<Diagram> gens;
    std::vector<bool>    free;
    for (auto const& sym : symbols) {
      gens.push_back(generator(fam, sym));
      free.push_back(!counts_towards_length(sym.kind));
    }
    std::unordered_map<Diagram, std::size_t> dist;
    std::deque<Diagram>                      queue;
    Diagram                                  start = identity(fam);
    dist.emplace(start, 0);
    queue.push_back(start);
    while (!queue.empty()) {
      Diagram y = queue.front();
      queue.pop_front();
      std::size_t const dy = dist.at(y);
      if (y == x) {
        return dy;
      }
      for (std::size_t g = 0; g < gens.size(); ++g) {
        Diagram     z  = compose(y, gens[g], fam.rules()).diagram;
        std::size_t dz = dy + (free[g] ? 0 : 1);
        auto        it = dist.find(z);
        if (it != dist.end() && it->second <= dz) {
          continue;
        }
        if (it == dist.end() && dist.size() >= cap) {
          throw CapExceeded("minimal length search in " + fam.to_string()
                                + " visited too many elements",
                            cap);
        }
        dist[z] = dz;
        if (free[g]) {
          queue.push_front(std::move(z));
        } else {
          queue.push_back(std::move(z));
        }
      }
    }
    throw InvalidDiagram("diagram " + encode(x) + " is not an element of "
                         + fam.to_string());
  }

}  // namespace framoid
