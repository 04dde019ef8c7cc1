// framoid - exact computations in framed and tied diagram monoids

#include "framoid/diagram.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "framoid/error.hpp"

namespace framoid {

  ////////////////////////////////////////////////////////////////////////
  // LoopRecord
  ////////////////////////////////////////////////////////////////////////

  LoopRecord::LoopRecord(int d) : _counts(static_cast<std::size_t>(d), 0) {
    if (d < 1) {
      throw InvalidDiagram("loop record modulus must be positive");
    }
  }

  std::uint32_t LoopRecord::total() const noexcept {
    return std::accumulate(_counts.begin(), _counts.end(), std::uint32_t(0));
  }

  void LoopRecord::add(int residue, std::uint32_t how_many) {
    _counts.at(static_cast<std::size_t>(residue)) += how_many;
  }

  LoopRecord& LoopRecord::operator+=(LoopRecord const& that) {
    if (that._counts.size() != _counts.size()) {
      throw AmbientMismatch("cannot merge loop records of different moduli");
    }
    for (std::size_t p = 0; p < _counts.size(); ++p) {
      _counts[p] += that._counts[p];
    }
    return *this;
  }

  std::string LoopRecord::to_string() const {
    std::string out = "{";
    for (std::size_t p = 0; p < _counts.size(); ++p) {
      if (_counts[p] != 0) {
        if (out.size() > 1) {
          out += ',';
        }
        out += std::to_string(p) + ":" + std::to_string(_counts[p]);
      }
    }
    return out + "}";
  }

  ////////////////////////////////////////////////////////////////////////
  // Canonical construction
  ////////////////////////////////////////////////////////////////////////

  namespace {
    constexpr int max_degree = 120;

    struct UnionFind {
      explicit UnionFind(std::size_t size) : parent(size) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      int find(int x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      void unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
      std::vector<int> parent;
    };

    int reduce(long long value, int d) {
      long long r = value % d;
      return static_cast<int>(r < 0 ? r + d : r);
    }

    void check_ambient(int n, int d) {
      if (n < 1 || n > max_degree) {
        throw InvalidDiagram("degree must lie in [1, "
                             + std::to_string(max_degree) + "], got "
                             + std::to_string(n));
      }
      if (d < 1 || d > 255) {
        throw InvalidDiagram("modulus must lie in [1, 255], got "
                             + std::to_string(d));
      }
    }
  }  // namespace

  // Builds canonical diagrams from arbitrary labels.
  class DiagramBuilder {
   public:
    // label[p] is an arbitrary non-negative label of the block containing
    // point p; bead_of and tie_of are indexed by label.
    static Diagram build(int                     n,
                         int                     d,
                         bool                    tied,
                         std::vector<int> const& label,
                         std::vector<int> const& bead_of,
                         std::vector<int> const& tie_of) {
      Diagram x;
      x._n    = n;
      x._d    = d;
      x._tied = tied;
      x._block.resize(2 * static_cast<std::size_t>(n));
      std::vector<int> relabel(bead_of.size(), -1);
      std::vector<int> old_of_new;
      for (int p = 0; p < 2 * n; ++p) {
        int& b = relabel[label[p]];
        if (b < 0) {
          b = static_cast<int>(old_of_new.size());
          old_of_new.push_back(label[p]);
        }
        x._block[p] = static_cast<std::uint8_t>(b);
      }
      x._beads.resize(old_of_new.size());
      for (std::size_t b = 0; b < old_of_new.size(); ++b) {
        x._beads[b] = static_cast<std::uint8_t>(reduce(bead_of[old_of_new[b]], d));
      }
      if (tied) {
        int top = 0;
        for (int o : old_of_new) {
          top = std::max(top, tie_of[o]);
        }
        std::vector<int> tie_relabel(static_cast<std::size_t>(top) + 1, -1);
        int              next = 0;
        x._ties.resize(old_of_new.size());
        for (std::size_t b = 0; b < old_of_new.size(); ++b) {
          int& c = tie_relabel.at(tie_of[old_of_new[b]]);
          if (c < 0) {
            c = next++;
          }
          x._ties[b] = static_cast<std::uint8_t>(c);
        }
      }
      return x;
    }

    static void set_bead(Diagram& x, int block, int residue) {
      x._beads.at(block) = static_cast<std::uint8_t>(reduce(residue, x._d));
    }
  };

  Diagram Diagram::from_blocks(
      int                                          n,
      int                                          d,
      std::vector<std::vector<int>> const&         blocks,
      std::vector<int> const&                      beads,
      std::optional<std::vector<std::vector<int>>> ties) {
    check_ambient(n, d);
    if (!beads.empty() && beads.size() != blocks.size()) {
      throw InvalidDiagram("bead list must be parallel to the block list");
    }
    std::vector<int> label(2 * static_cast<std::size_t>(n), -1);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw InvalidDiagram("blocks must be non-empty");
      }
      for (int p : blocks[b]) {
        if (p < 0 || p >= 2 * n) {
          throw InvalidDiagram("point " + std::to_string(p)
                               + " out of range");
        }
        if (label[p] >= 0) {
          throw InvalidDiagram("point " + std::to_string(p)
                               + " lies in two blocks");
        }
        label[p] = static_cast<int>(b);
      }
    }
    if (std::any_of(label.begin(), label.end(), [](int l) { return l < 0; })) {
      throw InvalidDiagram("blocks do not cover every point");
    }
    std::vector<int> bead_of(blocks.size(), 0);
    if (!beads.empty()) {
      bead_of = beads;
    }
    std::vector<int> tie_of(blocks.size(), -1);
    if (ties) {
      for (std::size_t c = 0; c < ties->size(); ++c) {
        for (int b : (*ties)[c]) {
          if (b < 0 || static_cast<std::size_t>(b) >= blocks.size()) {
            throw InvalidDiagram("tie refers to block " + std::to_string(b)
                                 + " which does not exist");
          }
          if (tie_of[b] >= 0) {
            throw InvalidDiagram("block " + std::to_string(b)
                                 + " lies in two tie classes");
          }
          tie_of[b] = static_cast<int>(c);
        }
      }
      if (std::any_of(
              tie_of.begin(), tie_of.end(), [](int c) { return c < 0; })) {
        throw InvalidDiagram("tie classes do not cover every block");
      }
    }
    return DiagramBuilder::build(
        n, d, ties.has_value(), label, bead_of, tie_of);
  }

  Diagram Diagram::identity(int n, int d, bool tied) {
    check_ambient(n, d);
    std::vector<int> label(2 * static_cast<std::size_t>(n));
    std::vector<int> zero(n, 0);
    std::vector<int> tie_of(n);
    for (int i = 0; i < n; ++i) {
      label[i] = label[n + i] = i;
      tie_of[i]               = i;
    }
    return DiagramBuilder::build(n, d, tied, label, zero, tie_of);
  }

  std::size_t Diagram::number_of_tie_classes() const noexcept {
    if (!_tied) {
      return _beads.size();
    }
    return _ties.empty()
               ? 0
               : static_cast<std::size_t>(
                     *std::max_element(_ties.begin(), _ties.end()))
                     + 1;
  }

  std::vector<int> Diagram::block_points(int block) const {
    std::vector<int> out;
    for (int p = 0; p < 2 * _n; ++p) {
      if (_block[p] == block) {
        out.push_back(p);
      }
    }
    return out;
  }

  std::vector<std::vector<int>> Diagram::blocks() const {
    std::vector<std::vector<int>> out(_beads.size());
    for (int p = 0; p < 2 * _n; ++p) {
      out[_block[p]].push_back(p);
    }
    return out;
  }

  std::vector<std::vector<int>> Diagram::tie_classes() const {
    std::vector<std::vector<int>> out(number_of_tie_classes());
    for (std::size_t b = 0; b < _beads.size(); ++b) {
      out[tie_class(static_cast<int>(b))].push_back(static_cast<int>(b));
    }
    return out;
  }

  Diagram Diagram::with_bead(int block, int residue) const {
    Diagram x = *this;
    DiagramBuilder::set_bead(x, block, residue);
    return x;
  }

  std::size_t Diagram::hash() const noexcept {
    std::size_t h   = static_cast<std::size_t>(_n) * 1000003u + _d * 31u + _tied;
    auto        mix = [&h](std::uint8_t v) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    };
    for (auto v : _block) {
      mix(v);
    }
    for (auto v : _beads) {
      mix(v);
    }
    for (auto v : _ties) {
      mix(v);
    }
    return h;
  }

  ////////////////////////////////////////////////////////////////////////
  // Composition
  ////////////////////////////////////////////////////////////////////////

  ComposeResult compose(Diagram const& a, Diagram const& b, ComposeRules rules) {
    if (a.degree() != b.degree() || a.modulus() != b.modulus()
        || a.tied() != b.tied()) {
      throw AmbientMismatch("cannot compose diagrams from different ambients");
    }
    int const n = a.degree();
    int const d = a.modulus();
    // Points of a keep their numbers except the bottom row, which moves to
    // the middle row 2n..3n-1; points of b keep theirs except the top row.
    auto from_a = [n](int p) { return p < n ? p : p + n; };
    auto from_b = [n](int p) { return p < n ? p + 2 * n : p; };

    UnionFind uf(3 * static_cast<std::size_t>(n));
    // Unite each point with the least point of its block.
    std::vector<int> first_a(a.number_of_blocks(), -1);
    std::vector<int> first_b(b.number_of_blocks(), -1);
    for (int p = 0; p < 2 * n; ++p) {
      int& fa = first_a[a.block_of(p)];
      if (fa < 0) {
        fa = p;
      } else {
        uf.unite(from_a(fa), from_a(p));
      }
      int& fb = first_b[b.block_of(p)];
      if (fb < 0) {
        fb = p;
      } else {
        uf.unite(from_b(fb), from_b(p));
      }
    }

    std::vector<int> bead_sum(3 * static_cast<std::size_t>(n), 0);
    for (std::size_t k = 0; k < first_a.size(); ++k) {
      bead_sum[uf.find(from_a(first_a[k]))] += a.bead(static_cast<int>(k));
    }
    for (std::size_t k = 0; k < first_b.size(); ++k) {
      bead_sum[uf.find(from_b(first_b[k]))] += b.bead(static_cast<int>(k));
    }

    std::vector<int>  label(2 * static_cast<std::size_t>(n));
    std::vector<int>  size(3 * static_cast<std::size_t>(n), 0);
    std::vector<bool> boundary(3 * static_cast<std::size_t>(n), false);
    for (int p = 0; p < 2 * n; ++p) {
      label[p] = uf.find(p);
      boundary[label[p]] = true;
      size[label[p]]++;
    }

    ComposeResult result{Diagram(), LoopRecord(d)};
    for (int m = 2 * n; m < 3 * n; ++m) {
      int root = uf.find(m);
      if (!boundary[root] && root == m) {
        result.loops.add(reduce(bead_sum[root], d));
      }
    }
    // A middle-only component's root is its least point, which is in the
    // middle row, so the test above counts each loop exactly once.

    if (rules.beads == BeadRule::drop_on_singletons) {
      for (int p = 0; p < 2 * n; ++p) {
        if (size[label[p]] == 1) {
          bead_sum[label[p]] = 0;
        }
      }
    }

    std::vector<int> tie_of;
    if (a.tied()) {
      UnionFind coarse(3 * static_cast<std::size_t>(n));
      // Ties of each factor, expressed on points: unite the least points of
      // tied blocks.
      auto tie_points = [&coarse](Diagram const&          x,
                                  std::vector<int> const& first,
                                  auto                    place) {
        std::vector<int> rep(x.number_of_tie_classes(), -1);
        for (std::size_t k = 0; k < first.size(); ++k) {
          int& r = rep[x.tie_class(static_cast<int>(k))];
          if (r < 0) {
            r = place(first[k]);
          } else {
            coarse.unite(r, place(first[k]));
          }
        }
      };
      tie_points(a, first_a, from_a);
      tie_points(b, first_b, from_b);
      for (int p = 0; p < 3 * n; ++p) {
        coarse.unite(p, uf.find(p));
      }
      tie_of.assign(3 * static_cast<std::size_t>(n), 0);
      for (int p = 0; p < 2 * n; ++p) {
        tie_of[label[p]] = coarse.find(p);
      }
      if (rules.ties == TieRule::untie_singletons) {
        for (int p = 0; p < 2 * n; ++p) {
          if (size[label[p]] == 1) {
            // 3n..5n-1 are unused labels, one per boundary point.
            tie_of[label[p]] = 3 * n + p;
          }
        }
      }
    }
    result.diagram
        = DiagramBuilder::build(n, d, a.tied(), label, bead_sum, tie_of);
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Derived diagrams
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Diagram rebuild(Diagram const& x,
                    int            d,
                    bool           tied,
                    bool           keep_beads) {
      int const        n = x.degree();
      std::vector<int> label(2 * static_cast<std::size_t>(n));
      for (int p = 0; p < 2 * n; ++p) {
        label[p] = x.block_of(p);
      }
      std::vector<int> beads(x.number_of_blocks(), 0);
      std::vector<int> ties(x.number_of_blocks());
      for (std::size_t b = 0; b < beads.size(); ++b) {
        if (keep_beads) {
          beads[b] = x.bead(static_cast<int>(b));
        }
        ties[b] = x.tie_class(static_cast<int>(b));
      }
      return DiagramBuilder::build(n, d, tied, label, beads, ties);
    }
  }  // namespace

  Diagram canonicalize(Diagram const& x) {
    return rebuild(x, x.modulus(), x.tied(), true);
  }

  Diagram erase_beads(Diagram const& x) {
    return rebuild(x, x.modulus(), x.tied(), false);
  }

  Diagram erase_ties(Diagram const& x) {
    return rebuild(x, x.modulus(), false, true);
  }

  Diagram with_trivial_ties(Diagram const& x) {
    if (x.tied()) {
      return x;
    }
    return rebuild(x, x.modulus(), true, true);
  }

  Diagram with_modulus(Diagram const& x, int d) {
    check_ambient(x.degree(), d);
    return rebuild(x, d, x.tied(), true);
  }

  ////////////////////////////////////////////////////////////////////////
  // Structural predicates
  ////////////////////////////////////////////////////////////////////////

  bool is_matching(Diagram const& x) {
    auto const blks = x.blocks();
    return std::all_of(blks.begin(), blks.end(), [](auto const& blk) {
      return blk.size() == 2;
    });
  }

  bool is_permutation(Diagram const& x) {
    for (auto const& blk : x.blocks()) {
      if (blk.size() != 2 || !x.is_top(blk[0]) || x.is_top(blk[1])) {
        return false;
      }
    }
    return true;
  }

  bool is_planar_matching(Diagram const& x) {
    auto const blks = x.blocks();
    if (!std::all_of(blks.begin(), blks.end(), [](auto const& blk) {
          return blk.size() == 2;
        })) {
      return false;
    }
    int const n = x.degree();
    // Walk the boundary clockwise: top 1..n then bottom n..1.
    auto position = [n](int p) { return p < n ? p : 3 * n - 1 - p; };
    std::vector<std::pair<int, int>> arcs;
    for (auto const& blk : blks) {
      int u = position(blk[0]);
      int v = position(blk[1]);
      arcs.emplace_back(std::min(u, v), std::max(u, v));
    }
    for (auto const& [a1, b1] : arcs) {
      for (auto const& [a2, b2] : arcs) {
        if (a1 < a2 && a2 < b1 && b1 < b2) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_rook(Diagram const& x) {
    for (auto const& blk : x.blocks()) {
      if (blk.size() > 2) {
        return false;
      }
      if (blk.size() == 2 && (!x.is_top(blk[0]) || x.is_top(blk[1]))) {
        return false;
      }
    }
    return true;
  }

  StructuralClass structural_class(Diagram const& x) {
    if (is_permutation(x)) {
      return StructuralClass::permutation;
    }
    if (is_planar_matching(x)) {
      return StructuralClass::planar_matching;
    }
    auto const blks = x.blocks();
    if (std::all_of(blks.begin(), blks.end(), [](auto const& blk) {
          return blk.size() <= 2;
        })) {
      return StructuralClass::matching;
    }
    return StructuralClass::generic_partition;
  }

  bool singleton_beads_are_zero(Diagram const& x) {
    auto const blks = x.blocks();
    for (std::size_t b = 0; b < blks.size(); ++b) {
      if (blks[b].size() == 1 && x.bead(static_cast<int>(b)) != 0) {
        return false;
      }
    }
    return true;
  }

  bool refines(Diagram const& x, Diagram const& coarse) {
    if (x.degree() != coarse.degree()) {
      return false;
    }
    for (auto const& blk : x.blocks()) {
      for (int p : blk) {
        if (coarse.block_of(p) != coarse.block_of(blk[0])) {
          return false;
        }
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text encoding
  ////////////////////////////////////////////////////////////////////////

  std::string encode(Diagram const& x) {
    int const   n   = x.degree();
    std::string out = "n=" + std::to_string(n) + ";d="
                      + std::to_string(x.modulus()) + ";blocks=[";
    auto const blks = x.blocks();
    for (std::size_t b = 0; b < blks.size(); ++b) {
      if (b != 0) {
        out += ',';
      }
      out += '{';
      for (std::size_t k = 0; k < blks[b].size(); ++k) {
        int p = blks[b][k];
        if (k != 0) {
          out += ',';
        }
        out += p < n ? "t" + std::to_string(p + 1)
                     : "b" + std::to_string(p - n + 1);
      }
      out += "}:" + std::to_string(x.bead(static_cast<int>(b)));
    }
    out += ']';
    if (x.tied()) {
      out += ";ties=[";
      auto const classes = x.tie_classes();
      for (std::size_t c = 0; c < classes.size(); ++c) {
        if (c != 0) {
          out += ',';
        }
        out += '[';
        for (std::size_t k = 0; k < classes[c].size(); ++k) {
          if (k != 0) {
            out += ',';
          }
          out += std::to_string(classes[c][k]);
        }
        out += ']';
      }
      out += ']';
    }
    return out;
  }

  namespace {
    class Reader {
     public:
      explicit Reader(std::string_view text) : _text(text), _rest(text) {}

      [[noreturn]] void fail(std::string const& why) const {
        throw InvalidDiagram("cannot parse diagram '" + std::string(_text)
                             + "': " + why);
      }

      void expect(std::string_view s) {
        if (_rest.substr(0, s.size()) != s) {
          fail("expected '" + std::string(s) + "'");
        }
        _rest.remove_prefix(s.size());
      }

      bool accept(char c) {
        if (!_rest.empty() && _rest.front() == c) {
          _rest.remove_prefix(1);
          return true;
        }
        return false;
      }

      char peek() const {
        return _rest.empty() ? '\0' : _rest.front();
      }

      int integer() {
        int  value = 0;
        auto [ptr, ec]
            = std::from_chars(_rest.data(), _rest.data() + _rest.size(), value);
        if (ec != std::errc() || ptr == _rest.data()) {
          fail("expected an integer");
        }
        _rest.remove_prefix(static_cast<std::size_t>(ptr - _rest.data()));
        return value;
      }

      bool done() const {
        return _rest.empty();
      }

     private:
      std::string_view _text;
      std::string_view _rest;
    };
  }  // namespace

  Diagram parse_diagram(std::string_view text) {
    Reader in(text);
    in.expect("n=");
    int n = in.integer();
    in.expect(";d=");
    int d = in.integer();
    in.expect(";blocks=[");
    std::vector<std::vector<int>> blocks;
    std::vector<int>              beads;
    if (!in.accept(']')) {
      do {
        in.expect("{");
        std::vector<int> blk;
        do {
          char row = in.peek();
          if (row != 't' && row != 'b') {
            in.fail("expected a point t<i> or b<i>");
          }
          in.accept(row);
          int i = in.integer();
          if (i < 1 || i > n) {
            in.fail("point index out of range");
          }
          blk.push_back(row == 't' ? i - 1 : n + i - 1);
        } while (in.accept(','));
        in.expect("}:");
        beads.push_back(in.integer());
        if (beads.back() < 0 || beads.back() >= d) {
          in.fail("bead exponent must lie in [0, d)");
        }
        blocks.push_back(std::move(blk));
      } while (in.accept(','));
      in.expect("]");
    }
    std::optional<std::vector<std::vector<int>>> ties;
    if (in.accept(';')) {
      in.expect("ties=[");
      ties.emplace();
      if (!in.accept(']')) {
        do {
          in.expect("[");
          std::vector<int> cls;
          do {
            cls.push_back(in.integer());
          } while (in.accept(','));
          in.expect("]");
          ties->push_back(std::move(cls));
        } while (in.accept(','));
        in.expect("]");
      }
    }
    if (!in.done()) {
      in.fail("trailing characters");
    }
    return Diagram::from_blocks(n, d, blocks, beads, ties);
  }

}  // namespace framoid
