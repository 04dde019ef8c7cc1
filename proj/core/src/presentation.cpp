// framoid - exact computations in framed and tied diagram monoids

#include "framoid/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <utility>

#include "framoid/error.hpp"

namespace framoid {

  std::string expand_placeholders(std::string_view tmpl, Bindings const& vars) {
    std::string text;
    for (std::size_t pos = 0; pos < tmpl.size(); ++pos) {
      if (tmpl[pos] != '{') {
        text += tmpl[pos];
        continue;
      }
      std::size_t close = tmpl.find('}', pos);
      if (close == std::string_view::npos || close == pos + 1) {
        throw InvalidSymbol("malformed placeholder in '" + std::string(tmpl)
                            + "'");
      }
      std::string_view body = tmpl.substr(pos + 1, close - pos - 1);
      auto             it   = vars.find(body.front());
      if (it == vars.end()) {
        throw InvalidSymbol("unbound variable '" + std::string(1, body.front())
                            + "' in '" + std::string(tmpl) + "'");
      }
      int value = it->second;
      if (body.size() > 1) {
        int  offset = 0;
        auto first  = body.data() + 1 + (body[1] == '+' ? 1 : 0);
        auto [ptr, ec]
            = std::from_chars(first, body.data() + body.size(), offset);
        if (ec != std::errc() || ptr != body.data() + body.size()) {
          throw InvalidSymbol("malformed placeholder '{" + std::string(body)
                              + "}'");
        }
        value += offset;
      }
      text += std::to_string(value);
      pos = close;
    }
    return text;
  }

  Word instantiate(std::string_view tmpl, Bindings const& vars) {
    return parse_word(expand_placeholders(tmpl, vars));
  }

  std::string describe(Bindings const& vars) {
    std::string out;
    for (auto const& [name, value] : vars) {
      if (!out.empty()) {
        out += ',';
      }
      out += std::string(1, name) + "=" + std::to_string(value);
    }
    return out;
  }

  namespace {
    Word repeat(GenSymbol const& sym, int times) {
      return Word(static_cast<std::size_t>(std::max(times, 0)), sym);
    }

    Word concat(std::initializer_list<Word> parts) {
      Word out;
      for (auto const& w : parts) {
        out.insert(out.end(), w.begin(), w.end());
      }
      return out;
    }

    // Image of j under the transposition (i, i + 1).
    int swap_image(int i, int j) {
      return j == i ? i + 1 : (j == i + 1 ? i : j);
    }

    using Instances = std::vector<RelationInstance>;
    using Generate  = std::function<Instances(int, int)>;

    RelationSchema custom(std::string name, std::string text, Generate gen) {
      return {std::move(name), std::move(text), std::move(gen)};
    }

    bool adjacent(Bindings const& v) {
      return std::abs(v.at('i') - v.at('j')) == 1;
    }
    bool distant(Bindings const& v) {
      return std::abs(v.at('i') - v.at('j')) > 1;
    }
    bool less(Bindings const& v) {
      return v.at('i') < v.at('j');
    }

    using V = Variable;

    // i, j ranging over the indices of adjacent-strand generators.
    std::vector<Variable> ij_low() {
      return {V::index('i', 1, -1), V::index('j', 1, -1)};
    }

    ////////////////////////////////////////////////////////////////////////
    // Relation groups
    ////////////////////////////////////////////////////////////////////////

    void coxeter(std::vector<RelationSchema>& out) {
      out.push_back(make_relation(
          "crossing-involution", "s{i} s{i}", "", {V::index('i', 1, -1)}));
      out.push_back(make_relation("crossing-commute",
                                  "s{i} s{j}",
                                  "s{j} s{i}",
                                  ij_low(),
                                  [](auto const& v) {
                                    return distant(v) && less(v);
                                  },
                                  "|i-j| > 1"));
      out.push_back(make_relation("crossing-braid",
                                  "s{i} s{j} s{i}",
                                  "s{j} s{i} s{j}",
                                  ij_low(),
                                  [](auto const& v) {
                                    return adjacent(v) && less(v);
                                  },
                                  "|i-j| = 1"));
    }

    void jones(std::vector<RelationSchema>& out) {
      out.push_back(make_relation(
          "tangle-idempotent", "t{i} t{i}", "t{i}", {V::index('i', 1, -1)}));
      out.push_back(make_relation("tangle-commute",
                                  "t{i} t{j}",
                                  "t{j} t{i}",
                                  ij_low(),
                                  [](auto const& v) {
                                    return distant(v) && less(v);
                                  },
                                  "|i-j| > 1"));
      out.push_back(make_relation("tangle-straighten",
                                  "t{i} t{j} t{i}",
                                  "t{i}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
    }

    void brauer_mixed(std::vector<RelationSchema>& out) {
      out.push_back(make_relation("tangle-absorbs-crossing-right",
                                  "t{i} s{i}",
                                  "t{i}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation("tangle-absorbs-crossing-left",
                                  "s{i} t{i}",
                                  "t{i}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation("tangle-crossing-commute",
                                  "t{i} s{j}",
                                  "s{j} t{i}",
                                  ij_low(),
                                  distant,
                                  "|i-j| > 1"));
      out.push_back(make_relation("crossing-tangle-tangle",
                                  "s{i} t{j} t{i}",
                                  "s{j} t{i}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
      out.push_back(make_relation("tangle-tangle-crossing",
                                  "t{i} t{j} s{i}",
                                  "t{i} s{j}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
      // Consequences of the above, checked for the record.
      out.push_back(make_relation("crossing-conjugates-tangle",
                                  "s{i} t{j} s{i}",
                                  "s{j} t{i} s{j}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
      out.push_back(make_relation("tangle-crossing-tangle",
                                  "t{i} s{j} t{i}",
                                  "t{i}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
      out.push_back(make_relation("tangle-tangle-as-crossings-right",
                                  "t{i} t{j}",
                                  "t{i} s{j} s{i}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
      out.push_back(make_relation("tangle-tangle-as-crossings-left",
                                  "t{i} t{j}",
                                  "s{j} s{i} t{j}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
    }

    void abacus(std::vector<RelationSchema>& out) {
      out.push_back(custom(
          "bead-order", "o{i}^d = 1", [](int d, int n) -> Instances {
            Instances result;
            for (int i = 1; i <= n; ++i) {
              result.push_back({repeat(GenSymbol::o(i), d),
                                {},
                                "i=" + std::to_string(i)});
            }
            return result;
          }));
      out.push_back(make_relation("bead-commute",
                                  "o{i} o{j}",
                                  "o{j} o{i}",
                                  {V::index('i', 1, 0), V::index('j', 1, 0)},
                                  less,
                                  "i < j"));
    }

    void bead_tangle(std::vector<RelationSchema>& out) {
      out.push_back(make_relation("bead-slides-through-cap",
                                  "t{i} o{i}",
                                  "t{i} o{i+1}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation("bead-slides-through-cup",
                                  "o{i} t{i}",
                                  "o{i+1} t{i}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation("bead-tangle-commute",
                                  "o{i} t{j}",
                                  "t{j} o{i}",
                                  {V::index('i', 1, 0), V::index('j', 1, -1)},
                                  [](auto const& v) {
                                    return v.at('i') != v.at('j')
                                           && v.at('i') != v.at('j') + 1;
                                  },
                                  "i != j, j+1"));
      out.push_back(make_relation("beaded-loop-removed",
                                 "t{i} o{i}^{k} t{i}",
                                 "t{i}",
                                 {V::index('i', 1, -1), V::power('k')}));
    }

    void bead_crossing(std::vector<RelationSchema>& out) {
      out.push_back(custom("bead-slides-along-crossing",
                           "o{j} s{i} = s{i} o{s_i(j)}",
                           [](int, int n) -> Instances {
                             Instances result;
                             for (int i = 1; i < n; ++i) {
                               for (int j = 1; j <= n; ++j) {
                                 result.push_back(
                                     {{GenSymbol::o(j), GenSymbol::s(i)},
                                      {GenSymbol::s(i),
                                       GenSymbol::o(swap_image(i, j))},
                                      describe({{'i', i}, {'j', j}})});
                               }
                             }
                             return result;
                           }));
    }

    void partitions(std::vector<RelationSchema>& out) {
      out.push_back(make_relation("merge-idempotent",
                                  "e{i},{j} e{i},{j}",
                                  "e{i},{j}",
                                  {V::index('i', 1, 0), V::index('j', 1, 0)},
                                  less,
                                  "i < j"));
      out.push_back(custom("merge-commute",
                           "e{i},{j} e{r},{s} = e{r},{s} e{i},{j}",
                           [](int, int n) -> Instances {
                             Instances result;
                             for (int i = 1; i <= n; ++i) {
                               for (int j = i + 1; j <= n; ++j) {
                                 for (int r = 1; r <= n; ++r) {
                                   for (int s = r + 1; s <= n; ++s) {
                                     result.push_back(
                                         {{GenSymbol::e(i, j),
                                           GenSymbol::e(r, s)},
                                          {GenSymbol::e(r, s),
                                           GenSymbol::e(i, j)},
                                          describe({{'i', i},
                                                    {'j', j},
                                                    {'r', r},
                                                    {'s', s}})});
                                   }
                                 }
                               }
                             }
                             return result;
                           }));
      std::vector<Variable> ijk
          = {V::index('i', 1, 0), V::index('j', 1, 0), V::index('k', 1, 0)};
      auto increasing = [](Bindings const& v) {
        return v.at('i') < v.at('j') && v.at('j') < v.at('k');
      };
      out.push_back(make_relation("merge-transitive-left",
                                  "e{i},{j} e{i},{k}",
                                  "e{i},{j} e{j},{k}",
                                  ijk,
                                  increasing,
                                  "i < j < k"));
      out.push_back(make_relation("merge-transitive-right",
                                  "e{i},{j} e{j},{k}",
                                  "e{i},{k} e{j},{k}",
                                  ijk,
                                  increasing,
                                  "i < j < k"));
    }

    void bead_partition(std::vector<RelationSchema>& out) {
      out.push_back(custom("bead-merge-commute",
                           "o{k} e{i},{j} = e{i},{j} o{k}",
                           [](int, int n) -> Instances {
                             Instances result;
                             for (int i = 1; i <= n; ++i) {
                               for (int j = i + 1; j <= n; ++j) {
                                 for (int k = 1; k <= n; ++k) {
                                   result.push_back(
                                       {{GenSymbol::o(k), GenSymbol::e(i, j)},
                                        {GenSymbol::e(i, j), GenSymbol::o(k)},
                                        describe({{'i', i},
                                                  {'j', j},
                                                  {'k', k}})});
                                 }
                               }
                             }
                             return result;
                           }));
      out.push_back(make_relation("bead-moves-within-merge",
                                  "o{i} e{i},{j}",
                                  "o{j} e{i},{j}",
                                  {V::index('i', 1, 0), V::index('j', 1, 0)},
                                  less,
                                  "i < j"));
    }

    // r_i = s_{i-1} ... s_1 p_1 s_1 ... s_{i-1}.
    Word rook_from_product(int i) {
      Word w;
      for (int k = i - 1; k >= 1; --k) {
        w.push_back(GenSymbol::s(k));
      }
      w.push_back(GenSymbol::p(1));
      for (int k = 1; k <= i - 1; ++k) {
        w.push_back(GenSymbol::s(k));
      }
      return w;
    }

    // r_1 r_2 ... r_i.
    Word rook_prefix(int i) {
      Word w;
      for (int k = 1; k <= i; ++k) {
        w.push_back(GenSymbol::r(k));
      }
      return w;
    }

    void rook(std::vector<RelationSchema>& out) {
      std::vector<Variable> ij_all = {V::index('i', 1, 0), V::index('j', 1, 0)};
      out.push_back(make_relation(
          "partial-idempotent", "p{i} p{i}", "p{i}", {V::index('i', 1, 0)}));
      out.push_back(make_relation("partial-commute",
                                  "p{i} p{j}",
                                  "p{j} p{i}",
                                  ij_all,
                                  less,
                                  "i < j"));
      out.push_back(make_relation("partial-crossing-commute",
                                  "p{i} s{j}",
                                  "s{j} p{i}",
                                  {V::index('i', 1, 0), V::index('j', 1, -1)},
                                  [](auto const& v) {
                                    return v.at('j') > v.at('i');
                                  },
                                  "j > i"));
      out.push_back(make_relation("partial-absorbs-crossing",
                                  "p{i} s{j}",
                                  "p{i}",
                                  {V::index('i', 1, 0), V::index('j', 1, -1)},
                                  [](auto const& v) {
                                    return v.at('j') < v.at('i');
                                  },
                                  "j < i"));
      out.push_back(make_relation("partial-extends",
                                  "p{i} s{i} p{i}",
                                  "p{i+1}",
                                  {V::index('i', 1, -1)}));

      out.push_back(make_relation(
          "rook-idempotent", "r{i} r{i}", "r{i}", {V::index('i', 1, 0)}));
      out.push_back(make_relation("rook-commute",
                                  "r{i} r{j}",
                                  "r{j} r{i}",
                                  ij_all,
                                  less,
                                  "i < j"));
      out.push_back(make_relation("rook-crossing-commute",
                                  "r{j} s{i}",
                                  "s{i} r{j}",
                                  {V::index('i', 1, -1), V::index('j', 1, 0)},
                                  [](auto const& v) {
                                    return v.at('j') != v.at('i')
                                           && v.at('j') != v.at('i') + 1;
                                  },
                                  "j != i, i+1"));
      out.push_back(make_relation("rook-moves-right",
                                  "r{i} s{i}",
                                  "s{i} r{i+1}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation("rook-moves-left",
                                  "r{i+1} s{i}",
                                  "s{i} r{i}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation("rook-crossing-rook",
                                  "r{i} s{i} r{i}",
                                  "r{i} r{i+1}",
                                  {V::index('i', 1, -1)}));

      out.push_back(custom("rook-from-partial",
                           "r{i} = s{i-1} ... s1 p1 s1 ... s{i-1}",
                           [](int, int n) -> Instances {
                             Instances result;
                             for (int i = 1; i <= n; ++i) {
                               result.push_back({{GenSymbol::r(i)},
                                                 rook_from_product(i),
                                                 describe({{'i', i}})});
                             }
                             return result;
                           }));
      out.push_back(custom("partial-from-rooks",
                           "p{i} = r1 r2 ... r{i}",
                           [](int, int n) -> Instances {
                             Instances result;
                             for (int i = 1; i <= n; ++i) {
                               result.push_back({{GenSymbol::p(i)},
                                                 rook_prefix(i),
                                                 describe({{'i', i}})});
                             }
                             return result;
                           }));
    }

    // Beads on lines commute with the rook generators.
    void bead_rook_common(std::vector<RelationSchema>& out) {
      out.push_back(make_relation("partial-bead-commute",
                                  "p{i} o{j}",
                                  "o{j} p{i}",
                                  {V::index('i', 1, 0), V::index('j', 1, 0)},
                                  less,
                                  "i < j"));
      out.push_back(make_relation("rook-bead-commute",
                                  "r{i} o{j}",
                                  "o{j} r{i}",
                                  {V::index('i', 1, 0), V::index('j', 1, 0)},
                                  [](auto const& v) {
                                    return v.at('i') != v.at('j');
                                  },
                                  "i != j"));
    }

    void bead_rook_dropping(std::vector<RelationSchema>& out) {
      std::vector<Variable> ji = {V::index('i', 1, 0), V::index('j', 1, 0)};
      auto                  le = [](Bindings const& v) {
        return v.at('j') <= v.at('i');
      };
      out.push_back(make_relation("partial-absorbs-bead-right",
                                  "p{i} o{j}",
                                  "p{i}",
                                  ji,
                                  le,
                                  "j <= i"));
      out.push_back(make_relation("partial-absorbs-bead-left",
                                  "o{j} p{i}",
                                  "p{i}",
                                  ji,
                                  le,
                                  "j <= i"));
      out.push_back(make_relation(
          "rook-absorbs-bead-right", "r{i} o{i}", "r{i}", {V::index('i', 1, 0)}));
      out.push_back(make_relation(
          "rook-absorbs-bead-left", "o{i} r{i}", "r{i}", {V::index('i', 1, 0)}));
    }

    void bead_rook_blocking(std::vector<RelationSchema>& out) {
      out.push_back(custom(
          "partial-beads-partial",
          "p{i} o1^{m1} ... o{i}^{mi} p{j} = p{j} o1^{m1} ... o{i}^{mi} p{i} "
          "= p{j}, i <= j",
          [](int d, int n) -> Instances {
            Instances result;
            for (int i = 1; i <= n; ++i) {
              std::vector<int> m(static_cast<std::size_t>(i), 0);
              while (true) {
                Word beads;
                for (int k = 1; k <= i; ++k) {
                  beads.push_back(GenSymbol::o(k, m[k - 1]));
                }
                std::string ms;
                for (int v : m) {
                  ms += std::to_string(v);
                }
                for (int j = i; j <= n; ++j) {
                  std::string label = describe({{'i', i}, {'j', j}}) + ",m=" + ms;
                  result.push_back({concat({{GenSymbol::p(i)}, beads, {GenSymbol::p(j)}}),
                                    {GenSymbol::p(j)},
                                    label});
                  result.push_back({concat({{GenSymbol::p(j)}, beads, {GenSymbol::p(i)}}),
                                    {GenSymbol::p(j)},
                                    label});
                }
                // Next exponent vector in lexicographic order.
                int k = i - 1;
                while (k >= 0 && m[k] == d - 1) {
                  m[k--] = 0;
                }
                if (k < 0) {
                  break;
                }
                ++m[k];
              }
            }
            return result;
          }));
      out.push_back(make_relation("rook-beads-rook",
                                  "r{i} o{i}^{k} r{i}",
                                  "r{i}",
                                  {V::index('i', 1, 0), V::power('k')}));
    }

    void tied_symmetric(std::vector<RelationSchema>& out) {
      out.push_back(make_relation(
          "tie-idempotent", "e{i} e{i}", "e{i}", {V::index('i', 1, -1)}));
      out.push_back(make_relation(
          "tie-commute", "e{i} e{j}", "e{j} e{i}", ij_low(), less, "i < j"));
      out.push_back(make_relation("tie-crossing-commute",
                                  "s{i} e{j}",
                                  "e{j} s{i}",
                                  ij_low(),
                                  [](auto const& v) { return !adjacent(v); },
                                  "|i-j| != 1"));
      out.push_back(make_relation("tie-moves-along-crossings",
                                  "e{i} s{j} s{i}",
                                  "s{j} s{i} e{j}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
      out.push_back(make_relation("tie-tie-crossing-left",
                                  "e{i} e{j} s{i}",
                                  "e{j} s{i} e{j}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
      out.push_back(make_relation("tie-tie-crossing-right",
                                  "e{j} s{i} e{j}",
                                  "s{i} e{i} e{j}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
    }

    void tied_tie_idempotents(std::vector<RelationSchema>& out) {
      out.push_back(make_relation(
          "tie-idempotent", "e{i} e{i}", "e{i}", {V::index('i', 1, -1)}));
      out.push_back(make_relation(
          "tie-commute", "e{i} e{j}", "e{j} e{i}", ij_low(), less, "i < j"));
    }

    void tied_jones(std::vector<RelationSchema>& out) {
      out.push_back(make_relation("tied-tangle-idempotent",
                                  "f{i} f{i}",
                                  "f{i}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation("tied-tangle-commute",
                                  "f{i} f{j}",
                                  "f{j} f{i}",
                                  ij_low(),
                                  [](auto const& v) {
                                    return distant(v) && less(v);
                                  },
                                  "|i-j| > 1"));
      out.push_back(make_relation(
          "tie-absorbed-by-tangle-left", "e{i} t{i}", "t{i}", {V::index('i', 1, -1)}));
      out.push_back(make_relation(
          "tie-absorbed-by-tangle-right", "t{i} e{i}", "t{i}", {V::index('i', 1, -1)}));
      out.push_back(make_relation(
          "tie-absorbed-by-tied-tangle", "f{i} e{i}", "f{i}", {V::index('i', 1, -1)}));
      out.push_back(make_relation("tie-tied-tangle-commute",
                                  "e{i} f{j}",
                                  "f{j} e{i}",
                                  ij_low()));
      out.push_back(make_relation(
          "tangle-absorbs-tied-tangle-left", "t{i} f{i}", "t{i}", {V::index('i', 1, -1)}));
      out.push_back(make_relation(
          "tangle-absorbs-tied-tangle-right", "f{i} t{i}", "t{i}", {V::index('i', 1, -1)}));
      out.push_back(make_relation("tangle-tie-commute",
                                  "t{i} e{j}",
                                  "e{j} t{i}",
                                  ij_low(),
                                  distant,
                                  "|i-j| > 1"));
      out.push_back(make_relation("tangle-tied-tangle-commute",
                                  "t{i} f{j}",
                                  "f{j} t{i}",
                                  ij_low(),
                                  distant,
                                  "|i-j| > 1"));
      out.push_back(make_relation("tangle-tie-tangle",
                                  "t{i} e{j} t{i}",
                                  "t{i}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
      out.push_back(make_relation("tied-tangle-from-tie",
                                  "f{i} e{j}",
                                  "e{j} t{i} e{j}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
    }

    void tied_brauer(std::vector<RelationSchema>& out) {
      out.push_back(make_relation("tied-tangle-crossing-commute",
                                  "f{i} s{j}",
                                  "s{j} f{i}",
                                  ij_low(),
                                  distant,
                                  "|i-j| > 1"));
      out.push_back(make_relation("tied-tangle-absorbs-crossing-right",
                                  "f{i} s{i}",
                                  "f{i}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation("tied-tangle-absorbs-crossing-left",
                                  "s{i} f{i}",
                                  "f{i}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation("crossing-conjugates-tied-tangle",
                                  "s{i} f{j} s{i}",
                                  "s{j} f{i} s{j}",
                                  ij_low(),
                                  adjacent,
                                  "|i-j| = 1"));
    }

    void tied_partial(std::vector<RelationSchema>& out) {
      out.push_back(make_relation("tie-absorbed-by-partial-left",
                                  "e{i} p{j}",
                                  "p{j}",
                                  {V::index('i', 1, -1), V::index('j', 1, 0)},
                                  [](auto const& v) {
                                    return v.at('i') <= v.at('j');
                                  },
                                  "i <= j"));
      out.push_back(make_relation("tie-absorbed-by-partial-right",
                                  "p{j} e{i}",
                                  "p{j}",
                                  {V::index('i', 1, -1), V::index('j', 1, 0)},
                                  [](auto const& v) {
                                    return v.at('i') <= v.at('j');
                                  },
                                  "i <= j"));
      out.push_back(make_relation("tie-partial-commute",
                                  "e{i} p{j}",
                                  "p{j} e{i}",
                                  {V::index('i', 1, -1), V::index('j', 1, 0)},
                                  [](auto const& v) {
                                    return v.at('i') > v.at('j');
                                  },
                                  "i > j"));
    }

    void tied_rook(std::vector<RelationSchema>& out) {
      std::vector<Variable> ij_all = {V::index('i', 1, 0), V::index('j', 1, 0)};
      std::vector<Variable> ij_mixed
          = {V::index('i', 1, -1), V::index('j', 1, 0)};
      out.push_back(make_relation(
          "rook-idempotent", "r{i} r{i}", "r{i}", {V::index('i', 1, 0)}));
      out.push_back(make_relation("rook-commute",
                                  "r{i} r{j}",
                                  "r{j} r{i}",
                                  ij_all,
                                  less,
                                  "i < j"));
      out.push_back(custom("crossing-conjugates-rook",
                           "s{i} r{j} = r{s_i(j)} s{i}",
                           [](int, int n) -> Instances {
                             Instances result;
                             for (int i = 1; i < n; ++i) {
                               for (int j = 1; j <= n; ++j) {
                                 result.push_back(
                                     {{GenSymbol::s(i), GenSymbol::r(j)},
                                      {GenSymbol::r(swap_image(i, j)),
                                       GenSymbol::s(i)},
                                      describe({{'i', i}, {'j', j}})});
                               }
                             }
                             return result;
                           }));
      out.push_back(make_relation("rook-crossing-rook",
                                  "r{i} s{i} r{i}",
                                  "r{i} r{i+1}",
                                  {V::index('i', 1, -1)}));
      out.push_back(make_relation(
          "tied-rook-idempotent", "q{i} q{i}", "q{i}", {V::index('i', 1, 0)}));
      out.push_back(make_relation("tied-rook-commute",
                                  "q{i} q{j}",
                                  "q{j} q{i}",
                                  ij_all,
                                  less,
                                  "i < j"));
      out.push_back(make_relation("tied-rook-tie-commute",
                                  "q{j} e{i}",
                                  "e{i} q{j}",
                                  ij_mixed));
      out.push_back(custom("crossing-conjugates-tied-rook",
                           "s{i} q{j} = q{s_i(j)} s{i}",
                           [](int, int n) -> Instances {
                             Instances result;
                             for (int i = 1; i < n; ++i) {
                               for (int j = 1; j <= n; ++j) {
                                 result.push_back(
                                     {{GenSymbol::s(i), GenSymbol::q(j)},
                                      {GenSymbol::q(swap_image(i, j)),
                                       GenSymbol::s(i)},
                                      describe({{'i', i}, {'j', j}})});
                               }
                             }
                             return result;
                           }));
      auto near = [](Bindings const& v) {
        return v.at('j') == v.at('i') || v.at('j') == v.at('i') + 1;
      };
      out.push_back(make_relation("tie-rook-tie",
                                  "e{i} r{j} e{i}",
                                  "e{i} q{j}",
                                  ij_mixed,
                                  near,
                                  "j = i, i+1"));
      out.push_back(make_relation("tie-rook-commute",
                                  "e{i} r{j}",
                                  "r{j} e{i}",
                                  ij_mixed,
                                  [near](auto const& v) { return !near(v); },
                                  "j != i, i+1"));
      out.push_back(make_relation(
          "rook-tied-rook-commute", "r{i} q{j}", "q{j} r{i}", ij_all));
      out.push_back(make_relation(
          "tied-rook-absorbed", "q{i} r{i}", "r{i}", {V::index('i', 1, 0)}));
      out.push_back(make_relation("rook-tie-rook",
                                  "r{j} e{i} r{j}",
                                  "r{j}",
                                  ij_mixed,
                                  near,
                                  "j = i, i+1"));
      out.push_back(make_relation("rook-tie-next-rook",
                                  "r{i} e{i} r{i+1}",
                                  "s{i} q{i} r{i+1}",
                                  {V::index('i', 1, -1)}));
      out.push_back(custom("partial-from-rooks",
                           "p{i} = r1 r2 ... r{i}",
                           [](int, int n) -> Instances {
                             Instances result;
                             for (int i = 1; i <= n; ++i) {
                               result.push_back({{GenSymbol::p(i)},
                                                 rook_prefix(i),
                                                 describe({{'i', i}})});
                             }
                             return result;
                           }));
      out.push_back(custom("tied-partial-from-rooks",
                           "w{i} = r1 ... r{i-1} q{i}",
                           [](int, int n) -> Instances {
                             Instances result;
                             for (int i = 1; i <= n; ++i) {
                               Word rhs = rook_prefix(i - 1);
                               rhs.push_back(GenSymbol::q(i));
                               result.push_back({{GenSymbol::w(i)},
                                                 rhs,
                                                 describe({{'i', i}})});
                             }
                             return result;
                           }));
    }
  }  // namespace

  std::vector<Bindings> enumerate_bindings(
      std::vector<Variable> const&                vars,
      std::function<bool(Bindings const&)> const& when,
      int                                         d,
      int                                         n) {
    std::vector<Bindings> result;
    Bindings              b;
    // Odometer over the variables in order.
    std::function<void(std::size_t)> walk = [&](std::size_t k) {
      if (k == vars.size()) {
        if (!when || when(b)) {
          result.push_back(b);
        }
        return;
      }
      auto const& v  = vars[k];
      int         lo = v.exponent ? 0 : v.lo;
      int         hi = v.exponent ? d - 1 : n + v.hi;
      for (int x = lo; x <= hi; ++x) {
        b[v.name] = x;
        walk(k + 1);
      }
      b.erase(v.name);
    };
    walk(0);
    return result;
  }

  RelationSchema make_relation(std::string                          name,
                               std::string                          lhs,
                               std::string                          rhs,
                               std::vector<Variable>                vars,
                               std::function<bool(Bindings const&)> when,
                               std::string                          condition) {
    std::string text = lhs + " = " + (rhs.empty() ? "1" : rhs);
    if (!condition.empty()) {
      text += ", " + condition;
    }
    auto gen = [lhs, rhs, vars, when](int d, int n) -> Instances {
      Instances result;
      for (auto const& b : enumerate_bindings(vars, when, d, n)) {
        result.push_back(
            {instantiate(lhs, b), instantiate(rhs, b), describe(b)});
      }
      return result;
    };
    return {std::move(name), std::move(text), std::move(gen)};
  }

  Presentation presentation(MonoidFamily const& fam) {
    Presentation p;
    p.generators = fam.generator_symbols();
    auto& r      = p.relations;
    switch (fam.name()) {
      case FamilyName::Cdn:
        abacus(r);
        break;
      case FamilyName::Sdn:
        coxeter(r);
        abacus(r);
        bead_crossing(r);
        break;
      case FamilyName::Pn:
        partitions(r);
        break;
      case FamilyName::Pdn:
        partitions(r);
        abacus(r);
        bead_partition(r);
        break;
      case FamilyName::Jn:
        jones(r);
        break;
      case FamilyName::Jdn:
        jones(r);
        abacus(r);
        bead_tangle(r);
        break;
      case FamilyName::Brn:
        coxeter(r);
        jones(r);
        brauer_mixed(r);
        break;
      case FamilyName::Brdn:
        coxeter(r);
        jones(r);
        brauer_mixed(r);
        abacus(r);
        bead_tangle(r);
        bead_crossing(r);
        break;
      case FamilyName::Rn:
        coxeter(r);
        rook(r);
        break;
      case FamilyName::Rdn:
        coxeter(r);
        rook(r);
        abacus(r);
        bead_crossing(r);
        bead_rook_common(r);
        bead_rook_dropping(r);
        break;
      case FamilyName::RPrimeDn:
        coxeter(r);
        rook(r);
        abacus(r);
        bead_crossing(r);
        bead_rook_common(r);
        bead_rook_blocking(r);
        break;
      case FamilyName::tSn:
        coxeter(r);
        tied_symmetric(r);
        break;
      case FamilyName::tJn:
        jones(r);
        tied_tie_idempotents(r);
        tied_jones(r);
        break;
      case FamilyName::tBrn:
        coxeter(r);
        jones(r);
        brauer_mixed(r);
        tied_symmetric(r);
        tied_jones(r);
        tied_brauer(r);
        break;
      case FamilyName::tRn:
        coxeter(r);
        rook(r);
        tied_symmetric(r);
        tied_partial(r);
        break;
      case FamilyName::tRPrimeN:
        coxeter(r);
        tied_symmetric(r);
        tied_rook(r);
        break;
    }
    return p;
  }

  bool RelationReport::pass() const noexcept {
    return failures() == 0;
  }

  std::size_t RelationReport::instances() const noexcept {
    std::size_t total = 0;
    for (auto const& s : schemas) {
      total += s.instances;
    }
    return total;
  }

  std::size_t RelationReport::failures() const noexcept {
    std::size_t total = 0;
    for (auto const& s : schemas) {
      total += s.failures.size();
    }
    return total;
  }

  RelationReport check_relations(MonoidFamily const& fam) {
    return check_relations(fam, presentation(fam).relations);
  }

  RelationReport check_relations(MonoidFamily const&                fam,
                                 std::vector<RelationSchema> const& schemas) {
    RelationReport report;
    for (auto const& schema : schemas) {
      SchemaReport sr{schema.name, schema.text, 0, {}};
      for (auto& inst : schema.instances(fam.modulus(), fam.degree())) {
        ++sr.instances;
        Diagram lhs = evaluate(fam, inst.lhs).diagram;
        Diagram rhs = evaluate(fam, inst.rhs).diagram;
        if (lhs != rhs) {
          sr.failures.push_back({std::move(inst), lhs, rhs});
        }
      }
      report.schemas.push_back(std::move(sr));
    }
    return report;
  }

}  // namespace framoid
