// framoid - exact computations in framed and tied diagram monoids

#include "framoid/family.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <thread>
#include <unordered_set>
#include <utility>

#include "framoid/combinatorics.hpp"
#include "framoid/error.hpp"
#include "framoid/generators.hpp"

namespace framoid {

  namespace {
    struct FamilyInfo {
      FamilyName       name;
      char const*      label;
      bool             tied;
      bool             beaded;
      ComposeRules     rules;
      // Kinds that generate the family, in output order.
      std::vector<GenKind> generators;
      // Further kinds whose diagrams lie in the family.
      std::vector<GenKind> derived;
    };

    using K = GenKind;

    std::vector<FamilyInfo> const& infos() {
      static std::vector<FamilyInfo> const table = {
          {FamilyName::Cdn, "Cdn", false, true, {}, {K::bead}, {}},
          {FamilyName::Sdn, "Sdn", false, true, {}, {K::crossing, K::bead}, {}},
          {FamilyName::Pn, "Pn", false, false, {}, {K::tie}, {}},
          {FamilyName::Pdn, "Pdn", false, true, {}, {K::tie, K::bead}, {}},
          {FamilyName::Jn, "Jn", false, false, {}, {K::tangle}, {}},
          {FamilyName::Jdn, "Jdn", false, true, {}, {K::tangle, K::bead}, {}},
          {FamilyName::Brn,
           "Brn",
           false,
           false,
           {},
           {K::crossing, K::tangle},
           {}},
          {FamilyName::Brdn,
           "Brdn",
           false,
           true,
           {},
           {K::crossing, K::tangle, K::bead},
           {}},
          {FamilyName::Rn,
           "Rn",
           false,
           false,
           {},
           {K::crossing, K::rook_product},
           {K::rook}},
          {FamilyName::Rdn,
           "Rdn",
           false,
           true,
           {BeadRule::drop_on_singletons, TieRule::ramified},
           {K::crossing, K::rook_product, K::bead},
           {K::rook}},
          {FamilyName::RPrimeDn,
           "RPrimeDn",
           false,
           true,
           {},
           {K::crossing, K::rook_product, K::bead},
           {K::rook}},
          {FamilyName::tSn, "tSn", true, false, {}, {K::crossing, K::tie}, {}},
          {FamilyName::tJn,
           "tJn",
           true,
           false,
           {},
           {K::tangle, K::tie, K::tied_tangle},
           {}},
          {FamilyName::tBrn,
           "tBrn",
           true,
           false,
           {},
           {K::crossing, K::tangle, K::tie, K::tied_tangle},
           {}},
          {FamilyName::tRn,
           "tRn",
           true,
           false,
           {BeadRule::keep, TieRule::untie_singletons},
           {K::crossing, K::rook_product, K::tie},
           {K::rook}},
          {FamilyName::tRPrimeN,
           "tRPrimeN",
           true,
           false,
           {},
           {K::crossing, K::tie, K::rook, K::tied_rook},
           {K::rook_product, K::tied_rook_product}},
      };
      return table;
    }

    FamilyInfo const& info(FamilyName f) {
      return infos()[static_cast<std::size_t>(f)];
    }

    bool has_beads_parameter(FamilyName f) {
      return info(f).beaded;
    }
  }  // namespace

  std::vector<FamilyName> const& all_families() {
    static std::vector<FamilyName> const all = [] {
      std::vector<FamilyName> out;
      for (auto const& i : infos()) {
        out.push_back(i.name);
      }
      return out;
    }();
    return all;
  }

  std::string to_string(FamilyName f) {
    return info(f).label;
  }

  FamilyName family_from_string(std::string_view name) {
    auto lower = [](std::string_view s) {
      std::string out(s);
      for (auto& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
      }
      return out;
    };
    for (auto const& i : infos()) {
      if (lower(i.label) == lower(name)) {
        return i.name;
      }
    }
    throw InvalidSymbol("unknown family '" + std::string(name) + "'");
  }

  ////////////////////////////////////////////////////////////////////////
  // MonoidFamily
  ////////////////////////////////////////////////////////////////////////

  MonoidFamily::MonoidFamily(FamilyName name, int d, int n)
      : _name(name), _d(has_beads_parameter(name) ? d : 1), _n(n) {
    if (n < 1) {
      throw InvalidSymbol("degree n must be at least 1, got "
                          + std::to_string(n));
    }
    if (d < 1) {
      throw InvalidSymbol("modulus d must be at least 1, got "
                          + std::to_string(d));
    }
  }

  bool MonoidFamily::tied() const noexcept {
    return info(_name).tied;
  }

  bool MonoidFamily::beaded() const noexcept {
    return info(_name).beaded;
  }

  ComposeRules MonoidFamily::rules() const noexcept {
    return info(_name).rules;
  }

  std::vector<GenSymbol> MonoidFamily::generator_symbols() const {
    std::vector<GenSymbol> out;
    for (GenKind k : info(_name).generators) {
      switch (k) {
        case K::tangle:
        case K::crossing:
        case K::tied_tangle:
          for (int i = 1; i < _n; ++i) {
            out.push_back({k, i, 0, 1});
          }
          break;
        case K::bead:
          if (_d > 1) {
            for (int i = 1; i <= _n; ++i) {
              out.push_back(GenSymbol::o(i));
            }
          }
          break;
        case K::rook:
        case K::rook_product:
        case K::tied_rook:
        case K::tied_rook_product:
          for (int i = 1; i <= _n; ++i) {
            out.push_back({k, i, 0, 1});
          }
          break;
        case K::tie:
          if (tied()) {
            for (int i = 1; i < _n; ++i) {
              out.push_back(GenSymbol::e(i));
            }
          } else {
            for (int i = 1; i <= _n; ++i) {
              for (int j = i + 1; j <= _n; ++j) {
                out.push_back(GenSymbol::e(i, j));
              }
            }
          }
          break;
      }
    }
    return out;
  }

  bool MonoidFamily::accepts(GenSymbol const& sym) const {
    auto const& i = info(_name);
    return std::find(i.generators.begin(), i.generators.end(), sym.kind)
               != i.generators.end()
           || std::find(i.derived.begin(), i.derived.end(), sym.kind)
                  != i.derived.end();
  }

  std::string MonoidFamily::to_string() const {
    return framoid::to_string(_name) + "(d=" + std::to_string(_d)
           + ",n=" + std::to_string(_n) + ")";
  }

  ////////////////////////////////////////////////////////////////////////
  // Diagrams of a family
  ////////////////////////////////////////////////////////////////////////

  Diagram generator(MonoidFamily const& fam, GenSymbol const& sym) {
    if (!fam.accepts(sym)) {
      throw InvalidSymbol("symbol " + to_string(sym) + " does not belong to "
                          + fam.to_string());
    }
    return generator(sym, fam.degree(), fam.modulus(), fam.tied());
  }

  Diagram identity(MonoidFamily const& fam) {
    return Diagram::identity(fam.degree(), fam.modulus(), fam.tied());
  }

  std::vector<Diagram> generating_set(MonoidFamily const& fam) {
    std::vector<Diagram> out;
    for (auto const& sym : fam.generator_symbols()) {
      out.push_back(generator(fam, sym));
    }
    return out;
  }

  ComposeResult compose(MonoidFamily const& fam,
                        Diagram const&      a,
                        Diagram const&      b) {
    return compose(a, b, fam.rules());
  }

  ComposeResult evaluate(MonoidFamily const& fam, Word const& w) {
    ComposeResult out{identity(fam), LoopRecord(fam.modulus())};
    for (auto const& sym : w) {
      auto step = compose(out.diagram, generator(fam, sym), fam.rules());
      out.diagram = std::move(step.diagram);
      out.loops += step.loops;
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Counting
  ////////////////////////////////////////////////////////////////////////

  namespace {
    mpz_class power(long base, long e) {
      mpz_class out;
      mpz_ui_pow_ui(out.get_mpz_t(),
                    static_cast<unsigned long>(base),
                    static_cast<unsigned long>(e));
      return out;
    }

    // Sum over k of C(n,k)^2 k! term(k): rook diagrams with k lines.
    template <typename F>
    mpz_class rook_sum(long n, F&& term) {
      mpz_class out = 0;
      for (long k = 0; k <= n; ++k) {
        mpz_class c = binomial(n, k);
        out += c * c * factorial(k) * term(k);
      }
      return out;
    }
  }  // namespace

  mpz_class predicted_cardinality(MonoidFamily const& fam) {
    long const n = fam.degree();
    long const d = fam.modulus();
    switch (fam.name()) {
      case FamilyName::Cdn:
        return power(d, n);
      case FamilyName::Sdn:
        return power(d, n) * factorial(n);
      case FamilyName::Pn:
        return bell(n);
      case FamilyName::Pdn: {
        mpz_class out = 0;
        for (long k = 1; k <= n; ++k) {
          out += stirling2(n, k) * power(d, k);
        }
        return out;
      }
      case FamilyName::Jn:
        return catalan(n);
      case FamilyName::Jdn:
        return power(d, n) * catalan(n);
      case FamilyName::Brn:
        return odd_double_factorial(n);
      case FamilyName::Brdn:
        return power(d, n) * odd_double_factorial(n);
      case FamilyName::Rn:
        return rook_sum(n, [](long) { return mpz_class(1); });
      case FamilyName::Rdn:
        return rook_sum(n, [d](long k) { return power(d, k); });
      case FamilyName::RPrimeDn:
        return rook_sum(n, [d, n](long k) { return power(d, 2 * n - k); });
      case FamilyName::tSn:
        return factorial(n) * bell(n);
      case FamilyName::tJn:
        return fuss_catalan_41(n);
      case FamilyName::tBrn:
        return odd_double_factorial(n) * bell(n);
      case FamilyName::tRn:
        return rook_sum(n, [](long k) { return bell(k); });
      case FamilyName::tRPrimeN:
        return rook_sum(n, [n](long k) { return bell(2 * n - k); });
    }
    return 0;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure
  ////////////////////////////////////////////////////////////////////////

  void sort_by_encoding(std::vector<Diagram>& xs) {
    std::vector<std::pair<std::string, Diagram>> keyed;
    keyed.reserve(xs.size());
    for (auto& x : xs) {
      keyed.emplace_back(encode(x), std::move(x));
    }
    std::sort(keyed.begin(), keyed.end(), [](auto const& a, auto const& b) {
      return a.first < b.first;
    });
    for (std::size_t k = 0; k < xs.size(); ++k) {
      xs[k] = std::move(keyed[k].second);
    }
  }

  std::vector<Diagram> closure(MonoidFamily const& fam,
                               std::size_t         cap,
                               unsigned            threads) {
    auto const   gens  = generating_set(fam);
    ComposeRules rules = fam.rules();

    std::vector<Diagram>        elements{identity(fam)};
    std::unordered_set<Diagram> seen{elements.front()};
    std::size_t                 frontier_begin = 0;
    threads = std::max(1u, threads);

    while (frontier_begin < elements.size()) {
      std::size_t const frontier_end = elements.size();
      std::size_t const count        = frontier_end - frontier_begin;
      std::vector<Diagram> products(count * gens.size());

      auto work = [&](std::size_t first, std::size_t last) {
        for (std::size_t k = first; k < last; ++k) {
          for (std::size_t g = 0; g < gens.size(); ++g) {
            products[k * gens.size() + g]
                = compose(elements[frontier_begin + k], gens[g], rules).diagram;
          }
        }
      };
      if (threads == 1 || count < 64) {
        work(0, count);
      } else {
        std::vector<std::thread> pool;
        std::size_t const        chunk = (count + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
          std::size_t first = t * chunk;
          std::size_t last  = std::min(count, first + chunk);
          if (first < last) {
            pool.emplace_back(work, first, last);
          }
        }
        for (auto& th : pool) {
          th.join();
        }
      }
      // Merging in product order keeps the search itself deterministic.
      for (auto& x : products) {
        if (seen.insert(x).second) {
          if (elements.size() >= cap) {
            throw CapExceeded("closure of " + fam.to_string()
                                  + " has more elements than allowed",
                              cap);
          }
          elements.push_back(std::move(x));
        }
      }
      frontier_begin = frontier_end;
    }
    sort_by_encoding(elements);
    return elements;
  }

}  // namespace framoid
