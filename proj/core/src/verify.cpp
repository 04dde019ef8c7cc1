// framoid - exact computations in framed and tied diagram monoids

#include "framoid/verify.hpp"

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <random>
#include <sstream>
#include <utility>

#include "framoid/combinatorics.hpp"
#include "framoid/error.hpp"
#include "framoid/expression.hpp"
#include "json.hpp"

namespace framoid {

  ////////////////////////////////////////////////////////////////////////
  // Reports
  ////////////////////////////////////////////////////////////////////////

  bool SuiteReport::pass() const noexcept {
    return failures() == 0;
  }

  std::size_t SuiteReport::failures() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(results.begin(), results.end(), [](auto const& r) {
          return !r.pass;
        }));
  }

  void SuiteReport::append(SuiteReport const& that) {
    results.insert(results.end(), that.results.begin(), that.results.end());
  }

  std::string to_json(SuiteReport const& report, bool timing) {
    using json = nlohmann::ordered_json;
    json out;
    out["suite"]   = report.suite;
    out["pass"]    = report.pass();
    out["results"] = json::array();
    for (auto const& r : report.results) {
      json item;
      item["suite"]    = r.suite;
      item["family"]   = r.family;
      item["d"]        = r.d;
      item["n"]        = r.n;
      item["identity"] = r.identity;
      item["status"]   = r.pass ? "pass" : "fail";
      if (!r.witness.empty()) {
        item["witness"] = r.witness;
      }
      if (timing) {
        item["ms"] = r.ms;
      }
      out["results"].push_back(std::move(item));
    }
    return out.dump(2) + "\n";
  }

  std::string to_text(SuiteReport const& report) {
    std::string out;
    for (auto const& r : report.results) {
      out += std::string(r.pass ? "PASS " : "FAIL ") + r.suite + " " + r.family
             + " d=" + std::to_string(r.d) + " n=" + std::to_string(r.n) + " "
             + r.identity + "\n";
      if (!r.witness.empty()) {
        std::istringstream in(r.witness);
        std::string        line;
        while (std::getline(in, line)) {
          out += "    " + line + "\n";
        }
      }
    }
    return out;
  }

  std::string to_csv(SuiteReport const& report) {
    std::string out = "suite,family,d,n,identity,status\n";
    for (auto const& r : report.results) {
      out += r.suite + "," + r.family + "," + std::to_string(r.d) + ","
             + std::to_string(r.n) + ",\"" + r.identity + "\","
             + (r.pass ? "pass" : "fail") + "\n";
    }
    return out;
  }

  namespace {
    using Clock = std::chrono::steady_clock;

    double elapsed_ms(Clock::time_point start) {
      return std::chrono::duration<double, std::milli>(Clock::now() - start)
          .count();
    }

    IdentityResult make_result(std::string const&  suite,
                               MonoidFamily const& fam,
                               std::string         identity) {
      IdentityResult r;
      r.suite    = suite;
      r.family   = to_string(fam.name());
      r.d        = fam.modulus();
      r.n        = fam.degree();
      r.identity = std::move(identity);
      return r;
    }

    // The family with parameters from the grid.
    void add_range(std::vector<MonoidFamily>& grid,
                   FamilyName                 f,
                   int                        d_max,
                   int                        n_max) {
      for (int d = 1; d <= d_max; ++d) {
        for (int n = 1; n <= n_max; ++n) {
          MonoidFamily fam(f, d, n);
          if (fam.modulus() == d) {
            grid.push_back(fam);
          }
        }
      }
    }

    using V = Variable;

    bool adjacent(Bindings const& b) {
      return std::abs(b.at('i') - b.at('j')) == 1;
    }
    bool not_adjacent(Bindings const& b) {
      return std::abs(b.at('i') - b.at('j')) != 1;
    }
    bool distant(Bindings const& b) {
      return std::abs(b.at('i') - b.at('j')) > 1;
    }
    bool i_less_j(Bindings const& b) {
      return b.at('i') < b.at('j');
    }

    std::vector<Variable> const gap_i  = {V::index('i', 1, -1)};
    std::vector<Variable> const gap_ij = {V::index('i', 1, -1),
                                          V::index('j', 1, -1)};
    std::vector<Variable> const pt_i   = {V::index('i', 1, 0)};
    std::vector<Variable> const pt_ij  = {V::index('i', 1, 0),
                                          V::index('j', 1, 0)};
  }  // namespace

  std::vector<MonoidFamily> default_grid() {
    std::vector<MonoidFamily> grid;
    add_range(grid, FamilyName::Cdn, 3, 4);
    add_range(grid, FamilyName::Sdn, 3, 4);
    add_range(grid, FamilyName::Pn, 1, 4);
    add_range(grid, FamilyName::Pdn, 3, 4);
    add_range(grid, FamilyName::Jn, 1, 5);
    add_range(grid, FamilyName::Jdn, 3, 5);
    add_range(grid, FamilyName::Brn, 1, 4);
    add_range(grid, FamilyName::Brdn, 2, 4);
    add_range(grid, FamilyName::Rn, 1, 4);
    add_range(grid, FamilyName::Rdn, 2, 4);
    add_range(grid, FamilyName::RPrimeDn, 2, 4);
    add_range(grid, FamilyName::tSn, 1, 4);
    add_range(grid, FamilyName::tJn, 1, 4);
    add_range(grid, FamilyName::tBrn, 1, 4);
    add_range(grid, FamilyName::tRn, 1, 4);
    add_range(grid, FamilyName::tRPrimeN, 1, 4);
    return grid;
  }

  ////////////////////////////////////////////////////////////////////////
  // Cardinalities and presentations
  ////////////////////////////////////////////////////////////////////////

  SuiteReport suite_cardinalities(std::vector<MonoidFamily> const& grid,
                                  VerifyOptions const&             opts) {
    SuiteReport report{"cardinalities", {}};
    for (auto const& fam : grid) {
      auto start = Clock::now();
      auto r     = make_result(report.suite, fam, "cardinality");
      auto const predicted = predicted_cardinality(fam);
      try {
        auto const count = closure(fam, opts.cap, opts.threads).size();
        if (mpz_class(static_cast<unsigned long>(count)) != predicted) {
          r.pass    = false;
          r.witness = "enumerated " + std::to_string(count) + ", predicted "
                      + predicted.get_str();
        }
      } catch (CapExceeded const& e) {
        r.pass    = false;
        r.witness = e.what();
      }
      r.ms = elapsed_ms(start);
      report.results.push_back(std::move(r));
    }
    return report;
  }

  SuiteReport suite_presentations(std::vector<MonoidFamily> const& grid,
                                  VerifyOptions const&) {
    SuiteReport report{"presentations", {}};
    for (auto const& fam : grid) {
      for (auto const& schema : presentation(fam).relations) {
        auto start = Clock::now();
        auto r     = make_result(report.suite, fam, schema.name);
        auto rel   = check_relations(fam, {schema});
        auto const& sr = rel.schemas.front();
        if (!sr.failures.empty()) {
          auto const& f = sr.failures.front();
          r.pass        = false;
          r.witness = schema.text + " fails at " + f.instance.bindings + ": "
                      + to_string(f.instance.lhs) + " -> " + encode(f.lhs)
                      + " but " + to_string(f.instance.rhs) + " -> "
                      + encode(f.rhs) + " ("
                      + std::to_string(sr.failures.size()) + " of "
                      + std::to_string(sr.instances) + " instances fail)";
        }
        r.ms = elapsed_ms(start);
        report.results.push_back(std::move(r));
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Bridges
  ////////////////////////////////////////////////////////////////////////

  std::vector<BridgeTarget> const& all_bridge_targets() {
    static std::vector<BridgeTarget> const targets
        = {BridgeTarget::partition,
           BridgeTarget::symmetric,
           BridgeTarget::rook,
           BridgeTarget::rook_prime,
           BridgeTarget::jones,
           BridgeTarget::brauer};
    return targets;
  }

  std::string to_string(BridgeTarget t) {
    switch (t) {
      case BridgeTarget::partition:
        return "partition";
      case BridgeTarget::symmetric:
        return "symmetric";
      case BridgeTarget::rook:
        return "rookR";
      case BridgeTarget::rook_prime:
        return "rookRprime";
      case BridgeTarget::jones:
        return "jones";
      case BridgeTarget::brauer:
        return "brauer";
    }
    return "?";
  }

  namespace {
    std::string lower(std::string_view s) {
      std::string out(s);
      std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
        return static_cast<char>(std::tolower(c));
      });
      return out;
    }
  }  // namespace

  BridgeTarget bridge_target_from_string(std::string_view name) {
    for (auto t : all_bridge_targets()) {
      if (lower(to_string(t)) == lower(name)) {
        return t;
      }
    }
    throw InvalidSymbol("unknown bridge target '" + std::string(name) + "'");
  }

  FamilyName bridge_family(BridgeTarget t) {
    switch (t) {
      case BridgeTarget::partition:
        return FamilyName::Cdn;
      case BridgeTarget::symmetric:
        return FamilyName::Sdn;
      case BridgeTarget::rook:
        return FamilyName::Rdn;
      case BridgeTarget::rook_prime:
        return FamilyName::RPrimeDn;
      case BridgeTarget::jones:
        return FamilyName::Jdn;
      case BridgeTarget::brauer:
        return FamilyName::Brdn;
    }
    return FamilyName::Cdn;
  }

  LoopPolicy bridge_policy(BridgeTarget t) {
    return t == BridgeTarget::rook ? LoopPolicy::neglect : LoopPolicy::alpha;
  }

  namespace {
    using Identities = std::vector<BridgeIdentity>;

    BridgeIdentity identity(std::string                          name,
                            std::string                          text,
                            std::vector<Variable>                vars = {},
                            std::function<bool(Bindings const&)> when = {},
                            std::string condition = "") {
      return {std::move(name),
              std::move(text),
              std::move(vars),
              std::move(when),
              std::move(condition),
              false};
    }

    void tie_basics(Identities& out) {
      out.push_back(identity("bridge-tie-idempotent", "E{i} E{i} = E{i}", gap_i));
      out.push_back(identity("bridge-tie-commute",
                             "E{i} E{j} = E{j} E{i}",
                             gap_ij,
                             i_less_j,
                             "i < j"));
      out.push_back(identity("bead-transport-tie",
                             "o{i} E{i} = o{i+1} E{i} = E{i} o{i} = E{i} o{i+1}",
                             gap_i));
    }

    void tie_crossings(Identities& out) {
      out.push_back(identity("bridge-tie-crossing-commute",
                             "s{i} E{j} = E{j} s{i}",
                             gap_ij,
                             not_adjacent,
                             "|i-j| != 1"));
      out.push_back(identity("bridge-tie-moves-along-crossings",
                             "E{i} s{j} s{i} = s{j} s{i} E{j}",
                             gap_ij,
                             adjacent,
                             "|i-j| = 1"));
      out.push_back(identity("bridge-tie-tie-crossing",
                             "E{i} E{j} s{i} = E{j} s{i} E{j} = s{i} E{i} E{j}",
                             gap_ij,
                             adjacent,
                             "|i-j| = 1"));
    }

    void tied_tangles(Identities& out) {
      out.push_back(identity(
          "bridge-tied-tangle-square", "F{i} F{i} = F{i} Z{i}", gap_i));
      out.push_back(identity("bridge-tied-tangle-commute",
                             "F{i} F{j} = F{j} F{i}",
                             gap_ij,
                             distant,
                             "|i-j| > 1"));
      out.push_back(identity(
          "tangle-absorbs-bridge-tie", "E{i} t{i} = t{i} E{i} = t{i}", gap_i));
      out.push_back(identity("bridge-tied-tangle-absorbs-bridge-tie",
                             "F{i} E{i} = E{i} F{i} = F{i}",
                             gap_i));
      out.push_back(identity(
          "bridge-tie-bridge-tied-tangle-commute", "E{i} F{j} = F{j} E{i}", gap_ij));
      out.push_back(identity(
          "tangle-bridge-tied-tangle", "t{i} F{i} = t{i} Z{i}", gap_i));
      out.push_back(identity(
          "bridge-tied-tangle-tangle", "F{i} t{i} = Z{i} t{i}", gap_i));
      out.push_back(identity("tangle-bridge-tie-commute",
                             "t{i} E{j} = E{j} t{i}",
                             gap_ij,
                             distant,
                             "|i-j| > 1"));
      out.push_back(identity("tangle-bridge-tied-tangle-commute",
                             "t{i} F{j} = F{j} t{i}",
                             gap_ij,
                             distant,
                             "|i-j| > 1"));
      out.push_back(identity("tangle-next-bridge-tie-tangle",
                             "t{i} E{i+1} t{i} = t{i} Z{i+2}",
                             {V::index('i', 1, -2)}));
      out.push_back(identity("tangle-previous-bridge-tie-tangle",
                             "t{i+1} E{i} t{i+1} = t{i+1} Z{i}",
                             {V::index('i', 1, -2)}));
      out.push_back(identity("bridge-tied-tangle-from-bridge-tie",
                             "F{i} E{j} = E{j} F{i} = E{j} t{i} E{j}",
                             gap_ij,
                             adjacent,
                             "|i-j| = 1"));
      out.push_back(identity("bead-transport-tied-tangle",
                             "o{i} F{i} = o{i+1} F{i} = F{i} o{i} = F{i} o{i+1}",
                             gap_i));
    }
  }  // namespace

  std::vector<BridgeIdentity> bridge_identities(BridgeTarget t) {
    Identities out;
    switch (t) {
      case BridgeTarget::partition: {
        std::vector<Variable> ij  = pt_ij;
        std::vector<Variable> ijk = {
            V::index('i', 1, 0), V::index('j', 1, 0), V::index('k', 1, 0)};
        std::vector<Variable> ijrs = {V::index('i', 1, 0),
                                      V::index('j', 1, 0),
                                      V::index('r', 1, 0),
                                      V::index('s', 1, 0)};
        out.push_back(identity("bridge-merge-idempotent",
                               "E{i},{j} E{i},{j} = E{i},{j}",
                               ij,
                               i_less_j,
                               "i < j"));
        out.push_back(identity(
            "bridge-merge-commute",
            "E{i},{j} E{r},{s} = E{r},{s} E{i},{j}",
            ijrs,
            [](Bindings const& b) {
              return b.at('i') < b.at('j') && b.at('r') < b.at('s');
            },
            "i < j, r < s"));
        out.push_back(identity(
            "bridge-merge-transitive",
            "E{i},{j} E{i},{k} = E{i},{j} E{j},{k} = E{i},{k} E{j},{k}",
            ijk,
            [](Bindings const& b) {
              return b.at('i') < b.at('j') && b.at('j') < b.at('k');
            },
            "i < j < k"));
        out.push_back(identity(
            "bead-transport-merge",
            "o{i} E{i},{j} = o{j} E{i},{j} = E{i},{j} o{i} = E{i},{j} o{j}",
            ij,
            i_less_j,
            "i < j"));
        break;
      }
      case BridgeTarget::symmetric:
        tie_basics(out);
        tie_crossings(out);
        break;
      case BridgeTarget::rook: {
        tie_basics(out);
        tie_crossings(out);
        std::vector<Variable> ij = {V::index('i', 1, -1), V::index('j', 1, 0)};
        out.push_back(identity("bridge-tie-absorbed-by-partial",
                               "E{i} p{j} = p{j} E{i} = p{j}",
                               ij,
                               i_less_j,
                               "i < j"));
        out.push_back(
            identity("bridge-tie-partial", "E{i} p{i} = Z{i+1} p{i}", gap_i));
        out.push_back(
            identity("partial-bridge-tie", "p{i} E{i} = p{i} Z{i+1}", gap_i));
        out.push_back(identity(
            "bridge-tie-partial-commute",
            "E{i} p{j} = p{j} E{i}",
            ij,
            [](Bindings const& b) { return b.at('i') > b.at('j'); },
            "i > j"));
        break;
      }
      case BridgeTarget::rook_prime: {
        tie_basics(out);
        tie_crossings(out);
        std::vector<Variable> ij = {V::index('i', 1, -1), V::index('j', 1, 0)};
        auto near = [](Bindings const& b) {
          return b.at('j') == b.at('i') || b.at('j') == b.at('i') + 1;
        };
        auto far = [near](Bindings const& b) { return !near(b); };
        out.push_back(identity("bridge-tied-rook-square",
                               "Q{i} Q{i} = Q{i} Z{i} = Z{i} Q{i}",
                               pt_i));
        out.push_back(identity("bridge-tied-rook-commute",
                               "Q{i} Q{j} = Q{j} Q{i}",
                               pt_ij,
                               i_less_j,
                               "i < j"));
        out.push_back(identity(
            "bridge-tied-rook-bridge-tie-commute", "Q{j} E{i} = E{i} Q{j}", ij));
        out.push_back(identity("crossing-moves-bridge-tied-rook-right",
                               "s{i} Q{i} = Q{i+1} s{i}",
                               gap_i));
        out.push_back(identity("crossing-moves-bridge-tied-rook-left",
                               "s{i} Q{i+1} = Q{i} s{i}",
                               gap_i));
        out.push_back(identity("crossing-bridge-tied-rook-commute",
                               "s{i} Q{j} = Q{j} s{i}",
                               ij,
                               far,
                               "j != i, i+1"));
        out.push_back(identity("bridge-tie-rook-bridge-tie",
                               "E{i} r{j} E{i} = E{i} Q{j} = Q{j} E{i}",
                               ij,
                               near,
                               "j = i, i+1"));
        out.push_back(identity("bridge-tie-rook-commute",
                               "E{i} r{j} = r{j} E{i}",
                               ij,
                               far,
                               "j != i, i+1"));
        out.push_back(identity(
            "rook-bridge-tied-rook-commute",
            "r{i} Q{j} = Q{j} r{i}",
            pt_ij,
            [](Bindings const& b) { return b.at('i') != b.at('j'); },
            "i != j"));
        out.push_back(
            identity("rook-bridge-tied-rook", "r{i} Q{i} = r{i} Z{i}", pt_i));
        out.push_back(
            identity("bridge-tied-rook-rook", "Q{i} r{i} = Z{i} r{i}", pt_i));
        out.push_back(identity(
            "rook-bridge-tie-rook", "r{i} E{i} r{i} = r{i} Z{i+1}", gap_i));
        out.push_back(identity("next-rook-bridge-tie-next-rook",
                               "r{i+1} E{i} r{i+1} = Z{i} r{i+1}",
                               gap_i));
        out.push_back(identity("rook-bridge-tie-next-rook",
                               "r{i} E{i} r{i+1} = s{i} Q{i} r{i+1}",
                               gap_i));
        out.push_back(identity("bridge-tied-partial-first", "W1 = Q1"));
        out.push_back(identity("bridge-tied-partial-from-rooks",
                               "W{i} = p{i-1} Q{i}",
                               {V::index('i', 2, 0)}));
        out.push_back(identity(
            "bead-transport-tied-rook", "o{i} Q{i} = Q{i} o{i}", pt_i));
        out.push_back(identity(
            "bead-transport-tied-partial",
            "o{j} W{i}:{j}:{h} = W{i}:{j}:{h} o{h}",
            {V::index('i', 1, 0), V::index('j', 1, 0), V::index('h', 1, 0)},
            [](Bindings const& b) {
              return b.at('j') <= b.at('i') && b.at('h') <= b.at('i');
            },
            "j, h <= i"));
        break;
      }
      case BridgeTarget::jones: {
        tie_basics(out);
        tied_tangles(out);
        auto control    = identity("control-tied-tangle-square-uncorrected",
                                "F{i} F{i} = F{i}",
                                gap_i);
        control.control = true;
        out.push_back(std::move(control));
        break;
      }
      case BridgeTarget::brauer:
        tie_basics(out);
        tie_crossings(out);
        tied_tangles(out);
        out.push_back(identity("bridge-tied-tangle-crossing-commute",
                               "F{i} s{j} = s{j} F{i}",
                               gap_ij,
                               distant,
                               "|i-j| > 1"));
        out.push_back(identity("bridge-tied-tangle-absorbs-crossing",
                               "F{i} s{i} = s{i} F{i} = F{i}",
                               gap_i));
        out.push_back(identity("crossing-conjugates-bridge-tied-tangle",
                               "s{i} F{j} s{i} = s{j} F{i} s{j}",
                               gap_ij,
                               adjacent,
                               "|i-j| = 1"));
        break;
    }
    return out;
  }

  namespace {
    // The first instance of text (over bindings) whose sides differ, as a
    // witness; empty if every instance holds.
    std::string first_violation(std::string const&          text,
                                std::vector<Variable> const& vars,
                                std::function<bool(Bindings const&)> const& when,
                                MonoidFamily const&          fam,
                                AlgebraElement const&        one,
                                SymbolResolver const&        resolve,
                                std::map<Var, mpq_class> const& values = {}) {
      for (auto const& b : enumerate_bindings(vars, when, fam.modulus(), fam.degree())) {
        auto const instance = expand_placeholders(text, b);
        auto       sides    = evaluate_equation(instance, one, resolve);
        if (!values.empty()) {
          Specialization s;
          s.values        = values;
          s.target_policy = one.policy();
          for (auto& side : sides) {
            side = specialize(side, s);
          }
        }
        for (std::size_t k = 1; k < sides.size(); ++k) {
          if (!(sides[k] == sides[0])) {
            return instance + (b.empty() ? "" : " at " + describe(b))
                   + ": side 1 = " + sides[0].to_string() + "; side "
                   + std::to_string(k + 1) + " = " + sides[k].to_string();
          }
        }
      }
      return {};
    }
  }  // namespace

  IdentityResult check_identity(BridgeIdentity const& id,
                                MonoidFamily const&   fam,
                                LoopPolicy            policy) {
    auto r      = make_result("bridges", fam, id.name);
    auto start  = Clock::now();
    auto one    = AlgebraElement::one(fam, policy);
    auto why    = first_violation(
        id.text, id.vars, id.when, fam, one, bridge_resolver(fam, policy));
    if (id.control) {
      r.pass    = !why.empty();
      r.witness = why.empty() ? "the control identity unexpectedly holds"
                              : "fails as expected: " + why;
    } else {
      r.pass    = why.empty();
      r.witness = why;
    }
    r.ms = elapsed_ms(start);
    return r;
  }

  SuiteReport suite_bridges(BridgeTarget            t,
                            std::vector<int> const& ds,
                            int                     n,
                            VerifyOptions const&) {
    SuiteReport report{"bridges", {}};
    auto const  identities = bridge_identities(t);
    for (int d : ds) {
      MonoidFamily fam(bridge_family(t), d, n);
      for (auto const& id : identities) {
        auto r     = check_identity(id, fam, bridge_policy(t));
        r.identity = to_string(t) + "/" + r.identity;
        report.results.push_back(std::move(r));
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random elements
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Deterministic across platforms: only the raw engine output is used.
    class Sampler {
     public:
      explicit Sampler(std::uint64_t seed) : _rng(seed) {}

      std::size_t below(std::size_t bound) {
        return static_cast<std::size_t>(_rng() % bound);
      }

      // A non-zero integer in [-3, 3], times alpha_k^{+-1} half the time
      // when alpha is in play.
      Coefficient coefficient(int d, bool alphas) {
        long c = static_cast<long>(below(3)) + 1;
        if (below(2) == 0) {
          c = -c;
        }
        Coefficient out(c);
        if (alphas && d > 1 && below(2) == 0) {
          int k = static_cast<int>(below(static_cast<std::size_t>(d - 1))) + 1;
          out *= Coefficient(Var::alpha_(k), below(2) == 0 ? 1 : -1);
        }
        return out;
      }

      AlgebraElement element(MonoidFamily const&         fam,
                             LoopPolicy                  policy,
                             std::vector<Diagram> const& basis,
                             std::size_t                 max_terms) {
        AlgebraElement out(fam, policy);
        std::size_t    terms = below(max_terms) + 1;
        for (std::size_t k = 0; k < terms; ++k) {
          out.add_term(basis[below(basis.size())],
                       coefficient(fam.modulus(), policy == LoopPolicy::alpha));
        }
        return out;
      }

     private:
      std::mt19937_64 _rng;
    };
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Framed Temperley-Lieb
  ////////////////////////////////////////////////////////////////////////

  SuiteReport suite_framed_tl(int                  d,
                              int                  n,
                              std::size_t          triples,
                              VerifyOptions const& opts) {
    SuiteReport  report{"tl", {}};
    MonoidFamily fam(FamilyName::Jdn, d, n);
    auto const   policy = LoopPolicy::xy;
    auto const   one    = AlgebraElement::one(fam, policy);

    auto start = Clock::now();
    auto r     = make_result(report.suite, fam, "basis-size");
    auto basis = closure(fam, opts.cap, opts.threads);
    mpz_class expected = catalan(n);
    for (int k = 0; k < n; ++k) {
      expected *= d;
    }
    if (mpz_class(static_cast<unsigned long>(basis.size())) != expected) {
      r.pass    = false;
      r.witness = "basis has " + std::to_string(basis.size())
                  + " diagrams, expected " + expected.get_str();
    }
    r.ms = elapsed_ms(start);
    report.results.push_back(std::move(r));

    auto resolve = [&fam, policy](std::string_view token) {
      return AlgebraElement::from_diagram(
          fam, policy, generator(fam, parse_symbol(token)));
    };

    // Relations of the monoid that survive unchanged, and the loop rule
    // replacing the two that remove loops.
    for (auto const& schema : presentation(fam).relations) {
      if (schema.name == "tangle-idempotent"
          || schema.name == "beaded-loop-removed") {
        continue;
      }
      start = Clock::now();
      r     = make_result(report.suite, fam, schema.name);
      for (auto const& inst : schema.instances(d, n)) {
        auto lhs = AlgebraElement::from_word(fam, policy, inst.lhs);
        auto rhs = AlgebraElement::from_word(fam, policy, inst.rhs);
        if (!(lhs == rhs)) {
          r.pass    = false;
          r.witness = to_string(inst.lhs) + " = " + lhs.to_string() + " but "
                      + to_string(inst.rhs) + " = " + rhs.to_string();
          break;
        }
      }
      r.ms = elapsed_ms(start);
      report.results.push_back(std::move(r));
    }
    std::vector<Variable> const ik = {V::index('i', 1, -1), V::power('k')};
    for (auto const& [name, text] :
         {std::pair<char const*, char const*>{"tangle-beads-tangle-loop-scalar",
                                              "t{i} o{i}^{k} t{i} = x y{k} t{i}"},
          {"tangle-next-beads-tangle-loop-scalar",
           "t{i} o{i+1}^{k} t{i} = x y{k} t{i}"}}) {
      start     = Clock::now();
      r         = make_result(report.suite, fam, name);
      r.witness = first_violation(text, ik, {}, fam, one, resolve);
      r.pass    = r.witness.empty();
      r.ms      = elapsed_ms(start);
      report.results.push_back(std::move(r));
    }

    start = Clock::now();
    r     = make_result(report.suite, fam, "associativity");
    Sampler sample(opts.seed ^ (static_cast<std::uint64_t>(d) << 32)
                   ^ static_cast<std::uint64_t>(n));
    for (std::size_t k = 0; k < triples; ++k) {
      auto a = sample.element(fam, policy, basis, 2);
      auto b = sample.element(fam, policy, basis, 2);
      auto c = sample.element(fam, policy, basis, 2);
      if (!((a * b) * c == a * (b * c))) {
        r.pass    = false;
        r.witness = "a = " + a.to_string() + "; b = " + b.to_string()
                    + "; c = " + c.to_string();
        break;
      }
    }
    r.ms = elapsed_ms(start);
    report.results.push_back(std::move(r));
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Tied deformations
  ////////////////////////////////////////////////////////////////////////

  namespace {
    DeformationTemplate templ(std::string                          name,
                              std::string                          text,
                              std::vector<Variable>                vars,
                              std::function<bool(Bindings const&)> when = {}) {
      return {std::move(name), std::move(text), std::move(vars), std::move(when)};
    }

    // Generators with indices differing by other than 1 commute.
    void far_commutation(std::vector<DeformationTemplate>& out,
                         std::string const&                letters) {
      for (std::size_t x = 0; x < letters.size(); ++x) {
        for (std::size_t y = x; y < letters.size(); ++y) {
          std::string const a(1, letters[x]);
          std::string const b(1, letters[y]);
          out.push_back(templ("commute-" + a + b,
                              a + "{i} " + b + "{j} = " + b + "{j} " + a + "{i}",
                              gap_ij,
                              not_adjacent));
        }
      }
    }

    void braids_and_ties_relations(std::vector<DeformationTemplate>& out) {
      out.push_back(templ(
          "braid", "g{i} g{j} g{i} = g{j} g{i} g{j}", gap_ij, adjacent));
      out.push_back(templ("tie-idempotent", "e{i} e{i} = e{i}", gap_i));
      out.push_back(
          templ("tie-commute-adjacent", "e{i} e{j} = e{j} e{i}", gap_ij, adjacent));
      out.push_back(templ("tie-moves-along-braids",
                          "e{i} g{j} g{i} = g{j} g{i} e{j}",
                          gap_ij,
                          adjacent));
      out.push_back(templ("tie-tie-braid",
                          "e{i} e{j} g{i} = e{j} g{i} e{j} = g{i} e{i} e{j}",
                          gap_ij,
                          adjacent));
    }

    void tied_temperley_lieb_adjacent(std::vector<DeformationTemplate>& out) {
      out.push_back(templ(
          "tangle-straighten", "t{i} t{j} t{i} = t{i}", gap_ij, adjacent));
      out.push_back(templ(
          "tangle-tie-tangle", "t{i} e{j} t{i} = t{i}", gap_ij, adjacent));
      out.push_back(templ("tied-tangle-from-tie",
                          "f{i} e{j} = e{j} f{i} = e{j} t{i} e{j}",
                          gap_ij,
                          adjacent));
    }
  }  // namespace

  std::vector<DeformationTemplate> deformation_templates(TiedDeformation t) {
    std::vector<DeformationTemplate> out;
    switch (t) {
      case TiedDeformation::tied_temperley_lieb:
        far_commutation(out, "tef");
        out.push_back(templ(
            "tie-commute-adjacent", "e{i} e{j} = e{j} e{i}", gap_ij, adjacent));
        tied_temperley_lieb_adjacent(out);
        out.push_back(templ("tangle-square", "t{i} t{i} = x t{i}", gap_i));
        out.push_back(templ("tie-idempotent", "e{i} e{i} = e{i}", gap_i));
        out.push_back(templ("tied-tangle-square", "f{i} f{i} = y f{i}", gap_i));
        out.push_back(templ("tangle-absorbs-tie", "t{i} e{i} = t{i}", gap_i));
        out.push_back(templ("tied-tangle-absorbs-tie", "f{i} e{i} = f{i}", gap_i));
        out.push_back(templ("tied-tangle-tangle", "f{i} t{i} = y t{i}", gap_i));
        break;
      case TiedDeformation::tied_bmw:
        far_commutation(out, "gtef");
        braids_and_ties_relations(out);
        tied_temperley_lieb_adjacent(out);
        out.push_back(
            templ("tangle-braid-tangle", "t{i} g{j} t{i} = a t{i}", gap_ij, adjacent));
        out.push_back(templ("braids-move-tangle",
                            "g{i} g{j} t{i} = t{j} g{i} g{j} = t{j} t{i}",
                            gap_ij,
                            adjacent));
        out.push_back(templ("braid-conjugates-tangle",
                            "g{i} t{j} g{i} = g{j}^-1 t{i} g{j}^-1",
                            gap_ij,
                            adjacent));
        out.push_back(templ("braid-conjugates-tied-tangle",
                            "g{i} f{j} g{i} = g{j}^-1 f{i} g{j}^-1",
                            gap_ij,
                            adjacent));
        out.push_back(templ("braid-tangle-tangle",
                            "g{i} t{j} t{i} = g{j}^-1 t{i}",
                            gap_ij,
                            adjacent));
        out.push_back(templ("tangle-tangle-braid",
                            "t{i} t{j} g{i} = t{i} g{j}^-1",
                            gap_ij,
                            adjacent));
        out.push_back(templ("tangle-square", "t{i} t{i} = x t{i}", gap_i));
        out.push_back(templ("tangle-absorbs-tie", "t{i} e{i} = t{i}", gap_i));
        out.push_back(templ("tied-tangle-absorbs-tie", "f{i} e{i} = f{i}", gap_i));
        out.push_back(templ("braid-tangle", "g{i} t{i} = a^-1 t{i}", gap_i));
        out.push_back(templ("tied-tangle-braid", "f{i} g{i} = a^-1 f{i}", gap_i));
        out.push_back(templ("braid-skein",
                            "g{i} - g{i}^-1 = (q - q^-1) (e{i} - f{i})",
                            gap_i));
        break;
      case TiedDeformation::braids_and_ties:
        far_commutation(out, "ge");
        braids_and_ties_relations(out);
        out.push_back(templ("braid-quadratic",
                            "g{i} g{i} = 1 + (v - v^-1) e{i} g{i}",
                            gap_i));
        break;
    }
    return out;
  }

  namespace {
    struct DeformationCase {
      TiedDeformation          kind;
      char const*              label;
      FamilyName               family;
      std::map<Var, mpq_class> values;
    };

    std::vector<DeformationCase> deformation_cases() {
      return {{TiedDeformation::tied_temperley_lieb,
               "tied-temperley-lieb",
               FamilyName::tJn,
               {{Var::x_(), 1}, {Var::y_(), 1}}},
              {TiedDeformation::tied_bmw,
               "tied-bmw",
               FamilyName::tBrn,
               {{Var::a_(), 1}, {Var::q_(), 1}, {Var::x_(), 1}, {Var::y_(), 1}}},
              {TiedDeformation::braids_and_ties,
               "braids-and-ties",
               FamilyName::tSn,
               {{Var::v_(), 1}}}};
    }

    // g_i^k is sent to s_i^k, and s_i^2 = 1.
    SymbolResolver braid_as_crossing(MonoidFamily const& fam) {
      return [fam](std::string_view token) -> AlgebraElement {
        auto const policy = LoopPolicy::neglect;
        if (token.front() != 'g') {
          return AlgebraElement::from_diagram(
              fam, policy, generator(fam, parse_symbol(token)));
        }
        std::string_view index = token.substr(1);
        int              k     = 1;
        if (auto hat = token.find('^'); hat != std::string_view::npos) {
          index = token.substr(1, hat - 1);
          k     = std::stoi(std::string(token.substr(hat + 1)));
        }
        auto s = parse_symbol("s" + std::string(index));
        return k % 2 == 0 ? AlgebraElement::one(fam, policy)
                          : AlgebraElement::from_diagram(
                              fam, policy, generator(fam, s));
      };
    }
  }  // namespace

  SuiteReport suite_tied_specializations(int n, VerifyOptions const&) {
    SuiteReport report{"tied", {}};
    for (auto const& c : deformation_cases()) {
      MonoidFamily fam(c.family, 1, n);
      auto const   one     = AlgebraElement::one(fam, LoopPolicy::neglect);
      auto const   resolve = braid_as_crossing(fam);
      for (auto const& t : deformation_templates(c.kind)) {
        auto start = Clock::now();
        auto r     = make_result(report.suite, fam, std::string(c.label) + "/" + t.name);
        r.witness  = first_violation(t.text, t.vars, t.when, fam, one, resolve, c.values);
        r.pass     = r.witness.empty();
        r.ms       = elapsed_ms(start);
        report.results.push_back(std::move(r));
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Specialization is multiplicative
  ////////////////////////////////////////////////////////////////////////

  SuiteReport suite_specialization_homomorphism(MonoidFamily const&  fam,
                                                std::size_t          pairs,
                                                VerifyOptions const& opts) {
    SuiteReport report{"hom", {}};
    auto const  policy = LoopPolicy::alpha;
    auto const  spec   = Specialization::deframing(fam.modulus());

    auto check = [&spec](AlgebraElement const& a,
                         AlgebraElement const& b) -> std::string {
      auto lhs = specialize(a * b, spec);
      auto rhs = specialize(a, spec) * specialize(b, spec);
      if (lhs == rhs) {
        return {};
      }
      return "a = " + a.to_string() + "; b = " + b.to_string()
             + "; image of ab = " + lhs.to_string()
             + "; product of images = " + rhs.to_string();
    };

    auto start = Clock::now();
    auto r     = make_result(report.suite, fam, "multiplicative-on-random-pairs");
    auto basis = closure(fam, opts.cap, opts.threads);
    Sampler sample(opts.seed ^ (static_cast<std::uint64_t>(fam.name()) << 40)
                   ^ (static_cast<std::uint64_t>(fam.modulus()) << 32)
                   ^ static_cast<std::uint64_t>(fam.degree()));
    for (std::size_t k = 0; k < pairs && r.pass; ++k) {
      auto a    = sample.element(fam, policy, basis, 3);
      auto b    = sample.element(fam, policy, basis, 3);
      r.witness = check(a, b);
      r.pass    = r.witness.empty();
    }
    r.ms = elapsed_ms(start);
    report.results.push_back(std::move(r));

    auto const name = fam.name();
    if ((name == FamilyName::Jdn || name == FamilyName::Brdn) && fam.degree() >= 3) {
      start  = Clock::now();
      r      = make_result(report.suite, fam, "multiplicative-on-bridges");
      auto f = bridge_f(fam, policy, 1);
      auto e = bridge_e(fam, policy, 2, 3);
      r.witness = check(f, e);
      if (r.witness.empty()) {
        r.witness = check(e, f);
      }
      r.pass = r.witness.empty();
      r.ms   = elapsed_ms(start);
      report.results.push_back(std::move(r));
    }
    return report;
  }

}  // namespace framoid
