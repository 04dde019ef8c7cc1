// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_VERIFY_HPP_
#define FRAMOID_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "framoid/algebra.hpp"
#include "framoid/family.hpp"
#include "framoid/presentation.hpp"

namespace framoid {

  constexpr std::uint64_t default_seed = 0xF4A317;

  struct VerifyOptions {
    std::uint64_t seed = default_seed;
    //! Record wall-clock milliseconds per identity (reports are then no
    //! longer byte-stable).
    bool        timing  = false;
    std::size_t cap     = default_closure_cap;
    unsigned    threads = 1;
  };

  //! The outcome of checking one identity (all its instances) in one
  //! ambient.
  struct IdentityResult {
    std::string suite;
    std::string family;
    int         d = 1;
    int         n = 1;
    std::string identity;
    bool        pass = true;
    //! Why the identity failed: words, canonical diagrams, dumps.
    std::string witness;
    double      ms = 0;
  };

  struct SuiteReport {
    std::string                 suite;
    std::vector<IdentityResult> results;

    bool        pass() const noexcept;
    std::size_t failures() const noexcept;
    void        append(SuiteReport const& that);
  };

  //! `{"suite":...,"pass":...,"results":[{suite,family,d,n,identity,
  //! status,witness?,ms?}]}` with two-space indentation; `ms` only when
  //! \p timing is set.
  std::string to_json(SuiteReport const& report, bool timing = false);

  //! One line per identity: `PASS jones Jdn d=2 n=4 identity`, followed by
  //! an indented witness for failures.
  std::string to_text(SuiteReport const& report);

  //! Header `suite,family,d,n,identity,status`.
  std::string to_csv(SuiteReport const& report);

  //! The families and parameters on which cardinalities and presentations
  //! are checked by default.
  std::vector<MonoidFamily> default_grid();

  //! Closure size against the closed formula; a CapExceeded is reported
  //! as a failure.
  SuiteReport suite_cardinalities(std::vector<MonoidFamily> const& grid,
                                  VerifyOptions const&             opts = {});

  //! check_relations for every family of \p grid, one result per schema.
  SuiteReport suite_presentations(std::vector<MonoidFamily> const& grid,
                                  VerifyOptions const&             opts = {});

  //! The framed monoids whose bridge elements satisfy tied relations.
  enum class BridgeTarget {
    partition,   //!< e_{i,j} averages in the abacus monoid
    symmetric,   //!< e_i averages and s_i in framed permutations
    rook,        //!< e_i and p_i in the rook monoid dropping beads
    rook_prime,  //!< e_i, q_i, w_i, r_i in the rook monoid keeping beads
    jones,       //!< e_i, f_i, t_i in the abacus Jones monoid
    brauer       //!< e_i, f_i, t_i, s_i in the abacus Brauer monoid
  };

  std::vector<BridgeTarget> const& all_bridge_targets();

  //! `partition`, `symmetric`, `rookR`, `rookRprime`, `jones`, `brauer`.
  std::string to_string(BridgeTarget t);
  //! Case-insensitive inverse of to_string; throws InvalidSymbol.
  BridgeTarget bridge_target_from_string(std::string_view name);

  //! The framed family in which \p t is checked and its loop policy.
  FamilyName bridge_family(BridgeTarget t);
  LoopPolicy bridge_policy(BridgeTarget t);

  //! An identity between expressions in bridge elements.
  //!
  //! `text` is a chain `lhs = rhs = ...` in the syntax of
  //! evaluate_expression and bridge_resolver, with placeholders bound by
  //! `vars`.  A control identity is expected to fail: it passes when some
  //! instance is violated.
  struct BridgeIdentity {
    std::string                          name;
    std::string                          text;
    std::vector<Variable>                vars;
    std::function<bool(Bindings const&)> when;
    std::string                          condition;
    bool                                 control = false;
  };

  std::vector<BridgeIdentity> bridge_identities(BridgeTarget t);

  //! Evaluates every identity of \p t for every d in \p ds with degree n.
  SuiteReport suite_bridges(BridgeTarget            t,
                            std::vector<int> const& ds,
                            int                     n,
                            VerifyOptions const&    opts = {});

  //! Checks \p identity in \p fam under \p policy.
  IdentityResult check_identity(BridgeIdentity const& identity,
                                MonoidFamily const&   fam,
                                LoopPolicy            policy);

  //! The framed Temperley-Lieb relations under the x y_k loop rule, the
  //! basis size d^n Cat_n, and \p triples random associativity checks.
  SuiteReport suite_framed_tl(int                  d,
                              int                  n,
                              std::size_t          triples,
                              VerifyOptions const& opts = {});

  //! Relation templates of the one-parameter deformations checked at a
  //! specialization where they become tied diagram monoid algebras.
  struct DeformationTemplate {
    std::string           name;
    std::string           text;
    std::vector<Variable> vars;
    std::function<bool(Bindings const&)> when;
  };

  //! The tied algebras whose specializations are checked.
  enum class TiedDeformation {
    tied_temperley_lieb,  //!< x = y = 1 in the tied Jones monoid
    tied_bmw,             //!< a = q = x = y = 1, g_i -> s_i, in tBr_n
    braids_and_ties       //!< v = 1, g_i -> s_i, in tS_n
  };

  std::vector<DeformationTemplate> deformation_templates(TiedDeformation t);

  SuiteReport suite_tied_specializations(int                  n,
                                         VerifyOptions const& opts = {});

  //! specialize(a b) = specialize(a) specialize(b) for \p pairs random
  //! pairs of elements of the alpha-algebra of \p fam, where specialize
  //! sends every alpha_k to 1 and every bead to 0.
  SuiteReport suite_specialization_homomorphism(MonoidFamily const&  fam,
                                                std::size_t          pairs,
                                                VerifyOptions const& opts = {});

}  // namespace framoid

#endif  // FRAMOID_VERIFY_HPP_
