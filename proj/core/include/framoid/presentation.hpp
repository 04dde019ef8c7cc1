// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_PRESENTATION_HPP_
#define FRAMOID_PRESENTATION_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "framoid/diagram.hpp"
#include "framoid/family.hpp"
#include "framoid/symbol.hpp"

namespace framoid {

  //! Values of the index and exponent variables of a relation template.
  using Bindings = std::map<char, int>;

  //! Substitutes \p vars into the placeholders of \p tmpl.
  //!
  //! Placeholders have the form `{i}`, `{i+1}` or `{k-2}`; anything else is
  //! copied.  Throws InvalidSymbol for unbound or malformed placeholders.
  std::string expand_placeholders(std::string_view tmpl, Bindings const& vars);

  //! `i=1,j=3`, in variable order.
  std::string describe(Bindings const& vars);

  //! Substitutes \p vars into \p tmpl and parses the result as a word.
  //!
  //! Placeholders have the form `{i}`, `{i+1}` or `{k-2}`; anything else is
  //! copied.  `t{i} o{i+1}^{k}` with i = 2, k = 3 gives `t2 o3^3`.
  Word instantiate(std::string_view tmpl, Bindings const& vars);

  //! One equation between two words, with the bindings that produced it.
  struct RelationInstance {
    Word        lhs;
    Word        rhs;
    std::string bindings;  //!< `i=1,j=3`, empty when there are none
  };

  //! A named family of equations `lhs = rhs` indexed by variables.
  struct RelationSchema {
    std::string name;
    std::string text;
    std::function<std::vector<RelationInstance>(int d, int n)> instances;
  };

  //! A variable of a relation template.
  //!
  //! Index variables range over [lo, n + hi]; exponent variables over
  //! [0, d).
  struct Variable {
    char name;
    int  lo       = 1;
    int  hi       = 0;
    bool exponent = false;

    static Variable index(char name, int lo, int hi) {
      return {name, lo, hi, false};
    }
    static Variable power(char name) {
      return {name, 0, 0, true};
    }
  };

  //! Every binding of \p vars satisfying \p when (all of them if \p when
  //! is empty), in odometer order with the last variable fastest.
  std::vector<Bindings> enumerate_bindings(
      std::vector<Variable> const&                vars,
      std::function<bool(Bindings const&)> const& when,
      int                                         d,
      int                                         n);

  //! A schema instantiating \p lhs and \p rhs for every binding of \p vars
  //! satisfying \p when (all bindings if \p when is empty).
  RelationSchema make_relation(std::string                          name,
                               std::string                          lhs,
                               std::string                          rhs,
                               std::vector<Variable>                vars,
                               std::function<bool(Bindings const&)> when = {},
                               std::string condition = "");

  struct Presentation {
    std::vector<GenSymbol>      generators;
    std::vector<RelationSchema> relations;
  };

  //! The defining relations of \p fam (together with the relations the
  //! family is known to satisfy that link alternative generators).
  Presentation presentation(MonoidFamily const& fam);

  struct RelationFailure {
    RelationInstance instance;
    Diagram          lhs;
    Diagram          rhs;
  };

  struct SchemaReport {
    std::string                  name;
    std::string                  text;
    std::size_t                  instances = 0;
    std::vector<RelationFailure> failures;
  };

  struct RelationReport {
    std::vector<SchemaReport> schemas;

    bool        pass() const noexcept;
    std::size_t instances() const noexcept;
    std::size_t failures() const noexcept;
  };

  //! Evaluates both sides of every instance of every relation of \p fam
  //! and compares the diagrams (loops are ignored).
  RelationReport check_relations(MonoidFamily const& fam);

  //! As above for the given schemas.
  RelationReport check_relations(MonoidFamily const&                fam,
                                 std::vector<RelationSchema> const& schemas);

}  // namespace framoid

#endif  // FRAMOID_PRESENTATION_HPP_
