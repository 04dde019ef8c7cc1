// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_ALGEBRA_HPP_
#define FRAMOID_ALGEBRA_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <string>
#include <string_view>

#include "framoid/coefficient.hpp"
#include "framoid/diagram.hpp"
#include "framoid/family.hpp"
#include "framoid/symbol.hpp"

namespace framoid {

  //! How the loops removed by a product become scalars.
  enum class LoopPolicy {
    neglect,  //!< every loop is 1 (the monoid algebra)
    alpha,    //!< a loop of residue p is alpha_p, alpha_0 = 1
    xy        //!< a loop of residue p is x * y_p, y_0 = 1
  };

  std::string to_string(LoopPolicy p);

  //! Case-insensitive inverse of to_string; throws InvalidSymbol.
  LoopPolicy loop_policy_from_string(std::string_view name);

  //! The scalar that \p loops contribute under \p policy.
  Coefficient loop_scalar(LoopRecord const& loops, LoopPolicy policy);

  //! A finite linear combination of diagrams of a family with Laurent
  //! polynomial coefficients.
  //!
  //! Terms are kept in a map keyed by canonical diagram and zero terms are
  //! never stored, so that equality is structural.  Binary operations
  //! throw AmbientMismatch unless both operands have the same family and
  //! the same loop policy.
  class AlgebraElement {
   public:
    using Terms = std::map<Diagram, Coefficient>;

    AlgebraElement(MonoidFamily const& fam, LoopPolicy policy);

    static AlgebraElement zero(MonoidFamily const& fam, LoopPolicy policy);
    static AlgebraElement one(MonoidFamily const& fam, LoopPolicy policy);
    //! c * x; throws AmbientMismatch if \p x does not fit the family.
    static AlgebraElement from_diagram(MonoidFamily const& fam,
                                       LoopPolicy          policy,
                                       Diagram const&      x,
                                       Coefficient const&  c = 1);
    //! The product of the generators of \p w, loops becoming scalars.
    static AlgebraElement from_word(MonoidFamily const& fam,
                                    LoopPolicy          policy,
                                    Word const&         w);
    static AlgebraElement from_word(MonoidFamily const& fam,
                                    LoopPolicy          policy,
                                    std::string_view    w);

    MonoidFamily const& family() const noexcept {
      return _family;
    }
    LoopPolicy policy() const noexcept {
      return _policy;
    }
    Terms const& terms() const noexcept {
      return _terms;
    }
    bool is_zero() const noexcept {
      return _terms.empty();
    }
    //! The coefficient of \p x (0 if absent).
    Coefficient coefficient(Diagram const& x) const;

    //! Adds c * x.
    AlgebraElement& add_term(Diagram const& x, Coefficient const& c);

    AlgebraElement& operator+=(AlgebraElement const& that);
    AlgebraElement& operator-=(AlgebraElement const& that);
    AlgebraElement& operator*=(Coefficient const& c);

    friend AlgebraElement operator+(AlgebraElement a, AlgebraElement const& b) {
      return a += b;
    }
    friend AlgebraElement operator-(AlgebraElement a, AlgebraElement const& b) {
      return a -= b;
    }
    friend AlgebraElement operator*(AlgebraElement a, Coefficient const& c) {
      return a *= c;
    }
    friend AlgebraElement operator*(Coefficient const& c, AlgebraElement a) {
      return a *= c;
    }
    //! The bilinear extension of the diagram product.
    friend AlgebraElement operator*(AlgebraElement const& a,
                                    AlgebraElement const& b);

    bool operator==(AlgebraElement const& that) const;

    //! `coeff * [encoding] + ...` in diagram order, `0` when empty.
    std::string to_string() const;

   private:
    void check_ambient(AlgebraElement const& that) const;

    MonoidFamily _family;
    LoopPolicy   _policy;
    Terms        _terms;
  };

  //! Structural equality of \p a and \p b.
  bool equal(AlgebraElement const& a, AlgebraElement const& b);

  //! Throws AmbientMismatch unless \p a and \p b share family and policy.
  AlgebraElement multiply(AlgebraElement const& a, AlgebraElement const& b);

  //! The bead generator z_i^k with k read modulo d.
  AlgebraElement bead(MonoidFamily const& fam, LoopPolicy policy, int i, int k);

  //! (1/d) sum_k z_i^k z_j^-k.  Throws InvalidSymbol for bad indices.
  AlgebraElement bridge_e(MonoidFamily const& fam,
                          LoopPolicy          policy,
                          int                 i,
                          int                 j);
  //! (1/d) sum_k z_i^k t_i z_i^-k.
  AlgebraElement bridge_f(MonoidFamily const& fam, LoopPolicy policy, int i);
  //! (1/d) sum_k z_i^k r_i z_i^-k.
  AlgebraElement bridge_q(MonoidFamily const& fam, LoopPolicy policy, int i);
  //! (1/d) sum_k z_j^k p_i z_h^-k.
  AlgebraElement bridge_w(MonoidFamily const& fam,
                          LoopPolicy          policy,
                          int                 i,
                          int                 j,
                          int                 h);
  //! (1/d) sum_k c_k z_i^-k where c_k is the scalar of one loop of
  //! residue k under \p policy.
  AlgebraElement cap_z(MonoidFamily const& fam, LoopPolicy policy, int i);

  //! What specialize does.
  struct Specialization {
    //! Values for variables; the others are kept.
    std::map<Var, mpq_class> values;
    //! Send every bead to 0 (z_i -> 1); the target family has d = 1.
    bool erase_beads = false;
    //! Forget the ties; the target is the untied counterpart family.
    bool erase_ties = false;
    //! Loop policy of the target algebra.
    LoopPolicy target_policy = LoopPolicy::neglect;

    //! Every alpha_k (0 < k < d) and every y_k set to 1.
    static Specialization deframing(int d);
  };

  //! The family reached from \p fam by erasing beads and/or ties.
  MonoidFamily specialized_family(MonoidFamily const& fam,
                                  bool                erase_beads,
                                  bool                erase_ties);

  //! Applies \p s to every coefficient and diagram, merging terms.
  AlgebraElement specialize(AlgebraElement const& x, Specialization const& s);

}  // namespace framoid

#endif  // FRAMOID_ALGEBRA_HPP_
