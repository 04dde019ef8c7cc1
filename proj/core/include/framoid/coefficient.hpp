// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_COEFFICIENT_HPP_
#define FRAMOID_COEFFICIENT_HPP_

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace framoid {

  //! A scalar parameter.
  //!
  //! `alpha` and `y` carry an index k >= 1 (alpha_k, y_k); `y` with index
  //! 0 is the single parameter y of the tied Temperley-Lieb algebra.  The
  //! other kinds ignore the index.
  struct Var {
    enum Kind { alpha, x, y, v, a, q };

    Kind kind;
    int  index = 0;

    static Var alpha_(int k) {
      return {alpha, k};
    }
    static Var x_() {
      return {x, 0};
    }
    static Var y_(int k = 0) {
      return {y, k};
    }
    static Var v_() {
      return {v, 0};
    }
    static Var a_() {
      return {a, 0};
    }
    static Var q_() {
      return {q, 0};
    }

    auto operator<=>(Var const&) const = default;
  };

  std::string to_string(Var const& v);

  //! A product of variables with non-zero integer exponents, sorted by
  //! variable.
  using Monomial = std::vector<std::pair<Var, int>>;

  //! A Laurent polynomial in the variables above with rational
  //! coefficients, kept in canonical form (no zero terms, reduced
  //! rationals), so that equality is structural.
  class Coefficient {
   public:
    Coefficient() = default;
    Coefficient(mpq_class const& c);  // NOLINT(runtime/explicit)
    Coefficient(long c) : Coefficient(mpq_class(c)) {}  // NOLINT
    explicit Coefficient(Var const& v, int exponent = 1);

    bool is_zero() const noexcept {
      return _terms.empty();
    }
    //! The constant term, if the coefficient is a constant.
    bool is_constant() const noexcept;
    mpq_class constant_term() const;

    Coefficient& operator+=(Coefficient const& that);
    Coefficient& operator-=(Coefficient const& that);
    Coefficient& operator*=(Coefficient const& that);

    friend Coefficient operator+(Coefficient a, Coefficient const& b) {
      return a += b;
    }
    friend Coefficient operator-(Coefficient a, Coefficient const& b) {
      return a -= b;
    }
    friend Coefficient operator*(Coefficient a, Coefficient const& b) {
      return a *= b;
    }
    Coefficient operator-() const;

    //! Integer power; negative powers only for single monomials.
    Coefficient pow(int e) const;

    bool operator==(Coefficient const&) const = default;

    //! Replaces the variables in \p values; throws Error when a variable
    //! with a negative exponent is sent to 0.
    Coefficient substitute(std::map<Var, mpq_class> const& values) const;

    //! `0`, `1/2`, `x*y1^-1 + 3/4*alpha2`; terms in monomial order.
    std::string to_string() const;

    std::map<Monomial, mpq_class> const& terms() const noexcept {
      return _terms;
    }

   private:
    void add_term(Monomial const& m, mpq_class const& c);

    std::map<Monomial, mpq_class> _terms;
  };

}  // namespace framoid

#endif  // FRAMOID_COEFFICIENT_HPP_
