// framoid - exact computations in framed and tied diagram monoids

#ifndef FRAMOID_COMBINATORICS_HPP_
#define FRAMOID_COMBINATORICS_HPP_

#include <gmpxx.h>

namespace framoid {

  //! \defgroup combinatorics Exact counting sequences
  //!
  //! All functions return 0 for negative arguments (and for k outside
  //! [0, n] in the binomial and Stirling numbers).
  //! @{

  mpz_class binomial(long n, long k);
  mpz_class factorial(long n);
  mpz_class catalan(long n);
  mpz_class bell(long n);
  //! Stirling numbers of the second kind.
  mpz_class stirling2(long n, long k);
  //! (2n - 1)!! = 1 * 3 * ... * (2n - 1); equal to 1 for n = 0.
  mpz_class odd_double_factorial(long n);
  //! C(4n + 1, n) / (4n + 1).
  mpz_class fuss_catalan_41(long n);

  //! @}

}  // namespace framoid

#endif  // FRAMOID_COMBINATORICS_HPP_
