// framoid - exact computations in framed and tied diagram monoids

#include "framoid/combinatorics.hpp"

#include <vector>

namespace framoid {

  mpz_class binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
      return 0;
    }
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(),
                 static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
  }

  mpz_class factorial(long n) {
    if (n < 0) {
      return 0;
    }
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
  }

  mpz_class catalan(long n) {
    if (n < 0) {
      return 0;
    }
    return binomial(2 * n, n) / (n + 1);
  }

  mpz_class stirling2(long n, long k) {
    if (n < 0 || k < 0 || k > n) {
      return 0;
    }
    // Row by row: S(m, j) = j S(m-1, j) + S(m-1, j-1).
    std::vector<mpz_class> row(static_cast<std::size_t>(n) + 1, 0);
    row[0] = 1;
    for (long m = 1; m <= n; ++m) {
      for (long j = m; j >= 1; --j) {
        row[j] = j * row[j] + row[j - 1];
      }
      row[0] = 0;
    }
    return row[k];
  }

  mpz_class bell(long n) {
    if (n < 0) {
      return 0;
    }
    // Bell triangle.
    std::vector<mpz_class> row{1};
    for (long m = 0; m < n; ++m) {
      std::vector<mpz_class> next{row.back()};
      for (auto const& v : row) {
        next.push_back(next.back() + v);
      }
      row = std::move(next);
    }
    return row.front();
  }

  mpz_class odd_double_factorial(long n) {
    if (n < 0) {
      return 0;
    }
    mpz_class out = 1;
    for (long k = 1; k <= n; ++k) {
      out *= 2 * k - 1;
    }
    return out;
  }

  mpz_class fuss_catalan_41(long n) {
    if (n < 0) {
      return 0;
    }
    return binomial(4 * n + 1, n) / (4 * n + 1);
  }

}  // namespace framoid
