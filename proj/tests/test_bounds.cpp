// Exact big-integer bounds: factorials, multinomial Ramsey-type bounds with
// reproducible expressions, the two-step representation chain with its desk
// guards, and exact comparison against towering powers of two.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "stabring/bounds.hpp"

using stabring::BigInt;

TEST_SUITE("bounds") {
  TEST_CASE("big_factorial") {
    CHECK(stabring::big_factorial(0) == 1);
    CHECK(stabring::big_factorial(1) == 1);
    CHECK(stabring::big_factorial(5) == 120);
    CHECK(stabring::big_factorial(20) == BigInt("2432902008176640000"));
    CHECK_THROWS_AS(stabring::big_factorial(-1), std::invalid_argument);
    try {
      stabring::big_factorial(2000001);
      FAIL("expected BoundTooLarge");
    } catch (const stabring::BoundTooLarge& e) {
      CHECK(e.expression == "2000001!");
    }
  }

  TEST_CASE("multinomial bound frozen values and expressions") {
    auto two_two = stabring::multinomial_ramsey_bound({2, 2});
    CHECK(two_two.value == 6);
    CHECK(two_two.expression == "(2+2)!/(2!*2!)");

    auto three_colours = stabring::multinomial_ramsey_bound({2, 2, 2});
    CHECK(three_colours.value == 90);
    CHECK(three_colours.expression == "(2+2+2)!/(2!*2!*2!)");

    auto single = stabring::multinomial_ramsey_bound({5});
    CHECK(single.value == 6);
    CHECK(single.expression == "5+1");

    CHECK(stabring::multinomial_ramsey_bound({0, 0}).value == 1);
    CHECK(stabring::multinomial_ramsey_bound({3, 1}).value == 4);
    CHECK(stabring::multinomial_ramsey_bound({4, 6}).value == 210);
    CHECK(stabring::multinomial_ramsey_bound({2, 3}).value ==
          stabring::multinomial_ramsey_bound({3, 2}).value);

    CHECK_THROWS_AS(stabring::multinomial_ramsey_bound({}), std::invalid_argument);
    CHECK_THROWS_AS(stabring::multinomial_ramsey_bound({-1, 2}),
                    std::invalid_argument);
    try {
      stabring::multinomial_ramsey_bound({1999999, 2});
      FAIL("expected BoundTooLarge");
    } catch (const stabring::BoundTooLarge& e) {
      CHECK(e.expression == "(1999999+2)!/(1999999!*2!)");
    }
  }

  TEST_CASE("two-colour multinomials equal binomial coefficients") {
    for (std::int64_t a = 0; a <= 30; ++a) {
      for (std::int64_t b = 0; b <= 30; ++b) {
        BigInt binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(a + b),
                     static_cast<unsigned long>(a));
        CHECK(stabring::multinomial_ramsey_bound({a, b}).value == binom);
      }
    }
  }

  TEST_CASE("representation chain at k = 2, s = 1") {
    auto rb = stabring::representation_stability_bound(2, 1);
    // inner = 6!/(3!*3!) = 20, cells = 22, outer over (1+1)^2 = 4 colours.
    CHECK(rb.exact_chain.expression == "(21+21+21+21)!/(21!*21!*21!*21!)+2");
    BigInt expected;
    mpz_bin_uiui(expected.get_mpz_t(), 84, 21);
    BigInt part;
    mpz_bin_uiui(part.get_mpz_t(), 63, 21);
    expected *= part;
    mpz_bin_uiui(part.get_mpz_t(), 42, 21);
    expected *= part;
    expected += 2;
    CHECK(rb.exact_chain.value == expected);

    CHECK(rb.simplified_log2 == 16384);  // 2^(7*2*1)
    CHECK(rb.simplified_materialized);
    CHECK(rb.simplified.expression == "2^(2^(7*2*1))");
    CHECK(mpz_sizeinbase(rb.simplified.value.get_mpz_t(), 2) == 16385);
    CHECK_FALSE(rb.k1_flagged);
    CHECK(stabring::exact_chain_below_simplified(rb));
  }

  TEST_CASE("representation chain at k = 1 is flagged as degenerate") {
    auto rb = stabring::representation_stability_bound(1, 1);
    // inner = 3+1 = 4, cells = 6, outer = 10!/(5!*5!) = 252, chain = 254.
    CHECK(rb.exact_chain.value == 254);
    CHECK(rb.exact_chain.expression == "(5+5)!/(5!*5!)+2");
    CHECK(rb.simplified_log2 == 1);
    CHECK(rb.simplified.value == 2);
    CHECK(rb.k1_flagged);
    CHECK_FALSE(stabring::exact_chain_below_simplified(rb));
  }

  TEST_CASE("representation chain at k = 2, s = 2") {
    auto rb = stabring::representation_stability_bound(2, 2);
    // inner = 8!/(4!*4!) = 70, cells = 72, outer over 9 colours of 71.
    CHECK(rb.exact_chain.expression ==
          "(71+71+71+71+71+71+71+71+71)!/"
          "(71!*71!*71!*71!*71!*71!*71!*71!*71!)+2");
    CHECK(rb.simplified_log2 == 268435456);  // 2^28 exponent stays symbolic
    CHECK_FALSE(rb.simplified_materialized);
    CHECK(rb.simplified.value == 0);
    CHECK(stabring::exact_chain_below_simplified(rb));
    // 639!/(71!)^9 has a couple thousand bits, nowhere near 2^(2^28).
    const std::size_t bits = mpz_sizeinbase(rb.exact_chain.value.get_mpz_t(), 2);
    CHECK(bits > 1000);
    CHECK(bits < 4000);
  }

  TEST_CASE("representation guards refuse oversized chains symbolically") {
    CHECK_THROWS_AS(stabring::representation_stability_bound(0, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(stabring::representation_stability_bound(1, 0),
                    std::invalid_argument);
    try {
      stabring::representation_stability_bound(1, 65536);
      FAIL("expected BoundTooLarge");
    } catch (const stabring::BoundTooLarge& e) {
      CHECK(e.expression == "(65536+1)^1");
    }
    try {
      stabring::representation_stability_bound(4, 1);
      FAIL("expected BoundTooLarge");
    } catch (const stabring::BoundTooLarge& e) {
      CHECK(e.expression.find("cells over") != std::string::npos);
      CHECK(e.expression.find("(1+1)^4") != std::string::npos);
    }
  }

  TEST_CASE("exact comparison against powers of two") {
    BigInt big10;
    mpz_ui_pow_ui(big10.get_mpz_t(), 10, 100);
    CHECK(stabring::fits_below_power_of_two(big10, 333));
    CHECK_FALSE(stabring::fits_below_power_of_two(big10, 332));

    BigInt pow50 = 1;
    mpz_mul_2exp(pow50.get_mpz_t(), pow50.get_mpz_t(), 50);
    CHECK(stabring::fits_below_power_of_two(pow50, 50));
    CHECK_FALSE(stabring::fits_below_power_of_two(pow50 + 1, 50));
    CHECK(stabring::fits_below_power_of_two(pow50 - 1, 50));

    CHECK(stabring::fits_below_power_of_two(0, 0));
    CHECK(stabring::fits_below_power_of_two(-5, 3));
    CHECK(stabring::fits_below_power_of_two(1, 0));
    CHECK_FALSE(stabring::fits_below_power_of_two(2, 0));
    CHECK(stabring::fits_below_power_of_two(2, 1));
  }
}
