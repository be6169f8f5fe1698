#include <doctest.h>

#include <stdexcept>

#include "fusionkit/dims.hpp"
#include "fusionkit/verify.hpp"

using namespace fusionkit;

TEST_CASE("ring arithmetic") {
    RootInt root5 = RootInt::sqrt_n(5);
    RootInt product = root5 * root5;
    CHECK(product.rational_part() == 5);
    CHECK(product.root_part() == 0);

    RootInt one = RootInt::integer(BigInt(1), 5);
    RootInt x(BigInt(2), BigInt(-3), 5);
    CHECK(one * x == x);

    RootInt scaled = RootInt::integer(BigInt(3), 4) * RootInt::sqrt_n(4);
    CHECK(scaled.rational_part() == 0);
    CHECK(scaled.root_part() == 3);

    CHECK_THROWS_AS(RootInt::sqrt_n(4) * RootInt::sqrt_n(5), std::invalid_argument);
}

TEST_CASE("equality collapses perfect squares") {
    CHECK(RootInt(BigInt(0), BigInt(2), 4) == RootInt(BigInt(4), BigInt(0), 4));
    CHECK(RootInt(BigInt(0), BigInt(2), 5) != RootInt(BigInt(4), BigInt(0), 5));
    CHECK(RootInt(BigInt(1), BigInt(1), 9) == RootInt(BigInt(4), BigInt(0), 9));
}

TEST_CASE("exact signs") {
    CHECK(RootInt(BigInt(0), BigInt(0), 5).sign() == 0);
    CHECK(RootInt(BigInt(3), BigInt(-1), 5).sign() == 1);    // 3 > sqrt(5)
    CHECK(RootInt(BigInt(2), BigInt(-1), 5).sign() == -1);   // 2 < sqrt(5)
    CHECK(RootInt(BigInt(-2), BigInt(1), 5).sign() == 1);
    CHECK(RootInt(BigInt(-2), BigInt(1), 4).sign() == 0);
    CHECK(RootInt(BigInt(-3), BigInt(-1), 7).sign() == -1);
}

TEST_CASE("dimension sequence") {
    for (long n : {4L, 5L, 7L}) {
        CHECK(d_seq(0, n).rational_part() == 1);
        CHECK(d_seq(1, n).root_part() == 1);
        CHECK(d_seq(2, n).rational_part() == n - 1);
        CHECK(d_seq(2, n).root_part() == 0);
        CHECK(d_seq(3, n).root_part() == n - 2);
        CHECK(d_seq(4, n).rational_part() == n * n - 3 * n + 1);
    }
    CHECK(d_seq(7, 4) == RootInt::integer(BigInt(8), 4));
    CHECK_THROWS_AS(d_seq(2, 3), std::invalid_argument);
    CHECK_THROWS_AS(d_seq(-1, 5), std::invalid_argument);

    CHECK(check_d_linear_at_four(12).failures == 0);
    CHECK(check_d_product_identity(10, {4, 5, 7}).failures == 0);
    CHECK(check_d_positivity(12, {4, 5, 7}).failures == 0);
}

TEST_CASE("word dimensions") {
    for (long n : {4L, 5L, 7L}) {
        CHECK(dimension_of_word(Word{1}, n) == n);
        CHECK(dimension_of_word(Word{0}, n) == n - 1);
        CHECK(dimension_of_word(Word{0, 0}, n) == n * n - 3 * n + 1);
        CHECK(dimension_of_word(Word{}, n) == 1);
        CHECK(dimension_of_word(Word{1, 2}, n) == n * (n - 1));
    }
    CHECK_THROWS_AS(dimension_of_word(Word{1}, 3), std::invalid_argument);
}

TEST_CASE("decomposition dimensions") {
    FusionAlphabet a3 = FusionAlphabet::reflection(ModulusSpec::finite_order(3));
    FusionContext ctx(a3);
    CHECK(dimension_of_decomposition(ctx.basic_tensor({1}), 5) == 5);
    CHECK(dimension_of_decomposition(ctx.basic_tensor({0}), 5) == 5);

    Decomposition fused = fuse_irreducibles(Word{1}, Word{2}, a3);
    CHECK(dimension_of_decomposition(fused, 5) == 25);
}

TEST_CASE("dimension output text") {
    CHECK(d_seq(3, 5).to_string() == "0 + 3*sqrt(5)");
    CHECK(RootInt(BigInt(-2), BigInt(0), 7).to_string() == "-2 + 0*sqrt(7)");
}
