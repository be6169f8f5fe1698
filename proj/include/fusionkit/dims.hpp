#pragma once

#include <string>

#include "fusionkit/bigint.hpp"
#include "fusionkit/fusion_engine.hpp"
#include "fusionkit/word_algebra.hpp"

namespace fusionkit {

// An element a + b*sqrt(n) of the ring of integers adjoined sqrt(n).
// Values with different ambient n never combine. When n is a perfect
// square the pair representation is kept, but equality collapses
// sqrt(n) to its integer root.
class RootInt {
  public:
    RootInt(BigInt rational, BigInt root, long ambient_n);
    static RootInt integer(BigInt value, long ambient_n);
    static RootInt sqrt_n(long ambient_n);

    const BigInt& rational_part() const { return a_; }
    const BigInt& root_part() const { return b_; }
    long ambient() const { return n_; }

    RootInt operator+(const RootInt& o) const;
    RootInt operator-(const RootInt& o) const;
    RootInt operator*(const RootInt& o) const;

    bool operator==(const RootInt& o) const;
    bool operator!=(const RootInt& o) const { return !(*this == o); }

    // Exact sign of the real value a + b*sqrt(n): -1, 0 or +1.
    int sign() const;

    std::string to_string() const;  // "a + b*sqrt(n)"

  private:
    void check_ambient(const RootInt& o) const;
    BigInt a_, b_;
    long n_;
};

// k-th term of the sequence defined by d_0 = 1, d_1 = sqrt(n) and
// d_{k+1} + d_{k-1} = sqrt(n) d_k, in exact arithmetic. Requires n >= 4.
RootInt d_seq(int k, long n);

// Dimension of the irreducible labeled by x: the product of d over the
// a-run exponents of the word's normal form. The root component of the
// product always vanishes for genuine words; a nonzero one is reported as
// an internal error. Requires n >= 4.
BigInt dimension_of_word(const Word& x, long n);

BigInt dimension_of_decomposition(const Decomposition& d, long n);

}  // namespace fusionkit
