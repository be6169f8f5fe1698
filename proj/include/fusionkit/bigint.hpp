#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace fusionkit {

// Unbounded signed integer. Multiplicities, matrix entries and ring
// coefficients all use this type; nothing in the library computes in
// floating point.
using BigInt = mpz_class;

// letters, moduli and ambient dimensions are plain longs mixed freely
// with BigInt, which needs the LP64 model
static_assert(sizeof(long) == 8, "this library assumes 64-bit long");

inline BigInt bigint_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline std::string to_decimal(const BigInt& v) { return v.get_str(); }

// Parses a decimal string (optional leading '-'). Throws std::invalid_argument.
inline BigInt bigint_from_decimal(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty integer literal");
    BigInt out;
    if (out.set_str(text, 10) != 0)
        throw std::invalid_argument("bad integer literal: " + text);
    return out;
}

}  // namespace fusionkit
