#include "fusionkit/dims.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "fusionkit/mform.hpp"

namespace fusionkit {

RootInt::RootInt(BigInt rational, BigInt root, long ambient_n)
    : a_(std::move(rational)), b_(std::move(root)), n_(ambient_n) {
    if (n_ < 2) throw std::invalid_argument("ambient n must be >= 2");
}

RootInt RootInt::integer(BigInt value, long ambient_n) {
    return RootInt(std::move(value), BigInt(0), ambient_n);
}

RootInt RootInt::sqrt_n(long ambient_n) { return RootInt(BigInt(0), BigInt(1), ambient_n); }

void RootInt::check_ambient(const RootInt& o) const {
    if (n_ != o.n_) throw std::invalid_argument("mixed ambient n in root arithmetic");
}

RootInt RootInt::operator+(const RootInt& o) const {
    check_ambient(o);
    return RootInt(a_ + o.a_, b_ + o.b_, n_);
}

RootInt RootInt::operator-(const RootInt& o) const {
    check_ambient(o);
    return RootInt(a_ - o.a_, b_ - o.b_, n_);
}

RootInt RootInt::operator*(const RootInt& o) const {
    check_ambient(o);
    return RootInt(a_ * o.a_ + BigInt(n_) * b_ * o.b_, a_ * o.b_ + b_ * o.a_, n_);
}

namespace {

// exact integer square root when n is a perfect square, -1 otherwise
long perfect_root(long n) {
    BigInt big(n);
    if (mpz_perfect_square_p(big.get_mpz_t()) == 0) return -1;
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), big.get_mpz_t());
    return r.get_si();
}

}  // namespace

bool RootInt::operator==(const RootInt& o) const {
    check_ambient(o);
    long r = perfect_root(n_);
    if (r < 0) return a_ == o.a_ && b_ == o.b_;
    return a_ + b_ * r == o.a_ + o.b_ * r;
}

int RootInt::sign() const {
    int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // a and b*sqrt(n) pull in opposite directions: compare a^2 with n b^2
    BigInt lhs = a_ * a_;
    BigInt rhs = BigInt(n_) * b_ * b_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

std::string RootInt::to_string() const {
    return to_decimal(a_) + " + " + to_decimal(b_) + "*sqrt(" + std::to_string(n_) + ")";
}

namespace {

std::mutex d_mu;
std::map<long, std::vector<RootInt>> d_tables;

}  // namespace

RootInt d_seq(int k, long n) {
    if (k < 0) throw std::invalid_argument("d_seq index must be >= 0");
    if (n < 4) throw std::invalid_argument("dimension sequence needs n >= 4");
    std::lock_guard<std::mutex> lock(d_mu);
    auto& table = d_tables[n];
    if (table.empty()) {
        table.push_back(RootInt::integer(BigInt(1), n));
        table.push_back(RootInt::sqrt_n(n));
    }
    while (static_cast<int>(table.size()) <= k) {
        std::size_t m = table.size();
        table.push_back(RootInt::sqrt_n(n) * table[m - 1] - table[m - 2]);
    }
    return table[static_cast<std::size_t>(k)];
}

BigInt dimension_of_word(const Word& x, long n) {
    if (n < 4) throw std::invalid_argument("word dimensions need n >= 4");
    RootInt product = RootInt::integer(BigInt(1), n);
    for (long e : to_mform(x).a_exponents()) {
        if (e < 0 || e > 1'000'000) throw std::invalid_argument("a-exponent out of range");
        product = product * d_seq(static_cast<int>(e), n);
    }
    if (product.root_part() != 0)
        throw std::logic_error("dimension product has a nonzero root component for word " +
                               format_word(x));
    return product.rational_part();
}

BigInt dimension_of_decomposition(const Decomposition& d, long n) {
    BigInt total = 0;
    for (const auto& [w, m] : d.terms()) total += m * dimension_of_word(w, n);
    return total;
}

}  // namespace fusionkit
