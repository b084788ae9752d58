#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace bcc {

using BigInt = boost::multiprecision::cpp_int;

// Nonnegative dyadic rational num / 2^exp with an arbitrary-precision
// numerator. Expectation comparisons in the derandomized extractor must
// never be flipped by rounding, so everything here is exact. Values are
// kept normalized: numerator odd or zero (zero forces exp = 0), which
// makes structural equality value equality.
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(BigInt num, unsigned exp);

    static Dyadic from_integer(long long n) { return Dyadic(BigInt(n), 0); }
    // 2^-e
    static Dyadic pow2_neg(unsigned e) { return Dyadic(BigInt(1), e); }

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }

    Dyadic& operator+=(const Dyadic& o);
    friend Dyadic operator+(Dyadic a, const Dyadic& b) { return a += b; }

    bool operator==(const Dyadic& o) const { return num_ == o.num_ && exp_ == o.exp_; }
    bool operator<(const Dyadic& o) const { return compare(o) < 0; }
    bool operator<=(const Dyadic& o) const { return compare(o) <= 0; }
    bool operator>(const Dyadic& o) const { return compare(o) > 0; }
    bool operator>=(const Dyadic& o) const { return compare(o) >= 0; }

    BigInt ceil() const;
    BigInt floor() const;
    double to_double() const;
    std::string to_string() const;  // "num/2^exp" or plain integer

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return exp_ == 0; }

private:
    int compare(const Dyadic& o) const;

    BigInt num_ = 0;
    unsigned exp_ = 0;
};

// Sum of 2^-d over a degree sequence, the quantity Hansel-style
// extraction preserves.
Dyadic dyadic_power_sum(const std::vector<int>& degrees);

}  // namespace bcc
