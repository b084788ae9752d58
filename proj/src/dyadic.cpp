#include "bcc/dyadic.hpp"

#include <vector>

#include "bcc/errors.hpp"

namespace bcc {

namespace {
// Total scaled-bits guard; beyond this the exact arithmetic is being
// misused (degrees this large never occur at desk scale).
constexpr unsigned kMaxExponent = 10000;
}  // namespace

Dyadic::Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) {
    if (num_ < 0) throw DomainError("dyadic numerator must be nonnegative");
    if (exp_ > kMaxExponent)
        throw ResourceError("dyadic exponent exceeds scaled-bits guard",
                            ResourceError::Kind::Guard);
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    while (exp_ > 0 && (num_ & 1) == 0) {
        num_ >>= 1;
        --exp_;
    }
}

Dyadic& Dyadic::operator+=(const Dyadic& o) {
    unsigned e = std::max(exp_, o.exp_);
    BigInt a = num_ << (e - exp_);
    BigInt b = o.num_ << (e - o.exp_);
    *this = Dyadic(a + b, e);
    return *this;
}

int Dyadic::compare(const Dyadic& o) const {
    unsigned e = std::max(exp_, o.exp_);
    BigInt a = num_ << (e - exp_);
    BigInt b = o.num_ << (e - o.exp_);
    if (a < b) return -1;
    if (a > b) return 1;
    return 0;
}

BigInt Dyadic::ceil() const {
    if (exp_ == 0) return num_;
    return (num_ + (BigInt(1) << exp_) - 1) >> exp_;
}

BigInt Dyadic::floor() const { return num_ >> exp_; }

double Dyadic::to_double() const {
    return num_.convert_to<double>() / std::pow(2.0, static_cast<double>(exp_));
}

std::string Dyadic::to_string() const {
    if (exp_ == 0) return num_.str();
    return num_.str() + "/2^" + std::to_string(exp_);
}

Dyadic dyadic_power_sum(const std::vector<int>& degrees) {
    unsigned maxd = 0;
    for (int d : degrees) maxd = std::max(maxd, static_cast<unsigned>(d));
    BigInt num = 0;
    for (int d : degrees) num += BigInt(1) << (maxd - static_cast<unsigned>(d));
    return Dyadic(num, maxd);
}

}  // namespace bcc
