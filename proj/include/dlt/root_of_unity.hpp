#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace dlt {

using Complex = std::complex<double>;

// One character value: either 0 or e^{2*pi*i*k/m} with the angle kept as an
// exact reduced fraction k/m in [0,1). Products add angles in integer
// arithmetic, so multiplicativity of character values is exact; conversion
// to Complex happens only at numeric boundaries.
class RootOfUnity {
public:
    RootOfUnity() = default;  // the value 1

    static RootOfUnity one() { return {}; }

    static RootOfUnity zero() {
        RootOfUnity r;
        r.zero_ = true;
        return r;
    }

    // e^{2*pi*i*num/den}
    static RootOfUnity from_fraction(std::int64_t num, std::int64_t den) {
        if (den == 0) throw std::invalid_argument("RootOfUnity: zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        num %= den;
        if (num < 0) num += den;
        const std::int64_t g = std::gcd(num, den);
        RootOfUnity r;
        r.num_ = num / g;
        r.den_ = den / g;
        return r;
    }

    bool is_zero() const { return zero_; }
    bool is_one() const { return !zero_ && num_ == 0; }
    // value in {+1, -1} (or 0)
    bool is_real() const { return zero_ || (2 * num_) % den_ == 0; }

    std::int64_t numerator() const { return num_; }
    std::int64_t denominator() const { return den_; }

    RootOfUnity operator*(const RootOfUnity& o) const {
        if (zero_ || o.zero_) return zero();
        const std::int64_t l = std::lcm(den_, o.den_);
        return from_fraction(num_ * (l / den_) + o.num_ * (l / o.den_), l);
    }

    RootOfUnity& operator*=(const RootOfUnity& o) { return *this = *this * o; }

    RootOfUnity conj() const {
        if (zero_) return zero();
        return from_fraction(den_ - num_, den_);
    }

    RootOfUnity pow(std::int64_t e) const {
        if (zero_) return e == 0 ? one() : zero();
        std::int64_t em = e % den_;
        if (em < 0) em += den_;
        return from_fraction(num_ * em, den_);
    }

    Complex to_complex() const {
        if (zero_) return {0.0, 0.0};
        if (num_ == 0) return {1.0, 0.0};
        if (2 * num_ == den_) return {-1.0, 0.0};
        return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(num_) /
                                   static_cast<double>(den_));
    }

    friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;

private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    bool zero_ = false;
};

}  // namespace dlt
