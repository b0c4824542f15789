#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace zigzag {

// Nonnegative rational with a distinguished +infinity. Codomain of every
// distance in this library; finite values produced here always have
// denominator 1, 2 or 4.
class ExtRat {
public:
    ExtRat() : num_(0), den_(1), inf_(false) {}

    ExtRat(long long num, long long den) : num_(num), den_(den), inf_(false) {
        if (den_ <= 0) throw std::invalid_argument("ExtRat: denominator must be positive");
        if (num_ < 0) throw std::invalid_argument("ExtRat: value must be nonnegative");
        long long g = std::gcd(num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    static ExtRat integer(long long v) { return ExtRat(v, 1); }
    static ExtRat infinity() {
        ExtRat r;
        r.inf_ = true;
        return r;
    }

    bool is_infinite() const { return inf_; }
    long long num() const { return num_; }
    long long den() const { return den_; }

    friend bool operator==(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return a.inf_ && b.inf_;
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const ExtRat& a, const ExtRat& b) { return !(a == b); }
    friend bool operator<(const ExtRat& a, const ExtRat& b) {
        if (a.inf_) return false;
        if (b.inf_) return true;
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a < b || a == b; }
    friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
    friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

    friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
        if (a.inf_ || b.inf_) return infinity();
        return ExtRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }

    std::string to_string() const {
        if (inf_) return "inf";
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    long long num_;
    long long den_;
    bool inf_;
};

inline ExtRat max(const ExtRat& a, const ExtRat& b) { return a < b ? b : a; }
inline ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

}  // namespace zigzag
