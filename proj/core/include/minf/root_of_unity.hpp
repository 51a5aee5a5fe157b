/*
 * root_of_unity.hpp
 * -----------------
 * Roots of unity as reduced fractions beta in [0,1), representing
 * alpha = exp(2*pi*i*beta). Exact arithmetic only; no complex numbers.
 */
#pragma once

#include <compare>
#include <string>

#include "minf/linalg.hpp"

namespace minf {

class RootOfUnity {
public:
    RootOfUnity() : num_(0), den_(1) {}

    // Reduced fraction (k mod d)/d.
    RootOfUnity(Int k, Int d) {
        if (d <= 0) throw std::invalid_argument("RootOfUnity: nonpositive denominator");
        k %= d;
        if (k < 0) k += d;
        const Int g = gcd_int(k, d);
        num_ = k / g;
        den_ = d / g;
        if (num_ == 0) den_ = 1;
    }

    static RootOfUnity one() { return RootOfUnity(); }

    const Int& num() const { return num_; }
    const Int& den() const { return den_; }   // = multiplicative order
    const Int& order() const { return den_; }
    bool is_one() const { return num_ == 0; }

    RootOfUnity inverse() const { return RootOfUnity(-num_, den_); }

    // alpha^e = 1 ?
    bool power_is_one(const Int& e) const { return (e % den_) == 0; }

    bool operator==(const RootOfUnity& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }
    bool operator!=(const RootOfUnity& o) const { return !(*this == o); }
    bool operator<(const RootOfUnity& o) const {
        // Order by the fraction value beta = num/den.
        return num_ * o.den_ < o.num_ * den_;
    }

    std::string to_string() const {
        return num_.str() + "/" + den_.str();
    }

private:
    Int num_, den_;
};

}  // namespace minf
