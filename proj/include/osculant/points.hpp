#pragma once

#include <optional>
#include <string>

#include "osculant/rational.hpp"

namespace osculant::schubert {

using exactalg::GaussianRational;
using exactalg::Rational;

// A point of P^1: either a finite Gaussian rational or infinity.
class OsculationPoint {
  public:
    OsculationPoint() : finite_(GaussianRational(0)), infinite_(false) {}
    static OsculationPoint infinity() {
        OsculationPoint p;
        p.infinite_ = true;
        return p;
    }
    static OsculationPoint finite(GaussianRational v) {
        OsculationPoint p;
        p.finite_ = std::move(v);
        return p;
    }
    static OsculationPoint real(Rational v) { return finite(GaussianRational(std::move(v))); }

    bool is_infinity() const { return infinite_; }
    // infinity counts as real
    bool is_real() const { return infinite_ || finite_.is_real(); }
    const GaussianRational& value() const {
        if (infinite_) throw domain_error("point at infinity has no finite value");
        return finite_;
    }
    OsculationPoint conj() const {
        if (infinite_) return *this;
        return finite(finite_.conj());
    }

    // "inf", "a/b", or "a/b+c/d*i"
    std::string to_text() const;
    static OsculationPoint from_text(const std::string& text);

    friend bool operator==(const OsculationPoint& a, const OsculationPoint& b) {
        if (a.infinite_ != b.infinite_) return false;
        if (a.infinite_) return true;
        return a.finite_ == b.finite_;
    }
    friend bool operator!=(const OsculationPoint& a, const OsculationPoint& b) { return !(a == b); }
    friend bool operator<(const OsculationPoint& a, const OsculationPoint& b) {
        if (a.infinite_ != b.infinite_) return a.infinite_; // infinity sorts first
        if (a.infinite_) return false;
        return a.finite_ < b.finite_;
    }

  private:
    GaussianRational finite_;
    bool infinite_;
};

} // namespace osculant::schubert
