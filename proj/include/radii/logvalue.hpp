#pragma once

#include "radii/errors.hpp"
#include "radii/rational.hpp"

namespace radii {

// A radius r in [0,1] stored as v = -log_p r: finite v >= 0 for r in (0,1],
// infinite for r = 0. Ordering on radii reverses ordering on log-values.
class LogValue {
public:
    LogValue() : finite_(true), value_(0) {}

    static LogValue finite(Rat v) {
        if (v < 0) throw ValidationError("log-value must be nonnegative");
        LogValue lv;
        lv.finite_ = true;
        lv.value_ = std::move(v);
        return lv;
    }

    static LogValue infinite() {
        LogValue lv;
        lv.finite_ = false;
        return lv;
    }

    bool is_finite() const { return finite_; }

    const Rat& value() const {
        if (!finite_) throw ValidationError("infinite log-value has no finite value");
        return value_;
    }

    friend bool operator==(const LogValue& a, const LogValue& b) {
        if (a.finite_ != b.finite_) return false;
        return !a.finite_ || a.value_ == b.value_;
    }

    // Compares log-values (larger = smaller radius); infinity is largest.
    friend bool operator<(const LogValue& a, const LogValue& b) {
        if (!a.finite_) return false;
        if (!b.finite_) return true;
        return a.value_ < b.value_;
    }
    friend bool operator!=(const LogValue& a, const LogValue& b) { return !(a == b); }
    friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
    friend bool operator<=(const LogValue& a, const LogValue& b) { return !(b < a); }
    friend bool operator>=(const LogValue& a, const LogValue& b) { return !(a < b); }

private:
    bool finite_;
    Rat value_;
};

inline std::string to_string(const LogValue& v) {
    return v.is_finite() ? to_string(v.value()) : std::string("inf");
}

inline LogValue logvalue_from_string(const std::string& s) {
    if (s == "inf") return LogValue::infinite();
    return LogValue::finite(rat_from_string(s));
}

}  // namespace radii
