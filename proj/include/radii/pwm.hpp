#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "radii/errors.hpp"
#include "radii/logvalue.hpp"
#include "radii/rational.hpp"

namespace radii {

// Log-side avatar of a piecewise |k*|-monomial map [0,1] -> [0,1] fixing 1:
// a continuous nondecreasing piecewise-affine g: [0,inf) -> [0,inf) with
// g(0) = 0, rational breaks 0 < b_1 < ... < b_m and m+1 nonnegative rational
// slopes. Always canonical: adjacent slopes are distinct.
class Pwm {
public:
    Pwm() : slopes_{Rat(1)} {}  // identity

    static Pwm make(std::vector<Rat> breaks, std::vector<Rat> slopes) {
        if (slopes.size() != breaks.size() + 1)
            throw ValidationError("need exactly one more slope than breaks");
        Rat prev(0);
        for (const Rat& b : breaks) {
            if (b <= prev) throw ValidationError("breaks must be strictly increasing and positive");
            prev = b;
        }
        for (const Rat& s : slopes)
            if (s < 0) throw ValidationError("slopes must be nonnegative");
        // drop redundant breakpoints
        std::vector<Rat> cb, cs;
        cs.push_back(slopes[0]);
        for (std::size_t i = 0; i < breaks.size(); ++i) {
            if (slopes[i + 1] != cs.back()) {
                cb.push_back(breaks[i]);
                cs.push_back(slopes[i + 1]);
            }
        }
        Pwm f;
        f.breaks_ = std::move(cb);
        f.slopes_ = std::move(cs);
        return f;
    }

    static Pwm identity() { return Pwm(); }
    static Pwm zero() { return make({}, {Rat(0)}); }

    const std::vector<Rat>& breaks() const { return breaks_; }
    const std::vector<Rat>& slopes() const { return slopes_; }
    std::size_t segment_count() const { return slopes_.size(); }

    bool is_identity() const { return breaks_.empty() && slopes_[0] == 1; }

    /// Value at the i-th break (accumulated exactly).
    Rat value_at_break(std::size_t i) const {
        Rat v(0), prev(0);
        for (std::size_t j = 0; j <= i; ++j) {
            v += slopes_[j] * (breaks_[j] - prev);
            prev = breaks_[j];
        }
        return v;
    }

    Rat eval(const Rat& v) const {
        if (v < 0) throw ValidationError("evaluation point must be nonnegative");
        Rat acc(0), prev(0);
        for (std::size_t i = 0; i < breaks_.size(); ++i) {
            if (v <= breaks_[i]) return acc + slopes_[i] * (v - prev);
            acc += slopes_[i] * (breaks_[i] - prev);
            prev = breaks_[i];
        }
        return acc + slopes_.back() * (v - prev);
    }

    LogValue eval(const LogValue& v) const {
        if (v.is_finite()) return LogValue::finite(eval(v.value()));
        if (slopes_.back() > 0) return LogValue::infinite();
        return LogValue::finite(breaks_.empty() ? Rat(0) : value_at_break(breaks_.size() - 1));
    }

    /// Slope of the segment just left of v (v > 0).
    Rat slope_below(const Rat& v) const {
        if (v <= 0) throw ValidationError("no segment below 0");
        std::size_t i = 0;
        while (i < breaks_.size() && breaks_[i] < v) ++i;
        return slopes_[i];
    }

    /// Slope of the segment just right of v (v >= 0).
    Rat slope_above(const Rat& v) const {
        std::size_t i = 0;
        while (i < breaks_.size() && breaks_[i] <= v) ++i;
        return slopes_[i];
    }

    friend bool operator==(const Pwm& a, const Pwm& b) {
        return a.breaks_ == b.breaks_ && a.slopes_ == b.slopes_;
    }
    friend bool operator!=(const Pwm& a, const Pwm& b) { return !(a == b); }

private:
    std::vector<Rat> breaks_;
    std::vector<Rat> slopes_;
};

inline Pwm pwm_compose(const Pwm& outer, const Pwm& inner) {
    // Breakpoints of outer∘inner: inner's breaks together with the
    // inner-preimages of outer's breaks on strictly increasing segments.
    std::vector<Rat> cand = inner.breaks();
    const auto& ib = inner.breaks();
    const auto& is = inner.slopes();
    Rat seg_lo(0), val_lo(0);
    for (std::size_t i = 0; i < is.size(); ++i) {
        bool last = (i == ib.size());
        Rat seg_hi = last ? Rat(0) : ib[i];
        Rat val_hi = last ? Rat(0) : val_lo + is[i] * (seg_hi - seg_lo);
        if (is[i] > 0) {
            for (const Rat& ob : outer.breaks()) {
                if (ob > val_lo && (last || ob < val_hi)) {
                    cand.push_back(seg_lo + (ob - val_lo) / is[i]);
                }
            }
        }
        seg_lo = seg_hi;
        val_lo = val_hi;
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    // Slope on each candidate interval, read at its left endpoint.
    std::vector<Rat> slopes;
    Rat lo(0);
    for (std::size_t i = 0; i <= cand.size(); ++i) {
        Rat si = inner.slope_above(lo);
        Rat so = si > 0 ? outer.slope_above(inner.eval(lo)) : outer.slope_above(Rat(0));
        slopes.push_back(si > 0 ? si * so : Rat(0));
        if (i < cand.size()) lo = cand[i];
    }
    return Pwm::make(std::move(cand), std::move(slopes));
}

inline Pwm pwm_inverse(const Pwm& f) {
    std::vector<Rat> breaks, slopes;
    for (const Rat& s : f.slopes()) {
        if (s == 0) throw NotInvertible("zero slope segment: not a bijection onto [0,inf)");
        slopes.push_back(Rat(1) / s);
    }
    for (std::size_t i = 0; i < f.breaks().size(); ++i) breaks.push_back(f.value_at_break(i));
    return Pwm::make(std::move(breaks), std::move(slopes));
}

/// Pointwise product on the radius side = pointwise sum on the log side.
inline Pwm pwm_mul(const Pwm& f, const Pwm& h) {
    std::vector<Rat> cand = f.breaks();
    cand.insert(cand.end(), h.breaks().begin(), h.breaks().end());
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    std::vector<Rat> slopes;
    Rat lo(0);
    for (std::size_t i = 0; i <= cand.size(); ++i) {
        slopes.push_back(f.slope_above(lo) + h.slope_above(lo));
        if (i < cand.size()) lo = cand[i];
    }
    return Pwm::make(std::move(cand), std::move(slopes));
}

inline Pwm pwm_pow(const Pwm& f, const Int& n) {
    if (n <= 0) throw ValidationError("exponent must be positive");
    std::vector<Rat> slopes;
    for (const Rat& s : f.slopes()) slopes.push_back(s * Rat(n));
    return Pwm::make(f.breaks(), std::move(slopes));
}

inline bool pwm_equal(const Pwm& f, const Pwm& h) { return f == h; }

enum class Side { Left, Right };

// Radius-side one-sided degree at radius s (log-value v): the slope of g on
// the corresponding side of v, with orientation flipped (radius-side left is
// the larger-v side).
inline Rat degrees_at(const Pwm& f, const Rat& v, Side side) {
    if (v < 0) throw ValidationError("log-value must be nonnegative");
    if (side == Side::Left) return f.slope_above(v);
    if (v == 0) return f.slope_above(Rat(0));  // no radii above 1
    return f.slope_below(v);
}

// The valuations (i >= 1, val(a_i)) of the coordinate series of a disc
// morphism of sup-norm 1.
class SeriesValuations {
public:
    static SeriesValuations make(std::vector<std::pair<Int, Rat>> terms) {
        if (terms.empty()) throw InvalidSeries("series needs at least one term");
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        Rat minval = terms[0].second;
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (terms[i].first < 1) throw InvalidSeries("term index must be >= 1");
            if (i > 0 && terms[i].first == terms[i - 1].first)
                throw InvalidSeries("duplicate term index");
            if (terms[i].second < 0) throw InvalidSeries("valuation must be nonnegative");
            minval = std::min(minval, terms[i].second);
        }
        if (minval != 0) throw InvalidSeries("series must have sup-norm 1 (some valuation 0)");
        SeriesValuations sv;
        sv.terms_ = std::move(terms);
        return sv;
    }

    const std::vector<std::pair<Int, Rat>>& terms() const { return terms_; }

private:
    std::vector<std::pair<Int, Rat>> terms_;
};

// g(v) = min_i (i*v + val(a_i)): the valuation polygon read as a function of
// the center's log-radius. Slopes are the envelope indices, decreasing in v.
inline Pwm profile_from_series(const SeriesValuations& sv) {
    // lines (slope = index, intercept = valuation), slope descending
    std::vector<std::pair<Rat, Rat>> lines;
    for (const auto& [i, val] : sv.terms()) lines.emplace_back(Rat(i), val);
    std::sort(lines.begin(), lines.end(), [](const auto& a, const auto& b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    });

    // lower envelope over v in [0,inf); entries carry the v where they start
    std::vector<std::pair<Rat, Rat>> env;  // (slope, intercept)
    std::vector<Rat> start;
    for (const auto& ln : lines) {
        if (!env.empty() && ln.first == env.back().first) continue;
        Rat x;
        for (;;) {
            if (env.empty()) { x = Rat(0); break; }
            const auto& top = env.back();
            if (ln.second <= top.second) { env.pop_back(); start.pop_back(); continue; }
            x = (ln.second - top.second) / (top.first - ln.first);
            if (x <= start.back()) { env.pop_back(); start.pop_back(); continue; }
            break;
        }
        env.push_back(ln);
        start.push_back(x);
    }

    if (env.front().second != 0)
        throw InvalidSeries("envelope has g(0) > 0: image is not the full unit disc");

    std::vector<Rat> breaks(start.begin() + 1, start.end());
    std::vector<Rat> slopes;
    for (const auto& ln : env) slopes.push_back(ln.first);
    return Pwm::make(std::move(breaks), std::move(slopes));
}

}  // namespace radii
