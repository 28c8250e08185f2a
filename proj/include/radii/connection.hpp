#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "radii/errors.hpp"
#include "radii/pwm.hpp"

namespace radii {

// A nondecreasing family R_1 <= ... <= R_r of radii in (0,1], stored as the
// nonincreasing list of log-values v_1 >= ... >= v_r >= 0.
class MultiRadius {
public:
    static MultiRadius make(std::vector<Rat> logvalues) {
        if (logvalues.empty()) throw ValidationError("multiradius must have rank >= 1");
        std::sort(logvalues.begin(), logvalues.end(), std::greater<Rat>());
        if (logvalues.back() < 0) throw ValidationError("log-values must be nonnegative");
        MultiRadius mr;
        mr.logvalues_ = std::move(logvalues);
        return mr;
    }

    const std::vector<Rat>& logvalues() const { return logvalues_; }
    std::size_t rank() const { return logvalues_.size(); }

    friend bool operator==(const MultiRadius& a, const MultiRadius& b) {
        return a.logvalues_ == b.logvalues_;
    }
    friend bool operator!=(const MultiRadius& a, const MultiRadius& b) { return !(a == b); }

private:
    std::vector<Rat> logvalues_;
};

/// Concatenation and reordering of multiradius families.
inline MultiRadius star(const std::vector<MultiRadius>& families) {
    if (families.empty()) throw ValidationError("star needs at least one family");
    std::vector<Rat> all;
    for (const auto& f : families)
        all.insert(all.end(), f.logvalues().begin(), f.logvalues().end());
    return MultiRadius::make(std::move(all));
}

// The profile of a differential equation: radius-side left degree at s counts
// the radii >= s. Log-side slopes are nonnegative integers increasing in v;
// the final slope is the rank.
class EquationProfile {
public:
    static EquationProfile make(Pwm pwm) {
        const auto& slopes = pwm.slopes();
        Rat prev(-1);
        for (const Rat& s : slopes) {
            if (s.denominator() != 1 || s < 0)
                throw ValidationError("equation profile slopes must be nonnegative integers");
            if (s <= prev) throw ValidationError("equation profile slopes must increase in v");
            prev = s;
        }
        if (slopes.back() == 0) throw ValidationError("equation profile must have rank >= 1");
        EquationProfile ep;
        ep.pwm_ = std::move(pwm);
        return ep;
    }

    const Pwm& pwm() const { return pwm_; }
    Int rank() const { return pwm_.slopes().back().numerator(); }

    friend bool operator==(const EquationProfile& a, const EquationProfile& b) {
        return a.pwm_ == b.pwm_;
    }
    friend bool operator!=(const EquationProfile& a, const EquationProfile& b) {
        return !(a == b);
    }

private:
    Pwm pwm_;
};

inline EquationProfile equation_profile(const MultiRadius& mr) {
    // breaks at the distinct positive v-values; slope counts radii with v_i <= v
    const auto& vs = mr.logvalues();  // nonincreasing
    std::vector<Rat> breaks, slopes;
    Int below(0);  // radii with v_i <= current segment
    for (std::size_t i = vs.size(); i-- > 0;) {
        if (vs[i] == 0) { ++below; continue; }
        break;
    }
    slopes.push_back(Rat(below));
    // walk the positive values from smallest to largest
    std::vector<Rat> pos;
    for (const Rat& v : vs)
        if (v > 0) pos.push_back(v);
    std::sort(pos.begin(), pos.end());
    for (std::size_t j = 0; j < pos.size();) {
        std::size_t k = j;
        while (k < pos.size() && pos[k] == pos[j]) ++k;
        below += Int(k - j);
        breaks.push_back(pos[j]);
        slopes.push_back(Rat(below));
        j = k;
    }
    return EquationProfile::make(Pwm::make(std::move(breaks), std::move(slopes)));
}

/// Inverse of equation_profile: break-points and slope jumps recover the radii.
inline MultiRadius multiradius_from_profile(const EquationProfile& ep) {
    const Pwm& g = ep.pwm();
    std::vector<Rat> logvalues;
    Int ones = g.slopes().front().numerator();
    for (Int i = 0; i < ones; ++i) logvalues.push_back(Rat(0));
    for (std::size_t j = 0; j < g.breaks().size(); ++j) {
        Int mult = (g.slopes()[j + 1] - g.slopes()[j]).numerator();
        for (Int i = 0; i < mult; ++i) logvalues.push_back(g.breaks()[j]);
    }
    return MultiRadius::make(std::move(logvalues));
}

// Concave polygon with vertices (0,0), (i, h_i), h_i the partial sums of the
// log-values; heights are in log_p units.
class ConvergencePolygon {
public:
    explicit ConvergencePolygon(const MultiRadius& mr) {
        vertices_.emplace_back(0, Rat(0));
        Rat acc(0);
        Int i = 0;
        for (const Rat& v : mr.logvalues()) {
            acc += v;
            vertices_.emplace_back(++i, acc);
        }
    }

    const std::vector<std::pair<Int, Rat>>& vertices() const { return vertices_; }
    const Rat& height() const { return vertices_.back().second; }

private:
    std::vector<std::pair<Int, Rat>> vertices_;
};

inline ConvergencePolygon polygon(const MultiRadius& mr) { return ConvergencePolygon(mr); }

// Local monomial behavior of each radius along a branch: the i-th component
// has log-value v_i(u) = coeff_i + m_i * u for the branch parameter
// u = -log_p(rho) -> 0 toward the point.
class DirectionModel {
public:
    static DirectionModel make(std::vector<std::pair<Rat, Int>> components) {
        for (const auto& [coeff, m] : components) {
            if (coeff < 0) throw ValidationError("direction coefficient must be nonnegative");
            if (coeff == 0 && m < 0)
                throw ValidationError("radius would exceed 1 near the point");
        }
        DirectionModel dm;
        dm.components_ = std::move(components);
        return dm;
    }

    const std::vector<std::pair<Rat, Int>>& components() const { return components_; }

private:
    std::vector<std::pair<Rat, Int>> components_;
};

/// Sum of the component slopes: the logarithmic slope of the height along
/// the branch, oriented toward the point.
inline Int irregularity(const DirectionModel& dm) {
    Int sum = 0;
    for (const auto& [coeff, m] : dm.components()) sum += m;
    return sum;
}

inline Int laplacian(const std::vector<Int>& irregularities) {
    Int sum = 0;
    for (const Int& i : irregularities) sum += i;
    return sum;
}

}  // namespace radii
