#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "radii/connection.hpp"
#include "radii/errors.hpp"
#include "radii/pwm.hpp"

namespace radii {

// Profile function of a radial disc morphism, in log coordinates. Slopes are
// positive integers, decreasing in v (radius-side degrees increase toward the
// disc boundary); the first slope is the morphism degree. Etale-ness is an
// assertion flag: a degree-1 last segment is necessary but the geometry
// behind it cannot be checked from the profile alone.
class MorphismProfile {
public:
    static MorphismProfile make(Pwm pwm, bool etale) {
        Rat prev(0);
        bool first = true;
        for (const Rat& s : pwm.slopes()) {
            if (s.denominator() != 1 || s <= 0)
                throw ValidationError("morphism profile slopes must be positive integers");
            if (!first && s >= prev)
                throw ValidationError("morphism profile slopes must decrease in v");
            prev = s;
            first = false;
        }
        if (etale && pwm.slopes().back() != 1)
            throw ValidationError("etale profile must have last slope 1");
        Int d = pwm.slopes().front().numerator();
        for (const Rat& s : pwm.slopes())
            if (d % s.numerator() != 0)
                throw ValidationError("every degree must divide the top degree");
        MorphismProfile mp;
        mp.pwm_ = std::move(pwm);
        mp.etale_ = etale;
        return mp;
    }

    const Pwm& pwm() const { return pwm_; }
    Int degree() const { return pwm_.slopes().front().numerator(); }
    bool etale() const { return etale_; }

    friend bool operator==(const MorphismProfile& a, const MorphismProfile& b) {
        return a.pwm_ == b.pwm_ && a.etale_ == b.etale_;
    }
    friend bool operator!=(const MorphismProfile& a, const MorphismProfile& b) {
        return !(a == b);
    }

private:
    Pwm pwm_;
    bool etale_ = false;
};

// Component counts of preimage discs: steps (s_j, n_j) with break radii
// s_1 < ... < s_n = 1 (log-values strictly decreasing to 0) and counts
// n_1 > ... > n_n = 1.
class NData {
public:
    using Step = std::pair<Rat, Int>;  // (log-value of break radius, count)

    const std::vector<Step>& steps() const { return steps_; }

    /// N at the radius with log-value w: the count of the first step whose
    /// log-value is <= w.
    Int at(const Rat& w) const {
        for (const auto& [wj, nj] : steps_)
            if (wj <= w) return nj;
        return steps_.back().second;  // unreachable: last step has log 0
    }

    /// Right limit: N just above the radius with log-value w > 0.
    Int above(const Rat& w) const {
        for (const auto& [wj, nj] : steps_)
            if (wj < w) return nj;
        return 1;
    }

    friend NData n_function(const MorphismProfile&);

private:
    std::vector<Step> steps_;
};

/// N(s) = d / deg^-(f^{-1}(s)): steps at the f-images of the profile breaks,
/// together with radius 1.
inline NData n_function(const MorphismProfile& mp) {
    const Pwm& g = mp.pwm();
    Int d = mp.degree();
    NData nd;
    for (std::size_t j = g.breaks().size(); j-- > 0;) {
        // the slope just above break j is the radius-side left degree there
        Int dj = g.slopes()[j + 1].numerator();
        nd.steps_.emplace_back(g.value_at_break(j), d / dj);
    }
    nd.steps_.emplace_back(Rat(0), Int(1));
    return nd;
}

/// |p|s below |p|^{1/(p-1)}, s^p above.
inline MorphismProfile frobenius_profile(const Int& p) {
    if (p < 2) throw ValidationError("p must be at least 2");
    return MorphismProfile::make(Pwm::make({Rat(1, p - 1)}, {Rat(p), Rat(1)}), true);
}

inline MorphismProfile tame_profile() {
    return MorphismProfile::make(Pwm::identity(), true);
}

/// delta * s below delta^{1/(p-1)}, s^p above; val_delta = 0 degenerates to
/// the everywhere-s^p profile.
inline MorphismProfile inseparable_p_profile(const Int& p, const Rat& val_delta) {
    if (p < 2) throw ValidationError("p must be at least 2");
    if (val_delta < 0) throw ValidationError("val_delta must be nonnegative");
    if (val_delta == 0)
        return MorphismProfile::make(Pwm::make({}, {Rat(p)}), false);
    return MorphismProfile::make(
        Pwm::make({val_delta / (p - 1)}, {Rat(p), Rat(1)}), true);
}

// Off-centered Frobenius at a, evaluated on the skeleton point of radius
// rho = p^{-u}. For rho >= |a| the profile is the centered one; for
// rho in (|a| |p|^{1/(p-1)}, |a|) the break sits at |p|^{1/(p-1)} |a| / rho.
// The constant-1 regime (rho <= |a| |p|^{1/(p-1)}) is not a bijection and is
// rejected.
inline MorphismProfile off_centered_frobenius_profile(const Int& p, const Rat& val_a,
                                                      const Rat& u) {
    if (p < 2) throw ValidationError("p must be at least 2");
    if (val_a < 0 || u < 0) throw ValidationError("val_a and u must be nonnegative");
    if (u <= val_a) return frobenius_profile(p);
    Rat b = Rat(1, p - 1) + val_a - u;
    if (b <= 0)
        throw OutOfRegime("rho <= |a| |p|^{1/(p-1)}: the profile degenerates to the constant 1");
    return MorphismProfile::make(Pwm::make({b}, {Rat(p), Rat(1)}), true);
}

// Local data of an etale morphism along an annulus direction: the coordinate
// expansions phi(T) = T^d (1 + h) and phi'(T) = a T^sigma (1 + g) give
// nu = sigma - d + 1.
struct AnnulusDirection {
    Int d;
    Int sigma;
    Rat val_a;

    static AnnulusDirection make(Int d, Int sigma, Rat val_a) {
        if (d < 1) throw ValidationError("degree must be positive");
        if (val_a < 0) throw ValidationError("val_a must be nonnegative (|a| <= 1)");
        return AnnulusDirection{std::move(d), std::move(sigma), std::move(val_a)};
    }

    Int nu() const { return sigma - d + 1; }
};

/// log|a_1| for the restriction to the maximal open disc at radius p^{-u}:
/// |a_1| = |a| rho^nu, which is also the different there.
inline Rat disc_coefficient_valuation(const AnnulusDirection& dir, const Rat& u) {
    if (u < 0) throw ValidationError("u must be nonnegative");
    return dir.val_a + Rat(dir.nu()) * u;
}

// Upper ramification jumps with filtration indices. Jumps are ordered by
// decreasing radius; the index paired with a jump is the filtration index of
// the group just above it, so indices increase along the list. The extension
// degree acts as the index below the smallest jump.
class RamificationData {
public:
    using Jump = std::pair<Rat, Int>;  // (log-value of jump radius, index)

    static RamificationData make(Int degree, std::vector<Jump> jumps) {
        if (degree < 1) throw ValidationError("extension degree must be positive");
        Int prev = 0;
        Rat prev_w(-1);
        for (const auto& [w, idx] : jumps) {
            if (w <= 0) throw ValidationError("jump radii must be strictly below 1");
            if (w <= prev_w) throw ValidationError("jumps must be ordered by decreasing radius");
            if (idx <= prev) throw ValidationError("indices must strictly increase as jumps decrease");
            if (idx > degree) throw ValidationError("filtration index exceeds extension degree");
            prev = idx;
            prev_w = w;
        }
        RamificationData rd;
        rd.degree_ = std::move(degree);
        rd.jumps_ = std::move(jumps);
        return rd;
    }

    const Int& degree() const { return degree_; }
    const std::vector<Jump>& jumps() const { return jumps_; }

private:
    Int degree_;
    std::vector<Jump> jumps_;
};

/// The jumps of the upper ramification filtration are the N-function break
/// radii strictly below 1; the index attached to a jump is the component
/// count just above it.
inline RamificationData herbrand_jumps(const MorphismProfile& mp) {
    if (!mp.etale()) throw NotEtale("ramification jumps presume a Galois extension model");
    NData nd = n_function(mp);
    const auto& steps = nd.steps();
    std::vector<RamificationData::Jump> jumps;
    // steps are ordered by increasing radius; jumps by decreasing radius
    for (std::size_t j = steps.size() - 1; j-- > 0;) {
        jumps.emplace_back(steps[j].first, steps[j + 1].second);
    }
    return RamificationData::make(mp.degree(), std::move(jumps));
}

/// 2g_y - 2 = d (2g_x - 2) + sum (nu_t + d_t - 1), over all branches with a
/// nonzero contribution.
inline bool riemann_hurwitz_check(const Int& g_y, const Int& g_x, const Int& d,
                                  const std::vector<std::pair<Int, Int>>& branches) {
    if (g_y < 0 || g_x < 0 || d < 1) throw ValidationError("invalid genus or degree");
    Int rhs = d * (2 * g_x - 2);
    for (const auto& [nu, dt] : branches) {
        if (dt < 1) throw ValidationError("branch degree must be positive");
        rhs += nu + dt - 1;
    }
    return 2 * g_y - 2 == rhs;
}

// One preimage point of the fiber: its morphism profile (of degree equal to
// the residual inseparable degree), residual separable degree, and the
// connection's multiradius there.
struct FiberPoint {
    std::string label;
    MorphismProfile profile;
    Int sep_degree;
    MultiRadius radii;

    static FiberPoint make(std::string label, MorphismProfile profile, Int sep_degree,
                           MultiRadius radii) {
        if (sep_degree < 1) throw ValidationError("separable degree must be positive");
        return FiberPoint{std::move(label), std::move(profile), std::move(sep_degree),
                          std::move(radii)};
    }

    Int insep_degree() const { return profile.degree(); }
    Int multiplicity() const { return sep_degree * insep_degree(); }
};

// The finite data of a morphism fiber: the preimage points and the common
// rank of the connection.
struct FiberConfiguration {
    std::vector<FiberPoint> points;
    std::size_t rank;

    static FiberConfiguration make(std::vector<FiberPoint> points, std::size_t rank) {
        if (points.empty()) throw ValidationError("fiber must have at least one point");
        if (rank < 1) throw ValidationError("rank must be positive");
        for (const auto& p : points)
            if (p.radii.rank() != rank)
                throw ValidationError("multiradius length must equal the rank at every point");
        return FiberConfiguration{std::move(points), rank};
    }

    Int total_degree() const {
        Int d = 0;
        for (const auto& p : points) d += p.multiplicity();
        return d;
    }
};

// A u-parametrized family of morphism profiles: breaks b_j(u) = beta_j + e_j u
// with constant integer slopes, valid on a rational interval of the branch
// parameter.
class ProfileFamily {
public:
    static ProfileFamily make(Rat lo, Rat hi, std::vector<std::pair<Rat, Rat>> breaks,
                              std::vector<Rat> slopes) {
        if (lo > hi) throw ValidationError("empty validity interval");
        if (slopes.size() != breaks.size() + 1)
            throw ValidationError("need exactly one more slope than breaks");
        ProfileFamily pf;
        pf.lo_ = std::move(lo);
        pf.hi_ = std::move(hi);
        pf.breaks_ = std::move(breaks);
        pf.slopes_ = std::move(slopes);
        return pf;
    }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    const std::vector<std::pair<Rat, Rat>>& breaks() const { return breaks_; }
    const std::vector<Rat>& slopes() const { return slopes_; }

private:
    Rat lo_, hi_;
    std::vector<std::pair<Rat, Rat>> breaks_;
    std::vector<Rat> slopes_;
};

inline MorphismProfile instantiate_family(const ProfileFamily& pf, const Rat& u) {
    if (u < pf.lo() || u > pf.hi()) throw OutOfRegime("parameter outside the validity interval");
    std::vector<Rat> breaks;
    std::vector<Rat> slopes(pf.slopes());
    for (const auto& [beta, e] : pf.breaks()) breaks.push_back(beta + e * u);
    // a break collapsing to 0 removes its leading segment
    while (!breaks.empty() && breaks.front() <= 0) {
        breaks.erase(breaks.begin());
        slopes.erase(slopes.begin());
    }
    bool etale = slopes.back() == 1;
    return MorphismProfile::make(Pwm::make(std::move(breaks), std::move(slopes)), etale);
}

}  // namespace radii
