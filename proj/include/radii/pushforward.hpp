#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "radii/connection.hpp"
#include "radii/errors.hpp"
#include "radii/morphism.hpp"
#include "radii/pwm.hpp"

namespace radii {

// Solution-count table over the candidate break radii, for audit output and
// the brute-force route. Phi is nonincreasing in the radius.
struct PhiTable {
    struct Row {
        Rat logvalue;  // candidate radius s as a log-value
        Int phi;       // Phi(s)
        Int phi_plus;  // right limit Phi(s+)
    };
    std::vector<Row> rows;  // ordered by decreasing radius (decreasing... increasing log)
};

/// The family F^y(R): with N-breaks s_1 < ... < s_n = 1 and counts n_j, and m
/// the unique index with s_m < f(R) <= s_{m+1}, each s_j (j <= m) appears
/// n_j - n_{j+1} times and f(R) appears n_{m+1} times.
inline MultiRadius f_family(const FiberPoint& fp, const LogValue& R) {
    if (!R.is_finite()) throw ValidationError("R must be a radius in (0,1]");
    const Rat& v = R.value();
    Rat w = fp.profile.pwm().eval(v);
    NData nd = n_function(fp.profile);
    const auto& steps = nd.steps();
    std::size_t m = 0;
    while (m < steps.size() && steps[m].first > w) ++m;  // s_j < f(R) iff W_j > w
    std::vector<Rat> out;
    for (std::size_t j = 0; j < m; ++j) {
        Int mult = steps[j].second - steps[j + 1].second;
        for (Int i = 0; i < mult; ++i) out.push_back(steps[j].first);
    }
    Int mult = steps[m].second;
    for (Int i = 0; i < mult; ++i) out.push_back(w);
    return MultiRadius::make(std::move(out));
}

/// Star of the F-families of each radius: the disc pushforward for a radial
/// etale morphism whose preimage points all carry the same multiradius.
inline MultiRadius pushforward_radii_disc(const MorphismProfile& mp, const MultiRadius& mr) {
    if (!mp.etale()) throw NotEtale("disc pushforward requires an etale profile");
    FiberPoint fp = FiberPoint::make("y", mp, 1, mr);
    std::vector<MultiRadius> families;
    for (const Rat& v : mr.logvalues()) families.push_back(f_family(fp, LogValue::finite(v)));
    return star(families);
}

/// The multiradius of the pushforward at the image point: star over preimage
/// points and radii of the F-families, each repeated sep-degree times.
inline MultiRadius pushforward_radii(const FiberConfiguration& fc) {
    std::vector<MultiRadius> families;
    for (const FiberPoint& fp : fc.points) {
        if (!fp.profile.etale()) throw NotEtale("pushforward requires etale profiles");
        for (const Rat& v : fp.radii.logvalues()) {
            MultiRadius fam = f_family(fp, LogValue::finite(v));
            for (Int s = 0; s < fp.sep_degree; ++s) families.push_back(fam);
        }
    }
    return star(families);
}

/// Phi_x(s) = sum over points of sep * N(s) * #{i : R_i >= f^{-1}(s)},
/// tabulated over the candidate radii {N-breaks} u {f(R_i)} u {1}.
inline PhiTable phi_table(const FiberConfiguration& fc) {
    struct PointData {
        const FiberPoint* fp;
        NData nd;
        Pwm ginv;
    };
    std::vector<PointData> pts;
    std::vector<Rat> cand{Rat(0)};
    for (const FiberPoint& fp : fc.points) {
        if (!fp.profile.etale()) throw NotEtale("pushforward requires etale profiles");
        PointData pd{&fp, n_function(fp.profile), pwm_inverse(fp.profile.pwm())};
        for (const auto& [w, n] : pd.nd.steps()) cand.push_back(w);
        for (const Rat& v : fp.radii.logvalues()) cand.push_back(fp.profile.pwm().eval(v));
        pts.push_back(std::move(pd));
    }
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    auto phi_at = [&](const Rat& w, bool plus) {
        Int total = 0;
        for (const PointData& pd : pts) {
            Rat t = pd.ginv.eval(w);  // f^{-1}(s) as a log-value
            Int count = 0;
            for (const Rat& v : pd.fp->radii.logvalues())
                if (plus ? v < t : v <= t) ++count;
            Int n = plus ? pd.nd.above(w) : pd.nd.at(w);
            total += pd.fp->sep_degree * n * count;
        }
        return total;
    };

    PhiTable table;
    for (const Rat& w : cand) {
        Int phi = phi_at(w, false);
        Int phi_plus = w == 0 ? phi : phi_at(w, true);
        table.rows.push_back({w, phi, phi_plus});
    }
    return table;
}

/// Reads the pushforward multiradius off the Phi table: each break with
/// multiplicity Phi(b) - Phi(b+), radius 1 with multiplicity Phi(1). An
/// implementation-independent oracle for pushforward_radii.
inline MultiRadius pushforward_radii_bruteforce(const FiberConfiguration& fc) {
    PhiTable table = phi_table(fc);
    std::vector<Rat> out;
    for (const auto& row : table.rows) {
        Int mult = row.logvalue == 0 ? row.phi : row.phi - row.phi_plus;
        for (Int i = 0; i < mult; ++i) out.push_back(row.logvalue);
    }
    return MultiRadius::make(std::move(out));
}

/// Closed form for the constant connection: each N-break s_j below 1 with
/// multiplicity n_j - n_{j+1}, radius 1 once, repeated sep times.
inline MultiRadius constant_pushforward(const MorphismProfile& mp, const Int& sep) {
    if (!mp.etale()) throw NotEtale("constant pushforward requires an etale profile");
    if (sep < 1) throw ValidationError("separable degree must be positive");
    NData nd = n_function(mp);
    const auto& steps = nd.steps();
    std::vector<Rat> out;
    for (Int s = 0; s < sep; ++s) {
        for (std::size_t j = 0; j + 1 < steps.size(); ++j) {
            Int mult = steps[j].second - steps[j + 1].second;
            for (Int i = 0; i < mult; ++i) out.push_back(steps[j].first);
        }
        out.push_back(Rat(0));
    }
    return MultiRadius::make(std::move(out));
}

/// Equation profile of the pushforward of the trivial connection:
/// (f^{-1})^{sep * insep}.
inline EquationProfile constant_pushforward_profile(const FiberPoint& fp) {
    if (!fp.profile.etale()) throw NotEtale("constant pushforward requires an etale profile");
    return EquationProfile::make(
        pwm_pow(pwm_inverse(fp.profile.pwm()), fp.multiplicity()));
}

/// Product over preimage points of (equation profile of the radii composed
/// with the inverse morphism profile), raised to the local multiplicity.
inline EquationProfile pushforward_profile(const FiberConfiguration& fc) {
    Pwm acc = Pwm::zero();
    for (const FiberPoint& fp : fc.points) {
        if (!fp.profile.etale()) throw NotEtale("pushforward requires etale profiles");
        Pwm term = pwm_compose(equation_profile(fp.radii).pwm(), pwm_inverse(fp.profile.pwm()));
        acc = pwm_mul(acc, pwm_pow(term, fp.multiplicity()));
    }
    return EquationProfile::make(std::move(acc));
}

/// Residually separable case: every radius is replicated d times.
inline MultiRadius special_tame(const MultiRadius& mr, const Int& d) {
    if (d < 1) throw ValidationError("degree must be positive");
    std::vector<Rat> out;
    for (const Rat& v : mr.logvalues())
        for (Int i = 0; i < d; ++i) out.push_back(v);
    return MultiRadius::make(std::move(out));
}

// Residually purely inseparable degree-p case, closed form. The regime split
// is at R <= delta^{1/(p-1)} (the profile's own break), where f(R) = delta R
// stays at or below the N-break delta^{p/(p-1)}; above it f(R) = R^p. The
// split must sit at the profile break, not at the N-break: on
// (delta^{p/(p-1)}, delta^{1/(p-1)}] the component count is still p, and
// only the break is consistent with the counting function.
inline MultiRadius special_inseparable_p(const MultiRadius& mr, const Int& p,
                                         const Rat& val_delta) {
    if (p < 2) throw ValidationError("p must be at least 2");
    if (val_delta <= 0) throw ValidationError("val_delta must be positive");
    Rat split = val_delta / (p - 1);           // log of delta^{1/(p-1)}
    Rat middle = Rat(p) * val_delta / (p - 1);  // log of delta^{p/(p-1)}
    std::vector<Rat> out;
    std::size_t small = 0;  // i_0: radii with R_i <= delta^{1/(p-1)}
    for (const Rat& v : mr.logvalues()) {
        if (v >= split) {
            ++small;
            for (Int i = 0; i < p; ++i) out.push_back(v + val_delta);
        } else {
            out.push_back(Rat(p) * v);
        }
    }
    Int mid_mult = (p - 1) * Int(mr.rank() - small);
    for (Int i = 0; i < mid_mult; ++i) out.push_back(middle);
    return MultiRadius::make(std::move(out));
}

/// Frobenius closed form: the inseparable template with delta = |p|.
inline MultiRadius special_frobenius(const MultiRadius& mr, const Int& p) {
    return special_inseparable_p(mr, p, Rat(1));
}

/// Height of the pushforward along a branch, in log_p units:
/// h_F = d h_E + r nu (d u) + r d val_a at the annulus parameter u.
inline Rat pushforward_height(const AnnulusDirection& dir, const Int& r, const Rat& h_e,
                              const Rat& u) {
    if (r < 1) throw ValidationError("rank must be positive");
    if (u < 0) throw ValidationError("u must be nonnegative");
    return Rat(dir.d) * h_e + Rat(r * dir.nu() * dir.d) * u + Rat(r * dir.d) * dir.val_a;
}

inline Int pushforward_irregularity(const Int& irr_e, const Int& r, const Int& nu) {
    if (r < 1) throw ValidationError("rank must be positive");
    return irr_e + r * nu;
}

/// Delta_y = Delta_x + r * sum nu_t over the preimage branches.
inline bool laplacian_pushforward_check(const Int& delta_y, const Int& delta_x, const Int& r,
                                        const std::vector<Int>& nus) {
    if (r < 1) throw ValidationError("rank must be positive");
    Int sum = 0;
    for (const Int& nu : nus) sum += nu;
    return delta_y == delta_x + r * sum;
}

// Validator for the partial-height Laplacian bound; the hypothesis that the
// branch set contains every direction with a moving radius is the caller's.
struct BoundReport {
    Int bound;
    bool satisfied;
    bool equality;
    bool equality_expected;

    bool ok() const { return satisfied && (!equality_expected || equality); }
};

inline BoundReport laplacian_bound_check(const Int& g, const Int& gamma_size, const Int& i,
                                         const Int& delta_i, bool equality_expected) {
    if (g < 0) throw ValidationError("genus must be nonnegative");
    if (gamma_size < 2) throw ValidationError("branch set must have at least two elements");
    if (i < 1) throw ValidationError("polygon index must be positive");
    Int bound = (2 * g - 2 + gamma_size) * i;
    return BoundReport{bound, delta_i <= bound, delta_i == bound, equality_expected};
}

/// Radii of the pushforward of the trivial connection, from ramification
/// data: each jump appears (index below it) - (index above it) times, plus
/// radius 1 once.
inline MultiRadius herbrand_multiradius(const RamificationData& rd) {
    std::vector<Rat> out;
    const auto& jumps = rd.jumps();
    for (std::size_t j = 0; j < jumps.size(); ++j) {
        Int next = j + 1 < jumps.size() ? jumps[j + 1].second : rd.degree();
        Int mult = next - jumps[j].second;
        for (Int i = 0; i < mult; ++i) out.push_back(jumps[j].first);
    }
    out.push_back(Rat(0));
    return MultiRadius::make(std::move(out));
}

}  // namespace radii
