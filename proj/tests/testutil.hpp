#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "radii/radii.hpp"

namespace radii::testutil {

using Rng = std::mt19937_64;

inline Int random_int(Rng& rng, long long lo, long long hi) {
    return Int(std::uniform_int_distribution<long long>(lo, hi)(rng));
}

/// Nonnegative rational with numerator <= max_num and denominator <= max_den.
inline Rat random_rat(Rng& rng, long long max_num, long long max_den) {
    return Rat(random_int(rng, 0, max_num), random_int(rng, 1, max_den));
}

inline MultiRadius random_multiradius(Rng& rng, std::size_t rank) {
    std::vector<Rat> vs;
    for (std::size_t i = 0; i < rank; ++i) vs.push_back(random_rat(rng, 12, 12));
    return MultiRadius::make(std::move(vs));
}

/// Canonical PWM with small rational breaks and slopes.
inline Pwm random_pwm(Rng& rng, bool positive_slopes = false) {
    std::size_t m = std::uniform_int_distribution<std::size_t>(0, 3)(rng);
    std::vector<Rat> breaks;
    Rat b(0);
    for (std::size_t i = 0; i < m; ++i) {
        b += random_rat(rng, 6, 4) + Rat(1, 4);
        breaks.push_back(b);
    }
    std::vector<Rat> slopes;
    for (std::size_t i = 0; i <= m; ++i)
        slopes.push_back(random_rat(rng, 6, 4) + (positive_slopes ? Rat(1, 4) : Rat(0)));
    return Pwm::make(std::move(breaks), std::move(slopes));
}

/// Random valid series valuations (degree <= 8, at most 6 terms, an index-1
/// term always present so the profile ends with slope 1).
inline SeriesValuations random_series(Rng& rng) {
    std::vector<std::pair<Int, Rat>> terms;
    long long degree = std::uniform_int_distribution<long long>(1, 8)(rng);
    terms.emplace_back(Int(degree), Rat(0));
    if (degree > 1) terms.emplace_back(Int(1), random_rat(rng, 8, 4));
    std::size_t extra = std::uniform_int_distribution<std::size_t>(0, 4)(rng);
    for (std::size_t k = 0; k < extra && degree > 2; ++k) {
        Int i = random_int(rng, 2, degree - 1);
        bool seen = false;
        for (const auto& t : terms) seen = seen || t.first == i;
        if (!seen) terms.emplace_back(i, random_rat(rng, 8, 4));
    }
    return SeriesValuations::make(std::move(terms));
}

/// Etale morphism profile built from random series valuations; retries until
/// the envelope yields a valid profile (slopes dividing the degree).
inline MorphismProfile random_etale_profile(Rng& rng) {
    for (;;) {
        try {
            Pwm pwm = profile_from_series(random_series(rng));
            return MorphismProfile::make(std::move(pwm), true);
        } catch (const ValidationError&) {
        }
    }
}

inline FiberConfiguration random_fiber_configuration(Rng& rng) {
    std::size_t rank = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    std::size_t npoints = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    std::vector<FiberPoint> points;
    for (std::size_t j = 0; j < npoints; ++j) {
        points.push_back(FiberPoint::make("y" + std::to_string(j), random_etale_profile(rng),
                                          random_int(rng, 1, 3),
                                          random_multiradius(rng, rank)));
    }
    return FiberConfiguration::make(std::move(points), rank);
}

// Polynomials over Q with zero constant term, coefficient of T^i at index i.
using Poly = std::vector<Rat>;

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly out(a.size() + b.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

/// outer(inner(T)), exact.
inline Poly poly_compose(const Poly& outer, const Poly& inner) {
    Poly out(1, Rat(0));
    Poly power(1, Rat(1));
    for (std::size_t i = 0; i < outer.size(); ++i) {
        if (outer[i] != 0) {
            if (out.size() < power.size()) out.resize(power.size(), Rat(0));
            for (std::size_t j = 0; j < power.size(); ++j) out[j] += outer[i] * power[j];
        }
        power = poly_mul(power, inner);
    }
    return out;
}

/// p-adic coefficient valuations of a polynomial morphism of unit discs.
inline SeriesValuations series_of_poly(const Poly& poly, const Int& p) {
    std::vector<std::pair<Int, Rat>> terms;
    for (std::size_t i = 1; i < poly.size(); ++i)
        if (poly[i] != 0) terms.emplace_back(Int(i), Rat(valuation(poly[i], p)));
    return SeriesValuations::make(std::move(terms));
}

}  // namespace radii::testutil
