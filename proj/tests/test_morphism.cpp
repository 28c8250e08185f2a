#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "radii/radii.hpp"
#include "testutil.hpp"

using namespace radii;
using testutil::Rng;

static Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

TEST_CASE("morphism profile validation") {
    auto ok = MorphismProfile::make(Pwm::make({rat(1)}, {rat(2), rat(1)}), true);
    CHECK(ok.degree() == 2);
    CHECK(ok.etale());
    CHECK_THROWS_AS(MorphismProfile::make(Pwm::make({rat(1)}, {rat(1, 2), rat(1, 4)}), false),
                    ValidationError);
    CHECK_THROWS_AS(MorphismProfile::make(Pwm::make({rat(1)}, {rat(1), rat(2)}), false),
                    ValidationError);
    CHECK_THROWS_AS(MorphismProfile::make(Pwm::make({rat(1)}, {rat(3), rat(2)}), false),
                    ValidationError);
    CHECK_THROWS_AS(MorphismProfile::make(Pwm::make({rat(1)}, {rat(3), rat(2)}), true),
                    ValidationError);
}

TEST_CASE("named profiles") {
    CHECK(frobenius_profile(2).pwm() == Pwm::make({rat(1)}, {rat(2), rat(1)}));
    CHECK(frobenius_profile(3).pwm() == Pwm::make({rat(1, 2)}, {rat(3), rat(1)}));
    CHECK_THROWS_AS(frobenius_profile(1), ValidationError);
    CHECK(tame_profile().pwm() == Pwm::identity());
    CHECK(tame_profile().degree() == 1);
    CHECK(inseparable_p_profile(2, rat(1)).pwm() == frobenius_profile(2).pwm());
    CHECK(inseparable_p_profile(3, rat(2)).pwm() == Pwm::make({rat(1)}, {rat(3), rat(1)}));
    auto degenerate = inseparable_p_profile(3, rat(0));
    CHECK(degenerate.pwm() == Pwm::make({}, {rat(3)}));
    CHECK_FALSE(degenerate.etale());
    // continuity at the break: p/(p-1) = 1/(p-1) + 1
    for (long long p : {2, 3, 5}) {
        auto f = frobenius_profile(p);
        CHECK(f.pwm().eval(rat(1, p - 1)) == rat(p, p - 1));
    }
}

TEST_CASE("off-centered Frobenius") {
    CHECK(off_centered_frobenius_profile(2, rat(0), rat(0)).pwm() == frobenius_profile(2).pwm());
    // rho >= |a|: centered profile
    CHECK(off_centered_frobenius_profile(2, rat(1), rat(1, 2)).pwm() ==
          frobenius_profile(2).pwm());
    // rho in (|a| |p|^{1/(p-1)}, |a|): the break moves to |p|^{1/(p-1)} |a| / rho
    CHECK(off_centered_frobenius_profile(2, rat(0), rat(1, 2)).pwm() ==
          Pwm::make({rat(1, 2)}, {rat(2), rat(1)}));
    CHECK(off_centered_frobenius_profile(3, rat(1), rat(5, 4)).pwm() ==
          Pwm::make({rat(1, 4)}, {rat(3), rat(1)}));
    CHECK_THROWS_AS(off_centered_frobenius_profile(2, rat(0), rat(1)), OutOfRegime);
    CHECK_THROWS_AS(off_centered_frobenius_profile(2, rat(0), rat(2)), OutOfRegime);
}

TEST_CASE("off-centered Frobenius matches the series computation") {
    // phi(x) = x^p expanded around a center a of valuation val_a, restricted
    // to the disc of radius p^{-u} and renormalized to unit discs
    Rng rng(201);
    for (int k = 0; k < 50; ++k) {
        long long p = std::vector<long long>{2, 3, 5}[k % 3];
        Rat val_a = Rat(testutil::random_int(rng, 0, 3), Int(2));
        Rat u = val_a + Rat(testutil::random_int(rng, 0, 2), Int(3 * (p - 1)));
        // binomial coefficients C(p,i) a^{p-i} rho^i, normalized by the term
        // of smallest valuation
        std::vector<Rat> vals;
        Rat minval;
        for (long long i = 1; i <= p; ++i) {
            Int binom = 1;
            for (long long j = 0; j < i; ++j) binom = binom * Int(p - j) / Int(j + 1);
            Rat v = Rat(valuation(Rat(binom), p)) + val_a * Rat(p - i) + u * Rat(i);
            vals.push_back(v);
            minval = i == 1 ? v : std::min(minval, v);
        }
        std::vector<std::pair<Int, Rat>> terms;
        for (long long i = 1; i <= p; ++i) terms.emplace_back(Int(i), vals[i - 1] - minval);
        auto direct = profile_from_series(SeriesValuations::make(std::move(terms)));
        CHECK(direct == off_centered_frobenius_profile(p, val_a, u).pwm());
    }
}

TEST_CASE("component counts") {
    auto nd = n_function(frobenius_profile(2));
    REQUIRE(nd.steps().size() == 2);
    CHECK(nd.steps()[0] == NData::Step{rat(2), Int(2)});
    CHECK(nd.steps()[1] == NData::Step{rat(0), Int(1)});
    CHECK(nd.at(rat(3)) == 2);
    CHECK(nd.at(rat(2)) == 2);
    CHECK(nd.at(rat(1)) == 1);
    CHECK(nd.above(rat(2)) == 1);
    CHECK(nd.above(rat(3)) == 2);

    auto id = n_function(tame_profile());
    REQUIRE(id.steps().size() == 1);
    CHECK(id.steps()[0] == NData::Step{rat(0), Int(1)});

    auto insep = n_function(inseparable_p_profile(3, rat(1)));
    REQUIRE(insep.steps().size() == 2);
    CHECK(insep.steps()[0] == NData::Step{rat(3, 2), Int(3)});
    CHECK(insep.steps()[1] == NData::Step{rat(0), Int(1)});
}

TEST_CASE("component counts satisfy the degree relation") {
    Rng rng(202);
    for (int k = 0; k < 300; ++k) {
        auto mp = testutil::random_etale_profile(rng);
        auto nd = n_function(mp);
        const Pwm& g = mp.pwm();
        // on each step, N equals degree / (radius-side left degree there)
        for (std::size_t j = 0; j < nd.steps().size(); ++j) {
            Rat w = nd.steps()[j].first;
            Rat v = pwm_inverse(g).eval(w);
            CHECK(Rat(nd.steps()[j].second) * degrees_at(g, v, Side::Left) == Rat(mp.degree()));
        }
        CHECK(nd.steps().back().second == 1);
        for (std::size_t j = 1; j < nd.steps().size(); ++j) {
            CHECK(nd.steps()[j].first < nd.steps()[j - 1].first);
            CHECK(nd.steps()[j].second < nd.steps()[j - 1].second);
        }
    }
}

TEST_CASE("inseparable profile composes to a degree p^2 profile") {
    for (long long p : {2, 3, 5}) {
        auto f = inseparable_p_profile(p, rat(1));
        auto sq = MorphismProfile::make(pwm_compose(f.pwm(), f.pwm()), true);
        CHECK(sq.degree() == Int(p) * Int(p));
    }
}

TEST_CASE("annulus directions and the disc coefficient") {
    auto frob = AnnulusDirection::make(2, 1, rat(1));
    CHECK(frob.nu() == 0);
    CHECK(disc_coefficient_valuation(frob, rat(7, 3)) == rat(1));
    auto wild = AnnulusDirection::make(2, 2, rat(0));
    CHECK(wild.nu() == 1);
    CHECK(disc_coefficient_valuation(wild, rat(3, 2)) == rat(3, 2));
    CHECK(disc_coefficient_valuation(wild, rat(0)) == rat(0));
    CHECK_THROWS_AS(AnnulusDirection::make(0, 1, rat(0)), ValidationError);
    CHECK_THROWS_AS(AnnulusDirection::make(2, 1, rat(-1)), ValidationError);
}

TEST_CASE("ramification data validation") {
    auto rd = RamificationData::make(4, {{rat(1), Int(1)}, {rat(2), Int(2)}});
    CHECK(rd.degree() == 4);
    CHECK_THROWS_AS(RamificationData::make(4, {{rat(2), Int(1)}, {rat(1), Int(2)}}),
                    ValidationError);
    CHECK_THROWS_AS(RamificationData::make(4, {{rat(1), Int(2)}, {rat(2), Int(1)}}),
                    ValidationError);
    CHECK_THROWS_AS(RamificationData::make(2, {{rat(1), Int(3)}}), ValidationError);
    CHECK_THROWS_AS(RamificationData::make(2, {{rat(0), Int(1)}}), ValidationError);
}

TEST_CASE("ramification jumps of named profiles") {
    auto frob = herbrand_jumps(frobenius_profile(2));
    CHECK(frob.degree() == 2);
    REQUIRE(frob.jumps().size() == 1);
    CHECK(frob.jumps()[0] == RamificationData::Jump{rat(2), Int(1)});

    CHECK(herbrand_jumps(tame_profile()).jumps().empty());

    auto insep = herbrand_jumps(inseparable_p_profile(3, rat(1)));
    REQUIRE(insep.jumps().size() == 1);
    CHECK(insep.jumps()[0].first == rat(3, 2));

    for (long long p : {2, 3, 5}) {
        auto jumps = herbrand_jumps(frobenius_profile(p)).jumps();
        REQUIRE(jumps.size() == 1);
        CHECK(jumps[0].first == rat(p, p - 1));
    }

    CHECK_THROWS_AS(herbrand_jumps(inseparable_p_profile(3, rat(0))), NotEtale);
}

TEST_CASE("local Riemann-Hurwitz") {
    CHECK(riemann_hurwitz_check(0, 0, 1, {}));
    CHECK(riemann_hurwitz_check(0, 0, 2, {{Int(0), Int(2)}, {Int(0), Int(2)}}));
    CHECK_FALSE(riemann_hurwitz_check(1, 0, 2, {{Int(0), Int(2)}, {Int(0), Int(2)}}));

    Rng rng(203);
    for (int k = 0; k < 200; ++k) {
        std::vector<std::pair<Int, Int>> branches;
        std::size_t n = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
        for (std::size_t i = 0; i < n; ++i)
            branches.emplace_back(testutil::random_int(rng, -2, 3),
                                  testutil::random_int(rng, 1, 4));
        Int g_y = testutil::random_int(rng, 0, 3), g_x = testutil::random_int(rng, 0, 3);
        Int d = testutil::random_int(rng, 1, 4);
        bool before = riemann_hurwitz_check(g_y, g_x, d, branches);
        std::shuffle(branches.begin(), branches.end(), rng);
        CHECK(before == riemann_hurwitz_check(g_y, g_x, d, branches));
    }
}

TEST_CASE("fiber configurations") {
    auto fp = FiberPoint::make("y0", frobenius_profile(2), 3, MultiRadius::make({rat(1)}));
    CHECK(fp.insep_degree() == 2);
    CHECK(fp.multiplicity() == 6);
    auto fc = FiberConfiguration::make({fp}, 1);
    CHECK(fc.total_degree() == 6);
    CHECK_THROWS_AS(FiberConfiguration::make({}, 1), ValidationError);
    CHECK_THROWS_AS(FiberConfiguration::make({fp}, 2), ValidationError);
    CHECK_THROWS_AS(
        FiberPoint::make("y", frobenius_profile(2), 0, MultiRadius::make({rat(1)})),
        ValidationError);
}

TEST_CASE("profile families") {
    auto constant = ProfileFamily::make(rat(0), rat(10), {{rat(1), rat(0)}},
                                        {rat(2), rat(1)});
    CHECK(instantiate_family(constant, rat(3)).pwm() == frobenius_profile(2).pwm());

    // off-centered Frobenius at val_a = 0, p = 2: break 1 - u
    auto off = ProfileFamily::make(rat(0), rat(1), {{rat(1), rat(-1)}}, {rat(2), rat(1)});
    CHECK(instantiate_family(off, rat(1, 2)).pwm() ==
          off_centered_frobenius_profile(2, rat(0), rat(1, 2)).pwm());
    CHECK(instantiate_family(off, rat(0)).pwm() == frobenius_profile(2).pwm());
    // the break collapses at the interval edge and the leading segment drops
    auto edge = instantiate_family(off, rat(1));
    CHECK(edge.pwm() == Pwm::identity());
    CHECK_THROWS_AS(instantiate_family(off, rat(2)), OutOfRegime);

    // inseparable family with val_delta(u) = u
    auto insep = ProfileFamily::make(rat(0), rat(10), {{rat(0), rat(1)}}, {rat(2), rat(1)});
    CHECK(instantiate_family(insep, rat(1)).pwm() == inseparable_p_profile(2, rat(1)).pwm());
}
