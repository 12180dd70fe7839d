#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "sinesync/consonance.hpp"

using namespace sinesync;

namespace {

const NoteIndex kD2{18};

DyadAnalysis dyad_above(int semitones, double tolerance = kDefaultTolerance,
                        double horizon = kDefaultHorizon) {
    double tonic = analysis_frequency(kD2);
    double other = analysis_frequency(NoteIndex(18 + semitones));
    return detect_coincidences(tonic, other, tolerance, horizon);
}

}  // namespace

TEST_CASE("canonical triad qualities") {
    const auto& all = canonical_triad_qualities();
    REQUIRE(all.size() == 6);
    CHECK(all[0] == TriadQuality{"major", 4, 7});
    CHECK(triad_quality_by_name("diminished") == TriadQuality{"diminished", 3, 6});
    CHECK(triad_quality_by_name("sus2") == TriadQuality{"sus2", 2, 7});
    CHECK_FALSE(triad_quality_by_name("power chord").has_value());
}

TEST_CASE("triad sync times over D2") {
    auto sync_of = [](const char* name) {
        auto report = triad_sync_time(kD2, *triad_quality_by_name(name), kDefaultTolerance,
                                      kDefaultAgreement, kDefaultHorizon);
        REQUIRE(report.sync_time_s.has_value());
        return *report.sync_time_s;
    };

    // values fixed by the engine at the default parameters
    CHECK(sync_of("major") == doctest::Approx(0.05439).epsilon(1e-3));
    CHECK(sync_of("sus4") == doctest::Approx(0.08172).epsilon(1e-3));
    CHECK(sync_of("sus2") == doctest::Approx(0.10906).epsilon(1e-3));
    CHECK(sync_of("minor") == doctest::Approx(0.21791).epsilon(1e-3));
    CHECK(sync_of("augmented") == doctest::Approx(0.62662).epsilon(1e-3));
    CHECK(sync_of("diminished") == doctest::Approx(0.06809).epsilon(1e-3));
}

TEST_CASE("triad reports are internally consistent") {
    for (const auto& quality : canonical_triad_qualities()) {
        auto report = triad_sync_time(kD2, quality, kDefaultTolerance, kDefaultAgreement,
                                      kDefaultHorizon);
        REQUIRE(report.sync_time_s.has_value());
        REQUIRE(report.lower_event.has_value());
        REQUIRE(report.upper_event.has_value());

        // spread within agreement, sync between (or at) the two event times
        double lo = std::min(report.lower_event->time, report.upper_event->time);
        double hi = std::max(report.lower_event->time, report.upper_event->time);
        CHECK(report.event_spread_s == doctest::Approx(hi - lo));
        CHECK(report.event_spread_s <= report.agreement_s);
        CHECK(*report.sync_time_s >= lo);
        CHECK(*report.sync_time_s <= hi);

        // the backing events really belong to the two dyad streams
        auto lower = dyad_above(quality.lower_offset);
        auto upper = dyad_above(quality.upper_offset);
        CHECK(std::find(lower.events.begin(), lower.events.end(), *report.lower_event) !=
              lower.events.end());
        CHECK(std::find(upper.events.begin(), upper.events.end(), *report.upper_event) !=
              upper.events.end());

        // and the sync time equals the first shared event of the two streams
        auto shared = shared_event_times(lower, upper, kDefaultAgreement);
        REQUIRE(!shared.empty());
        CHECK(shared.front() == doctest::Approx(*report.sync_time_s).epsilon(1e-12));
    }
}

TEST_CASE("ranking") {
    SUBCASE("single quality gives a single row") {
        std::array<TriadQuality, 1> only = {*triad_quality_by_name("major")};
        auto ranked = rank_triads(kD2, only, kDefaultTolerance, kDefaultAgreement,
                                  kDefaultHorizon);
        REQUIRE(ranked.size() == 1);
        CHECK(ranked[0].quality.name == "major");
        CHECK(*ranked[0].sync_time_s == doctest::Approx(0.0544).epsilon(1e-2));
    }

    SUBCASE("reports come out ascending, absent syncs last") {
        auto ranked = rank_triads(kD2, canonical_triad_qualities(), kDefaultTolerance,
                                  kDefaultAgreement, kDefaultHorizon);
        REQUIRE(ranked.size() == 6);
        CHECK(ranked.front().quality.name == "major");
        for (std::size_t i = 1; i < ranked.size(); ++i) {
            if (ranked[i - 1].sync_time_s && ranked[i].sync_time_s)
                CHECK(*ranked[i - 1].sync_time_s <= *ranked[i].sync_time_s);
            if (!ranked[i - 1].sync_time_s) CHECK(!ranked[i].sync_time_s);
        }
    }

    SUBCASE("no sync inside a tiny horizon sorts last") {
        auto ranked = rank_triads(kD2, canonical_triad_qualities(), kDefaultTolerance,
                                  kDefaultAgreement, 0.06);
        REQUIRE(ranked.size() == 6);
        CHECK(ranked.front().quality.name == "major");  // only one that fits
        CHECK(ranked.front().sync_time_s.has_value());
        CHECK_FALSE(ranked.back().sync_time_s.has_value());
        // the unsynced tail is alphabetical for determinism
        for (std::size_t i = 1; i < ranked.size(); ++i)
            if (!ranked[i - 1].sync_time_s && !ranked[i].sync_time_s)
                CHECK(ranked[i - 1].quality.name < ranked[i].quality.name);
    }
}

TEST_CASE("raw-frequency roots scale cleanly") {
    // an octave up with tolerances halved reproduces the same ordering with
    // halved times; the raw-Hz form keeps the ratios exact
    auto base = rank_triads(73.42, canonical_triad_qualities(), kDefaultTolerance,
                            kDefaultAgreement, 2.6);
    double ratio = 146.83 / 73.42;
    auto octave = rank_triads(146.83, canonical_triad_qualities(),
                              kDefaultTolerance / ratio, kDefaultAgreement / ratio,
                              2.6 / ratio);
    REQUIRE(base.size() == octave.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        CHECK(base[i].quality.name == octave[i].quality.name);
        REQUIRE(base[i].sync_time_s.has_value());
        REQUIRE(octave[i].sync_time_s.has_value());
        CHECK(*octave[i].sync_time_s ==
              doctest::Approx(*base[i].sync_time_s / ratio).epsilon(1e-6));
    }
}

TEST_CASE("sync search is monotone in horizon and agreement") {
    std::mt19937 rng(424242);
    std::uniform_real_distribution<double> pick(0.0, 1.0);
    const auto& qualities = canonical_triad_qualities();
    for (int round = 0; round < 40; ++round) {
        const auto& quality = qualities[static_cast<std::size_t>(pick(rng) * 6) % 6];
        double horizon = 0.5 + 2.0 * pick(rng);
        double agreement = 1e-4 + 4e-3 * pick(rng);

        auto narrow = triad_sync_time(kD2, quality, kDefaultTolerance, agreement, horizon);
        auto longer = triad_sync_time(kD2, quality, kDefaultTolerance, agreement,
                                      horizon + 0.7);
        auto looser = triad_sync_time(kD2, quality, kDefaultTolerance, agreement * 1.8,
                                      horizon);

        if (narrow.sync_time_s) {
            REQUIRE(longer.sync_time_s.has_value());
            CHECK(*longer.sync_time_s <= *narrow.sync_time_s);
            REQUIRE(looser.sync_time_s.has_value());
            CHECK(*looser.sync_time_s <= *narrow.sync_time_s);
        }
    }
}

TEST_CASE("shared event times") {
    SUBCASE("sub-dominant and minor 6th clash just past 0.163 s") {
        auto shared = shared_event_times(dyad_above(5), dyad_above(8), 5e-3);
        REQUIRE(!shared.empty());
        CHECK(shared.front() == doctest::Approx(0.1633).epsilon(1e-3));
    }

    SUBCASE("mediant and dominant first meet at the major-triad sync") {
        auto shared = shared_event_times(dyad_above(4), dyad_above(7), 5e-3);
        REQUIRE(!shared.empty());
        CHECK(shared.front() == doctest::Approx(0.0544).epsilon(1e-2));
    }

    SUBCASE("self comparison returns every event") {
        auto dyad = dyad_above(7);
        auto shared = shared_event_times(dyad, dyad, 5e-3);
        REQUIRE(shared.size() == dyad.events.size());
        for (std::size_t i = 0; i < shared.size(); ++i)
            CHECK(shared[i] == dyad.events[i].time);
    }

    SUBCASE("mismatched tonics are rejected") {
        auto a = detect_coincidences(73.42, 98.0, kDefaultTolerance, 1.0);
        auto b = detect_coincidences(73.41, 116.54, kDefaultTolerance, 1.0);
        CHECK_THROWS_AS(shared_event_times(a, b, 5e-3), std::invalid_argument);
    }

    SUBCASE("results ascend") {
        auto shared = shared_event_times(dyad_above(5), dyad_above(8), 5e-3);
        for (std::size_t i = 1; i < shared.size(); ++i)
            CHECK(shared[i] > shared[i - 1]);
    }
}
