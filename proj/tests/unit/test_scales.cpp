#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sinesync/scales.hpp"
#include "support/oracles.hpp"

using namespace sinesync;

namespace {

const IntervalPattern kIonian{{2, 2, 1, 2, 2, 2, 1}};
const IntervalPattern kDorian{{2, 1, 2, 2, 2, 1, 2}};
const IntervalPattern kPhrygian{{1, 2, 2, 2, 1, 2, 2}};
const IntervalPattern kDoubleHarmonicMajor{{1, 3, 1, 2, 1, 3, 1}};

}  // namespace

TEST_CASE("default enumeration yields exactly the four named scales") {
    auto patterns = enumerate_symmetric_scales();
    REQUIRE(patterns.size() == 4);

    std::set<std::string> names;
    for (const auto& pattern : patterns) {
        CHECK(pattern.sum() == 12);
        // segment symmetry around the linking tone
        CHECK(pattern.steps[3] == 2);
        for (int i = 0; i < 3; ++i) CHECK(pattern.steps[i] == pattern.steps[i + 4]);
        auto name = name_of_pattern(pattern);
        REQUIRE(name.has_value());
        names.insert(std::string(*name));
    }
    CHECK(names == std::set<std::string>{"Ionian", "Phrygian", "Dorian",
                                         "Double Harmonic Major"});

    SUBCASE("deterministic lexicographic order") {
        CHECK(patterns[0] == kPhrygian);
        CHECK(patterns[1] == kDoubleHarmonicMajor);
        CHECK(patterns[2] == kDorian);
        CHECK(patterns[3] == kIonian);
    }
}

TEST_CASE("without the large-step rule the enumeration matches brute force") {
    SegmentConstraint constraint;
    constraint.large_step_rule = false;
    auto patterns = enumerate_symmetric_scales(constraint);
    auto oracle = oracles::brute_force_symmetric_patterns();

    REQUIRE(patterns.size() == oracle.size());
    REQUIRE(patterns.size() == 6);
    for (const auto& expected : oracle) {
        IntervalPattern wanted;
        std::copy(expected.begin(), expected.end(), wanted.steps.begin());
        CHECK(std::find(patterns.begin(), patterns.end(), wanted) != patterns.end());
    }

    // the two extra patterns put the 3-semitone leap at a segment edge
    CHECK(std::find(patterns.begin(), patterns.end(),
                    IntervalPattern{{1, 1, 3, 2, 1, 1, 3}}) != patterns.end());
    CHECK(std::find(patterns.begin(), patterns.end(),
                    IntervalPattern{{3, 1, 1, 2, 3, 1, 1}}) != patterns.end());
}

TEST_CASE("infeasible constraints enumerate nothing") {
    SegmentConstraint whole_tones;
    whole_tones.allowed_steps = {2};
    CHECK(enumerate_symmetric_scales(whole_tones).empty());  // 2+2+2 != 5

    SegmentConstraint odd_link;
    odd_link.link_step = 3;  // segments would need sum 4.5
    CHECK(enumerate_symmetric_scales(odd_link).empty());
}

TEST_CASE("mode rotation") {
    CHECK(mode_rotation(kIonian, 1) == kIonian);
    CHECK(mode_rotation(kIonian, 2) == kDorian);
    CHECK(mode_rotation(kIonian, 3) == kPhrygian);
    CHECK(name_of_pattern(mode_rotation(kIonian, 4)) == "Lydian");

    SUBCASE("seven successive rotations come home") {
        IntervalPattern current = kIonian;
        for (int i = 0; i < 7; ++i) current = mode_rotation(current, 2);
        CHECK(current == kIonian);
    }

    SUBCASE("rotation composes like addition of offsets") {
        for (int first = 1; first <= 7; ++first) {
            for (int second = 1; second <= 7; ++second) {
                auto twice = mode_rotation(mode_rotation(kIonian, first), second);
                int combined = ((first - 1) + (second - 1)) % 7 + 1;
                CHECK(twice == mode_rotation(kIonian, combined));
            }
        }
    }

    SUBCASE("degree out of range") {
        CHECK_THROWS_AS(mode_rotation(kIonian, 0), std::out_of_range);
        CHECK_THROWS_AS(mode_rotation(kIonian, 8), std::out_of_range);
    }
}

TEST_CASE("major scale pitch-class sets") {
    auto c_major = major_scale_set(PitchClass::c);
    CHECK(c_major.count() == 7);
    for (PitchClass pc : {PitchClass::c, PitchClass::d, PitchClass::e, PitchClass::f,
                          PitchClass::g, PitchClass::a, PitchClass::b})
        CHECK(c_major.contains(pc));
    CHECK_FALSE(c_major.contains(PitchClass::fs));

    auto d_major = major_scale_set(PitchClass::d);
    CHECK(d_major.contains(PitchClass::fs));
    CHECK(d_major.contains(PitchClass::cs));
    CHECK_FALSE(d_major.contains(PitchClass::c));

    auto g_major = major_scale_set(PitchClass::g);
    CHECK(g_major.contains(PitchClass::fs));
    CHECK_FALSE(g_major.contains(PitchClass::f));
}

TEST_CASE("common note counts") {
    CHECK(common_note_count(PitchClass::d, PitchClass::a) == 6);   // dominant
    CHECK(common_note_count(PitchClass::d, PitchClass::fs) == 3);  // mediant
    CHECK(common_note_count(PitchClass::d, PitchClass::d) == 7);

    SUBCASE("fifth-apart tonics always share six notes") {
        for (int s = 0; s < 12; ++s) {
            auto tonic = pitch_class_from_semitone(s);
            auto dominant = pitch_class_from_semitone(s + 7);
            CHECK(common_note_count(tonic, dominant) == 6);
        }
    }

    SUBCASE("symmetry, and seven only on identity") {
        for (int a = 0; a < 12; ++a) {
            for (int b = 0; b < 12; ++b) {
                auto lhs = pitch_class_from_semitone(a);
                auto rhs = pitch_class_from_semitone(b);
                CHECK(common_note_count(lhs, rhs) == common_note_count(rhs, lhs));
                if (a != b) CHECK(common_note_count(lhs, rhs) < 7);
            }
        }
    }
}

TEST_CASE("pattern names") {
    CHECK(name_of_pattern(kIonian) == "Ionian");
    CHECK(name_of_pattern(kDoubleHarmonicMajor) == "Double Harmonic Major");
    CHECK(name_of_pattern(IntervalPattern{{2, 2, 2, 1, 2, 2, 1}}) == "Lydian");
    CHECK(name_of_pattern(IntervalPattern{{2, 1, 2, 2, 1, 3, 1}}) == "Harmonic Minor");
    CHECK_FALSE(name_of_pattern(IntervalPattern{{1, 1, 3, 2, 1, 1, 3}}).has_value());

    CHECK(pattern_of_name("ionian") == kIonian);
    CHECK(pattern_of_name("Double harmonic major") == kDoubleHarmonicMajor);
    CHECK_FALSE(pattern_of_name("Mixolydian").has_value());

    // Lydian fails segment symmetry: (2,2,2) against (2,2,1)
    auto enumerated = enumerate_symmetric_scales();
    CHECK(std::find(enumerated.begin(), enumerated.end(),
                    IntervalPattern{{2, 2, 2, 1, 2, 2, 1}}) == enumerated.end());
}

TEST_CASE("major mode names") {
    CHECK(major_mode_name(1) == "Ionian");
    CHECK(major_mode_name(3) == "Phrygian");
    CHECK(major_mode_name(5) == "Mixolydian");
    CHECK(major_mode_name(7) == "Locrian");
    CHECK_THROWS_AS(major_mode_name(0), std::out_of_range);
}
