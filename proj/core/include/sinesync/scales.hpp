#pragma once

// Segment-symmetric heptatonic scales, modes, and common-note counts.
//
// A heptatonic scale is a sequence of 7 semitone steps summing to 12. Split
// after the 4th note, it falls into two 3-step segments joined by a linking
// step; the scales whose two segments carry the same step pattern are the
// "systematic" ones this module enumerates.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "sinesync/pitch.hpp"

namespace sinesync {

// Seven steps in semitones. Valid patterns sum to 12 (octave closure).
struct IntervalPattern {
    std::array<int, 7> steps{};

    int sum() const noexcept;

    friend bool operator==(const IntervalPattern&, const IntervalPattern&) = default;
};

std::string to_string(const IntervalPattern& pattern);

// Constraint for the enumeration: two equal 3-step segments around a fixed
// linking step, steps drawn from `allowed_steps`. With `large_step_rule` on,
// a 3-semitone step is admitted only when both of its neighbours inside the
// segment are 1-semitone steps; that is the extra predicate which cuts the
// raw six candidates down to the four named scales.
struct SegmentConstraint {
    int link_step = 2;
    std::vector<int> allowed_steps = {1, 2, 3};
    bool large_step_rule = true;
};

// All patterns (a, b, c, link, a, b, c) admitted by the constraint, in
// lexicographic order of the segment. Empty when the segment sum
// (12 - link)/2 is not attainable.
std::vector<IntervalPattern> enumerate_symmetric_scales(const SegmentConstraint& constraint = {});

// Starts the same cyclic step pattern from another degree: rotates the steps
// left by (degree - 1). Degree must be 1..7; throws std::out_of_range.
IntervalPattern mode_rotation(const IntervalPattern& pattern, int degree);

// A subset of the 12 pitch classes.
class PitchClassSet {
public:
    PitchClassSet() = default;

    void add(PitchClass pc) noexcept;
    bool contains(PitchClass pc) const noexcept;
    int count() const noexcept;
    PitchClassSet intersect(PitchClassSet other) const noexcept;
    std::vector<PitchClass> members() const;  // ascending from C

    friend bool operator==(PitchClassSet, PitchClassSet) = default;

private:
    std::uint16_t bits_ = 0;
};

// The 7 pitch classes reached by cumulative major-scale steps from `tonic`.
PitchClassSet major_scale_set(PitchClass tonic);

// |major_scale_set(tonic) ∩ major_scale_set(other)|, 0..7. Symmetric; equals
// 7 exactly when the two tonics coincide.
int common_note_count(PitchClass tonic, PitchClass other);

// Lookup over the built-in named patterns (Ionian, Dorian, Phrygian, Lydian,
// Double Harmonic Major, Harmonic Minor); nullopt when unnamed.
std::optional<std::string_view> name_of_pattern(const IntervalPattern& pattern);

// Reverse lookup, case-insensitive.
std::optional<IntervalPattern> pattern_of_name(std::string_view name);

// Conventional name of the major-scale mode starting at `degree` (1..7):
// Ionian, Dorian, Phrygian, Lydian, Mixolydian, Aeolian, Locrian.
std::string_view major_mode_name(int degree);

}  // namespace sinesync
