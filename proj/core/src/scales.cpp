#include "sinesync/scales.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sinesync {

int IntervalPattern::sum() const noexcept {
    return std::accumulate(steps.begin(), steps.end(), 0);
}

std::string to_string(const IntervalPattern& pattern) {
    std::string out;
    for (size_t i = 0; i < pattern.steps.size(); ++i) {
        if (i) out.push_back('-');
        out += std::to_string(pattern.steps[i]);
    }
    return out;
}

namespace {

// A 3-semitone leap is only admissible when both of its neighbours inside
// the segment are semitones; a leap at the segment edge has only one
// neighbour and therefore never qualifies.
bool segment_obeys_large_step_rule(const std::array<int, 3>& segment) {
    for (int i = 0; i < 3; ++i) {
        if (segment[i] != 3) continue;
        if (i == 0 || i == 2) return false;
        if (segment[i - 1] != 1 || segment[i + 1] != 1) return false;
    }
    return true;
}

}  // namespace

std::vector<IntervalPattern> enumerate_symmetric_scales(const SegmentConstraint& constraint) {
    std::vector<IntervalPattern> patterns;
    int segment_total = 12 - constraint.link_step;
    if (segment_total <= 0 || segment_total % 2 != 0) return patterns;
    int segment_sum = segment_total / 2;

    std::vector<int> steps = constraint.allowed_steps;
    std::sort(steps.begin(), steps.end());
    steps.erase(std::unique(steps.begin(), steps.end()), steps.end());

    for (int a : steps) {
        for (int b : steps) {
            for (int c : steps) {
                if (a + b + c != segment_sum) continue;
                std::array<int, 3> segment = {a, b, c};
                if (constraint.large_step_rule && !segment_obeys_large_step_rule(segment))
                    continue;
                patterns.push_back(
                    IntervalPattern{{a, b, c, constraint.link_step, a, b, c}});
            }
        }
    }
    return patterns;
}

IntervalPattern mode_rotation(const IntervalPattern& pattern, int degree) {
    if (degree < 1 || degree > 7)
        throw std::out_of_range("mode degree must be 1..7");
    IntervalPattern rotated;
    for (int i = 0; i < 7; ++i)
        rotated.steps[i] = pattern.steps[(i + degree - 1) % 7];
    return rotated;
}

void PitchClassSet::add(PitchClass pc) noexcept {
    bits_ |= static_cast<std::uint16_t>(1u << semitone_of(pc));
}

bool PitchClassSet::contains(PitchClass pc) const noexcept {
    return (bits_ >> semitone_of(pc)) & 1u;
}

int PitchClassSet::count() const noexcept { return std::popcount(bits_); }

PitchClassSet PitchClassSet::intersect(PitchClassSet other) const noexcept {
    PitchClassSet result;
    result.bits_ = bits_ & other.bits_;
    return result;
}

std::vector<PitchClass> PitchClassSet::members() const {
    std::vector<PitchClass> out;
    for (int s = 0; s < 12; ++s)
        if ((bits_ >> s) & 1u) out.push_back(pitch_class_from_semitone(s));
    return out;
}

PitchClassSet major_scale_set(PitchClass tonic) {
    static constexpr int kMajorSteps[6] = {2, 2, 1, 2, 2, 2};  // 7th step closes the octave
    PitchClassSet set;
    int s = semitone_of(tonic);
    set.add(tonic);
    for (int step : kMajorSteps) {
        s += step;
        set.add(pitch_class_from_semitone(s));
    }
    return set;
}

int common_note_count(PitchClass tonic, PitchClass other) {
    return major_scale_set(tonic).intersect(major_scale_set(other)).count();
}

namespace {

struct NamedPattern {
    std::string_view name;
    IntervalPattern pattern;
};

constexpr int kNamedPatternCount = 6;

const std::array<NamedPattern, kNamedPatternCount>& named_patterns() {
    static const std::array<NamedPattern, kNamedPatternCount> table = {{
        {"Ionian", IntervalPattern{{2, 2, 1, 2, 2, 2, 1}}},
        {"Dorian", IntervalPattern{{2, 1, 2, 2, 2, 1, 2}}},
        {"Phrygian", IntervalPattern{{1, 2, 2, 2, 1, 2, 2}}},
        {"Lydian", IntervalPattern{{2, 2, 2, 1, 2, 2, 1}}},
        {"Double Harmonic Major", IntervalPattern{{1, 3, 1, 2, 1, 3, 1}}},
        {"Harmonic Minor", IntervalPattern{{2, 1, 2, 2, 1, 3, 1}}},
    }};
    return table;
}

bool iequal(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

}  // namespace

std::optional<std::string_view> name_of_pattern(const IntervalPattern& pattern) {
    for (const auto& entry : named_patterns())
        if (entry.pattern == pattern) return entry.name;
    return std::nullopt;
}

std::optional<IntervalPattern> pattern_of_name(std::string_view name) {
    for (const auto& entry : named_patterns())
        if (iequal(entry.name, name)) return entry.pattern;
    return std::nullopt;
}

std::string_view major_mode_name(int degree) {
    static constexpr std::array<std::string_view, 7> kModes = {
        "Ionian", "Dorian", "Phrygian", "Lydian", "Mixolydian", "Aeolian", "Locrian"};
    if (degree < 1 || degree > 7)
        throw std::out_of_range("mode degree must be 1..7");
    return kModes[static_cast<size_t>(degree - 1)];
}

}  // namespace sinesync
