#pragma once

// Rising-zero coincidence analysis of two sinusoids.
//
// A tone y(t) = sin(2*pi*f*t) crosses zero with positive slope exactly at
// t = n/f for integer n >= 1. Two tones "meet" when a rising zero of each
// falls within a small tolerance of the other. The stream of such events,
// and the pattern formed by the spacing between consecutive events, is the
// raw material for all consonance analysis in this library.

#include <cstdint>
#include <span>
#include <vector>

namespace sinesync {

// Detection tolerance between paired zeros, in seconds.
inline constexpr double kDefaultTolerance = 7.5e-4;
// Analysis horizon in seconds; long enough for the slowest published pattern.
inline constexpr double kDefaultHorizon = 2.6;
// Tolerance used when deciding whether two spacings count as "the same".
inline constexpr double kDefaultMatchTolerance = 2e-3;

// All rising zeros n/f with n >= 1 and n/f <= horizon, ascending.
// Throws std::invalid_argument for non-positive inputs.
std::vector<double> rising_zeros(double frequency_hz, double horizon_s);

// One near-simultaneous pair of rising zeros. `time` is the midpoint of the
// two zeros, `gap` their separation; the cycle numbers identify which zero
// of each stream participated.
struct CoincidenceEvent {
    double time = 0.0;
    double gap = 0.0;
    std::int64_t tonic_cycle = 0;
    std::int64_t other_cycle = 0;

    friend bool operator==(const CoincidenceEvent&, const CoincidenceEvent&) = default;
};

struct DyadAnalysis {
    double tonic_hz = 0.0;
    double other_hz = 0.0;
    double tolerance_s = 0.0;
    double horizon_s = 0.0;
    std::vector<CoincidenceEvent> events;

    std::vector<double> event_times() const;
};

// Linear merge of the two zero streams. Every pair (n/f0, m/f1) with
// |n/f0 - m/f1| <= tolerance and both zeros inside the horizon becomes one
// event; each zero participates in at most one event (greedy earliest-first
// pairing). Requires tolerance < min(1/f0, 1/f1)/2 so pairing is unambiguous;
// throws std::invalid_argument otherwise, or for non-positive inputs.
DyadAnalysis detect_coincidences(double tonic_hz, double other_hz,
                                 double tolerance_s = kDefaultTolerance,
                                 double horizon_s = kDefaultHorizon);

// Classification of the consecutive-difference sequence of an event stream.
//
//   periodic     all differences equal (one value)
//   alternating  differences alternate between two distinct values
//   cyclic       the sequence repeats with period 3 or 4 (smallest period)
//   irregular    none of the above
//
// "Equal" means the spread within a phase class stays within match_tolerance;
// a period is only claimed when at least two full cycles of evidence exist.
// Simpler kinds are preferred: periodic over alternating over cyclic.
struct DifferencePattern {
    enum class Kind { periodic, alternating, cyclic, irregular };

    Kind kind = Kind::irregular;
    std::vector<double> values;       // one representative per phase class
    bool insufficient_data = false;   // fewer than 4 events
    double match_tolerance_s = 0.0;
};

DifferencePattern classify_differences(const DyadAnalysis& analysis,
                                       double match_tolerance_s = kDefaultMatchTolerance);

// Same classification applied to an explicit difference sequence.
DifferencePattern classify_difference_sequence(std::span<const double> diffs,
                                               double match_tolerance_s);

// The inversion of an interval: k semitones -> 12-k. An involution on 0..12;
// it pairs the intervals whose coincidence patterns mirror each other
// (minor 2nd <-> major 7th, minor 7th <-> major 2nd, minor 6th <-> major 3rd, ...).
// Throws std::out_of_range outside 0..12.
int inversion_partner(int semitones);

// Jaccard similarity of the multisets of consecutive differences of the two
// analyses, with every difference quantized to the nearest multiple of
// `quantum_s`. 1.0 means identical multisets. Analyses with fewer than two
// events have no differences; two such analyses compare as 1.0, one as 0.0.
// Throws std::invalid_argument for empty analyses or non-positive quantum.
double pattern_similarity(const DyadAnalysis& a, const DyadAnalysis& b, double quantum_s);

}  // namespace sinesync
