#pragma once

// Triad consonance ranking.
//
// A triad is judged by how quickly its two upper notes come into sync with
// the root: each upper note forms a coincidence stream with the root, and the
// triad's sync time is the earliest moment at which both streams have an
// event at (almost) the same time. Shorter sync time, more consonant chord.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sinesync/coincidence.hpp"
#include "sinesync/pitch.hpp"

namespace sinesync {

// Two event times "agree" when they differ by at most this many seconds.
inline constexpr double kDefaultAgreement = 5e-3;
// Default search horizon for triad sync; the slowest canonical triads need
// a longer window (the command-line tool searches out to kDefaultHorizon).
inline constexpr double kDefaultTriadHorizon = 2.0;

// A triad quality as the pair of semitone offsets of its upper notes.
struct TriadQuality {
    std::string name;
    int lower_offset = 0;
    int upper_offset = 0;

    friend bool operator==(const TriadQuality&, const TriadQuality&) = default;
};

// major(4,7) minor(3,7) sus2(2,7) sus4(5,7) augmented(4,8) diminished(3,6)
const std::array<TriadQuality, 6>& canonical_triad_qualities();

std::optional<TriadQuality> triad_quality_by_name(std::string_view name);

struct TriadConsonanceReport {
    TriadQuality quality;
    std::optional<double> sync_time_s;          // none when no sync inside horizon
    std::optional<CoincidenceEvent> lower_event;  // root/lower-note event backing the sync
    std::optional<CoincidenceEvent> upper_event;  // root/upper-note event backing the sync
    double event_spread_s = 0.0;                // |lower.time - upper.time| when synced
    double agreement_s = 0.0;
    double tolerance_s = 0.0;
    double horizon_s = 0.0;
};

// Root given as a raw frequency: the upper notes sit at root * 2^(offset/12).
// sync_time is the mean of the two backing event times.
TriadConsonanceReport triad_sync_time(double root_hz, const TriadQuality& quality,
                                      double tolerance_s = kDefaultTolerance,
                                      double agreement_s = kDefaultAgreement,
                                      double horizon_s = kDefaultTriadHorizon);

// Root given as a key: all three notes take their analysis_frequency (the
// rounded published pitches), the form used for every table reproduction.
TriadConsonanceReport triad_sync_time(NoteIndex root, const TriadQuality& quality,
                                      double tolerance_s = kDefaultTolerance,
                                      double agreement_s = kDefaultAgreement,
                                      double horizon_s = kDefaultTriadHorizon);

// Reports sorted ascending by sync time; triads with no sync sort last;
// ties break on quality name.
std::vector<TriadConsonanceReport> rank_triads(double root_hz,
                                               std::span<const TriadQuality> qualities,
                                               double tolerance_s = kDefaultTolerance,
                                               double agreement_s = kDefaultAgreement,
                                               double horizon_s = kDefaultTriadHorizon);

std::vector<TriadConsonanceReport> rank_triads(NoteIndex root,
                                               std::span<const TriadQuality> qualities,
                                               double tolerance_s = kDefaultTolerance,
                                               double agreement_s = kDefaultAgreement,
                                               double horizon_s = kDefaultTriadHorizon);

// Every time at which an event of `a` and an event of `b` agree within
// `agreement_s`, reported as pair means, ascending. This is where two
// intervals played against the same root reinforce each other; a clash of
// an unstable interval with a stable one at such a moment is what makes it
// stick out. Both analyses must share the same tonic frequency (throws
// std::invalid_argument otherwise).
std::vector<double> shared_event_times(const DyadAnalysis& a, const DyadAnalysis& b,
                                       double agreement_s = kDefaultAgreement);

}  // namespace sinesync
