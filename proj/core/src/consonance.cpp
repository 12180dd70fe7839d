#include "sinesync/consonance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sinesync {

const std::array<TriadQuality, 6>& canonical_triad_qualities() {
    static const std::array<TriadQuality, 6> qualities = {{
        {"major", 4, 7},
        {"minor", 3, 7},
        {"sus2", 2, 7},
        {"sus4", 5, 7},
        {"augmented", 4, 8},
        {"diminished", 3, 6},
    }};
    return qualities;
}

std::optional<TriadQuality> triad_quality_by_name(std::string_view name) {
    for (const auto& q : canonical_triad_qualities())
        if (q.name == name) return q;
    return std::nullopt;
}

namespace {

struct SyncSearch {
    std::optional<double> time;
    std::optional<CoincidenceEvent> lower;
    std::optional<CoincidenceEvent> upper;
    double spread = 0.0;
};

// Earliest pair of events, one per analysis, whose times agree within
// `agreement`. A plain merge suffices: whenever the heads disagree, the
// earlier one can never match anything later either, so it is discarded.
SyncSearch earliest_agreement(const DyadAnalysis& lower, const DyadAnalysis& upper,
                              double agreement) {
    SyncSearch found;
    size_t i = 0, j = 0;
    while (i < lower.events.size() && j < upper.events.size()) {
        double d = lower.events[i].time - upper.events[j].time;
        if (std::fabs(d) <= agreement) {
            found.time = 0.5 * (lower.events[i].time + upper.events[j].time);
            found.lower = lower.events[i];
            found.upper = upper.events[j];
            found.spread = std::fabs(d);
            return found;
        }
        if (d < 0.0) ++i; else ++j;
    }
    return found;
}

TriadConsonanceReport analyze_triad(double lower_hz, double upper_hz, double root_hz,
                                    const TriadQuality& quality, double tolerance_s,
                                    double agreement_s, double horizon_s) {
    if (agreement_s <= 0.0) throw std::invalid_argument("agreement must be positive");
    DyadAnalysis lower = detect_coincidences(root_hz, lower_hz, tolerance_s, horizon_s);
    DyadAnalysis upper = detect_coincidences(root_hz, upper_hz, tolerance_s, horizon_s);

    TriadConsonanceReport report;
    report.quality = quality;
    report.agreement_s = agreement_s;
    report.tolerance_s = tolerance_s;
    report.horizon_s = horizon_s;

    SyncSearch sync = earliest_agreement(lower, upper, agreement_s);
    report.sync_time_s = sync.time;
    report.lower_event = sync.lower;
    report.upper_event = sync.upper;
    report.event_spread_s = sync.spread;
    return report;
}

std::vector<TriadConsonanceReport> sort_reports(std::vector<TriadConsonanceReport> reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const TriadConsonanceReport& a, const TriadConsonanceReport& b) {
                         if (a.sync_time_s.has_value() != b.sync_time_s.has_value())
                             return a.sync_time_s.has_value();
                         if (a.sync_time_s && b.sync_time_s && *a.sync_time_s != *b.sync_time_s)
                             return *a.sync_time_s < *b.sync_time_s;
                         return a.quality.name < b.quality.name;
                     });
    return reports;
}

}  // namespace

TriadConsonanceReport triad_sync_time(double root_hz, const TriadQuality& quality,
                                      double tolerance_s, double agreement_s,
                                      double horizon_s) {
    double lower_hz = root_hz * std::pow(2.0, quality.lower_offset / 12.0);
    double upper_hz = root_hz * std::pow(2.0, quality.upper_offset / 12.0);
    return analyze_triad(lower_hz, upper_hz, root_hz, quality, tolerance_s, agreement_s,
                         horizon_s);
}

TriadConsonanceReport triad_sync_time(NoteIndex root, const TriadQuality& quality,
                                      double tolerance_s, double agreement_s,
                                      double horizon_s) {
    auto key_above = [&](int offset) {
        return NoteIndex(root.value() + offset, NoteIndex::Range::extended);
    };
    return analyze_triad(analysis_frequency(key_above(quality.lower_offset)),
                         analysis_frequency(key_above(quality.upper_offset)),
                         analysis_frequency(root), quality, tolerance_s, agreement_s,
                         horizon_s);
}

std::vector<TriadConsonanceReport> rank_triads(double root_hz,
                                               std::span<const TriadQuality> qualities,
                                               double tolerance_s, double agreement_s,
                                               double horizon_s) {
    std::vector<TriadConsonanceReport> reports;
    reports.reserve(qualities.size());
    for (const auto& q : qualities)
        reports.push_back(triad_sync_time(root_hz, q, tolerance_s, agreement_s, horizon_s));
    return sort_reports(std::move(reports));
}

std::vector<TriadConsonanceReport> rank_triads(NoteIndex root,
                                               std::span<const TriadQuality> qualities,
                                               double tolerance_s, double agreement_s,
                                               double horizon_s) {
    std::vector<TriadConsonanceReport> reports;
    reports.reserve(qualities.size());
    for (const auto& q : qualities)
        reports.push_back(triad_sync_time(root, q, tolerance_s, agreement_s, horizon_s));
    return sort_reports(std::move(reports));
}

std::vector<double> shared_event_times(const DyadAnalysis& a, const DyadAnalysis& b,
                                       double agreement_s) {
    if (a.tonic_hz != b.tonic_hz)
        throw std::invalid_argument("shared events need analyses over the same tonic");
    if (agreement_s <= 0.0) throw std::invalid_argument("agreement must be positive");

    std::vector<double> shared;
    size_t i = 0, j = 0;
    while (i < a.events.size() && j < b.events.size()) {
        double d = a.events[i].time - b.events[j].time;
        if (std::fabs(d) <= agreement_s) {
            shared.push_back(0.5 * (a.events[i].time + b.events[j].time));
            ++i;
            ++j;
        } else if (d < 0.0) {
            ++i;
        } else {
            ++j;
        }
    }
    return shared;
}

}  // namespace sinesync
