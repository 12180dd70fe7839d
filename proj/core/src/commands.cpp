#include "sinesync/commands.hpp"

#include <algorithm>
#include <stdexcept>

#include "sinesync/consonance.hpp"
#include "sinesync/plot.hpp"
#include "sinesync/scales.hpp"

namespace sinesync {

namespace {

// Chromatic interval labels relative to the tonic, 1..11 semitones.
constexpr const char* kIntervalNames[12] = {
    "tonic",        "minor_second", "supertonic",   "minor_third",
    "mediant",      "sub_dominant", "tritone",      "dominant",
    "minor_sixth",  "sub_mediant",  "minor_seventh", "leading_tone"};

std::string pattern_label(const IntervalPattern& pattern) {
    auto name = name_of_pattern(pattern);
    return name ? std::string(*name) : std::string("unknown");
}

std::string join_members(const PitchClassSet& set) {
    std::string out;
    for (PitchClass pc : set.members()) {
        if (!out.empty()) out.push_back(' ');
        out += to_string(pc);
    }
    return out;
}

}  // namespace

std::optional<FreqModel> parse_freq_model(std::string_view text) {
    if (text == "paper") return FreqModel::paper;
    if (text == "equal") return FreqModel::equal;
    if (text == "both") return FreqModel::both;
    return std::nullopt;
}

Report freq_report(const NoteName& note, FreqModel model) {
    NoteIndex key = index_of(note);
    ExponentialPitchModel fitted = canonical_pitch_model();

    Report report;
    report.command = "freq";
    report.params = {{"note", to_string(note)},
                     {"model", model == FreqModel::paper   ? "paper"
                               : model == FreqModel::equal ? "equal"
                                                           : "both"}};
    report.columns = {"note", "key"};
    std::vector<Cell> row = {Cell::of_text(to_string(note)), Cell::integer(key.value())};

    if (model == FreqModel::equal || model == FreqModel::both) {
        report.columns.insert(report.columns.end(), {"equal_hz", "table_hz"});
        row.push_back(Cell::fixed(equal_temperament_frequency(key), 3));
        row.push_back(Cell::fixed(analysis_frequency(key), 2));
    }
    if (model == FreqModel::paper || model == FreqModel::both) {
        report.columns.push_back("model_hz");
        row.push_back(Cell::fixed(fitted.frequency_at(key), 3));
    }
    if (model == FreqModel::both) {
        report.columns.push_back("deviation");
        row.push_back(Cell::general(model_deviation(fitted, key), 6));
    }
    report.rows.push_back(std::move(row));
    return report;
}

Report coincidence_table_report(const NoteName& tonic, double tolerance_s,
                                double horizon_s, bool include_self, int events_per_row) {
    if (events_per_row < 1) throw std::invalid_argument("need at least one event column");
    NoteIndex tonic_key = index_of(tonic);
    double tonic_hz = analysis_frequency(tonic_key);

    Report report;
    report.command = "table1";
    report.params = {{"tonic", to_string(tonic)},
                     {"tonic_hz", format_full(tonic_hz)},
                     {"delta", format_full(tolerance_s)},
                     {"horizon", format_full(horizon_s)}};
    report.columns = {"interval", "semitones"};
    for (int i = 1; i <= events_per_row; ++i)
        report.columns.push_back("t" + std::to_string(i));

    auto emit_row = [&](int semitones) {
        double other_hz =
            analysis_frequency(NoteIndex(tonic_key.value() + semitones,
                                         NoteIndex::Range::extended));
        DyadAnalysis dyad = detect_coincidences(tonic_hz, other_hz, tolerance_s, horizon_s);
        std::vector<Cell> row = {Cell::of_text(kIntervalNames[semitones]),
                                 Cell::integer(semitones)};
        for (int i = 0; i < events_per_row; ++i) {
            if (static_cast<size_t>(i) < dyad.events.size())
                row.push_back(Cell::fixed(dyad.events[static_cast<size_t>(i)].time, 4));
            else
                row.push_back(Cell::blank());
        }
        if (dyad.events.size() < static_cast<size_t>(events_per_row))
            report.diagnostics.push_back(
                std::string("row ") + kIntervalNames[semitones] + " has " +
                std::to_string(dyad.events.size()) + " of " +
                std::to_string(events_per_row) + " events inside the horizon");
        report.rows.push_back(std::move(row));
    };

    if (include_self) emit_row(0);
    for (int semitones = 1; semitones <= 11; ++semitones) emit_row(semitones);
    return report;
}

Report triads_report(const NoteName& root, const std::vector<std::string>& quality_names,
                     double tolerance_s, double agreement_s, double horizon_s) {
    NoteIndex root_key = index_of(root);

    std::vector<TriadQuality> qualities;
    if (quality_names.empty()) {
        const auto& all = canonical_triad_qualities();
        qualities.assign(all.begin(), all.end());
    } else {
        for (const auto& name : quality_names) {
            auto quality = triad_quality_by_name(name);
            if (!quality) throw std::invalid_argument("unknown triad quality: " + name);
            qualities.push_back(*quality);
        }
    }

    auto reports = rank_triads(root_key, qualities, tolerance_s, agreement_s, horizon_s);

    Report report;
    report.command = "triads";
    report.params = {{"root", to_string(root)},
                     {"root_hz", format_full(analysis_frequency(root_key))},
                     {"delta", format_full(tolerance_s)},
                     {"agreement", format_full(agreement_s)},
                     {"horizon", format_full(horizon_s)}};
    report.columns = {"rank",       "quality",    "offsets",  "sync_time",
                      "lower_event", "upper_event", "spread"};
    int rank = 1;
    for (const auto& triad : reports) {
        std::vector<Cell> row;
        row.push_back(Cell::integer(rank++));
        row.push_back(Cell::of_text(triad.quality.name));
        row.push_back(Cell::of_text(std::to_string(triad.quality.lower_offset) + "+" +
                                    std::to_string(triad.quality.upper_offset)));
        if (triad.sync_time_s) {
            row.push_back(Cell::fixed(*triad.sync_time_s, 4));
            row.push_back(Cell::fixed(triad.lower_event->time, 4));
            row.push_back(Cell::fixed(triad.upper_event->time, 4));
            row.push_back(Cell::general(triad.event_spread_s, 4));
        } else {
            row.push_back(Cell::blank());
            row.push_back(Cell::blank());
            row.push_back(Cell::blank());
            row.push_back(Cell::blank());
            report.diagnostics.push_back("triad " + triad.quality.name +
                                         " found no sync inside the horizon");
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

Report scales_report(bool large_step_rule) {
    SegmentConstraint constraint;
    constraint.large_step_rule = large_step_rule;
    auto patterns = enumerate_symmetric_scales(constraint);

    Report report;
    report.command = "scales";
    report.params = {{"large_step_rule", large_step_rule ? "on" : "off"},
                     {"link_step", "2"}};
    report.columns = {"pattern", "name"};
    for (const auto& pattern : patterns)
        report.rows.push_back(
            {Cell::of_text(to_string(pattern)), Cell::of_text(pattern_label(pattern))});
    return report;
}

Report mode_of_report(std::string_view scale_name, int degree) {
    auto pattern = pattern_of_name(scale_name);
    if (!pattern)
        throw std::invalid_argument("unknown scale name: " + std::string(scale_name));
    IntervalPattern rotated = mode_rotation(*pattern, degree);

    Report report;
    report.command = "scales";
    report.params = {{"mode_of", std::string(scale_name)},
                     {"degree", std::to_string(degree)}};
    report.columns = {"source", "degree", "pattern", "name"};
    report.rows.push_back({Cell::of_text(std::string(scale_name)), Cell::integer(degree),
                           Cell::of_text(to_string(rotated)),
                           Cell::of_text(pattern_label(rotated))});
    return report;
}

Report harmony_report(PitchClass tonic, PitchClass other) {
    PitchClassSet tonic_set = major_scale_set(tonic);
    PitchClassSet other_set = major_scale_set(other);
    PitchClassSet common = tonic_set.intersect(other_set);

    // Degree of `other` inside the tonic major scale, when diatonic.
    std::string harmonizer_mode = "(not diatonic)";
    int step = semitone_of(tonic);
    static constexpr int kMajorSteps[6] = {2, 2, 1, 2, 2, 2};
    int degree = 1;
    if (step == semitone_of(other)) {
        harmonizer_mode = std::string(major_mode_name(1));
    } else {
        for (int i = 0; i < 6; ++i) {
            step += kMajorSteps[i];
            ++degree;
            if (((step % 12) + 12) % 12 == semitone_of(other)) {
                harmonizer_mode = std::string(major_mode_name(degree));
                break;
            }
        }
    }

    Report report;
    report.command = "harmony";
    report.params = {{"tonic", std::string(to_string(tonic))},
                     {"other", std::string(to_string(other))}};
    report.columns = {"tonic_scale", "other_scale", "common_notes", "common_count",
                      "harmonizer_mode"};
    report.rows.push_back({Cell::of_text(join_members(tonic_set)),
                           Cell::of_text(join_members(other_set)),
                           Cell::of_text(join_members(common)),
                           Cell::integer(common.count()),
                           Cell::of_text(harmonizer_mode)});
    return report;
}

std::string plot_svg(const NoteName& tonic, const std::vector<NoteName>& notes,
                     double window_begin_s, double window_end_s, double tolerance_s,
                     double agreement_s) {
    WavePlotSpec spec;
    spec.tonic = {to_string(tonic), analysis_frequency(index_of(tonic))};
    for (const auto& note : notes)
        spec.others.push_back({to_string(note), analysis_frequency(index_of(note))});
    spec.window_begin_s = window_begin_s;
    spec.window_end_s = window_end_s;
    spec.tolerance_s = tolerance_s;
    spec.agreement_s = agreement_s;
    return render_wave_plot(spec);
}

}  // namespace sinesync
