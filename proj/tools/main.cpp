// sinesync command-line tool: note frequencies, coincidence tables, triad
// consonance ranking, scale enumeration, harmony overlap and wave plots.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sinesync/commands.hpp"
#include "sinesync/coincidence.hpp"
#include "sinesync/consonance.hpp"
#include "sinesync/pitch.hpp"
#include "sinesync/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

sinesync::NoteName require_note(const std::string& text) {
    // Accept either a note name ("D2") or a bare key number ("30").
    if (!text.empty() && text.find_first_not_of("0123456789") == std::string::npos) {
        int key = std::stoi(text);
        return sinesync::name_of(sinesync::NoteIndex(key));
    }
    auto note = sinesync::parse_note_name(text);
    if (!note) throw UsageError("unrecognized note: '" + text + "'");
    return *note;
}

sinesync::PitchClass require_pitch_class(const std::string& text) {
    auto pc = sinesync::parse_pitch_class(text);
    if (!pc) throw UsageError("unrecognized pitch class: '" + text + "'");
    return *pc;
}

// "0..0.25" or "0:0.25"
std::pair<double, double> parse_window(const std::string& text) {
    size_t sep = text.find("..");
    size_t skip = 2;
    if (sep == std::string::npos) {
        sep = text.find(':');
        skip = 1;
    }
    if (sep == std::string::npos)
        throw UsageError("window must look like begin..end, e.g. 0..0.25");
    try {
        double begin = std::stod(text.substr(0, sep));
        double end = std::stod(text.substr(sep + skip));
        return {begin, end};
    } catch (const std::exception&) {
        throw UsageError("window must look like begin..end, e.g. 0..0.25");
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) out.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

void print_report(const sinesync::Report& report, const std::string& format) {
    if (format == "table") std::fputs(sinesync::to_table(report).c_str(), stdout);
    else if (format == "csv") std::fputs(sinesync::to_csv(report).c_str(), stdout);
    else if (format == "json") std::fputs(sinesync::to_json(report).c_str(), stdout);
    else throw UsageError("format '" + format + "' is not available for this command");
    for (const auto& note : report.diagnostics)
        std::fprintf(stderr, "warning: %s\n", note.c_str());
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tonal frequency models and sine-wave coincidence analysis"};
    app.require_subcommand(1);

    std::string format = "table";
    app.add_option("--format", format, "output format: table, csv, json (svg for plot)")
        ->capture_default_str();

    // freq
    auto* freq = app.add_subcommand("freq", "frequency of a note under the chosen model");
    std::string freq_note;
    std::string freq_model = "both";
    freq->add_option("note", freq_note, "note name (A4) or key number (49)")->required();
    freq->add_option("--model", freq_model,
                     "paper (published exponential fit), equal (12-TET), or both")
        ->check(CLI::IsMember({"paper", "equal", "both"}))
        ->capture_default_str();

    // table1
    auto* table1 = app.add_subcommand(
        "table1", "chromatic coincidence table: first event times per interval");
    std::string table_tonic = "D2";
    double table_delta = sinesync::kDefaultTolerance;
    double table_horizon = sinesync::kDefaultHorizon;
    bool table_self = false;
    table1->add_option("--tonic", table_tonic, "tonic note")->capture_default_str();
    table1->add_option("--delta", table_delta, "pairing tolerance in seconds")
        ->capture_default_str();
    table1->add_option("--horizon", table_horizon, "analysis horizon in seconds")
        ->capture_default_str();
    table1->add_flag("--include-self", table_self,
                     "prepend the tonic-against-itself diagnostic row");

    // triads
    auto* triads = app.add_subcommand("triads", "rank triads by tonic sync time");
    std::string triad_root = "D2";
    std::string triad_qualities;
    double triad_delta = sinesync::kDefaultTolerance;
    double triad_agreement = sinesync::kDefaultAgreement;
    double triad_horizon = sinesync::kDefaultHorizon;
    bool triad_rank = false;
    triads->add_option("--root", triad_root, "root note")->capture_default_str();
    triads->add_option("--qualities", triad_qualities,
                       "comma list of major,minor,sus2,sus4,augmented,diminished");
    triads->add_option("--delta", triad_delta, "pairing tolerance in seconds")
        ->capture_default_str();
    triads->add_option("--agreement", triad_agreement,
                       "max spread between the two upper-note events")
        ->capture_default_str();
    triads->add_option("--horizon", triad_horizon, "search horizon in seconds")
        ->capture_default_str();
    triads->add_flag("--rank", triad_rank, "sort ascending by sync time (always on)");

    // scales
    auto* scales = app.add_subcommand("scales", "segment-symmetric scale enumeration");
    bool scales_enumerate = false;
    std::string large_step_rule = "on";
    std::vector<std::string> mode_of;
    scales->add_flag("--enumerate", scales_enumerate, "list the admitted patterns");
    scales->add_option("--large-step-rule", large_step_rule,
                       "on: 3-semitone steps need semitone neighbours; off: plain sums")
        ->check(CLI::IsMember({"on", "off"}))
        ->capture_default_str();
    scales->add_option("--mode-of", mode_of, "scale name and degree, e.g. Ionian 3")
        ->expected(2);

    // plot
    auto* plot = app.add_subcommand("plot", "SVG plot of sine traces with event markers");
    std::string plot_tonic;
    std::string plot_notes;
    std::string plot_window = "0..0.25";
    double plot_delta = sinesync::kDefaultTolerance;
    double plot_agreement = sinesync::kDefaultAgreement;
    plot->add_option("--tonic", plot_tonic, "tonic note")->required();
    plot->add_option("--notes", plot_notes, "comma list of up to 3 companion notes");
    plot->add_option("--window", plot_window, "time window begin..end in seconds")
        ->capture_default_str();
    plot->add_option("--delta", plot_delta, "pairing tolerance in seconds")
        ->capture_default_str();
    plot->add_option("--agreement", plot_agreement, "shared-event agreement in seconds")
        ->capture_default_str();

    // harmony
    auto* harmony = app.add_subcommand("harmony", "major-scale overlap of two tonics");
    std::string harmony_tonic;
    std::string harmony_other;
    harmony->add_option("--tonic", harmony_tonic, "first pitch class, e.g. D")->required();
    harmony->add_option("--other", harmony_other, "second pitch class, e.g. A")->required();

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*freq) {
            auto model = sinesync::parse_freq_model(freq_model);
            print_report(sinesync::freq_report(require_note(freq_note), *model), format);
        } else if (*table1) {
            if (table_delta <= 0 || table_horizon <= 0)
                throw UsageError("delta and horizon must be positive");
            print_report(sinesync::coincidence_table_report(require_note(table_tonic),
                                                            table_delta, table_horizon,
                                                            table_self),
                         format);
        } else if (*triads) {
            print_report(sinesync::triads_report(require_note(triad_root),
                                                 split_list(triad_qualities), triad_delta,
                                                 triad_agreement, triad_horizon),
                         format);
        } else if (*scales) {
            if (!mode_of.empty()) {
                int degree = 0;
                try {
                    degree = std::stoi(mode_of[1]);
                } catch (const std::exception&) {
                    throw UsageError("mode degree must be an integer 1..7");
                }
                print_report(sinesync::mode_of_report(mode_of[0], degree), format);
            } else {
                print_report(sinesync::scales_report(large_step_rule == "on"), format);
            }
        } else if (*plot) {
            if (format == "table") format = "svg";  // plot defaults to svg
            if (format != "svg")
                throw UsageError("plot emits svg only");
            auto [begin, end] = parse_window(plot_window);
            if (end <= begin) throw UsageError("window end must exceed its begin");
            std::vector<sinesync::NoteName> notes;
            for (const auto& text : split_list(plot_notes))
                notes.push_back(require_note(text));
            if (notes.size() > 3) throw UsageError("plot takes at most 3 companion notes");
            std::fputs(sinesync::plot_svg(require_note(plot_tonic), notes, begin, end,
                                          plot_delta, plot_agreement)
                           .c_str(),
                       stdout);
        } else if (*harmony) {
            print_report(sinesync::harmony_report(require_pitch_class(harmony_tonic),
                                                  require_pitch_class(harmony_other)),
                         format);
        }
    } catch (const UsageError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitComputation;
    }
    return kExitOk;
}
