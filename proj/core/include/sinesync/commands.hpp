#pragma once

// Report builders behind the command-line tool. Each function performs the
// full analysis for one subcommand and packages it as a Report (or SVG), so
// the tool itself only parses arguments and picks an output format.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sinesync/pitch.hpp"
#include "sinesync/report.hpp"

namespace sinesync {

// Which frequency model(s) the freq command reports. "paper" selects the
// canonical exponential-fit constants, "equal" the 12-TET reference.
enum class FreqModel { paper, equal, both };

std::optional<FreqModel> parse_freq_model(std::string_view text);

Report freq_report(const NoteName& note, FreqModel model);

// The chromatic coincidence table: one row per interval from 1 to 11
// semitones above the tonic, with the first `events_per_row` event times at
// 4 decimals. Rows whose stream ends before the horizon are padded with
// blanks and noted in the diagnostics. `include_self` prepends the
// tonic-against-itself row (a diagnostic; its events are the tonic's own
// rising zeros).
Report coincidence_table_report(const NoteName& tonic,
                                double tolerance_s, double horizon_s,
                                bool include_self = false,
                                int events_per_row = 10);

// Triad reports for the given quality names (empty = all six canonical
// qualities), rank-ordered by sync time.
Report triads_report(const NoteName& root,
                     const std::vector<std::string>& quality_names,
                     double tolerance_s, double agreement_s, double horizon_s);

// Scale enumeration under the segment-symmetry constraint.
Report scales_report(bool large_step_rule);

// Mode rotation of a named pattern.
Report mode_of_report(std::string_view scale_name, int degree);

// Major-scale overlap of two tonics: both scale sets, their intersection and
// count, and the mode the second tonic occupies when it is diatonic.
Report harmony_report(PitchClass tonic, PitchClass other);

// SVG wave plot; companions limited to 3.
std::string plot_svg(const NoteName& tonic, const std::vector<NoteName>& notes,
                     double window_begin_s, double window_end_s,
                     double tolerance_s, double agreement_s);

}  // namespace sinesync
