#pragma once

// Deterministic SVG rendering of sine traces with coincidence markers.

#include <string>
#include <vector>

#include "sinesync/coincidence.hpp"

namespace sinesync {

struct WaveTrace {
    std::string label;
    double frequency_hz = 0.0;
};

struct WavePlotSpec {
    WaveTrace tonic;
    std::vector<WaveTrace> others;      // up to 3
    double window_begin_s = 0.0;
    double window_end_s = 0.25;
    double tolerance_s = kDefaultTolerance;
    double agreement_s = 5e-3;
    int samples_per_trace = 2000;       // lower bound; never reduced
};

// Renders sin(2*pi*f*t) for the tonic and each companion over the window,
// with dashed vertical markers at every tonic-companion coincidence and
// solid markers where two companions' events agree ("shared" events). A
// plot with no companions marks the tonic's own rising zeros instead.
// Marker elements carry the event time in a data-t attribute. Output is a
// standalone SVG 1.1 document with an 800x400 viewBox, byte-identical for
// identical inputs. Throws std::invalid_argument for an empty window, more
// than 3 companions, or non-positive inputs.
std::string render_wave_plot(const WavePlotSpec& spec);

}  // namespace sinesync
