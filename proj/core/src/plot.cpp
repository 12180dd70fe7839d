#include "sinesync/plot.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sinesync/consonance.hpp"
#include "sinesync/report.hpp"

namespace sinesync {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 400.0;
constexpr double kMarginLeft = 46.0;
constexpr double kMarginRight = 12.0;
constexpr double kMarginTop = 18.0;
constexpr double kMarginBottom = 28.0;

// Tonic first, companions after.
constexpr const char* kTraceColors[4] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

std::string num(double v) { return format_fixed(v, 2); }

}  // namespace

std::string render_wave_plot(const WavePlotSpec& spec) {
    if (spec.others.size() > 3)
        throw std::invalid_argument("a wave plot takes at most 3 companion notes");
    if (spec.window_end_s <= spec.window_begin_s)
        throw std::invalid_argument("plot window must end after it begins");
    if (spec.tonic.frequency_hz <= 0.0)
        throw std::invalid_argument("tonic frequency must be positive");
    for (const auto& trace : spec.others)
        if (trace.frequency_hz <= 0.0)
            throw std::invalid_argument("trace frequency must be positive");

    const double t0 = spec.window_begin_s;
    const double t1 = spec.window_end_s;
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    const int samples = std::max(spec.samples_per_trace, 2000);

    auto x_of = [&](double t) { return kMarginLeft + (t - t0) / (t1 - t0) * plot_w; };
    // amplitude v in [-1, 1] maps linearly onto the plot band
    auto y_amp = [&](double v) { return kMarginTop + (1.0 - v) / 2.0 * plot_h; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
           "viewBox=\"0 0 800 400\" width=\"800\" height=\"400\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"400\" fill=\"#ffffff\"/>\n";

    // axes: time along the bottom, midline at amplitude zero
    svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(y_amp(0.0)) +
           "\" x2=\"" + num(kWidth - kMarginRight) + "\" y2=\"" + num(y_amp(0.0)) +
           "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";
    svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kMarginTop) +
           "\" x2=\"" + num(kMarginLeft) + "\" y2=\"" + num(kHeight - kMarginBottom) +
           "\" stroke=\"#888888\" stroke-width=\"0.5\"/>\n";

    // window labels
    svg += "<text x=\"" + num(kMarginLeft) + "\" y=\"" + num(kHeight - 8.0) +
           "\" font-family=\"monospace\" font-size=\"11\">t=" + format_fixed(t0, 4) +
           "s</text>\n";
    svg += "<text x=\"" + num(kWidth - kMarginRight - 80.0) + "\" y=\"" +
           num(kHeight - 8.0) + "\" font-family=\"monospace\" font-size=\"11\">t=" +
           format_fixed(t1, 4) + "s</text>\n";

    // traces
    std::vector<WaveTrace> traces;
    traces.push_back(spec.tonic);
    for (const auto& other : spec.others) traces.push_back(other);

    for (size_t ti = 0; ti < traces.size(); ++ti) {
        const auto& trace = traces[ti];
        svg += "<polyline fill=\"none\" stroke=\"";
        svg += kTraceColors[ti];
        svg += "\" stroke-width=\"0.8\" points=\"";
        for (int s = 0; s <= samples; ++s) {
            double t = t0 + (t1 - t0) * s / samples;
            double v = std::sin(2.0 * std::numbers::pi * trace.frequency_hz * t);
            if (s) svg.push_back(' ');
            svg += num(x_of(t)) + "," + num(y_amp(v));
        }
        svg += "\"/>\n";
        // legend
        double ly = kMarginTop + 12.0 * static_cast<double>(ti);
        svg += "<text x=\"" + num(kWidth - kMarginRight - 120.0) + "\" y=\"" + num(ly) +
               "\" font-family=\"monospace\" font-size=\"11\" fill=\"";
        svg += kTraceColors[ti];
        svg += "\">" + trace.label + " " + format_fixed(trace.frequency_hz, 2) +
               "Hz</text>\n";
    }

    auto marker = [&](double t, const char* color, const char* dash,
                      const char* role) {
        if (t < t0 || t > t1) return;
        svg += "<line x1=\"" + num(x_of(t)) + "\" y1=\"" + num(kMarginTop) + "\" x2=\"" +
               num(x_of(t)) + "\" y2=\"" + num(kHeight - kMarginBottom) + "\" stroke=\"";
        svg += color;
        svg += "\" stroke-width=\"0.9\"";
        if (dash[0]) svg += std::string(" stroke-dasharray=\"") + dash + "\"";
        svg += std::string(" data-role=\"") + role + "\" data-t=\"" +
               format_fixed(t, 4) + "\"/>\n";
    };

    if (spec.others.empty()) {
        // plain sinusoid: mark the tonic's own rising zeros
        for (double z : rising_zeros(spec.tonic.frequency_hz, t1))
            marker(z, "#555555", "3,3", "zero");
    } else {
        std::vector<DyadAnalysis> dyads;
        for (const auto& other : spec.others)
            dyads.push_back(detect_coincidences(spec.tonic.frequency_hz, other.frequency_hz,
                                                spec.tolerance_s, t1));
        for (size_t di = 0; di < dyads.size(); ++di)
            for (const auto& event : dyads[di].events)
                marker(event.time, kTraceColors[di + 1], "4,3", "event");
        for (size_t a = 0; a < dyads.size(); ++a)
            for (size_t b = a + 1; b < dyads.size(); ++b)
                for (double t : shared_event_times(dyads[a], dyads[b], spec.agreement_s))
                    marker(t, "#000000", "", "shared");
    }

    svg += "</svg>\n";
    return svg;
}

}  // namespace sinesync
