#include "sinesync/coincidence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <stdexcept>

namespace sinesync {

namespace {

constexpr double kMaxZeroCount = 1e7;  // guards absurd frequency*horizon requests

void check_stream_args(double frequency_hz, double horizon_s) {
    if (frequency_hz <= 0.0) throw std::invalid_argument("frequency must be positive");
    if (horizon_s <= 0.0) throw std::invalid_argument("horizon must be positive");
    if (frequency_hz * horizon_s > kMaxZeroCount)
        throw std::invalid_argument("horizon too long for this frequency");
}

}  // namespace

std::vector<double> rising_zeros(double frequency_hz, double horizon_s) {
    check_stream_args(frequency_hz, horizon_s);
    std::vector<double> zeros;
    zeros.reserve(static_cast<size_t>(frequency_hz * horizon_s) + 1);
    for (std::int64_t n = 1;; ++n) {
        double t = static_cast<double>(n) / frequency_hz;
        if (t > horizon_s) break;
        zeros.push_back(t);
    }
    return zeros;
}

std::vector<double> DyadAnalysis::event_times() const {
    std::vector<double> times;
    times.reserve(events.size());
    for (const auto& e : events) times.push_back(e.time);
    return times;
}

DyadAnalysis detect_coincidences(double tonic_hz, double other_hz,
                                 double tolerance_s, double horizon_s) {
    check_stream_args(tonic_hz, horizon_s);
    check_stream_args(other_hz, horizon_s);
    if (tolerance_s <= 0.0) throw std::invalid_argument("tolerance must be positive");
    double half_short_period = 0.5 / std::max(tonic_hz, other_hz);
    if (tolerance_s >= half_short_period)
        throw std::invalid_argument(
            "tolerance must stay below half the shorter period; pairing would be ambiguous");

    DyadAnalysis analysis{tonic_hz, other_hz, tolerance_s, horizon_s, {}};

    // Merge the two sorted zero streams. The tolerance bound above guarantees
    // a zero can match at most one zero of the other stream, so pairing the
    // first in-tolerance encounter is both greedy-earliest and nearest.
    std::int64_t n = 1, m = 1;
    double a = 1.0 / tonic_hz;
    double b = 1.0 / other_hz;
    while (a <= horizon_s && b <= horizon_s) {
        double gap = a - b;
        if (std::fabs(gap) <= tolerance_s) {
            analysis.events.push_back({0.5 * (a + b), std::fabs(gap), n, m});
            ++n;
            ++m;
            a = static_cast<double>(n) / tonic_hz;
            b = static_cast<double>(m) / other_hz;
        } else if (gap < 0.0) {
            ++n;
            a = static_cast<double>(n) / tonic_hz;
        } else {
            ++m;
            b = static_cast<double>(m) / other_hz;
        }
    }
    return analysis;
}

namespace {

// Phase-class means when the sequence is consistent with period k, i.e. every
// class of positions i ≡ j (mod k) stays within the tolerance band. Requires
// two full cycles of evidence.
std::optional<std::vector<double>> period_fit(std::span<const double> diffs,
                                              size_t period, double tolerance) {
    if (diffs.size() < 2 * period) return std::nullopt;
    std::vector<double> lo(period, 0.0), hi(period, 0.0), sum(period, 0.0);
    std::vector<size_t> count(period, 0);
    for (size_t i = 0; i < diffs.size(); ++i) {
        size_t j = i % period;
        if (count[j] == 0) {
            lo[j] = hi[j] = diffs[i];
        } else {
            lo[j] = std::min(lo[j], diffs[i]);
            hi[j] = std::max(hi[j], diffs[i]);
        }
        sum[j] += diffs[i];
        ++count[j];
    }
    std::vector<double> means(period);
    for (size_t j = 0; j < period; ++j) {
        if (hi[j] - lo[j] > tolerance) return std::nullopt;
        means[j] = sum[j] / static_cast<double>(count[j]);
    }
    return means;
}

}  // namespace

DifferencePattern classify_difference_sequence(std::span<const double> diffs,
                                               double match_tolerance_s) {
    DifferencePattern pattern;
    pattern.match_tolerance_s = match_tolerance_s;
    if (diffs.size() < 3) {
        pattern.insufficient_data = true;
        return pattern;
    }

    if (auto fit = period_fit(diffs, 1, match_tolerance_s)) {
        pattern.kind = DifferencePattern::Kind::periodic;
        pattern.values = std::move(*fit);
        return pattern;
    }
    if (auto fit = period_fit(diffs, 2, match_tolerance_s)) {
        if (std::fabs((*fit)[0] - (*fit)[1]) > match_tolerance_s) {
            pattern.kind = DifferencePattern::Kind::alternating;
            pattern.values = std::move(*fit);
            return pattern;
        }
    }
    for (size_t period = 3; period <= 4; ++period) {
        if (auto fit = period_fit(diffs, period, match_tolerance_s)) {
            auto [mn, mx] = std::minmax_element(fit->begin(), fit->end());
            if (*mx - *mn > match_tolerance_s) {
                pattern.kind = DifferencePattern::Kind::cyclic;
                pattern.values = std::move(*fit);
                return pattern;
            }
        }
    }
    return pattern;  // irregular
}

DifferencePattern classify_differences(const DyadAnalysis& analysis,
                                       double match_tolerance_s) {
    if (analysis.events.size() < 4) {
        DifferencePattern pattern;
        pattern.match_tolerance_s = match_tolerance_s;
        pattern.insufficient_data = true;
        return pattern;
    }
    std::vector<double> diffs;
    diffs.reserve(analysis.events.size() - 1);
    for (size_t i = 1; i < analysis.events.size(); ++i)
        diffs.push_back(analysis.events[i].time - analysis.events[i - 1].time);
    return classify_difference_sequence(diffs, match_tolerance_s);
}

int inversion_partner(int semitones) {
    if (semitones < 0 || semitones > 12)
        throw std::out_of_range("interval must be between 0 and 12 semitones");
    return 12 - semitones;
}

double pattern_similarity(const DyadAnalysis& a, const DyadAnalysis& b, double quantum_s) {
    if (a.events.empty() || b.events.empty())
        throw std::invalid_argument("pattern similarity needs non-empty analyses");
    if (quantum_s <= 0.0) throw std::invalid_argument("quantum must be positive");

    auto quantized = [quantum_s](const DyadAnalysis& d) {
        std::map<long long, long long> bins;
        for (size_t i = 1; i < d.events.size(); ++i) {
            double diff = d.events[i].time - d.events[i - 1].time;
            ++bins[std::llround(diff / quantum_s)];
        }
        return bins;
    };

    auto bins_a = quantized(a);
    auto bins_b = quantized(b);
    if (bins_a.empty() && bins_b.empty()) return 1.0;  // both diff-less
    if (bins_a.empty() || bins_b.empty()) return 0.0;

    long long intersection = 0, unions = 0;
    auto ia = bins_a.begin();
    auto ib = bins_b.begin();
    while (ia != bins_a.end() || ib != bins_b.end()) {
        if (ib == bins_b.end() || (ia != bins_a.end() && ia->first < ib->first)) {
            unions += ia->second;
            ++ia;
        } else if (ia == bins_a.end() || ib->first < ia->first) {
            unions += ib->second;
            ++ib;
        } else {
            intersection += std::min(ia->second, ib->second);
            unions += std::max(ia->second, ib->second);
            ++ia;
            ++ib;
        }
    }
    return static_cast<double>(intersection) / static_cast<double>(unions);
}

}  // namespace sinesync
