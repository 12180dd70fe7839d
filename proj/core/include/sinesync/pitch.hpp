#pragma once

// Note indexing, note names, and the exponential pitch model.
//
// Keys are numbered the way an 88-key piano is: A0 = 1 up to C8 = 88, with
// A4 = 49 sounding at 440 Hz. The exponential model x = c * e^(k*y) maps a
// key number y to a frequency x in Hz; its two constants can be fitted in
// closed form from any two anchor notes.

#include <optional>
#include <string>
#include <string_view>

namespace sinesync {

inline constexpr int kFirstKey = 1;   // A0
inline constexpr int kLastKey = 88;   // C8
inline constexpr int kA4Key = 49;
inline constexpr double kA4Hz = 440.0;

// The twelve pitch classes, sharps-only canonical spelling.
enum class PitchClass { c, cs, d, ds, e, f, fs, g, gs, a, as, b };

// Semitone offset of a pitch class from C (0..11).
int semitone_of(PitchClass pc) noexcept;
PitchClass pitch_class_from_semitone(int semitone);

std::string_view to_string(PitchClass pc) noexcept;

// Accepts sharps ("F#") and flats ("Gb"); flats are canonicalized to the
// enharmonic sharp spelling.
std::optional<PitchClass> parse_pitch_class(std::string_view text) noexcept;

// A key number on the piano. `Range::piano` enforces 1..88; `Range::extended`
// admits any positive integer, for notes beyond the keyboard.
class NoteIndex {
public:
    enum class Range { piano, extended };

    explicit NoteIndex(int value, Range range = Range::piano);

    int value() const noexcept { return value_; }
    Range range() const noexcept { return range_; }

    friend bool operator==(NoteIndex lhs, NoteIndex rhs) noexcept {
        return lhs.value_ == rhs.value_;
    }

private:
    int value_;
    Range range_;
};

// Scientific pitch notation: pitch class plus octave number (octaves start
// at C, so ... B1, C2, C#2 ...).
struct NoteName {
    PitchClass pitch_class;
    int octave;

    friend bool operator==(const NoteName&, const NoteName&) = default;
};

std::string to_string(const NoteName& name);

// Parses e.g. "A4", "F#2", "Bb3". Octave may be 0..9.
std::optional<NoteName> parse_note_name(std::string_view text) noexcept;

// Mutually inverse over the 88-key range; throw std::out_of_range outside it.
NoteIndex index_of(const NoteName& name);
NoteName name_of(NoteIndex key);

// x = c * e^(k*y). Both constants are strictly positive for a valid model;
// consecutive keys differ by the constant factor e^k.
struct ExponentialPitchModel {
    double amplitude_hz = 0.0;    // c
    double rate_per_key = 0.0;    // k

    double frequency_at(NoteIndex key) const;
    double step_ratio() const;    // e^k

    friend bool operator==(const ExponentialPitchModel&,
                           const ExponentialPitchModel&) = default;
};

struct PitchAnchor {
    NoteIndex key;
    double frequency_hz;
};

// Closed-form two-point fit: k = ln(f2/f1)/(y2-y1), c = f1/e^(k*y1).
// Throws std::invalid_argument for equal keys or non-positive frequencies.
ExponentialPitchModel fit_exponential_model(const PitchAnchor& p1, const PitchAnchor& p2);

// The model anchored at A2 = 110 Hz and A#4 = 466.16 Hz, with the constants
// stored as the published 13-digit decimals rather than re-derived values.
// Use fit_exponential_model on the same anchors to compare.
ExponentialPitchModel canonical_pitch_model() noexcept;

// Twelve-tone equal temperament: a4_hz * 2^((y-49)/12).
double equal_temperament_frequency(NoteIndex key, double a4_hz = kA4Hz);

// Equal-temperament frequency rounded to 2 decimals, matching the published
// note-frequency tables (D2 = 73.42, A2 = 110.00, ...). Every dyad, table and
// triad analysis in this library sources its frequencies here.
double analysis_frequency(NoteIndex key);

// Signed relative deviation of the model from equal temperament at `key`:
// (model - equal) / equal.
double model_deviation(const ExponentialPitchModel& model, NoteIndex key);

}  // namespace sinesync
