#include "sinesync/pitch.hpp"

#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace sinesync {

namespace {

constexpr std::array<std::string_view, 12> kPitchNames = {
    "C", "C#", "D", "D#", "E", "F", "F#", "G", "G#", "A", "A#", "B"};

// Key 1 is A0; key 49 is A4. Octaves bump at C.
constexpr int kA0Midi = 21;  // MIDI number of A0, used as the fixed origin

int midi_of(const NoteName& name) {
    return (name.octave + 1) * 12 + semitone_of(name.pitch_class);
}

}  // namespace

int semitone_of(PitchClass pc) noexcept { return static_cast<int>(pc); }

PitchClass pitch_class_from_semitone(int semitone) {
    int wrapped = ((semitone % 12) + 12) % 12;
    return static_cast<PitchClass>(wrapped);
}

std::string_view to_string(PitchClass pc) noexcept {
    return kPitchNames[static_cast<size_t>(semitone_of(pc))];
}

std::optional<PitchClass> parse_pitch_class(std::string_view text) noexcept {
    if (text.empty()) return std::nullopt;
    int base;
    switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'C': base = 0; break;
        case 'D': base = 2; break;
        case 'E': base = 4; break;
        case 'F': base = 5; break;
        case 'G': base = 7; break;
        case 'A': base = 9; break;
        case 'B': base = 11; break;
        default: return std::nullopt;
    }
    if (text.size() == 1) return pitch_class_from_semitone(base);
    if (text.size() == 2) {
        if (text[1] == '#') return pitch_class_from_semitone(base + 1);
        if (text[1] == 'b') return pitch_class_from_semitone(base - 1);
    }
    return std::nullopt;
}

NoteIndex::NoteIndex(int value, Range range) : value_(value), range_(range) {
    if (range == Range::piano) {
        if (value < kFirstKey || value > kLastKey)
            throw std::out_of_range("note index " + std::to_string(value) +
                                    " outside the 88-key range");
    } else if (value < 1) {
        throw std::out_of_range("note index must be positive");
    }
}

std::string to_string(const NoteName& name) {
    return std::string(to_string(name.pitch_class)) + std::to_string(name.octave);
}

std::optional<NoteName> parse_note_name(std::string_view text) noexcept {
    if (text.size() < 2) return std::nullopt;
    size_t split = (text.size() >= 2 && (text[1] == '#' || text[1] == 'b')) ? 2 : 1;
    if (split >= text.size()) return std::nullopt;
    auto pc = parse_pitch_class(text.substr(0, split));
    if (!pc) return std::nullopt;
    std::string_view oct = text.substr(split);
    if (oct.empty() || oct.size() > 1 || !std::isdigit(static_cast<unsigned char>(oct[0])))
        return std::nullopt;
    return NoteName{*pc, oct[0] - '0'};
}

NoteIndex index_of(const NoteName& name) {
    int key = midi_of(name) - kA0Midi + 1;
    if (key < kFirstKey || key > kLastKey)
        throw std::out_of_range("note " + to_string(name) + " is outside the 88 keys");
    return NoteIndex(key);
}

NoteName name_of(NoteIndex key) {
    int midi = key.value() + kA0Midi - 1;
    return NoteName{pitch_class_from_semitone(midi % 12), midi / 12 - 1};
}

double ExponentialPitchModel::frequency_at(NoteIndex key) const {
    return amplitude_hz * std::exp(rate_per_key * key.value());
}

double ExponentialPitchModel::step_ratio() const { return std::exp(rate_per_key); }

ExponentialPitchModel fit_exponential_model(const PitchAnchor& p1, const PitchAnchor& p2) {
    if (p1.key.value() == p2.key.value())
        throw std::invalid_argument("anchors must use distinct note indices");
    if (p1.frequency_hz <= 0.0 || p2.frequency_hz <= 0.0)
        throw std::invalid_argument("anchor frequencies must be positive");
    double k = std::log(p2.frequency_hz / p1.frequency_hz) /
               static_cast<double>(p2.key.value() - p1.key.value());
    double c = p1.frequency_hz / std::exp(k * p1.key.value());
    return ExponentialPitchModel{c, k};
}

ExponentialPitchModel canonical_pitch_model() noexcept {
    return ExponentialPitchModel{25.956753046164, 0.0577619426421};
}

double equal_temperament_frequency(NoteIndex key, double a4_hz) {
    if (a4_hz <= 0.0) throw std::invalid_argument("reference pitch must be positive");
    return a4_hz * std::pow(2.0, (key.value() - kA4Key) / 12.0);
}

double analysis_frequency(NoteIndex key) {
    return std::round(equal_temperament_frequency(key) * 100.0) / 100.0;
}

double model_deviation(const ExponentialPitchModel& model, NoteIndex key) {
    double reference = equal_temperament_frequency(key);
    return (model.frequency_at(key) - reference) / reference;
}

}  // namespace sinesync
