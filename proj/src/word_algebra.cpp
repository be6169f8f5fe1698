#include "fusionkit/word_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace fusionkit {

namespace {

// Guard: letter arithmetic below assumes residues fit comfortably in 64 bits.
constexpr long kMaxOrder = 1'000'000'000'000LL;

long parse_int(std::string_view text) {
    long value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("bad integer: '" + std::string(text) + "'");
    return value;
}

std::string_view trimmed(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

}  // namespace

ModulusSpec ModulusSpec::finite_order(long s) {
    if (s < 1) throw std::invalid_argument("modulus order must be >= 1");
    if (s > kMaxOrder) throw std::invalid_argument("modulus order too large");
    return ModulusSpec{true, s};
}

ModulusSpec ModulusSpec::infinite() { return ModulusSpec{false, 0}; }

Letter normalize_letter(long raw, const ModulusSpec& m) {
    if (!m.finite) return raw;
    long r = raw % m.order;
    return r < 0 ? r + m.order : r;
}

FusionAlphabet FusionAlphabet::reflection(ModulusSpec m) {
    return FusionAlphabet(InstanceKind::reflection, m);
}

FusionAlphabet FusionAlphabet::orthogonal() {
    return FusionAlphabet(InstanceKind::orthogonal, ModulusSpec::finite_order(1));
}

FusionAlphabet FusionAlphabet::unitary() {
    return FusionAlphabet(InstanceKind::unitary, ModulusSpec::finite_order(2));
}

FusionAlphabet FusionAlphabet::from_name(std::string_view name, ModulusSpec m) {
    if (name == "ahs") return reflection(m);
    if (name == "ao") return orthogonal();
    if (name == "au") return unitary();
    throw std::invalid_argument("unknown instance: '" + std::string(name) + "'");
}

std::string FusionAlphabet::instance_name() const {
    switch (kind_) {
        case InstanceKind::reflection: return "ahs";
        case InstanceKind::orthogonal: return "ao";
        case InstanceKind::unitary: return "au";
    }
    return "?";
}

bool FusionAlphabet::letter_valid(Letter v) const {
    switch (kind_) {
        case InstanceKind::reflection:
            return !modulus_.finite || (v >= 0 && v < modulus_.order);
        case InstanceKind::orthogonal:
            return v == 1;
        case InstanceKind::unitary:
            return v == 0 || v == 1;
    }
    return false;
}

bool FusionAlphabet::word_valid(const Word& x) const {
    return std::all_of(x.begin(), x.end(), [&](Letter v) { return letter_valid(v); });
}

Letter FusionAlphabet::involute_letter(Letter v) const {
    switch (kind_) {
        case InstanceKind::reflection: return normalize_letter(-v, modulus_);
        case InstanceKind::orthogonal: return v;
        case InstanceKind::unitary: return 1 - v;
    }
    return v;
}

std::optional<Letter> FusionAlphabet::fuse_letters(Letter a, Letter b) const {
    if (kind_ != InstanceKind::reflection) return std::nullopt;
    return normalize_letter(a + b, modulus_);
}

Word involute(const Word& x, const FusionAlphabet& a) {
    Word out;
    out.reserve(x.size());
    for (auto it = x.rbegin(); it != x.rend(); ++it) out.push_back(a.involute_letter(*it));
    return out;
}

std::optional<Word> dot(const Word& x, const Word& y, const FusionAlphabet& a) {
    if (x.empty() || y.empty()) return std::nullopt;
    auto fused = a.fuse_letters(x.back(), y.front());
    if (!fused) return std::nullopt;
    Word out(x.begin(), x.end() - 1);
    out.push_back(*fused);
    out.insert(out.end(), y.begin() + 1, y.end());
    return out;
}

std::vector<Splitting> enumerate_splittings(const Word& x, const Word& y,
                                            const FusionAlphabet& a) {
    std::vector<Splitting> out;
    const std::size_t zmax = std::min(x.size(), y.size());
    for (std::size_t zlen = 0; zlen <= zmax; ++zlen) {
        Word z(x.end() - static_cast<std::ptrdiff_t>(zlen), x.end());
        Word zbar = involute(z, a);
        if (!std::equal(zbar.begin(), zbar.end(), y.begin())) continue;
        out.push_back(Splitting{
            Word(x.begin(), x.end() - static_cast<std::ptrdiff_t>(zlen)),
            std::move(z),
            Word(y.begin() + static_cast<std::ptrdiff_t>(zlen), y.end()),
        });
    }
    return out;
}

std::string format_word(const Word& x) {
    std::string out;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(x[i]);
    }
    return out;
}

Word parse_word(std::string_view text, const FusionAlphabet& a) {
    text = trimmed(text);
    Word out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = trimmed(text.substr(
            start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        long raw = parse_int(piece);
        Letter v = a.kind() == InstanceKind::reflection ? normalize_letter(raw, a.modulus()) : raw;
        if (!a.letter_valid(v))
            throw std::invalid_argument("letter " + std::string(piece) + " not valid for instance " +
                                        a.instance_name());
        out.push_back(v);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string format_modulus(const ModulusSpec& m) {
    return m.finite ? std::to_string(m.order) : std::string("inf");
}

ModulusSpec parse_modulus(std::string_view text) {
    text = trimmed(text);
    if (text == "inf" || text == "infinity") return ModulusSpec::infinite();
    return ModulusSpec::finite_order(parse_int(text));
}

}  // namespace fusionkit
