#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fusionkit {

// A letter of the fusion alphabet. Stored as a canonical residue in
// {0,...,s-1} when the modulus is finite, and as a plain integer when it
// is infinite.
using Letter = long;

// Order of the cyclic letter group: finite of order s >= 1, or infinite.
struct ModulusSpec {
    bool finite = true;
    long order = 1;  // meaningful only when finite

    static ModulusSpec finite_order(long s);
    static ModulusSpec infinite();

    bool operator==(const ModulusSpec& o) const {
        return finite == o.finite && (!finite || order == o.order);
    }
};

Letter normalize_letter(long raw, const ModulusSpec& m);

// A word labels an irreducible; the empty word labels the trivial one.
using Word = std::vector<Letter>;

// The three shipped alphabet instances. "ahs" is the reflection family
// (letters Z_s, involution r -> -r, letter fusion r + t); "ao" has a single
// self-involutive letter and empty fusion; "au" has letters {0,1} with
// involution r -> 1-r and empty fusion.
enum class InstanceKind { reflection, orthogonal, unitary };

class FusionAlphabet {
  public:
    static FusionAlphabet reflection(ModulusSpec m);
    static FusionAlphabet orthogonal();
    static FusionAlphabet unitary();
    static FusionAlphabet from_name(std::string_view name, ModulusSpec m);

    InstanceKind kind() const { return kind_; }
    const ModulusSpec& modulus() const { return modulus_; }
    std::string instance_name() const;  // "ahs" | "ao" | "au"

    bool letter_valid(Letter v) const;
    bool word_valid(const Word& x) const;
    Letter involute_letter(Letter v) const;
    std::optional<Letter> fuse_letters(Letter a, Letter b) const;

  private:
    FusionAlphabet(InstanceKind kind, ModulusSpec m) : kind_(kind), modulus_(m) {}
    InstanceKind kind_;
    ModulusSpec modulus_;  // used by the reflection instance
};

// Reverse the word and involute every letter. An involution on words.
Word involute(const Word& x, const FusionAlphabet& a);

// Boundary fusion: concatenate with the touching letters fused into one.
// Empty when either word is empty or the letter fusion is empty.
std::optional<Word> dot(const Word& x, const Word& y, const FusionAlphabet& a);

struct Splitting {
    Word v, z, w;  // x = vz and y = involute(z)w
    bool operator==(const Splitting&) const = default;
};

// All splittings x = vz, y = involute(z) w, ordered by increasing |z|.
// The |z| = 0 splitting is always present.
std::vector<Splitting> enumerate_splittings(const Word& x, const Word& y,
                                            const FusionAlphabet& a);

// Text formats used by the CLI and the JSON schema: words are
// comma-separated integers ("" is the empty word), the modulus is a
// positive integer or "inf".
std::string format_word(const Word& x);
Word parse_word(std::string_view text, const FusionAlphabet& a);
std::string format_modulus(const ModulusSpec& m);
ModulusSpec parse_modulus(std::string_view text);

}  // namespace fusionkit
