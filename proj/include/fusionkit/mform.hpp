#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "fusionkit/bigint.hpp"
#include "fusionkit/word_algebra.hpp"

namespace fusionkit {

// Normal form in the two-generator monoid with a z of order s: an
// alternating product of a-runs and z-runs. z-exponents are canonical
// nonzero residues (z^0 is elided and neighbouring a-runs merge), so the
// run list is a normal form and equality is plain comparison. The unit is
// the empty run list, printed "a^0".
class MForm {
  public:
    struct Run {
        char kind;      // 'a' or 'z'
        long exp;  // > 0 for 'a'; nonzero canonical residue for 'z'
        bool operator==(const Run&) const = default;
        auto operator<=>(const Run&) const = default;
    };

    static MForm unit() { return MForm{}; }
    static MForm a_power(long e);
    // Adopts a run list that is already normalized (alternating kinds,
    // positive a-exponents, nonzero z-exponents).
    static MForm from_runs(std::vector<Run> runs);

    void append_a(long e);
    void append_z(long e, const ModulusSpec& m);
    void append(const MForm& other, const ModulusSpec& m);

    const std::vector<Run>& runs() const { return runs_; }
    bool is_unit() const { return runs_.empty(); }
    // True when the form is the unit, a pure a-power, or begins and ends
    // with an a-run: the image of the word labelling.
    bool in_aza_submonoid() const;
    // Exponents of the a-runs in order; the dimension of a word is the
    // product of the corresponding Chebyshev-type sequence values.
    std::vector<long> a_exponents() const;

    std::string to_string() const;

    bool operator==(const MForm&) const = default;
    bool operator<(const MForm& o) const { return runs_ < o.runs_; }

  private:
    std::vector<Run> runs_;
};

// The word labelling: each letter i contributes a z^i a with z^0 elided.
MForm to_mform(const Word& x);

using MFormDecomposition = std::map<MForm, BigInt>;

// Normal-form fusion: peel one a from the right of p and one from the left
// of q, join the freed z-runs, and recurse on the remainders when the
// joined exponent vanishes mod s. Inputs must lie in the aza-submonoid
// (or be the unit).
MFormDecomposition m_fuse(const MForm& p, const MForm& q, const ModulusSpec& m);

}  // namespace fusionkit
