#pragma once

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "fusionkit/bigint.hpp"
#include "fusionkit/mform.hpp"
#include "fusionkit/word_algebra.hpp"

namespace fusionkit {

struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// A direct sum of irreducibles: finite word -> multiplicity map with
// strictly positive multiplicities, kept in lexicographic word order for
// deterministic serialization.
class Decomposition {
  public:
    using Terms = std::map<Word, BigInt, WordLess>;

    static Decomposition unit() { return single(Word{}); }
    static Decomposition single(Word x, BigInt mult = BigInt(1));

    void add(const Word& x, const BigInt& mult);
    BigInt multiplicity(const Word& x) const;
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    bool operator==(const Decomposition&) const = default;

  private:
    Terms terms_;
};

// Signed combination of tensor-index sequences u_{i_1} x ... x u_{i_l};
// realizes conversion coefficients between the irreducible and tensor bases.
class VirtualDecomposition {
  public:
    using Terms = std::map<std::vector<Letter>, BigInt, WordLess>;

    void add(const std::vector<Letter>& seq, const BigInt& coeff);
    BigInt coefficient(const std::vector<Letter>& seq) const;
    const Terms& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }

    bool operator==(const VirtualDecomposition&) const = default;

  private:
    Terms terms_;
};

// r_x (x) r_y expanded over the splittings x = vz, y = involute(z) w:
// each splitting contributes the concatenation vw, plus the boundary
// fusion v.w when it is defined.
Decomposition fuse_irreducibles(const Word& x, const Word& y, const FusionAlphabet& a);

// Bilinear extension of fuse_irreducibles.
Decomposition fuse_decompositions(const Decomposition& p, const Decomposition& q,
                                  const FusionAlphabet& a);

// Holds the alphabet together with the prefix-keyed memo for iterated
// products of the basic objects u_i = r_i + [i == 0] 1. The memo is
// guarded, so one context can serve concurrent callers; results never
// depend on interleaving.
class FusionContext {
  public:
    explicit FusionContext(FusionAlphabet alphabet);

    const FusionAlphabet& alphabet() const { return alphabet_; }

    // Decomposition of u_{i_1} x ... x u_{i_k}. Reflection instance only.
    Decomposition basic_tensor(const std::vector<Letter>& indices) const;

    // Multiplicity of the trivial object in basic_tensor(indices).
    BigInt trivial_multiplicity(const std::vector<Letter>& indices) const;

    // dim Hom(u_upper, u_lower), computed two ways (duality tuple and
    // term-wise pairing) which are asserted equal.
    BigInt hom_dimension(const std::vector<Letter>& upper,
                         const std::vector<Letter>& lower) const;

  private:
    FusionAlphabet alphabet_;
    mutable std::mutex mu_;
    mutable std::map<std::vector<Letter>, Decomposition, WordLess> memo_;
};

// r_x written as a signed combination in the tensor basis; expanding the
// result through basic_tensor recovers exactly {x: 1}. Reflection only.
VirtualDecomposition irreducible_in_tensor_basis(const Word& x, const FusionAlphabet& a);

// Signed expansion of a virtual decomposition through basic_tensor.
VirtualDecomposition expand_through_basic_tensor(const VirtualDecomposition& v,
                                                 const FusionContext& ctx);

struct CrossCheckReport {
    bool match = false;                // term-by-term agreement under the relabeling
    bool relabeling_collision = false; // two distinct words mapped to one normal form
    std::size_t engine_terms = 0;
    std::size_t mform_terms = 0;
    std::string detail;  // first discrepancy, empty when match
    bool ok() const { return match && !relabeling_collision; }
};

// Computes r_x (x) r_y with the word engine and with the normal-form rule,
// and compares them under the word -> normal form relabeling.
CrossCheckReport cross_check_formulations(const Word& x, const Word& y,
                                          const FusionAlphabet& a);

}  // namespace fusionkit
