#include "fusionkit/fusion_engine.hpp"

#include <stdexcept>

namespace fusionkit {

Decomposition Decomposition::single(Word x, BigInt mult) {
    Decomposition d;
    d.add(x, mult);
    return d;
}

void Decomposition::add(const Word& x, const BigInt& mult) {
    if (mult == 0) return;
    if (mult < 0) throw std::invalid_argument("negative multiplicity");
    terms_[x] += mult;
}

BigInt Decomposition::multiplicity(const Word& x) const {
    auto it = terms_.find(x);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void VirtualDecomposition::add(const std::vector<Letter>& seq, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find(seq);
    if (it == terms_.end()) {
        terms_.emplace(seq, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
}

BigInt VirtualDecomposition::coefficient(const std::vector<Letter>& seq) const {
    auto it = terms_.find(seq);
    return it == terms_.end() ? BigInt(0) : it->second;
}

Decomposition fuse_irreducibles(const Word& x, const Word& y, const FusionAlphabet& a) {
    Decomposition out;
    for (const Splitting& s : enumerate_splittings(x, y, a)) {
        Word concat = s.v;
        concat.insert(concat.end(), s.w.begin(), s.w.end());
        out.add(concat, 1);
        if (auto fused = dot(s.v, s.w, a)) out.add(*fused, 1);
    }
    return out;
}

Decomposition fuse_decompositions(const Decomposition& p, const Decomposition& q,
                                  const FusionAlphabet& a) {
    Decomposition out;
    for (const auto& [x, mx] : p.terms())
        for (const auto& [y, my] : q.terms()) {
            BigInt weight = mx * my;
            Decomposition fused = fuse_irreducibles(x, y, a);
            for (const auto& [t, c] : fused.terms()) out.add(t, c * weight);
        }
    return out;
}

FusionContext::FusionContext(FusionAlphabet alphabet) : alphabet_(alphabet) {}

Decomposition FusionContext::basic_tensor(const std::vector<Letter>& indices) const {
    if (alphabet_.kind() != InstanceKind::reflection)
        throw std::invalid_argument("basic_tensor needs the reflection instance");
    if (!alphabet_.word_valid(indices))
        throw std::invalid_argument("invalid index sequence");
    if (indices.empty()) return Decomposition::unit();
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(indices);
        if (it != memo_.end()) return it->second;
    }
    std::vector<Letter> prefix(indices.begin(), indices.end() - 1);
    Decomposition left = basic_tensor(prefix);
    Letter last = indices.back();
    Decomposition factor = Decomposition::single(Word{last});
    if (last == 0) factor.add(Word{}, 1);  // u_0 = 1 + r_0
    Decomposition out = fuse_decompositions(left, factor, alphabet_);
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(indices, std::move(out)).first->second;
}

BigInt FusionContext::trivial_multiplicity(const std::vector<Letter>& indices) const {
    return basic_tensor(indices).multiplicity(Word{});
}

BigInt FusionContext::hom_dimension(const std::vector<Letter>& upper,
                                    const std::vector<Letter>& lower) const {
    // duality route: fold the lower row, reversed and involuted, onto the upper
    std::vector<Letter> folded = upper;
    for (auto it = lower.rbegin(); it != lower.rend(); ++it)
        folded.push_back(alphabet_.involute_letter(*it));
    BigInt via_duality = trivial_multiplicity(folded);

    // pairing route: match irreducible constituents of both rows
    Decomposition top = basic_tensor(upper);
    Decomposition bottom = basic_tensor(lower);
    BigInt via_pairing = 0;
    const auto& small = top.size() <= bottom.size() ? top : bottom;
    const auto& large = top.size() <= bottom.size() ? bottom : top;
    for (const auto& [w, m] : small.terms()) via_pairing += m * large.multiplicity(w);

    if (via_duality != via_pairing)
        throw std::logic_error("hom dimension routes disagree: " + to_decimal(via_duality) +
                               " vs " + to_decimal(via_pairing));
    return via_duality;
}

namespace {

// r over the single-letter tensor factors, before eliminating the deltas:
// expands a word into a signed combination of sequences of length-one words.
void word_to_letter_tensors(const Word& x, const FusionAlphabet& a, const BigInt& coeff,
                            std::vector<Letter>& prefix,
                            std::map<std::vector<Letter>, BigInt, WordLess>& out) {
    if (x.size() <= 1) {
        std::vector<Letter> seq = prefix;
        seq.insert(seq.end(), x.begin(), x.end());
        auto it = out.find(seq);
        if (it == out.end()) {
            out.emplace(std::move(seq), coeff);
        } else {
            it->second += coeff;
            if (it->second == 0) out.erase(it);
        }
        return;
    }
    // peel the first letter: the product of r_{i_1} with the shorter word
    // overshoots by the merged word and, when the boundary letters cancel,
    // by the doubly shortened word
    Word tail(x.begin() + 1, x.end());
    prefix.push_back(x.front());
    word_to_letter_tensors(tail, a, coeff, prefix, out);
    prefix.pop_back();

    Word merged = tail;
    merged.front() = *a.fuse_letters(x[0], x[1]);
    word_to_letter_tensors(merged, a, -coeff, prefix, out);

    if (merged.front() == 0) {
        Word shorter(x.begin() + 2, x.end());
        word_to_letter_tensors(shorter, a, -coeff, prefix, out);
    }
}

}  // namespace

VirtualDecomposition irreducible_in_tensor_basis(const Word& x, const FusionAlphabet& a) {
    if (a.kind() != InstanceKind::reflection)
        throw std::invalid_argument("conversion needs the reflection instance");
    if (!a.word_valid(x)) throw std::invalid_argument("invalid word");

    std::map<std::vector<Letter>, BigInt, WordLess> letter_tensors;
    std::vector<Letter> prefix;
    word_to_letter_tensors(x, a, BigInt(1), prefix, letter_tensors);

    // substitute r_0 = u_0 - 1 factorwise
    VirtualDecomposition out;
    for (const auto& [seq, coeff] : letter_tensors) {
        std::vector<std::size_t> zero_positions;
        for (std::size_t i = 0; i < seq.size(); ++i)
            if (seq[i] == 0) zero_positions.push_back(i);
        const std::size_t subsets = std::size_t(1) << zero_positions.size();
        for (std::size_t mask = 0; mask < subsets; ++mask) {
            std::vector<Letter> kept;
            kept.reserve(seq.size());
            int dropped = 0;
            for (std::size_t i = 0, zi = 0; i < seq.size(); ++i) {
                if (zi < zero_positions.size() && zero_positions[zi] == i) {
                    if (mask & (std::size_t(1) << zi)) {
                        ++dropped;
                        ++zi;
                        continue;
                    }
                    ++zi;
                }
                kept.push_back(seq[i]);
            }
            out.add(kept, dropped % 2 == 0 ? coeff : -coeff);
        }
    }
    return out;
}

VirtualDecomposition expand_through_basic_tensor(const VirtualDecomposition& v,
                                                 const FusionContext& ctx) {
    VirtualDecomposition out;
    for (const auto& [seq, coeff] : v.terms()) {
        Decomposition expanded = ctx.basic_tensor(seq);
        for (const auto& [w, m] : expanded.terms()) out.add(w, coeff * m);
    }
    return out;
}

CrossCheckReport cross_check_formulations(const Word& x, const Word& y,
                                          const FusionAlphabet& a) {
    if (a.kind() != InstanceKind::reflection)
        throw std::invalid_argument("cross check needs the reflection instance");
    CrossCheckReport report;

    Decomposition engine = fuse_irreducibles(x, y, a);
    std::map<MForm, BigInt> relabeled;
    std::map<MForm, Word> provenance;
    for (const auto& [w, m] : engine.terms()) {
        MForm f = to_mform(w);
        auto [it, inserted] = provenance.emplace(f, w);
        if (!inserted && it->second != w) {
            report.relabeling_collision = true;
            report.detail = "words " + format_word(it->second) + " and " + format_word(w) +
                            " share the normal form " + f.to_string();
        }
        relabeled[f] += m;
    }

    MFormDecomposition alt = m_fuse(to_mform(x), to_mform(y), a.modulus());
    report.engine_terms = relabeled.size();
    report.mform_terms = alt.size();
    report.match = true;
    for (const auto& [f, m] : relabeled) {
        auto it = alt.find(f);
        BigInt other = it == alt.end() ? BigInt(0) : it->second;
        if (other != m) {
            report.match = false;
            if (report.detail.empty())
                report.detail = "term " + f.to_string() + ": engine " + to_decimal(m) +
                                ", normal form " + to_decimal(other);
            break;
        }
    }
    if (report.match)
        for (const auto& [f, m] : alt) {
            if (relabeled.find(f) == relabeled.end()) {
                report.match = false;
                if (report.detail.empty())
                    report.detail =
                        "term " + f.to_string() + " only in the normal-form product";
                break;
            }
        }
    return report;
}

}  // namespace fusionkit
