#include "fusionkit/mform.hpp"

#include <stdexcept>

namespace fusionkit {

MForm MForm::a_power(long e) {
    if (e < 0) throw std::invalid_argument("negative a-exponent");
    MForm out;
    out.append_a(e);
    return out;
}

MForm MForm::from_runs(std::vector<Run> runs) {
    for (std::size_t i = 0; i < runs.size(); ++i) {
        bool bad = runs[i].exp <= 0 && runs[i].kind == 'a';
        bad = bad || (runs[i].kind == 'z' && runs[i].exp == 0);
        bad = bad || (i + 1 < runs.size() && runs[i].kind == runs[i + 1].kind);
        if (bad) throw std::invalid_argument("run list is not normalized");
    }
    MForm out;
    out.runs_ = std::move(runs);
    return out;
}

void MForm::append_a(long e) {
    if (e < 0) throw std::invalid_argument("negative a-exponent");
    if (e == 0) return;
    if (!runs_.empty() && runs_.back().kind == 'a')
        runs_.back().exp += e;
    else
        runs_.push_back(Run{'a', e});
}

void MForm::append_z(long e, const ModulusSpec& m) {
    e = normalize_letter(e, m);
    if (e == 0) return;
    if (!runs_.empty() && runs_.back().kind == 'z') {
        // merge into the trailing z-run; a vanished run simply disappears,
        // later a-appends merge with the a-run it exposes
        long merged = normalize_letter(runs_.back().exp + e, m);
        runs_.pop_back();
        if (merged != 0) runs_.push_back(Run{'z', merged});
    } else {
        runs_.push_back(Run{'z', e});
    }
}

void MForm::append(const MForm& other, const ModulusSpec& m) {
    for (const Run& r : other.runs_) {
        if (r.kind == 'a')
            append_a(r.exp);
        else
            append_z(r.exp, m);
    }
}

bool MForm::in_aza_submonoid() const {
    if (runs_.empty()) return true;
    return runs_.front().kind == 'a' && runs_.back().kind == 'a';
}

std::vector<long> MForm::a_exponents() const {
    std::vector<long> out;
    for (const Run& r : runs_)
        if (r.kind == 'a') out.push_back(r.exp);
    return out;
}

std::string MForm::to_string() const {
    if (runs_.empty()) return "a^0";
    std::string out;
    for (const Run& r : runs_) {
        if (!out.empty()) out += ' ';
        out += r.kind;
        if (r.exp != 1) out += '^' + std::to_string(r.exp);
    }
    return out;
}

MForm to_mform(const Word& x) {
    ModulusSpec free = ModulusSpec::infinite();  // letters are already canonical
    MForm out;
    for (Letter i : x) {
        out.append_a(1);
        out.append_z(i, free);
        out.append_a(1);
    }
    return out;
}

namespace {

// p = v a z^i with z^i the whole trailing z-run (possibly empty).
std::pair<MForm, long> split_right(const MForm& p) {
    std::vector<MForm::Run> runs = p.runs();
    long zexp = 0;
    if (!runs.empty() && runs.back().kind == 'z') {
        zexp = runs.back().exp;
        runs.pop_back();
    }
    if (runs.empty() || runs.back().kind != 'a')
        throw std::logic_error("normal-form fusion peeled past the last a");
    if (--runs.back().exp == 0) runs.pop_back();
    return {MForm::from_runs(std::move(runs)), zexp};
}

// q = z^j a w with z^j the whole leading z-run (possibly empty).
std::pair<long, MForm> split_left(const MForm& q) {
    std::vector<MForm::Run> runs = q.runs();
    long zexp = 0;
    std::size_t i = 0;
    if (i < runs.size() && runs[i].kind == 'z') {
        zexp = runs[i].exp;
        ++i;
    }
    if (i >= runs.size() || runs[i].kind != 'a')
        throw std::logic_error("normal-form fusion peeled past the first a");
    if (--runs[i].exp == 0) ++i;
    return {zexp, MForm::from_runs({runs.begin() + static_cast<std::ptrdiff_t>(i), runs.end()})};
}

void m_fuse_rec(const MForm& p, const MForm& q, const ModulusSpec& m,
                MFormDecomposition& out, const BigInt& weight) {
    if (p.is_unit()) {
        out[q] += weight;
        return;
    }
    if (q.is_unit()) {
        out[p] += weight;
        return;
    }
    auto [v, i] = split_right(p);
    auto [j, w] = split_left(q);
    MForm joined = v;
    joined.append_a(1);
    joined.append_z(i + j, m);
    joined.append_a(1);
    joined.append(w, m);
    out[joined] += weight;
    if (normalize_letter(i + j, m) == 0) m_fuse_rec(v, w, m, out, weight);
}

}  // namespace

MFormDecomposition m_fuse(const MForm& p, const MForm& q, const ModulusSpec& m) {
    if (!p.in_aza_submonoid() || !q.in_aza_submonoid())
        throw std::invalid_argument("m_fuse input lies outside the aza-submonoid");
    MFormDecomposition out;
    m_fuse_rec(p, q, m, out, BigInt(1));
    return out;
}

}  // namespace fusionkit
