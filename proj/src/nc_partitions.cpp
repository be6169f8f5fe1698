#include "fusionkit/nc_partitions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

#include "fusionkit/bigint.hpp"

namespace fusionkit {

void canonicalize(SetPartition& p) {
    std::map<int, int> seen;
    for (int& b : p.block_of) {
        auto [it, inserted] = seen.emplace(b, static_cast<int>(seen.size()));
        b = it->second;
    }
    p.block_count = static_cast<int>(seen.size());
}

bool is_noncrossing(const SetPartition& p) {
    const int m = p.points();
    const auto& bl = p.block_of;
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            if (bl[a] == bl[b]) continue;
            for (int c = b + 1; c < m; ++c) {
                if (bl[c] != bl[a]) continue;
                for (int d = c + 1; d < m; ++d)
                    if (bl[d] == bl[b]) return false;
            }
        }
    return true;
}

void for_each_nc(int k, int l, const std::function<void(const SetPartition&)>& fn,
                 const Limits& limits) {
    if (k < 0 || l < 0) throw std::invalid_argument("negative point count");
    const int m = k + l;
    if (m > limits.max_points)
        throw LimitError("noncrossing enumeration over " + std::to_string(m) +
                         " points exceeds the limit of " + std::to_string(limits.max_points));
    SetPartition p;
    p.upper = k;
    p.lower = l;
    p.block_of.assign(m, -1);
    if (m == 0) {
        fn(p);
        return;
    }
    // Scan positions left to right keeping the stack of blocks that may
    // still accept points. A point either opens a new block or joins an
    // open one; joining a block below the top permanently closes the
    // blocks nested above it. Every noncrossing partition arises from
    // exactly one choice sequence, and block ids are assigned at first
    // appearance, so the output is already canonical.
    std::vector<int> open;
    std::function<void(int)> rec = [&](int pos) {
        if (pos == m) {
            fn(p);
            return;
        }
        p.block_of[pos] = p.block_count;
        open.push_back(p.block_count);
        ++p.block_count;
        rec(pos + 1);
        --p.block_count;
        open.pop_back();
        for (int depth = static_cast<int>(open.size()) - 1; depth >= 0; --depth) {
            std::vector<int> closed(open.begin() + depth + 1, open.end());
            open.resize(depth + 1);
            p.block_of[pos] = open[depth];
            rec(pos + 1);
            open.insert(open.end(), closed.begin(), closed.end());
        }
        p.block_of[pos] = -1;
    };
    rec(0);
}

std::vector<SetPartition> enumerate_nc(int k, int l, const Limits& limits) {
    std::vector<SetPartition> out;
    for_each_nc(k, l, [&](const SetPartition& p) { out.push_back(p); }, limits);
    return out;
}

bool satisfies_label_condition(const SetPartition& p, const LabeledTuple& t,
                               const ModulusSpec& m) {
    if (static_cast<int>(t.upper.size()) != p.upper ||
        static_cast<int>(t.lower.size()) != p.lower)
        throw std::invalid_argument("label tuple shape does not match the partition");
    const int n = p.points();
    if (m.finite) {
        const long s = m.order;
        std::vector<long> diff(p.block_count, 0);
        for (int pos = 0; pos < n; ++pos) {
            long lab;
            if (pos < p.upper) {
                lab = normalize_letter(t.upper[pos], m);
            } else {
                int point = p.lower - (pos - p.upper);  // 1-based lower point
                lab = s - normalize_letter(t.lower[point - 1], m);
            }
            int b = p.block_of[pos];
            diff[b] = (diff[b] + lab) % s;
        }
        return std::all_of(diff.begin(), diff.end(), [](long d) { return d == 0; });
    }
    std::vector<BigInt> diff(p.block_count, BigInt(0));
    for (int pos = 0; pos < n; ++pos) {
        int b = p.block_of[pos];
        if (pos < p.upper) {
            diff[b] += t.upper[pos];
        } else {
            int point = p.lower - (pos - p.upper);
            diff[b] -= t.lower[point - 1];
        }
    }
    return std::all_of(diff.begin(), diff.end(), [](const BigInt& d) { return d == 0; });
}

long count_nc_s(const LabeledTuple& t, const ModulusSpec& m, const Limits& limits) {
    long count = 0;
    for_each_nc(static_cast<int>(t.upper.size()), static_cast<int>(t.lower.size()),
                [&](const SetPartition& p) {
                    if (satisfies_label_condition(p, t, m)) ++count;
                },
                limits);
    return count;
}

SetPartition frobenius_rotate(const SetPartition& p) {
    SetPartition out = p;
    out.lower = p.points();
    out.upper = 0;
    return out;
}

LabeledTuple transport_labels(const LabeledTuple& t, const ModulusSpec& m) {
    LabeledTuple out;
    out.lower.reserve(t.upper.size() + t.lower.size());
    for (Letter j : t.lower)
        out.lower.push_back(m.finite ? normalize_letter(-j, m) : -j);
    for (auto it = t.upper.rbegin(); it != t.upper.rend(); ++it) out.lower.push_back(*it);
    return out;
}

SetPartition one_block(int k) {
    if (k < 1) throw std::invalid_argument("one_block needs k >= 1");
    SetPartition p;
    p.upper = 0;
    p.lower = k;
    p.block_of.assign(k, 0);
    p.block_count = 1;
    return p;
}

std::string format_partition(const SetPartition& p) {
    std::vector<std::vector<int>> blocks(p.block_count);
    for (int pos = 0; pos < p.points(); ++pos) blocks[p.block_of[pos]].push_back(pos);
    std::string out = "[";
    for (int b = 0; b < p.block_count; ++b) {
        if (b) out += ',';
        out += '[';
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i) out += ',';
            int pos = blocks[b][i];
            if (pos < p.upper) {
                out += std::to_string(pos + 1);
            } else {
                out += std::to_string(p.lower - (pos - p.upper));
                out += '\'';
            }
        }
        out += ']';
    }
    out += ']';
    return out;
}

namespace {

struct PointName {
    int number;
    bool primed;
};

std::vector<std::vector<PointName>> parse_block_list(std::string_view text) {
    std::vector<std::vector<PointName>> blocks;
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (i >= text.size() || text[i] != c)
            throw std::invalid_argument("bad partition text: expected '" + std::string(1, c) +
                                        "' in '" + std::string(text) + "'");
        ++i;
    };
    expect('[');
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            expect('[');
            std::vector<PointName> block;
            skip_ws();
            while (i < text.size() && text[i] != ']') {
                skip_ws();
                int value = 0;
                auto [ptr, ec] =
                    std::from_chars(text.data() + i, text.data() + text.size(), value);
                if (ec != std::errc{} || value < 1)
                    throw std::invalid_argument("bad point in partition text");
                i = static_cast<std::size_t>(ptr - text.data());
                bool primed = i < text.size() && text[i] == '\'';
                if (primed) ++i;
                block.push_back(PointName{value, primed});
                skip_ws();
                if (i < text.size() && text[i] == ',') ++i;
            }
            expect(']');
            blocks.push_back(std::move(block));
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            break;
        }
        expect(']');
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing characters in partition text");
    return blocks;
}

}  // namespace

SetPartition parse_partition(std::string_view text) {
    auto blocks = parse_block_list(text);
    int k = 0, l = 0;
    for (const auto& block : blocks)
        for (const auto& pt : block) (pt.primed ? l : k) = std::max(pt.primed ? l : k, pt.number);
    SetPartition p;
    p.upper = k;
    p.lower = l;
    p.block_of.assign(k + l, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (const auto& pt : blocks[b]) {
            int pos = pt.primed ? p.lower_pos(pt.number) : p.upper_pos(pt.number);
            if (p.block_of[pos] != -1)
                throw std::invalid_argument("point repeated in partition text");
            p.block_of[pos] = static_cast<int>(b);
        }
    for (int b : p.block_of)
        if (b == -1) throw std::invalid_argument("partition text misses a point");
    canonicalize(p);
    return p;
}

}  // namespace fusionkit
