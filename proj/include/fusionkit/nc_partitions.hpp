#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fusionkit/limits.hpp"
#include "fusionkit/word_algebra.hpp"

namespace fusionkit {

// A partition of k upper and l lower points. Points are kept in the linear
// order used for the crossing predicate: upper points 1..k left to right,
// then lower points l..1 (the lower row is traversed right to left). A
// partition therefore stores one block id per linear position; ids are
// canonical, numbered by first appearance in that order, which makes
// equality a plain vector comparison.
struct SetPartition {
    int upper = 0;
    int lower = 0;
    std::vector<int> block_of;  // size upper + lower
    int block_count = 0;

    int points() const { return upper + lower; }

    // linear position of upper point t (1-based) is t-1;
    // linear position of lower point t (1-based) is upper + (lower - t)
    int upper_pos(int t) const { return t - 1; }
    int lower_pos(int t) const { return upper + (lower - t); }

    bool operator==(const SetPartition&) const = default;
    bool operator<(const SetPartition& o) const {
        if (upper != o.upper) return upper < o.upper;
        if (lower != o.lower) return lower < o.lower;
        return block_of < o.block_of;
    }
};

// Renumbers block ids by first appearance; fixes block_count.
void canonicalize(SetPartition& p);

bool is_noncrossing(const SetPartition& p);

// Streams every noncrossing partition of the (k,l) point set exactly once,
// in a fixed order, without materializing the list.
void for_each_nc(int k, int l, const std::function<void(const SetPartition&)>& fn,
                 const Limits& limits = {});

std::vector<SetPartition> enumerate_nc(int k, int l, const Limits& limits = {});

// Upper labels i_1..i_k and lower labels j_1..j_l, both read left to right.
struct LabeledTuple {
    std::vector<Letter> upper;
    std::vector<Letter> lower;
};

// True iff in every block the sum of upper labels equals the sum of lower
// labels modulo s (exact equality when the modulus is infinite).
bool satisfies_label_condition(const SetPartition& p, const LabeledTuple& t,
                               const ModulusSpec& m);

// Number of noncrossing partitions of the tuple's shape passing the label
// condition.
long count_nc_s(const LabeledTuple& t, const ModulusSpec& m, const Limits& limits = {});

// Re-indexes a (k,l) partition as a one-row (0,k+l) partition, preserving
// blocks. The label condition is preserved when the lower labels are negated
// and transported positionally; see transport_labels.
SetPartition frobenius_rotate(const SetPartition& p);

// One-row tuple matching frobenius_rotate(p): position of upper point t
// keeps label i_t, position of lower point t gets -j_t.
LabeledTuple transport_labels(const LabeledTuple& t, const ModulusSpec& m);

// Single block on k lower points.
SetPartition one_block(int k);

// Text format: blocks of point names, upper points "1".."k", lower points
// "1'".."l'", e.g. "[[1,2',1'],[2]]". Points are listed in linear order
// inside each block and blocks by first appearance.
std::string format_partition(const SetPartition& p);
SetPartition parse_partition(std::string_view text);

}  // namespace fusionkit
