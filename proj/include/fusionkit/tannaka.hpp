#pragma once

#include <span>
#include <string>
#include <vector>

#include "fusionkit/bigint.hpp"
#include "fusionkit/limits.hpp"
#include "fusionkit/nc_partitions.hpp"
#include "fusionkit/word_algebra.hpp"

namespace fusionkit {

// Dense matrix with unbounded integer entries. The realization of a (k,l)
// partition acts on tensor-power bases: n^l rows, n^k columns, with the
// basis index (i_1,...,i_k) encoded big-endian base n. That encoding is
// part of the external contract, so independently built matrices compare
// entry for entry.
struct ExactMatrix {
    long rows = 0;
    long cols = 0;
    std::vector<BigInt> entries;  // row-major

    ExactMatrix() = default;
    ExactMatrix(long r, long c) : rows(r), cols(c), entries(std::size_t(r * c)) {}

    BigInt& at(long r, long c) { return entries[std::size_t(r * cols + c)]; }
    const BigInt& at(long r, long c) const { return entries[std::size_t(r * cols + c)]; }

    static ExactMatrix identity(long n);
    ExactMatrix multiply(const ExactMatrix& o) const;
    ExactMatrix kronecker(const ExactMatrix& o) const;
    ExactMatrix transpose() const;
    ExactMatrix scaled(const BigInt& factor) const;

    bool operator==(const ExactMatrix&) const = default;
};

// 1 iff the assignment of basis indices (0-based, in {0,...,n-1}) to the
// partition's points is constant on every block.
int delta(const SetPartition& p, std::span<const int> upper_idx,
          std::span<const int> lower_idx, int n);

// Matrix of the linear map attached to p on n^k -> n^l tensor bases.
ExactMatrix build_map(const SetPartition& p, int n, const Limits& limits = {});

struct CompositionResult {
    SetPartition partition;
    int closed_blocks = 0;  // blocks supported entirely on the glued middle row
};

// Glues p's upper row onto q's lower row (requires p.upper == q.lower) and
// discards the blocks that close in the middle, counting them. The result
// lives in NC(q.upper, p.lower); as maps it composes p after q.
CompositionResult compose(const SetPartition& p, const SetPartition& q);

// Horizontal concatenation.
SetPartition tensor_partition(const SetPartition& p, const SetPartition& q);

// Upside-down turn: reverses the linear order and swaps the rows.
SetPartition involution_partition(const SetPartition& p);

struct FunctorialityReport {
    bool composition_ok = false;  // map(p) map(q) == n^b map(pq)
    bool tensor_ok = false;       // map(p tensor q) == map(p) kron map(q)
    bool involution_ok = false;   // map(p*) == map(p) transposed
    int closed_blocks = 0;
    bool ok() const { return composition_ok && tensor_ok && involution_ok; }
};

FunctorialityReport verify_functoriality(const SetPartition& p, const SetPartition& q, int n,
                                         const Limits& limits = {});

// Rank over the rationals of {map(p)} viewed as vectors, by fraction-free
// elimination; duplicate columns are folded first, which leaves the rank
// unchanged. All partitions must share one shape.
long span_rank(std::span<const SetPartition> ps, int n, const Limits& limits = {});

// Rank of the span of the maps attached to the label-admissible partitions
// of the tuple's shape; for n >= 4 this equals their count.
long hom_dim_oracle(const LabeledTuple& t, int n, const ModulusSpec& m,
                         const Limits& limits = {});

// Plain text dump: one row per line, space-separated decimal entries.
std::string format_matrix(const ExactMatrix& m);

}  // namespace fusionkit
