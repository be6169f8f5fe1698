#include "fusionkit/tannaka.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace fusionkit {

ExactMatrix ExactMatrix::identity(long n) {
    ExactMatrix m(n, n);
    for (long i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

ExactMatrix ExactMatrix::multiply(const ExactMatrix& o) const {
    if (cols != o.rows) throw std::invalid_argument("matrix shape mismatch in multiply");
    ExactMatrix out(rows, o.cols);
    for (long r = 0; r < rows; ++r)
        for (long k = 0; k < cols; ++k) {
            const BigInt& v = at(r, k);
            if (v == 0) continue;
            for (long c = 0; c < o.cols; ++c) {
                const BigInt& w = o.at(k, c);
                if (w != 0) out.at(r, c) += v * w;
            }
        }
    return out;
}

ExactMatrix ExactMatrix::kronecker(const ExactMatrix& o) const {
    ExactMatrix out(rows * o.rows, cols * o.cols);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) {
            const BigInt& v = at(r, c);
            if (v == 0) continue;
            for (long r2 = 0; r2 < o.rows; ++r2)
                for (long c2 = 0; c2 < o.cols; ++c2)
                    out.at(r * o.rows + r2, c * o.cols + c2) = v * o.at(r2, c2);
        }
    return out;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix out(cols, rows);
    for (long r = 0; r < rows; ++r)
        for (long c = 0; c < cols; ++c) out.at(c, r) = at(r, c);
    return out;
}

ExactMatrix ExactMatrix::scaled(const BigInt& factor) const {
    ExactMatrix out = *this;
    for (BigInt& e : out.entries) e *= factor;
    return out;
}

int delta(const SetPartition& p, std::span<const int> upper_idx,
          std::span<const int> lower_idx, int n) {
    if (static_cast<int>(upper_idx.size()) != p.upper ||
        static_cast<int>(lower_idx.size()) != p.lower)
        throw std::invalid_argument("index tuple shape mismatch");
    std::vector<int> value(p.block_count, -1);
    for (int pos = 0; pos < p.points(); ++pos) {
        int idx;
        if (pos < p.upper) {
            idx = upper_idx[pos];
        } else {
            int point = p.lower - (pos - p.upper);
            idx = lower_idx[point - 1];
        }
        if (idx < 0 || idx >= n) throw std::invalid_argument("basis index out of range");
        int b = p.block_of[pos];
        if (value[b] == -1)
            value[b] = idx;
        else if (value[b] != idx)
            return 0;
    }
    return 1;
}

namespace {

long checked_power(int n, int exp, const Limits& limits) {
    long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > limits.max_entries / n)
            throw LimitError("tensor-power dimension exceeds the entry limit");
        out *= n;
    }
    return out;
}

// odometer over tuples in {0..n-1}^len, big-endian
bool advance(std::vector<int>& digits, int n) {
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        if (++*it < n) return true;
        *it = 0;
    }
    return false;
}

}  // namespace

ExactMatrix build_map(const SetPartition& p, int n, const Limits& limits) {
    if (n < 2) throw std::invalid_argument("build_map needs n >= 2");
    long rows = checked_power(n, p.lower, limits);
    long cols = checked_power(n, p.upper, limits);
    if (rows > limits.max_entries / cols)
        throw LimitError("matrix with " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " entries exceeds the limit");
    ExactMatrix out(rows, cols);
    std::vector<int> upper(p.upper, 0), lower(p.lower, 0);
    long c = 0;
    do {
        std::fill(lower.begin(), lower.end(), 0);
        long r = 0;
        do {
            if (delta(p, upper, lower, n)) out.at(r, c) = 1;
            ++r;
        } while (advance(lower, n));
        ++c;
    } while (advance(upper, n));
    return out;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

CompositionResult compose(const SetPartition& p, const SetPartition& q) {
    if (p.upper != q.lower)
        throw std::invalid_argument("composition arity mismatch: p has " +
                                    std::to_string(p.upper) + " upper points, q has " +
                                    std::to_string(q.lower) + " lower points");
    const int np = p.points();
    const int nq = q.points();
    Dsu dsu(np + nq);  // p's points first, then q's
    for (int pos = 1; pos < np; ++pos)
        for (int prev = 0; prev < pos; ++prev)
            if (p.block_of[pos] == p.block_of[prev]) {
                dsu.unite(pos, prev);
                break;
            }
    for (int pos = 1; pos < nq; ++pos)
        for (int prev = 0; prev < pos; ++prev)
            if (q.block_of[pos] == q.block_of[prev]) {
                dsu.unite(np + pos, np + prev);
                break;
            }
    // glue p's upper point t to q's lower point t
    for (int t = 1; t <= p.upper; ++t) dsu.unite(p.upper_pos(t), np + q.lower_pos(t));

    CompositionResult result;
    result.partition.upper = q.upper;
    result.partition.lower = p.lower;
    result.partition.block_of.assign(q.upper + p.lower, -1);
    std::vector<int> klass(q.upper + p.lower, -1);
    for (int pos = 0; pos < q.upper + p.lower; ++pos) {
        int node = pos < q.upper ? np + pos  // q's upper points head q's linear order
                                 : p.upper + (pos - q.upper);  // p's lower points follow p's upper
        klass[pos] = dsu.find(node);
    }
    std::vector<int> id_of_class;
    for (int pos = 0; pos < q.upper + p.lower; ++pos) {
        auto it = std::find(id_of_class.begin(), id_of_class.end(), klass[pos]);
        if (it == id_of_class.end()) {
            id_of_class.push_back(klass[pos]);
            result.partition.block_of[pos] = static_cast<int>(id_of_class.size()) - 1;
        } else {
            result.partition.block_of[pos] =
                static_cast<int>(std::distance(id_of_class.begin(), it));
        }
    }
    result.partition.block_count = static_cast<int>(id_of_class.size());

    // closed blocks: classes whose every node is a glued middle point
    std::unordered_set<int> open(id_of_class.begin(), id_of_class.end());
    std::unordered_set<int> all_roots;
    for (int node = 0; node < np + nq; ++node) all_roots.insert(dsu.find(node));
    result.closed_blocks = static_cast<int>(all_roots.size() - open.size());
    return result;
}

SetPartition tensor_partition(const SetPartition& p, const SetPartition& q) {
    SetPartition out;
    out.upper = p.upper + q.upper;
    out.lower = p.lower + q.lower;
    out.block_of.assign(out.points(), -1);
    const int offset = p.block_count;
    for (int t = 1; t <= p.upper; ++t)
        out.block_of[out.upper_pos(t)] = p.block_of[p.upper_pos(t)];
    for (int t = 1; t <= q.upper; ++t)
        out.block_of[out.upper_pos(p.upper + t)] = offset + q.block_of[q.upper_pos(t)];
    for (int t = 1; t <= p.lower; ++t)
        out.block_of[out.lower_pos(t)] = p.block_of[p.lower_pos(t)];
    for (int t = 1; t <= q.lower; ++t)
        out.block_of[out.lower_pos(p.lower + t)] = offset + q.block_of[q.lower_pos(t)];
    canonicalize(out);
    return out;
}

SetPartition involution_partition(const SetPartition& p) {
    SetPartition out;
    out.upper = p.lower;
    out.lower = p.upper;
    out.block_of.assign(p.block_of.rbegin(), p.block_of.rend());
    canonicalize(out);
    return out;
}

FunctorialityReport verify_functoriality(const SetPartition& p, const SetPartition& q, int n,
                                         const Limits& limits) {
    FunctorialityReport report;
    CompositionResult comp = compose(p, q);
    report.closed_blocks = comp.closed_blocks;

    ExactMatrix mp = build_map(p, n, limits);
    ExactMatrix mq = build_map(q, n, limits);
    ExactMatrix product = mp.multiply(mq);
    BigInt scale = bigint_pow(BigInt(n), static_cast<unsigned long>(comp.closed_blocks));
    report.composition_ok = product == build_map(comp.partition, n, limits).scaled(scale);

    report.tensor_ok =
        build_map(tensor_partition(p, q), n, limits) == mp.kronecker(mq);
    report.involution_ok = build_map(involution_partition(p), n, limits) == mp.transpose() &&
                           build_map(involution_partition(q), n, limits) == mq.transpose();
    return report;
}

namespace {

// Fraction-free row elimination; the division by the previous pivot is exact.
long bareiss_rank(std::vector<std::vector<BigInt>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    BigInt prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t pivot = row;
        while (pivot < rows && m[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[row], m[pivot]);
        for (std::size_t r = row + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                BigInt num = m[row][col] * m[r][c] - m[r][col] * m[row][c];
                mpz_divexact(m[r][c].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            m[r][col] = 0;
        }
        prev = m[row][col];
        ++row;
    }
    return static_cast<long>(row);
}

}  // namespace

long span_rank(std::span<const SetPartition> ps, int n, const Limits& limits) {
    if (ps.empty()) return 0;
    if (n < 2) throw std::invalid_argument("span_rank needs n >= 2");
    const int k = ps.front().upper, l = ps.front().lower;
    for (const SetPartition& p : ps)
        if (p.upper != k || p.lower != l)
            throw std::invalid_argument("span_rank needs one common shape");
    checked_power(n, k + l, limits);

    // one column per basis-index assignment, folded by pattern across the maps
    std::vector<int> upper(k, 0), lower(l, 0);
    std::unordered_set<std::string> seen;
    std::vector<std::vector<BigInt>> matrix(ps.size());
    bool more = true;
    while (more) {
        std::string pattern(ps.size(), '0');
        for (std::size_t i = 0; i < ps.size(); ++i)
            pattern[i] = delta(ps[i], upper, lower, n) ? '1' : '0';
        if (seen.insert(pattern).second)
            for (std::size_t i = 0; i < ps.size(); ++i)
                matrix[i].push_back(pattern[i] == '1' ? 1 : 0);
        if (!advance(lower, n)) more = advance(upper, n);
    }
    return bareiss_rank(std::move(matrix));
}

long hom_dim_oracle(const LabeledTuple& t, int n, const ModulusSpec& m,
                         const Limits& limits) {
    std::vector<SetPartition> admissible;
    for_each_nc(static_cast<int>(t.upper.size()), static_cast<int>(t.lower.size()),
                [&](const SetPartition& p) {
                    if (satisfies_label_condition(p, t, m)) admissible.push_back(p);
                },
                limits);
    return span_rank(admissible, n, limits);
}

std::string format_matrix(const ExactMatrix& m) {
    std::string out;
    for (long r = 0; r < m.rows; ++r) {
        for (long c = 0; c < m.cols; ++c) {
            if (c) out += ' ';
            out += to_decimal(m.at(r, c));
        }
        out += '\n';
    }
    return out;
}

}  // namespace fusionkit
