#include "fusionkit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <random>
#include <thread>

#include "fusionkit/dims.hpp"
#include "fusionkit/fusion_engine.hpp"
#include "fusionkit/nc_partitions.hpp"
#include "fusionkit/tannaka.hpp"

namespace fusionkit {

namespace {

template <class Fn>
PropertyResult timed_property(std::string name, Fn&& fn) {
    PropertyResult r;
    r.name = std::move(name);
    auto t0 = std::chrono::steady_clock::now();
    fn(r);
    r.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                   .count();
    return r;
}

Word random_word(std::mt19937_64& rng, const FusionAlphabet& a, int max_len,
                 int infinite_range = 2) {
    std::uniform_int_distribution<int> len_dist(0, max_len);
    int len = len_dist(rng);
    Word w;
    w.reserve(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i) {
        switch (a.kind()) {
            case InstanceKind::reflection:
                if (a.modulus().finite) {
                    std::uniform_int_distribution<long> d(0, a.modulus().order - 1);
                    w.push_back(d(rng));
                } else {
                    std::uniform_int_distribution<long> d(-infinite_range, infinite_range);
                    w.push_back(d(rng));
                }
                break;
            case InstanceKind::orthogonal:
                w.push_back(1);
                break;
            case InstanceKind::unitary: {
                std::uniform_int_distribution<long> d(0, 1);
                w.push_back(d(rng));
                break;
            }
        }
    }
    return w;
}

void for_each_tuple(const std::vector<Letter>& domain, int len,
                    const std::function<void(const std::vector<Letter>&)>& fn) {
    std::vector<Letter> tuple(static_cast<std::size_t>(len));
    std::function<void(int)> rec = [&](int pos) {
        if (pos == len) {
            fn(tuple);
            return;
        }
        for (Letter v : domain) {
            tuple[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
}

std::vector<Letter> finite_domain(long s) {
    std::vector<Letter> out;
    for (long v = 0; v < s; ++v) out.push_back(v);
    return out;
}

std::vector<Letter> symmetric_domain(int range) {
    std::vector<Letter> out;
    for (int v = -range; v <= range; ++v) out.push_back(v);
    return out;
}

std::uint64_t mix_seed(std::uint64_t seed, const std::string& salt) {
    std::uint64_t h = seed ^ 0x9e3779b97f4a7c15ULL;
    for (char c : salt) h = (h ^ static_cast<std::uint64_t>(c)) * 0x100000001b3ULL;
    return h;
}

std::string instance_label(const FusionAlphabet& a) {
    std::string label = a.instance_name();
    if (a.kind() == InstanceKind::reflection) label += " s=" + format_modulus(a.modulus());
    return label;
}

Word repeated(Letter v, int count) { return Word(static_cast<std::size_t>(count), v); }

}  // namespace

PropertyResult check_involution_laws(const FusionAlphabet& a, std::uint64_t seed, int cases,
                                     int max_len) {
    return timed_property("involution laws [" + instance_label(a) + "]", [&](PropertyResult& r) {
        std::mt19937_64 rng(mix_seed(seed, r.name));
        for (int i = 0; i < cases; ++i) {
            Word x = random_word(rng, a, max_len);
            Word y = random_word(rng, a, max_len);
            ++r.cases;
            if (involute(involute(x, a), a) != x) ++r.failures;
            Word xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            Word anti = involute(y, a);
            Word rest = involute(x, a);
            anti.insert(anti.end(), rest.begin(), rest.end());
            if (involute(xy, a) != anti) ++r.failures;
            auto d = dot(x, y, a);
            if (d) {
                if (dot(involute(y, a), involute(x, a), a) != involute(*d, a)) ++r.failures;
            } else if (dot(involute(y, a), involute(x, a), a)) {
                ++r.failures;
            }
        }
    });
}

PropertyResult check_splitting_bounds(const FusionAlphabet& a, std::uint64_t seed, int cases,
                                      int max_len) {
    return timed_property("splitting bounds [" + instance_label(a) + "]",
                          [&](PropertyResult& r) {
                              std::mt19937_64 rng(mix_seed(seed, r.name));
                              for (int i = 0; i < cases; ++i) {
                                  Word x = random_word(rng, a, max_len);
                                  Word y = random_word(rng, a, max_len);
                                  ++r.cases;
                                  auto splits = enumerate_splittings(x, y, a);
                                  std::size_t cap = std::min(x.size(), y.size()) + 1;
                                  if (splits.empty() || splits.size() > cap) ++r.failures;
                                  if (!splits.empty() && !splits.front().z.empty()) ++r.failures;
                                  for (std::size_t t = 1; t < splits.size(); ++t)
                                      if (splits[t].z.size() <= splits[t - 1].z.size())
                                          ++r.failures;
                              }
                          });
}

PropertyResult check_associativity(const FusionAlphabet& a, std::uint64_t seed, int cases,
                                   int max_word_len) {
    return timed_property("fusion associativity [" + instance_label(a) + "]",
                          [&](PropertyResult& r) {
                              std::mt19937_64 rng(mix_seed(seed, r.name));
                              for (int i = 0; i < cases; ++i) {
                                  Word x = random_word(rng, a, max_word_len);
                                  Word y = random_word(rng, a, max_word_len);
                                  Word z = random_word(rng, a, max_word_len);
                                  ++r.cases;
                                  Decomposition left = fuse_decompositions(
                                      fuse_irreducibles(x, y, a), Decomposition::single(z), a);
                                  Decomposition right = fuse_decompositions(
                                      Decomposition::single(x), fuse_irreducibles(y, z, a), a);
                                  if (!(left == right)) ++r.failures;
                              }
                          });
}

PropertyResult check_conjugation_symmetry(const FusionAlphabet& a, std::uint64_t seed,
                                          int cases, int max_word_len) {
    return timed_property("conjugation symmetry [" + instance_label(a) + "]",
                          [&](PropertyResult& r) {
                              std::mt19937_64 rng(mix_seed(seed, r.name));
                              for (int i = 0; i < cases; ++i) {
                                  Word x = random_word(rng, a, max_word_len);
                                  Word y = random_word(rng, a, max_word_len);
                                  ++r.cases;
                                  Decomposition fused = fuse_irreducibles(x, y, a);
                                  Decomposition mirrored;
                                  for (const auto& [w, m] : fused.terms())
                                      mirrored.add(involute(w, a), m);
                                  Decomposition other =
                                      fuse_irreducibles(involute(y, a), involute(x, a), a);
                                  if (!(mirrored == other)) ++r.failures;
                              }
                          });
}

PropertyResult check_frobenius_reciprocity(const FusionAlphabet& a, std::uint64_t seed,
                                           int cases, int max_word_len) {
    return timed_property(
        "frobenius reciprocity [" + instance_label(a) + "]", [&](PropertyResult& r) {
            std::mt19937_64 rng(mix_seed(seed, r.name));
            while (r.cases < cases) {
                Word x = random_word(rng, a, max_word_len);
                Word y = random_word(rng, a, max_word_len);
                Decomposition fused = fuse_irreducibles(x, y, a);
                std::vector<Word> probes;
                for (const auto& [w, m] : fused.terms()) probes.push_back(w);
                probes.push_back(random_word(rng, a, max_word_len));
                for (const Word& z : probes) {
                    ++r.cases;
                    BigInt direct = fused.multiplicity(z);
                    Decomposition triple = fuse_decompositions(
                        fuse_irreducibles(involute(z, a), x, a), Decomposition::single(y), a);
                    if (direct != triple.multiplicity(Word{})) ++r.failures;
                }
            }
        });
}

PropertyResult check_irreducibility_witness(const FusionAlphabet& a, std::uint64_t seed,
                                            int cases, int max_word_len) {
    return timed_property("irreducibility witness [" + instance_label(a) + "]",
                          [&](PropertyResult& r) {
                              std::mt19937_64 rng(mix_seed(seed, r.name));
                              for (int i = 0; i < cases; ++i) {
                                  Word x = random_word(rng, a, max_word_len);
                                  ++r.cases;
                                  Decomposition d = fuse_irreducibles(x, involute(x, a), a);
                                  if (d.multiplicity(Word{}) != 1) ++r.failures;
                              }
                          });
}

PropertyResult check_conversion_roundtrip(const FusionAlphabet& a, std::uint64_t seed,
                                          int cases, int max_word_len) {
    return timed_property(
        "tensor-basis conversion roundtrip [" + instance_label(a) + "]",
        [&](PropertyResult& r) {
            std::mt19937_64 rng(mix_seed(seed, r.name));
            FusionContext ctx(a);
            for (int i = 0; i < cases; ++i) {
                Word x = random_word(rng, a, max_word_len);
                ++r.cases;
                VirtualDecomposition expanded =
                    expand_through_basic_tensor(irreducible_in_tensor_basis(x, a), ctx);
                if (expanded.size() != 1 || expanded.coefficient(x) != 1) ++r.failures;
            }
        });
}

PropertyResult check_dimension_morphism(long s, long n, std::uint64_t seed,
                                        int cases, int max_word_len) {
    FusionAlphabet a = FusionAlphabet::reflection(ModulusSpec::finite_order(s));
    return timed_property(
        "dimension morphism [s=" + std::to_string(s) + " n=" + std::to_string(n) + "]",
        [&](PropertyResult& r) {
            std::mt19937_64 rng(mix_seed(seed, r.name));
            for (int i = 0; i < cases; ++i) {
                Word x = random_word(rng, a, max_word_len);
                Word y = random_word(rng, a, max_word_len);
                ++r.cases;
                BigInt product = dimension_of_word(x, n) * dimension_of_word(y, n);
                if (dimension_of_decomposition(fuse_irreducibles(x, y, a), n) != product)
                    ++r.failures;
            }
        });
}

PropertyResult check_clebsch_gordan_s1(int max_k) {
    FusionAlphabet a = FusionAlphabet::reflection(ModulusSpec::finite_order(1));
    return timed_property("clebsch-gordan ladder at s=1", [&](PropertyResult& r) {
        for (int k = 0; k <= max_k; ++k)
            for (int l = 0; l <= max_k; ++l) {
                ++r.cases;
                Decomposition expected;
                for (int m = std::abs(k - l); m <= k + l; ++m)
                    expected.add(repeated(0, m), 1);
                if (!(fuse_irreducibles(repeated(0, k), repeated(0, l), a) == expected))
                    ++r.failures;
            }
    });
}

PropertyResult check_orthogonal_two_letter_rule(int max_k) {
    FusionAlphabet a = FusionAlphabet::orthogonal();
    return timed_property("orthogonal ladder rule", [&](PropertyResult& r) {
        for (int k = 0; k <= max_k; ++k)
            for (int l = 0; l <= max_k; ++l) {
                ++r.cases;
                Decomposition expected;
                for (int m = std::abs(k - l); m <= k + l; m += 2)
                    expected.add(repeated(1, m), 1);
                if (!(fuse_irreducibles(repeated(1, k), repeated(1, l), a) == expected))
                    ++r.failures;
            }
    });
}

PropertyResult check_hom_table(long s) {
    FusionAlphabet a = FusionAlphabet::reflection(ModulusSpec::finite_order(s));
    return timed_property("one-letter hom table [s=" + std::to_string(s) + "]",
                          [&](PropertyResult& r) {
                              FusionContext ctx(a);
                              for (long i = 0; i < s; ++i)
                                  for (long j = 0; j < s; ++j) {
                                      ++r.cases;
                                      long expected = i != j ? 0 : (i == 0 ? 2 : 1);
                                      if (ctx.hom_dimension({i}, {j}) != expected) ++r.failures;
                                  }
                          });
}

PropertyResult check_triple_agreement(const ModulusSpec& m, int max_len, int infinite_range,
                                      const Limits& limits) {
    FusionAlphabet a = FusionAlphabet::reflection(m);
    return timed_property(
        "trivial multiplicity vs labeled count [s=" + format_modulus(m) + "]",
        [&](PropertyResult& r) {
            FusionContext ctx(a);
            std::vector<Letter> domain =
                m.finite ? finite_domain(m.order) : symmetric_domain(infinite_range);
            for (int len = 0; len <= max_len; ++len)
                for_each_tuple(domain, len, [&](const std::vector<Letter>& tuple) {
                    ++r.cases;
                    long count = count_nc_s(LabeledTuple{{}, tuple}, m, limits);
                    if (ctx.trivial_multiplicity(tuple) != count) ++r.failures;
                });
        });
}

PropertyResult check_two_row_agreement(long s, int max_points, int n,
                                       const Limits& limits) {
    ModulusSpec m = ModulusSpec::finite_order(s);
    FusionAlphabet a = FusionAlphabet::reflection(m);
    return timed_property(
        "two-row hom agreement [s=" + std::to_string(s) + " n=" + std::to_string(n) + "]",
        [&](PropertyResult& r) {
            FusionContext ctx(a);
            std::vector<Letter> domain = finite_domain(s);
            for (int k = 0; k <= max_points; ++k)
                for (int l = 0; k + l <= max_points; ++l)
                    for_each_tuple(domain, k, [&](const std::vector<Letter>& upper) {
                        for_each_tuple(domain, l, [&](const std::vector<Letter>& lower) {
                            ++r.cases;
                            LabeledTuple t{upper, lower};
                            long count = count_nc_s(t, m, limits);
                            BigInt engine = ctx.hom_dimension(upper, lower);
                            long rank = hom_dim_oracle(t, n, m, limits);
                            if (engine != count || rank != count) ++r.failures;
                        });
                    });
        });
}

PropertyResult check_composition_identity(int max_diagram_points,
                                          const std::vector<int>& n_values,
                                          const Limits& limits) {
    return timed_property("composition identity", [&](PropertyResult& r) {
        for (int mid = 0; mid <= max_diagram_points; ++mid)
            for (int top = 0; top + mid <= max_diagram_points; ++top)
                for (int bottom = 0; top + mid + bottom <= max_diagram_points; ++bottom) {
                    auto ps = enumerate_nc(mid, bottom, limits);
                    auto qs = enumerate_nc(top, mid, limits);
                    for (const SetPartition& p : ps)
                        for (const SetPartition& q : qs) {
                            CompositionResult comp = compose(p, q);
                            if (!is_noncrossing(comp.partition)) {
                                r.failures += static_cast<long>(n_values.size());
                                r.cases += static_cast<long>(n_values.size());
                                continue;
                            }
                            for (int n : n_values) {
                                ++r.cases;
                                ExactMatrix product =
                                    build_map(p, n, limits).multiply(build_map(q, n, limits));
                                BigInt scale = bigint_pow(
                                    BigInt(n), static_cast<unsigned long>(comp.closed_blocks));
                                if (!(product ==
                                      build_map(comp.partition, n, limits).scaled(scale)))
                                    ++r.failures;
                            }
                        }
                }
    });
}

PropertyResult check_tensor_identity(int max_total_points, const std::vector<int>& n_values,
                                     const Limits& limits) {
    return timed_property("tensor identity", [&](PropertyResult& r) {
        for (int k1 = 0; k1 <= max_total_points; ++k1)
            for (int l1 = 0; k1 + l1 <= max_total_points; ++l1)
                for (int k2 = 0; k1 + l1 + k2 <= max_total_points; ++k2)
                    for (int l2 = 0; k1 + l1 + k2 + l2 <= max_total_points; ++l2) {
                        auto ps = enumerate_nc(k1, l1, limits);
                        auto qs = enumerate_nc(k2, l2, limits);
                        for (const SetPartition& p : ps)
                            for (const SetPartition& q : qs)
                                for (int n : n_values) {
                                    ++r.cases;
                                    ExactMatrix expected = build_map(p, n, limits)
                                                               .kronecker(build_map(q, n, limits));
                                    if (!(build_map(tensor_partition(p, q), n, limits) ==
                                          expected))
                                        ++r.failures;
                                }
                    }
    });
}

PropertyResult check_involution_identity(int max_points, const std::vector<int>& n_values,
                                         const Limits& limits) {
    return timed_property("involution identity", [&](PropertyResult& r) {
        for (int k = 0; k <= max_points; ++k)
            for (int l = 0; k + l <= max_points; ++l)
                for (const SetPartition& p : enumerate_nc(k, l, limits))
                    for (int n : n_values) {
                        ++r.cases;
                        if (!(build_map(involution_partition(p), n, limits) ==
                              build_map(p, n, limits).transpose()))
                            ++r.failures;
                    }
    });
}

PropertyResult check_independence(int max_points, const std::vector<int>& full_rank_n,
                                  const std::vector<int>& logged_n, const Limits& limits) {
    return timed_property("span independence", [&](PropertyResult& r) {
        for (int k = 0; k <= max_points; ++k)
            for (int l = 0; k + l <= max_points; ++l) {
                auto ps = enumerate_nc(k, l, limits);
                long count = static_cast<long>(ps.size());
                for (int n : full_rank_n) {
                    ++r.cases;
                    if (span_rank(ps, n, limits) != count) ++r.failures;
                }
                for (int n : logged_n) {
                    ++r.cases;
                    long rank = span_rank(ps, n, limits);
                    if (rank > count) ++r.failures;
                    if (rank < count)
                        r.note += "(" + std::to_string(k) + "," + std::to_string(l) + ")@n=" +
                                  std::to_string(n) + ": rank " + std::to_string(rank) + "/" +
                                  std::to_string(count) + " ";
                }
            }
    });
}

PropertyResult check_one_block_vector(int max_l, const std::vector<int>& n_values,
                                      const Limits& limits) {
    return timed_property("one-block vector entries", [&](PropertyResult& r) {
        for (int l = 1; l <= max_l; ++l)
            for (int n : n_values) {
                ++r.cases;
                ExactMatrix m = build_map(one_block(l), n, limits);
                bool ok = m.cols == 1;
                for (long row = 0; ok && row < m.rows; ++row) {
                    long value = row;
                    int first = static_cast<int>(value % n);
                    bool constant = true;
                    for (int t = 0; t < l; ++t) {
                        if (value % n != first) constant = false;
                        value /= n;
                    }
                    ok = m.at(row, 0) == (constant ? 1 : 0);
                }
                if (!ok) ++r.failures;
            }
    });
}

PropertyResult check_d_table_values(const std::vector<long>& n_values) {
    return timed_property("dimension table values", [&](PropertyResult& r) {
        for (long n : n_values) {
            ++r.cases;
            bool ok = d_seq(0, n).rational_part() == 1 && d_seq(0, n).root_part() == 0;
            ok = ok && d_seq(1, n).rational_part() == 0 && d_seq(1, n).root_part() == 1;
            ok = ok && d_seq(2, n).rational_part() == n - 1 && d_seq(2, n).root_part() == 0;
            ok = ok && d_seq(3, n).rational_part() == 0 && d_seq(3, n).root_part() == n - 2;
            ok = ok && d_seq(4, n).rational_part() == n * n - 3 * n + 1 &&
                 d_seq(4, n).root_part() == 0;
            if (!ok) ++r.failures;
        }
    });
}

PropertyResult check_d_linear_at_four(int max_k) {
    return timed_property("dimension degeneration at n=4", [&](PropertyResult& r) {
        for (int k = 0; k <= max_k; ++k) {
            ++r.cases;
            if (!(d_seq(k, 4) == RootInt::integer(BigInt(k + 1), 4))) ++r.failures;
        }
    });
}

PropertyResult check_d_product_identity(int max_k, const std::vector<long>& n_values) {
    return timed_property("dimension product identity", [&](PropertyResult& r) {
        for (long n : n_values)
            for (int k = 1; k <= max_k; ++k)
                for (int l = 1; l <= max_k; ++l) {
                    ++r.cases;
                    RootInt lhs = d_seq(k, n) * d_seq(l, n);
                    RootInt rhs = d_seq(k + l, n) + d_seq(k - 1, n) * d_seq(l - 1, n);
                    if (lhs.rational_part() != rhs.rational_part() ||
                        lhs.root_part() != rhs.root_part())
                        ++r.failures;
                }
    });
}

PropertyResult check_d_positivity(int max_k, const std::vector<long>& n_values) {
    return timed_property("dimension positivity", [&](PropertyResult& r) {
        for (long n : n_values)
            for (int k = 0; k <= max_k; ++k) {
                ++r.cases;
                if (d_seq(k, n).sign() != 1) ++r.failures;
            }
    });
}

PropertyResult check_formulations_exhaustive(long s, int max_total_len) {
    ModulusSpec m = ModulusSpec::finite_order(s);
    FusionAlphabet a = FusionAlphabet::reflection(m);
    return timed_property(
        "formulation agreement [s=" + std::to_string(s) + "]", [&](PropertyResult& r) {
            std::vector<Letter> domain = finite_domain(s);
            for (int lx = 0; lx <= max_total_len; ++lx)
                for_each_tuple(domain, lx, [&](const std::vector<Letter>& x) {
                    for (int ly = 0; lx + ly <= max_total_len; ++ly)
                        for_each_tuple(domain, ly, [&](const std::vector<Letter>& y) {
                            ++r.cases;
                            CrossCheckReport report = cross_check_formulations(x, y, a);
                            if (!report.ok()) {
                                ++r.failures;
                                if (r.note.empty()) r.note = report.detail;
                            }
                        });
                });
        });
}

PropertyResult check_formulations_random_infinite(std::uint64_t seed, int cases,
                                                  int max_total_len, int letter_range) {
    FusionAlphabet a = FusionAlphabet::reflection(ModulusSpec::infinite());
    return timed_property("formulation agreement [s=inf]", [&](PropertyResult& r) {
        std::mt19937_64 rng(mix_seed(seed, r.name));
        for (int i = 0; i < cases; ++i) {
            Word x = random_word(rng, a, max_total_len / 2, letter_range);
            Word y = random_word(rng, a, max_total_len - max_total_len / 2, letter_range);
            ++r.cases;
            CrossCheckReport report = cross_check_formulations(x, y, a);
            if (!report.ok()) {
                ++r.failures;
                if (r.note.empty()) r.note = report.detail;
            }
        }
    });
}

namespace {

using PropertyJob = std::function<PropertyResult()>;

std::vector<PropertyResult> run_jobs(const std::vector<PropertyJob>& jobs, int parallelism) {
    std::vector<PropertyResult> results(jobs.size());
    if (parallelism <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) results[i] = jobs[i]();
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= jobs.size()) return;
            results[i] = jobs[i]();
        }
    };
    std::vector<std::thread> threads;
    int count = std::min<int>(parallelism, static_cast<int>(jobs.size()));
    threads.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
    return results;
}

std::vector<FusionAlphabet> suite_alphabets(const VerifyOptions& o) {
    std::vector<FusionAlphabet> out;
    for (long s : o.s_values)
        out.push_back(FusionAlphabet::reflection(ModulusSpec::finite_order(s)));
    if (o.include_infinite)
        out.push_back(FusionAlphabet::reflection(ModulusSpec::infinite()));
    out.push_back(FusionAlphabet::orthogonal());
    out.push_back(FusionAlphabet::unitary());
    return out;
}

std::vector<PropertyJob> fusion_jobs(const VerifyOptions& o) {
    std::vector<PropertyJob> jobs;
    for (const FusionAlphabet& a : suite_alphabets(o)) {
        jobs.push_back([=] { return check_involution_laws(a, o.seed, o.cases, 6); });
        jobs.push_back([=] { return check_splitting_bounds(a, o.seed, o.cases, 6); });
        jobs.push_back([=] { return check_associativity(a, o.seed, o.cases, 3); });
        jobs.push_back([=] { return check_conjugation_symmetry(a, o.seed, o.cases, 4); });
        jobs.push_back([=] { return check_frobenius_reciprocity(a, o.seed, o.cases, 4); });
        jobs.push_back([=] { return check_irreducibility_witness(a, o.seed, o.cases, 6); });
        if (a.kind() == InstanceKind::reflection)
            jobs.push_back([=] { return check_conversion_roundtrip(a, o.seed, o.cases, 6); });
    }
    for (long s : o.s_values) {
        jobs.push_back([=] { return check_hom_table(s); });
        ModulusSpec m = ModulusSpec::finite_order(s);
        jobs.push_back([=, limits = o.limits] {
            return check_triple_agreement(m, 4, 2, limits);
        });
    }
    if (o.include_infinite)
        jobs.push_back([=, limits = o.limits] {
            return check_triple_agreement(ModulusSpec::infinite(), 4, 2, limits);
        });
    jobs.push_back([] { return check_clebsch_gordan_s1(8); });
    jobs.push_back([] { return check_orthogonal_two_letter_rule(8); });
    return jobs;
}

std::vector<PropertyJob> tannaka_jobs(const VerifyOptions& o) {
    std::vector<PropertyJob> jobs;
    jobs.push_back(
        [=] { return check_composition_identity(5, o.n_values, o.limits); });
    jobs.push_back([=] { return check_tensor_identity(5, o.n_values, o.limits); });
    jobs.push_back([=] { return check_involution_identity(5, o.n_values, o.limits); });
    jobs.push_back([=] { return check_independence(5, {4, 5}, {2, 3}, o.limits); });
    jobs.push_back([=] { return check_one_block_vector(4, o.n_values, o.limits); });
    for (long s : o.s_values)
        jobs.push_back([=] { return check_two_row_agreement(s, 4, 4, o.limits); });
    return jobs;
}

std::vector<PropertyJob> dims_jobs(const VerifyOptions& o) {
    std::vector<PropertyJob> jobs;
    jobs.push_back([] { return check_d_table_values({4, 5, 7}); });
    jobs.push_back([] { return check_d_linear_at_four(12); });
    jobs.push_back([] { return check_d_product_identity(10, {4, 5, 7}); });
    jobs.push_back([] { return check_d_positivity(12, {4, 5, 7}); });
    for (long s : o.s_values)
        for (int n : o.n_values)
            jobs.push_back([=] { return check_dimension_morphism(s, n, o.seed, o.cases, 4); });
    return jobs;
}

std::vector<PropertyJob> formulations_jobs(const VerifyOptions& o) {
    std::vector<PropertyJob> jobs;
    for (long s : o.s_values)
        jobs.push_back([=] { return check_formulations_exhaustive(s, 4); });
    if (o.include_infinite)
        jobs.push_back([=] { return check_formulations_random_infinite(o.seed, o.cases, 5, 2); });
    return jobs;
}

}  // namespace

std::vector<PropertyResult> run_suite(const std::string& name, const VerifyOptions& options) {
    std::vector<PropertyJob> jobs;
    auto extend = [&](std::vector<PropertyJob> more) {
        for (auto& j : more) jobs.push_back(std::move(j));
    };
    if (name == "fusion" || name == "all") extend(fusion_jobs(options));
    if (name == "tannaka" || name == "all") extend(tannaka_jobs(options));
    if (name == "dims" || name == "all") extend(dims_jobs(options));
    if (name == "formulations" || name == "all") extend(formulations_jobs(options));
    if (jobs.empty()) throw std::invalid_argument("unknown suite: '" + name + "'");
    return run_jobs(jobs, options.jobs);
}

}  // namespace fusionkit
