#include <doctest.h>

#include <stdexcept>

#include <random>
#include <set>

#include "fusionkit/nc_partitions.hpp"
#include "oracles.hpp"

using namespace fusionkit;

TEST_CASE("noncrossing counts match the Catalan recurrence") {
    auto catalan = oracles::catalan_numbers(12);
    for (int total = 0; total <= 10; ++total)
        for (int k = 0; k <= total; ++k) {
            if (total > 8 && k % 2 == 1) continue;  // keep runtime modest
            CHECK(static_cast<long>(enumerate_nc(k, total - k).size()) ==
                  catalan[static_cast<std::size_t>(total)]);
        }
    // sampled shapes at the enumeration limit
    for (int total : {11, 12}) {
        long count = 0;
        for_each_nc(total / 2, total - total / 2, [&](const SetPartition&) { ++count; });
        CHECK(count == catalan[static_cast<std::size_t>(total)]);
    }
}

TEST_CASE("direct enumeration equals filtered set partitions") {
    for (int total = 0; total <= 8; ++total) {
        int k = total / 2, l = total - k;
        std::set<std::vector<int>> expected;
        for (const auto& rgs : oracles::all_set_partitions(total))
            if (!oracles::has_crossing(rgs)) expected.insert(oracles::canonical_rgs(rgs));
        std::set<std::vector<int>> produced;
        for (const SetPartition& p : enumerate_nc(k, l)) {
            CHECK(is_noncrossing(p));
            CHECK(p.upper == k);
            CHECK(p.lower == l);
            produced.insert(p.block_of);
        }
        CHECK(produced == expected);
    }
}

TEST_CASE("crossing predicate") {
    CHECK(is_noncrossing(parse_partition("[[1',2',5'],[3',4'],[6']]")));
    CHECK_FALSE(is_noncrossing(parse_partition("[[1',3'],[2',4']]")));
    CHECK(is_noncrossing(parse_partition("[[1],[2],[1'],[2']]")));
    CHECK(is_noncrossing(parse_partition("[[1,1'],[2,2']]")));
    CHECK_FALSE(is_noncrossing(parse_partition("[[1,2'],[2,1']]")));
}

TEST_CASE("label condition on small shapes") {
    ModulusSpec s3 = ModulusSpec::finite_order(3);

    SetPartition strand = parse_partition("[[1,1']]");
    CHECK(satisfies_label_condition(strand, LabeledTuple{{2}, {2}}, s3));
    CHECK_FALSE(satisfies_label_condition(strand, LabeledTuple{{2}, {1}}, s3));

    SetPartition singletons = parse_partition("[[1],[1']]");
    CHECK(satisfies_label_condition(singletons, LabeledTuple{{0}, {0}}, s3));
    CHECK_FALSE(satisfies_label_condition(singletons, LabeledTuple{{1}, {1}}, s3));

    SetPartition block = one_block(4);
    CHECK(satisfies_label_condition(block, LabeledTuple{{}, {1, 2, 2, 1}}, s3));
    CHECK_FALSE(satisfies_label_condition(block, LabeledTuple{{}, {1, 1, 2, 1}}, s3));
    CHECK(satisfies_label_condition(block, LabeledTuple{{}, {3, -3, 6, -6}},
                                    ModulusSpec::infinite()));
    CHECK_FALSE(satisfies_label_condition(block, LabeledTuple{{}, {3, -3, 6, -5}},
                                          ModulusSpec::infinite()));

    CHECK_THROWS_AS(satisfies_label_condition(strand, LabeledTuple{{1, 2}, {1}}, s3),
                    std::invalid_argument);
}

TEST_CASE("labeled counts") {
    CHECK(count_nc_s(LabeledTuple{{}, {1, 1, 1}}, ModulusSpec::finite_order(3)) == 1);
    CHECK(count_nc_s(LabeledTuple{{}, {0, 0, 0, 0}}, ModulusSpec::finite_order(1)) == 14);
    CHECK(count_nc_s(LabeledTuple{{}, {0, 0, 0}}, ModulusSpec::finite_order(1)) == 5);
    CHECK(count_nc_s(LabeledTuple{{}, {1, 1, 1, 1}}, ModulusSpec::finite_order(2)) == 3);

    ModulusSpec s4 = ModulusSpec::finite_order(4);
    for (long i = 0; i < 4; ++i)
        for (long j = 0; j < 4; ++j) {
            long expected = i != j ? 0 : (i == 0 ? 2 : 1);
            CHECK(count_nc_s(LabeledTuple{{i}, {j}}, s4) == expected);
        }
}

TEST_CASE("one-row counts at s=1 are Catalan") {
    auto catalan = oracles::catalan_numbers(8);
    ModulusSpec s1 = ModulusSpec::finite_order(1);
    for (int len = 0; len <= 8; ++len)
        CHECK(count_nc_s(LabeledTuple{{}, std::vector<Letter>(len, 0)}, s1) ==
              catalan[static_cast<std::size_t>(len)]);
}

TEST_CASE("one-row rotation preserves blocks and labels") {
    std::mt19937_64 rng(21);
    ModulusSpec s3 = ModulusSpec::finite_order(3);
    for (const SetPartition& p : enumerate_nc(2, 2)) {
        SetPartition rotated = frobenius_rotate(p);
        CHECK(rotated.upper == 0);
        CHECK(rotated.lower == 4);
        CHECK(rotated.block_of == p.block_of);
        for (int trial = 0; trial < 20; ++trial) {
            std::uniform_int_distribution<long> d(0, 2);
            LabeledTuple t{{d(rng), d(rng)}, {d(rng), d(rng)}};
            CHECK(satisfies_label_condition(p, t, s3) ==
                  satisfies_label_condition(rotated, transport_labels(t, s3), s3));
        }
    }

    // identity on one-row inputs
    SetPartition block = one_block(3);
    CHECK(frobenius_rotate(block) == block);
}

TEST_CASE("two-row counts equal folded one-row counts") {
    ModulusSpec s3 = ModulusSpec::finite_order(3);
    for (long i = 0; i < 3; ++i)
        for (long j = 0; j < 3; ++j) {
            LabeledTuple two{{i}, {j}};
            LabeledTuple folded{{}, {i, normalize_letter(-j, s3)}};
            CHECK(count_nc_s(two, s3) == count_nc_s(folded, s3));
        }
    ModulusSpec s2 = ModulusSpec::finite_order(2);
    for (long a = 0; a < 2; ++a)
        for (long b = 0; b < 2; ++b)
            for (long c = 0; c < 2; ++c)
                for (long d = 0; d < 2; ++d) {
                    LabeledTuple two{{a, b}, {c, d}};
                    LabeledTuple folded{{},
                                        {a, b, normalize_letter(-d, s2),
                                         normalize_letter(-c, s2)}};
                    CHECK(count_nc_s(two, s2) == count_nc_s(folded, s2));
                }
}

TEST_CASE("partition text format") {
    SetPartition p = parse_partition("[[1,2',1'],[2]]");
    CHECK(p.upper == 2);
    CHECK(p.lower == 2);
    CHECK(p.block_count == 2);
    CHECK(format_partition(p) == "[[1,2',1'],[2]]");

    CHECK(format_partition(one_block(2)) == "[[2',1']]");
    CHECK(format_partition(parse_partition("[[1],[2]]")) == "[[1],[2]]");
    CHECK(parse_partition("[]").points() == 0);

    CHECK_THROWS_AS(parse_partition("[[1,1]]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("[[1,3]]"), std::invalid_argument);  // point 2 missing
    CHECK_THROWS_AS(parse_partition("nonsense"), std::invalid_argument);

    for (const SetPartition& q : enumerate_nc(2, 3))
        CHECK(parse_partition(format_partition(q)) == q);
}

TEST_CASE("enumeration guard") {
    Limits tight;
    tight.max_points = 5;
    CHECK_THROWS_AS(enumerate_nc(3, 3, tight), LimitError);
    CHECK(enumerate_nc(3, 2, tight).size() == 42);
}
