#include <doctest.h>

#include <stdexcept>

#include <random>

#include "fusionkit/word_algebra.hpp"

using namespace fusionkit;

namespace {

FusionAlphabet ahs(long s) {
    return FusionAlphabet::reflection(ModulusSpec::finite_order(s));
}

Word rand_word(std::mt19937_64& rng, const FusionAlphabet& a, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    Word w;
    for (int i = len(rng); i > 0; --i) {
        switch (a.kind()) {
            case InstanceKind::reflection:
                if (a.modulus().finite) {
                    std::uniform_int_distribution<long> d(0, a.modulus().order - 1);
                    w.push_back(d(rng));
                } else {
                    std::uniform_int_distribution<long> d(-3, 3);
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

std::vector<FusionAlphabet> all_instances() {
    return {ahs(1), ahs(2), ahs(3), ahs(5), FusionAlphabet::reflection(ModulusSpec::infinite()),
            FusionAlphabet::orthogonal(), FusionAlphabet::unitary()};
}

}  // namespace

TEST_CASE("letter normalization") {
    CHECK(normalize_letter(-1, ModulusSpec::finite_order(3)) == 2);
    CHECK(normalize_letter(5, ModulusSpec::finite_order(5)) == 0);
    CHECK(normalize_letter(-7, ModulusSpec::infinite()) == -7);
    CHECK(normalize_letter(0, ModulusSpec::finite_order(1)) == 0);
    CHECK_THROWS_AS(ModulusSpec::finite_order(0), std::invalid_argument);
}

TEST_CASE("involution reverses and negates") {
    CHECK(involute(Word{1, 2, 0}, ahs(3)) == Word{0, 1, 2});
    CHECK(involute(Word{0, 0}, ahs(1)) == Word{0, 0});
    CHECK(involute(Word{}, ahs(4)).empty());
    CHECK(involute(Word{0, 1}, FusionAlphabet::unitary()) == Word{0, 1});
    CHECK(involute(Word{-2, 5}, FusionAlphabet::reflection(ModulusSpec::infinite())) ==
          Word{-5, 2});
}

TEST_CASE("boundary fusion") {
    CHECK(dot(Word{1, 2}, Word{2, 0}, ahs(3)) == Word{1, 1, 0});
    CHECK(dot(Word{1}, Word{1}, ahs(2)) == Word{0});  // a fused zero letter is kept
    CHECK_FALSE(dot(Word{1}, Word{1}, FusionAlphabet::orthogonal()).has_value());
    CHECK_FALSE(dot(Word{}, Word{1}, ahs(3)).has_value());
    CHECK_FALSE(dot(Word{1}, Word{}, ahs(3)).has_value());
}

TEST_CASE("splitting enumeration") {
    auto a3 = ahs(3);
    auto splits = enumerate_splittings(Word{1}, Word{2}, a3);
    REQUIRE(splits.size() == 2);
    CHECK(splits[0] == Splitting{Word{1}, Word{}, Word{2}});
    CHECK(splits[1] == Splitting{Word{}, Word{1}, Word{}});

    auto trivial = enumerate_splittings(Word{}, Word{1}, a3);
    REQUIRE(trivial.size() == 1);
    CHECK(trivial[0] == Splitting{Word{}, Word{}, Word{1}});

    auto a2 = ahs(2);
    auto three = enumerate_splittings(Word{1, 1}, Word{1, 1}, a2);
    REQUIRE(three.size() == 3);
    for (std::size_t i = 0; i < three.size(); ++i) CHECK(three[i].z.size() == i);
}

TEST_CASE("splittings match the definition on random words") {
    std::mt19937_64 rng(7);
    for (const FusionAlphabet& a : all_instances()) {
        for (int trial = 0; trial < 300; ++trial) {
            Word x = rand_word(rng, a, 5), y = rand_word(rng, a, 5);
            auto splits = enumerate_splittings(x, y, a);
            std::size_t expected = 0;
            for (std::size_t zlen = 0; zlen <= std::min(x.size(), y.size()); ++zlen) {
                Word z(x.end() - static_cast<std::ptrdiff_t>(zlen), x.end());
                Word zbar = involute(z, a);
                if (Word(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(zlen)) == zbar)
                    ++expected;
            }
            CHECK(splits.size() == expected);
            REQUIRE(!splits.empty());
            CHECK(splits.front().z.empty());
            CHECK(splits.size() <= std::min(x.size(), y.size()) + 1);
            for (const Splitting& s : splits) {
                Word rebuilt = s.v;
                rebuilt.insert(rebuilt.end(), s.z.begin(), s.z.end());
                CHECK(rebuilt == x);
                Word expected_y = involute(s.z, a);
                expected_y.insert(expected_y.end(), s.w.begin(), s.w.end());
                CHECK(expected_y == y);
            }
        }
    }
}

TEST_CASE("involution laws on random words") {
    std::mt19937_64 rng(11);
    for (const FusionAlphabet& a : all_instances()) {
        for (int trial = 0; trial < 300; ++trial) {
            Word x = rand_word(rng, a, 6), y = rand_word(rng, a, 6);
            CHECK(involute(involute(x, a), a) == x);
            Word xy = x;
            xy.insert(xy.end(), y.begin(), y.end());
            Word anti = involute(y, a);
            Word tail = involute(x, a);
            anti.insert(anti.end(), tail.begin(), tail.end());
            CHECK(involute(xy, a) == anti);
            auto d = dot(x, y, a);
            auto mirrored = dot(involute(y, a), involute(x, a), a);
            if (d)
                CHECK(mirrored == involute(*d, a));
            else
                CHECK_FALSE(mirrored.has_value());
        }
    }
}

TEST_CASE("word and modulus text formats") {
    auto a = ahs(3);
    CHECK(format_word(Word{1, 2, 0}) == "1,2,0");
    CHECK(format_word(Word{}) == "");
    CHECK(parse_word("1,2,0", a) == Word{1, 2, 0});
    CHECK(parse_word("", a) == Word{});
    CHECK(parse_word("-1, 4", a) == Word{2, 1});  // residues are canonicalized
    CHECK(parse_word("-5", FusionAlphabet::reflection(ModulusSpec::infinite())) == Word{-5});
    CHECK_THROWS_AS(parse_word("1,x", a), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("2", FusionAlphabet::unitary()), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("0", FusionAlphabet::orthogonal()), std::invalid_argument);

    CHECK(format_modulus(ModulusSpec::finite_order(7)) == "7");
    CHECK(format_modulus(ModulusSpec::infinite()) == "inf");
    CHECK(parse_modulus("inf") == ModulusSpec::infinite());
    CHECK(parse_modulus("4") == ModulusSpec::finite_order(4));
    CHECK_THROWS_AS(parse_modulus("zero"), std::invalid_argument);
    CHECK_THROWS_AS(parse_modulus("-2"), std::invalid_argument);
}

TEST_CASE("instance letter domains") {
    CHECK(FusionAlphabet::orthogonal().letter_valid(1));
    CHECK_FALSE(FusionAlphabet::orthogonal().letter_valid(0));
    CHECK(FusionAlphabet::unitary().letter_valid(0));
    CHECK(FusionAlphabet::unitary().letter_valid(1));
    CHECK_FALSE(FusionAlphabet::unitary().letter_valid(2));
    CHECK(FusionAlphabet::unitary().involute_letter(0) == 1);
    CHECK_FALSE(FusionAlphabet::unitary().fuse_letters(0, 1).has_value());
    CHECK(ahs(4).fuse_letters(3, 2) == 1);
    CHECK(FusionAlphabet::from_name("ahs", ModulusSpec::finite_order(2)).instance_name() ==
          "ahs");
    CHECK_THROWS_AS(FusionAlphabet::from_name("bogus", ModulusSpec::finite_order(2)),
                    std::invalid_argument);
}
