#include <doctest.h>

#include <stdexcept>

#include <random>

#include "fusionkit/dims.hpp"
#include "fusionkit/fusion_engine.hpp"
#include "fusionkit/verify.hpp"

using namespace fusionkit;

namespace {

FusionAlphabet ahs(long s) {
    return FusionAlphabet::reflection(ModulusSpec::finite_order(s));
}

Decomposition dec(std::initializer_list<std::pair<Word, long>> terms) {
    Decomposition d;
    for (const auto& [w, m] : terms) d.add(w, BigInt(m));
    return d;
}

}  // namespace

TEST_CASE("fusing irreducibles") {
    CHECK(fuse_irreducibles(Word{0}, Word{0}, ahs(1)) ==
          dec({{{0, 0}, 1}, {{0}, 1}, {{}, 1}}));
    CHECK(fuse_irreducibles(Word{1}, Word{2}, ahs(3)) ==
          dec({{{1, 2}, 1}, {{0}, 1}, {{}, 1}}));
    CHECK(fuse_irreducibles(Word{}, Word{1, 2}, ahs(3)) == dec({{{1, 2}, 1}}));
    CHECK(fuse_irreducibles(Word{1, 2}, Word{}, ahs(3)) == dec({{{1, 2}, 1}}));
}

TEST_CASE("bilinear extension") {
    auto a3 = ahs(3);
    Decomposition q = dec({{{2}, 1}});
    CHECK(fuse_decompositions(Decomposition::unit(), q, a3) == q);

    CHECK(fuse_decompositions(dec({{{0}, 2}}), dec({{{0}, 1}}), ahs(1)) ==
          dec({{{0, 0}, 2}, {{0}, 2}, {{}, 2}}));

    CHECK(fuse_decompositions(dec({{{1}, 1}, {{}, 1}}), q, a3) ==
          dec({{{1, 2}, 1}, {{0}, 1}, {{}, 1}, {{2}, 1}}));
}

TEST_CASE("decomposition bookkeeping") {
    Decomposition d;
    d.add(Word{1}, 0);
    CHECK(d.empty());
    CHECK_THROWS_AS(d.add(Word{1}, -1), std::invalid_argument);
    d.add(Word{1}, 2);
    d.add(Word{1}, 3);
    CHECK(d.multiplicity(Word{1}) == 5);
    CHECK(d.multiplicity(Word{2}) == 0);
}

TEST_CASE("iterated basic products") {
    FusionContext four(ahs(4));
    CHECK(four.basic_tensor({0}) == dec({{{0}, 1}, {{}, 1}}));
    CHECK(four.basic_tensor({}) == Decomposition::unit());

    FusionContext three(ahs(3));
    CHECK(three.basic_tensor({1}) == dec({{{1}, 1}}));

    FusionContext two(ahs(2));
    CHECK(two.basic_tensor({1, 1}) == dec({{{1, 1}, 1}, {{0}, 1}, {{}, 1}}));

    CHECK_THROWS_AS(FusionContext(FusionAlphabet::orthogonal()).basic_tensor({1}),
                    std::invalid_argument);
}

TEST_CASE("trivial multiplicities") {
    FusionContext three(ahs(3));
    CHECK(three.trivial_multiplicity({1}) == 0);
    CHECK(three.trivial_multiplicity({0}) == 1);
    FusionContext two(ahs(2));
    CHECK(two.trivial_multiplicity({1, 1, 1, 1}) == 3);
}

TEST_CASE("hom dimensions") {
    FusionContext two(ahs(2));
    CHECK(two.hom_dimension({1}, {0}) == 0);
    CHECK(two.hom_dimension({1}, {1}) == 1);
    CHECK(two.hom_dimension({0}, {0}) == 2);
    FusionContext five(ahs(5));
    CHECK(five.hom_dimension({3}, {2}) == 0);
    CHECK(five.hom_dimension({}, {0}) == 1);
}

TEST_CASE("conversion to the tensor basis") {
    auto a2 = ahs(2);
    VirtualDecomposition one = irreducible_in_tensor_basis(Word{1}, a2);
    CHECK(one.size() == 1);
    CHECK(one.coefficient({1}) == 1);

    VirtualDecomposition zero = irreducible_in_tensor_basis(Word{0}, a2);
    CHECK(zero.size() == 2);
    CHECK(zero.coefficient({0}) == 1);
    CHECK(zero.coefficient({}) == -1);

    VirtualDecomposition pair = irreducible_in_tensor_basis(Word{1, 1}, a2);
    CHECK(pair.size() == 2);
    CHECK(pair.coefficient({1, 1}) == 1);
    CHECK(pair.coefficient({0}) == -1);
}

TEST_CASE("conversion roundtrip on random words") {
    for (long s : {1L, 2L, 3L}) {
        PropertyResult r = check_conversion_roundtrip(ahs(s), 99, 120, 6);
        INFO(r.name);
        CHECK(r.failures == 0);
        CHECK(r.cases >= 120);
    }
    PropertyResult inf = check_conversion_roundtrip(
        FusionAlphabet::reflection(ModulusSpec::infinite()), 99, 120, 5);
    CHECK(inf.failures == 0);
}

TEST_CASE("engine laws on random words") {
    std::vector<FusionAlphabet> instances =
        {ahs(1), ahs(2), ahs(3), FusionAlphabet::reflection(ModulusSpec::infinite()),
         FusionAlphabet::orthogonal(), FusionAlphabet::unitary()};
    for (const FusionAlphabet& a : instances) {
        INFO(a.instance_name(), " s=", format_modulus(a.modulus()));
        CHECK(check_associativity(a, 5, 60, 3).failures == 0);
        CHECK(check_conjugation_symmetry(a, 5, 80, 4).failures == 0);
        CHECK(check_frobenius_reciprocity(a, 5, 80, 3).failures == 0);
        CHECK(check_irreducibility_witness(a, 5, 120, 6).failures == 0);
    }
}

TEST_CASE("clebsch-gordan ladders") {
    CHECK(check_clebsch_gordan_s1(6).failures == 0);
    CHECK(check_orthogonal_two_letter_rule(6).failures == 0);

    // unitary instance: a repeated letter never matches its involution, so
    // the square of (0,0) is a single term, while the self-conjugate (0,1)
    // peels one boundary pair at a time
    auto au = FusionAlphabet::unitary();
    CHECK(fuse_irreducibles(Word{0, 0}, Word{0, 0}, au) == dec({{{0, 0, 0, 0}, 1}}));
    CHECK(fuse_irreducibles(Word{0, 1}, Word{0, 1}, au) ==
          dec({{{0, 1, 0, 1}, 1}, {{0, 1}, 1}, {{}, 1}}));
    Decomposition e = fuse_irreducibles(Word{0, 0}, involute(Word{0, 0}, au), au);
    CHECK(e.multiplicity(Word{}) == 1);
}

TEST_CASE("dimension morphism across fusion") {
    for (long n : {4L, 5L, 7L})
        CHECK(check_dimension_morphism(3, n, 17, 60, 4).failures == 0);
}

TEST_CASE("formulation cross-checks") {
    auto a1 = ahs(1);
    CHECK(cross_check_formulations(Word{0}, Word{0}, a1).ok());
    auto a3 = ahs(3);
    CHECK(cross_check_formulations(Word{1, 2}, Word{1}, a3).ok());
    CHECK(cross_check_formulations(Word{}, Word{}, a3).ok());
    CHECK(check_formulations_exhaustive(2, 5).failures == 0);
    CHECK(check_formulations_random_infinite(3, 60, 5, 2).failures == 0);
}
