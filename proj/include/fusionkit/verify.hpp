#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fusionkit/limits.hpp"
#include "fusionkit/word_algebra.hpp"

namespace fusionkit {

struct PropertyResult {
    std::string name;
    long cases = 0;
    long failures = 0;
    double millis = 0.0;
    std::string note;  // observed values worth reporting (ranks, collisions, ...)
    bool passed() const { return failures == 0; }
};

struct VerifyOptions {
    std::uint64_t seed = 12345;
    int jobs = 1;
    std::vector<long> s_values = {1, 2, 3};
    bool include_infinite = true;
    std::vector<int> n_values = {4, 5};
    int cases = 200;   // randomized cases per property instance
    Limits limits;
};

// --- word and fusion engine properties -------------------------------------

PropertyResult check_involution_laws(const FusionAlphabet& a, std::uint64_t seed, int cases,
                                     int max_len);
PropertyResult check_splitting_bounds(const FusionAlphabet& a, std::uint64_t seed, int cases,
                                      int max_len);
PropertyResult check_associativity(const FusionAlphabet& a, std::uint64_t seed, int cases,
                                   int max_word_len);
PropertyResult check_conjugation_symmetry(const FusionAlphabet& a, std::uint64_t seed,
                                          int cases, int max_word_len);
PropertyResult check_frobenius_reciprocity(const FusionAlphabet& a, std::uint64_t seed,
                                           int cases, int max_word_len);
PropertyResult check_irreducibility_witness(const FusionAlphabet& a, std::uint64_t seed,
                                            int cases, int max_word_len);
PropertyResult check_conversion_roundtrip(const FusionAlphabet& a, std::uint64_t seed,
                                          int cases, int max_word_len);
PropertyResult check_dimension_morphism(long s, long n, std::uint64_t seed,
                                        int cases, int max_word_len);
PropertyResult check_clebsch_gordan_s1(int max_k);
PropertyResult check_orthogonal_two_letter_rule(int max_k);
PropertyResult check_hom_table(long s);

// --- combinatorial / engine / rank agreement --------------------------------

PropertyResult check_triple_agreement(const ModulusSpec& m, int max_len, int infinite_range,
                                      const Limits& limits);
PropertyResult check_two_row_agreement(long s, int max_points, int n,
                                       const Limits& limits);

// --- diagram category -------------------------------------------------------

PropertyResult check_composition_identity(int max_diagram_points,
                                          const std::vector<int>& n_values,
                                          const Limits& limits);
PropertyResult check_tensor_identity(int max_total_points, const std::vector<int>& n_values,
                                     const Limits& limits);
PropertyResult check_involution_identity(int max_points, const std::vector<int>& n_values,
                                         const Limits& limits);
PropertyResult check_independence(int max_points, const std::vector<int>& full_rank_n,
                                  const std::vector<int>& logged_n, const Limits& limits);
PropertyResult check_one_block_vector(int max_l, const std::vector<int>& n_values,
                                      const Limits& limits);

// --- dimension ring ----------------------------------------------------------

PropertyResult check_d_table_values(const std::vector<long>& n_values);
PropertyResult check_d_linear_at_four(int max_k);
PropertyResult check_d_product_identity(int max_k, const std::vector<long>& n_values);
PropertyResult check_d_positivity(int max_k, const std::vector<long>& n_values);

// --- alternative formulation -------------------------------------------------

PropertyResult check_formulations_exhaustive(long s, int max_total_len);
PropertyResult check_formulations_random_infinite(std::uint64_t seed, int cases,
                                                  int max_total_len, int letter_range);

// --- suites -------------------------------------------------------------------

// name: "all" | "fusion" | "tannaka" | "dims" | "formulations".
// Properties of a suite are independent; they fan out over options.jobs
// threads and are reported in a fixed order.
std::vector<PropertyResult> run_suite(const std::string& name, const VerifyOptions& options);

}  // namespace fusionkit
