#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qmforge/oracle.hpp"
#include "qmforge/relations.hpp"

namespace qmf {

// Which W_1 row applies on each side: 0 for m = 0, then (m>0, s != a'),
// (m>0, s = a'), (m<0, s != a'), (m<0, s = a') on the left, with a in place
// of a' on the right.
std::pair<int, int> row_combination(const Word& w);

// Two shortlex-first words per row combination, |w| <= 5, no b-powers.
std::vector<Word> stratified_corpus(int rank);

Word random_word(std::mt19937_64& rng, int rank, int min_len, int max_len);
// Up to `keys` phi-terms with coefficients in [-c, c] \ {0}.
Sum random_sum(std::mt19937_64& rng, int rank, int keys, int max_len, int c);
// A random combination of brooks_relation terms; equivalent to 0.
Sum random_relations(std::mt19937_64& rng, int rank, int count, int max_len,
                     int c);

std::vector<std::string> suite_names();
// Throws ContractError for an unknown suite name.
oracle::SuiteResult run_suite(const std::string& name, int rank,
                              std::optional<int> radius = std::nullopt);
// All suites, run concurrently.
std::vector<oracle::SuiteResult> run_all_suites(int rank,
                                                std::optional<int> radius);

}  // namespace qmf
