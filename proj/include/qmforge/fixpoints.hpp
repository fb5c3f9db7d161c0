#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qmforge/speed.hpp"

namespace qmf {

enum class Evidence { POSITIVE_SPEED, HOM_COEFFICIENT_CHANGE, CLASS_CHANGE };
std::string to_string(Evidence e);

struct ZeroClassError : ContractError {
  using ContractError::ContractError;
};

struct VerificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ExclusionWitness {
  NielsenWord X;
  char case_label = 'a';  // 'a'..'f' as in the dispatch order
  Evidence evidence = Evidence::POSITIVE_SPEED;
  // POSITIVE_SPEED: speed of X[f].
  std::optional<SpeedReport> speed;
  // HOM_COEFFICIENT_CHANGE: coefficients on a_1..a_n before and after.
  std::vector<Rational> before, after;
  // CLASS_CHANGE: a nonzero certificate for X[f] - [f].
  std::optional<ReducedLength> difference;
  std::string difference_source;
  std::vector<std::string> notes;
};

// Coefficients of phi(a_1..a_n) when every key of f is a single letter.
std::optional<std::vector<Rational>> hom_vector(const Sum& f);

// A certificate that [d] != 0, or nullopt.
std::optional<std::pair<ReducedLength, std::string>> nonzero_certificate(
    const Sum& d);

ExclusionWitness exclude_fixpoint(const Sum& f);
bool verify_witness(const Sum& f, const ExclusionWitness& w,
                    std::string* why = nullptr);

}  // namespace qmf
