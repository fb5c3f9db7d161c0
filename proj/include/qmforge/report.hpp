#pragma once

#include <string>

#include "json.hpp"

#include "qmforge/fixpoints.hpp"
#include "qmforge/oracle.hpp"

namespace qmf {

using json = nlohmann::ordered_json;

// Supports come out in shortlex order and rationals as "p/q" strings.
json to_json(const Rational& q);
json to_json(const Word& w);
json to_json(const Sum& f);
json to_json(const Trace& t);
json to_json(const ReducedLength& r);
json to_json(const SpeedReport& s, bool with_trace = false);
json to_json(const ExclusionWitness& w);
json to_json(const NRep& r);
json to_json(const SupportGeometry& g);
json to_json(const GaugeSeries& g);
json to_json(const NormalFormCheck& c);
json to_json(const oracle::BallReport& b);
json to_json(const oracle::EquivResult& e);
json to_json(const oracle::SuiteResult& s);

std::string to_text(const ReducedLength& r);
std::string to_text(const SpeedReport& s);
std::string to_text(const ExclusionWitness& w);
std::string to_text(const NRep& r);
std::string to_text(const oracle::BallReport& b);
std::string to_text(const oracle::SuiteResult& s);

}  // namespace qmf
