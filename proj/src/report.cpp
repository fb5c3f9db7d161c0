#include "qmforge/report.hpp"

#include <sstream>

#include "qmforge/expr.hpp"

namespace qmf {

json to_json(const Rational& q) { return to_string(q); }
json to_json(const Word& w) { return to_string(w); }

json to_json(const Sum& f) {
  json terms = json::array();
  for (const auto& [v, c] : f.terms())
    terms.push_back({{"word", to_string(v)}, {"coef", to_string(c)}});
  return {{"mode", f.mode() == Mode::BROOKS ? "BROOKS" : "COUNTING"},
          {"rank", f.rank()},
          {"terms", terms},
          {"text", format_sum(f)}};
}

json to_json(const Trace& t) {
  json steps = json::array();
  for (const TraceStep& s : t.steps)
    steps.push_back({{"kind", to_string(s.kind)},
                     {"base", to_string(s.base)},
                     {"coef", to_string(s.coef)}});
  return steps;
}

json to_json(const ReducedLength& r) {
  json j = {{"kind", to_string(r.kind)},
            {"length", r.length},
            {"upper", r.upper},
            {"certificate", r.certificate}};
  j["witness"] = r.witness ? json(to_string(*r.witness)) : json(nullptr);
  j["letter"] = r.letter ? json(std::string(1, letter_char(*r.letter)))
                         : json(nullptr);
  return j;
}

json to_json(const SpeedReport& s, bool with_trace) {
  json j = {{"value", s.value},
            {"witness", s.witness ? json(to_string(*s.witness)) : json(nullptr)},
            {"lambda", to_string(s.lambda)},
            {"residue", to_json(s.residue)}};
  j["trace_steps"] = s.trace.size();
  if (with_trace) j["trace"] = to_json(s.trace);
  j["trail"] = s.trail;
  return j;
}

namespace {

json rational_vector(const std::vector<Rational>& v) {
  json a = json::array();
  for (const Rational& q : v) a.push_back(to_string(q));
  return a;
}

}  // namespace

json to_json(const ExclusionWitness& w) {
  json j = {{"X", to_string(w.X)},
            {"case", std::string(1, w.case_label)},
            {"evidence", to_string(w.evidence)}};
  if (w.speed) j["speed"] = to_json(*w.speed);
  if (w.evidence == Evidence::HOM_COEFFICIENT_CHANGE) {
    j["before"] = rational_vector(w.before);
    j["after"] = rational_vector(w.after);
  }
  if (w.difference) {
    j["difference"] = to_json(*w.difference);
    j["difference_source"] = w.difference_source;
  }
  j["notes"] = w.notes;
  return j;
}

json to_json(const NRep& r) {
  auto factors = [](const std::vector<Factor>& fs) {
    json a = json::array();
    for (const Factor& f : fs)
      a.push_back({{"word", to_string(f.word)},
                   {"index", f.index},
                   {"sign", f.sign > 0 ? "+" : "-"}});
    return a;
  };
  auto words = [](const std::vector<Word>& ws) {
    json a = json::array();
    for (const Word& w : ws) a.push_back(to_string(w));
    return a;
  };
  return {{"base", to_string(r.base)},
          {"n", r.n},
          {"middle", to_string(r.middle)},
          {"left", factors(r.left)},
          {"right", factors(r.right)},
          {"L+", words(r.Lplus())},
          {"L-", words(r.Lminus())},
          {"R+", words(r.Rplus())},
          {"R-", words(r.Rminus())},
          {"sum", to_json(r.to_sum())}};
}

json to_json(const SupportGeometry& g) {
  json sq = json::array();
  for (const SquareLength& s : g.squares)
    sq.push_back({{"i", s.i}, {"j", s.j}, {"length", s.length}, {"count", s.count}});
  return {{"base", to_string(g.base)},
          {"n", g.n},
          {"kind", to_string(g.kind)},
          {"squares", sq},
          {"n_b", g.n_b ? json(*g.n_b) : json("NEG-INFINITY")},
          {"E_b_nonempty", g.E_b_nonempty},
          {"max_length", g.max_length}};
}

json to_json(const GaugeSeries& g) {
  json a = json::array();
  for (const GaugeSample& s : g.samples)
    a.push_back({{"n", s.n},
                 {"tag", to_string(s.tag)},
                 {"length", s.length},
                 {"upper", s.upper},
                 {"ratio", s.ratio}});
  return {{"gauge", to_string(g.gauge)}, {"samples", a}};
}

json to_json(const NormalFormCheck& c) {
  json j = {{"ok", c.ok}, {"condition", c.condition}};
  if (c.pair)
    j["pair"] = {to_string(c.pair->first), to_string(c.pair->second)};
  else
    j["pair"] = nullptr;
  return j;
}

json to_json(const oracle::BallReport& b) {
  return {{"radius", b.radius},
          {"sup", to_string(b.sup)},
          {"argmax", to_string(b.argmax)},
          {"count", b.count}};
}

json to_json(const oracle::EquivResult& e) {
  json a = json::array();
  for (const auto& b : e.sups) a.push_back(to_json(b));
  return {{"verdict", oracle::to_string(e.verdict)}, {"sups", a}};
}

json to_json(const oracle::SuiteResult& s) {
  return {{"suite", s.name},
          {"pass", s.pass},
          {"checks", s.checks},
          {"detail", s.detail}};
}

std::string to_text(const ReducedLength& r) {
  std::ostringstream o;
  o << to_string(r.kind) << " length " << r.length << " (upper " << r.upper
    << ", " << r.certificate;
  if (r.witness) o << ", witness " << to_string(*r.witness);
  if (r.letter) o << ", letter " << letter_char(*r.letter);
  o << ")";
  return o.str();
}

std::string to_text(const SpeedReport& s) {
  std::ostringstream o;
  o << "speed " << s.value;
  if (s.witness) o << " witness " << to_string(*s.witness);
  o << " lambda " << to_plain(s.lambda) << " residue " << format_sum(s.residue);
  return o.str();
}

std::string to_text(const ExclusionWitness& w) {
  std::ostringstream o;
  o << "X = " << to_string(w.X) << " case " << w.case_label << " "
    << to_string(w.evidence);
  if (w.speed) {
    o << " speed " << w.speed->value;
    if (w.speed->witness) o << " witness " << to_string(*w.speed->witness);
  }
  if (w.evidence == Evidence::HOM_COEFFICIENT_CHANGE) {
    o << " before (";
    for (std::size_t i = 0; i < w.before.size(); ++i)
      o << (i ? ", " : "") << to_plain(w.before[i]);
    o << ") after (";
    for (std::size_t i = 0; i < w.after.size(); ++i)
      o << (i ? ", " : "") << to_plain(w.after[i]);
    o << ")";
  }
  if (w.difference)
    o << " difference " << to_text(*w.difference) << " via "
      << w.difference_source;
  return o.str();
}

std::string to_text(const NRep& r) {
  std::ostringstream o;
  o << "middle " << to_string(r.middle) << "\n";
  o << format_sum(r.to_sum());
  return o.str();
}

std::string to_text(const oracle::BallReport& b) {
  std::ostringstream o;
  o << "L=" << b.radius << " words " << b.count << " sup " << to_plain(b.sup)
    << " at " << to_string(b.argmax);
  return o.str();
}

std::string to_text(const oracle::SuiteResult& s) {
  std::ostringstream o;
  o << (s.pass ? "PASS " : "FAIL ") << s.name << " (" << s.checks << " checks)";
  if (!s.detail.empty()) o << " " << s.detail;
  return o.str();
}

}  // namespace qmf
