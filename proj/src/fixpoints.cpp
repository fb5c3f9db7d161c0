#include "qmforge/fixpoints.hpp"

namespace qmf {

std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::POSITIVE_SPEED: return "POSITIVE_SPEED";
    case Evidence::HOM_COEFFICIENT_CHANGE: return "HOM_COEFFICIENT_CHANGE";
    case Evidence::CLASS_CHANGE: return "CLASS_CHANGE";
  }
  return "?";
}

std::optional<std::vector<Rational>> hom_vector(const Sum& f) {
  if (f.mode() != Mode::BROOKS) return std::nullopt;
  std::vector<Rational> v(static_cast<std::size_t>(f.rank()), Rational(0));
  for (const auto& [w, c] : f.terms()) {
    if (w.size() != 1) return std::nullopt;
    v[static_cast<std::size_t>(w[0].index - 1)] = w[0].sign > 0 ? c : -c;
  }
  return v;
}

namespace {

bool certifies_nonzero(const ReducedLength& r) {
  return r.kind != ReducedLength::Kind::UNKNOWN && r.length >= 1;
}

}  // namespace

std::optional<std::pair<ReducedLength, std::string>> nonzero_certificate(
    const Sum& d) {
  if (d.is_zero()) return std::nullopt;
  ReducedLength r = certified_reduced_length(d);
  if (certifies_nonzero(r)) return std::make_pair(r, std::string("direct"));
  Decomposition dec = speed_decompose(d);
  int top = 0;
  for (const auto& [v, c] : dec.residue.terms()) top = std::max(top, sp_word(v));
  if (top > 0) {
    ReducedLength p;
    p.kind = ReducedLength::Kind::LOWER_BOUND;
    p.length = 1;
    p.upper = norm(d);
    p.certificate = "positive-speed";
    return std::make_pair(p, std::string("speed"));
  }
  Sum h = dec.residue;
  if (dec.lambda != 0) {
    Sum r2 = rot(d.rank());
    r2 *= dec.lambda;
    h += r2;
  }
  if (h.is_zero()) return std::nullopt;
  ReducedLength r3 = certified_reduced_length(h);
  if (certifies_nonzero(r3))
    return std::make_pair(r3, std::string(dec.lambda != 0
                                              ? "lambda*rot + residue"
                                              : "residue"));
  if (dec.lambda != 0 && dec.residue.is_zero()) {
    ReducedLength r4 = certified_reduced_length(rot(d.rank()));
    if (certifies_nonzero(r4)) return std::make_pair(r4, std::string("rot"));
  }
  return std::nullopt;
}

namespace {

bool is_a_letter(Letter l) { return l.index == kA; }

struct Shape {
  bool has_a = false, has_other = false;
  int k = 0;
};

Shape shape(const Word& w) {
  Shape s;
  BForm bf = b_form(w);
  s.k = bf.k();
  for (Letter l : bf.s) (is_a_letter(l) ? s.has_a : s.has_other) = true;
  return s;
}

std::optional<ExclusionWitness> make_evidence(const Sum& f, const NielsenWord& x,
                                              char label, bool strong_only) {
  ExclusionWitness w;
  w.X = x;
  w.case_label = label;
  Sum g = act(x, f);
  SpeedReport sg = speed(g);
  if (sg.value > 0) {
    w.evidence = Evidence::POSITIVE_SPEED;
    w.speed = std::move(sg);
    return w;
  }
  if (strong_only) return std::nullopt;
  SpeedReport sf = speed(f);
  if (sf.lambda == 0 && sg.lambda == 0) {
    auto hb = hom_vector(sf.residue), ha = hom_vector(sg.residue);
    if (hb && ha && *hb != *ha) {
      w.evidence = Evidence::HOM_COEFFICIENT_CHANGE;
      w.before = *hb;
      w.after = *ha;
      return w;
    }
  }
  if (auto c = nonzero_certificate(g - f)) {
    w.evidence = Evidence::CLASS_CHANGE;
    w.difference = c->first;
    w.difference_source = c->second;
    return w;
  }
  return std::nullopt;
}

ExclusionWitness exclude_impl(const Sum& f, int depth) {
  const int n = f.rank();
  SpeedReport s = speed(f);
  if (s.value > 0) {
    ExclusionWitness w;
    w.X = NielsenWord::identity();
    w.case_label = 'a';
    w.evidence = Evidence::POSITIVE_SPEED;
    w.speed = std::move(s);
    return w;
  }
  const Sum& g = s.residue;
  if (s.lambda == 0 && g.is_zero())
    throw ZeroClassError("fixpoints.exclude_fixpoint: f is equivalent to 0");

  struct Candidate {
    NielsenWord x;
    char label;
  };
  std::vector<Candidate> primary;
  if (s.lambda != 0) primary.push_back({NielsenWord::of(Gen::H), 'b'});

  const Word b = b_power(n, 1);
  std::optional<Word> mixed, all_a, all_other;
  bool homomorphism = true;
  for (const auto& [v, c] : g.terms()) {
    if (v == b) continue;
    if (v.size() > 1) homomorphism = false;
    Shape sh = shape(v);
    if (sh.has_a && sh.has_other) {
      if (!mixed) mixed = v;
    } else if (sh.k >= 2 && sh.has_a) {
      if (!all_a) all_a = v;
    } else if (sh.k >= 2) {
      if (!all_other) all_other = v;
    }
  }
  std::vector<std::string> notes;
  if (mixed) {
    primary.push_back({NielsenWord::of(Gen::H), 'c'});
    notes.push_back("case word " + to_string(*mixed));
  } else if (all_a) {
    primary.push_back({NielsenWord::of(Gen::P1), 'd'});
    notes.push_back("case word " + to_string(*all_a));
  } else if (all_other && depth < n - 1) {
    const int i = b_form(*all_other).s.front().index;
    const int j = n + 1 - i;
    NielsenWord pj = NielsenWord::p2_power(j);
    ExclusionWitness inner = exclude_impl(act(pj, f), depth + 1);
    primary.push_back({inner.X.then(pj), 'e'});
    notes.push_back("case word " + to_string(*all_other) + ", P2^" +
                    std::to_string(j));
  } else if (homomorphism) {
    auto hv = hom_vector(g);
    if (hv && (*hv)[kB - 1] != 0) {
      primary.push_back({NielsenWord::of(Gen::TINV), 'f'});
    } else if (hv) {
      for (int i = 1; i <= n; ++i)
        if ((*hv)[static_cast<std::size_t>(i - 1)] != 0) {
          const int j = ((kB - i) % n + n) % n;
          primary.push_back(
              {NielsenWord::of(Gen::TINV).then(NielsenWord::p2_power(j)), 'f'});
        }
    }
  }

  for (bool strong : {true, false})
    for (const Candidate& c : primary)
      if (auto w = make_evidence(f, c.x, c.label, strong)) {
        for (auto& t : notes) w->notes.push_back(t);
        return *w;
      }

  std::vector<NielsenWord> fallback = {NielsenWord::of(Gen::H),
                                       NielsenWord::of(Gen::P1),
                                       NielsenWord::of(Gen::TINV)};
  for (int j = 1; j < n; ++j)
    fallback.push_back(NielsenWord::of(Gen::TINV).then(NielsenWord::p2_power(j)));
  for (bool strong : {true, false})
    for (const NielsenWord& x : fallback)
      if (auto w = make_evidence(f, x, primary.empty() ? 'f' : primary[0].label,
                                 strong)) {
        w->notes.push_back("fallback generator " + to_string(x));
        return *w;
      }
  throw VerificationError(
      "fixpoints.exclude_fixpoint: no candidate produced verifiable evidence");
}

}  // namespace

ExclusionWitness exclude_fixpoint(const Sum& f) {
  if (f.mode() != Mode::BROOKS)
    throw ContractError("fixpoints.exclude_fixpoint: mode must be BROOKS");
  if (f.is_zero())
    throw ZeroClassError("fixpoints.exclude_fixpoint: f = 0");
  return exclude_impl(f, 0);
}

bool verify_witness(const Sum& f, const ExclusionWitness& w, std::string* why) {
  auto fail = [&](const std::string& m) {
    if (why) *why = m;
    return false;
  };
  Sum g = act(w.X, f);
  switch (w.evidence) {
    case Evidence::POSITIVE_SPEED: {
      if (!w.speed) return fail("missing speed report");
      SpeedReport s = speed(g);
      if (s.value <= 0) return fail("recomputed speed is 0");
      if (s.value != w.speed->value) return fail("speed value differs");
      return true;
    }
    case Evidence::HOM_COEFFICIENT_CHANGE: {
      SpeedReport sf = speed(f), sg = speed(g);
      if (sf.lambda != 0 || sg.lambda != 0) return fail("rot component present");
      auto hb = hom_vector(sf.residue), ha = hom_vector(sg.residue);
      if (!hb || !ha) return fail("not a homomorphism");
      if (*hb != w.before || *ha != w.after) return fail("coefficients differ");
      if (*hb == *ha) return fail("coefficients unchanged");
      return true;
    }
    case Evidence::CLASS_CHANGE: {
      auto c = nonzero_certificate(g - f);
      if (!c) return fail("difference not certified nonzero");
      return true;
    }
  }
  return fail("unknown evidence");
}

}  // namespace qmf
