#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "qmforge/expr.hpp"
#include "qmforge/report.hpp"
#include "qmforge/verify.hpp"

using namespace qmf;

namespace {

enum Exit { OK = 0, PARSE = 2, CONTRACT = 3, VERIFY = 4 };

struct Options {
  int rank = 2;
  std::optional<int> radius;
  std::string format = "text";
  bool json() const { return format == "json"; }
};

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json())
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text << "\n";
}

json header(const std::string& command, const Options& o) {
  return {{"command", command}, {"rank", o.rank}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qmforge: counting quasimorphisms on free groups"};
  app.require_subcommand(1);
  Options opt;
  if (const char* env = std::getenv("QMFORGE_RANK")) {
    try {
      opt.rank = std::stoi(env);
    } catch (...) {
      std::cerr << "error: QMFORGE_RANK is not an integer\n";
      return PARSE;
    }
  }
  app.add_option("--rank", opt.rank, "rank of the free group")
      ->check(CLI::Range(2, kMaxRank));
  app.add_option("--radius", opt.radius, "ball radius for oracle checks");
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string expr, word, xword, suite;
  int n = 1, L = 0;

  auto* eval = app.add_subcommand("eval", "evaluate EXPR at WORD");
  eval->add_option("EXPR", expr)->required();
  eval->add_option("WORD", word)->required();
  auto* norm_cmd = app.add_subcommand("norm", "length norm of EXPR");
  norm_cmd->add_option("EXPR", expr)->required();
  auto* reduced = app.add_subcommand("reduced", "certified reduced length");
  reduced->add_option("EXPR", expr)->required();
  auto* nrep = app.add_subcommand("nrep", "n-representative of EXPR");
  nrep->add_option("EXPR", expr)->required();
  nrep->add_option("N", n)->required()->check(CLI::PositiveNumber);
  auto* nf = app.add_subcommand("normal-form", "normal form of EXPR");
  nf->add_option("EXPR", expr)->required();
  auto* sp = app.add_subcommand("speed", "speed of T^-1 on EXPR");
  sp->add_option("EXPR", expr)->required();
  auto* act_cmd = app.add_subcommand("act", "apply a Nielsen word");
  act_cmd->add_option("XWORD", xword)->required();
  act_cmd->add_option("EXPR", expr)->required();
  auto* ex = app.add_subcommand("exclude-fixpoint", "fixpoint exclusion witness");
  ex->add_option("EXPR", expr)->required();
  auto* ver = app.add_subcommand("verify", "run oracle suites");
  ver->add_option("SUITE", suite);
  auto* ball = app.add_subcommand("ball", "Cayley ball of radius L");
  ball->add_option("L", L)->required()->check(CLI::NonNegativeNumber);
  ball->add_option("EXPR", expr, "report the sup of |EXPR| on the ball");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? OK : PARSE;
  }

  try {
    if (*eval) {
      Sum f = parse_sum(expr, opt.rank);
      Word w = parse_word(word, opt.rank);
      Rational v = evaluate(f, w);
      json j = header("eval", opt);
      j["expr"] = format_sum(f);
      j["word"] = to_string(w);
      j["value"] = to_string(v);
      emit(opt, j, to_plain(v));
    } else if (*norm_cmd) {
      Sum f = parse_sum(expr, opt.rank);
      int v = norm(f);
      json j = header("norm", opt);
      j["expr"] = format_sum(f);
      j["norm"] = v;
      emit(opt, j, std::to_string(v));
    } else if (*reduced) {
      Sum f = parse_sum(expr, opt.rank);
      ReducedLength r = certified_reduced_length(f);
      json j = header("reduced", opt);
      j["expr"] = format_sum(f);
      j["reduced"] = to_json(r);
      emit(opt, j, to_text(r));
    } else if (*nrep) {
      Sum f = parse_sum(expr, opt.rank);
      json j = header("nrep", opt);
      j["expr"] = format_sum(f);
      j["n"] = n;
      std::string text;
      if (f.size() == 1 && f.terms().begin()->second == 1 &&
          !is_letter_power(f.terms().begin()->first, kB)) {
        NRep r = nrep_factors(f.terms().begin()->first, n);
        j["factors"] = to_json(r);
        text = to_text(r);
        j["result"] = to_json(r.to_sum());
      } else {
        Sum g = n_representative_sum(f, n);
        j["result"] = to_json(g);
        text = format_sum(g);
      }
      emit(opt, j, text);
    } else if (*nf) {
      Sum f = parse_sum(expr, opt.rank);
      Rewrite r = normal_form(f);
      NormalFormCheck c = is_normal_form(r.sum);
      bool sound = trace_sound(f, r.sum, r.trace);
      json j = header("normal-form", opt);
      j["expr"] = format_sum(f);
      j["result"] = to_json(r.sum);
      j["check"] = to_json(c);
      j["trace"] = to_json(r.trace);
      j["trace_sound"] = sound;
      emit(opt, j, format_sum(r.sum));
      if (!c.ok || !sound) {
        std::cerr << "error: normal form failed its own check\n";
        return VERIFY;
      }
    } else if (*sp) {
      Sum f = parse_sum(expr, opt.rank);
      SpeedReport s = speed(f);
      json j = header("speed", opt);
      j["expr"] = format_sum(f);
      j["speed"] = to_json(s);
      emit(opt, j, to_text(s));
    } else if (*act_cmd) {
      NielsenWord x = NielsenWord::parse(xword);
      Sum f = parse_sum(expr, opt.rank);
      Sum g = act(x, f);
      json j = header("act", opt);
      j["X"] = to_string(x);
      j["expr"] = format_sum(f);
      j["result"] = to_json(g);
      emit(opt, j, format_sum(g));
    } else if (*ex) {
      Sum f = parse_sum(expr, opt.rank);
      ExclusionWitness w = exclude_fixpoint(f);
      std::string why;
      bool ok = verify_witness(f, w, &why);
      json j = header("exclude-fixpoint", opt);
      j["expr"] = format_sum(f);
      j["witness"] = to_json(w);
      j["verified"] = ok;
      emit(opt, j, to_text(w));
      if (!ok) {
        std::cerr << "error: witness did not re-verify: " << why << "\n";
        return VERIFY;
      }
    } else if (*ver) {
      std::vector<oracle::SuiteResult> rs;
      if (suite.empty() || suite == "all")
        rs = run_all_suites(opt.rank, opt.radius);
      else
        rs.push_back(run_suite(suite, opt.rank, opt.radius));
      json j = header("verify", opt);
      j["suites"] = json::array();
      std::string text;
      bool all = true;
      for (const auto& r : rs) {
        j["suites"].push_back(to_json(r));
        text += (text.empty() ? "" : "\n") + to_text(r);
        all = all && r.pass;
      }
      j["pass"] = all;
      emit(opt, j, text);
      if (!all) return VERIFY;
    } else if (*ball) {
      json j = header("ball", opt);
      j["radius"] = L;
      if (expr.empty()) {
        j["size"] = ball_size(opt.rank, L);
        emit(opt, j, std::to_string(ball_size(opt.rank, L)));
      } else {
        Sum f = parse_sum(expr, opt.rank);
        oracle::BallReport b = oracle::sup_on_ball(f, L);
        j["expr"] = format_sum(f);
        j["sup"] = to_json(b);
        emit(opt, j, to_text(b));
      }
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return PARSE;
  } catch (const ContractError& e) {
    std::cerr << "error: contract violation: " << e.what() << "\n";
    return CONTRACT;
  } catch (const VerificationError& e) {
    std::cerr << "error: verification failed: " << e.what() << "\n";
    return VERIFY;
  }
  return OK;
}
