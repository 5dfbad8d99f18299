// weylcent: exact arithmetic, centralizers, and commutativity certificates
// for differential operators in Weyl algebras over Q and F_p.

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <json.hpp>

#include "weylcent/centralizer.hpp"
#include "weylcent/certifier.hpp"
#include "weylcent/parser.hpp"
#include "weylcent/weyl.hpp"

namespace {

using nlohmann::ordered_json;
using namespace weylcent;

// Exit codes are part of the interface:
//   0 success / COMMUTE / commutative
//   1 NOT_COMMUTE
//   2 usage, parse, or domain error
//   3 centralizer not commutative
//   4 INCONCLUSIVE
//   5 no fraction witness within the degree bound
constexpr int kOk = 0;
constexpr int kNotCommute = 1;
constexpr int kError = 2;
constexpr int kNonCommutative = 3;
constexpr int kInconclusive = 4;
constexpr int kNotFound = 5;

struct Options {
  std::vector<std::string> exprs;
  std::optional<std::uint64_t> mod;
  int nvars = 1;
  std::optional<int> degree;
  bool json = false;
  bool no_cross_check = false;
  int max_primes = 64;
};

Prime require_mod(const Options& opt) {
  if (!opt.mod) throw Error("--mod <p> is required for this subcommand");
  return Prime(*opt.mod);
}

int degree_or_default(const Options& opt, Prime p) {
  if (opt.degree) return *opt.degree;
  return 2 * static_cast<int>(p.value());
}

WeylQ parse_q(const Options& opt, std::size_t i) {
  return parse_rational(opt.exprs.at(i), opt.nvars);
}

WeylFp parse_p(const Options& opt, std::size_t i, Prime p) {
  return parse_fp(opt.exprs.at(i), opt.nvars, p);
}

void require_rational_mode(const Options& opt) {
  if (opt.mod) throw Error("this subcommand works over Q; drop --mod");
  if (opt.nvars != 1) throw Error("this subcommand needs --vars 1");
}

int run_product(const Options& opt, bool commutator_mode) {
  std::string result;
  if (opt.mod) {
    Prime p = require_mod(opt);
    WeylFp a = parse_p(opt, 0, p), b = parse_p(opt, 1, p);
    result = to_string(commutator_mode ? commutator(a, b) : a * b);
  } else {
    WeylQ a = parse_q(opt, 0), b = parse_q(opt, 1);
    result = to_string(commutator_mode ? commutator(a, b) : a * b);
  }
  if (opt.json) {
    ordered_json j{{"result", result}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << result << "\n";
  }
  return kOk;
}

int run_centralizer(const Options& opt) {
  Prime p = require_mod(opt);
  WeylFp a = parse_p(opt, 0, p);
  int degree = degree_or_default(opt, p);
  CentralizerBasis cb = centralizer_basis(a, degree);

  if (opt.json) {
    ordered_json j;
    j["p"] = p.value();
    j["nvars"] = opt.nvars;
    j["degree"] = degree;
    ordered_json basis = ordered_json::array();
    for (const WeylFp& b : cb.basis) basis.push_back(to_string(b));
    j["basis"] = std::move(basis);
    j["commutative"] = cb.commutative;
    if (cb.witness)
      j["witness"] = {to_string(cb.witness->first), to_string(cb.witness->second)};
    std::cout << j.dump(2) << "\n";
  } else {
    for (const WeylFp& b : cb.basis) std::cout << to_string(b) << "\n";
    std::cout << "commutative: " << (cb.commutative ? "true" : "false") << "\n";
    if (cb.witness)
      std::cout << "witness: " << to_string(cb.witness->first) << ", "
                << to_string(cb.witness->second) << "\n";
  }
  return cb.commutative ? kOk : kNonCommutative;
}

int run_decompose(const Options& opt) {
  Prime p = require_mod(opt);
  if (opt.nvars != 1) throw Error("decompose needs --vars 1");
  WeylFp a = parse_p(opt, 0, p);
  CenterDecomposition dec = decompose_over_center(a);

  if (opt.json) {
    ordered_json j;
    j["p"] = p.value();
    j["nvars"] = 1;
    ordered_json parts = ordered_json::array();
    for (const auto& [ij, z] : dec.parts) {
      parts.push_back(ordered_json{{"i", ij.first}, {"j", ij.second}, {"z", to_string(z)}});
    }
    j["parts"] = std::move(parts);
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& [ij, z] : dec.parts) {
      std::cout << "(" << ij.first << "," << ij.second << "): " << to_string(z) << "\n";
    }
  }
  return kOk;
}

int run_fraction_witness(const Options& opt) {
  Prime p = require_mod(opt);
  if (opt.nvars != 1) throw Error("fraction-witness needs --vars 1");
  WeylFp a = parse_p(opt, 0, p);
  WeylFp b = parse_p(opt, 1, p);
  int degree = degree_or_default(opt, p);

  std::optional<FractionWitness> w = fraction_witness(a, b, degree);
  if (!w) {
    std::cerr << "no witness within degree bound " << degree
              << " (the bound may be too small)\n";
    return kNotFound;
  }
  if (b * w->z2 != w->z1) throw Error("internal check failed: b*z2 != z1");

  if (opt.json) {
    ordered_json j;
    j["p"] = p.value();
    j["degree"] = degree;
    j["b"] = to_string(w->b);
    j["z1"] = to_string(w->z1);
    j["z2"] = to_string(w->z2);
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "z1: " << to_string(w->z1) << "\n";
    std::cout << "z2: " << to_string(w->z2) << "\n";
  }
  return kOk;
}

ordered_json report_json(const CertificateReport& report) {
  ordered_json j;
  j["verdict"] = to_string(report.verdict);
  if (report.verdict == Verdict::Inconclusive) j["reason"] = report.reason;
  j["majorant_bound"] = report.majorant.get_str();
  j["prime_product"] = report.prime_product.get_str();
  ordered_json primes = ordered_json::array();
  for (const PrimeOutcome& o : report.primes) {
    ordered_json e;
    e["p"] = o.p;
    switch (o.status) {
      case PrimeOutcome::Status::Pass: e["status"] = "pass"; break;
      case PrimeOutcome::Status::Fail: e["status"] = "fail"; break;
      case PrimeOutcome::Status::Skipped: e["status"] = "skipped"; break;
    }
    if (!o.skip_reason.empty()) e["reason"] = o.skip_reason;
    if (o.trace) {
      e["trace"] = ordered_json{{"tot_a", o.trace->tot_a},
                                {"a_central", o.trace->a_central},
                                {"aP_commutes", o.trace->a_p_commutes},
                                {"aQ_commutes", o.trace->a_q_commutes},
                                {"PQ_commutes", o.trace->p_q_commutes}};
    }
    primes.push_back(std::move(e));
  }
  j["primes"] = std::move(primes);
  if (report.cross_checked()) {
    j["cross_check"] = ordered_json{{"commutator", to_string(*report.cross_commutator)},
                                    {"is_zero", report.cross_zero()}};
  } else {
    j["cross_check"] = nullptr;
  }
  return j;
}

void print_report_text(const CertificateReport& report) {
  std::cout << "verdict: " << to_string(report.verdict) << "\n";
  if (report.verdict == Verdict::Inconclusive)
    std::cout << "reason: " << report.reason << "\n";
  std::cout << "majorant bound: " << report.majorant.get_str() << "\n";
  std::cout << "prime product: " << report.prime_product.get_str() << "\n";
  for (const PrimeOutcome& o : report.primes) {
    std::cout << "prime " << o.p << ": ";
    switch (o.status) {
      case PrimeOutcome::Status::Pass: std::cout << "pass"; break;
      case PrimeOutcome::Status::Fail: std::cout << "fail"; break;
      case PrimeOutcome::Status::Skipped:
        std::cout << "skipped (" << o.skip_reason << ")";
        break;
    }
    if (o.trace) {
      std::cout << " tot(a)=" << o.trace->tot_a
                << " central=" << (o.trace->a_central ? "yes" : "no")
                << " [a,P]=0:" << (o.trace->a_p_commutes ? "yes" : "no")
                << " [a,Q]=0:" << (o.trace->a_q_commutes ? "yes" : "no")
                << " [P,Q]=0:" << (o.trace->p_q_commutes ? "yes" : "no");
    }
    std::cout << "\n";
  }
  if (report.cross_checked()) {
    std::cout << "cross-check: [P,Q] = " << to_string(*report.cross_commutator) << "\n";
  } else {
    std::cout << "cross-check: skipped\n";
  }
}

int verdict_exit(const CertificateReport& report) {
  switch (report.verdict) {
    case Verdict::Commute: return kOk;
    case Verdict::NotCommute: return kNotCommute;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int run_certify(const Options& opt, bool with_pipeline) {
  require_rational_mode(opt);
  CertifyOptions copts;
  copts.cross_check = !opt.no_cross_check;
  copts.max_primes = opt.max_primes;

  CertificateReport report;
  if (with_pipeline) {
    report = theorem_pipeline(parse_q(opt, 0), parse_q(opt, 1), parse_q(opt, 2), copts);
  } else {
    report = certify_zero_commutator(parse_q(opt, 0), parse_q(opt, 1), copts);
  }

  if (opt.json) {
    std::cout << report_json(report).dump(2) << "\n";
  } else {
    print_report_text(report);
  }
  return verdict_exit(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Weyl algebra toolkit: products, centralizers over F_p, "
               "and mod-p commutativity certificates"};
  app.require_subcommand(1);

  Options opt;
  app.add_option("--mod", opt.mod, "prime modulus p (coefficients in F_p; omit for Q)");
  app.add_option("--vars", opt.nvars, "number of variables n (default 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--degree", opt.degree, "degree bound D (default 2p)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--json", opt.json, "emit JSON instead of text");
  app.add_flag("--no-cross-check", opt.no_cross_check,
               "skip the direct rational commutator computation");
  app.add_option("--max-primes", opt.max_primes,
                 "certificate prime budget (default 64)")
      ->check(CLI::PositiveNumber);

  auto add_sub = [&](const char* name, const char* desc, int nexprs) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();
    sub->add_option("expr", opt.exprs, "operator expression(s)")
        ->required()
        ->expected(nexprs);
    return sub;
  };

  CLI::App* mul = add_sub("mul", "product of two operators", 2);
  CLI::App* comm = add_sub("comm", "commutator [a,b]", 2);
  CLI::App* cent = add_sub("centralizer",
                           "degree-bounded centralizer basis over F_p", 1);
  CLI::App* dec = add_sub("decompose",
                          "write an element of A_1(F_p) over the center", 1);
  CLI::App* frac = add_sub("fraction-witness",
                           "solve b*z2 = z1 with z1, z2 in Z[a] over F_p", 2);
  CLI::App* cert = add_sub("certify",
                           "decide [P,Q] = 0 over Q by reduction mod primes", 2);
  CLI::App* thm = add_sub("theorem",
                          "full pipeline for a and commuting P, Q over Q", 3);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kError;
  }

  try {
    if (mul->parsed()) return run_product(opt, false);
    if (comm->parsed()) return run_product(opt, true);
    if (cent->parsed()) return run_centralizer(opt);
    if (dec->parsed()) return run_decompose(opt);
    if (frac->parsed()) return run_fraction_witness(opt);
    if (cert->parsed()) return run_certify(opt, false);
    if (thm->parsed()) return run_certify(opt, true);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
