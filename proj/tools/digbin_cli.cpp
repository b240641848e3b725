// digbin: Sierpinski matrices, digital binomial identities and PTM polynomials.
//
// Exit codes: 0 everything passed, 1 a verification failed, 2 usage or
// configuration error.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "digbin/report.hpp"
#include "digbin/sierpinski.hpp"

namespace {

using digbin::Rational;
namespace report = digbin::report;

struct Options {
  unsigned base = 2;
  unsigned depth = 1;
  std::size_t cap = digbin::kDefaultCap;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string eval;
  std::string zero_sum;
};

void add_common(CLI::App* cmd, Options& o, bool with_depth = true) {
  cmd->add_option("--base,-b", o.base, "numeral base b >= 2")->check(CLI::Range(2u, 1u << 16));
  if (with_depth) cmd->add_option("--depth,-N", o.depth, "Kronecker depth N >= 1")->check(CLI::Range(1u, 64u));
  cmd->add_option("--cap", o.cap, "maximum matrix dimension");
}

std::optional<Rational> eval_point(const Options& o) {
  if (o.eval.empty()) return std::nullopt;
  return Rational::parse(o.eval);
}

int cmd_matrix(const std::string& kind_name, const Options& o) {
  const auto kind = report::parse_kind(kind_name);
  auto x0 = eval_point(o);
  if (o.format == "csv" && !x0) x0 = Rational(1);
  const auto m = report::build_matrix(kind, o.base, o.depth, o.cap, x0);
  if (o.format == "json") {
    std::cout << report::to_json(m).dump() << '\n';
  } else if (o.format == "csv") {
    const auto* numeric = std::get_if<digbin::RationalMatrix>(&m);
    std::cout << report::to_csv(*numeric);
  } else {
    std::cout << report::to_text(m);
  }
  return 0;
}

int cmd_verify(const std::string& suite, const Options& o) {
  report::SuiteConfig config{o.base, o.depth, o.cap, o.seed};
  const auto checks = report::run_suite(suite, config);
  const auto rep = report::suite_report(suite, config, checks);
  if (o.format == "text") {
    for (const auto& c : checks) {
      std::cout << report::to_string(c.status) << "  " << c.name << "  b=" << c.base
                << " N=" << c.depth;
      if (!c.witness.is_null()) std::cout << "  witness=" << c.witness.dump();
      std::cout << '\n';
    }
  } else {
    std::cout << rep.dump(2) << '\n';
  }
  return rep.at("all_passed").get<bool>() ? 0 : 1;
}

int cmd_ptm(const Options& o) {
  const auto a = digbin::ptm::ZeroSumVector::parse(o.zero_sum);
  if (a.base() != o.base) {
    throw std::invalid_argument("--zero-sum has " + std::to_string(a.base()) +
                                " entries, expected " + std::to_string(o.base));
  }
  const auto rep = report::ptm_report(o.depth, a);
  std::cout << rep.dump(2) << '\n';
  return rep.at("equal").get<bool>() ? 0 : 1;
}

int cmd_prouhet(unsigned degree, const Options& o) {
  const auto rep = report::prouhet_report(o.base, degree, o.cap);
  std::cout << rep.dump(2) << '\n';
  return rep.at("equal").get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sierpinski matrices, digit-sum identities and Prouhet-Thue-Morse polynomials"};
  app.require_subcommand(1);
  Options o;

  std::string kind;
  auto* matrix = app.add_subcommand("matrix", "emit S, X, M, T, U or V");
  matrix->add_option("kind", kind, "matrix kind")->required();
  add_common(matrix, o);
  matrix->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "text"}));
  matrix->add_option("--eval", o.eval, "rational evaluation point x0 (e.g. 1/2)");

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run identity checks");
  verify->add_option("suite", suite, "suite name")
      ->required()
      ->check(CLI::IsMember(report::suite_names()));
  add_common(verify, o);
  verify->add_option("--seed", o.seed, "seed for random zero-sum vectors");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* ptm = app.add_subcommand("ptm", "factor a Prouhet-Thue-Morse polynomial");
  add_common(ptm, o);
  ptm->add_option("--zero-sum", o.zero_sum, "comma-separated rationals summing to zero")->required();

  unsigned degree = 1;
  auto* prouhet = app.add_subcommand("prouhet", "Prouhet's equal-power-sum partition");
  add_common(prouhet, o, false);
  prouhet->add_option("--degree,-M", degree, "highest power M")->check(CLI::Range(0u, 62u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*matrix) return cmd_matrix(kind, o);
    if (*verify) return cmd_verify(suite, o);
    if (*ptm) return cmd_ptm(o);
    if (*prouhet) return cmd_prouhet(degree, o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
