#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "digbin/matrix.hpp"
#include "digbin/ptm.hpp"
#include "json.hpp"

// Machine-readable emission of matrices and verification reports. Rationals
// are always serialized as strings ("p" or "p/q"), never as JSON numbers.
namespace digbin::report {

using nlohmann::json;

enum class MatrixKind { S, X, M, T, U, V };

/// "S", "X", "M", "T", "U" or "V"; throws std::invalid_argument otherwise.
MatrixKind parse_kind(const std::string& name);

using AnyMatrix = std::variant<PolyMatrix, RationalMatrix>;

/// S and X are symbolic unless x0 is given; M, T, U, V are always numeric.
AnyMatrix build_matrix(MatrixKind kind, unsigned b, unsigned depth, std::size_t cap,
                       const std::optional<Rational>& x0);

json to_json(const PolyMatrix& m);
json to_json(const RationalMatrix& m);
json to_json(const AnyMatrix& m);
std::string to_csv(const RationalMatrix& m);
/// Space-aligned rows, one per line.
std::string to_text(const AnyMatrix& m);

enum class Status { Pass, Fail, ExpectedFail };
std::string to_string(Status s);

struct Check {
  std::string name;
  unsigned base = 0;
  unsigned depth = 0;
  Status status = Status::Pass;
  json witness;  // null when absent
};

/// A check counts as passing when it passed or failed exactly as predicted.
inline bool passed(const Check& c) { return c.status != Status::Fail; }

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"one-parameter", "digital-binomial", "exp",
                                              "stirling",      "factorization",    "relations",
                                              "prouhet",       "all"};
  return names;
}

struct SuiteConfig {
  unsigned base = 2;
  unsigned depth = 1;
  std::size_t cap = kDefaultCap;
  std::uint64_t seed = 1;
  unsigned random_vectors = 20;
};

/// Runs one named suite (or "all"); throws std::invalid_argument for an unknown name.
std::vector<Check> run_suite(const std::string& suite, const SuiteConfig& config);

/// {"suite", "base", "depth", "seed", "checks": [...], "all_passed"}.
json suite_report(const std::string& suite, const SuiteConfig& config,
                  const std::vector<Check>& checks);

/// F_N coefficients, c_N, reconstructed product and the equality verdict.
json ptm_report(unsigned depth, const ptm::ZeroSumVector& a);

/// Partition of 0 .. b^{M+1}-1 with its power-sum table.
json prouhet_report(unsigned b, unsigned degree, std::size_t cap);

json rationals_json(const std::vector<Rational>& v);

}  // namespace digbin::report
