#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "superband/config.hpp"
#include "superband/family.hpp"
#include "superband/serialize.hpp"

namespace superband {

enum class CheckStatus { Pass, Fail, Skip };

struct CheckResult {
  std::string id;
  std::string claim;  // one-line statement of the verified law
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

struct VerifyOptions {
  RunConfig config;
  bool full = false;  // full tier: larger algebras and seeded random sweeps
};

// Runs the whole structural check suite. Deterministic: the result list
// (and hence the rendered report) depends only on the options.
std::vector<CheckResult> run_verification(const VerifyOptions& opts);

std::string render_report_text(const VerifyOptions& opts,
                               const std::vector<CheckResult>& results);
Json render_report_json(const VerifyOptions& opts,
                        const std::vector<CheckResult>& results);

bool all_passed(const std::vector<CheckResult>& results);

// splitmix64: deterministic across platforms, fully determined by the seed.
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}
  std::uint64_t next();
  std::uint32_t below(std::uint32_t n);
};

// Dense random element with coefficients drawn from the pool.
GrassmannElement random_element(Rng& rng, int n_generators,
                                const std::vector<Rat>& pool);
// Random homogeneous element of the requested parity (Parity::Mixed means
// unconstrained).
GrassmannElement random_homogeneous(Rng& rng, int n_generators, Parity parity,
                                    const std::vector<Rat>& pool);

}  // namespace superband
