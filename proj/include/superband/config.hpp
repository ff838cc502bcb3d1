#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "superband/expr.hpp"

namespace superband {

struct RunConfig {
  int n_generators = 4;
  std::string alpha_expr = "g1";
  std::vector<Rat> pool = {Rat(-1), Rat(0), Rat(1), Rat(2)};
  std::uint64_t seed = 1;
  std::string format = "text";
  GenStyle style = GenStyle::Ascii;
  // sampled alpha-classes per parameter slot, by band arity
  int classes_arity1 = 3;
  int classes_arity2 = 2;
  int classes_arity3 = 2;
};

// key = value lines; '#' comments; unknown keys are errors.
RunConfig load_config(const std::string& path);
void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value);

// Parses and validates alpha (nonzero homogeneous odd) at cfg.n_generators.
std::shared_ptr<const AlphaContext> make_context(const RunConfig& cfg);

}  // namespace superband
