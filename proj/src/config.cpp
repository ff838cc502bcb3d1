#include "superband/config.hpp"

#include <fstream>
#include <sstream>

namespace superband {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

int parse_int(const std::string& key, const std::string& value) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ParseError("config: " + key + " expects an integer, got '" + value + "'");
  }
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  throw ParseError("config: " + key + " expects true/false");
}

}  // namespace

void apply_config_entry(RunConfig& cfg, const std::string& key,
                        const std::string& value) {
  if (key == "n_generators") {
    cfg.n_generators = parse_int(key, value);
  } else if (key == "alpha") {
    cfg.alpha_expr = value;
  } else if (key == "pool") {
    std::vector<Rat> pool;
    std::stringstream ss(value);
    std::string item;
    while (std::getline(ss, item, ',')) pool.push_back(rat_parse(trim(item)));
    if (pool.empty()) throw ParseError("config: pool must be nonempty");
    cfg.pool = std::move(pool);
  } else if (key == "seed") {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(value, &used);
      if (used != value.size()) throw std::invalid_argument(value);
    } catch (const std::exception&) {
      throw ParseError("config: seed expects an unsigned integer, got '" +
                       value + "'");
    }
  } else if (key == "format") {
    cfg.format = value;
  } else if (key == "theta") {
    cfg.style = parse_bool(key, value) ? GenStyle::Theta : GenStyle::Ascii;
  } else if (key == "classes1") {
    cfg.classes_arity1 = parse_int(key, value);
  } else if (key == "classes2") {
    cfg.classes_arity2 = parse_int(key, value);
  } else if (key == "classes3") {
    cfg.classes_arity3 = parse_int(key, value);
  } else {
    throw ParseError("config: unknown key '" + key + "'");
  }
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  RunConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) +
                       ": expected key = value");
    apply_config_entry(cfg, trim(s.substr(0, eq)), trim(s.substr(eq + 1)));
  }
  return cfg;
}

std::shared_ptr<const AlphaContext> make_context(const RunConfig& cfg) {
  if (cfg.n_generators < 1)
    throw ParseError("config: n_generators must be >= 1");
  if (cfg.n_generators > kMaxGenerators)
    throw ParseError("config: n_generators must be <= " +
                     std::to_string(kMaxGenerators));
  GrassmannElement alpha = parse_element(cfg.alpha_expr, cfg.n_generators);
  if (alpha.is_zero() || alpha.parity() != Parity::Odd)
    throw ParseError("config: alpha must be a nonzero odd element");
  return std::make_shared<AlphaContext>(std::move(alpha));
}

}  // namespace superband
