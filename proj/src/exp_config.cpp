#include "umtlab/experiments/config.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "umtlab/error.hpp"

namespace umtlab {

std::string model_name(ModelKind model) {
  switch (model) {
    case ModelKind::kKg: return "kg";
    case ModelKind::kCn: return "cn";
    case ModelKind::kRt: return "rt";
    case ModelKind::kLb: return "lb";
  }
  return "?";
}

void ExperimentConfig::validate() const {
  if (replicates == 0) throw ConfigError("config: seeds must be >= 1");
  if (alphas.empty() && model != ModelKind::kRt) {
    throw ConfigError("config: alpha grid is empty");
  }
  for (std::size_t i = 1; i < checkpoints.size(); ++i) {
    if (checkpoints[i] <= checkpoints[i - 1]) {
      throw ConfigError("config: checkpoints must be strictly increasing");
    }
  }
  if (!checkpoints.empty() && checkpoints.front() == 0) {
    throw ConfigError("config: checkpoints start at 1");
  }
  switch (model) {
    case ModelKind::kKg:
      if (rs.empty()) throw ConfigError("config: r grid is empty");
      if (n == 0) throw ConfigError("config: n must be positive");
      for (std::uint64_t r : rs) {
        if (r == 0 || r > n) throw ConfigError("config: need 1 <= r <= n");
      }
      if (p <= 0.0 || p >= 1.0) throw ConfigError("config: p must be in (0,1)");
      if (checkpoints.empty() && !full_pass) {
        throw ConfigError("config: kg needs checkpoints or full_pass");
      }
      break;
    case ModelKind::kCn:
      if (t_size == 0 || p_size < t_size) {
        throw ConfigError("config: need 1 <= t_size <= p_size");
      }
      if (family_size == 0) throw ConfigError("config: family_size missing");
      if (holdout == 0) throw ConfigError("config: holdout must be positive");
      if (checkpoints.empty()) throw ConfigError("config: checkpoints missing");
      break;
    case ModelKind::kRt:
      if (vocab == 0 || depth == 0 || arity_a == 0 || arity_b == 0) {
        throw ConfigError("config: rt needs vocab, depth, a, b");
      }
      if (checkpoints.empty() && !full_pass) {
        throw ConfigError("config: rt needs checkpoints or full_pass");
      }
      break;
    case ModelKind::kLb:
      if (n_params < 2) throw ConfigError("config: n_params must be >= 2");
      if (t_size == 0) throw ConfigError("config: t_size missing");
      if (checkpoints.empty()) throw ConfigError("config: checkpoints missing");
      break;
  }
}

namespace {

std::vector<std::uint64_t> range_checkpoints(std::uint64_t lo,
                                             std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

}  // namespace

ExperimentConfig preset_config(const std::string& name) {
  ExperimentConfig cfg;
  cfg.preset = name;
  if (name == "fig4-left") {
    cfg.model = ModelKind::kKg;
    cfg.n = 10;
    cfg.p = 0.5;
    cfg.rs = {9};
    cfg.alphas = {0.0, 0.33, 0.66, 1.0};
    cfg.replicates = 20;
    cfg.checkpoints = range_checkpoints(1, 81);
    return cfg;
  }
  if (name == "fig4-right") {
    cfg.model = ModelKind::kKg;
    cfg.n = 10;
    cfg.p = 0.5;
    cfg.rs = {1, 4, 7, 10};
    cfg.alphas = {0.5};
    cfg.replicates = 20;
    cfg.full_pass = true;
    return cfg;
  }
  if (name == "fig5") {
    cfg.model = ModelKind::kCn;
    cfg.t_size = 100000;
    cfg.p_size = 1000000;
    cfg.family_size = 100000;
    cfg.alphas = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8};
    cfg.replicates = 5;
    cfg.holdout = 1000;
    cfg.checkpoints = range_checkpoints(1, 100);
    return cfg;
  }
  if (name == "kg-smoke") {
    cfg.model = ModelKind::kKg;
    cfg.n = 6;
    cfg.p = 0.5;
    cfg.rs = {4};
    cfg.alphas = {0.0, 1.0};
    cfg.replicates = 3;
    cfg.checkpoints = range_checkpoints(1, 16);
    return cfg;
  }
  if (name == "cn-smoke") {
    cfg.model = ModelKind::kCn;
    cfg.t_size = 500;
    cfg.p_size = 2000;
    cfg.family_size = 300;
    cfg.alphas = {0.0, 0.4};
    cfg.replicates = 3;
    cfg.holdout = 200;
    cfg.checkpoints = range_checkpoints(1, 30);
    return cfg;
  }
  throw ConfigError("unknown preset '" + name + "'");
}

std::vector<std::string> preset_names() {
  return {"fig4-left", "fig4-right", "fig5", "kg-smoke", "cn-smoke"};
}

namespace {

struct Cursor {
  std::uint64_t line = 0;
  std::size_t column = 0;
};

[[noreturn]] void fail(const Cursor& at, const std::string& message) {
  throw ConfigError("config line " + std::to_string(at.line) + ", column " +
                    std::to_string(at.column + 1) + ": " + message);
}

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  std::size_t b = s.find_last_not_of(" \t\r");
  if (a == std::string::npos) return "";
  return s.substr(a, b - a + 1);
}

double parse_real(const std::string& text, const Cursor& at) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) fail(at, "trailing garbage in number '" + text + "'");
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(at, "expected a number, got '" + text + "'");
  }
}

std::uint64_t parse_count(const std::string& text, const Cursor& at) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
    fail(at, "expected a non-negative integer, got '" + text + "'");
  }
  try {
    std::size_t used = 0;
    const std::uint64_t v = std::stoull(text, &used);
    if (used != text.size()) {
      fail(at, "expected a non-negative integer, got '" + text + "'");
    }
    return v;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception&) {
    fail(at, "integer out of range: '" + text + "'");
  }
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> items;
  std::string current;
  for (char c : value) {
    if (c == ',') {
      items.push_back(trim(current));
      current.clear();
    } else {
      current += c;
    }
  }
  items.push_back(trim(current));
  return items;
}

std::vector<std::uint64_t> parse_checkpoints(const std::string& value,
                                             const Cursor& at) {
  std::vector<std::uint64_t> out;
  for (const std::string& item : split_list(value)) {
    const std::size_t colon = item.find(':');
    if (colon == std::string::npos) {
      out.push_back(parse_count(item, at));
    } else {
      const std::uint64_t lo = parse_count(item.substr(0, colon), at);
      const std::uint64_t hi = parse_count(item.substr(colon + 1), at);
      if (lo > hi) fail(at, "empty checkpoint range '" + item + "'");
      for (std::uint64_t m = lo; m <= hi; ++m) out.push_back(m);
    }
  }
  return out;
}

bool parse_flag(const std::string& value, const Cursor& at) {
  if (value == "true" || value == "1") return true;
  if (value == "false" || value == "0") return false;
  fail(at, "expected true/false, got '" + value + "'");
}

}  // namespace

ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig cfg;
  cfg.preset = "custom";
  std::string section;
  std::string raw;
  Cursor at;
  while (std::getline(in, raw)) {
    ++at.line;
    const std::size_t hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    at.column = raw.find_first_not_of(" \t");
    if (line.front() == '[') {
      if (line.back() != ']') fail(at, "unterminated section header");
      section = line.substr(1, line.size() - 2);
      if (section != "experiment" && section != "grid") {
        fail(at, "unknown section '" + section + "'");
      }
      continue;
    }
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) fail(at, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    Cursor value_at{at.line, raw.find('=') + 1};
    if (key.empty()) fail(at, "missing key before '='");
    if (value.empty()) fail(value_at, "missing value for '" + key + "'");
    if (section.empty()) fail(at, "key outside any section");

    if (section == "experiment") {
      if (key == "model") {
        if (value == "kg") cfg.model = ModelKind::kKg;
        else if (value == "cn") cfg.model = ModelKind::kCn;
        else if (value == "rt") cfg.model = ModelKind::kRt;
        else if (value == "lb") cfg.model = ModelKind::kLb;
        else fail(value_at, "unknown model '" + value + "'");
      } else if (key == "preset") {
        cfg.preset = value;
      } else if (key == "seeds") {
        cfg.replicates = parse_count(value, value_at);
      } else if (key == "master_seed") {
        cfg.master_seed = parse_count(value, value_at);
      } else if (key == "holdout") {
        cfg.holdout = parse_count(value, value_at);
      } else if (key == "checkpoints") {
        cfg.checkpoints = parse_checkpoints(value, value_at);
      } else if (key == "full_pass") {
        cfg.full_pass = parse_flag(value, value_at);
      } else {
        fail(at, "unknown key '" + key + "' in [experiment]");
      }
    } else {
      if (key == "alpha") {
        cfg.alphas.clear();
        for (const std::string& item : split_list(value)) {
          cfg.alphas.push_back(parse_real(item, value_at));
        }
      } else if (key == "r") {
        cfg.rs.clear();
        for (const std::string& item : split_list(value)) {
          cfg.rs.push_back(parse_count(item, value_at));
        }
      } else if (key == "n") {
        cfg.n = parse_count(value, value_at);
      } else if (key == "p") {
        cfg.p = parse_real(value, value_at);
      } else if (key == "t_size") {
        cfg.t_size = parse_count(value, value_at);
      } else if (key == "p_size") {
        cfg.p_size = parse_count(value, value_at);
      } else if (key == "family_size") {
        cfg.family_size = parse_count(value, value_at);
      } else if (key == "vocab") {
        cfg.vocab = parse_count(value, value_at);
      } else if (key == "depth") {
        cfg.depth = parse_count(value, value_at);
      } else if (key == "a") {
        cfg.arity_a = parse_count(value, value_at);
      } else if (key == "b") {
        cfg.arity_b = parse_count(value, value_at);
      } else if (key == "n_params") {
        cfg.n_params = parse_count(value, value_at);
      } else {
        fail(at, "unknown key '" + key + "' in [grid]");
      }
    }
  }
  cfg.validate();
  return cfg;
}

ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  return parse_config(in);
}

}  // namespace umtlab
