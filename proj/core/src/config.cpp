#include "qwalk/config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qwalk/errors.hpp"

namespace qwalk::io {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::int64_t parse_int(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw ParameterError("config key '" + key + "' expects an integer, got '" +
                         value + "'");
  }
  return v;
}

double parse_real(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double v = 0;
  try {
    v = std::stod(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) {
    throw ParameterError("config key '" + key + "' expects a number, got '" +
                         value + "'");
  }
  return v;
}

void assign(InstanceConfig& cfg, const std::string& key,
            const std::string& value) {
  if (key == "n1") {
    cfg.n1 = parse_int(key, value);
  } else if (key == "n2") {
    cfg.n2 = parse_int(key, value);
  } else if (key == "k1") {
    cfg.k1 = parse_int(key, value);
  } else if (key == "k2") {
    cfg.k2 = parse_int(key, value);
  } else if (key == "gamma") {
    cfg.gamma = parse_real(key, value);
  } else if (key == "walk") {
    cfg.walk = parse_walk_kind(value);
  } else if (key == "regime") {
    cfg.regime = parse_regime(value);
  } else if (key == "initial") {
    cfg.initial = parse_initial_state(value);
  } else if (key == "tmax" || key == "t_max") {
    cfg.t_max = parse_real(key, value);
  } else if (key == "points" || key == "n_points") {
    const auto p = parse_int(key, value);
    if (p < 2) throw ParameterError("config key 'points' must be >= 2");
    cfg.points = static_cast<std::size_t>(p);
  } else {
    throw ParameterError("unknown config key '" + key + "'");
  }
}

InstanceConfig parse_key_value(std::string_view text) {
  InstanceConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const auto body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw ParameterError("config line " + std::to_string(lineno) +
                           ": expected key = value");
    }
    assign(cfg, trim(body.substr(0, eq)), trim(body.substr(eq + 1)));
  }
  return cfg;
}

InstanceConfig parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed JSON config: ") + e.what());
  }
  if (!doc.is_object()) throw ParameterError("JSON config must be an object");
  InstanceConfig cfg;
  for (const auto& [key, value] : doc.items()) {
    if (value.is_string()) {
      assign(cfg, key, value.get<std::string>());
    } else if (value.is_number_integer()) {
      assign(cfg, key, std::to_string(value.get<std::int64_t>()));
    } else if (value.is_number()) {
      std::ostringstream s;
      s.precision(17);
      s << value.get<double>();
      assign(cfg, key, s.str());
    } else {
      throw ParameterError("config key '" + key + "' has an unsupported type");
    }
  }
  return cfg;
}

}  // namespace

void InstanceConfig::validate() const {
  if (auto err = validate_instance(n1, n2, k1, k2); !err.empty()) {
    throw InvalidInstance("invalid instance: " + err);
  }
  if (gamma && !(*gamma > 0.0 && std::isfinite(*gamma))) {
    throw ParameterError("gamma override must be positive");
  }
  if (t_max && !(*t_max > 0.0 && std::isfinite(*t_max))) {
    throw ParameterError("tmax override must be positive");
  }
  if (points && *points < 2) throw ParameterError("points must be >= 2");
  if (walk && regime && kind_of(*regime) != *walk) {
    throw ParameterError("regime " + std::string(to_string(*regime)) +
                         " does not belong to the " +
                         std::string(to_string(*walk)) + " walk");
  }
}

BipartiteInstance InstanceConfig::instance() const {
  return BipartiteInstance(n1, n2, k1, k2);
}

WalkKind InstanceConfig::effective_walk() const {
  if (walk) return *walk;
  if (regime) return kind_of(*regime);
  return WalkKind::laplacian;
}

Regime InstanceConfig::effective_regime() const {
  if (regime) return *regime;
  if (effective_walk() == WalkKind::adjacency) return Regime::adjacency;
  return k1 > 0 ? Regime::laplacian_a : Regime::laplacian_b;
}

InitialState InstanceConfig::effective_initial() const {
  if (initial) return *initial;
  return effective_walk() == WalkKind::adjacency ? InitialState::sigma
                                                 : InitialState::s;
}

InstanceConfig parse_config(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  auto cfg = first != std::string_view::npos && text[first] == '{'
                 ? parse_json(text)
                 : parse_key_value(text);
  cfg.validate();
  return cfg;
}

InstanceConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open config file " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

std::string_view to_string(InitialState s) noexcept {
  return s == InitialState::s ? "s" : "sigma";
}

InitialState parse_initial_state(std::string_view text) {
  if (text == "s") return InitialState::s;
  if (text == "sigma") return InitialState::sigma;
  throw ParameterError("unknown initial state '" + std::string(text) +
                       "' (expected s or sigma)");
}

}  // namespace qwalk::io
