// Copyright 2026 The regenboot Authors
// SPDX-License-Identifier: Apache-2.0

#include "regenboot/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "regenboot/error.hpp"
#include "regenboot/functional.hpp"

namespace regenboot {

using nlohmann::json;

namespace {

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
  throw ConfigError(field, "config field '" + field + "': " + what);
}

std::size_t as_count(const json& v, const std::string& field) {
  if (!v.is_number_unsigned()) field_error(field, "expected a non-negative integer");
  return v.get<std::size_t>();
}

double as_real(const json& v, const std::string& field) {
  if (!v.is_number()) field_error(field, "expected a number");
  return v.get<double>();
}

std::string as_string(const json& v, const std::string& field) {
  if (!v.is_string()) field_error(field, "expected a string");
  return v.get<std::string>();
}

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

}  // namespace

void validate(const ExperimentConfig& cfg) {
  if (cfg.n.empty()) field_error("n", "needs at least one horizon");
  if (cfg.chains < 1) field_error("chains", "must be positive");
  if (cfg.boot_reps < 1) field_error("boot_reps", "must be positive");
  if (cfg.true_reps < 1) field_error("true_reps", "must be positive");
  if (!(cfg.level > 0.0 && cfg.level < 1.0)) field_error("level", "must lie in (0, 1)");
  if (!(cfg.beta > 0.0 && cfg.beta < 1.0)) field_error("beta", "must lie in (0, 1)");
  if (!(cfg.scale > 0.0) || !std::isfinite(cfg.scale)) field_error("L_const", "must be positive");
  try {
    (void)builtin_functional(cfg.functional);
  } catch (const InvalidArgument&) {
    field_error("functional", "unknown functional '" + cfg.functional + "'");
  }
  if (cfg.theta && !std::isfinite(*cfg.theta)) field_error("theta", "must be finite");
  if (cfg.method != "rbb" && cfg.method != "rgb" && cfg.method != "both") {
    field_error("method", "expected rbb, rgb or both");
  }
  if (cfg.studentization != "original" && cfg.studentization != "resampled") {
    field_error("studentization", "expected original or resampled");
  }
  if (cfg.max_moment < 0 || cfg.max_moment > 4) field_error("max_moment", "must lie in [0, 4]");
}

ExperimentConfig parse_config(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ConfigError("", "config parse error at line " +
                              std::to_string(line_of(json_text, e.byte == 0 ? 0 : e.byte - 1)) +
                              ": " + e.what());
  }
  if (!doc.is_object()) throw ConfigError("", "config must be a JSON object");

  ExperimentConfig cfg;
  for (const auto& [key, v] : doc.items()) {
    if (key == "n") {
      cfg.n.clear();
      if (v.is_array()) {
        for (const auto& item : v) cfg.n.push_back(as_count(item, key));
      } else {
        cfg.n.push_back(as_count(v, key));
      }
    } else if (key == "chains") {
      cfg.chains = as_count(v, key);
    } else if (key == "boot_reps") {
      cfg.boot_reps = as_count(v, key);
    } else if (key == "true_reps") {
      cfg.true_reps = as_count(v, key);
    } else if (key == "level") {
      cfg.level = as_real(v, key);
    } else if (key == "beta") {
      cfg.beta = as_real(v, key);
    } else if (key == "L_const") {
      cfg.scale = as_real(v, key);
    } else if (key == "seed") {
      if (!v.is_number_unsigned()) field_error(key, "expected an unsigned 64-bit integer");
      cfg.seed = v.get<std::uint64_t>();
    } else if (key == "workers") {
      cfg.workers = as_count(v, key);
    } else if (key == "functional") {
      cfg.functional = as_string(v, key);
    } else if (key == "theta") {
      if (v.is_null()) {
        cfg.theta.reset();
      } else {
        cfg.theta = as_real(v, key);
      }
    } else if (key == "method") {
      cfg.method = as_string(v, key);
    } else if (key == "studentization") {
      cfg.studentization = as_string(v, key);
    } else if (key == "max_moment") {
      cfg.max_moment = static_cast<int>(std::min<std::size_t>(as_count(v, key), 1000));
    } else if (key == "anchor") {
      cfg.anchor = as_count(v, key);
    } else {
      throw ConfigError(key, "unknown config key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError(path.string(), "cannot open config file");
  std::ostringstream buf;
  buf << is.rdbuf();
  return parse_config(buf.str());
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json doc = json::object();
  doc["n"] = cfg.n;
  doc["chains"] = cfg.chains;
  doc["boot_reps"] = cfg.boot_reps;
  doc["true_reps"] = cfg.true_reps;
  doc["level"] = cfg.level;
  doc["beta"] = cfg.beta;
  doc["L_const"] = cfg.scale;
  doc["seed"] = cfg.seed;
  doc["workers"] = cfg.workers;
  doc["functional"] = cfg.functional;
  doc["theta"] = cfg.theta ? json(*cfg.theta) : json(nullptr);
  doc["method"] = cfg.method;
  doc["studentization"] = cfg.studentization;
  doc["max_moment"] = cfg.max_moment;
  doc["anchor"] = cfg.anchor;
  return doc.dump(2);
}

}  // namespace regenboot
