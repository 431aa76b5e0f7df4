#include "cyclealg/tower_spec.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace cyclealg {

namespace {

using nlohmann::json;

std::string at_index(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const json& require(const json& obj, const std::string& key) {
  if (!obj.contains(key)) throw SpecValidationError("$." + key, "missing required field");
  return obj.at(key);
}

std::int64_t as_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw SpecValidationError(path, "expected an integer, got " + v.dump());
  return v.get<std::int64_t>();
}

std::vector<std::int64_t> as_nonneg_array(const json& v, const std::string& path, std::size_t length) {
  if (!v.is_array()) throw SpecValidationError(path, "expected an array, got " + v.dump());
  if (v.size() != length) {
    throw SpecValidationError(path, "expected " + std::to_string(length) + " entries, got " + std::to_string(v.size()));
  }
  std::vector<std::int64_t> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto x = as_int(v[i], at_index(path, i));
    if (x < 0) throw SpecValidationError(at_index(path, i), "entries must be nonnegative");
    out.push_back(x);
  }
  return out;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw SpecValidationError("$." + key, "unknown field for this mode");
  }
}

}  // namespace

int TowerSpec::m() const { return stationary ? stationary->m() : explicit_tower->m.m(); }

std::string TowerSpec::mode_name(Mode mode) {
  return mode == Mode::kStationaryMatroid ? "stationary_matroid" : "explicit";
}

nlohmann::json TowerSpec::to_json() const {
  json j;
  j["schema_version"] = schema_version;
  j["m"] = m();
  j["mode"] = mode_name(mode);
  if (stationary) {
    j["d"] = stationary->d();
    j["s"] = stationary->s();
  } else {
    json shapes = json::array();
    for (const auto& s : explicit_tower->shapes) shapes.push_back(s.vertex_mults());
    json embeddings = json::array();
    for (const auto& s : explicit_tower->embeddings) embeddings.push_back(s.entries());
    j["shapes"] = shapes;
    j["embeddings"] = embeddings;
  }
  return j;
}

TowerSpec parse_tower_spec(const nlohmann::json& j) {
  if (!j.is_object()) throw SpecValidationError("$", "tower spec must be a JSON object");
  TowerSpec spec;
  spec.schema_version = static_cast<int>(as_int(require(j, "schema_version"), "$.schema_version"));
  if (spec.schema_version != kTowerSchemaVersion) {
    throw SpecValidationError("$.schema_version", "unsupported schema version " + std::to_string(spec.schema_version) +
                                                      " (expected " + std::to_string(kTowerSchemaVersion) + ")");
  }
  const auto m = as_int(require(j, "m"), "$.m");
  if (m < 3 || m > 1000) throw SpecValidationError("$.m", "m must lie in 3..1000, got " + std::to_string(m));
  const CycleIndex idx(static_cast<int>(m));

  const auto& mode = require(j, "mode");
  if (!mode.is_string()) throw SpecValidationError("$.mode", "expected a string");
  const auto mode_str = mode.get<std::string>();

  if (mode_str == "stationary_matroid") {
    reject_unknown(j, {"schema_version", "m", "mode", "d", "s"});
    spec.mode = TowerSpec::Mode::kStationaryMatroid;
    const auto d = as_int(require(j, "d"), "$.d");
    if (d < 1) throw SpecValidationError("$.d", "d must be >= 1");
    const auto s = as_int(require(j, "s"), "$.s");
    try {
      spec.stationary.emplace(static_cast<int>(m), d, s);
    } catch (const OverflowError& e) {
      throw SpecValidationError("$.d", e.what());
    } catch (const InvalidInputError& e) {
      throw SpecValidationError("$.s", e.what());
    }
    return spec;
  }
  if (mode_str != "explicit") {
    throw SpecValidationError("$.mode", "expected \"stationary_matroid\" or \"explicit\", got \"" + mode_str + "\"");
  }

  reject_unknown(j, {"schema_version", "m", "mode", "shapes", "embeddings"});
  spec.mode = TowerSpec::Mode::kExplicit;
  const auto count = static_cast<std::size_t>(idx.vertex_count());
  const auto& shapes = require(j, "shapes");
  if (!shapes.is_array() || shapes.empty()) throw SpecValidationError("$.shapes", "expected a nonempty array");
  const auto& embeddings = require(j, "embeddings");
  if (!embeddings.is_array()) throw SpecValidationError("$.embeddings", "expected an array");
  if (embeddings.size() + 1 != shapes.size()) {
    throw SpecValidationError("$.embeddings", "expected " + std::to_string(shapes.size() - 1) +
                                                  " embeddings for " + std::to_string(shapes.size()) + " levels, got " +
                                                  std::to_string(embeddings.size()));
  }
  ExplicitTower tower{idx, {}, {}};
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    tower.shapes.emplace_back(idx, as_nonneg_array(shapes[i], at_index("$.shapes", i), count));
  }
  for (std::size_t i = 0; i < embeddings.size(); ++i) {
    const auto path = at_index("$.embeddings", i);
    Signature sig(idx, as_nonneg_array(embeddings[i], path, count));
    if (sig.is_zero()) throw SpecValidationError(path, "the zero signature is not an embedding");
    if (!fits_capacity(sig, tower.shapes[i], tower.shapes[i + 1])) {
      throw SpecValidationError(path, "capacity violated at level " + std::to_string(i + 2) + ": image " +
                                          json(image_mults(sig, tower.shapes[i])).dump() +
                                          " exceeds vertex multiplicities " +
                                          json(tower.shapes[i + 1].vertex_mults()).dump());
    }
    tower.embeddings.push_back(std::move(sig));
  }
  spec.explicit_tower = std::move(tower);
  return spec;
}

TowerSpec load_tower_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot read tower spec '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvalidInputError("cannot parse tower spec '" + path + "': " + e.what());
  }
  return parse_tower_spec(j);
}

}  // namespace cyclealg
