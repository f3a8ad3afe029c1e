#include "nonclass/spec_io.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "nonclass/builders.hpp"
#include "nonclass/errors.hpp"

namespace nonclass {
namespace {

using json = nlohmann::json;

struct ParamInfo {
  const char* name;
  bool required;
  double fallback;
  bool integer;
};

const std::map<std::string, std::vector<ParamInfo>>& param_table() {
  static const std::map<std::string, std::vector<ParamInfo>> table = {
      {"coherent",
       {{"z1_re", false, 0.0, false},
        {"z1_im", false, 0.0, false},
        {"z2_re", false, 0.0, false},
        {"z2_im", false, 0.0, false}}},
      {"number", {{"n1", true, 0.0, true}, {"n2", true, 0.0, true}}},
      {"thermal", {{"beta", true, 0.0, false}}},
      {"squeezed_vacuum", {{"a", true, 0.0, false}, {"b", false, 0.0, false}}},
      {"squeezed_thermal",
       {{"a", true, 0.0, false}, {"b", false, 0.0, false}, {"beta", true, 0.0, false}}},
      {"pair_coherent",
       {{"zeta_re", true, 0.0, false}, {"zeta_im", false, 0.0, false}, {"q", false, 0.0, true}}},
      {"kerr_coherent",
       {{"z1_re", false, 0.0, false},
        {"z1_im", false, 0.0, false},
        {"z2_re", false, 0.0, false},
        {"z2_im", false, 0.0, false},
        {"kerr_alpha", false, 0.0, false},
        {"kerr_beta", false, 0.0, false},
        {"t", true, 0.0, false}}},
  };
  return table;
}

const std::vector<ParamInfo>& params_of(const std::string& family) {
  const auto it = param_table().find(family);
  if (it == param_table().end()) throw ParseError("unknown state family '" + family + "'");
  return it->second;
}

const ParamInfo* find_param(const std::string& family, const std::string& name) {
  for (const auto& info : params_of(family)) {
    if (name == info.name) return &info;
  }
  return nullptr;
}

void check_param_value(const ParamInfo& info, double value) {
  if (!std::isfinite(value)) throw ParseError(std::string("parameter '") + info.name + "' is not finite");
  if (info.integer && value != std::floor(value)) {
    throw ParseError(std::string("parameter '") + info.name + "' must be an integer");
  }
}

void require_keys(const json& obj, std::initializer_list<const char*> allowed, const char* where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* name : allowed) ok = ok || key == name;
    if (!ok) throw ParseError(std::string("unexpected key '") + key + "' in " + where);
  }
}

double number_field(const json& obj, const char* key) {
  if (!obj.contains(key)) throw ParseError(std::string("missing '") + key + "'");
  if (!obj.at(key).is_number()) throw ParseError(std::string("'") + key + "' must be a number");
  return obj.at(key).get<double>();
}

StateSpec state_from_json(const json& doc, bool sweep_param_pending, const std::string& swept) {
  if (!doc.is_object()) throw ParseError("spec must be a JSON object");
  if (!doc.contains("family") || !doc.at("family").is_string()) {
    throw ParseError("spec needs a string 'family'");
  }
  StateSpec spec;
  spec.family = doc.at("family").get<std::string>();
  params_of(spec.family);

  if (doc.contains("params")) {
    const json& params = doc.at("params");
    if (!params.is_object()) throw ParseError("'params' must be an object");
    for (const auto& [key, value] : params.items()) {
      const ParamInfo* info = find_param(spec.family, key);
      if (info == nullptr) {
        throw ParseError("family '" + spec.family + "' has no parameter '" + key + "'");
      }
      if (!value.is_number()) throw ParseError("parameter '" + key + "' must be a number");
      const double v = value.get<double>();
      check_param_value(*info, v);
      spec.params[key] = v;
    }
  }
  for (const auto& info : params_of(spec.family)) {
    const bool provided = spec.params.count(info.name) > 0 || (sweep_param_pending && swept == info.name);
    if (info.required && !provided) {
      throw ParseError("family '" + spec.family + "' requires parameter '" + info.name + "'");
    }
  }

  if (doc.contains("cutoffs")) {
    const json& c = doc.at("cutoffs");
    if (c.is_string()) {
      if (c.get<std::string>() != "auto") throw ParseError("cutoffs must be \"auto\" or [c1, c2]");
    } else if (c.is_array() && c.size() == 2 && c[0].is_number_integer() && c[1].is_number_integer()) {
      const int c1 = c[0].get<int>(), c2 = c[1].get<int>();
      if (c1 < 0 || c2 < 0) throw ParseError("cutoffs must be non-negative");
      spec.cutoffs = std::make_pair(c1, c2);
    } else {
      throw ParseError("cutoffs must be \"auto\" or [c1, c2]");
    }
  }
  return spec;
}

json state_to_json(const StateSpec& spec) {
  json doc;
  doc["family"] = spec.family;
  doc["params"] = json::object();
  for (const auto& [key, value] : spec.params) doc["params"][key] = value;
  if (spec.cutoffs) {
    doc["cutoffs"] = {spec.cutoffs->first, spec.cutoffs->second};
  } else {
    doc["cutoffs"] = "auto";
  }
  return doc;
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

double param(const StateSpec& spec, const char* name) {
  const auto it = spec.params.find(name);
  if (it != spec.params.end()) return it->second;
  const ParamInfo* info = find_param(spec.family, name);
  if (info == nullptr || info->required) throw ParseError(std::string("missing parameter '") + name + "'");
  return info->fallback;
}

State build_with_space(const StateSpec& spec, const FockSpace& space) {
  const std::string& f = spec.family;
  if (f == "coherent" || f == "kerr_coherent") {
    const cplx z1(param(spec, "z1_re"), param(spec, "z1_im"));
    const cplx z2(param(spec, "z2_re"), param(spec, "z2_im"));
    const State s = coherent_state(space, z1, z2);
    if (f == "coherent") return s;
    return kerr_evolve(s, param(spec, "kerr_alpha"), param(spec, "kerr_beta"), param(spec, "t"));
  }
  if (f == "number") return number_state(space, int(param(spec, "n1")), int(param(spec, "n2")));
  if (f == "thermal") return thermal_state(space, param(spec, "beta"));
  if (f == "squeezed_vacuum") return squeezed_vacuum(space, param(spec, "a"), param(spec, "b"));
  if (f == "squeezed_thermal") {
    return squeezed_thermal(space, param(spec, "a"), param(spec, "b"), param(spec, "beta"));
  }
  if (f == "pair_coherent") {
    return pair_coherent(space, cplx(param(spec, "zeta_re"), param(spec, "zeta_im")),
                         int(param(spec, "q")));
  }
  throw ParseError("unknown state family '" + f + "'");
}

}  // namespace

double SweepRange::value(int step) const {
  if (step == steps - 1) return max;
  return min + (max - min) * double(step) / double(steps - 1);
}

const std::vector<std::string>& state_families() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, params] : param_table()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<std::string> family_params(const std::string& family) {
  std::vector<std::string> out;
  for (const auto& info : params_of(family)) out.emplace_back(info.name);
  return out;
}

StateSpec parse_state_spec(const std::string& text) {
  const json doc = parse_json(text);
  if (doc.is_object()) require_keys(doc, {"family", "params", "cutoffs"}, "state spec");
  return state_from_json(doc, false, "");
}

SweepSpec parse_sweep_spec(const std::string& text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("spec must be a JSON object");
  require_keys(doc, {"family", "params", "cutoffs", "sweep", "samples", "seed"}, "sweep spec");
  if (!doc.contains("sweep") || !doc.at("sweep").is_object()) {
    throw ParseError("sweep spec needs a 'sweep' object");
  }
  const json& sw = doc.at("sweep");
  require_keys(sw, {"param", "min", "max", "steps"}, "sweep");
  if (!sw.contains("param") || !sw.at("param").is_string()) throw ParseError("sweep needs a string 'param'");

  SweepSpec spec;
  spec.sweep.param = sw.at("param").get<std::string>();
  spec.base = state_from_json(doc, true, spec.sweep.param);
  const ParamInfo* info = find_param(spec.base.family, spec.sweep.param);
  if (info == nullptr) {
    throw ParseError("family '" + spec.base.family + "' has no parameter '" + spec.sweep.param + "'");
  }
  if (info->integer) throw ParseError("integer parameter '" + spec.sweep.param + "' cannot be swept");
  if (spec.base.params.count(spec.sweep.param) > 0) {
    throw ParseError("swept parameter '" + spec.sweep.param + "' is also fixed in params");
  }
  spec.sweep.min = number_field(sw, "min");
  spec.sweep.max = number_field(sw, "max");
  if (!sw.contains("steps") || !sw.at("steps").is_number_integer()) {
    throw ParseError("sweep 'steps' must be an integer");
  }
  spec.sweep.steps = sw.at("steps").get<int>();
  if (spec.sweep.steps < 2) throw ParseError("sweep needs steps >= 2");
  if (!(spec.sweep.min < spec.sweep.max)) throw ParseError("sweep needs min < max");

  if (doc.contains("samples")) {
    if (!doc.at("samples").is_number_integer() || doc.at("samples").get<long long>() < 1) {
      throw ParseError("'samples' must be a positive integer");
    }
    spec.samples = doc.at("samples").get<int>();
  }
  if (doc.contains("seed")) {
    if (!doc.at("seed").is_number_unsigned()) throw ParseError("'seed' must be a non-negative integer");
    spec.seed = doc.at("seed").get<std::uint64_t>();
  }
  return spec;
}

std::string serialize(const StateSpec& spec) { return state_to_json(spec).dump(2) + "\n"; }

std::string serialize(const SweepSpec& spec) {
  json doc = state_to_json(spec.base);
  doc["sweep"] = {{"param", spec.sweep.param},
                  {"min", spec.sweep.min},
                  {"max", spec.sweep.max},
                  {"steps", spec.sweep.steps}};
  if (spec.samples) doc["samples"] = *spec.samples;
  if (spec.seed) doc["seed"] = *spec.seed;
  return doc.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

CutoffPolicy CutoffPolicy::from_env() {
  CutoffPolicy policy;
  if (const char* env = std::getenv("NONCLASS_MAX_CUTOFF"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || cap < 1) {
      throw ParseError(std::string("NONCLASS_MAX_CUTOFF must be a positive integer, got '") + env + "'");
    }
    policy.cap = int(cap);
  }
  return policy;
}

State build_state(const StateSpec& spec, const CutoffPolicy& policy) {
  if (spec.cutoffs) {
    return build_with_space(spec, FockSpace(spec.cutoffs->first, spec.cutoffs->second));
  }
  int cutoff = std::min(policy.start, policy.cap);
  double last_tail = 1.0;
  for (;;) {
    try {
      State s = build_with_space(spec, FockSpace(cutoff, cutoff));
      last_tail = s.tail_mass();
      if (last_tail < policy.target) return s;
    } catch (const CutoffTooSmall& e) {
      last_tail = e.tail_mass();
    } catch (const OutOfRange&) {
      // number states above the current cutoff
    }
    if (cutoff >= policy.cap) break;
    cutoff = std::min(2 * cutoff, policy.cap);
  }
  std::ostringstream msg;
  msg << spec.family << ": tail mass " << last_tail << " still above " << policy.target
      << " at the cutoff cap " << policy.cap << " (raise NONCLASS_MAX_CUTOFF)";
  throw CutoffTooSmall(msg.str(), last_tail);
}

}  // namespace nonclass
