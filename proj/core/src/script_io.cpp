#include "sbraid/script_io.hpp"

#include "json.hpp"
#include "sbraid/error.hpp"

namespace sbraid {

using nlohmann::json;

namespace {

std::string text(std::span<const Letter> w) { return to_string(w); }

json step_to_json(const RewriteStep& s) {
  json j;
  j["kind"] = to_string(s.kind);
  switch (s.kind) {
    case StepKind::ApplyRelation:
      j["family"] = to_string(s.family);
      j["indices"] = s.indices;
      j["direction"] = to_string(s.direction);
      j["position"] = s.position;
      if (s.inverted) j["inverted"] = true;
      break;
    case StepKind::FreeReduce:
      if (s.length) {
        j["position"] = s.position;
        j["length"] = *s.length;
      }
      break;
    case StepKind::FreeExpand:
      j["position"] = s.position;
      j["letter"] = to_string(s.letter);
      break;
    case StepKind::SubstituteNamed:
      j["position"] = s.position;
      j["name"] = s.name;
      break;
  }
  return j;
}

RewriteStep step_from_json(const json& j) {
  RewriteStep s;
  s.kind = parse_step_kind(j.at("kind").get<std::string>());
  s.position = j.value("position", std::size_t{0});
  switch (s.kind) {
    case StepKind::ApplyRelation:
      s.family = parse_family(j.at("family").get<std::string>());
      s.indices = j.at("indices").get<IndexAssignment>();
      s.direction = parse_direction(j.value("direction", std::string("forward")));
      s.inverted = j.value("inverted", false);
      break;
    case StepKind::FreeReduce:
      if (j.contains("length")) s.length = j.at("length").get<std::size_t>();
      break;
    case StepKind::FreeExpand: {
      RawWord w = parse_raw_word(j.at("letter").get<std::string>());
      if (w.size() != 1) throw ParseError("free-expand needs a single letter");
      s.letter = w.front();
      break;
    }
    case StepKind::SubstituteNamed:
      s.name = j.at("name").get<std::string>();
      break;
  }
  return s;
}

}  // namespace

std::string script_to_json(const DerivationScript& script, int indent) {
  json j;
  j["name"] = script.name;
  j["ambient"] = {{"preset", to_string(script.ambient.preset)}, {"n", script.ambient.n}, {"g", script.ambient.g}};
  j["start"] = text(script.start);
  j["target"] = text(script.target);
  j["steps"] = json::array();
  for (const auto& s : script.steps) j["steps"].push_back(step_to_json(s));
  return j.dump(indent);
}

DerivationScript script_from_json(std::string_view source) {
  try {
    json j = json::parse(source);
    DerivationScript s;
    s.name = j.value("name", std::string("script"));
    const json& amb = j.at("ambient");
    s.ambient.preset = parse_preset(amb.at("preset").get<std::string>());
    s.ambient.n = amb.at("n").get<int>();
    s.ambient.g = amb.at("g").get<int>();
    s.start = parse_raw_word(j.at("start").get<std::string>());
    s.target = parse_raw_word(j.at("target").get<std::string>());
    for (const json& st : j.at("steps")) s.steps.push_back(step_from_json(st));
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed derivation script: ") + e.what());
  } catch (const ParameterError& e) {
    throw ParseError(std::string("malformed derivation script: ") + e.what());
  }
}

std::string report_to_json(const DerivationReport& report, int indent) {
  json j;
  j["name"] = report.name;
  j["pass"] = report.pass;
  j["steps_checked"] = report.steps_checked;
  if (!report.pass) {
    j["failure"] = report.failure;
    if (report.failing_step) j["failing_step"] = *report.failing_step;
  }
  return j.dump(indent);
}

}  // namespace sbraid
