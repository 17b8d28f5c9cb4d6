// Copyright 2026 gbit-toolbox authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gbit/json_io.hpp"

#include "gbit/algebra.hpp"

namespace gbit {

Json question_set_to_json(const QuestionSet& set) {
  Json j;
  j["kind"] = to_string(set.kind.kind);
  j["n"] = set.kind.n;
  Json indices = Json::array();
  for (const auto& q : set.members) {
    Json tuple = Json::array();
    for (int a = 0; a < q.n(); ++a) tuple.push_back(static_cast<int>(q[a]));
    indices.push_back(std::move(tuple));
  }
  j["indices"] = std::move(indices);
  return j;
}

Json state_to_json(const BlochState& state) {
  Json j;
  j["kind"] = to_string(state.sys.kind);
  j["n"] = state.sys.n;
  j["p"] = state.p;
  Json y = Json::array();
  for (Eigen::Index i = 0; i < state.y.size(); ++i) y.push_back(state.y[i]);
  j["y"] = std::move(y);
  return j;
}

BlochState state_from_json(const SystemKind& sys, const Json& j) {
  if (!j.contains("y") || !j["y"].is_array()) throw Error("state: missing array field 'y'");
  const auto& arr = j["y"];
  Eigen::VectorXd y(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) y[static_cast<Eigen::Index>(i)] = arr[i].get<double>();
  const double p = j.value("p", 1.0);
  return BlochState(sys, std::move(y), p);
}

Json graph_to_json(const QuestionGraph& graph) {
  Json j;
  j["kind"] = to_string(graph.sys.kind);
  j["n"] = graph.sys.n;
  Json vertices = Json::array();
  for (const auto& v : graph.vertices) vertices.push_back(v.str());
  j["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (const auto& e : graph.edges) {
    edges.push_back(Json::array({graph.vertices[e.a].str(), graph.vertices[e.b].str()}));
  }
  j["edges"] = std::move(edges);
  Json triangles = Json::array();
  for (const auto& t : graph.triangles) {
    Json tri;
    tri["members"] = Json::array({graph.vertices[t.a].str(), graph.vertices[t.b].str(),
                                  graph.vertices[t.c].str()});
    tri["parity"] = t.parity == Parity::Odd ? "odd" : "even";
    triangles.push_back(std::move(tri));
  }
  j["triangles"] = std::move(triangles);
  return j;
}

Json transcript_entry_to_json(const Transcript& transcript, std::size_t step) {
  const TranscriptEntry& e = transcript.entries.at(step);
  Json j;
  j["shot"] = transcript.shot;
  j["step"] = step;
  j["question"] = e.question.str();
  j["answer"] = e.yes ? "yes" : "no";
  j["pre_probability"] = e.pre_probability;
  j["post"] = state_to_json(e.post);
  return j;
}

Json tomography_record_to_json(const TomographyResult& result, std::size_t i) {
  Json j;
  j["question"] = result.questions.at(i).str();
  j["y_hat"] = result.y_hat[static_cast<Eigen::Index>(i)];
  j["std_error"] = result.std_error[static_cast<Eigen::Index>(i)];
  j["shots"] = result.shots_per_question;
  return j;
}

namespace {

DensityMatrix preparation_from_assignments(const SystemKind& sys,
                                           const std::vector<std::string>& texts) {
  DensityMatrix rho =
      DensityMatrix::Identity(sys.dim(), sys.dim()) / static_cast<double>(sys.dim());
  for (const auto& text : texts) {
    const SignedQuestion sq = SignedQuestion::parse(text);
    sq.index.require_valid_for(sys);
    rho = lueders_update(sys, rho, sq.index, sq.sign > 0);
  }
  return rho;
}

std::vector<QuestionIndex> parse_question_list(const SystemKind& sys, const Json& arr,
                                               const char* field) {
  if (!arr.is_array()) throw Error(std::string("scenario: '") + field + "' must be an array");
  std::vector<QuestionIndex> out;
  out.reserve(arr.size());
  for (const auto& item : arr) {
    if (!item.is_string()) {
      throw Error(std::string("scenario: '") + field + "' entries must be digit strings");
    }
    QuestionIndex q = QuestionIndex::parse(item.get<std::string>());
    q.require_valid_for(sys);
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(std::string("scenario: ") + e.what());
  }

  Scenario scenario;
  if (!j.contains("kind")) throw Error("scenario: missing field 'kind'");
  if (!j.contains("n")) throw Error("scenario: missing field 'n'");
  scenario.sys = SystemKind(kind_from_string(j["kind"].get<std::string>()), j["n"].get<int>());

  if (!j.contains("preparation")) throw Error("scenario: missing field 'preparation'");
  const Json& prep = j["preparation"];
  if (prep.is_string()) {
    const std::string name = prep.get<std::string>();
    if (name == "totally-mixed") {
      scenario.preparation = DensityMatrix::Identity(scenario.sys.dim(), scenario.sys.dim()) /
                             static_cast<double>(scenario.sys.dim());
    } else if (name == "bell") {
      if (scenario.sys.n != 2) throw Error("scenario: 'bell' preparation needs n = 2");
      scenario.preparation = preparation_from_assignments(scenario.sys, {"11", "22"});
    } else if (name == "ghz") {
      if (scenario.sys.n != 3) throw Error("scenario: 'ghz' preparation needs n = 3");
      scenario.preparation = preparation_from_assignments(scenario.sys, {"211", "121", "112"});
    } else {
      throw Error("scenario: unknown preparation '" + name + "'");
    }
  } else if (prep.is_object() && prep.contains("assign")) {
    std::vector<std::string> texts;
    for (const auto& item : prep["assign"]) texts.push_back(item.get<std::string>());
    scenario.preparation = preparation_from_assignments(scenario.sys, texts);
  } else if (prep.is_object() && prep.contains("bloch")) {
    scenario.preparation = bloch_to_density(state_from_json(scenario.sys, prep["bloch"]));
  } else {
    throw Error("scenario: 'preparation' must be a preset name, {assign:[...]}, or {bloch:{...}}");
  }

  scenario.mode = j.value("mode", std::string("single-shot"));
  if (scenario.mode != "single-shot" && scenario.mode != "tomography") {
    throw Error("scenario: mode must be 'single-shot' or 'tomography'");
  }
  if (j.contains("script")) {
    scenario.script = parse_question_list(scenario.sys, j["script"], "script");
  }
  if (j.contains("questions")) {
    scenario.questions = parse_question_list(scenario.sys, j["questions"], "questions");
  }
  if (scenario.mode == "single-shot" && scenario.script.empty()) {
    throw Error("scenario: single-shot mode needs a non-empty 'script'");
  }
  if (scenario.questions.empty()) {
    scenario.questions = enumerate_complete_set(scenario.sys).members;
  }
  scenario.shots = j.value("shots", std::int64_t(1));
  if (scenario.shots < 1) throw Error("scenario: 'shots' must be positive");
  return scenario;
}

}  // namespace gbit
