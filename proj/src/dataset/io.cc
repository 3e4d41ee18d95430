// Copyright 2026 The VS-Arena Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "vsarena/core/error.h"
#include "vsarena/dataset/dataset.h"

namespace vsarena::dataset {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

void WriteFile(const fs::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string FrameName(int id, int k) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "frames/%06d_%d.png", id, k);
  return buf;
}

}  // namespace

json SampleToJson(const ReasoningSample& s, const std::vector<std::string>& frame_paths) {
  json j = {{"id", s.id},
            {"env", s.env},
            {"group", s.group},
            {"episode_seed", s.episode_seed},
            {"step", s.step},
            {"episode_length", s.episode_length},
            {"predictor", s.predictor},
            {"subject", s.subject},
            {"frames", frame_paths},
            {"text", s.text},
            {"legal", s.legal},
            {"ground_truth", s.ground_truth},
            {"equivalence_set", s.equivalence_set}};
  if (!s.action_type.empty()) j["action_type"] = s.action_type;
  return j;
}

void WriteDataset(const Dataset& dataset, const std::string& dir) {
  const fs::path root(dir);
  std::error_code ec;
  fs::create_directories(root / "frames", ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + (root / "frames").string());

  json counts = json::object();
  for (const auto& [label, n] : dataset.GroupCounts()) counts[label] = n;
  json manifest = {{"env", dataset.recipe.env},
                   {"seed", dataset.seed},
                   {"num_samples", dataset.samples.size()},
                   {"group_counts", counts},
                   {"recipe", ToJson(dataset.recipe)},
                   {"deviations", dataset.recipe.deviations}};
  WriteFile(root / "manifest.json", manifest.dump(2) + "\n");

  std::string lines;
  for (const auto& s : dataset.samples) {
    std::vector<std::string> paths;
    for (size_t k = 0; k < s.frames.size(); ++k) {
      paths.push_back(FrameName(s.id, static_cast<int>(k)));
      WriteFile(root / paths.back(), s.frames[k]);
    }
    lines += SampleToJson(s, paths).dump() + "\n";
  }
  WriteFile(root / "samples.jsonl", lines);
}

Dataset ReadDataset(const std::string& dir) {
  const fs::path root(dir);
  Dataset dataset;
  try {
    const json manifest = json::parse(ReadFile(root / "manifest.json"));
    dataset.recipe = RecipeFromJson(manifest.at("recipe"));
    dataset.seed = manifest.at("seed").get<uint64_t>();
    std::istringstream in(ReadFile(root / "samples.jsonl"));
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      const json j = json::parse(line);
      ReasoningSample s;
      s.id = j.at("id");
      s.env = j.at("env");
      s.group = j.at("group");
      s.episode_seed = j.at("episode_seed");
      s.step = j.at("step");
      s.episode_length = j.at("episode_length");
      s.predictor = j.at("predictor");
      s.subject = j.at("subject");
      s.text = j.at("text");
      s.legal = j.at("legal").get<std::vector<std::string>>();
      s.ground_truth = j.at("ground_truth");
      s.equivalence_set = j.at("equivalence_set").get<std::vector<std::string>>();
      s.action_type = j.value("action_type", "");
      for (const auto& path : j.at("frames")) {
        s.frames.push_back(ReadFile(root / path.get<std::string>()));
      }
      dataset.samples.push_back(std::move(s));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kIo, "malformed dataset in " + dir + ": " + e.what());
  }
  return dataset;
}

}  // namespace vsarena::dataset
