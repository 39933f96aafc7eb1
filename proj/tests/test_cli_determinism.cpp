/*
 * Copyright 2026 The hessloci authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file test_cli_determinism.cpp
 * @brief Re-running a seeded subcommand yields a byte-identical report body
 *        (timestamps excluded). Invoked by ctest with the CLI path as the
 *        first argument.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli_determinism <path-to-hessloci>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string out1 = "cli_det_1.json", out2 = "cli_det_2.json";
  const std::string base =
      "\"" + cli + "\" family star --n 4 --seed 9 --verify --json ";
  if (std::system((base + out1 + " > /dev/null").c_str()) != 0) {
    std::cerr << "first run failed\n";
    return 1;
  }
  if (std::system((base + out2 + " > /dev/null").c_str()) != 0) {
    std::cerr << "second run failed\n";
    return 1;
  }
  std::ifstream f1(out1), f2(out2);
  nlohmann::json j1 = nlohmann::json::parse(f1);
  nlohmann::json j2 = nlohmann::json::parse(f2);
  if (j1.at("report").dump() != j2.at("report").dump()) {
    std::cerr << "report bodies differ between runs\n";
    return 1;
  }
  if (!j1.contains("wall_ms")) {
    std::cerr << "wall time missing from the wrapper\n";
    return 1;
  }
  std::cout << "report bodies identical\n";
  return 0;
}
