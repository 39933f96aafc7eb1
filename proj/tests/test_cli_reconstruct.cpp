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
 * @file test_cli_reconstruct.cpp
 * @brief End-to-end through the CLI: tensor-of writes a tensor file,
 *        reconstruct reads it back and recovers the input cubic exactly.
 */

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "hessloci/poly_io.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: test_cli_reconstruct <path-to-hessloci>\n";
    return 2;
  }
  const std::string cli = std::string("\"") + argv[1] + "\"";
  const std::string ftext =
      "x0^3+x1^3+x2^3+x3^3+x4^3+(x0+2*x1+x2+x3+3*x4)^3";
  const std::string tensor = "cli_rc_tensor.json";
  const std::string out = "cli_rc_out.json";

  std::string cmd = cli + " tensor-of --nvars 5 --f \"" + ftext + "\" --out " +
                    tensor + " > /dev/null";
  if (std::system(cmd.c_str()) != 0) {
    std::cerr << "tensor-of failed\n";
    return 1;
  }
  cmd = cli + " reconstruct --tensor " + tensor + " --a \"1,2,1,1,3\" --json " +
        out + " > /dev/null";
  if (std::system(cmd.c_str()) != 0) {
    std::cerr << "reconstruct failed\n";
    return 1;
  }
  std::ifstream in(out);
  nlohmann::json j = nlohmann::json::parse(in);
  const std::string gtext = j.at("report").at("g").get<std::string>();
  const auto f = hessloci::poly_parse_q(ftext, 5);
  const auto g = hessloci::poly_parse_q(gtext, 5);
  if (!(f == g)) {
    std::cerr << "recovered cubic differs from the input\n";
    return 1;
  }
  if (j.at("report").at("lambda").get<std::string>() != "6") {
    std::cerr << "unexpected lambda\n";
    return 1;
  }
  std::cout << "cli round trip exact\n";
  return 0;
}
