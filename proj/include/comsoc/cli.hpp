// Copyright 2026 The comsoc Authors
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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace comsoc {

enum class Status { ok, no_solution, error };

std::string to_string(Status status);

struct CommandResult {
  std::vector<std::string> command;  // argv without the program name
  Status status = Status::error;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  double elapsed = 0.0;                // seconds
  std::optional<std::uint64_t> seed;   // set when the command drew random numbers
  std::string diagnostic;              // goes to stderr
  std::optional<std::string> help;     // --help text instead of a record

  // Output settings picked up from the command line.
  bool record = true;
  bool timing = true;

  int exit_code() const { return static_cast<int>(status); }
};

// Parses and runs one command. Never throws: every failure becomes an
// error record.
CommandResult run(const std::vector<std::string>& args);

// The result record (or its text rendering), newline terminated.
std::string render(const CommandResult& result);

// Entry point of the comsoc executable.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace comsoc
