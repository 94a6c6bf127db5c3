// Copyright 2026 The ferm authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace ferm {

/// Error taxonomy shared by the library and the CLI exit codes.
enum class errc {
  parse = 2,       // malformed input text
  dimension = 3,   // size/kind/index mismatch
  cap = 4,         // dense-size cap exceeded
  verification = 5 // a checked property failed
};

class error : public std::runtime_error {
 public:
  error(errc category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  errc category() const noexcept { return category_; }

 private:
  errc category_;
};

[[noreturn]] inline void throw_parse(const std::string& msg) {
  throw error(errc::parse, msg);
}
[[noreturn]] inline void throw_dim(const std::string& msg) {
  throw error(errc::dimension, msg);
}
[[noreturn]] inline void throw_cap(const std::string& msg) {
  throw error(errc::cap, msg);
}

}  // namespace ferm
