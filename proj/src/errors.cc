// Copyright 2026 The QTVR Authors
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

#include "qtvr/errors.h"

#include <utility>

namespace qtvr {

namespace {

std::string decorate(const std::string& message, const std::string& key,
                     int line) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!key.empty()) out += "'" + key + "': ";
  return out + message;
}

}  // namespace

ConfigError::ConfigError(const std::string& message, std::string key, int line)
    : Error(decorate(message, key, line)), key_(std::move(key)), line_(line) {}

}  // namespace qtvr
