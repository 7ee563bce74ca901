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

#ifndef QTVR_RUN_H_
#define QTVR_RUN_H_

#include <vector>

#include "qtvr/config.h"
#include "qtvr/schemes.h"

namespace qtvr {

/// Evaluates every configured scheme on the configured grid, in the order the
/// schemes are listed. Failures are rethrown as ComputationError tagged with
/// the scheme name.
std::vector<SchemeResult> run(const RunConfig& config);

}  // namespace qtvr

#endif  // QTVR_RUN_H_
