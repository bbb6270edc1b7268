// Copyright 2026 The scp_anneal Authors
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

#ifndef SCP_ANNEAL_INSTANCE_IO_H_
#define SCP_ANNEAL_INSTANCE_IO_H_

#include <string>

#include "scp_anneal/scp_instance.h"

namespace scp_anneal {

// JSON document {"m": int, "n": int, "sets": [[...], ...], "weights": [...]}
// with 1-based element labels. Weights are written in shortest round-trip
// form, so deserializing recovers every bit.
std::string SerializeInstance(const ScpInstance& inst);

// Throws Error(kParseError) for malformed text or a schema mismatch (the
// message carries the byte offset or JSON pointer), and
// Error(kInvariantViolation) when the document is well-formed but describes
// an invalid instance.
ScpInstance DeserializeInstance(const std::string& text);

ScpInstance ReadInstanceFile(const std::string& path);
void WriteInstanceFile(const ScpInstance& inst, const std::string& path);

}  // namespace scp_anneal

#endif  // SCP_ANNEAL_INSTANCE_IO_H_
