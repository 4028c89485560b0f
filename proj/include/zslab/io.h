// Copyright 2026 The zslab Authors
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

// JSON and TSV encodings shared by the CLI and tests.
//
// Sequences and point sets are JSON arrays of coordinate arrays, e.g.
// [[0,1],[2,2]]. Files may instead hold an object
// {"group": "F3^2", "items": [...]} (or "points"), in which case the group
// literal comes from the file.

#ifndef ZSLAB_IO_H_
#define ZSLAB_IO_H_

#include <optional>
#include <string>

#include "json.hpp"
#include "zslab/bounds.h"
#include "zslab/constructive.h"
#include "zslab/extractor.h"
#include "zslab/group.h"
#include "zslab/zerosum.h"

namespace zslab {

using Json = nlohmann::ordered_json;

Json ToJson(const GroupElement& x);
Json ToJson(const std::vector<GroupElement>& xs);
Json ToJson(const Witness& w);
Json ToJson(const ExtremalCertificate& cert);
Json ToJson(const ReductionTrace& trace);
Json ToJson(const Hyperplane& v);
Json ToJson(const ExtractionOutcome& outcome);
Json ToJson(const BoundReport& report);

// Throws kInvalidInput on malformed JSON or coordinates that do not fit the
// group.
std::vector<GroupElement> ElementsFromJson(const Json& j,
                                           const AbelianGroup& g);

struct ElementFile {
  AbelianGroup group;
  std::vector<GroupElement> elements;
};

// Reads an element file. `group` overrides or supplies the group; it is
// required when the file is a bare array.
ElementFile ReadElementFile(const std::string& path,
                            const std::optional<AbelianGroup>& group);

ExtremalCertificate CertificateFromJson(const Json& j);

// Columns: group, quantity, kind, value, source, exhaustive.
std::string TsvHeader();
std::string ToTsv(const BoundReport& report);
// Integers print bare, reals with six decimals.
std::string FormatValue(double v);

}  // namespace zslab

#endif  // ZSLAB_IO_H_
