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

#include "zslab/io.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zslab/error.h"

namespace zslab {

Json ToJson(const GroupElement& x) { return Json(x.coords); }

Json ToJson(const std::vector<GroupElement>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(ToJson(x));
  return out;
}

Json ToJson(const Witness& w) {
  Json out;
  out["kind"] = w.kind == WitnessKind::kZeroSumSubsequence
                    ? "zero-sum-subsequence"
                    : "distinct-zero-sum-set";
  out["length"] = w.length();
  out["indices"] = w.indices;
  out["elements"] = ToJson(w.elements);
  return out;
}

Json ToJson(const ExtremalCertificate& cert) {
  Json out;
  out["claim"] = cert.claim == ExtremalCertificate::Claim::kNoZeroSumSubsequence
                     ? "no-zero-sum-subsequence"
                     : "no-distinct-zero-sum-set";
  out["group"] = cert.group.ToString();
  out["m"] = cert.m;
  out["exhaustive"] = cert.exhaustive;
  out["object"] = ToJson(cert.object);
  return out;
}

Json ToJson(const ReductionTrace& trace) {
  Json out;
  out["step"] = StepKindName(trace.kind);
  out["group"] = trace.group.ToString();
  out["selected"] = trace.selected;
  if (!trace.blocks.empty()) {
    out["blocks"] = trace.blocks;
    Json subs = Json::array();
    for (const auto& t : trace.block_traces) subs.push_back(ToJson(t));
    out["block_traces"] = std::move(subs);
  }
  if (!trace.subgroup_trace.empty()) {
    out["subgroup_trace"] = ToJson(trace.subgroup_trace.front());
  }
  return out;
}

Json ToJson(const Hyperplane& v) {
  Json out;
  out["normal"] = ToJson(v.normal);
  out["offset"] = v.offset;
  return out;
}

Json ToJson(const ExtractionOutcome& outcome) {
  Json out;
  if (outcome.zero_sum) {
    out["branch"] = "zero-sum";
    out["witness"] = ToJson(*outcome.zero_sum);
    return out;
  }
  out["branch"] = "ap-free";
  const ApFreePart& part = *outcome.apfree;
  out["hyperplane"] = ToJson(part.plane);
  out["x1"] = outcome.scores->x1;
  out["x2"] = outcome.scores->x2;
  out["planes_scored"] = outcome.planes_scored;
  out["b"] = ToJson(part.b.points());
  Json dels = Json::array();
  for (const auto& d : part.deletions) {
    Json e;
    e["ap"] = Json::array({ToJson(d.ap.x), ToJson(d.ap.y), ToJson(d.ap.z)});
    e["deleted"] = ToJson(d.deleted);
    dels.push_back(std::move(e));
  }
  out["deletions"] = std::move(dels);
  return out;
}

std::string FormatValue(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  if (std::abs(v - std::round(v)) < 1e-9 && std::abs(v) < 1e15) {
    return std::to_string(static_cast<int64_t>(std::llround(v)));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

Json ToJson(const BoundReport& report) {
  Json out;
  out["group"] = report.group.ToString();
  out["consistent"] = report.consistent;
  Json entries = Json::array();
  for (const auto& e : report.entries) {
    Json j;
    j["quantity"] = e.quantity;
    j["kind"] = BoundKindName(e.kind);
    j["strict"] = e.strict;
    j["value"] = e.value;
    j["ceiling"] = static_cast<int64_t>(std::ceil(e.value - 1e-9));
    j["source"] = e.source;
    j["assumptions"] = e.assumptions;
    j["exhaustive"] = e.exhaustive;
    entries.push_back(std::move(j));
  }
  out["entries"] = std::move(entries);
  out["violations"] = report.violations;
  return out;
}

std::vector<GroupElement> ElementsFromJson(const Json& j,
                                           const AbelianGroup& g) {
  if (!j.is_array()) {
    throw Error(ErrorCode::kInvalidInput, "expected an array of coordinates");
  }
  std::vector<GroupElement> out;
  for (const auto& item : j) {
    if (!item.is_array()) {
      throw Error(ErrorCode::kInvalidInput, "expected a coordinate array");
    }
    GroupElement x;
    for (const auto& c : item) {
      if (!c.is_number_integer()) {
        throw Error(ErrorCode::kInvalidInput, "coordinates must be integers");
      }
      x.coords.push_back(c.get<int64_t>());
    }
    if (!g.IsValid(x)) {
      throw Error(ErrorCode::kInvalidInput,
                  ToString(x) + " is not an element of " + g.ToString());
    }
    out.push_back(std::move(x));
  }
  return out;
}

ElementFile ReadElementFile(const std::string& path,
                            const std::optional<AbelianGroup>& group) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidInput, "cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::kInvalidInput, path + ": " + e.what());
  }
  ElementFile file;
  bool have_group = false;
  const Json* items = &j;
  if (j.is_object()) {
    if (j.contains("group") && j["group"].is_string()) {
      file.group = ParseGroup(j["group"].get<std::string>());
      have_group = true;
    }
    if (j.contains("items")) {
      items = &j["items"];
    } else if (j.contains("points")) {
      items = &j["points"];
    } else {
      throw Error(ErrorCode::kInvalidInput, path + ": missing items/points");
    }
    if (group) {
      file.group = *group;
      have_group = true;
    }
  } else {
    if (!group) {
      throw Error(ErrorCode::kInvalidInput,
                  path + ": bare arrays need an explicit group");
    }
    file.group = *group;
    have_group = true;
  }
  if (!have_group) {
    throw Error(ErrorCode::kInvalidInput, path + ": no group given");
  }
  file.elements = ElementsFromJson(*items, file.group);
  return file;
}

ExtremalCertificate CertificateFromJson(const Json& j) {
  try {
    ExtremalCertificate cert;
    const std::string claim = j.at("claim").get<std::string>();
    if (claim == "no-zero-sum-subsequence") {
      cert.claim = ExtremalCertificate::Claim::kNoZeroSumSubsequence;
    } else if (claim == "no-distinct-zero-sum-set") {
      cert.claim = ExtremalCertificate::Claim::kNoDistinctZeroSumSet;
    } else {
      throw Error(ErrorCode::kInvalidInput, "unknown claim " + claim);
    }
    cert.group = ParseGroup(j.at("group").get<std::string>());
    cert.m = j.at("m").get<int64_t>();
    cert.exhaustive = j.at("exhaustive").get<bool>();
    cert.object = ElementsFromJson(j.at("object"), cert.group);
    return cert;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kInvalidInput, e.what());
  }
}

std::string TsvHeader() {
  return "group\tquantity\tkind\tvalue\tsource\texhaustive\n";
}

std::string ToTsv(const BoundReport& report) {
  std::ostringstream os;
  const std::string name = report.group.ToString();
  for (const auto& e : report.entries) {
    os << name << '\t' << e.quantity << '\t' << BoundKindName(e.kind)
       << (e.strict ? "-strict" : "") << '\t' << FormatValue(e.value) << '\t'
       << e.source << '\t' << (e.exhaustive ? "true" : "false") << '\n';
  }
  return os.str();
}

}  // namespace zslab
