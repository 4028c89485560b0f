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

#include "zslab/hyperplane.h"

#include "zslab/error.h"

namespace zslab {

Hyperplane::Hyperplane(int64_t prime, GroupElement n, int64_t off)
    : p(prime), normal(std::move(n)), offset(off) {
  if (!IsPrime(p)) throw Error(ErrorCode::kInvalidInput, "p must be prime");
  if (offset < 0 || offset >= p) {
    throw Error(ErrorCode::kInvalidInput, "offset outside F_p");
  }
  for (int64_t c : normal.coords) {
    if (c < 0 || c >= p) throw Error(ErrorCode::kInvalidInput, "bad normal");
  }
  const int j = pivot();
  if (j < 0 || normal.coords[j] != 1) {
    throw Error(ErrorCode::kInvalidInput,
                "normal must be nonzero with leading coordinate 1");
  }
}

int Hyperplane::pivot() const {
  for (size_t i = 0; i < normal.coords.size(); ++i) {
    if (normal.coords[i] != 0) return static_cast<int>(i);
  }
  return -1;
}

bool Hyperplane::Contains(const GroupElement& v) const {
  if (v.coords.size() != normal.coords.size()) return false;
  int64_t dot = 0;
  for (size_t i = 0; i < v.coords.size(); ++i) {
    dot = (dot + normal.coords[i] * v.coords[i]) % p;
  }
  return dot == offset;
}

std::string Hyperplane::ToString() const {
  return "<" + zslab::ToString(normal) + ", v> = " + std::to_string(offset);
}

std::vector<Hyperplane> EnumerateHyperplanes(int64_t p, int n) {
  const AbelianGroup g = AbelianGroup::Elementary(p, n);
  std::vector<Hyperplane> out;
  for (int64_t i = 1; i < g.order(); ++i) {
    GroupElement normal = g.ElementAt(i);
    int lead = 0;
    while (normal.coords[lead] == 0) ++lead;
    if (normal.coords[lead] != 1) continue;
    for (int64_t off = 0; off < p; ++off) out.emplace_back(p, normal, off);
  }
  return out;
}

}  // namespace zslab
