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

#ifndef ZSLAB_HYPERPLANE_H_
#define ZSLAB_HYPERPLANE_H_

#include <cstdint>
#include <string>
#include <vector>

#include "zslab/group.h"

namespace zslab {

// Affine hyperplane {v in F_p^n : <normal, v> = offset}. The normal is
// canonical: its first nonzero coordinate (the pivot) is 1.
struct Hyperplane {
  int64_t p = 0;
  GroupElement normal;
  int64_t offset = 0;

  // Throws kInvalidInput for a zero or non-canonical normal.
  Hyperplane(int64_t prime, GroupElement n, int64_t off);
  Hyperplane() = default;

  int dimension() const { return static_cast<int>(normal.coords.size()); }
  int pivot() const;
  bool Contains(const GroupElement& v) const;
  std::string ToString() const;

  bool operator==(const Hyperplane&) const = default;
};

// All p (p^n - 1)/(p - 1) hyperplanes of F_p^n: canonical normals in
// increasing index order, offsets 0..p-1 within each normal.
std::vector<Hyperplane> EnumerateHyperplanes(int64_t p, int n);

}  // namespace zslab

#endif  // ZSLAB_HYPERPLANE_H_
