// Copyright 2026 The Popassign Authors
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

#ifndef POPASSIGN_CERTIFICATE_HPP_
#define POPASSIGN_CERTIFICATE_HPP_

#include <cstdint>
#include <numeric>
#include <vector>

namespace popassign {

// Integer dual vector over agents and objects. For an assignment M it
// witnesses an upper bound on the unpopularity margin when
// alpha[a] + alpha[b] >= wt_M(a, b) holds on every edge.
struct DualCertificate {
  std::vector<int> agent;
  std::vector<int> object;

  DualCertificate() = default;
  DualCertificate(int num_agents, int num_objects)
      : agent(num_agents, 0), object(num_objects, 0) {}

  std::int64_t sum() const {
    return std::accumulate(agent.begin(), agent.end(), std::int64_t{0}) +
           std::accumulate(object.begin(), object.end(), std::int64_t{0});
  }

  friend bool operator==(const DualCertificate&,
                         const DualCertificate&) = default;
};

}  // namespace popassign

#endif  // POPASSIGN_CERTIFICATE_HPP_
