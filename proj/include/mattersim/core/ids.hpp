/*
 *
 *    Copyright (c) 2026 The mattersim Authors
 *
 *    Licensed under the Apache License, Version 2.0 (the "License");
 *    you may not use this file except in compliance with the License.
 *    You may obtain a copy of the License at
 *
 *        http://www.apache.org/licenses/LICENSE-2.0
 *
 *    Unless required by applicable law or agreed to in writing, software
 *    distributed under the License is distributed on an "AS IS" BASIS,
 *    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 *    See the License for the specific language governing permissions and
 *    limitations under the License.
 */

#pragma once

#include <cstdint>

namespace mattersim {

using FabricId   = uint64_t;
using NodeId     = uint64_t;
using GroupId    = uint64_t;
using EndpointId = uint16_t;
using ClusterId  = uint32_t;
using ElementId  = uint32_t;

// Node ids and group ids share the 64-bit space but occupy disjoint planes:
// group ids live in the top 2^16 values, so a bare 64-bit target is always
// unambiguously a node or a group.
constexpr uint64_t kGroupIdPlaneBase = 0xFFFFFFFFFFFF0000ULL;

constexpr bool is_group_id(uint64_t id) { return id >= kGroupIdPlaneBase; }
constexpr bool is_node_id(uint64_t id) { return id < kGroupIdPlaneBase; }

constexpr EndpointId kWildcardEndpoint = 0xFFFF;

enum class Technology {
    Thread,
    WiFi,
    Ethernet,
};

const char* technology_name(Technology tech);

} // namespace mattersim
