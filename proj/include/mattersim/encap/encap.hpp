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

#include <string>
#include <vector>

#include "mattersim/core/ids.hpp"

namespace mattersim::encap {

// Per-layer byte accounting for one Message Layer message framed over
// Thread (IEEE 802.15.4 + 6LoWPAN) or Wi-Fi. Values are bytes on the wire,
// excluding PHY preamble/SFD (the simulator adds those to airtime only).

constexpr int kMicBytes      = 16;
constexpr int kThreadMaxFrame = 127;

/// 6LoWPAN compression techniques that shrink the Thread headers.
struct CompressionOptions {
    bool full_address_compression = false; // context-based: address bytes fully elided
    bool udp_port_compression     = false; // 4-byte port pair -> 1 byte
    bool elide_udp_checksum       = false; // 2-byte checksum covered by the MIC
    int context_slots_used        = 0;     // context compression supports at most 16 address pairs
};

constexpr int kMaxAddressContexts = 16;

struct ThreadLayerConfig {
    int mac_header_footer = 17; // IEEE 802.15.4 header + footer, minimal configuration
    int mesh_header       = 6;  // mesh-under forwarding header, multihop only
    int ipv6_compressed   = 19; // 6LoWPAN IPHC as measured without address contexts
    int ipv6_full_context = 3;  // IPHC base (2) + inline hop limit (1), addresses elided
    int udp_compressed    = 7;
    int udp_port_saving   = 3;
    int udp_checksum_saving = 2;
    int fragment_header   = 5;  // per-fragment 6LoWPAN fragmentation header
    int phy_preamble      = 6;  // preamble + SFD + PHR; airtime only, never in breakdowns
};

struct WifiLayerConfig {
    int mac_header_fcs = 30; // 802.11 data MAC header + FCS
    int llc_snap       = 8;
    int ipv6           = 40; // uncompressed
    int udp            = 8;  // uncompressed
};

struct LayerBytes {
    std::string name;
    int bytes = 0;
};

struct LayerBreakdown {
    Technology technology = Technology::Thread;
    std::vector<LayerBytes> layers; // ordered bottom-up, payload excluded
    int payload_bytes = 0;
    int total_bytes   = 0; // layers + payload, plus per-fragment overhead when fragmented
    bool fragmented   = false;
    int fragment_count = 1;

    int layer_sum() const;
    int layer(const std::string& name) const; // 0 when the layer is absent
};

/// Valid Message Layer header sizes: 14/18 plain, 2/3 SCHC-compressed.
bool valid_ml_header_size(int bytes);

LayerBreakdown thread_breakdown(int ml_header_bytes, int payload_bytes, bool multihop,
                                const CompressionOptions& opts,
                                const ThreadLayerConfig& cfg = {});

LayerBreakdown wifi_breakdown(int ml_header_bytes, int payload_bytes,
                              const WifiLayerConfig& cfg = {});

/// Largest Message Layer payload that still fits one 127-byte frame.
int max_unfragmented_payload(bool multihop, const CompressionOptions& opts, int ml_header_bytes,
                             const ThreadLayerConfig& cfg = {});

/// Bytes below the Message Layer for one Thread frame (MAC + mesh + IP + UDP).
int thread_lower_overhead(bool multihop, const CompressionOptions& opts,
                          const ThreadLayerConfig& cfg = {});

/// Bytes below the Message Layer for one Wi-Fi frame.
int wifi_lower_overhead(const WifiLayerConfig& cfg = {});

} // namespace mattersim::encap
