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

#include "mattersim/encap/encap.hpp"

#include <stdexcept>

namespace mattersim::encap {

int LayerBreakdown::layer_sum() const
{
    int sum = 0;
    for (const auto& l : layers) {
        sum += l.bytes;
    }
    return sum;
}

int LayerBreakdown::layer(const std::string& name) const
{
    for (const auto& l : layers) {
        if (l.name == name) {
            return l.bytes;
        }
    }
    return 0;
}

bool valid_ml_header_size(int bytes)
{
    return bytes == 14 || bytes == 18 || bytes == 2 || bytes == 3;
}

static void check_inputs(int ml_header_bytes, int payload_bytes)
{
    if (!valid_ml_header_size(ml_header_bytes)) {
        throw std::invalid_argument("ml header size must be 14/18 (plain) or 2/3 (compressed)");
    }
    if (payload_bytes < 0) {
        throw std::invalid_argument("payload size must be non-negative");
    }
}

static int thread_ipv6_bytes(const CompressionOptions& opts, const ThreadLayerConfig& cfg)
{
    if (opts.full_address_compression) {
        if (opts.context_slots_used > kMaxAddressContexts) {
            throw std::invalid_argument("context compression limited to 16 address pairs");
        }
        return cfg.ipv6_full_context;
    }
    return cfg.ipv6_compressed;
}

static int thread_udp_bytes(const CompressionOptions& opts, const ThreadLayerConfig& cfg)
{
    int udp = cfg.udp_compressed;
    if (opts.udp_port_compression) {
        udp -= cfg.udp_port_saving;
    }
    if (opts.elide_udp_checksum) {
        udp -= cfg.udp_checksum_saving;
    }
    return udp;
}

int thread_lower_overhead(bool multihop, const CompressionOptions& opts, const ThreadLayerConfig& cfg)
{
    return cfg.mac_header_footer + (multihop ? cfg.mesh_header : 0) + thread_ipv6_bytes(opts, cfg) +
        thread_udp_bytes(opts, cfg);
}

int wifi_lower_overhead(const WifiLayerConfig& cfg)
{
    return cfg.mac_header_fcs + cfg.llc_snap + cfg.ipv6 + cfg.udp;
}

LayerBreakdown thread_breakdown(int ml_header_bytes, int payload_bytes, bool multihop,
                                const CompressionOptions& opts, const ThreadLayerConfig& cfg)
{
    check_inputs(ml_header_bytes, payload_bytes);

    LayerBreakdown b;
    b.technology    = Technology::Thread;
    b.payload_bytes = payload_bytes;
    b.layers.push_back({"802.15.4", cfg.mac_header_footer});
    if (multihop) {
        b.layers.push_back({"mesh", cfg.mesh_header});
    }
    b.layers.push_back({"ipv6", thread_ipv6_bytes(opts, cfg)});
    b.layers.push_back({"udp", thread_udp_bytes(opts, cfg)});
    b.layers.push_back({"ml-header", ml_header_bytes});
    b.layers.push_back({"ml-mic", kMicBytes});

    int plain_total = b.layer_sum() + payload_bytes;
    if (plain_total <= kThreadMaxFrame) {
        b.total_bytes    = plain_total;
        b.fragmented     = false;
        b.fragment_count = 1;
        return b;
    }

    // 6LoWPAN fragmentation: everything above the link layer is split across
    // fragments; each fragment is its own 802.15.4 frame carrying a mesh
    // header (when multihop) and a fragmentation header.
    int per_frame_link = cfg.mac_header_footer + (multihop ? cfg.mesh_header : 0) + cfg.fragment_header;
    int capacity       = kThreadMaxFrame - per_frame_link;
    int content        = plain_total - cfg.mac_header_footer - (multihop ? cfg.mesh_header : 0);

    b.fragmented     = true;
    b.fragment_count = (content + capacity - 1) / capacity;
    b.total_bytes    = content + b.fragment_count * per_frame_link;
    return b;
}

LayerBreakdown wifi_breakdown(int ml_header_bytes, int payload_bytes, const WifiLayerConfig& cfg)
{
    check_inputs(ml_header_bytes, payload_bytes);

    LayerBreakdown b;
    b.technology    = Technology::WiFi;
    b.payload_bytes = payload_bytes;
    b.layers.push_back({"802.11", cfg.mac_header_fcs});
    b.layers.push_back({"llc-snap", cfg.llc_snap});
    b.layers.push_back({"ipv6", cfg.ipv6});
    b.layers.push_back({"udp", cfg.udp});
    b.layers.push_back({"ml-header", ml_header_bytes});
    b.layers.push_back({"ml-mic", kMicBytes});
    b.total_bytes    = b.layer_sum() + payload_bytes;
    b.fragmented     = false;
    b.fragment_count = 1;
    return b;
}

int max_unfragmented_payload(bool multihop, const CompressionOptions& opts, int ml_header_bytes,
                             const ThreadLayerConfig& cfg)
{
    if (!valid_ml_header_size(ml_header_bytes)) {
        throw std::invalid_argument("ml header size must be 14/18 (plain) or 2/3 (compressed)");
    }
    return kThreadMaxFrame - thread_lower_overhead(multihop, opts, cfg) - ml_header_bytes - kMicBytes;
}

} // namespace mattersim::encap
