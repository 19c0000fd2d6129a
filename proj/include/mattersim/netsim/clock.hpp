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
#include <functional>
#include <map>
#include <queue>
#include <vector>

#include "mattersim/core/time.hpp"

namespace mattersim::net {

/// Deterministic discrete-event clock. Events fire in (time, insertion)
/// order; scheduling into the past is a logic error.
class VirtualClock : public TimerService {
public:
    VirtualTime now() const override { return now_; }

    TimerId schedule_at(VirtualTime when, std::function<void()> fn);
    TimerId schedule_after(Duration delay, std::function<void()> fn) override;
    void cancel(TimerId id) override;

    bool has_pending() const { return !callbacks_.empty(); }
    size_t pending_count() const { return callbacks_.size(); }

    /// Runs the earliest event. Returns false when the queue is empty.
    bool step();

    /// Runs every event scheduled at or before `t`, then advances to `t`.
    void run_until(VirtualTime t);

    /// Drains the queue. `max_events` guards against runaway feedback loops.
    void run_to_completion(uint64_t max_events = 50'000'000);

private:
    struct Entry {
        VirtualTime when;
        uint64_t seq;
        TimerId id;
        bool operator>(const Entry& other) const
        {
            if (when != other.when) {
                return when > other.when;
            }
            return seq > other.seq;
        }
    };

    VirtualTime now_ = 0;
    uint64_t next_seq_ = 0;
    TimerId next_id_ = 1;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> queue_;
    std::map<TimerId, std::function<void()>> callbacks_; // cancelled ids removed here
};

} // namespace mattersim::net
