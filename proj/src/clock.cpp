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

#include "mattersim/netsim/clock.hpp"

#include <stdexcept>
#include <utility>

namespace mattersim::net {

TimerId VirtualClock::schedule_at(VirtualTime when, std::function<void()> fn)
{
    if (when < now_) {
        throw std::logic_error("event scheduled in the past");
    }
    TimerId id = next_id_++;
    queue_.push(Entry{when, next_seq_++, id});
    callbacks_.emplace(id, std::move(fn));
    return id;
}

TimerId VirtualClock::schedule_after(Duration delay, std::function<void()> fn)
{
    if (delay < 0) {
        throw std::logic_error("negative timer delay");
    }
    return schedule_at(now_ + delay, std::move(fn));
}

void VirtualClock::cancel(TimerId id)
{
    callbacks_.erase(id); // heap entry skipped lazily
}

bool VirtualClock::step()
{
    while (!queue_.empty()) {
        Entry entry = queue_.top();
        queue_.pop();
        auto it = callbacks_.find(entry.id);
        if (it == callbacks_.end()) {
            continue; // cancelled
        }
        auto fn = std::move(it->second);
        callbacks_.erase(it);
        now_ = entry.when;
        fn();
        return true;
    }
    return false;
}

void VirtualClock::run_until(VirtualTime t)
{
    while (!queue_.empty()) {
        Entry entry = queue_.top();
        if (entry.when > t) {
            break;
        }
        if (!callbacks_.contains(entry.id)) {
            queue_.pop();
            continue;
        }
        step();
    }
    if (t > now_) {
        now_ = t;
    }
}

void VirtualClock::run_to_completion(uint64_t max_events)
{
    uint64_t n = 0;
    while (step()) {
        if (++n > max_events) {
            throw std::runtime_error("event budget exceeded; likely a scheduling loop");
        }
    }
}

} // namespace mattersim::net
