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

namespace mattersim {

// Virtual time: nanoseconds since simulation start. No wall-clock anywhere.
using VirtualTime = int64_t;
using Duration    = int64_t;

constexpr Duration kMicrosecond = 1000;
constexpr Duration kMillisecond = 1000 * kMicrosecond;
constexpr Duration kSecond      = 1000 * kMillisecond;

constexpr Duration ms(int64_t v) { return v * kMillisecond; }

constexpr Duration seconds_to_ns(double s) { return static_cast<Duration>(s * 1e9 + 0.5); }
constexpr double ns_to_seconds(Duration d) { return static_cast<double>(d) / 1e9; }

using TimerId = uint64_t;

/// Scheduling interface implemented by the simulator clock. Protocol code
/// (MRP timers, subscription schedulers, transaction deadlines) programs
/// against this so it can be driven by any deterministic clock.
class TimerService {
public:
    virtual ~TimerService() = default;

    virtual VirtualTime now() const = 0;
    virtual TimerId schedule_after(Duration delay, std::function<void()> fn) = 0;
    virtual void cancel(TimerId id) = 0;
};

} // namespace mattersim
