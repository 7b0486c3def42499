#pragma once

#include <kdefect/hypergraph.hpp>

#include <chrono>
#include <cstdint>
#include <optional>

namespace kdefect {

/// Wall-clock budget shared by the exact solvers. A default-constructed
/// deadline never expires.
class Deadline
{
public:
    using Clock = std::chrono::steady_clock;

    Deadline() = default;

    static Deadline after(std::chrono::milliseconds budget)
    {
        Deadline d;
        d._at = Clock::now() + budget;
        return d;
    }

    static Deadline from_ms(std::int64_t ms)
    {
        return ms > 0 ? after(std::chrono::milliseconds(ms)) : Deadline{};
    }

    bool expired() const { return _at && Clock::now() >= *_at; }

    void check() const
    {
        if (expired())
            throw Timeout();
    }

    /// Cheap polling from inner loops: only every 4096th call reads the clock.
    void poll(std::uint64_t & counter) const
    {
        if (_at && (++counter & 0xfff) == 0)
            check();
    }

private:
    std::optional<Clock::time_point> _at;
};

} // namespace kdefect
