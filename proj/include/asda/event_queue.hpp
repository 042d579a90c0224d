#pragma once

#include <cstdint>
#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace asda {

class SchedulingError : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

/// Min-queue of timestamped payloads. Events are totally ordered by
/// (time, sequence); the sequence is assigned at scheduling time, so events
/// sharing a timestamp pop in the order they were scheduled.
template <typename Payload>
class EventQueue
{
public:
  struct Event
  {
    double time = 0.0;
    std::uint64_t sequence = 0;
    Payload payload;
  };

  double now () const { return now_; }
  bool empty () const { return heap_.empty (); }
  std::size_t size () const { return heap_.size (); }

  std::uint64_t
  schedule (double time, Payload payload)
  {
    if (!(time >= now_))
      {
        throw SchedulingError ("event at t=" + std::to_string (time)
                               + " precedes clock t=" + std::to_string (now_));
      }
    const std::uint64_t seq = next_sequence_++;
    heap_.push_back (Event{time, seq, std::move (payload)});
    std::push_heap (heap_.begin (), heap_.end (), Later{});
    return seq;
  }

  const Event &top () const { return heap_.front (); }

  /// Removes the earliest event and advances the clock to its time.
  Event
  pop ()
  {
    if (heap_.empty ())
      {
        throw SchedulingError ("pop from an empty event queue");
      }
    std::pop_heap (heap_.begin (), heap_.end (), Later{});
    Event e = std::move (heap_.back ());
    heap_.pop_back ();
    now_ = e.time;
    return e;
  }

private:
  struct Later
  {
    bool
    operator() (const Event &a, const Event &b) const
    {
      if (a.time != b.time)
        {
          return a.time > b.time;
        }
      return a.sequence > b.sequence;
    }
  };

  double now_ = 0.0;
  std::uint64_t next_sequence_ = 0;
  std::vector<Event> heap_;
};

} // namespace asda
