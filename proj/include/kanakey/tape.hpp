#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kanakey/engine.hpp"

namespace kanakey {

/// Event tapes: one event per line, `D <key>`, `SEL`, `CNV`, `COM`, `BSP`,
/// `ADV` or `MODE`. `D1` is accepted for `D 1`. Blank lines and lines
/// starting with `#` are skipped.
struct TapeEvent {
  Event event;
  std::string text;  // the event as written, normalized
  std::size_t line = 0;
};

/// Throws Error(Parse) with the 1-based line number.
std::vector<TapeEvent> parse_tape(std::string_view source);

Event parse_event(std::string_view token);
std::string format_event(const Event& event);

/// Replays a tape and renders one digest line per event
///   <n>\t<event>\tmode=<M>\tstage=<S>\tpending=<P>\tcursor=<C>[\terror=<kind>]
/// then `committed\t<text>`. Rejected events leave the state unchanged and
/// are reported on their digest line. An empty tape renders nothing.
std::string simulate(const Engine& engine, const std::vector<TapeEvent>& tape,
                     Mode start = Mode::Disambiguation);

std::string digest(const Engine& engine, const SessionState& state);

}  // namespace kanakey
