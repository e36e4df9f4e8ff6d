#include "kanakey/tape.hpp"

#include "kanakey/error.hpp"
#include "kanakey/utf8.hpp"

namespace kanakey {

Event parse_event(std::string_view token) {
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.remove_suffix(1);
  if (token == "SEL") return {EventType::Select, std::nullopt};
  if (token == "CNV") return {EventType::Convert, std::nullopt};
  if (token == "COM") return {EventType::Commit, std::nullopt};
  if (token == "BSP") return {EventType::Backspace, std::nullopt};
  if (token == "ADV") return {EventType::Advance, std::nullopt};
  if (token == "MODE") return {EventType::Mode, std::nullopt};
  if (!token.empty() && token.front() == 'D') {
    auto rest = token.substr(1);
    if (!rest.empty() && rest.front() == ' ') rest.remove_prefix(1);
    if (rest.size() == 1) return {EventType::Digit, key_from_label(rest.front())};
  }
  throw Error(ErrorKind::Parse, "unknown event '" + std::string(token) + "'");
}

std::string format_event(const Event& event) {
  switch (event.type) {
    case EventType::Digit: return std::string("D ") + (event.key ? label(*event.key) : '?');
    case EventType::Select: return "SEL";
    case EventType::Convert: return "CNV";
    case EventType::Commit: return "COM";
    case EventType::Backspace: return "BSP";
    case EventType::Advance: return "ADV";
    case EventType::Mode: return "MODE";
  }
  return "?";
}

std::vector<TapeEvent> parse_tape(std::string_view source) {
  std::vector<TapeEvent> tape;
  std::size_t line_no = 0;
  for (auto line : utf8::split_lines(source)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    try {
      auto event = parse_event(line);
      tape.push_back({event, format_event(event), line_no});
    } catch (const Error&) {
      throw Error(ErrorKind::Parse, "bad event '" + std::string(line) + "'", line_no);
    }
  }
  return tape;
}

std::string digest(const Engine& engine, const SessionState& state) {
  const auto view = engine.snapshot(state, 1);
  std::string out = "mode=";
  out += state.mode == Mode::Disambiguation ? "D" : "M";
  out += "\tstage=";
  out += to_string(state.stage);
  out += "\tpending=";
  out += view.pending.empty() ? "-" : view.pending;
  out += "\tcursor=";
  out += state.cursor ? std::to_string(*state.cursor) : "-";
  return out;
}

std::string simulate(const Engine& engine, const std::vector<TapeEvent>& tape, Mode start) {
  if (tape.empty()) return {};
  auto state = engine.new_session(start);
  std::string out;
  std::size_t n = 0;
  for (const auto& ev : tape) {
    std::string error;
    try {
      state = engine.apply(state, ev.event);
    } catch (const Error& e) {
      error = to_string(e.kind());
    }
    out += std::to_string(++n) + "\t" + ev.text + "\t" + digest(engine, state);
    if (!error.empty()) out += "\terror=" + error;
    out += "\n";
  }
  out += "committed\t" + state.committed + "\n";
  return out;
}

}  // namespace kanakey
