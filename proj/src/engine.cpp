#include "kanakey/engine.hpp"

#include <algorithm>

#include "kanakey/error.hpp"
#include "kanakey/utf8.hpp"

namespace kanakey {

std::string_view to_string(Mode m) {
  return m == Mode::Disambiguation ? "Disambiguation" : "MultiTap";
}

std::string_view to_string(Stage s) {
  switch (s) {
    case Stage::Entering: return "Entering";
    case Stage::CyclingReading: return "CyclingReading";
    case Stage::CyclingForm: return "CyclingForm";
  }
  return "Entering";
}

std::string_view to_string(CandidateSource s) {
  return s == CandidateSource::Exact ? "Exact" : "Prediction";
}

std::string_view to_string(EventType t) {
  switch (t) {
    case EventType::Digit: return "digit";
    case EventType::Select: return "select";
    case EventType::Convert: return "convert";
    case EventType::Commit: return "commit";
    case EventType::Backspace: return "backspace";
    case EventType::Advance: return "advance";
    case EventType::Mode: return "mode";
  }
  return "commit";
}

namespace {

void require_mode(const SessionState& state, Mode mode, const char* op) {
  if (state.mode != mode) {
    throw Error(ErrorKind::ContractViolation,
                std::string(op) + " needs " + std::string(to_string(mode)) + " mode");
  }
}

void drop_last_committed(SessionState& state) {
  state.committed.resize(state.committed.size() - utf8::last_scalar_size(state.committed));
}

void reset_selection(SessionState& state) {
  state.cursor.reset();
  state.stage = Stage::Entering;
  state.form_cursor = 0;
}

}  // namespace

Engine::Engine(std::shared_ptr<const KeyTrie> trie, std::shared_ptr<const KeypadLayout> layout,
               EngineOptions options)
    : trie_(std::move(trie)), layout_(std::move(layout)), options_(options) {
  if (!trie_ || !layout_) throw Error(ErrorKind::ContractViolation, "engine needs a trie and a layout");
  if (trie_->layout_hash() != layout_->content_hash()) {
    throw Error(ErrorKind::LayoutMismatch, "index was compiled against a different layout");
  }
  if (options_.prediction_limit == 0) {
    throw Error(ErrorKind::ContractViolation, "prediction limit must be >= 1");
  }
}

SessionState Engine::new_session(Mode mode) const {
  SessionState state;
  state.mode = mode;
  return state;
}

std::vector<Candidate> Engine::candidates_for(const KeySequence& pending) const {
  std::vector<Candidate> out;
  if (pending.empty()) return out;
  for (EntryId id : trie_->exact_matches(pending)) {
    const auto& e = trie_->entry(id);
    out.push_back({e.reading, CandidateSource::Exact, e.frequency, id});
  }
  for (EntryId id : trie_->prefix_predictions(pending, options_.prediction_limit)) {
    const auto& e = trie_->entry(id);
    out.push_back({e.reading, CandidateSource::Prediction, e.frequency, id});
  }
  return out;
}

std::string Engine::selection_text(const SessionState& state) const {
  const auto index = state.cursor.value_or(0);
  const auto& cand = state.candidates.at(index);
  if (state.stage == Stage::CyclingForm && state.form_cursor > 0) {
    return trie_->entry(cand.entry).forms.at(state.form_cursor - 1).surface;
  }
  return utf8::encode(cand.reading);
}

SessionState Engine::press_digit(SessionState state, Key key) const {
  require_mode(state, Mode::Disambiguation, "digit");
  if (!is_digit(key)) {
    throw Error(ErrorKind::ContractViolation,
                std::string("key ") + label(key) + " is not a digit key");
  }
  if (state.stage != Stage::Entering) state = press_commit(std::move(state)).state;
  state.pending.push_back(key);
  state.candidates = candidates_for(state.pending);
  return state;
}

SessionState Engine::press_select(SessionState state) const {
  require_mode(state, Mode::Disambiguation, "select");
  if (state.pending.empty()) throw Error(ErrorKind::ContractViolation, "nothing to select");
  if (state.candidates.empty()) {
    throw Error(ErrorKind::NoMatch, "no word matches " + to_string(state.pending));
  }
  if (state.stage == Stage::Entering) {
    state.cursor = 0;
  } else {
    state.cursor = (*state.cursor + 1) % state.candidates.size();
  }
  state.stage = Stage::CyclingReading;
  state.form_cursor = 0;
  return state;
}

SessionState Engine::press_convert(SessionState state) const {
  require_mode(state, Mode::Disambiguation, "convert");
  if (state.stage == Stage::Entering) {
    throw Error(ErrorKind::ContractViolation, "convert needs a selected reading");
  }
  const auto slots = trie_->entry(state.candidates.at(*state.cursor).entry).forms.size() + 1;
  state.form_cursor = state.stage == Stage::CyclingReading ? 1 % slots
                                                           : (state.form_cursor + 1) % slots;
  state.stage = Stage::CyclingForm;
  return state;
}

CommitResult Engine::press_commit(SessionState state) const {
  if (state.mode == Mode::MultiTap) {
    const auto before = state.committed.size();
    state = finalize_multitap(std::move(state));
    auto emitted = state.committed.substr(before);
    return {std::move(state), std::move(emitted)};
  }
  if (state.pending.empty()) return {std::move(state), {}};
  if (state.candidates.empty()) {
    throw Error(ErrorKind::NoMatch, "no word matches " + to_string(state.pending));
  }
  auto emitted = selection_text(state);
  state.committed += emitted;
  state.pending.clear();
  state.candidates.clear();
  reset_selection(state);
  return {std::move(state), std::move(emitted)};
}

SessionState Engine::press_backspace(SessionState state) const {
  if (state.mode == Mode::MultiTap) {
    if (state.multitap.active()) {
      state.multitap = {};
    } else {
      drop_last_committed(state);
    }
    return state;
  }
  if (state.stage != Stage::Entering) {
    reset_selection(state);
  } else if (!state.pending.empty()) {
    state.pending.pop_back();
    state.candidates = candidates_for(state.pending);
  } else {
    drop_last_committed(state);
  }
  return state;
}

KanaString Engine::multitap_current(const SessionState& state) const {
  const auto& buf = state.multitap;
  if (!buf.active()) return {};
  const auto& cycle = layout_->cycle(*buf.key);
  if (cycle.empty()) return {};
  const KanaString tapped(1, cycle[(buf.presses - 1) % cycle.size()]);
  if (buf.modifier_steps == 0 || layout_->syllabary().find(tapped) == nullptr) return tapped;
  const auto modcycle = layout_->syllabary().modifier_cycle(tapped);
  const auto start = static_cast<std::size_t>(
      std::find(modcycle.begin(), modcycle.end(), tapped) - modcycle.begin());
  return modcycle[(start + buf.modifier_steps) % modcycle.size()];
}

SessionState Engine::finalize_multitap(SessionState state) const {
  state.committed += utf8::encode(multitap_current(state));
  state.multitap = {};
  return state;
}

SessionState Engine::multitap_press(SessionState state, Key key) const {
  require_mode(state, Mode::MultiTap, "multi-tap press");
  auto& buf = state.multitap;
  if (key == KeypadLayout::kModifierKey) {
    if (buf.active()) ++buf.modifier_steps;
    return state;
  }
  if (buf.active() && *buf.key == key) {
    ++buf.presses;
    buf.modifier_steps = 0;
    return state;
  }
  state = finalize_multitap(std::move(state));
  if (!layout_->cycle(key).empty()) state.multitap = {key, 1, 0};
  return state;
}

SessionState Engine::multitap_advance(SessionState state) const {
  require_mode(state, Mode::MultiTap, "advance");
  return finalize_multitap(std::move(state));
}

SessionState Engine::toggle_mode(SessionState state) const {
  if (state.mode == Mode::MultiTap) {
    state = finalize_multitap(std::move(state));
    state.mode = Mode::Disambiguation;
    return state;
  }
  if (!state.pending.empty() && !state.candidates.empty()) {
    state = press_commit(std::move(state)).state;
  }
  state.pending.clear();
  state.candidates.clear();
  reset_selection(state);
  state.mode = Mode::MultiTap;
  return state;
}

SessionState Engine::apply(SessionState state, const Event& event) const {
  if (event.type == EventType::Mode) return toggle_mode(std::move(state));
  if (event.type == EventType::Commit) return press_commit(std::move(state)).state;
  if (event.type == EventType::Backspace) return press_backspace(std::move(state));

  if (event.type == EventType::Digit && !event.key) {
    throw Error(ErrorKind::ContractViolation, "digit event without a key");
  }
  if (state.mode == Mode::MultiTap) {
    switch (event.type) {
      case EventType::Digit: return multitap_press(std::move(state), *event.key);
      case EventType::Advance: return multitap_advance(std::move(state));
      default:
        throw Error(ErrorKind::ContractViolation,
                    std::string(to_string(event.type)) + " is not available in multi-tap mode");
    }
  }
  switch (event.type) {
    case EventType::Digit: return press_digit(std::move(state), *event.key);
    case EventType::Select: return press_select(std::move(state));
    case EventType::Convert: return press_convert(std::move(state));
    case EventType::Advance: return state;
    default: return state;
  }
}

DisplayView Engine::snapshot(const SessionState& state, std::size_t window) const {
  if (window == 0) throw Error(ErrorKind::ContractViolation, "window must be >= 1");
  DisplayView view;
  view.mode = state.mode;
  view.stage = state.stage;
  view.committed = state.committed;
  view.cursor = state.cursor;
  view.form_cursor = state.form_cursor;
  view.total_candidates = state.candidates.size();
  if (state.mode == Mode::MultiTap) {
    if (state.multitap.active()) {
      view.pending.assign(state.multitap.presses, label(*state.multitap.key));
      view.pending.append(state.multitap.modifier_steps, label(KeypadLayout::kModifierKey));
    }
    view.preview = utf8::encode(multitap_current(state));
  } else {
    view.pending = to_string(state.pending);
  }

  const auto n = state.candidates.size();
  if (n > 0) {
    const auto focus = state.cursor.value_or(0);
    std::size_t first = focus > window / 2 ? focus - window / 2 : 0;
    if (n > window) first = std::min(first, n - window);
    else first = 0;
    const auto last = std::min(n, first + window);
    view.first_index = first;
    view.candidates.assign(state.candidates.begin() + static_cast<std::ptrdiff_t>(first),
                           state.candidates.begin() + static_cast<std::ptrdiff_t>(last));
    if (state.cursor) {
      const auto& cand = state.candidates[*state.cursor];
      view.forms.push_back(utf8::encode(cand.reading));
      for (const auto& f : trie_->entry(cand.entry).forms) view.forms.push_back(f.surface);
    }
  }
  return view;
}

}  // namespace kanakey
