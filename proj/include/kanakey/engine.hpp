#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kanakey/key_trie.hpp"
#include "kanakey/layout.hpp"

namespace kanakey {

enum class Mode { Disambiguation, MultiTap };
enum class Stage { Entering, CyclingReading, CyclingForm };
enum class CandidateSource { Exact, Prediction };

std::string_view to_string(Mode m);
std::string_view to_string(Stage s);
std::string_view to_string(CandidateSource s);

struct Candidate {
  KanaString reading;
  CandidateSource source = CandidateSource::Exact;
  std::uint64_t frequency = 0;
  EntryId entry = 0;

  bool operator==(const Candidate&) const = default;
};

/// The kana being composed in multi-tap mode: `presses` taps of `key`
/// followed by `modifier_steps` taps of the modifier key.
struct MultiTapBuffer {
  std::optional<Key> key;
  std::size_t presses = 0;
  std::size_t modifier_steps = 0;

  bool active() const { return key.has_value(); }
  bool operator==(const MultiTapBuffer&) const = default;
};

/// Everything about one user's input. A plain value: copy it, compare it,
/// hand it to another thread.
struct SessionState {
  Mode mode = Mode::Disambiguation;
  KeySequence pending;
  MultiTapBuffer multitap;
  std::vector<Candidate> candidates;
  std::optional<std::size_t> cursor;
  Stage stage = Stage::Entering;
  std::size_t form_cursor = 0;  // 0 is the plain reading, i is forms[i-1]
  std::string committed;

  bool operator==(const SessionState&) const = default;
};

struct CommitResult {
  SessionState state;
  std::string emitted;
};

enum class EventType { Digit, Select, Convert, Commit, Backspace, Advance, Mode };

std::string_view to_string(EventType t);

struct Event {
  EventType type = EventType::Commit;
  std::optional<Key> key;  // Digit only

  bool operator==(const Event&) const = default;
};

struct EngineOptions {
  std::size_t prediction_limit = 10;
};

/// What a UI shows: at most `window` candidates around the cursor.
struct DisplayView {
  Mode mode = Mode::Disambiguation;
  Stage stage = Stage::Entering;
  std::string committed;
  std::string pending;                  // digits, or the multi-tap press run
  std::string preview;                  // kana currently under composition
  std::vector<Candidate> candidates;    // the visible slice
  std::size_t first_index = 0;          // position of candidates[0] in the full list
  std::size_t total_candidates = 0;
  std::optional<std::size_t> cursor;    // absolute
  std::size_t form_cursor = 0;
  std::vector<std::string> forms;       // selected entry: reading, then written forms
};

/// Word-level disambiguation over a key trie, plus multi-tap entry.
///
/// Operations take a state and return the next one; a thrown Error leaves
/// the caller's state untouched. The engine holds no per-user data and may
/// be shared by any number of sessions.
class Engine {
 public:
  /// Throws LayoutMismatch when the trie was built against another layout.
  Engine(std::shared_ptr<const KeyTrie> trie, std::shared_ptr<const KeypadLayout> layout,
         EngineOptions options = {});

  const KeyTrie& trie() const { return *trie_; }
  const KeypadLayout& layout() const { return *layout_; }
  const EngineOptions& options() const { return options_; }

  SessionState new_session(Mode mode = Mode::Disambiguation) const;

  // Disambiguation mode.
  SessionState press_digit(SessionState state, Key key) const;
  SessionState press_select(SessionState state) const;
  SessionState press_convert(SessionState state) const;
  CommitResult press_commit(SessionState state) const;
  SessionState press_backspace(SessionState state) const;

  // Multi-tap mode.
  SessionState multitap_press(SessionState state, Key key) const;
  SessionState multitap_advance(SessionState state) const;

  /// Finalizes whatever is pending, then flips the mode.
  SessionState toggle_mode(SessionState state) const;

  /// Dispatches one event according to the state's mode.
  SessionState apply(SessionState state, const Event& event) const;

  /// Candidate list for a pending sequence: exact matches, then predictions.
  std::vector<Candidate> candidates_for(const KeySequence& pending) const;

  /// The kana the multi-tap buffer currently shows, empty when idle.
  KanaString multitap_current(const SessionState& state) const;

  /// Throws ContractViolation when window is 0.
  DisplayView snapshot(const SessionState& state, std::size_t window) const;

 private:
  SessionState finalize_multitap(SessionState state) const;
  std::string selection_text(const SessionState& state) const;

  std::shared_ptr<const KeyTrie> trie_;
  std::shared_ptr<const KeypadLayout> layout_;
  EngineOptions options_;
};

}  // namespace kanakey
