#pragma once

#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

#include "kanakey/engine.hpp"
#include "kanakey/error.hpp"

namespace httplib {
class Server;
}

namespace kanakey {

using MonotonicClock = std::function<std::chrono::steady_clock::time_point()>;

struct ServiceOptions {
  std::chrono::steady_clock::duration idle_timeout = std::chrono::minutes(15);
  MonotonicClock clock = [] { return std::chrono::steady_clock::now(); };
};

struct SessionHandle {
  std::string id;
  SessionState state;
  std::chrono::steady_clock::time_point last_activity;
};

/// Outcome of applying an event: the (possibly unchanged) state plus the
/// engine's rejection, if any.
struct ApplyResult {
  SessionState state;
  std::optional<Error> error;
};

/// Live sessions over one shared engine. Each session is a single-writer
/// state machine: events for the same id are applied one at a time, in
/// the order their calls take the session lock. Idle sessions expire.
class SessionManager {
 public:
  explicit SessionManager(std::shared_ptr<const Engine> engine, ServiceOptions options = {});

  const Engine& engine() const { return *engine_; }

  std::string create(Mode mode = Mode::Disambiguation);
  /// nullopt for unknown or expired ids.
  std::optional<SessionState> get(const std::string& id);
  std::optional<ApplyResult> apply(const std::string& id, const Event& event);
  bool remove(const std::string& id);

  std::size_t purge_expired();
  std::size_t size() const;

 private:
  struct Slot {
    std::mutex mutex;
    SessionHandle handle;
  };

  std::shared_ptr<Slot> lookup(const std::string& id);
  bool expired(const SessionHandle& handle, std::chrono::steady_clock::time_point now) const;
  std::string fresh_id();

  std::shared_ptr<const Engine> engine_;
  ServiceOptions options_;
  mutable std::mutex table_mutex_;
  std::unordered_map<std::string, std::shared_ptr<Slot>> sessions_;
  std::uint64_t id_state_;
};

/// JSON state view:
///   {committed, pending, candidates: [{reading, source, frequency}],
///    cursor, stage, formCursor, forms, mode}
std::string state_view_json(const Engine& engine, const SessionState& state);

/// Parses an event body {"type": "...", "key": "..."}; throws Error(Parse).
Event parse_event_json(std::string_view body);

/// HTTP facade:
///   POST   /sessions              -> 201 {"id"}
///   POST   /sessions/{id}/events  -> 200 state view
///   GET    /sessions/{id}         -> 200 state view
///   DELETE /sessions/{id}         -> 204
///   GET    /layout                -> key captions for keypad UIs
class HttpService {
 public:
  explicit HttpService(std::shared_ptr<SessionManager> sessions);
  ~HttpService();

  HttpService(const HttpService&) = delete;
  HttpService& operator=(const HttpService&) = delete;

  /// Binds and returns the port; port 0 picks a free one.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  bool listen();
  void stop();
  void wait_until_ready() const;

 private:
  std::shared_ptr<SessionManager> sessions_;
  std::unique_ptr<httplib::Server> server_;
};

}  // namespace kanakey
