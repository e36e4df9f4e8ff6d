#include "kanakey/service.hpp"

#include <httplib.h>

#include <iomanip>
#include <json.hpp>
#include <random>
#include <sstream>

#include "kanakey/utf8.hpp"

namespace kanakey {

using json = nlohmann::json;

SessionManager::SessionManager(std::shared_ptr<const Engine> engine, ServiceOptions options)
    : engine_(std::move(engine)), options_(std::move(options)), id_state_(std::random_device{}()) {
  id_state_ = (id_state_ << 32) ^ std::random_device{}();
}

std::string SessionManager::fresh_id() {
  // splitmix64 over a random seed; ids only need to be unique and opaque.
  std::ostringstream out;
  for (int i = 0; i < 2; ++i) {
    std::uint64_t z = (id_state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z ^= z >> 31;
    out << std::hex << std::setw(16) << std::setfill('0') << z;
  }
  return out.str();
}

bool SessionManager::expired(const SessionHandle& handle,
                             std::chrono::steady_clock::time_point now) const {
  return now - handle.last_activity > options_.idle_timeout;
}

std::string SessionManager::create(Mode mode) {
  auto slot = std::make_shared<Slot>();
  slot->handle.state = engine_->new_session(mode);
  slot->handle.last_activity = options_.clock();
  std::lock_guard lock(table_mutex_);
  std::string id;
  do {
    id = fresh_id();
  } while (sessions_.contains(id));
  slot->handle.id = id;
  sessions_.emplace(id, std::move(slot));
  return id;
}

std::shared_ptr<SessionManager::Slot> SessionManager::lookup(const std::string& id) {
  std::lock_guard lock(table_mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) return nullptr;
  return it->second;
}

std::optional<SessionState> SessionManager::get(const std::string& id) {
  auto slot = lookup(id);
  if (!slot) return std::nullopt;
  std::lock_guard lock(slot->mutex);
  const auto now = options_.clock();
  if (expired(slot->handle, now)) {
    remove(id);
    return std::nullopt;
  }
  slot->handle.last_activity = now;
  return slot->handle.state;
}

std::optional<ApplyResult> SessionManager::apply(const std::string& id, const Event& event) {
  auto slot = lookup(id);
  if (!slot) return std::nullopt;
  std::lock_guard lock(slot->mutex);
  const auto now = options_.clock();
  if (expired(slot->handle, now)) {
    remove(id);
    return std::nullopt;
  }
  slot->handle.last_activity = now;
  ApplyResult result;
  try {
    slot->handle.state = engine_->apply(slot->handle.state, event);
  } catch (const Error& e) {
    result.error = e;
  }
  result.state = slot->handle.state;
  return result;
}

bool SessionManager::remove(const std::string& id) {
  std::lock_guard lock(table_mutex_);
  return sessions_.erase(id) > 0;
}

std::size_t SessionManager::purge_expired() {
  const auto now = options_.clock();
  std::lock_guard lock(table_mutex_);
  std::size_t purged = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock slot_lock(it->second->mutex, std::try_to_lock);
    // A locked slot is in use right now, so it is not idle.
    if (slot_lock.owns_lock() && expired(it->second->handle, now)) {
      slot_lock.unlock();
      it = sessions_.erase(it);
      ++purged;
    } else {
      ++it;
    }
  }
  return purged;
}

std::size_t SessionManager::size() const {
  std::lock_guard lock(table_mutex_);
  return sessions_.size();
}

std::string state_view_json(const Engine& engine, const SessionState& state) {
  const auto view = engine.snapshot(state, std::max<std::size_t>(1, state.candidates.size()));
  json candidates = json::array();
  for (const auto& c : state.candidates) {
    candidates.push_back({{"reading", utf8::encode(c.reading)},
                          {"source", std::string(to_string(c.source))},
                          {"frequency", c.frequency}});
  }
  json out = {
      {"committed", state.committed},
      {"pending", view.pending},
      {"candidates", std::move(candidates)},
      {"cursor", state.cursor ? json(*state.cursor) : json(nullptr)},
      {"stage", std::string(to_string(state.stage))},
      {"formCursor", state.form_cursor},
      {"forms", view.forms},
      {"mode", std::string(to_string(state.mode))},
  };
  if (state.mode == Mode::MultiTap) out["preview"] = view.preview;
  return out.dump();
}

Event parse_event_json(std::string_view body) {
  json j;
  try {
    j = json::parse(body);
  } catch (const json::parse_error&) {
    throw Error(ErrorKind::Parse, "body is not JSON");
  }
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
    throw Error(ErrorKind::Parse, "body needs a string \"type\"");
  }
  const auto type = j["type"].get<std::string>();
  Event event;
  if (type == "digit") {
    if (!j.contains("key") || !j["key"].is_string() || j["key"].get<std::string>().size() != 1) {
      throw Error(ErrorKind::Parse, "digit event needs a one-character \"key\"");
    }
    event.type = EventType::Digit;
    event.key = key_from_label(j["key"].get<std::string>()[0]);
    return event;
  }
  if (j.contains("key")) throw Error(ErrorKind::Parse, "\"key\" is only allowed on digit events");
  if (type == "select") event.type = EventType::Select;
  else if (type == "convert") event.type = EventType::Convert;
  else if (type == "commit") event.type = EventType::Commit;
  else if (type == "backspace") event.type = EventType::Backspace;
  else if (type == "advance") event.type = EventType::Advance;
  else if (type == "mode") event.type = EventType::Mode;
  else throw Error(ErrorKind::Parse, "unknown event type \"" + type + "\"");
  return event;
}

namespace {

constexpr const char* kJson = "application/json";

void send_error(httplib::Response& res, int status, std::string_view kind, const std::string& why) {
  res.status = status;
  res.set_content(json{{"error", kind}, {"reason", why}}.dump(), kJson);
}

}  // namespace

HttpService::HttpService(std::shared_ptr<SessionManager> sessions)
    : sessions_(std::move(sessions)), server_(std::make_unique<httplib::Server>()) {
  auto& srv = *server_;
  auto sessions_ptr = sessions_;

  srv.Post("/sessions", [sessions_ptr](const httplib::Request&, httplib::Response& res) {
    sessions_ptr->purge_expired();
    res.status = 201;
    res.set_content(json{{"id", sessions_ptr->create()}}.dump(), kJson);
  });

  srv.Post(R"(/sessions/([0-9a-f]+)/events)",
           [sessions_ptr](const httplib::Request& req, httplib::Response& res) {
             const std::string id = req.matches[1];
             Event event;
             try {
               event = parse_event_json(req.body);
             } catch (const Error& e) {
               send_error(res, 400, "bad-request", e.what());
               return;
             }
             auto result = sessions_ptr->apply(id, event);
             if (!result) {
               send_error(res, 404, "not-found", "no live session " + id);
               return;
             }
             const auto view = state_view_json(sessions_ptr->engine(), result->state);
             if (result->error) {
               res.status = 409;
               res.set_content(json{{"error", to_string(result->error->kind())},
                                    {"reason", result->error->what()},
                                    {"state", json::parse(view)}}
                                   .dump(),
                               kJson);
               return;
             }
             res.status = 200;
             res.set_content(view, kJson);
           });

  srv.Get(R"(/sessions/([0-9a-f]+))",
          [sessions_ptr](const httplib::Request& req, httplib::Response& res) {
            const std::string id = req.matches[1];
            auto state = sessions_ptr->get(id);
            if (!state) {
              send_error(res, 404, "not-found", "no live session " + id);
              return;
            }
            res.set_content(state_view_json(sessions_ptr->engine(), *state), kJson);
          });

  srv.Delete(R"(/sessions/([0-9a-f]+))",
             [sessions_ptr](const httplib::Request& req, httplib::Response& res) {
               const std::string id = req.matches[1];
               if (!sessions_ptr->remove(id)) {
                 send_error(res, 404, "not-found", "no live session " + id);
                 return;
               }
               res.status = 204;
             });

  srv.Get("/layout", [sessions_ptr](const httplib::Request&, httplib::Response& res) {
    const auto& layout = sessions_ptr->engine().layout();
    json keys = json::array();
    for (Key k : kKeypadGrid) {
      std::string caption;
      if (k == KeypadLayout::kModifierKey) caption = "゛゜小";
      else caption = utf8::encode(layout.cycle(k));
      keys.push_back({{"label", std::string(1, label(k))}, {"caption", caption}});
    }
    res.set_content(json{{"keys", std::move(keys)}}.dump(), kJson);
  });
}

HttpService::~HttpService() { stop(); }

int HttpService::bind(const std::string& host, int port) {
  if (port == 0) return server_->bind_to_any_port(host);
  return server_->bind_to_port(host, port) ? port : -1;
}

bool HttpService::listen() { return server_->listen_after_bind(); }

void HttpService::stop() {
  if (server_) server_->stop();
}

void HttpService::wait_until_ready() const { server_->wait_until_ready(); }

}  // namespace kanakey
