// kanakey command line: compile dictionaries, replay event tapes, evaluate
// keystroke costs and serve sessions over HTTP.

#include <CLI11.hpp>

#include <csignal>
#include <iostream>

#include "kanakey/engine.hpp"
#include "kanakey/error.hpp"
#include "kanakey/io.hpp"
#include "kanakey/key_trie.hpp"
#include "kanakey/lexicon.hpp"
#include "kanakey/metrics.hpp"
#include "kanakey/service.hpp"
#include "kanakey/tape.hpp"

namespace {

using namespace kanakey;

HttpService* g_service = nullptr;

void handle_signal(int) {
  if (g_service != nullptr) g_service->stop();
}

int run_compile(const std::string& dict, const std::string& layout_path, const std::string& out) {
  const auto layout = load_layout_file(layout_path);
  const auto lexicon = Lexicon::parse(read_file(dict), layout->syllabary());
  const auto trie = KeyTrie::build(lexicon, *layout);
  const auto bytes = trie.serialize();
  write_file(out, bytes);
  std::cout << "entries: " << trie.entries().size() << "\n"
            << "bytes: " << bytes.size() << "\n";
  return 0;
}

int run_simulate(const std::string& index, const std::string& tape_path,
                 const std::string& layout_path, bool multitap) {
  auto engine = Engine(load_index_file(index), load_layout_file(layout_path));
  const auto tape = parse_tape(read_file(tape_path));
  std::cout << simulate(engine, tape, multitap ? Mode::MultiTap : Mode::Disambiguation);
  return 0;
}

int run_eval(const std::string& index, const std::string& corpus_path,
             const std::string& layout_path) {
  const auto trie = load_index_file(index);
  const auto layout = load_layout_file(layout_path);
  if (trie->layout_hash() != layout->content_hash()) {
    throw Error(ErrorKind::LayoutMismatch, "index was compiled against a different layout");
  }
  const auto corpus = parse_corpus(read_file(corpus_path), layout->syllabary());
  std::cout << format_comparison(compare_methods(*trie, *layout, corpus));
  return 0;
}

int run_serve(const std::string& index, const std::string& bind, const std::string& layout_path,
              int idle_seconds) {
  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) throw Error(ErrorKind::Parse, "--bind expects HOST:PORT");
  const auto host = bind.substr(0, colon);
  const int port = std::stoi(bind.substr(colon + 1));

  auto engine = std::make_shared<const Engine>(load_index_file(index), load_layout_file(layout_path));
  ServiceOptions options;
  options.idle_timeout = std::chrono::seconds(idle_seconds);
  auto sessions = std::make_shared<SessionManager>(engine, options);
  HttpService service(sessions);
  const int bound = service.bind(host, port);
  if (bound < 0) throw Error(ErrorKind::Io, "cannot bind " + bind);
  std::cerr << "listening on " << host << ":" << bound << std::endl;
  g_service = &service;
  std::signal(SIGINT, handle_signal);
  std::signal(SIGTERM, handle_signal);
  service.listen();
  g_service = nullptr;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced-keyboard kana entry: dictionary compiler, simulator and evaluator"};
  app.require_subcommand(1);

  std::string dict, layout, out, index, tape, corpus, bind;
  bool multitap = false;
  int idle_seconds = 15 * 60;

  auto* compile = app.add_subcommand("compile", "Compile a dictionary into a key index");
  compile->add_option("--dict", dict, "Dictionary file")->required();
  compile->add_option("--layout", layout, "Layout file (default: packaged layout)");
  compile->add_option("--out", out, "Output index file")->required();

  auto* sim = app.add_subcommand("simulate", "Replay an event tape and print state digests");
  sim->add_option("--index", index, "Compiled index")->required();
  sim->add_option("--tape", tape, "Event tape")->required();
  sim->add_option("--layout", layout, "Layout file (default: packaged layout)");
  sim->add_flag("--multitap", multitap, "Start in multi-tap mode");

  auto* eval = app.add_subcommand("eval", "Compare keystroke costs over a corpus");
  eval->add_option("--index", index, "Compiled index")->required();
  eval->add_option("--corpus", corpus, "Corpus file")->required();
  eval->add_option("--layout", layout, "Layout file (default: packaged layout)");

  auto* serve = app.add_subcommand("serve", "Serve input sessions over HTTP");
  serve->add_option("--index", index, "Compiled index")->required();
  serve->add_option("--bind", bind, "HOST:PORT")->required();
  serve->add_option("--layout", layout, "Layout file (default: packaged layout)");
  serve->add_option("--idle-timeout", idle_seconds, "Session idle expiry in seconds")
      ->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*compile) return run_compile(dict, layout, out);
    if (*sim) return run_simulate(index, tape, layout, multitap);
    if (*eval) return run_eval(index, corpus, layout);
    if (*serve) return run_serve(index, bind, layout, idle_seconds);
  } catch (const kanakey::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
