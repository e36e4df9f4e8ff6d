#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "kanakey/engine.hpp"
#include "kanakey/error.hpp"
#include "kanakey/key_trie.hpp"
#include "kanakey/layout.hpp"
#include "kanakey/lexicon.hpp"
#include "kanakey/metrics.hpp"
#include "kanakey/tape.hpp"
#include "kanakey/utf8.hpp"

namespace py = pybind11;
using namespace kanakey;

namespace {

std::shared_ptr<const KeypadLayout> layout_from(const std::optional<std::string>& text) {
  if (!text) return KeypadLayout::packaged();
  return std::make_shared<const KeypadLayout>(KeypadLayout::load(*text, SyllabaryTable::packaged()));
}

struct Index {
  std::shared_ptr<const KeyTrie> trie;
  std::shared_ptr<const KeypadLayout> layout;
};

py::list entries_of(const KeyTrie& trie, const std::vector<EntryId>& ids) {
  py::list out;
  for (auto id : ids) {
    const auto& e = trie.entry(id);
    out.append(py::make_tuple(utf8::encode(e.reading), e.frequency));
  }
  return out;
}

py::tuple fraction(const std::optional<Rational>& r) {
  if (!r) return py::make_tuple(py::none(), py::none());
  return py::make_tuple(r->num(), r->den());
}

py::dict report_dict(const EvalReport& r) {
  py::dict d;
  d["method"] = r.method;
  d["words"] = r.words;
  d["kana"] = r.total_kana;
  d["presses"] = r.total_presses;
  d["kspc"] = fraction(r.kspc);
  d["rank_histogram"] = r.rank_histogram;
  d["no_match"] = r.no_match_count;
  std::vector<std::string> words;
  for (const auto& w : r.no_match_words) words.push_back(utf8::encode(w));
  d["no_match_words"] = words;
  return d;
}

class Session {
 public:
  Session(const Index& index, bool multitap)
      : engine_(std::make_shared<const Engine>(index.trie, index.layout)),
        state_(engine_->new_session(multitap ? Mode::MultiTap : Mode::Disambiguation)) {}

  void send(const std::string& event) { state_ = engine_->apply(state_, parse_event(event)); }
  void digit(const std::string& key) {
    if (key.size() != 1) throw Error(ErrorKind::Parse, "key must be one character");
    state_ = engine_->apply(state_, {EventType::Digit, key_from_label(key[0])});
  }
  void select() { state_ = engine_->press_select(state_); }
  void convert() { state_ = engine_->press_convert(state_); }
  std::string commit() {
    auto r = engine_->press_commit(state_);
    state_ = std::move(r.state);
    return r.emitted;
  }
  void backspace() { state_ = engine_->press_backspace(state_); }
  void advance() { state_ = engine_->apply(state_, {EventType::Advance, std::nullopt}); }
  void toggle_mode() { state_ = engine_->toggle_mode(state_); }

  py::dict view(std::size_t window) const {
    const auto v = engine_->snapshot(state_, window);
    py::dict d;
    d["mode"] = std::string(to_string(v.mode));
    d["stage"] = std::string(to_string(v.stage));
    d["committed"] = v.committed;
    d["pending"] = v.pending;
    d["preview"] = v.preview;
    py::list cands;
    for (const auto& c : v.candidates) {
      cands.append(py::make_tuple(utf8::encode(c.reading), std::string(to_string(c.source)), c.frequency));
    }
    d["candidates"] = cands;
    d["first_index"] = v.first_index;
    d["total_candidates"] = v.total_candidates;
    d["cursor"] = v.cursor;
    d["form_cursor"] = v.form_cursor;
    d["forms"] = v.forms;
    return d;
  }

  std::string digest() const { return kanakey::digest(*engine_, state_); }
  const std::string& committed() const { return state_.committed; }

 private:
  std::shared_ptr<const Engine> engine_;
  SessionState state_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Reduced-keypad kana entry: syllabary, key index, engine sessions and metrics.";

  // Messages start with the error kind, e.g. "no-match: ...".
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("syllabary_counts", [] {
    const auto c = SyllabaryTable::packaged()->counts();
    py::dict d;
    d["total"] = c.total;
    d["base"] = c.base;
    d["small"] = c.small;
    d["dakuten"] = c.dakuten;
    d["handakuten"] = c.handakuten;
    d["undiacritic"] = c.undiacritic();
    d["derived"] = c.derived();
    return d;
  });
  m.def("romaji_to_kana", [](const std::string& text) {
    return utf8::encode(SyllabaryTable::packaged()->romaji_to_kana(text));
  });
  m.def("kana_to_romaji", [](const std::string& reading) {
    return SyllabaryTable::packaged()->kana_to_romaji(utf8::decode(reading));
  });
  m.def("encode", [](const std::string& reading, std::optional<std::string> layout) {
    return to_string(layout_from(layout)->encode(utf8::decode(reading)));
  }, py::arg("reading"), py::arg("layout") = py::none(), "Key digits for a reading.");
  m.def("multitap_expand", [](const std::string& kana, std::optional<std::string> layout) {
    return to_string(layout_from(layout)->multitap_expand(utf8::decode(kana)));
  }, py::arg("kana"), py::arg("layout") = py::none());
  m.def("multitap_cost", [](const std::string& reading, std::optional<std::string> layout) {
    return layout_from(layout)->multitap_cost(utf8::decode(reading));
  }, py::arg("reading"), py::arg("layout") = py::none());

  py::class_<Index>(m, "Index")
      .def_static("compile", [](const std::string& dictionary, std::optional<std::string> layout) {
        auto lay = layout_from(layout);
        auto lex = Lexicon::parse(dictionary, lay->syllabary());
        return Index{std::make_shared<const KeyTrie>(KeyTrie::build(lex, *lay)), lay};
      }, py::arg("dictionary"), py::arg("layout") = py::none())
      .def_static("load", [](const py::bytes& data, std::optional<std::string> layout) {
        return Index{std::make_shared<const KeyTrie>(KeyTrie::deserialize(std::string(data))),
                     layout_from(layout)};
      }, py::arg("data"), py::arg("layout") = py::none())
      .def("to_bytes", [](const Index& i) { return py::bytes(i.trie->serialize()); })
      .def("exact", [](const Index& i, const std::string& seq) {
        return entries_of(*i.trie, i.trie->exact_matches(parse_key_sequence(seq)));
      })
      .def("predict", [](const Index& i, const std::string& seq, std::size_t limit) {
        return entries_of(*i.trie, i.trie->prefix_predictions(parse_key_sequence(seq), limit));
      }, py::arg("seq"), py::arg("limit") = 10)
      .def("evaluate", [](const Index& i, const std::string& corpus_text) {
        const auto corpus = parse_corpus(corpus_text, i.layout->syllabary());
        const auto c = compare_methods(*i.trie, *i.layout, corpus);
        py::dict d;
        d["disambiguation"] = report_dict(c.disambiguation);
        d["multitap"] = report_dict(c.multitap);
        d["romaji"] = report_dict(c.romaji);
        d["report"] = format_comparison(c);
        return d;
      })
      .def("__len__", [](const Index& i) { return i.trie->entries().size(); });

  py::class_<Session>(m, "Session")
      .def(py::init<const Index&, bool>(), py::arg("index"), py::arg("multitap") = false)
      .def("send", &Session::send, "Apply one tape event such as 'D 1' or 'SEL'.")
      .def("digit", &Session::digit)
      .def("select", &Session::select)
      .def("convert", &Session::convert)
      .def("commit", &Session::commit)
      .def("backspace", &Session::backspace)
      .def("advance", &Session::advance)
      .def("toggle_mode", &Session::toggle_mode)
      .def("view", &Session::view, py::arg("window") = 10)
      .def("digest", &Session::digest)
      .def_property_readonly("committed", &Session::committed);
}
