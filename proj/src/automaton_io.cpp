#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "wa/automaton.hpp"

namespace wa {
namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line, std::size_t offset) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back(Token{std::string(line.substr(start, i - start)), offset + start + 1});
  }
  return out;
}

class Parser {
 public:
  WeightedAutomaton run(std::string_view text) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      ++line_no;
      handle_line(line_no, line);
      if (end == text.size()) break;
      pos = end + 1;
    }
    if (!automaton_) {
      std::size_t col = 1;
      if (!tag_) fail(line_no, col, "missing 'semiring:' line");
      if (!states_) fail(line_no, col, "missing 'states:' line");
      fail(line_no, col, "missing 'alphabet:' line");
    }
    return std::move(*automaton_);
  }

 private:
  [[noreturn]] static void fail(std::size_t line, std::size_t column, const std::string& what) {
    throw ParseError(line, column, what);
  }

  void handle_line(std::size_t line_no, std::string_view line) {
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') return;
    std::size_t colon = line.find(':', first);
    if (colon == std::string_view::npos) fail(line_no, first + 1, "expected '<key>:'");
    std::string key(line.substr(first, colon - first));
    while (!key.empty() && std::isspace(static_cast<unsigned char>(key.back()))) key.pop_back();
    auto args = tokenize(line.substr(colon + 1), colon + 1);
    const std::size_t after = colon + 2;

    if (key == "semiring") {
      if (tag_) fail(line_no, first + 1, "duplicate 'semiring:' line");
      if (args.size() != 1) fail(line_no, after, "expected exactly one semiring name");
      auto tag = parse_semiring(args[0].text);
      if (!tag || is_boolean(*tag))
        fail(line_no, args[0].column, "unknown semiring '" + args[0].text + "' (min-plus, max-plus, plus-times)");
      tag_ = *tag;
    } else if (key == "states") {
      if (states_) fail(line_no, first + 1, "duplicate 'states:' line");
      if (args.empty()) fail(line_no, after, "at least one state is required");
      std::vector<std::string> names;
      std::set<std::string> seen;
      for (const auto& t : args) {
        if (!seen.insert(t.text).second) fail(line_no, t.column, "duplicate state '" + t.text + "'");
        names.push_back(t.text);
      }
      states_ = std::move(names);
      maybe_create(line_no, first);
    } else if (key == "alphabet") {
      if (alphabet_) fail(line_no, first + 1, "duplicate 'alphabet:' line");
      std::string letters;
      for (const auto& t : args) {
        if (t.text.size() != 1) fail(line_no, t.column, "letters must be single characters");
        if (letters.find(t.text[0]) != std::string::npos) fail(line_no, t.column, "duplicate letter '" + t.text + "'");
        letters += t.text;
      }
      alphabet_ = std::move(letters);
      maybe_create(line_no, first);
    } else if (key == "init" || key == "final") {
      require_header(line_no, first);
      if (args.size() != 2) fail(line_no, after, "expected '<state> <weight>'");
      StateId q = state(line_no, args[0]);
      Weight w = weight(line_no, args[1]);
      auto& seen = key == "init" ? seen_init_ : seen_final_;
      if (!seen.insert(q).second) fail(line_no, first + 1, "duplicate '" + key + "' entry for '" + args[0].text + "'");
      if (key == "init")
        automaton_->set_initial(q, w);
      else
        automaton_->set_final(q, w);
    } else if (key == "trans") {
      require_header(line_no, first);
      if (args.size() != 4) fail(line_no, after, "expected '<src> <letter> <weight> <dst>'");
      StateId p = state(line_no, args[0]);
      if (args[1].text.size() != 1 || !automaton_->letter_index(args[1].text[0]))
        fail(line_no, args[1].column, "unknown letter '" + args[1].text + "'");
      Weight w = weight(line_no, args[2]);
      StateId q = state(line_no, args[3]);
      if (!seen_trans_.insert({p, args[1].text[0], q}).second)
        fail(line_no, first + 1, "duplicate transition " + args[0].text + " " + args[1].text + " " + args[3].text);
      automaton_->set_transition(p, args[1].text[0], w, q);
    } else {
      fail(line_no, first + 1, "unknown key '" + key + "'");
    }
  }

  void maybe_create(std::size_t line_no, std::size_t first) {
    if (!states_ || !alphabet_) return;
    if (!tag_) fail(line_no, first + 1, "'semiring:' must precede 'states:' and 'alphabet:'");
    automaton_.emplace(*tag_, *states_, *alphabet_);
  }

  void require_header(std::size_t line_no, std::size_t first) const {
    if (!automaton_) fail(line_no, first + 1, "'semiring:', 'states:' and 'alphabet:' must come first");
  }

  StateId state(std::size_t line_no, const Token& t) const {
    auto id = automaton_->state_index(t.text);
    if (!id) fail(line_no, t.column, "unknown state '" + t.text + "'");
    return *id;
  }

  Weight weight(std::size_t line_no, const Token& t) const {
    Weight w = Weight::zero(*tag_);
    try {
      w = parse_weight(*tag_, t.text);
    } catch (const Error& e) {
      fail(line_no, t.column, e.what());
    }
    if (w.is_zero()) fail(line_no, t.column, "weight '" + t.text + "' is the semiring zero; omit the entry instead");
    return w;
  }

  std::optional<SemiringTag> tag_;
  std::optional<std::vector<std::string>> states_;
  std::optional<std::string> alphabet_;
  std::optional<WeightedAutomaton> automaton_;
  std::set<StateId> seen_init_, seen_final_;
  std::set<std::tuple<StateId, char, StateId>> seen_trans_;
};

}  // namespace

WeightedAutomaton parse_automaton(std::string_view text) { return Parser{}.run(text); }

std::string to_text(const WeightedAutomaton& a) {
  std::ostringstream out;
  out << "semiring: " << to_string(a.tag()) << "\n";
  out << "states:";
  for (const auto& s : a.states()) out << ' ' << s;
  out << "\nalphabet:";
  for (char c : a.alphabet()) out << ' ' << c;
  out << "\n";
  for (StateId q = 0; q < a.size(); ++q)
    if (!a.initial()[q].is_zero()) out << "init: " << a.states()[q] << ' ' << a.initial()[q].to_string() << "\n";
  for (StateId q = 0; q < a.size(); ++q)
    if (!a.final_weights()[q].is_zero())
      out << "final: " << a.states()[q] << ' ' << a.final_weights()[q].to_string() << "\n";
  for (StateId p = 0; p < a.size(); ++p)
    for (char c : a.alphabet())
      for (StateId q = 0; q < a.size(); ++q) {
        const Weight& w = a.matrix(c).at(p, q);
        if (!w.is_zero())
          out << "trans: " << a.states()[p] << ' ' << c << ' ' << w.to_string() << ' ' << a.states()[q] << "\n";
      }
  return out.str();
}

WeightedAutomaton load_automaton(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ContractError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_automaton(buf.str());
}

}  // namespace wa
