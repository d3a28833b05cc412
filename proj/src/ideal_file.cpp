#include "cotan/ideal_file.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace cotan {

namespace {

enum class TokKind { kIdent, kInt, kSymbol, kEnd };

struct Token {
  TokKind kind = TokKind::kEnd;
  std::string text;
  int line = 0, col = 0;
};

[[noreturn]] void fail(const Token& tok, const std::string& message) {
  std::ostringstream os;
  os << "line " << tok.line << ", col " << tok.col << ": " << message;
  throw std::invalid_argument(os.str());
}

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    Token tok{TokKind::kSymbol, "", line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      tok.kind = TokKind::kIdent;
      tok.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t j = i;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
      tok.kind = TokKind::kInt;
      tok.text = text.substr(i, j - i);
      advance(j - i);
    } else if (std::string("^*+-,;/").find(c) != std::string::npos) {
      tok.text = std::string(1, c);
      advance(1);
    } else {
      fail(tok, std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(tok));
  }
  out.push_back({TokKind::kEnd, "", line, col});
  return out;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : toks_(tokenize(text)) {}

  IdealPresentation run() {
    IdealPresentation ideal;
    std::vector<std::string> gen_texts;
    while (peek().kind != TokKind::kEnd) {
      const Token& head = next();
      if (head.kind != TokKind::kIdent) fail(head, "expected a statement keyword");
      if (head.text == "ring") {
        if (ring_declared_) fail(head, "duplicate ring statement");
        parse_ring();
      } else if (head.text == "weights") {
        parse_weights(head);
      } else if (head.text == "gens") {
        if (!ring_declared_) fail(head, "gens before the ring statement");
        if (gens_seen_) fail(head, "duplicate gens statement");
        gens_seen_ = true;
        parse_gens(ideal);
      } else if (head.text == "flag") {
        parse_flag(ideal);
      } else {
        fail(head, "unknown statement '" + head.text + "'");
      }
      if (peek().kind == TokKind::kSymbol && peek().text == ";") next();
    }
    if (!ring_declared_) fail(peek(), "missing ring statement");
    if (weights_.empty()) weights_.assign(names_.size(), 1);
    ideal.ring = make_ring(names_, weights_);
    // re-parse the recorded expressions now that the ring exists
    for (const auto& [start, end] : gen_spans_) ideal.gens.push_back(parse_poly(ideal.ring, start, end));
    return ideal;
  }

 private:
  const Token& peek(int ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
  bool at_symbol(const char* s) const {
    return peek().kind == TokKind::kSymbol && peek().text == s;
  }
  bool statement_end() const {
    return peek().kind == TokKind::kEnd || at_symbol(";");
  }

  void parse_ring() {
    while (!statement_end()) {
      const Token& tok = next();
      if (tok.kind != TokKind::kIdent) fail(tok, "expected a variable name");
      names_.push_back(tok.text);
    }
    if (names_.empty()) fail(peek(), "ring statement declares no variables");
    ring_declared_ = true;
  }

  void parse_weights(const Token& head) {
    if (!ring_declared_) fail(head, "weights before the ring statement");
    if (!weights_.empty()) fail(head, "duplicate weights statement");
    while (!statement_end()) {
      const Token& tok = next();
      if (tok.kind != TokKind::kInt) fail(tok, "expected an integer weight");
      if (tok.text.size() > 4) fail(tok, "weight out of range");
      weights_.push_back(std::stoi(tok.text));
    }
    if (weights_.size() != names_.size())
      fail(head, "weights count differs from the variable count");
  }

  void parse_gens(IdealPresentation&) {
    if (statement_end()) return;  // empty generator list: the zero ideal
    while (true) {
      size_t start = pos_;
      while (!statement_end() && !at_symbol(",")) next();
      if (pos_ == start) fail(peek(), "empty generator expression");
      gen_spans_.emplace_back(start, pos_);
      if (at_symbol(",")) {
        next();
        continue;
      }
      break;
    }
  }

  void parse_flag(IdealPresentation& ideal) {
    const Token& name = next();
    if (name.kind != TokKind::kIdent) fail(name, "expected a flag name");
    const Token& value = next();
    if (value.kind != TokKind::kIdent || (value.text != "true" && value.text != "false"))
      fail(value, "expected true or false");
    ideal.flags[name.text] = value.text == "true";
  }

  // expression sub-parser over the token span [start, end)
  Poly parse_poly(const RingPtr& ring, size_t start, size_t end) {
    size_t p = start;
    auto cur = [&]() -> const Token& { return toks_[std::min(p, end)]; };
    auto done = [&]() { return p >= end; };
    auto expect_int = [&]() -> Int {
      if (done() || cur().kind != TokKind::kInt) fail(cur(), "expected an integer");
      Int v(cur().text);
      ++p;
      return v;
    };
    auto parse_factor = [&]() -> Poly {
      if (done()) fail(cur(), "expected a factor");
      const Token& tok = cur();
      if (tok.kind == TokKind::kInt) {
        Int num = expect_int();
        Int den(1);
        if (!done() && cur().kind == TokKind::kSymbol && cur().text == "/") {
          ++p;
          den = expect_int();
          if (den == 0) fail(tok, "zero denominator");
        }
        return Poly(ring, Rat(num) / Rat(den));
      }
      if (tok.kind == TokKind::kIdent) {
        int var = -1;
        for (int v = 0; v < ring->nvars(); ++v)
          if (ring->var_names[v] == tok.text) var = v;
        if (var < 0) fail(tok, "unknown variable '" + tok.text + "'");
        ++p;
        int exp = 1;
        if (!done() && cur().kind == TokKind::kSymbol && cur().text == "^") {
          ++p;
          Int e = expect_int();
          if (e < 1 || e > 1000) fail(tok, "exponent out of range");
          exp = static_cast<int>(e.get_si());
        }
        return Poly::variable(ring, var, exp);
      }
      fail(tok, "expected a coefficient or a variable");
    };
    auto parse_term = [&]() -> Poly {
      Poly term = parse_factor();
      while (!done() && cur().kind == TokKind::kSymbol && cur().text == "*") {
        ++p;
        term = term * parse_factor();
      }
      return term;
    };
    Poly total(ring);
    bool first = true;
    while (!done()) {
      Rat sign(1);
      if (cur().kind == TokKind::kSymbol && (cur().text == "+" || cur().text == "-")) {
        if (cur().text == "-") sign = -1;
        ++p;
      } else if (!first) {
        fail(cur(), "expected '+' or '-' between terms");
      }
      total = total + parse_term() * sign;
      first = false;
    }
    if (first) fail(cur(), "empty expression");
    return total;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
  bool ring_declared_ = false;
  bool gens_seen_ = false;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  std::vector<std::pair<size_t, size_t>> gen_spans_;
};

}  // namespace

IdealPresentation parse_ideal_text(const std::string& text) { return Parser(text).run(); }

IdealPresentation parse_ideal_file(const std::string& path) {
  return parse_ideal_text(read_file_bytes(path));
}

std::vector<Rat> parse_sequence_text(const std::string& text) {
  std::vector<Rat> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
    std::istringstream ls(line);
    std::string word;
    if (!(ls >> word)) continue;
    std::string extra;
    if (ls >> extra) {
      std::ostringstream os;
      os << "line " << lineno << ": expected one value per line";
      throw std::invalid_argument(os.str());
    }
    try {
      Rat value(word);
      value.canonicalize();
      out.push_back(value);
    } catch (const std::invalid_argument&) {
      std::ostringstream os;
      os << "line " << lineno << ": '" << word << "' is not a rational";
      throw std::invalid_argument(os.str());
    }
  }
  return out;
}

std::vector<Rat> parse_sequence_file(const std::string& path) {
  return parse_sequence_text(read_file_bytes(path));
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace cotan
