#include "hemb/parser.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hemb {

ParseError::ParseError(const std::string& msg, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

namespace {

struct Token {
  std::string text;
  std::size_t line = 0;
  std::size_t column = 0;
};

std::vector<Token> tokenize_module(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n && i < text.size(); ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (text.substr(i, 3) == "***" || text.substr(i, 3) == "---") {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '[' || c == ']' || c == ',') {
      out.push_back({std::string(1, c), line, col});
      advance(1);
      continue;
    }
    Token t{{}, line, col};
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '[' && text[i] != ']' && text[i] != ',') {
      t.text.push_back(text[i]);
      advance(1);
    }
    if (t.text.size() > 1 && t.text.back() == '.') {
      t.text.pop_back();
      out.push_back(t);
      out.push_back({".", line, col - 1});
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::string strip_mixfix(const std::string& name) {
  if (name.find_first_not_of('_') == std::string::npos) return name;
  const auto b = name.find_first_not_of('_');
  const auto e = name.find_last_not_of('_');
  return name.substr(b, e - b + 1);
}

class ModuleParser {
 public:
  explicit ModuleParser(std::string_view text) : toks_(tokenize_module(text)) {}

  Signature parse() {
    expect("fmod");
    sig_.name = next("module name").text;
    expect("is");
    while (true) {
      const Token& t = peek("declaration or endfm");
      if (t.text == "endfm") {
        ++pos_;
        break;
      }
      if (t.text == "sort" || t.text == "sorts") {
        ++pos_;
        parse_sorts();
      } else if (t.text == "subsort" || t.text == "subsorts") {
        ++pos_;
        parse_subsorts();
      } else if (t.text == "op" || t.text == "ops") {
        ++pos_;
        parse_op(t.text == "ops");
      } else {
        fail("unexpected '" + t.text + "'", t);
      }
    }
    if (pos_ != toks_.size()) fail("trailing input after endfm", toks_[pos_]);
    try {
      sig_.poset().close();
    } catch (const SignatureError& e) {
      fail(e.what(), toks_.back());
    }
    for (const auto& [decl, tok] : pending_) {
      try {
        sig_.add_op(decl);
      } catch (const SignatureError& e) {
        fail(e.what(), tok);
      }
    }
    return std::move(sig_);
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const Token& t) {
    throw ParseError(msg, t.line, t.column);
  }

  const Token& peek(const char* what) {
    if (pos_ >= toks_.size()) {
      Token end{"", toks_.empty() ? 1 : toks_.back().line, toks_.empty() ? 1 : toks_.back().column};
      fail(std::string("unexpected end of input, expected ") + what, end);
    }
    return toks_[pos_];
  }
  const Token& next(const char* what) {
    const Token& t = peek(what);
    ++pos_;
    return t;
  }
  void expect(const std::string& s) {
    const Token& t = next(s.c_str());
    if (t.text != s) fail("expected '" + s + "', got '" + t.text + "'", t);
  }

  void parse_sorts() {
    std::size_t n = 0;
    while (peek("sort name or '.'").text != ".") {
      const Token& t = next("sort name");
      check_sort_name(t);
      sig_.poset().add_sort(t.text);
      ++n;
    }
    if (n == 0) fail("empty sort declaration", toks_[pos_]);
    ++pos_;
  }

  void parse_subsorts() {
    std::vector<std::vector<Token>> chain(1);
    while (peek("sort name, '<' or '.'").text != ".") {
      const Token& t = next("sort name");
      if (t.text == "<") {
        if (chain.back().empty()) fail("missing sort before '<'", t);
        chain.emplace_back();
        continue;
      }
      if (!sig_.poset().contains(t.text)) fail("unknown sort " + t.text, t);
      chain.back().push_back(t);
    }
    const Token& dot = next(".");
    if (chain.size() < 2 || chain.back().empty()) fail("malformed subsort declaration", dot);
    for (std::size_t k = 0; k + 1 < chain.size(); ++k)
      for (const auto& lo : chain[k])
        for (const auto& hi : chain[k + 1]) {
          try {
            sig_.poset().add_subsort(lo.text, hi.text);
          } catch (const SignatureError& e) {
            fail(e.what(), lo);
          }
        }
  }

  void parse_op(bool many) {
    std::vector<Token> names;
    while (peek("operator name").text != ":") {
      names.push_back(next("operator name"));
      if (!many) break;
    }
    if (names.empty()) fail("missing operator name", peek("operator name"));
    expect(":");
    OperatorDecl decl;
    while (peek("sort or '->'").text != "->") {
      const Token& s = next("sort");
      if (!sig_.poset().contains(s.text)) fail("unknown sort " + s.text, s);
      decl.arg_sorts.push_back(s.text);
    }
    ++pos_;
    const Token& res = next("result sort");
    if (!sig_.poset().contains(res.text)) fail("unknown sort " + res.text, res);
    decl.result_sort = res.text;
    if (peek("'[' or '.'").text == "[") {
      ++pos_;
      while (peek("attribute or ']'").text != "]") {
        const Token& a = next("attribute");
        if (a.text == ",") continue;
        if (a.text == "assoc") decl.axioms.assoc = true;
        else if (a.text == "comm") decl.axioms.comm = true;
        else fail("unsupported attribute '" + a.text + "'", a);
      }
      ++pos_;
    }
    expect(".");
    for (const auto& n : names) {
      OperatorDecl d = decl;
      d.name = strip_mixfix(n.text);
      if (d.name == kSharp) fail("operator name '#' is reserved", n);
      if (seen_.count(d.name)) fail("duplicate operator " + d.name, n);
      if ((d.axioms.assoc || d.axioms.comm) && d.arity() != 2)
        fail("assoc/comm operator " + d.name + " must be binary", n);
      seen_.insert(d.name);
      pending_.emplace_back(std::move(d), n);
    }
  }

  void check_sort_name(const Token& t) {
    if (t.text.rfind("Top-", 0) == 0) fail("sort names starting with 'Top-' are reserved", t);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature sig_;
  std::set<std::string> seen_;
  std::vector<std::pair<OperatorDecl, Token>> pending_;
};

class TermParser {
 public:
  TermParser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Term parse() {
    skip_ws();
    Term t = parse_term();
    skip_ws();
    if (i_ != text_.size()) fail("trailing input");
    return t;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) { fail_at(msg, i_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) {
    std::size_t line = 1, col = 1;
    for (std::size_t k = 0; k < at && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  }

  static bool name_char(char c) {
    return !std::isspace(static_cast<unsigned char>(c)) && c != '(' && c != ')' && c != ',' &&
           c != ':';
  }

  std::string read_name() {
    const std::size_t b = i_;
    while (i_ < text_.size() && name_char(text_[i_])) ++i_;
    if (b == i_) fail("expected a name");
    return std::string(text_.substr(b, i_ - b));
  }

  Term parse_term() {
    const std::size_t start = i_;
    std::string name = read_name();
    skip_ws();
    if (i_ < text_.size() && text_[i_] == ':') {
      ++i_;
      skip_ws();
      const std::size_t sort_at = i_;
      std::string sort = read_name();
      if (!sig_.poset().contains(sort)) fail_at("unknown sort " + sort, sort_at);
      return Term::var(std::move(name), std::move(sort));
    }
    const OperatorDecl* decl = sig_.find(name);
    if (!decl) fail_at("unknown operator " + name, start);
    std::vector<Term> args;
    std::vector<std::size_t> arg_at;
    if (i_ < text_.size() && text_[i_] == '(') {
      ++i_;
      while (true) {
        skip_ws();
        arg_at.push_back(i_);
        args.push_back(parse_term());
        skip_ws();
        if (i_ < text_.size() && text_[i_] == ',') {
          ++i_;
          continue;
        }
        if (i_ < text_.size() && text_[i_] == ')') {
          ++i_;
          break;
        }
        fail("expected ',' or ')'");
      }
    }
    if (args.size() != decl->arity())
      fail_at("operator " + name + " expects " + std::to_string(decl->arity()) +
                  " arguments, got " + std::to_string(args.size()),
              start);
    for (std::size_t k = 0; k < args.size(); ++k) {
      const std::string s = sort_of(args[k], sig_);
      if (!sig_.poset().leq(s, decl->arg_sorts[k]))
        fail_at("sort error: argument " + std::to_string(k + 1) + " of " + name + " has sort " +
                    s + ", expected " + decl->arg_sorts[k],
                arg_at[k]);
    }
    return Term::app(std::move(name), std::move(args));
  }

  std::string_view text_;
  const Signature& sig_;
  std::size_t i_ = 0;
};

}  // namespace

Signature parse_signature(std::string_view text) { return ModuleParser(text).parse(); }

Signature load_signature(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_signature(ss.str());
}

Term parse_term(std::string_view text, const Signature& sig) {
  return TermParser(text, sig).parse();
}

}  // namespace hemb
