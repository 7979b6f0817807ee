#include "tdsolve/problem.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

#include "tdsolve/base_cores.hpp"
#include "tdsolve/combinators.hpp"

namespace tdsolve {

namespace {

struct Token {
  enum class Type { Word, Int, LParen, RParen, Comma, Semi, End };
  Type type;
  std::string text;
  int value = 0;
  std::size_t pos = 0;  // 1-based column
};

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw std::runtime_error("problem parse error at column " +
                           std::to_string(pos) + ": " + what);
}

std::vector<Token> lex(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t pos = i + 1;
    if (c == '(') {
      out.push_back({Token::Type::LParen, "(", 0, pos});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::Type::RParen, ")", 0, pos});
      ++i;
    } else if (c == ',') {
      out.push_back({Token::Type::Comma, ",", 0, pos});
      ++i;
    } else if (c == ';') {
      out.push_back({Token::Type::Semi, ";", 0, pos});
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[j]))) {
        ++j;
      }
      int value = 0;
      auto res = std::from_chars(text.data() + i, text.data() + j, value);
      if (res.ec != std::errc()) fail(pos, "integer out of range");
      out.push_back({Token::Type::Int, text.substr(i, j - i), value, pos});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) ||
              text[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Type::Word, text.substr(i, j - i), 0, pos});
      i = j;
    } else {
      fail(pos, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::Type::End, "", 0, text.size() + 1});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  ProblemExpr parse() {
    ProblemExpr e = expr();
    if (peek().type != Token::Type::End) {
      fail(peek().pos, "unexpected trailing input");
    }
    return e;
  }

 private:
  const Token& peek() const { return tokens_[at_]; }
  Token take() { return tokens_[at_++]; }

  void expect(Token::Type t, const char* what) {
    if (peek().type != t) fail(peek().pos, std::string("expected ") + what);
    ++at_;
  }

  int integer() {
    if (peek().type != Token::Type::Int) {
      fail(peek().pos, "expected an integer");
    }
    return take().value;
  }

  std::vector<ProblemExpr> arg_list() {
    std::vector<ProblemExpr> args;
    args.push_back(expr());
    while (peek().type == Token::Type::Comma) {
      ++at_;
      args.push_back(expr());
    }
    return args;
  }

  ProblemExpr expr() {
    if (peek().type != Token::Type::Word) {
      fail(peek().pos, "expected a problem name");
    }
    Token word = take();
    const std::string& w = word.text;
    if (w == "any") return {ProblemExpr::Op::Any, 0, {}};
    if (w == "edgeless") return {ProblemExpr::Op::Edgeless, 0, {}};
    if (w == "forest") return {ProblemExpr::Op::Forest, 0, {}};
    if (w == "tree") return {ProblemExpr::Op::Tree, 0, {}};
    if (w == "atmost") {
      expect(Token::Type::LParen, "'('");
      int p = integer();
      expect(Token::Type::RParen, "')'");
      return {ProblemExpr::Op::AtMost, p, {}};
    }
    if (w == "and" || w == "or" || w == "vertpart" || w == "edgepart") {
      expect(Token::Type::LParen, "'('");
      std::vector<ProblemExpr> args = arg_list();
      expect(Token::Type::RParen, "')'");
      if ((w == "vertpart" || w == "edgepart") && args.size() < 2) {
        fail(word.pos, w + " needs at least two parts");
      }
      ProblemExpr::Op op = w == "and"        ? ProblemExpr::Op::And
                           : w == "or"       ? ProblemExpr::Op::Or
                           : w == "vertpart" ? ProblemExpr::Op::VertPart
                                             : ProblemExpr::Op::EdgePart;
      return {op, 0, std::move(args)};
    }
    if (w == "graphpart") {
      expect(Token::Type::LParen, "'('");
      int p = integer();
      expect(Token::Type::Semi, "';'");
      std::vector<ProblemExpr> args = arg_list();
      expect(Token::Type::RParen, "')'");
      if (args.size() < 2) fail(word.pos, "graphpart needs at least two parts");
      return {ProblemExpr::Op::GraphPart, p, std::move(args)};
    }
    fail(word.pos, "unknown problem name '" + w + "'");
  }

  std::vector<Token> tokens_;
  std::size_t at_ = 0;
};

}  // namespace

ProblemExpr parse_problem(const std::string& text) {
  return Parser(lex(text)).parse();
}

std::string to_string(const ProblemExpr& e) {
  auto list = [](const std::vector<ProblemExpr>& args) {
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i) out += ",";
      out += to_string(args[i]);
    }
    return out;
  };
  switch (e.op) {
    case ProblemExpr::Op::Any:
      return "any";
    case ProblemExpr::Op::Edgeless:
      return "edgeless";
    case ProblemExpr::Op::AtMost:
      return "atmost(" + std::to_string(e.number) + ")";
    case ProblemExpr::Op::Forest:
      return "forest";
    case ProblemExpr::Op::Tree:
      return "tree";
    case ProblemExpr::Op::And:
      return "and(" + list(e.args) + ")";
    case ProblemExpr::Op::Or:
      return "or(" + list(e.args) + ")";
    case ProblemExpr::Op::VertPart:
      return "vertpart(" + list(e.args) + ")";
    case ProblemExpr::Op::EdgePart:
      return "edgepart(" + list(e.args) + ")";
    case ProblemExpr::Op::GraphPart:
      return "graphpart(" + std::to_string(e.number) + ";" + list(e.args) +
             ")";
  }
  return "";
}

std::unique_ptr<DynamicCore> build_core(const ProblemExpr& e) {
  auto build_args = [](const std::vector<ProblemExpr>& args) {
    std::vector<std::unique_ptr<DynamicCore>> cores;
    cores.reserve(args.size());
    for (const auto& a : args) cores.push_back(build_core(a));
    return cores;
  };
  switch (e.op) {
    case ProblemExpr::Op::Any:
      return any_core();
    case ProblemExpr::Op::Edgeless:
      return edgeless_core();
    case ProblemExpr::Op::AtMost:
      return bounded_size_core(e.number);
    case ProblemExpr::Op::Forest:
      return forest_core();
    case ProblemExpr::Op::Tree:
      return tree_core();
    case ProblemExpr::Op::And:
      return intersection_core(build_args(e.args));
    case ProblemExpr::Op::Or:
      return union_core(build_args(e.args));
    case ProblemExpr::Op::VertPart:
      return vertpart_core(build_args(e.args));
    case ProblemExpr::Op::EdgePart:
      return edgepart_core(build_args(e.args));
    case ProblemExpr::Op::GraphPart:
      return graphpart_core(e.number, build_args(e.args));
  }
  throw std::logic_error("build_core: bad op");
}

namespace {

int preset_number(const std::string& name, std::size_t eq) {
  int value = 0;
  const char* first = name.data() + eq + 1;
  const char* last = name.data() + name.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last || value < 0) {
    throw std::runtime_error("preset '" + name.substr(0, eq + 1) +
                             "': expects a non-negative integer");
  }
  return value;
}

}  // namespace

std::optional<ProblemExpr> preset_problem(const std::string& name) {
  if (name == "3col") {
    ProblemExpr part{ProblemExpr::Op::Edgeless, 0, {}};
    return ProblemExpr{ProblemExpr::Op::VertPart, 0, {part, part, part}};
  }
  if (name == "two-trees") {
    ProblemExpr part{ProblemExpr::Op::Tree, 0, {}};
    return ProblemExpr{ProblemExpr::Op::VertPart, 0, {part, part}};
  }
  if (name.rfind("vc=", 0) == 0) {
    int k = preset_number(name, 2);
    ProblemExpr cover{ProblemExpr::Op::AtMost, k, {}};
    ProblemExpr rest{ProblemExpr::Op::Edgeless, 0, {}};
    return ProblemExpr{ProblemExpr::Op::VertPart, 0, {cover, rest}};
  }
  if (name.rfind("arb=", 0) == 0) {
    int l = preset_number(name, 3);
    if (l < 1) {
      throw std::runtime_error("preset 'arb=': expects an integer >= 1");
    }
    ProblemExpr part{ProblemExpr::Op::Forest, 0, {}};
    if (l == 1) return part;
    return ProblemExpr{ProblemExpr::Op::EdgePart, 0,
                       std::vector<ProblemExpr>(l, part)};
  }
  return std::nullopt;
}

}  // namespace tdsolve
