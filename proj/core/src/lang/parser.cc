// Copyright 2026 The RepairForge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "repairforge/lang/parser.h"

#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <utility>

#include "repairforge/errors.h"

namespace repairforge {
namespace {

enum class Tok {
  kEnd,
  kIdent,
  kInt,
  kLParen,
  kRParen,
  kLBrace,
  kRBrace,
  kLBracket,
  kRBracket,
  kComma,
  kSemicolon,
  kAssign,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kPercent,
  kLt,
  kLe,
  kGt,
  kGe,
  kEq,
  kNe,
  kAndAnd,
  kOrOr,
  kBang,
};

struct Token {
  Tok kind = Tok::kEnd;
  std::string text;
  int line = 1;
  int column = 1;
};

class Lexer {
 public:
  Lexer(std::string_view src, const std::string& name)
      : src_(src), name_(name) {}

  std::vector<Token> Tokenize() {
    std::vector<Token> out;
    while (true) {
      SkipTrivia();
      Token t;
      t.line = line_;
      t.column = column_;
      if (pos_ >= src_.size()) {
        out.push_back(t);
        return out;
      }
      char c = src_[pos_];
      if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                src_[pos_] == '_')) {
          Advance();
        }
        t.kind = Tok::kIdent;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
          Advance();
        }
        if (pos_ < src_.size() &&
            (std::isalpha(static_cast<unsigned char>(src_[pos_])) ||
             src_[pos_] == '_')) {
          throw SyntaxError(name_, line_, column_,
                            "identifier cannot start with a digit");
        }
        t.kind = Tok::kInt;
        t.text = std::string(src_.substr(start, pos_ - start));
      } else {
        t.kind = Punct(t);
      }
      out.push_back(std::move(t));
    }
  }

 private:
  void Advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  void SkipTrivia() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        Advance();
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/') {
        while (pos_ < src_.size() && src_[pos_] != '\n') Advance();
      } else {
        return;
      }
    }
  }

  bool Match(char next) {
    if (pos_ < src_.size() && src_[pos_] == next) {
      Advance();
      return true;
    }
    return false;
  }

  Tok Punct(Token& t) {
    char c = src_[pos_];
    Advance();
    t.text = std::string(1, c);
    switch (c) {
      case '(': return Tok::kLParen;
      case ')': return Tok::kRParen;
      case '{': return Tok::kLBrace;
      case '}': return Tok::kRBrace;
      case '[': return Tok::kLBracket;
      case ']': return Tok::kRBracket;
      case ',': return Tok::kComma;
      case ';': return Tok::kSemicolon;
      case '+': return Tok::kPlus;
      case '-': return Tok::kMinus;
      case '*': return Tok::kStar;
      case '/': return Tok::kSlash;
      case '%': return Tok::kPercent;
      case '<': return Match('=') ? Tok::kLe : Tok::kLt;
      case '>': return Match('=') ? Tok::kGe : Tok::kGt;
      case '=': return Match('=') ? Tok::kEq : Tok::kAssign;
      case '!': return Match('=') ? Tok::kNe : Tok::kBang;
      case '&':
        if (Match('&')) return Tok::kAndAnd;
        break;
      case '|':
        if (Match('|')) return Tok::kOrOr;
        break;
      default:
        break;
    }
    throw SyntaxError(name_, t.line, t.column,
                      "unexpected character '" + t.text + "'");
  }

  std::string_view src_;
  const std::string& name_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int column_ = 1;
};

const std::set<std::string, std::less<>> kKeywords = {
    "fn", "if", "else", "while", "return", "skip", "assert", "true", "false"};

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::string name)
      : toks_(std::move(tokens)), name_(std::move(name)) {}

  std::vector<FunctionDef> ParseUnit() {
    std::vector<FunctionDef> fns;
    while (Peek().kind != Tok::kEnd) fns.push_back(ParseFunction());
    return fns;
  }

 private:
  const Token& Peek(std::size_t ahead = 0) const {
    std::size_t i = std::min(pos_ + ahead, toks_.size() - 1);
    return toks_[i];
  }

  const Token& Next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  [[noreturn]] void Fail(const Token& at, const std::string& msg) const {
    throw SyntaxError(name_, at.line, at.column, msg);
  }

  bool IsKeyword(const Token& t, std::string_view kw) const {
    return t.kind == Tok::kIdent && t.text == kw;
  }

  const Token& Expect(Tok kind, const char* what) {
    if (Peek().kind != kind) {
      Fail(Peek(), std::string("expected ") + what + ", found '" +
                       (Peek().kind == Tok::kEnd ? "end of input"
                                                 : Peek().text) +
                       "'");
    }
    return Next();
  }

  void ExpectKeyword(std::string_view kw) {
    if (!IsKeyword(Peek(), kw)) {
      Fail(Peek(), "expected '" + std::string(kw) + "'");
    }
    Next();
  }

  std::string ExpectIdentifier(const char* what) {
    const Token& t = Expect(Tok::kIdent, what);
    if (kKeywords.count(t.text)) {
      Fail(t, "keyword '" + t.text + "' cannot be used as " + what);
    }
    return t.text;
  }

  FunctionDef ParseFunction() {
    FunctionDef fn;
    fn.line = Peek().line;
    fn.source_name = name_;
    ExpectKeyword("fn");
    fn.name = ExpectIdentifier("function name");
    Expect(Tok::kLParen, "'('");
    if (Peek().kind != Tok::kRParen) {
      while (true) {
        const Token& at = Peek();
        std::string param = ExpectIdentifier("parameter name");
        for (const auto& p : fn.params) {
          if (p == param) {
            throw ValidityError(name_ + ":" + std::to_string(at.line) +
                                ": duplicate parameter '" + param +
                                "' in function '" + fn.name + "'");
          }
        }
        fn.params.push_back(std::move(param));
        if (Peek().kind != Tok::kComma) break;
        Next();
      }
    }
    Expect(Tok::kRParen, "')'");
    fn.body = ParseBlock();
    return fn;
  }

  Block ParseBlock() {
    Expect(Tok::kLBrace, "'{'");
    Block block;
    while (Peek().kind != Tok::kRBrace) {
      if (Peek().kind == Tok::kEnd) Fail(Peek(), "unterminated block");
      block.statements.push_back(ParseStatement());
    }
    Next();
    return block;
  }

  Statement ParseStatement() {
    const Token& start = Peek();
    int line = start.line;
    Statement stmt;
    if (IsKeyword(start, "skip")) {
      Next();
      Expect(Tok::kSemicolon, "';'");
      stmt = MakeSkip();
    } else if (IsKeyword(start, "if")) {
      stmt = ParseIf();
    } else if (IsKeyword(start, "while")) {
      Next();
      Expect(Tok::kLParen, "'('");
      ExprPtr cond = ParseExpr();
      Expect(Tok::kRParen, "')'");
      stmt = MakeWhile(std::move(cond), ParseBlock());
    } else if (IsKeyword(start, "return")) {
      Next();
      ExprPtr value = ParseExpr();
      Expect(Tok::kSemicolon, "';'");
      stmt = MakeReturn(std::move(value));
    } else if (IsKeyword(start, "assert")) {
      Next();
      ExprPtr cond = ParseExpr();
      Expect(Tok::kSemicolon, "';'");
      stmt = MakeAssert(std::move(cond));
    } else if (start.kind == Tok::kIdent && Peek(1).kind == Tok::kAssign) {
      std::string target = ExpectIdentifier("assignment target");
      Next();
      ExprPtr value = ParseExpr();
      Expect(Tok::kSemicolon, "';'");
      stmt = MakeAssign(std::move(target), std::move(value));
    } else {
      ExprPtr e = ParseExpr();
      if (Peek().kind == Tok::kAssign) {
        if (e->kind != ExprKind::kIndex ||
            e->operands[0]->kind != ExprKind::kVar) {
          Fail(Peek(), "invalid assignment target");
        }
        Next();
        ExprPtr value = ParseExpr();
        Expect(Tok::kSemicolon, "';'");
        stmt = MakeArrayStore(e->operands[0]->name, e->operands[1],
                              std::move(value));
      } else {
        Expect(Tok::kSemicolon, "';'");
        stmt = MakeExprStmt(std::move(e));
      }
    }
    stmt.line = line;
    return stmt;
  }

  Statement ParseIf() {
    int line = Peek().line;
    ExpectKeyword("if");
    Expect(Tok::kLParen, "'('");
    ExprPtr cond = ParseExpr();
    Expect(Tok::kRParen, "')'");
    Block then_body = ParseBlock();
    Block else_body;
    if (IsKeyword(Peek(), "else")) {
      Next();
      if (IsKeyword(Peek(), "if")) {
        else_body.statements.push_back(ParseIf());
      } else {
        else_body = ParseBlock();
      }
    }
    Statement s = MakeIf(std::move(cond), std::move(then_body),
                         std::move(else_body));
    s.line = line;
    return s;
  }

  ExprPtr ParseExpr() { return ParseOr(); }

  ExprPtr ParseOr() {
    ExprPtr lhs = ParseAnd();
    while (Peek().kind == Tok::kOrOr) {
      Next();
      lhs = MakeBinary(BinaryOp::kOr, std::move(lhs), ParseAnd());
    }
    return lhs;
  }

  ExprPtr ParseAnd() {
    ExprPtr lhs = ParseEquality();
    while (Peek().kind == Tok::kAndAnd) {
      Next();
      lhs = MakeBinary(BinaryOp::kAnd, std::move(lhs), ParseEquality());
    }
    return lhs;
  }

  ExprPtr ParseEquality() {
    ExprPtr lhs = ParseRelational();
    while (Peek().kind == Tok::kEq || Peek().kind == Tok::kNe) {
      BinaryOp op = Next().kind == Tok::kEq ? BinaryOp::kEq : BinaryOp::kNe;
      lhs = MakeBinary(op, std::move(lhs), ParseRelational());
    }
    return lhs;
  }

  ExprPtr ParseRelational() {
    ExprPtr lhs = ParseAdditive();
    while (true) {
      BinaryOp op;
      switch (Peek().kind) {
        case Tok::kLt: op = BinaryOp::kLt; break;
        case Tok::kLe: op = BinaryOp::kLe; break;
        case Tok::kGt: op = BinaryOp::kGt; break;
        case Tok::kGe: op = BinaryOp::kGe; break;
        default: return lhs;
      }
      Next();
      lhs = MakeBinary(op, std::move(lhs), ParseAdditive());
    }
  }

  ExprPtr ParseAdditive() {
    ExprPtr lhs = ParseMultiplicative();
    while (Peek().kind == Tok::kPlus || Peek().kind == Tok::kMinus) {
      BinaryOp op = Next().kind == Tok::kPlus ? BinaryOp::kAdd : BinaryOp::kSub;
      lhs = MakeBinary(op, std::move(lhs), ParseMultiplicative());
    }
    return lhs;
  }

  ExprPtr ParseMultiplicative() {
    ExprPtr lhs = ParseUnary();
    while (true) {
      BinaryOp op;
      switch (Peek().kind) {
        case Tok::kStar: op = BinaryOp::kMul; break;
        case Tok::kSlash: op = BinaryOp::kDiv; break;
        case Tok::kPercent: op = BinaryOp::kMod; break;
        default: return lhs;
      }
      Next();
      lhs = MakeBinary(op, std::move(lhs), ParseUnary());
    }
  }

  ExprPtr ParseUnary() {
    if (Peek().kind == Tok::kBang) {
      Next();
      return MakeUnary(UnaryOp::kNot, ParseUnary());
    }
    if (Peek().kind == Tok::kMinus) {
      // A minus directly followed by a literal is a negative literal.
      if (Peek(1).kind == Tok::kInt) {
        Next();
        const Token& lit = Next();
        return ParsePostfix(MakeIntLit(ParseIntText(lit, true)));
      }
      Next();
      return MakeUnary(UnaryOp::kNeg, ParseUnary());
    }
    return ParsePostfix(ParsePrimary());
  }

  std::int64_t ParseIntText(const Token& t, bool negative) {
    std::string text = negative ? "-" + t.text : t.text;
    std::int64_t value = 0;
    auto [ptr, ec] =
        std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
      Fail(t, "integer literal out of range");
    }
    return value;
  }

  ExprPtr ParsePostfix(ExprPtr base) {
    while (Peek().kind == Tok::kLBracket) {
      Next();
      ExprPtr index = ParseExpr();
      Expect(Tok::kRBracket, "']'");
      base = MakeIndex(std::move(base), std::move(index));
    }
    return base;
  }

  std::vector<ExprPtr> ParseList(Tok close, const char* what) {
    std::vector<ExprPtr> items;
    if (Peek().kind != close) {
      while (true) {
        items.push_back(ParseExpr());
        if (Peek().kind != Tok::kComma) break;
        Next();
      }
    }
    Expect(close, what);
    return items;
  }

  ExprPtr ParsePrimary() {
    const Token& t = Peek();
    switch (t.kind) {
      case Tok::kInt:
        Next();
        return MakeIntLit(ParseIntText(t, false));
      case Tok::kLParen: {
        Next();
        ExprPtr e = ParseExpr();
        Expect(Tok::kRParen, "')'");
        return e;
      }
      case Tok::kLBracket:
        Next();
        return MakeArrayLit(ParseList(Tok::kRBracket, "']'"));
      case Tok::kIdent: {
        if (t.text == "true" || t.text == "false") {
          Next();
          return MakeBoolLit(t.text == "true");
        }
        std::string name = ExpectIdentifier("expression");
        if (Peek().kind == Tok::kLParen) {
          Next();
          return MakeCall(std::move(name), ParseList(Tok::kRParen, "')'"));
        }
        return MakeVar(std::move(name));
      }
      default:
        Fail(t, t.kind == Tok::kEnd ? "unexpected end of input"
                                    : "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::string name_;
  std::size_t pos_ = 0;
};

void CheckUniqueFunctions(const std::vector<FunctionDef>& fns) {
  std::map<std::string, const FunctionDef*> seen;
  for (const auto& fn : fns) {
    if (IsIntrinsic(fn.name)) {
      throw ValidityError(fn.source_name + ":" + std::to_string(fn.line) +
                          ": function '" + fn.name +
                          "' shadows a built-in function");
    }
    auto [it, inserted] = seen.emplace(fn.name, &fn);
    if (!inserted) {
      throw ValidityError(fn.source_name + ":" + std::to_string(fn.line) +
                          ": duplicate function '" + fn.name + "'");
    }
  }
}

void CheckCalls(const Expr& e, const std::map<std::string, int>& arity,
                const FunctionDef& in) {
  if (e.kind == ExprKind::kCall) {
    int expected = -1;
    if (IsIntrinsic(e.name)) {
      expected = IntrinsicArity(e.name);
    } else if (auto it = arity.find(e.name); it != arity.end()) {
      expected = it->second;
    } else {
      throw ValidityError("call to unknown function '" + e.name + "' in '" +
                          in.name + "'");
    }
    if (static_cast<int>(e.operands.size()) != expected) {
      throw ValidityError("call to '" + e.name + "' in '" + in.name +
                          "' passes " + std::to_string(e.operands.size()) +
                          " arguments, expected " + std::to_string(expected));
    }
  }
  for (const auto& op : e.operands) CheckCalls(*op, arity, in);
}

}  // namespace

Program Parse(std::string_view source, std::string source_name) {
  Lexer lexer(source, source_name);
  Parser parser(lexer.Tokenize(), source_name);
  Program program;
  program.functions = parser.ParseUnit();
  program.source_name = std::move(source_name);
  CheckUniqueFunctions(program.functions);
  AssignStatementIds(program);
  return program;
}

Program ParseFiles(const std::vector<SourceFile>& files) {
  Program merged;
  for (const auto& file : files) {
    Program unit = Parse(file.text, file.name);
    for (auto& fn : unit.functions) merged.functions.push_back(std::move(fn));
    if (!merged.source_name.empty()) merged.source_name += ",";
    merged.source_name += file.name;
  }
  CheckUniqueFunctions(merged.functions);
  AssignStatementIds(merged);
  return merged;
}

bool IsIntrinsic(std::string_view name) { return IntrinsicArity(name) >= 0; }

int IntrinsicArity(std::string_view name) {
  if (name == "len" || name == "array") return 1;
  if (name == "nondet") return 0;
  return -1;
}

void ValidateProgram(const Program& program,
                     const std::vector<FunctionDef>& externals) {
  std::vector<FunctionDef> all = program.functions;
  all.insert(all.end(), externals.begin(), externals.end());
  CheckUniqueFunctions(all);
  std::map<std::string, int> arity;
  for (const auto& fn : all) {
    arity[fn.name] = static_cast<int>(fn.params.size());
    std::set<std::string> params(fn.params.begin(), fn.params.end());
    if (params.size() != fn.params.size()) {
      throw ValidityError("duplicate parameter in function '" + fn.name + "'");
    }
  }
  std::set<StatementId> ids;
  ForEachStatement(program, [&](const Statement& s, const FunctionDef& fn) {
    if (!ids.insert(s.id).second) {
      throw ValidityError("duplicate statement id " +
                          std::to_string(s.id.value));
    }
    if (s.kind == StmtKind::kSkip &&
        (!s.then_body.statements.empty() || !s.else_body.statements.empty())) {
      throw ValidityError("skip statement with children");
    }
    if (s.index) CheckCalls(*s.index, arity, fn);
    if (s.expr) CheckCalls(*s.expr, arity, fn);
  });
}

}  // namespace repairforge
