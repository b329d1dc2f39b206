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

#include <string>

#include "gtest/gtest.h"
#include "repairforge/errors.h"
#include "repairforge/lang/printer.h"

namespace repairforge {
namespace {

TEST(ParserTest, EmptyInput) {
  Program p = Parse("");
  EXPECT_TRUE(p.functions.empty());
}

TEST(ParserTest, MinimalUnit) {
  Program p = Parse("fn f(x){ return x; }");
  ASSERT_EQ(1u, p.functions.size());
  EXPECT_EQ("f", p.functions[0].name);
  EXPECT_EQ(1u, StatementCount(p));
  EXPECT_EQ(StatementId(0), p.functions[0].body.statements[0].id);
}

TEST(ParserTest, IdsArePreorderAcrossFunctions) {
  Program p = Parse(R"(
fn f(x) {
  if (x > 0) {
    x = 1;
  } else {
    x = 2;
  }
  return x;
}
fn g() {
  while (true) { skip; }
}
)");
  std::vector<std::int64_t> ids;
  std::vector<StmtKind> kinds;
  ForEachStatement(p, [&](const Statement& s, const FunctionDef&) {
    ids.push_back(s.id.value);
    kinds.push_back(s.kind);
  });
  EXPECT_EQ((std::vector<std::int64_t>{0, 1, 2, 3, 4, 5}), ids);
  EXPECT_EQ((std::vector<StmtKind>{StmtKind::kIf, StmtKind::kAssign,
                                   StmtKind::kAssign, StmtKind::kReturn,
                                   StmtKind::kWhile, StmtKind::kSkip}),
            kinds);
}

TEST(ParserTest, SyntaxErrorCarriesPosition) {
  try {
    Parse("fn f() {\n  x = ;\n}\n", "bad.mini");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ("bad.mini", e.source_name());
    EXPECT_EQ(2, e.line());
    EXPECT_EQ(7, e.column());
  }
}

TEST(ParserTest, UnterminatedBlock) {
  EXPECT_THROW(Parse("fn f() { skip;"), SyntaxError);
}

TEST(ParserTest, StrayCharacter) {
  EXPECT_THROW(Parse("fn f() { x = 1 @ 2; }"), SyntaxError);
}

TEST(ParserTest, DuplicateFunctionRejected) {
  EXPECT_THROW(Parse("fn f() { skip; }\nfn f() { skip; }"), ValidityError);
}

TEST(ParserTest, DuplicateParameterRejected) {
  EXPECT_THROW(Parse("fn f(a, a) { skip; }"), ValidityError);
}

TEST(ParserTest, ValidateRejectsUnknownCallAndArity) {
  EXPECT_THROW(ValidateProgram(Parse("fn f() { return g(); }")),
               ValidityError);
  EXPECT_THROW(ValidateProgram(Parse("fn g(a) { return a; }\n"
                                     "fn f() { return g(); }")),
               ValidityError);
  EXPECT_THROW(ValidateProgram(Parse("fn f(a) { return len(a, a); }")),
               ValidityError);
  EXPECT_NO_THROW(ValidateProgram(Parse("fn g(a) { return a; }\n"
                                        "fn f() { return g(len([1])); }")));
}

TEST(ParserTest, ElseIfDesugarsToNestedIf) {
  Program p = Parse(
      "fn f(x) { if (x < 0) { return 0; } else if (x < 5) { return 1; } "
      "else { return 2; } }");
  const Statement& outer = p.functions[0].body.statements[0];
  ASSERT_EQ(StmtKind::kIf, outer.kind);
  ASSERT_EQ(1u, outer.else_body.statements.size());
  EXPECT_EQ(StmtKind::kIf, outer.else_body.statements[0].kind);
}

TEST(ParserTest, MinusBeforeLiteral) {
  Program p = Parse("fn f(x) { return x-1; }");
  const Expr& e = *p.functions[0].body.statements[0].expr;
  ASSERT_EQ(ExprKind::kBinary, e.kind);
  EXPECT_EQ(BinaryOp::kSub, e.binary_op);

  Program q = Parse("fn f() { return -9223372036854775808; }");
  const Expr& lit = *q.functions[0].body.statements[0].expr;
  ASSERT_EQ(ExprKind::kIntLit, lit.kind);
  EXPECT_EQ(INT64_MIN, lit.int_value);
}

TEST(ParserTest, LiteralOutOfRange) {
  EXPECT_THROW(Parse("fn f() { return 9223372036854775808; }"), SyntaxError);
}

TEST(ParserTest, PrecedenceAndAssociativity) {
  Program p = Parse("fn f(a, b, c) { return a - b - c * 2 < a || !b && c; }");
  EXPECT_EQ("a - b - c * 2 < a || !b && c",
            PrintExpr(*p.functions[0].body.statements[0].expr));
  Program q = Parse("fn f(a, b, c) { return a - (b - c); }");
  EXPECT_EQ("a - (b - c)", PrintExpr(*q.functions[0].body.statements[0].expr));
}

TEST(ParserTest, IndexAssignmentIsArrayStore) {
  Program p = Parse("fn f(a) { a[0] = 1; return a[0]; }");
  EXPECT_EQ(StmtKind::kArrayStore, p.functions[0].body.statements[0].kind);
}

TEST(ParserTest, CommentsIgnored) {
  Program p = Parse("// header\nfn f() { // trailing\n  skip; // x\n}\n");
  EXPECT_EQ(1u, StatementCount(p));
}

TEST(ParserTest, ParseFilesRenumbersAcrossFiles) {
  Program p = ParseFiles({{"a.mini", "fn a() { skip; skip; }"},
                          {"b.mini", "fn b() { skip; }"}});
  ASSERT_EQ(2u, p.functions.size());
  EXPECT_EQ(StatementId(2), p.functions[1].body.statements[0].id);
  EXPECT_EQ("b.mini", p.functions[1].source_name);
  EXPECT_THROW(ParseFiles({{"a.mini", "fn a() { skip; }"},
                           {"b.mini", "fn a() { skip; }"}}),
               ValidityError);
}

TEST(ParserTest, IntrinsicShadowingRejected) {
  EXPECT_THROW(Parse("fn len(a) { return 0; }"), ValidityError);
}

}  // namespace
}  // namespace repairforge
