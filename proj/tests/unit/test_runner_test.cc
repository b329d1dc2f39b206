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

#include "repairforge/exec/test_runner.h"

#include <algorithm>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "random_program.h"
#include "reference_interpreter.h"
#include "repairforge/errors.h"
#include "repairforge/lang/parser.h"

namespace repairforge {
namespace {

std::vector<TestCase> Tests(const std::string& source) {
  return ExtractTests(Parse(source, "tests.mini"));
}

TestResult RunOne(const std::string& program, const std::string& test,
                  std::int64_t budget = kDefaultStepBudget) {
  return RunTest(Parse(program), Tests(test).at(0), budget);
}

TEST(RunTestTest, Pass) {
  TestResult r = RunOne("fn f(){return 1;}", "fn test_f() { assert f() == 1; }");
  EXPECT_EQ(VerdictKind::kPass, r.verdict.kind);
  EXPECT_EQ((std::set<StatementId>{StatementId(0)}), r.covered);
}

TEST(RunTestTest, AssertionFailureReportsTheAssert) {
  TestResult r = RunOne("fn f(){return 1;}",
                        "fn test_f() {\n  x = 0;\n  assert f() == 2;\n}");
  EXPECT_EQ(VerdictKind::kAssertionFailure, r.verdict.kind);
  EXPECT_EQ("test_f", r.verdict.location.function);
  EXPECT_EQ(3, r.verdict.location.line);
  EXPECT_FALSE(r.verdict.location.statement.has_value());
}

TEST(RunTestTest, InfiniteLoopExhaustsBudget) {
  TestResult r = RunOne("fn f() { while (true) { skip; } return 0; }",
                        "fn test_f() { assert f() == 0; }", 1000);
  EXPECT_EQ(VerdictKind::kStepBudgetExceeded, r.verdict.kind);
  EXPECT_EQ(1000, r.steps);
}

TEST(RunTestTest, StepCountsMatchHandCount) {
  // test body: assert (1) + "==" (1) + call (1) + literal 3 (1)
  // f body: return (1) + "+" (1) + x (1) + literal 1 (1)
  // argument literal 2 (1)
  TestResult r = RunOne("fn f(x) { return x + 1; }",
                        "fn test_f() { assert f(2) == 3; }");
  EXPECT_TRUE(r.verdict.passed());
  EXPECT_EQ(9, r.steps);
}

TEST(RunTestTest, RuntimeErrors) {
  struct Case {
    const char* program;
    RuntimeErrorKind error;
  };
  const Case cases[] = {
      {"fn f() { return 1 / 0; }", RuntimeErrorKind::kDivisionByZero},
      {"fn f() { return 5 % 0; }", RuntimeErrorKind::kDivisionByZero},
      {"fn f() { return 9223372036854775807 + 1; }", RuntimeErrorKind::kOverflow},
      {"fn f() { return -(-9223372036854775808); }", RuntimeErrorKind::kOverflow},
      {"fn f() { return -9223372036854775808 / -1; }", RuntimeErrorKind::kOverflow},
      {"fn f() { a = [1]; return a[1]; }", RuntimeErrorKind::kIndexOutOfBounds},
      {"fn f() { a = [1]; a[-1] = 0; return 0; }",
       RuntimeErrorKind::kIndexOutOfBounds},
      {"fn f() { return 1 + true; }", RuntimeErrorKind::kTypeError},
      {"fn f() { return [1] == [1]; }", RuntimeErrorKind::kTypeError},
      {"fn f() { if (1) { skip; } return 0; }", RuntimeErrorKind::kTypeError},
      {"fn f() { return y; }", RuntimeErrorKind::kUndefinedVariable},
      {"fn f() { return f(); }", RuntimeErrorKind::kStackOverflow},
      {"fn f() { return array(-1); }", RuntimeErrorKind::kBadArraySize},
      {"fn f() { return len(3); }", RuntimeErrorKind::kTypeError},
  };
  for (const auto& c : cases) {
    TestResult r = RunOne(c.program, "fn test_f() { f(); assert true; }");
    EXPECT_EQ(VerdictKind::kRuntimeError, r.verdict.kind) << c.program;
    EXPECT_EQ(c.error, r.verdict.error) << c.program;
    EXPECT_EQ("f", r.verdict.location.function) << c.program;
    EXPECT_TRUE(r.verdict.location.statement.has_value()) << c.program;
  }
}

TEST(RunTestTest, ErrorLocationAfterReturnFromCallee) {
  TestResult r = RunOne(
      "fn g() { return 1; }\nfn f() {\n  x = g();\n  return x / 0;\n}",
      "fn test_f() { f(); assert true; }");
  EXPECT_EQ(RuntimeErrorKind::kDivisionByZero, r.verdict.error);
  EXPECT_EQ("f", r.verdict.location.function);
  EXPECT_EQ(4, r.verdict.location.line);
}

TEST(RunTestTest, ArraysAreShared) {
  TestResult r = RunOne("fn fill(a, v) { i = 0; while (i < len(a)) { a[i] = v; "
                        "i = i + 1; } }",
                        "fn test_f() { a = array(3); fill(a, 7); "
                        "assert a[0] + a[1] + a[2] == 21; }");
  EXPECT_TRUE(r.verdict.passed()) << DescribeVerdict(r.verdict);
}

TEST(RunTestTest, FallingOffTheEndReturnsZero) {
  TestResult r = RunOne("fn f() { x = 1; }", "fn test_f() { assert f() == 0; }");
  EXPECT_TRUE(r.verdict.passed());
}

TEST(RunTestTest, ShortCircuit) {
  TestResult r = RunOne("fn f(x) { return x != 0 && 10 / x > 1; }",
                        "fn test_f() { assert !f(0); assert f(2); }");
  EXPECT_TRUE(r.verdict.passed()) << DescribeVerdict(r.verdict);
}

TEST(RunTestTest, HelpersAreNotCovered) {
  Program p = Parse("fn f() { return 1; }");
  auto tests = Tests(
      "fn helper() { x = f(); return x; }\n"
      "fn test_a() { assert helper() == 1; }");
  ASSERT_EQ(1u, tests.size());
  TestResult r = RunTest(p, tests[0]);
  EXPECT_TRUE(r.verdict.passed());
  EXPECT_EQ((std::set<StatementId>{StatementId(0)}), r.covered);
}

TEST(RunTestTest, NondetReadsTheTape) {
  Program p = Parse("fn roll() { return nondet(); }");
  auto tests = Tests("fn test_roll() { assert roll() + roll() == 7; }");
  std::vector<std::int64_t> tape = {3, 4};
  EXPECT_TRUE(RunTest(p, tests[0], kDefaultStepBudget, tape).passed());
  EXPECT_FALSE(RunTest(p, tests[0]).passed());
}

TEST(ExtractTestsTest, Rules) {
  EXPECT_THROW(Tests("fn test_a(x) { assert true; }"), ValidityError);
  EXPECT_THROW(Tests("fn test_a() { skip; }"), ValidityError);
  auto tests = Tests(
      "fn helper() { return 1; }\n"
      "fn test_b() { assert true; }\n"
      "fn test_a() { if (true) { assert true; } }\n");
  ASSERT_EQ(2u, tests.size());
  EXPECT_EQ("test_b", tests[0].name);
  EXPECT_EQ("test_a", tests[1].name);
  ASSERT_NE(nullptr, tests[0].helpers);
  EXPECT_EQ(1u, tests[0].helpers->size());
}

const char kCounter[] = R"(
fn count_pos(a) {
  n = 0;
  i = 0;
  while (i < len(a)) {
    if (a[i] > 0) {
      n = n + 1;
    }
    i = i + 1;
  }
  return n;
}
)";

TEST(RunSuiteTest, PermutationInvariance) {
  Program p = Parse(kCounter);
  auto suite = Tests(
      "fn test_empty() { assert count_pos([]) == 0; }\n"
      "fn test_mixed() { assert count_pos([1, -1, 2]) == 2; }\n"
      "fn test_wrong() { assert count_pos([5]) == 2; }\n"
      "fn test_neg() { assert count_pos([-3, -4]) == 0; }\n");
  auto base = RunSuite(p, suite);
  std::vector<std::size_t> order = {0, 1, 2, 3};
  do {
    std::vector<TestCase> permuted;
    for (std::size_t i : order) permuted.push_back(suite[i]);
    auto results = RunSuite(p, permuted);
    for (std::size_t k = 0; k < order.size(); ++k) {
      ASSERT_EQ(base[order[k]], results[k]);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  EXPECT_FALSE(base[2].passed());
}

TEST(RunSuiteTest, CoverageByHand) {
  Program p = Parse(kCounter);
  auto suite = Tests(
      "fn test_empty() { assert count_pos([]) == 0; }\n"
      "fn test_neg() { assert count_pos([-3]) == 0; }\n");
  auto results = RunSuite(p, suite);
  // Ids: 0 n=0, 1 i=0, 2 while, 3 if, 4 n=n+1, 5 i=i+1, 6 return.
  std::set<StatementId> empty = {StatementId(0), StatementId(1), StatementId(2),
                                 StatementId(6)};
  std::set<StatementId> neg = {StatementId(0), StatementId(1), StatementId(2),
                               StatementId(3), StatementId(5), StatementId(6)};
  EXPECT_EQ(empty, results[0].covered);
  EXPECT_EQ(neg, results[1].covered);
}

// Production interpreter against the trace-based reference on generated
// programs.
TEST(RunTestTest, AgreesWithReferenceInterpreter) {
  testing::RandomProgramGenerator gen(4242);
  int long_runs = 0;
  int passes = 0;
  for (int i = 0; i < 600; ++i) {
    const bool typed = i % 4 != 0;
    Program p = typed ? gen.GenerateTyped() : gen.Generate();
    const FunctionDef& last = p.functions.back();
    std::string call = last.name + "(";
    for (std::size_t k = 0; k < last.params.size(); ++k) {
      call += k ? ", " : "";
      if (typed && k == 0) {
        call += "[1, 2, 3]";
      } else {
        call += (i + k) % 3 == 0 ? "[1, 2, 3]" : std::to_string(i % 5);
      }
    }
    call += ")";
    auto tests = Tests("fn test_r() { r = " + call + "; assert true; }");
    for (std::int64_t budget : {std::int64_t{50}, std::int64_t{20000}}) {
      TestResult got = RunTest(p, tests[0], budget);
      testing::ReferenceResult want = testing::ReferenceRun(p, tests[0], budget);
      ASSERT_EQ(want.kind, got.verdict.kind) << i;
      ASSERT_EQ(want.error, got.verdict.error) << i;
      ASSERT_EQ(want.steps, got.steps) << i;
      ASSERT_EQ(want.covered, got.covered) << i;
      if (budget > 50 && got.steps > 50) ++long_runs;
      if (budget > 50 && got.passed()) ++passes;
    }
  }
  EXPECT_GT(long_runs, 100);
  EXPECT_GT(passes, 100);
}

TEST(DetectFlakyTest, DeterministicSuiteIsClean) {
  Program p = Parse(kCounter);
  auto suite = Tests(
      "fn test_a() { assert count_pos([1]) == 1; }\n"
      "fn test_b() { assert count_pos([1]) == 2; }\n");
  EXPECT_TRUE(DetectFlaky(p, suite, kDefaultStepBudget, 2).empty());
  EXPECT_EQ(DetectFlaky(p, suite, kDefaultStepBudget, 2),
            DetectFlaky(p, suite, kDefaultStepBudget, 5));
}

TEST(DetectFlakyTest, NondetTestReported) {
  Program p = Parse("fn id(x) { return x; }");
  auto suite = Tests(
      "fn test_stable() { assert id(1) == 1; }\n"
      "fn test_coin() { assert id(nondet()) == 0; }\n");
  // Two distinct tapes: all zeros, then all ones.
  TapeSource tapes = [](int rep) {
    return std::vector<std::int64_t>(4, rep == 0 ? 0 : 1);
  };
  EXPECT_EQ((std::set<std::string>{"test_coin"}),
            DetectFlaky(p, suite, kDefaultStepBudget, 2, tapes));
  EXPECT_EQ((std::set<std::string>{"test_coin"}),
            DetectFlaky(p, suite, kDefaultStepBudget, 3));
}

}  // namespace
}  // namespace repairforge
