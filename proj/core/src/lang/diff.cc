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

#include "repairforge/lang/diff.h"

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "repairforge/errors.h"
#include "repairforge/lang/printer.h"

namespace repairforge {
namespace {

std::vector<std::string_view> SplitLines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.push_back(text.substr(start));
      break;
    }
    lines.push_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  return lines;
}

enum class Op { kEqual, kDelete, kInsert };

struct DiffLine {
  Op op;
  std::size_t a;  // index into before (kEqual, kDelete)
  std::size_t b;  // index into after (kEqual, kInsert)
};

// Longest-common-subsequence alignment; deletions precede insertions
// inside a change.
std::vector<DiffLine> Align(const std::vector<std::string_view>& a,
                            const std::vector<std::string_view>& b) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  std::vector<std::vector<int>> lcs(n + 1, std::vector<int>(m + 1, 0));
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = m; j-- > 0;) {
      lcs[i][j] = a[i] == b[j] ? lcs[i + 1][j + 1] + 1
                               : std::max(lcs[i + 1][j], lcs[i][j + 1]);
    }
  }
  std::vector<DiffLine> out;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < n || j < m) {
    if (i < n && j < m && a[i] == b[j]) {
      out.push_back({Op::kEqual, i++, j++});
    } else if (i < n && (j == m || lcs[i + 1][j] >= lcs[i][j + 1])) {
      out.push_back({Op::kDelete, i++, j});
    } else {
      out.push_back({Op::kInsert, i, j++});
    }
  }
  return out;
}

std::string RangeText(std::size_t first, std::size_t count) {
  // Empty ranges name the line before them.
  std::size_t start = count == 0 ? first : first + 1;
  std::string s = std::to_string(start);
  if (count != 1) s += "," + std::to_string(count);
  return s;
}

}  // namespace

std::string UnifiedDiff(std::string_view before, std::string_view after,
                        std::string_view name, int context) {
  if (before == after) return "";
  auto a = SplitLines(before);
  auto b = SplitLines(after);
  auto lines = Align(a, b);

  std::string out = "--- a/" + std::string(name) + "\n+++ b/" +
                    std::string(name) + "\n";
  const std::size_t ctx = static_cast<std::size_t>(std::max(context, 0));
  std::size_t k = 0;
  while (k < lines.size()) {
    while (k < lines.size() && lines[k].op == Op::kEqual) ++k;
    if (k == lines.size()) break;
    std::size_t begin = k >= ctx ? k - ctx : 0;
    // Extend through changes separated by at most 2*ctx equal lines.
    std::size_t end = k;
    while (true) {
      while (end < lines.size() && lines[end].op != Op::kEqual) ++end;
      std::size_t run = end;
      while (run < lines.size() && lines[run].op == Op::kEqual) ++run;
      if (run < lines.size() && run - end <= 2 * ctx) {
        end = run;
        continue;
      }
      end = std::min(end + ctx, lines.size());
      break;
    }
    std::size_t a_first = lines[begin].a;
    std::size_t b_first = lines[begin].b;
    std::size_t a_count = 0;
    std::size_t b_count = 0;
    std::string body;
    for (std::size_t t = begin; t < end; ++t) {
      const DiffLine& d = lines[t];
      switch (d.op) {
        case Op::kEqual:
          body += " " + std::string(a[d.a]) + "\n";
          ++a_count;
          ++b_count;
          break;
        case Op::kDelete:
          body += "-" + std::string(a[d.a]) + "\n";
          ++a_count;
          break;
        case Op::kInsert:
          body += "+" + std::string(b[d.b]) + "\n";
          ++b_count;
          break;
      }
    }
    out += "@@ -" + RangeText(a_first, a_count) + " +" +
           RangeText(b_first, b_count) + " @@\n" + body;
    k = end;
  }
  return out;
}

std::string Diff(const Program& original, const Program& patched,
                 std::string_view name) {
  return UnifiedDiff(Print(original), Print(patched), name);
}

std::string ApplyUnifiedDiff(std::string_view text, std::string_view diff) {
  auto src = SplitLines(text);
  auto patch = SplitLines(diff);
  std::vector<std::string> out;
  std::size_t cursor = 0;  // next unconsumed source line
  std::size_t p = 0;
  while (p < patch.size()) {
    std::string_view line = patch[p];
    if (line.rfind("@@ -", 0) != 0) {
      ++p;
      continue;
    }
    // @@ -start[,count] +start[,count] @@
    const char* s = line.data() + 4;
    char* endp = nullptr;
    long old_start = std::strtol(s, &endp, 10);
    long old_count = 1;
    if (*endp == ',') old_count = std::strtol(endp + 1, &endp, 10);
    std::size_t first = old_count == 0 ? static_cast<std::size_t>(old_start)
                                       : static_cast<std::size_t>(old_start - 1);
    if (first < cursor || first > src.size()) {
      throw InvalidEditError("diff hunk out of order or out of range: " +
                             std::string(line));
    }
    while (cursor < first) out.emplace_back(src[cursor++]);
    ++p;
    while (p < patch.size() && patch[p].rfind("@@", 0) != 0) {
      std::string_view h = patch[p];
      if (h.empty()) {
        // Some tools drop the leading space on blank context lines.
        h = " ";
      }
      char tag = h[0];
      std::string_view body = h.substr(1);
      if (tag == ' ' || tag == '-') {
        if (cursor >= src.size() || src[cursor] != body) {
          throw InvalidEditError("diff context mismatch at source line " +
                                 std::to_string(cursor + 1));
        }
        if (tag == ' ') out.emplace_back(body);
        ++cursor;
      } else if (tag == '+') {
        out.emplace_back(body);
      } else if (tag != '\\') {
        break;
      }
      ++p;
    }
  }
  while (cursor < src.size()) out.emplace_back(src[cursor++]);
  std::string result;
  for (const auto& l : out) result += l + "\n";
  return result;
}

}  // namespace repairforge
