#pragma once

#include <stdexcept>
#include <string>

namespace cluedit {

// Raised by the text-format readers (graph files, packing files, expression
// files).  line/col are 1-based; col is 0 when only the line is known.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int col = 0)
      : std::runtime_error(what), line(line), col(col) {}
  int line;
  int col;
};

// Raised when an enumeration-based routine would exceed its partition budget.
// units is the number of elements being partitioned, count the (saturated)
// number of partitions that would have to be visited.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, int units, unsigned long long count)
      : std::runtime_error(what), units(units), count(count) {}
  int units;
  unsigned long long count;
};

}  // namespace cluedit
