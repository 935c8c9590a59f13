#pragma once

#include <string>

namespace hkfl {

// A structured record of a published value or formula that the computation
// does not reproduce. The code string is part of the output format.
struct Discrepancy {
  std::string code = "PAPER-DISCREPANCY";
  std::string anchor;     // which statement, e.g. "kummer.closed-form"
  std::string detail;
  std::string stated;
  std::string observed;
};

}  // namespace hkfl
