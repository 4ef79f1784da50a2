#pragma once
// Command-line surface.  Exit codes: 0 success / all checks pass,
// 1 verification failure, 2 usage or input parse error.

#include <string_view>

namespace tiedarcs {

// Classification of the free-form INPUT argument of roundtrip/render.
enum class InputKind {
  Combination,  // "2,4,5,7,8,9" (digits and commas)
  ArcText,      // "(())()"
  TbText,       // "(())()|1"  (tie segment of 0/1 bits, one per gap)
  TaText,       // "(())()|2-3" or "()()|" when the bits do not fit tb form
};
InputKind classify_input(std::string_view s);  // ParseError if none fits

// Full CLI; argv as in main().
int run_cli(int argc, const char* const* argv);

}  // namespace tiedarcs
