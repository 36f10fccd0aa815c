#pragma once

#include "annarc/matching.hpp"
#include "annarc/tangle.hpp"

namespace testing_util {

inline annarc::AffineMatching named(const char* word) {
  return annarc::evaluate_word(annarc::parse_word(word)).matching;
}

inline const char* const kAlpha1 = "g(2,1)";
inline const char* const kAlpha2 = "g(2,1); r(2)";
inline const char* const kBeta1 = "g(2,1); g(4,1)";
inline const char* const kBeta2 = "g(2,1); r(2); g(4,1)";
inline const char* const kBeta3 = "g(2,1); r(2); g(4,3)";
inline const char* const kBeta4 = "g(2,1); g(4,2)";
inline const char* const kBeta5 = "g(2,1); r(2); g(4,2)";
inline const char* const kBeta6 = "g(2,1); r(2); g(4,1); r(4)";

}  // namespace testing_util
