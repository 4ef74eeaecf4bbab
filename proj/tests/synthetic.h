#ifndef ROOTPIPE_TESTS_SYNTHETIC_H_
#define ROOTPIPE_TESTS_SYNTHETIC_H_

#include <string>
#include <vector>

#include "rootpipe/arabic_text.h"

namespace rootpipe::testing {

// Three-letter roots built only from letters outside every affix set, so
// each one is its own single stem candidate.
inline std::vector<std::string> PlainRoots(std::size_t count) {
  const std::u16string letters = u"بثجحخدذرزشصضطظعغق";
  std::vector<std::string> roots;
  for (char16_t a : letters) {
    for (char16_t b : letters) {
      for (char16_t c : letters) {
        if (roots.size() == count) return roots;
        roots.push_back(EncodeUtf8(std::u16string{a, b, c}));
      }
    }
  }
  return roots;
}

}  // namespace rootpipe::testing

#endif  // ROOTPIPE_TESTS_SYNTHETIC_H_
