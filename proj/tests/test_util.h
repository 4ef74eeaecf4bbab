#ifndef ROOTPIPE_TESTS_TEST_UTIL_H_
#define ROOTPIPE_TESTS_TEST_UTIL_H_

#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>


#include "rootpipe/arabic_text.h"
#include "rootpipe/errors.h"

namespace rootpipe::testing {

inline std::string DataPath(const std::string& name) {
  return std::string(ROOTPIPE_DATA_DIR) + "/" + name;
}

inline std::string TestDataPath(const std::string& name) {
  return std::string(ROOTPIPE_TEST_DATA_DIR) + "/" + name;
}

inline NormalizedWord W(const std::string& utf8) { return NormalizeWord(utf8); }

inline std::vector<std::string> Utf8(const std::vector<NormalizedWord>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.ToUtf8());
  return out;
}

// Writes `contents` to a fresh file under the temp directory.
inline std::string WriteTempFile(const std::string& name,
                                 const std::string& contents) {
  const auto dir = std::filesystem::temp_directory_path() / "rootpipe_tests";
  std::filesystem::create_directories(dir);
  const auto path = dir / name;
  std::ofstream(path, std::ios::binary) << contents;
  return path.string();
}

// The error code raised by `f`, or nullopt when it returns normally.
template <typename F>
std::optional<ErrorCode> ThrownCode(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace rootpipe::testing

#endif  // ROOTPIPE_TESTS_TEST_UTIL_H_
