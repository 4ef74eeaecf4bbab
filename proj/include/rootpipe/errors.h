#ifndef ROOTPIPE_ERRORS_H_
#define ROOTPIPE_ERRORS_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rootpipe {

enum class ErrorCode {
  kEmptyAfterNormalization,
  kWordTooLong,
  kNonArabicCharacter,
  kUnknownLetter,
  kNotAWord,
  kFileUnreadable,
  kMalformedRoot,
  kZeroWords,
  kMismatchedWordCount,
  kZeroArea,
  kInvalidFrequency,
  kEmptyGold,
  kMissingActualCount,
};

// Stable name used in logs and batch output ("ERROR:<name>").
std::string_view ErrorName(ErrorCode code);

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(ErrorName(code)) + ": " + detail),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rootpipe

#endif  // ROOTPIPE_ERRORS_H_
