#include "rootpipe/errors.h"

namespace rootpipe {

std::string_view ErrorName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyAfterNormalization: return "EmptyAfterNormalization";
    case ErrorCode::kWordTooLong: return "WordTooLong";
    case ErrorCode::kNonArabicCharacter: return "NonArabicCharacter";
    case ErrorCode::kUnknownLetter: return "UnknownLetter";
    case ErrorCode::kNotAWord: return "NotAWord";
    case ErrorCode::kFileUnreadable: return "FileUnreadable";
    case ErrorCode::kMalformedRoot: return "MalformedRoot";
    case ErrorCode::kZeroWords: return "ZeroWords";
    case ErrorCode::kMismatchedWordCount: return "MismatchedWordCount";
    case ErrorCode::kZeroArea: return "ZeroArea";
    case ErrorCode::kInvalidFrequency: return "InvalidFrequency";
    case ErrorCode::kEmptyGold: return "EmptyGold";
    case ErrorCode::kMissingActualCount: return "MissingActualCount";
  }
  return "Unknown";
}

}  // namespace rootpipe
