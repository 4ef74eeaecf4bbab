#include "rootpipe/root_lexicon.h"

#include <algorithm>
#include <fstream>

#include "rootpipe/errors.h"

namespace rootpipe {

namespace {

std::u16string NormalizeRoot(std::string_view text,
                             const NormalizeOptions& options,
                             const std::string& where) {
  NormalizedWord word = [&] {
    try {
      return NormalizeWord(text, options);
    } catch (const Error& e) {
      throw Error(ErrorCode::kMalformedRoot, where + ": " + e.what());
    }
  }();
  if (word.size() < RootLexicon::kMinRootLength ||
      word.size() > RootLexicon::kMaxRootLength) {
    throw Error(ErrorCode::kMalformedRoot,
                where + ": root '" + std::string(text) + "' has " +
                    std::to_string(word.size()) + " letters");
  }
  return std::u16string(word.letters());
}

std::string_view Trim(std::string_view s) {
  const auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n';
  };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

RootLexicon RootLexicon::Load(const std::string& path,
                              const NormalizeOptions& options) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFileUnreadable, path);
  RootLexicon lexicon;
  lexicon.source_ = path;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view root = Trim(line);
    if (root.empty() || root.front() == '#') continue;
    lexicon.Insert(NormalizeRoot(
        root, options, path + ":" + std::to_string(line_no)));
  }
  if (in.bad()) throw Error(ErrorCode::kFileUnreadable, path);
  lexicon.Seal();
  return lexicon;
}

RootLexicon RootLexicon::FromRoots(std::span<const std::string> roots,
                                   const NormalizeOptions& options) {
  RootLexicon lexicon;
  lexicon.source_ = "<memory>";
  for (std::size_t i = 0; i < roots.size(); ++i) {
    lexicon.Insert(
        NormalizeRoot(Trim(roots[i]), options, "entry " + std::to_string(i)));
  }
  lexicon.Seal();
  return lexicon;
}

void RootLexicon::Insert(std::u16string root) {
  by_length_[root.size() - kMinRootLength].push_back(std::move(root));
}

void RootLexicon::Seal() {
  for (auto& partition : by_length_) {
    std::sort(partition.begin(), partition.end());
    partition.erase(std::unique(partition.begin(), partition.end()),
                    partition.end());
  }
}

std::span<const std::u16string> RootLexicon::Partition(
    std::size_t length) const {
  if (length < kMinRootLength || length > kMaxRootLength) return {};
  return by_length_[length - kMinRootLength];
}

bool RootLexicon::Contains(const NormalizedWord& stem) const {
  return Contains(stem.letters(), nullptr);
}

bool RootLexicon::Contains(std::u16string_view stem) const {
  return Contains(stem, nullptr);
}

bool RootLexicon::Contains(std::u16string_view stem,
                           std::size_t* comparisons) const {
  const auto partition = Partition(stem.size());
  std::size_t lo = 0;
  std::size_t hi = partition.size();
  std::size_t count = 0;
  bool found = false;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    const int order = std::u16string_view(partition[mid]).compare(stem);
    ++count;
    if (order == 0) {
      found = true;
      break;
    }
    if (order < 0) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  if (comparisons != nullptr) *comparisons += count;
  return found;
}

LexiconStats RootLexicon::Stats() const {
  LexiconStats stats;
  stats.bilateral = by_length_[0].size();
  stats.trilateral = by_length_[1].size();
  stats.quadrilateral = by_length_[2].size();
  stats.total = stats.bilateral + stats.trilateral + stats.quadrilateral;
  return stats;
}

}  // namespace rootpipe
