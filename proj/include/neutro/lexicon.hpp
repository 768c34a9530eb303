#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace neutro {

/// Versioned keyword lexicon mapping theme ids to case-insensitive
/// substring patterns. Theme-based results are lexicon-relative; the file
/// is an input, never a constant.
struct ThemeLexicon {
  struct Theme {
    std::string id;
    std::vector<std::string> patterns;
  };

  std::string version;
  std::vector<Theme> themes;  // ordered; ids unique

  static ThemeLexicon load_file(const std::string& path);

  int index_of(std::string_view theme_id) const;  // -1 when absent

  /// Bitmask of themes whose patterns match the text (case-insensitive
  /// substring). Throws std::domain_error when the lexicon is empty.
  uint64_t tag_mask(std::string_view text) const;

  std::set<std::string> ids_from_mask(uint64_t mask) const;
};

}  // namespace neutro
