#include "neutro/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace neutro {

namespace {

std::string lowered(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

}  // namespace

ThemeLexicon ThemeLexicon::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("lexicon: cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("lexicon: " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("themes") || !doc["themes"].is_object()) {
    throw std::runtime_error("lexicon: " + path + ": expected {version, themes{...}}");
  }
  ThemeLexicon lex;
  lex.version = doc.value("version", "unversioned");
  // nlohmann object iteration is key-ordered; keep the file's intent by
  // reading an explicit order array when present.
  std::vector<std::string> order;
  if (doc.contains("order") && doc["order"].is_array()) {
    for (const auto& id : doc["order"]) order.push_back(id.get<std::string>());
  } else {
    for (const auto& [id, patterns] : doc["themes"].items()) order.push_back(id);
  }
  for (const auto& id : order) {
    if (!doc["themes"].contains(id)) {
      throw std::runtime_error("lexicon: order lists unknown theme " + id);
    }
    Theme theme;
    theme.id = id;
    for (const auto& p : doc["themes"][id]) {
      std::string pattern = p.get<std::string>();
      if (pattern.empty()) {
        throw std::runtime_error("lexicon: empty pattern under theme " + id);
      }
      theme.patterns.push_back(lowered(pattern));
    }
    if (lex.index_of(theme.id) >= 0) {
      throw std::runtime_error("lexicon: duplicate theme id " + id);
    }
    lex.themes.push_back(std::move(theme));
  }
  if (lex.themes.size() > 64) {
    throw std::runtime_error("lexicon: more than 64 themes unsupported");
  }
  return lex;
}

int ThemeLexicon::index_of(std::string_view theme_id) const {
  for (size_t k = 0; k < themes.size(); ++k) {
    if (themes[k].id == theme_id) return static_cast<int>(k);
  }
  return -1;
}

uint64_t ThemeLexicon::tag_mask(std::string_view text) const {
  if (themes.empty()) throw std::domain_error("tag_mask: empty lexicon");
  const std::string haystack = lowered(text);
  uint64_t mask = 0;
  for (size_t k = 0; k < themes.size(); ++k) {
    for (const auto& pattern : themes[k].patterns) {
      if (haystack.find(pattern) != std::string::npos) {
        mask |= uint64_t{1} << k;
        break;
      }
    }
  }
  return mask;
}

std::set<std::string> ThemeLexicon::ids_from_mask(uint64_t mask) const {
  std::set<std::string> out;
  for (size_t k = 0; k < themes.size(); ++k) {
    if (mask & (uint64_t{1} << k)) out.insert(themes[k].id);
  }
  return out;
}

}  // namespace neutro
