#include "hksym/text.hpp"

#include <cctype>
#include <utility>

namespace hksym {

std::string normalize_math_text(const std::string& s) {
  static const std::pair<std::string, std::string> table[] = {
      {"−", "-"}, {"⊕", "+"}, {"⟨", "<"}, {"⟩", ">"}, {"∗", "*"}};
  std::string out = s;
  for (const auto& [from, to] : table) {
    std::size_t pos = 0;
    while ((pos = out.find(from, pos)) != std::string::npos) {
      out.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  return out;
}

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

std::vector<std::string> split_top_level(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '<') ++depth;
    if (c == ')' || c == '>') --depth;
    if (c == sep && depth == 0) {
      parts.push_back(cur);
      cur.clear();
      continue;
    }
    cur.push_back(c);
  }
  parts.push_back(cur);
  return parts;
}

}  // namespace hksym
