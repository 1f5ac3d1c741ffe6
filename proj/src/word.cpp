#include "redwords/word.hpp"

#include <cctype>

#include "redwords/errors.hpp"

namespace redwords {

Word Word::parse(const std::string& text) {
  std::size_t begin = 0, end = text.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
  if (begin == end) return Word{};

  std::vector<int> letters;
  if (text.find(',') != std::string::npos) {
    std::size_t i = begin;
    while (i < end) {
      while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      std::size_t start = i;
      while (i < end && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (i == start) throw ParseError("expected a letter", i);
      if (i - start > 7) throw ParseError("letter out of range", start);
      letters.push_back(std::stoi(text.substr(start, i - start)));
      while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      if (i < end) {
        if (text[i] != ',') throw ParseError("expected ','", i);
        ++i;  // a trailing comma is a plain terminator
        while (i < end && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
      }
    }
  } else {
    for (std::size_t i = begin; i < end; ++i) {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw ParseError("expected a digit", i);
      letters.push_back(text[i] - '0');
    }
  }
  return Word{std::move(letters)};
}

std::string Word::str() const {
  bool digits = true;
  for (int x : letters_)
    if (x < 0 || x > 9) digits = false;
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  // A lone multi-digit letter needs a comma to mark the comma-separated
  // form, otherwise "10" would read back as the digit string 1,0.
  if (!digits && letters_.size() == 1) out += ',';
  return out;
}

}  // namespace redwords
