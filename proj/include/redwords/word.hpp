#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace redwords {

// A word over generator indices.  Type A words use letters 1..n, type B
// words use 0..n-1.  Serializes as a digit string when every letter fits a
// single digit ("21232"), otherwise comma-separated ("9,10,11").
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<int> letters) : letters_(std::move(letters)) {}

  static Word parse(const std::string& text);

  const std::vector<int>& letters() const { return letters_; }
  std::vector<int>& letters() { return letters_; }

  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::string str() const;

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;

 private:
  std::vector<int> letters_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : w.letters()) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace redwords
