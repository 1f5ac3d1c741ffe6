#include "redwords/perm.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

#include "redwords/errors.hpp"

namespace redwords {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("permutation has degree 0");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    if (v < 1 || v > degree())
      throw std::invalid_argument("image " + std::to_string(v) + " out of range");
    if (seen[v - 1]) throw std::invalid_argument("image " + std::to_string(v) + " repeated");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  return Permutation{std::move(img)};
}

Permutation Permutation::transposition(int degree, int i) {
  if (i < 1 || i >= degree)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  Permutation p = identity(degree);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::longest_element(int degree) {
  std::vector<int> img(degree);
  for (int k = 0; k < degree; ++k) img[k] = degree - k;
  return Permutation{std::move(img)};
}

bool Permutation::is_identity() const {
  for (int k = 0; k < degree(); ++k)
    if (images_[k] != k + 1) return false;
  return true;
}

std::string Permutation::to_one_line() const {
  std::string out;
  for (int k = 0; k < degree(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(images_[k]);
  }
  return out;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<char> seen(images_.size(), 0);
  for (int start = 1; start <= degree(); ++start) {
    if (seen[start - 1] || images_[start - 1] == start) continue;
    out += '(';
    int x = start;
    bool first = true;
    do {
      seen[x - 1] = 1;
      if (!first) out += ' ';
      out += std::to_string(x);
      first = false;
      x = images_[x - 1];
    } while (x != start);
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

namespace {

// Shared scanner for the two permutation grammars.
struct Scanner {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  int read_int() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected an integer", pos);
    if (pos - start > 7) throw ParseError("symbol out of range", start);
    long v = std::stol(text.substr(start, pos - start));
    if (v < 1 || v > 1'000'000) throw ParseError("symbol out of range", start);
    return static_cast<int>(v);
  }
};

Permutation parse_one_line(const std::string& text) {
  Scanner s{text};
  std::vector<int> values;
  std::vector<std::size_t> positions;
  for (;;) {
    s.skip_space();
    positions.push_back(s.pos);
    values.push_back(s.read_int());
    if (s.done()) break;
    if (text[s.pos] != ',') throw ParseError("expected ','", s.pos);
    ++s.pos;
  }
  int degree = static_cast<int>(values.size());
  std::vector<char> seen(degree, 0);
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (values[k] > degree) throw ParseError("symbol out of range", positions[k]);
    if (seen[values[k] - 1]) throw ParseError("repeated symbol", positions[k]);
    seen[values[k] - 1] = 1;
  }
  return Permutation{std::move(values)};
}

Permutation parse_cycles(const std::string& text, std::optional<int> degree_hint) {
  Scanner s{text};
  std::vector<std::vector<int>> cycles;
  std::vector<std::size_t> symbol_pos;
  std::vector<int> symbols;
  int max_symbol = 0;
  while (!s.done()) {
    if (text[s.pos] != '(') throw ParseError("expected '('", s.pos);
    ++s.pos;
    std::vector<int> cycle;
    for (;;) {
      s.skip_space();
      if (s.pos >= text.size()) throw ParseError("unterminated cycle", text.size() - 1);
      if (text[s.pos] == ')') {
        ++s.pos;
        break;
      }
      symbol_pos.push_back(s.pos);
      int v = s.read_int();
      cycle.push_back(v);
      symbols.push_back(v);
      max_symbol = std::max(max_symbol, v);
    }
    cycles.push_back(std::move(cycle));
  }
  int degree = std::max(max_symbol, degree_hint.value_or(1));
  std::vector<char> seen(degree, 0);
  for (std::size_t k = 0; k < symbols.size(); ++k) {
    if (degree_hint && symbols[k] > *degree_hint)
      throw ParseError("symbol out of range", symbol_pos[k]);
    if (seen[symbols[k] - 1]) throw ParseError("repeated symbol", symbol_pos[k]);
    seen[symbols[k] - 1] = 1;
  }
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  for (const auto& cycle : cycles)
    for (std::size_t k = 0; k < cycle.size(); ++k)
      img[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
  return Permutation{std::move(img)};
}

}  // namespace

Permutation parse_permutation(const std::string& text, std::optional<int> degree_hint) {
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  if (first >= text.size()) throw ParseError("empty permutation", 0);
  if (text[first] == '(') return parse_cycles(text, degree_hint);
  return parse_one_line(text);
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()));
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[x - 1] = p(q(x));
  return Permutation{std::move(img)};
}

Permutation inverse(const Permutation& p) {
  std::vector<int> img(p.degree());
  for (int x = 1; x <= p.degree(); ++x) img[p(x) - 1] = x;
  return Permutation{std::move(img)};
}

int length(const Permutation& p) {
  int count = 0;
  const auto& img = p.images();
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++count;
  return count;
}

NonFixedBounds non_fixed_bounds(const Permutation& p) {
  NonFixedBounds b;
  for (int x = 1; x <= p.degree(); ++x) {
    if (p(x) != x) {
      if (!b.present) b.min_pos = x;
      b.max_pos = x;
      b.present = true;
    }
  }
  return b;
}

bool letter_in_support(const Permutation& p, int i) {
  if (i < 1 || i >= p.degree())
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  // {p(1),...,p(i)} == {1,...,i} iff max of the prefix is i.
  int prefix_max = 0;
  for (int x = 1; x <= i; ++x) prefix_max = std::max(prefix_max, p(x));
  return prefix_max != i;
}

Permutation apply_word(const Word& w, int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  for (int letter : w) {
    if (letter < 1 || letter >= degree)
      throw std::invalid_argument("letter " + std::to_string(letter) + " out of range");
    // Right multiplication by s_i swaps positions i and i+1.
    std::swap(img[letter - 1], img[letter]);
  }
  return Permutation{std::move(img)};
}

}  // namespace redwords
