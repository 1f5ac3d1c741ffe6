#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "redwords/word.hpp"

namespace redwords {

// A permutation of {1,...,degree} in one-line form.  Positions and values
// are 1-based throughout the public interface.  Immutable after
// construction.
class Permutation {
 public:
  Permutation() : images_{1} {}
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);
  // The adjacent transposition s_i swapping i and i+1, 1 <= i <= degree-1.
  static Permutation transposition(int degree, int i);
  // The order-reversing permutation (degree, degree-1, ..., 1).
  static Permutation longest_element(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int pos) const { return images_[pos - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;

  std::string to_one_line() const;
  std::string to_cycles() const;

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    std::size_t h = 14695981039346656037ull;
    for (int x : p.images()) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

// Minimum and maximum non-fixed points.  present is false exactly for the
// identity; otherwise min_pos = m and max_pos = M+1 with m < M+1, all
// positions outside [m, M+1] fixed.
struct NonFixedBounds {
  bool present = false;
  int min_pos = 0;
  int max_pos = 0;
};

// Accepts one-line notation ("3,4,2,1") or cycle notation ("(1 3)(2 4 5)").
// Cycle input takes its degree from max(largest symbol, degree_hint);
// symbols not mentioned are fixed points.  Throws ParseError with the
// offending position on malformed text, repeated symbols, or out-of-range
// symbols.
Permutation parse_permutation(const std::string& text,
                              std::optional<int> degree_hint = std::nullopt);

// Composition read from the right: result(x) = p(q(x)).
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);

// Number of inversion pairs; equals the minimal generator-word length.
int length(const Permutation& p);

NonFixedBounds non_fixed_bounds(const Permutation& p);

// True iff every reduced word of p contains the letter i, which holds
// exactly when {p(1),...,p(i)} != {1,...,i}.
bool letter_in_support(const Permutation& p, int i);

// Evaluates s_{i1} s_{i2} ... s_{il} with functions applied right to left.
Permutation apply_word(const Word& w, int degree);

}  // namespace redwords
