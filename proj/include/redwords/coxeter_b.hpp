#pragma once

#include <string>
#include <vector>

#include "redwords/report.hpp"
#include "redwords/word.hpp"
#include "redwords/words.hpp"

namespace redwords::typeb {

// A signed permutation of rank n: positions 1..n map to nonzero integers
// whose absolute values permute {1,...,n}.  Generators are indexed 0..n-1:
// s_0 flips the sign at position 1, s_i (i >= 1) swaps positions i, i+1.
// s_0 and s_1 have a braid relation of order 4; all other adjacent pairs
// have order 3, and generators at index distance >= 2 commute.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> images);

  static SignedPermutation identity(int rank);
  static SignedPermutation generator(int rank, int i);
  // The longest element negates every position: (-1, -2, ..., -n).
  static SignedPermutation longest_element(int rank);

  int rank() const { return static_cast<int>(images_.size()); }
  int operator()(int pos) const { return images_[pos - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  std::string str() const;  // "-2,1,-3"

  bool operator==(const SignedPermutation&) const = default;
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> images_;
};

SignedPermutation parse_signed(const std::string& text);

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q);
SignedPermutation inverse(const SignedPermutation& p);

// Minimal generator-word length: inversions of the signed one-line form
// plus the sum of the absolute values of the negated entries.
int length(const SignedPermutation& p);

// All minimal-length generator words (letters 0..n-1) evaluating to p,
// lexicographically sorted.
std::vector<Word> reduced_words(const SignedPermutation& p,
                                long long ceiling = kDefaultWordCeiling);

// Words of R(p) admitting no commutation: all adjacent letters at index
// distance <= 1.  The empty word is excluded, as in type A.
std::vector<Word> atoms(const SignedPermutation& p, long long ceiling = kDefaultWordCeiling);

// Evaluates a generator word right to left, like the type A convention.
SignedPermutation apply_word(const Word& w, int rank);

// Braid rewrites respecting the type B diagram: aba <-> bab for adjacent
// letters both >= 1, and 0101 <-> 1010 for the order-4 pair.
std::vector<Word> braid_moves(const Word& w);

// All 2^n n! elements in lexicographic image order.
std::vector<SignedPermutation> all_elements(int rank);

struct BScanOptions {
  int workers = 0;
  long long ceiling = kDefaultWordCeiling;
  int max_rank = 4;
};

// Max atom count over all of B_n; holds iff it is at most 4.
VerificationReport scan(int rank, const BScanOptions& opts = {});

}  // namespace redwords::typeb
