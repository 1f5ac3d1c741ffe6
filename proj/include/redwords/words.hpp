#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "redwords/perm.hpp"
#include "redwords/word.hpp"

namespace redwords {

using BigInt = boost::multiprecision::cpp_int;

// Refuse to materialize more words than this unless the caller raises it.
inline constexpr long long kDefaultWordCeiling = 10'000'000;

// True iff w is a reduced word of the permutation it evaluates to.
bool is_reduced(const Word& w, int degree);

// |R(p)| without materializing the set.  Memoized descent recursion.
BigInt count_reduced_words(const Permutation& p);

// All reduced words of p, lexicographically sorted.  The identity yields
// the singleton empty word.  Throws ResourceLimitError when |R(p)| exceeds
// the ceiling.
std::vector<Word> reduced_words(const Permutation& p,
                                long long ceiling = kDefaultWordCeiling);

// Words reachable by one swap of adjacent letters at distance >= 2, sorted.
// Empty exactly when w is formed by consecutive integers.
std::vector<Word> commutation_moves(const Word& w);

// Words reachable by one rewrite i(i+1)i <-> (i+1)i(i+1), sorted.
std::vector<Word> braid_moves(const Word& w);

// R(p) partitioned into commutation classes.  Each class is sorted and led
// by its lexicographically least member; classes are ordered by that
// representative.
struct ClassPartition {
  Permutation source;
  std::vector<std::vector<Word>> classes;

  std::size_t total_words() const;
  std::size_t singleton_count() const;
};

ClassPartition commutation_classes(const Permutation& p,
                                   long long ceiling = kDefaultWordCeiling);

// Every letter increased by k; a reduced word of the permutation padded
// with k leading fixed points.
Word shifted(const Word& w, int k);

// The word written backwards; evaluates to the inverse permutation.
Word reversed(const Word& w);

}  // namespace redwords
