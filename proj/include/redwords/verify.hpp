#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "redwords/perm.hpp"
#include "redwords/report.hpp"
#include "redwords/words.hpp"

namespace redwords {

struct VerifyOptions {
  int workers = 0;  // 0 = hardware concurrency
  long long ceiling = kDefaultWordCeiling;
  int atom_budget_n = 9;   // largest n for atom scans
  int class_budget_n = 6;  // largest n for full R/C scans
};

// Counts of permutations in S_{n+1} by atom-set size, rows n = 1..n_max.
// The size-3 column is materialized even though it is always observed 0.
struct AtomTable {
  int n_max = 0;
  std::vector<std::array<std::uint64_t, 5>> rows;
};

AtomTable atom_table(int n_max, const VerifyOptions& opts = {});

std::string to_csv(const AtomTable& table);
std::string to_markdown(const AtomTable& table);

// Max |A| over S_{n+1} is at most 4.
VerificationReport check_bound(int n, const VerifyOptions& opts = {});

// No permutation of S_{n+1} has an atom count outside {0, 1, 2, 4}.
VerificationReport check_spectrum(int n, const VerifyOptions& opts = {});

// For every permutation of S_{n+1}: |C| <= |R|/2 + 1, the intermediate
// bound 2|C| <= |R| + |A|, and (identity aside) |A| = 0 implies
// 2|C| <= |R|.
VerificationReport check_class_inequality(int n, const VerifyOptions& opts = {});

// A permutation with atoms, with M - m >= 4, whose endpoint segments are
// not themselves atoms, owns a commutation class of size >= 4.
VerificationReport check_big_class(const Permutation& p, const VerifyOptions& opts = {});

// Over all consecutive words with letters in [1, max_letter] and length
// <= max_len: witness-freeness coincides with (reduced and commutation-free).
VerificationReport check_equivalence(int max_letter, int max_len,
                                     const VerifyOptions& opts = {});

// Finds a consecutive word passing all five spike-shape conditions that is
// nevertheless not reduced; holds iff one exists in the range.
VerificationReport check_tenner_insufficiency(int max_letter, int max_len,
                                              const VerifyOptions& opts = {});

// Samples random permutations of the given degree and compares the two atom
// enumeration routes wherever the brute-force route is feasible.
VerificationReport check_oracle_agreement(int degree, int samples, std::uint64_t seed,
                                          const VerifyOptions& opts = {});

}  // namespace redwords
