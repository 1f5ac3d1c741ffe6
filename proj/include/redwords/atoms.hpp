#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "redwords/perm.hpp"
#include "redwords/word.hpp"
#include "redwords/words.hpp"

namespace redwords {

// A(p): the reduced words of p admitting no commutation.  The empty word is
// never counted, so the identity has no atoms.

// Filters the full reduced-word set; needs |R(p)| within the ceiling.
std::vector<Word> atoms_bruteforce(const Permutation& p,
                                   long long ceiling = kDefaultWordCeiling);

// Pruned DFS over consecutive words on the letters [m, M], never
// materializing R(p).  A prefix is abandoned as soon as it acquires a
// repeated/symmetric factor or stops left-dividing p.
std::vector<Word> atoms_search(const Permutation& p);

struct AtomScanOptions {
  int workers = 0;  // 0 = hardware concurrency
  int max_n = 9;
};

// Atom sets for every permutation of degree n+1, keyed by permutation;
// absent key = empty set.  Global pruned DFS over witness-free consecutive
// words on [1, n], sharded by starting letter.
std::map<Permutation, std::vector<Word>> scan_atoms(int n, const AtomScanOptions& opts = {});

// Histogram of |A| sizes over all of S_{n+1}; the 0 column is inferred from
// (n+1)!.
std::map<std::size_t, std::uint64_t> atom_histogram(int n,
                                                    const std::map<Permutation, std::vector<Word>>& scan);

// Newline-delimited scan records for resumable table runs: a versioned
// header, then "<one-line permutation>\t<sorted atom words>".
void save_atom_scan(const std::string& path, int n,
                    const std::map<Permutation, std::vector<Word>>& scan);
std::pair<int, std::map<Permutation, std::vector<Word>>> load_atom_scan(const std::string& path);

enum class AtomCase { SegUp, SegDown };

// The structural skeleton of an atom: which of the two endpoint segments it
// carries, and for non-oscillating atoms the flanking spike values i and j
// (which depend only on the permutation, not the word).
struct AtomStructure {
  AtomCase seg_case;
  int m = 0;
  int M = 0;
  bool oscillating = false;
  std::optional<int> i;
  std::optional<int> j;
};

// Requires a to be an atom of p.  The case is read off the word itself: a
// segment m^M (vale m then pinnacle M) gives SegUp, the mirror gives
// SegDown; words carrying both report SegUp.
AtomStructure atom_structure(const Permutation& p, const Word& a);

struct AtomReduction {
  Word word;
  Permutation target;
};

// The injective length-decreasing map on A(p) for non-oscillating SegUp
// atoms with j >= i: excises the hook (i-1)...m...M...i from the word and
// divides p by the 3-cycle gamma = (i m)(i M+1).  The result is an atom of
// the returned permutation.
AtomReduction atom_reduction(const Permutation& p, const Word& a);

enum class OscillationClass { All, None, Empty };

// Every atom of a permutation is an oscillation or none is; a mixed result
// would contradict that dichotomy and throws TheoremViolation.
OscillationClass classify_oscillation(const Permutation& p);

}  // namespace redwords
