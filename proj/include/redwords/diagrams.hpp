#pragma once

#include <optional>
#include <string>
#include <vector>

#include "redwords/word.hpp"

namespace redwords {

// True iff every pair of adjacent letters differs by exactly 1.  Words with
// this property are exactly the words admitting no commutation.
bool is_consecutive(const Word& w);

enum class SpikeKind { Pinnacle, Vale, Both };

struct Spike {
  int pos;    // 1-based position in the word
  int value;  // the letter
  SpikeKind kind;
};

// The spike sequence of a word formed by consecutive integers.  Endpoints
// always count as spikes; a single-letter word has one spike of kind Both.
// Interior kinds strictly alternate, and the letters between two
// consecutive spikes form a monotone unit-step run (a segment).
class LineDiagram {
 public:
  explicit LineDiagram(std::vector<Spike> spikes) : spikes_(std::move(spikes)) {}

  const std::vector<Spike>& spikes() const { return spikes_; }

  std::vector<int> pinnacles() const;  // P(a)
  std::vector<int> vales() const;      // V(a)
  std::vector<int> pv() const;         // PV(a)

 private:
  std::vector<Spike> spikes_;
};

LineDiagram line_diagram(const Word& w);

struct WedgeVee {
  bool wedge = false;
  bool wedge_strict = false;  // unique maximum
  bool vee = false;
  bool vee_strict = false;  // unique minimum
};

// Classifies an integer sequence as wedge (strictly increasing, plateau,
// strictly decreasing) and/or vee (the mirror shape).  Monotone sequences
// are both; a single element is both and strict.
WedgeVee classify_wedge_vee(const std::vector<int>& seq);

// The five necessary spike-shape conditions for a consecutive-integer word
// to admit no commutation and stay reduced.
struct TennerConditions {
  bool pinnacle_wedge = false;
  bool vale_vee = false;
  bool some_strict = false;        // P strict wedge and/or V strict vee
  bool extremes_adjacent = false;  // min and max of PV(a) adjacent in PV
  bool repeats_at_endpoint = false;

  bool all() const {
    return pinnacle_wedge && vale_vee && some_strict && extremes_adjacent &&
           repeats_at_endpoint;
  }
};

TennerConditions tenner_conditions(const Word& w);

enum class FactorKind { Repeated, Symmetric };

// Inclusive 1-based position range of a monotone unit-step run.
struct Run {
  int begin;
  int end;
};

// Evidence that a factor w[first_run.begin .. last_run.end] starts and ends
// with the same segment (Repeated: equal ordered endpoints; Symmetric:
// mirrored endpoints with a spike of w strictly between the runs).
struct FactorWitness {
  FactorKind kind;
  Run first_run;
  Run last_run;
  int low;   // smaller endpoint value of the segment
  int high;  // larger endpoint value
};

// Reference detectors: scan every factor w[p..q], take its first and last
// segments (factor endpoints count as spikes), and compare their ordered
// endpoint values.  Adjacent runs are allowed for Repeated, so words like
// "1212" are rejected even with an empty middle.
std::optional<FactorWitness> find_repeated_segment_factor(const Word& w);
std::optional<FactorWitness> find_symmetric_segment_factor(const Word& w);

// True iff w is consecutive and has no factor with repeated or symmetric
// segments, i.e. w is a one-element commutation class of its permutation.
bool is_atom_word(const Word& w);

// True iff the spike-gap sequence |pv[t+1]-pv[t]| is weakly monotone.  The
// empty word counts as an oscillation.
bool is_oscillation(const Word& w);

// Deterministic text renderings of the line diagram.
std::string render_ascii(const Word& w);
std::string render_svg(const Word& w);

// Incremental witness detector for extend-by-one-letter searches.  A word
// acquires a new repeated/symmetric witness only through factors ending at
// the new last position, so each push checks O(L) candidate factors.  The
// reference detectors above are the oracle for this class.
class SegmentWitnessScanner {
 public:
  // Appends the letter unless doing so creates a witness; returns whether
  // the letter was pushed.  The letter must keep the word consecutive.
  bool try_push(int letter);
  void pop();

  std::size_t size() const { return letters_.size(); }
  const std::vector<int>& letters() const { return letters_; }

 private:
  bool extension_has_witness() const;

  std::vector<int> letters_;
  std::vector<int> spikes_;  // 0-based positions, ascending
  std::vector<char> prev_spike_dropped_;
};

}  // namespace redwords
