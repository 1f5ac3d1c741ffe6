#include "redwords/diagrams.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>

namespace redwords {

bool is_consecutive(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (std::abs(w[i] - w[i + 1]) != 1) return false;
  return true;
}

namespace {

void require_consecutive(const Word& w) {
  if (!is_consecutive(w))
    throw std::invalid_argument("word " + w.str() + " is not formed by consecutive integers");
}

// 0-based spike test for interior positions of a consecutive word.
bool is_interior_spike(const std::vector<int>& a, std::size_t i) {
  return (a[i] > a[i - 1]) == (a[i] > a[i + 1]);
}

std::vector<int> spike_positions(const std::vector<int>& a) {
  std::vector<int> out;
  if (a.empty()) return out;
  out.push_back(0);
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (is_interior_spike(a, i)) out.push_back(static_cast<int>(i));
  if (a.size() > 1) out.push_back(static_cast<int>(a.size()) - 1);
  return out;
}

}  // namespace

std::vector<int> LineDiagram::pinnacles() const {
  std::vector<int> out;
  for (const Spike& s : spikes_)
    if (s.kind != SpikeKind::Vale) out.push_back(s.value);
  return out;
}

std::vector<int> LineDiagram::vales() const {
  std::vector<int> out;
  for (const Spike& s : spikes_)
    if (s.kind != SpikeKind::Pinnacle) out.push_back(s.value);
  return out;
}

std::vector<int> LineDiagram::pv() const {
  std::vector<int> out;
  out.reserve(spikes_.size());
  for (const Spike& s : spikes_) out.push_back(s.value);
  return out;
}

LineDiagram line_diagram(const Word& w) {
  require_consecutive(w);
  const auto& a = w.letters();
  std::vector<Spike> spikes;
  if (a.empty()) return LineDiagram{std::move(spikes)};
  if (a.size() == 1) {
    spikes.push_back({1, a[0], SpikeKind::Both});
    return LineDiagram{std::move(spikes)};
  }
  spikes.push_back({1, a[0], a[0] > a[1] ? SpikeKind::Pinnacle : SpikeKind::Vale});
  for (std::size_t i = 1; i + 1 < a.size(); ++i)
    if (is_interior_spike(a, i))
      spikes.push_back({static_cast<int>(i) + 1, a[i],
                        a[i] > a[i - 1] ? SpikeKind::Pinnacle : SpikeKind::Vale});
  std::size_t last = a.size() - 1;
  spikes.push_back({static_cast<int>(last) + 1, a[last],
                    a[last] > a[last - 1] ? SpikeKind::Pinnacle : SpikeKind::Vale});
  return LineDiagram{std::move(spikes)};
}

WedgeVee classify_wedge_vee(const std::vector<int>& seq) {
  if (seq.empty()) throw std::invalid_argument("empty sequence");
  const std::size_t n = seq.size();
  WedgeVee out;

  std::size_t a = 0;
  while (a + 1 < n && seq[a] < seq[a + 1]) ++a;
  std::size_t b = a;
  while (b + 1 < n && seq[b + 1] == seq[a]) ++b;
  bool down = true;
  for (std::size_t i = b; i + 1 < n; ++i)
    if (!(seq[i] > seq[i + 1])) down = false;
  out.wedge = down;
  out.wedge_strict = down && a == b;

  a = 0;
  while (a + 1 < n && seq[a] > seq[a + 1]) ++a;
  b = a;
  while (b + 1 < n && seq[b + 1] == seq[a]) ++b;
  bool up = true;
  for (std::size_t i = b; i + 1 < n; ++i)
    if (!(seq[i] < seq[i + 1])) up = false;
  out.vee = up;
  out.vee_strict = up && a == b;

  return out;
}

TennerConditions tenner_conditions(const Word& w) {
  LineDiagram diagram = line_diagram(w);
  TennerConditions out;
  if (w.empty()) {
    out = {true, true, true, true, true};
    return out;
  }
  const auto pins = diagram.pinnacles();
  const auto vals = diagram.vales();
  const auto pv = diagram.pv();

  WedgeVee pw = classify_wedge_vee(pins);
  WedgeVee vv = classify_wedge_vee(vals);
  out.pinnacle_wedge = pw.wedge;
  out.vale_vee = vv.vee;
  out.some_strict = pw.wedge_strict || vv.vee_strict;

  int lo = *std::min_element(pv.begin(), pv.end());
  int hi = *std::max_element(pv.begin(), pv.end());
  if (pv.size() < 2) {
    out.extremes_adjacent = true;
  } else {
    for (std::size_t t = 0; t + 1 < pv.size(); ++t)
      if ((pv[t] == lo && pv[t + 1] == hi) || (pv[t] == hi && pv[t + 1] == lo))
        out.extremes_adjacent = true;
  }

  const int last_pos = static_cast<int>(w.size());
  auto repeats_ok = [&](SpikeKind excluded) {
    std::map<int, std::vector<int>> occurrences;  // value -> spike positions
    for (const Spike& s : diagram.spikes())
      if (s.kind != excluded) occurrences[s.value].push_back(s.pos);
    for (const auto& [value, positions] : occurrences) {
      if (positions.size() < 2) continue;
      bool at_end = false;
      for (int pos : positions)
        if (pos == 1 || pos == last_pos) at_end = true;
      if (!at_end) return false;
    }
    return true;
  };
  out.repeats_at_endpoint = repeats_ok(SpikeKind::Vale) && repeats_ok(SpikeKind::Pinnacle);
  return out;
}

namespace {

// next_spike[i] = smallest spike position > i (or len), prev_spike[i] =
// largest spike position < i (or -1).
struct SpikeIndex {
  std::vector<int> next;
  std::vector<int> prev;

  explicit SpikeIndex(const std::vector<int>& a) {
    const int len = static_cast<int>(a.size());
    std::vector<char> spike(len, 0);
    for (int pos : spike_positions(a)) spike[pos] = 1;
    next.assign(len, len);
    prev.assign(len, -1);
    int last = len;
    for (int i = len - 1; i >= 0; --i) {
      next[i] = last;
      if (spike[i]) last = i;
    }
    last = -1;
    for (int i = 0; i < len; ++i) {
      prev[i] = last;
      if (spike[i]) last = i;
    }
  }
};

std::optional<FactorWitness> find_segment_factor(const Word& w, FactorKind kind) {
  require_consecutive(w);
  const auto& a = w.letters();
  const int len = static_cast<int>(a.size());
  if (len < 2) return std::nullopt;
  SpikeIndex idx(a);

  for (int p = 0; p + 1 < len; ++p) {
    for (int q = p + 1; q < len; ++q) {
      int t = std::min(idx.next[p], q);  // end of the factor's first segment
      int u = std::max(idx.prev[q], p);  // start of the factor's last segment
      if (t >= u) continue;              // runs share a position
      bool match;
      if (kind == FactorKind::Repeated) {
        match = a[p] == a[u] && a[t] == a[q];
      } else {
        // Mirrored runs, and a spike of w strictly between them.
        match = a[p] == a[q] && a[t] == a[u] && idx.next[t] < u;
      }
      if (match) {
        FactorWitness witness;
        witness.kind = kind;
        witness.first_run = {p + 1, t + 1};
        witness.last_run = {u + 1, q + 1};
        witness.low = std::min(a[p], a[t]);
        witness.high = std::max(a[p], a[t]);
        return witness;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<FactorWitness> find_repeated_segment_factor(const Word& w) {
  return find_segment_factor(w, FactorKind::Repeated);
}

std::optional<FactorWitness> find_symmetric_segment_factor(const Word& w) {
  return find_segment_factor(w, FactorKind::Symmetric);
}

bool is_atom_word(const Word& w) {
  if (!is_consecutive(w)) return false;
  return !find_repeated_segment_factor(w) && !find_symmetric_segment_factor(w);
}

bool is_oscillation(const Word& w) {
  std::vector<int> pv = line_diagram(w).pv();
  if (pv.size() < 3) return true;
  bool weakly_up = true, weakly_down = true;
  for (std::size_t t = 0; t + 2 < pv.size(); ++t) {
    int g1 = std::abs(pv[t] - pv[t + 1]);
    int g2 = std::abs(pv[t + 1] - pv[t + 2]);
    if (g1 > g2) weakly_up = false;
    if (g1 < g2) weakly_down = false;
  }
  return weakly_up || weakly_down;
}

std::string render_ascii(const Word& w) {
  require_consecutive(w);
  if (w.empty()) return "(empty)\n";
  const auto& a = w.letters();
  int lo = *std::min_element(a.begin(), a.end());
  int hi = *std::max_element(a.begin(), a.end());
  std::string out;
  for (int v = hi; v >= lo; --v) {
    std::string row;
    for (std::size_t i = 0; i < a.size(); ++i) row += (a[i] == v) ? '*' : ' ';
    while (!row.empty() && row.back() == ' ') row.pop_back();
    out += row;
    out += '\n';
  }
  return out;
}

std::string render_svg(const Word& w) {
  LineDiagram diagram = line_diagram(w);
  if (w.empty())
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1 1\">"
           "<!-- empty word --></svg>\n";
  const auto& a = w.letters();
  int lo = *std::min_element(a.begin(), a.end());
  int hi = *std::max_element(a.begin(), a.end());
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 " +
                    std::to_string(-(hi + 1)) + " " + std::to_string(w.size() + 1) + " " +
                    std::to_string(hi - lo + 2) + "\">\n";
  out += "<g transform=\"scale(1,-1)\" fill=\"none\" stroke=\"black\" stroke-width=\"0.06\">\n";
  out += "<polyline points=\"";
  bool first = true;
  for (const Spike& s : diagram.spikes()) {
    if (!first) out += ' ';
    out += std::to_string(s.pos) + "," + std::to_string(s.value);
    first = false;
  }
  out += "\"/>\n";
  for (const Spike& s : diagram.spikes())
    out += "<circle cx=\"" + std::to_string(s.pos) + "\" cy=\"" + std::to_string(s.value) +
           "\" r=\"0.12\"/>\n";
  out += "</g>\n</svg>\n";
  return out;
}

bool SegmentWitnessScanner::try_push(int letter) {
  const std::size_t old_len = letters_.size();
  if (old_len > 0 && std::abs(letter - letters_.back()) != 1)
    throw std::invalid_argument("extension breaks the consecutive-integers property");

  letters_.push_back(letter);
  bool dropped = false;
  if (old_len >= 2) {
    // The previous endpoint is interior now; it stays a spike only if it is
    // a local extremum.
    if (!is_interior_spike(letters_, old_len - 1)) {
      spikes_.pop_back();
      dropped = true;
    }
  }
  spikes_.push_back(static_cast<int>(old_len));

  if (extension_has_witness()) {
    spikes_.pop_back();
    if (dropped) spikes_.push_back(static_cast<int>(old_len) - 1);
    letters_.pop_back();
    return false;
  }
  prev_spike_dropped_.push_back(dropped ? 1 : 0);
  return true;
}

void SegmentWitnessScanner::pop() {
  spikes_.pop_back();
  if (prev_spike_dropped_.back()) spikes_.push_back(static_cast<int>(letters_.size()) - 2);
  prev_spike_dropped_.pop_back();
  letters_.pop_back();
}

// Checks factors ending at the new endpoint q = len-1.  Witnesses of older
// factors are unaffected by the extension: their runs and between-spikes
// live strictly left of the old endpoint, whose spike status is the only
// one that can change.
bool SegmentWitnessScanner::extension_has_witness() const {
  const int q = static_cast<int>(letters_.size()) - 1;
  if (q < 3) return false;  // shortest witness is i,i+1,i,i+1
  // spikes_ ends with q; the factor's last segment starts at the spike
  // before it.
  const int u = spikes_[spikes_.size() - 2];
  for (int p = 0; p < u; ++p) {
    auto it = std::upper_bound(spikes_.begin(), spikes_.end(), p);
    int t = std::min(*it, q);
    if (t >= u) continue;
    if (letters_[p] == letters_[u] && letters_[t] == letters_[q]) return true;  // repeated
    if (letters_[p] == letters_[q] && letters_[t] == letters_[u]) {
      auto spike_after_t = std::upper_bound(spikes_.begin(), spikes_.end(), t);
      if (*spike_after_t < u) return true;  // symmetric
    }
  }
  return false;
}

}  // namespace redwords
