#include "redwords/atoms.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "redwords/diagrams.hpp"
#include "redwords/errors.hpp"
#include "redwords/parallel.hpp"

namespace redwords {

std::vector<Word> atoms_bruteforce(const Permutation& p, long long ceiling) {
  std::vector<Word> out;
  for (Word& w : reduced_words(p, ceiling))
    if (commutation_moves(w).empty() && !w.empty()) out.push_back(std::move(w));
  return out;
}

namespace {

// Left division state for the target permutation: remaining = u^{-1} p for
// the current prefix u.  Prepending s_c to u shortens remaining exactly
// when value c sits to the right of value c+1.
struct LeftDivision {
  std::vector<int> remaining;  // one-line images
  std::vector<int> pos_of;     // pos_of[v-1] = 1-based position of value v

  explicit LeftDivision(const Permutation& p) : remaining(p.images()), pos_of(p.degree()) {
    for (int pos = 1; pos <= p.degree(); ++pos) pos_of[remaining[pos - 1] - 1] = pos;
  }

  bool can_take(int c) const { return pos_of[c - 1] > pos_of[c]; }

  void flip(int c) {
    int pc = pos_of[c - 1], pc1 = pos_of[c];
    std::swap(remaining[pc - 1], remaining[pc1 - 1]);
    std::swap(pos_of[c - 1], pos_of[c]);
  }
};

void search_rec(int last, int lo, int hi, std::size_t target_len, SegmentWitnessScanner& scanner,
                LeftDivision& div, std::vector<Word>& out) {
  if (scanner.size() == target_len) {
    out.emplace_back(scanner.letters());
    return;
  }
  for (int c : {last - 1, last + 1}) {
    if (c < lo || c > hi || !div.can_take(c)) continue;
    if (!scanner.try_push(c)) continue;
    div.flip(c);
    search_rec(c, lo, hi, target_len, scanner, div, out);
    div.flip(c);
    scanner.pop();
  }
}

}  // namespace

std::vector<Word> atoms_search(const Permutation& p) {
  NonFixedBounds bounds = non_fixed_bounds(p);
  std::vector<Word> out;
  if (!bounds.present) return out;
  const int lo = bounds.min_pos, hi = bounds.max_pos - 1;
  const auto target_len = static_cast<std::size_t>(length(p));

  SegmentWitnessScanner scanner;
  LeftDivision div(p);
  for (int c = lo; c <= hi; ++c) {
    if (!div.can_take(c)) continue;
    scanner.try_push(c);  // a single letter never carries a witness
    div.flip(c);
    search_rec(c, lo, hi, target_len, scanner, div, out);
    div.flip(c);
    scanner.pop();
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Bucket = std::unordered_map<Permutation, std::vector<Word>, PermutationHash>;

void scan_rec(int c, int n, std::vector<int>& img, SegmentWitnessScanner& scanner,
              Bucket& bucket) {
  bucket[Permutation{img}].emplace_back(scanner.letters());
  for (int next : {c - 1, c + 1}) {
    if (next < 1 || next > n) continue;
    if (!scanner.try_push(next)) continue;
    if (img[next - 1] > img[next])
      throw TheoremViolation("witness-free word " + Word{scanner.letters()}.str() +
                             " is not reduced");
    std::swap(img[next - 1], img[next]);
    scan_rec(next, n, img, scanner, bucket);
    std::swap(img[next - 1], img[next]);
    scanner.pop();
  }
}

}  // namespace

std::map<Permutation, std::vector<Word>> scan_atoms(int n, const AtomScanOptions& opts) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (n > opts.max_n)
    throw BudgetError("atom scan budget is n <= " + std::to_string(opts.max_n) + ", got n = " +
                      std::to_string(n));

  std::vector<Bucket> shards(n);
  parallel_for_index(n, opts.workers, [&](int task) {
    int root = task + 1;
    std::vector<int> img(n + 1);
    std::iota(img.begin(), img.end(), 1);
    SegmentWitnessScanner scanner;
    scanner.try_push(root);
    std::swap(img[root - 1], img[root]);
    scan_rec(root, n, img, scanner, shards[task]);
  });

  std::map<Permutation, std::vector<Word>> merged;
  for (Bucket& shard : shards)
    for (auto& [perm, words] : shard) {
      auto& slot = merged[perm];
      slot.insert(slot.end(), std::make_move_iterator(words.begin()),
                  std::make_move_iterator(words.end()));
    }
  for (auto& [perm, words] : merged) std::sort(words.begin(), words.end());
  return merged;
}

std::map<std::size_t, std::uint64_t> atom_histogram(
    int n, const std::map<Permutation, std::vector<Word>>& scan) {
  std::map<std::size_t, std::uint64_t> hist;
  std::uint64_t factorial = 1;
  for (int k = 2; k <= n + 1; ++k) factorial *= static_cast<std::uint64_t>(k);
  for (const auto& [perm, words] : scan) ++hist[words.size()];
  std::uint64_t with_atoms = scan.size();
  hist[0] = factorial - with_atoms;
  return hist;
}

namespace {
constexpr const char* kScanMagic = "# redwords-atom-scan v1 n=";
}

void save_atom_scan(const std::string& path, int n,
                    const std::map<Permutation, std::vector<Word>>& scan) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << kScanMagic << n << "\n";
  for (const auto& [perm, words] : scan) {
    out << perm.to_one_line() << '\t';
    for (std::size_t k = 0; k < words.size(); ++k) {
      if (k > 0) out << ' ';
      out << words[k].str();
    }
    out << '\n';
  }
}

std::pair<int, std::map<Permutation, std::vector<Word>>> load_atom_scan(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string header;
  std::getline(in, header);
  if (header.rfind(kScanMagic, 0) != 0)
    throw std::runtime_error(path + " is not an atom-scan file (bad header)");
  int n = std::stoi(header.substr(std::string(kScanMagic).size()));

  std::map<Permutation, std::vector<Word>> scan;
  std::string line;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto tab = line.find('\t');
    if (tab == std::string::npos)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": missing tab");
    Permutation perm = parse_permutation(line.substr(0, tab));
    if (perm.degree() != n + 1)
      throw std::runtime_error(path + ":" + std::to_string(line_no) + ": wrong degree");
    std::vector<Word> words;
    std::size_t start = tab + 1;
    while (start <= line.size()) {
      auto space = line.find(' ', start);
      std::string token = line.substr(start, space == std::string::npos ? space : space - start);
      if (!token.empty()) {
        Word w = Word::parse(token);
        if (!is_atom_word(w) || apply_word(w, n + 1) != perm)
          throw std::runtime_error(path + ":" + std::to_string(line_no) + ": corrupt atom " +
                                   token);
        words.push_back(std::move(w));
      }
      if (space == std::string::npos) break;
      start = space + 1;
    }
    scan.emplace(std::move(perm), std::move(words));
  }
  return {n, std::move(scan)};
}

namespace {

bool spike_is_vale(const Spike& s) { return s.kind != SpikeKind::Pinnacle; }
bool spike_is_pinnacle(const Spike& s) { return s.kind != SpikeKind::Vale; }

}  // namespace

AtomStructure atom_structure(const Permutation& p, const Word& a) {
  if (a.empty()) throw std::invalid_argument("the empty word is not an atom");
  if (!is_atom_word(a))
    throw std::invalid_argument("word " + a.str() + " is not a one-element commutation class");
  if (apply_word(a, p.degree()) != p)
    throw std::invalid_argument("word " + a.str() + " does not evaluate to " + p.to_one_line());

  NonFixedBounds bounds = non_fixed_bounds(p);
  AtomStructure s;
  s.m = bounds.min_pos;
  s.M = bounds.max_pos - 1;
  s.oscillating = is_oscillation(a);

  const auto spikes = line_diagram(a).spikes();
  int up_at = -1, down_at = -1;
  for (std::size_t k = 0; k + 1 < spikes.size(); ++k) {
    if (spike_is_vale(spikes[k]) && spikes[k].value == s.m &&
        spike_is_pinnacle(spikes[k + 1]) && spikes[k + 1].value == s.M && up_at < 0)
      up_at = static_cast<int>(k);
    if (spike_is_pinnacle(spikes[k]) && spikes[k].value == s.M &&
        spike_is_vale(spikes[k + 1]) && spikes[k + 1].value == s.m && down_at < 0)
      down_at = static_cast<int>(k);
  }
  if (spikes.size() == 1) {
    // Single-letter atom: p is the transposition (m m+1), both segment
    // readings degenerate; report the ascending one.
    s.seg_case = AtomCase::SegUp;
    return s;
  }
  if (up_at < 0 && down_at < 0)
    throw TheoremViolation("atom " + a.str() + " carries neither endpoint segment");
  s.seg_case = up_at >= 0 ? AtomCase::SegUp : AtomCase::SegDown;

  if (!s.oscillating) {
    int k = s.seg_case == AtomCase::SegUp ? up_at : down_at;
    if (k == 0 || k + 2 >= static_cast<int>(spikes.size()))
      throw TheoremViolation("non-oscillating atom " + a.str() +
                             " has its endpoint segment at a word endpoint");
    if (s.seg_case == AtomCase::SegUp) {
      s.j = spikes[k - 1].value;  // pinnacle flanking the vale m
      s.i = spikes[k + 2].value;  // vale flanking the pinnacle M
    } else {
      s.i = spikes[k - 1].value;  // vale flanking the pinnacle M
      s.j = spikes[k + 2].value;  // pinnacle flanking the vale m
    }
  }
  return s;
}

AtomReduction atom_reduction(const Permutation& p, const Word& a) {
  AtomStructure s = atom_structure(p, a);
  if (s.oscillating) throw std::invalid_argument("atom " + a.str() + " is an oscillation");
  if (s.seg_case != AtomCase::SegUp)
    throw std::invalid_argument("reduction applies to the ascending-segment case");
  const int i = *s.i, j = *s.j;
  if (j < i) throw std::invalid_argument("reduction requires j >= i");

  const auto spikes = line_diagram(a).spikes();
  int k = -1;
  for (std::size_t t = 0; t + 1 < spikes.size(); ++t)
    if (spike_is_vale(spikes[t]) && spikes[t].value == s.m && spike_is_pinnacle(spikes[t + 1]) &&
        spikes[t + 1].value == s.M) {
      k = static_cast<int>(t);
      break;
    }
  const int pos_j = spikes[k - 1].pos;  // pinnacle j
  const int pos_i = spikes[k + 2].pos;  // vale i

  std::vector<int> letters(a.begin(), a.begin() + (pos_j - 1));
  for (int v = j; v >= i; --v) letters.push_back(v);
  letters.insert(letters.end(), a.begin() + pos_i, a.end());
  Word word{std::move(letters)};

  std::vector<int> gamma_img(p.degree());
  std::iota(gamma_img.begin(), gamma_img.end(), 1);
  gamma_img[s.m - 1] = i;
  gamma_img[i - 1] = s.M + 1;
  gamma_img[s.M] = s.m;
  Permutation target = compose(p, inverse(Permutation{std::move(gamma_img)}));

  if (!is_atom_word(word) || apply_word(word, p.degree()) != target)
    throw TheoremViolation("reduction of " + a.str() + " is not an atom of the target");
  return {std::move(word), std::move(target)};
}

OscillationClass classify_oscillation(const Permutation& p) {
  std::vector<Word> atoms = atoms_search(p);
  if (atoms.empty()) return OscillationClass::Empty;
  std::size_t oscillating = 0;
  for (const Word& a : atoms)
    if (is_oscillation(a)) ++oscillating;
  if (oscillating == atoms.size()) return OscillationClass::All;
  if (oscillating == 0) return OscillationClass::None;
  throw TheoremViolation("permutation " + p.to_one_line() +
                         " mixes oscillating and non-oscillating one-element classes");
}

}  // namespace redwords
