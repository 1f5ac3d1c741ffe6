#include "redwords/words.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_map>

#include "redwords/errors.hpp"

namespace redwords {

bool is_reduced(const Word& w, int degree) {
  return length(apply_word(w, degree)) == static_cast<int>(w.size());
}

namespace {

// One-line images packed 4 bits per entry; valid for degree <= 16, which
// covers everything a count can visit in practice.
std::uint64_t pack_images(const std::vector<int>& img) {
  std::uint64_t key = 0;
  for (std::size_t k = 0; k < img.size(); ++k)
    key |= static_cast<std::uint64_t>(img[k] - 1) << (4 * k);
  return key;
}

BigInt count_rec(std::vector<int>& img, int len,
                 std::unordered_map<std::uint64_t, BigInt>& memo) {
  if (len == 0) return 1;
  auto key = pack_images(img);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::size_t i = 0; i + 1 < img.size(); ++i) {
    if (img[i] > img[i + 1]) {
      std::swap(img[i], img[i + 1]);
      total += count_rec(img, len - 1, memo);
      std::swap(img[i], img[i + 1]);
    }
  }
  memo.emplace(key, total);
  return total;
}

BigInt count_rec_wide(std::vector<int>& img, int len,
                      std::map<std::vector<int>, BigInt>& memo) {
  if (len == 0) return 1;
  auto it = memo.find(img);
  if (it != memo.end()) return it->second;
  BigInt total = 0;
  for (std::size_t i = 0; i + 1 < img.size(); ++i) {
    if (img[i] > img[i + 1]) {
      std::swap(img[i], img[i + 1]);
      total += count_rec_wide(img, len - 1, memo);
      std::swap(img[i], img[i + 1]);
    }
  }
  memo.emplace(img, total);
  return total;
}

void enumerate_rec(std::vector<int>& img, int len, std::vector<int>& tail,
                   std::vector<Word>& out) {
  if (len == 0) {
    std::vector<int> letters(tail.rbegin(), tail.rend());
    out.emplace_back(std::move(letters));
    return;
  }
  for (std::size_t i = 0; i + 1 < img.size(); ++i) {
    if (img[i] > img[i + 1]) {
      std::swap(img[i], img[i + 1]);
      tail.push_back(static_cast<int>(i) + 1);
      enumerate_rec(img, len - 1, tail, out);
      tail.pop_back();
      std::swap(img[i], img[i + 1]);
    }
  }
}

}  // namespace

BigInt count_reduced_words(const Permutation& p) {
  std::vector<int> img = p.images();
  int len = length(p);
  if (p.degree() <= 16) {
    std::unordered_map<std::uint64_t, BigInt> memo;
    return count_rec(img, len, memo);
  }
  std::map<std::vector<int>, BigInt> memo;
  return count_rec_wide(img, len, memo);
}

std::vector<Word> reduced_words(const Permutation& p, long long ceiling) {
  BigInt count = count_reduced_words(p);
  if (count > ceiling)
    throw ResourceLimitError("reduced-word set exceeds ceiling of " + std::to_string(ceiling),
                             count.str());
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(count));
  std::vector<int> img = p.images();
  std::vector<int> tail;
  enumerate_rec(img, length(p), tail, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> commutation_moves(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (std::abs(w[i] - w[i + 1]) >= 2) {
      Word next = w;
      std::swap(next.letters()[i], next.letters()[i + 1]);
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Word> braid_moves(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1) {
      Word next = w;
      next.letters()[i] = w[i + 1];
      next.letters()[i + 1] = w[i];
      next.letters()[i + 2] = w[i + 1];
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t ClassPartition::total_words() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.size();
  return total;
}

std::size_t ClassPartition::singleton_count() const {
  std::size_t total = 0;
  for (const auto& c : classes)
    if (c.size() == 1) ++total;
  return total;
}

namespace {

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

ClassPartition commutation_classes(const Permutation& p, long long ceiling) {
  std::vector<Word> words = reduced_words(p, ceiling);
  std::unordered_map<Word, int, WordHash> index;
  index.reserve(words.size() * 2);
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], static_cast<int>(k));

  std::vector<int> parent(words.size());
  std::iota(parent.begin(), parent.end(), 0);
  Word scratch;
  for (std::size_t k = 0; k < words.size(); ++k) {
    const Word& w = words[k];
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (std::abs(w[i] - w[i + 1]) < 2) continue;
      scratch = w;
      std::swap(scratch.letters()[i], scratch.letters()[i + 1]);
      int other = index.at(scratch);  // commutation preserves reducedness
      int a = find_root(parent, static_cast<int>(k));
      int b = find_root(parent, other);
      if (a != b) parent[b] = a;
    }
  }

  std::map<int, std::vector<Word>> groups;
  for (std::size_t k = 0; k < words.size(); ++k)
    groups[find_root(parent, static_cast<int>(k))].push_back(words[k]);

  ClassPartition part{p, {}};
  part.classes.reserve(groups.size());
  for (auto& [root, members] : groups) part.classes.push_back(std::move(members));
  // words was sorted, so each class is sorted and classes are already
  // ordered by their least member; keep it explicit anyway.
  std::sort(part.classes.begin(), part.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return part;
}

Word shifted(const Word& w, int k) {
  std::vector<int> letters = w.letters();
  for (int& x : letters) x += k;
  return Word{std::move(letters)};
}

Word reversed(const Word& w) {
  std::vector<int> letters(w.letters().rbegin(), w.letters().rend());
  return Word{std::move(letters)};
}

}  // namespace redwords
