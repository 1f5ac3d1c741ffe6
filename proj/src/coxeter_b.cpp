#include "redwords/coxeter_b.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "redwords/errors.hpp"
#include "redwords/parallel.hpp"

namespace redwords::typeb {

SignedPermutation::SignedPermutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty()) throw std::invalid_argument("signed permutation has rank 0");
  std::vector<char> seen(images_.size(), 0);
  for (int v : images_) {
    int a = std::abs(v);
    if (a < 1 || a > rank())
      throw std::invalid_argument("image " + std::to_string(v) + " out of range");
    if (seen[a - 1]) throw std::invalid_argument("image " + std::to_string(a) + " repeated");
    seen[a - 1] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int rank) {
  std::vector<int> img(rank);
  std::iota(img.begin(), img.end(), 1);
  return SignedPermutation{std::move(img)};
}

SignedPermutation SignedPermutation::generator(int rank, int i) {
  if (i < 0 || i >= rank)
    throw std::invalid_argument("generator index " + std::to_string(i) + " out of range");
  SignedPermutation p = identity(rank);
  if (i == 0)
    p.images_[0] = -1;
  else
    std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

SignedPermutation SignedPermutation::longest_element(int rank) {
  std::vector<int> img(rank);
  for (int k = 0; k < rank; ++k) img[k] = -(k + 1);
  return SignedPermutation{std::move(img)};
}

bool SignedPermutation::is_identity() const {
  for (int k = 0; k < rank(); ++k)
    if (images_[k] != k + 1) return false;
  return true;
}

std::string SignedPermutation::str() const {
  std::string out;
  for (int k = 0; k < rank(); ++k) {
    if (k > 0) out += ',';
    out += std::to_string(images_[k]);
  }
  return out;
}

SignedPermutation parse_signed(const std::string& text) {
  std::vector<int> values;
  std::size_t i = 0;
  const std::size_t n = text.size();
  for (;;) {
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t start = i;
    if (i < n && text[i] == '-') ++i;
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == start || (i == start + 1 && text[start] == '-'))
      throw ParseError("expected a signed integer", start);
    if (i - start > 8) throw ParseError("image out of range", start);
    values.push_back(std::stoi(text.substr(start, i - start)));
    while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    if (i >= n) break;
    if (text[i] != ',') throw ParseError("expected ','", i);
    ++i;
  }
  return SignedPermutation{std::move(values)};
}

SignedPermutation compose(const SignedPermutation& p, const SignedPermutation& q) {
  if (p.rank() != q.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<int> img(p.rank());
  for (int x = 1; x <= p.rank(); ++x) {
    int v = q(x);
    img[x - 1] = v > 0 ? p(v) : -p(-v);
  }
  return SignedPermutation{std::move(img)};
}

SignedPermutation inverse(const SignedPermutation& p) {
  std::vector<int> img(p.rank());
  for (int x = 1; x <= p.rank(); ++x) {
    int v = p(x);
    if (v > 0)
      img[v - 1] = x;
    else
      img[-v - 1] = -x;
  }
  return SignedPermutation{std::move(img)};
}

int length(const SignedPermutation& p) {
  int total = 0;
  const auto& img = p.images();
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j)
      if (img[i] > img[j]) ++total;
  for (int v : img)
    if (v < 0) total -= v;
  return total;
}

namespace {

// Right multiplication: s_0 negates position 1, s_i swaps positions i, i+1.
void apply_right(std::vector<int>& img, int letter) {
  if (letter == 0)
    img[0] = -img[0];
  else
    std::swap(img[letter - 1], img[letter]);
}

// s_i is a right descent iff it shortens: entry 1 negative for s_0, a
// signed descent at position i otherwise.
bool right_descent(const std::vector<int>& img, int letter) {
  if (letter == 0) return img[0] < 0;
  return img[letter - 1] > img[letter];
}

void enumerate_rec(std::vector<int>& img, int rank, int len, std::vector<int>& tail,
                   std::vector<Word>& out, long long ceiling) {
  if (len == 0) {
    if (static_cast<long long>(out.size()) >= ceiling)
      throw ResourceLimitError("reduced-word set exceeds ceiling of " + std::to_string(ceiling),
                               std::to_string(ceiling) + "+");
    std::vector<int> letters(tail.rbegin(), tail.rend());
    out.emplace_back(std::move(letters));
    return;
  }
  for (int i = 0; i < rank; ++i) {
    if (!right_descent(img, i)) continue;
    apply_right(img, i);
    tail.push_back(i);
    enumerate_rec(img, rank, len - 1, tail, out, ceiling);
    tail.pop_back();
    apply_right(img, i);
  }
}

}  // namespace

std::vector<Word> reduced_words(const SignedPermutation& p, long long ceiling) {
  std::vector<int> img = p.images();
  std::vector<int> tail;
  std::vector<Word> out;
  enumerate_rec(img, p.rank(), length(p), tail, out, ceiling);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Word> atoms(const SignedPermutation& p, long long ceiling) {
  std::vector<Word> out;
  for (Word& w : reduced_words(p, ceiling)) {
    if (w.empty()) continue;
    bool consecutive = true;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (std::abs(w[i] - w[i + 1]) > 1) consecutive = false;
    if (consecutive) out.push_back(std::move(w));
  }
  return out;
}

SignedPermutation apply_word(const Word& w, int rank) {
  std::vector<int> img(rank);
  std::iota(img.begin(), img.end(), 1);
  for (int letter : w) {
    if (letter < 0 || letter >= rank)
      throw std::invalid_argument("letter " + std::to_string(letter) + " out of range");
    apply_right(img, letter);
  }
  return SignedPermutation{std::move(img)};
}

std::vector<Word> braid_moves(const Word& w) {
  std::vector<Word> out;
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    if (w[i] >= 1 && w[i] == w[i + 2] && std::abs(w[i] - w[i + 1]) == 1 && w[i + 1] >= 1) {
      Word next = w;
      next.letters()[i] = w[i + 1];
      next.letters()[i + 1] = w[i];
      next.letters()[i + 2] = w[i + 1];
      out.push_back(std::move(next));
    }
  }
  for (std::size_t i = 0; i + 3 < w.size(); ++i) {
    bool alt0101 = w[i] == 0 && w[i + 1] == 1 && w[i + 2] == 0 && w[i + 3] == 1;
    bool alt1010 = w[i] == 1 && w[i + 1] == 0 && w[i + 2] == 1 && w[i + 3] == 0;
    if (alt0101 || alt1010) {
      Word next = w;
      for (int k = 0; k < 4; ++k) next.letters()[i + k] = 1 - w[i + k];
      out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<SignedPermutation> all_elements(int rank) {
  std::vector<int> base(rank);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << rank); ++mask) {
      std::vector<int> img = base;
      for (int k = 0; k < rank; ++k)
        if (mask & (1u << k)) img[k] = -img[k];
      out.emplace_back(std::move(img));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

VerificationReport scan(int rank, const BScanOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if (rank > opts.max_rank)
    throw BudgetError("type B scan budget is rank <= " + std::to_string(opts.max_rank));

  VerificationReport report{.check = "b-scan", .range = "B" + std::to_string(rank)};
  std::vector<SignedPermutation> elements = all_elements(rank);
  std::vector<std::size_t> counts(elements.size());
  parallel_for_index(static_cast<int>(elements.size()), opts.workers, [&](int idx) {
    counts[idx] = atoms(elements[idx], opts.ceiling).size();
  });

  std::size_t max_atoms = 0;
  std::size_t arg_max = 0;
  for (std::size_t idx = 0; idx < elements.size(); ++idx) {
    if (counts[idx] > max_atoms) {
      max_atoms = counts[idx];
      arg_max = idx;
    }
  }
  report.detail = "elements=" + std::to_string(elements.size()) + ";max=" +
                  std::to_string(max_atoms);
  report.witness = max_atoms > 0 ? elements[arg_max].str() : "-";
  report.verdict = max_atoms <= 4 ? Verdict::Holds : Verdict::Counterexample;
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace redwords::typeb
