#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "redwords/errors.hpp"
#include "redwords/perm.hpp"
#include "redwords/words.hpp"

using namespace redwords;

namespace {

std::vector<Permutation> symmetric_group(int degree) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.push_back(Permutation{img});
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

}  // namespace

TEST_CASE("parse one-line notation") {
  CHECK(parse_permutation("3,4,2,1").images() == std::vector<int>{3, 4, 2, 1});
  CHECK(parse_permutation("1,2,3") == Permutation::identity(3));
  CHECK(parse_permutation(" 3 , 4 , 2 , 1 ").images() == std::vector<int>{3, 4, 2, 1});
}

TEST_CASE("parse cycle notation") {
  CHECK(parse_permutation("(1 3)(2 4 5)", 5).images() == std::vector<int>{3, 4, 1, 5, 2});

  Permutation big = parse_permutation("(9 2 10 1 8 3)(4 7)(5 6)", 10);
  CHECK(big(1) == 8);
  CHECK(big(2) == 10);
  CHECK(big(10) == 1);
  CHECK(big.degree() == 10);

  // Unmentioned symbols are fixed points; degree comes from the hint.
  CHECK(parse_permutation("(1 2)", 4).images() == std::vector<int>{2, 1, 3, 4});
  CHECK(parse_permutation("()", 3) == Permutation::identity(3));
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_permutation("3,4,x,1"), ParseError);
  CHECK_THROWS_AS(parse_permutation("3,4,4,1"), ParseError);
  CHECK_THROWS_AS(parse_permutation("3,5,2,1"), ParseError);  // 5 out of range in S4
  CHECK_THROWS_AS(parse_permutation("(1 2)(2 3)"), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 2", 3), ParseError);
  CHECK_THROWS_AS(parse_permutation("(1 5)", 3), ParseError);  // above the hint

  try {
    parse_permutation("3,4,4,1");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("parsers reject garbage with typed errors only") {
  std::mt19937 rng(23);
  const std::string alphabet = "0123456789,()- \tx";
  for (int trial = 0; trial < 20000; ++trial) {
    std::string text;
    int len = static_cast<int>(rng() % 24);
    for (int k = 0; k < len; ++k) text += alphabet[rng() % alphabet.size()];
    try {
      parse_permutation(text);
    } catch (const ParseError&) {
    } catch (const std::invalid_argument&) {
    }
    try {
      Word::parse(text);
    } catch (const ParseError&) {
    }
  }
  CHECK_THROWS_AS(parse_permutation("99999999999999999999999999"), ParseError);
  CHECK_THROWS_AS(Word::parse("1,99999999999999999999999999"), ParseError);
}

TEST_CASE("parse round-trips both notations") {
  std::mt19937 rng(7);
  for (int degree = 1; degree <= 9; ++degree) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(img.begin(), img.end(), rng);
      Permutation p{img};
      CHECK(parse_permutation(p.to_one_line()) == p);
      CHECK(parse_permutation(p.to_cycles(), degree) == p);
    }
  }
  for (const Permutation& p : symmetric_group(4)) {
    CHECK(parse_permutation(p.to_one_line()) == p);
    CHECK(parse_permutation(p.to_cycles(), 4) == p);
  }
}

TEST_CASE("compose reads from the right") {
  int d = 4;
  auto s1 = Permutation::transposition(d, 1);
  auto s2 = Permutation::transposition(d, 2);
  auto s3 = Permutation::transposition(d, 3);
  CHECK(compose(s1, s1) == Permutation::identity(d));
  CHECK(compose(s2, s3).images() == std::vector<int>{1, 3, 4, 2});
  Permutation p = parse_permutation("3,4,2,1");
  CHECK(compose(p, Permutation::identity(d)) == p);
  CHECK_THROWS_AS(compose(p, Permutation::identity(5)), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(inverse(parse_permutation("3,4,1,5,2")).images() == std::vector<int>{3, 5, 1, 2, 4});
  CHECK(inverse(Permutation::identity(6)) == Permutation::identity(6));
  auto s2 = Permutation::transposition(5, 2);
  CHECK(inverse(s2) == s2);
  for (const Permutation& p : symmetric_group(5))
    CHECK(compose(p, inverse(p)) == Permutation::identity(5));
}

TEST_CASE("length counts inversions") {
  CHECK(length(parse_permutation("3,4,2,1")) == 5);
  CHECK(length(Permutation::identity(7)) == 0);
  CHECK(length(Permutation::longest_element(4)) == 6);
}

TEST_CASE("length properties") {
  std::mt19937 rng(11);
  std::vector<int> img(7);
  std::iota(img.begin(), img.end(), 1);
  auto random_perm = [&] {
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation{img};
  };
  for (int trial = 0; trial < 200; ++trial) {
    Permutation p = random_perm(), q = random_perm();
    CHECK(length(p) == length(inverse(p)));
    int lpq = length(compose(p, q));
    CHECK(lpq <= length(p) + length(q));
    CHECK((lpq - length(p) - length(q)) % 2 == 0);
  }
}

TEST_CASE("non-fixed bounds") {
  NonFixedBounds b = non_fixed_bounds(parse_permutation("3,2,5,4,1"));
  CHECK(b.present);
  CHECK(b.min_pos == 1);
  CHECK(b.max_pos == 5);

  CHECK_FALSE(non_fixed_bounds(Permutation::identity(4)).present);

  b = non_fixed_bounds(parse_permutation("1,3,2,4"));
  CHECK(b.min_pos == 2);
  CHECK(b.max_pos == 3);
}

TEST_CASE("non-fixed bounds cover every moved position") {
  for (int degree = 1; degree <= 6; ++degree) {
    for (const Permutation& p : symmetric_group(degree)) {
      NonFixedBounds b = non_fixed_bounds(p);
      if (!b.present) {
        CHECK(p.is_identity());
        continue;
      }
      CHECK(b.min_pos < b.max_pos);
      CHECK(p(b.min_pos) != b.min_pos);
      CHECK(p(b.max_pos) != b.max_pos);
      for (int x = 1; x <= degree; ++x)
        if (x < b.min_pos || x > b.max_pos) CHECK(p(x) == x);
    }
  }
}

TEST_CASE("letter_in_support") {
  CHECK(letter_in_support(parse_permutation("3,4,2,1"), 3));
  for (int i = 1; i <= 3; ++i) CHECK_FALSE(letter_in_support(Permutation::identity(4), i));
  CHECK_FALSE(letter_in_support(parse_permutation("2,1,3"), 2));
  CHECK_THROWS_AS(letter_in_support(Permutation::identity(4), 4), std::invalid_argument);
}

TEST_CASE("letter_in_support matches the words it predicts") {
  for (int degree = 2; degree <= 6; ++degree) {
    for (const Permutation& p : symmetric_group(degree)) {
      std::vector<Word> words = reduced_words(p);
      for (int i = 1; i < degree; ++i) {
        bool in_all = true;
        for (const Word& w : words)
          if (std::find(w.begin(), w.end(), i) == w.end()) in_all = false;
        bool in_some = false;
        for (const Word& w : words)
          if (std::find(w.begin(), w.end(), i) != w.end()) in_some = true;
        CHECK(letter_in_support(p, i) == in_all);
        CHECK(in_all == in_some);  // the letter is in every word or in none
      }
    }
  }
}

TEST_CASE("apply_word evaluates right to left") {
  CHECK(apply_word(Word::parse("21232"), 4).images() == std::vector<int>{3, 4, 2, 1});
  CHECK(apply_word(Word{}, 5) == Permutation::identity(5));
  CHECK(apply_word(Word::parse("12"), 3).images() == std::vector<int>{2, 3, 1});
  CHECK_THROWS_AS(apply_word(Word::parse("13"), 3), std::invalid_argument);
}
