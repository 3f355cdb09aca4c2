#include <doctest.h>

#include <map>
#include <random>

#include "cml/errors.hpp"
#include "cml/lacunary.hpp"

using namespace cml;

namespace {

// Independent oracle: every digit vector in {-1,0,1}^K, grouped by sum.
std::map<long long, std::vector<std::vector<int>>> all_digit_sums(const LacunarySequence& seq) {
  std::map<long long, std::vector<std::vector<int>>> out;
  int K = seq.size();
  std::vector<int> digits(static_cast<size_t>(K), -1);
  while (true) {
    long long sum = 0;
    for (int k = 1; k <= K; ++k) sum += digits[static_cast<size_t>(k - 1)] * seq.term(k);
    out[sum].push_back(digits);
    int i = 0;
    for (; i < K; ++i) {
      if (digits[static_cast<size_t>(i)] < 1) {
        ++digits[static_cast<size_t>(i)];
        break;
      }
      digits[static_cast<size_t>(i)] = -1;
    }
    if (i == K) break;
  }
  return out;
}

void check_against_oracle(const LacunarySequence& seq) {
  auto oracle = all_digit_sums(seq);
  long long total = seq.prefix_sum(seq.size());
  for (long long n = -total; n <= total; ++n) {
    auto it = oracle.find(n);
    auto rep = represent(n, seq);
    if (it == oracle.end()) {
      CHECK(!rep.has_value());
      continue;
    }
    // Uniqueness: the ratio bound forbids two distinct digit vectors.
    REQUIRE(it->second.size() == 1);
    REQUIRE(rep.has_value());
    CHECK(rep->reconstruct(seq) == n);
    const std::vector<int>& expected = it->second.front();
    std::vector<int> produced(static_cast<size_t>(seq.size()), 0);
    for (const auto& d : rep->digits) produced[static_cast<size_t>(d.index - 1)] = d.sign;
    CHECK(produced == expected);
  }
}

}  // namespace

TEST_SUITE("lacunary_sequence") {
  TEST_CASE("ratio bound enforced at construction") {
    CHECK_THROWS_AS(LacunarySequence::from_terms({1, 2}), invalid_input_error);
    CHECK_THROWS_AS(LacunarySequence::from_terms({4, 4}), invalid_input_error);
    CHECK_THROWS_AS(LacunarySequence::power(2, 4), invalid_input_error);
    LacunarySequence ok = LacunarySequence::from_terms({1, 3, 9, 27});
    CHECK(ok.size() == 4);
    CHECK(ok.prefix_sum(4) == 40);
  }

  TEST_CASE("power generator starts at exponent zero") {
    LacunarySequence s = LacunarySequence::power(4, 3);
    CHECK(s.terms() == std::vector<long long>{1, 4, 16});
    CHECK(s.extended(5).terms() == std::vector<long long>{1, 4, 16, 64, 256});
  }
}

TEST_SUITE("represent") {
  TEST_CASE("examples") {
    LacunarySequence s1 = LacunarySequence::from_terms({1, 3, 9, 27});
    auto r4 = represent(4, s1);
    REQUIRE(r4.has_value());
    REQUIRE(r4->digits.size() == 2);
    CHECK(r4->digits[0].index == 1);
    CHECK(r4->digits[0].sign == 1);
    CHECK(r4->digits[1].index == 2);
    CHECK(r4->digits[1].sign == 1);

    auto r0 = represent(0, s1);
    REQUIRE(r0.has_value());
    CHECK(r0->empty());

    LacunarySequence s2 = LacunarySequence::from_terms({1, 4, 16});
    CHECK(!represent(2, s2).has_value());

    auto r40 = represent(40, s1);
    REQUIRE(r40.has_value());
    CHECK(r40->digits.size() == 4);
    for (const auto& d : r40->digits) CHECK(d.sign == 1);
  }

  TEST_CASE("agrees with brute force on powered and mixed sequences") {
    check_against_oracle(LacunarySequence::power(3, 6));
    check_against_oracle(LacunarySequence::power(4, 5));
    check_against_oracle(LacunarySequence::from_terms({2, 7, 21, 67, 210}));
    check_against_oracle(LacunarySequence::from_terms({1, 5, 17, 61, 200}));
  }

  TEST_CASE("balanced ternary covers every integer") {
    LacunarySequence s = LacunarySequence::power(3, 6);
    long long bound = (s.prefix_sum(6));  // (3^6 - 1) / 2
    CHECK(bound == 364);
    for (long long n = -bound; n <= bound; ++n) {
      CHECK(represent(n, s).has_value());
    }
  }
}

TEST_SUITE("tilde_set") {
  TEST_CASE("examples") {
    LacunarySequence s = LacunarySequence::from_terms({1, 3, 9});
    CHECK(tilde_set(IndexSet::from_indices({1}), s, 5) == std::vector<long long>{-1, 0, 1});
    CHECK(tilde_set(IndexSet::from_indices({1, 2}), s, 10) ==
          std::vector<long long>{-4, -3, -2, -1, 0, 1, 2, 3, 4});

    LacunarySequence t = LacunarySequence::from_terms({1, 3, 9, 27});
    std::vector<long long> full = tilde_set(IndexSet::from_indices({1, 2, 3, 4}), t, 40);
    REQUIRE(full.size() == 81);
    CHECK(full.front() == -40);
    CHECK(full.back() == 40);
    for (size_t i = 1; i < full.size(); ++i) CHECK(full[i] == full[i - 1] + 1);
  }

  TEST_CASE("empty index set gives {0}") {
    LacunarySequence s = LacunarySequence::power(4, 4);
    CHECK(tilde_set(IndexSet::from_indices({}), s, 100) == std::vector<long long>{0});
  }

  TEST_CASE("lemma 15 exact form: tilde(A) n tilde(B) = tilde(A n B)") {
    std::mt19937 rng(20240812);
    LacunarySequence s = LacunarySequence::power(4, 10);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 60; ++trial) {
      std::vector<int> a, b;
      for (int k = 1; k <= 10; ++k) {
        if (coin(rng)) a.push_back(k);
        if (coin(rng)) b.push_back(k);
      }
      IndexSet A = IndexSet::from_indices(a), B = IndexSet::from_indices(b);
      long long W = 1 << 20;
      std::vector<long long> ta = tilde_set(A, s, W);
      std::vector<long long> tb = tilde_set(B, s, W);
      std::vector<long long> meet;
      std::set_intersection(ta.begin(), ta.end(), tb.begin(), tb.end(), std::back_inserter(meet));
      CHECK(meet == tilde_set(intersect(A, B), s, W));
    }
  }

  TEST_CASE("window filters the enumeration") {
    LacunarySequence s = LacunarySequence::from_terms({1, 3, 9});
    std::vector<long long> clipped = tilde_set(IndexSet::from_indices({1, 2, 3}), s, 4);
    CHECK(clipped == std::vector<long long>{-4, -3, -2, -1, 0, 1, 2, 3, 4});
  }
}

TEST_SUITE("sierpinski") {
  TEST_CASE("prefix codes") {
    IndexSet m = sierpinski_member("011", 3);
    CHECK(m.indices == std::vector<int>{1, 4, 10});
    CHECK(m.declared_infinite);

    CHECK(sierpinski_member("1", 1).indices == std::vector<int>{2});
  }

  TEST_CASE("intersection size equals common prefix length") {
    IndexSet x = sierpinski_member("00", 2);
    IndexSet y = sierpinski_member("01", 2);
    CHECK(intersect(x, y).indices == std::vector<int>{1});

    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coin(0, 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::string bx, by;
      for (int i = 0; i < 8; ++i) {
        bx += static_cast<char>('0' + coin(rng));
        by += static_cast<char>('0' + coin(rng));
      }
      size_t common = 0;
      while (common < 8 && bx[common] == by[common]) ++common;
      if (common == 8) continue;  // equal within the window
      IndexSet mx = sierpinski_member(bx, 8);
      IndexSet my = sierpinski_member(by, 8);
      CHECK(intersect(mx, my).indices.size() == common);
    }
  }

  TEST_CASE("input validation") {
    CHECK_THROWS_AS(sierpinski_member("01", 3), invalid_input_error);
    CHECK_THROWS_AS(sierpinski_member("0x", 2), invalid_input_error);
    CHECK_THROWS_AS(sierpinski_member("0", 0), invalid_input_error);
  }
}
