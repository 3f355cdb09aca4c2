#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cml {

/// Strictly increasing positive integers with ratio n_{k+1}/n_k >= 3, so
/// every term exceeds twice the sum of all earlier ones and signed-digit
/// representations are unique. Indices are 1-based throughout.
class LacunarySequence {
public:
  static LacunarySequence from_terms(std::vector<long long> terms);
  /// base^0, base^1, ..., base^(count-1); base >= 3 keeps the ratio bound.
  static LacunarySequence power(long long base, int count);

  int size() const { return static_cast<int>(terms_.size()); }
  long long term(int k) const;            // 1-based
  long long prefix_sum(int k) const;      // sum of terms 1..k, prefix_sum(0) = 0
  const std::vector<long long>& terms() const { return terms_; }

  /// Generator base when built by power(), 0 otherwise.
  long long generator_base() const { return base_; }

  /// Same sequence extended so that it has at least `count` terms (only for
  /// generator-backed sequences).
  LacunarySequence extended(int count) const;

  friend bool operator==(const LacunarySequence& a, const LacunarySequence& b) {
    return a.terms_ == b.terms_;
  }

private:
  std::vector<long long> terms_;
  std::vector<long long> prefix_;
  long long base_ = 0;
};

/// Signed-digit representation sum eps_k * n_k with eps_k in {-1, +1};
/// zero digits are omitted and indices increase.
struct SignedDigitRep {
  struct Digit {
    int index;  // 1-based into the sequence
    int sign;   // -1 or +1
  };
  std::vector<Digit> digits;

  long long reconstruct(const LacunarySequence& seq) const;
  bool empty() const { return digits.empty(); }
};

/// Sorted, strictly increasing 1-based indices into a LacunarySequence.
/// `declared_infinite` marks index families that conceptually continue
/// beyond the materialized prefix (Sierpinski members).
struct IndexSet {
  std::vector<int> indices;
  bool declared_infinite = false;

  static IndexSet from_indices(std::vector<int> indices, bool declared_infinite = false);
  bool contains(int k) const;
  friend IndexSet intersect(const IndexSet& a, const IndexSet& b);
};

/// The unique representation of n over seq, if one exists. Greedy from the
/// largest term: the ratio bound forces every digit choice.
std::optional<SignedDigitRep> represent(long long n, const LacunarySequence& seq);

/// { n : |n| <= window, n has a representation with digits supported in A }.
/// Sorted ascending; 0 (the empty sum) is always present.
std::vector<long long> tilde_set(const IndexSet& A, const LacunarySequence& seq, long long window);

/// The `count` prefix codes of a binary branch, code(s) = 2^|s| - 1 + value(s).
/// Two members share exactly (length of common prefix) elements.
IndexSet sierpinski_member(const std::string& branch, int count);

}  // namespace cml
