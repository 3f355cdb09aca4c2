#include "cml/lacunary.hpp"

#include <algorithm>
#include <cstdlib>

#include "cml/errors.hpp"

namespace cml {

namespace {

constexpr long long kTermCap = (1LL << 62);

}  // namespace

LacunarySequence LacunarySequence::from_terms(std::vector<long long> terms) {
  LacunarySequence s;
  long long prev = 0, sum = 0;
  s.prefix_.push_back(0);
  for (long long t : terms) {
    if (t <= 0) throw invalid_input_error("lacunary terms must be positive");
    if (prev > 0 && t < 3 * prev) throw invalid_input_error("lacunary ratio below 3");
    if (t <= 2 * sum) throw invalid_input_error("lacunary term not above twice the prefix sum");
    if (sum > kTermCap - t) throw resource_limit_error("lacunary sequence exceeds 64-bit range");
    sum += t;
    prev = t;
    s.prefix_.push_back(sum);
  }
  s.terms_ = std::move(terms);
  return s;
}

LacunarySequence LacunarySequence::power(long long base, int count) {
  if (base < 3) throw invalid_input_error("power base must be at least 3");
  if (count < 0) throw invalid_input_error("negative term count");
  std::vector<long long> terms;
  long long t = 1;
  for (int k = 0; k < count; ++k) {
    terms.push_back(t);
    if (k + 1 < count) {
      if (t > kTermCap / base) throw resource_limit_error("power sequence exceeds 64-bit range");
      t *= base;
    }
  }
  LacunarySequence s = from_terms(std::move(terms));
  s.base_ = base;
  return s;
}

long long LacunarySequence::term(int k) const {
  if (k < 1 || k > size()) throw invalid_input_error("lacunary index out of range");
  return terms_[static_cast<size_t>(k - 1)];
}

long long LacunarySequence::prefix_sum(int k) const {
  if (k < 0 || k > size()) throw invalid_input_error("lacunary prefix index out of range");
  return prefix_[static_cast<size_t>(k)];
}

LacunarySequence LacunarySequence::extended(int count) const {
  if (count <= size()) return *this;
  if (base_ == 0) throw invalid_input_error("cannot extend a sequence without a generator");
  return power(base_, count);
}

long long SignedDigitRep::reconstruct(const LacunarySequence& seq) const {
  long long v = 0;
  for (const auto& d : digits) v += d.sign * seq.term(d.index);
  return v;
}

IndexSet IndexSet::from_indices(std::vector<int> indices, bool declared_infinite) {
  std::sort(indices.begin(), indices.end());
  for (size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] < 1) throw invalid_input_error("index sets are 1-based");
    if (i > 0 && indices[i] == indices[i - 1]) throw invalid_input_error("index set with duplicates");
  }
  return {std::move(indices), declared_infinite};
}

bool IndexSet::contains(int k) const {
  return std::binary_search(indices.begin(), indices.end(), k);
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  std::vector<int> out;
  std::set_intersection(a.indices.begin(), a.indices.end(), b.indices.begin(), b.indices.end(),
                        std::back_inserter(out));
  return {std::move(out), a.declared_infinite && b.declared_infinite && a.indices == b.indices};
}

std::optional<SignedDigitRep> represent(long long n, const LacunarySequence& seq) {
  SignedDigitRep rep;
  long long r = n;
  for (int k = seq.size(); k >= 1; --k) {
    long long below = seq.prefix_sum(k - 1);
    long long mag = r < 0 ? -r : r;
    if (mag > seq.prefix_sum(k)) return std::nullopt;  // out of reach already
    if (mag > below) {
      int sign = r > 0 ? 1 : -1;
      rep.digits.push_back({k, sign});
      r -= sign * seq.term(k);
    }
  }
  if (r != 0) return std::nullopt;
  std::reverse(rep.digits.begin(), rep.digits.end());
  return rep;
}

namespace {

void enumerate_sums(const LacunarySequence& seq, const std::vector<int>& idx, size_t at,
                    long long partial, long long remaining, long long window,
                    std::vector<long long>& out) {
  long long mag = partial < 0 ? -partial : partial;
  if (mag - remaining > window) return;  // cannot re-enter the window
  if (at == idx.size()) {
    if (mag <= window) out.push_back(partial);
    return;
  }
  long long t = seq.term(idx[at]);
  long long rest = remaining - t;
  enumerate_sums(seq, idx, at + 1, partial - t, rest, window, out);
  enumerate_sums(seq, idx, at + 1, partial, rest, window, out);
  enumerate_sums(seq, idx, at + 1, partial + t, rest, window, out);
}

}  // namespace

std::vector<long long> tilde_set(const IndexSet& A, const LacunarySequence& seq, long long window) {
  if (window < 0) throw invalid_input_error("window must be nonnegative");
  long long remaining = 0;
  for (int k : A.indices) {
    if (k > seq.size()) throw invalid_input_error("index set exceeds the sequence length");
    remaining += seq.term(k);
  }
  std::vector<long long> out;
  // Descending index order makes the window pruning effective early.
  std::vector<int> idx(A.indices.rbegin(), A.indices.rend());
  enumerate_sums(seq, idx, 0, 0, remaining, window, out);
  std::sort(out.begin(), out.end());
  return out;
}

IndexSet sierpinski_member(const std::string& branch, int count) {
  if (count < 1) throw invalid_input_error("sierpinski member needs count >= 1");
  if (static_cast<int>(branch.size()) < count) {
    throw invalid_input_error("branch shorter than the requested count");
  }
  if (count > 30) throw resource_limit_error("sierpinski codes exceed the index range");
  std::vector<int> codes;
  long long value = 0;
  for (int i = 0; i < count; ++i) {
    char c = branch[static_cast<size_t>(i)];
    if (c != '0' && c != '1') throw invalid_input_error("branch must be a string of 0s and 1s");
    value = value * 2 + (c - '0');
    long long code = (1LL << (i + 1)) - 1 + value;
    codes.push_back(static_cast<int>(code));
  }
  return IndexSet::from_indices(std::move(codes), /*declared_infinite=*/true);
}

}  // namespace cml
