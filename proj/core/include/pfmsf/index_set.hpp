#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pfmsf {

/// Strictly increasing set of integer indices.
class IndexSet {
 public:
  IndexSet() = default;
  IndexSet(std::initializer_list<int> elements);
  explicit IndexSet(std::vector<int> elements);

  /// {first, first+1, ..., last}; empty when last < first.
  static IndexSet range(int first, int last);

  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(int i) const;
  bool is_subset_of(const IndexSet& other) const;
  std::span<const int> elements() const { return elements_; }
  int operator[](std::size_t k) const { return elements_[k]; }
  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  /// universe \ *this. Throws DomainError unless *this is a subset.
  IndexSet complement(const IndexSet& universe) const;
  IndexSet without(int i) const;
  IndexSet united(const IndexSet& other) const;

  std::string to_string() const;

  friend bool operator==(const IndexSet&, const IndexSet&) = default;
  friend auto operator<=>(const IndexSet&, const IndexSet&) = default;

 private:
  std::vector<int> elements_;
};

/// All subsets of the universe with exactly k elements, in lexicographic order.
std::vector<IndexSet> subsets_of_size(const IndexSet& universe, std::size_t k);

/// Sign of the permutation that sorts the given sequence of distinct values,
/// via merge-counting of inversions.
int permutation_sign(std::span<const int> sequence);

/// Sign of the permutation taking K (sorted) to the concatenation I, J.
int split_sign(const IndexSet& whole, const IndexSet& first, const IndexSet& second);

/// sgn(complement, I): the split sign with the complement of I placed first.
int complement_sign(const IndexSet& subset, const IndexSet& universe);

/// Index in [-n, n] \ {0}. Negative indices follow the convention that -i
/// names position 2n+1-i.
class SignedIndex {
 public:
  SignedIndex(int value, int n);
  static SignedIndex from_position(int position, int n);

  int value() const { return value_; }
  int ambient() const { return n_; }
  /// 1-based position in [1, 2n].
  int position() const { return value_ > 0 ? value_ : 2 * n_ + 1 + value_; }
  SignedIndex negated() const { return SignedIndex(-value_, n_); }

  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;

 private:
  int value_;
  int n_;
};

}  // namespace pfmsf
