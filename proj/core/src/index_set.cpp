#include "pfmsf/index_set.hpp"

#include <algorithm>

#include "pfmsf/errors.hpp"

namespace pfmsf {

namespace {

void require_increasing(const std::vector<int>& v) {
  for (std::size_t k = 1; k < v.size(); ++k) {
    if (v[k - 1] >= v[k]) throw DomainError("index set elements must be strictly increasing");
  }
}

long count_inversions(std::vector<int>& v, std::vector<int>& scratch, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return 0;
  const std::size_t mid = lo + (hi - lo) / 2;
  long count = count_inversions(v, scratch, lo, mid) + count_inversions(v, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    if (v[j] < v[i]) {
      count += static_cast<long>(mid - i);
      scratch[k++] = v[j++];
    } else {
      scratch[k++] = v[i++];
    }
  }
  while (i < mid) scratch[k++] = v[i++];
  while (j < hi) scratch[k++] = v[j++];
  std::copy(scratch.begin() + static_cast<long>(lo), scratch.begin() + static_cast<long>(hi),
            v.begin() + static_cast<long>(lo));
  return count;
}

}  // namespace

IndexSet::IndexSet(std::initializer_list<int> elements) : elements_(elements) { require_increasing(elements_); }

IndexSet::IndexSet(std::vector<int> elements) : elements_(std::move(elements)) { require_increasing(elements_); }

IndexSet IndexSet::range(int first, int last) {
  IndexSet s;
  for (int i = first; i <= last; ++i) s.elements_.push_back(i);
  return s;
}

bool IndexSet::contains(int i) const { return std::binary_search(elements_.begin(), elements_.end(), i); }

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(), elements_.end());
}

IndexSet IndexSet::complement(const IndexSet& universe) const {
  if (!is_subset_of(universe)) throw DomainError(to_string() + " is not contained in " + universe.to_string());
  IndexSet out;
  std::set_difference(universe.elements_.begin(), universe.elements_.end(), elements_.begin(), elements_.end(),
                      std::back_inserter(out.elements_));
  return out;
}

IndexSet IndexSet::without(int i) const {
  IndexSet out = *this;
  std::erase(out.elements_, i);
  return out;
}

IndexSet IndexSet::united(const IndexSet& other) const {
  IndexSet out;
  std::set_union(elements_.begin(), elements_.end(), other.elements_.begin(), other.elements_.end(),
                 std::back_inserter(out.elements_));
  return out;
}

std::string IndexSet::to_string() const {
  std::string s = "{";
  for (std::size_t k = 0; k < elements_.size(); ++k) {
    if (k) s += ",";
    s += std::to_string(elements_[k]);
  }
  return s + "}";
}

std::vector<IndexSet> subsets_of_size(const IndexSet& universe, std::size_t k) {
  std::vector<IndexSet> out;
  const std::size_t n = universe.size();
  if (k > n) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  while (true) {
    std::vector<int> elems(k);
    for (std::size_t i = 0; i < k; ++i) elems[i] = universe[pick[i]];
    out.emplace_back(std::move(elems));
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

int permutation_sign(std::span<const int> sequence) {
  std::vector<int> v(sequence.begin(), sequence.end());
  std::vector<int> scratch(v.size());
  return count_inversions(v, scratch, 0, v.size()) % 2 == 0 ? 1 : -1;
}

int split_sign(const IndexSet& whole, const IndexSet& first, const IndexSet& second) {
  if (first.size() + second.size() != whole.size() || first.united(second) != whole) {
    throw DomainError("split_sign: " + first.to_string() + " and " + second.to_string() +
                      " do not partition " + whole.to_string());
  }
  std::vector<int> seq(first.begin(), first.end());
  seq.insert(seq.end(), second.begin(), second.end());
  return permutation_sign(seq);
}

int complement_sign(const IndexSet& subset, const IndexSet& universe) {
  return split_sign(universe, subset.complement(universe), subset);
}

SignedIndex::SignedIndex(int value, int n) : value_(value), n_(n) {
  if (n < 1 || value == 0 || value > n || value < -n) {
    throw DomainError("signed index " + std::to_string(value) + " outside [-" + std::to_string(n) + ", " +
                      std::to_string(n) + "]");
  }
}

SignedIndex SignedIndex::from_position(int position, int n) {
  if (position < 1 || position > 2 * n) throw DomainError("position " + std::to_string(position) + " out of range");
  return position <= n ? SignedIndex(position, n) : SignedIndex(position - 2 * n - 1, n);
}

}  // namespace pfmsf
