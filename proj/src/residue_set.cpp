#include "sring/residue_set.hpp"

#include <algorithm>

namespace sring {

ResidueSet::ResidueSet(int n, std::initializer_list<int> xs) : ResidueSet(n) {
  for (int x : xs) insert(((x % n) + n) % n);
}

ResidueSet ResidueSet::from_elements(int n, std::span<const int> xs) {
  ResidueSet s(n);
  for (int x : xs) s.insert(((x % n) + n) % n);
  return s;
}

ResidueSet ResidueSet::all(int n) {
  ResidueSet s(n);
  for (int x = 0; x < n; ++x) s.insert(x);
  return s;
}

int ResidueSet::size() const noexcept {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool ResidueSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

int ResidueSet::min() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
  }
  return -1;
}

std::vector<int> ResidueSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int x) { out.push_back(x); });
  return out;
}

ResidueSet ResidueSet::translated(int k) const {
  ResidueSet out(n_);
  if (n_ == 0) return out;
  int shift = ((k % n_) + n_) % n_;
  for_each([&](int x) {
    int y = x + shift;
    out.insert(y >= n_ ? y - n_ : y);
  });
  return out;
}

ResidueSet ResidueSet::scaled(int k) const {
  ResidueSet out(n_);
  if (n_ == 0) return out;
  long long kk = ((k % n_) + n_) % n_;
  for_each([&](int x) { out.insert(static_cast<int>((kk * x) % n_)); });
  return out;
}

ResidueSet ResidueSet::negated() const {
  ResidueSet out(n_);
  for_each([&](int x) { out.insert(x == 0 ? 0 : n_ - x); });
  return out;
}

bool ResidueSet::is_subset_of(const ResidueSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & ~other.words_[w]) != 0) return false;
  }
  return true;
}

bool ResidueSet::intersects(const ResidueSet& other) const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if ((words_[w] & other.words_[w]) != 0) return true;
  }
  return false;
}

ResidueSet& ResidueSet::operator|=(const ResidueSet& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

ResidueSet& ResidueSet::operator&=(const ResidueSet& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
  return *this;
}

ResidueSet& ResidueSet::operator-=(const ResidueSet& other) noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
  return *this;
}

std::strong_ordering operator<=>(const ResidueSet& a, const ResidueSet& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  auto ea = a.elements();
  auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

std::size_t ResidueSet::hash() const noexcept {
  std::size_t h = static_cast<std::size_t>(n_) * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

std::string ResidueSet::to_string() const {
  std::string s = "{";
  bool first = true;
  for_each([&](int x) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  });
  return s + "}";
}

}  // namespace sring
