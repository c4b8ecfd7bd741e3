#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace sring {

/// A subset of Z_n stored as a bitset, one bit per residue.
class ResidueSet {
 public:
  ResidueSet() = default;
  explicit ResidueSet(int n) : n_(n), words_(word_count(n), 0) {}
  ResidueSet(int n, std::initializer_list<int> xs);

  static ResidueSet from_elements(int n, std::span<const int> xs);
  static ResidueSet all(int n);

  int modulus() const noexcept { return n_; }
  bool contains(int x) const noexcept { return (words_[x >> 6] >> (x & 63)) & 1U; }
  void insert(int x) noexcept { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }
  void erase(int x) noexcept { words_[x >> 6] &= ~(std::uint64_t{1} << (x & 63)); }

  int size() const noexcept;
  bool empty() const noexcept;
  // -1 when empty
  int min() const noexcept;
  std::vector<int> elements() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        int b = std::countr_zero(bits);
        f(static_cast<int>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

  // X + k
  ResidueSet translated(int k) const;
  // k * X
  ResidueSet scaled(int k) const;
  // -X
  ResidueSet negated() const;

  bool is_subset_of(const ResidueSet& other) const noexcept;
  bool intersects(const ResidueSet& other) const noexcept;

  ResidueSet& operator|=(const ResidueSet& other) noexcept;
  ResidueSet& operator&=(const ResidueSet& other) noexcept;
  ResidueSet& operator-=(const ResidueSet& other) noexcept;
  friend ResidueSet operator|(ResidueSet a, const ResidueSet& b) { return a |= b; }
  friend ResidueSet operator&(ResidueSet a, const ResidueSet& b) { return a &= b; }
  friend ResidueSet operator-(ResidueSet a, const ResidueSet& b) { return a -= b; }

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;
  // Orders by modulus, then by the sorted element list.
  friend std::strong_ordering operator<=>(const ResidueSet& a, const ResidueSet& b);

  std::size_t hash() const noexcept;
  std::string to_string() const;

 private:
  static std::size_t word_count(int n) { return static_cast<std::size_t>((n + 63) / 64); }

  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

struct ResidueSetHash {
  std::size_t operator()(const ResidueSet& s) const noexcept { return s.hash(); }
};

}  // namespace sring
