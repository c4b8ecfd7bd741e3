#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <vector>

#include "sring/residue_set.hpp"
#include "sring/sring.hpp"

namespace fixtures {

inline sring::SRing z5c() { return sring::SRing::validate(5, {{0}, {1, 4}, {2, 3}}); }
inline sring::SRing a8() { return sring::SRing::validate(8, {{0}, {4}, {2, 6}, {1, 3, 5, 7}}); }
inline sring::SRing w4() { return sring::SRing::validate(4, {{0}, {2}, {1, 3}}); }
inline sring::SRing r4() { return sring::SRing::validate(4, {{0}, {1, 2, 3}}); }

// Direct definition of the S-ring axioms on plain integer lists, independent of
// the library's validator.
inline bool naive_is_sring(int n, const std::vector<std::vector<int>>& classes) {
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) return false;
    for (int x : classes[i]) {
      if (x < 0 || x >= n || owner[static_cast<std::size_t>(x)] >= 0) return false;
      owner[static_cast<std::size_t>(x)] = static_cast<int>(i);
    }
  }
  for (int o : owner) {
    if (o < 0) return false;
  }
  if (classes[static_cast<std::size_t>(owner[0])].size() != 1) return false;
  for (const auto& c : classes) {
    std::vector<int> neg;
    for (int x : c) neg.push_back((n - x) % n);
    std::sort(neg.begin(), neg.end());
    const auto& other = classes[static_cast<std::size_t>(owner[static_cast<std::size_t>(neg.front())])];
    std::vector<int> sorted = other;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != neg) return false;
  }
  for (const auto& x : classes) {
    for (const auto& y : classes) {
      std::vector<int> count(static_cast<std::size_t>(n), 0);
      for (int a : x) {
        for (int b : y) ++count[static_cast<std::size_t>((a + b) % n)];
      }
      for (const auto& z : classes) {
        for (int e : z) {
          if (count[static_cast<std::size_t>(e)] != count[static_cast<std::size_t>(z.front())]) return false;
        }
      }
    }
  }
  return true;
}

// Every S-ring over Z_n by running through all set partitions of 1..n-1.
inline std::vector<std::vector<std::vector<int>>> naive_enumerate(int n) {
  std::vector<std::vector<std::vector<int>>> out;
  std::vector<std::vector<int>> blocks{{0}};
  std::function<void(int)> place = [&](int x) {
    if (x == n) {
      if (naive_is_sring(n, blocks)) out.push_back(blocks);
      return;
    }
    for (std::size_t i = 1; i < blocks.size(); ++i) {
      blocks[i].push_back(x);
      place(x + 1);
      blocks[i].pop_back();
    }
    blocks.push_back({x});
    place(x + 1);
    blocks.pop_back();
  };
  place(1);
  return out;
}

inline std::vector<std::vector<int>> sorted_lists(const sring::SRing& a) {
  auto lists = a.class_lists();
  std::sort(lists.begin(), lists.end());
  return lists;
}

inline std::vector<std::vector<int>> sorted_lists(std::vector<std::vector<int>> lists) {
  for (auto& c : lists) std::sort(c.begin(), c.end());
  std::sort(lists.begin(), lists.end());
  return lists;
}

inline int gcd_all(int n, const std::vector<int>& xs) {
  int g = n;
  for (int x : xs) g = std::gcd(g, x);
  return g;
}

}  // namespace fixtures
