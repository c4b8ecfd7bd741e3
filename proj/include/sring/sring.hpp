#pragma once

#include <span>
#include <string>
#include <vector>

#include "sring/residue_set.hpp"
#include "sring/section.hpp"

namespace sring {

/// An S-ring over Z_n, held as its partition into basic sets (classes).
///
/// Classes are kept in canonical form: sorted by minimal element, so class 0
/// is always {0}. Instances are immutable and always satisfy the S-ring axioms.
class SRing {
 public:
  // Throws NotAPartition, MissingIdentityClass, NotInverseClosed or
  // NotMultiplicativelyClosed, naming the first violating witness.
  static SRing validate(int n, const std::vector<std::vector<int>>& classes);
  static SRing validate(int n, std::vector<ResidueSet> classes);
  // Skips the axiom checks. Only for partitions known to be S-ring partitions.
  static SRing from_trusted_partition(int n, std::vector<ResidueSet> classes);

  static SRing full(int n);
  // {0} and its complement.
  static SRing rank_two(int n);

  int order() const noexcept { return n_; }
  int rank() const noexcept { return static_cast<int>(classes_.size()); }
  const ResidueSet& cls(int i) const { return classes_[static_cast<std::size_t>(i)]; }
  const std::vector<ResidueSet>& classes() const noexcept { return classes_; }
  const std::vector<int>& members(int i) const { return members_[static_cast<std::size_t>(i)]; }
  int class_of(int x) const { return class_of_[static_cast<std::size_t>(x)]; }
  // Index of the class -X.
  int neg_class(int i) const { return class_of(members(i).front() == 0 ? 0 : n_ - members(i).front()); }
  // Index of the class equal to x, or -1 when x is not a class.
  int index_of(const ResidueSet& x) const;

  bool is_union_of_classes(const ResidueSet& x) const;
  std::vector<std::vector<int>> class_lists() const;
  std::string to_string() const;

  friend bool operator==(const SRing& a, const SRing& b) { return a.n_ == b.n_ && a.classes_ == b.classes_; }
  friend bool operator<(const SRing& a, const SRing& b);

 private:
  SRing(int n, std::vector<ResidueSet> canonical);

  int n_ = 1;
  std::vector<ResidueSet> classes_;
  std::vector<std::vector<int>> members_;
  std::vector<int> class_of_;
};

/// All structure constants c^Z_{XY} of an S-ring, indexed by class.
class StructureTable {
 public:
  explicit StructureTable(const SRing& a);

  int rank() const noexcept { return rank_; }
  int at(int x, int y, int z) const {
    return data_[(static_cast<std::size_t>(x) * rank_ + y) * rank_ + z];
  }

 private:
  int rank_;
  std::vector<int> data_;
};

// |{(x,y) in X x Y : x + y = z}| for any z in Z.
int structure_constant(const SRing& a, int x, int y, int z);

// Smallest S-ring in which every seed is a union of classes (Schur-Wielandt stabilization).
SRing closure(int n, std::span<const ResidueSet> seeds);

// Orders d with subgroup(n, d) a union of classes, ascending.
std::vector<int> a_subgroups(const SRing& a);
// All A-sections (l, u) with l | u over a_subgroups, sorted.
std::vector<Section> sections(const SRing& a);
bool is_a_section(const SRing& a, const Section& s);

/// The restriction A_S together with the index in A_S of each A-class inside U
/// (-1 for classes outside U).
struct Restriction {
  SRing ring;
  std::vector<int> image_of;
};

Restriction restrict_with_map(const SRing& a, const Section& s);
SRing restriction(const SRing& a, const Section& s);

// Order of {g : g + X = X}.
int radical(int n, const ResidueSet& x);
// Order of the subgroup generated by X.
int generated(int n, const ResidueSet& x);

// True iff every class outside subgroup(n, u) is a union of cosets of subgroup(n, l).
bool is_wreath(const SRing& a, int u, int l);

// S-ring over Z_{ab} for coprime a, b; the class X x Y becomes {b*x + a*y}.
SRing tensor(const SRing& a, const SRing& b);

}  // namespace sring
