#pragma once

// Contact data of curves with a divisor V: ordered contact sequences s,
// unordered contact multisets m, and the pairing matrix used to split the
// diagonal of V.
//
// Basis classes of H_*(V) are referred to by index. Only even-degree classes
// are supported, so the contact variables all commute.

#include "sumkit/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sumkit {

struct Contact {
  int multiplicity = 1;
  int index = 0;

  auto operator<=>(const Contact&) const = default;
};

using ContactSeq = std::vector<Contact>;

struct SeqStats {
  long length = 0;
  long degree = 0;
  Integer product = 1;
};

SeqStats seq_stats(const ContactSeq& s);

class ContactMultiset {
 public:
  using Key = std::pair<int, int>;  // (multiplicity a, class index i)

  ContactMultiset() = default;
  ContactMultiset(std::initializer_list<std::pair<const Key, int>> counts);
  static ContactMultiset from_seq(const ContactSeq& s);

  void add(int multiplicity, int index, int count = 1);
  int count(int multiplicity, int index) const;
  const std::map<Key, int>& counts() const { return counts_; }
  bool empty() const { return counts_.empty(); }

  long length() const;
  long degree() const;
  int max_index() const;

  ContactMultiset operator+(const ContactMultiset& other) const;

  /// "a^count(i) ..." sorted by (a, i); empty multiset is "".
  std::string to_string() const;
  static ContactMultiset parse(std::string_view text);

  auto operator<=>(const ContactMultiset&) const = default;

 private:
  std::map<Key, int> counts_;
};

struct MultisetStats {
  long length = 0;
  long degree = 0;
  Integer product = 1;    // |m| = prod a^{m_{a,i}}
  Integer factorial = 1;  // m! = prod m_{a,i}!
};

MultisetStats multiset_stats(const ContactMultiset& m);

/// l(m)!/m!: the number of ordered contact sequences with multiset m.
Integer ordered_multiplicity(const ContactMultiset& m);

/// Square rational matrix giving the intersection pairing on a basis of H_*(V).
class IntersectionMatrix {
 public:
  explicit IntersectionMatrix(std::vector<std::vector<Rational>> rows);
  static IntersectionMatrix identity(std::size_t n);
  /// Point/fundamental-class pairing on V = P^1: [[0,1],[1,0]].
  static IntersectionMatrix point_fundamental();

  std::size_t size() const { return rows_.size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  bool is_symmetric() const;
  /// Throws DomainError when singular.
  IntersectionMatrix inverse() const;

  bool operator==(const IntersectionMatrix&) const = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

using MultisetCombination = std::map<ContactMultiset, Rational>;

/// Expands C_m in the dual basis: every index i becomes sum_j Q_ij j,
/// multilinearly in the symmetric product.
MultisetCombination dual_multiset(const ContactMultiset& m, const IntersectionMatrix& q);

/// All multisets of total degree deg over class indices 0..basis_size-1.
std::vector<ContactMultiset> enumerate_multisets(int deg, int basis_size);

}  // namespace sumkit
