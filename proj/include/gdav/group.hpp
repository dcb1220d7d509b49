#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gdav/element_set.hpp"
#include "gdav/errors.hpp"

namespace gdav {

/// A finite group given by its multiplication table.
///
/// Elements are the indices 0..order()-1 and the identity is always 0.
/// mul(i, j) is the product of i (left) by j (right). A Group is immutable
/// once built and can be shared freely between threads.
class Group {
 public:
  /// Validates `table` (row-major, n*n entries) and normalizes the identity
  /// to index 0, swapping labels if the identity sits elsewhere.
  /// Associativity is checked exhaustively.
  static Group from_table(std::size_t n, std::vector<Element> table) {
    if (n == 0) throw InputError("group table is empty");
    if (n > kMaxOrder)
      throw LimitError("group order " + std::to_string(n) + " exceeds the supported maximum " +
                       std::to_string(kMaxOrder));
    if (table.size() != n * n) throw InputError("group table has the wrong number of entries");
    for (Element e : table)
      if (e >= n) throw InputError("group table entry out of range");

    auto at = [&](std::size_t i, std::size_t j) { return table[i * n + j]; };

    // Latin square.
    std::vector<std::uint8_t> seen(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[at(i, j)]++) throw InputError("group table is not a Latin square (row " + std::to_string(i) + ")");
      }
      std::fill(seen.begin(), seen.end(), 0);
      for (std::size_t j = 0; j < n; ++j) {
        if (seen[at(j, i)]++) throw InputError("group table is not a Latin square (column " + std::to_string(i) + ")");
      }
    }

    std::size_t identity = n;
    for (std::size_t e = 0; e < n && identity == n; ++e) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j) ok = at(e, j) == j && at(j, e) == j;
      if (ok) identity = e;
    }
    if (identity == n) throw InputError("group table has no identity element");

    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const std::size_t ij = at(i, j);
        for (std::size_t k = 0; k < n; ++k)
          if (at(ij, k) != at(i, at(j, k)))
            throw InputError("group table is not associative");
      }

    if (identity != 0) {
      // Swap labels 0 and `identity`.
      auto relabel = [&](std::size_t x) -> std::size_t {
        if (x == 0) return identity;
        if (x == identity) return 0;
        return x;
      };
      std::vector<Element> t(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          t[relabel(i) * n + relabel(j)] = static_cast<Element>(relabel(at(i, j)));
      table = std::move(t);
    }
    return Group(n, std::move(table));
  }

  std::size_t order() const { return n_; }
  static constexpr Element identity() { return 0; }

  Element mul(Element a, Element b) const { return table_[std::size_t{a} * n_ + b]; }
  Element inv(Element a) const { return inv_[a]; }
  std::size_t elem_order(Element a) const { return order_[a]; }
  bool is_abelian() const { return abelian_; }

  /// a^k for k >= 0.
  Element power(Element a, std::size_t k) const {
    Element r = 0;
    for (std::size_t i = 0; i < k % order_[a]; ++i) r = mul(r, a);
    return r;
  }

  std::span<const Element> row(Element a) const {
    return {table_.data() + std::size_t{a} * n_, n_};
  }
  const std::vector<Element>& table() const { return table_; }
  ElementSet all_elements() const { return ElementSet::all(n_); }

  friend bool operator==(const Group& a, const Group& b) { return a.n_ == b.n_ && a.table_ == b.table_; }

 private:
  Group(std::size_t n, std::vector<Element> table) : n_(n), table_(std::move(table)), inv_(n), order_(n) {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b)
        if (mul(static_cast<Element>(a), static_cast<Element>(b)) == 0) {
          inv_[a] = static_cast<Element>(b);
          break;
        }
    for (std::size_t a = 0; a < n_; ++a) {
      std::size_t k = 1;
      Element x = static_cast<Element>(a);
      while (x != 0) {
        x = mul(x, static_cast<Element>(a));
        ++k;
      }
      order_[a] = k;
    }
    abelian_ = true;
    for (std::size_t a = 0; a < n_ && abelian_; ++a)
      for (std::size_t b = a + 1; b < n_ && abelian_; ++b)
        abelian_ = mul(static_cast<Element>(a), static_cast<Element>(b)) ==
                   mul(static_cast<Element>(b), static_cast<Element>(a));
  }

  std::size_t n_;
  std::vector<Element> table_;
  std::vector<Element> inv_;
  std::vector<std::size_t> order_;
  bool abelian_ = true;
};

}  // namespace gdav
