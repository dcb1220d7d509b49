#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "gdav/element_set.hpp"
#include "gdav/errors.hpp"
#include "gdav/group.hpp"

namespace gdav {

/// The subgroup generated by `generators` (always contains the identity).
inline ElementSet subgroup_closure(const Group& g, const ElementSet& generators) {
  ElementSet closed;
  closed.insert(0);
  const auto gens = generators.to_vector();
  std::vector<Element> frontier{0};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (Element x : frontier)
      for (Element b : gens) {
        const Element y = g.mul(x, b);
        if (!closed.contains(y)) {
          closed.insert(y);
          next.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return closed;
}

inline bool generates(const Group& g, const ElementSet& generators) {
  return subgroup_closure(g, generators).size() == g.order();
}

/// G' = <[a, b] : a, b in G>.
inline ElementSet commutator_subgroup(const Group& g) {
  ElementSet commutators;
  const auto n = static_cast<Element>(g.order());
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      commutators.insert(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
  return subgroup_closure(g, commutators);
}

namespace detail {

inline std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> ps;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) ps.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

inline std::size_t exact_log(std::size_t value, std::size_t base) {
  std::size_t k = 0;
  while (value > 1) {
    if (value % base != 0) throw InvariantError("kernel size ratio is not a prime power");
    value /= base;
    ++k;
  }
  return k;
}

}  // namespace detail

/// Invariant factors [n1, ..., nr] with 2 <= n1 | n2 | ... | nr of an abelian
/// group; empty for the trivial group.
///
/// For each prime p, the number of cyclic p-primary factors of order at least
/// p^k is log_p(|ker p^k| / |ker p^(k-1)|), where ker m = {x : m x = 0}.
inline std::vector<std::size_t> abelian_invariants(const Group& g) {
  if (!g.is_abelian()) throw InputError("abelian invariants requested for a non-abelian group");
  const std::size_t n = g.order();
  auto kernel_size = [&](std::size_t m) {
    std::size_t c = 0;
    for (std::size_t x = 0; x < n; ++x)
      if (m % g.elem_order(static_cast<Element>(x)) == 0) ++c;
    return c;
  };

  // primary[p] = exponents of the p-primary cyclic factors, descending.
  std::vector<std::vector<std::size_t>> primaries;
  std::vector<std::size_t> primes = detail::prime_factors(n);
  for (std::size_t p : primes) {
    std::vector<std::size_t> at_least;  // at_least[k-1] = #factors of order >= p^k
    std::size_t pk = 1;
    std::size_t prev = 1;
    while (true) {
      pk *= p;
      const std::size_t cur = kernel_size(pk);
      if (cur % prev != 0) throw InvariantError("kernel sizes are not nested");
      const std::size_t count = detail::exact_log(cur / prev, p);
      if (count == 0) break;
      at_least.push_back(count);
      prev = cur;
    }
    std::vector<std::size_t> powers;  // descending cyclic orders p^e
    const std::size_t r = at_least.empty() ? 0 : at_least.front();
    for (std::size_t i = 0; i < r; ++i) {
      std::size_t e = 0;
      while (e < at_least.size() && at_least[e] > i) ++e;
      std::size_t q = 1;
      for (std::size_t j = 0; j < e; ++j) q *= p;
      powers.push_back(q);
    }
    primaries.push_back(std::move(powers));
  }

  std::size_t rank = 0;
  for (const auto& v : primaries) rank = std::max(rank, v.size());
  std::vector<std::size_t> factors(rank, 1);
  // The largest factor collects the largest power of each prime, and so on.
  for (const auto& v : primaries)
    for (std::size_t i = 0; i < v.size(); ++i) factors[rank - 1 - i] *= v[i];
  return factors;
}

/// Sum of (n_i - 1) over the invariant factors.
inline std::size_t d_star(const Group& g) {
  std::size_t s = 0;
  for (std::size_t f : abelian_invariants(g)) s += f - 1;
  return s;
}

/// The subgroup on `elements` as a Group in its own right. Elements are
/// relabeled in increasing order of their index in `g`, so the identity
/// stays at 0. `elements` must be a subgroup.
inline Group induced_subgroup(const Group& g, const ElementSet& elements) {
  const auto members = elements.to_vector();
  if (members.empty() || members.front() != 0) throw InputError("subgroup must contain the identity");
  std::vector<int> position(g.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) position[members[i]] = static_cast<int>(i);
  const std::size_t m = members.size();
  std::vector<Element> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      const int p = position[g.mul(members[i], members[j])];
      if (p < 0) throw InputError("element set is not closed under multiplication");
      table[i * m + j] = static_cast<Element>(p);
    }
  return Group::from_table(m, std::move(table));
}

}  // namespace gdav
