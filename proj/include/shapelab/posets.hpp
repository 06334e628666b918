#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "shapelab/base.hpp"

namespace shapelab::posets {

// Finite directed preorder on indices 0..size-1. "Directed" means every
// pair has an upper bound; distinct equivalent elements (a <= b <= a)
// are allowed. Instances are validated at construction, so holding a
// DirectedPoset is proof the axioms hold.
class DirectedPoset {
 public:
  static ValidationReport check(long size, const std::vector<std::uint8_t>& leq) {
    if (size < 0) return ValidationReport::fail("bad-size", "negative size");
    if (leq.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size))
      return ValidationReport::fail("bad-size", "relation table has wrong size");
    auto rel = [&](long a, long b) {
      return leq[static_cast<std::size_t>(a) * size + static_cast<std::size_t>(b)] != 0;
    };
    for (long a = 0; a < size; ++a)
      if (!rel(a, a))
        return ValidationReport::fail(
            "not-reflexive", "element " + std::to_string(a) + " is not <= itself",
            {a});
    for (long a = 0; a < size; ++a)
      for (long b = 0; b < size; ++b) {
        if (!rel(a, b)) continue;
        for (long c = 0; c < size; ++c)
          if (rel(b, c) && !rel(a, c))
            return ValidationReport::fail(
                "not-transitive",
                std::to_string(a) + " <= " + std::to_string(b) + " <= " +
                    std::to_string(c) + " but not " + std::to_string(a) +
                    " <= " + std::to_string(c),
                {a, b, c});
      }
    for (long a = 0; a < size; ++a)
      for (long b = 0; b < size; ++b) {
        bool bounded = false;
        for (long c = 0; c < size && !bounded; ++c)
          bounded = rel(a, c) && rel(b, c);
        if (!bounded)
          return ValidationReport::fail(
              "not-directed",
              "no upper bound for " + std::to_string(a) + " and " +
                  std::to_string(b),
              {a, b});
      }
    return ValidationReport::pass();
  }

  static DirectedPoset create(long size, std::vector<std::uint8_t> leq) {
    check(size, leq).require();
    return DirectedPoset(size, std::move(leq));
  }

  // Convenience for fixtures: the relation as explicit pairs, closed
  // over nothing (reflexive pairs must be listed or added by caller).
  static DirectedPoset from_pairs(long size,
                                  const std::vector<std::pair<long, long>>& pairs,
                                  bool add_reflexive = true) {
    std::vector<std::uint8_t> leq(
        static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
    auto set = [&](long a, long b) {
      if (a < 0 || a >= size || b < 0 || b >= size)
        throw std::invalid_argument("pair index out of range");
      leq[static_cast<std::size_t>(a) * size + static_cast<std::size_t>(b)] = 1;
    };
    if (add_reflexive)
      for (long a = 0; a < size; ++a) set(a, a);
    for (auto [a, b] : pairs) set(a, b);
    return create(size, std::move(leq));
  }

  // A linear order 0 <= 1 <= ... <= n-1.
  static DirectedPoset chain(long n) {
    std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
    for (long a = 0; a < n; ++a)
      for (long b = a; b < n; ++b)
        leq[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = 1;
    return DirectedPoset(n, std::move(leq));
  }

  static DirectedPoset singleton() { return chain(1); }

  long size() const { return size_; }

  bool leq(long a, long b) const {
    if (a < 0 || a >= size_ || b < 0 || b >= size_)
      throw std::invalid_argument("poset index out of range");
    return leq_[static_cast<std::size_t>(a) * size_ + static_cast<std::size_t>(b)] != 0;
  }

  bool equivalent(long a, long b) const { return leq(a, b) && leq(b, a); }

  bool operator==(const DirectedPoset& o) const {
    return size_ == o.size_ && leq_ == o.leq_;
  }
  bool operator!=(const DirectedPoset& o) const { return !(*this == o); }

 private:
  DirectedPoset(long size, std::vector<std::uint8_t> leq)
      : size_(size), leq_(std::move(leq)) {}

  long size_;
  std::vector<std::uint8_t> leq_;
};

// Monotone map between directed preorders, validated at construction.
struct OrderMap {
  DirectedPoset source;
  DirectedPoset target;
  std::vector<long> map;

  static ValidationReport check(const DirectedPoset& src,
                                const DirectedPoset& tgt,
                                const std::vector<long>& map) {
    if (static_cast<long>(map.size()) != src.size())
      return ValidationReport::fail("bad-map", "map size does not match source");
    for (long a = 0; a < src.size(); ++a)
      if (map[static_cast<std::size_t>(a)] < 0 ||
          map[static_cast<std::size_t>(a)] >= tgt.size())
        return ValidationReport::fail("bad-map",
                                      "image of " + std::to_string(a) +
                                          " is outside the target",
                                      {a});
    for (long a = 0; a < src.size(); ++a)
      for (long b = 0; b < src.size(); ++b)
        if (src.leq(a, b) && !tgt.leq(map[static_cast<std::size_t>(a)],
                                      map[static_cast<std::size_t>(b)]))
          return ValidationReport::fail(
              "not-monotone",
              std::to_string(a) + " <= " + std::to_string(b) +
                  " but images are not related",
              {a, b});
    return ValidationReport::pass();
  }

  OrderMap(DirectedPoset src, DirectedPoset tgt, std::vector<long> m)
      : source(std::move(src)), target(std::move(tgt)), map(std::move(m)) {
    check(source, target, map).require();
  }

  long operator()(long a) const { return map[static_cast<std::size_t>(a)]; }
};

inline OrderMap identity_order_map(const DirectedPoset& p) {
  std::vector<long> m(static_cast<std::size_t>(p.size()));
  for (long a = 0; a < p.size(); ++a) m[static_cast<std::size_t>(a)] = a;
  return OrderMap(p, p, std::move(m));
}

inline OrderMap compose(const OrderMap& g, const OrderMap& f) {
  if (f.target != g.source)
    throw std::invalid_argument("compose: inner posets differ");
  std::vector<long> m(f.map.size());
  for (std::size_t a = 0; a < f.map.size(); ++a) m[a] = g(f.map[a]);
  return OrderMap(f.source, g.target, std::move(m));
}

namespace detail {

inline void check_subset_indices(const std::vector<long>& sub,
                                 const DirectedPoset& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  for (long s : sub) {
    if (s < 0 || s >= p.size())
      throw std::invalid_argument("subset index out of range");
    if (seen[static_cast<std::size_t>(s)])
      throw std::invalid_argument("subset index repeated");
    seen[static_cast<std::size_t>(s)] = true;
  }
}

}  // namespace detail

// Every element of p sits below some member of sub.
inline bool is_cofinal(const std::vector<long>& sub, const DirectedPoset& p) {
  detail::check_subset_indices(sub, p);
  for (long a = 0; a < p.size(); ++a) {
    bool dominated = false;
    for (long s : sub)
      if (p.leq(a, s)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

inline bool is_directed_subset(const std::vector<long>& sub,
                               const DirectedPoset& p) {
  detail::check_subset_indices(sub, p);
  for (long a : sub)
    for (long b : sub) {
      bool bounded = false;
      for (long c : sub)
        if (p.leq(a, c) && p.leq(b, c)) {
          bounded = true;
          break;
        }
      if (!bounded) return false;
    }
  return true;
}

// Smallest index that dominates every element, if one exists. A
// nonempty directed finite preorder always has one.
inline std::optional<long> find_top(const DirectedPoset& p) {
  for (long t = 0; t < p.size(); ++t) {
    bool top = true;
    for (long a = 0; a < p.size() && top; ++a) top = p.leq(a, t);
    if (top) return t;
  }
  return std::nullopt;
}

// Restriction to a subset, relabeled 0..k-1 in the order given.
// Reflexivity and transitivity are inherited; directedness of the
// restriction is revalidated and may fail.
inline DirectedPoset restrict_poset(const DirectedPoset& p,
                                    const std::vector<long>& sub) {
  detail::check_subset_indices(sub, p);
  long n = static_cast<long>(sub.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j)
      leq[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] =
          p.leq(sub[static_cast<std::size_t>(i)], sub[static_cast<std::size_t>(j)])
              ? 1
              : 0;
  return DirectedPoset::create(n, std::move(leq));
}

}  // namespace shapelab::posets
