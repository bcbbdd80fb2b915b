#pragma once

#include <compare>

#include "richlab/word.hpp"

namespace richlab {

/// A u-switch aub: u is a palindrome and a != b.
struct SwitchRecord {
  Symbol a;
  Word u;
  Symbol b;

  Word as_word() const {
    Word out(u.alphabet_size());
    out.push_back(a);
    for (Symbol s : u) out.push_back(s);
    out.push_back(b);
    return out;
  }

  friend bool operator==(const SwitchRecord&, const SwitchRecord&) = default;
  // Ordered like the words aub themselves.
  friend std::strong_ordering operator<=>(const SwitchRecord& x, const SwitchRecord& y) {
    if (auto c = x.a <=> y.a; c != 0) return c;
    const std::size_t nx = x.u.size() + 1, ny = y.u.size() + 1;
    for (std::size_t i = 0; i < nx && i < ny; ++i) {
      const Symbol sx = i < x.u.size() ? x.u[i] : x.b;
      const Symbol sy = i < y.u.size() ? y.u[i] : y.b;
      if (sx != sy) return sx <=> sy;
    }
    return nx <=> ny;
  }
};

/// (u, a) such that some switch aub or bua exists.
struct SwitchPair {
  Word u;
  Symbol a;

  friend bool operator==(const SwitchPair&, const SwitchPair&) = default;
  friend std::strong_ordering operator<=>(const SwitchPair& x, const SwitchPair& y) {
    if (auto c = x.u <=> y.u; c != 0) return c;
    return x.a <=> y.a;
  }
};

}  // namespace richlab
