#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace ospbw {

/// Permutations of {1..n}, stored as the image list: p[i-1] = sigma(i).
using Perm = std::vector<int>;

inline Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

inline bool perm_is_valid(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  for (int v : p) {
    if (v < 1 || v > static_cast<int>(p.size()) || seen[v - 1]) return false;
    seen[v - 1] = 1;
  }
  return true;
}

/// (a compose b)(i) = a(b(i))
inline Perm perm_compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i] - 1];
  return r;
}

inline Perm perm_inverse(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

inline int perm_sign(const Perm& p) {
  std::vector<char> seen(p.size(), 0);
  int sign = 1;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (size_t j = i; !seen[j]; j = p[j] - 1) {
      seen[j] = 1;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

/// Transposition (a,b) in S_n.
inline Perm perm_transposition(int n, int a, int b) {
  Perm p = perm_identity(n);
  std::swap(p[a - 1], p[b - 1]);
  return p;
}

/// Cycle (c1, c2, ..., ck) in S_n: c1 -> c2 -> ... -> ck -> c1.
inline Perm perm_cycle(int n, const std::vector<int>& cycle) {
  Perm p = perm_identity(n);
  for (size_t i = 0; i < cycle.size(); ++i)
    p[cycle[i] - 1] = cycle[(i + 1) % cycle.size()];
  return p;
}

template <typename F>
void for_each_perm(int n, F&& f) {
  Perm p = perm_identity(n);
  do {
    f(p);
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace ospbw
