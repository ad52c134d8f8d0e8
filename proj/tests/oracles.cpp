#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace oracle {

using mapkit::Colour;
using mapkit::kColours;

bool connected(const InvolutionSystem& sys) {
  return union_find_orbits(sys, ColourSet::all()).size() == 1;
}

bool is_strict_map(const InvolutionSystem& sys) {
  const std::size_t n = sys.size();
  for (Point x = 0; x < n; ++x) {
    for (Colour c = 0; c < kColours; ++c) {
      if (sys(c, x) == x) return false;
      if (sys(c, sys(c, x)) != x) return false;
    }
    const Point y = sys(0, sys(2, x));
    if (y == x) return false;
    if (sys(0, sys(2, y)) != x) return false;
  }
  return connected(sys);
}

std::vector<std::vector<Point>> union_find_orbits(const InvolutionSystem& sys, ColourSet colours) {
  const std::size_t n = sys.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    return parent[x] == x ? x : parent[x] = find(parent[x]);
  };
  for (Colour c = 0; c < kColours; ++c) {
    if (!colours.contains(c)) continue;
    for (Point x = 0; x < n; ++x) parent[find(x)] = find(sys(c, x));
  }
  std::vector<std::vector<Point>> by_root(n);
  for (Point x = 0; x < n; ++x) by_root[find(x)].push_back(x);
  std::vector<std::vector<Point>> out;
  for (auto& cls : by_root)
    if (!cls.empty()) out.push_back(std::move(cls));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Points in breadth-first order from 0 followed by the unreached ones.
std::vector<Point> search_order(const InvolutionSystem& sys) {
  const std::size_t n = sys.size();
  std::vector<bool> seen(n, false);
  std::vector<Point> order;
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    seen[start] = true;
    order.push_back(start);
    for (std::size_t i = order.size() - 1; i < order.size(); ++i)
      for (Colour c = 0; c < kColours; ++c) {
        Point y = sys(c, order[i]);
        if (!seen[y]) {
          seen[y] = true;
          order.push_back(y);
        }
      }
  }
  return order;
}

// Calls found() for every colour-preserving bijection a -> b; stops when it
// returns false.
void search(const InvolutionSystem& a, const InvolutionSystem& b,
            const std::function<bool()>& found) {
  const std::size_t n = a.size();
  if (b.size() != n) return;
  const auto order = search_order(a);
  std::vector<Point> f(n, static_cast<Point>(n));
  std::vector<bool> used(n, false);
  bool stop = false;

  auto consistent = [&](Point x) {
    for (Colour c = 0; c < kColours; ++c) {
      Point y = a(c, x);
      if (f[y] != n && b(c, f[x]) != f[y]) return false;
    }
    return true;
  };
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (stop) return;
    if (i == n) {
      if (!found()) stop = true;
      return;
    }
    const Point x = order[i];
    for (Point y = 0; y < n && !stop; ++y) {
      if (used[y]) continue;
      f[x] = y;
      used[y] = true;
      if (consistent(x)) rec(i + 1);
      used[y] = false;
      f[x] = static_cast<Point>(n);
    }
  };
  rec(0);
}

}  // namespace

bool brute_isomorphic(const InvolutionSystem& a, const InvolutionSystem& b) {
  bool any = false;
  search(a, b, [&] {
    any = true;
    return false;
  });
  return any;
}

std::size_t brute_automorphism_count(const InvolutionSystem& sys) {
  std::size_t count = 0;
  search(sys, sys, [&] {
    ++count;
    return true;
  });
  return count;
}

std::vector<std::vector<Point>> perfect_matchings(std::size_t n) {
  std::vector<std::vector<Point>> out;
  std::vector<Point> t(n, static_cast<Point>(n));
  std::function<void()> rec = [&] {
    Point x = 0;
    while (x < n && t[x] != n) ++x;
    if (x == n) {
      out.push_back(t);
      return;
    }
    for (Point y = x + 1; y < n; ++y) {
      if (t[y] != n) continue;
      t[x] = y;
      t[y] = x;
      rec();
      t[x] = t[y] = static_cast<Point>(n);
    }
  };
  rec();
  return out;
}

std::set<std::string> naive_map_keys(std::size_t n) {
  const auto m = perfect_matchings(n);
  std::set<std::string> keys;
  for (const auto& t0 : m)
    for (const auto& t2 : m) {
      // Cheap prefilter on the edge condition before trying every t1.
      bool ok = true;
      for (Point x = 0; x < n && ok; ++x) {
        Point y = t0[t2[x]];
        ok = y != x && t0[t2[y]] == x;
      }
      if (!ok) continue;
      for (const auto& t1 : m) {
        InvolutionSystem sys({t0, t1, t2});
        if (is_strict_map(sys)) keys.insert(mapkit::canonical_key(sys).hex());
      }
    }
  return keys;
}

InvolutionSystem shuffled(const InvolutionSystem& sys, unsigned seed) {
  std::vector<Point> perm(sys.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);
  return mapkit::relabel(sys, perm);
}

}  // namespace oracle
