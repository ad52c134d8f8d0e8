#include "mapkit/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "mapkit/builders.hpp"
#include "mapkit/operations.hpp"
#include "mapkit/parallel.hpp"
#include "mapkit/symmetry.hpp"

namespace mapkit {

std::string EnumerationConstraint::description() const {
  switch (kind) {
    case ConstraintKind::all:
      return "every <t0,t2>-orbit a quotient of the alternating 4-cycle";
    case ConstraintKind::truncation_admissible:
    case ConstraintKind::leapfrog_admissible:
      return "every <t0,t2>-orbit a quotient of the alternating 4-cycle, every <t1,t2>-orbit a "
             "quotient of the alternating 6-cycle";
  }
  return "";
}

namespace {

bool connected(const InvolutionSystem& sys) { return orbits(sys, ColourSet::all()).size() == 1; }

// Disjoint unions of square quotients covering k points, as (t0, t2) pairs.
std::vector<std::array<std::vector<Point>, 2>> square_layouts(std::size_t k) {
  const auto& shapes = square_quotients();
  std::vector<std::array<std::vector<Point>, 2>> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t first, std::size_t left) {
    if (left == 0) {
      std::array<std::vector<Point>, 2> t;
      Point offset = 0;
      for (std::size_t i : chosen) {
        const auto& s = shapes[i];
        for (Point x = 0; x < s.size(); ++x) {
          t[0].push_back(offset + s(0, x));
          t[1].push_back(offset + s(2, x));
        }
        offset += static_cast<Point>(s.size());
      }
      out.push_back(std::move(t));
      return;
    }
    for (std::size_t i = first; i < shapes.size(); ++i) {
      if (shapes[i].size() > left) continue;
      chosen.push_back(i);
      rec(i, left - shapes[i].size());
      chosen.pop_back();
    }
  };
  rec(0, k);
  return out;
}

// Calls visit for every involution on n points extending `t` (entries equal
// to n are unassigned). Fixed points allowed unless `fixed_point_free`.
void for_each_involution(std::vector<Point>& t, bool fixed_point_free,
                         const std::function<void(const std::vector<Point>&)>& visit) {
  const Point n = static_cast<Point>(t.size());
  Point x = 0;
  while (x < n && t[x] != n) ++x;
  if (x == n) {
    visit(t);
    return;
  }
  if (!fixed_point_free) {
    t[x] = x;
    for_each_involution(t, fixed_point_free, visit);
    t[x] = n;
  }
  for (Point y = x + 1; y < n; ++y) {
    if (t[y] != n) continue;
    t[x] = y;
    t[y] = x;
    for_each_involution(t, fixed_point_free, visit);
    t[x] = n;
    t[y] = n;
  }
}

bool hexagon_condition(const InvolutionSystem& sys) {
  for (Point x = 0; x < sys.size(); ++x)
    if (apply_word(sys, x, Word{1, 2, 1, 2, 1, 2}) != x) return false;
  return true;
}

}  // namespace

std::vector<InvolutionSystem> enumerate_type_graphs(std::size_t k, EnumerationConstraint c,
                                                    std::size_t bound) {
  if (k == 0) throw std::invalid_argument("type graphs need at least one vertex");
  if (k > bound)
    throw BoundExceededError("type graph size " + std::to_string(k) + " exceeds bound " +
                             std::to_string(bound));
  const bool admissible = c.kind != ConstraintKind::all;
  const auto layouts = square_layouts(k);

  // Work units: one layout with one choice of t1(0).
  std::vector<std::pair<std::size_t, Point>> units;
  for (std::size_t i = 0; i < layouts.size(); ++i)
    for (Point y = 0; y < k; ++y) units.emplace_back(i, y);

  std::mutex mutex;
  std::map<CanonicalKey, InvolutionSystem> found;
  parallel_for(units.size(), [&](std::size_t u) {
    const auto& [li, first] = units[u];
    const auto& layout = layouts[li];
    std::vector<Point> t1(k, static_cast<Point>(k));
    t1[0] = first;
    t1[first] = 0;
    std::map<CanonicalKey, InvolutionSystem> local;
    for_each_involution(t1, false, [&](const std::vector<Point>& t) {
      InvolutionSystem sys({layout[0], t, layout[1]});
      if (!connected(sys)) return;
      if (admissible && !hexagon_condition(sys)) return;
      auto form = canonical_form(sys);
      local.emplace(std::move(form.key), std::move(form.system));
    });
    std::lock_guard lock(mutex);
    found.merge(local);
  });

  std::vector<InvolutionSystem> out;
  out.reserve(found.size());
  for (auto& [key, sys] : found) out.push_back(std::move(sys));
  return out;
}

std::vector<InvolutionSystem> enumerate_admissible(std::size_t k, std::size_t bound) {
  return enumerate_type_graphs(k, {ConstraintKind::truncation_admissible}, bound);
}

std::vector<FlagMap> enumerate_maps(std::size_t n_flags, std::size_t bound) {
  if (n_flags == 0 || n_flags % 4 != 0)
    throw std::invalid_argument("flag count must be a positive multiple of 4");
  if (n_flags > bound)
    throw BoundExceededError("flag count " + std::to_string(n_flags) + " exceeds bound " +
                             std::to_string(bound));
  const Point n = static_cast<Point>(n_flags);
  // Every <t0,t2>-orbit of a map is a 4-cycle; fix them as consecutive blocks.
  std::vector<Point> t0(n), t2(n);
  for (Point b = 0; b < n; b += 4) {
    t0[b] = b + 1, t0[b + 1] = b, t0[b + 2] = b + 3, t0[b + 3] = b + 2;
    t2[b] = b + 2, t2[b + 2] = b, t2[b + 1] = b + 3, t2[b + 3] = b + 1;
  }
  // Block permutations and the Klein group on a block let t1(0) be 1, 2, 3 or 4.
  std::vector<Point> firsts;
  for (Point y = 1; y <= std::min<Point>(4, n - 1); ++y) firsts.push_back(y);

  std::mutex mutex;
  std::map<CanonicalKey, InvolutionSystem> found;
  parallel_for(firsts.size(), [&](std::size_t u) {
    std::vector<Point> t1(n, n);
    t1[0] = firsts[u];
    t1[firsts[u]] = 0;
    std::map<CanonicalKey, InvolutionSystem> local;
    for_each_involution(t1, true, [&](const std::vector<Point>& t) {
      InvolutionSystem sys({t0, t, t2});
      if (!connected(sys)) return;
      auto form = canonical_form(sys);
      local.emplace(std::move(form.key), std::move(form.system));
    });
    std::lock_guard lock(mutex);
    found.merge(local);
  });

  std::vector<FlagMap> out;
  out.reserve(found.size());
  for (auto& [key, sys] : found) out.emplace_back(std::move(sys));
  return out;
}

// ---------------------------------------------------------------------------

std::string to_string(const Ratio& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

namespace {

Ratio reduced(std::size_t num, std::size_t den) {
  std::size_t g = std::gcd(num, den);
  return {num / g, den / g};
}

}  // namespace

CensusRecord census_record(const FlagMap& map) {
  CensusRecord r;
  r.key = canonical_key(map);
  r.n_flags = map.size();
  auto cells = cell_counts(map);
  r.V = cells.vertices;
  r.E = cells.edges;
  r.F = cells.faces;
  r.chi = euler_characteristic(map);
  r.orientable = is_orientable(map);

  auto type = symmetry_type_graph(map);
  r.k = type.vertex_count();
  r.type_key = canonical_key(type.graph);

  auto tr = symmetry_type_graph(truncate(map).map);
  r.tr_k = tr.vertex_count();
  r.tr_type_key = canonical_key(tr.graph);

  auto le = symmetry_type_graph(leapfrog(map));
  r.le_k = le.vertex_count();
  r.le_type_key = canonical_key(le.graph);

  r.tr_ratio = reduced(r.tr_k, r.k);
  return r;
}

std::vector<CensusRecord> census(std::size_t max_flags, bool include_builders) {
  std::vector<std::pair<FlagMap, std::string>> maps;
  for (std::size_t n = 4; n <= max_flags; n += 4)
    for (auto& m : enumerate_maps(n)) maps.emplace_back(std::move(m), std::string());
  if (include_builders)
    for (auto& [label, m] : standard_builder_maps()) maps.emplace_back(std::move(m), label);

  std::vector<CensusRecord> records(maps.size());
  parallel_for(maps.size(), [&](std::size_t i) { records[i] = census_record(maps[i].first); });
  for (std::size_t i = 0; i < maps.size(); ++i)
    if (!maps[i].second.empty()) records[i].labels.push_back(maps[i].second);

  std::map<std::pair<std::size_t, CanonicalKey>, CensusRecord> merged;
  for (auto& r : records) {
    auto [it, inserted] = merged.try_emplace({r.n_flags, r.key}, r);
    if (!inserted)
      it->second.labels.insert(it->second.labels.end(), r.labels.begin(), r.labels.end());
  }
  std::vector<CensusRecord> out;
  out.reserve(merged.size());
  for (auto& [key, r] : merged) {
    std::sort(r.labels.begin(), r.labels.end());
    r.labels.erase(std::unique(r.labels.begin(), r.labels.end()), r.labels.end());
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace mapkit
