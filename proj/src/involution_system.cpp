#include "mapkit/involution_system.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace mapkit {

namespace {

constexpr Point kUnset = std::numeric_limits<Point>::max();

std::vector<bool> reachable_from_zero(const InvolutionSystem& sys) {
  std::vector<bool> seen(sys.size(), false);
  std::vector<Point> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (Colour c = 0; c < kColours; ++c) {
      Point y = sys(c, x);
      if (!seen[y]) {
        seen[y] = true;
        stack.push_back(y);
      }
    }
  }
  return seen;
}

}  // namespace

InvolutionSystem::InvolutionSystem(std::array<std::vector<Point>, 3> images)
    : images_(std::move(images)) {
  const std::size_t n = images_[0].size();
  if (n == 0) throw std::invalid_argument("involution system needs at least one point");
  for (Colour c = 0; c < kColours; ++c) {
    if (images_[c].size() != n)
      throw std::invalid_argument("colour " + std::to_string(c) + " has " +
                                  std::to_string(images_[c].size()) + " images, expected " +
                                  std::to_string(n));
    for (std::size_t x = 0; x < n; ++x)
      if (images_[c][x] >= n)
        throw std::invalid_argument("colour " + std::to_string(c) + " maps point " +
                                    std::to_string(x) + " out of range");
  }
}

InvolutionSystem InvolutionSystem::identity(std::size_t size) {
  std::vector<Point> id(size);
  std::iota(id.begin(), id.end(), Point{0});
  return InvolutionSystem({id, id, id});
}

// ---------------------------------------------------------------------------

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::not_involution: return "not-involution";
    case ViolationKind::disconnected: return "disconnected";
    case ViolationKind::four_cycle: return "four-cycle";
    case ViolationKind::fixed_point: return "fixed-point";
    case ViolationKind::fixed_point_t0t2: return "fixed-point-t0t2";
  }
  return "unknown";
}

std::string describe(const Violation& v) {
  std::string s = to_string(v.kind);
  if (v.colour >= 0) s += " colour " + std::to_string(v.colour);
  s += " at point " + std::to_string(v.point + 1);
  return s;
}

ValidationReport validate(const InvolutionSystem& sys, Strictness mode) {
  ValidationReport report;
  const std::size_t n = sys.size();

  for (Colour c = 0; c < kColours; ++c) {
    for (Point x = 0; x < n; ++x) {
      if (sys(c, sys(c, x)) != x) {
        report.push_back({ViolationKind::not_involution, c, x});
        break;
      }
    }
  }
  if (!report.empty()) return report;

  auto seen = reachable_from_zero(sys);
  if (auto it = std::find(seen.begin(), seen.end(), false); it != seen.end())
    report.push_back({ViolationKind::disconnected, -1, static_cast<Point>(it - seen.begin())});

  for (Point x = 0; x < n; ++x) {
    Point y = sys(2, sys(0, x));
    if (sys(2, sys(0, y)) != x) {
      report.push_back({ViolationKind::four_cycle, -1, x});
      break;
    }
  }

  if (mode == Strictness::strict) {
    for (Colour c = 0; c < kColours; ++c) {
      for (Point x = 0; x < n; ++x) {
        if (sys(c, x) == x) {
          report.push_back({ViolationKind::fixed_point, c, x});
          break;
        }
      }
    }
    for (Point x = 0; x < n; ++x) {
      if (sys(2, sys(0, x)) == x) {
        report.push_back({ViolationKind::fixed_point_t0t2, -1, x});
        break;
      }
    }
  }
  return report;
}

namespace {
std::string summarize(const ValidationReport& report) {
  std::string s = "invalid involution system:";
  for (const auto& v : report) s += " [" + describe(v) + "]";
  return s;
}
}  // namespace

InvalidSystemError::InvalidSystemError(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

FlagMap::FlagMap(InvolutionSystem sys) : sys_(std::move(sys)) {
  if (auto report = validate(sys_, Strictness::strict); !report.empty())
    throw InvalidSystemError(std::move(report));
}

// ---------------------------------------------------------------------------

OrbitPartition::OrbitPartition(std::vector<std::vector<Point>> classes, std::size_t n_points)
    : classes_(std::move(classes)), class_of_(n_points, std::numeric_limits<std::size_t>::max()) {
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    auto& cls = classes_[i];
    if (cls.empty()) throw std::invalid_argument("partition class " + std::to_string(i) + " is empty");
    std::sort(cls.begin(), cls.end());
    for (Point x : cls) {
      if (x >= n_points) throw std::invalid_argument("partition point out of range");
      if (class_of_[x] != std::numeric_limits<std::size_t>::max())
        throw std::invalid_argument("point " + std::to_string(x) + " lies in two classes");
      class_of_[x] = i;
    }
  }
  for (std::size_t x = 0; x < n_points; ++x)
    if (class_of_[x] == std::numeric_limits<std::size_t>::max())
      throw std::invalid_argument("point " + std::to_string(x) + " is in no class");
}

OrbitPartition OrbitPartition::from_labels(std::span<const std::size_t> labels) {
  std::vector<std::vector<Point>> classes;
  std::vector<std::size_t> index_of;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    std::size_t label = labels[x];
    if (label >= index_of.size()) index_of.resize(label + 1, std::numeric_limits<std::size_t>::max());
    if (index_of[label] == std::numeric_limits<std::size_t>::max()) {
      index_of[label] = classes.size();
      classes.emplace_back();
    }
    classes[index_of[label]].push_back(static_cast<Point>(x));
  }
  return OrbitPartition(std::move(classes), labels.size());
}

OrbitPartition orbits(const InvolutionSystem& sys, ColourSet colours) {
  const std::size_t n = sys.size();
  std::vector<std::vector<Point>> classes;
  std::vector<bool> seen(n, false);
  for (Point start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Point> cls{start};
    seen[start] = true;
    for (std::size_t i = 0; i < cls.size(); ++i) {
      for (Colour c = 0; c < kColours; ++c) {
        if (!colours.contains(c)) continue;
        Point y = sys(c, cls[i]);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    }
    classes.push_back(std::move(cls));
  }
  return OrbitPartition(std::move(classes), n);
}

CellCounts cell_counts(const FlagMap& map) {
  return {orbits(map, {1, 2}).size(), orbits(map, {0, 2}).size(), orbits(map, {0, 1}).size()};
}

int euler_characteristic(const FlagMap& map) {
  auto counts = cell_counts(map);
  return static_cast<int>(counts.vertices) - static_cast<int>(counts.edges) +
         static_cast<int>(counts.faces);
}

bool is_orientable(const FlagMap& map) {
  const std::size_t n = map.size();
  std::vector<int> side(n, -1);
  std::vector<Point> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    Point x = stack.back();
    stack.pop_back();
    for (Colour c = 0; c < kColours; ++c) {
      Point y = map(c, x);
      if (side[y] < 0) {
        side[y] = 1 - side[x];
        stack.push_back(y);
      } else if (side[y] == side[x]) {
        return false;
      }
    }
  }
  return true;
}

Point apply_word(const InvolutionSystem& sys, Point x, std::span<const Colour> word) {
  for (Colour c : word) x = sys(c, x);
  return x;
}

// ---------------------------------------------------------------------------

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (unsigned char b : bytes_) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

CanonicalKey CanonicalKey::from_hex(std::string_view hex) {
  if (hex.size() % 2 != 0) throw ParseError(0, "canonical key hex has odd length");
  auto nibble = [](char ch) -> int {
    if (ch >= '0' && ch <= '9') return ch - '0';
    if (ch >= 'a' && ch <= 'f') return ch - 'a' + 10;
    if (ch >= 'A' && ch <= 'F') return ch - 'A' + 10;
    throw ParseError(0, std::string("bad hex digit '") + ch + "'");
  };
  std::string bytes(hex.size() / 2, '\0');
  for (std::size_t i = 0; i < bytes.size(); ++i)
    bytes[i] = static_cast<char>((nibble(hex[2 * i]) << 4) | nibble(hex[2 * i + 1]));
  return CanonicalKey(std::move(bytes));
}

std::size_t CanonicalKeyHash::operator()(const CanonicalKey& key) const noexcept {
  return std::hash<std::string>{}(key.bytes());
}

namespace {

void put_u16(std::string& out, std::uint32_t v) {
  out.push_back(static_cast<char>((v >> 8) & 0xFF));
  out.push_back(static_cast<char>(v & 0xFF));
}

void put_u32(std::string& out, std::uint32_t v) {
  for (int shift = 24; shift >= 0; shift -= 8) out.push_back(static_cast<char>((v >> shift) & 0xFF));
}

}  // namespace

CanonicalForm canonical_form(const InvolutionSystem& sys) {
  const std::size_t n = sys.size();
  if (n >= 0xFFFF) throw std::invalid_argument("canonical_form supports fewer than 65535 points");

  std::vector<Point> best;          // transition table, 3 entries per canonical point
  std::vector<Point> best_label;
  std::vector<Point> table(3 * n);
  std::vector<Point> label(n);
  std::vector<Point> order;
  order.reserve(n);

  for (Point root = 0; root < n; ++root) {
    std::fill(label.begin(), label.end(), kUnset);
    order.clear();
    label[root] = 0;
    order.push_back(root);
    bool worse = false;
    bool below = best.empty();  // already known to beat `best`
    for (std::size_t pos = 0; pos < order.size() && !worse; ++pos) {
      Point x = order[pos];
      for (Colour c = 0; c < kColours; ++c) {
        Point y = sys(c, x);
        if (label[y] == kUnset) {
          label[y] = static_cast<Point>(order.size());
          order.push_back(y);
        }
        Point v = label[y];
        table[3 * pos + c] = v;
        if (!below) {
          if (v > best[3 * pos + c]) {
            worse = true;
            break;
          }
          if (v < best[3 * pos + c]) below = true;
        }
      }
    }
    if (worse) continue;
    if (order.size() != n) throw std::invalid_argument("canonical_form requires a connected system");
    if (below) {
      best = table;
      best_label = label;
    }
  }

  std::string bytes;
  bytes.reserve(4 + 6 * n);
  put_u32(bytes, static_cast<std::uint32_t>(n));
  for (Point v : best) put_u16(bytes, v);

  std::array<std::vector<Point>, 3> images;
  for (Colour c = 0; c < kColours; ++c) {
    images[c].resize(n);
    for (std::size_t p = 0; p < n; ++p) images[c][p] = best[3 * p + c];
  }
  return {CanonicalKey(std::move(bytes)), InvolutionSystem(std::move(images)), std::move(best_label)};
}

CanonicalKey canonical_key(const InvolutionSystem& sys) { return canonical_form(sys).key; }

InvolutionSystem system_from_key(const CanonicalKey& key) {
  const std::string& b = key.bytes();
  if (b.size() < 4) throw ParseError(0, "canonical key too short");
  auto byte = [&](std::size_t i) { return static_cast<std::uint32_t>(static_cast<unsigned char>(b[i])); };
  std::uint32_t n = (byte(0) << 24) | (byte(1) << 16) | (byte(2) << 8) | byte(3);
  if (b.size() != 4 + 6 * static_cast<std::size_t>(n)) throw ParseError(0, "canonical key has wrong length");
  std::array<std::vector<Point>, 3> images;
  for (auto& img : images) img.resize(n);
  for (std::size_t p = 0; p < n; ++p)
    for (Colour c = 0; c < kColours; ++c) {
      std::size_t at = 4 + 2 * (3 * p + c);
      images[c][p] = (byte(at) << 8) | byte(at + 1);
    }
  try {
    return InvolutionSystem(std::move(images));
  } catch (const std::invalid_argument& e) {
    throw ParseError(0, std::string("canonical key does not encode a system: ") + e.what());
  }
}

bool isomorphic(const InvolutionSystem& a, const InvolutionSystem& b) {
  if (a.size() != b.size()) return false;
  for (Point target = 0; target < b.size(); ++target) {
    auto f = extend_morphism(a, b, 0, target);
    if (!f) continue;
    std::vector<bool> hit(b.size(), false);
    bool injective = true;
    for (Point y : *f) {
      if (hit[y]) {
        injective = false;
        break;
      }
      hit[y] = true;
    }
    if (injective) return true;
  }
  return false;
}

std::optional<std::vector<Point>> extend_morphism(const InvolutionSystem& from,
                                                  const InvolutionSystem& to, Point source,
                                                  Point target) {
  std::vector<Point> image(from.size(), kUnset);
  std::vector<Point> queue{source};
  image[source] = target;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    Point x = queue[i];
    for (Colour c = 0; c < kColours; ++c) {
      Point y = from(c, x);
      Point fy = to(c, image[x]);
      if (image[y] == kUnset) {
        image[y] = fy;
        queue.push_back(y);
      } else if (image[y] != fy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != from.size()) throw std::invalid_argument("extend_morphism requires a connected source");
  return image;
}

InvolutionSystem relabel(const InvolutionSystem& sys, std::span<const Point> perm) {
  const std::size_t n = sys.size();
  std::array<std::vector<Point>, 3> images;
  for (Colour c = 0; c < kColours; ++c) {
    images[c].resize(n);
    for (Point x = 0; x < n; ++x) images[c][perm[x]] = perm[sys(c, x)];
  }
  return InvolutionSystem(std::move(images));
}

// ---------------------------------------------------------------------------

IncompatiblePartitionError::IncompatiblePartitionError(Colour colour, std::size_t from_class,
                                                       std::size_t to_class_a,
                                                       std::size_t to_class_b)
    : Error("partition is not compatible with colour " + std::to_string(colour) + ": class " +
            std::to_string(from_class) + " maps into classes " + std::to_string(to_class_a) +
            " and " + std::to_string(to_class_b)),
      colour_(colour),
      from_(from_class) {}

InvolutionSystem quotient(const InvolutionSystem& sys, const OrbitPartition& partition) {
  if (partition.point_count() != sys.size())
    throw std::invalid_argument("partition size does not match the system");
  const std::size_t k = partition.size();
  std::array<std::vector<Point>, 3> images;
  for (Colour c = 0; c < kColours; ++c) {
    images[c].resize(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& cls = partition[i];
      std::size_t target = partition.class_of(sys(c, cls.front()));
      for (Point x : cls) {
        std::size_t other = partition.class_of(sys(c, x));
        if (other != target) throw IncompatiblePartitionError(c, i, target, other);
      }
      images[c][i] = static_cast<Point>(target);
    }
  }
  return InvolutionSystem(std::move(images));
}

}  // namespace mapkit
