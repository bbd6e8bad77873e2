#include "ramsey/constructions.hpp"

#include <bit>
#include <numeric>
#include <string>

#include "ramsey/errors.hpp"

namespace ramsey {

int ResidueClasses::class_of(Gf16 a) const {
  for (int j = 0; j < 3; ++j)
    for (Gf16 x : classes[j])
      if (x == a) return j;
  throw InvalidArgument("zero has no residue class");
}

ResidueClasses cubic_classes() {
  ResidueClasses r{};
  Gf16 power = Gf16::one();
  for (int e = 0; e < 15; ++e) {
    r.classes[e % 3][e / 3] = power;
    power = power * Gf16::generator();
  }
  return r;
}

bool is_sum_free(std::span<const Gf16> set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const Gf16 s = set[i] + set[j];
      for (Gf16 x : set)
        if (x == s) return false;
    }
  return true;
}

EdgeColoring construct_gf16() {
  const ResidueClasses classes = cubic_classes();
  EdgeColoring c(Gf16::kOrder);
  for (unsigned u = 0; u < Gf16::kOrder; ++u)
    for (unsigned w = u + 1; w < Gf16::kOrder; ++w)
      c.set(static_cast<Vertex>(u), static_cast<Vertex>(w),
            color_from_index(classes.class_of(Gf16(u) + Gf16(w))));
  return c;
}

namespace cylinder {
std::string label(Vertex v) {
  if (v == kHub) return "O";
  if (v < 1 || v > 3 * kBlockSize) throw InvalidArgument("not a cylinder vertex");
  const int part = (v - 1) / kBlockSize;
  return std::string(1, static_cast<char>('A' + part)) + std::to_string((v - 1) % kBlockSize + 1);
}
}  // namespace cylinder

ColoringTemplate cylinder_template() {
  using cylinder::Part;
  using cylinder::vertex;
  constexpr int kN = 1 + 3 * cylinder::kBlockSize;
  ColoringTemplate t(kN);

  const std::array<Color, 3> spoke = {Color::Blue, Color::Red, Color::Yellow};
  const std::array<ColorSet, 3> block = {ColorSet::of(Color::Red, Color::Yellow),
                                         ColorSet::of(Color::Yellow, Color::Blue),
                                         ColorSet::of(Color::Blue, Color::Red)};
  for (int p = 0; p < 3; ++p) {
    const auto part = static_cast<Part>(p);
    for (int i = 1; i <= cylinder::kBlockSize; ++i) {
      t.set_domain(cylinder::kHub, vertex(part, i), ColorSet::of(spoke[p]));
      for (int j = i + 1; j <= cylinder::kBlockSize; ++j)
        t.set_domain(vertex(part, i), vertex(part, j), block[p]);
    }
  }
  for (int i = 1; i <= cylinder::kBlockSize; ++i)
    for (int j = 1; j <= cylinder::kBlockSize; ++j) {
      const EdgeOrdinal ab = edge_ordinal(vertex(Part::A, i), vertex(Part::B, j), kN);
      const EdgeOrdinal bc = edge_ordinal(vertex(Part::B, i), vertex(Part::C, j), kN);
      const EdgeOrdinal ca = edge_ordinal(vertex(Part::C, i), vertex(Part::A, j), kN);
      t.add_coupling({bc, ab, 1});
      t.add_coupling({ca, ab, 2});
    }
  return t;
}

namespace {

Color shift_color(Color c, int shift) {
  for (int s = 0; s < ((shift % 3) + 3) % 3; ++s) c = sigma(c);
  return c;
}

class TemplateSolver {
 public:
  TemplateSolver(const ColoringTemplate& t, std::size_t limit)
      : t_(t), n_(t.vertex_count()), m_(t.edge_count()), limit_(limit) {
    if (n_ > kWordCeiling) throw CapacityError("template exceeds the bit-row ceiling");
    for (auto& r : rows_) r.assign(n_, 0);
    ends_.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v) ends_.push_back({u, v});
    assigned_.assign(m_, -1);
    consistent_ = build_groups();
  }

  std::vector<EdgeColoring> run() {
    if (consistent_ && limit_ > 0) search(0);
    return std::move(solutions_);
  }

 private:
  // Weighted union-find over the Z/3 action of sigma: color(e) =
  // sigma^offset(e)(color(root(e))).
  std::pair<EdgeOrdinal, int> find(EdgeOrdinal e) {
    int off = 0;
    EdgeOrdinal r = e;
    while (parent_[r] != r) {
      off += parent_offset_[r];
      r = parent_[r];
    }
    return {r, off % 3};
  }

  bool build_groups() {
    parent_.resize(m_);
    std::iota(parent_.begin(), parent_.end(), EdgeOrdinal{0});
    parent_offset_.assign(m_, 0);
    for (const Coupling& k : t_.couplings()) {
      auto [rt, ot] = find(k.target);
      auto [rs, os] = find(k.source);
      if (rt == rs) {
        if ((ot - os - k.shift) % 3 != 0) return false;
        continue;
      }
      // offset(target) = offset(source) + shift, so attach rt below rs.
      parent_[rt] = rs;
      parent_offset_[rt] = ((os + k.shift - ot) % 3 + 3) % 3;
    }
    offset_.resize(m_);
    members_.assign(m_, {});
    for (EdgeOrdinal e = 0; e < m_; ++e) {
      auto [r, off] = find(e);
      offset_[e] = off;
      members_[r].push_back(e);
    }
    root_.resize(m_);
    for (EdgeOrdinal e = 0; e < m_; ++e) root_[e] = find(e).first;
    return true;
  }

  bool place(EdgeOrdinal e, Color x) {
    if (!t_.domain(e).contains(x)) return false;
    const auto [u, v] = ends_[e];
    const auto& r = rows_[to_index(x)];
    if ((r[u] & r[v]) != 0) return false;
    assigned_[e] = static_cast<std::int8_t>(to_index(x));
    rows_[to_index(x)][u] |= std::uint64_t{1} << v;
    rows_[to_index(x)][v] |= std::uint64_t{1} << u;
    return true;
  }

  void unplace(EdgeOrdinal e) {
    const auto [u, v] = ends_[e];
    auto& r = rows_[assigned_[e]];
    r[u] &= ~(std::uint64_t{1} << v);
    r[v] &= ~(std::uint64_t{1} << u);
    assigned_[e] = -1;
  }

  void search(EdgeOrdinal pos) {
    while (pos < m_ && assigned_[pos] >= 0) ++pos;
    if (pos == m_) {
      std::vector<Color> colors(m_);
      for (EdgeOrdinal e = 0; e < m_; ++e) colors[e] = color_from_index(assigned_[e]);
      solutions_.emplace_back(n_, std::move(colors));
      return;
    }
    const auto& group = members_[root_[pos]];
    for (Color x : kAllColors) {
      if (!t_.domain(pos).contains(x)) continue;
      const Color root_color = shift_color(x, -offset_[pos]);
      std::size_t placed = 0;
      for (EdgeOrdinal e : group) {
        if (!place(e, shift_color(root_color, offset_[e]))) break;
        ++placed;
      }
      if (placed == group.size()) search(pos + 1);
      for (std::size_t i = placed; i-- > 0;) unplace(group[i]);
      if (solutions_.size() >= limit_) return;
    }
  }

  const ColoringTemplate& t_;
  int n_;
  std::size_t m_;
  std::size_t limit_;
  bool consistent_ = true;
  std::array<std::vector<std::uint64_t>, kNumColors> rows_;
  std::vector<Edge> ends_;
  std::vector<std::int8_t> assigned_;
  std::vector<EdgeOrdinal> parent_;
  std::vector<int> parent_offset_;
  std::vector<EdgeOrdinal> root_;
  std::vector<int> offset_;
  std::vector<std::vector<EdgeOrdinal>> members_;
  std::vector<EdgeColoring> solutions_;
};

}  // namespace

std::vector<EdgeColoring> solve_template(const ColoringTemplate& t, std::size_t limit) {
  return TemplateSolver(t, limit).run();
}

EdgeColoring construct_cylinder() {
  auto solutions = solve_template(cylinder_template(), 1);
  if (solutions.empty()) throw PreconditionError("cylinder template has no triangle-free completion");
  return std::move(solutions.front());
}

}  // namespace ramsey
