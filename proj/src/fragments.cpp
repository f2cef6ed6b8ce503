#include "locdim/fragments.hpp"

#include <algorithm>
#include <string>

#include "locdim/errors.hpp"

namespace locdim {

FragmentClass fragment_class_at(int index1) {
  if (index1 < 1 || index1 > 10)
    throw InputContractError("fragment index must be in 1..10");
  return static_cast<FragmentClass>(index1);
}

const FragmentInfo& fragment_info(FragmentClass cls) {
  static const std::array<FragmentInfo, 10> catalog = {{
      {FragmentClass::diamond, "F1", 4,
       {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}},
       {"a1", "a2", "a3", "a4"},
       {3, 2, 3, 2}},
      {FragmentClass::paw, "F2", 4,
       {{0, 1}, {0, 3}, {1, 2}, {1, 3}},
       {"b1", "b2", "b3", "b4"},
       {2, 3, 1, 2}},
      {FragmentClass::triangle, "F3", 3,
       {{0, 1}, {0, 2}, {1, 2}},
       {"c1", "c2", "c3", nullptr},
       {2, 2, 2, -1}},
      {FragmentClass::cycle4, "F4", 4,
       {{0, 1}, {1, 2}, {2, 3}, {0, 3}},
       {"v1", "v2", "v3", "v4"},
       {2, 2, 2, 2}},
      {FragmentClass::path4, "F5", 4,
       {{0, 1}, {1, 2}, {2, 3}},
       {"v1", "v2", "v3", "v4"},
       {1, 2, 2, 1}},
      {FragmentClass::claw, "F6", 4,
       {{0, 3}, {1, 3}, {2, 3}},
       {"f1", "f2", "f3", "f4"},
       {1, 1, 1, 3}},
      {FragmentClass::two_k2, "F7", 4,
       {{0, 1}, {2, 3}},
       {"x1", "x2", "y1", "y2"},
       {1, 1, 1, 1}},
      {FragmentClass::path3, "F8", 3,
       {{0, 1}, {1, 2}},
       {"v1", "v2", "v3", nullptr},
       {1, 2, 1, -1}},
      {FragmentClass::single_edge, "F9", 2,
       {{0, 1}},
       {"v1", "v2", nullptr, nullptr},
       {1, 1, -1, -1}},
      {FragmentClass::single_vertex, "F10", 1,
       {},
       {"v1", nullptr, nullptr, nullptr},
       {0, -1, -1, -1}},
  }};
  return catalog[static_cast<std::size_t>(static_cast<int>(cls) - 1)];
}

VertexSet FragmentPlacement::mask() const {
  VertexSet s = 0;
  for (int i = 0; i < order(); ++i) s |= vertex_bit(slot[static_cast<std::size_t>(i)]);
  return s;
}

std::vector<int> FragmentPlacement::sorted_vertices() const {
  return to_vertex_list(mask());
}

VertexSet FragmentPlacement::slots_mask(std::span<const int> slot_indices) const {
  VertexSet s = 0;
  for (int i : slot_indices) s |= vertex_bit(slot[static_cast<std::size_t>(i)]);
  return s;
}

namespace {

FragmentPlacement make_placement(FragmentClass cls, std::initializer_list<int> vs) {
  FragmentPlacement p;
  p.cls = cls;
  int i = 0;
  for (int v : vs) p.slot[static_cast<std::size_t>(i++)] = v;
  return p;
}

}  // namespace

std::optional<FragmentPlacement> classify_induced(const Graph& g,
                                                  std::span<const int> vs) {
  const int k = static_cast<int>(vs.size());
  if (k < 1 || k > 4)
    throw InputContractError("classify_induced takes 1 to 4 vertices");

  std::array<int, 4> v{};
  for (int i = 0; i < k; ++i) {
    if (vs[static_cast<std::size_t>(i)] < 0 ||
        vs[static_cast<std::size_t>(i)] >= g.order())
      throw InputContractError("classify_induced: vertex out of range");
    v[static_cast<std::size_t>(i)] = vs[static_cast<std::size_t>(i)];
  }
  std::sort(v.begin(), v.begin() + k);
  for (int i = 1; i < k; ++i)
    if (v[static_cast<std::size_t>(i)] == v[static_cast<std::size_t>(i - 1)])
      throw InputContractError("classify_induced: duplicate vertex");

  // Induced degrees and edge count.
  std::array<int, 4> deg{};
  int m = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.has_edge(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)])) {
        ++m;
        ++deg[static_cast<std::size_t>(i)];
        ++deg[static_cast<std::size_t>(j)];
      }

  auto with_degree = [&](int d) {
    std::vector<int> out;
    for (int i = 0; i < k; ++i)
      if (deg[static_cast<std::size_t>(i)] == d)
        out.push_back(v[static_cast<std::size_t>(i)]);
    return out;
  };

  if (k == 1) return make_placement(FragmentClass::single_vertex, {v[0]});

  if (k == 2) {
    if (m == 1) return make_placement(FragmentClass::single_edge, {v[0], v[1]});
    return std::nullopt;
  }

  if (k == 3) {
    if (m == 3) return make_placement(FragmentClass::triangle, {v[0], v[1], v[2]});
    if (m == 2) {
      const int center = with_degree(2)[0];
      const auto ends = with_degree(1);
      return make_placement(FragmentClass::path3, {ends[0], center, ends[1]});
    }
    return std::nullopt;
  }

  // k == 4. Dispatch on edge count, then degree sequence; this separates all
  // catalog classes among 4-vertex graphs.
  switch (m) {
    case 5: {
      const auto deg3 = with_degree(3);
      const auto deg2 = with_degree(2);
      return make_placement(FragmentClass::diamond,
                            {deg3[0], deg2[0], deg3[1], deg2[1]});
    }
    case 4: {
      const auto deg3 = with_degree(3);
      if (deg3.empty()) {
        // Plain 4-cycle; orient from the smallest vertex toward its smaller
        // neighbor.
        const int p1 = v[0];
        std::vector<int> nb;
        for (int i = 1; i < 4; ++i)
          if (g.has_edge(p1, v[static_cast<std::size_t>(i)]))
            nb.push_back(v[static_cast<std::size_t>(i)]);
        const int p2 = nb[0];
        const int p4 = nb[1];
        int p3 = -1;
        for (int i = 1; i < 4; ++i) {
          const int c = v[static_cast<std::size_t>(i)];
          if (c != p2 && c != p4) p3 = c;
        }
        return make_placement(FragmentClass::cycle4, {p1, p2, p3, p4});
      }
      const auto deg2 = with_degree(2);
      const auto deg1 = with_degree(1);
      if (deg2.size() != 2 || deg1.size() != 1) return std::nullopt;
      return make_placement(FragmentClass::paw,
                            {deg2[0], deg3[0], deg1[0], deg2[1]});
    }
    case 3: {
      const auto deg1 = with_degree(1);
      if (deg1.size() == 3) {
        const int center = with_degree(3)[0];
        return make_placement(FragmentClass::claw,
                              {deg1[0], deg1[1], deg1[2], center});
      }
      if (deg1.size() == 2 && with_degree(2).size() == 2) {
        const int p1 = deg1[0];
        int p2 = -1;
        for (int i = 0; i < 4; ++i) {
          const int c = v[static_cast<std::size_t>(i)];
          if (c != p1 && g.has_edge(p1, c)) p2 = c;
        }
        int p3 = -1;
        for (int i = 0; i < 4; ++i) {
          const int c = v[static_cast<std::size_t>(i)];
          if (c != p1 && c != p2 && g.has_edge(p2, c)) p3 = c;
        }
        return make_placement(FragmentClass::path4, {p1, p2, p3, deg1[1]});
      }
      return std::nullopt;  // triangle plus isolated vertex
    }
    case 2: {
      if (with_degree(1).size() != 4) return std::nullopt;  // P3 + K1
      const int x1 = v[0];
      int x2 = -1;
      for (int i = 1; i < 4; ++i)
        if (g.has_edge(x1, v[static_cast<std::size_t>(i)]))
          x2 = v[static_cast<std::size_t>(i)];
      std::vector<int> rest;
      for (int i = 1; i < 4; ++i)
        if (v[static_cast<std::size_t>(i)] != x2)
          rest.push_back(v[static_cast<std::size_t>(i)]);
      return make_placement(FragmentClass::two_k2, {x1, x2, rest[0], rest[1]});
    }
    default:
      return std::nullopt;  // K4 (m == 6) or an isolated vertex (m <= 1)
  }
}

std::vector<FragmentPlacement> enumerate_placements(const Graph& g,
                                                    FragmentClass cls,
                                                    VertexSet allowed) {
  allowed &= g.vertex_mask();
  const auto verts = to_vertex_list(allowed);
  const int k = fragment_info(cls).order;
  const int nv = static_cast<int>(verts.size());
  std::vector<FragmentPlacement> out;
  if (nv < k) return out;

  std::array<int, 4> pick{};
  std::array<int, 4> idx{};
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    for (int i = 0; i < k; ++i)
      pick[static_cast<std::size_t>(i)] =
          verts[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    auto placed = classify_induced(g, std::span<const int>(pick.data(),
                                                           static_cast<std::size_t>(k)));
    if (placed && placed->cls == cls) out.push_back(*placed);

    // next combination in lexicographic order
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == nv - k + i) --i;
    if (i < 0) break;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

}  // namespace locdim
