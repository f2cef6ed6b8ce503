#include "locdim/packing.hpp"

#include <algorithm>
#include <string>

#include "locdim/errors.hpp"
#include "json.hpp"

namespace locdim {

namespace {

struct PackingSearch {
  const std::vector<VertexSet>& masks;
  const std::vector<VertexSet>& suffix_union;
  int piece_order;
  long long node_cap;
  long long nodes = 0;
  std::vector<int> best;
  std::vector<int> current;

  void dfs(std::size_t idx, VertexSet used) {
    if (++nodes > node_cap)
      throw BudgetError("packing search exceeded node cap of " +
                        std::to_string(node_cap));
    if (current.size() > best.size()) best = current;
    if (idx == masks.size()) return;
    const int avail = set_size(suffix_union[idx] & ~used);
    if (static_cast<int>(current.size()) + avail / piece_order <=
        static_cast<int>(best.size()))
      return;
    if ((masks[idx] & used) == 0) {
      current.push_back(static_cast<int>(idx));
      dfs(idx + 1, used | masks[idx]);
      current.pop_back();
    }
    dfs(idx + 1, used);
  }
};

}  // namespace

std::vector<FragmentPlacement> max_disjoint_packing(const Graph& g,
                                                    FragmentClass cls,
                                                    VertexSet allowed,
                                                    const PackingBudget& budget) {
  const auto placements = enumerate_placements(g, cls, allowed);
  const std::size_t np = placements.size();
  std::vector<VertexSet> masks(np);
  for (std::size_t i = 0; i < np; ++i) masks[i] = placements[i].mask();
  std::vector<VertexSet> suffix_union(np + 1, 0);
  for (std::size_t i = np; i-- > 0;) suffix_union[i] = suffix_union[i + 1] | masks[i];

  PackingSearch search{masks, suffix_union, fragment_info(cls).order,
                       budget.node_cap, 0, {}, {}};
  // Greedy pass in lexicographic order; this equals the first DFS leaf, so
  // preloading it as the incumbent keeps the returned optimum the first one
  // in DFS order.
  VertexSet used = 0;
  for (std::size_t i = 0; i < np; ++i) {
    if ((masks[i] & used) == 0) {
      search.best.push_back(static_cast<int>(i));
      used |= masks[i];
    }
  }
  search.dfs(0, 0);

  std::vector<FragmentPlacement> out;
  out.reserve(search.best.size());
  for (int i : search.best) out.push_back(placements[static_cast<std::size_t>(i)]);
  return out;
}

VertexSet Division::layer_mask(int layer_index0) const {
  VertexSet s = 0;
  for (const auto& p : layers[static_cast<std::size_t>(layer_index0)]) s |= p.mask();
  return s;
}

Division local_vertex_division(const Graph& g, const PackingBudget& budget) {
  if (!is_connected(g))
    throw InputContractError("local vertex division: graph must be connected");
  if (g.order() < 4)
    throw InputContractError("local vertex division: order must be at least 4");
  if (has_k4(g))
    throw InputContractError("local vertex division: graph contains K4");

  Division d;
  VertexSet rem = g.vertex_mask();
  for (int i = 0; i < 9; ++i) {
    d.residual[static_cast<std::size_t>(i)] = rem;
    d.layers[static_cast<std::size_t>(i)] =
        max_disjoint_packing(g, fragment_class_at(i + 1), rem, budget);
    for (const auto& p : d.layers[static_cast<std::size_t>(i)]) rem &= ~p.mask();
  }
  d.residual[9] = rem;
  for (int v : elements(rem)) {
    if (g.neighbors(v) & rem)
      throw std::logic_error(
          "vertex left after the edge stage is not isolated; packing bug");
    FragmentPlacement p;
    p.cls = FragmentClass::single_vertex;
    p.slot[0] = v;
    d.layers[9].push_back(p);
  }
  return d;
}

bool FactReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const FactCheck& c) { return c.pass; });
}

const FactCheck* FactReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

namespace {

std::string vertex_name(const FragmentPlacement& p, int slot_index) {
  return fragment_info(p.cls).slot_names[static_cast<std::size_t>(slot_index)];
}

// Any 3- or 4-cycle (as a subgraph) through v inside V(H) + v.
bool cycle3_through(const Graph& g, VertexSet h_mask, int v) {
  const VertexSet nb = g.neighbors(v) & h_mask;
  for (int x : elements(nb))
    if (g.neighbors(x) & nb & ~(vertex_bit(x) | (vertex_bit(x) - 1))) return true;
  return false;
}

bool cycle4_through(const Graph& g, VertexSet h_mask, int v) {
  const VertexSet nb = g.neighbors(v) & h_mask;
  for (int x : elements(nb))
    for (int y : elements(nb & ~(vertex_bit(x) | (vertex_bit(x) - 1))))
      if (g.neighbors(x) & g.neighbors(y) & h_mask & ~vertex_bit(v) &
          ~vertex_bit(x) & ~vertex_bit(y))
        return true;
  return false;
}

}  // namespace

FactReport check_division_facts(const Graph& g, const Division& d) {
  FactReport report;
  auto fail = [&](const std::string& name, const std::string& witness) {
    report.checks.push_back({name, false, witness});
  };
  auto pass = [&](const std::string& name) {
    report.checks.push_back({name, true, {}});
  };
  auto check = [&](const std::string& name, bool ok, const std::string& witness) {
    if (ok)
      pass(name);
    else
      fail(name, witness);
  };

  // Well-formedness: the layers partition V(G), every placement is an
  // induced occurrence of its class inside its stage residual, and each
  // stage packing is not extendable.
  {
    bool ok = true;
    std::string witness;
    std::vector<int> cover(static_cast<std::size_t>(g.order()), 0);
    for (const auto& layer : d.layers)
      for (const auto& p : layer)
        for (int v : p.sorted_vertices()) ++cover[static_cast<std::size_t>(v)];
    for (int v = 0; v < g.order() && ok; ++v)
      if (cover[static_cast<std::size_t>(v)] != 1) {
        ok = false;
        witness = "vertex " + std::to_string(v) + " covered " +
                  std::to_string(cover[static_cast<std::size_t>(v)]) + " times";
      }
    for (int i = 0; i < 10 && ok; ++i) {
      for (const auto& p : d.layers[static_cast<std::size_t>(i)]) {
        const auto vs = p.sorted_vertices();
        auto cls = classify_induced(g, vs);
        if (!cls || cls->cls != fragment_class_at(i + 1)) {
          ok = false;
          witness = "layer F" + std::to_string(i + 1) +
                    " placement is not an induced occurrence";
          break;
        }
        if ((p.mask() & ~d.residual[static_cast<std::size_t>(i)]) != 0) {
          ok = false;
          witness = "layer F" + std::to_string(i + 1) +
                    " placement leaves its stage residual";
          break;
        }
      }
      // Not extendable: no further disjoint occurrence fits in the residual.
      if (ok && i < 9) {
        const VertexSet free =
            d.residual[static_cast<std::size_t>(i)] & ~d.layer_mask(i);
        if (!enumerate_placements(g, fragment_class_at(i + 1), free).empty()) {
          ok = false;
          witness = "layer F" + std::to_string(i + 1) +
                    " packing is extendable";
        }
      }
    }
    check("division_wellformed", ok, witness);
  }

  const auto& diamonds = d.layers[0];
  const auto& paws = d.layers[1];
  const auto& triangles = d.layers[2];
  const VertexSet v12 = d.layer_mask(0) | d.layer_mask(1);
  VertexSet v4to10 = 0;
  for (int i = 3; i < 10; ++i) v4to10 |= d.layer_mask(i);

  // Fact 1: no vertex outside a diamond is adjacent to one of its degree-2
  // vertices and to both of its degree-3 vertices.
  {
    bool ok = true;
    std::string witness;
    for (const auto& h : diamonds) {
      const int a1 = h.slot[0], a2 = h.slot[1], a3 = h.slot[2], a4 = h.slot[3];
      for (int v : elements(g.vertex_mask() & ~h.mask())) {
        if ((g.has_edge(v, a2) || g.has_edge(v, a4)) && g.has_edge(v, a1) &&
            g.has_edge(v, a3)) {
          ok = false;
          witness = "vertex " + std::to_string(v) + " against diamond {" +
                    std::to_string(a1) + "," + std::to_string(a2) + "," +
                    std::to_string(a3) + "," + std::to_string(a4) + "}";
          break;
        }
      }
      if (!ok) break;
    }
    check("fact_1", ok, witness);
  }

  // Fact 2: vertices of the stage-2 residual see at most one of a paw's
  // triangle vertices.
  {
    bool ok = true;
    std::string witness;
    for (const auto& h : paws) {
      const VertexSet tri =
          vertex_bit(h.slot[0]) | vertex_bit(h.slot[1]) | vertex_bit(h.slot[3]);
      for (int v : elements(d.residual[1] & ~h.mask())) {
        if (set_size(g.neighbors(v) & tri) > 1) {
          ok = false;
          witness = "vertex " + std::to_string(v) + " sees " +
                    std::to_string(set_size(g.neighbors(v) & tri)) +
                    " triangle vertices of a paw";
          break;
        }
      }
      if (!ok) break;
    }
    check("fact_2", ok, witness);
  }

  // Fact 3: stage-4 residual vertices see at most two vertices of a packed
  // 4-cycle and close no 3-cycle with it.
  {
    bool ok = true;
    std::string witness;
    for (const auto& h : d.layers[3]) {
      for (int v : elements(d.residual[3] & ~h.mask())) {
        if (set_size(g.neighbors(v) & h.mask()) > 2 ||
            cycle3_through(g, h.mask(), v)) {
          ok = false;
          witness = "vertex " + std::to_string(v) + " against a packed C4";
          break;
        }
      }
      if (!ok) break;
    }
    check("fact_3", ok, witness);
  }

  // Fact 4: stage-5 residual vertices see at most two vertices of a packed
  // P4 and close no 3- or 4-cycle with it.
  {
    bool ok = true;
    std::string witness;
    for (const auto& h : d.layers[4]) {
      for (int v : elements(d.residual[4] & ~h.mask())) {
        if (set_size(g.neighbors(v) & h.mask()) > 2 ||
            cycle3_through(g, h.mask(), v) || cycle4_through(g, h.mask(), v)) {
          ok = false;
          witness = "vertex " + std::to_string(v) + " against a packed P4";
          break;
        }
      }
      if (!ok) break;
    }
    check("fact_4", ok, witness);
  }

  // Fact 5: for layers 6..9, residual vertices see at most one vertex of a
  // packed fragment.
  {
    bool ok = true;
    std::string witness;
    for (int layer = 5; layer < 9 && ok; ++layer) {
      for (const auto& h : d.layers[static_cast<std::size_t>(layer)]) {
        for (int v :
             elements(d.residual[static_cast<std::size_t>(layer)] & ~h.mask())) {
          if (set_size(g.neighbors(v) & h.mask()) > 1) {
            ok = false;
            witness = "vertex " + std::to_string(v) + " sees >1 vertex of an F" +
                      std::to_string(layer + 1) + " placement";
            break;
          }
        }
        if (!ok) break;
      }
    }
    check("fact_5", ok, witness);
  }

  // Statement I: no edges between distinct packed triangles.
  {
    bool ok = true;
    std::string witness;
    for (std::size_t a = 0; a < triangles.size() && ok; ++a)
      for (std::size_t b = a + 1; b < triangles.size(); ++b) {
        for (int v : elements(triangles[a].mask()))
          if (g.neighbors(v) & triangles[b].mask()) {
            ok = false;
            witness = "edge between packed triangles " + std::to_string(a) +
                      " and " + std::to_string(b);
            break;
          }
        if (!ok) break;
      }
    check("statement_I", ok, witness);
  }

  // Statement II: no edges between triangle vertices and layers F4..F10.
  {
    bool ok = true;
    std::string witness;
    for (int u : elements(d.layer_mask(2))) {
      if (g.neighbors(u) & v4to10) {
        ok = false;
        witness = "triangle vertex " + std::to_string(u) +
                  " adjacent to a later layer";
        break;
      }
    }
    check("statement_II", ok, witness);
  }

  // Statement III: a diamond/paw vertex adjacent to a triangle vertex
  // distinguishes it from another vertex of the same triangle.
  {
    bool ok = true;
    std::string witness;
    DistanceMatrix dm = DistanceMatrix::compute(g);
    for (const auto& f : triangles) {
      const auto cs = f.sorted_vertices();
      for (int v : elements(v12)) {
        for (int i = 0; i < 3 && ok; ++i) {
          if (!g.has_edge(v, cs[static_cast<std::size_t>(i)])) continue;
          bool separates = false;
          for (int j = 0; j < 3; ++j) {
            if (j == i) continue;
            if (dm(v, cs[static_cast<std::size_t>(i)]) !=
                dm(v, cs[static_cast<std::size_t>(j)]))
              separates = true;
          }
          if (!separates) {
            ok = false;
            witness = "vertex " + std::to_string(v) +
                      " adjacent to triangle vertex " +
                      std::to_string(cs[static_cast<std::size_t>(i)]) +
                      " distinguishes neither other corner";
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    check("statement_III", ok, witness);
  }

  // Statement IV: a paw touching two packed triangles touches them through
  // a single common vertex.
  {
    bool ok = true;
    std::string witness;
    for (const auto& h : paws) {
      for (std::size_t a = 0; a < triangles.size() && ok; ++a)
        for (std::size_t b = a + 1; b < triangles.size(); ++b) {
          VertexSet ta = 0, tb = 0;
          for (int v : elements(h.mask())) {
            if (g.neighbors(v) & triangles[a].mask()) ta |= vertex_bit(v);
            if (g.neighbors(v) & triangles[b].mask()) tb |= vertex_bit(v);
          }
          if (ta && tb && set_size(ta | tb) != 1) {
            ok = false;
            witness = "paw touches triangles " + std::to_string(a) + " and " +
                      std::to_string(b) + " through " +
                      std::to_string(set_size(ta | tb)) + " vertices";
            break;
          }
        }
      if (!ok) break;
    }
    check("statement_IV", ok, witness);
  }

  return report;
}

std::string division_trace_json(const Division& d) {
  std::string out;
  for (int i = 0; i < 10; ++i) {
    for (const auto& p : d.layers[static_cast<std::size_t>(i)]) {
      nlohmann::ordered_json line;
      line["layer"] = i + 1;
      line["class"] = fragment_info(p.cls).name;
      line["vertices"] = p.sorted_vertices();
      nlohmann::ordered_json roles;
      for (int s = 0; s < p.order(); ++s)
        roles[vertex_name(p, s)] = p.slot[static_cast<std::size_t>(s)];
      line["roles"] = roles;
      out += line.dump();
      out += '\n';
    }
  }
  return out;
}

}  // namespace locdim
