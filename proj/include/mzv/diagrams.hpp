#pragma once

// Vacuum diagrams of the zeta model and the graphical rewrite rules.
//
// Every edge carries a positive momentum n along its direction and the
// weight n^{-label}; momentum is conserved at each vertex.  A sea shell
// for (k1,..,km) is the chain R -> T1 -> ... -> T(m-1) -> R with labels
// k1..km plus one zero-label rib Ti -> R per inner vertex; the rib
// momentum n_i - n_(i+1) must be positive, which gives zeta(k1,..,km).

#include "mzv/combination.hpp"
#include "mzv/identities.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mzv {

class RuleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  int id = 0;
  int from = 0;
  int to = 0;
  int label = 0;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Couplings {
  int lambda = 0;  // sum of edge labels
  int g = 0;       // one g and one gbar per propagator, deletions included
  int gbar = 0;
  friend bool operator==(const Couplings&, const Couplings&) = default;
};

class Diagram {
 public:
  Diagram() : Diagram(0) {}
  explicit Diagram(int root) : root_(root) { vertices_.insert(root); }

  int root() const noexcept { return root_; }
  const std::set<int>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  int add_vertex() {
    const int v = vertices_.empty() ? 0 : *vertices_.rbegin() + 1;
    vertices_.insert(v);
    return v;
  }
  void add_vertex(int v) { vertices_.insert(v); }

  int add_edge(int from, int to, int label) {
    if (!vertices_.count(from) || !vertices_.count(to)) throw RuleError("edge endpoint is not a vertex");
    if (label < 0) throw RuleError("edge labels must be >= 0");
    const int id = next_edge_id_++;
    edges_.push_back({id, from, to, label});
    ++g_;
    return id;
  }

  bool has_edge(int id) const { return find(id) != nullptr; }
  const Edge& edge(int id) const {
    if (auto* e = find(id)) return *e;
    throw RuleError("no edge with id " + std::to_string(id));
  }
  Edge& edge(int id) {
    if (auto* e = find(id)) return *e;
    throw RuleError("no edge with id " + std::to_string(id));
  }

  std::vector<int> in_edges(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_)
      if (e.to == v) out.push_back(e.id);
    return out;
  }
  std::vector<int> out_edges(int v) const {
    std::vector<int> out;
    for (const auto& e : edges_)
      if (e.from == v) out.push_back(e.id);
    return out;
  }
  int degree(int v) const {
    int d = 0;
    for (const auto& e : edges_) d += (e.from == v) + (e.to == v);
    return d;
  }

  void remove_edge(int id) {
    auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.id == id; });
    if (it == edges_.end()) throw RuleError("no edge with id " + std::to_string(id));
    edges_.erase(it);
  }

  /// Identifies `drop` with `keep`; the root survives any merge.
  int merge_vertices(int keep, int drop) {
    if (keep == drop) return keep;
    if (drop == root_) std::swap(keep, drop);
    for (auto& e : edges_) {
      if (e.from == drop) e.from = keep;
      if (e.to == drop) e.to = keep;
    }
    vertices_.erase(drop);
    return keep;
  }

  void remove_vertex(int v) {
    if (v == root_) throw RuleError("cannot remove the root");
    if (degree(v) != 0) throw RuleError("vertex still has edges");
    vertices_.erase(v);
  }

  Couplings couplings() const {
    Couplings c;
    for (const auto& e : edges_) c.lambda += e.label;
    c.g = c.gbar = g_;
    return c;
  }

  int label_sum() const {
    int s = 0;
    for (const auto& e : edges_) s += e.label;
    return s;
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.root_ == b.root_ && a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  const Edge* find(int id) const {
    for (const auto& e : edges_)
      if (e.id == id) return &e;
    return nullptr;
  }
  Edge* find(int id) {
    for (auto& e : edges_)
      if (e.id == id) return &e;
    return nullptr;
  }

  int root_ = 0;
  std::set<int> vertices_;
  std::vector<Edge> edges_;
  int next_edge_id_ = 0;
  int g_ = 0;
};

// ---------------------------------------------------------------------------
// Canonical form

/// Isomorphism-invariant key: sorted edge triples under the lexicographically
/// smallest relabeling that fixes the root at 0.  Vertices are first split
/// into classes by local invariants; only permutations within classes are tried.
inline std::vector<int> canonical_key(const Diagram& d) {
  using Sig = std::vector<int>;
  std::map<int, Sig> sig;
  for (int v : d.vertices()) {
    Sig in, out;
    for (const auto& e : d.edges()) {
      if (e.to == v) in.push_back(e.label * 4 + (e.from == d.root()) * 2 + (e.from == v));
      if (e.from == v) out.push_back(e.label * 4 + (e.to == d.root()) * 2 + (e.to == v));
    }
    std::sort(in.begin(), in.end());
    std::sort(out.begin(), out.end());
    Sig s{static_cast<int>(in.size()), static_cast<int>(out.size())};
    s.insert(s.end(), in.begin(), in.end());
    s.push_back(-1);
    s.insert(s.end(), out.begin(), out.end());
    sig[v] = std::move(s);
  }
  std::vector<int> others;
  for (int v : d.vertices())
    if (v != d.root()) others.push_back(v);
  std::sort(others.begin(), others.end(), [&](int a, int b) { return sig[a] != sig[b] ? sig[a] < sig[b] : a < b; });
  // class boundaries
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t i = 0; i < others.size();) {
    std::size_t j = i;
    while (j < others.size() && sig[others[j]] == sig[others[i]]) ++j;
    classes.push_back({i, j});
    i = j;
  }
  std::vector<int> best;
  bool have = false;
  std::map<int, int> relabel;
  auto encode = [&]() {
    relabel[d.root()] = 0;
    for (std::size_t i = 0; i < others.size(); ++i) relabel[others[i]] = static_cast<int>(i) + 1;
    std::vector<std::array<int, 3>> triples;
    for (const auto& e : d.edges()) triples.push_back({relabel[e.from], relabel[e.to], e.label});
    std::sort(triples.begin(), triples.end());
    std::vector<int> key{static_cast<int>(d.vertices().size())};
    for (const auto& t : triples) key.insert(key.end(), t.begin(), t.end());
    if (!have || key < best) {
      best = std::move(key);
      have = true;
    }
  };
  std::function<void(std::size_t)> permute = [&](std::size_t ci) {
    if (ci == classes.size()) {
      encode();
      return;
    }
    auto [lo, hi] = classes[ci];
    std::sort(others.begin() + static_cast<long>(lo), others.begin() + static_cast<long>(hi));
    do {
      permute(ci + 1);
    } while (std::next_permutation(others.begin() + static_cast<long>(lo), others.begin() + static_cast<long>(hi)));
  };
  permute(0);
  return best;
}

inline bool isomorphic(const Diagram& a, const Diagram& b) { return canonical_key(a) == canonical_key(b); }

/// Rational combination of diagrams plus an already reduced zeta part.
class DiagramCombination {
 public:
  struct Term {
    Rational coefficient;
    Diagram diagram;
  };

  void add(const Diagram& d, const Rational& c) {
    if (c == 0) return;
    auto key = canonical_key(d);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      terms_.emplace(std::move(key), Term{c, d});
    } else {
      it->second.coefficient += c;
      if (it->second.coefficient == 0) terms_.erase(it);
    }
  }
  void add(const DiagramCombination& o, const Rational& scale = 1) {
    for (const auto& [k, t] : o.terms_) add(t.diagram, t.coefficient * scale);
    closed_.add(o.closed_, scale);
  }
  void add_closed(const ZetaCombination& z, const Rational& c = 1) { closed_.add(z, c); }

  std::vector<Term> terms() const {
    std::vector<Term> out;
    for (const auto& [k, t] : terms_) out.push_back(t);
    return out;
  }
  std::size_t size() const noexcept { return terms_.size(); }
  const ZetaCombination& closed() const noexcept { return closed_; }

  friend bool operator==(const DiagramCombination& a, const DiagramCombination& b) {
    if (a.terms_.size() != b.terms_.size() || !(a.closed_ == b.closed_)) return false;
    for (auto ia = a.terms_.begin(), ib = b.terms_.begin(); ia != a.terms_.end(); ++ia, ++ib)
      if (ia->first != ib->first || ia->second.coefficient != ib->second.coefficient) return false;
    return true;
  }

 private:
  std::map<std::vector<int>, Term> terms_;
  ZetaCombination closed_;
};

// ---------------------------------------------------------------------------
// Builders

inline Diagram build_seashell(const Parts& ks) {
  if (ks.empty()) throw CompositionError("sea shell needs at least one part");
  for (int k : ks)
    if (k < 1) throw CompositionError("sea shell labels must be >= 1");
  if (ks.front() < 2) throw CompositionError("sea shell requires an admissible composition");
  Diagram d(0);
  const int m = static_cast<int>(ks.size());
  if (m == 1) {
    d.add_edge(0, 0, ks[0]);
    return d;
  }
  std::vector<int> t(m);
  t[0] = d.root();
  for (int i = 1; i < m; ++i) t[i] = d.add_vertex();
  for (int i = 0; i < m; ++i) d.add_edge(t[i], t[(i + 1) % m], ks[i]);
  for (int i = 1; i < m; ++i) d.add_edge(t[i], d.root(), 0);
  return d;
}

/// Half-moon G_{a,b,c}: R -> T (a), T -> R (b), T -> R (c).
inline Diagram build_G3(int a, int b, int c) {
  Diagram d(0);
  const int t = d.add_vertex();
  d.add_edge(0, t, a);
  d.add_edge(t, 0, b);
  d.add_edge(t, 0, c);
  return d;
}

/// G_{a,k,b,l,c}: R -> T1 (a), T1 -> R (k), T1 -> T2 (b), T2 -> R (l), T2 -> R (c).
inline Diagram build_G5(int a, int k, int b, int l, int c) {
  Diagram d(0);
  const int t1 = d.add_vertex(), t2 = d.add_vertex();
  d.add_edge(0, t1, a);
  d.add_edge(t1, 0, k);
  d.add_edge(t1, t2, b);
  d.add_edge(t2, 0, l);
  d.add_edge(t2, 0, c);
  return d;
}

/// Peacock Z(A|B|C): spine A from the root to the top vertex, then the two
/// branches B and C back to the root.  Every vertex except the root and the
/// top carries a zero rib to the root.
inline Diagram build_peacock(const Parts& A, const Parts& B, const Parts& C) {
  if (A.empty() || B.empty() || C.empty()) throw CompositionError("peacock branches must be non-empty");
  for (const Parts* p : {&A, &B, &C})
    for (int k : *p)
      if (k < 0) throw CompositionError("peacock labels must be >= 0");
  Diagram d(0);
  int prev = d.root();
  std::vector<int> ribbed;
  for (std::size_t i = 0; i < A.size(); ++i) {
    const int v = d.add_vertex();
    d.add_edge(prev, v, A[i]);
    if (i + 1 < A.size()) ribbed.push_back(v);
    prev = v;
  }
  const int top = prev;
  for (const Parts* branch : {&B, &C}) {
    int from = top;
    for (std::size_t i = 0; i < branch->size(); ++i) {
      const bool last = i + 1 == branch->size();
      const int to = last ? d.root() : d.add_vertex();
      d.add_edge(from, to, (*branch)[i]);
      if (!last) ribbed.push_back(to);
      from = to;
    }
  }
  std::sort(ribbed.begin(), ribbed.end());
  for (int v : ribbed) d.add_edge(v, d.root(), 0);
  return d;
}

// ---------------------------------------------------------------------------
// Rewrite rules

/// Zero propagator reversal: g_{12} = -g_{21} + delta_{12} - 1.
inline DiagramCombination rewrite_reverse_edge(const Diagram& d, int edge_id) {
  const Edge e = d.edge(edge_id);
  if (e.label != 0) throw RuleError("reversal needs a zero-label edge");
  if (e.from == e.to) throw RuleError("reversal of a loop is undefined");
  DiagramCombination out;
  Diagram rev = d;
  std::swap(rev.edge(edge_id).from, rev.edge(edge_id).to);
  out.add(rev, -1);
  Diagram fused = d;
  fused.remove_edge(edge_id);
  fused.merge_vertices(e.from, e.to);
  out.add(fused, 1);
  Diagram cut = d;
  cut.remove_edge(edge_id);
  out.add(cut, -1);
  return out;
}

/// Two-vertex integration: a chain k -> v -> l collapses to one edge k+l.
inline Diagram rewrite_integrate_valence2(const Diagram& d, int v) {
  if (v == d.root()) throw RuleError("cannot integrate out the root");
  const auto in = d.in_edges(v), out = d.out_edges(v);
  if (in.size() != 1 || out.size() != 1 || in[0] == out[0])
    throw RuleError("integration needs exactly one incoming and one outgoing edge");
  Diagram r = d;
  const Edge a = d.edge(in[0]), b = d.edge(out[0]);
  r.remove_edge(a.id);
  r.remove_edge(b.id);
  r.remove_vertex(v);
  r.add_edge(a.from, b.to, a.label + b.label);
  return r;
}

struct PartialIntegrationMove {
  int vertex;
  int first;   // pair member that loses a power in the leading term
  int second;  // other pair member
  int third;   // the edge that gains a power
};

/// Partial integration at a three-edge vertex with an explicit pair.
/// Opposite sides: +(first-1, third+1) - (second-1, third+1) where `first`
/// lies on the side opposite to `third`.  Same side: both terms with +.
inline DiagramCombination rewrite_partial_integration(const Diagram& d, int v, int e1, int e2, int f) {
  if (d.degree(v) != 3) throw RuleError("partial integration needs a vertex with three edge ends");
  const Edge a = d.edge(e1), b = d.edge(e2), t = d.edge(f);
  for (const Edge* e : {&a, &b, &t})
    if ((e->from == v) == (e->to == v)) throw RuleError("edge not incident to vertex (or a loop)");
  if (a.label < 1 || b.label < 1) throw RuleError("partial integration needs both pair labels >= 1");
  const bool a_in = a.to == v, b_in = b.to == v, t_in = t.to == v;
  DiagramCombination out;
  auto term = [&](int dec, const Rational& c) {
    Diagram r = d;
    r.edge(dec).label -= 1;
    r.edge(f).label += 1;
    out.add(r, c);
  };
  if (a_in == b_in) {
    if (t_in == a_in) throw RuleError("all three edges on one side; vertex integrates to zero");
    term(e1, 1);
    term(e2, 1);
  } else {
    const int opposite = (a_in != t_in) ? e1 : e2;
    const int same = opposite == e1 ? e2 : e1;
    term(opposite, 1);
    term(same, -1);
  }
  return out;
}

/// Chooses the pair automatically: one incoming and one outgoing edge with
/// positive labels, preferring the most recently created outgoing edge.
inline DiagramCombination rewrite_partial_integration(const Diagram& d, int v) {
  if (v == d.root()) throw RuleError("partial integration is applied at an apex, not the root");
  const auto in = d.in_edges(v), out = d.out_edges(v);
  if (in.size() + out.size() != 3) throw RuleError("partial integration needs a vertex with three edges");
  const auto& single = in.size() == 1 ? in : out;
  const auto& pairside = in.size() == 1 ? out : in;
  if (single.size() != 1) throw RuleError("vertex has all edges on one side");
  const int s = single[0];
  if (d.edge(s).label < 1) throw RuleError("partial integration needs a positive label on the lone edge");
  int pick = -1;
  for (int e : pairside)
    if (d.edge(e).label >= 1) pick = std::max(pick, e);
  if (pick < 0) throw RuleError("partial integration needs a positive label opposite the lone edge");
  const int third = pairside[0] == pick ? pairside[1] : pairside[0];
  return rewrite_partial_integration(d, v, s, pick, third);
}

/// Exchange across a zero edge e: v -> w that is w's only incoming edge:
/// the outgoing edge x of v and the outgoing edge y of w swap sources.
inline Diagram rewrite_exchange(const Diagram& d, int e, int x, int y) {
  const Edge z = d.edge(e);
  if (z.label != 0) throw RuleError("exchange needs a zero-label enabling edge");
  if (d.in_edges(z.to).size() != 1) throw RuleError("enabling edge must be the only incoming edge of its target");
  if (x == e || d.edge(x).from != z.from || d.edge(y).from != z.to || x == y)
    throw RuleError("exchanged edges must leave the two endpoints of the enabling edge");
  Diagram r = d;
  r.edge(x).from = z.to;
  r.edge(y).from = z.from;
  return r;
}

/// Peacock form at the top vertex v: a zero branch head v -> w with w != root
/// lets the other head of v trade places with w's rib, making w the new top.
inline Diagram rewrite_exchange_inner(const Diagram& d, int v) {
  const auto out = d.out_edges(v);
  if (out.size() != 2) throw RuleError("exchange needs a vertex with two outgoing branches");
  for (int i = 0; i < 2; ++i) {
    const Edge head = d.edge(out[i]);
    if (head.label != 0 || head.to == d.root() || head.to == v) continue;
    int rib = -1;
    for (int e : d.out_edges(head.to))
      if (d.edge(e).to == d.root() && d.edge(e).label == 0) rib = std::max(rib, e);
    if (rib < 0) continue;
    return rewrite_exchange(d, head.id, out[1 - i], rib);
  }
  throw RuleError("no zero branch head with a ribbed target");
}

/// Three-point relation for two zero edges 2 -> 1 and 3 -> 1 into vertex 1:
/// g21 g31 = -g12 g32 - g13 g23 + 1 + d12 g32 + d31 g21 + d23 g13 - d12 d13.
/// With two zero outgoing edges the conjugate relation (all arrows reversed) is used.
inline DiagramCombination rewrite_three_point(const Diagram& d, int v, int e2, int e3) {
  const Edge x = d.edge(e2), y = d.edge(e3);
  if (x.label != 0 || y.label != 0) throw RuleError("three-point relation needs zero-label edges");
  const bool incoming = x.to == v && y.to == v;
  const bool outgoing = x.from == v && y.from == v;
  if (!incoming && !outgoing) throw RuleError("edges must both enter or both leave the vertex");
  const int v2 = incoming ? x.from : x.to, v3 = incoming ? y.from : y.to;
  if (v2 == v3 || v2 == v || v3 == v) throw RuleError("three-point relation needs three distinct vertices");
  Diagram base = d;
  base.remove_edge(e2);
  base.remove_edge(e3);
  // edge p -> q in the incoming picture; reversed for the conjugate form
  auto with = [&](Diagram r, std::vector<std::pair<int, int>> es) {
    for (auto [p, q] : es) {
      if (incoming)
        r.add_edge(p, q, 0);
      else
        r.add_edge(q, p, 0);
    }
    return r;
  };
  DiagramCombination out;
  out.add(with(base, {{v, v2}, {v3, v2}}), -1);
  out.add(with(base, {{v, v3}, {v2, v3}}), -1);
  out.add(base, 1);
  {
    Diagram r = with(base, {{v3, v}});
    r.merge_vertices(v, v2);
    out.add(r, 1);
  }
  {
    Diagram r = with(base, {{v2, v}});
    r.merge_vertices(v, v3);
    out.add(r, 1);
  }
  {
    Diagram r = with(base, {{v, v2}});
    r.merge_vertices(v2, v3);
    out.add(r, 1);
  }
  {
    Diagram r = base;
    r.merge_vertices(v, v2);
    r.merge_vertices(v, v3);
    out.add(r, -1);
  }
  return out;
}

/// Picks the first two zero edges entering v from distinct vertices, or failing
/// that the first two leaving it.
inline DiagramCombination rewrite_three_point(const Diagram& d, int v) {
  for (bool incoming : {true, false}) {
    const auto es = incoming ? d.in_edges(v) : d.out_edges(v);
    for (std::size_t i = 0; i < es.size(); ++i)
      for (std::size_t j = i + 1; j < es.size(); ++j) {
        const Edge a = d.edge(es[i]), b = d.edge(es[j]);
        const int pa = incoming ? a.from : a.to, pb = incoming ? b.from : b.to;
        if (a.label == 0 && b.label == 0 && pa != pb && pa != v && pb != v) return rewrite_three_point(d, v, a.id, b.id);
      }
  }
  throw RuleError("no pair of zero edges from distinct vertices at this vertex");
}

// ---------------------------------------------------------------------------
// Evaluation of diagrams whose zero edges impose a poset on the momenta

class IrreducibleError : public std::runtime_error {
 public:
  IrreducibleError(const std::string& what, ZetaCombination partial, Diagram stuck)
      : std::runtime_error(what), partial_(std::move(partial)), stuck_(std::move(stuck)) {}
  const ZetaCombination& partial() const noexcept { return partial_; }
  const Diagram& stuck() const noexcept { return stuck_; }

 private:
  ZetaCombination partial_;
  Diagram stuck_;
};

namespace detail {

/// Sum over all weak orders of `labels` compatible with the strict relations
/// greater[i] ⊃ {j : n_i > n_j}; each block contributes the sum of its labels.
inline ZetaCombination sum_over_weak_orders(const std::vector<int>& labels, const std::vector<std::vector<bool>>& greater) {
  const int n = static_cast<int>(labels.size());
  ZetaCombination out;
  std::vector<bool> used(n, false);
  Parts cur;
  std::function<void(int)> rec = [&](int remaining) {
    if (remaining == 0) {
      out.add({cur}, 1);
      return;
    }
    std::vector<int> maximal;
    for (int i = 0; i < n; ++i) {
      if (used[i]) continue;
      bool dominated = false;
      for (int j = 0; j < n && !dominated; ++j) dominated = !used[j] && greater[j][i];
      if (!dominated) maximal.push_back(i);
    }
    const int k = static_cast<int>(maximal.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      int sum = 0, cnt = 0;
      for (int b = 0; b < k; ++b)
        if (mask >> b & 1) {
          sum += labels[maximal[b]];
          used[maximal[b]] = true;
          ++cnt;
        }
      cur.push_back(sum);
      rec(remaining - cnt);
      cur.pop_back();
      for (int b = 0; b < k; ++b)
        if (mask >> b & 1) used[maximal[b]] = false;
    }
  };
  if (n > 0) rec(n);
  return out;
}

inline bool simplify_step(Diagram& d, bool& zero, ZetaCombination& factor) {
  for (int v : d.vertices()) {
    const int deg = d.degree(v);
    if (deg == 0) {
      if (v != d.root()) {
        d.remove_vertex(v);
        return true;
      }
      continue;
    }
    if (d.in_edges(v).empty() || d.out_edges(v).empty()) {
      zero = true;
      return false;
    }
  }
  for (const auto& e : d.edges())
    if (e.from == e.to) {
      if (e.label == 0) throw RuleError("zero-label loop diverges");
      factor = factor * zeta({e.label});
      d.remove_edge(e.id);
      return true;
    }
  for (const auto& e : d.edges()) {
    if (e.label != 0) continue;
    if (d.in_edges(e.to).size() == 1 || d.out_edges(e.from).size() == 1) {
      const Edge z = e;
      d.remove_edge(z.id);
      d.merge_vertices(z.from, z.to);
      return true;
    }
  }
  for (int v : d.vertices()) {
    const auto in = d.in_edges(v), out = d.out_edges(v);
    if (in.size() == 1 && out.size() == 1 && in[0] != out[0]) {
      const Edge a = d.edge(in[0]), b = d.edge(out[0]);
      d.remove_edge(a.id);
      d.remove_edge(b.id);
      d.add_edge(a.from, b.to, a.label + b.label);
      if (v != d.root()) d.remove_vertex(v);
      return true;
    }
  }
  return false;
}

/// Value of one connected component after simplification.
inline ZetaCombination evaluate_component(const Diagram& d, const std::set<int>& comp) {
  std::vector<Edge> zero, labeled;
  for (const auto& e : d.edges())
    if (comp.count(e.from)) (e.label == 0 ? zero : labeled).push_back(e);
  if (zero.size() + 1 != comp.size()) throw RuleError("zero edges do not form a spanning tree");
  // tree adjacency
  std::map<int, std::vector<std::pair<int, int>>> adj;  // vertex -> (edge index, other)
  for (std::size_t i = 0; i < zero.size(); ++i) {
    adj[zero[i].from].push_back({static_cast<int>(i), zero[i].to});
    adj[zero[i].to].push_back({static_cast<int>(i), zero[i].from});
  }
  const int L = static_cast<int>(labeled.size());
  std::vector<std::vector<bool>> greater(L, std::vector<bool>(L, false));
  for (std::size_t i = 0; i < zero.size(); ++i) {
    // S: side containing zero[i].from once edge i is removed
    std::set<int> S{zero[i].from};
    std::vector<int> stack{zero[i].from};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (auto [ei, w] : adj[u])
        if (ei != static_cast<int>(i) && S.insert(w).second) stack.push_back(w);
    }
    if (S.count(zero[i].to)) throw RuleError("zero edges contain a cycle");
    // edge leaves S: n_e = sum(in to S) - sum(out of S)
    std::vector<int> pos, neg;
    for (int j = 0; j < L; ++j) {
      const bool fi = S.count(labeled[j].from), ti = S.count(labeled[j].to);
      if (!fi && ti) pos.push_back(j);
      if (fi && !ti) neg.push_back(j);
    }
    if (pos.empty()) return {};
    if (neg.empty()) continue;
    if (pos.size() == 1 && neg.size() == 1) {
      greater[pos[0]][neg[0]] = true;
      continue;
    }
    throw RuleError("zero edge momentum is not a simple difference");
  }
  // transitive closure and cycle check
  for (int k = 0; k < L; ++k)
    for (int i = 0; i < L; ++i)
      for (int j = 0; j < L; ++j)
        if (greater[i][k] && greater[k][j]) greater[i][j] = true;
  for (int i = 0; i < L; ++i)
    if (greater[i][i]) return {};
  std::vector<int> labels;
  for (const auto& e : labeled) labels.push_back(e.label);
  return sum_over_weak_orders(labels, greater);
}

}  // namespace detail

/// Closed value of a diagram when every zero edge fixes a strict order (or
/// nothing) between positive-label momenta; throws RuleError otherwise.
inline ZetaCombination evaluate_diagram(const Diagram& input) {
  Diagram d = input;
  bool zero = false;
  ZetaCombination value = ZetaCombination::constant(1);
  while (detail::simplify_step(d, zero, value)) {
  }
  if (zero) return {};
  std::set<int> seen;
  for (int v : d.vertices()) {
    if (seen.count(v) || d.degree(v) == 0) continue;
    std::set<int> comp{v};
    std::vector<int> stack{v};
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const auto& e : d.edges()) {
        if (e.from == u && comp.insert(e.to).second) stack.push_back(e.to);
        if (e.to == u && comp.insert(e.from).second) stack.push_back(e.from);
      }
    }
    seen.insert(comp.begin(), comp.end());
    value = value * detail::evaluate_component(d, comp);
    if (value.empty()) return {};
  }
  return value;
}

// ---------------------------------------------------------------------------
// Reduction strategies

enum class Strategy {
  Rightward,    // partial integration from the right, exchanging inner ribs
  Alternative,  // partial integration from the right, exchanging the active edge
  Shuffle,      // merge-form partial integration at the peacock top
  Reversal,     // reverse every zero edge once
  ThreePoint,   // three-point relation at the root
};

inline std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::Rightward: return "rightward";
    case Strategy::Alternative: return "alternative";
    case Strategy::Shuffle: return "shuffle";
    case Strategy::Reversal: return "reversal";
    case Strategy::ThreePoint: return "three-point";
  }
  return "";
}

inline Strategy parse_strategy(const std::string& s) {
  if (s == "rightward" || s == "partial-integration") return Strategy::Rightward;
  if (s == "alternative") return Strategy::Alternative;
  if (s == "shuffle" || s == "leftward") return Strategy::Shuffle;
  if (s == "reversal") return Strategy::Reversal;
  if (s == "three-point" || s == "three_point") return Strategy::ThreePoint;
  throw std::invalid_argument("unknown strategy '" + s + "'");
}

struct ReduceResult {
  ZetaCombination value;
  std::vector<std::string> trace;
  std::size_t rewrites = 0;
};

namespace detail {

struct ReduceItem {
  Rational coefficient;
  Diagram diagram;
  int active = -1;
  int top = -1;
  std::vector<int> pending;
  bool started = false;
  bool exchanged = false;
};

inline std::string describe(const Diagram& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& e : d.edges()) {
    os << (first ? "" : " ") << e.from << "->" << e.to << ":" << e.label;
    first = false;
  }
  return os.str();
}

inline int other_out_edge(const Diagram& d, int v, int not_this) {
  int r = -1;
  for (int e : d.out_edges(v))
    if (e != not_this) {
      if (r >= 0) return -2;
      r = e;
    }
  return r;
}

inline int zero_rib(const Diagram& d, int v) {
  int r = -1;
  for (int e : d.out_edges(v))
    if (d.edge(e).to == d.root() && d.edge(e).label == 0) r = std::max(r, e);
  return r;
}

}  // namespace detail

/// Reduces d to a zeta combination by repeatedly applying the strategy's
/// rewrite and evaluating terms once the strategy declares them closed.
inline ReduceResult reduce(const Diagram& d, Strategy strategy, std::size_t max_rewrites = 1000000) {
  using detail::ReduceItem;
  ReduceResult res;
  std::vector<ReduceItem> work;
  {
    ReduceItem it{1, d};
    for (const auto& e : d.edges())
      if (e.label == 0) it.pending.push_back(e.id);
    work.push_back(std::move(it));
  }
  auto fail = [&](const std::string& why, const Diagram& stuck) -> void {
    throw IrreducibleError("irreducible diagram (" + why + "): " + detail::describe(stuck), res.value, stuck);
  };
  auto close = [&](const ReduceItem& it) {
    try {
      res.value.add(evaluate_diagram(it.diagram), it.coefficient);
    } catch (const RuleError& e) {
      fail(e.what(), it.diagram);
    }
  };
  auto push_all = [&](const ReduceItem& parent, const DiagramCombination& dc, const std::string& what) {
    res.trace.push_back(what + " -> " + std::to_string(dc.size()) + " terms");
    ++res.rewrites;
    for (const auto& t : dc.terms()) {
      ReduceItem child = parent;
      child.coefficient = parent.coefficient * t.coefficient;
      child.diagram = t.diagram;
      child.started = true;
      work.push_back(std::move(child));
    }
  };

  while (!work.empty()) {
    if (res.rewrites > max_rewrites) fail("rewrite budget exhausted", work.back().diagram);
    ReduceItem it = std::move(work.back());
    work.pop_back();
    const Diagram& g = it.diagram;
    const int R = g.root();

    if (strategy == Strategy::Rightward || strategy == Strategy::Alternative) {
      if (!it.started) {
        it.started = true;
        int act = -1;
        for (int e : g.in_edges(R))
          if (g.edge(e).label > 0) act = std::max(act, e);
        if (act < 0) {
          close(it);
          continue;
        }
        it.active = act;
      }
      if (it.active < 0 || !g.has_edge(it.active) || g.edge(it.active).label == 0 ||
          g.edge(it.active).from == g.edge(it.active).to) {
        close(it);
        continue;
      }
      const int v = g.edge(it.active).from;
      const auto in = g.in_edges(v);
      if (v == R || in.size() != 1) {
        close(it);
        continue;
      }
      const int p = in[0];
      const int third = detail::other_out_edge(g, v, it.active);
      if (third < 0) fail("active vertex is not a three-edge vertex", g);
      if (g.edge(p).label > 0) {
        push_all(it, rewrite_partial_integration(g, v, p, it.active, third),
                 "partial_integration at " + std::to_string(v) + " pair (e" + std::to_string(p) + ", e" +
                     std::to_string(it.active) + ") third e" + std::to_string(third));
        continue;
      }
      const int u = g.edge(p).from;
      if (u == R) {
        close(it);
        continue;
      }
      const int rib = detail::zero_rib(g, u);
      const int u_out = rib >= 0 ? rib : detail::other_out_edge(g, u, p);
      if (u_out < 0) fail("no rib to exchange", g);
      // the rightward order trades the rib grown at v on its first exchange,
      // afterwards it moves the active edge like the alternative order
      const bool move_rib = strategy == Strategy::Rightward && !it.exchanged;
      const int moved = move_rib ? third : it.active;
      ReduceItem next = it;
      next.diagram = rewrite_exchange(g, p, u_out, moved);
      next.active = moved;
      next.exchanged = true;
      res.trace.push_back("exchange across e" + std::to_string(p) + ": e" + std::to_string(u_out) + " <-> e" +
                          std::to_string(moved));
      ++res.rewrites;
      work.push_back(std::move(next));
      continue;
    }

    if (strategy == Strategy::Shuffle) {
      if (!it.started) {
        it.started = true;
        int top = -1;
        for (int v : g.vertices())
          if (v != R && g.out_edges(v).size() == 2 && detail::zero_rib(g, v) < 0) top = v;
        if (top < 0)
          for (int v : g.vertices())
            if (v != R && g.out_edges(v).size() == 2 && g.in_edges(v).size() == 1) top = v;
        if (top < 0) fail("no peacock top vertex", g);
        it.top = top;
      }
      const int T = it.top;
      const auto out = g.out_edges(T), in = g.in_edges(T);
      if (out.size() != 2 || in.size() != 1) {
        close(it);
        continue;
      }
      const Edge x = g.edge(out[0]), y = g.edge(out[1]);
      if ((x.label == 0 && x.to == R) || (y.label == 0 && y.to == R)) {
        close(it);
        continue;
      }
      if (x.label == 0 || y.label == 0) {
        const Edge head = x.label == 0 ? x : y;
        const Edge other = x.label == 0 ? y : x;
        const int rib = detail::zero_rib(g, head.to);
        if (rib < 0) fail("zero branch head without a rib", g);
        ReduceItem next = it;
        next.diagram = rewrite_exchange(g, head.id, other.id, rib);
        next.top = head.to;
        res.trace.push_back("exchange at top " + std::to_string(T) + ": e" + std::to_string(other.id) + " <-> e" +
                            std::to_string(rib));
        ++res.rewrites;
        work.push_back(std::move(next));
        continue;
      }
      push_all(it, rewrite_partial_integration(g, T, x.id, y.id, in[0]),
               "merge partial_integration at top " + std::to_string(T));
      continue;
    }

    if (strategy == Strategy::Reversal) {
      bool moved = false;
      while (!it.pending.empty()) {
        const int e = it.pending.back();
        it.pending.pop_back();
        if (!g.has_edge(e) || g.edge(e).label != 0 || g.edge(e).from == g.edge(e).to) continue;
        push_all(it, rewrite_reverse_edge(g, e), "reverse e" + std::to_string(e));
        moved = true;
        break;
      }
      if (!moved) close(it);
      continue;
    }

    if (strategy == Strategy::ThreePoint) {
      if (!it.started) {
        it.started = true;
        push_all(it, rewrite_three_point(g, R), "three_point at root");
        continue;
      }
      close(it);
      continue;
    }
  }
  return res;
}

/// Graph-description export for visualization tools.
inline std::string to_dot(const Diagram& d, const std::string& name = "diagram") {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (int v : d.vertices()) os << "  v" << v << (v == d.root() ? " [shape=doublecircle]" : "") << ";\n";
  for (const auto& e : d.edges())
    os << "  v" << e.from << " -> v" << e.to << " [label=\"" << e.label << "\"" << (e.label == 0 ? ", style=dashed" : "")
       << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace mzv
