#include "plt/diagram.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "plt/error.hpp"

namespace plt {

namespace {

char flip(char p) { return p == '+' ? '-' : '+'; }

std::string vshow(const Vertex& v) {
  return std::string(v.out ? "out" : "in") + std::to_string(v.pos);
}

char polarity(const Diagram& d, const Vertex& v) {
  const std::string& w = v.out ? d.cod : d.dom;
  return w[v.pos - 1];
}

bool in_bounds(const Diagram& d, const Vertex& v) {
  const std::string& w = v.out ? d.cod : d.dom;
  return v.pos >= 1 && v.pos <= static_cast<int>(w.size());
}

bool is_source(const Diagram& d, const Vertex& v) {
  char p = polarity(d, v);
  return v.out ? p == '-' : p == '+';
}

// boundary-cycle order: in_n < ... < in_1 < out_1 < ... < out_m
int order_index(const Diagram& d, const Vertex& v) {
  int n = static_cast<int>(d.dom.size());
  return v.out ? n + v.pos - 1 : n - v.pos;
}

}  // namespace

std::string dual_object(const std::string& w) {
  std::string r(w.rbegin(), w.rend());
  for (char& c : r) c = flip(c);
  return r;
}

std::string validate_report(const Diagram& d) {
  for (char c : d.dom + d.cod)
    if (c != '+' && c != '-') return "boundary contains a character other than '+'/'-'";
  std::map<Vertex, int> degree;
  for (const auto& e : d.edges) {
    for (const Vertex& v : {e.src, e.tgt})
      if (!in_bounds(d, v)) return "edge endpoint " + vshow(v) + " out of bounds";
    if (!is_source(d, e.src))
      return "orientation violation: " + vshow(e.src) + " is not an implicit source";
    if (is_source(d, e.tgt))
      return "orientation violation: " + vshow(e.tgt) + " is not an implicit target";
    if (e.src == e.tgt) return "self-loop at " + vshow(e.src);
    if (++degree[e.src] > 1) return "degree violation at " + vshow(e.src);
    if (++degree[e.tgt] > 1) return "degree violation at " + vshow(e.tgt);
    for (char c : e.label)
      if (d.alphabet.find(c) == std::string::npos)
        return std::string("label letter '") + c + "' outside alphabet '" + d.alphabet + "'";
  }
  if (d.mode == DiagMode::Planar) {
    for (size_t i = 0; i < d.edges.size(); ++i) {
      for (size_t j = i + 1; j < d.edges.size(); ++j) {
        int i1 = order_index(d, d.edges[i].src), i2 = order_index(d, d.edges[i].tgt);
        int j1 = order_index(d, d.edges[j].src), j2 = order_index(d, d.edges[j].tgt);
        int a = std::min(i1, i2), c = std::max(i1, i2);
        int b = std::min(j1, j2), e = std::max(j1, j2);
        if ((a < b && b < c && c < e) || (b < a && a < e && e < c))
          return "planarity violation: edges " + vshow(d.edges[i].src) + "-" +
                 vshow(d.edges[i].tgt) + " and " + vshow(d.edges[j].src) + "-" +
                 vshow(d.edges[j].tgt) + " cross";
      }
    }
  }
  return "";
}

void validate_diagram(const Diagram& d) {
  std::string r = validate_report(d);
  if (!r.empty()) throw ValidationError(r);
}

Diagram make_diagram(DiagMode mode, std::string alphabet, std::string dom, std::string cod,
                     std::vector<DEdge> edges) {
  Diagram d{mode, std::move(alphabet), std::move(dom), std::move(cod), std::move(edges)};
  std::sort(d.edges.begin(), d.edges.end());
  validate_diagram(d);
  return d;
}

namespace {

// for results of the categorical operations, which are valid whenever their
// inputs are: sort for structural comparison but skip the quadratic validity
// scan (it dominates the cost of composing large diagrams)
Diagram sorted_diagram(DiagMode mode, std::string alphabet, std::string dom, std::string cod,
                       std::vector<DEdge> edges) {
  Diagram d{mode, std::move(alphabet), std::move(dom), std::move(cod), std::move(edges)};
  std::sort(d.edges.begin(), d.edges.end());
  return d;
}

}  // namespace

bool diagram_equal(const Diagram& a, const Diagram& b) {
  return a.mode == b.mode && a.alphabet == b.alphabet && a.dom == b.dom && a.cod == b.cod &&
         a.edges == b.edges;
}

bool leq(const Diagram& d, const Diagram& dd) {
  if (d.mode != dd.mode || d.alphabet != dd.alphabet || d.dom != dd.dom || d.cod != dd.cod)
    throw ValidationError("leq: boundary mismatch");
  for (const auto& e : d.edges) {
    bool found = false;
    for (const auto& f : dd.edges)
      if (f.src == e.src && f.tgt == e.tgt && f.label == e.label) { found = true; break; }
    if (!found) return false;
  }
  return true;
}

Diagram DiagCat::identity(const std::string& a) const {
  std::vector<DEdge> edges;
  for (int k = 1; k <= static_cast<int>(a.size()); ++k) {
    Vertex vin{false, k}, vout{true, k};
    if (a[k - 1] == '+') edges.push_back({vin, vout, ""});
    else edges.push_back({vout, vin, ""});
  }
  return sorted_diagram(mode, alphabet, a, a, std::move(edges));
}

Diagram DiagCat::bottom(const std::string& a, const std::string& b) const {
  return sorted_diagram(mode, alphabet, a, b, {});
}

Diagram DiagCat::cup(const std::string& a) const {
  int n = static_cast<int>(a.size());
  std::string cod = a + dual_object(a);
  std::vector<DEdge> edges;
  for (int i = 1; i <= n; ++i) {
    Vertex near{true, i}, far{true, 2 * n + 1 - i};
    if (a[i - 1] == '+') edges.push_back({far, near, ""});
    else edges.push_back({near, far, ""});
  }
  return sorted_diagram(mode, alphabet, "", cod, std::move(edges));
}

Diagram DiagCat::cap(const std::string& a) const {
  int n = static_cast<int>(a.size());
  std::string dom = dual_object(a) + a;
  std::vector<DEdge> edges;
  for (int i = 1; i <= n; ++i) {
    Vertex near{false, i}, far{false, 2 * n + 1 - i};
    if (dom[i - 1] == '+') edges.push_back({near, far, ""});
    else edges.push_back({far, near, ""});
  }
  return sorted_diagram(mode, alphabet, dom, "", std::move(edges));
}

Diagram DiagCat::symmetry(const std::string& a, const std::string& b) const {
  if (mode != DiagMode::Symmetric)
    throw ValidationError("symmetry requested in planar mode");
  int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());
  std::vector<DEdge> edges;
  for (int i = 1; i <= na; ++i) {
    Vertex vin{false, i}, vout{true, nb + i};
    if (a[i - 1] == '+') edges.push_back({vin, vout, ""});
    else edges.push_back({vout, vin, ""});
  }
  for (int j = 1; j <= nb; ++j) {
    Vertex vin{false, na + j}, vout{true, j};
    if (b[j - 1] == '+') edges.push_back({vin, vout, ""});
    else edges.push_back({vout, vin, ""});
  }
  return sorted_diagram(mode, alphabet, a + b, b + a, std::move(edges));
}

Diagram compose(const Diagram& f, const Diagram& g) {
  if (f.cod != g.dom)
    throw ValidationError("compose: cod(f) = " + f.cod + " does not match dom(g) = " + g.dom);
  if (f.mode != g.mode || f.alphabet != g.alphabet)
    throw ValidationError("compose: mode or alphabet mismatch");

  // each vertex carries at most one edge per side; index them
  std::map<Vertex, const DEdge*> f_by_src, g_by_src;
  for (const auto& e : f.edges) f_by_src[e.src] = &e;
  for (const auto& e : g.edges) g_by_src[e.src] = &e;

  std::vector<DEdge> out;
  // chains start at boundary sources of the composite: f-inputs with '+'
  // and g-outputs with '-'; everything not reached from one of these is a
  // dangling chain or a closed loop and gets erased
  auto walk = [&](bool start_in_f, Vertex start) {
    std::string label;
    bool in_f = start_in_f;
    Vertex v = start;
    Vertex s = start_in_f ? Vertex{false, start.pos} : Vertex{true, start.pos};
    for (;;) {
      const auto& by_src = in_f ? f_by_src : g_by_src;
      auto it = by_src.find(v);
      if (it == by_src.end()) return;  // unused vertex or dangling chain
      const DEdge* e = it->second;
      label += e->label;
      Vertex w = e->tgt;
      if (in_f) {
        if (!w.out) {  // landed on an f-input: boundary target
          out.push_back({s, Vertex{false, w.pos}, label});
          return;
        }
        // middle vertex: continue in g from its input row
        v = Vertex{false, w.pos};
        in_f = false;
      } else {
        if (w.out) {  // landed on a g-output: boundary target
          out.push_back({s, Vertex{true, w.pos}, label});
          return;
        }
        v = Vertex{true, w.pos};  // back into f through its output row
        in_f = true;
      }
    }
  };

  for (int q = 1; q <= static_cast<int>(f.dom.size()); ++q)
    if (f.dom[q - 1] == '+') walk(true, Vertex{false, q});
  for (int q = 1; q <= static_cast<int>(g.cod.size()); ++q)
    if (g.cod[q - 1] == '-') walk(false, Vertex{true, q});

  return sorted_diagram(f.mode, f.alphabet, f.dom, g.cod, std::move(out));
}

Diagram tensor(const Diagram& f, const Diagram& h) {
  if (f.mode != h.mode || f.alphabet != h.alphabet)
    throw ValidationError("tensor: mode or alphabet mismatch");
  int din = static_cast<int>(f.dom.size()), dout = static_cast<int>(f.cod.size());
  std::vector<DEdge> edges = f.edges;
  for (const auto& e : h.edges) {
    auto shift = [&](Vertex v) { return Vertex{v.out, v.pos + (v.out ? dout : din)}; };
    edges.push_back({shift(e.src), shift(e.tgt), e.label});
  }
  return sorted_diagram(f.mode, f.alphabet, f.dom + h.dom, f.cod + h.cod, std::move(edges));
}

Diagram curry(const Diagram& f, const std::string& b) {
  if (f.dom.size() < b.size() || f.dom.substr(f.dom.size() - b.size()) != b)
    throw ValidationError("curry: dom does not end with the given split " + b);
  std::string a = f.dom.substr(0, f.dom.size() - b.size());
  DiagCat cat{f.alphabet, f.mode};
  // (id_A (x) cup_B) ; (f (x) id_{B*})
  return compose(tensor(cat.identity(a), cat.cup(b)),
                 tensor(f, cat.identity(dual_object(b))));
}

Diagram uncurry(const Diagram& g, const std::string& b) {
  std::string bs = dual_object(b);
  if (g.cod.size() < bs.size() || g.cod.substr(g.cod.size() - bs.size()) != bs)
    throw ValidationError("uncurry: cod does not end with the dual of the given split " + b);
  std::string c = g.cod.substr(0, g.cod.size() - bs.size());
  DiagCat cat{g.alphabet, g.mode};
  // (g (x) id_B) ; (id_C (x) cap_B)
  return compose(tensor(g, cat.identity(b)), tensor(cat.identity(c), cat.cap(b)));
}

std::string to_dot(const Diagram& d) {
  std::ostringstream os;
  os << "digraph diagram {\n  rankdir=LR;\n  node [shape=circle, fontsize=10];\n";
  os << "  { rank=source;";
  for (size_t i = 1; i <= d.dom.size(); ++i) os << " in" << i;
  os << " }\n  { rank=sink;";
  for (size_t i = 1; i <= d.cod.size(); ++i) os << " out" << i;
  os << " }\n";
  for (size_t i = 1; i <= d.dom.size(); ++i)
    os << "  in" << i << " [label=\"" << d.dom[i - 1] << "\"];\n";
  for (size_t i = 1; i <= d.cod.size(); ++i)
    os << "  out" << i << " [label=\"" << d.cod[i - 1] << "\"];\n";
  for (const auto& e : d.edges) {
    os << "  " << vshow(e.src) << " -> " << vshow(e.tgt);
    if (!e.label.empty()) os << " [label=\"" << e.label << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace plt
