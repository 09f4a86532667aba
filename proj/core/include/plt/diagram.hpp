#pragma once

#include <optional>
#include <string>
#include <vector>

namespace plt {

enum class DiagMode { Planar, Symmetric };

// boundary vertex: (in, pos) or (out, pos), 1-based top-to-bottom
struct Vertex {
  bool out = false;
  int pos = 0;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// stored oriented: src is the implicit source, tgt the implicit target
struct DEdge {
  Vertex src, tgt;
  std::string label;  // word over the ambient alphabet
  friend auto operator<=>(const DEdge&, const DEdge&) = default;
};

// A morphism of TransDiag_Gamma: dom/cod are polarity words over "+-",
// edges an oriented degree-<=1 matching; in planar mode no two edges may
// cross under the boundary-cycle order in_n < ... < in_1 < out_1 < ... < out_m.
struct Diagram {
  DiagMode mode = DiagMode::Planar;
  std::string alphabet;
  std::string dom, cod;
  std::vector<DEdge> edges;  // kept sorted for structural comparison
};

std::string dual_object(const std::string& w);

// sorts edges and validates; throws ValidationError
Diagram make_diagram(DiagMode mode, std::string alphabet, std::string dom, std::string cod,
                     std::vector<DEdge> edges);

// empty string if valid, otherwise the first violated clause
std::string validate_report(const Diagram& d);
void validate_diagram(const Diagram& d);

bool diagram_equal(const Diagram& a, const Diagram& b);

// edge-inclusion order with matching labels (hom-sets only: same boundary)
bool leq(const Diagram& d, const Diagram& dd);

// the ambient category: a fixed output alphabet and planarity mode
struct DiagCat {
  std::string alphabet;
  DiagMode mode = DiagMode::Planar;

  Diagram identity(const std::string& a) const;
  Diagram bottom(const std::string& a, const std::string& b) const;
  Diagram cup(const std::string& a) const;   // 1 -> A (x) A*
  Diagram cap(const std::string& a) const;   // A* (x) A -> 1
  Diagram symmetry(const std::string& a, const std::string& b) const;  // symmetric mode only
};

Diagram compose(const Diagram& f, const Diagram& g);  // f then g
Diagram tensor(const Diagram& f, const Diagram& h);

// curry: f : A (x) B -> C  becomes  A -> C (x) B*; `b` is the split suffix of dom(f)
Diagram curry(const Diagram& f, const std::string& b);
// uncurry: g : A -> C (x) B*  becomes  A (x) B -> C; cod(g) must end with B*
Diagram uncurry(const Diagram& g, const std::string& b);

std::string to_dot(const Diagram& d);

}  // namespace plt
