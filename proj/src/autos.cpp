#include "raag/autos.hpp"

namespace raag {

namespace {

GroupElement substitute(const GraphPtr& graph, const std::vector<GroupElement>& images,
                        const GroupElement& g) {
  if (g.graph_ptr() != graph) throw AutomorphismError("element belongs to a different graph");
  Word w;
  for (auto l : g.word()) {
    const GroupElement& img = images[l.gen];
    if (!l.inverse) {
      w.insert(w.end(), img.word().begin(), img.word().end());
    } else {
      for (auto it = img.word().rbegin(); it != img.word().rend(); ++it) w.push_back(it->inverted());
    }
  }
  return normal_form(w, graph);
}

void check_relations(const GraphPtr& graph, const std::vector<GroupElement>& images, const char* which) {
  const DefiningGraph& g = *graph;
  for (auto [u, v] : g.edges()) {
    if (images[u] * images[v] != images[v] * images[u])
      throw AutomorphismError(std::string("relation violation") + which + ": images of " + g.name(u) +
                              " and " + g.name(v) + " do not commute (edge " + g.name(u) + " " +
                              g.name(v) + ")");
  }
}

}  // namespace

Automorphism Automorphism::make(const GraphPtr& graph, std::vector<GroupElement> images,
                                std::vector<GroupElement> inverse_images) {
  const int n = graph->vertex_count();
  if (static_cast<int>(images.size()) != n || static_cast<int>(inverse_images.size()) != n)
    throw AutomorphismError("automorphism must give an image for every generator");
  for (int v = 0; v < n; ++v) {
    if (images[v].graph_ptr() != graph || inverse_images[v].graph_ptr() != graph)
      throw AutomorphismError("generator image over a different graph");
  }
  check_relations(graph, images, "");
  check_relations(graph, inverse_images, " in inverse");
  for (VertexId v = 0; v < n; ++v) {
    GroupElement gen = GroupElement::generator(graph, v);
    if (substitute(graph, images, inverse_images[v]) != gen ||
        substitute(graph, inverse_images, images[v]) != gen)
      throw AutomorphismError("inverse failure at generator " + graph->name(v));
  }
  Automorphism a;
  a.graph_ = graph;
  a.images_ = std::move(images);
  a.inverse_images_ = std::move(inverse_images);
  return a;
}

Automorphism Automorphism::identity(const GraphPtr& graph) {
  std::vector<GroupElement> gens;
  for (VertexId v = 0; v < graph->vertex_count(); ++v) gens.push_back(GroupElement::generator(graph, v));
  return make(graph, gens, gens);
}

Automorphism Automorphism::inversion(const GraphPtr& graph, VertexId v) {
  std::vector<GroupElement> gens;
  for (VertexId u = 0; u < graph->vertex_count(); ++u) gens.push_back(GroupElement::generator(graph, u, u == v));
  return make(graph, gens, gens);
}

Automorphism Automorphism::graph_symmetry(const GraphPtr& graph, const std::vector<VertexId>& perm) {
  const int n = graph->vertex_count();
  if (static_cast<int>(perm.size()) != n) throw AutomorphismError("permutation has wrong size");
  std::vector<GroupElement> images(n), inverse(n);
  std::vector<bool> hit(n, false);
  for (VertexId v = 0; v < n; ++v) {
    if (perm[v] < 0 || perm[v] >= n || hit[perm[v]]) throw AutomorphismError("not a permutation");
    hit[perm[v]] = true;
    images[v] = GroupElement::generator(graph, perm[v]);
    inverse[perm[v]] = GroupElement::generator(graph, v);
  }
  return make(graph, images, inverse);
}

Automorphism Automorphism::transvection(const GraphPtr& graph, VertexId v, VertexId u) {
  const VertexMask star_u = graph->neighbors(u) | bit(u);
  if (u == v || (graph->neighbors(v) & ~star_u) != 0)
    throw AutomorphismError("transvection " + graph->name(v) + " -> " + graph->name(v) + " " + graph->name(u) +
                            " needs lk(" + graph->name(v) + ") inside st(" + graph->name(u) + ")");
  std::vector<GroupElement> images, inverse;
  for (VertexId w = 0; w < graph->vertex_count(); ++w) {
    images.push_back(GroupElement::generator(graph, w));
    inverse.push_back(GroupElement::generator(graph, w));
  }
  images[v] = images[v] * GroupElement::generator(graph, u);
  inverse[v] = inverse[v] * GroupElement::generator(graph, u, true);
  return make(graph, images, inverse);
}

Automorphism Automorphism::conjugation(const GroupElement& g) {
  const GraphPtr& graph = g.graph_ptr();
  const GroupElement gi = invert(g);
  std::vector<GroupElement> images, inverse;
  for (VertexId v = 0; v < graph->vertex_count(); ++v) {
    GroupElement x = GroupElement::generator(graph, v);
    images.push_back(g * x * gi);
    inverse.push_back(gi * x * g);
  }
  return make(graph, images, inverse);
}

GroupElement Automorphism::apply(const GroupElement& g) const { return substitute(graph_, images_, g); }

GroupElement Automorphism::apply_inverse(const GroupElement& g) const {
  return substitute(graph_, inverse_images_, g);
}

Automorphism Automorphism::inverse() const {
  Automorphism a;
  a.graph_ = graph_;
  a.images_ = inverse_images_;
  a.inverse_images_ = images_;
  return a;
}

Automorphism Automorphism::compose(const Automorphism& other) const {
  std::vector<GroupElement> images, inverse;
  for (VertexId v = 0; v < graph_->vertex_count(); ++v) {
    images.push_back(apply(other.image(v)));
    inverse.push_back(other.apply_inverse(inverse_image(v)));
  }
  return make(graph_, images, inverse);
}

}  // namespace raag
