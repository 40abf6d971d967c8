#pragma once

#include <stdexcept>
#include <vector>

#include "raag/words.hpp"

namespace raag {

class AutomorphismError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Automorphism of A_Gamma given by generator images together with the images
/// of its inverse. Construction verifies that both maps respect the
/// commutation relations and that they are mutually inverse on generators.
class Automorphism {
 public:
  static Automorphism make(const GraphPtr& graph, std::vector<GroupElement> images,
                           std::vector<GroupElement> inverse_images);

  static Automorphism identity(const GraphPtr& graph);
  /// v -> v^-1, all other generators fixed.
  static Automorphism inversion(const GraphPtr& graph, VertexId v);
  /// Generator permutation; perm[v] is the image of v.
  static Automorphism graph_symmetry(const GraphPtr& graph, const std::vector<VertexId>& perm);
  /// v -> v u, defined when lk(v) lies in st(u).
  static Automorphism transvection(const GraphPtr& graph, VertexId v, VertexId u);
  /// x -> g x g^-1.
  static Automorphism conjugation(const GroupElement& g);

  const GraphPtr& graph_ptr() const { return graph_; }
  const GroupElement& image(VertexId v) const { return images_.at(v); }
  const GroupElement& inverse_image(VertexId v) const { return inverse_images_.at(v); }

  GroupElement apply(const GroupElement& g) const;
  GroupElement apply_inverse(const GroupElement& g) const;
  Automorphism inverse() const;
  /// (this o other)(x) = this(other(x)).
  Automorphism compose(const Automorphism& other) const;

 private:
  Automorphism() = default;
  GraphPtr graph_;
  std::vector<GroupElement> images_;
  std::vector<GroupElement> inverse_images_;
};

}  // namespace raag
