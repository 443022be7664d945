#ifndef RESFORGE_STRUCTURE_MAPS_HPP
#define RESFORGE_STRUCTURE_MAPS_HPP

#include "resforge/complex.hpp"
#include "resforge/determinantal.hpp"

#include <memory>
#include <vector>

namespace resforge {

/// First-order multiplicative structure on the starting complex F: products
/// e_i.e_j (coordinates in F_2), e_i.f_h (coordinates in F_3) and the triple
/// product e_i.e_j.e_k (coordinates in F_3), together with the base
/// differentials they are checked against.
class StructureTable {
 public:
  StructureTable(Family family, Variant variant, int param);

  Family family() const { return family_; }
  Variant variant() const { return variant_; }
  int param() const { return param_; }
  const VariableRegistry* registry() const { return reg_.get(); }

  int r1() const;  // rank F_1
  int r2() const;  // rank F_2
  int r3() const;  // rank F_3

  // base (starting complex) differentials
  const PolyMatrix& base_d1() const { return base_d1_; }
  const PolyMatrix& base_d2() const { return base_d2_; }
  const PolyMatrix& base_d3() const { return base_d3_; }

  /// e_i.e_j in the f-basis; antisymmetric, zero on the diagonal.
  std::vector<Polynomial> mult_v31(int i, int j) const;

  /// e_i.f_h in the g-basis.
  std::vector<Polynomial> mult_v21(int i, int h) const;

  /// e_i.e_j.e_k in the g-basis; alternating. Not stated in the source
  /// construction for the Hilbert-Burch (1,n,n,1) variant and refused there.
  std::vector<Polynomial> mult_v11(int i, int j, int k) const;

  /// Minor part alpha_{ij} = e_i.e_j - d(G_{ij}) in the f-basis (HB variants).
  std::vector<Polynomial> alpha(int i, int j) const;

  /// Defect vector G_{ij} = (b_{ij}^1, ..., b_{ij}^m) in the g-basis.
  std::vector<Polynomial> defect_vector(int i, int j) const;

 private:
  Family family_;
  Variant variant_;
  int param_;
  std::shared_ptr<VariableRegistry> reg_;
  mutable DetCalc calc_;
  PolyMatrix base_d1_, base_d2_, base_d3_;
};

struct RelationReport {
  struct Item {
    std::string relation;  // "lemma4.7", "rel1bis", "rel2"
    std::vector<int> indices;
    bool pass;
  };
  std::vector<Item> items;
  bool all_pass() const {
    for (const auto& it : items)
      if (!it.pass) return false;
    return !items.empty();
  }
};

/// Evaluates the minor relations as polynomial identities for the HB variants:
/// the (1,n,n,1) relation Y_i f_h - sum_j X_{jh} alpha_{ij} = 0 and the
/// (1,4,m+3,m) relations rel1bis / rel2, per index tuple.
RelationReport verify_relations(Family family, int param);

}  // namespace resforge

#endif
