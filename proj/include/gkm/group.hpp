#pragma once

#include <string>
#include <vector>

#include "gkm/scalar.hpp"

namespace gkm {

// Class data and exact character values of a finite isotropy group.  Built-in
// groups are finite abelian (products of cyclic factors, one class per
// element); anything else is ingested from a character-table file.
struct GroupData {
  ContextPtr ctx;
  bool abelian = true;
  std::vector<int> cyclic;  // invariant factors when abelian
  int order = 1;
  long long exponent = 1;

  std::vector<std::string> labels;
  std::vector<int> sizes;
  std::vector<int> centralizers;
  std::vector<int> inverse;  // class index of the inverse class
  int identity = 0;

  std::vector<int> dims;                    // dim V_alpha
  std::vector<std::vector<Scalar>> chars;   // chars[alpha][class]
  std::vector<std::vector<int>> elems;      // abelian: class -> exponent tuple
  std::vector<std::vector<int>> char_exps;  // abelian: alpha -> exponent tuple

  int num_classes() const { return static_cast<int>(labels.size()); }
  int abelian_class_of(const std::vector<int>& tuple) const;

  // Character-table consistency: row/column orthogonality, size bookkeeping,
  // involution structure.  Throws MathError on failure.
  void validate() const;
};

GroupData abelian_group(const ContextPtr& ctx, const std::vector<int>& factors);

// The T-action on the r axes of a local model [C^r/G]: per axis a
// one-dimensional character of G and a nonzero rational weight.
struct SectorAction {
  struct Axis {
    bool from_table = false;
    std::vector<int> exps;  // abelian: exponent per cyclic factor
    int char_index = -1;    // table: index of a 1-dim character
  };
  std::vector<Axis> axes;
  std::vector<Rational> weights;

  int rank() const { return static_cast<int>(axes.size()); }
  void validate(const GroupData& g) const;
};

// The unique c in [0,1) with chi_i(h) = e^{2 pi i c}.
Rational c_value(const GroupData& g, int cls, const SectorAction::Axis& axis);
Rational age(const GroupData& g, int cls, const SectorAction& action);

// Class-algebra structure constant: the number of pairs (f, f') with f in
// class i, f' in class j and f f' equal to a fixed representative of class k.
// Computed from the character table (Burnside), exact.
Scalar class_mult_coefficient(const GroupData& g, int i, int j, int k);

}  // namespace gkm
