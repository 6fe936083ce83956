#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "lie_euler/rational_linalg.hpp"
#include "lie_euler/vector_field.hpp"

#include <nlohmann/json_fwd.hpp>

namespace lie_euler {

/// Abstract Lie algebra given by its structure constants:
/// [e_i, e_j] = sum_k c^k_{ij} e_k (all indices 0-based).
class StructureConstants {
 public:
  StructureConstants() = default;
  /// Validates antisymmetry and the Jacobi identity exactly; throws
  /// std::invalid_argument on violation.
  StructureConstants(int dim, std::map<std::tuple<int, int, int>, Rational> c);

  int dim() const { return dim_; }
  const std::map<std::tuple<int, int, int>, Rational>& constants() const { return c_; }

  Rational c(int i, int j, int k) const;

  RatVec bracket(const RatVec& x, const RatVec& y) const;

  /// Matrix of ad(e_i): column j holds [e_i, e_j].
  RatMat ad(int i) const;
  /// Matrix of ad(x) for an arbitrary element.
  RatMat ad(const RatVec& x) const;

 private:
  int dim_ = 0;
  std::map<std::tuple<int, int, int>, Rational> c_;
};

/// Subspace of a parent algebra spanned by explicit coefficient vectors.
struct Subalgebra {
  StructureConstants parent;
  std::vector<RatVec> basis;

  int dim() const { return static_cast<int>(basis.size()); }

  static Subalgebra from_indices(const StructureConstants& sc,
                                 std::span<const int> indices);  // 0-based
  static Subalgebra whole(const StructureConstants& sc);
};

/// Extracts structure constants from concrete vector fields; throws
/// std::runtime_error("not closed") when a bracket leaves the span.
StructureConstants structure_constants_from_fields(std::span<const VectorField> gens);

/// Expresses each field of `targets` in the rational span of `basis_fields`;
/// nullopt when one falls outside.
std::optional<std::vector<RatVec>> coordinates_in_span(
    std::span<const VectorField> basis_fields, std::span<const VectorField> targets);

Subalgebra center(const StructureConstants& sc);

bool is_closed(const Subalgebra& s);
bool is_ideal(const Subalgebra& s, const Subalgebra& in);
bool is_abelian(const Subalgebra& s);

/// Structure constants of a closed subalgebra in its own basis; throws
/// std::runtime_error("not closed") otherwise.
StructureConstants subalgebra_constants(const Subalgebra& s);

/// Quotient by an ideal; the quotient basis consists of the standard basis
/// vectors of the parent completing the ideal to a full flag. Throws
/// std::runtime_error("not an ideal"). The chosen representative indices are
/// returned through rep_indices when non-null.
StructureConstants quotient(const StructureConstants& sc, const Subalgebra& ideal,
                            std::vector<int>* rep_indices = nullptr);

std::vector<Subalgebra> derived_series(const Subalgebra& s);
bool is_solvable(const Subalgebra& s);

/// Killing form K(e_i, e_j) = trace(ad e_i . ad e_j).
RatMat killing_form(const StructureConstants& sc);

bool is_negative_definite(const RatMat& sym);

struct DecompositionReport {
  int center_dim = 0;
  std::vector<int> derived_series_dims;  // of the radical
  std::vector<RatVec> radical_basis;
  std::vector<RatVec> levi_basis;
  bool direct_sum_ok = false;
  bool radical_solvable_ideal = false;
  bool radical_maximal_1step = false;
  bool levi_closed = false;
  bool levi_killing_nondegenerate = false;
  std::vector<std::string> failures;

  bool all_ok() const { return failures.empty(); }
};

/// Certifies a claimed Levi decomposition at the level the data allows:
/// direct sum, solvable-ideal radical with one-generator maximality, closed
/// Levi factor with nondegenerate Killing form.
DecompositionReport levi_verify(const StructureConstants& sc, const Subalgebra& radical,
                                const Subalgebra& levi);

/// Signed basis permutation Z_i = +-Y_{sigma(i)} realizing the so(3)
/// relations [Z1,Z2]=Z3, [Z2,Z3]=Z1, [Z3,Z1]=Z2; rows of the returned 3x3
/// matrix give Z_i in the subalgebra basis. Requires a negative-definite
/// Killing form.
std::optional<RatMat> so3_identification(const Subalgebra& s);

struct GalileanCheck {
  bool ok = false;
  std::string first_violation;
};

/// Verifies the Galilean bracket pattern on a 10-dimensional subalgebra whose
/// basis is listed as (T1,T2,T3,H,B1,B2,B3,J1,J2,J3): translations/boosts
/// abelian, [H,B_i]=T_i, rotations close with an so(3) structure and act on
/// translations and boosts by one and the same antisymmetric matrix.
GalileanCheck galilean_check(const Subalgebra& b);

/// Markdown commutator table; entry (i,j) renders [e_i,e_j] in the labels.
std::string render_markdown_table(const StructureConstants& sc,
                                  const std::vector<std::string>& labels);
/// Sparse triple list {"i":.., "j":.., "k":.., "c":..} (1-based indices).
nlohmann::json table_to_json(const StructureConstants& sc);

/// Renders a coefficient vector like "X_1 - 2*X_3".
std::string render_combination(const RatVec& coeffs, const std::vector<std::string>& labels);

std::vector<std::string> x_labels(int dim);  // X_1..X_dim
std::vector<std::string> y_labels(int dim);  // Y_1..Y_dim

}  // namespace lie_euler
