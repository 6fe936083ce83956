#include "lie_euler/structure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lie_euler {

StructureConstants::StructureConstants(int dim,
                                       std::map<std::tuple<int, int, int>, Rational> c)
    : dim_(dim), c_(std::move(c)) {
  for (auto it = c_.begin(); it != c_.end();) {
    it = it->second == 0 ? c_.erase(it) : std::next(it);
  }
  for (const auto& [ijk, v] : c_) {
    auto [i, j, k] = ijk;
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_) {
      throw std::invalid_argument("structure constant index out of range");
    }
    if (this->c(j, i, k) != -v) {
      throw std::invalid_argument("structure constants not antisymmetric");
    }
  }
  // Jacobi: [e_i,[e_j,e_k]] + [e_j,[e_k,e_i]] + [e_k,[e_i,e_j]] = 0.
  for (int i = 0; i < dim_; ++i) {
    RatVec ei(static_cast<std::size_t>(dim_), Rational(0));
    ei[static_cast<std::size_t>(i)] = 1;
    for (int j = i + 1; j < dim_; ++j) {
      RatVec ej(static_cast<std::size_t>(dim_), Rational(0));
      ej[static_cast<std::size_t>(j)] = 1;
      for (int k = j + 1; k < dim_; ++k) {
        RatVec ek(static_cast<std::size_t>(dim_), Rational(0));
        ek[static_cast<std::size_t>(k)] = 1;
        RatVec total = bracket(ei, bracket(ej, ek));
        RatVec t2 = bracket(ej, bracket(ek, ei));
        RatVec t3 = bracket(ek, bracket(ei, ej));
        for (int m = 0; m < dim_; ++m) {
          Rational s = total[static_cast<std::size_t>(m)] +
                       t2[static_cast<std::size_t>(m)] + t3[static_cast<std::size_t>(m)];
          if (s != 0) throw std::invalid_argument("Jacobi identity violated");
        }
      }
    }
  }
}

Rational StructureConstants::c(int i, int j, int k) const {
  auto it = c_.find({i, j, k});
  return it == c_.end() ? Rational(0) : it->second;
}

RatVec StructureConstants::bracket(const RatVec& x, const RatVec& y) const {
  RatVec out(static_cast<std::size_t>(dim_), Rational(0));
  for (const auto& [ijk, v] : c_) {
    auto [i, j, k] = ijk;
    Rational f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
    if (f != 0) out[static_cast<std::size_t>(k)] += v * f;
  }
  return out;
}

RatMat StructureConstants::ad(int i) const {
  RatMat m(static_cast<std::size_t>(dim_), RatVec(static_cast<std::size_t>(dim_), Rational(0)));
  for (const auto& [ijk, v] : c_) {
    auto [a, j, k] = ijk;
    if (a == i) m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] = v;
  }
  return m;
}

RatMat StructureConstants::ad(const RatVec& x) const {
  RatMat m(static_cast<std::size_t>(dim_), RatVec(static_cast<std::size_t>(dim_), Rational(0)));
  for (const auto& [ijk, v] : c_) {
    auto [i, j, k] = ijk;
    if (x[static_cast<std::size_t>(i)] != 0) {
      m[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] +=
          v * x[static_cast<std::size_t>(i)];
    }
  }
  return m;
}

Subalgebra Subalgebra::from_indices(const StructureConstants& sc,
                                    std::span<const int> indices) {
  Subalgebra s;
  s.parent = sc;
  for (int i : indices) {
    RatVec v(static_cast<std::size_t>(sc.dim()), Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    s.basis.push_back(std::move(v));
  }
  return s;
}

Subalgebra Subalgebra::whole(const StructureConstants& sc) {
  std::vector<int> idx(static_cast<std::size_t>(sc.dim()));
  for (int i = 0; i < sc.dim(); ++i) idx[static_cast<std::size_t>(i)] = i;
  return from_indices(sc, idx);
}

namespace {

// Coordinates of vector fields in a shared feature space: one feature per
// (component, monomial) pair occurring anywhere in the inputs.
std::map<std::pair<int, Monomial>, int> feature_index(
    std::span<const VectorField> fields, std::span<const VectorField> more) {
  std::map<std::pair<int, Monomial>, int> idx;
  auto visit = [&](const VectorField& f) {
    for (int comp = 0; comp < kNumBase; ++comp) {
      for (const auto& [m, c] : f.component(static_cast<Base>(comp)).terms()) {
        idx.emplace(std::make_pair(comp, m), 0);
      }
    }
  };
  for (const auto& f : fields) visit(f);
  for (const auto& f : more) visit(f);
  int n = 0;
  for (auto& [key, val] : idx) val = n++;
  return idx;
}

RatVec featurize(const VectorField& f,
                 const std::map<std::pair<int, Monomial>, int>& idx) {
  RatVec v(idx.size(), Rational(0));
  for (int comp = 0; comp < kNumBase; ++comp) {
    for (const auto& [m, c] : f.component(static_cast<Base>(comp)).terms()) {
      v[static_cast<std::size_t>(idx.at({comp, m}))] = c;
    }
  }
  return v;
}

}  // namespace

std::optional<std::vector<RatVec>> coordinates_in_span(
    std::span<const VectorField> basis_fields, std::span<const VectorField> targets) {
  auto idx = feature_index(basis_fields, targets);
  // Columns of A are the basis fields.
  RatMat a(idx.size(), RatVec(basis_fields.size(), Rational(0)));
  for (std::size_t j = 0; j < basis_fields.size(); ++j) {
    RatVec col = featurize(basis_fields[j], idx);
    for (std::size_t i = 0; i < col.size(); ++i) a[i][j] = col[i];
  }
  std::vector<RatVec> out;
  for (const auto& t : targets) {
    auto x = solve(a, featurize(t, idx));
    if (!x) return std::nullopt;
    out.push_back(std::move(*x));
  }
  return out;
}

StructureConstants structure_constants_from_fields(std::span<const VectorField> gens) {
  const int n = static_cast<int>(gens.size());
  std::vector<VectorField> brackets;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      brackets.push_back(bracket(gens[static_cast<std::size_t>(i)],
                                 gens[static_cast<std::size_t>(j)]));
    }
  }
  auto coords = coordinates_in_span(gens, brackets);
  if (!coords) throw std::runtime_error("not closed");
  std::map<std::tuple<int, int, int>, Rational> c;
  std::size_t idx = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++idx) {
      for (int k = 0; k < n; ++k) {
        const Rational& v = (*coords)[idx][static_cast<std::size_t>(k)];
        if (v != 0) {
          c[{i, j, k}] = v;
          c[{j, i, k}] = -v;
        }
      }
    }
  }
  return StructureConstants(n, std::move(c));
}

Subalgebra center(const StructureConstants& sc) {
  const int n = sc.dim();
  // Stack the maps x -> [x, e_j] for all j; the center is the common kernel.
  RatMat big;
  for (int j = 0; j < n; ++j) {
    RatVec ej(static_cast<std::size_t>(n), Rational(0));
    ej[static_cast<std::size_t>(j)] = 1;
    for (int k = 0; k < n; ++k) {
      RatVec row(static_cast<std::size_t>(n), Rational(0));
      for (int i = 0; i < n; ++i) row[static_cast<std::size_t>(i)] = sc.c(i, j, k);
      big.push_back(std::move(row));
    }
  }
  Subalgebra s;
  s.parent = sc;
  s.basis = nullspace(big);
  return s;
}

bool is_closed(const Subalgebra& s) {
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < s.basis.size(); ++j) {
      if (!in_span(s.basis, s.parent.bracket(s.basis[i], s.basis[j]))) return false;
    }
  }
  return true;
}

bool is_ideal(const Subalgebra& s, const Subalgebra& in) {
  for (const auto& x : in.basis) {
    for (const auto& y : s.basis) {
      if (!in_span(s.basis, s.parent.bracket(x, y))) return false;
    }
  }
  return true;
}

bool is_abelian(const Subalgebra& s) {
  for (std::size_t i = 0; i < s.basis.size(); ++i) {
    for (std::size_t j = i + 1; j < s.basis.size(); ++j) {
      for (const auto& v : s.parent.bracket(s.basis[i], s.basis[j])) {
        if (v != 0) return false;
      }
    }
  }
  return true;
}

StructureConstants subalgebra_constants(const Subalgebra& s) {
  const int n = s.dim();
  RatMat basis_cols(s.basis.empty() ? 0 : s.basis[0].size(),
                    RatVec(static_cast<std::size_t>(n), Rational(0)));
  for (int j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < s.basis[static_cast<std::size_t>(j)].size(); ++i) {
      basis_cols[i][static_cast<std::size_t>(j)] = s.basis[static_cast<std::size_t>(j)][i];
    }
  }
  std::map<std::tuple<int, int, int>, Rational> c;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      RatVec br = s.parent.bracket(s.basis[static_cast<std::size_t>(i)],
                                   s.basis[static_cast<std::size_t>(j)]);
      auto x = solve(basis_cols, br);
      if (!x) throw std::runtime_error("not closed");
      for (int k = 0; k < n; ++k) {
        if ((*x)[static_cast<std::size_t>(k)] != 0) {
          c[{i, j, k}] = (*x)[static_cast<std::size_t>(k)];
          c[{j, i, k}] = -(*x)[static_cast<std::size_t>(k)];
        }
      }
    }
  }
  return StructureConstants(n, std::move(c));
}

StructureConstants quotient(const StructureConstants& sc, const Subalgebra& ideal,
                            std::vector<int>* rep_indices) {
  Subalgebra whole = Subalgebra::whole(sc);
  if (!is_ideal(ideal, whole)) throw std::runtime_error("not an ideal");
  const int n = sc.dim();
  // Complete the ideal with standard basis vectors (greedy, in index order).
  std::vector<RatVec> flag = ideal.basis;
  std::vector<int> reps;
  for (int i = 0; i < n && static_cast<int>(flag.size()) < n; ++i) {
    RatVec ei(static_cast<std::size_t>(n), Rational(0));
    ei[static_cast<std::size_t>(i)] = 1;
    if (!in_span(flag, ei)) {
      flag.push_back(std::move(ei));
      reps.push_back(i);
    }
  }
  if (rep_indices) *rep_indices = reps;
  const int q = static_cast<int>(reps.size());
  // Solve coordinates in (ideal basis | representatives); the quotient keeps
  // only the representative coordinates.
  RatMat cols(static_cast<std::size_t>(n), RatVec(flag.size(), Rational(0)));
  for (std::size_t j = 0; j < flag.size(); ++j) {
    for (int i = 0; i < n; ++i) {
      cols[static_cast<std::size_t>(i)][j] = flag[j][static_cast<std::size_t>(i)];
    }
  }
  const std::size_t ideal_dim = ideal.basis.size();
  std::map<std::tuple<int, int, int>, Rational> c;
  for (int i = 0; i < q; ++i) {
    for (int j = i + 1; j < q; ++j) {
      RatVec ei(static_cast<std::size_t>(n), Rational(0));
      ei[static_cast<std::size_t>(reps[static_cast<std::size_t>(i)])] = 1;
      RatVec ej(static_cast<std::size_t>(n), Rational(0));
      ej[static_cast<std::size_t>(reps[static_cast<std::size_t>(j)])] = 1;
      auto x = solve(cols, sc.bracket(ei, ej));
      if (!x) throw std::runtime_error("quotient solve failed");
      for (int k = 0; k < q; ++k) {
        const Rational& v = (*x)[ideal_dim + static_cast<std::size_t>(k)];
        if (v != 0) {
          c[{i, j, k}] = v;
          c[{j, i, k}] = -v;
        }
      }
    }
  }
  return StructureConstants(q, std::move(c));
}

std::vector<Subalgebra> derived_series(const Subalgebra& s) {
  std::vector<Subalgebra> series{s};
  while (true) {
    const Subalgebra& cur = series.back();
    RatMat brackets;
    for (std::size_t i = 0; i < cur.basis.size(); ++i) {
      for (std::size_t j = i + 1; j < cur.basis.size(); ++j) {
        brackets.push_back(cur.parent.bracket(cur.basis[i], cur.basis[j]));
      }
    }
    Subalgebra next;
    next.parent = s.parent;
    next.basis = row_space(std::move(brackets));
    if (next.dim() == cur.dim()) break;
    bool done = next.basis.empty();
    series.push_back(std::move(next));
    if (done) break;
  }
  return series;
}

bool is_solvable(const Subalgebra& s) {
  return derived_series(s).back().basis.empty();
}

RatMat killing_form(const StructureConstants& sc) {
  const int n = sc.dim();
  std::vector<RatMat> ads;
  ads.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ads.push_back(sc.ad(i));
  RatMat k(static_cast<std::size_t>(n), RatVec(static_cast<std::size_t>(n), Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Rational tr(0);
      for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
          tr += ads[static_cast<std::size_t>(i)][static_cast<std::size_t>(a)]
                   [static_cast<std::size_t>(b)] *
                ads[static_cast<std::size_t>(j)][static_cast<std::size_t>(b)]
                   [static_cast<std::size_t>(a)];
        }
      }
      k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = tr;
      k[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = tr;
    }
  }
  return k;
}

bool is_negative_definite(const RatMat& sym) {
  // -K positive definite iff all leading principal minors of -K are positive.
  const std::size_t n = sym.size();
  RatMat neg(n, RatVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) neg[i][j] = -sym[i][j];
  }
  for (std::size_t m = 1; m <= n; ++m) {
    RatMat minor(m, RatVec(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) minor[i][j] = neg[i][j];
    }
    if (determinant(std::move(minor)) <= 0) return false;
  }
  return true;
}

DecompositionReport levi_verify(const StructureConstants& sc, const Subalgebra& radical,
                                const Subalgebra& levi) {
  DecompositionReport rep;
  Subalgebra whole = Subalgebra::whole(sc);
  rep.center_dim = center(sc).dim();
  rep.radical_basis = radical.basis;
  rep.levi_basis = levi.basis;

  RatMat combined = radical.basis;
  combined.insert(combined.end(), levi.basis.begin(), levi.basis.end());
  rep.direct_sum_ok =
      rank(combined) == sc.dim() &&
      radical.dim() + levi.dim() == sc.dim();
  if (!rep.direct_sum_ok) rep.failures.push_back("direct sum");

  bool rad_closed = is_closed(radical);
  bool rad_solvable = rad_closed && is_solvable(radical);
  bool rad_ideal = is_ideal(radical, whole);
  rep.radical_solvable_ideal = rad_closed && rad_solvable && rad_ideal;
  if (!rep.radical_solvable_ideal) rep.failures.push_back("radical solvable ideal");
  if (rad_closed) {
    for (const auto& sub : derived_series(radical)) rep.derived_series_dims.push_back(sub.dim());
  }

  // One-generator maximality: no standard basis vector outside the radical
  // extends it to a larger solvable ideal.
  rep.radical_maximal_1step = true;
  for (int i = 0; i < sc.dim(); ++i) {
    RatVec ei(static_cast<std::size_t>(sc.dim()), Rational(0));
    ei[static_cast<std::size_t>(i)] = 1;
    if (in_span(radical.basis, ei)) continue;
    Subalgebra ext;
    ext.parent = sc;
    ext.basis = radical.basis;
    ext.basis.push_back(ei);
    if (is_closed(ext) && is_ideal(ext, whole) && is_solvable(ext)) {
      rep.radical_maximal_1step = false;
      break;
    }
  }
  if (!rep.radical_maximal_1step) rep.failures.push_back("radical maximal (one-generator)");

  rep.levi_closed = is_closed(levi);
  if (!rep.levi_closed) {
    rep.failures.push_back("levi closed");
  } else {
    rep.levi_killing_nondegenerate =
        determinant(killing_form(subalgebra_constants(levi))) != 0;
    if (!rep.levi_killing_nondegenerate) rep.failures.push_back("levi Killing nondegenerate");
  }
  return rep;
}

std::optional<RatMat> so3_identification(const Subalgebra& s) {
  if (s.dim() != 3 || !is_closed(s)) return std::nullopt;
  StructureConstants sub = subalgebra_constants(s);
  if (!is_negative_definite(killing_form(sub))) return std::nullopt;
  int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (const auto& p : perms) {
    for (int smask = 0; smask < 8; ++smask) {
      Rational sg[3];
      for (int i = 0; i < 3; ++i) sg[i] = (smask >> i) & 1 ? -1 : 1;
      auto z = [&](int i) {
        RatVec v(3, Rational(0));
        v[static_cast<std::size_t>(p[i])] = sg[i];
        return v;
      };
      auto eq = [](const RatVec& a, const RatVec& b) { return a == b; };
      if (eq(sub.bracket(z(0), z(1)), z(2)) && eq(sub.bracket(z(1), z(2)), z(0)) &&
          eq(sub.bracket(z(2), z(0)), z(1))) {
        RatMat m(3, RatVec(3, Rational(0)));
        for (int i = 0; i < 3; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p[i])] = sg[i];
        return m;
      }
    }
  }
  return std::nullopt;
}

GalileanCheck galilean_check(const Subalgebra& b) {
  GalileanCheck out;
  if (b.dim() != 10) {
    out.first_violation = "dimension != 10";
    return out;
  }
  StructureConstants sub;
  try {
    sub = subalgebra_constants(b);
  } catch (const std::runtime_error&) {
    out.first_violation = "not closed";
    return out;
  }
  // Basis order: T1,T2,T3 (0..2), H (3), B1,B2,B3 (4..6), J1,J2,J3 (7..9).
  auto basis_vec = [&](int i) {
    RatVec v(10, Rational(0));
    v[static_cast<std::size_t>(i)] = 1;
    return v;
  };
  auto expect_zero = [&](int i, int j, const std::string& name) {
    for (const auto& v : sub.bracket(basis_vec(i), basis_vec(j))) {
      if (v != 0) {
        out.first_violation = name;
        return false;
      }
    }
    return true;
  };
  // Translations and boosts commute among themselves and with each other;
  // time translation commutes with translations and rotations.
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i < j && !expect_zero(i, j, "[T,T]")) return out;
      if (i < j && !expect_zero(4 + i, 4 + j, "[B,B]")) return out;
      if (!expect_zero(i, 4 + j, "[T,B]")) return out;
    }
    if (!expect_zero(3, i, "[H,T]")) return out;
    if (!expect_zero(3, 7 + i, "[H,J]")) return out;
  }
  // [H, B_i] = T_i.
  for (int i = 0; i < 3; ++i) {
    RatVec br = sub.bracket(basis_vec(3), basis_vec(4 + i));
    if (br != basis_vec(i)) {
      out.first_violation = "[H,B] != T";
      return out;
    }
  }
  // Rotations close and carry an so(3) structure.
  Subalgebra rot;
  rot.parent = sub;
  for (int i = 0; i < 3; ++i) rot.basis.push_back(basis_vec(7 + i));
  if (!is_closed(rot)) {
    out.first_violation = "[J,J] leaves rotation span";
    return out;
  }
  if (!so3_identification(rot)) {
    out.first_violation = "rotation block not so(3)";
    return out;
  }
  // Each rotation acts on translations and boosts by the same antisymmetric
  // matrix (the vector representation).
  for (int a = 0; a < 3; ++a) {
    RatMat mt(3, RatVec(3, Rational(0)));
    RatMat mb(3, RatVec(3, Rational(0)));
    for (int i = 0; i < 3; ++i) {
      RatVec bt = sub.bracket(basis_vec(7 + a), basis_vec(i));
      RatVec bb = sub.bracket(basis_vec(7 + a), basis_vec(4 + i));
      for (std::size_t k = 0; k < 10; ++k) {
        bool t_ok = k < 3 || bt[k] == 0;
        bool b_ok = (k >= 4 && k < 7) || bb[k] == 0;
        if (!t_ok) {
          out.first_violation = "[J,T] leaves translation span";
          return out;
        }
        if (!b_ok) {
          out.first_violation = "[J,B] leaves boost span";
          return out;
        }
      }
      for (int j = 0; j < 3; ++j) {
        mt[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = bt[static_cast<std::size_t>(j)];
        mb[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = bb[static_cast<std::size_t>(4 + j)];
      }
    }
    if (mt != mb) {
      out.first_violation = "rotation acts differently on T and B";
      return out;
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (mt[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
            -mt[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]) {
          out.first_violation = "rotation action not antisymmetric";
          return out;
        }
      }
    }
  }
  out.ok = true;
  return out;
}

std::string render_combination(const RatVec& coeffs, const std::vector<std::string>& labels) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Rational mag = coeffs[i] < 0 ? Rational(-coeffs[i]) : coeffs[i];
    if (first) {
      if (coeffs[i] < 0) os << "-";
      first = false;
    } else {
      os << (coeffs[i] < 0 ? " - " : " + ");
    }
    if (mag != 1) os << to_string(mag) << "*";
    os << labels[i];
  }
  return first ? "0" : os.str();
}

std::string render_markdown_table(const StructureConstants& sc,
                                  const std::vector<std::string>& labels) {
  const int n = sc.dim();
  std::ostringstream os;
  os << "|      |";
  for (int j = 0; j < n; ++j) os << " " << labels[static_cast<std::size_t>(j)] << " |";
  os << "\n|------|";
  for (int j = 0; j < n; ++j) os << "------|";
  os << "\n";
  for (int i = 0; i < n; ++i) {
    os << "| " << labels[static_cast<std::size_t>(i)] << " |";
    RatVec ei(static_cast<std::size_t>(n), Rational(0));
    ei[static_cast<std::size_t>(i)] = 1;
    for (int j = 0; j < n; ++j) {
      RatVec ej(static_cast<std::size_t>(n), Rational(0));
      ej[static_cast<std::size_t>(j)] = 1;
      os << " " << render_combination(sc.bracket(ei, ej), labels) << " |";
    }
    os << "\n";
  }
  return os.str();
}

nlohmann::json table_to_json(const StructureConstants& sc) {
  nlohmann::json triples = nlohmann::json::array();
  for (const auto& [ijk, v] : sc.constants()) {
    auto [i, j, k] = ijk;
    triples.push_back({{"i", i + 1}, {"j", j + 1}, {"k", k + 1}, {"c", to_string(v)}});
  }
  return {{"dim", sc.dim()}, {"triples", triples}};
}

std::vector<std::string> x_labels(int dim) {
  std::vector<std::string> out;
  for (int i = 1; i <= dim; ++i) out.push_back("X_" + std::to_string(i));
  return out;
}

std::vector<std::string> y_labels(int dim) {
  std::vector<std::string> out;
  for (int i = 1; i <= dim; ++i) out.push_back("Y_" + std::to_string(i));
  return out;
}

}  // namespace lie_euler
