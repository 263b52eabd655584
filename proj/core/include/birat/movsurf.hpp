#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "birat/bihomogeneous.hpp"
#include "birat/surface.hpp"

namespace birat {

/// Bihomogeneous polynomial of bidegree (m; n) in rings::surface_tx().
struct MovingSurface {
  BiHomogeneousPoly body;
  bool follows_phi = false;
};

/// Basis of the moving surfaces of bidegree (m; n) following `param`, from
/// the rational nullspace of the coefficient system. The basis is in reduced
/// echelon form over the unknowns A_(alpha,gamma), ordered by descending
/// graded-lex on t^alpha X^gamma, with each vector scaled to coprime
/// integers. Every element is re-verified by substitution.
std::vector<MovingSurface> moving_surface_basis(const SurfaceParam& param, unsigned m, unsigned n);

/// Square matrix whose (i, j) entry is the coefficient of row_monomials[i]
/// in surfaces[j]. Throws ShapeError when the sizes disagree,
/// NotFollowingError when a surface does not follow `param` and
/// SingularMatrixError when the determinant vanishes.
ElimMatrix assemble_candidate(const SurfaceParam& param, const std::vector<MovingSurface>& surfaces,
                              const std::vector<Monomial>& row_monomials,
                              std::optional<std::size_t> marked_column = std::nullopt);

struct CandidateSearch {
  ElimMatrix matrix;
  std::vector<MovingSurface> surfaces;
  /// Basis sizes per X-degree at the chosen m: planes, quadrics.
  std::size_t planes_available = 0;
  std::size_t quadrics_available = 0;
};

/// For m = 1, 2, ..., m_max: picks moving planes, then moving quadrics, while
/// they raise the rank of the matrix at a fixed random point, until the
/// C(m+2, 2) columns are independent. The marked column is the first column
/// of largest X-degree unless `marked_column` overrides it. Throws
/// SingularMatrixError when no m up to m_max yields a nonsingular matrix.
CandidateSearch search_implicitization_candidate(const SurfaceParam& param, unsigned m_max = 3,
                                                 std::optional<std::size_t> marked_column = std::nullopt);

/// Degree-m monomials in t1, t2, t3, descending graded-lex (t1^m first).
std::vector<Monomial> row_monomials_of_degree(unsigned m);

}  // namespace birat
