#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "lcass/errors.hpp"
#include "lcass/intlat/int_matrix.hpp"
#include "lcass/singh/matrices.hpp"

// Bigraded pieces of Coker Q_{r,r+k} over L[Y,Z], with deg Y^a Z^b = (a+b, a)
// and deg e_rho = (0, rho).

namespace lcass::singh {

struct GradedPiece {
  std::size_t r = 0;
  std::size_t k = 0;
  std::int64_t i = 0;  // degree (i, j)
  std::int64_t j = 0;

  /// Basis Y^{j-rho} Z^{i-j+rho} e_rho for rho = rho_min..rho_max.
  std::int64_t rho_min = 0;
  std::int64_t rho_max = -1;
  /// Generators Y^{j-sigma} Z^{i-j+sigma-k} c_sigma for sigma in this range;
  /// empty (sigma_min > sigma_max) when i < k.
  std::int64_t sigma_min = 1;
  std::int64_t sigma_max = 0;

  /// Rows follow the basis, columns follow the generators.
  IntMatrix relations;

  std::size_t basis_size() const { return static_cast<std::size_t>(rho_max - rho_min + 1); }

  ModuleMonomial basis_element(std::int64_t rho) const {
    return {Monomial(0, static_cast<Monomial::Exponent>(j - rho),
                     static_cast<Monomial::Exponent>(i - j + rho)),
            static_cast<std::size_t>(rho)};
  }
};

namespace detail {

/// Expands the generators of (Im Q)_{(i,j)} in the monomial basis of the
/// piece by actually multiplying the columns of Q; every term must land on a
/// basis element.
inline IntMatrix piece_relations(const GradedPiece& piece,
                                 const std::vector<ModuleVector<Integer>>& q_columns) {
  const auto rows = piece.basis_size();
  const auto ncols = piece.sigma_max >= piece.sigma_min
                         ? static_cast<std::size_t>(piece.sigma_max - piece.sigma_min + 1)
                         : 0;
  IntMatrix rel(rows, ncols);
  const auto k = static_cast<std::int64_t>(piece.k);
  for (std::int64_t sigma = piece.sigma_min; sigma <= piece.sigma_max; ++sigma) {
    const Monomial shift(0, static_cast<Monomial::Exponent>(piece.j - sigma),
                         static_cast<Monomial::Exponent>(piece.i - piece.j + sigma - k));
    const auto gen = q_columns[static_cast<std::size_t>(sigma - 1)].mul_term(shift, Integer(1));
    for (const auto& t : gen.terms()) {
      const auto rho = static_cast<std::int64_t>(t.pos);
      if (rho < piece.rho_min || rho > piece.rho_max || piece.basis_element(rho).mono != t.mono) {
        throw VerificationError("generator term " + t.mono.str() + " e_" + std::to_string(rho) +
                                " is not in the basis of degree (" + std::to_string(piece.i) +
                                "," + std::to_string(piece.j) + ")");
      }
      rel(static_cast<std::size_t>(rho - piece.rho_min),
          static_cast<std::size_t>(sigma - piece.sigma_min)) += t.coeff;
    }
  }
  return rel;
}

inline std::optional<GradedPiece> make_piece(std::size_t r, std::size_t k, std::int64_t i,
                                             std::int64_t j,
                                             const std::vector<ModuleVector<Integer>>& q_columns) {
  const auto R = static_cast<std::int64_t>(r);
  const auto K = static_cast<std::int64_t>(k);
  GradedPiece p;
  p.r = r;
  p.k = k;
  p.i = i;
  p.j = j;
  p.rho_min = std::max<std::int64_t>(j - i, 1);
  p.rho_max = std::min<std::int64_t>(j, R);
  if (p.rho_min > p.rho_max) return std::nullopt;
  if (i >= K) {
    p.sigma_min = std::max<std::int64_t>(j + K - i, 1);
    p.sigma_max = std::min<std::int64_t>(j, R + K);
  }
  p.relations = piece_relations(p, q_columns);
  return p;
}

}  // namespace detail

/// The piece of degree (i, j), i >= 0, j >= 1, or nullopt when its basis is
/// empty.
inline std::optional<GradedPiece> graded_piece(std::size_t r, std::size_t k, std::int64_t i,
                                               std::int64_t j) {
  if (r < 1 || k < 1) throw ArgumentError("graded_piece: r and k must be positive");
  if (i < 0 || j < 1) throw ArgumentError("graded_piece: need i >= 0 and j >= 1");
  return detail::make_piece(r, k, i, j, build_Q<Integer>(r, k).columns());
}

/// Every piece (i, j) with 0 <= i <= 2k+r-1 and 1 <= j <= k+r-1 whose basis
/// is non-empty; outside that box the cokernel vanishes.
inline std::vector<GradedPiece> graded_pieces(std::size_t r, std::size_t k) {
  if (r < 1 || k < 1) throw ArgumentError("graded_pieces: r and k must be positive");
  const auto q_columns = build_Q<Integer>(r, k).columns();
  const auto R = static_cast<std::int64_t>(r);
  const auto K = static_cast<std::int64_t>(k);
  std::vector<GradedPiece> out;
  for (std::int64_t i = 0; i <= 2 * K + R - 1; ++i) {
    for (std::int64_t j = 1; j <= K + R - 1; ++j) {
      if (auto p = detail::make_piece(r, k, i, j, q_columns)) out.push_back(std::move(*p));
    }
  }
  return out;
}

/// For every piece with k <= i <= 2k+r-1 the relation matrix equals the block
/// of Q~_{r,r+k} made of the consecutive columns max{j+k-i,1}..min{j,r+k},
/// restricted to the basis rows; the remaining rows of those columns vanish.
inline bool consecutive_submatrix_check(std::size_t r, std::size_t k) {
  const IntMatrix qt = q_tilde(r, k);
  const auto K = static_cast<std::int64_t>(k);
  for (const auto& p : graded_pieces(r, k)) {
    if (p.i < K) {
      if (p.relations.cols() != 0) return false;
      continue;
    }
    if (p.sigma_min > p.sigma_max) return false;
    const auto c0 = static_cast<std::size_t>(p.sigma_min - 1);
    const auto c1 = static_cast<std::size_t>(p.sigma_max);
    const auto r0 = static_cast<std::size_t>(p.rho_min - 1);
    const auto r1 = static_cast<std::size_t>(p.rho_max);
    if (!(qt.submatrix(r0, r1, c0, c1) == p.relations)) return false;
    if (!qt.submatrix(0, r0, c0, c1).is_zero()) return false;
    if (!qt.submatrix(r1, qt.rows(), c0, c1).is_zero()) return false;
  }
  return true;
}

}  // namespace lcass::singh
