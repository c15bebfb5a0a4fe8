#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "lcass/errors.hpp"
#include "lcass/freemod/poly_matrix.hpp"
#include "lcass/groebner/groebner.hpp"
#include "lcass/intlat/int_matrix.hpp"
#include "lcass/singh/binomial.hpp"

// Matrix families attached to F = XU + YV + ZW acting on the inverse
// polynomials R0[U^-, V^-, W^-].

namespace lcass::singh {

inline std::size_t choose2(std::size_t n) { return n * (n - 1) / 2; }

inline void require_d(std::int64_t d, const char* who) {
  if (d < 3) throw ArgumentError(std::string(who) + ": d must be at least 3");
}

/// T_d: the matrix of multiplication by F from degree -d-1 to degree -d,
/// assembled as block rows [.. A_{d-2-l} | X*I_{d-2-l} ..].
template <Coefficient C = Integer>
PolyMatrix<C> build_T(std::int64_t d) {
  require_d(d, "build_T");
  const auto n = static_cast<std::size_t>(d);
  const std::size_t block_rows = n - 2;
  const std::size_t block_cols = n - 1;
  std::vector<std::vector<Block<C>>> layout(block_rows);
  for (std::size_t l = 0; l < block_rows; ++l) {
    const std::size_t size = n - 2 - l;  // A_size sits on the block diagonal
    for (std::size_t c = 0; c < block_cols; ++c) {
      if (c == l) {
        layout[l].emplace_back(build_A<C>(size));
      } else if (c == l + 1) {
        layout[l].emplace_back(x_identity<C>(size));
      } else {
        layout[l].emplace_back(zero_block(size, n - 1 - c));
      }
    }
  }
  return block_assemble<C>(layout);
}

/// Exponent triple (alpha, beta, gamma) of U^alpha V^beta W^gamma.
using InverseMonomial = std::array<std::int64_t, 3>;

/// The base of R0[U^-,V^-,W^-]_{-n} in increasing order: a < b iff
/// alpha_a > alpha_b, or alpha_a = alpha_b and beta_a > beta_b.
inline std::vector<InverseMonomial> inverse_monomial_base(std::int64_t n) {
  require_d(n, "inverse_monomial_base");
  std::vector<InverseMonomial> out;
  for (std::int64_t alpha = -1; alpha >= -(n - 2); --alpha) {
    for (std::int64_t beta = -1; alpha + beta >= -(n - 1); --beta) {
      out.push_back({alpha, beta, -n - alpha - beta});
    }
  }
  return out;
}

/// Matrix of multiplication by F built straight from
///   F*U^a V^b W^c = X(1 - [a=-1]) U^{a+1}V^bW^c + Y(1 - [b=-1]) U^aV^{b+1}W^c
///                 + Z(1 - [c=-1]) U^aV^bW^{c+1}
/// relative to the ordered bases of degrees -d-1 (columns) and -d (rows).
template <Coefficient C = Integer>
PolyMatrix<C> build_T_from_rule(std::int64_t d) {
  require_d(d, "build_T_from_rule");
  const auto source = inverse_monomial_base(d + 1);
  const auto target = inverse_monomial_base(d);
  std::map<InverseMonomial, std::size_t> row_of;
  for (std::size_t r = 0; r < target.size(); ++r) row_of[target[r]] = r + 1;
  PolyMatrix<C> t(target.size(), source.size());
  const std::array<Polynomial<C>, 3> coeff = {Polynomial<C>::X(), Polynomial<C>::Y(),
                                              Polynomial<C>::Z()};
  for (std::size_t col = 0; col < source.size(); ++col) {
    for (int v = 0; v < 3; ++v) {
      if (source[col][v] == -1) continue;
      InverseMonomial image = source[col];
      image[v] += 1;
      t(row_of.at(image), col + 1) += coeff[v];
    }
  }
  return t;
}

/// build_T agrees with the matrix generated by the multiplication rule.
inline bool entry_rule_check(std::int64_t d) { return build_T<Integer>(d) == build_T_from_rule<Integer>(d); }

/// A_{i+1} A_{i+2} ... A_n by repeated multiplication.
template <Coefficient C = Integer>
PolyMatrix<C> a_product(std::size_t first, std::size_t last) {
  if (first < 1 || first > last) throw ArgumentError("a_product: need 1 <= first <= last");
  PolyMatrix<C> out = build_A<C>(first);
  for (std::size_t m = first + 1; m <= last; ++m) out = out * build_A<C>(m);
  return out;
}

/// The (i+1) x (n+1) matrix whose row rho carries C(n-i, j) Z^{n-i-j} Y^j in
/// column rho + j, written down directly.
template <Coefficient C = Integer>
PolyMatrix<C> a_product_closed_form(std::size_t i, std::size_t n) {
  if (i >= n) throw ArgumentError("a_product_closed_form: need i < n");
  const std::size_t m = n - i;
  PolyMatrix<C> out(i + 1, n + 1);
  for (std::size_t rho = 1; rho <= i + 1; ++rho) {
    for (std::size_t j = 0; j <= m; ++j) {
      const C c = C(binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(j)));
      out(rho, rho + j) = Polynomial<C>(
          Monomial(0, static_cast<Monomial::Exponent>(j), static_cast<Monomial::Exponent>(m - j)),
          c);
    }
  }
  return out;
}

/// H_d: block diagonal with blocks A_{d-2}, A_{d-3}A_{d-2}, ..., A_1...A_{d-2}.
template <Coefficient C = Integer>
PolyMatrix<C> build_H(std::int64_t d) {
  require_d(d, "build_H");
  const auto n = static_cast<std::size_t>(d - 2);
  std::vector<PolyMatrix<C>> blocks;
  for (std::size_t first = n; first >= 1; --first) blocks.push_back(a_product<C>(first, n));
  return block_diagonal<C>(blocks);
}

/// Q_{r,r+k}: row rho carries C(k, j) Z^{k-j} Y^j in column rho + j.
template <Coefficient C = Integer>
PolyMatrix<C> build_Q(std::size_t r, std::size_t k) {
  if (r < 1 || k < 1) throw ArgumentError("build_Q: r and k must be positive");
  PolyMatrix<C> q(r, r + k);
  for (std::size_t rho = 1; rho <= r; ++rho) {
    for (std::size_t j = 0; j <= k; ++j) {
      q(rho, rho + j) = Polynomial<C>(
          Monomial(0, static_cast<Monomial::Exponent>(j), static_cast<Monomial::Exponent>(k - j)),
          C(binomial(static_cast<std::int64_t>(k), static_cast<std::int64_t>(j))));
    }
  }
  return q;
}

/// Q_{r,r+k} evaluated at X = Y = Z = 1.
inline IntMatrix q_tilde(std::size_t r, std::size_t k) {
  const auto q = build_Q<Integer>(r, k);
  IntMatrix out(q.rows(), q.cols());
  for (std::size_t i = 1; i <= q.rows(); ++i) {
    for (std::size_t j = 1; j <= q.cols(); ++j) out(i - 1, j - 1) = q(i, j).evaluate(1, 1, 1);
  }
  return out;
}

/// T_d' together with the blocks G_{d-2}, ..., G_1 used to build it.
template <Coefficient C>
struct TPrime {
  PolyMatrix<C> matrix;
  std::vector<PolyMatrix<C>> g_blocks;  // g_blocks[0] = G_{d-2}
};

/// G_{d-2} completes the columns of A_{d-2}; G_i completes the columns of
/// A_i G_{i+1}. Completion keeps the input columns, so each G_i contains the
/// columns it was built from. T_d' = [T_d | diag(G_{d-2}, ..., G_1)].
template <Coefficient C = Integer>
TPrime<C> build_T_prime(std::int64_t d) {
  require_d(d, "build_T_prime");
  const auto n = static_cast<std::size_t>(d - 2);
  const BuchbergerOptions keep_inputs{.interreduce = false};
  auto complete = [&](const PolyMatrix<C>& m) {
    std::vector<ModuleVector<C>> cols;
    for (auto& c : m.columns()) {
      if (!c.is_zero()) cols.push_back(std::move(c));
    }
    const auto gb = buchberger(cols, keep_inputs);
    return PolyMatrix<C>::from_columns(m.rows(), gb.generators());
  };
  std::vector<PolyMatrix<C>> g;
  g.push_back(complete(build_A<C>(n)));
  for (std::size_t i = n - 1; i >= 1; --i) g.push_back(complete(build_A<C>(i) * g.back()));
  const auto t = build_T<C>(d);
  const auto diag = block_diagonal<C>(g);
  std::vector<std::vector<Block<C>>> layout(1);
  layout[0].emplace_back(t);
  layout[0].emplace_back(diag);
  return {block_assemble<C>(layout), std::move(g)};
}

}  // namespace lcass::singh
