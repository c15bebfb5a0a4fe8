#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcass/groebner/groebner.hpp"
#include "lcass/intlat/smith.hpp"
#include "lcass/singh/binomial.hpp"
#include "lcass/singh/graded.hpp"
#include "lcass/singh/matrices.hpp"

// Associated primes of the degree -d component of H^3 for
// R' = Z[X,Y,Z,U,V,W]/(XU+YV+ZW). Every such component has (X,Y,Z) as an
// associated prime; the remaining ones are (p,X,Y,Z) for the primes p
// collected below. Components in degrees above -3 vanish.

namespace lcass::singh {

inline constexpr const char* kBaseIdeal = "(X,Y,Z)";

struct PieceProvenance {
  std::size_t i_block = 0;  // Coker Q_{i_block, d-1}
  std::int64_t deg_i = 0;
  std::int64_t deg_j = 0;
  PrimeSet primes;
};

struct AssReport {
  std::int64_t d = 0;
  std::optional<PrimeSet> closed_form;
  std::optional<PrimeSet> graded_snf;
  std::optional<bool> groebner_crosscheck;
  /// Pieces that carry torsion.
  std::vector<PieceProvenance> pieces;
  std::size_t pieces_examined = 0;
  bool agreement = true;
};

/// (p, X, Y, Z) is associated iff p in Pi(d-2).
inline PrimeSet ass_closed_form(std::int64_t d) {
  require_d(d, "ass_closed_form");
  return pi_set(d - 2);
}

struct BruteforceResult {
  PrimeSet primes;
  std::vector<PieceProvenance> pieces;
  std::size_t pieces_examined = 0;
};

/// Union over i = 1..d-2 of the Z-torsion primes of every graded piece of
/// Coker Q_{i,d-1}. By default each piece is checked through both the
/// elementary divisors and the maximal minors; `divisors_only` skips the
/// minor route.
inline BruteforceResult ass_bruteforce(std::int64_t d, bool divisors_only = false) {
  require_d(d, "ass_bruteforce");
  BruteforceResult out;
  for (std::int64_t r = 1; r <= d - 2; ++r) {
    const auto k = static_cast<std::size_t>(d - 1 - r);
    for (const auto& piece : graded_pieces(static_cast<std::size_t>(r), k)) {
      ++out.pieces_examined;
      if (piece.relations.cols() == 0) continue;  // free piece
      PrimeSet primes = divisors_only ? torsion_primes_via_divisors(piece.relations)
                                      : torsion_primes(piece.relations);
      if (primes.empty()) continue;
      out.primes.insert(primes.begin(), primes.end());
      out.pieces.push_back({static_cast<std::size_t>(r), piece.i, piece.j, std::move(primes)});
    }
  }
  return out;
}

/// Each diagonal block A_{i}...A_{d-2} of H_d equals Q_{i, d-1}, so that
/// Coker H_d splits as the sum of the Coker Q_{i,d-1}.
inline bool h_blocks_are_q(std::int64_t d) {
  require_d(d, "h_blocks_are_q");
  const auto n = static_cast<std::size_t>(d - 2);
  for (std::size_t first = 1; first <= n; ++first) {
    if (!(a_product<Integer>(first, n) == build_Q<Integer>(first, n + 1 - first))) return false;
  }
  return true;
}

struct GroebnerCrosscheck {
  bool elimination_equals_h = false;  // span(G ∩ Z[Y,Z]^n) = Im H_d
  bool h_inside_t = false;            // Im H_d ⊆ Im T_d
  std::size_t basis_size = 0;
  std::size_t eliminated_size = 0;
};

inline GroebnerCrosscheck ass_groebner_crosscheck_detail(std::int64_t d) {
  require_d(d, "ass_groebner_crosscheck");
  const auto t = build_T<Integer>(d);
  const auto h = build_H<Integer>(d);
  const auto gb = buchberger(t.columns());
  const auto elim = eliminate_x(gb);
  GroebnerCrosscheck out;
  out.basis_size = gb.size();
  out.eliminated_size = elim.size();
  out.h_inside_t = contains_all(gb, h.columns());
  out.elimination_equals_h = same_span(elim, h.columns());
  return out;
}

/// span(eliminate_x(GB(T_d))) = span(H_d) over Z[Y,Z], by mutual membership.
inline bool ass_groebner_crosscheck(std::int64_t d) {
  const auto r = ass_groebner_crosscheck_detail(d);
  return r.elimination_equals_h && r.h_inside_t;
}

/// X^{d-2} e_i, Y^{d-2} e_i, Z^{d-2} e_i lie in Im T_d for every i. For
/// d = 3 additionally X e_1, Y e_1, Z e_1 lie in Im T_3, e_1 does not, and
/// (Im T_3 : e_1) = (X, Y, Z).
inline bool annihilator_checks(std::int64_t d) {
  require_d(d, "annihilator_checks");
  const auto t = build_T<Integer>(d);
  const auto gb = buchberger(t.columns());
  const std::size_t n = t.rows();
  const auto e = static_cast<Monomial::Exponent>(d - 2);
  for (std::size_t pos = 1; pos <= n; ++pos) {
    for (const Monomial& m : {Monomial::X(e), Monomial::Y(e), Monomial::Z(e)}) {
      if (!membership(ModuleVector<Integer>::monomial(n, pos, m), gb)) return false;
    }
  }
  if (d == 3) {
    using V = ModuleVector<Integer>;
    for (const Monomial& m : {Monomial::X(), Monomial::Y(), Monomial::Z()}) {
      if (!membership(V::monomial(1, 1, m), gb)) return false;
    }
    if (membership(V::basis(1, 1), gb)) return false;
    // In rank one the colon (N : e_1) is N itself read as an ideal.
    const std::vector<V> xyz = {V::monomial(1, 1, Monomial::X()), V::monomial(1, 1, Monomial::Y()),
                                V::monomial(1, 1, Monomial::Z())};
    if (!same_span(t.columns(), xyz)) return false;
  }
  return true;
}

/// Runs the selected pipelines and fills the agreement flag.
struct AssMethods {
  bool closed = true;
  bool snf = true;
  bool groebner = false;
};

inline AssReport compute_ass_report(std::int64_t d, const AssMethods& methods) {
  require_d(d, "compute_ass_report");
  AssReport rep;
  rep.d = d;
  if (methods.closed) rep.closed_form = ass_closed_form(d);
  if (methods.snf) {
    auto bf = ass_bruteforce(d);
    rep.graded_snf = std::move(bf.primes);
    rep.pieces = std::move(bf.pieces);
    rep.pieces_examined = bf.pieces_examined;
  }
  if (methods.groebner) rep.groebner_crosscheck = ass_groebner_crosscheck(d);
  rep.agreement = true;
  if (rep.closed_form && rep.graded_snf) rep.agreement = *rep.closed_form == *rep.graded_snf;
  if (rep.groebner_crosscheck && !*rep.groebner_crosscheck) rep.agreement = false;
  return rep;
}

inline nlohmann::json primes_to_json(const PrimeSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (Prime p : s) a.push_back(p);
  return a;
}

inline nlohmann::json report_to_json(const AssReport& r) {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : r.pieces) {
    pieces.push_back({{"i_block", p.i_block},
                      {"degree", {p.deg_i, p.deg_j}},
                      {"primes", primes_to_json(p.primes)}});
  }
  nlohmann::json j;
  j["d"] = r.d;
  j["closed_form"] = r.closed_form ? primes_to_json(*r.closed_form) : nlohmann::json(nullptr);
  j["graded_snf"] = r.graded_snf ? primes_to_json(*r.graded_snf) : nlohmann::json(nullptr);
  j["groebner_crosscheck"] =
      r.groebner_crosscheck ? nlohmann::json(*r.groebner_crosscheck) : nlohmann::json(nullptr);
  j["pieces"] = std::move(pieces);
  j["pieces_examined"] = r.pieces_examined;
  j["agreement"] = r.agreement;
  j["base_ideal"] = kBaseIdeal;
  return j;
}

inline AssReport report_from_json(const nlohmann::json& j) {
  auto primes = [](const nlohmann::json& a) {
    PrimeSet s;
    for (const auto& v : a) s.insert(v.get<Prime>());
    return s;
  };
  AssReport r;
  r.d = j.at("d").get<std::int64_t>();
  if (!j.at("closed_form").is_null()) r.closed_form = primes(j.at("closed_form"));
  if (!j.at("graded_snf").is_null()) r.graded_snf = primes(j.at("graded_snf"));
  if (j.contains("groebner_crosscheck") && !j.at("groebner_crosscheck").is_null()) {
    r.groebner_crosscheck = j.at("groebner_crosscheck").get<bool>();
  }
  for (const auto& p : j.at("pieces")) {
    r.pieces.push_back({p.at("i_block").get<std::size_t>(), p.at("degree").at(0).get<std::int64_t>(),
                        p.at("degree").at(1).get<std::int64_t>(), primes(p.at("primes"))});
  }
  r.pieces_examined = j.value("pieces_examined", std::size_t{0});
  r.agreement = j.at("agreement").get<bool>();
  return r;
}

/// Associated primes of R'_0 = Z[X,Y,Z] as strings: (X,Y,Z) and (p,X,Y,Z).
inline std::vector<std::string> associated_prime_ideals(const PrimeSet& torsion) {
  std::vector<std::string> out = {kBaseIdeal};
  for (Prime p : torsion) out.push_back("(" + std::to_string(p) + ",X,Y,Z)");
  return out;
}

}  // namespace lcass::singh
