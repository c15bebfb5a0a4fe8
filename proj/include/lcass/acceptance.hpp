#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcass/groebner/groebner.hpp"
#include "lcass/intlat/smith.hpp"
#include "lcass/singh/ass.hpp"
#include "lcass/singh/binomial.hpp"
#include "lcass/singh/graded.hpp"
#include "lcass/singh/identities.hpp"
#include "lcass/singh/matrices.hpp"

namespace lcass::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;

  std::string line() const {
    std::ostringstream os;
    os << "criterion " << id << " [" << (passed ? "PASS" : "FAIL") << "] " << name << " ("
       << seconds << " s of " << budget_seconds << " s)";
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

/// A check returns an empty string on success and a failure reason otherwise.
using Check = std::function<std::string()>;

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  Check check;
};

inline CriterionResult run_criterion(const Criterion& c) {
  CriterionResult r{c.id, c.name, false, 0, c.budget_seconds, {}};
  const auto t0 = std::chrono::steady_clock::now();
  try {
    r.detail = c.check();
    r.passed = r.detail.empty();
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (r.passed && r.seconds > r.budget_seconds) {
    r.passed = false;
    r.detail = "over time budget";
  }
  return r;
}

namespace checks {

inline std::string ass_equals_pi() {
  for (std::int64_t d = 3; d <= 12; ++d) {
    const PrimeSet got = singh::ass_bruteforce(d).primes;
    const PrimeSet want = singh::pi_set(d - 2);
    if (got != want) {
      return "d=" + std::to_string(d) + ": graded Smith gives " + to_string(got) + ", Pi gives " +
             to_string(want);
    }
  }
  return {};
}

inline std::string groebner_elimination() {
  for (std::int64_t d = 3; d <= 6; ++d) {
    const auto r = singh::ass_groebner_crosscheck_detail(d);
    if (!r.elimination_equals_h) return "d=" + std::to_string(d) + ": elimination span differs from H_d";
    if (!r.h_inside_t) return "d=" + std::to_string(d) + ": Im H_d not inside Im T_d";
  }
  return {};
}

inline std::string t_prime_fixpoint() {
  for (std::int64_t d = 3; d <= 6; ++d) {
    const auto tp = singh::build_T_prime<Integer>(d);
    std::vector<ModuleVector<Integer>> cols;
    for (auto& c : tp.matrix.columns()) {
      if (!c.is_zero()) cols.push_back(std::move(c));
    }
    if (!satisfies_buchberger_criterion<Integer>(cols)) {
      return "d=" + std::to_string(d) + ": S/G-pair criterion fails on the columns of T_d'";
    }
    const auto gb = buchberger(cols, BuchbergerOptions{.interreduce = false});
    if (gb.added() != 0) {
      return "d=" + std::to_string(d) + ": completion added " + std::to_string(gb.added()) + " elements";
    }
    if (!same_span(cols, singh::build_T<Integer>(d).columns())) {
      return "d=" + std::to_string(d) + ": Im T_d' differs from Im T_d";
    }
  }
  return {};
}

inline std::string determinant_identities() {
  for (std::int64_t k = 1; k <= 7; ++k) {
    for (std::int64_t s = 1; s <= 7; ++s) {
      for (std::int64_t i = 0; i <= k + 2; ++i) {
        const Rational formula = singh::van_zeipel_det(k, i, s);
        const Integer direct = singh::det_direct(singh::omega(k, i, s));
        const Rational ratio = singh::van_zeipel_det_ratio_form(k, i, s);
        if (formula != Rational(direct) || formula != ratio) {
          return "k=" + std::to_string(k) + " i=" + std::to_string(i) + " s=" + std::to_string(s) +
                 ": product " + to_string(formula) + ", direct " + to_string(direct) + ", ratio " +
                 to_string(ratio);
        }
      }
    }
  }
  return {};
}

inline std::string annihilators() {
  for (std::int64_t d = 3; d <= 6; ++d) {
    if (!singh::annihilator_checks(d)) return "d=" + std::to_string(d);
  }
  return {};
}

inline std::string pi_properties() {
  const std::vector<std::pair<Prime, unsigned>> gaps = {{2, 2}, {2, 3}, {3, 2}, {5, 1}};
  for (auto [p, k] : gaps) {
    if (!singh::prime_power_gap(p, k)) {
      return std::to_string(p) + " lies in Pi(" + std::to_string(p) + "^" + std::to_string(k) + "-1)";
    }
  }
  for (std::int64_t j = 3; j <= 100; ++j) {
    const PrimeSet pi = singh::pi_set(j - 2);
    for (Prime p : prime_factors(Integer(j - 2))) {
      if (pi.count(p) == 0) return std::to_string(p) + " divides " + std::to_string(j - 2) + " but is not in Pi";
    }
  }
  if (!singh::pi_unbounded_witness({2, 3, 5})) return "{2,3,5} not inside Pi(30)";
  if (singh::pi_set(30).size() < 3) return "#Pi(30) < 3";
  return {};
}

inline std::string structural_identities() {
  if (!singh::a_product_closed_form_check(10)) return "A-product closed form";
  if (!singh::q_product_check(5, 5)) return "Q-product identity";
  for (std::size_t r = 1; r <= 4; ++r) {
    for (std::size_t k = 1; k <= 4; ++k) {
      if (!singh::consecutive_submatrix_check(r, k)) {
        return "consecutive submatrix r=" + std::to_string(r) + " k=" + std::to_string(k);
      }
    }
  }
  return {};
}

inline std::string snf_properties(std::uint32_t seed = 20240611u, int count = 1000) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> dim(1, 6);
  std::uniform_int_distribution<int> entry(-20, 20);
  for (int t = 0; t < count; ++t) {
    IntMatrix a(static_cast<std::size_t>(dim(rng)), static_cast<std::size_t>(dim(rng)));
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = entry(rng);
    }
    const SnfResult r = smith(a);
    if (!verify_smith(a, r)) return "sample " + std::to_string(t) + ": Smith invariants fail";
    if (r.rank() != rank(a)) return "sample " + std::to_string(t) + ": rank mismatch";
    for (std::size_t s = 1; s <= std::min(a.rows(), a.cols()); ++s) {
      if (minor_gcd_by_enumeration(a, s) != minor_gcd_by_snf(a, s)) {
        return "sample " + std::to_string(t) + ": minor gcd mismatch at s=" + std::to_string(s);
      }
    }
    torsion_primes(a);
  }
  return {};
}

inline std::string ass_witnesses() {
  const auto w = singh::ass_witnesses(2, 50, 5);
  if (w.with_p.size() < 5 || w.without_p.size() < 5) {
    return "found " + std::to_string(w.with_p.size()) + " with and " + std::to_string(w.without_p.size()) +
           " without";
  }
  // A j with 2 present is followed by a larger j with 2 absent, and conversely.
  if (!(w.with_p.front() < w.without_p.back() && w.without_p.front() < w.with_p.back())) {
    return "witnesses do not interleave";
  }
  return {};
}

}  // namespace checks

inline std::vector<Criterion> criteria() {
  return {
      {1, "graded Smith pipeline equals Pi(d-2) for d = 3..12", 60, checks::ass_equals_pi},
      {2, "Groebner elimination of T_d spans Im H_d for d = 3..6", 600, checks::groebner_elimination},
      {3, "columns of T_d' satisfy the S/G-pair criterion for d = 3..6", 600, checks::t_prime_fixpoint},
      {4, "van Zeipel product = direct determinant = ratio form", 5, checks::determinant_identities},
      {5, "X,Y,Z powers annihilate Coker T_d; (Im T_3 : e_1) = (X,Y,Z)", 60, checks::annihilators},
      {6, "Pi(n) prime-power gaps, divisor membership, Pi(30)", 1, checks::pi_properties},
      {7, "A-product closed form, Q-product identity, consecutive submatrices", 30,
       checks::structural_identities},
      {8, "Smith normal form on 1000 random integer matrices", 30, [] { return checks::snf_properties(); }},
      {9, "j <= 50 with 2 present and absent in Ass, from the Smith pipeline", 5, checks::ass_witnesses},
  };
}

inline std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(run_criterion(c));
  return out;
}

}  // namespace lcass::acceptance
