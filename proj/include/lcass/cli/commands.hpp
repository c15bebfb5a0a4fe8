#pragma once

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <fstream>
#include <future>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lcass/acceptance.hpp"
#include "lcass/errors.hpp"
#include "lcass/freemod/matrix_json.hpp"
#include "lcass/groebner/groebner.hpp"
#include "lcass/intlat/int_matrix.hpp"
#include "lcass/singh/ass.hpp"
#include "lcass/singh/binomial.hpp"
#include "lcass/singh/matrices.hpp"

namespace lcass::cli {

enum ExitCode : int { kOk = 0, kVerificationFailure = 1, kUsage = 2, kResourceCap = 3 };

class UsageError : public Error {
 public:
  using Error::Error;
};

class CapError : public Error {
 public:
  using Error::Error;
};

/// Largest d each method may be asked for; set through LCASS_CAPS, e.g.
/// "snf=12,groebner=6".
struct Caps {
  std::int64_t snf = 12;
  std::int64_t groebner = 6;
};

inline std::int64_t parse_int(std::string_view s, const char* what) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) {
    throw UsageError(std::string(what) + ": not an integer: '" + std::string(s) + "'");
  }
  return v;
}

inline Caps parse_caps(const char* env) {
  Caps caps;
  if (env == nullptr || *env == '\0') return caps;
  std::stringstream ss(env);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("LCASS_CAPS: expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq);
    const std::int64_t value = parse_int(std::string_view(item).substr(eq + 1), "LCASS_CAPS");
    if (key == "snf") {
      caps.snf = value;
    } else if (key == "groebner") {
      caps.groebner = value;
    } else {
      throw UsageError("LCASS_CAPS: unknown key '" + key + "'");
    }
  }
  return caps;
}

/// "5" or "3..8"; both ends inclusive.
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool single() const { return lo == hi; }
};

inline Range parse_range(std::string_view s) {
  const auto dots = s.find("..");
  Range r;
  if (dots == std::string_view::npos) {
    r.lo = r.hi = parse_int(s, "range");
  } else {
    r.lo = parse_int(s.substr(0, dots), "range");
    r.hi = parse_int(s.substr(dots + 2), "range");
  }
  if (r.lo > r.hi) throw UsageError("empty range '" + std::string(s) + "'");
  return r;
}

enum class Format { Json, Csv, Text };

inline Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  if (s == "text") return Format::Text;
  throw UsageError("unknown format '" + s + "'");
}

/// RFC 4180 field quoting.
inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\r\n";
}

inline std::string set_text(const std::optional<PrimeSet>& s) { return s ? to_string(*s) : ""; }

inline std::string bool_text(const std::optional<bool>& b) {
  if (!b) return "";
  return *b ? "true" : "false";
}

struct AssConfig {
  std::string d;
  std::string method = "all";
  int jobs = 1;
};

inline singh::AssMethods parse_methods(const std::string& m) {
  if (m == "closed") return {true, false, false};
  if (m == "snf") return {false, true, false};
  if (m == "groebner") return {false, false, true};
  if (m == "all") return {true, true, true};
  throw UsageError("unknown method '" + m + "'");
}

inline std::vector<singh::AssReport> run_ass(const AssConfig& cfg, const Caps& caps) {
  const Range range = parse_range(cfg.d);
  if (range.lo < 3) throw UsageError("ass: d must be at least 3");
  const auto methods = parse_methods(cfg.method);
  if (methods.snf && range.hi > caps.snf) {
    throw CapError("ass: d=" + std::to_string(range.hi) + " exceeds the snf cap " + std::to_string(caps.snf));
  }
  if (methods.groebner && range.hi > caps.groebner) {
    throw CapError("ass: d=" + std::to_string(range.hi) + " exceeds the groebner cap " +
                   std::to_string(caps.groebner));
  }
  if (cfg.jobs < 1) throw UsageError("ass: --jobs must be positive");
  std::vector<singh::AssReport> out;
  const auto jobs = static_cast<std::int64_t>(cfg.jobs);
  for (std::int64_t start = range.lo; start <= range.hi; start += jobs) {
    std::vector<std::future<singh::AssReport>> batch;
    for (std::int64_t d = start; d <= std::min(range.hi, start + jobs - 1); ++d) {
      batch.push_back(std::async(jobs > 1 ? std::launch::async : std::launch::deferred,
                                 [d, methods] { return singh::compute_ass_report(d, methods); }));
    }
    for (auto& f : batch) out.push_back(f.get());
  }
  return out;
}

inline void write_ass(std::ostream& os, const std::vector<singh::AssReport>& reports, Format fmt, bool single) {
  switch (fmt) {
    case Format::Json: {
      if (single) {
        os << singh::report_to_json(reports.front()).dump(2) << "\n";
      } else {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports) arr.push_back(singh::report_to_json(r));
        os << arr.dump(2) << "\n";
      }
      break;
    }
    case Format::Csv:
      os << csv_row({"d", "closed_form", "graded_snf", "groebner_crosscheck", "agreement", "base_ideal"});
      for (const auto& r : reports) {
        os << csv_row({std::to_string(r.d), set_text(r.closed_form), set_text(r.graded_snf),
                       bool_text(r.groebner_crosscheck), r.agreement ? "true" : "false", singh::kBaseIdeal});
      }
      break;
    case Format::Text:
      for (const auto& r : reports) {
        const PrimeSet& primes = r.closed_form ? *r.closed_form : r.graded_snf ? *r.graded_snf : PrimeSet{};
        const auto ideals = singh::associated_prime_ideals(primes);
        os << "d=" << r.d << "  Ass = {";
        for (std::size_t i = 0; i < ideals.size(); ++i) os << (i ? ", " : "") << ideals[i];
        os << "}";
        if (r.closed_form) os << "  closed=" << to_string(*r.closed_form);
        if (r.graded_snf) os << "  snf=" << to_string(*r.graded_snf);
        if (r.groebner_crosscheck) os << "  groebner=" << bool_text(r.groebner_crosscheck);
        os << "  agreement=" << (r.agreement ? "true" : "false") << "\n";
      }
      break;
  }
}

inline void write_pi(std::ostream& os, const Range& range, Format fmt) {
  if (range.lo < 1) throw UsageError("pi: n must be at least 1");
  switch (fmt) {
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (std::int64_t n = range.lo; n <= range.hi; ++n) {
        const auto pi = singh::pi_set(n);
        arr.push_back({{"n", n}, {"primes", singh::primes_to_json(pi)}, {"count", pi.size()}});
      }
      os << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << csv_row({"n", "primes", "count"});
      for (std::int64_t n = range.lo; n <= range.hi; ++n) {
        const auto pi = singh::pi_set(n);
        os << csv_row({std::to_string(n), to_string(pi), std::to_string(pi.size())});
      }
      break;
    case Format::Text:
      for (std::int64_t n = range.lo; n <= range.hi; ++n) {
        const auto pi = singh::pi_set(n);
        os << n << "  " << to_string(pi) << "  " << pi.size() << "\n";
      }
      break;
  }
}

struct DetConfig {
  std::int64_t k = 0;
  std::int64_t i = 0;
  std::int64_t s = 0;
};

/// Returns whether the two values match.
inline bool write_det(std::ostream& os, const DetConfig& c, Format fmt) {
  if (c.k < 1 || c.i < 0 || c.s < 1) throw UsageError("det: need k >= 1, i >= 0, s >= 1");
  const Rational formula = singh::van_zeipel_det(c.k, c.i, c.s);
  const Integer direct = singh::det_direct(singh::omega(c.k, c.i, c.s));
  const bool match = formula == Rational(direct);
  switch (fmt) {
    case Format::Json:
      os << nlohmann::json{{"k", c.k},
                           {"i", c.i},
                           {"s", c.s},
                           {"formula", to_string(formula)},
                           {"direct", to_string(direct)},
                           {"match", match}}
                .dump(2)
         << "\n";
      break;
    case Format::Csv:
      os << csv_row({"k", "i", "s", "formula", "direct", "match"});
      os << csv_row({std::to_string(c.k), std::to_string(c.i), std::to_string(c.s), to_string(formula),
                     to_string(direct), match ? "true" : "false"});
      break;
    case Format::Text:
      os << to_string(formula) << ", " << to_string(direct) << ", " << (match ? "match" : "MISMATCH") << "\n";
      break;
  }
  return match;
}

struct MatrixConfig {
  std::string which;
  std::optional<std::int64_t> d;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> r;
  std::optional<std::int64_t> k;
};

inline std::vector<std::vector<std::string>> cells_of(const PolyMatrix<Integer>& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    for (std::size_t j = 1; j <= m.cols(); ++j) out[i - 1].push_back(to_string(m(i, j)));
  }
  return out;
}

inline void write_cells(std::ostream& os, const std::vector<std::vector<std::string>>& cells,
                        const nlohmann::json& as_json, Format fmt) {
  switch (fmt) {
    case Format::Json:
      os << as_json.dump(2) << "\n";
      break;
    case Format::Csv:
      for (const auto& row : cells) os << csv_row(row);
      break;
    case Format::Text:
      for (const auto& row : cells) {
        os << "[";
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
        os << "]\n";
      }
      break;
  }
}

inline void write_matrix(std::ostream& os, const MatrixConfig& c, Format fmt) {
  auto need = [&](const std::optional<std::int64_t>& v, const char* flag, std::int64_t min) {
    if (!v) throw UsageError("matrix --which " + c.which + " needs " + flag);
    if (*v < min) throw UsageError(std::string(flag) + " must be at least " + std::to_string(min));
    return *v;
  };
  if (c.which == "Qtilde") {
    const auto m = singh::q_tilde(static_cast<std::size_t>(need(c.r, "--r", 1)),
                                  static_cast<std::size_t>(need(c.k, "--k", 1)));
    std::vector<std::vector<std::string>> cells(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) cells[i].push_back(to_string(m(i, j)));
    }
    write_cells(os, cells, int_matrix_to_json(m), fmt);
    return;
  }
  auto build = [&]() -> PolyMatrix<Integer> {
    if (c.which == "T") return singh::build_T<Integer>(need(c.d, "--d", 3));
    if (c.which == "Tprime") return singh::build_T_prime<Integer>(need(c.d, "--d", 3)).matrix;
    if (c.which == "H") return singh::build_H<Integer>(need(c.d, "--d", 3));
    if (c.which == "A") return build_A<Integer>(static_cast<std::size_t>(need(c.n, "--n", 1)));
    if (c.which == "Q") {
      return singh::build_Q<Integer>(static_cast<std::size_t>(need(c.r, "--r", 1)),
                                     static_cast<std::size_t>(need(c.k, "--k", 1)));
    }
    throw UsageError("matrix: unknown --which '" + c.which + "' (T, Tprime, H, A, Q, Qtilde)");
  };
  const PolyMatrix<Integer> m = build();
  write_cells(os, cells_of(m), matrix_to_json(m), fmt);
}

struct GroebnerConfig {
  std::string input;
  std::string domain = "z";
  std::string ambient;
  bool no_interreduce = false;
};

struct Ambient {
  bool rational = false;
  bool x_free = false;
  std::string name;
};

inline Ambient parse_ambient(const std::string& s) {
  std::string t;
  for (char ch : s) {
    if (ch != ' ') t += ch;
  }
  Ambient a;
  std::string vars;
  if (t.rfind("ZZ", 0) == 0 || t.rfind("QQ", 0) == 0) {
    a.rational = t[0] == 'Q';
    vars = t.substr(2);
  } else if (t.rfind("Z", 0) == 0 || t.rfind("Q", 0) == 0) {
    a.rational = t[0] == 'Q';
    vars = t.substr(1);
  } else {
    throw UsageError("unknown ambient ring '" + s + "'");
  }
  if (vars == "[X,Y,Z]") {
    a.x_free = false;
  } else if (vars == "[Y,Z]") {
    a.x_free = true;
  } else {
    throw UsageError("ambient ring must be over [X,Y,Z] or [Y,Z], got '" + s + "'");
  }
  a.name = std::string(a.rational ? "Q" : "Z") + vars;
  return a;
}

template <Coefficient C>
nlohmann::json groebner_json(const nlohmann::json& input, const Ambient& amb, bool interreduce) {
  const auto m = matrix_from_json<C>(input);
  if (amb.x_free && m.involves_x()) throw UsageError("input involves X but the ambient ring is " + amb.name);
  std::vector<ModuleVector<C>> gens;
  for (auto& c : m.columns()) {
    if (!c.is_zero()) gens.push_back(std::move(c));
  }
  if (gens.empty()) throw UsageError("groebner: all input columns are zero");
  const auto gb = buchberger(gens, BuchbergerOptions{.interreduce = interreduce});
  if (!satisfies_buchberger_criterion<C>(gb.generators())) {
    throw VerificationError("groebner: output fails the pair criterion");
  }
  return {{"domain", amb.rational ? "Q" : "Z"},
          {"ambient", amb.name},
          {"size", gb.size()},
          {"pairs_processed", gb.pairs_processed()},
          {"basis", matrix_to_json(PolyMatrix<C>::from_columns(m.rows(), gb.generators()))}};
}

inline void write_groebner(std::ostream& os, const GroebnerConfig& c, std::istream& in, Format fmt) {
  if (c.domain != "z" && c.domain != "q") throw UsageError("--domain must be z or q");
  const bool rational = c.domain == "q";
  const Ambient amb = parse_ambient(c.ambient.empty() ? (rational ? "Q[X,Y,Z]" : "Z[X,Y,Z]") : c.ambient);
  if (amb.rational != rational) throw UsageError("--domain " + c.domain + " does not match ambient " + amb.name);
  nlohmann::json input;
  try {
    if (c.input == "-") {
      input = nlohmann::json::parse(in);
    } else {
      std::ifstream f(c.input);
      if (!f) throw UsageError("cannot open '" + c.input + "'");
      input = nlohmann::json::parse(f);
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("groebner input: ") + e.what());
  }
  const auto result = rational ? groebner_json<Rational>(input, amb, !c.no_interreduce)
                               : groebner_json<Integer>(input, amb, !c.no_interreduce);
  if (fmt == Format::Json) {
    os << result.dump(2) << "\n";
    return;
  }
  const auto& basis = result["basis"];
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : basis["entries"]) cells.push_back(row.get<std::vector<std::string>>());
  write_cells(os, cells, basis, fmt);
}

/// Returns true when every criterion passed.
inline bool write_selftest(std::ostream& os, Format fmt) {
  const auto results = acceptance::run_all();
  bool ok = std::all_of(results.begin(), results.end(), [](const auto& r) { return r.passed; });
  switch (fmt) {
    case Format::Json: {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& r : results) {
        arr.push_back({{"id", r.id},
                       {"name", r.name},
                       {"passed", r.passed},
                       {"seconds", r.seconds},
                       {"budget_seconds", r.budget_seconds},
                       {"detail", r.detail}});
      }
      os << arr.dump(2) << "\n";
      break;
    }
    case Format::Csv:
      os << csv_row({"id", "name", "passed", "detail"});
      for (const auto& r : results) {
        os << csv_row({std::to_string(r.id), r.name, r.passed ? "true" : "false", r.detail});
      }
      break;
    case Format::Text:
      for (const auto& r : results) os << r.line() << "\n";
      break;
  }
  return ok;
}

/// Entry point shared by the binary and the tests. `caps_env` is the value of
/// LCASS_CAPS (may be null).
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err, std::istream& in,
               const char* caps_env) {
  CLI::App app{"Torsion primes in degree -d of H^3 for Singh's hypersurface UX + VY + WZ = 0"};
  app.name("lcass");
  app.require_subcommand(1);

  std::string format;
  std::string output;
  std::vector<CLI::App*> subs;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("-o,--output", output, "write to this file instead of stdout");
    sub->add_flag("-v,--verbose", "timing on stderr");
    subs.push_back(sub);
  };

  AssConfig ass_cfg;
  auto* ass = app.add_subcommand("ass", "associated primes of H^3 in degree -d");
  ass->add_option("--d", ass_cfg.d, "d or a range a..b")->required();
  ass->add_option("--method", ass_cfg.method, "closed | snf | groebner | all")
      ->check(CLI::IsMember({"closed", "snf", "groebner", "all"}));
  ass->add_option("-j,--jobs", ass_cfg.jobs, "evaluate this many d at once");
  add_common(ass);

  std::string pi_arg;
  auto* pi = app.add_subcommand("pi", "primes dividing some C(n, i)");
  pi->add_option("n", pi_arg, "n or a range a..b")->required();
  add_common(pi);

  DetConfig det_cfg;
  auto* det = app.add_subcommand("det", "banded binomial determinant, product formula vs direct");
  det->add_option("--k", det_cfg.k)->required();
  det->add_option("--i", det_cfg.i)->required();
  det->add_option("--s", det_cfg.s)->required();
  add_common(det);

  MatrixConfig mat_cfg;
  auto* mat = app.add_subcommand("matrix", "dump T, Tprime, H, A, Q or Qtilde");
  mat->add_option("--which", mat_cfg.which)->required();
  mat->add_option("--d", mat_cfg.d);
  mat->add_option("--n", mat_cfg.n);
  mat->add_option("--r", mat_cfg.r);
  mat->add_option("--k", mat_cfg.k);
  add_common(mat);

  GroebnerConfig gb_cfg;
  auto* gb = app.add_subcommand("groebner", "Groebner basis of the columns of a matrix");
  gb->add_option("--input", gb_cfg.input, "matrix JSON file, - for stdin")->required();
  gb->add_option("--domain", gb_cfg.domain, "z | q");
  gb->add_option("--ambient", gb_cfg.ambient, "Z[X,Y,Z], Q[X,Y,Z], Z[Y,Z] or Q[Y,Z]");
  gb->add_flag("--no-interreduce", gb_cfg.no_interreduce);
  add_common(gb);

  auto* selftest = app.add_subcommand("selftest", "run the acceptance suite");
  add_common(selftest);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  std::size_t verbosity = 0;
  for (auto* sub : subs) {
    if (sub->parsed()) verbosity = sub->count("--verbose");
  }
  if (format.empty()) format = selftest->parsed() ? "text" : "json";

  try {
    const Format fmt = parse_format(format);
    std::ofstream file;
    if (!output.empty()) {
      file.open(output);
      if (!file) throw UsageError("cannot write '" + output + "'");
    }
    std::ostream& os = output.empty() ? out : file;
    const auto t0 = std::chrono::steady_clock::now();
    int code = kOk;
    if (ass->parsed()) {
      const Caps caps = parse_caps(caps_env);
      const auto reports = run_ass(ass_cfg, caps);
      write_ass(os, reports, fmt, parse_range(ass_cfg.d).single());
      for (const auto& r : reports) {
        if (!r.agreement) code = kVerificationFailure;
      }
    } else if (pi->parsed()) {
      write_pi(os, parse_range(pi_arg), fmt);
    } else if (det->parsed()) {
      if (!write_det(os, det_cfg, fmt)) code = kVerificationFailure;
    } else if (mat->parsed()) {
      write_matrix(os, mat_cfg, fmt);
    } else if (gb->parsed()) {
      write_groebner(os, gb_cfg, in, fmt);
    } else if (selftest->parsed()) {
      if (!write_selftest(os, fmt)) code = kVerificationFailure;
    }
    if (verbosity > 0) {
      err << "elapsed " << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count()
          << " s\n";
    }
    return code;
  } catch (const CapError& e) {
    err << "lcass: " << e.what() << "\n";
    return kResourceCap;
  } catch (const VerificationError& e) {
    err << "lcass: verification failure: " << e.what() << "\n";
    return kVerificationFailure;
  } catch (const Error& e) {
    err << "lcass: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "lcass: " << e.what() << "\n";
    return kVerificationFailure;
  }
}

}  // namespace lcass::cli
