#ifndef HOPFCYC_CLI_HPP
#define HOPFCYC_CLI_HPP

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "hopfcyc/coinvariants.hpp"
#include "hopfcyc/crossed.hpp"
#include "hopfcyc/cylindrical.hpp"
#include "hopfcyc/hopf_homology.hpp"
#include "hopfcyc/io.hpp"
#include "hopfcyc/mixed.hpp"
#include "hopfcyc/spectral.hpp"
#include "hopfcyc/transforms.hpp"

namespace hopfcyc::cli {

inline const std::vector<std::string>& verify_targets()
{
  static const std::vector<std::string> t{"hopf", "comodule-algebra", "module-coalgebra", "cylindrical", "cocylindrical", "iso", "transforms"};
  return t;
}
inline const std::vector<std::string>& compute_targets()
{
  static const std::vector<std::string> t{"hh", "hc", "hopf-homology", "comodule-cohomology", "ss-pages", "coinvariants"};
  return t;
}
inline const std::vector<std::string>& compare_targets()
{
  static const std::vector<std::string> t{"diagonal-vs-direct", "ez-hochschild", "collapse-algebra", "collapse-coalgebra"};
  return t;
}

struct Invocation {
  std::string command;
  std::string target;
  std::string input;
  std::optional<std::size_t> pmax, qmax, nmax, rmax;
};

struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<json> rows;
};

struct Outcome {
  int exit_code = 0;
  json report;
  std::vector<Table> tables;
};

enum Exit { Success = 0, CheckFailure = 1, InputError = 2 };

inline bool is_input_error(Errc c)
{
  switch (c) {
  case Errc::ParseError:
  case Errc::MissingBlock:
  case Errc::InvalidField:
  case Errc::NotAGroup:
  case Errc::CharTwo:
  case Errc::DimensionMismatch: return true;
  default: return false;
  }
}

/// Accumulates checks and tables for one invocation.
class Builder {
public:
  void add(const AxiomReport& r, const std::string& prefix = "")
  {
    for (auto c : r.checks) {
      c.name = prefix + c.name;
      checks_.checks.push_back(std::move(c));
    }
  }
  void check(const std::string& name, bool ok, const std::string& detail = "")
  {
    checks_.checks.push_back({name, ok, ok ? "" : detail});
  }
  Table& table(const std::string& name, std::vector<std::string> columns)
  {
    tables_.push_back({name, std::move(columns), {}});
    return tables_.back();
  }
  json& info() { return info_; }

  const AxiomReport& checks() const { return checks_; }
  std::vector<Table> tables() const { return {tables_.begin(), tables_.end()}; }

private:
  AxiomReport checks_;
  std::deque<Table> tables_; // references handed out by table() stay valid
  json info_ = json::object();
};

struct Params {
  std::size_t P, Q, N, rmax;
};

namespace detail {

inline json dims_row(const std::string& side, std::size_t n, std::size_t dim) { return json::array({side, n, dim}); }

template <class K> std::vector<std::pair<std::string, CyclicObject<K>>> diagonals(const Document<K>& d)
{
  std::vector<std::pair<std::string, CyclicObject<K>>> out;
  if (d.algebra) out.emplace_back("algebra", a_natural_h(*d.algebra).diagonal());
  if (d.coalgebra) out.emplace_back("coalgebra", c_natural_h(*d.coalgebra).diagonal());
  if (out.empty()) throw Error(Errc::MissingBlock, "this target needs an \"algebra\" or \"coalgebra\" block");
  return out;
}

template <class K> std::vector<std::pair<std::string, CyclicObject<K>>> crossed_products(const Document<K>& d)
{
  std::vector<std::pair<std::string, CyclicObject<K>>> out;
  if (d.algebra) out.emplace_back("algebra", cyclic_module_of_algebra(crossed_product_algebra(*d.algebra)));
  if (d.coalgebra) out.emplace_back("coalgebra", cocyclic_module_of_coalgebra(crossed_product_coalgebra(*d.coalgebra)));
  return out;
}

template <class K> json coefficients(const SparseMatrix<K>& m, const std::vector<std::string>& basis)
{
  json out = json::array();
  for (auto [r, c, v] : m.triplets()) out.push_back(json::array({basis[m.cols() == 1 ? r : c], format_scalar(v)}));
  return out;
}

template <class K> void pages_table(Builder& b, const std::string& side, const SSResult& ss)
{
  auto& t = b.table("pages", {"side", "page", "degree", "filtration", "hopf_degree", "a_degree", "dim", "d_rank"});
  auto emit = [&](const SSPage& pg, const json& label) {
    for (const auto& e : pg.entries)
      t.rows.push_back(json::array({side, label, std::abs(e.degree), e.s, e.p, e.q, e.dim, e.rank_out}));
  };
  for (const auto& pg : ss.pages) emit(pg, pg.r);
  emit(ss.infinity, "inf");
  auto& h = b.table("total_homology", {"side", "degree", "dim"});
  for (const auto& [n, dim] : ss.homology) h.rows.push_back(json::array({side, std::abs(n), dim}));
  b.check(side + ": E^∞ totals = dim H(Tot)", ss.converged, "mismatch in some degree");
  b.check(side + ": page dims weakly decrease", ss.monotone, "a page grew");
}

/// E¹ entries off the Hopf-degree-0 line, as "(p,q)=dim" strings.
inline std::vector<std::string> off_axis(const SSPage& e1)
{
  std::vector<std::string> out;
  for (const auto& e : e1.entries)
    if (e.p > 0 && e.dim > 0) out.push_back("(" + std::to_string(e.p) + "," + std::to_string(e.q) + ")=" + std::to_string(e.dim));
  return out;
}

inline std::string join(const std::vector<std::string>& v)
{
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : " ") + x;
  return s;
}

} // namespace detail

// ---------------------------------------------------------------------------
// verify

template <class K> void verify(Builder& b, const Document<K>& d, const std::string& target, const Params& p)
{
  if (target == "hopf") b.add(check_hopf(d.hopf));
  else if (target == "comodule-algebra") b.add(check_comodule_algebra(d.need_algebra()));
  else if (target == "module-coalgebra") b.add(check_module_coalgebra(d.need_coalgebra()));
  else if (target == "cylindrical") b.add(cylindrical_suite(a_natural_h(d.need_algebra()), p.P, p.Q));
  else if (target == "cocylindrical") b.add(cylindrical_suite(c_natural_h(d.need_coalgebra()), p.P, p.Q));
  else if (target == "iso") {
    if (!d.algebra && !d.coalgebra) throw Error(Errc::MissingBlock, "iso needs an \"algebra\" or \"coalgebra\" block");
    if (d.algebra) {
      const auto& A = *d.algebra;
      b.add(iso_suite<K>(
                cyclic_module_of_algebra(crossed_product_algebra(A)), a_natural_h(A).diagonal(),
                [&](std::size_t n) { return phi_algebra(A, n); }, [&](std::size_t n) { return psi_algebra(A, n); }, p.N),
            "algebra: ");
    }
    if (d.coalgebra) {
      const auto& C = *d.coalgebra;
      b.add(iso_suite<K>(
                cocyclic_module_of_coalgebra(crossed_product_coalgebra(C)), c_natural_h(C).diagonal(),
                [&](std::size_t n) { return phi_coalgebra(C, n); }, [&](std::size_t n) { return psi_coalgebra(C, n); }, p.N),
            "coalgebra: ");
    }
  } else if (target == "transforms") {
    if (!d.algebra && !d.coalgebra) throw Error(Errc::MissingBlock, "transforms needs an \"algebra\" or \"coalgebra\" block");
    if (d.algebra) b.add(transform_suite_algebra(*d.algebra, p.P, p.Q), "algebra: ");
    if (d.coalgebra) b.add(transform_suite_coalgebra(*d.coalgebra, p.P, p.Q), "coalgebra: ");
  }
}

// ---------------------------------------------------------------------------
// compute

template <class K> void compute(Builder& b, const Document<K>& d, const std::string& target, const Params& p)
{
  if (target == "hh" || target == "hc") {
    const bool cyc = target == "hc";
    auto& t = b.table(cyc ? "cyclic" : "hochschild", {"side", "n", "dim"});
    for (const auto& [side, X] : detail::diagonals(d)) {
      auto mc = mixed_complex(X, p.N + 1);
      b.add(mixed_identities(mc), side + ": ");
      auto dims = cyc ? cyclic_dims(mc, p.N) : hochschild_dims(mc, p.N);
      for (std::size_t n = 0; n < dims.size(); ++n) t.rows.push_back(detail::dims_row(side, n, dims[n]));
    }
  } else if (target == "hopf-homology") {
    const auto M = d.module ? *d.module : trivial_module(d.hopf);
    b.info()["module"] = d.module ? "file" : "trivial";
    auto dims = hopf_module_homology(M, p.N);
    auto& t = b.table("hopf_homology", {"q", "dim"});
    for (std::size_t q = 0; q < dims.size(); ++q) t.rows.push_back(json::array({q, dims[q]}));
  } else if (target == "comodule-cohomology") {
    const auto M = d.comodule ? *d.comodule : trivial_comodule(d.hopf);
    b.info()["comodule"] = d.comodule ? "file" : "trivial";
    auto dims = hopf_comodule_cohomology(M, p.N);
    auto& t = b.table("comodule_cohomology", {"p", "dim"});
    for (std::size_t q = 0; q < dims.size(); ++q) t.rows.push_back(json::array({q, dims[q]}));
  } else if (target == "ss-pages") {
    if (!d.algebra && !d.coalgebra) throw Error(Errc::MissingBlock, "ss-pages needs an \"algebra\" or \"coalgebra\" block");
    if (d.algebra) {
      auto ss = spectral_sequence(total_complex(a_natural_h(*d.algebra), p.N), static_cast<int>(p.rmax));
      detail::pages_table<K>(b, "algebra", ss);
      b.add(e0_crosscheck_algebra(*d.algebra, p.N), "algebra: ");
    }
    if (d.coalgebra) {
      auto ss = spectral_sequence(total_complex(c_natural_h(*d.coalgebra), p.N), static_cast<int>(p.rmax));
      detail::pages_table<K>(b, "coalgebra", ss);
      b.add(e0_crosscheck_coalgebra(*d.coalgebra, p.N), "coalgebra: ");
    }
  } else if (target == "coinvariants") {
    if (!d.algebra && !d.coalgebra) throw Error(Errc::MissingBlock, "coinvariants needs an \"algebra\" or \"coalgebra\" block");
    auto& dims = b.table("coinvariant_dims", {"side", "n", "dim"});
    auto& hc = b.table("cyclic", {"side", "n", "dim"});
    auto run = [&](const std::string& side, const CyclicObject<K>& X) {
      b.add(cyclic_suite(X, p.N + 1), side + ": ");
      for (std::size_t n = 0; n <= p.N; ++n) dims.rows.push_back(detail::dims_row(side, n, X.dim(n)));
      auto v = cyclic_dims(mixed_complex(X, p.N + 1), p.N);
      for (std::size_t n = 0; n < v.size(); ++n) hc.rows.push_back(detail::dims_row(side, n, v[n]));
    };
    if (d.algebra) run("algebra", coinvariants_algebra(*d.algebra, p.N + 1).object);
    if (d.coalgebra) run("coalgebra", coinvariants_coalgebra(*d.coalgebra, p.N + 1).object);
  }
}

// ---------------------------------------------------------------------------
// compare

template <class K> void compare(Builder& b, const Document<K>& d, const std::string& target, const Params& p)
{
  if (target == "diagonal-vs-direct") {
    auto& t = b.table("comparison", {"side", "invariant", "n", "diagonal", "direct", "equal"});
    auto direct = detail::crossed_products(d);
    auto diag = detail::diagonals(d);
    for (std::size_t k = 0; k < diag.size(); ++k) {
      const auto& side = diag[k].first;
      auto m1 = mixed_complex(diag[k].second, p.N + 1);
      auto m2 = mixed_complex(direct[k].second, p.N + 1);
      for (const std::string inv : {"HH", "HC"}) {
        auto a = inv == "HH" ? hochschild_dims(m1, p.N) : cyclic_dims(m1, p.N);
        auto c = inv == "HH" ? hochschild_dims(m2, p.N) : cyclic_dims(m2, p.N);
        std::string bad;
        for (std::size_t n = 0; n <= p.N; ++n) {
          t.rows.push_back(json::array({side, inv, n, a[n], c[n], a[n] == c[n]}));
          if (a[n] != c[n] && bad.empty()) bad = "n=" + std::to_string(n);
        }
        b.check(side + ": " + inv + " of diagonal = " + inv + " of crossed product", bad.empty(), bad);
      }
    }
  } else if (target == "ez-hochschild") {
    auto& t = b.table("comparison", {"side", "n", "total", "diagonal", "equal"});
    auto run = [&](const std::string& side, const BiObject<K>& X) {
      std::string bad;
      for (const auto& r : ez_compare_hochschild(X, p.N)) {
        t.rows.push_back(json::array({side, r.n, r.total, r.diagonal, r.total == r.diagonal}));
        if (r.total != r.diagonal && bad.empty()) bad = "n=" + std::to_string(r.n);
      }
      b.check(side + ": dim H(Tot) = dim HH(diagonal)", bad.empty(), bad);
    };
    if (!d.algebra && !d.coalgebra) throw Error(Errc::MissingBlock, "ez-hochschild needs an \"algebra\" or \"coalgebra\" block");
    if (d.algebra) run("algebra", a_natural_h(*d.algebra));
    if (d.coalgebra) run("coalgebra", c_natural_h(*d.coalgebra));
  } else if (target == "collapse-algebra" || target == "collapse-coalgebra") {
    const bool alg = target == "collapse-algebra";
    const std::size_t nmax = std::min<std::size_t>(p.N, 2);
    // witness
    auto& w = b.table("integral", {"basis", "coefficient"});
    std::optional<SparseMatrix<K>> witness;
    const std::string wname = alg ? "right integral t with ε(t) = 1" : "left integral x in H* with x(1) = 1";
    try {
      witness = alg ? find_right_integral(d.hopf) : find_dual_left_integral(d.hopf);
      for (auto& row : detail::coefficients(*witness, d.hopf.basis)) w.rows.push_back(row);
      b.check(wname, true);
    } catch (const Error& e) {
      if (e.code() != Errc::NotSemisimple && e.code() != Errc::NotCosemisimple) throw;
      b.check(wname, false, e.what());
    }
    // homotopy on every first-column (co)module in the window
    if (witness)
      for (std::size_t q = 0; q <= p.Q; ++q) {
        const std::string at = "q=" + std::to_string(q) + ": ";
        if (alg) b.add(semisimple_homotopy_check(first_column_module(d.need_algebra(), q), *witness, p.P), at);
        else b.add(cosemisimple_homotopy_check(first_column_comodule(d.need_coalgebra(), q), *witness, p.P), at);
      }
    // E¹ off the Hopf-degree-0 line
    const auto X = alg ? a_natural_h(d.need_algebra()) : c_natural_h(d.need_coalgebra());
    auto ss = spectral_sequence(total_complex(X, p.N), 1);
    auto& e1 = b.table("e1", {"degree", "hopf_degree", "a_degree", "dim"});
    for (const auto& e : ss.pages[1].entries) e1.rows.push_back(json::array({std::abs(e.degree), e.p, e.q, e.dim}));
    auto off = detail::off_axis(ss.pages[1]);
    b.check("E¹ vanishes in positive Hopf degree", off.empty(), "nonzero at " + detail::join(off));
    // HC of the crossed product against HC of the (co)invariants
    CyclicObject<K> direct = alg ? cyclic_module_of_algebra(crossed_product_algebra(d.need_algebra()))
                                 : cocyclic_module_of_coalgebra(crossed_product_coalgebra(d.need_coalgebra()));
    CyclicObject<K> inv = alg ? coinvariants_algebra(d.need_algebra(), nmax + 1).object : coinvariants_coalgebra(d.need_coalgebra(), nmax + 1).object;
    auto hc1 = cyclic_dims(mixed_complex(direct, nmax + 1), nmax);
    auto hc2 = cyclic_dims(mixed_complex(inv, nmax + 1), nmax);
    auto& t = b.table("cyclic", {"n", "crossed_product", "coinvariants", "equal"});
    std::string bad;
    for (std::size_t n = 0; n <= nmax; ++n) {
      t.rows.push_back(json::array({n, hc1[n], hc2[n], hc1[n] == hc2[n]}));
      if (hc1[n] != hc2[n] && bad.empty()) bad = "n=" + std::to_string(n);
    }
    b.check("HC of crossed product = HC of coinvariants", bad.empty(), bad);
  }
}

// ---------------------------------------------------------------------------

inline json tables_json(const std::vector<Table>& tables)
{
  json out = json::object();
  for (const auto& t : tables) out[t.name] = json{{"columns", t.columns}, {"rows", t.rows}};
  return out;
}

inline json checks_json(const AxiomReport& r)
{
  json out = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) e["detail"] = c.detail;
    if (c.informational) e["informational"] = true;
    out.push_back(std::move(e));
  }
  return out;
}

/// Runs one command; never throws. The report contains no timings so that it is byte-stable.
inline Outcome run(const Invocation& inv)
{
  Outcome out;
  json& r = out.report;
  r["command"] = inv.command;
  r["target"] = inv.target;
  r["input"] = inv.input;
  auto fail = [&](int code, Errc e, const std::string& msg) {
    out.exit_code = code;
    r["status"] = code == InputError ? "input-error" : "error";
    r["error"] = json{{"code", errc_name(e)}, {"message", msg}};
  };
  const auto* targets = inv.command == "verify"    ? &verify_targets()
                        : inv.command == "compute" ? &compute_targets()
                        : inv.command == "compare" ? &compare_targets()
                                                   : nullptr;
  if (!targets || std::find(targets->begin(), targets->end(), inv.target) == targets->end()) {
    fail(InputError, Errc::ParseError, "unknown command or target '" + inv.command + " " + inv.target + "'");
    return out;
  }
  try {
    json doc = load_json(inv.input);
    with_document(doc, [&](const auto& d) {
      Params p{inv.pmax.value_or(d.options.P), inv.qmax.value_or(d.options.Q), inv.nmax.value_or(d.options.N),
               inv.rmax.value_or(d.options.rmax)};
      r["field"] = d.field.spec().name();
      r["parameters"] = json{{"pmax", p.P}, {"qmax", p.Q}, {"nmax", p.N}, {"rmax", p.rmax}};
      Builder b;
      if (inv.command == "verify") verify(b, d, inv.target, p);
      else if (inv.command == "compute") compute(b, d, inv.target, p);
      else compare(b, d, inv.target, p);
      const auto* first = b.checks().first_failure();
      out.exit_code = first ? CheckFailure : Success;
      r["status"] = first ? "fail" : "pass";
      r["first_failure"] = first ? json{{"name", first->name}, {"detail", first->detail}} : json(nullptr);
      if (!b.info().empty()) r["info"] = b.info();
      r["checks"] = checks_json(b.checks());
      r["tables"] = tables_json(b.tables());
      out.tables = b.tables();
    });
  } catch (const Error& e) {
    fail(is_input_error(e.code()) ? InputError : CheckFailure, e.code(), e.what());
  }
  return out;
}

inline std::string render(const json& report) { return pretty(report); }

inline std::string csv_cell(const json& v)
{
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
  }
  return v.dump();
}

inline std::string to_csv(const Table& t)
{
  std::string s;
  for (std::size_t k = 0; k < t.columns.size(); ++k) s += (k ? "," : "") + t.columns[k];
  s += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + csv_cell(row[k]);
    s += "\n";
  }
  return s;
}

} // namespace hopfcyc::cli

#endif // HOPFCYC_CLI_HPP
