// Acceptance run over the shipped data: one PASS/FAIL line per criterion.

#include <functional>
#include <iostream>
#include <sstream>

#include "hopfcyc/cli.hpp"

using namespace hopfcyc;

namespace {

const std::string data_dir = HOPFCYC_DATA_DIR;

std::string path(const std::string& name) { return data_dir + "/" + name + ".json"; }

/// Every invocation is remembered so criterion 10 can replay it.
std::vector<std::pair<cli::Invocation, std::string>> journal;

cli::Outcome run(const std::string& cmd, const std::string& target, const std::string& file, std::optional<std::size_t> pmax = {},
                 std::optional<std::size_t> qmax = {}, std::optional<std::size_t> nmax = {}, std::optional<std::size_t> rmax = {})
{
  cli::Invocation inv{cmd, target, path(file), pmax, qmax, nmax, rmax};
  auto out = cli::run(inv);
  journal.emplace_back(inv, cli::render(out.report));
  return out;
}

struct Verdict {
  bool ok = true;
  std::ostringstream note;

  void require(bool cond, const std::string& what)
  {
    if (!cond && ok) {
      ok = false;
      note.str("");
      note << what;
    }
  }
};

bool has_check(const json& report, const std::string& name, bool passed)
{
  for (const auto& c : report["checks"])
    if (c["name"] == name) return c["passed"].get<bool>() == passed;
  return false;
}

bool has_check_containing(const json& report, const std::string& part)
{
  for (const auto& c : report["checks"])
    if (c["name"].get<std::string>().find(part) != std::string::npos) return true;
  return false;
}

std::string describe(const cli::Outcome& o)
{
  const auto& r = o.report;
  if (r.contains("error")) return r["error"]["message"].get<std::string>();
  if (r.contains("first_failure") && !r["first_failure"].is_null())
    return r["first_failure"]["name"].get<std::string>() + " (" + r["first_failure"]["detail"].get<std::string>() + ")";
  return "exit " + std::to_string(o.exit_code);
}

std::vector<std::size_t> column(const json& report, const std::string& table, std::size_t col, const std::string& side = "")
{
  std::vector<std::size_t> out;
  for (const auto& row : report["tables"][table]["rows"])
    if (side.empty() || row[0] == side) out.push_back(row[col].get<std::size_t>());
  return out;
}

std::string show(const std::vector<std::size_t>& v)
{
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

// ---------------------------------------------------------------------------

Verdict c1()
{
  Verdict v;
  for (auto f : {"trivial", "kc2_q", "kc3_q", "s3_q", "h4_q"}) {
    auto o = run("verify", "hopf", f);
    v.require(o.exit_code == 0, std::string(f) + ": " + describe(o));
  }
  auto bad = run("verify", "hopf", "h4_q_bad_antipode");
  v.require(bad.exit_code == 1, "corrupted antipode was not rejected");
  if (bad.exit_code == 1) {
    auto name = bad.report["first_failure"]["name"].get<std::string>();
    v.require(name.rfind("antipode", 0) == 0, "corrupted antipode rejected for the wrong reason: " + name);
    if (v.ok) v.note << "5 Hopf algebras pass; corruption caught by '" << name << "'";
  }
  return v;
}

Verdict c2()
{
  Verdict v;
  std::size_t families = 0;
  for (auto f : {"kc2_q", "h4_q", "kc2_f2_trivial"}) {
    auto o = run("verify", "cylindrical", f, 2, 2);
    v.require(o.exit_code == 0, std::string(f) + ": " + describe(o));
    v.require(has_check(o.report, "cylindrical: τ̄^{p+1} τ^{q+1} = id", true), std::string(f) + ": cylindrical condition missing");
    v.require(has_check_containing(o.report, "commute: τ τ̄"), std::string(f) + ": ττ̄ = τ̄τ missing");
    families += o.report["checks"].size();
  }
  for (auto f : {"kc2_q", "h4_q"}) {
    auto o = run("verify", "cocylindrical", f, 1, 1);
    v.require(o.exit_code == 0, std::string(f) + " (cocylindrical): " + describe(o));
    families += o.report["checks"].size();
  }
  if (v.ok) v.note << families << " identity families, p,q <= 2 (cocylindrical p,q <= 1)";
  return v;
}

Verdict c3()
{
  Verdict v;
  for (auto [f, n] : {std::pair{"kc2_q", 3}, std::pair{"h4_q", 2}}) {
    auto o = run("verify", "iso", f, {}, {}, n);
    v.require(o.exit_code == 0, std::string(f) + ": " + describe(o));
    for (auto side : {"algebra: ", "coalgebra: "}) {
      v.require(has_check(o.report, std::string(side) + "ψφ = id", true), std::string(f) + ": " + side + "ψφ = id missing");
      v.require(has_check(o.report, std::string(side) + "φψ = id", true), std::string(f) + ": " + side + "φψ = id missing");
    }
  }
  if (v.ok) v.note << "both sides, kC2 n <= 3, H4 n <= 2";
  return v;
}

Verdict c4()
{
  Verdict v;
  for (auto f : {"kc2_q", "kc2_q_trivial", "kc2_f2", "kc2_f2_trivial"}) {
    auto o = run("verify", "transforms", f, 2, 2);
    v.require(o.exit_code == 0, std::string(f) + ": " + describe(o));
    for (auto name : {"algebra: β∘γ = id", "algebra: γ∘β = id", "algebra: 𝔟̄ = δ (Hopf-module boundary)", "coalgebra: β∘γ = id",
                      "coalgebra: γ∘β = id", "coalgebra: 𝔟̄ = 𝛅 (Hopf-comodule coboundary)"})
      v.require(has_check(o.report, name, true), std::string(f) + ": '" + name + "' not passed");
  }
  if (v.ok) v.note << "4 kC2 files, p,q <= 2";
  return v;
}

/// Largest top <= 4 whose degree-top space fits the budget.
std::size_t depth(const std::function<std::size_t(std::size_t)>& dim, std::size_t budget)
{
  std::size_t top = 0;
  while (top < 4 && dim(top + 1) <= budget) ++top;
  return top;
}

Verdict c5()
{
  Verdict v;
  const std::size_t budget = 20000;
  std::size_t objects = 0, full = 0;
  std::string shallow;
  for (auto f : {"trivial", "kc2_q", "kc2_q_trivial", "kc2_f2", "kc2_f2_trivial", "kc3_q", "kc3_q_trivial", "s3_q", "s3_q_trivial", "h4_q",
                 "h4_q_trivial"}) {
    with_document(load_json(path(f)), [&](const auto& d) {
      using K = typename std::decay_t<decltype(d)>::scalar_type;
      auto check = [&](const std::string& label, const CyclicObject<K>& X, std::size_t top) {
        ++objects;
        if (top == 4) ++full;
        else shallow += std::string(shallow.empty() ? "" : ", ") + f + "/" + label + " n<=" + std::to_string(top);
        auto r = mixed_identities(mixed_complex(X, top));
        auto* bad = r.first_failure();
        v.require(!bad, std::string(f) + "/" + label + ": " + (bad ? bad->name + " " + bad->detail : ""));
      };
      auto plain = [&](const std::string& label, const CyclicObject<K>& X) {
        check(label, X, depth([&](std::size_t n) { return X.dim(n); }, budget));
      };
      plain("H", cyclic_module_of_algebra(d.hopf.algebra()));
      plain("H coalgebra", cocyclic_module_of_coalgebra(d.hopf.coalgebra()));
      const std::size_t dh = d.hopf.dim;
      if (d.algebra) {
        plain("A", cyclic_module_of_algebra(d.algebra->algebra));
        plain("A⋊H", cyclic_module_of_algebra(crossed_product_algebra(*d.algebra)));
        plain("diagonal A♮H", a_natural_h(*d.algebra).diagonal());
        const std::size_t da = d.algebra->algebra.dim;
        auto top = depth([&](std::size_t n) { return dh * ipow(da, n + 1); }, budget);
        check("coinvariants of A", coinvariants_algebra(*d.algebra, top).object, top);
      }
      if (d.coalgebra) {
        plain("C", cocyclic_module_of_coalgebra(d.coalgebra->coalgebra));
        plain("C>◄H", cocyclic_module_of_coalgebra(crossed_product_coalgebra(*d.coalgebra)));
        plain("diagonal C♮H", c_natural_h(*d.coalgebra).diagonal());
        const std::size_t dc = d.coalgebra->coalgebra.dim;
        auto top = depth([&](std::size_t n) { return dh * ipow(dc, n + 1); }, budget);
        check("invariants of C", coinvariants_coalgebra(*d.coalgebra, top).object, top);
      }
    });
  }
  auto hc = run("compute", "hc", "trivial", {}, {}, 3);
  auto dims = column(hc.report, "cyclic", 2, "algebra");
  v.require(hc.exit_code == 0 && dims == std::vector<std::size_t>{1, 0, 1, 0}, "HC of the ground field = " + show(dims));
  if (v.ok) {
    v.note << objects << " (co)cyclic modules, " << full << " to n = 4";
    if (!shallow.empty()) v.note << "; capped at dim " << budget << ": " << shallow;
    v.note << "; HC(k) = " << show(dims);
  }
  return v;
}

Verdict c6()
{
  Verdict v;
  for (auto [f, n] : {std::pair{"kc2_q", 2}, std::pair{"h4_q", 1}}) {
    auto o = run("compare", "ez-hochschild", f, {}, {}, n);
    v.require(o.exit_code == 0, std::string(f) + ": " + describe(o));
    auto tot = column(o.report, "comparison", 2, "algebra");
    v.require(tot.size() == static_cast<std::size_t>(n) + 1, std::string(f) + ": wrong number of degrees");
    if (v.ok) v.note << (v.note.tellp() > 0 ? ", " : "") << f << " " << show(tot);
  }
  return v;
}

Verdict c7()
{
  Verdict v;
  auto o = run("compare", "collapse-algebra", "kc2_q");
  v.require(o.exit_code == 0, "kc2_q: " + describe(o));
  v.require(o.report["tables"]["integral"]["rows"] == json::array({json::array({"e", "1/2"}), json::array({"g", "1/2"})}),
            "t is not (1+g)/2");
  auto ss = run("compute", "ss-pages", "kc2_q", {}, {}, 3, 2);
  v.require(ss.exit_code == 0, "ss-pages kc2_q: " + describe(ss));
  for (const auto& row : ss.report["tables"]["pages"]["rows"])
    if (row[1] == 1 && row[4].get<std::size_t>() > 0) v.require(row[6] == 0, "E¹ nonzero in positive Hopf degree over Q");
  auto neg = run("compare", "collapse-algebra", "kc2_f2");
  v.require(has_check(neg.report, "right integral t with ε(t) = 1", false), "F2: integral finder did not fail");
  v.require(neg.report["checks"][0]["detail"].get<std::string>().rfind("NotSemisimple", 0) == 0, "F2: not reported as NotSemisimple");
  auto triv = run("compare", "collapse-algebra", "kc2_f2_trivial");
  v.require(has_check(triv.report, "E¹ vanishes in positive Hopf degree", false), "F2, A = k: E¹ has no entry off the axis");
  if (v.ok)
    v.note << "t = (1+g)/2, HC " << show(column(o.report, "cyclic", 1)) << " = " << show(column(o.report, "cyclic", 2))
           << "; F2: NotSemisimple, E¹ " << triv.report["checks"][1]["detail"].get<std::string>();
  return v;
}

Verdict c8()
{
  Verdict v;
  auto o = run("compare", "collapse-coalgebra", "kc2_q");
  v.require(o.exit_code == 0, "kc2_q: " + describe(o));
  v.require(o.report["tables"]["integral"]["rows"] == json::array({json::array({"e", "1"})}), "x is not δ_e");
  auto neg = run("compare", "collapse-coalgebra", "h4_q");
  v.require(has_check(neg.report, "left integral x in H* with x(1) = 1", false), "H4: dual integral finder did not fail");
  v.require(neg.report["checks"][0]["detail"].get<std::string>().rfind("NotCosemisimple", 0) == 0, "H4: not reported as NotCosemisimple");
  if (v.ok) v.note << "x = δ_e, HC " << show(column(o.report, "cyclic", 1)) << " = " << show(column(o.report, "cyclic", 2)) << "; H4: NotCosemisimple";
  return v;
}

Verdict c9()
{
  Verdict v;
  auto f2 = run("compute", "hopf-homology", "kc2_f2_trivial", {}, {}, 3);
  auto q = run("compute", "hopf-homology", "kc2_q_trivial", {}, {}, 3);
  auto a = column(f2.report, "hopf_homology", 1), b = column(q.report, "hopf_homology", 1);
  v.require(a == std::vector<std::size_t>{1, 1, 1, 1}, "F2: " + show(a));
  v.require(b == std::vector<std::size_t>{1, 0, 0, 0}, "Q: " + show(b));
  if (v.ok) v.note << "F2 " << show(a) << ", Q " << show(b);
  return v;
}

Verdict c10()
{
  Verdict v;
  const auto recorded = journal;
  for (const auto& [inv, text] : recorded) {
    auto again = cli::render(cli::run(inv).report);
    v.require(again == text, inv.command + " " + inv.target + " " + inv.input + " differs between runs");
  }
  if (v.ok) v.note << recorded.size() << " reports byte-identical on replay";
  return v;
}

} // namespace

int main()
{
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"Hopf axiom suite", c1},
      {"cylindrical and cocylindrical suites", c2},
      {"isomorphisms with the crossed products", c3},
      {"transform consistency", c4},
      {"mixed-complex identities", c5},
      {"Eilenberg-Zilber at the Hochschild level", c6},
      {"semisimple collapse", c7},
      {"cosemisimple collapse", c8},
      {"group-homology cross-check", c9},
      {"determinism", c10},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    try {
      v = criteria[k].second();
    } catch (const std::exception& e) {
      v.ok = false;
      v.note.str(std::string("exception: ") + e.what());
    }
    failed += !v.ok;
    std::cout << (v.ok ? "PASS" : "FAIL") << "  " << (k + 1) << "  " << criteria[k].first << ": " << v.note.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
