#ifndef HOPFCYC_IO_HPP
#define HOPFCYC_IO_HPP

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"

#include "hopfcyc/hopf.hpp"

namespace hopfcyc {

using json = nlohmann::ordered_json;

/// Input file layout. Scalars are strings ("3", "-1/2"); indices are 0-based.
///
///   field      {"kind": "rationals"} or {"kind": "prime", "p": 2}
///   hopf       basis, mult [i,j,k,s] (e_i e_j += s e_k), unit [k,s], comult [i,j,k,s]
///              (Δe_i += s e_j⊗e_k), counit [i,s], antipode [i,j,s] (S e_i += s e_j)
///   algebra    basis, mult, unit, coaction [i,h,j,s] (α(a_i) += s h_h⊗a_j)
///   coalgebra  basis, comult, counit, action [h,i,j,s] (h_h·c_i += s c_j)
///   module     dim, action [h,i,j,s]
///   comodule   dim, coaction [i,h,j,s]
///   options    N, P, Q, rmax
struct Options {
  std::size_t N = 3;
  std::size_t P = 2;
  std::size_t Q = 2;
  std::size_t rmax = 2;
};

template <class K> struct Document {
  using scalar_type = K;
  Field<K> field;
  std::string name;
  HopfData<K> hopf;
  std::optional<ComoduleAlgebraData<K>> algebra;
  std::optional<ModuleCoalgebraData<K>> coalgebra;
  std::optional<ModuleData<K>> module;
  std::optional<ComoduleData<K>> comodule;
  Options options;

  const ComoduleAlgebraData<K>& need_algebra() const
  {
    if (!algebra) throw Error(Errc::MissingBlock, "this target needs an \"algebra\" block");
    return *algebra;
  }
  const ModuleCoalgebraData<K>& need_coalgebra() const
  {
    if (!coalgebra) throw Error(Errc::MissingBlock, "this target needs a \"coalgebra\" block");
    return *coalgebra;
  }
};

namespace io_detail {

inline const json& need(const json& j, const std::string& key, const std::string& where)
{
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, where + ": missing \"" + key + "\"");
  return j.at(key);
}

inline std::size_t index(const json& v, std::size_t bound, const std::string& where)
{
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw Error(Errc::ParseError, where + ": index must be a non-negative integer");
  auto i = v.get<std::size_t>();
  if (i >= bound) throw Error(Errc::ParseError, where + ": index " + std::to_string(i) + " out of range (< " + std::to_string(bound) + ")");
  return i;
}

template <class K> K scalar(const json& v, const Field<K>& f, const std::string& where)
{
  if (v.is_string()) return f.parse(v.get<std::string>());
  if (v.is_number_integer()) return f.from_int(v.get<long>());
  throw Error(Errc::ParseError, where + ": scalar must be a string");
}

/// Entries [i_1, .., i_r, s] with index bounds; the flattened column and row are chosen by `place`.
template <class K, class Place>
SparseMatrix<K> table(const json& j, const Field<K>& f, const std::vector<std::size_t>& bounds, std::size_t rows, std::size_t cols,
                      const std::string& where, Place place)
{
  if (!j.is_array()) throw Error(Errc::ParseError, where + ": expected a list of entries");
  std::vector<std::tuple<std::size_t, std::size_t, K>> t;
  std::size_t n = 0;
  for (const auto& e : j) {
    const std::string w = where + "[" + std::to_string(n++) + "]";
    if (!e.is_array() || e.size() != bounds.size() + 1)
      throw Error(Errc::ParseError, w + ": expected " + std::to_string(bounds.size()) + " indices and a scalar");
    std::vector<std::size_t> idx;
    for (std::size_t k = 0; k < bounds.size(); ++k) idx.push_back(index(e[k], bounds[k], w));
    K s = scalar(e[bounds.size()], f, w);
    auto [r, c] = place(idx);
    t.emplace_back(r, c, s);
  }
  return SparseMatrix<K>::from_triplets(rows, cols, t);
}

inline std::vector<std::string> basis(const json& block, const std::string& where)
{
  const auto& b = need(block, "basis", where);
  if (!b.is_array() || b.empty()) throw Error(Errc::ParseError, where + ".basis: expected a nonempty list of names");
  std::vector<std::string> out;
  for (const auto& x : b) {
    if (!x.is_string()) throw Error(Errc::ParseError, where + ".basis: names must be strings");
    out.push_back(x.get<std::string>());
  }
  return out;
}

template <class K> SparseMatrix<K> mult(const json& blk, const Field<K>& f, std::size_t d, const std::string& w)
{
  return table(need(blk, "mult", w), f, {d, d, d}, d, d * d, w + ".mult",
               [d](const auto& i) { return std::pair{i[2], i[0] * d + i[1]}; });
}
template <class K> SparseMatrix<K> unit(const json& blk, const Field<K>& f, std::size_t d, const std::string& w)
{
  return table(need(blk, "unit", w), f, {d}, d, 1, w + ".unit", [](const auto& i) { return std::pair{i[0], std::size_t(0)}; });
}
template <class K> SparseMatrix<K> comult(const json& blk, const Field<K>& f, std::size_t d, const std::string& w)
{
  return table(need(blk, "comult", w), f, {d, d, d}, d * d, d, w + ".comult",
               [d](const auto& i) { return std::pair{i[1] * d + i[2], i[0]}; });
}
template <class K> SparseMatrix<K> counit(const json& blk, const Field<K>& f, std::size_t d, const std::string& w)
{
  return table(need(blk, "counit", w), f, {d}, 1, d, w + ".counit", [](const auto& i) { return std::pair{std::size_t(0), i[0]}; });
}
template <class K> SparseMatrix<K> left_action(const json& j, const Field<K>& f, std::size_t dh, std::size_t d, const std::string& w)
{
  return table(j, f, {dh, d, d}, d, dh * d, w, [d](const auto& i) { return std::pair{i[2], i[0] * d + i[1]}; });
}
template <class K> SparseMatrix<K> left_coaction(const json& j, const Field<K>& f, std::size_t dh, std::size_t d, const std::string& w)
{
  return table(j, f, {d, dh, d}, dh * d, d, w, [d](const auto& i) { return std::pair{i[1] * d + i[2], i[0]}; });
}

inline std::size_t option(const json& o, const char* key, std::size_t fallback)
{
  if (!o.contains(key)) return fallback;
  return index(o.at(key), 64, std::string("options.") + key);
}

// Writers: entries sorted by their index tuple, zeros dropped.
template <class K, class Unplace> json entries(const SparseMatrix<K>& m, Unplace unplace)
{
  std::vector<std::pair<std::vector<std::size_t>, std::string>> rows;
  for (auto [r, c, v] : m.triplets())
    if (!is_zero(v)) rows.emplace_back(unplace(r, c), format_scalar(v));
  std::sort(rows.begin(), rows.end());
  json out = json::array();
  for (auto& [idx, s] : rows) {
    json e = json::array();
    for (auto i : idx) e.push_back(i);
    e.push_back(s);
    out.push_back(std::move(e));
  }
  return out;
}

template <class K> json write_mult(const SparseMatrix<K>& m, std::size_t d)
{
  return entries(m, [d](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c / d, c % d, r}; });
}
template <class K> json write_unit(const SparseMatrix<K>& m)
{
  return entries(m, [](std::size_t r, std::size_t) { return std::vector<std::size_t>{r}; });
}
template <class K> json write_comult(const SparseMatrix<K>& m, std::size_t d)
{
  return entries(m, [d](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c, r / d, r % d}; });
}
template <class K> json write_counit(const SparseMatrix<K>& m)
{
  return entries(m, [](std::size_t, std::size_t c) { return std::vector<std::size_t>{c}; });
}
template <class K> json write_action(const SparseMatrix<K>& m, std::size_t d)
{
  return entries(m, [d](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c / d, c % d, r}; });
}
template <class K> json write_coaction(const SparseMatrix<K>& m, std::size_t d)
{
  return entries(m, [d](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c, r / d, r % d}; });
}

} // namespace io_detail

inline FieldSpec read_field(const json& doc)
{
  const auto& f = io_detail::need(doc, "field", "document");
  const auto& kind = io_detail::need(f, "kind", "field");
  if (kind == "rationals") return FieldSpec::rationals();
  if (kind == "prime") {
    const auto& p = io_detail::need(f, "p", "field");
    if (!p.is_number_unsigned()) throw Error(Errc::ParseError, "field.p must be a positive integer");
    return FieldSpec::prime(p.get<std::uint64_t>());
  }
  throw Error(Errc::ParseError, "field.kind must be \"rationals\" or \"prime\"");
}

template <class K> Document<K> parse_document(const json& doc, const Field<K>& f)
{
  using namespace io_detail;
  const auto& h = need(doc, "hopf", "document");
  auto hb = basis(h, "hopf");
  const std::size_t dh = hb.size();
  std::string name;
  if (doc.contains("name")) {
    if (!doc.at("name").is_string()) throw Error(Errc::ParseError, "name must be a string");
    name = doc.at("name").get<std::string>();
  }
  Document<K> d{f, name, HopfData<K>{f, dh, hb, mult(h, f, dh, "hopf"), unit(h, f, dh, "hopf"), comult(h, f, dh, "hopf"), counit(h, f, dh, "hopf"),
                       table(need(h, "antipode", "hopf"), f, {dh, dh}, dh, dh, "hopf.antipode",
                             [](const auto& i) { return std::pair{i[1], i[0]}; }),
                       {}},
                {}, {}, {}, {}, {}};
  try {
    d.hopf.antipode_inv = antipode_inverse(d.hopf.antipode, f);
  } catch (const Error&) {
    // left empty; check_hopf reports the bijectivity failure
    d.hopf.antipode_inv = SparseMatrix<K>(dh, dh);
  }
  if (doc.contains("algebra")) {
    const auto& a = doc.at("algebra");
    auto ab = basis(a, "algebra");
    const std::size_t da = ab.size();
    AlgebraData<K> alg{f, da, ab, mult(a, f, da, "algebra"), unit(a, f, da, "algebra")};
    d.algebra = ComoduleAlgebraData<K>{d.hopf, alg, left_coaction(need(a, "coaction", "algebra"), f, dh, da, "algebra.coaction")};
  }
  if (doc.contains("coalgebra")) {
    const auto& c = doc.at("coalgebra");
    auto cb = basis(c, "coalgebra");
    const std::size_t dc = cb.size();
    CoalgebraData<K> co{f, dc, cb, comult(c, f, dc, "coalgebra"), counit(c, f, dc, "coalgebra")};
    d.coalgebra = ModuleCoalgebraData<K>{d.hopf, co, left_action(need(c, "action", "coalgebra"), f, dh, dc, "coalgebra.action")};
  }
  if (doc.contains("module")) {
    const auto& m = doc.at("module");
    const std::size_t dm = index(need(m, "dim", "module"), 1u << 20, "module.dim");
    d.module = ModuleData<K>{d.hopf, dm, left_action(need(m, "action", "module"), f, dh, dm, "module.action")};
  }
  if (doc.contains("comodule")) {
    const auto& m = doc.at("comodule");
    const std::size_t dm = index(need(m, "dim", "comodule"), 1u << 20, "comodule.dim");
    d.comodule = ComoduleData<K>{d.hopf, dm, left_coaction(need(m, "coaction", "comodule"), f, dh, dm, "comodule.coaction")};
  }
  if (doc.contains("options")) {
    const auto& o = doc.at("options");
    if (!o.is_object()) throw Error(Errc::ParseError, "options must be an object");
    d.options.N = option(o, "N", d.options.N);
    d.options.P = option(o, "P", d.options.P);
    d.options.Q = option(o, "Q", d.options.Q);
    d.options.rmax = option(o, "rmax", d.options.rmax);
  }
  return d;
}

inline json field_json(const FieldSpec& s)
{
  if (s.kind == FieldSpec::Kind::Rationals) return json{{"kind", "rationals"}};
  return json{{"kind", "prime"}, {"p", s.p}};
}

/// Normal form: fixed key order, entries sorted, zeros dropped, scalars canonical.
template <class K> json serialize(const Document<K>& d)
{
  using namespace io_detail;
  const std::size_t dh = d.hopf.dim;
  json out;
  if (!d.name.empty()) out["name"] = d.name;
  out["field"] = field_json(d.field.spec());
  out["hopf"] = json{{"basis", d.hopf.basis},
                     {"mult", write_mult(d.hopf.mult, dh)},
                     {"unit", write_unit(d.hopf.unit)},
                     {"comult", write_comult(d.hopf.comult, dh)},
                     {"counit", write_counit(d.hopf.counit)},
                     {"antipode", entries(d.hopf.antipode, [](std::size_t r, std::size_t c) { return std::vector<std::size_t>{c, r}; })}};
  if (d.algebra) {
    const auto& a = *d.algebra;
    out["algebra"] = json{{"basis", a.algebra.basis},
                          {"mult", write_mult(a.algebra.mult, a.algebra.dim)},
                          {"unit", write_unit(a.algebra.unit)},
                          {"coaction", write_coaction(a.coaction, a.algebra.dim)}};
  }
  if (d.coalgebra) {
    const auto& c = *d.coalgebra;
    out["coalgebra"] = json{{"basis", c.coalgebra.basis},
                            {"comult", write_comult(c.coalgebra.comult, c.coalgebra.dim)},
                            {"counit", write_counit(c.coalgebra.counit)},
                            {"action", write_action(c.action, c.coalgebra.dim)}};
  }
  if (d.module) out["module"] = json{{"dim", d.module->dim}, {"action", write_action(d.module->action, d.module->dim)}};
  if (d.comodule) out["comodule"] = json{{"dim", d.comodule->dim}, {"coaction", write_coaction(d.comodule->coaction, d.comodule->dim)}};
  out["options"] = json{{"N", d.options.N}, {"P", d.options.P}, {"Q", d.options.Q}, {"rmax", d.options.rmax}};
  return out;
}

namespace io_detail {
inline void pretty_into(std::string& out, const json& j, std::size_t indent)
{
  const std::string pad(indent + 2, ' ');
  if (j.is_object() && !j.empty()) {
    out += "{\n";
    std::size_t k = 0;
    for (const auto& [key, v] : j.items()) {
      out += pad + json(key).dump() + ": ";
      pretty_into(out, v, indent + 2);
      out += ++k < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "}";
    return;
  }
  const bool flat = std::none_of(j.begin(), j.end(), [](const json& x) { return x.is_structured(); });
  if (j.is_array() && !flat) {
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += pad;
      pretty_into(out, j[k], indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + "]";
    return;
  }
  out += j.dump();
}
} // namespace io_detail

/// Indented JSON with arrays of scalars kept on one line.
inline std::string pretty(const json& j)
{
  std::string out;
  io_detail::pretty_into(out, j, 0);
  return out + "\n";
}

inline json load_json(const std::string& path)
{
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, path + ": " + e.what());
  }
}

/// Calls fn(Document<K>) with K chosen by the file's field.
template <class Fn> decltype(auto) with_document(const json& doc, Fn&& fn)
{
  const FieldSpec spec = read_field(doc);
  if (spec.kind == FieldSpec::Kind::Rationals) return fn(parse_document(doc, Field<Rational>(spec)));
  return fn(parse_document(doc, Field<Zp>(spec)));
}

} // namespace hopfcyc

#endif // HOPFCYC_IO_HPP
