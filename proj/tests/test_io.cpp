#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hopfcyc/cli.hpp"

using namespace hopfcyc;
namespace fs = std::filesystem;

namespace {

const fs::path data = HOPFCYC_DATA_DIR;

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name, const std::string& text)
{
  auto p = fs::temp_directory_path() / ("hopfcyc_test_" + name + ".json");
  std::ofstream(p, std::ios::binary) << text;
  return p;
}

cli::Outcome run(const std::string& cmd, const std::string& target, const fs::path& file)
{
  return cli::run({cmd, target, file.string(), {}, {}, {}, {}});
}

std::string error_code(const cli::Outcome& o) { return o.report["error"]["code"].get<std::string>(); }

json kc2() { return load_json((data / "kc2_q.json").string()); }

} // namespace

TEST(Io, ShippedFilesAreInNormalForm)
{
  std::size_t n = 0;
  for (const auto& e : fs::directory_iterator(data)) {
    if (e.path().extension() != ".json") continue;
    ++n;
    auto text = slurp(e.path());
    auto again = with_document(load_json(e.path().string()), [](const auto& d) { return pretty(serialize(d)); });
    EXPECT_EQ(again, text) << e.path();
  }
  EXPECT_EQ(n, 12u);
}

TEST(Io, ScalarsAreCanonicalised)
{
  auto doc = kc2();
  // integer scalars, unreduced fractions, explicit zeros and out-of-order entries
  doc["hopf"]["counit"] = json::array({json::array({1, "2/2"}), json::array({0, 1})});
  doc["hopf"]["antipode"] = json::array({json::array({1, 1, "-3/-3"}), json::array({0, 1, "0"}), json::array({0, 0, "1"})});
  auto out = with_document(doc, [](const auto& d) { return serialize(d); });
  EXPECT_EQ(out["hopf"]["counit"], json::parse(R"([[0,"1"],[1,"1"]])"));
  EXPECT_EQ(out["hopf"]["antipode"], json::parse(R"([[0,0,"1"],[1,1,"1"]])"));
}

TEST(Io, PrimeFieldReducesScalars)
{
  auto doc = load_json((data / "kc2_f2.json").string());
  doc["hopf"]["counit"] = json::array({json::array({0, "3"}), json::array({1, "-1"})});
  auto out = with_document(doc, [](const auto& d) { return serialize(d); });
  EXPECT_EQ(out["hopf"]["counit"], json::parse(R"([[0,"1"],[1,"1"]])"));
}

TEST(Io, OptionsDefaultAndOverride)
{
  auto doc = kc2();
  doc.erase("options");
  auto o = with_document(doc, [](const auto& d) { return d.options; });
  EXPECT_EQ(o.N, 3u);
  EXPECT_EQ(o.rmax, 2u);
  auto r = cli::run({"compute", "hh", (data / "kc2_q.json").string(), {}, {}, std::size_t{1}, {}});
  EXPECT_EQ(r.report["parameters"]["nmax"], 1);
}

TEST(Cli, MalformedJsonIsAnInputError)
{
  auto o = run("verify", "hopf", scratch("malformed", "{\"field\": "));
  EXPECT_EQ(o.exit_code, cli::InputError);
  EXPECT_EQ(error_code(o), "ParseError");
}

TEST(Cli, MissingFileIsAnInputError)
{
  auto o = run("verify", "hopf", data / "does_not_exist.json");
  EXPECT_EQ(o.exit_code, cli::InputError);
  EXPECT_EQ(error_code(o), "ParseError");
}

TEST(Cli, BadIndexIsAnInputError)
{
  auto doc = kc2();
  doc["hopf"]["mult"][0][2] = 5;
  auto o = run("verify", "hopf", scratch("badindex", doc.dump()));
  EXPECT_EQ(o.exit_code, cli::InputError);
  EXPECT_NE(o.report["error"]["message"].get<std::string>().find("hopf.mult[0]"), std::string::npos);
}

TEST(Cli, BadScalarIsAnInputError)
{
  auto doc = kc2();
  doc["hopf"]["unit"][0][1] = "1/0";
  EXPECT_EQ(run("verify", "hopf", scratch("badscalar", doc.dump())).exit_code, cli::InputError);
  doc["hopf"]["unit"][0][1] = true;
  EXPECT_EQ(run("verify", "hopf", scratch("badscalar2", doc.dump())).exit_code, cli::InputError);
}

TEST(Cli, CompositeModulusIsInvalidField)
{
  auto doc = load_json((data / "kc2_f2.json").string());
  doc["field"]["p"] = 4;
  auto o = run("verify", "hopf", scratch("p4", doc.dump()));
  EXPECT_EQ(o.exit_code, cli::InputError);
  EXPECT_EQ(error_code(o), "InvalidField");
}

TEST(Cli, MissingBlockIsAnInputError)
{
  auto o = run("verify", "cylindrical", data / "h4_q_bad_antipode.json");
  EXPECT_EQ(o.exit_code, cli::InputError);
  EXPECT_EQ(error_code(o), "MissingBlock");
  EXPECT_EQ(run("compare", "collapse-coalgebra", data / "h4_q_bad_antipode.json").exit_code, cli::InputError);
}

TEST(Cli, UnknownTargetIsAnInputError)
{
  auto o = run("compute", "homotopy", data / "kc2_q.json");
  EXPECT_EQ(o.exit_code, cli::InputError);
  EXPECT_EQ(o.report["status"], "input-error");
}

TEST(Cli, FailingCheckExitsOne)
{
  auto doc = kc2();
  doc["hopf"]["counit"] = json::array({json::array({0, "1"})}); // ε(g) = 0
  auto o = run("verify", "hopf", scratch("counit", doc.dump()));
  EXPECT_EQ(o.exit_code, cli::CheckFailure);
  EXPECT_EQ(o.report["status"], "fail");
  EXPECT_FALSE(o.report["first_failure"].is_null());
}

TEST(Cli, ReportShape)
{
  auto o = run("compute", "hh", data / "kc2_q.json");
  ASSERT_EQ(o.exit_code, 0);
  const auto& r = o.report;
  EXPECT_EQ(r["command"], "compute");
  EXPECT_EQ(r["status"], "pass");
  EXPECT_EQ(r["field"], "Q");
  EXPECT_TRUE(r["first_failure"].is_null());
  EXPECT_EQ(r["tables"]["hochschild"]["columns"], json::parse(R"(["side","n","dim"])"));
  // HH of the diagonal of kC2 over Q is HH(kC2 ⋊ kC2) = HH(Q^4): 4 in degree 0 only
  for (const auto& row : r["tables"]["hochschild"]["rows"]) EXPECT_EQ(row[2], row[1] == 0 ? 4 : 0) << row.dump();
  EXPECT_EQ(cli::render(r).find("time"), std::string::npos);
}

TEST(Cli, CsvQuotesAndHeader)
{
  cli::Table t{"demo", {"name", "value"}, {json::array({"a,b", 1}), json::array({"say \"hi\"", "1/2"}), json::array({"plain", true})}};
  EXPECT_EQ(cli::to_csv(t), "name,value\n\"a,b\",1\n\"say \"\"hi\"\"\",1/2\nplain,true\n");
}

TEST(Cli, CsvMatchesReportTables)
{
  auto o = run("compute", "hopf-homology", data / "kc2_f2_trivial.json");
  ASSERT_EQ(o.exit_code, 0);
  ASSERT_EQ(o.tables.size(), 1u);
  EXPECT_EQ(o.tables[0].name, "hopf_homology");
  EXPECT_EQ(cli::to_csv(o.tables[0]), "q,dim\n0,1\n1,1\n2,1\n3,1\n");
}
