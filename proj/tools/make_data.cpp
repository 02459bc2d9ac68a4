// Regenerates the shipped structure-constant files: make_data <outdir>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "hopfcyc/io.hpp"

namespace fs = std::filesystem;
using namespace hopfcyc;

namespace {

fs::path outdir;

template <class K> void write(const std::string& name, Document<K> d)
{
  d.name = name;
  std::ofstream out(outdir / (name + ".json"), std::ios::binary);
  out << pretty(serialize(d));
  std::cout << name << "\n";
}

template <class K> Document<K> self(const HopfData<K>& h, Options o)
{
  return {h.field, "", h, self_comodule_algebra(h), self_module_coalgebra(h), std::nullopt, std::nullopt, o};
}

template <class K> Document<K> trivial(const HopfData<K>& h, Options o)
{
  return {h.field,
          "",
          h,
          trivial_comodule_algebra(h, ground_algebra(h.field)),
          trivial_module_coalgebra(h, ground_coalgebra(h.field)),
          trivial_module(h),
          trivial_comodule(h),
          o};
}

} // namespace

int main(int argc, char** argv)
{
  if (argc != 2) {
    std::cerr << "usage: make_data <outdir>\n";
    return 2;
  }
  outdir = argv[1];
  fs::create_directories(outdir);
  Field<Rational> QQ;
  Field<Zp> F2(2);

  write("trivial", trivial(build_trivial_hopf(QQ), {3, 2, 2, 2}));
  write("kc2_q", self(build_cyclic_group_algebra(2, QQ), {3, 2, 2, 2}));
  write("kc2_q_trivial", trivial(build_cyclic_group_algebra(2, QQ), {3, 2, 2, 2}));
  write("kc2_f2", self(build_cyclic_group_algebra(2, F2), {3, 2, 2, 2}));
  write("kc2_f2_trivial", trivial(build_cyclic_group_algebra(2, F2), {3, 2, 2, 2}));
  write("kc3_q", self(build_cyclic_group_algebra(3, QQ), {2, 1, 1, 2}));
  write("kc3_q_trivial", trivial(build_cyclic_group_algebra(3, QQ), {3, 2, 2, 2}));
  write("s3_q", self(build_s3_group_algebra(QQ), {1, 1, 1, 1}));
  write("s3_q_trivial", trivial(build_s3_group_algebra(QQ), {2, 1, 1, 2}));
  write("h4_q", self(build_sweedler_h4(QQ), {2, 2, 2, 2}));
  write("h4_q_trivial", trivial(build_sweedler_h4(QQ), {2, 2, 2, 2}));

  // S(x) = gx instead of -gx: still bijective, breaks m(S⊗id)Δ = uε on x
  auto bad = build_sweedler_h4(QQ);
  bad.antipode = SparseMatrix<Rational>::from_triplets(4, 4, {{0, 0, 1}, {1, 1, 1}, {3, 2, 1}, {2, 3, 1}});
  bad.antipode_inv = antipode_inverse(bad.antipode, QQ);
  write("h4_q_bad_antipode", Document<Rational>{QQ, "", bad, std::nullopt, std::nullopt, std::nullopt, std::nullopt, {2, 2, 2, 2}});
  return 0;
}
