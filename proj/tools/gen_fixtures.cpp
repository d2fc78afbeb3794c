// Regenerates the JSON fixture corpus under fixtures/. The log-structure
// entries are built from the graded models and their recorded verdicts are
// verified before writing, so the corpus cannot drift from the library.

#include <dspace/serialize.hpp>

#include <fstream>
#include <iostream>

using namespace dspace;

namespace {

GradedMonoidMap identity_layout(const GradedSignedMonoid& M) {
  GradedMonoidMap f;
  for (auto& [t, n] : M.card) {
    std::vector<int> v(n);
    for (int a = 0; a < n; ++a) v[a] = a;
    f.at[t] = v;
  }
  return f;
}

LogFixture make_log(std::string name, GradedSignedMonoid M,
                    GradedSignedMonoid R, GradedMonoidMap alpha) {
  LogFixture f;
  f.name = std::move(name);
  f.M = std::move(M);
  f.R = std::move(R);
  f.alpha = std::move(alpha);
  if (!check_graded_map(f.alpha, f.M, f.R))
    throw std::logic_error(f.name + ": alpha is not a graded map");
  f.factors_through_units = factors_through_units(f.alpha, f.M, f.R);
  f.expect_trivial = logification(f.alpha, f.M, f.R).trivial;
  return f;
}

void write(const std::string& path, const json& j) {
  std::ofstream out(path);
  out << j.dump(1) << "\n";
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : "fixtures";

  GradedSignedMonoid ku = laurent_graded_zero(0, 2);
  GradedSignedMonoid L = laurent_graded(-2, 2);
  GradedSignedMonoid C = laurent_graded(0, 2);
  GradedSignedMonoid signs = laurent_graded(0, 0);

  GradedMonoidMap incl;
  GradedSignedMonoid GLku = units(ku, &incl);

  json logs = json::array();
  logs.push_back(log_to_json(make_log("units-into-zero-extended", GLku, ku, incl)));
  logs.push_back(log_to_json(
      make_log("sign-orbit-into-zero-extended", signs, ku, identity_layout(signs))));
  logs.push_back(
      log_to_json(make_log("generator-into-all-units", C, L, identity_layout(C))));
  logs.push_back(
      log_to_json(make_log("generator-into-zero-extended", C, ku, identity_layout(C))));
  int factoring = 0;
  for (const json& e : logs)
    if (e.at("factors_through_units").get<bool>()) ++factoring;
  if (factoring < 3)
    throw std::logic_error("need at least three fixtures landing in the units");
  write(dir + "/log_structures.json", logs);

  json spans = json::array();
  spans.push_back(span_to_json(SpanFixture{"disjoint-legs", 1, 2, 2, {0}, {1}}));
  spans.push_back(span_to_json(SpanFixture{"empty-center", 0, 2, 1, {}, {}}));
  spans.push_back(
      span_to_json(SpanFixture{"two-of-three", 2, 3, 2, {0, 2}, {1, 0}}));
  spans.push_back(span_to_json(SpanFixture{"iso-leg", 2, 2, 3, {1, 0}, {0, 2}}));
  write(dir + "/spans.json", spans);

  json operads = json::array();
  for (auto& op : {commutativity_operad(3), associativity_operad(3)}) {
    if (!validate_operad(op).ok)
      throw std::logic_error(op.name + " fails its own relations");
    operads.push_back(operad_to_json(op));
  }
  write(dir + "/operads.json", operads);

  json algebras = json::array();
  algebras.push_back(algebra_to_json(
      AlgebraFixture{"saturating-sum", "saturating_sum", "", 3, 2, 0}));
  algebras.push_back(algebra_to_json(
      AlgebraFixture{"free-commutative-point", "free", "commutativity", 3, 0, 1}));
  algebras.push_back(algebra_to_json(
      AlgebraFixture{"free-associative-point", "free", "associativity", 2, 0, 1}));
  write(dir + "/algebras.json", algebras);
  return 0;
}
