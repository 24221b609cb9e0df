#include <gtest/gtest.h>

#include "peano/proof_file.hpp"

using namespace peano;

namespace {

std::string fixture(const char* name) { return std::string(PEANO_SOURCE_DIR) + "/proofs/" + name; }

}  // namespace

TEST(ProofFile, ParsesJustifications) {
  ProofFile f = parse_proof_file(
      "# comment\n"
      "\n"
      "theory: N\n"
      "1. (all x1 ((x1 + 0) = x1)) ; AX N3\n"
      "2. ((all x1 ((x1 + 0) = x1)) -> ((0 + 0) = 0)) ; K5\n"
      "3. ((0 + 0) = 0) ; MP 1 2\n"
      "4. (all x3 ((0 + 0) = 0)) ; GEN 3 x3\n"
      "5. (0 = 0) ; ?\n");
  EXPECT_EQ(f.theory->name(), "N");
  ASSERT_EQ(f.lines.size(), 5u);
  EXPECT_EQ(f.lines[0].justification, Justification(ByAxiom{"N3"}));
  EXPECT_EQ(f.lines[1].justification, Justification(ByScheme{SchemeId::K5}));
  EXPECT_EQ(f.lines[2].justification, Justification(ByModusPonens{1, 2}));
  EXPECT_EQ(f.lines[3].justification, Justification(ByGeneralization{3, 3}));
  EXPECT_EQ(f.lines[4].justification, Justification(Unjustified{}));
}

TEST(ProofFile, DeclaredAxiomsBuildExtension) {
  ProofFile f = parse_proof_file(
      "axiom E: (all x1 (x1 = x1))\n"
      "theory: Nstar\n"
      "1. (all x1 (x1 = x1)) ; AX E\n");
  EXPECT_EQ(f.theory->name(), "Nstar");
  EXPECT_EQ(f.theory->parent()->name(), "N");
  EXPECT_TRUE(check_proof(Proof(f.theory, f.lines)).accepted);

  ProofFile k = parse_proof_file("axiom E: (0 = 0)\ntheory: T extends K\n1. (0 = 0) ; AX E\n");
  EXPECT_EQ(k.theory->parent()->name(), "K");
  EXPECT_FALSE(k.theory->has_scheme(SchemeId::N7));
}

TEST(ProofFile, Errors) {
  auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_proof_file(text);
    } catch (const ProofFileError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("1. (0 = 0) ; ?\n"), 1u);
  EXPECT_EQ(line_of("theory: K\n1. (0 = 0) ; ?\n3. (0 = 0) ; ?\n"), 3u);
  EXPECT_EQ(line_of("theory: K\n1. (0 = 0) ; K9\n"), 2u);
  EXPECT_EQ(line_of("theory: K\n1. (0 = ) ; K1\n"), 2u);
  EXPECT_EQ(line_of("theory: K\n1. (0 = 0)\n"), 2u);
  EXPECT_EQ(line_of("theory: K\n1. (0 = 0) ; GEN 1 y2\n"), 2u);
  EXPECT_EQ(line_of("theory: K\ntheory: N\n"), 2u);
  EXPECT_EQ(line_of("theory: K\n1. (0 = 0) ; ?\naxiom E: (0 = 0)\n"), 3u);
  EXPECT_NE(line_of("axiom E: (0 = 0)\ntheory: N\n1. (0 = 0) ; AX E\n"), 0u);
  EXPECT_NE(line_of("axiom E: (x1 = 0)\ntheory: T\n1. (0 = 0) ; ?\n"), 0u);
  EXPECT_NE(line_of("theory: T extends Q\n1. (0 = 0) ; ?\n"), 0u);
  EXPECT_NE(line_of("theory: K\n"), 0u);
}

TEST(ProofFile, FormatRoundTrip) {
  const char* text =
      "axiom E: (all x1 (x1 = x1))\n"
      "theory: Nstar extends N\n"
      "1. (all x1 (x1 = x1)) ; AX E\n"
      "2. ((all x1 (x1 = x1)) -> (S(0) = S(0))) ; K5\n"
      "3. (S(0) = S(0)) ; MP 1 2\n";
  ProofFile f = parse_proof_file(text);
  EXPECT_EQ(format_proof(*f.theory, f.lines), text);
}

TEST(ProofFile, Fixtures) {
  ProofFile refl = load_proof_file(fixture("imp_refl.proof"));
  EXPECT_TRUE(check_proof(Proof(refl.theory, refl.lines)).accepted);

  ProofFile bare = load_proof_file(fixture("imp_refl_bare.proof"));
  Discovery d = discover(bare.theory, bare.lines);
  ASSERT_TRUE(d.ok());
  for (std::size_t i = 0; i < refl.lines.size(); ++i) {
    EXPECT_EQ(d.annotated[i].wff, refl.lines[i].wff);
    EXPECT_EQ(d.annotated[i].justification, refl.lines[i].justification);
  }

  ProofFile plus = load_proof_file(fixture("plus_zero.proof"));
  EXPECT_TRUE(check_proof(Proof(plus.theory, plus.lines)).accepted);

  ProofFile star = load_proof_file(fixture("nstar.proof"));
  Discovery ds = discover(star.theory, star.lines);
  ASSERT_TRUE(ds.ok());
  EXPECT_TRUE(check_proof(*ds.proof).accepted);

  ProofFile broken = load_proof_file(fixture("broken.proof"));
  EXPECT_EQ(check_proof(Proof(broken.theory, broken.lines)).first_failure(), 2u);
  EXPECT_THROW(load_proof_file(fixture("missing.proof")), std::runtime_error);
}
