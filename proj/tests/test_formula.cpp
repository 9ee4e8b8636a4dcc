#include <gtest/gtest.h>

#include <random>
#include <set>

#include "ltlbit/corpus.hpp"
#include "ltlbit/errors.hpp"
#include "ltlbit/formula.hpp"
#include "test_util.hpp"

namespace ltlbit {
namespace {

using namespace ltl;

TEST(ParseTest, GrammarExamples) {
  EXPECT_EQ(parse_formula("G (p -> X q)"), globally(implies(atom("p"), next(atom("q")))));
  EXPECT_EQ(parse_formula("a U b U c"), until(atom("a"), until(atom("b"), atom("c"))));
  EXPECT_EQ(parse_formula("!(s0) & s1"), !atom("s0") && atom("s1"));
}

TEST(ParseTest, Precedence) {
  const Formula a = atom("a"), b = atom("b"), c = atom("c"), d = atom("d");
  EXPECT_EQ(parse_formula("a | b & c"), a || (b && c));
  EXPECT_EQ(parse_formula("a & b | c"), (a && b) || c);
  EXPECT_EQ(parse_formula("a & b U c"), a && until(b, c));
  EXPECT_EQ(parse_formula("!a U b"), until(!a, b));
  EXPECT_EQ(parse_formula("X a U G b"), until(next(a), globally(b)));
  EXPECT_EQ(parse_formula("a -> b -> c"), implies(a, implies(b, c)));
  EXPECT_EQ(parse_formula("a | b -> c & d"), implies(a || b, c && d));
  EXPECT_EQ(parse_formula("a & b & c"), (a && b) && c);
  EXPECT_EQ(parse_formula("a | b | c"), (a || b) || c);
  EXPECT_EQ(parse_formula("F G !a"), eventually(globally(!a)));
}

TEST(ParseTest, WhitespaceIsInsignificant) {
  EXPECT_EQ(parse_formula("G(p->X q)"), parse_formula("  G ( p ->\tX q )\n"));
  EXPECT_EQ(parse_formula("Xq"), atom("Xq"));
}

TEST(ParseTest, SyntaxErrorsCarryPosition) {
  auto position_of = [](const char* text) -> std::size_t {
    try {
      parse_formula(text);
    } catch (const FormulaSyntaxError& e) {
      return e.position();
    }
    ADD_FAILURE() << "no error for " << text;
    return 0;
  };
  EXPECT_EQ(position_of("G (p ->"), 7u);
  EXPECT_EQ(position_of(""), 0u);
  EXPECT_EQ(position_of("p q"), 2u);
  EXPECT_EQ(position_of("p & # q"), 4u);
  EXPECT_EQ(position_of("(p"), 2u);
  EXPECT_EQ(position_of("p)"), 1u);
  EXPECT_EQ(position_of("p - q"), 2u);
}

TEST(ParseTest, OperatorLettersAreNotAtoms) {
  EXPECT_THROW(parse_formula("X"), FormulaSyntaxError);
  EXPECT_THROW(parse_formula("U"), FormulaSyntaxError);
  EXPECT_THROW(parse_formula("G & p"), FormulaSyntaxError);
  EXPECT_THROW(atom("F"), Error);
  EXPECT_THROW(atom("1p"), Error);
  EXPECT_THROW(atom(""), Error);
  EXPECT_NO_THROW(atom("_x9"));
}

TEST(RenderTest, RoundTripsRandomFormulas) {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 2000; ++i) {
    const Formula f = testing::random_formula(rng, 1 + rng() % 8, 4);
    const std::string text = render(f);
    ASSERT_EQ(parse_formula(text), f) << text;
  }
}

TEST(RenderTest, CanonicalText) {
  EXPECT_EQ(render(parse_formula("G(p->X q)")), "G (p -> X q)");
  EXPECT_EQ(render(parse_formula("a U b U c")), "a U (b U c)");
  EXPECT_EQ(render(parse_formula("!!a")), "!!a");
}

TEST(MetricsTest, SizeAndDepth) {
  EXPECT_EQ(formula_size(atom("p")), 1u);
  EXPECT_EQ(formula_depth(atom("p")), 0u);
  EXPECT_EQ(formula_size(globally(!atom("s0"))), 2u);
  EXPECT_EQ(formula_depth(next(atom("s0"))), 1u);
  EXPECT_EQ(formula_depth(parse_formula("G(!s1 | G !s0)")), 4u);
  EXPECT_EQ(atoms_of(parse_formula("p U (q & p)")), (std::set<std::string>{"p", "q"}));
}

struct TableRow {
  const char* id;
  std::size_t size;
  std::size_t depth;
};

// "Formula size" and "Formula depth" columns of the published throughput table.
constexpr TableRow kTable[] = {
    {"A1", 1, 1}, {"A2", 1, 1}, {"A3", 1, 1}, {"A4", 1, 1}, {"A5", 1, 1}, {"A6", 1, 1},
    {"A7", 1, 1}, {"D01", 2, 2}, {"D02", 5, 3}, {"D03", 5, 4}, {"D04", 5, 4}, {"D05", 5, 4},
    {"D06", 1, 1}, {"D07", 6, 4}, {"D08", 8, 6}, {"D09", 8, 6}, {"D10", 19, 7}, {"D11", 11, 8},
    {"D14", 1, 1}, {"D15", 4, 3}, {"D16", 4, 3}, {"D17", 7, 5}, {"D18", 4, 3}, {"D19", 2, 2},
    {"D20", 6, 3}, {"D21", 7, 5}, {"D22", 9, 5}, {"D23", 6, 4}, {"D24", 4, 3}, {"D25", 10, 6},
    {"D26", 7, 5}, {"D27", 12, 7}, {"D28", 10, 7}, {"D29", 12, 8}, {"D31", 12, 9}, {"D32", 9, 6},
    {"D33", 11, 7}, {"D34", 12, 8}, {"D37", 10, 7}, {"D38", 11, 8}, {"D39", 7, 6}, {"D40", 9, 7},
    {"D41", 10, 8}, {"D42", 12, 9}, {"S01", 13, 8}, {"S02", 24, 10}, {"S03", 5, 4},
    {"S04", 2, 2}, {"S05", 11, 6}, {"S06", 22, 11}, {"S07", 16, 7}, {"S08", 14, 9},
    {"S09", 14, 9}, {"S10", 14, 8}, {"S11", 4, 3}, {"S12", 20, 11}, {"S13", 8, 5},
};

TEST(CorpusTest, Counts) {
  std::size_t a = 0, d = 0, s = 0;
  std::set<std::string> ids;
  for (const auto& e : corpus()) {
    ids.insert(e.id);
    a += e.id[0] == 'A';
    d += e.id[0] == 'D';
    s += e.id[0] == 'S';
  }
  EXPECT_EQ(corpus().size(), 57u);
  EXPECT_EQ(ids.size(), 57u);
  EXPECT_EQ(a, 7u);
  EXPECT_EQ(d, 37u);
  EXPECT_EQ(s, 13u);
}

TEST(CorpusTest, Lookup) {
  EXPECT_EQ(corpus_lookup("A7")->formula, until(atom("s0"), atom("s1")));
  EXPECT_EQ(corpus_lookup("D19")->formula, until(!atom("s0"), atom("s3")));
  EXPECT_EQ(corpus_lookup("D01")->formula, globally(!atom("s0")));
  EXPECT_FALSE(corpus_lookup("D12").has_value());
}

TEST(CorpusTest, MetricsMatchPublishedTable) {
  for (const auto& row : kTable) {
    const auto entry = corpus_lookup(row.id);
    ASSERT_TRUE(entry) << row.id;
    EXPECT_EQ(formula_size(entry->formula), row.size) << row.id;
    EXPECT_EQ(formula_depth(entry->formula), row.depth) << row.id;
  }
}

TEST(CorpusTest, UsesOnlyTraceVariables) {
  for (const auto& e : corpus()) {
    for (const auto& name : atoms_of(e.formula)) {
      EXPECT_EQ(name[0], 's') << e.id;
      EXPECT_LT(std::stoi(name.substr(1)), 10) << e.id;
    }
  }
}

}  // namespace
}  // namespace ltlbit
