#include <gtest/gtest.h>

#include "hyclif/expr.hpp"
#include "hyclif/random.hpp"
#include "hyclif/text.hpp"

using namespace hyclif;

namespace {

std::string printed(std::string_view src, int n = 2) { return print(*parse(src, n)); }

Multivecfor ev(std::string_view src, int n = 2) { return evaluate(src, AlgebraContext::make(n)); }

TEST(Parser, WedgeTree) {
  const ExprPtr e = parse("e1^t1", 1);
  ASSERT_EQ(e->kind, Expr::Kind::wedge);
  EXPECT_EQ(e->args[0]->kind, Expr::Kind::e);
  EXPECT_EQ(e->args[1]->kind, Expr::Kind::t);
  EXPECT_EQ(e->args[1]->index, 1);
}

TEST(Parser, Precedence) {
  EXPECT_EQ(printed("e1 + t1 * e2"), "(e1 + (t1 * e2))");
  EXPECT_EQ(printed("e1 ^ t1 * e2"), "((e1 ^ t1) * e2)");
  EXPECT_EQ(printed("e1 _| t1 ^ e2"), "(e1 _| (t1 ^ e2))");
  EXPECT_EQ(printed("e1 * t1 _| e2"), "(e1 * (t1 _| e2))");
  EXPECT_EQ(printed("e1 _| t1 |_ e2"), "((e1 _| t1) |_ e2)");
  EXPECT_EQ(printed("-e1 ^ t1"), "(-(e1) ^ t1)");
  EXPECT_EQ(printed("~!e1"), "~(!(e1))");
  EXPECT_EQ(printed("!!sigma - !c e1"), "(!!(sigma) - !c(e1))");
  EXPECT_EQ(printed("e1 - t1 - e2"), "((e1 - t1) - e2)");
  EXPECT_EQ(printed("'e1"), "'(e1)");
}

TEST(Parser, CoefficientJuxtaposition) {
  EXPECT_EQ(printed("2t1"), "(2 * t1)");
  EXPECT_EQ(printed("1/2 e2"), "(1/2 * e2)");
  EXPECT_EQ(printed("3 r2 e1"), "((3 * r2) * e1)");
  EXPECT_EQ(printed("(1/2+3/4 r2) e1"), "((1/2 + (3/4 * r2)) * e1)");
}

TEST(Parser, PrintParsesBack) {
  for (const char* src : {"e1 + t1 * e2 ^ s3", "grade(e1 + e1^t2, 2)", "ip(e1, t1) * even(e1 + sigma)",
                          "-(e1 _| t1) |_ ~e2", "dual(idual(e1^e2))", "odd(!c(e1 - 2 e2))"}) {
    const ExprPtr a = parse(src, 2);
    const ExprPtr b = parse(print(*a), 2);
    EXPECT_EQ(*a, *b) << src;
  }
}

TEST(Parser, CanonicalOutputParsesBack) {
  Rng rng(15);
  for (int n = 1; n <= 3; ++n) {
    const auto ctx = AlgebraContext::make(n);
    for (int i = 0; i < 100; ++i) {
      const auto u = random_multivecfor(rng, ctx);
      ASSERT_EQ(evaluate(to_string(u), ctx), u) << to_string(u);
    }
  }
}

TEST(Parser, Errors) {
  auto code_at = [](std::string_view src, Errc code, int line, int col) {
    try {
      (void)parse(src, 2);
      ADD_FAILURE() << "no error for " << src;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.code(), code) << src << ": " << e.what();
      EXPECT_EQ(e.line(), line) << src;
      EXPECT_EQ(e.column(), col) << src;
    }
  };
  code_at("e3", Errc::out_of_range, 1, 1);
  code_at("e1 + s5", Errc::out_of_range, 1, 6);
  code_at("(e1 + t1", Errc::parse, 1, 9);
  code_at("e1 + t1)", Errc::parse, 1, 8);
  code_at("1.5 e1", Errc::parse, 1, 2);
  code_at("e1 e2", Errc::parse, 1, 4);
  code_at("foo", Errc::unknown_name, 1, 1);
  code_at("e1 +\n  $", Errc::parse, 2, 3);
  code_at("grade(e1)", Errc::parse, 1, 9);
  code_at("grade(e1, 1/2)", Errc::parse, 1, 11);
  code_at("ip", Errc::parse, 1, 1);
  code_at("", Errc::parse, 1, 1);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(to_string(ev("t1*e1 + e1*t1", 1)), "2");
  EXPECT_EQ(to_string(ev("sigma*sigma")), "1");
  EXPECT_EQ(to_string(ev("!sigma", 2)), "1");
  EXPECT_EQ(to_string(ev("!sigma", 1)), "-1");
  EXPECT_EQ(to_string(ev("ip(e1^t1, e1^t1)")), "-1");
  EXPECT_EQ(to_string(ev("!!sigma", 3)), "1");
  EXPECT_EQ(to_string(ev("s1*s1 + s3*s3")), "0");
  EXPECT_EQ(to_string(ev("grade(1 + e1 + e1^t1, 2)")), "e1^t1");
  EXPECT_EQ(to_string(ev("!c e1 + ~(e1^t1)")), "-e1 - e1^t1");
  EXPECT_EQ(ev("dual(e1)", 1), ev("-e1", 1));
}

TEST(Evaluate, Variables) {
  const auto ctx = AlgebraContext::make(1);
  Environment env{{"x", evaluate("e1 + 2t1", ctx)}};
  EXPECT_EQ(to_string(evaluate("x*x", ctx, env)), "4");
  EXPECT_THROW(evaluate("y", ctx, env), ParseError);
  EXPECT_TRUE(is_reserved_name("e7"));
  EXPECT_TRUE(is_reserved_name("sigma"));
  EXPECT_TRUE(is_reserved_name("ip"));
  EXPECT_FALSE(is_reserved_name("psi"));
  EXPECT_FALSE(is_identifier("a_b"));
}

}  // namespace
