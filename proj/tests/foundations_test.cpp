#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "pfmsf/errors.hpp"
#include "pfmsf/index_set.hpp"
#include "pfmsf/poly.hpp"
#include "pfmsf/rational.hpp"

using namespace pfmsf;

namespace {

// Reference fraction in 64-bit integers, reduced with std::gcd.
struct Frac {
  long long num, den;
  Frac(long long n, long long d) {
    if (d < 0) n = -n, d = -d;
    const long long g = std::gcd(n, d);
    num = n / g;
    den = d / g;
  }
  std::string str() const { return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den); }
};

int brute_sign(const std::vector<int>& seq) {
  int inv = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) ++inv;
  return inv % 2 ? -1 : 1;
}

MultiPoly random_poly(std::mt19937_64& rng) {
  static const char* names[] = {"a[1,1]", "b[1,2]", "x[2,3]", "lam[1]", "t"};
  std::uniform_int_distribution<int> coeff(-4, 4), pick(0, 4), exp(0, 2), count(0, 4);
  MultiPoly p;
  for (int t = count(rng); t > 0; --t) {
    MultiPoly term(Rational(coeff(rng)));
    for (int k = 0; k < 2; ++k)
      for (int e = exp(rng); e > 0; --e) term *= MultiPoly(Var::named(names[pick(rng)]));
    p += term;
  }
  return p;
}

}  // namespace

TEST(Rational, LowestTermsAndUniqueZero) {
  EXPECT_EQ(Rational(6, -4).to_string(), "-3/2");
  EXPECT_EQ(Rational(0, 7).to_string(), "0");
  EXPECT_EQ(Rational(0, -3), Rational(0));
  EXPECT_EQ(Rational(-3, 2).denominator(), "2");
  EXPECT_THROW(Rational(1, 0), DomainError);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse("-12/18"), Rational(-2, 3));
  EXPECT_EQ(Rational::parse("+5"), Rational(5));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("x"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational::parse("1/"), ParseError);
}

TEST(Rational, AgreesWithMachineIntegerFractions) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
  for (int trial = 0; trial < 2000; ++trial) {
    const long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    const Rational x(a, b), y(c, d);
    EXPECT_EQ((x + y).to_string(), Frac(a * d + c * b, b * d).str());
    EXPECT_EQ((x - y).to_string(), Frac(a * d - c * b, b * d).str());
    EXPECT_EQ((x * y).to_string(), Frac(a * c, b * d).str());
    if (c != 0) EXPECT_EQ((x / y).to_string(), Frac(a * d, b * c).str());
    EXPECT_EQ(x < y, a * d < c * b);
  }
}

TEST(Rational, FactorialAndPower) {
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(6), Rational(720));
  EXPECT_EQ(power(Rational(2, 3), 3), Rational(8, 27));
  EXPECT_EQ(power(Rational(2), -2), Rational(1, 4));
  EXPECT_EQ(factorial(25).to_string(), "15511210043330985984000000");
}

TEST(MultiPoly, PrintsIntroExpression) {
  const MultiPoly p = MultiPoly::parse("c[1,2]*b[1,2] - a[2,1]*a[1,2] + a[1,1]*a[2,2]");
  EXPECT_EQ(p.to_string(), "a[1,1]*a[2,2] - a[2,1]*a[1,2] + c[1,2]*b[1,2]");
}

TEST(MultiPoly, ParsePrintRoundTrip) {
  for (const char* text : {"0", "3/4", "-x[1,2]^3 + 2*lam[1]", "(lam[1]+2)*(lam[2]+1)", "a[1,1]*a[1,1] - 1/2*t^2"}) {
    const MultiPoly p = MultiPoly::parse(text);
    EXPECT_EQ(MultiPoly::parse(p.to_string()), p) << text;
  }
  EXPECT_EQ(MultiPoly::parse("(lam[1]+2)*(lam[2]+1)").to_string(), "lam[1]*lam[2] + lam[1] + 2*lam[2] + 2");
}

TEST(MultiPoly, ParseErrorsCarryColumn) {
  try {
    MultiPoly::parse("a[1,1] + * b");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.column(), 10u);
  }
  EXPECT_THROW(MultiPoly::parse("(a"), ParseError);
  EXPECT_THROW(MultiPoly::parse("a[1,"), ParseError);
}

TEST(MultiPoly, Evaluate) {
  const MultiPoly p = MultiPoly::parse("a[1,1]*a[2,2] - a[2,1]*a[1,2] + c[1,2]*b[1,2]");
  std::map<std::string, Rational> values{{"a[1,1]", 2}, {"a[2,2]", 3}, {"a[2,1]", 1}, {"a[1,2]", 5}, {"c[1,2]", Rational(1, 2)},
                                         {"b[1,2]", 4}};
  EXPECT_EQ(p.evaluate(values), Rational(3));
  values.erase("b[1,2]");
  try {
    p.evaluate(values);
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("b[1,2]"), std::string::npos);
  }
}

TEST(MultiPoly, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const MultiPoly x = random_poly(rng), y = random_poly(rng), z = random_poly(rng);
    EXPECT_EQ(x + y, y + x);
    EXPECT_EQ(x * y, y * x);
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_TRUE((x - x).is_zero());
    const MultiPoly product = x * y;
    for (const auto& [m, c] : product.terms()) EXPECT_FALSE(c.is_zero());
  }
}

TEST(MultiPoly, EvaluationIsAHomomorphism) {
  std::mt19937_64 rng(5);
  const std::map<std::string, Rational> at{{"a[1,1]", 3}, {"b[1,2]", Rational(-1, 2)}, {"x[2,3]", 2}, {"lam[1]", 7}, {"t", -1}};
  for (int trial = 0; trial < 100; ++trial) {
    const MultiPoly x = random_poly(rng), y = random_poly(rng);
    EXPECT_EQ((x * y).evaluate(at), x.evaluate(at) * y.evaluate(at));
    EXPECT_EQ((x + y).evaluate(at), x.evaluate(at) + y.evaluate(at));
  }
}

TEST(MultiPoly, HomogeneousPart) {
  const MultiPoly p = MultiPoly::parse("a[1,1]*a[2,2] + a[2,2] + 3");
  EXPECT_EQ(p.homogeneous_part(2), MultiPoly::parse("a[1,1]*a[2,2]"));
  EXPECT_EQ(p.homogeneous_part(0), MultiPoly(Rational(3)));
  EXPECT_EQ(p.degree(), 2u);
}

TEST(SplitSign, Examples) {
  EXPECT_EQ(split_sign({1, 2, 3}, {2}, {1, 3}), -1);
  EXPECT_EQ(split_sign({1, 2, 3}, {1, 2, 3}, {}), 1);
  EXPECT_EQ(split_sign({1, 2, 3, 4}, {2, 4}, {1, 3}), -1);
  EXPECT_THROW(split_sign({1, 2, 3}, {1, 2}, {2, 3}), DomainError);
  EXPECT_THROW(split_sign({1, 2, 3}, {1}, {2}), DomainError);
}

TEST(SplitSign, ComplementSignExamples) {
  EXPECT_EQ(complement_sign({}, IndexSet::range(1, 4)), 1);
  EXPECT_EQ(complement_sign({1, 2}, {1, 2}), 1);
  EXPECT_EQ(complement_sign({1, 3}, {1, 2, 3, 4}), -1);
  EXPECT_THROW(complement_sign({5}, IndexSet::range(1, 4)), DomainError);
}

TEST(SplitSign, ExhaustiveAgainstBruteForce) {
  for (int k = 0; k <= 6; ++k) {
    const IndexSet whole = IndexSet::range(1, k);
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> first, second;
      for (int i = 1; i <= k; ++i) ((mask >> (i - 1)) & 1 ? first : second).push_back(i);
      std::vector<int> seq = first;
      seq.insert(seq.end(), second.begin(), second.end());
      const IndexSet i_set(first), j_set(second);
      const int forward = split_sign(whole, i_set, j_set);
      EXPECT_EQ(forward, brute_sign(seq));
      const int parity = (first.size() * second.size()) % 2 ? -1 : 1;
      EXPECT_EQ(forward * split_sign(whole, j_set, i_set), parity);
    }
  }
}

TEST(SplitSign, MultiplicativeUnderRefinement) {
  // K = I u J u L: sgn(K; I, J u L) sgn(J u L; J, L) = sgn of (I, J, L).
  const IndexSet whole = IndexSet::range(1, 6);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> part(0, 2);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<int> parts[3];
    for (int i = 1; i <= 6; ++i) parts[part(rng)].push_back(i);
    const IndexSet i_set(parts[0]), j_set(parts[1]), l_set(parts[2]);
    std::vector<int> seq = parts[0];
    seq.insert(seq.end(), parts[1].begin(), parts[1].end());
    seq.insert(seq.end(), parts[2].begin(), parts[2].end());
    EXPECT_EQ(split_sign(whole, i_set, j_set.united(l_set)) * split_sign(j_set.united(l_set), j_set, l_set), brute_sign(seq));
  }
}

TEST(IndexSet, Basics) {
  EXPECT_THROW(IndexSet({2, 1}), DomainError);
  EXPECT_THROW(IndexSet({1, 1}), DomainError);
  const IndexSet u = IndexSet::range(1, 5);
  EXPECT_EQ(IndexSet({2, 4}).complement(u), IndexSet({1, 3, 5}));
  EXPECT_THROW(IndexSet({7}).complement(u), DomainError);
  EXPECT_EQ(subsets_of_size(u, 2).size(), 10u);
  EXPECT_EQ(subsets_of_size(u, 2).front(), IndexSet({1, 2}));
  EXPECT_EQ(subsets_of_size(u, 0).size(), 1u);
}

TEST(SignedIndex, PositionIsABijection) {
  for (int n = 1; n <= 5; ++n) {
    std::vector<bool> seen(static_cast<std::size_t>(2 * n + 1), false);
    for (int v = -n; v <= n; ++v) {
      if (v == 0) continue;
      const SignedIndex s(v, n);
      EXPECT_FALSE(seen[static_cast<std::size_t>(s.position())]);
      seen[static_cast<std::size_t>(s.position())] = true;
      EXPECT_EQ(SignedIndex::from_position(s.position(), n), s);
      EXPECT_EQ(s.negated().position(), 2 * n + 1 - s.position());
    }
  }
  EXPECT_EQ(SignedIndex(-1, 3).position(), 6);
  EXPECT_THROW(SignedIndex(0, 2), DomainError);
  EXPECT_THROW(SignedIndex(3, 2), DomainError);
}
