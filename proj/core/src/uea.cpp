#include "pfmsf/uea.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <sstream>
#include <tuple>
#include <unordered_map>

#include "pfmsf/errors.hpp"

namespace pfmsf {

namespace {

constexpr int kMaxIndex = 255;

std::uint32_t pack(GeneratorClass cls, GeneratorKind kind, int i, int j) {
  return static_cast<std::uint32_t>(cls) << 24 | static_cast<std::uint32_t>(kind) << 16 |
         static_cast<std::uint32_t>(i) << 8 | static_cast<std::uint32_t>(j);
}

void check_range(int i, int j) {
  if (i < 1 || j < 1 || i > kMaxIndex || j > kMaxIndex) {
    throw DomainError("generator index (" + std::to_string(i) + "," + std::to_string(j) + ") out of range");
  }
}

unsigned inversions(const PBWMonomial& w) {
  unsigned count = 0;
  for (std::size_t p = 0; p < w.size(); ++p)
    for (std::size_t q = p + 1; q < w.size(); ++q)
      if (w[q] < w[p]) ++count;
  return count;
}

using BracketTerms = std::vector<std::pair<Generator, int>>;

BracketTerms compute_bracket(Generator g, Generator h) {
  const auto [i, j] = g.signed_indices();
  const auto [k, l] = h.signed_indices();
  std::map<Generator, int> acc;
  auto add = [&acc](int sign, int r, int s) {
    if (auto e = canonical_entry(r, s)) acc[e->generator] += sign * e->sign;
  };
  if (j == k) add(1, i, l);
  if (i == l) add(1, -j, -k);
  if (j == -l) add(-1, i, -k);
  if (i == -k) add(-1, -j, l);
  BracketTerms out;
  for (const auto& [gen, coeff] : acc)
    if (coeff != 0) out.emplace_back(gen, coeff);
  return out;
}

const BracketTerms& bracket_terms(Generator g, Generator h) {
  thread_local std::unordered_map<std::uint64_t, BracketTerms> cache;
  const std::uint64_t key = static_cast<std::uint64_t>(g.key()) << 32 | h.key();
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, compute_bracket(g, h)).first;
  return it->second;
}

// Rewrites words into the PBW basis. Pending words are processed in
// decreasing (length, inversion count); each rewrite replaces a word by one
// of the same length with one inversion fewer and by words one letter
// shorter, so the loop terminates and every word is expanded only after all
// of its producers have been merged into it.
class Straightener {
 public:
  void push(PBWMonomial word, const Rational& coeff) {
    if (coeff.is_zero()) return;
    const auto length = static_cast<unsigned>(word.size());
    const unsigned inv = inversions(word);
    Key key{length, inv, std::move(word)};
    auto [it, inserted] = pending_.try_emplace(std::move(key), coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) pending_.erase(it);
    }
  }

  UEAElement run() {
    UEAElement result;
    while (!pending_.empty()) {
      auto node = pending_.extract(pending_.begin());
      const Key& key = node.key();
      const Rational& coeff = node.mapped();
      if (key.inversions == 0) {
        result.add_term(key.word, coeff);
        continue;
      }
      const PBWMonomial& w = key.word;
      std::size_t k = 0;
      while (!(w[k + 1] < w[k])) ++k;

      PBWMonomial swapped = w;
      std::swap(swapped[k], swapped[k + 1]);
      assert(inversions(swapped) + 1 == key.inversions);
      push(std::move(swapped), coeff);

      for (const auto& [gen, c] : bracket_terms(w[k], w[k + 1])) {
        PBWMonomial shorter;
        shorter.reserve(w.size() - 1);
        shorter.insert(shorter.end(), w.begin(), w.begin() + static_cast<long>(k));
        shorter.push_back(gen);
        shorter.insert(shorter.end(), w.begin() + static_cast<long>(k) + 2, w.end());
        assert(shorter.size() < w.size());
        push(std::move(shorter), coeff * Rational(c));
      }
    }
    return result;
  }

 private:
  struct Key {
    unsigned length;
    unsigned inversions;
    PBWMonomial word;
  };
  struct Descending {
    bool operator()(const Key& x, const Key& y) const {
      return std::tie(y.length, y.inversions, y.word) < std::tie(x.length, x.inversions, x.word);
    }
  };
  std::map<Key, Rational, Descending> pending_;
};

std::string factor_list(const PBWMonomial& m, const char* separator, bool always_exponent) {
  std::string out;
  for (std::size_t k = 0; k < m.size();) {
    std::size_t run = k;
    while (run < m.size() && m[run] == m[k]) ++run;
    if (!out.empty()) out += separator;
    out += m[k].name();
    if (always_exponent || run - k > 1) out += "^" + std::to_string(run - k);
    k = run;
  }
  return out;
}

}  // namespace

Generator Generator::a(int i, int j) {
  check_range(i, j);
  const GeneratorClass cls = i > j ? GeneratorClass::kLowering : (i == j ? GeneratorClass::kCartan : GeneratorClass::kRaising);
  return Generator(pack(cls, GeneratorKind::kA, i, j));
}

Generator Generator::b(int i, int j) {
  check_range(i, j);
  if (i >= j) throw DomainError("b[i,j] requires i < j");
  return Generator(pack(GeneratorClass::kRaising, GeneratorKind::kB, i, j));
}

Generator Generator::c(int i, int j) {
  check_range(i, j);
  if (i >= j) throw DomainError("c[i,j] requires i < j");
  return Generator(pack(GeneratorClass::kLowering, GeneratorKind::kC, i, j));
}

std::pair<int, int> Generator::signed_indices() const {
  switch (kind()) {
    case GeneratorKind::kA:
      return {row(), col()};
    case GeneratorKind::kB:
      return {row(), -col()};
    case GeneratorKind::kC:
      return {-col(), row()};
  }
  return {0, 0};
}

std::string Generator::name() const { return as_variable().name(); }

Var Generator::as_variable() const {
  switch (kind()) {
    case GeneratorKind::kA:
      return Var::a(row(), col());
    case GeneratorKind::kB:
      return Var::b(row(), col());
    case GeneratorKind::kC:
      return Var::c(row(), col());
  }
  return Var::a(row(), col());
}

std::vector<Generator> canonical_basis(int n) {
  std::vector<Generator> basis;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      basis.push_back(Generator::a(i, j));
      if (i < j) {
        basis.push_back(Generator::b(i, j));
        basis.push_back(Generator::c(i, j));
      }
    }
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::optional<SignedGenerator> canonical_entry(int i, int j) {
  if (i == 0 || j == 0) throw DomainError("signed index 0");
  if (i == -j) return std::nullopt;
  if (i > 0 && j > 0) return SignedGenerator{1, Generator::a(i, j)};
  if (i > 0) {
    const int m = -j;
    return i < m ? SignedGenerator{1, Generator::b(i, m)} : SignedGenerator{-1, Generator::b(m, i)};
  }
  if (j > 0) {
    const int m = -i;  // X_{-m,j} = c_{j,m}
    return j < m ? SignedGenerator{1, Generator::c(j, m)} : SignedGenerator{-1, Generator::c(m, j)};
  }
  return SignedGenerator{-1, Generator::a(-j, -i)};
}

bool PBWOrder::operator()(const PBWMonomial& lhs, const PBWMonomial& rhs) const {
  if (lhs.size() != rhs.size()) return lhs.size() > rhs.size();
  for (std::size_t k = lhs.size(); k-- > 0;) {
    if (lhs[k] != rhs[k]) return lhs[k] < rhs[k];
  }
  return false;
}

UEAElement::UEAElement(const Rational& scalar) { add_term({}, scalar); }

UEAElement::UEAElement(Generator g) { add_term({g}, Rational(1)); }

UEAElement UEAElement::from_word(std::span<const Generator> word, const Rational& coeff) {
  Straightener s;
  s.push(PBWMonomial(word.begin(), word.end()), coeff);
  return s.run();
}

void UEAElement::add_term(const PBWMonomial& m, const Rational& coeff) {
  if (coeff.is_zero()) return;
  assert(std::is_sorted(m.begin(), m.end()));
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

unsigned UEAElement::degree() const { return terms_.empty() ? 0 : static_cast<unsigned>(terms_.begin()->first.size()); }

Rational UEAElement::coefficient(const PBWMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string UEAElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += c.to_string();
    if (!m.empty()) out += " * " + factor_list(m, " ", true);
  }
  return out;
}

std::string UEAElement::to_pretty_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational magnitude = negative ? -c : c;
    if (m.empty()) {
      out += magnitude.to_string();
    } else {
      if (magnitude != Rational(1)) out += magnitude.to_string() + "*";
      out += factor_list(m, "*", false);
    }
  }
  return out;
}

UEAElement& UEAElement::operator+=(const UEAElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

UEAElement& UEAElement::operator-=(const UEAElement& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

UEAElement& UEAElement::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

UEAElement operator*(const UEAElement& lhs, const UEAElement& rhs) {
  Straightener s;
  for (const auto& [ml, cl] : lhs.terms_)
    for (const auto& [mr, cr] : rhs.terms_) {
      PBWMonomial word = ml;
      word.insert(word.end(), mr.begin(), mr.end());
      s.push(std::move(word), cl * cr);
    }
  return s.run();
}

namespace {

class UeaParser {
 public:
  explicit UeaParser(std::string_view text) : text_(text) {}

  UEAElement parse() {
    UEAElement total;
    skip();
    if (done()) fail("empty element");
    while (true) {
      total += parse_term();
      skip();
      if (done()) return total;
      if (text_[pos_] != '+') fail("expected '+'");
      ++pos_;
    }
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }
  bool done() const { return pos_ >= text_.size(); }
  void skip() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  int parse_int() {
    const std::size_t start = pos_;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  UEAElement parse_term() {
    skip();
    Rational coeff(1);
    bool have_coeff = false;
    if (!done() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
      const std::size_t start = pos_;
      if (text_[pos_] == '-') ++pos_;
      while (!done() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
      try {
        coeff = Rational::parse(text_.substr(start, pos_ - start));
      } catch (const ParseError&) {
        pos_ = start;
        fail("malformed coefficient");
      }
      have_coeff = true;
      skip();
      if (!done() && text_[pos_] == '*') {
        ++pos_;
      } else {
        return UEAElement(coeff);
      }
    }
    UEAElement product(coeff);
    bool any_factor = false;
    while (true) {
      skip();
      if (done() || text_[pos_] == '+') break;
      product = product * parse_factor();
      any_factor = true;
    }
    if (!any_factor && have_coeff) fail("expected a generator after '*'");
    if (!any_factor) fail("expected a term");
    return product;
  }

  UEAElement parse_factor() {
    const char kind = text_[pos_];
    if (kind != 'a' && kind != 'b' && kind != 'c') fail("expected generator a[i,j], b[i,j] or c[i,j]");
    ++pos_;
    if (done() || text_[pos_] != '[') fail("expected '['");
    ++pos_;
    const int i = parse_int();
    if (done() || text_[pos_] != ',') fail("expected ','");
    ++pos_;
    const int j = parse_int();
    if (done() || text_[pos_] != ']') fail("expected ']'");
    ++pos_;
    int exponent = 1;
    if (!done() && text_[pos_] == '^') {
      ++pos_;
      exponent = parse_int();
    }
    UEAElement g;
    if (kind == 'a') {
      g = UEAElement(Generator::a(i, j));
    } else if (i != j) {
      const Generator gen = kind == 'b' ? Generator::b(std::min(i, j), std::max(i, j))
                                        : Generator::c(std::min(i, j), std::max(i, j));
      g = UEAElement(gen) * Rational(i < j ? 1 : -1);
    }
    UEAElement out(Rational(1));
    for (int e = 0; e < exponent; ++e) out = out * g;
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

UEAElement UEAElement::parse(std::string_view text) { return UeaParser(text).parse(); }

UEAElement generator(int i, int j, int n) {
  SignedIndex(i, n);
  SignedIndex(j, n);
  const auto e = canonical_entry(i, j);
  if (!e) return UEAElement();
  return UEAElement(e->generator) * Rational(e->sign);
}

UEAElement bracket(Generator g, Generator h) {
  UEAElement out;
  for (const auto& [gen, c] : bracket_terms(g, h)) out.add_term({gen}, Rational(c));
  return out;
}

UEAElement normal_order(std::span<const Generator> word) { return UEAElement::from_word(word); }

UEAElement commutator(const UEAElement& x, const UEAElement& y) { return x * y - y * x; }

CanonicalX build_canonical_x(int n) {
  if (n < 1) throw DomainError("n must be positive");
  const auto size = static_cast<std::size_t>(2 * n);
  CanonicalX x;
  x.n = n;
  x.full = Matrix<UEAElement>(size, size);
  for (int r = 1; r <= 2 * n; ++r)
    for (int c = 1; c <= 2 * n; ++c) {
      const int i = SignedIndex::from_position(r, n).value();
      const int j = SignedIndex::from_position(c, n).value();
      x.full(static_cast<std::size_t>(r - 1), static_cast<std::size_t>(c - 1)) = generator(i, j, n);
    }
  const auto un = static_cast<std::size_t>(n);
  x.a = Matrix<UEAElement>(un, un);
  Matrix<UEAElement> b(un, un), c(un, un);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      x.a(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = generator(i, j, n);
      b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = generator(i, -j, n);
      c(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) = generator(-j, i, n);
    }
  x.b = AlternatingMatrix<UEAElement>(std::move(b));
  x.c = AlternatingMatrix<UEAElement>(std::move(c));
  return x;
}

namespace {

// Entries of M J_{2n}, validated to be alternating.
std::vector<std::vector<UEAElement>> times_j_entries(const Matrix<UEAElement>& m) {
  if (!m.square() || m.rows() % 2 != 0 || m.rows() == 0) throw ShapeError("matrix must be 2n x 2n with n >= 1");
  const std::size_t size = m.rows();
  std::vector<std::vector<UEAElement>> a(size, std::vector<UEAElement>(size));
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) a[i][j] = m(i, size - 1 - j);
  for (std::size_t i = 0; i < size; ++i) {
    if (!a[i][i].is_zero()) throw ShapeError("matrix is not anti-alternating", i + 1, size - i);
    for (std::size_t j = i + 1; j < size; ++j)
      if (!(a[j][i] == -a[i][j])) throw ShapeError("matrix is not anti-alternating", j + 1, size - i);
  }
  return a;
}

using Expansion = std::vector<std::pair<PBWMonomial, Rational>>;

Expansion extend(const Expansion& partial, const UEAElement& factor) {
  Expansion out;
  out.reserve(partial.size() * factor.size());
  for (const auto& [w, c] : partial)
    for (const auto& [m, d] : factor.terms()) {
      PBWMonomial word = w;
      word.insert(word.end(), m.begin(), m.end());
      out.emplace_back(std::move(word), c * d);
    }
  return out;
}

void pair_sequences(const std::vector<std::vector<UEAElement>>& a, std::vector<int>& seq, std::vector<bool>& used,
                    const Expansion& partial, Straightener& sink, bool ordered_pairs) {
  const std::size_t size = a.size();
  if (seq.size() == size) {
    const Rational sign(permutation_sign(seq));
    for (const auto& [w, c] : partial) sink.push(w, c * sign);
    return;
  }
  for (std::size_t x = 0; x < size; ++x) {
    if (used[x]) continue;
    for (std::size_t y = ordered_pairs ? x + 1 : 0; y < size; ++y) {
      if (used[y] || y == x || a[x][y].is_zero()) continue;
      used[x] = used[y] = true;
      seq.push_back(static_cast<int>(x));
      seq.push_back(static_cast<int>(y));
      pair_sequences(a, seq, used, extend(partial, a[x][y]), sink, ordered_pairs);
      seq.resize(seq.size() - 2);
      used[x] = used[y] = false;
    }
  }
}

UEAElement pair_sum(const Matrix<UEAElement>& m, bool ordered_pairs) {
  const auto a = times_j_entries(m);
  std::vector<int> seq;
  std::vector<bool> used(a.size(), false);
  Straightener sink;
  pair_sequences(a, seq, used, Expansion{{PBWMonomial{}, Rational(1)}}, sink, ordered_pairs);
  return sink.run();
}

}  // namespace

UEAElement nc_pfaffian(const Matrix<UEAElement>& m) {
  const int n = static_cast<int>(m.rows() / 2);
  return pair_sum(m, true) * factorial(n).inverse();
}

UEAElement nc_pfaffian_unrestricted(const Matrix<UEAElement>& m) {
  const int n = static_cast<int>(m.rows() / 2);
  return pair_sum(m, false) * (power(Rational(2), n) * factorial(n)).inverse();
}

UEAElement shifted_column_determinant(const Matrix<UEAElement>& a, const IndexSet& rows, const IndexSet& cols,
                                      const Rational& top_shift) {
  if (rows.size() != cols.size()) throw ShapeError("shifted determinant needs a square minor");
  Matrix<UEAElement> minor = a.submatrix(rows, cols);
  for (std::size_t s = 0; s < rows.size(); ++s)
    for (std::size_t t = 0; t < cols.size(); ++t)
      if (rows[s] == cols[t]) minor(s, t) += UEAElement(top_shift - Rational(static_cast<long>(t)));
  return column_determinant(minor);
}

UEAElement nc_msf_rhs(int n) {
  const CanonicalX x = build_canonical_x(n);
  const IndexSet all = IndexSet::range(1, n);
  UEAElement total;
  for (int size = 0; size <= n; size += 2) {
    const auto subsets = subsets_of_size(all, static_cast<std::size_t>(size));
    const int r = n - size;
    for (const auto& i_set : subsets) {
      const UEAElement pf_b = pfaffian(x.b.principal(i_set));
      const IndexSet ibar = i_set.complement(all);
      for (const auto& j_set : subsets) {
        const IndexSet jbar = j_set.complement(all);
        const UEAElement det = shifted_column_determinant(x.a, ibar, jbar, Rational(r - 1));
        const UEAElement pf_c = pfaffian(x.c.principal(j_set));
        const int sign = complement_sign(i_set, all) * complement_sign(j_set, all);
        total += det * pf_c * pf_b * Rational(sign);
      }
    }
  }
  return total;
}

CentralityReport centrality_check(const UEAElement& z, int n) {
  CentralityReport report;
  for (Generator g : canonical_basis(n)) {
    UEAElement c = commutator(UEAElement(g), z);
    if (!c.is_zero()) report.failures.emplace_back(g, std::move(c));
  }
  return report;
}

HighestWeight HighestWeight::numeric(std::vector<Rational> lambda) {
  HighestWeight w;
  w.rank_ = static_cast<int>(lambda.size());
  w.values_ = std::move(lambda);
  return w;
}

HighestWeight HighestWeight::symbolic(int n) {
  if (n < 1) throw DomainError("rank must be positive");
  HighestWeight w;
  w.rank_ = n;
  w.symbolic_ = true;
  return w;
}

MultiPoly HighestWeight::component(int i) const {
  if (i < 1 || i > rank_) throw DomainError("weight component " + std::to_string(i) + " out of range");
  return symbolic_ ? MultiPoly(Var::lam(i)) : MultiPoly(values_[static_cast<std::size_t>(i - 1)]);
}

MultiPoly hc_coefficient(const UEAElement& z, const HighestWeight& weight) {
  MultiPoly total;
  for (const auto& [m, c] : z.terms()) {
    const bool cartan_only = std::all_of(m.begin(), m.end(), [](Generator g) {
      return g.generator_class() == GeneratorClass::kCartan;
    });
    if (!cartan_only) continue;
    MultiPoly value(c);
    for (Generator g : m) value *= weight.component(g.row());
    total += value;
  }
  return total;
}

MultiPoly eigenvalue_product(const HighestWeight& weight, int n) {
  if (weight.rank() != n) {
    throw DomainError("highest weight has " + std::to_string(weight.rank()) + " components, expected " + std::to_string(n));
  }
  MultiPoly product(Rational(1));
  for (int i = 1; i <= n; ++i) product *= weight.component(i) + MultiPoly(Rational(n - i));
  return product;
}

std::string eigenvalue_product_factored(const HighestWeight& weight, int n) {
  if (!weight.is_symbolic()) return eigenvalue_product(weight, n).to_string();
  if (weight.rank() != n) {
    throw DomainError("highest weight has " + std::to_string(weight.rank()) + " components, expected " + std::to_string(n));
  }
  std::string out;
  for (int i = 1; i <= n; ++i) {
    if (!out.empty()) out += "*";
    const std::string name = Var::lam(i).name();
    out += n - i == 0 ? name : "(" + name + "+" + std::to_string(n - i) + ")";
  }
  return out;
}

MultiPoly abelianize(const UEAElement& z) {
  MultiPoly out;
  for (const auto& [m, c] : z.terms()) {
    Monomial mono;
    for (Generator g : m) mono = multiply(mono, Monomial{{g.as_variable(), 1u}});
    out.add_term(mono, c);
  }
  return out;
}

}  // namespace pfmsf
