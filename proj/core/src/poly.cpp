#include "pfmsf/poly.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <set>
#include <sstream>

#include "pfmsf/errors.hpp"

namespace pfmsf {

namespace {

enum Group : std::uint64_t { kLam = 0, kX = 1, kGenerator = 2, kOther = 3 };

constexpr std::uint64_t kIndexLimit = 1u << 20;

std::uint64_t pack(std::uint64_t group, std::uint64_t cls, std::uint64_t kind, std::uint64_t i, std::uint64_t j) {
  return group << 56 | cls << 48 | kind << 40 | i << 20 | j;
}

void check_index(int i) {
  if (i < 1 || static_cast<std::uint64_t>(i) >= kIndexLimit) throw DomainError("indeterminate index out of range");
}

// Generator kinds in PBW order within a class.
constexpr std::uint64_t kKindC = 0, kKindA = 1, kKindB = 2;

std::uint64_t generator_class(std::uint64_t kind, int i, int j) {
  if (kind == kKindC) return 0;
  if (kind == kKindB) return 2;
  return i > j ? 0 : (i == j ? 1 : 2);
}

const std::string* intern(std::string_view name) {
  static std::mutex mutex;
  static std::set<std::string, std::less<>> pool;
  std::lock_guard lock(mutex);
  auto it = pool.find(name);
  if (it == pool.end()) it = pool.emplace(name).first;
  return &*it;
}

// Splits "head[i,j]" into head and indices; false when the spelling is not of
// that shape.
bool split_indexed(std::string_view name, std::string_view& head, std::vector<int>& indices) {
  const auto open = name.find('[');
  if (open == std::string_view::npos || name.back() != ']') return false;
  head = name.substr(0, open);
  std::string_view body = name.substr(open + 1, name.size() - open - 2);
  indices.clear();
  while (true) {
    const auto comma = body.find(',');
    std::string_view piece = body.substr(0, comma);
    if (piece.empty() || piece.size() > 7) return false;
    int value = 0;
    for (char ch : piece) {
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
      value = value * 10 + (ch - '0');
    }
    if (value < 1 || static_cast<std::uint64_t>(value) >= kIndexLimit) return false;
    indices.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return true;
}

}  // namespace

Var Var::named(std::string_view name) {
  std::string_view head;
  std::vector<int> idx;
  if (split_indexed(name, head, idx)) {
    if (head == "lam" && idx.size() == 1) return lam(idx[0]);
    if (idx.size() == 2) {
      if (head == "a") return a(idx[0], idx[1]);
      if (head == "b") return b(idx[0], idx[1]);
      if (head == "c") return c(idx[0], idx[1]);
      if (head == "x") return x(idx[0], idx[1]);
    }
  }
  if (name.empty()) throw ParseError("empty indeterminate name", 1);
  return Var(pack(kOther, 0, 0, 0, 0), intern(name));
}

Var Var::a(int i, int j) {
  check_index(i);
  check_index(j);
  return Var(pack(kGenerator, generator_class(kKindA, i, j), kKindA, i, j), nullptr);
}

Var Var::b(int i, int j) {
  check_index(i);
  check_index(j);
  return Var(pack(kGenerator, generator_class(kKindB, i, j), kKindB, i, j), nullptr);
}

Var Var::c(int i, int j) {
  check_index(i);
  check_index(j);
  return Var(pack(kGenerator, generator_class(kKindC, i, j), kKindC, i, j), nullptr);
}

Var Var::x(int i, int j) {
  check_index(i);
  check_index(j);
  return Var(pack(kX, 0, 0, i, j), nullptr);
}

Var Var::lam(int i) {
  check_index(i);
  return Var(pack(kLam, 0, 0, i, 0), nullptr);
}

std::string Var::name() const {
  const std::uint64_t group = key_ >> 56;
  const std::uint64_t kind = (key_ >> 40) & 0xff;
  const std::uint64_t i = (key_ >> 20) & (kIndexLimit - 1);
  const std::uint64_t j = key_ & (kIndexLimit - 1);
  switch (group) {
    case kLam:
      return "lam[" + std::to_string(i) + "]";
    case kX:
      return "x[" + std::to_string(i) + "," + std::to_string(j) + "]";
    case kGenerator: {
      const char* head = kind == kKindC ? "c" : (kind == kKindA ? "a" : "b");
      return std::string(head) + "[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    default:
      return *other_;
  }
}

std::strong_ordering operator<=>(const Var& lhs, const Var& rhs) {
  if (auto c = lhs.key_ <=> rhs.key_; c != 0) return c;
  if (lhs.other_ == rhs.other_) return std::strong_ordering::equal;
  return *lhs.other_ <=> *rhs.other_;
}

unsigned degree(const Monomial& m) {
  unsigned d = 0;
  for (const auto& [v, e] : m) d += e;
  return d;
}

Monomial multiply(const Monomial& lhs, const Monomial& rhs) {
  Monomial out;
  out.reserve(lhs.size() + rhs.size());
  auto i = lhs.begin();
  auto j = rhs.begin();
  while (i != lhs.end() && j != rhs.end()) {
    if (i->first < j->first) {
      out.push_back(*i++);
    } else if (j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), i, lhs.end());
  out.insert(out.end(), j, rhs.end());
  return out;
}

bool MonomialOrder::operator()(const Monomial& lhs, const Monomial& rhs) const {
  const unsigned dl = degree(lhs);
  const unsigned dr = degree(rhs);
  if (dl != dr) return dl > dr;
  auto i = lhs.rbegin();
  auto j = rhs.rbegin();
  while (i != lhs.rend() && j != rhs.rend()) {
    if (i->first == j->first) {
      if (i->second != j->second) return i->second < j->second;
      ++i;
      ++j;
    } else {
      return j->first > i->first;
    }
  }
  return false;
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.emplace(Monomial{}, constant);
}

MultiPoly::MultiPoly(const Var& v) { terms_.emplace(Monomial{{v, 1u}}, Rational(1)); }

MultiPoly::MultiPoly(const Monomial& m, const Rational& coeff) { add_term(m, coeff); }

void MultiPoly::add_term(const Monomial& m, const Rational& coeff) {
  if (coeff.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool MultiPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational MultiPoly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

unsigned MultiPoly::degree() const { return terms_.empty() ? 0 : pfmsf::degree(terms_.begin()->first); }

std::vector<Var> MultiPoly::variables() const {
  std::set<Var> vars;
  for (const auto& [m, c] : terms_) {
    for (const auto& [v, e] : m) vars.insert(v);
  }
  return {vars.begin(), vars.end()};
}

MultiPoly MultiPoly::homogeneous_part(unsigned deg) const {
  MultiPoly out;
  for (const auto& [m, c] : terms_) {
    if (pfmsf::degree(m) == deg) out.terms_.emplace(m, c);
  }
  return out;
}

Rational MultiPoly::evaluate(const std::map<Var, Rational>& assignment) const {
  std::set<std::string> missing;
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational value = c;
    for (const auto& [v, e] : m) {
      auto it = assignment.find(v);
      if (it == assignment.end()) {
        missing.insert(v.name());
        continue;
      }
      value *= power(it->second, static_cast<int>(e));
    }
    total += value;
  }
  if (!missing.empty()) {
    std::string names;
    for (const auto& name : missing) names += (names.empty() ? "" : ", ") + name;
    throw DomainError("unassigned indeterminates: " + names);
  }
  return total;
}

Rational MultiPoly::evaluate(const std::map<std::string, Rational>& assignment) const {
  std::map<Var, Rational> by_var;
  for (const auto& [name, value] : assignment) by_var.emplace(Var::named(name), value);
  return evaluate(by_var);
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    const Rational magnitude = negative ? -c : c;
    bool need_star = false;
    if (m.empty() || magnitude != Rational(1)) {
      out << magnitude.to_string();
      need_star = true;
    }
    for (const auto& [v, e] : m) {
      if (need_star) out << '*';
      out << v.name();
      if (e != 1) out << '^' << e;
      need_star = true;
    }
  }
  return out.str();
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& lhs, const MultiPoly& rhs) {
  MultiPoly out;
  for (const auto& [ml, cl] : lhs.terms_) {
    for (const auto& [mr, cr] : rhs.terms_) out.add_term(multiply(ml, mr), cl * cr);
  }
  return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) { return *this = *this * rhs; }

MultiPoly& MultiPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MultiPoly parse_all() {
    MultiPoly p = parse_sum();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly parse_sum() {
    MultiPoly total;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    while (true) {
      MultiPoly term = parse_product();
      if (negative) {
        total -= term;
      } else {
        total += term;
      }
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        return total;
      }
    }
  }

  MultiPoly parse_product() {
    MultiPoly p = parse_power();
    while (accept('*')) p *= parse_power();
    return p;
  }

  MultiPoly parse_power() {
    MultiPoly base = parse_atom();
    if (accept('^')) {
      skip_space();
      const std::string digits = take_digits();
      if (digits.empty()) fail("expected exponent");
      MultiPoly result(Rational(1));
      for (int e = std::stoi(digits); e > 0; --e) result *= base;
      return result;
    }
    return base;
  }

  std::string take_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  MultiPoly parse_atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = parse_sum();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      take_digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        if (take_digits().empty()) fail("expected denominator");
      }
      try {
        return MultiPoly(Rational::parse(text_.substr(start, pos_ - start)));
      } catch (const ParseError&) {
        pos_ = start;
        fail("malformed number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      if (pos_ < text_.size() && text_[pos_] == '[') {
        const auto close = text_.find(']', pos_);
        if (close == std::string_view::npos) fail("unterminated index bracket");
        pos_ = close + 1;
      }
      std::string name;
      for (char c : text_.substr(start, pos_ - start)) {
        if (!std::isspace(static_cast<unsigned char>(c))) name.push_back(c);
      }
      return MultiPoly(Var::named(name));
    }
    fail("unexpected character '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly MultiPoly::parse(std::string_view text) { return PolyParser(text).parse_all(); }

}  // namespace pfmsf
