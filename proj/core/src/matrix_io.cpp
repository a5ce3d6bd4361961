#include "pfmsf/matrix_io.hpp"

#include <charconv>

#include "pfmsf/errors.hpp"

namespace pfmsf {

namespace {

struct Token {
  std::string_view text;
  std::size_t column;
};

struct Line {
  std::size_t number;
  std::string_view text;
  std::vector<Token> tokens;
};

std::vector<Token> split(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t k = 0;
  while (k < text.size()) {
    while (k < text.size() && (text[k] == ' ' || text[k] == '\t' || text[k] == '\r')) ++k;
    const std::size_t start = k;
    while (k < text.size() && text[k] != ' ' && text[k] != '\t' && text[k] != '\r') ++k;
    if (k > start) tokens.push_back({text.substr(start, k - start), start + 1});
  }
  return tokens;
}

class Reader {
 public:
  Reader(std::string_view text, EntryRing ring) : ring_(ring) {
    std::size_t number = 0;
    while (!text.empty()) {
      ++number;
      const std::size_t end = text.find('\n');
      const std::string_view line = text.substr(0, end);
      text = end == std::string_view::npos ? std::string_view() : text.substr(end + 1);
      auto tokens = split(line);
      if (tokens.empty() || tokens.front().text.front() == '#') continue;
      lines_.push_back({number, line, std::move(tokens)});
    }
    last_line_ = number;
  }

  bool done() const { return next_ >= lines_.size(); }

  const Line& peek() const {
    if (done()) throw ParseError("unexpected end of file", last_line_ + 1, 1);
    return lines_[next_];
  }

  const Line& take() {
    const Line& line = peek();
    ++next_;
    return line;
  }

  std::size_t integer(const Line& line, const Token& token) const {
    std::size_t value = 0;
    const char* first = token.text.data();
    const char* last = first + token.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) throw ParseError("expected a nonnegative integer", line.number, token.column);
    return value;
  }

  MultiPoly entry(const Line& line, const Token& token) const {
    try {
      if (ring_ == EntryRing::kRational) return MultiPoly(Rational::parse(token.text));
      return MultiPoly::parse(token.text);
    } catch (const ParseError& e) {
      const std::size_t offset = e.column() == 0 ? 0 : e.column() - 1;
      throw ParseError(e.what(), line.number, token.column + offset);
    }
  }

  std::vector<MultiPoly> row(std::size_t expected) {
    const Line& line = take();
    if (line.tokens.size() != expected) {
      const std::size_t column = line.tokens.size() > expected ? line.tokens[expected].column : line.text.size() + 1;
      throw ParseError("expected " + std::to_string(expected) + " entries, found " + std::to_string(line.tokens.size()),
                       line.number, column);
    }
    std::vector<MultiPoly> out;
    out.reserve(expected);
    for (const Token& t : line.tokens) out.push_back(entry(line, t));
    return out;
  }

  void label(std::string_view name, bool required) {
    if (!done() && peek().tokens.size() == 1 && peek().tokens.front().text == name) {
      take();
      return;
    }
    if (required) {
      const Line& line = peek();
      throw ParseError("expected block label '" + std::string(name) + "'", line.number, line.tokens.front().column);
    }
  }

  void expect_end() const {
    if (!done()) {
      const Line& line = lines_[next_];
      throw ParseError("unexpected trailing content", line.number, line.tokens.front().column);
    }
  }

 private:
  EntryRing ring_;
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t last_line_ = 0;
};

Matrix<MultiPoly> square_block(Reader& reader, std::size_t size) {
  Matrix<MultiPoly> m(size, size);
  for (std::size_t r = 0; r < size; ++r) {
    auto values = reader.row(size);
    for (std::size_t c = 0; c < size; ++c) m(r, c) = std::move(values[c]);
  }
  return m;
}

std::vector<MultiPoly> upper_block(Reader& reader, std::size_t size) {
  std::vector<MultiPoly> upper;
  for (std::size_t i = 1; i < size; ++i) {
    auto values = reader.row(size - i);
    for (auto& v : values) upper.push_back(std::move(v));
  }
  return upper;
}

}  // namespace

MatrixFile parse_matrix_file(std::string_view text, EntryRing ring) {
  Reader reader(text, ring);
  if (reader.done()) throw ParseError("empty matrix file", 1, 1);
  const Line& header = reader.take();
  MatrixFile file;
  const std::string_view keyword = header.tokens.front().text;
  if (keyword == "full" || keyword == "anti") {
    if (header.tokens.size() != 2) throw ParseError("expected '" + std::string(keyword) + " <size>'", header.number, 1);
    const std::size_t size = reader.integer(header, header.tokens[1]);
    if (size % 2 != 0 || size == 0) throw ShapeError("matrix size must be even and positive, got " + std::to_string(size));
    file.layout = keyword == "full" ? MatrixLayout::kAlternating : MatrixLayout::kAntiAlternating;
    file.n = size / 2;
    file.p = file.q = file.n;
    file.a = square_block(reader, size);
    reader.expect_end();
    return file;
  }
  if (header.tokens.size() != 3) throw ParseError("expected header 'n p q', 'full <size>' or 'anti <size>'", header.number, 1);
  file.n = reader.integer(header, header.tokens[0]);
  file.p = reader.integer(header, header.tokens[1]);
  file.q = reader.integer(header, header.tokens[2]);
  if (file.p + file.q != 2 * file.n || file.n == 0) {
    throw ShapeError("header requires p + q = 2n with n >= 1, got n=" + std::to_string(file.n) + " p=" +
                     std::to_string(file.p) + " q=" + std::to_string(file.q));
  }
  reader.label("a", file.p > 0 && file.q > 0);
  file.a = Matrix<MultiPoly>(file.p, file.q);
  for (std::size_t r = 0; r < file.p; ++r) {
    auto values = reader.row(file.q);
    for (std::size_t c = 0; c < file.q; ++c) file.a(r, c) = std::move(values[c]);
  }
  reader.label("b", file.p > 1);
  file.b_upper = upper_block(reader, file.p);
  reader.label("c", file.q > 1);
  file.c_upper = upper_block(reader, file.q);
  reader.expect_end();
  return file;
}

AlternatingMatrix<MultiPoly> alternating_from_file(const MatrixFile& file) {
  switch (file.layout) {
    case MatrixLayout::kAlternating:
      return AlternatingMatrix<MultiPoly>(file.a);
    case MatrixLayout::kAntiAlternating:
      return AntiAlternatingMatrix<MultiPoly>::from_full(file.a, file.n, file.n).times_j();
    case MatrixLayout::kColoured:
      break;
  }
  return AntiAlternatingMatrix<MultiPoly>::from_blocks(file.p, file.q, file.a, file.b_upper, file.c_upper).times_j();
}

AlternatingMatrix<Rational> rational_alternating_from_file(const MatrixFile& file) {
  const AlternatingMatrix<MultiPoly> alternating = alternating_from_file(file);
  const Matrix<MultiPoly>& m = alternating.matrix();
  Matrix<Rational> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_constant()) {
        throw DomainError("entry (" + std::to_string(r + 1) + "," + std::to_string(c + 1) + ") is not a rational number");
      }
      out(r, c) = m(r, c).constant_term();
    }
  return AlternatingMatrix<Rational>(std::move(out));
}

}  // namespace pfmsf
