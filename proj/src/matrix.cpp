#include "braidsep/matrix.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>

namespace braidsep {

Mat6 block_compose(const Mat3& A, const Mat3& B, const Mat3& C, const Mat3& D,
                   int off_diagonal_sign) {
  if (off_diagonal_sign != 1 && off_diagonal_sign != -1)
    throw ParamError("block sign must be +1 or -1");
  const double s = off_diagonal_sign;
  Mat6 m;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      m(i, j) = A(i, j);
      m(i, j + 3) = s * B(i, j);
      m(i + 3, j) = s * C(i, j);
      m(i + 3, j + 3) = D(i, j);
    }
  }
  return m;
}

std::array<Mat3, 4> block_split(const Mat6& m) {
  std::array<Mat3, 4> blocks;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      blocks[0](i, j) = m(i, j);
      blocks[1](i, j) = m(i, j + 3);
      blocks[2](i, j) = m(i + 3, j);
      blocks[3](i, j) = m(i + 3, j + 3);
    }
  }
  return blocks;
}

namespace {

// Parses one signed term of a complex literal starting at `pos`. Returns the
// coefficient and whether the term carried the trailing 'i'.
struct Term {
  double value = 0.0;
  bool imaginary = false;
};

Term parse_term(std::string_view text, std::size_t& pos) {
  const std::size_t start = pos;
  double sign = 1.0;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') sign = -1.0;
    ++pos;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-'))
      throw ParseError(pos, "doubled sign in complex literal");
  }
  // bare "i" with elided coefficient
  if (pos < text.size() && text[pos] == 'i') {
    ++pos;
    return {sign, true};
  }
  double value = 0.0;
  const auto [ptr, ec] =
      std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data() + pos)
    throw ParseError(start, "expected a number in complex literal");
  if (!std::isfinite(value))
    throw ParseError(start, "non-finite component in complex literal");
  pos = static_cast<std::size_t>(ptr - text.data());
  bool imaginary = false;
  if (pos < text.size() && text[pos] == 'i') {
    imaginary = true;
    ++pos;
  }
  return {sign * value, imaginary};
}

}  // namespace

Complex parse_complex(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty complex literal");
  std::size_t pos = 0;
  const Term first = parse_term(text, pos);
  if (pos == text.size())
    return first.imaginary ? Complex(0.0, first.value)
                           : Complex(first.value, 0.0);
  if (first.imaginary)
    throw ParseError(pos, "imaginary part must come last in complex literal");
  if (text[pos] != '+' && text[pos] != '-')
    throw ParseError(pos, "expected '+' or '-' before imaginary part");
  const std::size_t second_start = pos;
  const Term second = parse_term(text, pos);
  if (!second.imaginary)
    throw ParseError(second_start, "second term must end with 'i'");
  if (pos != text.size())
    throw ParseError(pos, "trailing characters in complex literal");
  return Complex(first.value, second.value);
}

std::string format_complex(Complex z, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", precision, z.real());
  std::string out = buf;
  std::snprintf(buf, sizeof(buf), "%+.*g", precision, z.imag());
  out += buf;
  out += 'i';
  return out;
}

}  // namespace braidsep
