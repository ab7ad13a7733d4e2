#include "braidsep/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace braidsep {

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

std::vector<Syllable> normalize(std::vector<Syllable> syllables) {
  std::vector<Syllable> out;
  out.reserve(syllables.size());
  for (const Syllable& s : syllables) {
    if (s.exponent == 0) continue;
    if (!out.empty() && out.back().generator == s.generator) {
      out.back().exponent += s.exponent;
      if (out.back().exponent == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

BraidWord::BraidWord(std::vector<Syllable> syllables) {
  for (const Syllable& s : syllables)
    if (s.generator != 1 && s.generator != 2)
      throw ParamError("generator index must be 1 or 2, got " +
                       std::to_string(s.generator));
  syllables_ = normalize(std::move(syllables));
}

int BraidWord::exponent_sum() const noexcept {
  int sum = 0;
  for (const Syllable& s : syllables_) sum += s.exponent;
  return sum;
}

BraidWord parse_word(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto skip_ws = [&] {
    while (i < n && is_space(text[i])) ++i;
  };

  skip_ws();
  if (i == n) return BraidWord{};  // empty input is the identity
  if (text[i] == 'e') {
    std::size_t j = i + 1;
    while (j < n && is_space(text[j])) ++j;
    if (j != n)
      throw ParseError(i + 1, "identity word 'e' admits no further syllables");
    return BraidWord{};
  }

  std::vector<Syllable> syllables;
  while (i < n) {
    // generator: "s1", "s2", or the Unicode aliases
    if (text[i] == 's') {
      ++i;
    } else if (text.substr(i, 2) == "\xcf\x83") {  // UTF-8 sigma
      i += 2;
    } else {
      throw ParseError(i, "expected generator 's1' or 's2'");
    }
    if (i == n || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError(i, "expected generator index after 's'");
    const char idx = text[i];
    if (idx != '1' && idx != '2')
      throw ParseError(i, std::string("generator index '") + idx +
                              "' outside {1, 2}");
    ++i;
    const int generator = idx == '1' ? 1 : 2;

    int exponent = 1;
    if (i < n && text[i] == '^') {
      ++i;
      const std::size_t exp_start = i;
      if (i < n && text[i] == '-') ++i;
      std::size_t digits_end = i;
      while (digits_end < n &&
             std::isdigit(static_cast<unsigned char>(text[digits_end])))
        ++digits_end;
      if (digits_end == i)
        throw ParseError(exp_start, "expected integer exponent after '^'");
      const auto [ptr, ec] = std::from_chars(
          text.data() + exp_start, text.data() + digits_end, exponent);
      if (ec != std::errc() || ptr != text.data() + digits_end)
        throw ParseError(exp_start, "exponent out of range");
      if (exponent == 0) throw ParseError(exp_start, "zero exponent literal");
      i = digits_end;
    }

    if (i < n && !is_space(text[i]))
      throw ParseError(i, std::string("unexpected character '") + text[i] +
                              "' in syllable");
    syllables.push_back({generator, exponent});
    skip_ws();
  }
  return BraidWord(std::move(syllables));
}

std::string format_word(const BraidWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Syllable& s : w.syllables()) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += static_cast<char>('0' + s.generator);
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

BraidWord reverse(const BraidWord& w) {
  std::vector<Syllable> syllables(w.syllables().rbegin(),
                                  w.syllables().rend());
  return BraidWord(std::move(syllables));
}

BraidWord invert(const BraidWord& w) {
  std::vector<Syllable> syllables;
  syllables.reserve(w.size());
  for (auto it = w.syllables().rbegin(); it != w.syllables().rend(); ++it)
    syllables.push_back({it->generator, -it->exponent});
  return BraidWord(std::move(syllables));
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  std::vector<Syllable> syllables = u.syllables();
  syllables.insert(syllables.end(), v.syllables().begin(),
                   v.syllables().end());
  return BraidWord(std::move(syllables));
}

BraidWord conjugate(const BraidWord& w, const BraidWord& g) {
  return concat(concat(g, w), invert(g));
}

BraidWord cyclic_rotate(const BraidWord& w, long long k) {
  if (w.empty()) return w;
  const auto n = static_cast<long long>(w.size());
  const auto shift = static_cast<std::size_t>(((k % n) + n) % n);
  std::vector<Syllable> syllables = w.syllables();
  std::rotate(syllables.begin(), syllables.begin() + shift, syllables.end());
  return BraidWord(std::move(syllables));
}

std::optional<FlypeForm> as_flype_form(const BraidWord& w) {
  const auto& s = w.syllables();
  if (s.size() != 4) return std::nullopt;
  if (s[0].generator != 1 || s[1].generator != 2 || s[2].generator != 1 ||
      s[3].generator != 2)
    return std::nullopt;
  if (s[3].exponent != 1 && s[3].exponent != -1) return std::nullopt;
  return FlypeForm{s[0].exponent, s[1].exponent, s[2].exponent,
                   s[3].exponent};
}

BraidWord random_word(SplitMix64& rng, int max_syllables, int max_exponent) {
  const int count = rng.uniform_int(0, max_syllables);
  std::vector<Syllable> syllables;
  syllables.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int generator = rng.uniform_int(1, 2);
    int exponent = rng.uniform_int(1, max_exponent);
    if (rng.next() & 1ull) exponent = -exponent;
    syllables.push_back({generator, exponent});
  }
  return BraidWord(std::move(syllables));
}

}  // namespace braidsep
