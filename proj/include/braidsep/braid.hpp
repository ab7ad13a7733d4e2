#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidsep/errors.hpp"
#include "braidsep/rng.hpp"

namespace braidsep {

// One maximal run sigma_g^e of a braid word. The exponent is never zero in a
// normalized word.
struct Syllable {
  int generator = 1;  // 1 or 2
  int exponent = 1;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

// A word in the braid group on three strands, stored in normalized form:
// adjacent syllables use different generators and no exponent is zero. The
// empty word is the identity braid. Immutable value type.
class BraidWord {
 public:
  BraidWord() = default;

  // Normalizes the raw syllable list (merges adjacent same-generator runs,
  // drops zero exponents). Throws ParamError on a generator outside {1, 2}.
  explicit BraidWord(std::vector<Syllable> syllables);

  const std::vector<Syllable>& syllables() const noexcept {
    return syllables_;
  }
  bool empty() const noexcept { return syllables_.empty(); }
  std::size_t size() const noexcept { return syllables_.size(); }
  int exponent_sum() const noexcept;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  std::vector<Syllable> syllables_;
};

// sigma_1^a sigma_2^b sigma_1^c sigma_2^epsilon with epsilon = +-1.
struct FlypeForm {
  int a = 0;
  int b = 0;
  int c = 0;
  int epsilon = 1;
  friend bool operator==(const FlypeForm&, const FlypeForm&) = default;
};

// Merges adjacent same-generator syllables and drops zero exponents until
// neither applies; idempotent. Performs no braid-relation rewriting.
std::vector<Syllable> normalize(std::vector<Syllable> syllables);

// Grammar:  word := "e" | syllable { WS syllable }
//           syllable := gen [ "^" int ]
//           gen := "s1" | "s2" | "σ1" | "σ2"
//           int := ["-"] digit+   (nonzero)
// The empty string also parses to the identity. Result is normalized.
BraidWord parse_word(std::string_view text);

// Canonical text form; parse_word(format_word(w)) == w. The identity braid
// renders as "e"; exponent 1 is elided.
std::string format_word(const BraidWord& w);

// Reverses the syllable order, keeping exponents.
BraidWord reverse(const BraidWord& w);

// Group inverse: reversed order, negated exponents.
BraidWord invert(const BraidWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);

// g w g^-1, normalized.
BraidWord conjugate(const BraidWord& w, const BraidWord& g);

// Rotates the syllable list left by k (mod size); the result is conjugate to
// w. Rotation works at syllable granularity.
BraidWord cyclic_rotate(const BraidWord& w, long long k);

// Succeeds exactly on normalized words with syllable pattern
// (1,a)(2,b)(1,c)(2,+-1). Purely syntactic; no conjugacy search.
std::optional<FlypeForm> as_flype_form(const BraidWord& w);

// Random normalized word with up to max_syllables syllables and exponents in
// [-max_exponent, max_exponent] \ {0}.
BraidWord random_word(SplitMix64& rng, int max_syllables, int max_exponent);

}  // namespace braidsep
