#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidsep/braid.hpp"
#include "braidsep/representation.hpp"

namespace braidsep {

// Default relative tolerance for separation verdicts: far above accumulated
// rounding, far below every reference gap.
inline constexpr double kDefaultSeparationTol = 1e-6;

struct KnotEntry {
  std::string name;
  int crossings = 0;
  BraidWord word;
  std::vector<BraidWord> aliases;
};

// Tr rho(w) - Tr rho(w') with w' the reversed word.
Complex trace_gap(const Rep& r, const BraidWord& w);

// True iff |trace gap| > rel_tol * max(|Tr rho(w)|, |Tr rho(w')|, 1).
// A true verdict certifies that w and w' lie in distinct conjugacy classes,
// since the trace is a class function.
bool separates(const Rep& r, const BraidWord& w,
               double rel_tol = kDefaultSeparationTol);

// The embedded knot catalog (nine 3-braid knots). Parsed once.
const std::vector<KnotEntry>& catalog();

// Catalog from a JSON file: array of {"name", "crossings", "word",
// "aliases"}. Throws CatalogError on malformed data.
std::vector<KnotEntry> load_catalog(const std::string& path);
std::vector<KnotEntry> catalog_from_json(const std::string& json_text);

const KnotEntry* lookup(std::span<const KnotEntry> entries,
                        std::string_view name);

// One component of a reference value, with its printed precision.
struct RefComponent {
  double value = 0.0;
  int sig_digits = 0;
  bool scientific = false;  // printed in scientific notation
};

struct RefCell {
  RefComponent re, im;
  const char* printed = "";  // the value as printed in the reference
};

// A reference row records the braid representative its published values were
// computed from; for 8_17 this differs from the catalog word (the reference
// table's printed word does not reproduce its own published row, the
// two alias words do).
struct PublishedRow {
  const char* knot = "";
  const char* word = "";
  std::array<RefCell, 3> cells;
};

struct PublishedReference {
  std::array<RepParams, 3> columns;
  std::vector<PublishedRow> rows;
  const PublishedRow* row(std::string_view knot) const;
};

// The bundled reference gap table: three parameter columns, nine knots.
const PublishedReference& published_reference();
std::vector<RepParams> published_param_sets();

// Printed-precision match: the computed value, quantized at the reference's
// last printed digit, must land within one unit in that digit.
bool matches_printed(double computed, const RefComponent& ref);
bool matches_printed(Complex computed, const RefCell& cell);

struct GapResult {
  std::string knot;
  RepParams params;
  std::string word;  // formatted representative the gap was computed from
  Complex gap;
  bool separated = false;
  double tolerance_used = kDefaultSeparationTol;
  std::optional<bool> matches_reference;
};

struct GapTable {
  std::vector<GapResult> rows;  // knot-major, then column order
  bool has_reference = false;
  bool all_match() const;
  int match_count() const;
  int reference_count() const;
};

// Gap of every catalog knot under every parameter set. With a reference
// attached, rows gain match verdicts at the printed precision and are
// computed from the reference's representative word.
GapTable reproduce_table(std::span<const RepParams> param_sets,
                         std::span<const KnotEntry> knots,
                         const PublishedReference* reference = nullptr,
                         double rel_tol = kDefaultSeparationTol);

struct ComplexBox {
  double re_min = -4.0, re_max = 4.0;
  double im_min = -4.0, im_max = 4.0;
};

// Independent rectangles for the a and f draws; a degenerate rectangle pins
// the value.
struct SearchBox {
  ComplexBox a;
  ComplexBox f;
};

struct SearchHit {
  RepParams params;
  Complex gap;
  double score = 0.0;  // |gap| / max(|Tr rho(w)|, |Tr rho(w')|, 1)
};

// Draws `draws` parameter samples uniformly from the box (rejecting a-values
// within 0.05 of the excluded set), keeps those whose representation
// separates w from its reverse, sorted by score descending. Deterministic
// given the seed. An empty result is a valid outcome.
std::vector<SearchHit> search_separating_params(
    const BraidWord& w, int condition, int branch, const SearchBox& box,
    int draws, std::uint64_t seed, double rel_tol = kDefaultSeparationTol);

// Max over random conjugators g (up to 8 syllables) of
// |Tr rho(g w g^-1) - Tr rho(w)| relative to the largest magnitude involved.
double conjugation_invariance_check(const Rep& r, const BraidWord& w,
                                    int trials, std::uint64_t seed);

}  // namespace braidsep
