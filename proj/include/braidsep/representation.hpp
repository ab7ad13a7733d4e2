#pragma once

#include <optional>
#include <string>

#include "braidsep/braid.hpp"
#include "braidsep/matrix.hpp"

namespace braidsep {

// Validation gates at construction time, relative to the largest entry
// magnitude of the matrices involved.
inline constexpr double kRepTol = 1e-9;
inline constexpr double kInverseResidualTol = 1e-10;

// Exclusion tolerances on the family parameters.
inline constexpr double kExcludedATol = 1e-9;
inline constexpr double kZeroFTol = 1e-12;

// sqrt(3) and the primitive third root of unity p = exp(2*pi*i/3), evaluated
// in double precision once and shared.
inline constexpr double kSqrt3 = 1.7320508075688772;
inline constexpr Complex kPrimitiveThirdRoot{-0.5, kSqrt3 / 2.0};

// Parameters of the five-condition representation family. d and g derive
// from (condition, branch, a); f is forced to 1 + a by conditions 2, 4 and 5.
// branch = +1 selects the upper sign / first alternative as printed in the
// classification, -1 the lower / second.
struct RepParams {
  int condition = 3;
  int branch = -1;
  Complex a;
  Complex f;
  Complex d;
  Complex g;
};

// Derives (d, g, effective f) for the chosen condition and branch. Throws
// ParamError when a is within kExcludedATol of {-1, 0, 2, 1/2}, when a free
// f is within kZeroFTol of zero, or on an invalid condition/branch.
RepParams family_params(int condition, int branch, Complex a, Complex f);

// 3x3 blocks of a candidate representation rho(sigma1) = (A B; C D),
// rho(sigma2) = (A -B; -C D).
struct BlockQuad {
  Mat3 A, B, C, D;
};

// How a representation was constructed.
struct Provenance {
  enum class Kind { family, blocks, lambda, builtin };
  Kind kind = Kind::blocks;
  std::optional<RepParams> params;  // kind == family
  std::optional<Complex> lambda;    // kind == lambda
};

std::string to_string(Provenance::Kind kind);

// A validated pair (rho(sigma1), rho(sigma2)) with cached inverses.
// Instances exist only after make_block_rep's full validation succeeded, so
// every Rep satisfies the braid relation and has invertible images.
// Immutable after construction; safe to evaluate concurrently.
class Rep {
 public:
  const Mat6& sigma1() const noexcept { return sigma1_; }
  const Mat6& sigma2() const noexcept { return sigma2_; }
  const Mat6& sigma1_inv() const noexcept { return sigma1_inv_; }
  const Mat6& sigma2_inv() const noexcept { return sigma2_inv_; }
  const Provenance& provenance() const noexcept { return provenance_; }
  double relation_residual() const noexcept { return relation_residual_; }

 private:
  Rep() = default;
  friend Rep make_block_rep(const BlockQuad&, double, Provenance);

  Mat6 sigma1_, sigma2_, sigma1_inv_, sigma2_inv_;
  Provenance provenance_;
  double relation_residual_ = 0.0;
};

// The unique solution of A^2 B - BCB - ABD + BD^2 = 0 for invertible B:
//   C = B^-1 A^2 - B^-1 A B D B^-1 + D^2 B^-1.
// The companion equation CA^2 - DCA - CBC + D^2 C = 0 is NOT implied and
// must be checked separately. Throws SingularMatrixError on singular B.
Mat3 solve_C(const Mat3& A, const Mat3& B, const Mat3& D);

// Validates both block equations and the invertibility of both images,
// assembles rho(sigma1) and rho(sigma2), caches inverses and records the
// braid-relation residual. Throws NotARepresentationError naming the failed
// check.
Rep make_block_rep(const BlockQuad& q, double tol = kRepTol,
                   Provenance provenance = {});

// The explicit A, B, D blocks of the family in terms of the raw parameters.
// No validation; also used to probe degenerate parameter choices.
Mat3 family_block_A(Complex a, Complex d, Complex f, Complex g);
Mat3 family_block_B(Complex a, Complex f);
Mat3 family_block_D(Complex a);

// A, B, D from the explicit family displays, C from solve_C.
BlockQuad family_blocks(const RepParams& p);

// Representation for validated family parameters. Validation failure
// indicates an implementation or parameter error: the classification
// guarantees success on valid parameters.
Rep family_rep(const RepParams& p);

// D = lambda I with lambda not an eigenvalue of A and invertible B; then
//   C = B^-1 A^2 - lambda B^-1 A + lambda^2 B^-1
// and det rho(sigma_i) = -det(A - lambda I)^2.
Rep lambda_rep(const Mat3& A, const Mat3& B, Complex lambda);

// The explicit 6-dimensional representation due to Le Bruyn, entered
// literally with p = exp(2*pi*i/3). Coincides with the condition-3 family at
// a = p + 1, f = p + 2 (upper branch).
Rep le_bruyn_rep();

// ||rho(s1)rho(s2)rho(s1) - rho(s2)rho(s1)rho(s2)||_max relative to the
// largest entry magnitude of either side.
double braid_relation_residual(const Mat6& sigma1, const Mat6& sigma2);
double verify_braid_relation(const Rep& r);

// rho(w): product over syllables of the cached generator powers; the empty
// word maps to the identity.
Mat6 evaluate(const Rep& r, const BraidWord& w);

}  // namespace braidsep
