#include "braidsep/representation.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace braidsep {

namespace {

constexpr Complex kExcludedA[] = {{-1.0, 0.0}, {0.0, 0.0}, {2.0, 0.0},
                                  {0.5, 0.0}};

double eq_scale(const Mat3& t1, const Mat3& t2, const Mat3& t3,
                const Mat3& t4) {
  return std::max(
      {1.0, max_abs(t1), max_abs(t2), max_abs(t3), max_abs(t4)});
}

// A^2 B - BCB - ABD + BD^2, relative to the largest term.
double equation1_residual(const BlockQuad& q) {
  const Mat3 t1 = q.A * q.A * q.B;
  const Mat3 t2 = q.B * q.C * q.B;
  const Mat3 t3 = q.A * q.B * q.D;
  const Mat3 t4 = q.B * q.D * q.D;
  return max_abs(t1 - t2 - t3 + t4) / eq_scale(t1, t2, t3, t4);
}

// CA^2 - DCA - CBC + D^2 C, relative to the largest term.
double equation2_residual(const BlockQuad& q) {
  const Mat3 t1 = q.C * q.A * q.A;
  const Mat3 t2 = q.D * q.C * q.A;
  const Mat3 t3 = q.C * q.B * q.C;
  const Mat3 t4 = q.D * q.D * q.C;
  return max_abs(t1 - t2 - t3 + t4) / eq_scale(t1, t2, t3, t4);
}

double inverse_residual(const Mat6& m, const Mat6& minv) {
  const double scale = std::max(1.0, max_abs(m) * max_abs(minv));
  return max_abs_diff(m * minv, Mat6::identity()) / scale;
}

}  // namespace

std::string to_string(Provenance::Kind kind) {
  switch (kind) {
    case Provenance::Kind::family:
      return "family";
    case Provenance::Kind::blocks:
      return "blocks";
    case Provenance::Kind::lambda:
      return "lambda";
    case Provenance::Kind::builtin:
      return "builtin";
  }
  return "blocks";
}

RepParams family_params(int condition, int branch, Complex a, Complex f) {
  if (condition < 1 || condition > 5)
    throw ParamError("condition must be in 1..5, got " +
                     std::to_string(condition));
  if (branch != 1 && branch != -1)
    throw ParamError("branch must be +1 or -1, got " + std::to_string(branch));
  for (const Complex& excluded : kExcludedA)
    if (std::abs(a - excluded) <= kExcludedATol)
      throw ParamError("a = " + format_complex(a) +
                       " is excluded (a may not be -1, 0, 2 or 1/2)");
  const bool f_free = condition == 1 || condition == 3;
  if (f_free && std::abs(f) <= kZeroFTol)
    throw ParamError("f must be nonzero for condition " +
                     std::to_string(condition));

  RepParams p;
  p.condition = condition;
  p.branch = branch;
  p.a = a;
  p.f = f_free ? f : 1.0 + a;
  const Complex ia3 = Complex(0.0, 1.0) * a * kSqrt3;
  const double s = branch;
  switch (condition) {
    case 1:
      p.d = 1.0 + 2.0 * a;
      p.g = -1.0 + s * ia3;
      break;
    case 2:
      p.d = 1.0 + 2.0 * a;
      p.g = 3.0 * a - 1.0;
      break;
    case 3:  // d and g carry opposite imaginary signs
      p.d = 1.0 - a + s * ia3;
      p.g = -1.0 - s * ia3;
      break;
    case 4:  // d and g carry the same imaginary sign
      p.d = 1.0 - a + s * ia3;
      p.g = -1.0 + s * ia3;
      break;
    case 5:
      p.d = 1.0 - a + s * ia3;
      p.g = 3.0 * a - 1.0;
      break;
  }
  return p;
}

Mat3 solve_C(const Mat3& A, const Mat3& B, const Mat3& D) {
  const Mat3 bi = inverse(B);
  return bi * A * A - bi * A * B * D * bi + D * D * bi;
}

Rep make_block_rep(const BlockQuad& q, double tol, Provenance provenance) {
  const double r1 = equation1_residual(q);
  if (r1 > tol) throw NotARepresentationError("equation (1)", r1);
  const double r2 = equation2_residual(q);
  if (r2 > tol) throw NotARepresentationError("equation (2)", r2);

  Rep rep;
  rep.sigma1_ = block_compose(q.A, q.B, q.C, q.D, +1);
  rep.sigma2_ = block_compose(q.A, q.B, q.C, q.D, -1);
  try {
    rep.sigma1_inv_ = inverse(rep.sigma1_);
    rep.sigma2_inv_ = inverse(rep.sigma2_);
  } catch (const SingularMatrixError& e) {
    throw NotARepresentationError(std::string("image is singular: ") +
                                  e.what());
  }
  for (const auto& [m, minv] :
       {std::pair{&rep.sigma1_, &rep.sigma1_inv_},
        std::pair{&rep.sigma2_, &rep.sigma2_inv_}}) {
    const double ri = inverse_residual(*m, *minv);
    if (ri > kInverseResidualTol)
      throw NotARepresentationError("image inverse", ri);
  }
  rep.relation_residual_ = braid_relation_residual(rep.sigma1_, rep.sigma2_);
  if (rep.relation_residual_ > tol)
    throw NotARepresentationError("braid relation", rep.relation_residual_);
  rep.provenance_ = std::move(provenance);
  return rep;
}

Mat3 family_block_A(Complex a, Complex d, Complex f, Complex g) {
  Mat3 m;
  m(0, 0) = a;
  m(0, 1) = a - 2.0;
  m(0, 2) = a - 2.0;
  m(1, 0) = 1.0 - 2.0 * a;
  m(1, 1) = d;
  m(1, 2) = 1.0 - 2.0 * a;
  m(2, 0) = f;
  m(2, 1) = f;
  m(2, 2) = g;
  return m;
}

Mat3 family_block_B(Complex a, Complex f) {
  Mat3 m;
  m(0, 0) = a - 2.0;
  m(0, 1) = 2.0 - a;
  m(0, 2) = 2.0 - a;
  m(1, 0) = 2.0 * a - 1.0;
  m(1, 1) = 1.0 - 2.0 * a;
  m(1, 2) = 2.0 * a - 1.0;
  m(2, 0) = -f;
  m(2, 1) = -f;
  m(2, 2) = f;
  return m;
}

Mat3 family_block_D(Complex a) {
  Mat3 m;
  m(0, 0) = 3.0 - a;
  m(0, 1) = 3.0 * a - 3.0;
  m(0, 2) = -a - 1.0;
  m(1, 0) = 2.0 - a;
  m(1, 1) = 3.0 * a - 2.0;
  m(1, 2) = -3.0 * a;
  m(2, 0) = 3.0;
  m(2, 1) = 2.0 * a - 1.0;
  m(2, 2) = -2.0 * a - 1.0;
  return m;
}

BlockQuad family_blocks(const RepParams& p) {
  BlockQuad q;
  q.A = family_block_A(p.a, p.d, p.f, p.g);
  q.B = family_block_B(p.a, p.f);
  q.D = family_block_D(p.a);
  q.C = solve_C(q.A, q.B, q.D);
  return q;
}

Rep family_rep(const RepParams& p) {
  Provenance provenance;
  provenance.kind = Provenance::Kind::family;
  provenance.params = p;
  return make_block_rep(family_blocks(p), kRepTol, std::move(provenance));
}

Rep lambda_rep(const Mat3& A, const Mat3& B, Complex lambda) {
  if (std::abs(lambda) <= kZeroFTol)
    throw ParamError("lambda must be nonzero");
  const Mat3 shifted = A - lambda * Mat3::identity();
  const double scale = max_abs(shifted);
  if (std::abs(determinant(shifted)) < kSingularRelTol * std::pow(scale, 3) ||
      scale == 0.0)
    throw ParamError("lambda = " + format_complex(lambda) +
                     " is numerically an eigenvalue of A");
  const Mat3 bi = inverse(B);
  BlockQuad q;
  q.A = A;
  q.B = B;
  q.C = bi * A * A - lambda * (bi * A) + (lambda * lambda) * bi;
  q.D = lambda * Mat3::identity();
  Provenance provenance;
  provenance.kind = Provenance::Kind::lambda;
  provenance.lambda = lambda;
  return make_block_rep(q, kRepTol, std::move(provenance));
}

namespace {

// c0 + c1 * p with p the primitive third root of unity.
Complex pz(int c0, int c1) {
  return Complex(c0, 0.0) + Complex(c1, 0.0) * kPrimitiveThirdRoot;
}

Mat6 le_bruyn_sigma1() {
  const Complex rows[6][6] = {
      {pz(1, 1), pz(-1, 1), pz(-1, 1), pz(-1, 1), pz(1, -1), pz(1, -1)},
      {pz(-1, -2), pz(-1, 0), pz(-1, -2), pz(1, 2), pz(-1, -2), pz(1, 2)},
      {pz(2, 1), pz(2, 1), pz(0, -1), pz(-2, -1), pz(-2, -1), pz(2, 1)},
      {pz(-2, -1), pz(0, -3), pz(2, 1), pz(2, -1), pz(0, 3), pz(-2, -1)},
      {pz(-1, 1), pz(1, -1), pz(3, 3), pz(1, -1), pz(1, 3), pz(-3, -3)},
      {pz(-3, 0), pz(-1, -2), pz(1, 2), pz(3, 0), pz(1, 2), pz(-3, -2)}};
  Mat6 m;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = rows[i][j];
  return m;
}

Mat6 le_bruyn_sigma2() {
  const Complex rows[6][6] = {
      {pz(1, 1), pz(-1, 1), pz(-1, 1), pz(1, -1), pz(-1, 1), pz(-1, 1)},
      {pz(-1, -2), pz(-1, 0), pz(-1, -2), pz(-1, -2), pz(1, 2), pz(-1, -2)},
      {pz(2, 1), pz(2, 1), pz(0, -1), pz(2, 1), pz(2, 1), pz(-2, -1)},
      {pz(2, 1), pz(0, 3), pz(-2, -1), pz(2, -1), pz(0, 3), pz(-2, -1)},
      {pz(1, -1), pz(-1, 1), pz(-3, -3), pz(1, -1), pz(1, 3), pz(-3, -3)},
      {pz(3, 0), pz(1, 2), pz(-1, -2), pz(3, 0), pz(1, 2), pz(-3, -2)}};
  Mat6 m;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = rows[i][j];
  return m;
}

}  // namespace

Rep le_bruyn_rep() {
  const Mat6 sigma1 = le_bruyn_sigma1();
  const auto [A, B, C, D] = block_split(sigma1);
  Provenance provenance;
  provenance.kind = Provenance::Kind::builtin;
  Rep rep = make_block_rep({A, B, C, D}, kRepTol, std::move(provenance));
  // tripwire against transcription slips in the literal entries
  if (max_abs_diff(rep.sigma2(), le_bruyn_sigma2()) > 1e-14)
    throw Error("internal",
                "builtin sigma2 disagrees with its block structure");
  return rep;
}

double braid_relation_residual(const Mat6& sigma1, const Mat6& sigma2) {
  const Mat6 lhs = sigma1 * sigma2 * sigma1;
  const Mat6 rhs = sigma2 * sigma1 * sigma2;
  const double scale = std::max({1.0, max_abs(lhs), max_abs(rhs)});
  return max_abs_diff(lhs, rhs) / scale;
}

double verify_braid_relation(const Rep& r) {
  return braid_relation_residual(r.sigma1(), r.sigma2());
}

Mat6 evaluate(const Rep& r, const BraidWord& w) {
  Mat6 result = Mat6::identity();
  for (const Syllable& s : w.syllables()) {
    const bool negative = s.exponent < 0;
    const Mat6& base = s.generator == 1
                           ? (negative ? r.sigma1_inv() : r.sigma1())
                           : (negative ? r.sigma2_inv() : r.sigma2());
    const long long count = negative ? -static_cast<long long>(s.exponent)
                                     : static_cast<long long>(s.exponent);
    result = result * power(base, count);
  }
  return result;
}

}  // namespace braidsep
