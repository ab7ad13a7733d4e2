#include <doctest.h>

#include <vector>

#include "braidsep/matrix.hpp"
#include "braidsep/representation.hpp"
#include "test_util.hpp"

using namespace braidsep;
using testutil::rel_err;

namespace {

Mat3 diag3(Complex a, Complex b, Complex c) {
  Mat3 m;
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

}  // namespace

TEST_CASE("product of a list") {
  const Mat6 i6 = Mat6::identity();
  std::vector<Mat6> one = {i6};
  CHECK(max_abs_diff(product<6>(one), i6) == 0.0);

  SplitMix64 rng(3);
  const Mat6 m = testutil::random_mat6(rng);
  std::vector<Mat6> pair = {m, inverse(m)};
  CHECK(max_abs_diff(product<6>(pair), i6) < 1e-12);

  std::vector<Mat3> scaled = {Complex(2.0) * Mat3::identity(),
                              Complex(3.0) * Mat3::identity()};
  CHECK(max_abs_diff(product<3>(scaled), Complex(6.0) * Mat3::identity()) ==
        0.0);

  std::vector<Mat3> empty;
  CHECK_THROWS_AS(product<3>(empty), ParamError);
}

TEST_CASE("inverse on easy cases") {
  CHECK(max_abs_diff(inverse(Mat6::identity()), Mat6::identity()) == 0.0);
  const Mat3 d = diag3(2.0, 4.0, 8.0);
  CHECK(max_abs_diff(inverse(d), diag3(0.5, 0.25, 0.125)) == 0.0);
}

TEST_CASE("inverse of the family block B at a=2-3i, f=7.3") {
  const Mat3 b = family_block_B({2.0, -3.0}, {7.3, 0.0});
  const Mat3 bi = inverse(b);
  CHECK(max_abs_diff(b * bi, Mat3::identity()) <= 1e-12);
  CHECK(max_abs_diff(bi * b, Mat3::identity()) <= 1e-12);
}

TEST_CASE("inverse rejects singular input with diagnostics") {
  Mat3 m;  // zero matrix
  CHECK_THROWS_AS(inverse(m), SingularMatrixError);

  // det B has the factor (a - 2)
  const Mat3 b = family_block_B({2.0, 0.0}, {5.0, 0.0});
  try {
    (void)inverse(b);
    FAIL("expected SingularMatrixError");
  } catch (const SingularMatrixError& e) {
    CHECK(e.det_magnitude() <= e.threshold());
    CHECK(e.code() == "singular");
  }
}

TEST_CASE("determinant identities from the block family") {
  CHECK(determinant(Mat6::identity()) == Complex(1.0));

  // det B = 4 (a-2) (2a-1) f
  const Complex det = determinant(family_block_B({3.0, 0.0}, {2.0, 0.0}));
  CHECK(rel_err(det, Complex(40.0)) < 1e-14);

  const Complex det0 = determinant(family_block_B({2.0, 0.0}, {5.0, 0.0}));
  CHECK(std::abs(det0) < 1e-12);
}

TEST_CASE("trace") {
  CHECK(trace(Mat6::identity()) == Complex(6.0));
  CHECK(trace(diag3({1.0, 1.0}, {2.0, 0.0}, {3.0, -1.0})) == Complex(6.0));
}

TEST_CASE("trace of both family generators agrees (shared diagonal blocks)") {
  const Rep r = family_rep(family_params(3, -1, {2.0, -3.0}, {7.3, 0.0}));
  CHECK(trace(r.sigma1()) == trace(r.sigma2()));
}

TEST_CASE("power") {
  SplitMix64 rng(11);
  const Mat6 m = testutil::random_mat6(rng);
  CHECK(max_abs_diff(power(m, 0), Mat6::identity()) == 0.0);

  const Mat3 d = diag3(2.0, 2.0, 2.0);
  CHECK(max_abs_diff(power(d, 3), diag3(8.0, 8.0, 8.0)) == 0.0);

  // both evaluation orders of a negative power
  const Mat6 lhs = power(m, -2);
  const Mat6 rhs = inverse(m * m);
  CHECK(max_abs_diff(lhs, rhs) <=
        1e-10 * std::max(1.0, max_abs(lhs)));

  Mat3 zero;
  CHECK_THROWS_AS(power(zero, -1), SingularMatrixError);
}

TEST_CASE("power addition law") {
  SplitMix64 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    const Mat6 m = testutil::random_mat6(rng);
    const int a = rng.uniform_int(-8, 8);
    const int b = rng.uniform_int(-8, 8);
    const Mat6 lhs = power(m, a + b);
    const Mat6 rhs = power(m, a) * power(m, b);
    CHECK(max_abs_diff(lhs, rhs) <=
          1e-9 * std::max({1.0, max_abs(lhs), max_abs(rhs)}));
  }
}

TEST_CASE("block_compose and block_split") {
  const Mat3 i3 = Mat3::identity();
  Mat3 zero;
  CHECK(max_abs_diff(block_compose(i3, zero, zero, i3, +1),
                     Mat6::identity()) == 0.0);

  SplitMix64 rng(17);
  const Mat3 a = testutil::random_mat3(rng);
  const Mat3 b = testutil::random_mat3(rng);
  const Mat3 c = testutil::random_mat3(rng);
  const Mat3 d = testutil::random_mat3(rng);

  const Mat6 plus = block_compose(a, b, c, d, +1);
  const Mat6 minus = block_compose(a, b, c, d, -1);
  // the sign hits exactly the off-diagonal blocks
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(minus(i, j) == plus(i, j));
      CHECK(minus(i + 3, j + 3) == plus(i + 3, j + 3));
      CHECK(minus(i, j + 3) == -plus(i, j + 3));
      CHECK(minus(i + 3, j) == -plus(i + 3, j));
    }
  }

  const auto [ra, rb, rc, rd] = block_split(plus);
  CHECK(ra == a);
  CHECK(rb == b);
  CHECK(rc == c);
  CHECK(rd == d);

  CHECK_THROWS_AS(block_compose(a, b, c, d, 2), ParamError);
}

TEST_CASE("max_abs_diff") {
  SplitMix64 rng(19);
  const Mat6 m = testutil::random_mat6(rng);
  CHECK(max_abs_diff(m, m) == 0.0);
  CHECK(max_abs_diff(Mat6::identity(),
                     Complex(2.0) * Mat6::identity()) == 1.0);
}

TEST_CASE("algebraic identities over random matrices") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const Mat6 x = testutil::random_mat6(rng);
    const Mat6 y = testutil::random_mat6(rng);

    CHECK(rel_err(trace(x * y), trace(y * x),
                  std::max(max_abs(x * y), 1.0)) < 1e-10);
    CHECK(rel_err(determinant(x * y), determinant(x) * determinant(y)) <
          1e-9);

    const Mat6 xi = inverse(x);
    const double cond_scale = std::max(1.0, max_abs(x) * max_abs(xi));
    CHECK(max_abs_diff(x * xi, Mat6::identity()) <= 1e-10 * cond_scale);
  }
}

TEST_CASE("parse_complex accepts the reference header forms") {
  CHECK(parse_complex("7.3") == Complex(7.3, 0.0));
  CHECK(parse_complex("2-3i") == Complex(2.0, -3.0));
  CHECK(parse_complex("1.5+i") == Complex(1.5, 1.0));
  CHECK(parse_complex("6-4.2i") == Complex(6.0, -4.2));
  CHECK(parse_complex("10.2+10.3i") == Complex(10.2, 10.3));
  CHECK(parse_complex("i") == Complex(0.0, 1.0));
  CHECK(parse_complex("-i") == Complex(0.0, -1.0));
  CHECK(parse_complex("3i") == Complex(0.0, 3.0));
  CHECK(parse_complex("-2.5e3+1e-2i") == Complex(-2500.0, 0.01));
}

TEST_CASE("parse_complex rejects malformed and non-finite input") {
  CHECK_THROWS_AS(parse_complex(""), ParseError);
  CHECK_THROWS_AS(parse_complex("abc"), ParseError);
  CHECK_THROWS_AS(parse_complex("1.5+"), ParseError);
  CHECK_THROWS_AS(parse_complex("2-3"), ParseError);
  CHECK_THROWS_AS(parse_complex("2i+3"), ParseError);
  CHECK_THROWS_AS(parse_complex("1 + 2i"), ParseError);
  CHECK_THROWS_AS(parse_complex("2--3i"), ParseError);
  CHECK_THROWS_AS(parse_complex("inf"), ParseError);
  CHECK_THROWS_AS(parse_complex("nan+2i"), ParseError);
  CHECK_THROWS_AS(parse_complex("1e999"), ParseError);
}

TEST_CASE("format_complex round-trips through parse_complex") {
  SplitMix64 rng(29);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex z(rng.uniform(-1e6, 1e6), rng.uniform(-1e6, 1e6));
    const Complex back = parse_complex(format_complex(z, 17));
    CHECK(z == back);
  }
  CHECK(format_complex(Complex(2.0, -3.0)) == "2-3i");
  CHECK(format_complex(Complex(0.0, 0.0)) == "0+0i");
}
