#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <functional>

#include "liftcert/lift_classes.hpp"

using namespace liftcert;

namespace {

SpinModel bit_model(const std::vector<std::vector<int>>& rows) {
  SpinModel m;
  m.q = static_cast<int>(rows.size());
  for (const auto& row : rows)
    for (int v : row) m.a.push_back(Scalar(v));
  m.nu.assign(m.q, Scalar(1));
  return m;
}

SpinModel float_model(int q, const std::function<double(int, int)>& f) {
  SpinModel m;
  m.q = q;
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) m.a.push_back(Scalar::real(f(i, j)));
  m.nu.assign(q, Scalar::real(1.0));
  return m;
}

SpinModel permute_model(const SpinModel& m, const std::vector<int>& perm) {
  SpinModel out;
  out.q = m.q;
  for (int i = 0; i < m.q; ++i)
    for (int j = 0; j < m.q; ++j) out.a.push_back(m.A(perm[i], perm[j]));
  for (int i = 0; i < m.q; ++i) out.nu.push_back(m.nu[perm[i]]);
  return out;
}

ScalarMat int_mat(const std::vector<std::vector<int>>& rows) {
  ScalarMat d(static_cast<int>(rows.size()));
  for (int i = 0; i < d.n; ++i)
    for (int j = 0; j < d.n; ++j) d.at(i, j) = Scalar(rows[i][j]);
  return d;
}

Rational rat(const char* s) { return Scalar::parse_exact(s).rat(); }

// Matrix with prefix-of-ones rows (6,5,4,4,2,1): a staircase threshold shape.
SpinModel threshold_fixture() {
  return bit_model({{1, 1, 1, 1, 1, 1},
                    {1, 1, 1, 1, 1, 0},
                    {1, 1, 1, 1, 0, 0},
                    {1, 1, 1, 1, 0, 0},
                    {1, 1, 0, 0, 0, 0},
                    {1, 0, 0, 0, 0, 0}});
}

// Banded rows 0-2, 0-3, 0-4, 1-4, 2-5, 4-5: a thick-path shape.
SpinModel banded_fixture() {
  return bit_model({{1, 1, 1, 0, 0, 0},
                    {1, 1, 1, 1, 0, 0},
                    {1, 1, 1, 1, 1, 0},
                    {0, 1, 1, 1, 1, 0},
                    {0, 0, 1, 1, 1, 1},
                    {0, 0, 0, 0, 1, 1}});
}

}  // namespace

TEST_CASE("entry sign") {
  CHECK(entry_sign(Scalar(-3)) == -1);
  CHECK(entry_sign(Scalar(0)) == 0);
  CHECK(entry_sign(Scalar::parse_exact("1/7")) == 1);
  CHECK(entry_sign(Scalar::real(1e-13)) == 0);
  CHECK(entry_sign(Scalar::real(-1e-13)) == 0);
  CHECK(entry_sign(Scalar::real(-1e-6)) == -1);
}

TEST_CASE("minor sign tests") {
  CHECK(tp2_check(wr_model()));
  CHECK_FALSE(tn2_check(wr_model()));
  CHECK(tn2_check(ind_model()));
  CHECK_FALSE(tp2_check(ind_model()));
  CHECK(tp2_check(ising_model(0.5, 0.0)));
  CHECK(tn2_check(ising_model(-0.5, 0.0)));
  CHECK(tp2_check(ising_model(0.0, 0.0)));  // all-ones: every minor is 0
  CHECK(tn2_check(ising_model(0.0, 0.0)));
  CHECK_FALSE(tp2_check(potts_model(3, Scalar(1))));
  CHECK_FALSE(tn2_check(potts_model(3, Scalar(1))));
}

TEST_CASE("pair matrices") {
  PairMatrices pm = build_pair_matrices(wr_model());
  CHECK(pm.q == 3);
  CHECK(pm.a_eq.n == 9);
  CHECK(pm.d1.n == 3);
  // a_eq = e + d, d symmetric, diagonal-pair rows and columns vanish.
  for (int r = 0; r < 9; ++r)
    for (int c = 0; c < 9; ++c) {
      CHECK((pm.e_mat.at(r, c) + pm.d_mat.at(r, c)).rat() == pm.a_eq.at(r, c).rat());
      CHECK(pm.d_mat.at(r, c).rat() == pm.d_mat.at(c, r).rat());
      if (r < 3 || c < 3) CHECK(pm.d_mat.at(r, c).is_zero());
    }
  std::vector<std::vector<const char*>> want = {{"0", "1/2", "1/2"},
                                                {"1/2", "1/2", "1/2"},
                                                {"1/2", "1/2", "0"}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(pm.d1.at(r, c).rat() == rat(want[r][c]));

  PairMatrices ind = build_pair_matrices(ind_model());
  CHECK(ind.d1.n == 1);
  CHECK(ind.d1.at(0, 0).rat() == rat("-1/2"));

  PairMatrices is = build_pair_matrices(ising_model(0.5, 0.0));
  CHECK(is.d1.n == 1);
  CHECK(is.d1.at(0, 0).flt() == doctest::Approx((std::exp(1.0) - std::exp(-1.0)) / 2));

  // d1 holds half the 2x2 minors: potts(3,1) block derived by hand.
  PairMatrices p3 = build_pair_matrices(potts_model(3, Scalar(1)));
  std::vector<std::vector<const char*>> p3want = {{"3/2", "1/2", "-1/2"},
                                                  {"1/2", "3/2", "1/2"},
                                                  {"-1/2", "1/2", "3/2"}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) CHECK(p3.d1.at(r, c).rat() == rat(p3want[r][c]));
}

TEST_CASE("sign switching") {
  ScalarMat neg_edge = int_mat({{0, -1}, {-1, 0}});
  auto s = sign_switchable(neg_edge, SwitchDirection::NonNeg);
  REQUIRE(s.has_value());
  CHECK(*s == std::vector<int>{1, -1});
  auto s2 = sign_switchable(neg_edge, SwitchDirection::NonPos);
  REQUIRE(s2.has_value());
  CHECK(*s2 == std::vector<int>{1, 1});

  ScalarMat pos_edge = int_mat({{0, 1}, {1, 0}});
  CHECK(sign_switchable(pos_edge, SwitchDirection::NonNeg) == std::vector<int>{1, 1});
  CHECK(sign_switchable(pos_edge, SwitchDirection::NonPos) == std::vector<int>{1, -1});

  // Diagonal entries cannot be switched.
  ScalarMat fixed_diag = int_mat({{1, 0}, {0, 0}});
  CHECK(sign_switchable(fixed_diag, SwitchDirection::NonNeg).has_value());
  CHECK_FALSE(sign_switchable(fixed_diag, SwitchDirection::NonPos).has_value());

  // Odd sign pattern around a triangle: inconsistent one way, fine the other.
  ScalarMat tri = int_mat({{0, 1, -1}, {1, 0, 1}, {-1, 1, 0}});
  CHECK_FALSE(sign_switchable(tri, SwitchDirection::NonNeg).has_value());
  auto t = sign_switchable(tri, SwitchDirection::NonPos);
  REQUIRE(t.has_value());
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK((*t)[i] * (*t)[j] * entry_sign(tri.at(i, j)) <= 0);

  // Float noise below the tolerance counts as zero.
  ScalarMat noise(2);
  noise.at(0, 0) = Scalar::real(-1e-13);
  noise.at(0, 1) = Scalar::real(1e-13);
  noise.at(1, 0) = Scalar::real(1e-13);
  noise.at(1, 1) = Scalar::real(-1e-13);
  CHECK(sign_switchable(noise, SwitchDirection::NonNeg) == std::vector<int>{1, 1});
  CHECK(sign_switchable(noise, SwitchDirection::NonPos) == std::vector<int>{1, 1});

  ScalarMat empty(0);
  CHECK(sign_switchable(empty, SwitchDirection::NonNeg)->empty());
}

TEST_CASE("classify named models") {
  Classification wr = classify(wr_model());
  CHECK(wr.verdict == Verdict::ClassACertified);
  CHECK(wr.s_reduced == std::vector<int>{1, 1, 1});
  CHECK(wr.s_full->size() == 9);

  Classification ind = classify(ind_model());
  CHECK(ind.verdict == Verdict::ClassBCertified);
  CHECK(ind.s_reduced == std::vector<int>{1});
  CHECK(ind.s_full == std::vector<int>{1, 1, 1, -1});

  CHECK(classify(ising_model(0.5, 0.0)).verdict == Verdict::ClassACertified);
  CHECK(classify(ising_model(0.7, 0.3)).verdict == Verdict::ClassACertified);
  CHECK(classify(ising_model(-0.5, 0.0)).verdict == Verdict::ClassBCertified);
  CHECK(classify(ising_model(0.0, 0.0)).verdict == Verdict::Both);

  Classification p3 = classify(potts_model(3, Scalar(1)));
  CHECK(p3.verdict == Verdict::Unknown);
  CHECK_FALSE(p3.s_reduced.has_value());
  CHECK_FALSE(p3.s_full.has_value());

  CHECK(classify(potts_model(1, Scalar(1))).verdict == Verdict::Both);

  CHECK(verdict_name(Verdict::ClassACertified) == "ClassA_certified");
  CHECK(verdict_name(Verdict::ClassBCertified) == "ClassB_certified");
  CHECK(verdict_name(Verdict::Both) == "Both");
  CHECK(verdict_name(Verdict::Unknown) == "Unknown");
}

TEST_CASE("minor sign tests imply identity certificates") {
  // Log-supermodular entries exp(c i j) are TP2 for c > 0, TN2 for c < 0.
  for (double c : {0.3, 0.05}) {
    SpinModel up = float_model(4, [&](int i, int j) { return std::exp(c * i * j); });
    CHECK(tp2_check(up));
    Classification cl = classify(up);
    CHECK(cl.verdict == Verdict::ClassACertified);
    CHECK(cl.s_reduced == std::vector<int>(6, 1));

    SpinModel down = float_model(4, [&](int i, int j) { return std::exp(-c * i * j); });
    CHECK(tn2_check(down));
    Classification cd = classify(down);
    CHECK(cd.verdict == Verdict::ClassBCertified);
    CHECK(cd.s_reduced == std::vector<int>(6, 1));
  }
}

TEST_CASE("staircase recognition fixtures") {
  auto thr = staircase_recognize(threshold_fixture(), StairKind::LoopThreshold);
  REQUIRE(thr.has_value());
  CHECK(thr->ordering == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(thr->weights == std::vector<long long>{0, 1, 2, 2, 4, 5});
  CHECK(thr->alpha == 5);

  auto band = staircase_recognize(banded_fixture(), StairKind::ThickPath);
  REQUIRE(band.has_value());
  CHECK(band->ordering == std::vector<int>{0, 1, 2, 3, 4, 5});
  CHECK(band->weights == std::vector<long long>{0, 1, 2, 3, 4, 6});
  CHECK(band->alpha == 2);

  auto ind = staircase_recognize(ind_model(), StairKind::LoopThreshold);
  REQUIRE(ind.has_value());
  CHECK(ind->weights == std::vector<long long>{0, 1});
  CHECK(ind->alpha == 1);

  // Contiguous band of width 1 around the diagonal.
  SpinModel tridiag = bit_model({{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}});
  auto tri = staircase_recognize(tridiag, StairKind::ThickPath);
  REQUIRE(tri.has_value());
  CHECK(tri->weights == std::vector<long long>{0, 1, 2, 3});
  CHECK(tri->alpha == 1);

  SpinModel ones = bit_model({{1, 1}, {1, 1}});
  auto o1 = staircase_recognize(ones, StairKind::LoopThreshold);
  REQUIRE(o1.has_value());
  CHECK(o1->alpha == o1->weights[0] + o1->weights[1]);
  auto o2 = staircase_recognize(ones, StairKind::ThickPath);
  REQUIRE(o2.has_value());
  CHECK(o2->alpha == 0);
}

TEST_CASE("staircase recognition under permutations") {
  std::vector<int> rev = {5, 4, 3, 2, 1, 0};
  SpinModel scrambled = permute_model(threshold_fixture(), rev);
  auto res = staircase_recognize(scrambled, StairKind::LoopThreshold);
  REQUIRE(res.has_value());
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      bool edge = !scrambled.A(res->ordering[i], res->ordering[j]).is_zero();
      CHECK(edge == (res->weights[i] + res->weights[j] <= res->alpha));
    }

  std::vector<int> shuffle = {2, 0, 3, 1};
  SpinModel tridiag = bit_model({{1, 1, 0, 0}, {1, 1, 1, 0}, {0, 1, 1, 1}, {0, 0, 1, 1}});
  SpinModel mixed = permute_model(tridiag, shuffle);
  auto band = staircase_recognize(mixed, StairKind::ThickPath);
  REQUIRE(band.has_value());
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      bool edge = !mixed.A(band->ordering[i], band->ordering[j]).is_zero();
      long long gap = band->weights[i] - band->weights[j];
      CHECK(edge == (std::abs(gap) <= band->alpha));
    }
}

TEST_CASE("recognized staircases pass the matching minor test") {
  auto thr = staircase_recognize(threshold_fixture(), StairKind::LoopThreshold);
  REQUIRE(thr.has_value());
  CHECK(tn2_check(permute_model(threshold_fixture(), thr->ordering)));
  auto ind = staircase_recognize(ind_model(), StairKind::LoopThreshold);
  REQUIRE(ind.has_value());
  CHECK(tn2_check(permute_model(ind_model(), ind->ordering)));

  auto band = staircase_recognize(banded_fixture(), StairKind::ThickPath);
  REQUIRE(band.has_value());
  CHECK(tp2_check(permute_model(banded_fixture(), band->ordering)));
}

TEST_CASE("staircase recognition rejections") {
  // Loopless path: thresholds force w_i + w_i > alpha on the diagonal,
  // contradicting any edge.
  SpinModel p3 = bit_model({{0, 1, 0}, {1, 0, 1}, {0, 1, 0}});
  CHECK_FALSE(staircase_recognize(p3, StairKind::LoopThreshold).has_value());
  CHECK_FALSE(staircase_recognize(p3, StairKind::ThickPath).has_value());

  // A zero diagonal entry survives every reordering.
  CHECK_FALSE(staircase_recognize(ind_model(), StairKind::ThickPath).has_value());

  // Entries other than 0/1 are never recognized.
  CHECK_FALSE(staircase_recognize(potts_model(2, Scalar(2)), StairKind::LoopThreshold).has_value());

  // Size cap.
  SpinModel big;
  big.q = 9;
  big.a.assign(81, Scalar(1));
  big.nu.assign(9, Scalar(1));
  CHECK_FALSE(staircase_recognize(big, StairKind::LoopThreshold).has_value());
}
