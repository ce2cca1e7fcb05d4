#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "heatsym/liealg.hpp"
#include "heatsym/pointgroup.hpp"

using namespace heatsym;
using A = AlgElement;

namespace {
std::mt19937_64 rng(77001);
Rat rr() {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  return Rat(num(rng), den(rng));
}
A rnd_alg() {
  A x;
  for (size_t i = 0; i < 6; ++i) x[i] = rr();
  return x;
}
EssQ rnd_ess() {
  Rat q = Rat(std::uniform_int_distribution<int>(1, 5)(rng), std::uniform_int_distribution<int>(1, 2)(rng));
  EssQ e = compose(ess_K(rr()), compose(ess_D_scale(q), ess_Pt(rr())));
  if (std::uniform_int_distribution<int>(0, 2)(rng) == 0) e = compose(ess_Kprime(), e);
  e.lambda = {ScalarExt(rr()), ScalarExt(rr())};
  e.sigma = ScalarExt(Rat(std::uniform_int_distribution<int>(1, 4)(rng)));
  return e;
}
}  // namespace

TEST_CASE("bracket table") {
  CHECK(bracket(A::D(), A::Pt()) == A::Pt().scaled(Rat(-2)));
  CHECK(bracket(A::Gx(), A::Px()) == A::I().scaled(Rat(1, 2)));
  CHECK(bracket(A::D(), A::K()) == A::K().scaled(Rat(2)));
  CHECK(bracket(A::Pt(), A::K()) == A::D());
  CHECK(bracket(A::Pt(), A::Gx()) == A::Px());
  CHECK(bracket(A::K(), A::Px()) == -A::Gx());
  for (int i = 0; i < 20; ++i) {
    A x = rnd_alg();
    CHECK(bracket(x, x).is_zero());
    A y = rnd_alg();
    CHECK(bracket(x, y) == -bracket(y, x));
  }
}

TEST_CASE("ad matrices") {
  Mat6 adI = ad_matrix(A::I());
  for (const auto& row : adI)
    for (const auto& v : row) CHECK(v == 0);
  // ad(D) diagonal (-2, 0, 2, 1, -1, 0) for the action X -> [D, X]
  Mat6 adD = ad_matrix(A::D());
  Rat want[6] = {Rat(-2), Rat(0), Rat(2), Rat(1), Rat(-1), Rat(0)};
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = 0; j < 6; ++j) CHECK(adD[i][j] == (i == j ? want[i] : Rat(0)));
  for (int i = 0; i < 10; ++i) {
    A x = rnd_alg(), y = rnd_alg();
    CHECK(mat6_apply(ad_matrix(x), y) + mat6_apply(ad_matrix(y), x) == A());
  }
}

TEST_CASE("structure predicates all hold") {
  StructureReport rep = structure_predicates();
  for (const auto& [name, ok] : rep.checks) {
    CAPTURE(name);
    CHECK(ok);
  }
  CHECK(rep.all_ok);
  // named instances
  CHECK(bracket(A::Pt(), bracket(A::K(), A::Px())) + bracket(A::K(), bracket(A::Px(), A::Pt())) +
            bracket(A::Px(), bracket(A::Pt(), A::K())) ==
        A());
}

TEST_CASE("pushforward respects composition") {
  for (int i = 0; i < 15; ++i) {
    EssQ a = rnd_ess(), b = rnd_ess();
    A x = rnd_alg();
    CHECK(pushforward(compose(a, b), x) == pushforward(a, pushforward(b, x)));
  }
}

TEST_CASE("pushforward fixes the center") {
  for (int i = 0; i < 25; ++i) CHECK(pushforward(rnd_ess(), A::I()) == A::I());
}

TEST_CASE("word decomposition reproduces the element") {
  for (int i = 0; i < 25; ++i) {
    EssQ e = rnd_ess();
    EssQ back = word_element(decompose_word(e));
    CHECK(back == e);
  }
  // alpha = 0 branch
  EssQ kp = ess_Kprime();
  CHECK(word_element(decompose_word(kp)) == kp);
}

TEST_CASE("pushforward by the one-parameter tables via exp") {
  // exact: D with q = 2 doubles Pt twice
  EssQ d2 = ess_D_scale(Rat(2));
  CHECK(pushforward(d2, A::Pt()) == A::Pt().scaled(Rat(4)));
  CHECK(pushforward(d2, A::Px()) == A::Px().scaled(Rat(2)));
  // quarter turn: Q+(pi) = J flips Px
  EssQ J = exp_ess_exact(A::Qplus(), ExpParam::quarter(2));
  CHECK(pushforward(J, A::Px()) == -A::Px());
}
