#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mukai/fm.hpp"
#include "mukai/rng.hpp"
#include "test_util.hpp"

using namespace mukai;

namespace {

GradedClass project_hp(const K3Model& m, GradedClass v) {
  v.deg0 = Rational(0);
  Rational c = m.section_degree<Rational>(v.deg2);
  v.deg2[m.idx_mu()] -= c;
  return v;
}

GradedClass rank2_class(const K3Model& m, Rational r, Rational a, Rational b, Rational c) {
  GradedClass g = GradedClass::zero(m.h2_rank());
  g.deg0 = r;
  g.deg2[m.idx_H()] = a;
  g.deg2[m.idx_mu()] = b;
  g.deg4 = c;
  return g;
}

}  // namespace

TEST_CASE("basis table of f") {
  K3Model m = testutil::i3_model();
  FmAction fm(m);
  CHECK(fm.apply<Rational>(m.class_mu()) == -m.class_w());
  CHECK(fm.apply<Rational>(m.class_H()) == m.class_one() + m.class_w());
  CHECK(fm.apply<Rational>(m.class_w()) == m.class_mu());
  GradedClass f_one = GradedClass::zero(m.h2_rank());
  f_one.deg2[m.idx_H()] = Rational(-1);
  f_one.deg2[m.idx_mu()] = Rational(-1);
  CHECK(fm.apply<Rational>(m.class_one()) == f_one);
  for (int i = 0; i < m.alpha_count(); ++i)
    CHECK(fm.apply<Rational>(m.class_alpha(i)) == m.class_alpha(i));
  for (int j = 0; j < m.tau_count(); ++j)
    CHECK(fm.apply<Rational>(m.class_tau(j)) == m.class_tau(j));
}

TEST_CASE("inverse map anchors") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  CHECK(fm.apply_prime<Rational>(m.class_mu()) == -m.class_w());
  CHECK(fm.apply_prime<Rational>(m.class_w()) == m.class_mu());
}

TEST_CASE("inversion: f of' = -id and f' of = -id on 1000 random vectors") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  RationalRng rng(42);
  for (int t = 0; t < 1000; ++t) {
    GradedClass v = rng.graded(m.h2_rank());
    CHECK(fm.apply<Rational>(fm.apply_prime<Rational>(v)) == -v);
    CHECK(fm.apply_prime<Rational>(fm.apply<Rational>(v)) == -v);
  }
}

TEST_CASE("degree-0 law: (f(v))_0 = mukai_pair(v, mu)") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  RationalRng rng(43);
  for (int t = 0; t < 200; ++t) {
    GradedClass v = rng.graded(m.h2_rank());
    CHECK(fm.apply<Rational>(v).deg0 == m.mukai_pair<Rational>(v, m.class_mu()));
  }
}

TEST_CASE("adjoint identity and restricted isometry on H_p") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  RationalRng rng(44);
  for (int t = 0; t < 1000; ++t) {
    GradedClass a = project_hp(m, rng.graded(m.h2_rank()));
    GradedClass b = project_hp(m, rng.graded(m.h2_rank()));
    CHECK(m.mukai_pair<Rational>(b, fm.apply<Rational>(a)) ==
          -m.mukai_pair<Rational>(fm.apply_prime<Rational>(b), a));
    CHECK(m.mukai_pair<Rational>(fm.apply<Rational>(a), fm.apply<Rational>(b)) ==
          m.mukai_pair<Rational>(a, b));
  }
}

TEST_CASE("lattice swap f(U) = V, f(V) = U and f^2 = -id there") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  Eigen::Index n = m.h2_rank() + 2;
  auto col = [&](MatR& mat, int c, const GradedClass& g) {
    VecR flat = g.flatten();
    for (Eigen::Index i = 0; i < n; ++i) mat(i, c) = flat[i];
  };
  MatR u(n, 2), v(n, 2), fu(n, 2), fv(n, 2);
  col(u, 0, m.class_mu());
  col(u, 1, m.class_H());
  col(v, 0, m.class_one());
  col(v, 1, m.class_w());
  col(fu, 0, fm.apply<Rational>(m.class_mu()));
  col(fu, 1, fm.apply<Rational>(m.class_H()));
  col(fv, 0, fm.apply<Rational>(m.class_one()));
  col(fv, 1, fm.apply<Rational>(m.class_w()));
  CHECK(same_span<Rational>(fu, v));
  CHECK(same_span<Rational>(fv, u));
  for (const GradedClass& g : {m.class_one(), m.class_H(), m.class_mu(), m.class_w()}) {
    CHECK(fm.apply<Rational>(fm.apply<Rational>(g)) == -g);
  }
}

TEST_CASE("f~ values and the mu-perp precondition") {
  K3Model m = testutil::i3_model();
  FmAction fm(m);
  VecR fw = fm.f_tilde(m.class_w());
  CHECK(fw == m.class_mu().deg2);
  VecR fone = fm.f_tilde(m.class_one());
  VecR exp(m.h2_rank());
  exp.setConstant(Rational(0));
  exp[m.idx_H()] = Rational(-1);
  exp[m.idx_mu()] = Rational(-1);
  CHECK(fone == exp);
  CHECK(fm.f_tilde(m.class_alpha(0)) == m.class_alpha(0).deg2);
  // H pairs with mu, so it is not in mu-perp
  CHECK_THROWS_AS(fm.f_tilde(m.class_H()), Error);
  try {
    fm.f_tilde(m.class_H());
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Math);
  }
}

TEST_CASE("f~ is an isometry of the rank-22 quotient") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  auto reps = m.mu_perp_mod_mu_basis();
  MatR target = m.mu_perp_quotient_gram();
  std::vector<VecR> images;
  for (const auto& r : reps) images.push_back(fm.f_tilde(r));
  for (size_t i = 0; i < reps.size(); ++i)
    for (size_t j = 0; j < reps.size(); ++j)
      CHECK(m.inner<Rational>(images[i], images[j]) ==
            target(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
  CHECK(exact_rank<Rational>(fm.f_tilde_matrix()) == 22);
}

TEST_CASE("psi inverts the complexified f~") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  // psi(mu^) is the class of w
  VecC mu_hat = complexify(m.class_mu().deg2);
  GradedClassC img = fm.psi(mu_hat);
  CHECK(img == complexify(m.class_w()));
  // psi(tau_j) = tau_j
  for (int j = 0; j < m.tau_count(); ++j) {
    GradedClassC t = fm.psi(complexify(m.class_tau(j).deg2));
    CHECK(t == complexify(m.class_tau(j)));
  }
  // psi(f~(v)) = v on the canonical representatives
  for (const auto& rep : m.mu_perp_mod_mu_basis()) {
    VecC image = complexify(fm.f_tilde(rep));
    CHECK(fm.psi(image) == complexify(rep));
  }
}

TEST_CASE("transform table examples") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  // ch(O_H) = H + w: rank 1 transform 1 + mu^
  GradedClass oh = rank2_class(m, Rational(0), Rational(1), Rational(0), Rational(1));
  CHECK(fm.rr_table(oh, 0) == m.class_one() + m.class_mu());
  // O_X(-1): 1 - mu, WIT 1 -> Theta - w^
  GradedClass ox1 = rank2_class(m, Rational(1), Rational(0), Rational(-1), Rational(0));
  CHECK(fm.rr_table(ox1, 1) == m.class_H() - m.class_w());
  // fiber sheaf mu, WIT 1 -> w^
  GradedClass fib = rank2_class(m, Rational(0), Rational(0), Rational(1), Rational(0));
  CHECK(fm.rr_table(fib, 1) == m.class_w());
  CHECK_THROWS_AS(fm.rr_table(fib, 2), Error);
}

TEST_CASE("rr_table rejects classes outside span(H, mu)") {
  K3Model m = testutil::i3_model();
  FmAction fm(m);
  CHECK_THROWS_AS(fm.rr_table(m.class_alpha(0), 0), Error);
  CHECK_THROWS_AS(fm.rr_table(m.class_tau(0), 0), Error);
  try {
    fm.rr_table(m.class_alpha(0), 0);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Math);
  }
}

TEST_CASE("rr_transform examples") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  // skyscraper w -> mu^
  CHECK(fm.rr_transform(m.class_w()) == m.class_mu());
  // O_X(-1): raw transform -Theta + w^; the WIT-1 class is Theta - w^
  GradedClass ox1 = rank2_class(m, Rational(1), Rational(0), Rational(-1), Rational(0));
  CHECK(fm.rr_transform(ox1) == -(m.class_H() - m.class_w()));
  // fiber class mu: raw transform -w^
  CHECK(fm.rr_transform(m.class_mu()) == -m.class_w());
}

TEST_CASE("rr_transform agrees with rr_table in both directions") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  auto check_tuple = [&](long r, long a, long b, long c) {
    GradedClass ch = rank2_class(m, Rational(r), Rational(a), Rational(b), Rational(c));
    for (Direction dir : {Direction::XToXhat, Direction::XhatToX}) {
      for (int wit : {0, 1}) {
        Rational sign = (wit == 0) ? Rational(1) : Rational(-1);
        CHECK(fm.rr_table(ch, wit, dir) == sign * fm.rr_transform(ch, dir));
      }
    }
  };
  // the four basis characters
  check_tuple(1, 0, 0, 0);
  check_tuple(0, 1, 0, 0);
  check_tuple(0, 0, 1, 0);
  check_tuple(0, 0, 0, 1);
  // 1000 random integer tuples
  RationalRng rng(45);
  for (int t = 0; t < 1000; ++t) {
    check_tuple(rng.integer(-30, 30), rng.integer(-30, 30), rng.integer(-30, 30),
                rng.integer(-30, 30));
  }
}

TEST_CASE("reverse direction uses the inverse transform") {
  K3Model m = testutil::i3_model();
  FmAction fm(m);
  RationalRng rng(46);
  for (int t = 0; t < 100; ++t) {
    GradedClass ch = rng.graded(m.h2_rank());
    GradedClass fwd = fm.rr_transform(ch, Direction::XToXhat);
    // transforming back returns the negated source (T^ o T = [-1])
    CHECK(fm.rr_transform(fwd, Direction::XhatToX) == -ch);
  }
}

TEST_CASE("Todd identities") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  const ToddData& td = fm.todd();
  GradedClass td_p = GradedClass::zero(m.h2_rank());
  td_p.deg0 = Rational(1);
  td_p.deg2[m.idx_mu()] = Rational(-1);
  td_p.deg4 = Rational(2);
  CHECK(m.cup<Rational>(td.sqrt_td, td.sqrt_td) == td_p);
  CHECK(m.cup<Rational>(td.sqrt_td, td.inv_sqrt_td) == m.class_one());
  CHECK(td.sqrt_td.deg2[m.idx_mu()] == Rational(-1, 2));
}

TEST_CASE("brane map") {
  BraneImage b0 = brane_map({0, 0, 0, 1});
  CHECK(b0.charge == std::array<long, 4>{0, 0, 1, 0});
  CHECK(b0.annotation == "genus-1 2-cycle (fiber)");
  BraneImage b4 = brane_map({1, 0, 0, 0});
  CHECK(b4.charge == std::array<long, 4>{0, -1, 0, 0});
  CHECK(b4.annotation == "genus-0 2-cycle (section)");
  BraneImage fib = brane_map({0, 0, 1, 0});
  CHECK(fib.charge == std::array<long, 4>{0, 0, 0, -1});
  CHECK(fib.annotation == "0-brane");
  CHECK(brane_map({0, 1, 0, 0}).annotation == "4-brane");
  CHECK(brane_map({0, 0, 0, 0}).annotation == "zero charge");
  CHECK(brane_map({1, 2, 3, 4}).annotation == "mixed brane charge");
  // the map squares to -id on charges
  std::array<long, 4> v{3, -2, 5, 7};
  std::array<long, 4> twice = brane_map(brane_map(v).charge).charge;
  CHECK(twice == std::array<long, 4>{-3, 2, -5, -7});
}

TEST_CASE("direction flag parsing") {
  CHECK(parse_direction("x-to-xhat") == Direction::XToXhat);
  CHECK(parse_direction("xhat-to-x") == Direction::XhatToX);
  CHECK_THROWS_AS(parse_direction("sideways"), Error);
}
