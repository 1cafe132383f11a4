#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mukai/json_io.hpp"
#include "mukai/selftest.hpp"
#include "test_util.hpp"

using namespace mukai;

TEST_CASE("fiber config round trip") {
  FiberConfig cfg;
  cfg.fibers.push_back({3, 1});
  cfg.fibers.push_back({1, 21});
  cfg.transcendental_gram = testutil::rank18_transcendental_gram();
  json j = fiber_config_to_json(cfg);
  FiberConfig back = fiber_config_from_json(j);
  CHECK(back.fibers.size() == 2);
  CHECK(back.fibers[0].n == 3);
  CHECK(back.fibers[0].count == 1);
  CHECK(back.fibers[1].n == 1);
  CHECK(back.fibers[1].count == 21);
  REQUIRE(back.transcendental_gram.has_value());
  CHECK(gram_to_json(*back.transcendental_gram).dump() ==
        gram_to_json(*cfg.transcendental_gram).dump());
  CHECK_FALSE(back.allow_non_k3);
  // canonical output is stable
  CHECK(fiber_config_to_json(back).dump() == j.dump());
}

TEST_CASE("fiber config parse errors") {
  CHECK_THROWS_AS(fiber_config_from_json(parse_json("{}")), Error);
  CHECK_THROWS_AS(fiber_config_from_json(parse_json(R"({"fibers":[{"kind":"II"}]})")), Error);
  CHECK_THROWS_AS(fiber_config_from_json(parse_json(R"({"fibers":[{"kind":"I"}]})")), Error);
  CHECK_THROWS_AS(parse_json("{not json"), Error);
  CHECK_THROWS_AS(load_json_file("/nonexistent/path.json"), Error);
}

TEST_CASE("graded class round trip and canonical form") {
  K3Model m = testutil::default_model();
  GradedClass g = GradedClass::zero(m.h2_rank());
  g.deg0 = Rational(1, 2);
  g.deg2[m.idx_H()] = Rational(-3);
  g.deg2[m.idx_tau(4)] = Rational(7, 5);
  g.deg4 = Rational(-1);
  json j = graded_to_json(m, g);
  CHECK(j["deg0"] == "1/2");
  CHECK(j["deg2"].size() == 2);  // zero entries omitted
  CHECK(j["deg2"]["H"] == "-3");
  CHECK(j["deg2"]["tau_5"] == "7/5");
  CHECK(graded_from_json(m, j) == g);
  // byte-exact canonical round trip
  std::string text = j.dump();
  CHECK(graded_to_json(m, graded_from_json(m, parse_json(text))).dump() == text);
  // absent keys are zero; integers accepted
  GradedClass sparse = graded_from_json(m, parse_json(R"({"deg2":{"mu":1}})"));
  CHECK(sparse == m.class_mu());
  CHECK_THROWS_AS(graded_from_json(m, parse_json(R"({"deg2":{"xyzzy":"1"}})")), Error);
  CHECK_THROWS_AS(graded_from_json(m, parse_json("[]")), Error);
}

TEST_CASE("gram matrix serialization") {
  MatR u = gram_hyperbolic_U();
  json j = gram_to_json(u);
  CHECK(gram_to_json(gram_from_json(j)).dump() == j.dump());
  CHECK_THROWS_AS(gram_from_json(parse_json("[[\"0\",\"1\"]]")), Error);
  CHECK_THROWS_AS(gram_from_json(parse_json("[]")), Error);
}

TEST_CASE("period serialization") {
  K3Model m = testutil::default_model();
  VecC omega = default_period_vector(m);
  json j = period_to_json(omega);
  CHECK(j.size() == static_cast<size_t>(m.h2_rank()));
  VecC back = period_from_json(m, j);
  for (Eigen::Index i = 0; i < omega.size(); ++i) CHECK(back[i] == omega[i]);
  CHECK_THROWS_AS(period_from_json(m, parse_json("[\"1\"]")), Error);
}

TEST_CASE("mirror report serialization") {
  MirrorReport rep;
  rep.seed = 42;
  rep.trials = 100;
  rep.quotient_dim = 18;
  rep.psi_omega_proportional = true;
  json j = mirror_report_to_json(rep);
  CHECK(j["seed"] == 42);
  CHECK(j["trials"] == 100);
  CHECK(j["quotient_dim"] == 18);
  CHECK(j["all_exact"] == true);
  rep.failures.push_back({3, "pairing mismatch"});
  json j2 = mirror_report_to_json(rep);
  CHECK(j2["all_exact"] == false);
  CHECK(j2["failures"][0]["trial"] == 3);
}

TEST_CASE("human rendering uses side-specific names") {
  K3Model m = testutil::i3_model();
  GradedClass sigma = testutil::h2_class(m, m.idx_H()) + m.class_mu() + m.class_alpha(0);
  CHECK(render_class(m, sigma, Direction::XToXhat) == "Θ + μ̂ + β_1");
  CHECK(render_class(m, sigma, Direction::XhatToX) == "H + μ + α_1");
  GradedClass v = m.class_one() - m.class_mu();
  CHECK(render_class(m, v, Direction::XhatToX) == "1 - μ");
  GradedClass neg = Rational(-1) * m.class_w() + Rational(1, 2) * m.class_one();
  CHECK(render_class(m, neg, Direction::XToXhat) == "1/2 - ŵ");
  CHECK(render_class(m, GradedClass::zero(m.h2_rank()), Direction::XToXhat) == "0");
}

TEST_CASE("selftest json reports every suite as passing") {
  K3Model m = testutil::default_model();
  FmAction fm(m);
  json j = selftest_json(m, fm, 42, true, true, true);
  CHECK(j["all_pass"] == true);
  CHECK(j["seed"] == 42);
  for (const auto& line : j["lemma"]) CHECK(line["pass"] == true);
  for (const auto& fx : j["fixtures"]) CHECK(fx["pass"] == true);
  CHECK(j["modified_pairing"]["preserved"] == false);
  CHECK(j["modified_pairing"]["modified_self_pairing_of_1"] == "0 + 0*[pt]");
  CHECK(j["modified_pairing"]["modified_self_pairing_of_f(1)"] == "0 + -2*[pt]");
  CHECK(j.contains("erratum"));
}
