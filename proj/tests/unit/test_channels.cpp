#include <doctest.h>

#include <cmath>

#include "qcap/certify.hpp"
#include "qcap/channel.hpp"
#include "qcap/entropy.hpp"
#include "qcap/json_io.hpp"
#include "qcap/random.hpp"
#include "test_support.hpp"

using namespace qcap;
using qcap::testing::diag;
using qcap::testing::max_abs_diff;

namespace {

const SystemLayout kQ2 = SystemLayout::single("A", 2);

std::vector<QuantumChannel> catalogue() {
  return {identity_channel(2),          erasure_channel(0.0, 2),
          erasure_channel(0.5, 2),      erasure_channel(0.3, 3),
          depolarizing_channel(0.0, 2), depolarizing_channel(0.7, 3),
          flagged_mixture(0.4, depolarizing_channel(0.2, 2), erasure_channel(0.5, 2))};
}

DensityOperator pure_input(std::size_t dim, std::uint64_t seed) {
  return random_density(SystemLayout::single("A", dim), seed, 1);
}

}  // namespace

TEST_SUITE("erasure_channel") {
  TEST_CASE("p = 0 embeds the input with zero flag weight") {
    const auto rho = random_density(kQ2, 3);
    const auto out = apply(erasure_channel(0.0, 2), rho);
    CHECK(max_abs_diff(out.matrix().topLeftCorner(2, 2), rho.matrix()) < 1e-15);
    CHECK(std::abs(out.matrix()(2, 2)) == 0.0);
  }

  TEST_CASE("p = 1 outputs the flag") {
    for (std::uint64_t s = 0; s < 5; ++s)
      CHECK(max_abs_diff(apply(erasure_channel(1.0, 2), random_density(kQ2, s)).matrix(),
                         diag({0, 0, 1})) < 1e-15);
  }

  TEST_CASE("p = 0.5 on I/2") {
    // oracle: diag(1/4, 1/4, 1/2)
    const auto out = apply(erasure_channel(0.5, 2), DensityOperator::maximally_mixed(kQ2));
    CHECK(max_abs_diff(out.matrix(), diag({0.25, 0.25, 0.5})) < 1e-15);
  }

  TEST_CASE("rejects bad parameters") {
    CHECK_THROWS_AS(erasure_channel(1.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(erasure_channel(-0.1, 2), std::invalid_argument);
    CHECK_THROWS_AS(erasure_channel(0.5, 1), std::invalid_argument);
  }

  TEST_CASE("complement acts as erasure(1 - p) on pure inputs") {
    for (double p : {0.1, 0.25, 0.5, 0.8})
      for (std::uint64_t s = 0; s < 10; ++s) {
        const auto psi = pure_input(2, s);
        const double env = vn_entropy(complementary_apply(erasure_channel(p, 2), psi));
        const double dual = vn_entropy(apply(erasure_channel(1.0 - p, 2), psi));
        CHECK(std::abs(env - dual) <= 1e-8);
      }
  }
}

TEST_SUITE("depolarizing_channel") {
  TEST_CASE("p = 1 is the identity, p = 0 fully randomizes") {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto rho = random_density(SystemLayout::single("A", 3), s);
      CHECK(max_abs_diff(apply(depolarizing_channel(1.0, 3), rho).matrix(), rho.matrix()) < 1e-14);
      CHECK(max_abs_diff(apply(depolarizing_channel(0.0, 3), rho).matrix(),
                         Matrix::Identity(3, 3) / 3.0) < 1e-14);
    }
  }

  TEST_CASE("p = 0.5, r = 2 on |0><0|") {
    const auto out = apply(depolarizing_channel(0.5, 2), DensityOperator::basis_state(kQ2, 0));
    CHECK(max_abs_diff(out.matrix(), diag({0.75, 0.25})) < 1e-15);
  }

  TEST_CASE("acts as p rho + (1 - p) I / r on a full operator basis") {
    // linearity: check every matrix unit |i><j| through the Kraus sum directly
    const double p = 0.37;
    const auto ch = depolarizing_channel(p, 3);
    CHECK(ch.env_dim() == 9);
    for (Eigen::Index i = 0; i < 3; ++i)
      for (Eigen::Index j = 0; j < 3; ++j) {
        Matrix e = Matrix::Zero(3, 3);
        e(i, j) = 1.0;
        Matrix out = Matrix::Zero(3, 3);
        for (const auto& k : ch.kraus()) out += k * e * k.adjoint();
        const Matrix expect = p * e + (1.0 - p) * e.trace() * Matrix::Identity(3, 3) / 3.0;
        CHECK(max_abs_diff(out, expect) < 1e-14);
      }
  }

  TEST_CASE("depolarizing(0.5, 2) environment entropy on half of Phi+") {
    // oracle: 4-Kraus Pauli environment, S(E) = 1.5487949406953985
    const auto ch = depolarizing_channel(0.5, 2);
    CHECK(ch.env_dim() == 4);
    CHECK(vn_entropy(complementary_apply(ch, DensityOperator::maximally_mixed(kQ2))) ==
          doctest::Approx(1.5487949406953985).epsilon(1e-12));
  }
}

TEST_SUITE("flagged_mixture") {
  const auto n1 = depolarizing_channel(0.3, 2);
  const auto n2 = erasure_channel(0.5, 2);

  DensityOperator conditional(const DensityOperator& out, std::size_t flag) {
    const std::size_t c = out.dim() / 2;
    Matrix m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c));
    for (std::size_t r = 0; r < c; ++r)
      for (std::size_t s = 0; s < c; ++s)
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(s)) =
            out.matrix()(static_cast<Eigen::Index>(r * 2 + flag), static_cast<Eigen::Index>(s * 2 + flag));
    return DensityOperator(SystemLayout::single("B", c), m / m.trace().real());
  }

  Matrix padded(const DensityOperator& rho, std::size_t c) {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c));
    m.topLeftCorner(rho.matrix().rows(), rho.matrix().cols()) = rho.matrix();
    return m;
  }

  TEST_CASE("flag marginal is diag(kappa, 1 - kappa) and branches are readable") {
    for (double kappa : {0.1, 0.5, 0.9}) {
      const auto ch = flagged_mixture(kappa, n1, n2);
      CHECK(ch.out_dim() == 6);
      const auto layout = flagged_output_layout(n1, n2);
      for (std::uint64_t s = 0; s < 10; ++s) {
        const auto rho = random_density(kQ2, s);
        const auto out = apply(ch, rho).relabeled(layout);
        CHECK(max_abs_diff(partial_trace(out, {"F"}).matrix(), diag({kappa, 1.0 - kappa})) < 1e-10);
        CHECK(max_abs_diff(conditional(out, 0).matrix(), padded(apply(n1, rho), 3)) < 1e-10);
        CHECK(max_abs_diff(conditional(out, 1).matrix(), padded(apply(n2, rho), 3)) < 1e-10);
      }
    }
  }

  TEST_CASE("kappa endpoints") {
    const auto rho = random_density(kQ2, 77);
    const auto layout = flagged_output_layout(n1, n2);
    const auto one = apply(flagged_mixture(1.0, n1, n2), rho).relabeled(layout);
    CHECK(max_abs_diff(partial_trace(one, {"F"}).matrix(), diag({1, 0})) < 1e-14);
    CHECK(max_abs_diff(partial_trace(one, {"B"}).matrix(), padded(apply(n1, rho), 3)) < 1e-14);
    const auto zero = apply(flagged_mixture(0.0, n1, n2), rho).relabeled(layout);
    CHECK(max_abs_diff(partial_trace(zero, {"F"}).matrix(), diag({0, 1})) < 1e-14);
    CHECK(max_abs_diff(partial_trace(zero, {"B"}).matrix(), apply(n2, rho).matrix()) < 1e-14);
  }

  TEST_CASE("input mismatch is rejected") {
    CHECK_THROWS_AS(flagged_mixture(0.5, n1, erasure_channel(0.5, 3)), std::invalid_argument);
    CHECK_THROWS_AS(flagged_mixture(1.5, n1, n2), std::invalid_argument);
  }
}

TEST_SUITE("apply and complement") {
  TEST_CASE("trace preservation on 100 random inputs per channel") {
    for (const auto& ch : catalogue()) {
      CHECK(ch.trace_preservation_error() <= 1e-10);
      for (std::uint64_t s = 0; s < 100; ++s) {
        const auto out = apply(ch, random_density(SystemLayout::single("A", ch.in_dim()), s));
        CHECK(std::abs(out.matrix().trace().real() - 1.0) <= 1e-10);
      }
    }
  }

  TEST_CASE("complementary consistency on pure inputs") {
    for (const auto& ch : catalogue())
      for (std::uint64_t s = 0; s < 20; ++s) {
        const auto psi = pure_input(ch.in_dim(), s);
        CHECK(std::abs(vn_entropy(apply(ch, psi)) - vn_entropy(complementary_apply(ch, psi))) <=
              1e-8);
      }
  }

  TEST_CASE("stinespring isometry reproduces both outputs") {
    const auto ch = depolarizing_channel(0.4, 2);
    const Matrix v = ch.stinespring();
    CHECK(max_abs_diff(v.adjoint() * v, Matrix::Identity(2, 2)) < 1e-12);
    const auto rho = random_density(kQ2, 8);
    const DensityOperator joint(SystemLayout{{"B", 2}, {"E", 4}}, v * rho.matrix() * v.adjoint());
    CHECK(max_abs_diff(partial_trace(joint, {"B"}).matrix(), apply(ch, rho).matrix()) < 1e-12);
    CHECK(max_abs_diff(partial_trace(joint, {"E"}).matrix(),
                       complementary_apply(ch, rho).matrix()) < 1e-12);
  }

  TEST_CASE("identity channel has a trivial environment") {
    const auto env = complementary_apply(identity_channel(3), random_density(SystemLayout::single("A", 3), 2));
    CHECK(env.dim() == 1);
    CHECK(vn_entropy(env) == 0.0);
  }

  TEST_CASE("apply_on acts on one factor only") {
    const auto phi = DensityOperator::max_entangled("A", "A'", 2);
    const auto out = apply_on(erasure_channel(0.5, 2), phi, "A'");
    CHECK(out.layout() == SystemLayout({{"A", 2}, {"A'", 3}}));
    CHECK(max_abs_diff(partial_trace(out, {"A"}).matrix(), Matrix::Identity(2, 2) / 2.0) < 1e-14);
  }

  TEST_CASE("dimension mismatch is rejected") {
    CHECK_THROWS_AS(apply(identity_channel(3), DensityOperator::maximally_mixed(kQ2)),
                    std::invalid_argument);
    CHECK_THROWS_AS(complementary_apply(identity_channel(3), DensityOperator::maximally_mixed(kQ2)),
                    std::invalid_argument);
  }

  TEST_CASE("non trace-preserving Kraus family is rejected") {
    CHECK_THROWS_AS(QuantumChannel("half", 2, 2, {0.5 * Matrix::Identity(2, 2)}), InvariantViolation);
    CHECK_THROWS_AS(QuantumChannel("shape", 2, 2, {Matrix::Identity(3, 2)}), std::invalid_argument);
  }
}

TEST_SUITE("choi_state") {
  TEST_CASE("identity channel gives Phi+") {
    CHECK(max_abs_diff(choi_state(identity_channel(2)).state().matrix(),
                       DensityOperator::max_entangled("A", "B", 2).matrix()) < 1e-15);
  }

  TEST_CASE("depolarizing(1/2, r) gives (P+ + I/r^2)/2") {
    for (std::size_t r : {2u, 3u}) {
      const auto n = static_cast<Eigen::Index>(r * r);
      const Matrix expect = 0.5 * (DensityOperator::max_entangled("A", "B", r).matrix() +
                                   Matrix::Identity(n, n) / static_cast<double>(r * r));
      CHECK(max_abs_diff(choi_state(depolarizing_channel(0.5, r)).state().matrix(), expect) < 1e-14);
    }
  }

  TEST_CASE("erasure(0.5, 2) Choi carries flag weight 1/2") {
    const auto c = choi_state(erasure_channel(0.5, 2));
    CHECK(c.in_dim() == 2);
    CHECK(c.out_dim() == 3);
    const auto b = partial_trace(c.state(), {"B"});
    CHECK(b.matrix()(2, 2).real() == doctest::Approx(0.5).epsilon(1e-14));
  }

  TEST_CASE("marginal condition for every channel") {
    for (const auto& ch : catalogue()) {
      const auto c = choi_state(ch);
      const auto n = static_cast<Eigen::Index>(ch.in_dim());
      CHECK(max_abs_diff(partial_trace(c.state(), {"A"}).matrix(),
                         Matrix::Identity(n, n) / static_cast<double>(n)) <= 1e-10);
    }
  }
}

TEST_SUITE("certify") {
  TEST_CASE("PPT examples") {
    const auto phi = is_ppt(DensityOperator::max_entangled("A", "B", 2), {"B"});
    CHECK_FALSE(phi.ppt);
    CHECK(phi.min_eigenvalue == doctest::Approx(-0.5).epsilon(1e-12));
    CHECK(is_ppt(random_product_density(SystemLayout{{"A", 2}, {"B", 3}}, 4), {"B"}).ppt);
    // oracle: PT min eigenvalue of choi(dep(1/3, 2)) is 0 (Werner boundary)
    const auto werner = is_ppt(choi_state(depolarizing_channel(1.0 / 3.0, 2)).state(), {"B"});
    CHECK(werner.ppt);
    CHECK(std::abs(werner.min_eigenvalue) < 1e-12);
    // oracle: -1/8 at p = 1/2
    CHECK(is_ppt(choi_state(depolarizing_channel(0.5, 2)).state(), {"B"}).min_eigenvalue ==
          doctest::Approx(-0.125).epsilon(1e-12));
  }

  TEST_CASE("two-symmetric extension certificate for r = 2, 3") {
    for (std::size_t r : {2u, 3u}) {
      const auto rep = verify_two_symmetric_extension(0.5, r);
      CHECK(rep.psd());
      CHECK(rep.marginal_ok());
      CHECK(rep.symmetric());
      CHECK(rep.passed());
    }
  }

  TEST_CASE("perturbed extension fails the swap check") {
    const std::size_t r = 2;
    const auto target = choi_state(depolarizing_channel(0.5, r)).state();
    Matrix cand = depolarizing_symmetric_extension(r);
    // Z on B, identity on A and B': Hermitian, traceless, not swap invariant
    const Matrix z = diag({1, -1});
    Matrix term = Matrix::Zero(8, 8);
    for (Eigen::Index a = 0; a < 2; ++a)
      for (Eigen::Index b = 0; b < 2; ++b)
        for (Eigen::Index c = 0; c < 2; ++c) term((a * 2 + b) * 2 + c, (a * 2 + b) * 2 + c) = z(b, b);
    cand += 0.05 * term;
    const auto rep = check_two_symmetric_extension(cand, target);
    CHECK_FALSE(rep.symmetric());
    CHECK_FALSE(rep.passed());
  }

  TEST_CASE("only p = 1/2 has a witness") {
    CHECK_THROWS_AS(verify_two_symmetric_extension(0.4, 2), std::invalid_argument);
  }
}

TEST_SUITE("channel json") {
  TEST_CASE("round trip preserves the channel") {
    for (const auto& ch : catalogue()) {
      const auto back = channel_from_json(channel_to_json(ch));
      CHECK(back.name() == ch.name());
      CHECK(back.in_dim() == ch.in_dim());
      CHECK(back.out_dim() == ch.out_dim());
      REQUIRE(back.kraus().size() == ch.kraus().size());
      for (std::size_t i = 0; i < ch.kraus().size(); ++i) CHECK(back.kraus()[i] == ch.kraus()[i]);
    }
  }

  TEST_CASE("wire format") {
    const auto text = channel_to_json(identity_channel(2), -1);
    CHECK(text ==
          R"({"in_dim":2,"kraus":[[[1.0,0.0],[0.0,0.0],[0.0,0.0],[1.0,0.0]]],"name":"identity","out_dim":2})");
  }

  TEST_CASE("malformed documents are rejected") {
    CHECK_THROWS_AS(channel_from_json("{"), std::invalid_argument);
    CHECK_THROWS_AS(channel_from_json(R"({"in_dim":2,"out_dim":2,"kraus":[[[1,0]]]})"),
                    std::invalid_argument);
    CHECK_THROWS_AS(channel_from_json(R"({"in_dim":2,"out_dim":2,"kraus":[[[0.5,0],[0,0],[0,0],[0.5,0]]]})"),
                    InvariantViolation);
  }
}
