// Copyright 2026 The blochdense Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "blochdense/channel.hpp"
#include "blochdense/error.hpp"
#include "support/oracles.hpp"

namespace blochdense {
namespace {

BlochPair random_state(oracle::Rng& rng, int rank = 4) {
  return from_density(DensityMatrix(oracle::random_density(rng, rank)));
}

QubitRelaxation random_qubit(oracle::Rng& rng) {
  return {oracle::uniform(rng, 10.0, 200.0), oracle::uniform(rng, 0.05, 2.0),
          oracle::uniform(rng, -1.0, 1.0)};
}

ChannelParams random_params(oracle::Rng& rng) {
  return {random_qubit(rng), random_qubit(rng), EvolutionMode::kConsistent, true};
}

double max_diff(const BlochPair& a, const BlochPair& b) {
  return std::max({(a.s - b.s).cwiseAbs().maxCoeff(), (a.r - b.r).cwiseAbs().maxCoeff(),
                   (a.q - b.q).cwiseAbs().maxCoeff()});
}

TEST(Factors, Examples) {
  const auto f0 = factors({100.0, 0.5, 0.3}, 0.0);
  EXPECT_EQ(f0.beta, 1.0);
  EXPECT_EQ(f0.gamma, 1.0);

  const auto f1 = factors({100.0, 1.0, 0.0}, 100.0);
  EXPECT_NEAR(f1.beta, oracle::kInvE, 1e-15);
  EXPECT_NEAR(f1.gamma, oracle::kInvE, 1e-15);

  const auto f2 = factors({100.0, 0.5, 0.0}, 100.0);
  EXPECT_NEAR(f2.beta, oracle::kInvE, 1e-15);
  EXPECT_NEAR(f2.gamma, oracle::kInvSqrtE, 1e-15);
  EXPECT_NEAR(f2.gamma, std::pow(f2.beta, 0.5), 1e-15);
}

TEST(Factors, MonotoneAndBounded) {
  const QubitRelaxation q{50.0, 0.7, 0.2};
  double prev_b = 1.0, prev_g = 1.0;
  for (int k = 0; k <= 400; ++k) {
    const auto f = factors(q, k * 0.75);
    ASSERT_LE(f.beta, prev_b);
    ASSERT_LE(f.gamma, prev_g);
    ASSERT_GT(f.beta, 0.0);
    ASSERT_GT(f.gamma, 0.0);
    prev_b = f.beta;
    prev_g = f.gamma;
  }
}

TEST(Factors, RejectsBadInput) {
  EXPECT_THROW(factors({100.0, 1.0, 0.0}, -1.0), ValidationError);
  EXPECT_THROW(factors({0.0, 1.0, 0.0}, 1.0), ValidationError);
  EXPECT_THROW(factors({100.0, -1.0, 0.0}, 1.0), ValidationError);
  EXPECT_THROW(factors({100.0, 1.0, 1.5}, 1.0), ValidationError);
}

TEST(QubitRelaxation, FromTimes) {
  const auto q = QubitRelaxation::from_times(200.0, 100.0, 0.9);
  EXPECT_DOUBLE_EQ(q.alpha, 0.5);
  EXPECT_DOUBLE_EQ(q.t1(), 200.0);
  EXPECT_THROW(QubitRelaxation::from_times(0.0, 100.0, 0.0), ValidationError);
}

TEST(SingleQubitMap, Examples) {
  const QubitRelaxation q{100.0, 1.0, 0.4};
  const auto m0 = single_qubit_map(q, 0.0);
  EXPECT_EQ(m0.scale, Vec3::Ones());
  EXPECT_EQ(m0.shift, Vec3::Zero());

  const auto m1 = single_qubit_map(q, 100.0);
  EXPECT_NEAR((m1.scale - Vec3::Constant(oracle::kInvE)).cwiseAbs().maxCoeff(), 0.0, 1e-15);

  const auto inf = single_qubit_map(q, 1e5);
  EXPECT_LT(inf.scale.maxCoeff(), 1e-300);
  EXPECT_NEAR(inf.shift(2), 0.4, 1e-15);
}

TEST(SingleQubitMap, SolvesBlochEquations) {
  // d/dt v = -v_xy / T2, d/dt v_z = -(v_z - z_eq) / T1, integrated by RK4.
  const QubitRelaxation q{80.0, 0.6, -0.3};
  Vec3 v(0.3, -0.5, 0.6);
  const Vec3 v0 = v;
  auto rhs = [&](const Vec3& x) {
    return Vec3(-x(0) / q.t2, -x(1) / q.t2, -(x(2) - q.z_eq) / q.t1());
  };
  const double dt = 0.01;
  for (int k = 0; k < 5000; ++k) {
    const Vec3 k1 = rhs(v), k2 = rhs(v + 0.5 * dt * k1), k3 = rhs(v + 0.5 * dt * k2), k4 = rhs(v + dt * k3);
    v += dt / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
  }
  EXPECT_LE((single_qubit_map(q, 50.0).apply(v0) - v).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(Evolve, ConsistentIsIdentityAtZero) {
  oracle::Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    const BlochPair b = random_state(rng);
    const BlochPair out = evolve(b, random_params(rng), 0.0);
    EXPECT_EQ(max_diff(out, b), 0.0);
  }
}

TEST(Evolve, SingletRelaxesToProductEquilibrium) {
  const ChannelParams p{{100.0, 0.5, 0.7}, {100.0, 0.5, -0.4}, EvolutionMode::kConsistent, true};
  const double t = 1e5;
  const auto fa = factors(p.qubit_a, t);
  ASSERT_LT(fa.gamma, 1e-12);
  const BlochPair out = evolve(bell_state(BellKind::kPsiMinus), p, t);
  BlochPair expected;
  expected.s = Vec3(0, 0, 0.7);
  expected.r = Vec3(0, 0, -0.4);
  expected.q(2, 2) = 0.7 * -0.4;
  EXPECT_LE(max_diff(out, expected), 1e-12);
}

TEST(Evolve, MatchesKrausOracle) {
  oracle::Rng rng(22);
  for (int trial = 0; trial < 500; ++trial) {
    const BlochPair b = random_state(rng, 1 + trial % 4);
    const ChannelParams p = random_params(rng);
    const double t = oracle::uniform(rng, 0.0, 400.0);
    const BlochPair closed = evolve(b, p, t);
    const DensityMatrix kraus =
        kraus_apply(to_density(b), kraus_set(p.qubit_a, t), kraus_set(p.qubit_b, t));
    ASSERT_LE(max_diff(closed, from_density(kraus)), 1e-10) << "trial " << trial;
  }
}

TEST(Evolve, SemigroupProperty) {
  oracle::Rng rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const BlochPair b = random_state(rng);
    const ChannelParams p = random_params(rng);
    const double t1 = oracle::uniform(rng, 0.0, 200.0);
    const double t2 = oracle::uniform(rng, 0.0, 200.0);
    ASSERT_LE(max_diff(evolve(evolve(b, p, t1), p, t2), evolve(b, p, t1 + t2)), 1e-10);
  }
}

TEST(Evolve, EquilibriumIsFixedPoint) {
  oracle::Rng rng(24);
  for (int trial = 0; trial < 100; ++trial) {
    const ChannelParams p = random_params(rng);
    const BlochPair eq = product_state(Vec3(0, 0, p.qubit_a.z_eq), Vec3(0, 0, p.qubit_b.z_eq));
    ASSERT_LE(max_diff(evolve(eq, p, oracle::uniform(rng, 0.0, 500.0)), eq), 1e-12);
  }
}

TEST(Evolve, OutputStaysPhysical) {
  oracle::Rng rng(25);
  for (int trial = 0; trial < 200; ++trial) {
    const BlochPair b = random_state(rng, 1 + trial % 4);
    const DensityMatrix out = to_density(evolve(b, random_params(rng), oracle::uniform(rng, 0.0, 300.0)));
    const Validation v = validate(out);
    ASSERT_TRUE(v.ok) << v.diagnostic;
  }
}

TEST(Evolve, StrictModeRejectsNonPhysicalRatio) {
  ChannelParams p{{100.0, 2.5, 0.0}, {100.0, 0.5, 0.0}, EvolutionMode::kConsistent, true};
  const BlochPair b = bell_state(BellKind::kPsiMinus);
  EXPECT_THROW(evolve(b, p, 10.0), CptpViolation);
  EXPECT_NO_THROW(evolve(b, p, 0.0));
  p.strict_cptp = false;
  EXPECT_NO_THROW(evolve(b, p, 10.0));
  // alpha == 2 is the amplitude-damping boundary and stays allowed.
  p = {{100.0, 2.0, 1.0}, {100.0, 2.0, 1.0}, EvolutionMode::kConsistent, true};
  EXPECT_NO_THROW(evolve(b, p, 37.0));
}

TEST(Evolve, RejectsNegativeTime) {
  const ChannelParams p;
  EXPECT_THROW(evolve(BlochPair{}, p, -1e-9), ValidationError);
}

TEST(Evolve, VerbatimComponentFormulas) {
  BlochPair b;
  b.s = Vec3(0.11, 0.13, 0.17);
  b.r = Vec3(0.19, 0.23, 0.29);
  b.q << 0.31, 0.37, 0.41, 0.43, 0.47, 0.53, 0.59, 0.61, 0.67;
  const double za = 0.8, zb = -0.6;
  const ChannelParams p{{100.0, 0.5, za}, {70.0, 0.9, zb}, EvolutionMode::kVerbatim, false};
  const double t = 40.0;
  const double b1 = std::exp(-t / 100.0), g1 = std::exp(-0.5 * t / 100.0);
  const double b2 = std::exp(-t / 70.0), g2 = std::exp(-0.9 * t / 70.0);
  const BlochPair v = evolve(b, p, t);
  const double tol = 1e-15;
  EXPECT_NEAR(v.s(0), 0.11 * b1, tol);
  EXPECT_NEAR(v.s(1), -b1 * 0.13, tol);
  EXPECT_NEAR(v.s(2), g1 * 0.17 + (1 - g1) * za, tol);
  EXPECT_NEAR(v.r(1), -b2 * 0.23, tol);
  EXPECT_NEAR(v.q(0, 1), -0.37 * b1 * b2, tol);
  EXPECT_NEAR(v.q(1, 0), -0.37 * b1 * b2, tol);  // q12, not q21
  EXPECT_NEAR(v.q(0, 2), b1 * g2 * 0.41 + b1 * (1 - g2) * za * 0.11, tol);
  EXPECT_NEAR(v.q(1, 2), -b1 * g2 * 0.53 - b1 * (1 - g2) * zb * 0.13, tol);
  EXPECT_NEAR(v.q(2, 0), b2 * g1 * 0.59 + b2 * (1 - g1) * za * 0.19, tol);
  EXPECT_NEAR(v.q(2, 1), -b2 * g1 * 0.61 - b2 * (1 - g1) * za * 0.23, tol);
  EXPECT_NEAR(v.q(2, 2),
              g1 * g2 * 0.67 + (1 - g1) * (1 - g2) * za * zb + g1 * (1 - g2) * zb * 0.17 +
                  g2 * (1 - g1) * zb * 0.29,
              tol);
}

TEST(Evolve, VerbatimAgreesWithConsistentOnUnflippedComponents) {
  oracle::Rng rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    const BlochPair b = random_state(rng);
    ChannelParams p = random_params(rng);
    const double t = oracle::uniform(rng, 0.0, 300.0);
    const BlochPair c = evolve(b, p, t);
    p.mode = EvolutionMode::kVerbatim;
    const BlochPair v = evolve(b, p, t);
    ASSERT_DOUBLE_EQ(v.s(0), c.s(0));
    ASSERT_NEAR(v.s(2), c.s(2), 1e-15);
    ASSERT_DOUBLE_EQ(v.r(0), c.r(0));
    ASSERT_NEAR(v.r(2), c.r(2), 1e-15);
    ASSERT_NEAR(v.q(0, 0), c.q(0, 0), 1e-15);
    ASSERT_NEAR(v.q(1, 1), c.q(1, 1), 1e-15);
    ASSERT_NEAR(v.q(2, 0), c.q(2, 0), 1e-15);
    // Flipped components differ only in sign.
    ASSERT_NEAR(v.s(1), -c.s(1), 1e-15);
    ASSERT_NEAR(v.r(1), -c.r(1), 1e-15);
    ASSERT_NEAR(v.q(2, 1), -c.q(2, 1), 1e-15);

    // With equal equilibrium values the relabelled terms coincide too.
    p.qubit_b.z_eq = p.qubit_a.z_eq;
    p.mode = EvolutionMode::kConsistent;
    const BlochPair c2 = evolve(b, p, t);
    p.mode = EvolutionMode::kVerbatim;
    const BlochPair v2 = evolve(b, p, t);
    ASSERT_NEAR(v2.q(2, 2), c2.q(2, 2), 1e-15);
    ASSERT_NEAR(v2.q(0, 2), c2.q(0, 2), 1e-15);
  }
}

TEST(Evolve, VerbatimEqualsConsistentForSinglet) {
  const ChannelParams c{{100.0, 0.5, 1.0}, {100.0, 0.5, 0.9}, EvolutionMode::kConsistent, true};
  ChannelParams v = c;
  v.mode = EvolutionMode::kVerbatim;
  const BlochPair singlet = bell_state(BellKind::kPsiMinus);
  for (double t : {0.0, 10.0, 150.0}) {
    EXPECT_LE(max_diff(evolve(singlet, c, t), evolve(singlet, v, t)), 1e-15);
  }
}

TEST(Evolve, UnitalChannelLosesPurityMonotonically) {
  oracle::Rng rng(27);
  for (int trial = 0; trial < 20; ++trial) {
    const BlochPair b = random_state(rng, 1);
    ChannelParams p = random_params(rng);
    p.qubit_a.z_eq = p.qubit_b.z_eq = 0.0;
    double prev = purity(to_density(b));
    for (int k = 1; k <= 300; ++k) {
      const double cur = purity(to_density(evolve(b, p, k)));
      ASSERT_LE(cur, prev + 1e-14);
      prev = cur;
    }
  }
}

TEST(Kraus, CompleteAndRealisesTheBlochMap) {
  oracle::Rng rng(28);
  for (int trial = 0; trial < 300; ++trial) {
    const QubitRelaxation q = random_qubit(rng);
    const double t = oracle::uniform(rng, 0.0, 400.0);
    const KrausSet set = kraus_set(q, t);
    ASSERT_LE(completeness_residual(set), 1e-12);
    const SingleQubitAffineMap map = single_qubit_map(q, t);
    for (const Vec3 v : {Vec3(0, 0, 0), Vec3(1, 0, 0), Vec3(0, 1, 0), Vec3(0, 0, 1), Vec3(0, 0, -1),
                         Vec3(0.3, -0.4, 0.5)}) {
      Mat2c out = Mat2c::Zero();
      const Mat2c rho = qubit_density(v).matrix();
      for (const Mat2c& k : set) out += k * rho * k.adjoint();
      ASSERT_LE((bloch_vector(QubitDensity(out)) - map.apply(v)).cwiseAbs().maxCoeff(), 1e-12);
    }
  }
}

TEST(Kraus, IdentityAtZero) {
  const KrausSet set = kraus_set({100.0, 0.7, 0.3}, 0.0);
  Mat2c sum = Mat2c::Zero();
  for (const Mat2c& k : set) {
    // every surviving operator is a multiple of the identity
    EXPECT_LE((k - k(0, 0) * Mat2c::Identity()).cwiseAbs().maxCoeff(), 1e-15);
    sum += k.adjoint() * k;
  }
  EXPECT_LE((sum - Mat2c::Identity()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(Kraus, PureAmplitudeDamping) {
  const double t = 30.0;
  const KrausSet set = kraus_set({100.0, 2.0, 1.0}, t);
  const double gamma = std::exp(-2.0 * t / 100.0);
  ASSERT_EQ(set.size(), 2u);
  Mat2c k0, k1;
  k0 << 1, 0, 0, std::sqrt(gamma);
  k1 << 0, std::sqrt(1 - gamma), 0, 0;
  EXPECT_LE((set[0] - k0).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE((set[1] - k1).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LE(completeness_residual(set), 1e-15);
}

TEST(Kraus, NoSetBeyondThePhysicalBound) {
  EXPECT_THROW(kraus_set({100.0, 3.0, 0.0}, 50.0), CptpViolation);
}

TEST(KrausApply, IdentitySetsLeaveStateUnchanged) {
  oracle::Rng rng(29);
  const DensityMatrix m(oracle::random_density(rng));
  const KrausSet id{Mat2c::Identity()};
  EXPECT_LE((kraus_apply(m, id, id).matrix() - m.matrix()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(KrausApply, SingletToEquilibrium) {
  const QubitRelaxation a{100.0, 1.0, 0.6}, b{100.0, 1.0, -0.2};
  const double t = 1e5;
  const DensityMatrix out = kraus_apply(to_density(bell_state(BellKind::kPsiMinus)), kraus_set(a, t), kraus_set(b, t));
  const Mat4c expected = oracle::kron(qubit_density(Vec3(0, 0, 0.6)).matrix(), qubit_density(Vec3(0, 0, -0.2)).matrix());
  EXPECT_LE((out.matrix() - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_NEAR(out.matrix().trace().real(), 1.0, 1e-12);
}

TEST(KrausApply, RejectsIncompleteSet) {
  const KrausSet half{Mat2c::Identity() * 0.5};
  EXPECT_THROW(kraus_apply(DensityMatrix(), half, KrausSet{Mat2c::Identity()}), ValidationError);
  EXPECT_THROW(kraus_apply(DensityMatrix(), KrausSet{}, KrausSet{Mat2c::Identity()}), ValidationError);
}

TEST(Choi, IdentityMap) {
  const Mat4c choi = choi_matrix(SingleQubitAffineMap::identity());
  oracle::V4 omega;
  omega << 1, 0, 0, 1;
  EXPECT_LE((choi - oracle::projector(omega)).cwiseAbs().maxCoeff(), 1e-15);
  const Spectrum s = eig_hermitian(choi);
  EXPECT_NEAR(s.values(0), 2.0, 1e-14);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(s.values(k), 0.0, 1e-14);
  EXPECT_TRUE(is_cptp(SingleQubitAffineMap::identity()));
}

TEST(Choi, UnitalViolationMatchesClosedForm) {
  const SingleQubitAffineMap m{Vec3(0.9, 0.9, 0.5), Vec3::Zero()};
  auto expected = oracle::unital_choi_eigenvalues(0.9, 0.9, 0.5);
  std::sort(expected.begin(), expected.end(), std::greater<>());
  const Spectrum s = eig_hermitian(choi_matrix(m));
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(s.values(k), expected[static_cast<std::size_t>(k)], 1e-14);
  EXPECT_NEAR(s.values(3), -0.15, 1e-14);
  EXPECT_FALSE(is_cptp(m));
}

TEST(Choi, AmplitudeDampingBoundaryIsPsd) {
  const SingleQubitAffineMap m{Vec3(0.6, 0.6, 0.36), Vec3(0, 0, 0.64)};
  const Spectrum s = eig_hermitian(choi_matrix(m));
  // Choi of amplitude damping with decay 0.64: rank 2, eigenvalues {1.36, 0.64, 0, 0}.
  EXPECT_NEAR(s.values(0), 1.36, 1e-14);
  EXPECT_NEAR(s.values(1), 0.64, 1e-14);
  EXPECT_NEAR(s.values(2), 0.0, 1e-14);
  EXPECT_NEAR(s.values(3), 0.0, 1e-14);
  EXPECT_TRUE(is_cptp(m));
}

TEST(Choi, BlochMapsWithinBoundAreCptp) {
  for (int ia = 1; ia <= 40; ++ia) {
    const double alpha = 0.05 * ia;
    for (double z : {-1.0, -0.3, 0.0, 0.9, 1.0}) {
      for (int it = 0; it <= 60; ++it) {
        ASSERT_TRUE(is_cptp(single_qubit_map({100.0, alpha, z}, 10.0 * it)))
            << "alpha=" << alpha << " z=" << z << " t=" << 10.0 * it;
      }
    }
  }
}

TEST(Choi, ViolationBeyondBoundAtEarlyTimes) {
  // For scale (b, b, b^4) complete positivity needs 1 + b^4 >= 2 b, which
  // fails only while b > 0.5437, i.e. t < 0.609 T2.
  EXPECT_FALSE(is_cptp(single_qubit_map({100.0, 4.0, 0.0}, 25.0)));
  EXPECT_FALSE(is_cptp(single_qubit_map({100.0, 4.0, 1.0}, 25.0)));
  EXPECT_FALSE(is_cptp(single_qubit_map({100.0, 4.0, 0.0}, 60.0)));
  EXPECT_TRUE(is_cptp(single_qubit_map({100.0, 4.0, 0.0}, 61.0)));

  const auto late = single_qubit_map({100.0, 4.0, 0.0}, 100.0);
  auto expected = oracle::unital_choi_eigenvalues(late.scale(0), late.scale(1), late.scale(2));
  const Spectrum s = eig_hermitian(choi_matrix(late));
  EXPECT_NEAR(s.values(3), *std::min_element(expected.begin(), expected.end()), 1e-14);
  EXPECT_GT(s.values(3), 0.0);
  EXPECT_TRUE(is_cptp(late));
}

TEST(Choi, TracePreservationFailureDetected) {
  SingleQubitAffineMap m;
  Mat4c choi = choi_matrix(m);
  EXPECT_NEAR(choi.trace().real(), 2.0, 1e-15);
  // Shrinking the identity component would break trace preservation; the
  // affine form cannot express that, so is_cptp only ever fails on positivity.
  m.scale = Vec3(1.0, 1.0, 1.0);
  m.shift = Vec3(0.0, 0.0, 0.5);
  EXPECT_FALSE(is_cptp(m));
}

}  // namespace
}  // namespace blochdense
