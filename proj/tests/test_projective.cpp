#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"

using namespace projgb;
using projgb::testing::poly;
using projgb::testing::random_affine;
using projgb::testing::random_projective;
using projgb::testing::texts;

namespace {

using Strings = std::vector<std::string>;

PointSet affine(std::size_t n, std::vector<Point> pts) { return PointSet::affine(n, std::move(pts)); }
PointSet projective(std::size_t n, std::vector<Point> pts) { return PointSet::projective(n, std::move(pts)); }

PointSet p1_three() { return projective(1, {{1, 0}, {1, 1}, {0, 1}}); }
PointSet p2_coordinate() { return projective(2, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}); }

} // namespace

TEST(ChartLift, TwoPointsOnTheLine) {
  EXPECT_EQ(texts(lift_affine_chart(affine(1, {{0}, {1}})).basis), (Strings{"X2^2 - X1*X2"}));
}

TEST(ChartLift, ThreeCoordinatePoints) {
  const auto r = lift_affine_chart(affine(2, {{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(texts(r.basis), (Strings{"X2^2 - X1*X2", "X2*X3", "X3^2 - X1*X3"}));
  for (const auto& step : r.steps)
    if (step.emitted) { EXPECT_EQ(step.r, 0u); }
}

TEST(ChartLift, ParabolaNeedsOneExtraDegree) {
  const auto r = lift_affine_chart(affine(2, {{0, 0}, {1, 1}, {2, 4}}));
  const auto t = texts(r.basis);
  EXPECT_NE(std::find(t.begin(), t.end(), "X1*X3 - X2^2"), t.end());
  const auto step = std::find_if(r.steps.begin(), r.steps.end(),
                                 [](const LiftStep& s) { return s.alpha == ExponentVector{0, 1}; });
  ASSERT_NE(step, r.steps.end());
  EXPECT_EQ(step->r, 1u);
  EXPECT_TRUE(step->emitted);
  EXPECT_EQ(r.degree_bound, 4u);
  EXPECT_TRUE(certify(r.basis, projective(2, {{1, 0, 0}, {1, 1, 1}, {1, 2, 4}})).pass);
}

TEST(ChartLift, RejectsBadInput) {
  EXPECT_THROW(lift_affine_chart(affine(2, {})), InputError);
  EXPECT_THROW(lift_affine_chart(projective(1, {{1, 0}})), InputError);
}

TEST(ChartLift, ElementsAreHomogenizationsAndCoverTheLexStaircase) {
  std::mt19937_64 rng(51);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + t % 3, s = 1 + t % 8;
    const auto a1 = random_affine(rng, n, s);
    const auto r = lift_affine_chart(a1);
    const auto lex = buchberger_moeller(a1, TermOrder::lex);
    // every element is homogeneous and not divisible by X1
    for (const auto& g : r.basis.elements) {
      EXPECT_TRUE(g.is_homogeneous());
      EXPECT_EQ(homogenize(dehomogenize(g)), g);
    }
    // projected corners generate the lex initial ideal on the box
    std::vector<ExponentVector> projected;
    for (const auto& e : r.basis.leading_exponents()) projected.push_back(e.project());
    const Staircase proj(n, projected);
    for (const auto& e : exponent_box(n, r.degree_bound, TermOrder::lex)) EXPECT_EQ(proj.in_C(e), lex.staircase.in_C(e));
    for (const auto& c : projected) EXPECT_TRUE(lex.staircase.in_C(c));
    // the cone ideal of the lines through (1, a)
    std::vector<Point> lifted;
    for (const auto& p : a1.points()) {
      Point q{1};
      q.insert(q.end(), p.begin(), p.end());
      lifted.push_back(q);
    }
    const auto cone = projective(n, lifted);
    EXPECT_TRUE(certify(r.basis, cone).pass);
    // axes are exactly (0, sigma) + N e_1 for sigma standard under lex
    const auto axes = axis_census(Staircase::of(r.basis));
    std::vector<ExponentVector> bases;
    for (const auto& ax : axes.axes) {
      EXPECT_EQ(ax.direction, 0u);
      bases.push_back(ax.base.project());
    }
    auto expected = lex.standard_monomials;
    std::sort(bases.begin(), bases.end());
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(bases, expected);
  }
}

TEST(LiftInfinitePart, Examples) {
  EXPECT_EQ(texts(lift_infinite_part(GroebnerBasis{1, TermOrder::deglex, {}})), (Strings{"X1"}));
  EXPECT_TRUE(lift_infinite_part(GroebnerBasis::unit(2, TermOrder::deglex)).is_unit());
  const auto sub = projective_gb(projective(1, {{1, 0}, {0, 1}}));
  EXPECT_EQ(texts(sub), (Strings{"X1*X2"}));
  const auto lifted = lift_infinite_part(sub);
  EXPECT_EQ(texts(lifted), (Strings{"X1", "X2*X3"}));
  EXPECT_TRUE(certify(lifted, projective(2, {{0, 1, 0}, {0, 0, 1}})).pass);
}

TEST(DegreeSlice, AgreesWithNormalForms) {
  std::mt19937_64 rng(52);
  for (int t = 0; t < 20; ++t) {
    const auto a = random_projective(rng, 1 + t % 3, 1 + t % 7);
    const auto gb = projective_gb(a);
    const Staircase st = Staircase::of(gb);
    for (std::size_t d = 0; d <= st.max_corner_degree() + 1; ++d) {
      const DegreeSlice slice(gb, d);
      for (const auto& gamma : monomials_of_degree(gb.arity, d)) {
        ASSERT_EQ(slice.in_C(gamma), st.in_C(gamma));
        if (st.in_C(gamma)) { EXPECT_EQ(slice.canonical(gamma), canonical_element(gamma, gb)); }
      }
    }
  }
}

TEST(Merge, ThreePointsOfTheLine) {
  const GroebnerBasis gb0{2, TermOrder::deglex, {poly(2, {{{1, 0}, 1}})}};
  const GroebnerBasis gb1{2, TermOrder::deglex, {poly(2, {{{0, 2}, 1}, {{1, 1}, -1}})}};
  MergeStats stats;
  const auto gb = merge(gb0, gb1, p1_three(), &stats);
  EXPECT_EQ(texts(gb), (Strings{"X1*X2^2 - X1^2*X2"}));
  EXPECT_EQ(stats.rounds, 1u);
  EXPECT_EQ(stats.degree_cap, 4u);
}

TEST(Merge, CoordinatePointsOfThePlane) {
  const GroebnerBasis gb1{3, TermOrder::deglex, {poly(3, {{{0, 1, 0}, 1}}), poly(3, {{{0, 0, 1}, 1}})}};
  const GroebnerBasis gb0{3, TermOrder::deglex, {poly(3, {{{1, 0, 0}, 1}}), poly(3, {{{0, 1, 1}, 1}})}};
  EXPECT_EQ(texts(merge(gb0, gb1, p2_coordinate())), (Strings{"X1*X2", "X1*X3", "X2*X3"}));
}

TEST(Merge, UnitSideReturnsTheOther) {
  const auto a = projective(1, {{1, 0}, {1, 1}});
  const GroebnerBasis gb1 = lift_affine_chart(affine(1, {{0}, {1}})).basis;
  EXPECT_EQ(merge(GroebnerBasis::unit(2, TermOrder::deglex), gb1, a), gb1);
}

TEST(Merge, SharedPointIsAnInputError) {
  const GroebnerBasis gb0{2, TermOrder::deglex, {poly(2, {{{1, 0}, 1}})}};
  // both sides vanish at [0:1]
  const GroebnerBasis gb1{2, TermOrder::deglex, {poly(2, {{{1, 1}, 1}})}};
  EXPECT_THROW(merge(gb0, gb1, projective(1, {{0, 1}}), nullptr), InputError);
  EXPECT_THROW(merge(gb0, gb1, affine(1, {{0}})), InputError);
}

TEST(ProjectiveGb, WorkedExamples) {
  EXPECT_EQ(texts(projective_gb(p1_three())), (Strings{"X1*X2^2 - X1^2*X2"}));
  EXPECT_EQ(texts(projective_gb(p2_coordinate())), (Strings{"X1*X2", "X1*X3", "X2*X3"}));
  EXPECT_EQ(texts(projective_gb(projective(3, {{1, 0, 0, 0}}))), (Strings{"X2", "X3", "X4"}));
}

TEST(ProjectiveGb, EdgeCases) {
  EXPECT_TRUE(projective_gb(projective(2, {})).is_unit());
  EXPECT_TRUE(projective_gb(projective(0, {{5}})).is_zero_ideal());
  EXPECT_EQ(texts(projective_gb(projective(2, {{0, 0, 1}}))), (Strings{"X1", "X2"}));
  EXPECT_THROW(projective_gb(affine(1, {{0}})), InputError);
}

TEST(ProjectiveGb, AgreesWithKernelOfEvaluation) {
  // independent route: every form of degree 1..s vanishing on the points,
  // read off the kernel of the evaluation map, then Buchberger
  std::mt19937_64 rng(53);
  for (int t = 0; t < 18; ++t) {
    const std::size_t n = 1 + t % 3, s = 1 + t % 5;
    const auto a = random_projective(rng, n, s);
    const auto gb = projective_gb(a);
    std::vector<Polynomial> forms;
    for (std::size_t d = 1; d <= s; ++d) {
      const auto mons = monomials_of_degree(n + 1, d);
      Matrix ev(a.size(), mons.size());
      for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t c = 0; c < mons.size(); ++c) ev(i, c) = evaluate_monomial(mons[c], a[i]);
      const auto e = rref(ev);
      std::vector<bool> pivot(mons.size(), false);
      for (auto p : e.pivots) pivot[p] = true;
      for (std::size_t f = 0; f < mons.size(); ++f) {
        if (pivot[f]) continue;
        std::vector<Term> terms{{mons[f], 1}};
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
          if (!is_zero(e.reduced(r, f))) terms.push_back({mons[e.pivots[r]], -e.reduced(r, f)});
        forms.push_back(Polynomial::from_terms(n + 1, TermOrder::deglex, std::move(terms)));
      }
    }
    EXPECT_EQ(buchberger(forms, TermOrder::deglex), gb);
  }
}

TEST(ProjectiveGb, PointOrderDoesNotMatter) {
  std::mt19937_64 rng(54);
  for (int t = 0; t < 30; ++t) {
    const auto a = random_projective(rng, 1 + t % 3, 2 + t % 6);
    auto pts = a.points();
    std::shuffle(pts.begin(), pts.end(), rng);
    EXPECT_EQ(projective_gb(projective(a.dimension(), pts)), projective_gb(a));
  }
}

TEST(ProjectiveGb, AxesCountChartSizes) {
  std::mt19937_64 rng(55);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 3, s = 1 + t % 8;
    const auto a = random_projective(rng, n, s);
    const auto gb = projective_gb(a);
    const auto report = axis_census(Staircase::of(gb));
    const auto charts = split_charts(a);
    for (std::size_t j = 0; j <= n; ++j) EXPECT_EQ(report.per_direction[j], charts.charts[j].size());
    EXPECT_EQ(report.total, a.size());
    EXPECT_TRUE(report.bounded);
  }
}

TEST(Hilbert, Examples) {
  EXPECT_EQ(hilbert_function(p1_three(), 0), 1u);
  EXPECT_EQ(hilbert_function(p1_three(), 1), 2u);
  EXPECT_EQ(hilbert_function(p1_three(), 3), 3u);
  std::vector<std::size_t> h;
  for (std::size_t d = 0; d < 4; ++d) h.push_back(hilbert_function(p2_coordinate(), d));
  EXPECT_EQ(h, (std::vector<std::size_t>{1, 3, 3, 3}));
  EXPECT_EQ(hilbert_function(projective(2, {}), 0), 0u);
  EXPECT_THROW(hilbert_function(affine(1, {{0}}), 1), InputError);
}

TEST(Hilbert, ReachesPointCountByDegreeSMinusOne) {
  std::mt19937_64 rng(56);
  for (int t = 0; t < 40; ++t) {
    const std::size_t s = 1 + t % 8;
    const auto a = random_projective(rng, 1 + t % 3, s);
    for (std::size_t d = s - 1; d <= s + 1; ++d) EXPECT_EQ(hilbert_function(a, d), s);
    std::size_t prev = 0;
    for (std::size_t d = 0; d < s; ++d) {
      const std::size_t v = hilbert_function(a, d);
      EXPECT_GE(v, prev);
      prev = v;
    }
  }
}

TEST(Certificate, PassesOnComputedBases) {
  EXPECT_TRUE(certify(projective_gb(p1_three()), p1_three()).pass);
  EXPECT_TRUE(certify(projective_gb(p2_coordinate()), p2_coordinate()).pass);
}

TEST(Certificate, SignFlipOnATailTermFails) {
  auto gb = projective_gb(p1_three());
  auto terms = std::vector<Term>(gb.elements[0].terms().begin(), gb.elements[0].terms().end());
  terms[1].coefficient = -terms[1].coefficient;
  gb.elements[0] = Polynomial::from_terms(2, TermOrder::deglex, terms);
  const auto r = certify(gb, p1_three());
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.failed("vanishing") || r.failed("s-pairs"));
}

TEST(Certificate, MissingElementFailsHilbertCount) {
  auto gb = projective_gb(p2_coordinate());
  gb.elements.pop_back();
  const auto r = certify(gb, p2_coordinate());
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(r.failed("hilbert"));
}

TEST(Certificate, StructuralChecks) {
  const auto a = p1_three();
  GroebnerBasis wrong_arity{3, TermOrder::deglex, {poly(3, {{{1, 1, 1}, 1}})}};
  EXPECT_TRUE(certify(wrong_arity, a).failed("arity"));
  GroebnerBasis not_monic{2, TermOrder::deglex, {poly(2, {{{1, 2}, 2}, {{2, 1}, -2}})}};
  EXPECT_TRUE(certify(not_monic, a).failed("monic"));
  GroebnerBasis inhomogeneous{2, TermOrder::deglex, {poly(2, {{{1, 2}, 1}, {{1, 1}, -1}})}};
  EXPECT_TRUE(certify(inhomogeneous, a).failed("homogeneous"));
  // X1*X2^3 - X1^2*X2^2 vanishes but generates too small an ideal
  GroebnerBasis too_small{2, TermOrder::deglex, {poly(2, {{{1, 3}, 1}, {{2, 2}, -1}})}};
  const auto r = certify(too_small, a);
  EXPECT_FALSE(r.failed("vanishing"));
  EXPECT_TRUE(r.failed("hilbert"));
  EXPECT_THROW(certify(too_small, affine(1, {{0}})), InputError);
}
