#include <gtest/gtest.h>

#include "bracoid/substructure.hpp"
#include "oracles.hpp"
#include "population.hpp"

using namespace bracoid;

namespace {

ElementSet powers(std::size_t d, std::size_t f) {
  ElementSet m;
  for (Elem k = 0; k < d; k += static_cast<Elem>(f)) m.push_back(k);
  return m;
}

bool flags_equal(const IdealReport& a, const IdealReport& b) {
  return a.subgroup == b.subgroup && a.left_ideal == b.left_ideal && a.ideal == b.ideal &&
         a.enhanced_left_ideal == b.enhanced_left_ideal && a.enhanced_ideal == b.enhanced_ideal;
}

}  // namespace

TEST(Classify, FamilySubgroupsAreIdeals) {
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      const SkewBracoid b = dihedral_on_cyclic(n, d);
      for (std::size_t f = 1; f <= d; ++f) {
        if (d % f) continue;
        const IdealReport r = classify_subset(b, powers(d, f));
        EXPECT_TRUE(r.left_ideal && r.ideal);
        EXPECT_EQ(r.g_m, generated_subgroup(b.G(), {static_cast<Elem>(2 * f % (2 * n)), 1}));
      }
      std::vector<ElementSet> subsets;
      for (const auto& r : enumerate_ideals(b)) {
        EXPECT_TRUE(r.left_ideal);
        subsets.push_back(r.subset);
      }
      EXPECT_EQ(subsets, all_subgroups(b.N()));
    }
}

TEST(Classify, TrivialSubgroupAndNonSubgroups) {
  const SkewBracoid b = dihedral_on_cyclic(6, 3);
  const IdealReport e = classify_subset(b, {0});
  EXPECT_TRUE(e.ideal);
  EXPECT_EQ(e.g_m, b.stabilizer(0));
  const IdealReport bad = classify_subset(b, {0, 1});
  EXPECT_FALSE(bad.subgroup || bad.left_ideal || bad.ideal || bad.enhanced_left_ideal || bad.enhanced_ideal);
  EXPECT_TRUE(bad.g_m.empty());
  EXPECT_FALSE(classify_subset(b, {1}).subgroup);
}

TEST(Classify, ReportInvariantsOnPopulation) {
  for (const auto& [name, b] : population::small()) {
    const ElementSet stab = b.stabilizer(0);
    for (const auto& r : enumerate_ideals(b)) {
      if (r.ideal) EXPECT_TRUE(r.left_ideal) << name;
      if (r.enhanced_ideal) EXPECT_TRUE(r.ideal && r.enhanced_left_ideal) << name;
      if (!r.left_ideal) continue;
      EXPECT_TRUE(is_subgroup(b.G(), r.g_m)) << name;
      EXPECT_TRUE(is_subset(stab, r.g_m)) << name;
      EXPECT_EQ(r.g_m.size(), stab.size() * r.subset.size()) << name;
      // Two-sided definition: every g ∈ G_M maps M into M.
      for (Elem g : r.g_m)
        for (Elem x : r.subset) EXPECT_TRUE(std::binary_search(r.subset.begin(), r.subset.end(), b.act(g, x)));
    }
  }
}

TEST(Classify, BruteForceOnS3Bracoids) {
  for (const auto& rec : classify("D3")) {
    const SkewBracoid& b = rec.bracoid;
    const auto gamma = gamma_function(b);
    std::vector<ElementSet> expect;
    for (const auto& m : oracle::subgroups(b.N())) {
      bool stable = true, normal = true;
      for (const auto& t : gamma)
        for (Elem x : m) stable = stable && std::binary_search(m.begin(), m.end(), t(x));
      for (Elem y = 0; y < 6; ++y)
        for (Elem x : m)
          normal = normal && std::binary_search(m.begin(), m.end(), b.N().mul(b.N().mul(y, x), b.N().inv(y)));
      if (stable && normal) expect.push_back(m);
    }
    std::sort(expect.begin(), expect.end());
    std::vector<ElementSet> got;
    for (const auto& r : enumerate_ideals(b))
      if (r.ideal) got.push_back(r.subset);
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expect);
  }
}

TEST(Classify, InvariantUnderReduction) {
  for (const auto& [name, b] : population::small()) {
    const SkewBracoid r = reduced_form(b).bracoid;
    for (const auto& m : all_subgroups(b.N())) EXPECT_TRUE(flags_equal(classify_subset(b, m), classify_subset(r, m))) << name;
  }
}

TEST(SubBracoid, FamilyExample) {
  const SkewBracoid b = dihedral_on_cyclic(4, 4);
  const SubBracoid s = sub_bracoid(b, {0, 2});
  EXPECT_EQ(s.g_part, (ElementSet{0, 1, 4, 5}));
  EXPECT_EQ(s.bracoid.G().order(), 4u);
  EXPECT_EQ(s.bracoid.N().order(), 2u);
  EXPECT_FALSE(is_reduced(s.bracoid));
  EXPECT_THROW(sub_bracoid(b, {0, 1}), InvalidArgument);

  const SubBracoid whole = sub_bracoid(b, whole_group(b.N()));
  EXPECT_EQ(whole.bracoid, b);
  const SkewBracoid fam = dihedral_on_cyclic(6, 3);
  const SubBracoid triv = sub_bracoid(fam, {0});
  EXPECT_EQ(triv.g_part, fam.stabilizer(0));
  EXPECT_EQ(triv.bracoid.N().order(), 1u);
}

TEST(SubBracoid, RestrictionChecks) {
  const SkewBracoid b = dihedral_on_cyclic(4, 4);
  EXPECT_TRUE(is_sub_bracoid(b, {0, 4}, {0, 2}));
  EXPECT_FALSE(is_sub_bracoid(b, {0, 1}, {0, 2}));   // orbit of e is only {e}
  EXPECT_FALSE(is_sub_bracoid(b, {0, 2, 4, 6}, {0, 2}));  // r moves M
  EXPECT_THROW(restrict_bracoid(b, {0, 1}, {0, 2}), InvalidArgument);
}

TEST(OrbitSubgroup, Examples) {
  for (std::size_t n = 2; n <= 12; ++n)
    for (std::size_t d = 1; d <= n; ++d) {
      if (n % d) continue;
      const SkewBracoid b = dihedral_on_cyclic(n, d);
      EXPECT_EQ(orbit_subgroup(b, whole_group(b.G())).m_h, whole_group(b.N()));
      EXPECT_EQ(orbit_subgroup(b, b.stabilizer(0)).m_h, (ElementSet{0}));
      for (std::size_t f = 1; f <= d; ++f) {
        if (d % f) continue;
        const OrbitSubgroup o = orbit_subgroup(b, generated_subgroup(b.G(), {static_cast<Elem>(2 * f % (2 * n)), 1}));
        EXPECT_EQ(o.m_h, powers(d, f));
        ASSERT_TRUE(o.left_ideal.has_value());
      }
    }
  EXPECT_THROW(orbit_subgroup(dihedral_on_cyclic(3, 3), {0, 2}), InvalidArgument);
}

TEST(OrbitSubgroup, MayFailGammaStability) {
  std::size_t unstable = 0;
  for (const auto& [name, b] : population::small()) {
    if (b.G().order() > 24) continue;
    for (const auto& h : all_subgroups(b.G())) {
      const OrbitSubgroup o = orbit_subgroup(b, h);
      EXPECT_EQ(o.gamma_stable, o.left_ideal.has_value());
      if (o.left_ideal) EXPECT_TRUE(classify_subset(b, o.m_h).left_ideal) << name;
      unstable += !o.gamma_stable;
    }
  }
  EXPECT_GT(unstable, 0u);
}

TEST(Quotient, FamilyExampleIsNotReduced) {
  const SkewBracoid b = dihedral_on_cyclic(4, 4);
  const QuotientBracoid q = quotient_bracoid(b, {0, 2});
  EXPECT_EQ(q.bracoid.N().order(), 2u);
  EXPECT_FALSE(is_reduced(q.bracoid));
  EXPECT_EQ(kernel_lambda(q.bracoid), (ElementSet{0, 1, 4, 5}));
  EXPECT_EQ(quotient_bracoid(b, {0}).bracoid, b);
  EXPECT_EQ(quotient_bracoid(b, whole_group(b.N())).bracoid.N().order(), 1u);
  for (const auto& rec : classify("D3"))
    for (const auto& r : enumerate_ideals(rec.bracoid))
      if (r.subgroup && !r.ideal) EXPECT_THROW(quotient_bracoid(rec.bracoid, r.subset), InvalidArgument);
}

TEST(Quotient, GammaAndKernelOnPopulation) {
  for (const auto& [name, b] : population::small()) {
    const auto gamma = gamma_function(b);
    for (const auto& r : enumerate_ideals(b)) {
      if (!r.ideal) continue;
      const QuotientBracoid q = quotient_bracoid(b, r.subset);
      const auto qgamma = gamma_function(q.bracoid);
      const GroupHom& p = q.n_quotient.projection;
      for (Elem g = 0; g < b.G().order(); ++g)
        for (Elem x = 0; x < b.N().order(); ++x) EXPECT_EQ(qgamma[g](p(x)), p(gamma[g](x))) << name;
      EXPECT_EQ(kernel_lambda(q.bracoid), normal_core(b.G(), r.g_m)) << name;
    }
  }
}

TEST(Enhanced, FlagsAgreeOnPopulation) {
  const SkewBracoid b = dihedral_on_cyclic(4, 4);
  const EnhancedCheck c = enhanced_iff_brace_check(b, {0, 2});
  EXPECT_TRUE(c.enhanced);
  EXPECT_TRUE(c.reduced_quotient_is_brace);
  for (const auto& [name, bb] : population::small())
    for (const auto& r : enumerate_ideals(bb)) {
      if (!r.ideal) continue;
      const EnhancedCheck e = enhanced_iff_brace_check(bb, r.subset);
      EXPECT_EQ(e.enhanced, e.reduced_quotient_is_brace) << name;
    }
}

TEST(Correspondence, FamilyExample) {
  const SkewBracoid b = dihedral_on_cyclic(8, 8);
  const auto pairs = ideal_correspondence(b, {0, 4});
  std::vector<ElementSet> ups;
  for (const auto& p : pairs) {
    ups.push_back(p.upstairs);
    EXPECT_TRUE(p.flags_match);
    EXPECT_TRUE(p.g_sets_match);
  }
  EXPECT_EQ(ups, (std::vector<ElementSet>{{0, 4}, {0, 2, 4, 6}, whole_group(b.N())}));
  const auto id = ideal_correspondence(b, {0});
  for (const auto& p : id) EXPECT_EQ(p.upstairs, p.downstairs);
}

TEST(Correspondence, FlagsPreservedOnPopulation) {
  std::vector<population::Named> all = population::small();
  for (const auto& spec : {"C8", "C4xC2", "D4", "Q8"})
    for (const auto& r : classify(spec)) all.push_back({spec, r.bracoid});
  for (const auto& [name, b] : all)
    for (const auto& r : enumerate_ideals(b)) {
      if (!r.ideal) continue;
      const auto pairs = ideal_correspondence(b, r.subset);
      std::size_t containing = 0;
      for (const auto& m : all_subgroups(b.N())) containing += is_subset(r.subset, m);
      EXPECT_EQ(pairs.size(), containing) << name;
      for (const auto& p : pairs) {
        EXPECT_TRUE(p.flags_match) << name;
        EXPECT_TRUE(p.g_sets_match) << name;
      }
    }
}
