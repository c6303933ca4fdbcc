#include <gtest/gtest.h>

#include <map>

#include "test_support.hpp"

namespace lando {
namespace {

TEST(IsRealizable, SingleEdgeIdentity) {
  const Tree t = make_path(1);
  EXPECT_TRUE(is_realizable(t, t, EdgeBijection::identity(1)));
}

TEST(IsRealizable, IdentityOnEveryTreeUpToSevenEdges) {
  std::mt19937_64 rng{61};
  for (std::size_t m = 0; m <= 7; ++m) {
    for (const Tree& t : enumerate_trees(m).trees) {
      ASSERT_TRUE(is_realizable(t, t, EdgeBijection::identity(m)));
      const Tree s = testing::scramble(rng, t);
      ASSERT_TRUE(is_realizable(s, s, EdgeBijection::identity(m)));
    }
  }
}

TEST(IsRealizable, NoBijectionFromGToH) {
  const Tree g = build_G();
  const Tree h = build_H();
  EdgeBijection b = EdgeBijection::identity(7);
  std::size_t tried = 0;
  do {
    ASSERT_FALSE(is_realizable(g, h, b));
    ++tried;
  } while (std::next_permutation(b.image.begin(), b.image.end()));
  EXPECT_EQ(tried, 5040U);
}

TEST(IsRealizable, PathToStarInEdgeOrder) {
  // Even pairs of the path v0-v1-v2-v3 are (v0,v2) and (v1,v3).
  const Tree path = make_path(3);
  const Tree star = make_star(3);
  const EdgeBijection h = EdgeBijection::identity(3);
  EXPECT_TRUE(unlinked(star, h.apply(path.delta(0)), h.apply(path.delta(2))));
  EXPECT_TRUE(unlinked(star, h.apply(path.delta(1)), h.apply(path.delta(3))));
  EXPECT_TRUE(is_realizable(path, star, h));
}

TEST(IsRealizable, RejectsBadInput) {
  const Tree a = make_path(3);
  EXPECT_THROW(is_realizable(a, make_path(2), EdgeBijection::identity(3)), std::invalid_argument);
  EXPECT_THROW(is_realizable(a, a, EdgeBijection{{0, 0, 1}}), std::invalid_argument);
  EXPECT_THROW(is_realizable(a, a, EdgeBijection{{0, 1}}), std::invalid_argument);
  EXPECT_THROW(is_realizable(a, a, EdgeBijection{{0, 1, 3}}), std::invalid_argument);
}

TEST(FindRealizableBijection, GAndHAreUnfriendly) {
  const Certificate c = find_realizable_bijection(build_G(), build_H());
  EXPECT_EQ(c.verdict, Verdict::unfriendly);
  EXPECT_FALSE(c.witness.has_value());
  EXPECT_EQ(c.stats.covered, 5040U);
  EXPECT_GT(c.stats.nodes, 0U);
  EXPECT_EQ(find_realizable_bijection(build_H(), build_G()).verdict, Verdict::unfriendly);
}

TEST(FindRealizableBijection, SelfPairsAreFriendly) {
  std::mt19937_64 rng{67};
  for (std::size_t m = 0; m <= 7; ++m) {
    for (const Tree& t : enumerate_trees(m).trees) {
      const Certificate c = find_realizable_bijection(t, t);
      ASSERT_EQ(c.verdict, Verdict::friendly);
      ASSERT_TRUE(is_realizable(t, t, *c.witness));
      const Tree s = testing::scramble(rng, t);
      ASSERT_EQ(find_realizable_bijection(t, s).verdict, Verdict::friendly);
    }
  }
}

TEST(FindRealizableBijection, PathAndStar) {
  const Certificate c = find_realizable_bijection(make_path(3), make_star(3));
  ASSERT_EQ(c.verdict, Verdict::friendly);
  EXPECT_TRUE(is_realizable(make_path(3), make_star(3), *c.witness));
}

TEST(FindRealizableBijection, EmptyTrees) {
  const Certificate c = find_realizable_bijection(Tree{}, Tree{});
  EXPECT_EQ(c.verdict, Verdict::friendly);
  EXPECT_EQ(c.witness->size(), 0U);
  EXPECT_EQ(c.stats.checked, 1U);
}

TEST(FindRealizableBijection, RejectsMismatchedSizes) {
  EXPECT_THROW(find_realizable_bijection(make_path(3), make_path(4)), std::invalid_argument);
}

TEST(FindRealizableBijection, WitnessIsFirstInSearchOrder) {
  for (std::size_t m = 1; m <= 5; ++m) {
    const TreeCatalog cat = enumerate_trees(m);
    for (const Tree& a : cat.trees) {
      const auto order = search_edge_order(a);
      for (const Tree& b : cat.trees) {
        std::optional<std::vector<EdgeId>> best;
        enumerate_all_bijections(a, b, [&](const EdgeBijection& h) {
          std::vector<EdgeId> key;
          for (EdgeId e : order) key.push_back(h[e]);
          if (!best || key < *best) best = key;
        });
        const Certificate c = find_realizable_bijection(a, b);
        ASSERT_EQ(c.verdict == Verdict::friendly, best.has_value());
        if (!best) continue;
        std::vector<EdgeId> got;
        for (EdgeId e : order) got.push_back((*c.witness)[e]);
        ASSERT_EQ(got, *best);
      }
    }
  }
}

TEST(FindRealizableBijection, Deterministic) {
  const TreeCatalog cat = enumerate_trees(6);
  for (const Tree& a : cat.trees) {
    for (const Tree& b : cat.trees) {
      const Certificate x = find_realizable_bijection(a, b);
      const Certificate y = find_realizable_bijection(a, b);
      ASSERT_EQ(x.witness, y.witness);
      ASSERT_EQ(x.stats.nodes, y.stats.nodes);
    }
  }
}

TEST(RealizabilityProperties, PrunedSearchMatchesFullEnumeration) {
  for (std::size_t m = 0; m <= 6; ++m) {
    const TreeCatalog cat = enumerate_trees(m);
    for (const Tree& a : cat.trees) {
      for (const Tree& b : cat.trees) {
        const Certificate c = find_realizable_bijection(a, b);
        const Exhaustion ex = enumerate_all_bijections(a, b);
        ASSERT_EQ(c.verdict == Verdict::friendly, ex.realizable > 0);
        if (c.verdict == Verdict::unfriendly) {
          ASSERT_EQ(c.stats.covered, ex.checked);
        }
      }
    }
  }
}

TEST(RealizabilityProperties, VerdictSymmetryUpToSevenEdges) {
  for (std::size_t m = 0; m <= 7; ++m) {
    const TreeCatalog cat = enumerate_trees(m);
    for (std::size_t i = 0; i < cat.size(); ++i) {
      for (std::size_t j = i + 1; j < cat.size(); ++j) {
        ASSERT_EQ(find_realizable_bijection(cat.trees[i], cat.trees[j]).verdict,
                  find_realizable_bijection(cat.trees[j], cat.trees[i]).verdict)
            << cat.codes[i] << " vs " << cat.codes[j];
      }
    }
  }
}

TEST(RealizabilityProperties, VerdictInvariantUnderRelabeling) {
  std::mt19937_64 rng{71};
  const TreeCatalog cat = enumerate_trees(7);
  for (int round = 0; round < 100; ++round) {
    const Tree& a = cat.trees[rng() % cat.size()];
    const Tree& b = cat.trees[rng() % cat.size()];
    ASSERT_EQ(find_realizable_bijection(a, b).verdict,
              find_realizable_bijection(testing::scramble(rng, a), testing::scramble(rng, b)).verdict);
  }
  for (int round = 0; round < 10; ++round) {
    ASSERT_EQ(find_realizable_bijection(testing::scramble(rng, build_G()), testing::scramble(rng, build_H())).verdict,
              Verdict::unfriendly);
  }
}

// Total number of realizable bijections over all ordered pairs of trees,
// per edge count. Frozen from an independent brute-force implementation
// that counted over every permutation with the literal pairwise definition.
TEST(RealizabilityProperties, RealizableBijectionCounts) {
  const std::map<std::size_t, std::uint64_t> expected{{1, 1}, {2, 2}, {3, 20}, {4, 144}, {5, 1814}, {6, 22255}};
  for (const auto& [m, count] : expected) {
    const TreeCatalog cat = enumerate_trees(m);
    std::uint64_t total = 0;
    for (const Tree& a : cat.trees) {
      for (const Tree& b : cat.trees) total += enumerate_all_bijections(a, b).realizable;
    }
    EXPECT_EQ(total, count) << "edges=" << m;
  }
}

// Whether h realizable implies h^-1 realizable is not known a priori.
// Observed: no counterexample up to six edges.
TEST(RealizabilityProperties, InverseOfRealizableBijectionUpToSixEdges) {
  std::size_t asymmetric = 0;
  for (std::size_t m = 1; m <= 6; ++m) {
    const TreeCatalog cat = enumerate_trees(m);
    for (const Tree& a : cat.trees) {
      for (const Tree& b : cat.trees) {
        enumerate_all_bijections(a, b, [&](const EdgeBijection& h) {
          if (!is_realizable(b, a, h.inverse())) {
            ++asymmetric;
            ADD_FAILURE() << "realizable with non-realizable inverse: " << canonical_code(a) << " -> "
                          << canonical_code(b);
          }
        });
      }
    }
  }
  EXPECT_EQ(asymmetric, 0U);
}

TEST(RecheckCertificate, FriendlyWitness) {
  const Tree a = make_path(3);
  const Tree b = make_star(3);
  Certificate c = find_realizable_bijection(a, b);
  EXPECT_TRUE(recheck_certificate(a, b, c));

  c.witness = EdgeBijection{{0, 0, 1}};
  EXPECT_FALSE(recheck_certificate(a, b, c));
}

TEST(RecheckCertificate, TamperedWitness) {
  // Every bijection between 3-edge trees is realizable, so tamper with G.
  const Tree g = build_G();
  Certificate c = find_realizable_bijection(g, g);
  ASSERT_TRUE(recheck_certificate(g, g, c));
  EdgeBijection h = *c.witness;
  while (is_realizable(g, g, h)) ASSERT_TRUE(std::next_permutation(h.image.begin(), h.image.end()));
  c.witness = h;
  EXPECT_FALSE(recheck_certificate(g, g, c));
}

TEST(RecheckCertificate, UnfriendlyGAndH) {
  const Certificate c = find_realizable_bijection(build_G(), build_H());
  EXPECT_TRUE(recheck_certificate(build_G(), build_H(), c));
  // The same claim for a friendly pair is refuted.
  EXPECT_FALSE(recheck_certificate(build_G(), build_G(), c));
}

TEST(RecheckCertificate, MismatchedCertificate) {
  const Tree a = make_path(3);
  Certificate c = find_realizable_bijection(a, a);
  EXPECT_THROW(recheck_certificate(a, make_path(4), c), std::invalid_argument);
  c.witness = EdgeBijection::identity(4);
  EXPECT_THROW(recheck_certificate(a, a, c), std::invalid_argument);
  c.witness.reset();
  EXPECT_THROW(recheck_certificate(a, a, c), std::invalid_argument);
}

TEST(CertificateIo, Format) {
  Certificate c;
  c.verdict = Verdict::friendly;
  c.witness = EdgeBijection{{2, 0, 1}};
  c.stats.nodes = 9;
  c.stats.checked = 1;
  EXPECT_EQ(format_certificate(c), "VERDICT friendly\nWITNESS 2 0 1\nSTATS nodes=9 checked=1\n");
  EXPECT_EQ(format_certificate(c, false), "VERDICT friendly\nSTATS nodes=9 checked=1\n");

  const Certificate u = find_realizable_bijection(build_G(), build_H());
  const Certificate back = parse_certificate(format_certificate(u));
  EXPECT_EQ(back.verdict, Verdict::unfriendly);
  EXPECT_FALSE(back.witness.has_value());
  EXPECT_EQ(back.stats.nodes, u.stats.nodes);
  EXPECT_EQ(parse_certificate(format_certificate(c)).witness, c.witness);
}

TEST(CertificateIo, RejectsMalformedText) {
  EXPECT_THROW(parse_certificate("STATS nodes=1 checked=0\n"), ParseError);
  EXPECT_THROW(parse_certificate("VERDICT maybe\nSTATS nodes=1 checked=0\n"), ParseError);
  EXPECT_THROW(parse_certificate("VERDICT friendly\nSTATS nodes=1\n"), ParseError);
  EXPECT_THROW(parse_certificate("VERDICT friendly\nSTATS n=1 checked=0\n"), ParseError);
}

}  // namespace
}  // namespace lando
