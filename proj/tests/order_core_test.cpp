#include <gtest/gtest.h>

#include <random>

#include "ordext/errors.hpp"
#include "ordext/linear_order.hpp"
#include "ordext/poset.hpp"
#include "ordext/tie_break.hpp"
#include "support/oracles.hpp"
#include "support/random_posets.hpp"

using namespace ordext;
using testing_support::ids;
using testing_support::pair;
using testing_support::token_pairs;
using TokenRelation = std::set<std::pair<std::string, std::string>>;

namespace {

Poset diamond() {
    std::vector<Pair> pairs{pair("0", "x"), pair("0", "y"), pair("x", "1"), pair("y", "1")};
    return validate(ids({"0", "x", "y", "1"}), pairs, true);
}

} // namespace

// ---------------------------------------------------------------------------
// ElementId / Ground

TEST(ElementIdTest, RejectsMalformedTokens) {
    EXPECT_THROW(ElementId(""), InvalidToken);
    EXPECT_THROW(ElementId("a b"), InvalidToken);
    EXPECT_THROW(ElementId("a\tb"), InvalidToken);
    EXPECT_THROW(ElementId("a<b"), InvalidToken);
    EXPECT_NO_THROW(ElementId("β₁"));
    EXPECT_NO_THROW(ElementId("x->y"));
}

TEST(GroundTest, IndexAndDuplicates) {
    Ground g(ids({"a", "b", "c"}));
    EXPECT_EQ(g.index_of(ElementId("c")), 2u);
    EXPECT_FALSE(g.find(ElementId("z")).has_value());
    EXPECT_THROW(g.index_of(ElementId("z")), UnknownElement);
    EXPECT_THROW(Ground(ids({"a", "b", "a"})), DuplicateElement);
}

// ---------------------------------------------------------------------------
// validate

TEST(ValidateTest, SingletonWithEmptyRelation) {
    Poset p = validate(ids({"a"}), {}, false);
    EXPECT_EQ(p.size(), 1u);
    EXPECT_EQ(p.pair_count(), 0u);
}

TEST(ValidateTest, EmptyGround) {
    Poset p = validate({}, {}, false);
    EXPECT_EQ(p.size(), 0u);
    EXPECT_TRUE(incomparable_pairs(p).empty());
}

TEST(ValidateTest, TwoCycleIsReportedAsAntisymmetryViolation) {
    std::vector<Pair> pairs{pair("a", "b"), pair("b", "a")};
    try {
        validate(ids({"a", "b"}), pairs, true);
        FAIL() << "expected AntisymmetryViolation";
    } catch (const AntisymmetryViolation& e) {
        EXPECT_EQ(testing_support::tokens(e.cycle()), (std::vector<std::string>{"a", "b", "a"}));
    }
}

TEST(ValidateTest, CycleWitnessIsShortest) {
    // a->b->c->d->a and c->b: the 2-cycle b->c->b is the shortest.
    std::vector<Pair> pairs{pair("a", "b"), pair("b", "c"), pair("c", "d"), pair("d", "a"), pair("c", "b")};
    try {
        validate(ids({"a", "b", "c", "d"}), pairs, false);
        FAIL() << "expected AntisymmetryViolation";
    } catch (const AntisymmetryViolation& e) {
        EXPECT_EQ(testing_support::tokens(e.cycle()), (std::vector<std::string>{"b", "c", "b"}));
    }
}

TEST(ValidateTest, SelfPairIsAOneElementCycle) {
    std::vector<Pair> pairs{pair("a", "b"), pair("b", "b")};
    try {
        validate(ids({"a", "b"}), pairs, true);
        FAIL() << "expected AntisymmetryViolation";
    } catch (const AntisymmetryViolation& e) {
        EXPECT_EQ(testing_support::tokens(e.cycle()), (std::vector<std::string>{"b", "b"}));
    }
}

TEST(ValidateTest, AutoCloseMatchesFixedPointOracle) {
    std::vector<Pair> pairs{pair("a", "b"), pair("b", "c")};
    Poset p = validate(ids({"a", "b", "c"}), pairs, true);

    TokenRelation expected = oracle::naive_closure(TokenRelation{{"a", "b"}, {"b", "c"}});
    // Frozen from the oracle.
    ASSERT_EQ(expected, (TokenRelation{{"a", "b"}, {"b", "c"}, {"a", "c"}}));
    EXPECT_EQ(token_pairs(p.relation()), expected);
}

TEST(ValidateTest, NotClosedWithoutAutoClose) {
    std::vector<Pair> pairs{pair("a", "b"), pair("b", "c")};
    try {
        validate(ids({"a", "b", "c"}), pairs, false);
        FAIL() << "expected NotClosed";
    } catch (const NotClosed& e) {
        EXPECT_EQ(e.x().token(), "a");
        EXPECT_EQ(e.y().token(), "b");
        EXPECT_EQ(e.z().token(), "c");
    }
}

TEST(ValidateTest, ClosedInputAcceptedVerbatim) {
    std::vector<Pair> pairs{pair("a", "b"), pair("b", "c"), pair("a", "c"), pair("a", "b")};
    Poset p = validate(ids({"a", "b", "c"}), pairs, false);
    EXPECT_EQ(p.pair_count(), 3u);
}

TEST(ValidateTest, DuplicateAndUnknownElements) {
    EXPECT_THROW(validate(ids({"a", "b", "a"}), {}, true), DuplicateElement);
    std::vector<Pair> pairs{pair("a", "z")};
    try {
        validate(ids({"a", "b"}), pairs, true);
        FAIL() << "expected UnknownElement";
    } catch (const UnknownElement& e) {
        EXPECT_EQ(e.element().token(), "z");
    }
}

TEST(ValidateTest, PropertyOrderAxiomsOnRandomInputs) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        Poset p = testing_support::random_poset(rng, 9);
        auto r = token_pairs(p.relation());
        ASSERT_TRUE(oracle::is_irreflexive(r));
        ASSERT_TRUE(oracle::is_antisymmetric(r));
        ASSERT_TRUE(oracle::is_transitive(r));
        // A closed poset passes strict validation unchanged.
        auto pairs = p.pairs();
        EXPECT_EQ(validate(p.ground().elements(), pairs, false), p);
    }
}

// ---------------------------------------------------------------------------
// transitive_closure

TEST(TransitiveClosureTest, Examples) {
    EXPECT_EQ(transitive_closure({pair("a", "b"), pair("b", "c")}),
              (StrictRelation{pair("a", "b"), pair("b", "c"), pair("a", "c")}));
    EXPECT_TRUE(transitive_closure({}).empty());

    auto chain = transitive_closure({pair("a", "b"), pair("b", "c"), pair("c", "d")});
    EXPECT_EQ(chain.size(), 6u);
    const std::vector<std::string> seq{"a", "b", "c", "d"};
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j)
            EXPECT_TRUE(chain.contains(pair(seq[i].c_str(), seq[j].c_str())));
}

TEST(TransitiveClosureTest, CycleIsReported) {
    EXPECT_THROW(transitive_closure({pair("a", "b"), pair("b", "c"), pair("c", "a")}), ClosureCreatesReflexivePair);
    EXPECT_THROW(transitive_closure({pair("a", "a")}), ClosureCreatesReflexivePair);
}

TEST(TransitiveClosureTest, MatchesNaiveOracleAndIsIdempotent) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> size(0, 8);
    std::uniform_real_distribution<double> density(0.0, 0.6);
    int acyclic = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const int n = size(rng);
        std::bernoulli_distribution keep(density(rng));
        StrictRelation r;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j && keep(rng)) r.insert(pair(std::to_string(i).c_str(), std::to_string(j).c_str()));

        auto expected = oracle::naive_closure(token_pairs(r));
        if (!oracle::is_irreflexive(expected)) {
            EXPECT_THROW(transitive_closure(r), ClosureCreatesReflexivePair);
            continue;
        }
        ++acyclic;
        auto closed = transitive_closure(r);
        EXPECT_EQ(token_pairs(closed), expected);
        EXPECT_EQ(transitive_closure(closed), closed);
    }
    EXPECT_GT(acyclic, 100);
}

// ---------------------------------------------------------------------------
// restrict

TEST(RestrictTest, DiamondToChain) {
    Poset d = diamond();
    Poset r = restrict(d, ids({"0", "x", "1"}));

    // Oracle: intersect the closed relation with subset × subset.
    std::set<std::string> keep{"0", "x", "1"};
    TokenRelation expected;
    for (const auto& [a, b] : token_pairs(d.relation()))
        if (keep.contains(a) && keep.contains(b)) expected.emplace(a, b);
    ASSERT_EQ(expected, (TokenRelation{{"0", "x"}, {"x", "1"}, {"0", "1"}}));
    EXPECT_EQ(token_pairs(r.relation()), expected);
    EXPECT_TRUE(incomparable_pairs(r).empty());
}

TEST(RestrictTest, IdentityAndSingleton) {
    Poset d = diamond();
    EXPECT_EQ(restrict(d, d.ground().elements()), d);
    Poset one = restrict(d, ids({"y"}));
    EXPECT_EQ(one.size(), 1u);
    EXPECT_EQ(one.pair_count(), 0u);
}

TEST(RestrictTest, Errors) {
    Poset d = diamond();
    EXPECT_THROW(restrict(d, ids({"0", "q"})), UnknownElement);
    EXPECT_THROW(restrict(d, ids({"0", "0"})), DuplicateElement);
}

TEST(RestrictTest, PropertyResultIsClosed) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        Poset p = testing_support::random_poset(rng, 9);
        std::vector<ElementId> subset;
        std::bernoulli_distribution pick(0.5);
        for (const auto& e : p.ground())
            if (pick(rng)) subset.push_back(e);
        Poset r = restrict(p, subset);
        auto rel = token_pairs(r.relation());
        EXPECT_TRUE(oracle::is_transitive(rel));
        for (const auto& [a, b] : r.relation()) EXPECT_TRUE(p.less(a, b));
    }
}

// ---------------------------------------------------------------------------
// order_from_enumeration

TEST(OrderFromEnumerationTest, Examples) {
    LinearOrder o = order_from_enumeration(ids({"β₁", "β₂", "β₃"}));
    EXPECT_EQ(o.induced_pairs(), (StrictRelation{pair("β₁", "β₂"), pair("β₁", "β₃"), pair("β₂", "β₃")}));
    EXPECT_TRUE(o.precedes(ElementId("β₁"), ElementId("β₃")));

    EXPECT_EQ(order_from_enumeration({}).size(), 0u);
    EXPECT_TRUE(order_from_enumeration({}).induced_pairs().empty());
    EXPECT_TRUE(order_from_enumeration(ids({"a"})).induced_pairs().empty());
    EXPECT_THROW(order_from_enumeration(ids({"a", "b", "a"})), DuplicateElement);
}

TEST(OrderFromEnumerationTest, ExhaustiveUpToFive) {
    for (std::size_t n = 0; n <= 5; ++n) {
        std::vector<std::string> perm;
        for (std::size_t i = 0; i < n; ++i) perm.push_back("s" + std::to_string(i));
        do {
            std::vector<ElementId> seq;
            for (const auto& t : perm) seq.emplace_back(t);
            TokenRelation expected;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) expected.emplace(perm[i], perm[j]);
            auto induced = token_pairs(order_from_enumeration(seq).induced_pairs());
            ASSERT_EQ(induced, expected);
            ASSERT_TRUE(oracle::is_strict_total(induced, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
}

// ---------------------------------------------------------------------------
// comparability

TEST(ComparabilityTest, Examples) {
    Poset d = diamond();
    auto rel = token_pairs(d.relation());
    // Oracle: neither orientation appears in the closure.
    ASSERT_FALSE(rel.contains({"x", "y"}) || rel.contains({"y", "x"}));
    EXPECT_FALSE(is_comparable(d, ElementId("x"), ElementId("y")));
    EXPECT_TRUE(is_comparable(d, ElementId("x"), ElementId("x")));

    std::vector<Pair> ab{pair("a", "b")};
    Poset chain = validate(ids({"a", "b"}), ab, false);
    EXPECT_TRUE(is_comparable(chain, ElementId("a"), ElementId("b")));
    EXPECT_THROW(is_comparable(chain, ElementId("a"), ElementId("q")), UnknownElement);
}

TEST(ComparabilityTest, IncomparablePairsExamples) {
    Poset anti = validate(ids({"a", "b", "c"}), {}, false);
    auto pairs = incomparable_pairs(anti);
    EXPECT_EQ(pairs, (std::vector<Pair>{pair("a", "b"), pair("a", "c"), pair("b", "c")}));

    std::vector<Pair> chain_pairs{pair("a", "b"), pair("b", "c"), pair("c", "d")};
    EXPECT_TRUE(incomparable_pairs(validate(ids({"a", "b", "c", "d"}), chain_pairs, true)).empty());

    EXPECT_EQ(incomparable_pairs(diamond()), (std::vector<Pair>{pair("x", "y")}));
}

TEST(ComparabilityTest, PropertySymmetricAndComplementOfRelation) {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Poset p = testing_support::random_poset(rng, 8);
        auto rel = token_pairs(p.relation());
        std::set<std::pair<std::string, std::string>> expected;
        const auto& g = p.ground();
        for (std::size_t i = 0; i < g.size(); ++i)
            for (std::size_t j = 0; j < g.size(); ++j) {
                EXPECT_EQ(is_comparable(p, g[i], g[j]), is_comparable(p, g[j], g[i]));
                if (i < j && !rel.contains({g[i].token(), g[j].token()}) && !rel.contains({g[j].token(), g[i].token()}))
                    expected.emplace(g[i].token(), g[j].token());
            }
        std::set<std::pair<std::string, std::string>> actual;
        for (const auto& [a, b] : incomparable_pairs(p)) actual.emplace(a.token(), b.token());
        EXPECT_EQ(actual, expected);
        EXPECT_EQ(actual.empty(), rel.size() == g.size() * (g.size() - (g.empty() ? 0 : 1)) / 2);
    }
}

// ---------------------------------------------------------------------------
// TieBreakPolicy

TEST(TieBreakPolicyTest, Parse) {
    EXPECT_EQ(TieBreakPolicy::parse("input"), TieBreakPolicy::input_order());
    EXPECT_EQ(TieBreakPolicy::parse("lex"), TieBreakPolicy::lexicographic());
    EXPECT_EQ(TieBreakPolicy::parse("seed:18446744073709551615"), TieBreakPolicy::seeded(18446744073709551615ull));
    EXPECT_THROW(TieBreakPolicy::parse("seed:"), std::invalid_argument);
    EXPECT_THROW(TieBreakPolicy::parse("seed:-1"), std::invalid_argument);
    EXPECT_THROW(TieBreakPolicy::parse("seed:12x"), std::invalid_argument);
    EXPECT_THROW(TieBreakPolicy::parse("random"), std::invalid_argument);
    EXPECT_EQ(TieBreakPolicy::seeded(7).to_string(), "seed:7");
}

TEST(TieBreakPolicyTest, SplitMixReferenceValue) {
    // Published first output of SplitMix64 for seed 0.
    EXPECT_EQ(SplitMix64(0).next(), 0xe220a8397b1dcdafull);
}

TEST(TieBreakPolicyTest, ArrangeByKind) {
    auto g = ids({"c", "a", "e", "b", "d"});
    EXPECT_EQ(testing_support::tokens(TieBreakPolicy::input_order().arrange(g)),
              (std::vector<std::string>{"c", "a", "e", "b", "d"}));
    EXPECT_EQ(testing_support::tokens(TieBreakPolicy::lexicographic().arrange(g)),
              (std::vector<std::string>{"a", "b", "c", "d", "e"}));

    // Fisher-Yates with SplitMix64(42) over positions 0..4 yields [1,2,0,4,3]
    // (computed with an independent script).
    auto seq = ids({"a", "b", "c", "d", "e"});
    EXPECT_EQ(testing_support::tokens(TieBreakPolicy::seeded(42).arrange(seq)),
              (std::vector<std::string>{"b", "c", "a", "e", "d"}));
}

TEST(TieBreakPolicyTest, RanksArePermutations) {
    std::mt19937_64 rng(1);
    for (std::size_t n = 0; n < 40; ++n) {
        auto g = testing_support::make_ground(n);
        auto rank = TieBreakPolicy::seeded(rng()).ranks(g);
        std::vector<std::size_t> sorted = rank;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) EXPECT_EQ(sorted[i], i);
    }
}
