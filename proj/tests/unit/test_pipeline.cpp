#include "scd/pipeline.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "fixture.hpp"
#include "oracle.hpp"
#include "scd/error.hpp"
#include "scd/report.hpp"

namespace scd {
namespace {

using testing::Fixture;
using testing::TempDir;

struct Loaded {
  CorpusOccurrences c1;
  CorpusOccurrences c2;
  SenseInventory inv;
  SenseEmbeddings emb;
  std::vector<std::string> targets;
};

Loaded load(const Fixture& fx, const TempDir& dir) {
  auto files = testing::write_fixture(fx, dir.path());
  Loaded l{CorpusOccurrences::load(files.occurrences1), CorpusOccurrences::load(files.occurrences2),
           load_inventory(files.inventory),
           load_sense_embeddings(files.embeddings, EmbeddingFormat::text), {}};
  for (const auto& lemma : fx.lemmas) l.targets.push_back(lemma.lemma);
  return l;
}

TEST(ScoreTargets, StatusesForGaps) {
  TempDir dir;
  auto fx = testing::synthetic_fixture_with_gaps();
  auto l = load(fx, dir);
  l.targets.push_back("unknown");
  auto report = score_targets(l.targets, l.c1, l.c2, l.inv, l.emb, ScoringConfig{});
  ASSERT_EQ(report.results.size(), l.targets.size());
  EXPECT_EQ(report.find("ghost")->status, ScoreStatus::one_sided);
  EXPECT_EQ(report.find("ghost")->n1, 2u);
  EXPECT_EQ(report.find("ghost")->n2, 0u);
  EXPECT_TRUE(std::isnan(report.find("ghost")->score));
  EXPECT_EQ(report.find("orphan")->status, ScoreStatus::unresolvable);
  EXPECT_EQ(report.find("unknown")->status, ScoreStatus::unresolvable);
  EXPECT_EQ(report.ranking.size(), 10u);
  EXPECT_FALSE(report.rank_of("ghost"));
}

TEST(ScoreTargets, MatchesOracleForEveryMeasureAndK) {
  TempDir dir;
  auto fx = testing::synthetic_fixture();
  auto l = load(fx, dir);
  for (auto m : kAllMeasures) {
    for (std::size_t k = 1; k <= 3; ++k) {
      ScoringConfig cfg;
      cfg.measure = m;
      cfg.wsd.k = k;
      auto report = score_targets(l.targets, l.c1, l.c2, l.inv, l.emb, cfg);
      for (const auto& lemma : fx.lemmas) {
        double expected = testing::oracle_score(lemma.oracle_corpus1(), lemma.oracle_corpus2(),
                                                lemma.oracle_senses(), k,
                                                std::string(to_string(m)));
        const auto* r = report.find(lemma.lemma);
        ASSERT_EQ(r->status, ScoreStatus::scored);
        EXPECT_NEAR(r->score, expected, 1e-9) << lemma.lemma << " " << to_string(m) << " k=" << k;
      }
    }
  }
}

TEST(ScoreTargets, DimensionMismatchIsRejected) {
  TempDir dir;
  auto fx = testing::synthetic_fixture();
  auto l = load(fx, dir);
  SenseEmbeddings other(3);
  EXPECT_THROW(score_targets(l.targets, l.c1, l.c2, l.inv, other, ScoringConfig{}),
               ValidationError);
}

TEST(ScoreTargets, WorkerCountDoesNotChangeOutput) {
  TempDir dir;
  auto fx = testing::synthetic_fixture_with_gaps();
  auto l = load(fx, dir);
  std::string first;
  for (unsigned w : {1u, 2u, 3u, 8u}) {
    auto report = score_targets(l.targets, l.c1, l.c2, l.inv, l.emb, ScoringConfig{}, w);
    std::ostringstream out;
    write_report_tsv(out, report);
    write_report_json(out, report, true);
    if (first.empty()) first = out.str();
    EXPECT_EQ(out.str(), first) << "workers=" << w;
  }
}

TEST(ScoreTargets, JsIsSymmetricInCorpusOrder) {
  TempDir dir;
  auto fx = testing::synthetic_fixture();
  auto l = load(fx, dir);
  auto ab = score_targets(l.targets, l.c1, l.c2, l.inv, l.emb, ScoringConfig{});
  auto ba = score_targets(l.targets, l.c2, l.c1, l.inv, l.emb, ScoringConfig{});
  for (const auto& r : ab.results) EXPECT_NEAR(r.score, ba.find(r.lemma)->score, 1e-12);
}

TEST(ScoreTargets, PlantedChangeRanksFirst) {
  TempDir dir;
  auto fx = testing::planted_change_fixture();
  auto l = load(fx, dir);
  for (auto m : kAllMeasures) {
    ScoringConfig cfg;
    cfg.measure = m;
    auto report = score_targets(l.targets, l.c1, l.c2, l.inv, l.emb, cfg);
    EXPECT_LT(*report.rank_of("shift"), *report.rank_of("steady")) << to_string(m);
  }
}

TEST(ScoreTargets, NoRenormalizeAblationStillSumsToOne) {
  TempDir dir;
  auto fx = testing::synthetic_fixture();
  auto l = load(fx, dir);
  ScoringConfig cfg;
  cfg.wsd.renormalize_top_k = false;
  auto report = score_targets(l.targets, l.c1, l.c2, l.inv, l.emb, cfg);
  for (const auto& r : report.results) {
    EXPECT_NEAR(r.d1->total(), 1.0, 1e-12);
    EXPECT_NEAR(r.d2->total(), 1.0, 1e-12);
  }
}

TargetWordResult scored(std::string lemma, double score) {
  TargetWordResult r;
  r.lemma = std::move(lemma);
  r.score = score;
  r.status = ScoreStatus::scored;
  return r;
}

TEST(RankTargets, DescendingWithLemmaTieBreak) {
  std::vector<TargetWordResult> rs = {scored("b", 0.5), scored("a", 0.5), scored("c", 0.9)};
  TargetWordResult gap;
  gap.lemma = "d";
  gap.status = ScoreStatus::one_sided;
  rs.push_back(gap);
  EXPECT_EQ(rank_targets(rs), (std::vector<std::string>{"c", "a", "b"}));
  std::vector<TargetWordResult> none = {gap};
  EXPECT_THROW(rank_targets(none), Error);
}

TEST(RankTargets, InvariantUnderMonotoneTransforms) {
  std::mt19937 rng(8);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<TargetWordResult> rs, doubled, cubed;
    for (int i = 0; i < 12; ++i) {
      double s = u(rng);
      rs.push_back(scored("w" + std::to_string(i), s));
      doubled.push_back(scored("w" + std::to_string(i), 2 * s));
      cubed.push_back(scored("w" + std::to_string(i), s * s * s));
    }
    EXPECT_EQ(rank_targets(rs), rank_targets(doubled));
    EXPECT_EQ(rank_targets(rs), rank_targets(cubed));
  }
}

TEST(Classify, StrictThreshold) {
  std::vector<TargetWordResult> rs = {scored("a", 0.1), scored("b", 0.5), scored("c", 0.9)};
  TargetWordResult gap;
  gap.lemma = "d";
  gap.status = ScoreStatus::unresolvable;
  rs.push_back(gap);
  auto labels = classify(rs, 0.5);
  EXPECT_EQ(labels.at("a"), ChangeLabel::stable);
  EXPECT_EQ(labels.at("b"), ChangeLabel::stable);
  EXPECT_EQ(labels.at("c"), ChangeLabel::changed);
  EXPECT_EQ(labels.at("d"), ChangeLabel::stable);
}

TEST(Classify, MonotoneInThreshold) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<TargetWordResult> rs;
  for (int i = 0; i < 30; ++i) rs.push_back(scored("w" + std::to_string(i), u(rng)));
  for (int trial = 0; trial < 100; ++trial) {
    double t1 = u(rng), t2 = u(rng);
    if (t1 > t2) std::swap(t1, t2);
    auto l1 = classify(rs, t1);
    auto l2 = classify(rs, t2);
    for (const auto& [lemma, label] : l2) {
      if (label == ChangeLabel::changed) EXPECT_EQ(l1.at(lemma), ChangeLabel::changed);
    }
  }
}

TEST(Report, TsvRoundTrip) {
  TempDir dir;
  auto fx = testing::synthetic_fixture_with_gaps();
  auto l = load(fx, dir);
  auto report = score_targets(l.targets, l.c1, l.c2, l.inv, l.emb, ScoringConfig{});
  apply_classification(report, 0.05);
  {
    std::ofstream out(dir / "report.tsv");
    write_report_tsv(out, report);
  }
  auto rows = read_report_tsv(dir / "report.tsv");
  ASSERT_EQ(rows.size(), report.results.size());
  for (std::size_t i = 0; i < report.ranking.size(); ++i) {
    EXPECT_EQ(rows[i].lemma, report.ranking[i]);
    EXPECT_EQ(rows[i].rank, i + 1);
    EXPECT_NEAR(*rows[i].score, report.find(rows[i].lemma)->score, 1e-11);
    EXPECT_EQ(rows[i].label, report.labels.at(rows[i].lemma));
  }
  EXPECT_EQ(rows.back().status, ScoreStatus::unresolvable);
  EXPECT_FALSE(rows.back().score);
}

TEST(Labels, ParseSemEvalEncoding) {
  EXPECT_EQ(parse_change_label("1"), ChangeLabel::changed);
  EXPECT_EQ(parse_change_label("stable"), ChangeLabel::stable);
  EXPECT_FALSE(parse_change_label("maybe"));
}

}  // namespace
}  // namespace scd
