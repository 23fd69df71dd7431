#include "scd/cli.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "scd/error.hpp"
#include "scd/evaluation.hpp"
#include "scd/measures.hpp"
#include "scd/pipeline.hpp"
#include "scd/report.hpp"
#include "scd/sense_model.hpp"
#include "scd/tuning.hpp"

namespace scd {

namespace {

namespace fs = std::filesystem;

const std::vector<std::string> kMeasureNames = {"kl",        "js",     "bray_curtis", "canberra",
                                                "chebyshev", "cosine", "euclidean"};

struct ScoreOptions {
  std::string occurrences1;
  std::string occurrences2;
  std::string embeddings;
  std::string embeddings_format = "auto";
  std::string inventory;
  std::string targets;
  std::string measure = "js";
  std::size_t k = 2;
  std::string score_mode = "clamp_normalize";
  bool normalize_vectors = false;
  bool no_renormalize_top_k = false;
  double epsilon = 1e-10;
  unsigned workers = 1;
  std::string out_dir = ".";
  bool dump_distributions = false;
  std::optional<double> threshold;
  std::string thresholds_file;
  std::vector<std::string> lemmas;  // dump-distributions only
};

struct GoldOptions {
  std::string gold;
  std::string gold_binary;
  std::string gold_graded;
  std::string gold_columns = "0,1,2";
};

struct ReportOptions {
  std::string report;
  std::string out;
  std::optional<double> threshold;
  std::string thresholds_file;
  std::string measure = "js";
  std::string validation_lemmas;
  std::size_t repeats = 5;
  std::size_t trials = 50;
  std::uint64_t seed = 42;
  GoldOptions gold;
};

struct ValidateOptions {
  std::string embeddings;
  std::string embeddings_format = "auto";
  std::string inventory;
  std::string out;
};

void add_embedding_options(CLI::App* sub, std::string& path, std::string& format) {
  sub->add_option("--embeddings", path, "Sense embeddings (text or SSEB binary)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--embeddings-format", format, "auto, text or binary")
      ->check(CLI::IsMember({"auto", "text", "binary"}))
      ->capture_default_str();
}

void add_scoring_options(CLI::App* sub, ScoreOptions& o) {
  sub->add_option("--occurrences1", o.occurrences1, "SSCD occurrence file of the earlier corpus")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--occurrences2", o.occurrences2, "SSCD occurrence file of the later corpus")
      ->required()
      ->check(CLI::ExistingFile);
  add_embedding_options(sub, o.embeddings, o.embeddings_format);
  sub->add_option("--inventory", o.inventory, "Sense inventory (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--k", o.k, "Top-k senses kept per occurrence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--score-mode", o.score_mode, "clamp_normalize or softmax")
      ->check(CLI::IsMember({"clamp_normalize", "softmax"}))
      ->capture_default_str();
  sub->add_flag("--normalize-vectors", o.normalize_vectors,
                "L2-normalize vectors before the inner product");
  sub->add_flag("--no-renormalize-top-k", o.no_renormalize_top_k,
                "Carry truncated per-occurrence mass without rescaling");
  sub->add_option("--workers", o.workers, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--out-dir", o.out_dir, "Output directory")->capture_default_str();
}

void add_threshold_options(CLI::App* sub, std::optional<double>& threshold,
                           std::string& thresholds_file) {
  auto* t = sub->add_option("--threshold", threshold, "Classification threshold");
  auto* f = sub->add_option("--thresholds", thresholds_file, "Threshold JSON written by tune")
                ->check(CLI::ExistingFile);
  t->excludes(f);
}

void add_gold_options(CLI::App* sub, GoldOptions& g) {
  sub->add_option("--gold", g.gold, "Combined gold TSV: lemma, binary, graded")
      ->check(CLI::ExistingFile);
  sub->add_option("--gold-columns", g.gold_columns,
                  "Zero-based lemma,binary,graded columns of --gold")
      ->capture_default_str();
  sub->add_option("--gold-binary", g.gold_binary, "SemEval binary truth file (lemma, 0/1)")
      ->check(CLI::ExistingFile);
  sub->add_option("--gold-graded", g.gold_graded, "SemEval graded truth file (lemma, score)")
      ->check(CLI::ExistingFile);
}

EmbeddingFormat resolve_format(const std::string& path, const std::string& name) {
  if (name != "auto") return *parse_embedding_format(name);
  std::ifstream in(path, std::ios::binary);
  char magic[4] = {};
  in.read(magic, 4);
  return in.gcount() == 4 && std::string_view(magic, 4) == "SSEB" ? EmbeddingFormat::binary
                                                                  : EmbeddingFormat::text;
}

GoldColumns parse_gold_columns(const std::string& spec) {
  std::vector<std::size_t> cols;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    std::size_t v = 0;
    auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (ec != std::errc{} || p != part.data() + part.size()) {
      throw ValidationError("--gold-columns: expected three comma-separated indices, got \"" +
                            spec + "\"");
    }
    cols.push_back(v);
  }
  if (cols.size() != 3) {
    throw ValidationError("--gold-columns: expected three comma-separated indices, got \"" +
                          spec + "\"");
  }
  return {cols[0], cols[1], cols[2]};
}

GoldAnnotations load_gold(const GoldOptions& g) {
  GoldAnnotations gold;
  if (!g.gold.empty()) gold = load_gold_tsv(g.gold, parse_gold_columns(g.gold_columns));
  if (!g.gold_binary.empty()) load_semeval_binary(g.gold_binary, gold);
  if (!g.gold_graded.empty()) load_semeval_graded(g.gold_graded, gold);
  if (g.gold.empty() && g.gold_binary.empty() && g.gold_graded.empty()) {
    throw ValidationError("one of --gold, --gold-binary or --gold-graded is required");
  }
  return gold;
}

std::vector<std::string> read_lemma_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError(path + ": cannot open file");
  std::vector<std::string> lemmas;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t");
    lemmas.push_back(line.substr(first, last - first + 1));
  }
  return lemmas;
}

std::ofstream open_output(const fs::path& path) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(path.string() + ": cannot open for writing");
  return out;
}

double resolve_threshold(const std::optional<double>& threshold, const std::string& file) {
  if (threshold) return *threshold;
  return read_threshold_json(file).threshold;
}

struct Inputs {
  SenseInventory inventory;
  SenseEmbeddings embeddings;
  CorpusOccurrences corpus1;
  CorpusOccurrences corpus2;
};

Inputs load_inputs(const ScoreOptions& o, std::ostream& err) {
  auto inventory = load_inventory(o.inventory);
  auto embeddings =
      load_sense_embeddings(o.embeddings, resolve_format(o.embeddings, o.embeddings_format));
  err << "loaded " << embeddings.size() << " sense embeddings (dim " << embeddings.dim()
      << "), " << inventory.size() << " inventory lemmas\n";
  auto report = validate_pair(inventory, embeddings);
  for (const auto& c : report.incomplete) {
    err << "warning: " << c.lemma << ": " << c.missing.size() << " sense(s) without embedding"
        << (c.resolvable == 0 ? ", lemma unusable" : "") << '\n';
  }
  auto c1 = CorpusOccurrences::load(o.occurrences1);
  auto c2 = CorpusOccurrences::load(o.occurrences2);
  return {std::move(inventory), std::move(embeddings), std::move(c1), std::move(c2)};
}

ScoringConfig scoring_config(const ScoreOptions& o) {
  ScoringConfig cfg;
  cfg.measure = *parse_measure(o.measure);
  cfg.wsd.k = o.k;
  cfg.wsd.score_mode = *parse_score_mode(o.score_mode);
  cfg.wsd.normalize_vectors = o.normalize_vectors;
  cfg.wsd.renormalize_top_k = !o.no_renormalize_top_k;
  cfg.smoothing.epsilon = o.epsilon;
  return cfg;
}

ChangeReport compute_report(const ScoreOptions& o, const Inputs& in, std::ostream& err) {
  std::vector<std::string> targets;
  if (!o.targets.empty()) {
    targets = read_lemma_list(o.targets);
  } else {
    for (const auto& [lemma, senses] : in.inventory.entries()) targets.push_back(lemma);
  }
  auto report = score_targets(targets, in.corpus1, in.corpus2, in.inventory, in.embeddings,
                              scoring_config(o), o.workers);
  for (const auto& r : report.results) {
    if (r.status != ScoreStatus::scored) {
      err << "warning: " << r.lemma << ": " << to_string(r.status) << " (n1=" << r.n1
          << ", n2=" << r.n2 << "), excluded from ranking, labeled stable\n";
    }
  }
  if (report.ranking.empty()) throw Error("no target could be scored");
  return report;
}

int cmd_score(const ScoreOptions& o, bool ranking_only, std::ostream& out, std::ostream& err) {
  auto inputs = load_inputs(o, err);
  auto report = compute_report(o, inputs, err);
  if (o.threshold || !o.thresholds_file.empty()) {
    apply_classification(report, resolve_threshold(o.threshold, o.thresholds_file));
  }
  fs::path dir(o.out_dir);
  if (ranking_only) {
    auto f = open_output(dir / "ranking.tsv");
    write_ranking_tsv(f, report);
    out << "wrote " << (dir / "ranking.tsv").string() << " (" << report.ranking.size()
        << " ranked)\n";
    return kExitOk;
  }
  {
    auto f = open_output(dir / "report.tsv");
    write_report_tsv(f, report);
  }
  {
    auto f = open_output(dir / "report.json");
    write_report_json(f, report, o.dump_distributions);
  }
  out << "wrote " << (dir / "report.tsv").string() << " and " << (dir / "report.json").string()
      << " (" << report.ranking.size() << " scored of " << report.results.size() << ")\n";
  return kExitOk;
}

int cmd_dump(const ScoreOptions& o, std::ostream& out, std::ostream& err) {
  auto in = load_inputs(o, err);
  auto cfg = scoring_config(o);
  cfg.validate();
  for (const auto* c : {&in.corpus1, &in.corpus2}) {
    if (c->dim() != in.embeddings.dim()) {
      throw ValidationError("occurrence dim " + std::to_string(c->dim()) +
                            " does not match sense embedding dim " +
                            std::to_string(in.embeddings.dim()));
    }
  }
  std::vector<SenseDistribution> dists;
  for (const auto& lemma : o.lemmas) {
    if (!in.inventory.contains(lemma)) {
      throw ValidationError("unknown lemma \"" + lemma + "\" (inventory has " +
                            std::to_string(in.inventory.size()) + " lemmas)");
    }
    auto candidates = resolve_candidates(lemma, in.inventory, in.embeddings);
    if (candidates.empty()) {
      throw ValidationError("lemma \"" + lemma + "\" has no sense with an embedding");
    }
    for (const auto* c : {&in.corpus1, &in.corpus2}) {
      auto occ = c->occurrences(lemma);
      if (occ.empty()) {
        err << "warning: " << lemma << ": no occurrences in corpus " << c->corpus_id() << '\n';
        continue;
      }
      dists.push_back(corpus_distribution(lemma, c->corpus_id(), occ, candidates, cfg.wsd));
    }
  }
  fs::path dir(o.out_dir);
  {
    auto f = open_output(dir / "distributions.jsonl");
    write_distribution_jsonl(f, dists, in.inventory);
  }
  {
    auto f = open_output(dir / "distributions.tsv");
    write_distribution_tsv(f, dists, in.inventory);
  }
  out << "wrote " << dists.size() << " distribution records to "
      << (dir / "distributions.jsonl").string() << '\n';
  return kExitOk;
}

ChangeReport report_from_rows(const std::vector<ReportRow>& rows) {
  ChangeReport report;
  std::vector<std::pair<std::size_t, std::string>> ranked;
  for (const auto& row : rows) {
    TargetWordResult r;
    r.lemma = row.lemma;
    r.status = row.status;
    r.n1 = row.n1;
    r.n2 = row.n2;
    if (row.score) r.score = *row.score;
    if (row.label) report.labels[row.lemma] = *row.label;
    report.results.push_back(std::move(r));
  }
  if (!report.results.empty() &&
      std::any_of(report.results.begin(), report.results.end(),
                  [](const auto& r) { return r.status == ScoreStatus::scored; })) {
    report.ranking = rank_targets(report.results);
  }
  return report;
}

int cmd_classify(const ReportOptions& o, std::ostream& out, std::ostream&) {
  if (!o.threshold && o.thresholds_file.empty()) {
    throw ValidationError("one of --threshold or --thresholds is required");
  }
  auto report = report_from_rows(read_report_tsv(o.report));
  double threshold = resolve_threshold(o.threshold, o.thresholds_file);
  apply_classification(report, threshold);
  std::size_t changed = 0;
  for (const auto& [lemma, label] : report.labels) changed += label == ChangeLabel::changed;
  if (o.out.empty()) {
    write_report_tsv(out, report);
  } else {
    auto f = open_output(o.out);
    write_report_tsv(f, report);
    out << "wrote " << o.out << " (" << changed << " changed, " << report.labels.size() - changed
        << " stable at threshold " << format_score(threshold) << ")\n";
  }
  return kExitOk;
}

int cmd_tune(const ReportOptions& o, std::ostream& out, std::ostream& err) {
  auto rows = read_report_tsv(o.report);
  auto gold = load_gold(o.gold);
  std::vector<std::string> allowed;
  if (!o.validation_lemmas.empty()) allowed = read_lemma_list(o.validation_lemmas);
  std::vector<ValidationItem> validation;
  for (const auto& row : rows) {
    if (!row.score) continue;
    if (!allowed.empty() && std::find(allowed.begin(), allowed.end(), row.lemma) == allowed.end()) {
      continue;
    }
    auto it = gold.binary.find(row.lemma);
    if (it == gold.binary.end()) {
      err << "warning: " << row.lemma << ": no gold binary label, dropped\n";
      continue;
    }
    validation.push_back({row.lemma, *row.score, it->second});
  }
  TuningOptions options;
  options.repeats = o.repeats;
  options.trials_per_repeat = o.trials;
  options.base_seed = o.seed;
  auto result = tune(validation, *parse_measure(o.measure), options);
  for (const auto& r : result.repeats) {
    err << "repeat seed=" << r.seed << " threshold=" << format_score(r.threshold)
        << " accuracy=" << format_metric(r.accuracy) << " trials=" << r.trials << '\n';
  }
  if (o.out.empty()) {
    write_threshold_json(out, result.config);
  } else {
    auto f = open_output(o.out);
    write_threshold_json(f, result.config);
  }
  out << "threshold " << format_score(result.config.threshold) << " validation accuracy "
      << format_metric(result.config.validation_accuracy) << " (n=" << validation.size() << ")\n";
  return kExitOk;
}

int cmd_evaluate(const ReportOptions& o, std::ostream& out, std::ostream& err) {
  auto report = report_from_rows(read_report_tsv(o.report));
  auto gold = load_gold(o.gold);
  if (o.threshold || !o.thresholds_file.empty()) {
    apply_classification(report, resolve_threshold(o.threshold, o.thresholds_file));
  }
  EvaluationReport eval;
  if (!report.labels.empty() && !gold.binary.empty()) {
    eval.accuracy = accuracy(report.labels, gold.binary);
    for (const auto& l : eval.accuracy->dropped) err << "warning: " << l << ": no gold label, dropped\n";
  }
  if (!gold.graded.empty()) {
    std::map<std::string, double, std::less<>> scores;
    for (const auto& r : report.results) {
      if (r.status == ScoreStatus::scored) scores[r.lemma] = r.score;
    }
    eval.spearman = spearman(scores, gold.graded);
    for (const auto& l : eval.spearman->dropped) err << "warning: " << l << ": no gold rating, dropped\n";
  }
  if (!eval.accuracy && !eval.spearman) {
    throw ValidationError("nothing to evaluate: need labels + binary gold or graded gold");
  }
  if (eval.accuracy) {
    out << "accuracy\t" << format_metric(eval.accuracy->value) << "\t(" << eval.accuracy->correct
        << "/" << eval.accuracy->total << ")\n";
  }
  if (eval.spearman) {
    if (eval.spearman->rho) {
      std::ostringstream exact;
      exact.precision(17);
      exact << *eval.spearman->rho;
      out << "spearman_rho\t" << format_metric(*eval.spearman->rho) << "\t(" << exact.str()
          << ", n=" << eval.spearman->n << ")\n";
    } else {
      out << "spearman_rho\tundefined\t(zero variance, n=" << eval.spearman->n << ")\n";
    }
  }
  if (!o.out.empty()) {
    auto f = open_output(o.out);
    write_evaluation_json(f, eval);
  }
  return kExitOk;
}

int cmd_validate(const ValidateOptions& o, std::ostream& out, std::ostream&) {
  auto inventory = load_inventory(o.inventory);
  auto embeddings =
      load_sense_embeddings(o.embeddings, resolve_format(o.embeddings, o.embeddings_format));
  auto report = validate_pair(inventory, embeddings);
  out << "lemmas\t" << report.lemmas_checked << "\nsense_embeddings\t" << embeddings.size()
      << "\ndim\t" << embeddings.dim() << "\nincomplete\t" << report.incomplete.size()
      << "\nunusable\t" << report.unusable.size() << '\n';
  for (const auto& c : report.incomplete) {
    out << "missing\t" << c.lemma;
    for (const auto& s : c.missing) out << '\t' << s.str();
    out << '\n';
  }
  if (!o.out.empty()) {
    nlohmann::ordered_json doc;
    doc["lemmas"] = report.lemmas_checked;
    doc["sense_embeddings"] = embeddings.size();
    doc["dim"] = embeddings.dim();
    nlohmann::ordered_json incomplete = nlohmann::ordered_json::array();
    for (const auto& c : report.incomplete) {
      nlohmann::ordered_json missing = nlohmann::ordered_json::array();
      for (const auto& s : c.missing) missing.push_back(s.str());
      incomplete.push_back({{"lemma", c.lemma}, {"missing", missing}, {"resolvable", c.resolvable}});
    }
    doc["incomplete"] = std::move(incomplete);
    doc["unusable"] = report.unusable;
    auto f = open_output(o.out);
    f << doc.dump(2) << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sense-distribution semantic change detection"};
  app.name("scd");
  app.require_subcommand(1);
  // Lets `--config` follow the subcommand name.
  app.fallthrough();
  app.set_config("--config", "", "INI/TOML file; options go under a [subcommand] section");

  ScoreOptions score_opts;
  auto* score = app.add_subcommand("score", "Score target lemmas between two corpora");
  add_scoring_options(score, score_opts);
  score->add_option("--targets", score_opts.targets, "Target lemma list (default: all inventory lemmas)")
      ->check(CLI::ExistingFile);
  score->add_option("--measure", score_opts.measure, "Comparison measure")
      ->check(CLI::IsMember(kMeasureNames))
      ->capture_default_str();
  score->add_option("--epsilon", score_opts.epsilon, "KL smoothing epsilon")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  score->add_flag("--dump-distributions", score_opts.dump_distributions,
                  "Embed sense distributions in report.json");
  add_threshold_options(score, score_opts.threshold, score_opts.thresholds_file);

  ScoreOptions rank_opts;
  auto* rank = app.add_subcommand("rank", "Like score, writing only ranking.tsv");
  add_scoring_options(rank, rank_opts);
  rank->add_option("--targets", rank_opts.targets, "Target lemma list")->check(CLI::ExistingFile);
  rank->add_option("--measure", rank_opts.measure, "Comparison measure")
      ->check(CLI::IsMember(kMeasureNames))
      ->capture_default_str();
  rank->add_option("--epsilon", rank_opts.epsilon, "KL smoothing epsilon")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  ReportOptions classify_opts;
  auto* classify_cmd = app.add_subcommand("classify", "Label a score report as changed/stable");
  classify_cmd->add_option("--report", classify_opts.report, "report.tsv from score")
      ->required()
      ->check(CLI::ExistingFile);
  add_threshold_options(classify_cmd, classify_opts.threshold, classify_opts.thresholds_file);
  classify_cmd->add_option("--out", classify_opts.out, "Output TSV (default: stdout)");

  ReportOptions tune_opts;
  auto* tune_cmd = app.add_subcommand("tune", "Tune the classification threshold");
  tune_cmd->add_option("--report", tune_opts.report, "report.tsv from score")
      ->required()
      ->check(CLI::ExistingFile);
  add_gold_options(tune_cmd, tune_opts.gold);
  tune_cmd->add_option("--validation-lemmas", tune_opts.validation_lemmas,
                       "Held-out lemma list (default: every lemma with a gold label)")
      ->check(CLI::ExistingFile);
  tune_cmd->add_option("--measure", tune_opts.measure, "Measure the report was scored with")
      ->check(CLI::IsMember(kMeasureNames))
      ->capture_default_str();
  tune_cmd->add_option("--repeats", tune_opts.repeats, "Independent searches to average")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tune_cmd->add_option("--trials", tune_opts.trials, "Evaluations per search")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  tune_cmd->add_option("--seed", tune_opts.seed, "Base random seed")->capture_default_str();
  tune_cmd->add_option("--out", tune_opts.out, "Threshold JSON (default: stdout)");

  ReportOptions eval_opts;
  auto* eval_cmd = app.add_subcommand("evaluate", "Accuracy and Spearman rho against gold");
  eval_cmd->add_option("--report", eval_opts.report, "report.tsv from score or classify")
      ->required()
      ->check(CLI::ExistingFile);
  add_gold_options(eval_cmd, eval_opts.gold);
  add_threshold_options(eval_cmd, eval_opts.threshold, eval_opts.thresholds_file);
  eval_cmd->add_option("--out", eval_opts.out, "Evaluation JSON");

  ScoreOptions dump_opts;
  auto* dump = app.add_subcommand("dump-distributions", "Per-corpus sense distributions of lemmas");
  add_scoring_options(dump, dump_opts);
  dump->add_option("--lemma", dump_opts.lemmas, "Lemma to dump (repeatable)")->required();

  ValidateOptions validate_opts;
  auto* validate_cmd = app.add_subcommand("validate", "Check inventory coverage by embeddings");
  add_embedding_options(validate_cmd, validate_opts.embeddings, validate_opts.embeddings_format);
  validate_cmd->add_option("--inventory", validate_opts.inventory, "Sense inventory (JSONL)")
      ->required()
      ->check(CLI::ExistingFile);
  validate_cmd->add_option("--out", validate_opts.out, "Validation report JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (score->parsed()) return cmd_score(score_opts, false, out, err);
    if (rank->parsed()) return cmd_score(rank_opts, true, out, err);
    if (classify_cmd->parsed()) return cmd_classify(classify_opts, out, err);
    if (tune_cmd->parsed()) return cmd_tune(tune_opts, out, err);
    if (eval_cmd->parsed()) return cmd_evaluate(eval_opts, out, err);
    if (dump->parsed()) return cmd_dump(dump_opts, out, err);
    if (validate_cmd->parsed()) return cmd_validate(validate_opts, out, err);
  } catch (const FormatError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitComputation;
  }
  return kExitUsage;
}

}  // namespace scd
