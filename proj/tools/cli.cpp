#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "markovseq/markovseq.hpp"

namespace markovseq::cli {
namespace {

using nlohmann::json;

json letter_json(const Int& v) {
  if (auto u = to_u64(v)) return *u;
  return v.get_str();
}

json seq_json(const Seq& s) {
  json a = json::array();
  for (const auto& x : s) a.push_back(letter_json(x));
  return a;
}

json surd_json(const QuadraticSurd& x) {
  return {{"p", x.p().get_str()}, {"q", x.q().get_str()}, {"r", x.r().get_str()}, {"D", x.radicand().get_str()}};
}

json report_json(const VerificationReport& r) {
  json j = {{"command", "verify"}, {"claim", r.claim}, {"n", r.n}, {"pass", r.pass}, {"witness", r.witness}};
  if (r.counterexample) j["counterexample"] = *r.counterexample;
  return j;
}

std::string surd_triple(const QuadraticSurd& x) {
  return "p=" + x.p().get_str() + " q=" + x.q().get_str() + " r=" + x.r().get_str() +
         " D=" + x.radicand().get_str();
}

/// Runs `fn(lo, hi, results)` over contiguous shards of [first, last] on up
/// to `workers` threads; results come back concatenated in index order.
template <class Result>
std::vector<Result> sharded(Index first, Index last, unsigned workers,
                            const std::function<void(Index, Index, std::vector<Result>&)>& fn) {
  if (last < first) return {};
  const Index total = last - first + 1;
  const Index shards = std::clamp<Index>(workers, 1, total);
  const Index chunk = (total + shards - 1) / shards;
  std::vector<std::vector<Result>> parts(shards);
  if (shards == 1) {
    fn(first, last, parts[0]);
    return std::move(parts[0]);
  }
  std::vector<std::exception_ptr> errors(shards);
  std::vector<std::thread> threads;
  for (Index s = 0; s < shards; ++s) {
    const Index lo = first + s * chunk;
    if (lo > last) break;
    const Index hi = std::min(last, lo + chunk - 1);
    threads.emplace_back([&, s, lo, hi] {
      try {
        fn(lo, hi, parts[s]);
      } catch (...) {
        errors[s] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::vector<Result> merged;
  for (auto& p : parts) std::move(p.begin(), p.end(), std::back_inserter(merged));
  return merged;
}

class ReportPrinter {
 public:
  ReportPrinter(std::ostream& out, bool as_json, bool summary_only)
      : out_(out), json_(as_json), summary_only_(summary_only) {}

  void operator()(const VerificationReport& r) {
    auto& [passed, total] = tally_[r.claim];
    ++total;
    if (r.pass) ++passed;
    all_passed_ = all_passed_ && r.pass;
    if (json_) {
      out_ << report_json(r).dump() << '\n';
      return;
    }
    if (summary_only_ && r.pass) return;
    out_ << (r.pass ? "PASS " : "FAIL ") << r.claim << " n=" << r.n << ' ' << r.witness;
    if (r.counterexample) out_ << " counterexample: " << *r.counterexample;
    out_ << '\n';
  }

  int finish() {
    if (!json_) {
      for (const auto& [claim, counts] : tally_) {
        out_ << claim << ": " << counts.first << '/' << counts.second << " passed\n";
      }
    }
    return all_passed_ ? kExitOk : kExitCheckFailed;
  }

 private:
  std::ostream& out_;
  bool json_;
  bool summary_only_;
  bool all_passed_ = true;
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> tally_;
};

struct Options {
  bool json = false;
  bool summary = false;
  unsigned workers = 1;
  unsigned digits = 30;

  std::string seed_a = "1,1";
  std::string seed_b = "2,2";
  Index n = 0;
  bool blocks = false;

  Index upto = 0;

  std::string a_letter = "1";
  std::string b_letter = "2";
  Index prop_n_max = 4096;

  unsigned trials = 200;
  std::uint64_t rng_seed = 42;
  Index theorem_n_max = 512;
  unsigned max_seed_length = 8;
  unsigned max_letter = 9;

  unsigned levels = 10;
  unsigned random_pairs = 20;
  bool literal_a_star = false;

  std::optional<Index> k_max;
  unsigned level_max = 14;

  std::string period;
  Index scan_n_max = 64;

  std::string form;
  std::uint32_t radius = 50;
};

Int parse_letter(const std::string& text) {
  auto v = parse_int(text, /*allow_sign=*/false);
  if (!v || sgn(*v) <= 0) throw std::invalid_argument("malformed letter '" + text + "'");
  return *v;
}

BQForm parse_form(const std::string& text) {
  std::vector<Int> coeffs;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string token = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    auto v = parse_int(token);
    if (!v) throw std::invalid_argument("malformed form coefficient '" + token + "' in '" + text + "'");
    coeffs.push_back(*v);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (coeffs.size() != 3) throw std::invalid_argument("form must have three coefficients a,b,c: '" + text + "'");
  return {coeffs[0], coeffs[1], coeffs[2]};
}

// ---------------------------------------------------------------------------

int cmd_seq(const Options& o, std::ostream& out) {
  const Seq a = parse_seq(o.seed_a);
  const Seq b = parse_seq(o.seed_b);
  const auto bw = block_word(a, b, o.n);
  const Seq s = s_rec(a, b, o.n);
  if (o.json) {
    out << json{{"command", "seq"}, {"n", o.n},          {"A", seq_json(a)},
                {"B", seq_json(b)},  {"seq", seq_json(s)}, {"blocks", to_string(bw.labels)},
                {"length", s.size()}}
               .dump()
        << '\n';
  } else {
    out << (o.blocks ? to_string(bw.labels) : format_seq(s)) << '\n';
  }
  return kExitOk;
}

int cmd_stern(const Options& o, std::ostream& out) {
  if (!o.json) out << "index,value\n";
  for (Index i = 0; i <= o.upto; ++i) {
    if (o.json) {
      out << json{{"command", "stern"}, {"index", i}, {"value", stern(i)}}.dump() << '\n';
    } else {
      out << i << ',' << stern(i) << '\n';
    }
  }
  return kExitOk;
}

int cmd_prop_main(const Options& o, std::ostream& out) {
  const Int a = parse_letter(o.a_letter);
  const Int b = parse_letter(o.b_letter);
  doubled_seeds(a, b);
  ReportPrinter print(out, o.json, o.summary);
  const auto reports = sharded<VerificationReport>(1, o.prop_n_max, o.workers, [&](Index lo, Index hi, auto& sink) {
    auto family = doubled_seeds(a, b);
    for (Index n = lo; n <= hi; ++n) sink.push_back(verify_prop_main(family, n));
  });
  for (const auto& r : reports) print(r);
  return print.finish();
}

int cmd_theorem(const Options& o, std::ostream& out) {
  std::mt19937_64 rng(o.rng_seed);
  std::vector<std::pair<Seq, Seq>> seeds;
  for (unsigned t = 0; t < o.trials; ++t) {
    Seq a = random_palindrome(rng, o.max_seed_length, o.max_letter);
    Seq b = random_palindrome(rng, o.max_seed_length, o.max_letter);
    seeds.emplace_back(std::move(a), std::move(b));
  }
  ReportPrinter print(out, o.json, o.summary);
  if (o.trials == 0) return print.finish();
  const auto reports = sharded<VerificationReport>(0, o.trials - 1, o.workers, [&](Index lo, Index hi, auto& sink) {
    auto labels = label_sequences();
    for (Index t = lo; t <= hi; ++t) {
      for (Index n = 1; n <= o.theorem_n_max; ++n) {
        auto r = verify_theorem_main(labels.at(n), seeds[t].first, seeds[t].second, n);
        r.witness = "trial=" + std::to_string(t) + " " + r.witness;
        sink.push_back(std::move(r));
      }
    }
  });
  for (const auto& r : reports) print(r);
  return print.finish();
}

int cmd_equivalence(const Options& o, std::ostream& out) {
  std::vector<std::pair<Seq, Seq>> seeds{{parse_seq(o.seed_a), parse_seq(o.seed_b)}};
  std::mt19937_64 rng(o.rng_seed);
  for (unsigned t = 0; t < o.random_pairs; ++t) {
    Seq a = random_word(rng, o.max_seed_length, o.max_letter);
    Seq b = random_word(rng, o.max_seed_length, o.max_letter);
    seeds.emplace_back(std::move(a), std::move(b));
  }
  const AStarRule rule = o.literal_a_star ? AStarRule::literal : AStarRule::corrected;
  ReportPrinter print(out, o.json, o.summary);
  const auto reports =
      sharded<VerificationReport>(0, seeds.size() - 1, o.workers, [&](Index lo, Index hi, auto& sink) {
        for (Index p = lo; p <= hi; ++p) {
          verify_equivalence(
              seeds[p].first, seeds[p].second, o.levels,
              [&](VerificationReport r) {
                r.witness = "pair=" + std::to_string(p) + " " + r.witness;
                sink.push_back(std::move(r));
              },
              rule);
        }
      });
  for (const auto& r : reports) print(r);
  return print.finish();
}

int cmd_lemmas(const Options& o, std::ostream& out) {
  LemmaRanges ranges;
  if (o.k_max) {
    ranges.lemma12_k_max = *o.k_max;
    ranges.lemma3_k_max = *o.k_max;
    ranges.factorization_k_max = *o.k_max;
  }
  ranges.level_n_max = o.level_max;
  ReportPrinter print(out, o.json, o.summary);
  verify_lemmas(ranges, print);
  return print.finish();
}

int cmd_spectrum(const Options& o, std::ostream& out) {
  const Seq period = parse_seq(o.period);
  const auto mv = markov_value(period);
  const bool markov = mv.value < QuadraticSurd(Int(3));
  const std::string decimal = mv.value.to_decimal(o.digits);
  if (o.json) {
    out << json{{"command", "spectrum"}, {"period", seq_json(period)}, {"surd", surd_json(mv.value)},
                {"decimal", decimal},     {"argmin", mv.argmin},        {"is_markov", markov}}
               .dump()
        << '\n';
  } else {
    out << "period: " << format_seq(period) << '\n'
        << "value: " << mv.value << '\n'
        << "surd: " << surd_triple(mv.value) << '\n'
        << "decimal: " << decimal << '\n'
        << "argmin: " << mv.argmin << '\n'
        << "is_markov: " << (markov ? "true" : "false") << '\n';
  }
  return kExitOk;
}

int cmd_scan(const Options& o, std::ostream& out) {
  const Int a = parse_letter(o.a_letter);
  const Int b = parse_letter(o.b_letter);
  doubled_seeds(a, b);
  struct Row {
    Index n;
    Seq period;
    MarkovValue value;
  };
  const auto rows = sharded<Row>(1, o.scan_n_max, o.workers, [&](Index lo, Index hi, auto& sink) {
    auto family = doubled_seeds(a, b);
    for (Index n = lo; n <= hi; ++n) sink.push_back({n, family.at(n), markov_value(family.at(n))});
  });
  if (!o.json) out << "n\tperiod\tsurd\tdecimal\tbelow_3\n";
  for (const auto& row : rows) {
    const bool markov = row.value.value < QuadraticSurd(Int(3));
    const std::string decimal = row.value.value.to_decimal(o.digits);
    if (o.json) {
      out << json{{"command", "scan"},        {"n", row.n},
                  {"period", seq_json(row.period)}, {"surd", surd_json(row.value.value)},
                  {"decimal", decimal},         {"argmin", row.value.argmin},
                  {"is_markov", markov}}
                 .dump()
          << '\n';
    } else {
      out << row.n << '\t' << format_seq(row.period) << '\t' << row.value.value << '\t' << decimal << '\t'
          << (markov ? "true" : "false") << '\n';
    }
  }
  return kExitOk;
}

int cmd_bqf(const Options& o, std::ostream& out) {
  const BQForm form = parse_form(o.form);
  const auto m = bqf_min(form, o.radius);
  const std::string decimal = m.normalized.to_decimal(o.digits);
  if (o.json) {
    out << json{{"command", "bqf"},
                {"form", {form.a.get_str(), form.b.get_str(), form.c.get_str()}},
                {"radius", o.radius},
                {"discriminant", m.discriminant.get_str()},
                {"min_abs", m.min_abs.get_str()},
                {"point", {m.point.x, m.point.y}},
                {"normalized", surd_json(m.normalized)},
                {"decimal", decimal}}
               .dump()
        << '\n';
  } else {
    out << "form: " << form.a << ',' << form.b << ',' << form.c << '\n'
        << "discriminant: " << m.discriminant << '\n'
        << "min_abs: " << m.min_abs << '\n'
        << "point: " << m.point.x << ',' << m.point.y << '\n'
        << "normalized: " << m.normalized << '\n'
        << "surd: " << surd_triple(m.normalized) << '\n'
        << "decimal: " << decimal << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Ordered Markov sequences, palindromic shifts and Markov spectrum values", "markovseq"};
  app.require_subcommand(1);

  auto add_output = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Emit one JSON object per line");
  };
  auto add_batch = [&](CLI::App* sub) {
    add_output(sub);
    sub->add_flag("--summary", o.summary, "Print only failing reports and per-claim totals");
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
  };

  auto* seq = app.add_subcommand("seq", "Print S_{A,B}(n)");
  seq->add_option("--A", o.seed_a, "Seed sequence A, e.g. 1,1")->required();
  seq->add_option("--B", o.seed_b, "Seed sequence B, e.g. 2,2")->required();
  seq->add_option("--n", o.n, "Index n")->required();
  seq->add_flag("--blocks", o.blocks, "Print the block word over A and B");
  add_output(seq);

  auto* stern_cmd = app.add_subcommand("stern", "Print Stern's diatomic sequence as CSV");
  stern_cmd->add_option("--upto", o.upto, "Largest index")->required();
  add_output(stern_cmd);

  auto* verify = app.add_subcommand("verify", "Run verification sweeps");
  verify->require_subcommand(1);
  auto* prop = verify->add_subcommand("prop-main", "C_{d_n}(S(n)) is palindromic for A=(a,a), B=(b,b)");
  prop->add_option("--n-max", o.prop_n_max, "Largest n")->capture_default_str();
  prop->add_option("--a", o.a_letter, "Letter a")->capture_default_str();
  prop->add_option("--b", o.b_letter, "Letter b")->capture_default_str();
  add_batch(prop);

  auto* theorem = verify->add_subcommand("theorem", "Block rearrangement is palindromic for random palindromic seeds");
  theorem->add_option("--trials", o.trials, "Random seed pairs")->capture_default_str();
  theorem->add_option("--seed", o.rng_seed, "RNG seed")->capture_default_str();
  theorem->add_option("--n-max", o.theorem_n_max, "Largest n")->capture_default_str();
  theorem->add_option("--max-seed-length", o.max_seed_length, "Longest random seed")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  theorem->add_option("--max-letter", o.max_letter, "Largest random letter")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  add_batch(theorem);

  auto* equivalence = verify->add_subcommand("equivalence", "Graph and recursive constructions agree");
  equivalence->add_option("--levels", o.levels, "Deepest level (root is level 1)")
      ->capture_default_str()
      ->check(CLI::Range(1, 20));
  equivalence->add_option("--A", o.seed_a, "Fixed seed A")->capture_default_str();
  equivalence->add_option("--B", o.seed_b, "Fixed seed B")->capture_default_str();
  equivalence->add_option("--random-pairs", o.random_pairs, "Additional random seed pairs")->capture_default_str();
  equivalence->add_option("--seed", o.rng_seed, "RNG seed")->capture_default_str();
  equivalence->add_option("--max-seed-length", o.max_seed_length, "Longest random seed")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  equivalence->add_option("--max-letter", o.max_letter, "Largest random letter")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  equivalence->add_flag("--literal-a-star", o.literal_a_star, "Use a*(x)=a(x) for every x>1 (fails at n=5)");
  add_batch(equivalence);

  auto* lemmas = verify->add_subcommand("lemmas", "Length, index and factorisation identities");
  lemmas->add_option("--k-max", o.k_max, "Largest k for the k-indexed identities");
  lemmas->add_option("--level-max", o.level_max, "Largest level for the level-indexed identities")
      ->capture_default_str()
      ->check(CLI::Range(2, 30));
  add_batch(lemmas);

  auto* spectrum = app.add_subcommand("spectrum", "Markov spectrum value of a periodic sequence");
  spectrum->add_option("--period", o.period, "Period, e.g. 2,2,1,1")->required();
  spectrum->add_option("--digits", o.digits, "Decimal digits")->capture_default_str();
  add_output(spectrum);

  auto* scan = app.add_subcommand("scan", "Tabulate spectrum values of S(n) for A=(a,a), B=(b,b)");
  scan->add_option("--n-max", o.scan_n_max, "Largest n")->capture_default_str();
  scan->add_option("--a", o.a_letter, "Letter a")->capture_default_str();
  scan->add_option("--b", o.b_letter, "Letter b")->capture_default_str();
  scan->add_option("--digits", o.digits, "Decimal digits")->capture_default_str();
  add_batch(scan);

  auto* bqf = app.add_subcommand("bqf", "Bounded minimum of |f| for an indefinite binary quadratic form");
  bqf->add_option("--form", o.form, "Coefficients a,b,c of a x^2 + b xy + c y^2")->required();
  bqf->add_option("--radius", o.radius, "Search box half-width")->capture_default_str();
  bqf->add_option("--digits", o.digits, "Decimal digits")->capture_default_str();
  add_output(bqf);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*seq) return cmd_seq(o, out);
    if (*stern_cmd) return cmd_stern(o, out);
    if (*prop) return cmd_prop_main(o, out);
    if (*theorem) return cmd_theorem(o, out);
    if (*equivalence) return cmd_equivalence(o, out);
    if (*lemmas) return cmd_lemmas(o, out);
    if (*spectrum) return cmd_spectrum(o, out);
    if (*scan) return cmd_scan(o, out);
    if (*bqf) return cmd_bqf(o, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace markovseq::cli
