#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "klheap/deodhar.hpp"
#include "klheap/enumerate.hpp"
#include "klheap/error.hpp"
#include "klheap/heap.hpp"
#include "klheap/hecke.hpp"
#include "klheap/io.hpp"
#include "klheap/schubert.hpp"
#include "klheap/verify.hpp"

namespace klheap::cli {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Globals {
  std::string format = "text";
  unsigned jobs = 1;
  std::string cache;
};

struct Target {
  std::string word;
  std::string perm;
  int rank = 0;
};

struct Options {
  Target target;
  std::string perm;
  std::string x = "e";
  std::string mask;
  bool oracle = false;
  bool force = false;
  bool defective = false;
  int n_min = 1;
  int n_max = 0;
  int n = 0;
  std::size_t sample = 0;
  std::uint64_t seed = 1;
};

const char* yes_no(bool b) { return b ? "yes" : "no"; }

Permutation parse_perm(const std::string& text, int rank) {
  Permutation p = Permutation::parse(text, rank);
  if (rank > p.size()) p = p.extended(rank);
  return p;
}

// Resolves --word / --perm into a reduced word and its product.
std::pair<Word, Permutation> resolve(const Target& t) {
  if (!t.word.empty()) {
    Word word = Word::parse(t.word, t.rank);
    if (!is_reduced(word)) throw DomainError("word '" + word.to_string() + "' is not reduced");
    return {word, apply_word(word)};
  }
  if (t.perm.empty()) throw DomainError("give --word or --perm");
  Permutation w = parse_perm(t.perm, t.rank);
  return {canonical_reduced_word(w), w};
}

Permutation resolve_x(const std::string& text, const Permutation& w) {
  Permutation x = Permutation::parse(text, w.size());
  if (x.size() > w.size()) throw DomainError("x has larger rank than w");
  return x.size() < w.size() ? x.extended(w.size()) : x;
}

ordered_json coeffs_json(const QPoly& p) {
  return ordered_json{{"coeffs", std::vector<Coeff>(p.coeffs().begin(), p.coeffs().end())}};
}

std::string set_text(const std::vector<std::size_t>& positions) {
  std::string out = "{";
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(positions[i]);
  }
  return out + "}";
}

void add_target(CLI::App* sub, Target& t) {
  auto* word = sub->add_option("--word", t.word, "reduced word, space-separated generator indices");
  auto* perm = sub->add_option("--perm", t.perm, "permutation in one-line notation, e.g. 3,4,5,1,2");
  word->excludes(perm);
  sub->add_option("--n", t.rank, "rank n of S_n (default: inferred)");
}

class Runner {
 public:
  Runner(const Globals& g, std::ostream& out) : g_(g), format_(parse_format(g.format)), out_(out) {}

  void load_cache() {
    if (g_.cache.empty()) return;
    existed_ = std::filesystem::exists(g_.cache);
    default_kl_store().load_file(g_.cache);
    cached_ = default_kl_store().size();
  }

  void save_cache() const {
    if (g_.cache.empty() || (existed_ && default_kl_store().size() == cached_)) return;
    default_kl_store().save_file(g_.cache);
  }

  int check(const Options& o) {
    const Permutation w = parse_perm(o.perm, o.target.rank);
    const std::vector<std::pair<std::string, std::string>> rows = {
        {"permutation", w.to_string()},
        {"length", std::to_string(length(w))},
        {"reduced word", canonical_reduced_word(w).to_string()},
        {"321-avoiding", yes_no(is_321_avoiding(w))},
        {"hexagon-avoiding", yes_no(is_hexagon_avoiding(w))},
        {"321-hexagon-avoiding", yes_no(is_321_hexagon_avoiding(w))},
        {"smooth", yes_no(is_smooth(w))},
    };
    emit_pairs(rows);
    return kOk;
  }

  int kl(const Options& o) {
    const auto [word, w] = resolve(o.target);
    const Permutation x = resolve_x(o.x, w);
    QPoly poly;
    std::string method;
    if (o.oracle) {
      poly = default_kl_store().table(w)->at(x);
      method = "oracle";
    } else {
      if (!is_321_hexagon_avoiding(w)) {
        throw DomainError(w.to_string() +
                          " is not 321-hexagon-avoiding, so the mask sum need not equal P_{x,w}; "
                          "pass --oracle to use the Hecke algebra recursion");
      }
      const DeodharTable table = deodhar_table(word, {g_.jobs, MaskWalk::GrayCode});
      auto it = table.find(x);
      if (it != table.end()) poly = it->second;
      method = "masks";
    }
    switch (format_) {
      case Format::Text:
        out_ << poly.to_string() << '\n';
        break;
      case Format::Json:
        out_ << ordered_json{{"w", w.to_string()}, {"x", x.to_string()}, {"method", method}, {"poly", coeffs_json(poly)}}
                    .dump()
             << '\n';
        break;
      case Format::Csv:
        out_ << "w,x,coeffs\n"
             << csv_field(w.to_string()) << ',' << csv_field(x.to_string()) << ',' << csv_field(coeff_list(poly))
             << '\n';
        break;
    }
    return kOk;
  }

  int table(const Options& o) {
    const auto [word, w] = resolve(o.target);
    if (o.oracle) {
      out_ << format_poly_table(default_kl_store().table(w)->entries, format_);
    } else {
      out_ << format_poly_table(deodhar_table(word, {g_.jobs, MaskWalk::GrayCode}), format_);
    }
    return kOk;
  }

  int poincare(const Options& o) {
    const Permutation w = parse_perm(o.perm, o.target.rank);
    const QPoly p = poincare_ih(w);
    const bool binomial = p == QPoly::one_plus_q_power(length(w));
    switch (format_) {
      case Format::Text:
        out_ << p.to_string() << '\n';
        break;
      case Format::Json:
        out_ << ordered_json{{"w", w.to_string()}, {"poly", coeffs_json(p)}, {"equals_one_plus_q_power", binomial}}
                    .dump()
             << '\n';
        break;
      case Format::Csv:
        out_ << "w,coeffs,equals_one_plus_q_power\n"
             << csv_field(w.to_string()) << ',' << csv_field(coeff_list(p)) << ',' << yes_no(binomial) << '\n';
        break;
    }
    return kOk;
  }

  int tight(const Options& o) {
    const Permutation w = parse_perm(o.perm, o.target.rank);
    emit_pairs({{"permutation", w.to_string()}, {"tight", yes_no(is_tight(w))}});
    return kOk;
  }

  int singular(const Options& o) {
    const Permutation w = parse_perm(o.perm, o.target.rank);
    const std::vector<Permutation> locus = o.oracle ? max_singular_locus_oracle(w) : max_singular_locus(w);
    const int lw = length(w);
    switch (format_) {
      case Format::Text:
        for (const Permutation& y : locus) out_ << y.to_string() << '\t' << lw - length(y) << '\n';
        break;
      case Format::Json: {
        ordered_json doc = ordered_json::array();
        for (const Permutation& y : locus) doc.push_back({{"y", y.to_string()}, {"codim", lw - length(y)}});
        out_ << doc.dump() << '\n';
        break;
      }
      case Format::Csv:
        out_ << "y,codim\n";
        for (const Permutation& y : locus) out_ << csv_field(y.to_string()) << ',' << lw - length(y) << '\n';
        break;
    }
    return kOk;
  }

  int heap(const Options& o) {
    const auto [word, w] = resolve(o.target);
    const HeapEmbedding h = build_heap(word);
    std::optional<Mask> mask;
    std::vector<bool> defect(word.size() + 1, false);
    if (!o.mask.empty()) {
      mask = Mask::parse(o.mask);
      for (std::size_t j : defect_set(word, *mask).defects) defect[j] = true;
    }
    switch (format_) {
      case Format::Text:
        out_ << render_ascii(h, mask ? &*mask : nullptr);
        break;
      case Format::Json: {
        ordered_json points = ordered_json::array();
        for (const HeapPoint& p : h.points()) points.push_back({p.column, p.level});
        const auto letters = word.letters();
        ordered_json doc = {{"word", std::vector<int>(letters.begin(), letters.end())},
                            {"points", points},
                            {"components", h.components()}};
        if (mask) {
          doc["mask"] = mask->to_string();
          doc["defects"] = defect_set(word, *mask).defects;
        }
        out_ << doc.dump() << '\n';
        break;
      }
      case Format::Csv:
        out_ << (mask ? "position,column,level,kept,defect\n" : "position,column,level\n");
        for (std::size_t j = 1; j <= h.size(); ++j) {
          out_ << j << ',' << h.point(j).column << ',' << h.point(j).level;
          if (mask) out_ << ',' << (mask->at(j) ? 1 : 0) << ',' << (defect[j] ? 1 : 0);
          out_ << '\n';
        }
        break;
    }
    return kOk;
  }

  int masks(const Options& o) {
    const auto [word, w] = resolve(o.target);
    if (word.size() > kMaxMaskWordLength) {
      throw ResourceError("word has " + std::to_string(word.size()) + " letters; masks are limited to " +
                          std::to_string(kMaxMaskWordLength));
    }
    std::optional<Permutation> filter;
    if (!o.x.empty()) filter = resolve_x(o.x, w);
    struct Row {
      Mask mask;
      DefectRecord record;
    };
    std::vector<Row> rows;
    const std::uint64_t count = std::uint64_t{1} << word.size();
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      Mask m = Mask::from_integer(bits, word.size());
      DefectRecord rec = defect_set(word, m);
      if (filter && rec.product != *filter) continue;
      if (o.defective && rec.defects.empty()) continue;
      rows.push_back({std::move(m), std::move(rec)});
    }
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.mask < b.mask; });
    switch (format_) {
      case Format::Text:
        for (const Row& r : rows) {
          out_ << r.mask.to_string() << '\t' << r.record.product.to_string() << '\t' << set_text(r.record.defects)
               << '\n';
        }
        break;
      case Format::Json: {
        ordered_json doc = ordered_json::array();
        for (const Row& r : rows) {
          doc.push_back({{"mask", r.mask.to_string()},
                         {"product", r.record.product.to_string()},
                         {"defects", r.record.defects},
                         {"zero_defects", r.record.zero_defects}});
        }
        out_ << doc.dump() << '\n';
        break;
      }
      case Format::Csv:
        out_ << "mask,product,defects\n";
        for (const Row& r : rows) {
          out_ << csv_field(r.mask.to_string()) << ',' << csv_field(r.record.product.to_string()) << ','
               << csv_field(set_text(r.record.defects)) << '\n';
        }
        break;
    }
    return kOk;
  }

  int enumerate(const Options& o) {
    if (o.n_max < o.n_min || o.n_min < 1) throw DomainError("need 1 <= --n-min <= --n-max");
    if (o.n_max > kEnumRankLimit && !o.force) {
      throw ResourceError("n > " + std::to_string(kEnumRankLimit) + " needs --force");
    }
    std::vector<EnumRow> rows;
    for (int n = o.n_min; n <= o.n_max; ++n) rows.push_back(enumerate_rank(n, g_.jobs));
    switch (format_) {
      case Format::Text:
        out_ << "n\t321-avoiding\t321-hexagon-avoiding\n";
        for (const EnumRow& r : rows) out_ << r.n << '\t' << r.count_321 << '\t' << r.count_321_hexagon << '\n';
        break;
      case Format::Json: {
        ordered_json doc = ordered_json::array();
        for (const EnumRow& r : rows) {
          doc.push_back({{"n", r.n}, {"count_321", r.count_321}, {"count_321_hexagon", r.count_321_hexagon}});
        }
        out_ << doc.dump() << '\n';
        break;
      }
      case Format::Csv:
        out_ << "n,count_321,count_321_hexagon\n";
        for (const EnumRow& r : rows) out_ << r.n << ',' << r.count_321 << ',' << r.count_321_hexagon << '\n';
        break;
    }
    return kOk;
  }

  int verify(const Options& o) {
    VerifyOptions vo;
    vo.n = o.n;
    if (o.sample > 0) vo.sample = o.sample;
    vo.seed = o.seed;
    const VerifyReport report = run_verify(vo);
    switch (format_) {
      case Format::Text:
        out_ << "n=" << report.n << " elements=" << report.elements
             << " 321-hexagon-avoiding=" << report.hexagon_avoiding << '\n';
        for (const CheckTally& c : report.checks) {
          out_ << c.name << ": " << c.passed << " passed, " << c.failed << " failed";
          if (!c.examples.empty()) {
            out_ << " (";
            for (std::size_t i = 0; i < c.examples.size(); ++i) out_ << (i ? " " : "") << c.examples[i];
            out_ << ')';
          }
          out_ << '\n';
        }
        if (!report.flagged.empty()) {
          constexpr std::size_t kShown = 10;
          out_ << "non-tight, mask sum differs from KL:";
          for (std::size_t i = 0; i < std::min(kShown, report.flagged.size()); ++i) {
            out_ << ' ' << report.flagged[i].to_string();
          }
          if (report.flagged.size() > kShown) out_ << " ... (" << report.flagged.size() << " in total)";
          out_ << '\n';
        }
        out_ << "result: " << (report.ok() ? "PASS" : "FAIL") << '\n';
        break;
      case Format::Json: {
        ordered_json flagged = ordered_json::array();
        for (const Permutation& w : report.flagged) flagged.push_back(w.to_string());
        ordered_json checks = ordered_json::array();
        for (const CheckTally& c : report.checks) {
          checks.push_back({{"name", c.name}, {"passed", c.passed}, {"failed", c.failed}, {"examples", c.examples}});
        }
        out_ << ordered_json{{"n", report.n},
                             {"elements", report.elements},
                             {"hexagon_avoiding", report.hexagon_avoiding},
                             {"checks", checks},
                             {"flagged", flagged},
                             {"ok", report.ok()}}
                    .dump()
             << '\n';
        break;
      }
      case Format::Csv:
        out_ << "check,passed,failed\n";
        for (const CheckTally& c : report.checks) out_ << c.name << ',' << c.passed << ',' << c.failed << '\n';
        break;
    }
    return report.ok() ? kOk : kVerificationFailed;
  }

 private:
  void emit_pairs(const std::vector<std::pair<std::string, std::string>>& rows) {
    switch (format_) {
      case Format::Text:
        for (const auto& [k, v] : rows) out_ << k << ": " << v << '\n';
        break;
      case Format::Json: {
        ordered_json doc = ordered_json::object();
        for (const auto& [k, v] : rows) doc[k] = v;
        out_ << doc.dump() << '\n';
        break;
      }
      case Format::Csv:
        out_ << "key,value\n";
        for (const auto& [k, v] : rows) out_ << csv_field(k) << ',' << csv_field(v) << '\n';
        break;
    }
  }

  const Globals& g_;
  Format format_;
  std::ostream& out_;
  std::size_t cached_ = 0;
  bool existed_ = false;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kazhdan-Lusztig polynomials of 321-hexagon-avoiding permutations via heaps and masks", "klheap"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  app.add_option("--jobs", g.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cache", g.cache, "KL table cache file (line-delimited JSON)")->envname("KLHEAP_CACHE");

  Options o;
  auto* check = app.add_subcommand("check", "pattern and smoothness tests for a permutation");
  check->add_option("perm", o.perm, "permutation in one-line notation")->required();
  check->add_option("--n", o.target.rank, "rank for the literal 'e'");

  auto* kl = app.add_subcommand("kl", "one Kazhdan-Lusztig polynomial P_{x,w}");
  add_target(kl, o.target);
  kl->add_option("--x", o.x, "lower permutation (default e)");
  kl->add_flag("--oracle", o.oracle, "use the Hecke algebra recursion");

  auto* table = app.add_subcommand("table", "P_x for every x reached by a mask (or the KL table with --oracle)");
  add_target(table, o.target);
  table->add_flag("--oracle", o.oracle, "use the Hecke algebra recursion");

  auto* poincare = app.add_subcommand("poincare", "intersection cohomology Poincare polynomial");
  poincare->add_option("perm", o.perm, "permutation")->required();
  poincare->add_option("--n", o.target.rank, "rank for the literal 'e'");

  auto* tight = app.add_subcommand("tight", "does C'_w factor as a product of C'_s");
  tight->add_option("perm", o.perm, "permutation")->required();
  tight->add_option("--n", o.target.rank, "rank for the literal 'e'");

  auto* singular = app.add_subcommand("singular", "maximal singular locus of the Schubert variety");
  singular->add_option("perm", o.perm, "permutation")->required();
  singular->add_option("--n", o.target.rank, "rank for the literal 'e'");
  singular->add_flag("--oracle", o.oracle, "derive from the KL table instead of heap diamonds");

  auto* heap = app.add_subcommand("heap", "draw the heap of a 321-avoiding word");
  add_target(heap, o.target);
  heap->add_option("--mask", o.mask, "mask such as (1,0,1,1)");

  auto* masks = app.add_subcommand("masks", "list masks with products and defect sets");
  add_target(masks, o.target);
  o.x.clear();
  masks->add_option("--x", o.x, "keep only masks with this product");
  masks->add_flag("--defective", o.defective, "keep only masks with at least one defect");

  auto* enumerate = app.add_subcommand("enum", "count 321-avoiding and 321-hexagon-avoiding permutations");
  enumerate->add_option("--n-max", o.n_max, "largest rank")->required();
  enumerate->add_option("--n-min", o.n_min, "smallest rank (default 1)");
  enumerate->add_flag("--force", o.force, "allow ranks above the default limit");

  auto* verify = app.add_subcommand("verify", "run the equivalence battery on S_n");
  verify->add_option("--n", o.n, "rank")->required();
  verify->add_option("--sample", o.sample, "check this many random permutations instead of all");
  verify->add_option("--seed", o.seed, "sampling seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }
  // The kl default x is the identity; masks default to no filter.
  if (app.got_subcommand(kl) && kl->count("--x") == 0) o.x = "e";

  try {
    Runner runner(g, out);
    runner.load_cache();
    int code = kOk;
    if (app.got_subcommand(check)) code = runner.check(o);
    else if (app.got_subcommand(kl)) code = runner.kl(o);
    else if (app.got_subcommand(table)) code = runner.table(o);
    else if (app.got_subcommand(poincare)) code = runner.poincare(o);
    else if (app.got_subcommand(tight)) code = runner.tight(o);
    else if (app.got_subcommand(singular)) code = runner.singular(o);
    else if (app.got_subcommand(heap)) code = runner.heap(o);
    else if (app.got_subcommand(masks)) code = runner.masks(o);
    else if (app.got_subcommand(enumerate)) code = runner.enumerate(o);
    else if (app.got_subcommand(verify)) code = runner.verify(o);
    runner.save_cache();
    return code;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << '\n';
    return kResourceGuard;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace klheap::cli
