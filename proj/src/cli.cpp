#include "numsg/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "numsg/classifiers.hpp"
#include "numsg/explorer.hpp"
#include "numsg/families.hpp"
#include "numsg/render.hpp"
#include "numsg/semigroup.hpp"
#include "numsg/serialize.hpp"
#include "numsg/wilf_metrics.hpp"

namespace numsg::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Value exact_int(std::string_view flag, const std::string& text) {
  Value v = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError(std::string(flag) + ": expected an integer, got '" +
                     text + "'");
  }
  return v;
}

Value ranged_int(std::string_view flag, const std::string& text, Value lo,
                 Value hi) {
  const Value v = exact_int(flag, text);
  if (v < lo || v > hi) {
    throw UsageError(std::string(flag) + ": must be in [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return v;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(item);
  if (!text.empty() && text.back() == ',') out.emplace_back();
  return out;
}

std::string join(const std::vector<Value>& xs) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(xs[i]);
  }
  return s;
}

void print_record(std::ostream& out, const NumericalSemigroup& s) {
  const auto r = invariant_record(s);
  out << "generators: " << to_spec_string(s) << '\n';
  out << "m = " << r.m << "  F = " << r.F << "  c = " << r.c
      << "  g = " << r.g << "  |L| = " << r.L << '\n';
  out << "e = " << r.e << "  t = " << r.t << "  q = " << r.q
      << "  rho = " << r.rho << "  ratio = "
      << (r.ratio ? std::to_string(*r.ratio) : std::string("-")) << '\n';
  out << "W = " << r.W << "  E = " << r.E << '\n';
  out << "apery: " << join(s.apery().entries) << '\n';
  out << "pseudo-frobenius: " << join(s.pseudo_frobenius_numbers()) << '\n';
}

struct Context {
  std::ostream& out;
  std::ostream& err;
};

// Each subcommand binds its flags into one of these and runs after parsing.
struct InfoArgs {
  std::string gens;
  bool json = false;
};

int do_info(const InfoArgs& a, Context& cx) {
  const auto s = construct(a.gens);
  if (a.json) {
    cx.out << to_json(invariant_record(s)).dump() << '\n';
  } else {
    print_record(cx.out, s);
  }
  return kExitOk;
}

struct CheckArgs {
  std::string gens;
  std::string props;
  bool json = false;
};

int do_check(const CheckArgs& a, Context& cx) {
  std::vector<PropertyId> ids;
  for (const auto& name : split_list(a.props)) {
    auto id = parse_property(name);
    if (!id) throw UsageError("--props: unknown property '" + name + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw UsageError("--props: empty list");
  const auto s = construct(a.gens);
  std::vector<std::pair<PropertyId, bool>> results;
  bool wilf_fails = false;
  for (PropertyId id : ids) {
    const bool ok = property(s, id);
    results.emplace_back(id, ok);
    if (id == PropertyId::W_wilf && !ok) wilf_fails = true;
  }
  if (a.json) {
    cx.out << check_json(results).dump() << '\n';
  } else {
    for (const auto& [id, ok] : results) {
      cx.out << property_name(id) << ": " << (ok ? "true" : "false") << '\n';
    }
  }
  return wilf_fails ? kExitCounterexample : kExitOk;
}

struct FamilyArgs {
  std::string m, h, d, l, k, a, p, gens;
  std::vector<std::string> set;
  bool json = false;
};

int emit_family(const NumericalSemigroup& s, bool json, Context& cx) {
  if (json) {
    nlohmann::json j{{"spec", to_spec_string(s)},
                     {"invariants", to_json(invariant_record(s))}};
    cx.out << j.dump() << '\n';
  } else {
    cx.out << to_spec_string(s) << '\n';
  }
  return kExitOk;
}

struct ExploreArgs {
  std::string max_genus;
  std::string verify = "wilf";
  std::string threads;
  std::string stats_out;
};

void print_witnesses(std::ostream& out, std::string_view label,
                     const std::vector<Witness>& ws) {
  if (ws.empty()) return;
  out << label << " (" << ws.size() << "):\n";
  for (const auto& w : ws) out << "  g=" << w.genus << "  " << w.spec() << '\n';
}

int do_explore(const ExploreArgs& a, Context& cx) {
  ExploreOptions opts;
  const Value g = ranged_int("--max-genus", a.max_genus, 0, kMaxTreeGenus);
  try {
    opts.checks = parse_checks(a.verify);
  } catch (const SemigroupError& e) {
    throw UsageError(std::string("--verify: ") + e.what());
  }
  if (!a.threads.empty()) {
    opts.threads =
        static_cast<unsigned>(ranged_int("--threads", a.threads, 1, 1024));
  }
  const auto stats = enumerate(g, opts);

  cx.out << "genus  N  c<=3m  3e>=m  E>=0  minW\n";
  for (std::size_t i = 0; i < stats.per_genus.size(); ++i) {
    const auto& s = stats.per_genus[i];
    cx.out << i << "  " << s.N << "  " << s.t << "  " << s.p << "  " << s.eE
           << "  " << s.min_wilf << '\n';
  }
  print_witnesses(cx.out, "wilf violations", stats.wilf_violations);
  print_witnesses(cx.out, "negative eliahou number", stats.eliahou_negatives);
  print_witnesses(cx.out, "froberg bound violations", stats.froberg_violations);
  print_witnesses(cx.out, "W = 0 outside the expected shape",
                  stats.wilf_zero_counterexamples);
  print_witnesses(cx.out, "c <= 3m with E < 0", stats.eliahou_m_violations);
  print_witnesses(cx.out, "W - E identity violations",
                  stats.identity_violations);

  if (!a.stats_out.empty()) {
    std::ofstream f(a.stats_out, std::ios::binary);
    if (!f) {
      throw SemigroupError(ErrorCode::BadParameters,
                           "cannot open '" + a.stats_out + "' for writing");
    }
    f << stats_json(stats).dump(2) << '\n';
  }
  return stats.any_violation() ? kExitCounterexample : kExitOk;
}

struct CompareArgs {
  std::string p, q, max_genus;
  bool json = false;
};

int do_compare(const CompareArgs& a, Context& cx) {
  auto p = parse_property(a.p);
  if (!p) throw UsageError("--p: unknown property '" + a.p + "'");
  auto q = parse_property(a.q);
  if (!q) throw UsageError("--q: unknown property '" + a.q + "'");
  const Value g = ranged_int("--max-genus", a.max_genus, 0, kMaxCompareGenus);
  const auto report = quasi_compare(*p, *q, g);
  if (a.json) {
    cx.out << to_json(report).dump() << '\n';
  } else {
    cx.out << "Q \\ P up to genus " << g << ": " << report.count_Q_minus_P
           << '\n';
    cx.out << "P \\ Q up to genus " << g << ": " << report.count_P_minus_Q
           << '\n';
    cx.out << "verdict: " << to_string(report.verdict) << '\n';
    for (const auto& w : report.witnesses) cx.out << "  " << w << '\n';
  }
  return kExitOk;
}

struct DrawArgs {
  std::string gens;
  std::string format;
  std::string output;
  bool pf = false;
  bool shape_only = false;
};

int do_draw(const DrawArgs& a, Context& cx) {
  const auto s = construct(a.gens);
  const auto grid = grid_model(s, GridOptions{a.pf, a.shape_only});
  const std::string text =
      a.format == "svg" ? emit_svg(grid) : emit_tikz(grid);
  if (a.output.empty()) {
    cx.out << text;
    return kExitOk;
  }
  std::ofstream f(a.output, std::ios::binary);
  if (!f) {
    throw SemigroupError(ErrorCode::BadParameters,
                         "cannot open '" + a.output + "' for writing");
  }
  f << text;
  return kExitOk;
}

int do_oracle(const std::string& max_genus, Context& cx) {
  const Value g = ranged_int("--max-genus", max_genus, 0, kMaxOracleGenus);
  const auto counts = oracle_enumerate(g);
  for (std::size_t i = 0; i < counts.size(); ++i) {
    cx.out << i << ' ' << counts[i] << '\n';
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Context cx{out, err};
  CLI::App app{"Numerical semigroup toolkit", "numsg"};
  app.require_subcommand(1);

  InfoArgs info;
  auto* info_cmd = app.add_subcommand("info", "Invariants of a semigroup");
  info_cmd->add_option("--gens", info.gens, "Generator spec")->required();
  info_cmd->add_flag("--json", info.json);

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "Evaluate named properties");
  check_cmd->add_option("--gens", check.gens, "Generator spec")->required();
  check_cmd->add_option("--props", check.props, "Comma-separated properties")
      ->required();
  check_cmd->add_flag("--json", check.json);

  FamilyArgs fam;
  auto* family_cmd = app.add_subcommand("family", "Construct a family member");
  family_cmd->require_subcommand(1);
  auto* ga = family_cmd->add_subcommand("ga", "<m, hm+d, hm+2d, ..., hm+ld>");
  // --h is a parameter here, so help is long-form only.
  ga->set_help_flag("--help", "Print this help message and exit");
  ga->add_option("--m", fam.m)->required();
  ga->add_option("--h", fam.h)->required();
  ga->add_option("--d", fam.d)->required();
  ga->add_option("--l", fam.l)->required();
  auto* med = family_cmd->add_subcommand("med", "<m>_{km}");
  med->add_option("--m", fam.m)->required();
  med->add_option("--k", fam.k)->required();
  auto* dil = family_cmd->add_subcommand("dilation", "{0} u (a + S\\{0})");
  dil->add_option("--gens", fam.gens)->required();
  dil->add_option("--a", fam.a)->required();
  auto* sp = family_cmd->add_subcommand("sp", "Delgado's S(p)");
  sp->add_option("--p", fam.p)->required();
  auto* ef = family_cmd->add_subcommand("ef", "<{m} u A>_{4m}");
  ef->add_option("--m", fam.m)->required();
  ef->add_option("--a", fam.set, "Members of A")
      ->required()
      ->delimiter(',')
      ->expected(1, 1 << 16);
  auto* y = family_cmd->add_subcommand("y", "<m, m+1, m+2, m+3, m+7k>");
  y->add_option("--m", fam.m)->required();
  for (auto* sub : {ga, med, dil, sp, ef, y}) sub->add_flag("--json", fam.json);

  ExploreArgs explore;
  auto* explore_cmd = app.add_subcommand("explore", "Sweep the genus tree");
  explore_cmd->add_option("--max-genus", explore.max_genus)->required();
  explore_cmd->add_option("--verify", explore.verify,
                          "wilf,eliahou,froberg,wilf-zero,eliahou-m,identity,all");
  explore_cmd->add_option("--threads", explore.threads);
  explore_cmd->add_option("--stats-out", explore.stats_out);

  CompareArgs compare;
  auto* compare_cmd = app.add_subcommand("compare", "Count Q \\ P by genus");
  compare_cmd->add_option("--p", compare.p)->required();
  compare_cmd->add_option("--q", compare.q)->required();
  compare_cmd->add_option("--max-genus", compare.max_genus)->required();
  compare_cmd->add_flag("--json", compare.json);

  DrawArgs draw;
  auto* draw_cmd = app.add_subcommand("draw", "Render the grid picture");
  draw_cmd->add_option("--gens", draw.gens)->required();
  draw_cmd->add_option("--format", draw.format)
      ->required()
      ->check(CLI::IsMember({"svg", "tikz"}));
  draw_cmd->add_flag("--pf", draw.pf);
  draw_cmd->add_flag("--shape-only", draw.shape_only);
  draw_cmd->add_option("-o", draw.output);

  std::string oracle_genus;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force N(g)");
  oracle_cmd->add_option("--max-genus", oracle_genus)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*info_cmd) return do_info(info, cx);
    if (*check_cmd) return do_check(check, cx);
    if (*explore_cmd) return do_explore(explore, cx);
    if (*compare_cmd) return do_compare(compare, cx);
    if (*draw_cmd) return do_draw(draw, cx);
    if (*oracle_cmd) return do_oracle(oracle_genus, cx);
    if (*ga) {
      return emit_family(
          generalized_arithmetic(exact_int("--m", fam.m),
                                 exact_int("--h", fam.h),
                                 exact_int("--d", fam.d),
                                 exact_int("--l", fam.l)),
          fam.json, cx);
    }
    if (*med) {
      return emit_family(
          med_family(exact_int("--m", fam.m), exact_int("--k", fam.k)),
          fam.json, cx);
    }
    if (*dil) {
      return emit_family(dilation(construct(fam.gens), exact_int("--a", fam.a)),
                         fam.json, cx);
    }
    if (*sp) {
      return emit_family(delgado_sp(exact_int("--p", fam.p)), fam.json, cx);
    }
    if (*ef) {
      std::vector<Value> a;
      for (const auto& v : fam.set) a.push_back(exact_int("--a", v));
      return emit_family(eliahou_fromentin(exact_int("--m", fam.m), a),
                         fam.json, cx);
    }
    if (*y) return emit_family(y_family(exact_int("--m", fam.m)), fam.json, cx);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const SemigroupError& e) {
    err << "error [" << to_string(e.code()) << "]: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  err << "usage error: no command\n";
  return kExitUsage;
}

}  // namespace numsg::cli
