#include "arck0/cli.hpp"

#include "arck0/completion.hpp"
#include "arck0/k0.hpp"
#include "arck0/render.hpp"
#include "arck0/serialize.hpp"
#include "arck0/tilting.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

namespace arck0 {

namespace {

struct Check {
  std::string name;
  bool pass;
};

std::vector<Check> verify_suite(const CommandConfig &c, FOracleReport &report) {
  const int n = c.n;
  std::vector<Check> checks;
  report = verify_f_oracle(n, c.window);
  checks.push_back({"oracle cokernel of f matches formula", report.match});
  checks.push_back({"kernel generators nonzero in oracle", report.generators_nonzero});

  GroupPresentation want;
  want.free_rank = static_cast<std::size_t>(n);
  want.invariant_factors.assign(static_cast<std::size_t>(n - 1), BigInt(2));
  checks.push_back({"completed K0 is Z^n + (Z/2)^(n-1)", compute_k0_completed(n) == want});

  for (int m : {n, 2 * n}) {
    const K0Report r = compute_k0_cn(m, c.depth);
    checks.push_back({"K0 with " + std::to_string(m) + " accumulation points is free of rank " +
                          std::to_string(m),
                      r.consistent && r.presentation.is_free() &&
                          r.presentation.free_rank == static_cast<std::size_t>(m)});
  }

  const CompletionModel cm(n);
  const IntMatrix f = f_matrix(n);
  bool columns = true;
  bool apart = true;
  for (int i = 1; i <= n; ++i) {
    const Arc a = kernel_generator_arc(cm, i);
    const K0Class k = class_same_segment(2 * n, a, cm.host_anchors());
    for (Eigen::Index r = 0; r < f.rows(); ++r)
      columns = columns && f(r, i - 1) == k.coefficients(r);
    for (int j = 1; j < i; ++j)
      apart = apart && !crosses(a, kernel_generator_arc(cm, j));
  }
  checks.push_back({"f columns are classes of kernel generators", columns});
  checks.push_back({"kernel generators pairwise non-crossing", apart});
  return checks;
}

// name from the tilting set, or a JSON arc
std::size_t resolve_arc(const StandardTilting &t, const std::string &text) {
  if (auto idx = t.find(text))
    return *idx;
  if (!text.empty() && text.front() == '[') {
    const Arc a = parse_arc(text);
    if (auto idx = t.find(a))
      return *idx;
    throw std::invalid_argument("arc " + to_string(a) + " is not in the tilting set");
  }
  throw std::invalid_argument("unknown arc name '" + text + "'");
}

int emit(const CommandConfig &c, const std::string &body, std::ostream &out,
         std::ostream &err) {
  if (!c.out_path) {
    out << body;
    return exit_ok;
  }
  std::ofstream f(*c.out_path, std::ios::binary);
  if (!f) {
    err << "cannot write " << *c.out_path << "\n";
    return exit_bad_input;
  }
  f << body;
  return exit_ok;
}

} // namespace

std::optional<CommandConfig> parse_command_line(const std::vector<std::string> &args,
                                                std::ostream &out, std::ostream &err,
                                                int &code) {
  CommandConfig c;
  CLI::App app{"K0 of discrete cluster categories of type A-infinity", "arck0"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_path;
  auto common = [&](CLI::App *sub, bool depth, bool window) {
    sub->add_option("--n", c.n, "number of accumulation points")
        ->check(CLI::Range(1, 64));
    if (depth)
      sub->add_option("--depth", c.depth, "leapfrog truncation depth")
          ->check(CLI::Range(2, 1 << 16));
    if (window)
      sub->add_option("--window", c.window, "offsets kept per segment")
          ->check(CLI::Range(2, 1 << 10));
    sub->add_option("--anchors", c.anchor_offsets, "anchor offset per segment")
        ->delimiter(',');
    sub->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", out_path, "write to this file instead of stdout");
  };

  common(app.add_subcommand("k0", "K0 via the exchange relations"), true, false);
  common(app.add_subcommand("k0-completed", "K0 of the completion"), false, false);
  common(app.add_subcommand("oracle", "brute-force Euler relation quotient"), false, true);
  common(app.add_subcommand("verify", "oracle check of f and the invariant suite"), true,
         true);
  auto *exchange = app.add_subcommand("exchange", "exchange pair of a tilting arc");
  common(exchange, true, false);
  // one value per flag; CLI11 would otherwise split "[[0,0],[1,0]]" as a list
  auto arc_flag = [&](CLI::App *sub, const std::string &help) {
    return sub
        ->add_option_function<std::string>(
            "--arc", [&](const std::string &s) { c.arcs.push_back(s); }, help)
        ->trigger_on_parse();
  };
  arc_flag(exchange, "arc name (Z1, L2[3], ...) or [[s,o],[s,o]]")->required();
  auto *render = app.add_subcommand("render", "SVG arc diagram");
  common(render, true, true);
  arc_flag(render, "arc to draw, repeatable; default the tilting set");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &e) {
    code = app.exit(e, out, err);
    return std::nullopt;
  } catch (const CLI::ParseError &e) {
    app.exit(e, err, err);
    err << app.help();
    code = exit_bad_input;
    return std::nullopt;
  }
  c.subcommand = app.get_subcommands().front()->get_name();
  c.format = format == "text" ? OutputFormat::text : OutputFormat::json;
  if (!out_path.empty())
    c.out_path = out_path;
  code = exit_ok;
  return c;
}

int run(const CommandConfig &c, std::ostream &out, std::ostream &err) {
  const bool json = c.format == OutputFormat::json;
  std::ostringstream body;
  int status = exit_ok;
  try {
    if (c.n < 1)
      throw std::invalid_argument("--n must be >= 1");
    if (c.subcommand == "k0") {
      const K0Report r = compute_k0_cn(
          c.n,
          c.anchor_offsets.empty() ? std::vector<std::int64_t>(c.n, 0) : c.anchor_offsets,
          c.depth);
      if (json)
        body << to_json(r.presentation).dump() << "\n";
      else
        body << to_string(r.presentation) << "\n"
             << "basis " << r.basis_size << ", relations " << r.relation_count
             << ", frontier " << r.frontier.size() << " (unrelated "
             << r.frontier_excess << ")\n";
      if (!r.consistent)
        status = exit_failed;
    } else if (c.subcommand == "k0-completed") {
      const GroupPresentation g = compute_k0_completed(c.n);
      body << (json ? to_json(g).dump() : to_string(g)) << "\n";
    } else if (c.subcommand == "oracle") {
      const EulerOracle o(c.n, c.window);
      if (json)
        body << to_json(o.presentation()).dump() << "\n";
      else
        body << to_string(o.presentation()) << "\n"
             << "arcs " << o.basis().size() << ", relations " << o.relation_count()
             << "\n";
      if (o.presentation().free_rank < static_cast<std::size_t>(c.n))
        status = exit_failed;
    } else if (c.subcommand == "verify") {
      FOracleReport report;
      const std::vector<Check> checks = verify_suite(c, report);
      const bool pass = std::all_of(checks.begin(), checks.end(),
                                    [](const Check &k) { return k.pass; });
      if (json) {
        Json list = Json::array();
        for (const Check &k : checks)
          list.push_back(Json{{"name", k.name}, {"pass", k.pass}});
        body << Json{{"f", to_json(report)}, {"checks", list}, {"pass", pass}}.dump(2)
             << "\n";
      } else {
        for (const Check &k : checks)
          body << (k.pass ? "PASS " : "FAIL ") << k.name << "\n";
      }
      status = pass ? exit_ok : exit_failed;
    } else if (c.subcommand == "exchange") {
      const StandardTilting t =
          c.anchor_offsets.empty() ? StandardTilting::build(c.n, c.depth)
                                   : StandardTilting::build(c.n, c.anchor_offsets, c.depth);
      Json list = Json::array();
      for (const std::string &name : c.arcs) {
        const std::size_t idx = resolve_arc(t, name);
        const ExchangePair e = exchange_pair(t, idx);
        if (json) {
          list.push_back(to_json(e, t));
          continue;
        }
        auto side = [&](const std::vector<Arc> &arcs) {
          std::string s;
          for (const Arc &a : arcs) {
            auto i = t.find(a);
            s += (s.empty() ? "" : " + ") + (i ? t.label(*i) : to_string(a));
          }
          return s.empty() ? std::string("0") : s;
        };
        body << t.label(idx) << " " << to_string(e.m) << " <-> " << to_string(e.m_star)
             << "\n  B_m  = " << side(e.b_m) << "\n  B_m* = " << side(e.b_m_star)
             << "\n";
      }
      if (json)
        body << (list.size() == 1 ? list[0] : list).dump() << "\n";
    } else if (c.subcommand == "render") {
      const StandardTilting t =
          c.anchor_offsets.empty() ? StandardTilting::build(c.n, c.depth)
                                   : StandardTilting::build(c.n, c.anchor_offsets, c.depth);
      std::vector<Arc> arcs;
      if (c.arcs.empty()) {
        for (const Arc &a : t.arcs())
          if (std::abs(a.lo().offset) <= c.window && std::abs(a.hi().offset) <= c.window)
            arcs.push_back(a);
      } else {
        for (const std::string &s : c.arcs)
          arcs.push_back(t.find(s) ? t.arc(*t.find(s)) : parse_arc(s));
      }
      for (const Arc &a : arcs)
        if (!t.model().contains(a.lo()) || !t.model().contains(a.hi()))
          throw std::invalid_argument("arc " + to_string(a) + " outside the model");
      body << render_svg(t.model(), arcs, c.window);
    } else {
      throw std::invalid_argument("unknown subcommand '" + c.subcommand + "'");
    }
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const std::out_of_range &e) {
    err << "error: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const InsufficientDepth &e) {
    err << "insufficient depth: " << e.what() << "\n";
    return exit_bad_input;
  } catch (const InsufficientWindow &e) {
    err << "insufficient window: " << e.what() << "\n";
    return exit_bad_input;
  }
  const int written = emit(c, body.str(), out, err);
  return written != exit_ok ? written : status;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  int code = exit_ok;
  auto config = parse_command_line(args, out, err, code);
  if (!config)
    return code;
  return run(*config, out, err);
}

} // namespace arck0
