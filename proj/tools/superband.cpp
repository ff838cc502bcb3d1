#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "superband/verify.hpp"

namespace {

using namespace superband;

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailure = 1;
constexpr int kExitUsage = 2;

struct CommonArgs {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> format;
  std::optional<int> n_generators;
  std::optional<std::string> alpha;
  bool theta = false;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "config file (key = value lines)");
  cmd->add_option("--seed", args.seed, "seed for randomized sweeps");
  cmd->add_option("--format", args.format, "output format");
  cmd->add_option("--n", args.n_generators, "number of Grassmann generators");
  cmd->add_option("--alpha", args.alpha, "fixed odd element (expression)");
  cmd->add_flag("--theta", args.theta, "render generators as theta symbols");
  cmd->add_option("--out", args.out_path, "write output to a file");
}

RunConfig resolve_config(const CommonArgs& args) {
  RunConfig cfg;
  if (!args.config_path.empty()) cfg = load_config(args.config_path);
  if (args.seed) cfg.seed = *args.seed;
  if (args.format) cfg.format = *args.format;
  if (args.n_generators) cfg.n_generators = *args.n_generators;
  if (args.alpha) cfg.alpha_expr = *args.alpha;
  if (args.theta) cfg.style = GenStyle::Theta;
  return cfg;
}

int emit(const CommonArgs& args, const std::string& text) {
  if (args.out_path.empty()) {
    std::cout << text;
    return kExitOk;
  }
  std::ofstream out(args.out_path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << args.out_path << "\n";
    return kExitUsage;
  }
  out << text;
  return kExitOk;
}

int cmd_verify(const CommonArgs& args, bool full) {
  RunConfig cfg = resolve_config(args);
  VerifyOptions opts{cfg, full};
  auto results = run_verification(opts);
  std::string text = cfg.format == "json"
                         ? render_report_json(opts, results).dump(2) + "\n"
                         : render_report_text(opts, results);
  int rc = emit(args, text);
  if (rc != kExitOk) return rc;
  return all_passed(results) ? kExitOk : kExitPropertyFailure;
}

int cmd_eval(const CommonArgs& args, const std::string& expr) {
  RunConfig cfg = resolve_config(args);
  Value v = parse_value(expr, cfg.n_generators);
  return emit(args, value_to_string(v, cfg.style) + "\n");
}

std::vector<std::vector<GrassmannElement>> grid_lists(
    const AlphaContext& ctx, int slots, const std::vector<int>& classes) {
  std::vector<std::vector<GrassmannElement>> lists;
  for (int i = 0; i < slots; ++i) {
    int want = classes[i % classes.size()];
    auto s = sample_even_classes(ctx, want);
    if (s.reps.empty())
      throw DomainError("no usable parameter classes at this n_generators");
    if (s.degenerate)
      std::cerr << "warning: only " << s.reps.size() << " of " << want
                << " requested classes exist; grid degenerates\n";
    lists.push_back(s.reps);
  }
  return lists;
}

std::vector<int> parse_grid_spec(const std::string& spec) {
  std::vector<int> out;
  std::string cur;
  for (char ch : spec + "x") {
    if (ch == 'x' || ch == ',') {
      if (cur.empty()) throw ParseError("bad grid spec: " + spec);
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (std::isdigit(static_cast<unsigned char>(ch))) {
      cur += ch;
    } else {
      throw ParseError("bad grid spec: " + spec);
    }
  }
  if (out.empty()) throw ParseError("bad grid spec: " + spec);
  for (int v : out)
    if (v < 1) throw ParseError("grid classes must be >= 1");
  return out;
}

int cmd_cayley(const CommonArgs& args, const std::string& family, int band_n,
               const std::string& grid_spec, bool symbolic) {
  RunConfig cfg = resolve_config(args);
  std::vector<std::string> labels;
  std::vector<std::vector<std::string>> cells;
  bool closed = true;

  if (symbolic) {
    if (family != "wreath")
      throw ParseError("--symbolic is defined for the wreath family");
    SymbolicTable tab = symbolic_wreath_table();
    labels = tab.labels;
    cells = tab.cell;
    closed = false;  // the printed table quotes products outside the 9 symbols
  } else {
    auto ctx = make_context(cfg);
    std::vector<int> classes;
    if (!grid_spec.empty()) {
      classes = parse_grid_spec(grid_spec);
    } else if (family == "band") {
      classes = {band_n <= 1   ? cfg.classes_arity1
                 : band_n == 2 ? cfg.classes_arity2
                               : cfg.classes_arity3};
    } else {
      classes = {cfg.classes_arity1};
    }
    BandFamily fam = [&] {
      if (family == "wreath") {
        auto lists = grid_lists(*ctx, 2, classes);
        return make_wreath_family(ctx, lists[0], lists[1]);
      }
      if (family == "null") {
        auto lists = grid_lists(*ctx, 1, classes);
        return make_null_family(ctx, lists[0]);
      }
      if (family == "band") {
        if (band_n < 1) throw ParseError("band arity must be >= 1");
        auto lists = grid_lists(*ctx, 2 * band_n, classes);
        std::vector<std::vector<GrassmannElement>> t_lists(
            lists.begin(), lists.begin() + band_n);
        std::vector<std::vector<GrassmannElement>> u_lists(
            lists.begin() + band_n, lists.end());
        return make_band_family(ctx, t_lists, u_lists);
      }
      throw ParseError("unknown family: " + family);
    }();
    labels = fam.table.labels;
    closed = fam.table.closed;
    for (std::size_t i = 0; i < fam.table.cell.size(); ++i) {
      std::vector<std::string> row;
      for (int v : fam.table.cell[i]) row.push_back(labels.at(v));
      cells.push_back(std::move(row));
    }
  }

  if (cfg.format == "json")
    return emit(args, cayley_json(labels, cells, closed).dump(2) + "\n");
  if (cfg.format == "csv" || cfg.format == "text")
    return emit(args, cayley_csv(labels, cells));
  throw ParseError("cayley supports formats: text, csv, json");
}

int cmd_eggbox(const CommonArgs& args, const std::string& band_spec,
               const std::string& axes_spec) {
  RunConfig cfg = resolve_config(args);
  auto ctx = make_context(cfg);

  int arity = 0;
  if (band_spec == "1|1")
    arity = 1;
  else if (band_spec == "2|2")
    arity = 2;
  else if (band_spec == "3|3")
    arity = 3;
  else
    throw ParseError("band must be one of 1|1, 2|2, 3|3");

  int classes = arity == 1   ? cfg.classes_arity1
                : arity == 2 ? cfg.classes_arity2
                             : cfg.classes_arity3;
  auto s = sample_even_classes(*ctx, classes);
  if (s.reps.empty()) throw DomainError("no usable parameter classes");
  BandFamily fam = [&] {
    if (arity == 1) return make_rect_family(ctx, s.reps, s.reps);
    std::vector<std::vector<GrassmannElement>> lists(arity, s.reps);
    return make_band_family(ctx, lists, lists);
  }();
  GreensClasses g = family_greens(fam);

  std::vector<std::pair<std::string, Partition>> axes;
  std::string cur;
  for (char ch : axes_spec + ",") {
    if (ch != ',') {
      cur += ch;
      continue;
    }
    if (cur.empty()) throw ParseError("empty axis name");
    Partition part;
    if (cur == "R")
      part = g.r;
    else if (cur == "L")
      part = g.l;
    else if (cur == "H")
      part = g.h;
    else if (cur == "D")
      part = g.d;
    else if (cur == "J")
      part = g.j;
    else if ((cur[0] == 'R' || cur[0] == 'L') && cur.size() > 1 &&
             cur.find_first_not_of("0123456789", 1) == std::string::npos) {
      int k = std::stoi(cur.substr(1));
      part = fine_relation(fam.elems, cur[0] == 'R' ? Side::R : Side::L, k);
    } else {
      throw ParseError("unknown axis: " + cur);
    }
    axes.emplace_back(cur, part);
    cur.clear();
  }
  EggboxDiagram box = make_eggbox(axes);

  if (cfg.format == "dot")
    return emit(args, eggbox_dot(box, fam.table.labels, g.d));
  if (cfg.format == "json" || cfg.format == "text")
    return emit(args, eggbox_json(box, fam.table.labels).dump(2) + "\n");
  throw ParseError("eggbox supports formats: text, json, dot");
}

int cmd_ann(const CommonArgs& args) {
  RunConfig cfg = resolve_config(args);
  GrassmannElement alpha = parse_element(cfg.alpha_expr, cfg.n_generators);
  AnnihilatorBasis ann = annihilator_even(alpha);  // rejects zero alpha
  if (cfg.format == "json") {
    Json basis = Json::array();
    for (const auto& e : ann.basis) basis.push_back(element_to_json(e));
    Json j{{"alpha", to_string(alpha, cfg.style)},
           {"n_generators", ann.n_generators},
           {"dimension", ann.basis.size()},
           {"basis", basis}};
    return emit(args, j.dump(2) + "\n");
  }
  std::ostringstream os;
  os << "alpha: " << to_string(alpha, cfg.style) << "\n";
  os << "even-sector annihilator dimension: " << ann.basis.size() << "\n";
  for (const auto& e : ann.basis) os << "  " << to_string(e, cfg.style) << "\n";
  return emit(args, os.str());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Grassmann algebra, supermatrix and band semigroup toolkit"};
  app.require_subcommand(1);

  CommonArgs verify_args, eval_args, cayley_args, eggbox_args, ann_args;

  auto* verify = app.add_subcommand("verify", "run the structural check suite");
  add_common(verify, verify_args);
  bool full = false, quick = false;
  verify->add_flag("--full", full, "larger sweeps (seeded)");
  verify->add_flag("--quick", quick, "small fast sweeps (default)");

  auto* eval = app.add_subcommand("eval", "evaluate an algebra expression");
  add_common(eval, eval_args);
  std::string expr;
  eval->add_option("expr", expr, "expression")->required();

  auto* cayley = app.add_subcommand("cayley", "emit a Cayley table");
  add_common(cayley, cayley_args);
  std::string family;
  int band_n = 2;
  std::string grid_spec;
  bool symbolic = false;
  cayley->add_option("family", family, "wreath | band | null")->required();
  cayley->add_option("arity", band_n, "band arity n for the band family");
  cayley->add_option("--grid", grid_spec, "classes per slot, e.g. 3x3");
  cayley->add_flag("--symbolic", symbolic, "formal-parameter wreath table");

  auto* eggbox = app.add_subcommand("eggbox", "emit an eggbox diagram");
  add_common(eggbox, eggbox_args);
  std::string band_spec, axes_spec = "R,L";
  eggbox->add_option("band", band_spec, "1|1, 2|2 or 3|3")->required();
  eggbox->add_option("--axes", axes_spec, "comma list: R, L, H, D, J, R1, L2, ...");

  auto* ann = app.add_subcommand("ann", "even-sector annihilator of alpha");
  add_common(ann, ann_args);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_args, full && !quick);
    if (eval->parsed()) return cmd_eval(eval_args, expr);
    if (cayley->parsed())
      return cmd_cayley(cayley_args, family, band_n, grid_spec, symbolic);
    if (eggbox->parsed()) return cmd_eggbox(eggbox_args, band_spec, axes_spec);
    if (ann->parsed()) return cmd_ann(ann_args);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitPropertyFailure;
  }
  return kExitUsage;
}
