#include "dcover/cli.hpp"

#include "dcover/errors.hpp"
#include "dcover/serialize.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

namespace dcover::cli {

namespace {

using nlohmann::json;

Integer parse_integer(const std::string& flag, const std::string& text) {
  static const std::regex pattern("-?[0-9]+");
  if (!std::regex_match(text, pattern))
    throw CLI::ValidationError(flag, "expected an integer, got '" + text + "'");
  return Integer(text);
}

Rational parse_rational(const std::string& text) {
  static const std::regex pattern("(-?[0-9]+)(/([0-9]+))?");
  std::smatch m;
  if (!std::regex_match(text, m, pattern) || (m[3].matched && Integer(m[3].str()) == 0))
    throw CLI::ValidationError("--window", "expected integers or fractions p/q, got '" + text + "'");
  return m[3].matched ? Rational(Integer(m[1].str()), Integer(m[3].str())) : Rational(Integer(m[1].str()));
}

// Options shared by the commands that take a polarization.
struct PolarizationFlags {
  std::string base;
  std::optional<std::string> d, e, a, b;

  void attach(CLI::App* cmd) {
    cmd->add_option("--base", base, "p2 or fe")->required()->check(CLI::IsMember({"p2", "fe"}));
    cmd->add_option("--d", d, "degree on P2");
    cmd->add_option("--e", e, "twist of F_e");
    cmd->add_option("--a", a, "coefficient of C0 in H");
    cmd->add_option("--b", b, "coefficient of f in H");
  }

  Polarization build() const {
    if (base == "p2") {
      if (!d || e || a || b) throw CLI::ValidationError("--base p2", "takes exactly --d");
      return Polarization::plane(parse_integer("--d", *d));
    }
    if (d || !e || !a || !b) throw CLI::ValidationError("--base fe", "takes --e, --a and --b");
    return Polarization::hirzebruch(parse_integer("--e", *e), parse_integer("--a", *a),
                                    parse_integer("--b", *b));
  }
};

struct ClassFlags {
  std::string base;
  std::optional<std::string> d, e, alpha, beta;

  void attach(CLI::App* cmd) {
    cmd->add_option("--base", base, "p2 or fe")->required()->check(CLI::IsMember({"p2", "fe"}));
    cmd->add_option("--d", d, "degree on P2");
    cmd->add_option("--e", e, "twist of F_e");
    cmd->add_option("--alpha", alpha, "coefficient of C0");
    cmd->add_option("--beta", beta, "coefficient of f");
  }

  DivisorClass build() const {
    if (base == "p2") {
      if (!d || e || alpha || beta) throw CLI::ValidationError("--base p2", "takes exactly --d");
      return DivisorClass::plane(parse_integer("--d", *d));
    }
    if (d || !e || !alpha || !beta)
      throw CLI::ValidationError("--base fe", "takes --e, --alpha and --beta");
    return DivisorClass::hirzebruch(parse_integer("--e", *e), parse_integer("--alpha", *alpha),
                                    parse_integer("--beta", *beta));
  }
};

std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += (out.empty() ? "" : " ") + a;
  return out;
}

void emit(std::ostream& out, const std::string& command, json payload,
          const std::vector<std::string>& warnings) {
  out << envelope(command, std::move(payload), warnings).dump(2) << "\n";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot open " + path + " for writing");
  file << content;
  if (!file) throw DomainError("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot read " + path);
  std::ostringstream buffer;
  buffer << file.rdbuf();
  return buffer.str();
}

json invariants_payload(const Polarization& p, std::vector<std::string>& warnings) {
  const CoverInvariants inv = invariants(p);
  const AuditReport report = audit(p);
  json payload{{"polarization", to_json(p)},
               {"invariants", to_json(inv)},
               {"classes",
                {{"canonical", to_json(p.canonical())},
                 {"branch", to_json(p.branch())},
                 {"trace_zero", to_json(p.trace_zero())}}},
               {"audit_verdict", report.verdict}};
  if (report.verdict) {
    payload["mu"] = integer_json(moduli_dimension(p));
  } else {
    payload["mu"] = nullptr;
    warnings.push_back("moduli dimension withheld: hypothesis audit failed (" +
                       join(report.failing_conditions()) + ")");
  }
  return payload;
}

void print_invariants_text(std::ostream& out, const json& payload) {
  const json& inv = payload["invariants"];
  out << payload["polarization"]["label"].get<std::string>() << "\n"
      << "  p_g   = " << inv["p_g"] << "\n"
      << "  q     = " << inv["q"] << "\n"
      << "  chi   = " << inv["chi"] << "\n"
      << "  c1^2  = " << inv["c1_sq"] << "\n"
      << "  c2    = " << inv["c2"] << "\n"
      << "  c1^2/c2 = " << inv["chern_ratio"]["text"].get<std::string>() << "\n"
      << "  mu    = " << (payload["mu"].is_null() ? std::string("(audit failed)") : payload["mu"].dump())
      << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants, cohomology and geography of canonical double covers of P2 and F_e",
               "dcover"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  std::string format = "json";
  std::optional<std::string> out_path;

  PolarizationFlags inv_flags;
  auto* inv_cmd = app.add_subcommand("invariants", "invariants of the canonical double cover");
  inv_flags.attach(inv_cmd);
  inv_cmd->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));

  ClassFlags coh_flags;
  auto* coh_cmd = app.add_subcommand("cohomology", "h0, h1, h2 of a line bundle");
  coh_flags.attach(coh_cmd);

  PolarizationFlags mu_flags;
  auto* mu_cmd = app.add_subcommand("moduli-dim", "dimension of the moduli component");
  mu_flags.attach(mu_cmd);

  PolarizationFlags audit_flags;
  auto* audit_cmd = app.add_subcommand("audit", "check the hypotheses of the deformation theorem");
  audit_flags.attach(audit_cmd);

  std::string geo_a, geo_x_max, geo_e_cap = "64";
  bool geo_no_f1 = false, geo_p2 = false;
  auto* geo_cmd = app.add_subcommand("geography", "geography points on the line l_a");
  geo_cmd->add_option("--a", geo_a)->required();
  geo_cmd->add_option("--x-max", geo_x_max)->required();
  geo_cmd->add_flag("--no-f1", geo_no_f1, "leave out covers of F_1");
  geo_cmd->add_flag("--p2", geo_p2, "also include the P2 cover with d = a");
  geo_cmd->add_option("--e-cap", geo_e_cap, "largest e scanned");
  geo_cmd->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}));
  geo_cmd->add_option("--out", out_path);

  int fig_n = 1;
  std::optional<std::string> fig_window;
  auto* fig_cmd = app.add_subcommand("figure", "render figure 1 or 2 as SVG");
  fig_cmd->add_option("--n", fig_n)->required()->check(CLI::IsMember({1, 2}));
  fig_cmd->add_option("--window", fig_window, "x0,x1,y0,y1");
  fig_cmd->add_option("--out", out_path)->required();
  fig_cmd->add_option("--format", format)->check(CLI::IsMember({"svg", "csv"}));

  std::string col_m, col_bound;
  std::optional<std::string> col_feas;
  auto* col_cmd = app.add_subcommand("collisions", "invariant coincidences with MPLine(m)");
  col_cmd->add_option("--m", col_m)->required();
  col_cmd->add_option("--bound", col_bound)->required();
  col_cmd->add_option("--feas-config", col_feas, "JSON feasibility predicate");
  col_cmd->add_option("--format", format)->check(CLI::IsMember({"json"}));

  auto* ver_cmd = app.add_subcommand("verify-examples", "check the two moduli examples");

  const std::string echo = join(args);
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  std::vector<std::string> warnings;
  try {
    if (inv_cmd->parsed()) {
      const Polarization p = inv_flags.build();
      warnings = p.caveats();
      json payload = invariants_payload(p, warnings);
      if (format == "text")
        print_invariants_text(out, payload);
      else
        emit(out, echo, std::move(payload), warnings);
    } else if (coh_cmd->parsed()) {
      const DivisorClass d = coh_flags.build();
      // The brute-force views are only shown for classes small enough to
      // enumerate quickly.
      const Integer limit = 1000;
      const bool small = d.base().is_plane()
                             ? abs(d.degree()) <= limit
                             : abs(d.alpha()) <= limit && abs(d.beta()) <= limit;
      json twists = nullptr;
      json oracle = nullptr;
      if (small) {
        twists = json::array();
        for (const auto& t : pushforward_twists(d)) twists.push_back(integer_json(t));
        oracle = integer_json(h0_lattice_oracle(d));
      } else {
        warnings.push_back("coefficients exceed 1000: lattice oracle and pushforward twists omitted");
      }
      emit(out, echo,
           {{"class", to_json(d)},
            {"table", to_json(cohomology(d))},
            {"riemann_roch_chi", integer_json(riemann_roch_chi(d))},
            {"h0_lattice_oracle", oracle},
            {"serre_dual", to_json(serre_dual(d))},
            {"pushforward_twists", twists}},
           warnings);
    } else if (mu_cmd->parsed()) {
      const Polarization p = mu_flags.build();
      warnings = p.caveats();
      const Integer mu = moduli_dimension(p);
      emit(out, echo,
           {{"polarization", to_json(p)},
            {"mu", integer_json(mu)},
            {"normal_sheaf_h0", integer_json(normal_sheaf_h0(p))},
            {"tangent_chi", integer_json(tangent_chi_constant(p.base()))}},
           warnings);
    } else if (audit_cmd->parsed()) {
      const Polarization p = audit_flags.build();
      emit(out, echo, to_json(audit(p)), p.caveats());
    } else if (geo_cmd->parsed()) {
      EnumerationOptions options;
      options.include_f1 = !geo_no_f1;
      options.include_p2 = geo_p2;
      options.e_cap = parse_integer("--e-cap", geo_e_cap);
      const Integer a = parse_integer("--a", geo_a);
      const Integer x_max = parse_integer("--x-max", geo_x_max);
      const Enumeration en = enumerate_points(a, x_max, options);
      warnings = en.warnings;
      std::string text;
      if (format == "csv") {
        text = points_csv(en.points);
      } else if (format == "svg") {
        text = render_svg(geography_plot(a, en.points));
      } else {
        json points = json::array();
        for (const auto& pt : en.points) points.push_back(to_json(pt));
        json gaps = json::array();
        for (const auto& [x, y] : semiline_gaps(a, x_max, en))
          gaps.push_back({integer_json(x), integer_json(y)});
        text = envelope(echo,
                        {{"a", integer_json(a)},
                         {"x_max", integer_json(x_max)},
                         {"include_f1", options.include_f1},
                         {"include_p2", options.include_p2},
                         {"e_scanned", integer_json(en.e_scanned)},
                         {"points", points},
                         {"semiline_gaps", gaps}},
                        warnings)
                   .dump(2) +
               "\n";
      }
      if (out_path)
        write_file(*out_path, text);
      else
        out << text;
      for (const auto& w : warnings)
        if (format != "json") err << "warning: " << w << "\n";
    } else if (fig_cmd->parsed()) {
      Window window = default_window(fig_n);
      if (fig_window) {
        std::vector<std::string> parts;
        std::stringstream ss(*fig_window);
        for (std::string item; std::getline(ss, item, ',');) parts.push_back(item);
        if (parts.size() != 4)
          throw CLI::ValidationError("--window", "expected x0,x1,y0,y1");
        window = {parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]),
                  parse_rational(parts[3])};
      }
      const FigureDataset data = figure_dataset(fig_n, window);
      write_file(*out_path, format == "csv" ? figure_csv(data) : render_svg(data));
      json lines = json::array();
      for (const auto& seg : data.lines)
        lines.push_back({{"id", seg.line.id()}, {"style", seg.dashed ? "dashed" : "solid"}});
      json markers = json::array();
      for (const auto& pt : data.markers) markers.push_back({integer_json(pt.x), integer_json(pt.y)});
      emit(out, echo,
           {{"figure", fig_n},
            {"out", *out_path},
            {"format", format == "csv" ? "csv" : "svg"},
            {"window",
             {to_string(window.x0), to_string(window.x1), to_string(window.y0),
              to_string(window.y1)}},
            {"lines", lines},
            {"markers", markers}},
           data.warnings);
    } else if (col_cmd->parsed()) {
      const Integer m = parse_integer("--m", col_m);
      const Integer bound = parse_integer("--bound", col_bound);
      const FeasibilityPredicate feas =
          col_feas ? FeasibilityPredicate::from_json_text(read_file(*col_feas))
                   : FeasibilityPredicate();
      const XiSearch search = xi_candidates(m, bound, feas);
      json payload = to_json(search);
      payload["feasibility"] = feas.name();
      json roots = json::array();
      for (const auto& d : p2_solutions(m)) roots.push_back(integer_json(d));
      payload["p2_solutions"] = roots;
      emit(out, echo, std::move(payload), search.warnings);
    } else if (ver_cmd->parsed()) {
      const ExamplesReport report = verify_moduli_examples();
      emit(out, echo, to_json(report), {});
      if (!report.all_passed) return kInternal;
    }
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const AuditRefusal& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kSuccess;
}

}  // namespace dcover::cli
