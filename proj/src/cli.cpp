#include "cb/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cb/classify.hpp"
#include "cb/oracle.hpp"
#include "cb/ordinal_text.hpp"
#include "cb/primitive.hpp"
#include "cb/term_io.hpp"

namespace cb {

namespace {

std::uint64_t default_depth() {
  if (const char* env = std::getenv("CBDERIV_DEPTH")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0 && v <= 16) return v;
  }
  return 4;
}

std::string slurp(std::istream& is) {
  std::ostringstream buf;
  buf << is.rdbuf();
  return buf.str();
}

SetTerm load_term(const std::string& path, std::istream& stdin_stream) {
  if (path == "-") return deserialize_term(slurp(stdin_stream));
  std::ifstream file(path);
  if (!file) throw Error("cannot open " + path);
  return deserialize_term(slurp(file));
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path == "-") {
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error("cannot open " + path);
  file << text;
  if (!text.empty() && text.back() != '\n') file << '\n';
}

Interval parse_interval(const std::string& text) {
  std::size_t comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("interval must be lo,hi", 0);
  return Interval(Rational::parse(text.substr(0, comma)),
                  Rational::parse(text.substr(comma + 1)));
}

std::string format_cbchar(const CBChar& c) {
  return "(" + print_ordinal(c.alpha) + ", " + std::to_string(c.p) + ")";
}

std::vector<Ordinal> parse_ordinal_list(const std::string& text) {
  std::vector<Ordinal> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string piece =
        comma == std::string::npos ? text.substr(start) : text.substr(start, comma - start);
    if (!piece.empty()) out.push_back(parse_ordinal(piece));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct VerifyGrid {
  std::vector<Ordinal> alphas;
  std::vector<std::uint64_t> ps;
  std::vector<Ordinal> betas;
  std::uint64_t depth = 4;
};

VerifyGrid make_grid(const std::string& text, std::uint64_t depth) {
  VerifyGrid grid;
  grid.depth = depth;
  if (text == "default" || text == "small") {
    grid.alphas = parse_ordinal_list(text == "default" ? "0,1,2,3,w,w+1,w*2,w^2,w^2+w*3+1,w^w"
                                                       : "0,1,2,w");
    grid.ps = text == "default" ? std::vector<std::uint64_t>{1, 2, 3}
                                : std::vector<std::uint64_t>{1, 2};
    grid.betas = parse_ordinal_list("0,1,2,w");
    return grid;
  }
  // key=value pairs separated by ';': alphas=..., p=..., betas=..., depth=n
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t semi = text.find(';', start);
    std::string piece =
        semi == std::string::npos ? text.substr(start) : text.substr(start, semi - start);
    std::size_t eq = piece.find('=');
    if (eq == std::string::npos) throw ParseError("grid entries must be key=value", start);
    std::string key = piece.substr(0, eq);
    std::string value = piece.substr(eq + 1);
    if (key == "alphas") {
      grid.alphas = parse_ordinal_list(value);
    } else if (key == "p") {
      for (const auto& o : parse_ordinal_list(value)) grid.ps.push_back(o.finite_value());
    } else if (key == "betas") {
      grid.betas = parse_ordinal_list(value);
    } else if (key == "depth") {
      grid.depth = std::stoull(value);
    } else {
      throw ParseError("unknown grid key: " + key, start);
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  if (grid.alphas.empty() || grid.ps.empty() || grid.betas.empty()) {
    throw ParseError("grid needs alphas, p, and betas", 0);
  }
  return grid;
}

// Checks the address-divisibility characterization of derivative membership
// against the structural engine, over every enumerated point of one cell.
struct CellResult {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
};

CellResult verify_cell(const Ordinal& alpha, std::uint64_t p, const std::vector<Ordinal>& betas,
                       std::uint64_t depth) {
  CellResult result;
  SetTerm t = realize(alpha, p, Interval(Rational(0), Rational(1)));
  if (t.is_empty()) return result;
  OrdinalSpace space{alpha, p};
  Enumeration rows = points(t, depth);
  std::vector<Ordinal> all_betas = betas;
  all_betas.push_back(alpha);
  for (const auto& beta : all_betas) {
    if (beta > alpha) continue;
    SetTerm derived = derivative_upto(t, beta);
    for (const auto& row : rows) {
      bool engine = contains(derived, row.point);
      bool oracle = member_after(space, ordinal_of_point(t, row.point), beta);
      ++result.checks;
      if (engine != oracle) ++result.failures;
    }
  }
  return result;
}

int run_verify(const VerifyGrid& grid, std::ostream& out) {
  std::uint64_t total = 0;
  std::uint64_t failed = 0;
  for (const auto& alpha : grid.alphas) {
    for (std::uint64_t p : grid.ps) {
      CellResult cell = verify_cell(alpha, p, grid.betas, grid.depth);
      total += cell.checks;
      failed += cell.failures;
      out << (cell.failures == 0 ? "ok" : "FAIL") << " alpha=" << print_ordinal(alpha)
          << " p=" << p << " checks=" << cell.checks << "\n";
    }
  }
  out << (failed == 0 ? "verify passed" : "verify FAILED") << " (" << total << " checks, "
      << failed << " failures)\n";
  return failed == 0 ? 0 : 1;
}

int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"Cantor-Bendixson derivative toolkit"};
  app.require_subcommand(1);

  auto* ord = app.add_subcommand("ord", "ordinal notation arithmetic");
  ord->require_subcommand(1);
  std::string ord_a, ord_b;
  auto* ord_eval = ord->add_subcommand("eval", "parse and print in canonical form");
  ord_eval->add_option("expr", ord_a)->required();
  auto* ord_cmp = ord->add_subcommand("cmp", "compare two ordinals: LT, EQ, or GT");
  ord_cmp->add_option("a", ord_a)->required();
  ord_cmp->add_option("b", ord_b)->required();
  auto* ord_sub = ord->add_subcommand("sub", "the unique c with a + c = b");
  ord_sub->add_option("a", ord_a)->required();
  ord_sub->add_option("b", ord_b)->required();
  auto* ord_div = ord->add_subcommand("divides", "is delta a nonzero multiple of w^beta");
  ord_div->add_option("beta", ord_a)->required();
  ord_div->add_option("delta", ord_b)->required();

  std::string alpha_text = "0", interval_text = "0,1", in_path = "-", out_path = "-";
  std::string csv_path, point_text, ordinal_text, path_a, path_b, points_path, inline_points;
  std::uint64_t p_value = 1;
  std::uint64_t depth = default_depth();
  std::string beta_text = "1", grid_spec = "default";

  auto* realize_cmd = app.add_subcommand("realize", "build a set with characteristic (alpha, p)");
  realize_cmd->add_option("--alpha", alpha_text)->required();
  realize_cmd->add_option("--p", p_value)->required();
  realize_cmd->add_option("--interval", interval_text);
  realize_cmd->add_option("--depth", depth);
  realize_cmd->add_option("--out", out_path);
  realize_cmd->add_option("--csv", csv_path);

  auto* derive_cmd = app.add_subcommand("derive", "beta-th derivative of a term");
  derive_cmd->add_option("--beta", beta_text)->required();
  derive_cmd->add_option("--in", in_path);
  derive_cmd->add_option("--out", out_path);
  derive_cmd->add_option("--depth", depth);
  derive_cmd->add_option("--csv", csv_path);

  auto* cb_cmd = app.add_subcommand("cb-char", "Cantor-Bendixson characteristic of a term");
  cb_cmd->add_option("--in", in_path);

  auto* equiv_cmd = app.add_subcommand("equiv", "are two terms homeomorphic");
  equiv_cmd->add_option("--a", path_a)->required();
  equiv_cmd->add_option("--b", path_b)->required();

  auto* address_cmd = app.add_subcommand("address", "ordinal address of a point, or its inverse");
  address_cmd->add_option("--in", in_path);
  address_cmd->add_option("--point", point_text);
  address_cmd->add_option("--ordinal", ordinal_text);

  auto* primitive_cmd =
      app.add_subcommand("primitive", "a set whose alpha-th derivative is the given finite set");
  primitive_cmd->add_option("--alpha", alpha_text)->required();
  primitive_cmd->add_option("--points", points_path);
  primitive_cmd->add_option("--list", inline_points);
  primitive_cmd->add_option("--out", out_path);

  auto* verify_cmd = app.add_subcommand("verify", "cross-check derivatives against the ordinal-space oracle");
  verify_cmd->add_option("--grid", grid_spec);
  verify_cmd->add_option("--depth", depth);

  auto* points_cmd = app.add_subcommand("points", "enumerate a term to CSV");
  points_cmd->add_option("--in", in_path);
  points_cmd->add_option("--depth", depth);
  points_cmd->add_option("--out", out_path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  if (ord_eval->parsed()) {
    out << print_ordinal(parse_ordinal(ord_a)) << "\n";
    return 0;
  }
  if (ord_cmp->parsed()) {
    auto c = parse_ordinal(ord_a) <=> parse_ordinal(ord_b);
    out << (c < 0 ? "LT" : c > 0 ? "GT" : "EQ") << "\n";
    return 0;
  }
  if (ord_sub->parsed()) {
    out << print_ordinal(left_subtract(parse_ordinal(ord_a), parse_ordinal(ord_b))) << "\n";
    return 0;
  }
  if (ord_div->parsed()) {
    out << (divides_omega_pow(parse_ordinal(ord_a), parse_ordinal(ord_b)) ? "true" : "false")
        << "\n";
    return 0;
  }
  if (realize_cmd->parsed()) {
    SetTerm t = realize(parse_ordinal(alpha_text), p_value, parse_interval(interval_text));
    emit(serialize_term(t), out_path, out);
    if (!csv_path.empty()) {
      std::ostringstream csv;
      write_enumeration_csv(csv, points(t, depth));
      emit(csv.str(), csv_path, out);
    }
    return 0;
  }
  if (derive_cmd->parsed()) {
    SetTerm t = derivative_upto(load_term(in_path, in), parse_ordinal(beta_text));
    emit(serialize_term(t), out_path, out);
    if (!csv_path.empty()) {
      std::ostringstream csv;
      write_enumeration_csv(csv, points(t, depth));
      emit(csv.str(), csv_path, out);
    }
    return 0;
  }
  if (cb_cmd->parsed()) {
    out << format_cbchar(cb_characteristic(load_term(in_path, in))) << "\n";
    return 0;
  }
  if (equiv_cmd->parsed()) {
    SetTerm a = load_term(path_a, in);
    SetTerm b = load_term(path_b, in);
    out << (equivalent(a, b) ? "equivalent" : "not equivalent") << "\n";
    return 0;
  }
  if (address_cmd->parsed()) {
    SetTerm t = load_term(in_path, in);
    if (!point_text.empty()) {
      out << print_ordinal(ordinal_of_point(t, Rational::parse(point_text))) << "\n";
      return 0;
    }
    if (!ordinal_text.empty()) {
      out << point_of_ordinal(t, parse_ordinal(ordinal_text)).str() << "\n";
      return 0;
    }
    throw ParseError("address needs --point or --ordinal", 0);
  }
  if (primitive_cmd->parsed()) {
    std::vector<Rational> pts;
    if (!points_path.empty()) {
      if (points_path == "-") {
        pts = read_rationals(in);
      } else {
        std::ifstream file(points_path);
        if (!file) throw Error("cannot open " + points_path);
        pts = read_rationals(file);
      }
    } else if (!inline_points.empty()) {
      std::istringstream list(inline_points);
      std::string piece;
      while (std::getline(list, piece, ',')) pts.push_back(Rational::parse(piece));
    } else {
      throw ParseError("primitive needs --points or --list", 0);
    }
    emit(serialize_term(primitive_of(pts, parse_ordinal(alpha_text))), out_path, out);
    return 0;
  }
  if (verify_cmd->parsed()) {
    return run_verify(make_grid(grid_spec, depth), out);
  }
  if (points_cmd->parsed()) {
    std::ostringstream csv;
    write_enumeration_csv(csv, points(load_term(in_path, in), depth));
    emit(csv.str(), out_path, out);
    return 0;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  try {
    return dispatch(args, in, out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace cb
