// Command-line front end. Every subcommand prints one JSON object per line on
// stdout.
//
// Exit codes: 0 ok, 2 parse error, 3 invariant violation, 4 precondition
// failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "overshear/error.hpp"
#include "overshear/exp_poly.hpp"
#include "overshear/fields.hpp"
#include "overshear/nilpotent.hpp"
#include "overshear/os_group.hpp"
#include "overshear/surface.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace overshear;
namespace nil = overshear::nilpotent;

constexpr int kOk = 0;
constexpr int kParseError = 2;
constexpr int kInvariantViolation = 3;
constexpr int kPreconditionFailure = 4;

// Signals an invariant violation after the report has been printed.
struct InvariantViolation {};

double surface_tolerance() {
  if (const char* env = std::getenv("OVERSHEAR_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
    throw PreconditionError(std::string("bad OVERSHEAR_TOL: ") + env);
  }
  return kDefaultSurfaceTol;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

json word_json(const OSWord& w) {
  json out = json::array();
  for (const auto& l : w.letters()) out.push_back(to_string(l));
  return out;
}

json matrix_json(const nil::Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

nil::Matrix parse_matrix(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(ParseError::Kind::Syntax, e.byte, "invalid JSON matrix");
  }
  if (!j.is_array() || j.empty())
    throw ParseError(ParseError::Kind::Syntax, 0, "matrix must be a nonempty array");
  const std::size_t n = j.size();
  nil::Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != n)
      throw ParseError(ParseError::Kind::Syntax, 0, "matrix must be square");
    for (std::size_t k = 0; k < n; ++k) {
      const json& cell = j[i][k];
      std::string s = cell.is_string() ? cell.get<std::string>()
                      : cell.is_number_integer() ? cell.dump()
                                                 : std::string();
      mpq_class q;
      if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw ParseError(ParseError::Kind::Syntax, 0,
                         "entry (" + std::to_string(i) + "," + std::to_string(k) +
                             ") is not a rational");
      q.canonicalize();
      m(i, k) = q;
    }
  }
  return m;
}

json point_json(const Surface& s, const SurfacePoint& q) {
  return {{"point", to_string(q)},
          {"residual", residual(s, q)},
          {"relative_residual", s.relative_residual(q)}};
}

void require_on_surface(const Surface& s, const SurfacePoint& q, double tol) {
  if (!s.contains(q, tol))
    throw PreconditionError("input point is off the surface (relative residual " +
                            std::to_string(s.relative_residual(q)) + ")");
}

struct Options {
  std::string word_file;
  std::string surface = "z^4 - 1";
  std::string point;
  std::string f = "0", g = "0", h = "0", k = "0";
  std::string fz = "z";
  double t = 1.0;
  long steps = 0;
  int n_brackets = 3;
  std::size_t size = 4;
  std::uint64_t seed = 1;
  std::string matrix;
};

int cmd_reduce(const Options& o) {
  const OSWord w(parse_word_file(read_input(o.word_file)));
  emit({{"word", word_json(w)},
        {"length", w.length()},
        {"cyclically_reduced", amalgam::is_cyclically_reduced(w)}});
  return kOk;
}

int cmd_conjugate(const Options& o) {
  const OSWord w(parse_word_file(read_input(o.word_file)));
  const auto r = amalgam::conjugate_into_factor(w);
  if (!r) {
    emit({{"result", "none"}, {"cyclic_length", amalgam::cyclic_reduce(w).core.length()}});
    return kOk;
  }
  const bool verified = r->conjugator.inverse() * w * r->conjugator == r->core;
  json factor = nullptr;
  if (!r->core.empty())
    factor = r->core.front().factor == amalgam::Factor::First ? "O1" : "O2";
  emit({{"conjugator", word_json(r->conjugator)},
        {"core", word_json(r->core)},
        {"factor", factor},
        {"verified", verified}});
  if (!verified) throw InvariantViolation{};
  return kOk;
}

int cmd_apply(const Options& o) {
  const double tol = surface_tolerance();
  const Surface s(parse_poly(o.surface, 'z'));
  const SurfacePoint q = parse_point(o.point);
  const OSWord w(parse_word_file(read_input(o.word_file)));
  require_on_surface(s, q, tol);
  const SurfacePoint img = word_apply(s, w, q);
  json out = point_json(s, img);
  out["on_surface"] = s.contains(img, tol);
  emit(out);
  if (!s.contains(img, tol)) throw InvariantViolation{};
  return kOk;
}

int cmd_bracket(const Options& o) {
  const Surface s(parse_poly(o.surface, 'z'));
  const IdentityReport r = check_of_bracket_identity(
      parse_exp_poly(o.f), parse_exp_poly(o.g), parse_exp_poly(o.h),
      parse_exp_poly(o.k), s);
  emit({{"lhs", to_string(r.lhs)},
        {"rhs", to_string(r.rhs)},
        {"equal", r.equal()},
        {"sign", to_string(r.sign)}});
  return kOk;
}

int cmd_flow(const Options& o) {
  const double tol = surface_tolerance();
  const Surface s(parse_poly(o.surface, 'z'));
  const SurfacePoint q = parse_point(o.point);
  const ExpPoly f = parse_exp_poly(o.f), g = parse_exp_poly(o.g);
  require_on_surface(s, q, tol);
  const SurfacePoint img = flow_closed_form(s, f, g, o.t, q);
  json out = point_json(s, img);
  out["identity"] = img == q;
  if (o.steps > 0) {
    const SurfacePoint num = flow_numeric(s, {f, g}, q, o.t, o.steps);
    out["numeric"] = to_string(num);
    out["difference"] = point_distance(num, img);
  }
  out["on_surface"] = s.contains(img, tol);
  emit(out);
  if (!s.contains(img, tol)) throw InvariantViolation{};
  return kOk;
}

int cmd_rank(const Options& o) {
  const Surface s(parse_poly(o.surface, 'z'));
  const std::size_t r =
      iterated_bracket_rank(s, parse_exp_poly(o.f), parse_exp_poly(o.g),
                            parse_exp_poly(o.h), o.n_brackets);
  emit({{"rank", r}, {"expected", o.n_brackets + 2}});
  return kOk;
}

void check_size(std::size_t n) {
  if (n < nil::kMinSize || n > nil::kMaxSize)
    throw PreconditionError("size must be in [" + std::to_string(nil::kMinSize) +
                            ", " + std::to_string(nil::kMaxSize) + "]");
}

int cmd_bch(const Options& o) {
  check_size(o.size);
  std::mt19937_64 rng(o.seed);
  const nil::Matrix x = nil::random_nil(o.size, rng);
  const nil::Matrix y = nil::random_nil(o.size, rng);
  const nil::Matrix k = nil::bch_k(x, y);
  const bool identity = nil::mexp(x + y) == nil::mexp(x) * nil::mexp(y) * nil::mexp(k);
  const bool derived = k.is_zero() || nil::min_depth(k) >= 2;
  emit({{"size", o.size},
        {"seed", o.seed},
        {"x", matrix_json(x)},
        {"y", matrix_json(y)},
        {"K", matrix_json(k)},
        {"identity_exact", identity},
        {"K_in_derived", derived}});
  if (!identity || !derived) throw InvariantViolation{};
  return kOk;
}

int cmd_decompose(const Options& o) {
  nil::Matrix g;
  if (!o.matrix.empty()) {
    g = parse_matrix(o.matrix);
    check_size(g.size());
    if (!g.is_unipotent())
      throw PreconditionError("matrix is not unipotent upper-triangular");
  } else {
    check_size(o.size);
    std::mt19937_64 rng(o.seed);
    g = nil::random_unipotent(o.size, rng);
  }
  const auto factors = nil::decompose_product(g);
  json fs = json::array();
  for (const auto& f : factors) fs.push_back(json::array({f.index, f.t.get_str()}));
  const bool ok = nil::reconstruct(g.size(), factors) == g;
  emit({{"matrix", matrix_json(g)},
        {"factors", fs},
        {"length", factors.size()},
        {"bound", nil::decomposition_length_bound(g.size())},
        {"reconstructs", ok}});
  if (!ok) throw InvariantViolation{};
  return kOk;
}

int cmd_hyperbolic(const Options& o) {
  const double tol = surface_tolerance();
  const Surface s(parse_poly(o.surface, 'z'));
  const SurfacePoint q = parse_point(o.point);
  const Poly fz = parse_poly(o.fz, 'z');
  require_on_surface(s, q, tol);
  const SurfacePoint img = apply_hyperbolic(s, fz, o.t, q);
  json out = point_json(s, img);
  out["on_surface"] = s.contains(img, tol);
  emit(out);
  if (!s.contains(img, tol)) throw InvariantViolation{};
  return kOk;
}

int run(int (*cmd)(const Options&), const Options& o) {
  try {
    return cmd(o);
  } catch (const InvariantViolation&) {
    return kInvariantViolation;
  } catch (const WordFileError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const ConstantTermError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kPreconditionFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Overshear group toolkit"};
  app.require_subcommand(1);
  Options o;
  int (*chosen)(const Options&) = nullptr;

  auto add = [&](const char* name, const char* help, int (*cmd)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    // "-h" would clash with the --h field option.
    sub->set_help_flag("--help", "Print this help message and exit");
    sub->callback([&chosen, cmd] { chosen = cmd; });
    return sub;
  };
  auto surface_opt = [&](CLI::App* sub) {
    sub->add_option("--surface", o.surface, "p(z), e.g. \"z^4 - 1\"")
        ->capture_default_str();
  };

  auto* reduce = add("reduce", "Reduce a word file", cmd_reduce);
  reduce->add_option("word-file", o.word_file, "Word file, '-' for stdin")->required();

  auto* conj = add("conjugate", "Conjugate a word into a factor", cmd_conjugate);
  conj->add_option("word-file", o.word_file)->required();

  auto* apply_cmd = add("apply", "Apply a word to a point", cmd_apply);
  apply_cmd->add_option("word-file", o.word_file)->required();
  surface_opt(apply_cmd);
  apply_cmd->add_option("--point", o.point, "x,y,z")->required();

  auto* br = add("bracket", "Check [OF_{f,g}, OF_{h,k}] = x SF_{gh-kf}", cmd_bracket);
  br->add_option("--f", o.f)->required();
  br->add_option("--g", o.g)->required();
  br->add_option("--h", o.h)->required();
  br->add_option("--k", o.k)->required();
  surface_opt(br);

  auto* fl = add("flow", "Time-t flow of OF_{f,g}", cmd_flow);
  fl->add_option("--f", o.f)->required();
  fl->add_option("--g", o.g)->required();
  fl->add_option("--t", o.t)->required();
  fl->add_option("--point", o.point)->required();
  fl->add_option("--steps", o.steps, "RK4 steps for a numeric comparison")
      ->check(CLI::NonNegativeNumber);
  surface_opt(fl);

  auto* rk = add("rank", "Rank of the iterated bracket span", cmd_rank);
  rk->add_option("--f", o.f)->required();
  rk->add_option("--g", o.g)->required();
  rk->add_option("--h", o.h)->required();
  rk->add_option("--N", o.n_brackets)->required()->check(CLI::NonNegativeNumber);
  surface_opt(rk);

  auto* bch = add("bch", "Check exp(x+y) = exp(x) exp(y) exp(K)", cmd_bch);
  bch->add_option("--size", o.size)->capture_default_str();
  bch->add_option("--seed", o.seed)->capture_default_str();

  auto* dec = add("decompose", "Factor a unipotent matrix", cmd_decompose);
  dec->add_option("--size", o.size)->capture_default_str();
  dec->add_option("--seed", o.seed)->capture_default_str();
  dec->add_option("--matrix", o.matrix, "JSON array of rows of rational strings");

  auto* hyp = add("hyperbolic", "Apply (x e^{f(z)t}, y e^{-f(z)t}, z)", cmd_hyperbolic);
  hyp->add_option("--fz", o.fz)->required();
  hyp->add_option("--t", o.t)->required();
  hyp->add_option("--point", o.point)->required();
  surface_opt(hyp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }
  return run(chosen, o);
}
