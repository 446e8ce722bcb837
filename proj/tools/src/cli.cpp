#include "latcount/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "latcount/convert.hpp"
#include "latcount/error.hpp"
#include "latcount/json_io.hpp"
#include "latcount/oracle.hpp"

namespace latcount {

namespace {

using io::json;

struct Options {
  std::string input;
  std::string output;
  std::string l;
  std::string point;
  std::string grid;
  std::string window;
  std::string format = "json";
};

IntVec parse_vector(const std::string& text, const char* what) {
  IntVec v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      v.push_back(parse_int(item));
    } catch (const InputError&) {
      throw InputError(std::string("--") + what + ": bad integer \"" + item + "\"");
    }
  }
  return v;
}

// "lo:hi" -> every integer point of [lo, hi]^n.
std::vector<IntVec> box_points(const std::string& range, std::size_t n, const char* what) {
  auto colon = range.find(':');
  if (colon == std::string::npos)
    throw InputError(std::string("--") + what + " expects lo:hi");
  long lo = to_i64(parse_int(range.substr(0, colon)));
  long hi = to_i64(parse_int(range.substr(colon + 1)));
  if (lo > hi) throw InputError(std::string("--") + what + ": lo > hi");
  std::vector<IntVec> out;
  std::vector<long> z(n, lo);
  for (;;) {
    out.emplace_back(z.begin(), z.end());
    std::size_t i = n;
    while (i > 0 && z[i - 1] == hi) z[--i] = lo;
    if (i == 0) break;
    ++z[i - 1];
  }
  return out;
}

std::vector<IntVec> points_of(const Options& o, std::size_t n, const std::string& range_flag,
                              const std::string& range) {
  if (!o.point.empty()) {
    IntVec s = parse_vector(o.point, "point");
    if (s.size() != n)
      throw InputError("--point has " + std::to_string(s.size()) + " coordinates, expected " +
                       std::to_string(n));
    return {s};
  }
  if (!range.empty()) return box_points(range, n, range_flag.c_str());
  throw InputError("one of --point or --" + range_flag + " is required");
}

IntVec l_of(const Options& o, std::size_t n) {
  if (o.l.empty()) throw InputError("--l is required");
  IntVec l = parse_vector(o.l, "l");
  if (l.size() != n)
    throw InputError("--l has " + std::to_string(l.size()) + " coordinates, expected " +
                     std::to_string(n));
  return l;
}

std::vector<IntVec> all_denoms(const RatGenFun& f) {
  std::vector<IntVec> out;
  for (const auto& t : f.terms)
    for (const auto& b : t.denoms)
      if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(b);
  return out;
}

std::string point_text(const IntVec& s) {
  std::string t = "(";
  for (std::size_t i = 0; i < s.size(); ++i) t += (i ? "," : "") + to_string(s[i]);
  return t + ")";
}

std::string values_output(const std::vector<std::pair<IntVec, Rat>>& vals, bool pretty) {
  if (pretty) {
    std::string t;
    for (const auto& [s, v] : vals) t += point_text(s) + ": " + to_string(v) + "\n";
    return t;
  }
  json a = json::array();
  for (const auto& [s, v] : vals) a.push_back({{"s", io::to_json(s)}, {"value", io::to_json(v)}});
  return json{{"values", a}}.dump(2) + "\n";
}

std::string piecewise_output(const PiecewiseStepPoly& c, bool pretty) {
  return pretty ? to_pretty(c) : io::to_json(c).dump(2) + "\n";
}

std::string genfun_output(const RatGenFun& f, bool pretty) {
  return pretty ? io::to_pretty(f) + "\n" : io::to_json(f).dump(2) + "\n";
}

std::string execute(const std::string& cmd, const Options& o, const json& doc) {
  const bool pretty = o.format == "pretty";
  if (cmd == "count") return piecewise_output(count_parametric(io::polytope_from_json(doc)), pretty);
  if (cmd == "genfun") return genfun_output(genfun_parametric(io::polytope_from_json(doc)), pretty);
  if (cmd == "gf2step") {
    RatGenFun f = io::genfun_from_json(doc);
    IntVec l = o.l.empty() ? pick_l(std::vector<Polyhedron>{}, all_denoms(f), f.n) : l_of(o, f.n);
    return piecewise_output(gf_to_step(f, l), pretty);
  }
  if (cmd == "step2gf") return genfun_output(step_to_gf(io::piecewise_from_json(doc)), pretty);
  if (cmd == "chambers") {
    ChamberDecomposition d = chamber_decomposition(io::polytope_from_json(doc));
    if (!pretty) return io::to_json(d).dump(2) + "\n";
    std::ostringstream os;
    for (const auto& ch : d.chambers) {
      PiecewiseStepPoly one{d.polytope.n, {{ch.cell, StepPoly(d.polytope.n)}}};
      std::string cell = to_pretty(one);
      cell = cell.substr(0, cell.rfind(':'));
      os << cell << ": vertices";
      for (const auto& v : ch.vertices) os << " " << v.vertex;
      os << "\n";
    }
    return os.str();
  }
  if (cmd == "eval") {
    std::vector<std::pair<IntVec, Rat>> vals;
    if (doc.contains("pieces")) {
      PiecewiseStepPoly c = io::piecewise_from_json(doc);
      for (const auto& s : points_of(o, c.n, "grid", o.grid)) vals.emplace_back(s, eval_piecewise(c, s));
    } else {
      RatGenFun f = io::genfun_from_json(doc);
      IntVec l = l_of(o, f.n);
      for (const auto& s : points_of(o, f.n, "grid", o.grid))
        vals.emplace_back(s, series_coefficient(f, l, s));
    }
    return values_output(vals, pretty);
  }
  if (cmd == "oracle") {
    std::vector<std::pair<IntVec, Rat>> vals;
    if (doc.contains("terms")) {
      RatGenFun f = io::genfun_from_json(doc);
      IntVec l = l_of(o, f.n);
      for (const auto& s : points_of(o, f.n, "window", o.window))
        vals.emplace_back(s, series_coefficient(f, l, s));
    } else {
      ParametricPolytope p = io::polytope_from_json(doc);
      for (const auto& s : points_of(o, p.n, "window", o.window))
        vals.emplace_back(s, Rat(count_bruteforce(p, s)));
    }
    return values_output(vals, pretty);
  }
  if (cmd == "pickl") {
    IntVec l;
    if (doc.contains("pieces")) {
      PiecewiseStepPoly c = io::piecewise_from_json(doc);
      l = pick_l(supports_of(c), {}, c.n);
    } else if (doc.contains("terms")) {
      RatGenFun f = io::genfun_from_json(doc);
      l = pick_l(std::vector<Polyhedron>{}, all_denoms(f), f.n);
    } else {
      Polyhedron s = io::polyhedron_from_json(doc.at("support"));
      std::vector<IntVec> denoms;
      if (doc.contains("denoms"))
        for (const auto& b : doc["denoms"]) denoms.push_back(io::intvec_from_json(b));
      l = pick_l(s, denoms);
    }
    if (pretty) return point_text(l) + "\n";
    return json{{"l", io::to_json(l)}}.dump(2) + "\n";
  }
  throw InputError("unknown command " + cmd);
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                std::ostream& err) {
  CLI::App app{"Counting lattice points in parametric polytopes and converting between "
               "rational generating functions and step-polynomials",
               "latcount"};
  app.require_subcommand(1);
  Options o;
  app.add_option("-i,--input", o.input, "input JSON file (default: stdin)");
  app.add_option("-o,--output", o.output, "output file (default: stdout)");
  app.add_option("--l", o.l, "expansion direction, comma-separated integers");
  app.add_option("--point", o.point, "evaluation point, comma-separated integers");
  app.add_option("--grid", o.grid, "evaluation box lo:hi in every coordinate");
  app.add_option("--window", o.window, "oracle box lo:hi in every coordinate");
  app.add_option("--format", o.format, "json or pretty")->check(CLI::IsMember({"json", "pretty"}));
  const std::vector<std::pair<const char*, const char*>> cmds = {
      {"count", "parametric polytope -> piecewise step-polynomial"},
      {"genfun", "parametric polytope -> rational generating function in s"},
      {"gf2step", "rational generating function + l -> piecewise step-polynomial"},
      {"step2gf", "piecewise step-polynomial -> rational generating function"},
      {"eval", "evaluate a piecewise function, or a generating function's coefficients at --l"},
      {"chambers", "chamber decomposition of a parametric polytope"},
      {"oracle", "brute-force counts or series coefficients"},
      {"pickl", "suggest an expansion direction l"}};
  for (const auto& [name, help] : cmds) app.add_subcommand(name, help)->fallthrough();

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    std::string text;
    if (o.input.empty() || o.input == "-") {
      std::stringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else {
      std::ifstream f(o.input);
      if (!f) throw InputError("cannot open " + o.input);
      std::stringstream ss;
      ss << f.rdbuf();
      text = ss.str();
    }
    json doc = io::parse(text);
    std::string result = execute(app.get_subcommands().front()->get_name(), o, doc);
    if (o.output.empty() || o.output == "-") {
      out << result;
    } else {
      std::ofstream f(o.output);
      if (!f) throw InputError("cannot write " + o.output);
      f << result;
    }
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const json::exception& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

}  // namespace latcount
