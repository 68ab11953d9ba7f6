// psp: command-line front end for the stamp-cover workbench.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "psp/core.hpp"
#include "psp/formulas.hpp"
#include "psp/render.hpp"
#include "psp/search.hpp"
#include "psp/service.hpp"
#include "psp/stride.hpp"
#include "psp/threads.hpp"

using namespace psp;

namespace {

enum Exit { kOk = 0, kNegative = 1, kBadInput = 2, kMismatch = 3 };

struct Options {
  std::string format = "text";
  i64 a2 = 0, a3 = 0, s = 0, n = 0, p = -1;
  bool series = false, sg1 = false, override_guard = false, limit = false;
  int jobs = 0, port = kDefaultPort, scale = 6;
  std::optional<i64> lo, hi, k_min, k_max, s_min, s_max, n_max;
  std::string svg_path, table, selector;
};

bool json_mode(const Options& o) { return o.format == "json"; }

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_cover(const Options& o) {
  Basis b = Basis::make(o.a2, o.a3);
  CoverResult c = cover3(b, o.s);
  std::optional<Underlying> u;
  if (c.k >= 0) u = underlying_sg(b, o.s);
  if (json_mode(o)) {
    emit(cover_json(b, o.s, c, u));
  } else {
    std::cout << "X=" << c.X << " k=" << c.k << " Y=" << c.Y;
    if (u) std::cout << " SG(" << u->sg.n << "," << u->sg.p << ")";
    std::cout << "\n";
  }
  return kOk;
}

int cmd_msearch(const Options& o) {
  M3Result r = brute_m3(o.s, o.jobs, o.override_guard);
  if (json_mode(o)) {
    emit(m3_json(r));
  } else {
    std::cout << "M(3," << r.s << ")=" << r.M;
    for (const Basis& b : r.maximal) std::cout << " " << to_string(b);
    std::cout << "\n";
  }
  return kOk;
}

int cmd_sg(const Options& o) {
  Basis b = Basis::make(o.a2, o.a3);
  if (o.series) {
    auto list = sg_series(b);
    if (json_mode(o)) {
      Json arr = Json::array();
      for (const auto& sg : list) arr.push_back(analysis_json(analyze(b, sg.n)));
      emit(arr);
    } else {
      for (const auto& sg : list) std::cout << sg_text(sg) << "\n";
    }
    return list.empty() ? kNegative : kOk;
  }
  if (o.n < 1) throw InvalidInput("give -n or --series");
  Analysis a = analyze(b, o.n);
  if (json_mode(o)) emit(analysis_json(a));
  else if (a.sg) std::cout << sg_text(*a.sg) << "\n";
  else std::cout << to_string(b) << " is not a stride generator at n=" << o.n << "\n";
  return a.sg ? kOk : kNegative;
}

int cmd_osg(const Options& o) {
  if (o.p < 0) throw InvalidInput("give -p");
  Json j{{"n", o.n}, {"p", o.p}};
  std::string text;
  if (o.p == 0) {
    Json rows = Json::array();
    for (const OsgRow& r : osg0(o.n)) {
      rows.push_back(osg_json(r));
      text += "OSG(" + std::to_string(o.n) + ",0) = " + to_string(r.basis()) + " y=" + std::to_string(r.y) + "\n";
    }
    j["rows"] = rows;
  } else if (o.p == 1 && !o.sg1) {
    OsgRow r = osg1(o.n);
    j = osg_json(r);
    text = "OSG(" + std::to_string(o.n) + ",1) = " + to_string(r.basis()) + " y=" + std::to_string(r.y) + "\n";
  } else if (o.p == 1) {
    auto r = sg1_1(o.n);
    if (!r) {
      if (json_mode(o)) emit(Json{{"n", o.n}, {"sg1", nullptr}});
      else std::cout << "no SG1(" << o.n << ",1) exists\n";
      return kNegative;
    }
    j = osg_json(*r);
    text = "SG1(" + std::to_string(o.n) + ",1) = " + to_string(r->basis()) + " y=" + std::to_string(r->y) + "\n";
  } else {
    auto b = best_osg(o.n, o.p);
    if (!b) {
      if (json_mode(o)) emit(Json{{"n", o.n}, {"p", o.p}, {"bases", Json::array()}});
      else std::cout << "no SG(" << o.n << "," << o.p << ") exists\n";
      return kNegative;
    }
    j = best_osg_json(*b);
    for (std::size_t i = 0; i < b->bases.size(); ++i)
      text += "OSG(" + std::to_string(o.n) + "," + std::to_string(o.p) + ") = " + to_string(b->bases[i]) +
              " y=" + std::to_string(b->first_breaks[i]) + "\n";
  }
  if (json_mode(o)) emit(j);
  else std::cout << text;
  return kOk;
}

int cmd_tables(const Options& o) {
  const std::string& t = o.table;
  if (t == "mopt") {
    MoptRow m = mopt(o.s);
    if (json_mode(o)) emit(mopt_json(m));
    else std::cout << "s=" << m.s << " t=" << m.t << " r=" << m.r << " k_opt=" << m.k_opt << " n_opt=" << m.n_opt
                   << " X_opt=" << m.X_opt << "\n";
  } else if (t == "maximal") {
    MaximalSet m = maximal_set(o.s);
    if (json_mode(o)) emit(maximal_set_json(m));
    else std::cout << "s=" << m.s << " " << to_string(m.basis()) << " a3=" << m.C2 << "*" << m.a2 << "+" << m.C1
                   << " X_opt=" << m.X_opt << "\n";
  } else if (t == "scan") {
    ScanResult r = scan_osg1_cover(o.s, o.k_min.value_or(0), o.k_max.value_or(o.s - 1));
    if (json_mode(o)) {
      emit(scan_json(r));
    } else {
      for (const ScanEntry& e : r.rows) {
        std::cout << e.k << " " << e.n << " " << to_string(e.basis) << " " << e.Y << " " << e.lead << " " << e.X
                  << (e.k == r.argmax_k ? " <- optimum" : "") << "\n";
        if (e.sg1) std::cout << "     SG1 " << to_string(*e.sg1) << " " << e.sg1_Y << " " << e.sg1_X << "\n";
      }
    }
  } else if (t == "key1p") {
    Key1pResult k = enumerate_key1p(o.n, o.p);
    if (json_mode(o)) {
      emit(key1p_json(k));
    } else {
      static const char* names[4] = {"1a", "1b", "2a", "2b"};
      for (int c = 0; c < 4; ++c) {
        std::cout << names[c] << ":";
        for (const auto& cand : k.cases[c]) std::cout << " " << to_string(cand.basis);
        std::cout << "\n";
      }
      std::printf("limit %.2f\n", key1p_limit(o.n, o.p).value());
    }
  } else if (t == "bounds") {
    Rational up = a3_upper(o.n, o.p);
    A2Bounds ab = a2_bounds(o.n, o.p, o.a3);
    Json j{{"n", o.n}, {"p", o.p}, {"a3_upper", up.str()}, {"a2_upper", ab.upper}};
    if (o.a3 > 0) j["a2_lower"] = ab.lower.str();
    if (o.p >= 1) j["key1p_limit"] = key1p_limit(o.n, o.p).str();
    if (json_mode(o)) emit(j);
    else std::cout << j.dump() << "\n";
  } else {
    throw InvalidInput("unknown table " + t);
  }
  return kOk;
}

int cmd_diagram(const Options& o) {
  Basis b = Basis::make(o.a2, o.a3);
  Analysis a = analyze(b, o.n, std::nullopt, o.lo, o.hi);
  ThreadDiagram d = o.p >= 0 ? diagram(b, o.n, o.p, o.lo.value_or(0), o.hi.value_or(2 * b.a3 - 1)) : a.diagram;
  if (!o.svg_path.empty()) {
    std::ofstream out(o.svg_path, std::ios::binary);
    if (!out) throw InvalidInput("cannot write " + o.svg_path);
    SvgStyle st;
    st.scale = o.scale;
    out << diagram_svg(d, st);
    if (!out) throw InvalidInput("cannot write " + o.svg_path);
  }
  if (json_mode(o)) {
    Json j = analysis_json(a);
    j["p"] = d.p;
    j["threads"] = threads_json(d);
    j["marks"] = d.marks;
    emit(j);
  } else {
    std::cout << diagram_text(d);
  }
  return kOk;
}

int cmd_pp(const Options& o) {
  i64 from = o.s_min.value_or(o.s > 0 ? o.s : 40), to = o.s_max.value_or(o.s > 0 ? o.s : 58);
  Json rows = Json::array();
  for (i64 s = from; s <= to; ++s) {
    double v = pp_bound(s);
    rows.push_back(Json{{"s", s}, {"a32", pp_a32(s)}, {"pp", v}});
    if (!json_mode(o)) std::printf("pp(%lld) = %.9f\n", static_cast<long long>(s), v);
  }
  Rational lim = pp_limit();
  if (json_mode(o)) emit(Json{{"rows", rows}, {"limit", lim.str()}, {"limit_value", lim.value()}});
  else std::printf("limit = %s = %.9f\n", lim.str().c_str(), lim.value());
  return kOk;
}

int cmd_verify(const Options& o) {
  VerifyOptions vo;
  vo.s_min = o.s_min.value_or(0);
  vo.s_max = o.s_max.value_or(0);
  vo.n_max = o.n_max.value_or(0);
  vo.jobs = o.jobs;
  SearchReport r = verify_tables(o.selector, vo);
  if (json_mode(o)) {
    emit(report_json(r));
  } else {
    for (const VerifyRow& row : r.rows)
      std::cout << (row.pass ? "PASS " : "FAIL ") << row.table << " " << row.label << "  " << row.detail << "\n";
    std::cout << r.rows.size() - r.failures() << "/" << r.rows.size() << " pass\n";
  }
  return r.passed() ? kOk : kMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Postage stamp problem workbench for bases {1, a2, a3}"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto basis_opts = [&](CLI::App* c) {
    c->add_option("--a2", o.a2, "Second denomination")->required();
    c->add_option("--a3", o.a3, "Third denomination")->required();
  };

  auto* cover = app.add_subcommand("cover", "Cover of a basis with s stamps");
  basis_opts(cover);
  cover->add_option("-s", o.s, "Stamp budget")->required();

  auto* ms = app.add_subcommand("msearch", "Exhaustive M(3,s)");
  ms->add_option("-s", o.s, "Stamp budget")->required();
  ms->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");
  ms->add_flag("--override-guard", o.override_guard, "Ignore the desk-scale limit on s");

  auto* sg = app.add_subcommand("sg", "Stride generator classification");
  basis_opts(sg);
  sg->add_option("-n", o.n, "Stamp parameter");
  sg->add_flag("--series", o.series, "List every stride generator of the basis");

  auto* osg = app.add_subcommand("osg", "Optimal stride generators");
  osg->add_option("-n", o.n, "Stamp parameter")->required();
  osg->add_option("-p", o.p, "Order")->required();
  osg->add_flag("--sg1", o.sg1, "Second-longest order-1 generator");

  auto* tables = app.add_subcommand("tables", "Closed-form tables and bounds");
  tables->add_option("table", o.table, "mopt | maximal | scan | key1p | bounds")->required();
  tables->add_option("-s", o.s, "Stamp budget");
  tables->add_option("-n", o.n, "Stamp parameter");
  tables->add_option("-p", o.p, "Order");
  tables->add_option("--a3", o.a3, "a3 for the a2 lower bound");
  tables->add_option("--k-min", o.k_min, "Scan start");
  tables->add_option("--k-max", o.k_max, "Scan end");

  auto* dg = app.add_subcommand("diagram", "Thread diagram");
  basis_opts(dg);
  dg->add_option("-n", o.n, "Stamp parameter")->required();
  dg->add_option("-p", o.p, "Order (default: classified order)");
  dg->add_option("--from", o.lo, "First value shown");
  dg->add_option("--to", o.hi, "Last value shown");
  dg->add_option("--svg", o.svg_path, "Write SVG here");
  dg->add_option("--scale", o.scale, "Pixels per value")->check(CLI::PositiveNumber);

  auto* pp = app.add_subcommand("pp", "Numeric bound pp(s)");
  pp->add_option("-s", o.s, "Single s");
  pp->add_option("--from", o.s_min, "First s");
  pp->add_option("--to", o.s_max, "Last s");

  auto* vf = app.add_subcommand("verify", "Check published tables");
  vf->add_option("selector", o.selector, "Table")->required()->check(CLI::IsMember(verify_selectors()));
  vf->add_option("--s-min", o.s_min, "Smallest s");
  vf->add_option("--s-max", o.s_max, "Largest s");
  vf->add_option("--n-max", o.n_max, "Largest n");
  vf->add_option("--jobs", o.jobs, "Worker threads (0 = all cores)");

  auto* sv = app.add_subcommand("serve", "HTTP service on 127.0.0.1");
  sv->add_option("--port", o.port, "Port");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (*cover) return cmd_cover(o);
    if (*ms) return cmd_msearch(o);
    if (*sg) return cmd_sg(o);
    if (*osg) return cmd_osg(o);
    if (*tables) return cmd_tables(o);
    if (*dg) return cmd_diagram(o);
    if (*pp) return cmd_pp(o);
    if (*vf) return cmd_verify(o);
    if (*sv) {
      std::cerr << "listening on 127.0.0.1:" << o.port << "\n";
      serve(o.port);
      return kOk;
    }
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const RangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}
