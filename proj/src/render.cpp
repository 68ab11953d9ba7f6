#include "psp/render.hpp"

#include <algorithm>
#include <sstream>

namespace psp {

namespace {

Json basis_json(const Basis& b) { return Json{{"a2", b.a2}, {"a3", b.a3}}; }

i64 probe_order(const Basis& b, i64 n) {
  i64 p = 0;
  for (i64 x = 1; x < b.a3; ++x)
    if (auto i = min_order(b, n, x)) p = std::max(p, *i);
  return p;
}

}  // namespace

Analysis analyze(const Basis& b, i64 n, std::optional<i64> s, std::optional<i64> lo, std::optional<i64> hi) {
  Analysis a;
  a.basis = Basis::make(b.a2, b.a3);
  if (n < 1) throw InvalidInput("n must be at least 1");
  a.n = n;
  a.s = s;
  a.sg = classify(a.basis, n);
  a.p = a.sg ? a.sg->p : probe_order(a.basis, n);
  a.diagram = diagram(a.basis, n, a.p, lo.value_or(0), hi.value_or(2 * a.basis.a3 - 1));
  if (a.sg) a.sig = signature(*a.sg);
  return a;
}

Json breaks_json(const StrideGenerator& sg) {
  Json arr = Json::array();
  for (const BreakInfo& bi : sg.breaks) {
    Json o{{"y", bi.y}};
    o["order"] = bi.order ? Json(*bi.order) : Json(nullptr);
    o["fundamental"] = bi.fundamental;
    arr.push_back(o);
  }
  return arr;
}

Json threads_json(const ThreadDiagram& d) {
  Json arr = Json::array();
  for (const Thread& t : d.threads) arr.push_back(Json{{"i", t.i}, {"c2", t.c2}, {"start", t.start}, {"end", t.end}});
  return arr;
}

Json analysis_json(const Analysis& a) {
  Json j;
  j["basis"] = basis_json(a.basis);
  j["n"] = a.n;
  j["p"] = a.p;
  j["is_sg"] = a.sg.has_value();
  j["breaks"] = a.sg ? breaks_json(*a.sg) : Json::array();
  j["canonical"] = a.sg ? a.sg->canonical() : false;
  j["threads"] = threads_json(a.diagram);
  j["marks"] = a.diagram.marks;
  if (a.sig) {
    j["signature"] = a.sig->orders;
    j["key"] = a.sig->key ? Json(*a.sig->key) : Json(nullptr);
  } else {
    j["signature"] = nullptr;
    j["key"] = nullptr;
  }
  if (a.sg && a.s && *a.s >= a.n) {
    i64 X = potential_cover(*a.sg, *a.s);
    j["cover"] = Json{{"s", *a.s}, {"X", X}, {"k", *a.s - a.n}, {"Y", a.sg->first_break() - 1}};
  } else {
    j["cover"] = nullptr;
  }
  return j;
}

Json cover_json(const Basis& b, i64 s, const CoverResult& c, const std::optional<Underlying>& u) {
  Json j;
  j["basis"] = basis_json(b);
  j["cover"] = Json{{"s", s}, {"X", c.X}, {"k", c.k}, {"Y", c.Y}};
  if (u) {
    j["n"] = u->sg.n;
    j["p"] = u->sg.p;
    j["breaks"] = breaks_json(u->sg);
    j["canonical"] = u->sg.canonical();
  } else {
    j["n"] = nullptr;
    j["p"] = nullptr;
  }
  return j;
}

Json osg_json(const OsgRow& r) {
  return Json{{"n", r.n}, {"a2", r.a2}, {"a3", r.a3}, {"y", r.y}, {"Y", r.y - 1}};
}

Json mopt_json(const MoptRow& m) {
  return Json{{"s", m.s}, {"t", m.t}, {"r", m.r}, {"k_opt", m.k_opt}, {"n_opt", m.n_opt}, {"X_opt", m.X_opt}};
}

Json maximal_set_json(const MaximalSet& m) {
  return Json{{"s", m.s}, {"t", m.t}, {"r", m.r}, {"a2", m.a2}, {"C2", m.C2},
              {"C1", m.C1}, {"a3", m.a3}, {"X_opt", m.X_opt}};
}

Json scan_json(const ScanResult& r) {
  Json rows = Json::array();
  for (const ScanEntry& e : r.rows) {
    Json o{{"k", e.k}, {"n", e.n}, {"basis", basis_json(e.basis)}, {"Y", e.Y}, {"lead", e.lead}, {"X", e.X}};
    if (e.sg1) o["sg1"] = Json{{"basis", basis_json(*e.sg1)}, {"Y", e.sg1_Y}, {"X", e.sg1_X}};
    else o["sg1"] = nullptr;
    rows.push_back(o);
  }
  return Json{{"s", r.s}, {"rows", rows}, {"argmax_k", r.argmax_k}, {"X", r.best_X}};
}

Json m3_json(const M3Result& r) {
  Json sets = Json::array();
  for (const Basis& b : r.maximal) sets.push_back(basis_json(b));
  return Json{{"s", r.s}, {"M", r.M}, {"maximal", sets},
              {"examined", r.counters.examined}, {"pruned", r.counters.pruned}};
}

Json best_osg_json(const BestOsg& b) {
  Json sets = Json::array();
  for (std::size_t i = 0; i < b.bases.size(); ++i)
    sets.push_back(Json{{"a2", b.bases[i].a2}, {"a3", b.bases[i].a3}, {"y", b.first_breaks[i]}});
  return Json{{"n", b.n}, {"p", b.p}, {"a3", b.a3}, {"bases", sets}};
}

Json key1p_json(const Key1pResult& k) {
  static const char* names[4] = {"1a", "1b", "2a", "2b"};
  Json cases;
  for (int c = 0; c < 4; ++c) {
    Json arr = Json::array();
    for (const auto& cand : k.cases[c])
      arr.push_back(Json{{"a2", cand.basis.a2}, {"a3", cand.basis.a3}, {"C2", cand.C2}, {"C1", cand.C1}});
    cases[names[c]] = arr;
  }
  auto list = [](const std::vector<Basis>& v) {
    Json arr = Json::array();
    for (const Basis& b : v) arr.push_back(basis_json(b));
    return arr;
  };
  return Json{{"n", k.n}, {"p", k.p}, {"cases", cases}, {"best_key1", list(k.best_key1())},
              {"best_keyp", list(k.best_keyp())}, {"limit", key1p_limit(k.n, k.p).value()}};
}

Json report_json(const SearchReport& r) {
  Json rows = Json::array();
  for (const VerifyRow& v : r.rows)
    rows.push_back(Json{{"table", v.table}, {"label", v.label}, {"pass", v.pass}, {"detail", v.detail}});
  return Json{{"selector", r.selector}, {"passed", r.passed()}, {"failures", r.failures()}, {"rows", rows}};
}

std::string sg_text(const StrideGenerator& sg) {
  std::ostringstream os;
  os << "SG(" << sg.n << "," << sg.p << ") " << (sg.breaks.size() == 1 ? "break " : "breaks ");
  for (std::size_t i = 0; i < sg.breaks.size(); ++i) {
    if (i) os << ", ";
    os << sg.breaks[i].y;
    if (sg.breaks[i].order) os << " (order " << *sg.breaks[i].order << ")";
  }
  os << (sg.canonical() ? " canonical" : " non-canonical");
  return os.str();
}

std::string diagram_text(const ThreadDiagram& d) {
  std::ostringstream os;
  os << to_string(d.basis) << " n=" << d.n << " p=" << d.p << " range " << d.lo << ".." << d.hi << "\n";
  for (const Thread& t : d.threads) {
    os << "T" << t.i << "(" << t.c2 << ") " << t.start << ".." << t.end;
    if (t.i < 0 || t.i > d.p) os << " [annotation]";
    os << "\n";
  }
  os << "uncovered:";
  for (i64 v : d.marks) os << " " << v;
  os << "\n";
  return os.str();
}

std::string diagram_svg(const ThreadDiagram& d, const SvgStyle& st) {
  const i64 width_values = d.hi >= d.lo ? d.hi - d.lo + 1 : 0;
  const i64 rows = d.hi >= d.lo ? d.p + 3 : 0;  // orders -1 .. p+1
  const i64 margin = 24;
  const i64 W = width_values * st.scale + 2 * margin;
  const i64 H = rows * st.row_height + 2 * margin;
  auto xpix = [&](i64 v) { return margin + (v - d.lo) * st.scale; };
  auto ypix = [&](i64 order) { return margin + (order + 1) * st.row_height; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  for (i64 v : d.marks)
    os << "<rect class=\"break\" x=\"" << xpix(v) << "\" y=\"" << margin << "\" width=\"" << st.scale
       << "\" height=\"" << rows * st.row_height << "\" fill=\"#f4c542\"/>\n";
  for (i64 order = -1; rows > 0 && order <= d.p + 1; ++order)
    os << "<text x=\"2\" y=\"" << ypix(order) + st.row_height / 2 + 4 << "\" font-size=\"10\">" << order << "</text>\n";
  for (const Thread& t : d.threads) {
    i64 a = std::max(t.start, d.lo), b = std::min(t.end, d.hi);
    if (a > b) continue;
    bool faint = t.i < 0 || t.i > d.p;
    os << "<g" << (faint ? " opacity=\"0.4\"" : "") << ">";
    os << "<rect x=\"" << xpix(a) << "\" y=\"" << ypix(t.i) + 3 << "\" width=\"" << (b - a + 1) * st.scale
       << "\" height=\"" << st.row_height - 6 << "\" fill=\"#3b6ea5\"/>";
    os << "<text x=\"" << xpix(a) + 1 << "\" y=\"" << ypix(t.i) + st.row_height - 5
       << "\" font-size=\"9\" fill=\"white\">" << t.c2 << "</text>";
    os << "</g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace psp
