#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "psp/core.hpp"
#include "psp/formulas.hpp"
#include "psp/search.hpp"
#include "psp/stride.hpp"
#include "psp/threads.hpp"

namespace psp {

using Json = nlohmann::ordered_json;

// Everything the explorer needs for one (basis, n): classification when it
// exists, and thread geometry either way.
struct Analysis {
  Basis basis;
  i64 n = 0;
  i64 p = 0;  // classified order, or the largest minimal order seen when not an SG
  std::optional<StrideGenerator> sg;
  ThreadDiagram diagram;
  std::optional<Signature> sig;
  std::optional<i64> s;
};

// Window defaults to 0..2*a3-1 so the break stride is visible.
Analysis analyze(const Basis& b, i64 n, std::optional<i64> s = std::nullopt,
                 std::optional<i64> lo = std::nullopt, std::optional<i64> hi = std::nullopt);

Json analysis_json(const Analysis& a);
Json breaks_json(const StrideGenerator& sg);
Json threads_json(const ThreadDiagram& d);
Json cover_json(const Basis& b, i64 s, const CoverResult& c, const std::optional<Underlying>& u);
Json osg_json(const OsgRow& r);
Json mopt_json(const MoptRow& m);
Json maximal_set_json(const MaximalSet& m);
Json scan_json(const ScanResult& r);
Json m3_json(const M3Result& r);
Json best_osg_json(const BestOsg& b);
Json key1p_json(const Key1pResult& k);
Json report_json(const SearchReport& r);

std::string sg_text(const StrideGenerator& sg);
std::string diagram_text(const ThreadDiagram& d);

struct SvgStyle {
  int scale = 6;
  int row_height = 18;
};
std::string diagram_svg(const ThreadDiagram& d, const SvgStyle& style = {});

}  // namespace psp
