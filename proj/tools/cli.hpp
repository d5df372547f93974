#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "splitplane/curve.hpp"

namespace splitplane::cli {

/// Runs one command line (program name excluded). Exit status: 0 success,
/// 1 domain/math error, 2 usage or syntax error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Contour grammar: circle:ct,cx,r | segment:t0,x0,t1,x1 |
/// gamma1:h0_t,h0_x,psi_max,r_inner,r_outer | polygon:t0,x0,t1,x1,...
Contour parse_contour(const std::string& spec, int panels);

/// Panel count: the SPLITPLANE_PANELS environment variable when set, else fallback.
int default_panels(int fallback);

}  // namespace splitplane::cli
