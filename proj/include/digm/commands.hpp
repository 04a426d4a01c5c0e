// The two operations behind the command-line tool, callable in-process.
// Both validate the configuration, run, write output files into the
// configured directory, and return a process exit code:
//   0  success
//   1  configuration error (reported before any solver work starts)
//   2  solver failure mid-run
#pragma once

#include <ostream>

#include "digm/config.hpp"

namespace digm {

// Time-stepping run producing snapshot_<t>.csv files plus interface.svg and
// solute.svg.  Missing T/alpha fall back to the scenario defaults; J and N
// are required; missing snapshot times default to six evenly spaced ones.
int cmd_run(RunConfig config, std::ostream& log, std::ostream& err);

// Refinement study producing eoc.txt and eoc.csv; requires a scenario with a
// closed-form solution and at least two levels.
int cmd_eoc(RunConfig config, std::ostream& log, std::ostream& err);

}  // namespace digm
