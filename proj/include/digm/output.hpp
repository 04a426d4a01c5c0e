// File emitters: snapshot CSVs (full double precision, round-trip safe) and
// minimal standalone SVG figures of the interface and the solute profiles.
#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "digm/fields.hpp"
#include "digm/scenario.hpp"

namespace digm {

struct Snapshot {
  double time = 0.0;
  NodalVectorField curve;
  NodalScalarField solute;
};

// Shortest decimal form that parses back to the identical double.
std::string format_double(double v);

// Columns rho,x0,x1,w; one row per node.
void write_snapshot_csv(std::ostream& out, const NodalVectorField& x,
                        const NodalScalarField& w);

// One polyline per snapshot; wall polylines (if any) are drawn as paths.
void write_interface_svg(std::ostream& out, const std::vector<Snapshot>& snapshots,
                         const WallSampler& walls);

// Solute profiles w over rho, one polyline per snapshot.
void write_solute_svg(std::ostream& out, const std::vector<Snapshot>& snapshots);

}  // namespace digm
