//  Copyright 2026 The obsfn Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef OBSFN_IO_HPP_
#define OBSFN_IO_HPP_

#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "obsfn/lattice.hpp"
#include "obsfn/matrix.hpp"
#include "obsfn/reconstruction.hpp"
#include "obsfn/report.hpp"
#include "obsfn/spectral_family.hpp"
#include "obsfn/stone.hpp"
#include "obsfn/structure.hpp"
#include "obsfn/table.hpp"

// JSON schemas:
//   lattice   {"elements": [name...], "leq": [[i, j]...], "ortho": [j0, j1...]}
//   family    {"jumps": [{"lambda": x, "element": i}...]}
//   table     {"values": [{"element": i, "f": x}...]}
//   quasipoint data {"values": [{"atom": i, "f": x}...]}
//   matrix    {"n": n, "re": [[...]...], "im": [[...]...]}  ("im" optional)
//   ray       {"re": [...], "im": [...]}                    ("im" optional)
// Every parse failure throws InputError.

namespace obsfn {

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

RawLattice parse_lattice(const std::string& json);
/// Cover pairs only; reloading applies the closure again.
std::string dump_lattice(const Lattice& l);

SpectralFamily parse_family(const std::string& json, LatticePtr lattice);
std::string dump_family(const SpectralFamily& e);

ObservableTable parse_table(const std::string& json, LatticePtr lattice);
std::string dump_table(const ObservableTable& f);

QuasipointFn parse_quasipoint_data(const std::string& json, const Lattice& lattice);
std::string dump_quasipoint_data(const QuasipointFn& f);

CMatrix parse_matrix(const std::string& json);
std::string dump_matrix(const CMatrix& m);
CVector parse_ray(const std::string& json);

std::string dump_report(const Report& r);
std::string dump_reports(const std::vector<Report>& reports);
std::string dump_structure(const StructureReport& s, const Lattice* names = nullptr);
/// Dual ideals as arrays of member indices.
std::string dump_ideals(const Lattice& l, const std::vector<DualIdeal>& ideals);

/// CSV with header ray_id,f,g,expectation.
std::string ray_table_csv(const std::vector<RayReading>& readings);
/// CSV with header atom,re,im.
std::string gelfand_csv(const Lattice& l, const std::vector<Quasipoint>& qs,
                        const std::vector<std::complex<double>>& values);
/// CSV with header lambda,rank: each jump as (threshold, rank of the value).
std::string step_plot_csv(const SpectralFamily& e);

}  // namespace obsfn

#endif  // OBSFN_IO_HPP_
