#pragma once

#include "polarkit/core_algebra.hpp"
#include "polarkit/covering.hpp"
#include "polarkit/decomp.hpp"
#include "polarkit/isotropic.hpp"
#include "polarkit/jones.hpp"
#include "polarkit/stokes.hpp"

#include <json.hpp>

#include <iosfwd>
#include <vector>

namespace polarkit {

using Json = nlohmann::json;

// Complex values serialize as [re, im]; complex matrices as 4x4 arrays
// of such pairs, real matrices as 4x4 arrays of numbers, Stokes vectors
// as flat 4-arrays.

Json to_json(const Complex& z);
Json to_json(const Matrix4C& m);
Json to_json(const Matrix4R& m);
Json to_json(const SpinorMatrix& m);
Json to_json(const SpinorParams& k);
Json to_json(const QuadParam& q);
Json to_json(const StokesVector& s);
Json to_json(const IsotropicStokes& z);
Json to_json(const JonesSpinor& psi);
Json to_json(const JonesBiSpinor& b);
Json to_json(const PolarDecomposition& d);

Complex complex_from_json(const Json& j);
Matrix4C matrix4c_from_json(const Json& j);
Matrix4R matrix4r_from_json(const Json& j);
SpinorParams spinor_params_from_json(const Json& j);
QuadParam quad_from_json(const Json& j);
StokesVector stokes_from_json(const Json& j);
/// Accepts [[re,im],[re,im]] or {"amplitude_phase": [N, M, alpha, beta]}.
JonesSpinor jones_from_json(const Json& j);
/// Accepts {"xi": spinor, "eta": spinor} or
/// {"amplitude_phase": [N1, N2, n1, n2, M1, M2, m1, m2]}.
JonesBiSpinor bispinor_from_json(const Json& j);

/// One Stokes 4-vector per CSV row (4 comma-separated reals, '#' comments).
std::vector<StokesVector> read_stokes_csv(std::istream& in);
/// One (S, S') pair per CSV row (8 comma-separated reals).
std::vector<std::pair<StokesVector, StokesVector>> read_stokes_pairs_csv(std::istream& in);

/// Serializes a document with all numbers printed at 17 significant
/// digits, independent of locale.
std::string dump_json(const Json& j, int indent = 2);

} // namespace polarkit
