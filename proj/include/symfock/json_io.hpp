// JSON encodings of the data types. Scalars are strings ("3/4",
// "(1 - q^2)/(1 - t)"); readers report the offending field on error.
#pragma once

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "symfock/bosonfermion.hpp"
#include "symfock/gauss.hpp"
#include "symfock/symplectic.hpp"

namespace symfock {

using Json = nlohmann::json;

struct JsonFormatError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, const std::string& field);

Json matrix_to_json(const Matrix<Scalar>& m);
Matrix<Scalar> matrix_from_json(const Json& j, const std::string& field);
Json vector_to_json(const std::vector<Scalar>& v);
std::vector<Scalar> vector_from_json(const Json& j, const std::string& field);

Partition partition_from_json(const Json& j, const std::string& field);
Json maya_to_json(const MayaIndex& k);
MayaIndex maya_from_json(const Json& j, const std::string& field);

Json symfun_to_json(const SymFun& f);
SymFun symfun_from_json(const Json& j);

// {"basis_x":"p","basis_y":"p","dx":..,"dy":..,"terms":[{"x":[..],"y":[..],"coeff":".."}]}
Json kernel_to_json(const BisymKernel& K);
BisymKernel kernel_from_json(const Json& j);

Json gauss_to_json(const GaussParams& S);
GaussParams gauss_from_json(const Json& j);

// {"dim_v":..,"dim_w":..,"span":[[..], ..]}
Json relation_to_json(const LinearRelation& P);
LinearRelation relation_from_json(const Json& j);

// {"cutoff":E,"terms":[{"maya":[..],"coeff":".."}]}; a bare term list is also
// accepted, with the cutoff supplied by the caller.
Json wedge_to_json(const WedgeVector& v);
WedgeVector wedge_from_json(const Json& j, int default_cutoff = -1);

Json gl_to_json(const GLElement& H);
GLElement gl_from_json(const Json& j);

// {"A":[[..]],"B":[[..]],"band":[..]} with any of the keys optional.
Json decomposable_to_json(const DecomposableParams& p);
DecomposableParams decomposable_from_json(const Json& j);

Json read_json_file(const std::string& path);  // "-" reads stdin

}  // namespace symfock
