#ifndef RANKBARRIERS_IO_HPP
#define RANKBARRIERS_IO_HPP

#include "json.hpp"
#include "rankbarriers/barriers.hpp"
#include "rankbarriers/border.hpp"
#include "rankbarriers/elusive.hpp"
#include "rankbarriers/methods.hpp"
#include "rankbarriers/series.hpp"

namespace rankbarriers {

// Insertion-ordered JSON keeps emitted key order deterministic.
using Json = nlohmann::ordered_json;

// Parse text; malformed input raises ValidationError (not a library throw).
Json parse_json(const std::string& text);

// Scalars travel as strings ("p/q", or "p" when the denominator is 1) so no
// precision is lost; integer JSON numbers are accepted on input.
Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const Matrix<Rational>& m);
Matrix<Rational> matrix_from_json(const Json& j);

Json tensor_to_json(const Tensor<Rational>& t);
Tensor<Rational> tensor_from_json(const Json& j);

Json homog_poly_to_json(const HomogPoly<Rational>& f);
HomogPoly<Rational> homog_poly_from_json(const Json& j);

Json space_to_json(const SpaceDescriptor& s);
SpaceDescriptor space_from_json(const Json& j);

Json method_to_json(const RankMethod& m);
RankMethod method_from_json(const Json& j);

Json eps_poly_to_json(const EpsPoly& p);
EpsPoly eps_poly_from_json(const Json& j);

Json eps_tensor_to_json(const EpsTensor& t);
EpsTensor eps_tensor_from_json(const Json& j);

Json witness_to_json(const DegenerationWitness& w);
DegenerationWitness witness_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

Json polymap_to_json(const PolyMap& m);
PolyMap polymap_from_json(const Json& j);

Json multi_series_to_json(const MultiSeries& s);
MultiSeries multi_series_from_json(const Json& j);

Json bound_report_to_json(const BoundReport& r);

Json certificate_to_json(const RankCertificate& c);

Json cover_assignment_to_json(const CoverAssignment& a);

} // namespace rankbarriers

#endif
