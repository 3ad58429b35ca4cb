#ifndef TREEFPP_JSON_IO_HPP
#define TREEFPP_JSON_IO_HPP

#include <json.hpp>

#include "treefpp/branch.hpp"
#include "treefpp/constructions.hpp"
#include "treefpp/oracle.hpp"
#include "treefpp/permset.hpp"
#include "treefpp/solver.hpp"
#include "treefpp/spectrum.hpp"

namespace treefpp {

// Field order is fixed (ordered_json) so identical invocations emit
// byte-identical reports. Exact integers and rationals ride as strings;
// every to_json has a from_json that reproduces the identical record.
using Json = nlohmann::ordered_json;

Json to_json(const Permutation& p);
Permutation permutation_from_json(const Json& j, int degree);

Json to_json(const PermSet& s);
PermSet permset_from_json(const Json& j);

Json to_json(const DerangementProfile& p);
DerangementProfile profile_from_json(const Json& j);

Json to_json(const CharPoly& f);
CharPoly charpoly_from_json(const Json& j);

Json to_json(const BurnsideCheck& b);
BurnsideCheck burnside_from_json(const Json& j);

Json to_json(const FppResult& r);
FppResult fpp_from_json(const Json& j);

Json to_json(const GqpReport& r);
GqpReport gqp_report_from_json(const Json& j);

Json to_json(const GoodCosetFinding& f);
GoodCosetFinding finding_from_json(const Json& j);

Json to_json(const OracleReport& r);
OracleReport oracle_from_json(const Json& j);

Json to_json(const GqpOracleReport& r);
GqpOracleReport gqp_oracle_from_json(const Json& j);

Json to_json(const McEstimate& m);
McEstimate mc_from_json(const Json& j);

Json to_json(const Glnf2Count& c);
Glnf2Count glnf2_from_json(const Json& j);

Json to_json(const Construction1Result& r);
Construction1Result construction1_from_json(const Json& j);

Json to_json(const Construction2Result& r);
Construction2Result construction2_from_json(const Json& j);

Json to_json(const GaloisUnicriticalResult& r);
GaloisUnicriticalResult galois_from_json(const Json& j);

}  // namespace treefpp

#endif
