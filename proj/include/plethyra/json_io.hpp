#pragma once

#include <json.hpp>

#include "plethyra/character.hpp"
#include "plethyra/equivariant.hpp"
#include "plethyra/genfun.hpp"
#include "plethyra/laurent.hpp"
#include "plethyra/oracle.hpp"
#include "plethyra/partition.hpp"
#include "plethyra/series.hpp"
#include "plethyra/symfunc.hpp"

namespace plethyra {

using Json = nlohmann::json;

// Rationals serialize as strings "a/b" (b > 0, gcd 1) or plain integers
// "a"; parsing also accepts JSON integers.
Json rat_to_json(const Rat& q);
Rat rat_from_json(const Json& j);
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const Partition& p);            // [2,1]
Partition partition_from_json(const Json& j);

Json to_json(const LaurentPoly& p);          // {"vars":[...],"terms":[{"exp":[...],"coeff":"1"}]}
LaurentPoly laurent_from_json(const Json& j);

Json to_json(const SymFunc& f);              // {"terms":[{"partition":[...],"coeff":{...}}]}
SymFunc symfunc_from_json(const Json& j);

Json to_json(const TruncatedSeries& s);      // {"max_degree":N,"coeffs":[...]}
TruncatedSeries series_from_json(const Json& j);

Json to_json(const ClassFunction& v);        // {"n":3,"values":[{"class":[2,1],"value":"0"}]}
ClassFunction class_function_from_json(const Json& j);

Json to_json(const SubgroupProfile& k);      // {"n":3,"order":"3","counts":[{"class":[...],"count":"1"}]}
SubgroupProfile subgroup_profile_from_json(const Json& j);

// {"name":"P1","poly":{...}} or with "betti": {"0":1,"2":1} / "hodge": [[p,q,k,dim],...]
Json to_json(const SpaceDescriptor& x);
SpaceDescriptor space_from_json(const Json& j);

// Betti shorthand on its own: {"0":1,"2":1}.
LaurentPoly betti_from_json(const Json& j);
LaurentPoly hodge_from_json(const Json& j);

Json to_json(const GradedEndomorphism& g);   // {"blocks":[{"degree":0,"matrix":[["1"]]}]}
GradedEndomorphism endo_from_json(const Json& j);

Json to_json(const FiniteGroupData& g);
FiniteGroupData group_from_json(const Json& j);

Json to_json(const RootOfUnityElement& x);   // {"terms":[{"root":"1/3","mult":"2"}]}
RootOfUnityElement root_of_unity_from_json(const Json& j);

}  // namespace plethyra
