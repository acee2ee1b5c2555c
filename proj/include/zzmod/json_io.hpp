#pragma once

#include <string>

#include <json.hpp>

#include "zzmod/colimit_pcc.hpp"
#include "zzmod/decomposer.hpp"
#include "zzmod/verifier.hpp"

namespace zzmod {

struct ParseError : Error {
    using Error::Error;
};

using Json = nlohmann::json;

// Integers ride as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that; the reader accepts both.
Json int_to_json(const Int& v);
Int int_from_json(const Json& j);

Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

Json to_json(const ZigzagShape& s);
ZigzagShape shape_from_json(const Json& j);

Json to_json(const PersModule& m);
PersModule module_from_json(const Json& j);

Json to_json(const Submodule& s);
Submodule submodule_from_json(const Json& j);

Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

Json to_json(const Barcode& b);
Barcode barcode_from_json(const Json& j);

Json to_json(const PairReport& p);
Json to_json(const PccReport& r);

Json to_json(const VerifyReport& r);

PersModule load_module(const std::string& path);
Decomposition load_decomposition(const std::string& path);
Json load_json(const std::string& path);
void save_json(const std::string& path, const Json& j);

} // namespace zzmod
