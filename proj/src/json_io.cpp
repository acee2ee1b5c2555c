#include "zzmod/json_io.hpp"

#include <fstream>
#include <limits>

namespace zzmod {

namespace {

[[noreturn]] void fail(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name))
        fail(std::string("missing field \"") + name + "\"");
    return j.at(name);
}

std::size_t size_field(const Json& j, const char* name) {
    const Json& f = field(j, name);
    if (!f.is_number_unsigned() && !(f.is_number_integer() && f.get<long long>() >= 0))
        fail(std::string("field \"") + name + "\" must be a nonnegative integer");
    return f.get<std::size_t>();
}

} // namespace

Json int_to_json(const Int& v) {
    if (v.fits_slong_p()) {
        const long x = v.get_si();
        if (x >= std::numeric_limits<std::int64_t>::min() &&
            x <= std::numeric_limits<std::int64_t>::max())
            return Json(static_cast<std::int64_t>(x));
    }
    return Json(v.get_str());
}

Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_number_unsigned()) {
        Int v;
        mpz_import(v.get_mpz_t(), 1, 1, sizeof(std::uint64_t), 0, 0,
                   &j.get_ref<const std::uint64_t&>());
        return v;
    }
    if (j.is_string()) {
        Int v;
        if (mpz_set_str(v.get_mpz_t(), j.get<std::string>().c_str(), 10) != 0)
            fail("malformed integer string \"" + j.get<std::string>() + "\"");
        return v;
    }
    fail("expected an integer (number or decimal string)");
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(rows)}};
}

IntMatrix matrix_from_json(const Json& j) {
    const std::size_t rows = size_field(j, "rows"), cols = size_field(j, "cols");
    const Json& data = field(j, "data");
    if (!data.is_array() || data.size() != rows) fail("matrix data has wrong row count");
    IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const Json& row = data[i];
        if (!row.is_array() || row.size() != cols)
            fail("matrix row " + std::to_string(i) + " has wrong length");
        for (std::size_t k = 0; k < cols; ++k) m.at(i, k) = int_from_json(row[k]);
    }
    return m;
}

Json to_json(const ZigzagShape& s) {
    Json dirs = Json::array();
    for (Direction d : s.orientations())
        dirs.push_back(d == Direction::Forward ? "fwd" : "bwd");
    return Json{{"orientations", std::move(dirs)}};
}

ZigzagShape shape_from_json(const Json& j) {
    if (j.is_object() && j.contains("total_order")) {
        const std::size_t n = size_field(j, "total_order");
        if (n < 1) fail("total_order must be >= 1");
        return ZigzagShape(std::vector<Direction>(n - 1, Direction::Forward));
    }
    const Json& dirs = field(j, "orientations");
    if (!dirs.is_array()) fail("orientations must be an array");
    std::vector<Direction> out;
    for (const Json& d : dirs) {
        if (!d.is_string()) fail("orientation entries must be \"fwd\" or \"bwd\"");
        const std::string s = d.get<std::string>();
        if (s == "fwd") out.push_back(Direction::Forward);
        else if (s == "bwd") out.push_back(Direction::Backward);
        else fail("unknown orientation \"" + s + "\"");
    }
    return ZigzagShape(std::move(out));
}

Json to_json(const PersModule& m) {
    Json ranks = Json::array();
    for (std::size_t r : m.ranks) ranks.push_back(r);
    Json edges = Json::array();
    for (const IntMatrix& e : m.edges) edges.push_back(to_json(e));
    return Json{{"shape", to_json(m.shape)}, {"ranks", std::move(ranks)},
                {"edges", std::move(edges)}};
}

PersModule module_from_json(const Json& j) {
    PersModule m;
    m.shape = shape_from_json(field(j, "shape"));
    const Json& ranks = field(j, "ranks");
    if (!ranks.is_array()) fail("ranks must be an array");
    for (const Json& r : ranks) {
        if (!r.is_number_unsigned() && !(r.is_number_integer() && r.get<long long>() >= 0))
            fail("ranks must be nonnegative integers");
        m.ranks.push_back(r.get<std::size_t>());
    }
    const Json& edges = field(j, "edges");
    if (!edges.is_array()) fail("edges must be an array");
    for (const Json& e : edges) m.edges.push_back(matrix_from_json(e));
    ValidationReport rep = validate(m);
    if (!rep.ok) {
        std::string msg = "module dimensions inconsistent:";
        for (const auto& is : rep.issues) msg += " " + is.to_string() + ";";
        fail(msg);
    }
    return m;
}

Json to_json(const Submodule& s) {
    Json gens = Json::array();
    for (const IntMatrix& g : s.gens) gens.push_back(to_json(g));
    return Json{{"gens", std::move(gens)}};
}

Submodule submodule_from_json(const Json& j) {
    Submodule s;
    const Json& gens = field(j, "gens");
    if (!gens.is_array()) fail("gens must be an array");
    for (const Json& g : gens) s.gens.push_back(matrix_from_json(g));
    return s;
}

Json to_json(const Decomposition& d) {
    Json bars = Json::array();
    for (const Submodule& s : d.summands) {
        auto sup = support_of(s);
        if (!sup) continue;
        bars.push_back(Json{{"lo", sup->lo}, {"hi", sup->hi},
                            {"rank", s.gens[static_cast<std::size_t>(sup->lo - 1)].cols()}});
    }
    Json summands = Json::array();
    for (const Submodule& s : d.summands) summands.push_back(to_json(s));
    return Json{{"bars", std::move(bars)}, {"summands", std::move(summands)}};
}

Decomposition decomposition_from_json(const Json& j) {
    Decomposition d;
    const Json& summands = field(j, "summands");
    if (!summands.is_array()) fail("summands must be an array");
    for (const Json& s : summands) d.summands.push_back(submodule_from_json(s));
    return d;
}

Json to_json(const Barcode& b) {
    Json bars = Json::array();
    for (const Bar& bar : b.bars)
        bars.push_back(Json{{"lo", bar.iv.lo}, {"hi", bar.iv.hi}, {"rank", bar.rank}});
    return Json{{"bars", std::move(bars)}};
}

Barcode barcode_from_json(const Json& j) {
    Barcode b;
    const Json& bars = field(j, "bars");
    if (!bars.is_array()) fail("bars must be an array");
    for (const Json& bar : bars)
        b.bars.push_back({{static_cast<int>(size_field(bar, "lo")),
                           static_cast<int>(size_field(bar, "hi"))},
                          size_field(bar, "rank")});
    return b;
}

namespace {

Json condition_to_json(const ConditionResult& c) {
    if (c.pass()) return Json("pass");
    Json torsion = Json::array();
    for (const Int& t : c.invariants.torsion_factors) torsion.push_back(int_to_json(t));
    return Json{{"fail", Json{{"torsion", std::move(torsion)}}}};
}

} // namespace

Json to_json(const PairReport& p) {
    return Json{{"x", p.x},           {"y", p.y},
                {"C1", condition_to_json(p.c1)}, {"C2", condition_to_json(p.c2)},
                {"C3", condition_to_json(p.c3)}, {"C4", condition_to_json(p.c4)}};
}

Json to_json(const PccReport& r) {
    Json pairs = Json::array();
    for (const PairReport& p : r.pairs) pairs.push_back(to_json(p));
    return Json{{"overall", r.overall ? "pass" : "fail"}, {"pairs", std::move(pairs)}};
}

Json to_json(const VerifyReport& r) {
    Json failures = Json::array();
    for (const VerifyFailure& f : r.failures) {
        Json e{{"reason", to_string(f.kind)}, {"witness", to_json(f.witness)}};
        if (f.vertex) e["vertex"] = *f.vertex;
        if (f.summand) e["summand"] = *f.summand;
        failures.push_back(std::move(e));
    }
    return Json{{"ok", r.ok}, {"failures", std::move(failures)}};
}

Json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        fail(path + ": " + e.what());
    }
    return j;
}

PersModule load_module(const std::string& path) {
    try {
        return module_from_json(load_json(path));
    } catch (const Json::exception& e) {
        fail(path + ": " + e.what());
    }
}

Decomposition load_decomposition(const std::string& path) {
    try {
        return decomposition_from_json(load_json(path));
    } catch (const Json::exception& e) {
        fail(path + ": " + e.what());
    }
}

void save_json(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) fail("cannot write " + path);
    out << j.dump(2) << "\n";
}

} // namespace zzmod
