#ifndef PCOHO_IO_HPP
#define PCOHO_IO_HPP

#include <array>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "deformation.hpp"
#include "extension.hpp"
#include "operators.hpp"

namespace pcoho::io
{

using Json = nlohmann::ordered_json;

inline constexpr const char *kSchemaVersion = "1";

enum class DocKind
{
    Algebra,
    Representation,
    Map,
    Extension,
    ProtoTwilled,
    OperatorSpec,
    Deformation,
    CochainPair
};

inline constexpr std::array<std::pair<DocKind, const char *>, 8> kDocKinds{{
    {DocKind::Algebra, "algebra"},
    {DocKind::Representation, "representation"},
    {DocKind::Map, "map"},
    {DocKind::Extension, "extension"},
    {DocKind::ProtoTwilled, "prototwilled"},
    {DocKind::OperatorSpec, "operator-spec"},
    {DocKind::Deformation, "deformation"},
    {DocKind::CochainPair, "cochain-pair"},
}};

inline std::string to_string(DocKind k)
{
    for (const auto &[kind, name] : kDocKinds)
        if (kind == k)
            return name;
    return "?";
}

inline DocKind parse_doc_kind(const std::string &s)
{
    for (const auto &[kind, name] : kDocKinds)
        if (s == name)
            return kind;
    throw ParseError("unknown document kind '" + s + "'");
}

// (h, H), (beta, alpha) or (dV, dP); dimensions are kept so empty spaces
// survive a round trip.
enum class PairRole
{
    Cocycle,
    Automorphism,
    Derivation
};

struct CochainPairDoc
{
    PairRole role = PairRole::Cocycle;
    std::size_t algebra_dim = 0, module_dim = 0;
    CocyclePair cocycle;
    Matrix on_module, on_algebra; // beta / dV and alpha / dP

    AutPair aut() const { return {on_module, on_algebra}; }
    DerPair der() const { return {on_module, on_algebra}; }
};

inline std::string to_string(PairRole r)
{
    switch (r)
    {
    case PairRole::Cocycle: return "cocycle";
    case PairRole::Automorphism: return "automorphism";
    case PairRole::Derivation: return "derivation";
    }
    return "?";
}

using Payload = std::variant<PoissonAlgebra, Representation, Matrix, AbelianExtension, ProtoTwilled, OperatorSpec,
                             FormalDeformation, CochainPairDoc>;

struct Document
{
    DocKind kind = DocKind::Algebra;
    Payload payload;
    std::vector<std::string> warnings; // unknown fields seen in lenient mode

    template <class T> const T &as() const
    {
        if (const T *p = std::get_if<T>(&payload))
            return *p;
        throw StructuralError("document of kind '" + to_string(kind) + "' has the wrong payload type");
    }
};

struct ParseOptions
{
    bool lenient = false;
};

// ---- reading ----

namespace detail
{
class Reader
{
public:
    explicit Reader(ParseOptions opts) : opts_(opts) {}

    std::vector<std::string> warnings;

    // Rejects (or, leniently, records) keys outside the allowed set.
    void expect_keys(const Json &j, const std::string &path, std::initializer_list<const char *> allowed)
    {
        if (!j.is_object())
            fail(path, "expected an object");
        for (auto it = j.begin(); it != j.end(); ++it)
        {
            bool known = false;
            for (const char *a : allowed)
                known = known || it.key() == a;
            if (known)
                continue;
            std::string msg = path + "." + it.key() + ": unknown field";
            if (!opts_.lenient)
                throw ParseError(msg);
            warnings.push_back(msg);
        }
    }

    [[noreturn]] static void fail(const std::string &path, const std::string &what)
    {
        throw ParseError(path + ": " + what);
    }

    static const Json &field(const Json &j, const std::string &path, const char *key)
    {
        auto it = j.find(key);
        if (it == j.end())
            fail(path, std::string("missing field '") + key + "'");
        return *it;
    }

    static std::size_t dim(const Json &j, const std::string &path, const char *key)
    {
        const Json &v = field(j, path, key);
        if (!v.is_number_unsigned())
            fail(path + "." + key, "expected a non-negative integer");
        auto n = v.get<std::size_t>();
        if (n > kMaxAlgebraDim)
            throw CapacityError(path + "." + key + ": dimension " + std::to_string(n) + " exceeds " +
                                std::to_string(kMaxAlgebraDim));
        return n;
    }

    static std::string text(const Json &j, const std::string &path, const char *key)
    {
        const Json &v = field(j, path, key);
        if (!v.is_string())
            fail(path + "." + key, "expected a string");
        return v.get<std::string>();
    }

    // Rationals are strings "p" or "p/q"; plain JSON integers are accepted too.
    static Scalar scalar(const Json &j, const std::string &path)
    {
        if (j.is_string())
        {
            try
            {
                return parse_scalar(j.get<std::string>());
            }
            catch (const ParseError &e)
            {
                fail(path, e.what());
            }
        }
        if (j.is_number_integer())
            return Scalar(j.dump(), 10);
        fail(path, "expected a rational string");
    }

    static const Json &array_of(const Json &j, const std::string &path, std::size_t n)
    {
        if (!j.is_array())
            fail(path, "expected an array");
        if (j.size() != n)
            fail(path, "expected " + std::to_string(n) + " entries, found " + std::to_string(j.size()));
        return j;
    }

    static Matrix matrix(const Json &j, const std::string &path, std::size_t rows, std::size_t cols)
    {
        array_of(j, path, rows);
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i)
        {
            std::string p = path + "[" + std::to_string(i) + "]";
            array_of(j[i], p, cols);
            for (std::size_t k = 0; k < cols; ++k)
                m(i, k) = scalar(j[i][k], p + "[" + std::to_string(k) + "]");
        }
        return m;
    }

    static Bilinear tensor(const Json &j, const std::string &path, std::size_t a, std::size_t b, std::size_t c)
    {
        array_of(j, path, a);
        Bilinear t(a, b, c);
        for (std::size_t x = 0; x < a; ++x)
        {
            Matrix slice = matrix(j[x], path + "[" + std::to_string(x) + "]", b, c);
            for (std::size_t y = 0; y < b; ++y)
                for (std::size_t z = 0; z < c; ++z)
                    t(x, y, z) = slice(y, z);
        }
        return t;
    }

    static MatrixFamily family(const Json &j, const std::string &path, std::size_t count, std::size_t d)
    {
        array_of(j, path, count);
        MatrixFamily f;
        for (std::size_t x = 0; x < count; ++x)
            f.push_back(matrix(j[x], path + "[" + std::to_string(x) + "]", d, d));
        return f;
    }

    PoissonAlgebra algebra(const Json &j, const std::string &path)
    {
        expect_keys(j, path, {"dim", "labels", "product", "bracket"});
        const std::size_t n = dim(j, path, "dim");
        PoissonAlgebra p(tensor(field(j, path, "product"), path + ".product", n, n, n),
                         tensor(field(j, path, "bracket"), path + ".bracket", n, n, n));
        p.dim = n;
        if (auto it = j.find("labels"); it != j.end())
        {
            array_of(*it, path + ".labels", n);
            for (const auto &l : *it)
            {
                if (!l.is_string())
                    fail(path + ".labels", "expected strings");
                p.labels.push_back(l.get<std::string>());
            }
        }
        return p;
    }

    Representation representation(const Json &j, const std::string &path)
    {
        expect_keys(j, path, {"algebraDim", "dim", "mu", "rho"});
        const std::size_t n = dim(j, path, "algebraDim"), v = dim(j, path, "dim");
        return Representation(v, family(field(j, path, "mu"), path + ".mu", n, v),
                              family(field(j, path, "rho"), path + ".rho", n, v));
    }

    Matrix map(const Json &j, const std::string &path)
    {
        expect_keys(j, path, {"rows", "cols", "entries"});
        return matrix(field(j, path, "entries"), path + ".entries", dim(j, path, "rows"), dim(j, path, "cols"));
    }

    AbelianExtension extension(const Json &j, const std::string &path)
    {
        expect_keys(j, path, {"base", "module", "total", "inclusion", "projection"});
        AbelianExtension x;
        x.P = algebra(field(j, path, "base"), path + ".base");
        x.V = representation(field(j, path, "module"), path + ".module");
        x.E = algebra(field(j, path, "total"), path + ".total");
        if (x.V.mu.size() != x.P.dim)
            fail(path + ".module", "module is over an algebra of a different dimension");
        x.i = matrix(field(j, path, "inclusion"), path + ".inclusion", x.E.dim, x.V.dim);
        x.p = matrix(field(j, path, "projection"), path + ".projection", x.P.dim, x.E.dim);
        return x;
    }

    ProtoTwilled prototwilled(const Json &j, const std::string &path)
    {
        expect_keys(j, path,
                    {"n1", "n2", "dot1", "dot2", "mu", "nu", "h", "theta", "br1", "br2", "rho", "psi", "H", "Theta"});
        const std::size_t a = dim(j, path, "n1"), b = dim(j, path, "n2");
        if (a + b > kMaxAlgebraDim)
            throw CapacityError(path + ": total dimension exceeds " + std::to_string(kMaxAlgebraDim));
        ProtoTwilled pt(a, b);
        auto T = [&](const char *k, std::size_t x, std::size_t y, std::size_t z) {
            return tensor(field(j, path, k), path + "." + k, x, y, z);
        };
        auto F = [&](const char *k, std::size_t c, std::size_t d) {
            return family(field(j, path, k), path + "." + k, c, d);
        };
        pt.dot1 = T("dot1", a, a, a);
        pt.dot2 = T("dot2", b, b, b);
        pt.mu = F("mu", a, b);
        pt.nu = F("nu", b, a);
        pt.h = T("h", a, a, b);
        pt.theta = T("theta", b, b, a);
        pt.br1 = T("br1", a, a, a);
        pt.br2 = T("br2", b, b, b);
        pt.rho = F("rho", a, b);
        pt.psi = F("psi", b, a);
        pt.Hh = T("H", a, a, b);
        pt.Theta = T("Theta", b, b, a);
        return pt;
    }

    ActionData action(const Json &j, const std::string &path)
    {
        expect_keys(j, path, {"acting", "acted", "mu", "rho"});
        ActionData d;
        d.acting = algebra(field(j, path, "acting"), path + ".acting");
        d.acted = algebra(field(j, path, "acted"), path + ".acted");
        d.mu = family(field(j, path, "mu"), path + ".mu", d.acting.dim, d.acted.dim);
        d.rho = family(field(j, path, "rho"), path + ".rho", d.acting.dim, d.acted.dim);
        return d;
    }

    OperatorSpec operator_spec(const Json &j, const std::string &path)
    {
        expect_keys(j, path, {"kind", "algebra", "target", "representation", "action", "cocycle"});
        OperatorSpec s;
        try
        {
            s.kind = parse_operator_kind(text(j, path, "kind"));
        }
        catch (const ParseError &e)
        {
            fail(path + ".kind", e.what());
        }
        s.algebra = algebra(field(j, path, "algebra"), path + ".algebra");
        if (auto it = j.find("target"); it != j.end())
            s.target = algebra(*it, path + ".target");
        if (auto it = j.find("representation"); it != j.end())
        {
            s.rep = representation(*it, path + ".representation");
            if (s.rep->mu.size() != s.algebra.dim)
                fail(path + ".representation", "representation is over an algebra of a different dimension");
        }
        if (auto it = j.find("action"); it != j.end())
            s.action = action(*it, path + ".action");
        if (auto it = j.find("cocycle"); it != j.end())
        {
            if (!s.rep)
                fail(path + ".cocycle", "a cocycle needs the representation it takes values in");
            const std::string p = path + ".cocycle";
            expect_keys(*it, p, {"h", "H"});
            const std::size_t n = s.algebra.dim, v = s.rep->dim;
            s.cocycle = CocyclePair{tensor(field(*it, p, "h"), p + ".h", n, n, v),
                                    tensor(field(*it, p, "H"), p + ".H", n, n, v)};
        }
        return s;
    }

    FormalDeformation deformation(const Json &j, const std::string &path)
    {
        expect_keys(j, path, {"order", "rows", "cols", "terms"});
        const std::size_t rows = dim(j, path, "rows"), cols = dim(j, path, "cols");
        const Json &order = field(j, path, "order");
        if (!order.is_number_unsigned())
            fail(path + ".order", "expected a non-negative integer");
        const std::size_t N = order.get<std::size_t>();
        const Json &terms = array_of(field(j, path, "terms"), path + ".terms", N + 1);
        FormalDeformation d;
        for (std::size_t i = 0; i <= N; ++i)
            d.terms.push_back(matrix(terms[i], path + ".terms[" + std::to_string(i) + "]", rows, cols));
        return d;
    }

    CochainPairDoc cochain_pair(const Json &j, const std::string &path)
    {
        expect_keys(j, path, {"role", "algebraDim", "moduleDim", "h", "H", "beta", "alpha", "dV", "dP"});
        CochainPairDoc c;
        const std::string role = text(j, path, "role");
        c.algebra_dim = dim(j, path, "algebraDim");
        c.module_dim = dim(j, path, "moduleDim");
        const std::size_t n = c.algebra_dim, v = c.module_dim;
        auto forbid = [&](std::initializer_list<const char *> keys) {
            for (const char *k : keys)
                if (j.contains(k))
                    fail(path + "." + k, "field does not belong to role '" + role + "'");
        };
        if (role == "cocycle")
        {
            forbid({"beta", "alpha", "dV", "dP"});
            c.role = PairRole::Cocycle;
            c.cocycle = {tensor(field(j, path, "h"), path + ".h", n, n, v),
                         tensor(field(j, path, "H"), path + ".H", n, n, v)};
        }
        else if (role == "automorphism")
        {
            forbid({"h", "H", "dV", "dP"});
            c.role = PairRole::Automorphism;
            c.on_module = matrix(field(j, path, "beta"), path + ".beta", v, v);
            c.on_algebra = matrix(field(j, path, "alpha"), path + ".alpha", n, n);
        }
        else if (role == "derivation")
        {
            forbid({"h", "H", "beta", "alpha"});
            c.role = PairRole::Derivation;
            c.on_module = matrix(field(j, path, "dV"), path + ".dV", v, v);
            c.on_algebra = matrix(field(j, path, "dP"), path + ".dP", n, n);
        }
        else
            fail(path + ".role", "unknown role '" + role + "'");
        return c;
    }

private:
    ParseOptions opts_;
};
} // namespace detail

inline Document parse_json(const Json &j, ParseOptions opts = {})
{
    detail::Reader rd(opts);
    rd.expect_keys(j, "$", {"schemaVersion", "kind", "payload"});
    const std::string version = detail::Reader::text(j, "$", "schemaVersion");
    if (version != kSchemaVersion)
        throw ParseError("$.schemaVersion: unsupported version '" + version + "'");
    Document d;
    d.kind = parse_doc_kind(detail::Reader::text(j, "$", "kind"));
    const Json &p = detail::Reader::field(j, "$", "payload");
    const std::string path = "$.payload";
    switch (d.kind)
    {
    case DocKind::Algebra: d.payload = rd.algebra(p, path); break;
    case DocKind::Representation: d.payload = rd.representation(p, path); break;
    case DocKind::Map: d.payload = rd.map(p, path); break;
    case DocKind::Extension: d.payload = rd.extension(p, path); break;
    case DocKind::ProtoTwilled: d.payload = rd.prototwilled(p, path); break;
    case DocKind::OperatorSpec: d.payload = rd.operator_spec(p, path); break;
    case DocKind::Deformation: d.payload = rd.deformation(p, path); break;
    case DocKind::CochainPair: d.payload = rd.cochain_pair(p, path); break;
    }
    d.warnings = std::move(rd.warnings);
    return d;
}

inline Document parse(const std::string &bytes, ParseOptions opts = {})
{
    Json j;
    try
    {
        j = Json::parse(bytes);
    }
    catch (const Json::parse_error &e)
    {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return parse_json(j, opts);
}

inline std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline Document parse_file(const std::string &path, ParseOptions opts = {})
{
    try
    {
        return parse(read_file(path), opts);
    }
    catch (const ParseError &e)
    {
        throw ParseError(path + ": " + e.what());
    }
}

// ---- writing ----

inline Json scalar_json(const Scalar &q)
{
    Scalar c = q;
    c.canonicalize();
    return c.get_str();
}

inline Json vec_json(const Vec &v)
{
    Json a = Json::array();
    for (const auto &x : v)
        a.push_back(scalar_json(x));
    return a;
}

inline Json matrix_json(const Matrix &m)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i)
        a.push_back(vec_json(m.row(i)));
    return a;
}

inline Json tensor_json(const Bilinear &t)
{
    Json a = Json::array();
    for (std::size_t x = 0; x < t.left(); ++x)
    {
        Json s = Json::array();
        for (std::size_t y = 0; y < t.right(); ++y)
            s.push_back(vec_json(t.on_basis(x, y)));
        a.push_back(std::move(s));
    }
    return a;
}

inline Json family_json(const MatrixFamily &f)
{
    Json a = Json::array();
    for (const auto &m : f)
        a.push_back(matrix_json(m));
    return a;
}

inline Json algebra_json(const PoissonAlgebra &p)
{
    Json j;
    j["dim"] = p.dim;
    if (!p.labels.empty())
        j["labels"] = p.labels;
    j["product"] = tensor_json(p.mult);
    j["bracket"] = tensor_json(p.bracket);
    return j;
}

inline Json representation_json(const Representation &v)
{
    Json j;
    j["algebraDim"] = v.mu.size();
    j["dim"] = v.dim;
    j["mu"] = family_json(v.mu);
    j["rho"] = family_json(v.rho);
    return j;
}

inline Json map_json(const Matrix &m)
{
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = matrix_json(m);
    return j;
}

inline Json extension_json(const AbelianExtension &x)
{
    Json j;
    j["base"] = algebra_json(x.P);
    j["module"] = representation_json(x.V);
    j["total"] = algebra_json(x.E);
    j["inclusion"] = matrix_json(x.i);
    j["projection"] = matrix_json(x.p);
    return j;
}

inline Json prototwilled_json(const ProtoTwilled &pt)
{
    Json j;
    j["n1"] = pt.n1;
    j["n2"] = pt.n2;
    j["dot1"] = tensor_json(pt.dot1);
    j["dot2"] = tensor_json(pt.dot2);
    j["mu"] = family_json(pt.mu);
    j["nu"] = family_json(pt.nu);
    j["h"] = tensor_json(pt.h);
    j["theta"] = tensor_json(pt.theta);
    j["br1"] = tensor_json(pt.br1);
    j["br2"] = tensor_json(pt.br2);
    j["rho"] = family_json(pt.rho);
    j["psi"] = family_json(pt.psi);
    j["H"] = tensor_json(pt.Hh);
    j["Theta"] = tensor_json(pt.Theta);
    return j;
}

inline Json operator_spec_json(const OperatorSpec &s)
{
    Json j;
    j["kind"] = to_string(s.kind);
    j["algebra"] = algebra_json(s.algebra);
    if (s.target)
        j["target"] = algebra_json(*s.target);
    if (s.rep)
        j["representation"] = representation_json(*s.rep);
    if (s.action)
    {
        Json a;
        a["acting"] = algebra_json(s.action->acting);
        a["acted"] = algebra_json(s.action->acted);
        a["mu"] = family_json(s.action->mu);
        a["rho"] = family_json(s.action->rho);
        j["action"] = std::move(a);
    }
    if (s.cocycle)
    {
        Json c;
        c["h"] = tensor_json(s.cocycle->first);
        c["H"] = tensor_json(s.cocycle->second);
        j["cocycle"] = std::move(c);
    }
    return j;
}

inline Json deformation_json(const FormalDeformation &d)
{
    Json j;
    j["order"] = d.order();
    j["rows"] = d.terms.empty() ? 0 : d.base().rows();
    j["cols"] = d.terms.empty() ? 0 : d.base().cols();
    Json t = Json::array();
    for (const auto &m : d.terms)
        t.push_back(matrix_json(m));
    j["terms"] = std::move(t);
    return j;
}

inline Json cochain_pair_json(const CochainPairDoc &c)
{
    Json j;
    j["role"] = to_string(c.role);
    j["algebraDim"] = c.algebra_dim;
    j["moduleDim"] = c.module_dim;
    switch (c.role)
    {
    case PairRole::Cocycle:
        j["h"] = tensor_json(c.cocycle.first);
        j["H"] = tensor_json(c.cocycle.second);
        break;
    case PairRole::Automorphism:
        j["beta"] = matrix_json(c.on_module);
        j["alpha"] = matrix_json(c.on_algebra);
        break;
    case PairRole::Derivation:
        j["dV"] = matrix_json(c.on_module);
        j["dP"] = matrix_json(c.on_algebra);
        break;
    }
    return j;
}

inline CochainPairDoc cocycle_doc(const CocyclePair &c)
{
    CochainPairDoc d;
    d.role = PairRole::Cocycle;
    d.algebra_dim = c.first.left();
    d.module_dim = c.first.out();
    d.cocycle = c;
    return d;
}

inline CochainPairDoc aut_doc(const AutPair &p)
{
    return {PairRole::Automorphism, p.alpha.rows(), p.beta.rows(), {}, p.beta, p.alpha};
}

inline CochainPairDoc der_doc(const DerPair &p)
{
    return {PairRole::Derivation, p.dP.rows(), p.dV.rows(), {}, p.dV, p.dP};
}

inline Json payload_json(const Payload &p)
{
    struct Visitor
    {
        Json operator()(const PoissonAlgebra &x) const { return algebra_json(x); }
        Json operator()(const Representation &x) const { return representation_json(x); }
        Json operator()(const Matrix &x) const { return map_json(x); }
        Json operator()(const AbelianExtension &x) const { return extension_json(x); }
        Json operator()(const ProtoTwilled &x) const { return prototwilled_json(x); }
        Json operator()(const OperatorSpec &x) const { return operator_spec_json(x); }
        Json operator()(const FormalDeformation &x) const { return deformation_json(x); }
        Json operator()(const CochainPairDoc &x) const { return cochain_pair_json(x); }
    };
    return std::visit(Visitor{}, p);
}

inline DocKind kind_of(const Payload &p)
{
    static constexpr DocKind order[] = {DocKind::Algebra,      DocKind::Representation, DocKind::Map,
                                        DocKind::Extension,    DocKind::ProtoTwilled,   DocKind::OperatorSpec,
                                        DocKind::Deformation,  DocKind::CochainPair};
    return order[p.index()];
}

inline Json document_json(const Payload &p)
{
    Json j;
    j["schemaVersion"] = kSchemaVersion;
    j["kind"] = to_string(kind_of(p));
    j["payload"] = payload_json(p);
    return j;
}

namespace detail
{
inline bool flat_array(const Json &j)
{
    if (!j.is_array() || j.empty())
        return j.is_array();
    for (const auto &e : j)
        if (e.is_structured())
            return false;
    return true;
}

inline void write_json(std::string &out, const Json &j, std::size_t depth)
{
    const std::string pad(2 * (depth + 1), ' '), close(2 * depth, ' ');
    if (j.is_object() && !j.empty())
    {
        out += "{\n";
        std::size_t i = 0;
        for (auto it = j.begin(); it != j.end(); ++it, ++i)
        {
            out += pad + Json(it.key()).dump() + ": ";
            write_json(out, it.value(), depth + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "}";
    }
    else if (j.is_array() && !flat_array(j))
    {
        out += "[\n";
        for (std::size_t i = 0; i < j.size(); ++i)
        {
            out += pad;
            write_json(out, j[i], depth + 1);
            out += i + 1 < j.size() ? ",\n" : "\n";
        }
        out += close + "]";
    }
    else if (j.is_array())
    {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i)
            out += (i ? ", " : "") + j[i].dump();
        out += "]";
    }
    else
        out += j.dump();
}
} // namespace detail

// Canonical bytes: fixed key order, two-space indent, rows of scalars kept on
// one line, trailing newline.
inline std::string dump(const Json &j)
{
    std::string out;
    detail::write_json(out, j, 0);
    return out + "\n";
}

inline std::string serialize(const Payload &p) { return dump(document_json(p)); }
inline std::string serialize(const Document &d) { return serialize(d.payload); }

inline void write_file(const std::string &path, const std::string &bytes)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ParseError("cannot write '" + path + "'");
    out << bytes;
}

// ---- report fragments ----

inline Json violations_json(const ValidationReport &r)
{
    Json a = Json::array();
    for (const auto &v : r.violations)
    {
        Json e;
        e["identity"] = v.axiom;
        e["index"] = v.index;
        e["residual"] = vec_json(v.residual);
        a.push_back(std::move(e));
    }
    return a;
}

inline Json cohomology_json(const CohomologyReport &r)
{
    Json a = Json::array();
    for (const auto &d : r.degrees)
    {
        Json e;
        e["degree"] = d.k;
        e["cochains"] = d.cochain_dim;
        e["cocycles"] = d.cocycle_dim;
        e["coboundaries"] = d.coboundary_dim;
        e["betti"] = d.betti;
        Json reps = Json::array();
        for (const auto &v : d.representatives)
            reps.push_back(vec_json(v));
        e["representatives"] = std::move(reps);
        a.push_back(std::move(e));
    }
    return a;
}

} // namespace pcoho::io

#endif
