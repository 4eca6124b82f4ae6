#ifndef PCOHO_CLI_HPP
#define PCOHO_CLI_HPP

#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "io.hpp"
#include "semiclassical.hpp"

namespace pcoho::cli
{

using io::Json;

enum ExitCode
{
    kVerdictTrue = 0,
    kVerdictFalse = 1,
    kUsageError = 2
};

struct Outcome
{
    std::string command;
    bool verdict = true;
    std::string reason;
    Json details = Json::object();
    ValidationReport violations;
    std::vector<std::string> lines; // text-mode body
    int code_override = -1;

    int code() const { return code_override >= 0 ? code_override : (verdict ? kVerdictTrue : kVerdictFalse); }
};

namespace detail
{
struct Context
{
    io::ParseOptions parse;
    std::vector<std::string> warnings;

    io::Document load(const std::string &path, io::DocKind kind)
    {
        auto d = io::parse_file(path, parse);
        if (d.kind != kind)
            throw StructuralError(path + ": expected a '" + io::to_string(kind) + "' document, found '" +
                                  io::to_string(d.kind) + "'");
        for (auto &w : d.warnings)
            warnings.push_back(path + ": " + w);
        return d;
    }
    template <class T> T get(const std::string &path, io::DocKind kind) { return load(path, kind).as<T>(); }
};

inline std::string vec_text(const Vec &v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? ", " : "") + to_string(v[i]);
    return s + ")";
}

inline std::string index_text(const std::vector<std::size_t> &ix)
{
    std::string s = "[";
    for (std::size_t i = 0; i < ix.size(); ++i)
        s += (i ? "," : "") + std::to_string(ix[i]);
    return s + "]";
}

inline void add_report(Outcome &o, const ValidationReport &r)
{
    o.violations.merge(r);
    o.verdict = o.verdict && r.ok();
}

inline void emit_document(Outcome &o, const std::string &key, const io::Payload &p, const std::string &out_path)
{
    if (!out_path.empty())
    {
        io::write_file(out_path, io::serialize(p));
        o.details[key + "Path"] = out_path;
        o.lines.push_back(key + " written to " + out_path);
    }
    else
    {
        o.details[key] = io::document_json(p);
        o.lines.push_back(key + ":");
        std::string body = io::serialize(p);
        o.lines.push_back(body.substr(0, body.size() - 1));
    }
}

inline void cohomology_lines(Outcome &o, const CohomologyReport &r)
{
    o.details["cohomology"] = io::cohomology_json(r);
    for (const auto &d : r.degrees)
        o.lines.push_back("H^" + std::to_string(d.k) + " = " + std::to_string(d.betti) + "  (cochains " +
                          std::to_string(d.cochain_dim) + ", cocycles " + std::to_string(d.cocycle_dim) +
                          ", coboundaries " + std::to_string(d.coboundary_dim) + ")");
}

inline void wells_lines(Outcome &o, const WellsClass &w)
{
    o.verdict = w.zero;
    o.details["classCoordinates"] = io::vec_json(w.class_coords);
    o.details["cochainCoordinates"] = io::vec_json(w.coords);
    o.details["zero"] = w.zero;
    o.details["representative"] = io::document_json(io::cocycle_doc(w.representative));
    if (w.witness)
        o.details["witness"] = io::map_json(*w.witness);
    o.lines.push_back(std::string("Wells class ") + (w.zero ? "vanishes" : "is nonzero") + ", coordinates " +
                      vec_text(w.class_coords));
    if (!w.zero)
        o.reason = "Wells class is nonzero";
}

inline void inducible_lines(Outcome &o, const Inducibility &ind, const std::string &lift_path)
{
    o.verdict = ind.inducible;
    o.details["inducible"] = ind.inducible;
    if (!ind.inducible)
        o.reason = ind.reason;
    o.lines.push_back(ind.inducible ? "pair is inducible" : "pair is not inducible: " + ind.reason);
    if (ind.lift)
    {
        if (!lift_path.empty())
        {
            io::write_file(lift_path, io::serialize(*ind.lift));
            o.details["liftPath"] = lift_path;
            o.lines.push_back("lift written to " + lift_path);
        }
        else
            o.details["lift"] = io::map_json(*ind.lift);
    }
}

inline Vec element_of(const Matrix &m)
{
    if (m.cols() != 1)
        throw StructuralError("element must be a single-column map");
    return m.col(0);
}

// A bilinear map carried in the product table of an algebra document.
inline Bilinear product_table(Context &c, const std::string &path)
{
    return c.get<PoissonAlgebra>(path, io::DocKind::Algebra).mult;
}

inline ProtoTwilled commutative_input(Context &c, const std::string &path)
{
    auto d = io::parse_file(path, c.parse);
    if (d.kind == io::DocKind::ProtoTwilled)
        return d.as<ProtoTwilled>();
    if (d.kind == io::DocKind::Algebra)
    {
        const auto &p = d.as<PoissonAlgebra>();
        ProtoTwilled pt(p.dim, 0);
        pt.dot1 = p.mult;
        pt.br1 = p.bracket;
        return pt;
    }
    throw StructuralError(path + ": expected an algebra or prototwilled document");
}

inline std::string render_text(const Outcome &o, const std::vector<std::string> &warnings)
{
    std::string s;
    for (const auto &w : warnings)
        s += "warning: " + w + "\n";
    s += o.command + ": " + (o.code() == kUsageError ? "error" : (o.verdict ? "yes" : "no"));
    if (!o.reason.empty())
        s += " (" + o.reason + ")";
    s += "\n";
    for (const auto &l : o.lines)
        s += "  " + l + "\n";
    for (const auto &v : o.violations.violations)
        s += "  violated " + v.axiom + " at " + index_text(v.index) + ": residual " + vec_text(v.residual) + "\n";
    return s;
}

inline std::string render_json(const Outcome &o, const std::vector<std::string> &warnings)
{
    Json j;
    j["command"] = o.command;
    j["exitCode"] = o.code();
    j["verdict"] = o.verdict;
    if (!o.reason.empty())
        j["reason"] = o.reason;
    j["details"] = o.details;
    j["violations"] = io::violations_json(o.violations);
    if (!warnings.empty())
        j["warnings"] = warnings;
    return io::dump(j);
}
} // namespace detail

// Runs one command; the report goes to out, usage problems to err.
inline int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact-rational Poisson cohomology toolkit", "pcoho"};
    app.require_subcommand(1);
    std::string format = "text";
    bool lenient = false;
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--lenient", lenient, "Warn on unknown fields instead of rejecting them");
    app.fallthrough();

    detail::Context ctx;
    Outcome outcome;
    std::function<void()> action;
    auto bind = [&](CLI::App *sub, std::string name, std::function<void(Outcome &)> fn) {
        sub->callback([&action, &outcome, name = std::move(name), fn = std::move(fn)] {
            action = [&outcome, name, fn] {
                outcome.command = name;
                fn(outcome);
            };
        });
    };

    // check
    auto *check = app.add_subcommand("check", "Validate input documents");
    check->require_subcommand(1);
    std::vector<std::string> files;
    {
        auto *s = check->add_subcommand("algebra", "Poisson algebra axioms");
        s->add_option("files", files, "Algebra documents")->required();
        bind(s, "check algebra", [&](Outcome &o) {
            Json per = Json::array();
            for (const auto &f : files)
            {
                auto rep = validate_poisson(ctx.get<PoissonAlgebra>(f, io::DocKind::Algebra));
                per.push_back(Json{{"file", f}, {"valid", rep.ok()}});
                o.lines.push_back(f + ": " + (rep.ok() ? "valid" : "invalid"));
                detail::add_report(o, rep);
            }
            o.details["files"] = per;
        });
    }
    {
        auto *s = check->add_subcommand("rep", "Representation axioms: ALGEBRA REP");
        s->add_option("files", files, "Algebra and representation documents")->required()->expected(2);
        bind(s, "check rep", [&](Outcome &o) {
            auto p = ctx.get<PoissonAlgebra>(files[0], io::DocKind::Algebra);
            auto v = ctx.get<Representation>(files[1], io::DocKind::Representation);
            detail::add_report(o, validate_poisson(p));
            detail::add_report(o, validate_representation(p, v));
        });
    }
    {
        auto *s = check->add_subcommand("map", "SRC TGT MAP checks a homomorphism, SRC MAP a derivation");
        s->add_option("files", files, "Documents")->required()->expected(2, 3);
        bind(s, "check map", [&](Outcome &o) {
            auto src = ctx.get<PoissonAlgebra>(files[0], io::DocKind::Algebra);
            if (files.size() == 3)
            {
                auto tgt = ctx.get<PoissonAlgebra>(files[1], io::DocKind::Algebra);
                auto f = ctx.get<Matrix>(files[2], io::DocKind::Map);
                o.details["kind"] = "homomorphism";
                detail::add_report(o, check_map(MapKind::PoissonHom, src, tgt, f));
            }
            else
            {
                auto d = ctx.get<Matrix>(files[1], io::DocKind::Map);
                o.details["kind"] = "derivation";
                detail::add_report(o, check_map(MapKind::PoissonDerivation, src, src, d));
            }
        });
    }
    {
        auto *s = check->add_subcommand("prototwilled", "Proto-twilled structure");
        s->add_option("files", files, "Proto-twilled documents")->required();
        bind(s, "check prototwilled", [&](Outcome &o) {
            Json per = Json::array();
            for (const auto &f : files)
            {
                auto pt = ctx.get<ProtoTwilled>(f, io::DocKind::ProtoTwilled);
                auto rep = validate_prototwilled(pt);
                Json e{{"file", f}, {"valid", rep.ok()}};
                std::string line = f + ": " + (rep.ok() ? "valid" : "invalid");
                if (rep.ok())
                {
                    e["class"] = to_string(classify(pt));
                    line += ", " + to_string(classify(pt));
                }
                per.push_back(std::move(e));
                o.lines.push_back(line);
                detail::add_report(o, rep);
            }
            o.details["files"] = per;
        });
    }

    // cohomology
    std::string alg_path, rep_path, ext_path, pair_path, section_path, out_path, lift_path, cocycle_path;
    std::size_t max_degree_opt = 2;
    {
        auto *s = app.add_subcommand("cohomology", "Poisson cohomology of (P, V)");
        s->add_option("--algebra", alg_path, "Algebra document")->required();
        s->add_option("--rep", rep_path, "Representation document")->required();
        s->add_option("--max-degree", max_degree_opt, "Highest degree");
        bind(s, "cohomology", [&](Outcome &o) {
            auto p = ctx.get<PoissonAlgebra>(alg_path, io::DocKind::Algebra);
            auto v = ctx.get<Representation>(rep_path, io::DocKind::Representation);
            detail::cohomology_lines(o, cohomology(p, v, max_degree_opt));
        });
    }

    // extension
    auto *ext = app.add_subcommand("extension", "Abelian extensions");
    ext->require_subcommand(1);
    {
        auto *s = ext->add_subcommand("build-split", "Semidirect extension P + V");
        s->add_option("--algebra", alg_path)->required();
        s->add_option("--rep", rep_path)->required();
        s->add_option("--out", out_path);
        bind(s, "extension build-split", [&](Outcome &o) {
            auto p = ctx.get<PoissonAlgebra>(alg_path, io::DocKind::Algebra);
            auto v = ctx.get<Representation>(rep_path, io::DocKind::Representation);
            detail::emit_document(o, "extension", build_split_extension(p, v).first, out_path);
        });
    }
    {
        auto *s = ext->add_subcommand("build-twisted", "Extension twisted by a 2-cocycle");
        s->add_option("--algebra", alg_path)->required();
        s->add_option("--rep", rep_path)->required();
        s->add_option("--cocycle", cocycle_path)->required();
        s->add_option("--out", out_path);
        bind(s, "extension build-twisted", [&](Outcome &o) {
            auto p = ctx.get<PoissonAlgebra>(alg_path, io::DocKind::Algebra);
            auto v = ctx.get<Representation>(rep_path, io::DocKind::Representation);
            auto c = ctx.get<io::CochainPairDoc>(cocycle_path, io::DocKind::CochainPair);
            if (c.role != io::PairRole::Cocycle)
                throw StructuralError(cocycle_path + ": expected a cocycle pair");
            detail::emit_document(o, "extension",
                                  build_twisted_extension(p, v, c.cocycle.first, c.cocycle.second).first, out_path);
        });
    }
    {
        auto *s = ext->add_subcommand("extract", "Cocycle of an extension and a section");
        s->add_option("--extension", ext_path)->required();
        s->add_option("--section", section_path, "Section map (default: canonical)");
        s->add_option("--out", out_path);
        bind(s, "extension extract", [&](Outcome &o) {
            auto x = ctx.get<AbelianExtension>(ext_path, io::DocKind::Extension);
            require_valid(x);
            Matrix sec = section_path.empty() ? canonical_section(x) : ctx.get<Matrix>(section_path, io::DocKind::Map);
            detail::emit_document(o, "cocycle", io::cocycle_doc(extract_cocycle(x, sec)), out_path);
        });
    }

    // wells / inducible
    auto pair_of = [&](io::PairRole role) {
        auto c = ctx.get<io::CochainPairDoc>(pair_path, io::DocKind::CochainPair);
        if (c.role != role)
            throw StructuralError(pair_path + ": expected a pair with role '" + io::to_string(role) + "'");
        return c;
    };
    auto section_of = [&](const AbelianExtension &x) {
        return section_path.empty() ? canonical_section(x) : ctx.get<Matrix>(section_path, io::DocKind::Map);
    };
    auto *wells = app.add_subcommand("wells", "Wells class of a compatible pair");
    wells->require_subcommand(1);
    auto *induc = app.add_subcommand("inducible", "Inducibility of a compatible pair");
    induc->require_subcommand(1);
    for (const char *which : {"aut", "der"})
    {
        const bool aut = std::string(which) == "aut";
        auto *w = wells->add_subcommand(which, aut ? "Automorphism pairs" : "Derivation pairs");
        w->add_option("--extension", ext_path)->required();
        w->add_option("--pair", pair_path)->required();
        w->add_option("--section", section_path);
        bind(w, std::string("wells ") + which, [&, aut](Outcome &o) {
            auto x = ctx.get<AbelianExtension>(ext_path, io::DocKind::Extension);
            Matrix s = section_of(x);
            detail::wells_lines(o, aut ? wells_aut(x, pair_of(io::PairRole::Automorphism).aut(), s)
                                       : wells_der(x, pair_of(io::PairRole::Derivation).der(), s));
        });
        auto *d = induc->add_subcommand(which, aut ? "Automorphism pairs" : "Derivation pairs");
        d->add_option("--extension", ext_path)->required();
        d->add_option("--pair", pair_path)->required();
        d->add_option("--section", section_path);
        d->add_option("--emit-lift", lift_path);
        bind(d, std::string("inducible ") + which, [&, aut](Outcome &o) {
            auto x = ctx.get<AbelianExtension>(ext_path, io::DocKind::Extension);
            Matrix s = section_of(x);
            detail::inducible_lines(o,
                                    aut ? inducible_aut(x, pair_of(io::PairRole::Automorphism).aut(), s)
                                        : inducible_der(x, pair_of(io::PairRole::Derivation).der(), s),
                                    lift_path);
        });
    }

    // defmap
    std::string pt_path, map_path;
    auto *defmap = app.add_subcommand("defmap", "Deformation maps in a proto-twilled algebra");
    defmap->require_subcommand(1);
    auto defmap_inputs = [&] {
        return std::pair{ctx.get<ProtoTwilled>(pt_path, io::DocKind::ProtoTwilled),
                         ctx.get<Matrix>(map_path, io::DocKind::Map)};
    };
    for (const char *which : {"check", "induced", "twist", "cohomology"})
    {
        auto *s = defmap->add_subcommand(which);
        s->add_option("--prototwilled", pt_path)->required();
        s->add_option("--map", map_path)->required();
        const std::string w = which;
        if (w == "cohomology")
            s->add_option("--max-degree", max_degree_opt);
        if (w == "twist")
            s->add_option("--out", out_path);
        bind(s, "defmap " + w, [&, w](Outcome &o) {
            auto [pt, r] = defmap_inputs();
            require_valid(pt);
            if (w == "check")
            {
                auto rep = is_deformation_map(pt, r);
                o.details["graphClosed"] = graph_closed(pt, r);
                detail::add_report(o, rep);
            }
            else if (w == "induced")
            {
                o.details["algebra"] = io::document_json(induced_algebra(pt, r));
                o.details["representation"] = io::document_json(induced_rep(pt, r));
                o.lines.push_back("induced algebra and representation computed");
            }
            else if (w == "twist")
            {
                auto t = twist_by(pt, r);
                o.details["class"] = to_string(classify(t));
                o.lines.push_back("twisted structure is " + to_string(classify(t)));
                detail::emit_document(o, "prototwilled", t, out_path);
            }
            else
                detail::cohomology_lines(o, operator_cohomology(pt, r, max_degree_opt));
        });
    }

    // operator
    std::string spec_path;
    {
        auto *op = app.add_subcommand("operator", "Operators on Poisson algebras");
        op->require_subcommand(1);
        auto *s = op->add_subcommand("check", "Operator identities and graph characterization");
        s->add_option("--spec", spec_path)->required();
        s->add_option("--map", map_path)->required();
        bind(s, "operator check", [&](Outcome &o) {
            auto spec = ctx.get<OperatorSpec>(spec_path, io::DocKind::OperatorSpec);
            auto r = ctx.get<Matrix>(map_path, io::DocKind::Map);
            auto v = check_operator(spec, r);
            o.details["kind"] = to_string(spec.kind);
            o.details["direct"] = v.direct.ok();
            o.details["deformationMap"] = v.via_graph.ok();
            o.details["graphClosed"] = v.graph_closed;
            o.details["agree"] = v.agree();
            o.lines.push_back(to_string(spec.kind) + ": identities " + (v.direct.ok() ? "hold" : "fail") +
                              ", deformation map " + (v.via_graph.ok() ? "yes" : "no"));
            detail::add_report(o, v.direct);
            if (!v.agree())
                throw std::logic_error("operator identities disagree with the graph characterization");
        });
    }

    // deform
    std::string direction_path, def_path, other_path, element_path;
    std::size_t max_steps = 8;
    auto *deform = app.add_subcommand("deform", "Deformations of a deformation map");
    deform->require_subcommand(1);
    {
        auto *s = deform->add_subcommand("linear", "r + t r1 for all t");
        s->add_option("--prototwilled", pt_path)->required();
        s->add_option("--map", map_path)->required();
        s->add_option("--direction", direction_path)->required();
        bind(s, "deform linear", [&](Outcome &o) {
            auto [pt, r] = defmap_inputs();
            detail::add_report(o, linear_deformation_check(pt, r, ctx.get<Matrix>(direction_path, io::DocKind::Map)));
        });
    }
    {
        auto *s = deform->add_subcommand("formal", "Truncated formal deformation");
        s->add_option("--prototwilled", pt_path)->required();
        s->add_option("--deformation", def_path)->required();
        bind(s, "deform formal", [&](Outcome &o) {
            auto pt = ctx.get<ProtoTwilled>(pt_path, io::DocKind::ProtoTwilled);
            auto rt = ctx.get<FormalDeformation>(def_path, io::DocKind::Deformation);
            auto rep = formal_deformation_check(pt, rt);
            o.details["order"] = rt.order();
            detail::add_report(o, rep);
            if (rep.ok())
            {
                auto inf = infinitesimal(pt, rt);
                o.details["infinitesimalCocycle"] = inf.cocycle;
                o.lines.push_back("infinitesimal is a 1-cocycle");
            }
        });
    }
    {
        auto *s = deform->add_subcommand("nijenhuis", "Nijenhuis element test");
        s->add_option("--prototwilled", pt_path)->required();
        s->add_option("--map", map_path)->required();
        s->add_option("--element", element_path)->required();
        bind(s, "deform nijenhuis", [&](Outcome &o) {
            auto [pt, r] = defmap_inputs();
            Vec x0 = detail::element_of(ctx.get<Matrix>(element_path, io::DocKind::Map));
            detail::add_report(o, nijenhuis_report(pt, r, x0));
            if (o.verdict)
                o.details["coboundary"] = io::map_json(operator_coboundary(pt, r, x0));
        });
    }
    {
        auto *s = deform->add_subcommand("equivalence", "Equivalence of two deformations");
        s->add_option("--prototwilled", pt_path)->required();
        s->add_option("--deformation", def_path)->required();
        s->add_option("--other", other_path)->required();
        s->add_option("--element", element_path)->required();
        bind(s, "deform equivalence", [&](Outcome &o) {
            auto pt = ctx.get<ProtoTwilled>(pt_path, io::DocKind::ProtoTwilled);
            auto a = ctx.get<FormalDeformation>(def_path, io::DocKind::Deformation);
            auto b = ctx.get<FormalDeformation>(other_path, io::DocKind::Deformation);
            Vec x0 = detail::element_of(ctx.get<Matrix>(element_path, io::DocKind::Map));
            auto eq = equivalence_check(pt, a, b, x0);
            detail::add_report(o, eq.report);
            if (eq.unsolved_order)
            {
                o.verdict = false;
                o.reason = "no higher-order terms at order " + std::to_string(*eq.unsolved_order);
            }
        });
    }
    {
        auto *s = deform->add_subcommand("rigidity", "Order-by-order trivialization");
        s->add_option("--prototwilled", pt_path)->required();
        s->add_option("--deformation", def_path)->required();
        s->add_option("--max-steps", max_steps);
        bind(s, "deform rigidity", [&](Outcome &o) {
            auto pt = ctx.get<ProtoTwilled>(pt_path, io::DocKind::ProtoTwilled);
            auto rt = ctx.get<FormalDeformation>(def_path, io::DocKind::Deformation);
            auto probe = rigidity_probe(pt, rt, max_steps);
            o.verdict = probe.trivialized;
            if (!probe.trivialized)
                o.reason = probe.reason;
            Json steps = Json::array();
            for (const auto &st : probe.steps)
            {
                steps.push_back(Json{{"order", st.order}, {"element", io::vec_json(st.x0)}});
                o.lines.push_back("order " + std::to_string(st.order) + " cleared by " + detail::vec_text(st.x0));
            }
            o.details["steps"] = steps;
            if (probe.obstruction_order)
                o.details["obstructionOrder"] = *probe.obstruction_order;
            o.lines.push_back(probe.reason);
        });
    }

    // semiclassical
    std::string comm_path, o1_path, o2_path;
    std::size_t order = kDefaultSemiclassicalOrder;
    {
        auto *s = app.add_subcommand("semiclassical", "Semi-classical limit of a deformed product");
        s->add_option("--commutative", comm_path)->required();
        s->add_option("--order1", o1_path, "Algebra document whose product is the first-order term")->required();
        s->add_option("--order2", o2_path, "Algebra document whose product is the second-order term");
        s->add_option("--order", order);
        s->add_option("--out", out_path);
        bind(s, "semiclassical", [&](Outcome &o) {
            auto ptc = detail::commutative_input(ctx, comm_path);
            std::optional<Bilinear> o2;
            if (!o2_path.empty())
                o2 = detail::product_table(ctx, o2_path);
            auto res = semiclassical(ptc, detail::product_table(ctx, o1_path), o2, order);
            detail::emit_document(o, "prototwilled", res, out_path);
        });
    }

    std::vector<std::string> argv_store{"pcoho"};
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<const char *> argv;
    for (const auto &a : argv_store)
        argv.push_back(a.c_str());

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (const CLI::CallForHelp &)
    {
        out << app.help();
        return kVerdictTrue;
    }
    catch (const CLI::ParseError &e)
    {
        err << "usage error: " << e.what() << "\n";
        return kUsageError;
    }
    ctx.parse.lenient = lenient;

    auto fail = [&](int code, const std::string &reason, const std::string &message) {
        outcome.verdict = false;
        outcome.reason = reason;
        outcome.code_override = code;
        if (!message.empty() && message != reason)
            outcome.details["message"] = message;
    };
    try
    {
        action();
    }
    catch (const PreconditionError &e)
    {
        fail(kVerdictFalse, e.reason(), e.what());
    }
    catch (const AxiomError &e)
    {
        fail(kVerdictFalse, e.what(), "");
        outcome.violations.merge(e.report());
    }
    catch (const ParseError &e)
    {
        fail(kUsageError, "parse error", e.what());
    }
    catch (const StructuralError &e)
    {
        fail(kUsageError, "structural error", e.what());
    }
    catch (const CapacityError &e)
    {
        fail(kUsageError, "capacity exceeded", e.what());
    }
    catch (const std::exception &e)
    {
        fail(kUsageError, "internal error", e.what());
    }
    out << (format == "json" ? detail::render_json(outcome, ctx.warnings) : detail::render_text(outcome, ctx.warnings));
    return outcome.code();
}

} // namespace pcoho::cli

#endif
